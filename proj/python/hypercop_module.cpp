#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypercop/construct.hpp"
#include "hypercop/dismantle.hpp"
#include "hypercop/io.hpp"
#include "hypercop/solver.hpp"
#include "hypercop/strategies.hpp"
#include "hypercop/verify.hpp"

namespace py = pybind11;
using namespace hypercop;

namespace {

Variant variant_from(const std::string& name) {
  if (name == "standard") return Variant::Standard;
  if (name == "active") return Variant::ActiveRobber;
  throw Error("unknown variant '" + name + "' (use standard or active)");
}

GameState state_from(const Hypergraph& h, const std::vector<std::string>& cops,
                     const std::string& robber, const std::string& to_move) {
  GameState s;
  for (const auto& c : cops) s.cops.push_back(h.vertex(c));
  s.robber = h.vertex(robber);
  if (to_move == "cop") s.to_move = Side::Cop;
  else if (to_move == "robber") s.to_move = Side::Robber;
  else throw Error("to_move must be 'cop' or 'robber'");
  return s;
}

// certificate <-> list of (vertex, cover-or-None) pairs
py::object certificate_to_py(const std::optional<DismantlingCertificate>& cert) {
  if (!cert) return py::none();
  py::list out;
  for (std::size_t i = 0; i < cert->ordering.size(); ++i) {
    py::object cover = i < cert->covers.size()
                           ? py::cast(cert->covers[i])
                           : py::object(py::none());
    out.append(py::make_tuple(cert->ordering[i], cover));
  }
  return out;
}

DismantlingCertificate certificate_from_py(const py::sequence& pairs) {
  DismantlingCertificate cert;
  for (const auto& item : pairs) {
    auto pair = item.cast<py::sequence>();
    cert.ordering.push_back(pair[0].cast<std::string>());
    if (!pair[1].is_none()) cert.covers.push_back(pair[1].cast<std::string>());
  }
  return cert;
}

}  // namespace

PYBIND11_MODULE(_hypercop, m) {
  m.doc() = "Cops-and-robber games on hypergraphs: deletion operators, "
            "dismantlability, an exact game solver, scripted strategies and "
            "family generators.";

  py::register_exception<Error>(m, "HypergraphError");

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](std::vector<std::string> vertices,
                       std::vector<std::vector<std::string>> edges) {
             return Hypergraph::from_label_edges(std::move(vertices), edges);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("vertices", &Hypergraph::labels)
      .def_property_readonly("edges", &Hypergraph::edge_labels)
      .def("vertex_count", &Hypergraph::vertex_count)
      .def("edge_count", &Hypergraph::edge_count)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(" + std::to_string(h.vertex_count()) + " vertices, " +
               std::to_string(h.edge_count()) + " edges)";
      });

  m.def("two_section",
        [](const Hypergraph& h) { return Hypergraph(two_section(h)); });
  m.def("closed_neighborhood", [](const Hypergraph& h, const std::string& v) {
    std::vector<std::string> out;
    for (VertexId u : closed_neighborhood(h, v).closed) out.push_back(h.label(u));
    return out;
  });
  m.def("is_connected", &is_connected);
  m.def("rank_antirank", &rank_antirank);
  m.def("dot_delete", [](const Hypergraph& h, const std::string& v) {
    return dot_delete(h, v);
  });
  m.def("weak_delete", [](const Hypergraph& h, const std::string& v) {
    return weak_delete(h, v);
  });
  m.def("is_corner", [](const Hypergraph& h, const std::string& v) -> py::object {
    auto cover = is_corner(h, h.vertex(v));
    return cover ? py::cast(h.label(*cover)) : py::object(py::none());
  });
  m.def("find_corner", [](const Hypergraph& h) -> py::object {
    auto corner = find_corner(h);
    if (!corner) return py::none();
    return py::make_tuple(h.label(corner->first), h.label(corner->second));
  });

  m.def("dismantling_order", [](const Hypergraph& h) {
    return certificate_to_py(dismantling_order(h));
  });
  m.def("is_dismantlable", &is_dismantlable);
  m.def("verify_certificate", [](const Hypergraph& h, const py::sequence& cert) {
    return verify_certificate(h, certificate_from_py(cert));
  });

  py::class_<WinTable, std::shared_ptr<WinTable>>(m, "WinTable")
      .def_property_readonly("is_cop_win", &WinTable::is_cop_win)
      .def("cop_count", &WinTable::cop_count)
      .def("state_count", &WinTable::state_count)
      .def("won",
           [](const WinTable& t, const std::vector<std::string>& cops,
              const std::string& robber, const std::string& to_move) {
             return t.won(state_from(t.hypergraph(), cops, robber, to_move));
           },
           py::arg("cops"), py::arg("robber"), py::arg("to_move") = "cop")
      .def("steps_to_capture",
           [](const WinTable& t, const std::vector<std::string>& cops,
              const std::string& robber, const std::string& to_move) {
             return t.steps_to_capture(
                 state_from(t.hypergraph(), cops, robber, to_move));
           },
           py::arg("cops"), py::arg("robber"), py::arg("to_move") = "cop");

  m.def("solve",
        [](const Hypergraph& h, int k, const std::string& variant) {
          return std::make_shared<WinTable>(h, k, variant_from(variant));
        },
        py::arg("h"), py::arg("k"), py::arg("variant") = "standard");
  m.def("is_k_cop_win",
        [](const Hypergraph& h, int k, const std::string& variant) {
          return is_k_cop_win(h, k, variant_from(variant));
        },
        py::arg("h"), py::arg("k"), py::arg("variant") = "standard");
  m.def("cop_number",
        [](const Hypergraph& h, int max_k, const std::string& variant) -> py::object {
          auto c = cop_number(h, max_k > 0 ? max_k : h.vertex_count(),
                              variant_from(variant));
          return c ? py::cast(*c) : py::object(py::none());
        },
        py::arg("h"), py::arg("max_k") = 0, py::arg("variant") = "standard");

  m.def("play_json",
        [](const Hypergraph& h, int cops, const std::string& cop_id,
           const std::string& robber_id, int max_rounds, const std::string& variant,
           std::uint64_t seed, py::object host, py::object factors, py::object base,
           py::object prism_copies, py::object prism_r, py::object family,
           py::object r, py::object s, py::object parts) {
          StrategyContext ctx(h);
          ctx.cops = cops;
          ctx.variant = variant_from(variant);
          ctx.seed = seed;
          if (!host.is_none()) ctx.host = Graph(host.cast<Hypergraph>());
          if (!factors.is_none())
            ctx.factors = factors.cast<std::vector<Hypergraph>>();
          if (!base.is_none()) ctx.base = base.cast<Hypergraph>();
          if (!prism_copies.is_none()) ctx.prism_copies = prism_copies.cast<int>();
          if (!prism_r.is_none()) ctx.prism_r = prism_r.cast<int>();
          if (!parts.is_none()) {
            PartitionSpec spec;
            spec.parts = parts.cast<std::vector<int>>();
            spec.r = r.is_none() ? 2 : r.cast<int>();
            if (!s.is_none()) spec.s = s.cast<int>();
            ctx.partition = spec;
          }
          if (!family.is_none()) {
            const auto name = family.cast<std::string>();
            if (name == "K") ctx.family = MultipartiteFamily::K;
            else if (name == "L") ctx.family = MultipartiteFamily::L;
            else throw Error("unknown multipartite family '" + name + "'");
          }
          auto cop = make_strategy(cop_id, Side::Cop, ctx);
          auto robber = make_strategy(robber_id, Side::Robber, ctx);
          auto trace =
              play_match(ctx.game, cops, *cop, *robber, max_rounds, ctx.variant);
          return trace_to_json(trace, ctx.game, cops, ctx.variant);
        },
        py::arg("h"), py::arg("cops") = 1, py::arg("cop") = "optimal",
        py::arg("robber") = "optimal", py::arg("max_rounds") = 100,
        py::arg("variant") = "standard", py::arg("seed") = 0,
        py::arg("host") = py::none(), py::arg("factors") = py::none(),
        py::arg("base") = py::none(), py::arg("prism_copies") = py::none(),
        py::arg("prism_r") = py::none(), py::arg("family") = py::none(),
        py::arg("r") = py::none(), py::arg("s") = py::none(),
        py::arg("parts") = py::none());

  // generators
  m.def("path", [](int n) { return basic(BasicKind::Path, n); });
  m.def("cycle", [](int n) { return basic(BasicKind::Cycle, n); });
  m.def("complete", [](int n) { return basic(BasicKind::Complete, n); });
  m.def("hypercube", [](int n) { return basic(BasicKind::Hypercube, n); });
  m.def("complete_multipartite", [](int r, std::vector<int> parts) {
    return complete_multipartite({r, {}, std::move(parts)});
  });
  m.def("l_multipartite", [](int r, int s, std::vector<int> parts) {
    return l_multipartite({r, s, std::move(parts)});
  });
  m.def("cartesian_product",
        [](const std::vector<Hypergraph>& factors) { return cartesian_product(factors); });
  m.def("prism", [](const Hypergraph& base, int copies, int r) {
    return prism({base, copies, r});
  });
  m.def("hypertree_from_host",
        [](const Hypergraph& host, std::vector<std::vector<std::string>> edges) {
          return hypertree_from_host(HostTree(Graph(host)), edges);
        });
  m.def("random_hypertree",
        [](int n, int max_edge, int edge_count, std::uint64_t seed) {
          auto [t, host] = random_hypertree(n, max_edge, edge_count,
                                            std::mt19937_64(seed));
          return py::make_tuple(t, Hypergraph(host.tree()));
        },
        py::arg("n"), py::arg("max_edge") = 3, py::arg("edge_count") = 4,
        py::arg("seed") = 0);

  m.def("parse_hypergraph", &parse_hypergraph);
  m.def("serialize_hypergraph",
        [](const Hypergraph& h) { return serialize_hypergraph(h); });
  m.def("check_inequality_2", &check_inequality_2, py::arg("tree_orders"),
        py::arg("hg_orders"));
  m.def("run_suite_json",
        [](const std::string& suite, double budget_seconds, std::uint64_t seed) {
          return report_to_json(
              run_suite(suite_from_string(suite), budget_seconds, seed));
        },
        py::arg("suite") = "ALL", py::arg("budget_seconds") = 0.0,
        py::arg("seed") = 0);
}
