// hypercop: a toolkit for the cops-and-robber game on hypergraphs.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypercop/construct.hpp"
#include "hypercop/dismantle.hpp"
#include "hypercop/io.hpp"
#include "hypercop/solver.hpp"
#include "hypercop/strategies.hpp"
#include "hypercop/verify.hpp"

namespace {

using namespace hypercop;

Hypergraph load(const std::string& path) {
  return parse_hypergraph(read_file(path));
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

Variant parse_variant(const std::string& name) {
  if (name == "standard") return Variant::Standard;
  if (name == "active") return Variant::ActiveRobber;
  throw Error("unknown variant '" + name + "' (use standard or active)");
}

struct GenOptions {
  std::string family;
  int n = 0;
  int r = 2;
  int s = 2;
  bool has_s = false;
  std::vector<int> parts;
  int max_edge = 3;
  int edge_count = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string host_out;
};

int run_gen(const GenOptions& opt) {
  std::optional<Hypergraph> result;
  if (opt.family == "path") result = basic(BasicKind::Path, opt.n);
  else if (opt.family == "cycle") result = basic(BasicKind::Cycle, opt.n);
  else if (opt.family == "complete") result = basic(BasicKind::Complete, opt.n);
  else if (opt.family == "hypercube") result = basic(BasicKind::Hypercube, opt.n);
  else if (opt.family == "kpartite") {
    result = complete_multipartite({opt.r, {}, opt.parts});
  } else if (opt.family == "lpartite") {
    if (!opt.has_s) throw Error("lpartite needs --s");
    result = l_multipartite({opt.r, opt.s, opt.parts});
  } else if (opt.family == "hypertree") {
    auto [t, host] = random_hypertree(opt.n, opt.max_edge, opt.edge_count,
                                      std::mt19937_64(opt.seed));
    if (!opt.host_out.empty())
      write_file(opt.host_out, serialize_hypergraph(host.tree()));
    result = t;
  } else {
    throw Error("unknown family '" + opt.family +
                "' (path|cycle|complete|hypercube|kpartite|lpartite|hypertree)");
  }
  emit(serialize_hypergraph(*result, opt.family), opt.out);
  return 0;
}

struct PlayOptions {
  std::string file;
  int cops = 1;
  std::string cop_id = "optimal";
  std::string robber_id = "optimal";
  int max_rounds = 100;
  std::string variant = "standard";
  std::uint64_t seed = 0;
  std::string host;
  std::vector<std::string> factors;
  std::string base;
  int prism_copies = 2;
  bool has_prism_copies = false;
  int prism_r = 3;
  bool has_prism_r = false;
  std::string family;
  int r = 2;
  int s = 2;
  bool has_s = false;
  std::vector<int> parts;
  std::string out;
};

int run_play(const PlayOptions& opt) {
  const Variant variant = parse_variant(opt.variant);
  StrategyContext ctx(load(opt.file));
  ctx.cops = opt.cops;
  ctx.variant = variant;
  ctx.seed = opt.seed;
  if (!opt.host.empty()) ctx.host = Graph(load(opt.host));
  if (!opt.factors.empty()) {
    std::vector<Hypergraph> factors;
    for (const auto& path : opt.factors) factors.push_back(load(path));
    ctx.factors = std::move(factors);
  }
  if (!opt.base.empty()) ctx.base = load(opt.base);
  if (opt.has_prism_copies) ctx.prism_copies = opt.prism_copies;
  if (opt.has_prism_r) ctx.prism_r = opt.prism_r;
  if (!opt.parts.empty()) {
    PartitionSpec spec{opt.r, {}, opt.parts};
    if (opt.has_s) spec.s = opt.s;
    ctx.partition = spec;
  }
  if (!opt.family.empty()) {
    if (opt.family == "K") ctx.family = MultipartiteFamily::K;
    else if (opt.family == "L") ctx.family = MultipartiteFamily::L;
    else throw Error("unknown multipartite family '" + opt.family + "'");
  }

  auto cop = make_strategy(opt.cop_id, Side::Cop, ctx);
  auto robber = make_strategy(opt.robber_id, Side::Robber, ctx);
  auto trace = play_match(ctx.game, opt.cops, *cop, *robber, opt.max_rounds, variant);
  emit(trace_to_json(trace, ctx.game, opt.cops, variant), opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cops-and-robber games on hypergraphs"};
  app.require_subcommand(1);

  // copnum
  std::string copnum_file, copnum_variant = "standard";
  int copnum_max_k = 0;
  auto* copnum = app.add_subcommand("copnum", "compute the cop number of a hypergraph");
  copnum->add_option("file", copnum_file)->required();
  copnum->add_option("--max-k", copnum_max_k, "largest cop count to try (default |V|)");
  copnum->add_option("--variant", copnum_variant)
      ->check(CLI::IsMember({"standard", "active"}));

  // dismantle
  std::string dismantle_file, dismantle_cert;
  auto* dismantle_cmd =
      app.add_subcommand("dismantle", "decide dismantlability, emit a certificate");
  dismantle_cmd->add_option("file", dismantle_file)->required();
  dismantle_cmd->add_option("--certificate", dismantle_cert, "certificate output path");

  // twosection
  std::string twosection_file, twosection_out;
  auto* twosection_cmd = app.add_subcommand("twosection", "emit the 2-section graph");
  twosection_cmd->add_option("file", twosection_file)->required();
  twosection_cmd->add_option("-o,--out", twosection_out);

  // gen
  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a hypergraph family member");
  gen_cmd->add_option("family", gen.family)->required();
  gen_cmd->add_option("n", gen.n, "order / dimension / vertex count");
  gen_cmd->add_option("-r,--r", gen.r, "edge size (kpartite, lpartite)");
  auto* gen_s = gen_cmd->add_option("-s,--s", gen.s, "minimum classes met (lpartite)");
  gen_cmd->add_option("--parts", gen.parts, "class sizes, nondecreasing")
      ->delimiter(',');
  gen_cmd->add_option("--max-edge", gen.max_edge, "largest sampled edge (hypertree)");
  gen_cmd->add_option("--edges", gen.edge_count, "sampled edge count (hypertree)");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("-o,--out", gen.out);
  gen_cmd->add_option("--host-out", gen.host_out, "write the host tree (hypertree)");

  // product
  std::vector<std::string> product_files;
  std::string product_out;
  auto* product_cmd = app.add_subcommand("product", "Cartesian product of hypergraphs");
  product_cmd->add_option("file", product_files)->required()->expected(-2);
  product_cmd->add_option("-o,--out", product_out);

  // prism
  std::string prism_file, prism_out;
  int prism_n = 2, prism_r = 2;
  auto* prism_cmd = app.add_subcommand("prism", "prism over a hypergraph");
  prism_cmd->add_option("file", prism_file)->required();
  prism_cmd->add_option("--n", prism_n, "number of copies")->required();
  prism_cmd->add_option("--r", prism_r, "transitional edge size")->required();
  prism_cmd->add_option("-o,--out", prism_out);

  // play
  PlayOptions play;
  auto* play_cmd = app.add_subcommand("play", "play a match between two strategies");
  play_cmd->add_option("file", play.file)->required();
  play_cmd->add_option("--cops", play.cops)->required();
  play_cmd->add_option("--cop", play.cop_id, "cop strategy id");
  play_cmd->add_option("--robber", play.robber_id, "robber strategy id");
  play_cmd->add_option("--max-rounds", play.max_rounds);
  play_cmd->add_option("--variant", play.variant)
      ->check(CLI::IsMember({"standard", "active"}));
  play_cmd->add_option("--seed", play.seed);
  play_cmd->add_option("--host", play.host, "host tree file (hypertree strategy)");
  play_cmd->add_option("--factor", play.factors, "factor file (mm, evader-product)");
  play_cmd->add_option("--base", play.base, "prism base file (prism strategies)");
  auto* play_pn = play_cmd->add_option("--prism-n", play.prism_copies);
  auto* play_pr = play_cmd->add_option("--prism-r", play.prism_r);
  play_cmd->add_option("--family", play.family, "multipartite family K or L");
  play_cmd->add_option("-r,--r", play.r, "multipartite edge size");
  auto* play_s = play_cmd->add_option("-s,--s", play.s, "multipartite threshold");
  play_cmd->add_option("--parts", play.parts)->delimiter(',');
  play_cmd->add_option("-o,--out", play.out);

  // verify
  std::string verify_suite = "ALL", verify_report;
  double verify_budget = 0.0;
  std::uint64_t verify_seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify_suite,
                         "ALL|CHARACTERISATION|HYPERTREE|MULTIPARTITE|PRODUCTS|PRISM");
  verify_cmd->add_option("--seed", verify_seed);
  verify_cmd->add_option("--budget", verify_budget, "time budget in seconds (0 = none)");
  verify_cmd->add_option("--report", verify_report, "report path (.json; .md beside it)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (copnum->parsed()) {
      auto h = load(copnum_file);
      const int max_k = copnum_max_k > 0 ? copnum_max_k : h.vertex_count();
      auto c = cop_number(h, max_k, parse_variant(copnum_variant));
      if (c)
        std::cout << *c << "\n";
      else
        std::cout << "unknown (more than " << max_k << " cops needed)\n";
      return 0;
    }
    if (dismantle_cmd->parsed()) {
      auto h = load(dismantle_file);
      auto cert = dismantling_order(h);
      if (!cert) {
        std::cout << "not dismantlable\n";
        return 0;
      }
      std::cout << "dismantlable:";
      for (const auto& v : cert->ordering) std::cout << " " << v;
      std::cout << "\n";
      if (!dismantle_cert.empty())
        write_file(dismantle_cert, certificate_to_json(*cert));
      return 0;
    }
    if (twosection_cmd->parsed()) {
      emit(serialize_hypergraph(two_section(load(twosection_file))), twosection_out);
      return 0;
    }
    if (gen_cmd->parsed()) {
      gen.has_s = gen_s->count() > 0;
      return run_gen(gen);
    }
    if (product_cmd->parsed()) {
      std::vector<Hypergraph> factors;
      for (const auto& path : product_files) factors.push_back(load(path));
      emit(serialize_hypergraph(cartesian_product(factors)), product_out);
      return 0;
    }
    if (prism_cmd->parsed()) {
      emit(serialize_hypergraph(prism({load(prism_file), prism_n, prism_r})),
           prism_out);
      return 0;
    }
    if (play_cmd->parsed()) {
      play.has_prism_copies = play_pn->count() > 0;
      play.has_prism_r = play_pr->count() > 0;
      play.has_s = play_s->count() > 0;
      return run_play(play);
    }
    if (verify_cmd->parsed()) {
      auto report = run_suite(suite_from_string(verify_suite), verify_budget,
                              verify_seed);
      for (const auto& c : report.checks) {
        const char* status = c.status == CheckStatus::Pass    ? "PASS"
                             : c.status == CheckStatus::Fail ? "FAIL"
                                                             : "SKIP";
        std::printf("%s %-42s criterion %-2s %s\n", status, c.name.c_str(),
                    c.criterion.c_str(), c.computed.c_str());
      }
      std::printf("%d passed, %d failed, %d skipped\n", report.passed,
                  report.failed, report.skipped);
      if (!verify_report.empty()) {
        write_file(verify_report, report_to_json(report));
        std::string md_path = verify_report;
        const auto dot = md_path.rfind(".json");
        if (dot != std::string::npos) md_path.resize(dot);
        write_file(md_path + ".md", report_to_markdown(report));
      }
      return report.failed == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
