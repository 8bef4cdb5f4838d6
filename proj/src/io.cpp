#include "hypercop/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hypercop {

using ordered_json = nlohmann::ordered_json;

const char* to_string(ParseCode code) {
  switch (code) {
    case ParseCode::MalformedJson: return "MALFORMED_JSON";
    case ParseCode::BadSchema: return "BAD_SCHEMA";
    case ParseCode::DuplicateVertex: return "DUPLICATE_VERTEX";
    case ParseCode::UnknownVertex: return "UNKNOWN_VERTEX";
    case ParseCode::DuplicateEdge: return "DUPLICATE_EDGE";
    case ParseCode::EmptyEdge: return "EMPTY_EDGE";
  }
  return "UNKNOWN";
}

ParseError::ParseError(ParseCode code, std::string location,
                       const std::string& detail)
    : Error(std::string(to_string(code)) +
            (location.empty() ? "" : " at " + location) +
            (detail.empty() ? "" : ": " + detail)),
      code_(code),
      location_(std::move(location)) {}

HypergraphFile parse_hypergraph_file(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(ParseCode::MalformedJson, "", e.what());
  }
  if (!doc.is_object())
    throw ParseError(ParseCode::BadSchema, "$", "expected a JSON object");

  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ParseError(ParseCode::BadSchema, "name", "expected a string");
    name = doc["name"].get<std::string>();
  }

  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError(ParseCode::BadSchema, "vertices", "expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    if (!v.is_string())
      throw ParseError(ParseCode::BadSchema,
                       "vertices[" + std::to_string(i) + "]",
                       "expected a string");
    const auto label = v.get<std::string>();
    if (std::find(labels.begin(), labels.end(), label) != labels.end())
      throw ParseError(ParseCode::DuplicateVertex,
                       "vertices[" + std::to_string(i) + "]", label);
    labels.push_back(label);
  }
  if (labels.empty())
    throw ParseError(ParseCode::BadSchema, "vertices",
                     "at least one vertex is required");

  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError(ParseCode::BadSchema, "edges", "expected an array");
  std::vector<std::vector<VertexId>> edges;
  std::vector<std::vector<VertexId>> seen;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& e = doc["edges"][i];
    const std::string loc = "edges[" + std::to_string(i) + "]";
    if (!e.is_array())
      throw ParseError(ParseCode::BadSchema, loc, "expected an array");
    if (e.empty()) throw ParseError(ParseCode::EmptyEdge, loc, "");
    std::vector<VertexId> edge;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (!e[j].is_string())
        throw ParseError(ParseCode::BadSchema,
                         loc + "[" + std::to_string(j) + "]",
                         "expected a string");
      const auto label = e[j].get<std::string>();
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end())
        throw ParseError(ParseCode::UnknownVertex,
                         loc + "[" + std::to_string(j) + "]", label);
      edge.push_back(static_cast<VertexId>(it - labels.begin()));
    }
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (std::find(seen.begin(), seen.end(), edge) != seen.end())
      throw ParseError(ParseCode::DuplicateEdge, loc, "");
    seen.push_back(edge);
    edges.push_back(std::move(edge));
  }

  try {
    return HypergraphFile{name, Hypergraph(std::move(labels), std::move(edges))};
  } catch (const Error& e) {
    throw ParseError(ParseCode::BadSchema, "$", e.what());
  }
}

Hypergraph parse_hypergraph(const std::string& text) {
  return parse_hypergraph_file(text).hypergraph;
}

std::string serialize_hypergraph(const Hypergraph& h,
                                 const std::optional<std::string>& name) {
  ordered_json doc = ordered_json::object();
  if (name) doc["name"] = *name;
  doc["vertices"] = h.labels();
  auto edges = ordered_json::array();
  for (const auto& e : h.edges()) {
    auto edge = ordered_json::array();
    for (VertexId v : e) edge.push_back(h.label(v));
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string certificate_to_json(const DismantlingCertificate& cert) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < cert.ordering.size(); ++i) {
    ordered_json entry = ordered_json::object();
    entry["vertex"] = cert.ordering[i];
    if (i < cert.covers.size())
      entry["cover"] = cert.covers[i];
    else
      entry["cover"] = nullptr;
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

DismantlingCertificate certificate_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(ParseCode::MalformedJson, "", e.what());
  }
  if (!doc.is_array())
    throw ParseError(ParseCode::BadSchema, "$", "expected an array");
  DismantlingCertificate cert;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    const std::string loc = "[" + std::to_string(i) + "]";
    if (!entry.is_object() || !entry.contains("vertex") ||
        !entry["vertex"].is_string())
      throw ParseError(ParseCode::BadSchema, loc, "expected {vertex, cover}");
    cert.ordering.push_back(entry["vertex"].get<std::string>());
    if (entry.contains("cover") && !entry["cover"].is_null()) {
      if (!entry["cover"].is_string())
        throw ParseError(ParseCode::BadSchema, loc + ".cover",
                         "expected a string or null");
      cert.covers.push_back(entry["cover"].get<std::string>());
    }
  }
  return cert;
}

std::string trace_to_json(const MatchTrace& trace, const Hypergraph& h,
                          int cops, Variant variant) {
  ordered_json doc = ordered_json::object();
  doc["cops"] = cops;
  doc["variant"] = variant == Variant::Standard ? "standard" : "active";
  ordered_json initial = ordered_json::object();
  auto cop_labels = [&](const std::vector<VertexId>& ids) {
    ordered_json arr = ordered_json::array();
    for (VertexId v : ids) arr.push_back(h.label(v));
    return arr;
  };
  initial["cops"] = cop_labels(trace.initial_cops);
  initial["robber"] = h.label(trace.initial_robber);
  doc["initial"] = std::move(initial);
  ordered_json rounds = ordered_json::array();
  for (const auto& r : trace.rounds) {
    ordered_json round = ordered_json::object();
    round["cops"] = cop_labels(r.cop_to);
    if (r.robber_to)
      round["robber"] = h.label(*r.robber_to);
    else
      round["robber"] = nullptr;
    rounds.push_back(std::move(round));
  }
  doc["rounds"] = std::move(rounds);
  doc["captured"] = trace.captured;
  doc["rounds_played"] = trace.rounds_played;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file '" + path + "'");
  out << content;
}

}  // namespace hypercop
