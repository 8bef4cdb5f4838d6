#pragma once

#include <optional>
#include <string>

#include "hypercop/dismantle.hpp"
#include "hypercop/hypergraph.hpp"
#include "hypercop/solver.hpp"

namespace hypercop {

enum class ParseCode {
  MalformedJson,
  BadSchema,
  DuplicateVertex,
  UnknownVertex,
  DuplicateEdge,
  EmptyEdge,
};

const char* to_string(ParseCode code);

class ParseError : public Error {
 public:
  ParseError(ParseCode code, std::string location, const std::string& detail);
  ParseCode code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  ParseCode code_;
  std::string location_;
};

struct HypergraphFile {
  std::optional<std::string> name;
  Hypergraph hypergraph;
};

/// Parses the JSON hypergraph format; vertex order is file order. Raises
/// ParseError with a distinct code and location for each failure mode.
HypergraphFile parse_hypergraph_file(const std::string& text);
Hypergraph parse_hypergraph(const std::string& text);

/// Canonical form: vertices in their fixed order, edge members in vertex
/// order, edges sorted lexicographically. parse ∘ serialise is the identity
/// on canonical files.
std::string serialize_hypergraph(const Hypergraph& h,
                                 const std::optional<std::string>& name = {});

/// JSON array of {vertex, cover} pairs; the final vertex has a null cover.
std::string certificate_to_json(const DismantlingCertificate& cert);
DismantlingCertificate certificate_from_json(const std::string& text);

std::string trace_to_json(const MatchTrace& trace, const Hypergraph& h,
                          int cops, Variant variant);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hypercop
