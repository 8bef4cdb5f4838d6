#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercop/construct.hpp"
#include "hypercop/hypergraph.hpp"

namespace hypercop {

/// Evaluates, with exact integer arithmetic, whether the closed
/// neighbourhoods of ceil(p/2)+q-1 vertices can ever be too small to cover
/// a product of p trees and q hypergraphs of the given orders:
/// (ceil(p/2)+q-1) * (1 + sum(t_i - 1) + sum(h_j - 1)) < prod(t_i) * prod(h_j).
bool check_inequality_2(const std::vector<int>& tree_orders,
                        const std::vector<int>& hg_orders);

enum class SuiteId { All, Characterisation, Hypertree, Multipartite, Products, Prism };

SuiteId suite_from_string(const std::string& name);
std::string to_string(SuiteId id);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckRecord {
  std::string name;
  std::string claim;      // the mathematical statement being checked
  std::string criterion;  // acceptance criterion tag, "1".."10"
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Skipped;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  double budget_seconds = 0.0;
  std::vector<CheckRecord> checks;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

/// Runs the suite's checks in declaration order. Checks that would start
/// after the budget is exhausted are marked Skipped, never silently passed.
VerificationReport run_suite(SuiteId id, double budget_seconds, std::uint64_t seed);

std::string report_to_json(const VerificationReport& report);
std::string report_to_markdown(const VerificationReport& report);

/// Deterministic instance pools shared by the verification checks.
std::vector<Hypergraph> random_connected_hypergraphs(int count, int max_n,
                                                     int max_rank,
                                                     std::uint64_t seed);
std::vector<Hypergraph> random_connected_graphs(int order, int count,
                                                std::uint64_t seed);
std::vector<std::pair<Hypergraph, HostTree>> random_hypertrees(int count, int max_n,
                                                               std::uint64_t seed);
/// Non-trivial trees on at most max_n vertices, one per isomorphism class.
std::vector<Graph> tree_isomorphism_classes(int max_n);

}  // namespace hypercop
