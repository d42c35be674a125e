#pragma once

#include "coxinv/structure.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coxinv {

enum class CheckStatus { Pass, Fail, NotDetermined, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::optional<std::size_t> class_index;  // empty for group-level checks
  int degree = 0;
  std::string label;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct TheoremOptions {
  std::set<std::string> only;                  // empty: every check
  std::size_t gate_minus_order = 10000;        // 2.7 and 2.8
  std::size_t complement_budget = 1000000;     // 2.4 backtracking nodes
  std::size_t complement_enumeration = 1000000;  // largest G_u scanned for lifts
  std::size_t cube_limit = 100000;             // 2.1c
};

struct TheoremReport {
  std::string type;
  std::vector<CheckResult> results;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
  std::string to_json_string() const;
};

const std::vector<std::string>& check_ids();

// Types of the iterated parabolic chain G(0) = G, G(i) = G(i-1)^+ of the
// reflection in the i-th root.
std::vector<CoxeterType> parabolic_chain(const RootSystem& rs, const std::vector<std::uint32_t>& roots);

// A complement X_u of G_u^1 in G_u, as generators, or nothing when the
// bounded search gives up.
struct ComplementSearch {
  std::optional<std::vector<Perm>> complement;
  std::size_t nodes = 0;
  bool exhausted = false;
};
ComplementSearch find_complement(const RootSystem& rs, const ClassAnalysis& a, const TheoremOptions& options);

TheoremReport run_theorems(const GroupAnalysis& ga, const TheoremOptions& options = {});

}  // namespace coxinv
