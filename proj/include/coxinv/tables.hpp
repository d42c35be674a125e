#pragma once

#include "coxinv/structure.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxinv {

struct ExpectedRow {
  std::string row;  // row name as printed, e.g. "3'" or "0,0,2+"
  int degree = 0;
  std::vector<std::string> labels;  // engine class labels covered by the row
  std::string order;                // factored
  std::string g_minus, tilde_minus, g_plus, tilde_plus;
  std::string gamma;
};

// Transcribed tables for the exceptional and dihedral types, plus the
// class counts stated alongside them.
class ExpectedTables {
 public:
  static ExpectedTables embedded();
  static ExpectedTables from_file(const std::string& path);
  static ExpectedTables from_json(std::string_view text);

  // Expected rows for rs: the transcribed table, or the closed-form model
  // for A (rank >= 2), B and D.
  std::vector<ExpectedRow> rows_for(const RootSystem& rs) const;
  bool has_table(const std::string& key) const;
  const nlohmann::json& census() const { return doc_.at("census"); }

 private:
  nlohmann::json doc_;
};

ExpectedRow expected_row_from_profile(const CentralizerProfile& p);

struct Mismatch {
  std::string row;
  std::string column;
  std::string expected;
  std::string actual;
};

struct VerifyResult {
  std::string type;
  std::size_t rows_compared = 0;
  std::size_t classes_compared = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string to_json_string() const;
};

struct CompareOptions {
  // gamma_u = 1 and gamma_u = 0 both denote a trivial Gamma_u; the tables
  // use either.
  bool trivial_gamma_equivalent = false;
};

VerifyResult verify_profiles(const std::string& type, const std::vector<CentralizerProfile>& profiles,
                             const std::vector<ExpectedRow>& rows, const CompareOptions& options = {});
VerifyResult verify(const GroupAnalysis& ga, const ExpectedTables& tables, const CompareOptions& options = {});

}  // namespace coxinv
