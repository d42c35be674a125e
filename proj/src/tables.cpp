#include "coxinv/tables.hpp"

#include "coxinv/classic_models.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace coxinv {

extern const char kEmbeddedTables[];

namespace {

std::string substitute_m(std::string s, int m) {
  if (s == "2m") return std::to_string(2 * m);
  auto pos = s.find("I2(m)");
  if (pos != std::string::npos) s.replace(pos, 5, "I2(" + std::to_string(m) + ")");
  return s;
}

ExpectedRow row_from_json(const nlohmann::json& j) {
  ExpectedRow r;
  r.row = j.at("row").get<std::string>();
  r.degree = j.at("degree").get<int>();
  r.labels = j.at("labels").get<std::vector<std::string>>();
  r.order = j.at("order").get<std::string>();
  r.g_minus = j.at("Gminus").get<std::string>();
  r.tilde_minus = j.at("TildeGminus").get<std::string>();
  r.g_plus = j.at("Gplus").get<std::string>();
  r.tilde_plus = j.at("TildeGplus").get<std::string>();
  r.gamma = j.at("gamma").get<std::string>();
  return r;
}

std::string table_key(const RootSystem& rs) {
  const Irreducible& irr = rs.irreducible();
  switch (irr.family) {
    case Family::A:
      return irr.n == 1 ? "A1" : "";
    case Family::I:
      return irr.n % 2 ? "I2odd" : "I2even";
    case Family::E:
    case Family::F:
    case Family::H:
      return std::string(1, family_letter(irr.family)) + std::to_string(irr.n);
    default:
      return "";
  }
}

bool same_type(const std::string& expected, const CoxeterType& actual) {
  try {
    return CoxeterType::parse(expected) == actual;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool same_order(const std::string& expected, const BigInt& actual) {
  try {
    return parse_factored(expected) == actual;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool trivial_gamma(const std::string& g) { return g == "0" || g == "1"; }

}  // namespace

ExpectedTables ExpectedTables::embedded() { return from_json(kEmbeddedTables); }

ExpectedTables ExpectedTables::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

ExpectedTables ExpectedTables::from_json(std::string_view text) {
  ExpectedTables t;
  t.doc_ = nlohmann::json::parse(text);
  if (t.doc_.value("schema_version", 0) != 1) throw std::runtime_error("expected tables: unsupported schema_version");
  if (!t.doc_.contains("tables")) throw std::runtime_error("expected tables: missing 'tables'");
  return t;
}

bool ExpectedTables::has_table(const std::string& key) const { return doc_.at("tables").contains(key); }

ExpectedRow expected_row_from_profile(const CentralizerProfile& p) {
  ExpectedRow r;
  r.row = p.label.empty() ? std::to_string(p.degree) : p.label;
  r.degree = p.degree;
  r.labels = {p.label};
  r.order = factored(p.order);
  r.g_minus = p.g_minus.to_string();
  r.tilde_minus = p.tilde_minus.to_string();
  r.g_plus = p.g_plus.to_string();
  r.tilde_plus = p.tilde_plus.to_string();
  r.gamma = p.gamma.printed;
  return r;
}

std::vector<ExpectedRow> ExpectedTables::rows_for(const RootSystem& rs) const {
  const Irreducible& irr = rs.irreducible();
  std::string key = table_key(rs);
  std::vector<ExpectedRow> rows;
  if (key.empty()) {
    for (const auto& p : predict_table(irr.family, irr.n)) rows.push_back(expected_row_from_profile(p));
    return rows;
  }
  if (!has_table(key)) throw std::runtime_error("no expected table for " + key);
  for (const auto& j : doc_.at("tables").at(key)) {
    ExpectedRow r = row_from_json(j);
    if (irr.family == Family::I) {
      for (auto* s : {&r.order, &r.g_minus, &r.tilde_minus, &r.g_plus, &r.tilde_plus})
        *s = substitute_m(*s, irr.n);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

VerifyResult verify_profiles(const std::string& type, const std::vector<CentralizerProfile>& profiles,
                             const std::vector<ExpectedRow>& rows, const CompareOptions& options) {
  VerifyResult res;
  res.type = type;
  res.rows_compared = rows.size();
  std::vector<int> used(rows.size(), 0);

  for (const auto& p : profiles) {
    std::string where = std::to_string(p.degree) + (p.label.empty() ? "" : " " + p.label);
    std::size_t hit = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].degree != p.degree) continue;
      for (const auto& l : rows[i].labels) {
        if (l == p.label) {
          if (hit != rows.size())
            res.mismatches.push_back({rows[i].row, "row", "one row per class", "class " + where + " matched twice"});
          hit = i;
        }
      }
    }
    if (hit == rows.size()) {
      res.mismatches.push_back({where, "row", "a table row", "class has no row"});
      continue;
    }
    ++used[hit];
    ++res.classes_compared;
    const ExpectedRow& r = rows[hit];
    std::string name = r.row;
    if (r.labels.size() > 1) name += " [" + p.label + "]";
    if (!same_order(r.order, p.order)) res.mismatches.push_back({name, "order", r.order, factored(p.order)});
    auto type_col = [&](const char* col, const std::string& want, const CoxeterType& got) {
      if (!same_type(want, got)) res.mismatches.push_back({name, col, want, got.to_string()});
    };
    type_col("Gminus", r.g_minus, p.g_minus);
    type_col("TildeGminus", r.tilde_minus, p.tilde_minus);
    type_col("Gplus", r.g_plus, p.g_plus);
    type_col("TildeGplus", r.tilde_plus, p.tilde_plus);
    bool gamma_ok = r.gamma == p.gamma.printed ||
                    (options.trivial_gamma_equivalent && trivial_gamma(r.gamma) && trivial_gamma(p.gamma.printed));
    if (!gamma_ok) res.mismatches.push_back({name, "gamma", r.gamma, p.gamma.printed});
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!used[i]) res.mismatches.push_back({rows[i].row, "row", "a matching class", "no class"});
  return res;
}

VerifyResult verify(const GroupAnalysis& ga, const ExpectedTables& tables, const CompareOptions& options) {
  const RootSystem& rs = ga.root_system();
  return verify_profiles(rs.irreducible().to_string(), ga.profiles(), tables.rows_for(rs), options);
}

std::string VerifyResult::to_json_string() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["type"] = type;
  j["rows_compared"] = rows_compared;
  j["classes_compared"] = classes_compared;
  j["ok"] = ok();
  j["mismatches"] = nlohmann::json::array();
  for (const auto& m : mismatches)
    j["mismatches"].push_back({{"row", m.row}, {"column", m.column}, {"expected", m.expected}, {"actual", m.actual}});
  return j.dump(2);
}

}  // namespace coxinv
