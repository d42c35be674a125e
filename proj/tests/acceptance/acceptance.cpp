// One PASS/FAIL line per acceptance criterion.
//
// Two criteria disagree with the transcribed tables for reasons recorded in
// kKnownConflicts; their lines still print FAIL.  The process exits 0 only
// when the set of failing criteria, and the exact disagreeing values, are
// the recorded ones, so a new failure or a changed value breaks the build.

#include "coxinv/classic_models.hpp"
#include "coxinv/report.hpp"
#include "coxinv/tables.hpp"
#include "coxinv/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace coxinv;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;  // one per discrepancy, stable text

  void fail(std::string note) {
    pass = false;
    notes.push_back(std::move(note));
  }
};

// criterion -> discrepancies it is expected to report
const std::map<int, std::set<std::string>> kKnownConflicts = {
    {1, {"E6 row 2 TildeGplus: expected A1xA3, got B3"}},
    {5, {"F4 class 2': expected 2^2 3^2 involutions, got 2^3 3^2"}},
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void verify_into(Outcome& out, Family f, int n, const ExpectedTables& tables, const CompareOptions& opt = {}) {
  GroupAnalysis ga(RootSystem::build(f, n));
  VerifyResult r = verify(ga, tables, opt);
  for (const auto& m : r.mismatches)
    out.fail(r.type + " row " + m.row + " " + m.column + ": expected " + m.expected + ", got " + m.actual);
  if (r.classes_compared != ga.size()) out.fail(r.type + ": not every class compared");
}

Outcome criterion_1(const ExpectedTables& t) {
  Outcome o;
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::H, 3}, {Family::H, 4}, {Family::F, 4}, {Family::E, 6}})
    verify_into(o, f, n, t);
  return o;
}

Outcome criterion_2(const ExpectedTables& t) {
  Outcome o;
  verify_into(o, Family::E, 7, t);
  RootSystem rs = RootSystem::build(Family::E, 7);
  InvolutionCensus census(rs);
  const auto& c = t.census().at("E7").at("degree3_classes");
  for (const auto& cls : census.classes()) {
    if (cls.degree != 3) continue;
    BigInt want = parse_factored(c.at(cls.label).get<std::string>());
    if (cls.class_size != want)
      o.fail("E7 degree 3 " + cls.label + ": expected " + want.get_str() + ", got " + cls.class_size.get_str());
  }
  return o;
}

Outcome criterion_3(const ExpectedTables& t) {
  Outcome o;
  verify_into(o, Family::E, 8, t);
  return o;
}

Outcome criterion_4() {
  Outcome o;
  CompareOptions opt;
  opt.trivial_gamma_equivalent = true;
  bool split_seen = false, case_four_seen = false;
  for (Family f : {Family::A, Family::B, Family::D}) {
    int lo = f == Family::D ? 3 : 1;
    int hi = f == Family::A ? 6 : 7;  // A_{n-1} for n <= 7
    for (int n = lo; n <= hi; ++n) {
      GroupAnalysis ga(RootSystem::build(f, n));
      std::vector<ExpectedRow> rows;
      for (const auto& p : predict_table(f, n)) rows.push_back(expected_row_from_profile(p));
      VerifyResult r = verify_profiles(ga.root_system().irreducible().to_string(), ga.profiles(), rows, opt);
      for (const auto& m : r.mismatches)
        o.fail(r.type + " " + m.row + " " + m.column + ": expected " + m.expected + ", got " + m.actual);
      for (const auto& p : ga.profiles()) {
        if (f == Family::D && (p.label.ends_with("+") || p.label.ends_with("-"))) split_seen = true;
        if (p.gamma.structure.kind == GroupStructure::Kind::SymmetricTimesC2) case_four_seen = true;
      }
    }
  }
  if (!split_seen) o.fail("no split D_n class seen");
  if (!case_four_seen) o.fail("no Sym_b x C2 class seen");
  return o;
}

Outcome criterion_5(const ExpectedTables& t) {
  Outcome o;
  {
    RootSystem rs = RootSystem::build(Family::H, 4);
    InvolutionCensus census(rs);
    auto want = t.census().at("H4").at("class_sizes_by_degree").get<std::vector<long>>();
    std::vector<BigInt> got(want.size());
    for (const auto& c : census.classes()) got.at(static_cast<std::size_t>(c.degree)) += c.class_size;
    for (std::size_t d = 0; d < want.size(); ++d)
      if (got[d] != want[d])
        o.fail("H4 degree " + std::to_string(d) + ": expected " + std::to_string(want[d]) + ", got " + got[d].get_str());
  }
  {
    RootSystem rs = RootSystem::build(Family::F, 4);
    InvolutionCensus census(rs);
    const auto& c = t.census().at("F4");
    auto refl = c.at("reflection_classes").get<std::vector<long>>();
    std::vector<BigInt> got_refl;
    for (const auto& cls : census.classes())
      if (cls.degree == 1) got_refl.push_back(cls.class_size);
    if (got_refl.size() != refl.size()) o.fail("F4: wrong number of reflection classes");
    for (std::size_t i = 0; i < std::min(refl.size(), got_refl.size()); ++i)
      if (got_refl[i] != refl[i]) o.fail("F4 reflection class " + std::to_string(i) + ": got " + got_refl[i].get_str());
    for (const auto& [label, size] : c.at("degree2_classes").items()) {
      BigInt want = parse_factored(size.get<std::string>());
      bool found = false;
      for (const auto& cls : census.classes()) {
        if (cls.degree != 2 || cls.label != label) continue;
        found = true;
        if (cls.class_size != want)
          o.fail("F4 class " + label + ": expected " + factored(want) + " involutions, got " + factored(cls.class_size));
      }
      if (!found) o.fail("F4 class " + label + " missing");
    }
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::vector<std::pair<Family, int>> types = {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4},
                                               {Family::H, 3}, {Family::H, 4}, {Family::I, 5}, {Family::I, 8}};
  for (int n = 1; n <= 7; ++n) {
    types.push_back({Family::A, n});
    types.push_back({Family::B, n});
    if (n >= 3) types.push_back({Family::D, n});
  }
  for (auto [f, n] : types) {
    GroupAnalysis ga(RootSystem::build(f, n));
    TheoremReport rep = run_theorems(ga);
    for (const auto& r : rep.results) {
      std::string where = rep.type + " " + r.id + (r.class_index ? " deg " + std::to_string(r.degree) + " " + r.label : "");
      if (r.status == CheckStatus::Fail) o.fail(where + " failed: " + r.detail);
      if (r.status == CheckStatus::NotDetermined && ga[*r.class_index].profile.gamma.order <= 6)
        o.fail(where + " not determined with |Gamma_u| <= 6");
    }
  }
  // Highest-root chains.  With `isolate` set, step 3 takes the root of the
  // A1 component instead of the highest root.
  auto chain = [](Family f, int n, bool isolate) {
    RootSystem rs = RootSystem::build(f, n);
    std::vector<std::uint32_t> left = rs.positive_roots(), picked;
    auto height = [&](std::uint32_t r) {
      Scalar h = 0;
      for (const auto& x : rs.coords(r)) h += x;
      return h;
    };
    int steps = f == Family::E && n == 8 ? 4 : 1000;
    for (int step = 0; step < steps && !left.empty(); ++step) {
      std::uint32_t best = left.front();
      for (auto r : left)
        if (height(r) > height(best)) best = r;
      if (isolate && step == 3)
        for (auto r : left)
          if (std::all_of(left.begin(), left.end(), [&](auto s) { return s == r || rs.orthogonal(r, s); })) best = r;
      picked.push_back(best);
      std::vector<std::uint32_t> next;
      for (auto r : left)
        if (rs.orthogonal(r, best)) next.push_back(r);
      left = std::move(next);
    }
    std::string s;
    for (const auto& t : parabolic_chain(rs, picked)) s += (s.empty() ? "" : " -> ") + t.to_string();
    return s;
  };
  auto expect_chain = [&](const std::string& got, const std::string& want) {
    if (got != want) o.fail("chain: expected " + want + ", got " + got);
  };
  expect_chain(chain(Family::E, 6, false), "E6 -> A5 -> A3 -> A1 -> 1");
  expect_chain(chain(Family::E, 8, false), "E8 -> E7 -> D6 -> A1xD4 -> (A1)^4");
  expect_chain(chain(Family::E, 8, true), "E8 -> E7 -> D6 -> A1xD4 -> D4");
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::E, 7}, {Family::D, 6}, {Family::H, 4}}) {
    GroupAnalysis a(RootSystem::build(f, n));
    GroupAnalysis b(RootSystem::build(f, n));
    if (profiles_csv(a) != profiles_csv(b)) o.fail(a.root_system().name() + ": CSV differs between runs");
    if (profiles_json(a) != profiles_json(b)) o.fail(a.root_system().name() + ": JSON differs between runs");
  }
  return o;
}

}  // namespace

int main() {
  ExpectedTables tables = ExpectedTables::embedded();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"small exceptional tables (H3, H4, F4, E6)", [&] { return criterion_1(tables); }},
      {"E7 table and degree-3 class sizes", [&] { return criterion_2(tables); }},
      {"E8 table", [&] { return criterion_3(tables); }},
      {"classical families n <= 7 against closed forms", [] { return criterion_4(); }},
      {"involution census H4, F4", [&] { return criterion_5(tables); }},
      {"theorem suite and parabolic chains", [] { return criterion_6(); }},
      {"deterministic output", [] { return criterion_7(); }},
  };

  bool as_recorded = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i + 1);
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds_since(t0) << "s";
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first << " (" << time.str()
              << ")\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';

    auto known = kKnownConflicts.find(id);
    std::set<std::string> got(o.notes.begin(), o.notes.end());
    std::set<std::string> want = known == kKnownConflicts.end() ? std::set<std::string>{} : known->second;
    if (got != want) {
      as_recorded = false;
      std::cout << "    outcome differs from the recorded conflicts\n";
    } else if (!o.pass) {
      std::cout << "    recorded conflict with the transcribed table\n";
    }
  }
  std::cout << (as_recorded ? "all outcomes as recorded\n" : "unexpected outcome\n");
  return as_recorded ? 0 : 1;
}
