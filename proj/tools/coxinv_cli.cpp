// coxinv: centralizer tables of involutions in finite Coxeter groups.
//
// Exit codes: 0 verified, 1 mismatch against the expected tables,
// 2 theorem violation, 3 usage or capability error.

#include "coxinv/report.hpp"
#include "coxinv/structure.hpp"
#include "coxinv/tables.hpp"
#include "coxinv/theorems.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace coxinv;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kViolation = 2;
constexpr int kUsage = 3;

struct Options {
  std::string type;
  std::optional<int> rank;
  std::optional<int> m;
  bool large = false;
  bool skip_large = false;
  bool all = false;
  std::string out;
  std::string format = "csv";
  std::string fixtures;
  std::vector<std::string> checks;
};

struct Target {
  Family family;
  int n;
};

Target resolve(const Options& o) {
  TypeRequest req = parse_type_name(o.type);
  if (req.n) {
    if (o.rank || o.m) throw CapabilityError("type " + o.type + " takes no --rank/--m");
    return {req.family, *req.n};
  }
  if (req.family == Family::I) {
    if (!o.m) throw CapabilityError("type I2 needs --m");
    if (o.rank) throw CapabilityError("type I2 takes --m, not --rank");
    return {Family::I, *o.m};
  }
  if (o.m) throw CapabilityError("--m applies to I2 only");
  if (!o.rank) throw CapabilityError("type " + o.type + " needs --rank");
  return {req.family, *o.rank};
}

void require_size(const Target& t, const Options& o) {
  if (t.family == Family::E && t.n == 8 && !o.large)
    throw CapabilityError("E8 is gated; pass --large to run it");
}

std::vector<Target> all_targets(const Options& o) {
  std::vector<Target> ts = {{Family::H, 3}, {Family::H, 4}, {Family::F, 4}, {Family::E, 6}, {Family::E, 7}};
  if (o.large) ts.push_back({Family::E, 8});
  for (int m : {5, 6, 8}) ts.push_back({Family::I, m});
  for (int n = 1; n <= 6; ++n) ts.push_back({Family::A, n});
  for (int n = 1; n <= 7; ++n) ts.push_back({Family::B, n});
  for (int n = 3; n <= 7; ++n) ts.push_back({Family::D, n});
  return ts;
}

std::vector<Target> targets(const Options& o) {
  if (o.all) {
    if (!o.type.empty()) throw CapabilityError("--all and --type are exclusive");
    return all_targets(o);
  }
  if (o.type.empty()) throw CapabilityError("--type or --all is required");
  Target t = resolve(o);
  require_size(t, o);
  return {t};
}

void emit(const Options& o, const std::string& stem, const std::string& csv, const std::string& json) {
  if (o.out.empty()) {
    std::cout << (o.format == "json" ? json : csv);
    if (o.format == "json") std::cout << '\n';
    return;
  }
  fs::create_directories(o.out);
  std::ofstream(fs::path(o.out) / (stem + ".csv")) << csv;
  std::ofstream(fs::path(o.out) / (stem + ".json")) << json << '\n';
  std::cerr << "wrote " << (fs::path(o.out) / stem).string() << ".{csv,json}\n";
}

int cmd_analyze(const Options& o) {
  for (const Target& t : targets(o)) {
    GroupAnalysis ga(RootSystem::build(t.family, t.n));
    emit(o, ga.root_system().irreducible().to_string(), profiles_csv(ga), profiles_json(ga));
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  ExpectedTables tables = o.fixtures.empty() ? ExpectedTables::embedded() : ExpectedTables::from_file(o.fixtures);
  nlohmann::json all = nlohmann::json::array();
  bool ok = true;
  for (const Target& t : targets(o)) {
    GroupAnalysis ga(RootSystem::build(t.family, t.n));
    VerifyResult r = verify(ga, tables);
    ok = ok && r.ok();
    if (o.format == "json") {
      all.push_back(nlohmann::json::parse(r.to_json_string()));
      continue;
    }
    std::cout << r.type << ": " << r.rows_compared << " rows compared, " << r.classes_compared << " classes, "
              << (r.ok() ? "ok" : std::to_string(r.mismatches.size()) + " mismatch(es)") << '\n';
    for (const auto& m : r.mismatches)
      std::cout << "  row " << m.row << ", column " << m.column << ": expected " << m.expected << ", got "
                << m.actual << '\n';
  }
  if (o.format == "json") std::cout << nlohmann::json{{"schema_version", 1}, {"ok", ok}, {"results", all}}.dump(2) << '\n';
  return ok ? kOk : kMismatch;
}

int cmd_theorems(const Options& o) {
  TheoremOptions topt;
  bool gamma_listing = false;
  for (const auto& c : o.checks) {
    if (c == "gamma") {
      gamma_listing = true;
      topt.only.insert("1.2");
      continue;
    }
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), c) == ids.end()) throw CapabilityError("unknown check '" + c + "'");
    topt.only.insert(c);
  }
  bool ok = true;
  for (const Target& t : targets(o)) {
    GroupAnalysis ga(RootSystem::build(t.family, t.n));
    TheoremReport rep = run_theorems(ga, topt);
    ok = ok && rep.ok();
    if (gamma_listing) {
      // Gamma_u per class, with the elementary abelian (2,2) classes flagged.
      nlohmann::json j;
      j["schema_version"] = 1;
      j["type"] = rep.type;
      j["classes"] = nlohmann::json::array();
      int klein = 0;
      for (const auto& p : ga.profiles()) {
        bool is_klein = p.gamma.order == 4 && p.gamma.structure.kind == GroupStructure::Kind::SymmetricTimesC2 &&
                        p.gamma.structure.r == 2;
        klein += is_klein;
        j["classes"].push_back({{"degree", p.degree},
                                {"label", p.label},
                                {"gamma", p.gamma.printed},
                                {"gamma_structure", p.gamma.structure.label},
                                {"gamma_order", p.gamma.order},
                                {"elementary_abelian_2_2", is_klein}});
      }
      j["elementary_abelian_2_2_classes"] = klein;
      j["checks"] = nlohmann::json::parse(rep.to_json_string())["checks"];
      std::cout << j.dump(2) << '\n';
      continue;
    }
    std::cout << rep.to_json_string() << '\n';
  }
  return ok ? kOk : kViolation;
}

void add_common(CLI::App* sub, Options& o, bool checks) {
  sub->add_option("--type", o.type, "A, B, D, E6, E7, E8, F4, H3, H4 or I2");
  sub->add_option("--rank", o.rank, "rank for A, B, D");
  sub->add_option("--m", o.m, "m for I2(m)");
  auto* large = sub->add_flag("--large", o.large, "allow E8");
  sub->add_flag("--skip-large", o.skip_large, "leave out E8 (default)")->excludes(large);
  sub->add_flag("--all", o.all, "every supported table");
  sub->add_option("--out", o.out, "write <type>.csv and <type>.json into this directory");
  sub->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--fixtures", o.fixtures, "expected-table JSON replacing the embedded copy");
  if (checks) sub->add_option("--check", o.checks, "run only these checks (ids, or 'gamma')");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizers of involutions in finite Coxeter groups"};
  app.require_subcommand(1);
  Options o;
  auto* analyze = app.add_subcommand("analyze", "class inventory and centralizer table");
  auto* verify_cmd = app.add_subcommand("verify", "compare against the expected tables");
  auto* theorems = app.add_subcommand("theorems", "run the structural checks");
  add_common(analyze, o, false);
  add_common(verify_cmd, o, false);
  add_common(theorems, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    return cmd_theorems(o);
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
}
