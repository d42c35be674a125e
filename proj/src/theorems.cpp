#include "coxinv/theorems.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace coxinv {

namespace {

std::string join_chain(const std::vector<CoxeterType>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += " -> ";
    s += chain[i].to_string();
  }
  return s;
}

bool wanted(const TheoremOptions& o, const std::string& id) { return o.only.empty() || o.only.count(id) > 0; }

std::vector<Perm> reflections_of(const RootSystem& rs, const std::vector<std::uint32_t>& roots) {
  std::vector<Perm> out;
  for (auto r : roots) out.push_back(rs.reflection_perm(r));
  return out;
}

struct Checker {
  const GroupAnalysis& ga;
  const TheoremOptions& options;
  TheoremReport& report;

  void add(const std::string& id, const ClassAnalysis* a, CheckStatus status, std::string detail) {
    CheckResult r;
    r.id = id;
    if (a) {
      r.class_index = a->index;
      r.degree = a->profile.degree;
      r.label = a->profile.label;
    }
    r.status = status;
    r.detail = std::move(detail);
    report.results.push_back(std::move(r));
  }

  const RootSystem& rs() const { return ga.root_system(); }

  void gamma_generated_by_low_degree(const ClassAnalysis& a) {
    const auto& q = *a.gamma_action;
    if (q.index() == 1) return add("1.1", &a, CheckStatus::Pass, "Gamma_u trivial");
    std::vector<Perm> images;
    std::unordered_set<Perm, PermHash> seen;
    for (const auto& inv : a.low_degree) {
      Perm x = q.map(inv.element);
      if (!x.is_identity() && seen.insert(x).second) images.push_back(std::move(x));
    }
    PermGroup sub(q.index(), images);
    bool ok = sub.order() == q.index();
    add("1.1", &a, ok ? CheckStatus::Pass : CheckStatus::Fail,
        "images of " + std::to_string(a.low_degree.size()) + " involutions of degree <= 2 generate a subgroup of order " +
            sub.order().get_str() + " in Gamma_u of order " + std::to_string(q.index()));
  }

  void gamma_structure(const ClassAnalysis& a) {
    const auto& g = a.profile.gamma;
    if (!g.identified) return add("1.2", &a, CheckStatus::NotDetermined, g.structure.label);
    bool d = rs().irreducible().family == Family::D;
    bool ok = g.structure.kind == GroupStructure::Kind::Symmetric ||
              (d && g.structure.kind == GroupStructure::Kind::SymmetricTimesC2);
    add("1.2", &a, ok ? CheckStatus::Pass : CheckStatus::Fail, "Gamma_u = " + g.structure.label);
  }

  void order_identity(const ClassAnalysis& a) {
    BigInt prod = a.pm.plus.group.order() * a.pm.minus.group.order();
    bool ok = a.profile.order_g1 == prod;
    add("2.1b", &a, ok ? CheckStatus::Pass : CheckStatus::Fail,
        "|G_u^1| = " + a.profile.order_g1.get_str() + ", |G_u^+| |G_u^-| = " + prod.get_str());
  }

  void cubes_generate_minus(const ClassAnalysis& a) {
    std::size_t limit = options.cube_limit;
    auto cubes = cube_decompositions(rs(), a.u, limit);
    std::vector<std::uint32_t> roots;
    for (const auto& c : cubes) roots.insert(roots.end(), c.roots.begin(), c.roots.end());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    PermGroup h(rs().num_roots(), reflections_of(rs(), roots));
    BigInt target = a.pm.minus.group.order();
    std::string detail = std::to_string(cubes.size()) + " cubes, generated order " + h.order().get_str() +
                         ", |G_u^-| = " + target.get_str();
    if (h.order() == target && a.pm.minus.group.contains_all(h.generators()))
      return add("2.1c", &a, CheckStatus::Pass, detail);
    add("2.1c", &a, cubes.size() >= limit ? CheckStatus::NotDetermined : CheckStatus::Fail, detail);
  }

  void normalizer_equality(const ClassAnalysis& a) {
    const auto& rsys = rs();
    PermGroup n = normalizer_of_reflection_subgroup(rsys.group(), a.pm.minus.roots, rsys.negation(),
                                                    rsys.reflection_perms());
    bool ok = n.order() == a.profile.order && n.contains_all(a.centralizer.generators());
    add("2.3", &a, ok ? CheckStatus::Pass : CheckStatus::Fail,
        "|N(G_u^-)| = " + n.order().get_str() + ", |G_u| = " + a.profile.order.get_str());
  }

  void complement_exists(const ClassAnalysis& a) {
    ComplementSearch s = find_complement(rs(), a, options);
    std::string detail = std::to_string(s.nodes) + " search nodes";
    if (s.complement) return add("2.4", &a, CheckStatus::Pass, detail);
    add("2.4", &a, s.exhausted ? CheckStatus::Fail : CheckStatus::NotDetermined, detail);
  }

  void tilde_index_identities(const ClassAnalysis& a) {
    const BigInt& g = a.profile.order;
    BigInt m = a.pm.minus.group.order(), p = a.pm.plus.group.order();
    const BigInt& tm = a.tilde_minus.order;
    const BigInt& tp = a.tilde_plus.order;
    bool ok = g == m * tp && g == p * tm;
    add("2.5", &a, ok ? CheckStatus::Pass : CheckStatus::Fail,
        "|G_u| = " + g.get_str() + ", |G_u^-||~G_u^+| = " + BigInt(m * tp).get_str() + ", |G_u^+||~G_u^-| = " +
            BigInt(p * tm).get_str());
  }

  void index_sandwich(const ClassAnalysis& a) {
    BigInt gamma = static_cast<unsigned long>(a.profile.gamma.order);
    BigInt m = a.pm.minus.group.order(), p = a.pm.plus.group.order();
    const BigInt& g = a.profile.order;
    bool ok = g == p * m * gamma && a.tilde_plus.order * a.tilde_minus.order == g * gamma &&
              a.tilde_minus.order == m * gamma && a.tilde_plus.order == p * gamma;
    add("2.6", &a, ok ? CheckStatus::Pass : CheckStatus::Fail,
        "G_u^+ x G_u^- < G_u < ~G_u^+ x ~G_u^- with indices " + BigInt(g / (p * m)).get_str() + " and " +
            BigInt(a.tilde_plus.order * a.tilde_minus.order / g).get_str() + ", |Gamma_u| = " + gamma.get_str());
  }

  // Conjugation data for the image of G_u^- inside ~G_u^-.
  struct MinusImage {
    PermGroup tilde;
    PermGroup minus;
  };
  MinusImage minus_image(const ClassAnalysis& a) {
    const TildeGroup& t = a.tilde_minus;
    std::vector<Perm> gens;
    for (auto r : a.pm.minus.simple) gens.push_back(t.map(rs().reflection_perm(r)));
    return {t.image, PermGroup(t.image.degree(), gens)};
  }

  bool gated(const ClassAnalysis& a, const char* id) {
    if (rs().is_dihedral_model()) {
      add(id, &a, CheckStatus::Skipped, "dihedral model has no coordinates");
      return true;
    }
    if (a.pm.minus.group.order() > options.gate_minus_order) {
      add(id, &a, CheckStatus::Skipped, "|G_u^-| = " + a.pm.minus.group.order().get_str() + " above the gate");
      return true;
    }
    if (a.profile.degree == 0) {
      add(id, &a, CheckStatus::Pass, "V_u^- = 0");
      return true;
    }
    return false;
  }

  // Distinct cosets of G_u^- in ~G_u^- induce automorphisms of G_u^- that
  // are not inner.
  void outer_action_injective(const ClassAnalysis& a) {
    if (gated(a, "2.7")) return;
    MinusImage mi = minus_image(a);
    QuotientAction q(mi.tilde, mi.minus);
    std::vector<std::vector<Perm>> inner_actions;
    mi.minus.chain().for_each_element([&](const Perm& z) {
      std::vector<Perm> act;
      for (const auto& s : mi.minus.generators()) act.push_back(conjugate(z, s));
      inner_actions.push_back(std::move(act));
    });
    std::sort(inner_actions.begin(), inner_actions.end());
    std::size_t bad = 0;
    for (std::size_t k = 1; k < q.coset_representatives().size(); ++k) {
      const Perm& g = q.coset_representatives()[k];
      std::vector<Perm> act;
      for (const auto& s : mi.minus.generators()) act.push_back(conjugate(g, s));
      if (std::binary_search(inner_actions.begin(), inner_actions.end(), act)) ++bad;
    }
    add("2.7", &a, bad == 0 ? CheckStatus::Pass : CheckStatus::Fail,
        std::to_string(q.index() - 1) + " nontrivial cosets, " + std::to_string(bad) + " act by inner automorphisms");
  }

  // Elements of ~G_u^- centralizing G_u^- lie in G_u^-.
  void centralizer_of_minus(const ClassAnalysis& a) {
    if (gated(a, "2.8")) return;
    MinusImage mi = minus_image(a);
    std::size_t central = 0, outside = 0;
    mi.tilde.chain().for_each_element([&](const Perm& x) {
      for (const auto& s : mi.minus.generators())
        if (!commute(x, s)) return;
      ++central;
      if (!mi.minus.contains(x)) ++outside;
    });
    add("2.8", &a, outside == 0 ? CheckStatus::Pass : CheckStatus::Fail,
        std::to_string(central) + " centralizing elements, " + std::to_string(outside) + " outside G_u^-");
  }

  void tilde_reflection_generated(const ClassAnalysis& a) {
    bool ok = a.tilde_minus.reflection_generated && a.tilde_plus.reflection_generated;
    add("2.9", &a, ok ? CheckStatus::Pass : CheckStatus::Fail,
        "~G_u^- : " + a.tilde_minus.reflection_subgroup_order.get_str() + "/" + a.tilde_minus.order.get_str() +
            ", ~G_u^+ : " + a.tilde_plus.reflection_subgroup_order.get_str() + "/" + a.tilde_plus.order.get_str());
  }

  void parabolic_chain_ends_at_plus(const ClassAnalysis& a) {
    const auto& cube = ga.census()[a.index].cube.roots;
    auto chain = parabolic_chain(rs(), cube);
    // Compare the final root set with G_u^+ directly.
    std::vector<std::uint32_t> roots;
    for (auto r : rs().positive_roots()) {
      bool orth = std::all_of(cube.begin(), cube.end(), [&](auto c) { return rs().orthogonal(c, r); });
      if (orth) roots.push_back(r);
    }
    bool ok = roots == a.pm.plus.positive && chain.back() == a.pm.plus.type;
    add("3.2", &a, ok ? CheckStatus::Pass : CheckStatus::Fail, join_chain(chain));
  }

  void highest_root_parabolic() {
    const RootSystem& r = rs();
    if (!r.crystallographic()) return add("3.3", nullptr, CheckStatus::Skipped, "not crystallographic");
    std::uint32_t theta = *r.highest_root();
    std::vector<std::uint32_t> y = r.extended_diagram_Y();
    std::vector<std::uint32_t> fix, span;
    const auto& s0 = r.reflection_perm(theta);
    for (auto a : r.positive_roots()) {
      if (s0[a] == a) fix.push_back(a);
      bool inside = true;
      const Vector& c = r.coords(a);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero() && std::find(y.begin(), y.end(), r.simple_roots()[i]) == y.end()) inside = false;
      }
      if (inside) span.push_back(a);
    }
    CoxeterType t = root_subgroup(r, span).type;
    add("3.3", nullptr, fix == span ? CheckStatus::Pass : CheckStatus::Fail,
        "G_{s0}^+ has " + std::to_string(fix.size()) + " positive roots, G_Y (" + t.to_string() + ") has " +
            std::to_string(span.size()));
  }
};

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotDetermined: return "not_determined";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t TheoremReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.status == s; }));
}

std::string TheoremReport::to_json_string() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["type"] = type;
  j["summary"] = {{"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"not_determined", count(CheckStatus::NotDetermined)},
                  {"skipped", count(CheckStatus::Skipped)}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    if (r.class_index) {
      e["degree"] = r.degree;
      e["label"] = r.label;
    }
    e["status"] = to_string(r.status);
    e["detail"] = r.detail;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2);
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"1.1", "1.2", "2.1b", "2.1c", "2.3", "2.4", "2.5",
                                               "2.6", "2.7", "2.8", "2.9", "3.2", "3.3"};
  return ids;
}

std::vector<CoxeterType> parabolic_chain(const RootSystem& rs, const std::vector<std::uint32_t>& roots) {
  std::vector<std::uint32_t> current = rs.positive_roots();
  std::vector<CoxeterType> chain = {root_subgroup(rs, current).type};
  for (auto a : roots) {
    std::vector<std::uint32_t> next;
    for (auto r : current)
      if (rs.orthogonal(a, r)) next.push_back(r);
    current = std::move(next);
    chain.push_back(root_subgroup(rs, current).type);
  }
  return chain;
}

ComplementSearch find_complement(const RootSystem& rs, const ClassAnalysis& a, const TheoremOptions& options) {
  ComplementSearch out;
  const QuotientAction& q = *a.gamma_action;
  const std::size_t N = rs.num_roots();
  if (q.index() == 1) {
    out.complement = std::vector<Perm>{};
    out.exhausted = true;
    return out;
  }

  // Involutory generators of Gamma_u drawn from the images of low-degree
  // involutions.
  std::vector<Perm> targets;
  {
    std::vector<Perm> chosen;
    for (const auto& inv : a.low_degree) {
      Perm x = q.map(inv.element);
      if (x.is_identity()) continue;
      if (!chosen.empty() && PermGroup(q.index(), chosen).contains(x)) continue;
      chosen.push_back(x);
      targets.push_back(x);
      if (PermGroup(q.index(), chosen).order() == q.index()) break;
    }
    if (targets.empty() || PermGroup(q.index(), targets).order() != q.index()) return out;
  }

  // Candidate lifts: involutions of G_u over each target, low-degree ones
  // first, then every involution of G_u when the group is small enough.
  std::vector<std::vector<Perm>> lifts(targets.size());
  auto offer = [&](const Perm& x) {
    Perm img = q.map(x);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (img == targets[i] && std::find(lifts[i].begin(), lifts[i].end(), x) == lifts[i].end())
        lifts[i].push_back(x);
    }
  };
  for (const auto& inv : a.low_degree) offer(inv.element);

  auto search = [&]() -> bool {
    std::vector<Perm> picked;
    std::function<bool(std::size_t)> rec = [&](std::size_t level) -> bool {
      if (level == targets.size()) return true;
      for (const auto& x : lifts[level]) {
        if (++out.nodes > options.complement_budget) return false;
        picked.push_back(x);
        std::vector<Perm> images(targets.begin(), targets.begin() + static_cast<long>(level) + 1);
        if (PermGroup(N, picked).order() == PermGroup(q.index(), images).order() && rec(level + 1)) return true;
        picked.pop_back();
      }
      return false;
    };
    if (!rec(0)) return false;
    out.complement = picked;
    return true;
  };

  // A complement maps isomorphically onto Gamma_u, so the lift of an
  // involution is an involution: scanning all of them is complete.
  bool found = search();
  if (!found && out.nodes <= options.complement_budget && a.profile.order <= options.complement_enumeration) {
    a.centralizer.chain().for_each_element([&](const Perm& x) {
      if (!x.is_identity() && (x * x).is_identity()) offer(x);
    });
    found = search();
    if (!found && out.nodes <= options.complement_budget) out.exhausted = true;
  }
  if (!found) return out;

  // Independent confirmation: X meets G_u^1 trivially and has index |G_u^1|.
  PermGroup x(N, *out.complement);
  std::size_t meets = 0;
  x.chain().for_each_element([&](const Perm& e) {
    if (!e.is_identity() && a.g1.contains(e)) ++meets;
  });
  if (meets != 0 || x.order() * a.g1.order() != a.profile.order) {
    out.complement.reset();
    out.exhausted = true;
  }
  return out;
}

TheoremReport run_theorems(const GroupAnalysis& ga, const TheoremOptions& options) {
  TheoremReport report;
  report.type = ga.root_system().name();
  Checker c{ga, options, report};
  for (std::size_t i = 0; i < ga.size(); ++i) {
    const ClassAnalysis& a = ga[i];
    if (wanted(options, "1.1")) c.gamma_generated_by_low_degree(a);
    if (wanted(options, "1.2")) c.gamma_structure(a);
    if (wanted(options, "2.1b")) c.order_identity(a);
    if (wanted(options, "2.1c")) c.cubes_generate_minus(a);
    if (wanted(options, "2.3")) c.normalizer_equality(a);
    if (wanted(options, "2.4")) c.complement_exists(a);
    if (wanted(options, "2.5")) c.tilde_index_identities(a);
    if (wanted(options, "2.6")) c.index_sandwich(a);
    if (wanted(options, "2.7")) c.outer_action_injective(a);
    if (wanted(options, "2.8")) c.centralizer_of_minus(a);
    if (wanted(options, "2.9")) c.tilde_reflection_generated(a);
    if (wanted(options, "3.2")) c.parabolic_chain_ends_at_plus(a);
  }
  if (wanted(options, "3.3")) c.highest_root_parabolic();
  return report;
}

}  // namespace coxinv
