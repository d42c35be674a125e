#include "coxinv/structure.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace coxinv {

namespace {

std::vector<Perm> reflections_of(const RootSystem& rs, const std::vector<std::uint32_t>& roots) {
  std::vector<Perm> out;
  for (auto r : roots) out.push_back(rs.reflection_perm(r));
  return out;
}

// Rank of a set of at most two vectors.
int small_rank(const std::vector<Vector>& vs) {
  std::vector<const Vector*> nz;
  for (const auto& v : vs)
    if (!is_zero(v)) nz.push_back(&v);
  if (nz.size() <= 1) return static_cast<int>(nz.size());
  if (nz.size() > 2) return static_cast<int>(rank(Matrix::from_rows(vs)));
  const Vector& x = *nz[0];
  const Vector& y = *nz[1];
  std::size_t i = 0;
  while (x[i].is_zero()) ++i;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] * y[i] != y[k] * x[i]) return 2;
  return 1;
}

Vector projection(const RootSystem& rs, const Perm& u, std::uint32_t r, Side side) {
  return side == Side::Plus ? add(rs.coords(r), rs.coords(u[r])) : sub(rs.coords(r), rs.coords(u[r]));
}

// Dihedral model: V has dimension 2, so each side is 0, 1 or 2 dimensional
// and the image is determined by its order.
TildeGroup dihedral_tilde(const RootSystem& rs, const PermGroup& cent, const Perm& u, Side side) {
  TildeGroup t;
  t.side = side;
  int deg = rs.degree(u);
  t.dimension = side == Side::Minus ? deg : 2 - deg;
  Perm neg = rs.minus_one_perm();
  auto det = [&](const Perm& g) {
    bool reflection = !g.is_identity() && (g * g).is_identity() && g != neg;
    if (reflection) return -1;
    // Rotations have determinant 1; in G_u these are 1 and -1.
    return 1;
  };
  auto sign_minus = [&](const Perm& g) {
    if (deg == 0) return 1;
    if (deg == 2) return g == neg ? -1 : 1;  // unused for the line case
    std::uint32_t a = 0;
    while (u[a] != rs.negative(a)) ++a;
    return g[a] == a ? 1 : -1;
  };
  std::vector<Perm> gens;
  if (t.dimension == 2) {
    gens = cent.generators();
    t.image = PermGroup(rs.num_roots(), gens);
    t.order = t.image.order();
    t.type = rs.type();
    if (t.order != t.type.order()) throw std::logic_error("dihedral tilde group: order mismatch");
    t.reflection_generated = true;
    t.reflection_subgroup_order = t.order;
    return t;
  }
  if (t.dimension == 0) {
    t.image = PermGroup(1, {});
    t.order = 1;
    t.reflection_subgroup_order = 1;
    t.reflection_generated = true;
    return t;
  }
  // Line: the image is {+-1}, acting on {v, -v}.
  for (const auto& g : cent.generators()) {
    int s = side == Side::Minus ? sign_minus(g) : det(g) * sign_minus(g);
    gens.push_back(s == 1 ? Perm::identity(2) : Perm{1, 0});
  }
  t.image = PermGroup(2, gens);
  t.order = t.image.order();
  if (t.order == 2) {
    t.type = CoxeterType::A(1);
    t.reflections = {Perm{1, 0}};
    t.normals = {0};
  }
  t.reflection_subgroup_order = t.order;
  t.reflection_generated = true;
  return t;
}

}  // namespace

RootSubgroup root_subgroup(const RootSystem& rs, std::vector<std::uint32_t> positive_roots) {
  std::sort(positive_roots.begin(), positive_roots.end());
  positive_roots.erase(std::unique(positive_roots.begin(), positive_roots.end()), positive_roots.end());
  RootSubgroup sub;
  sub.positive = positive_roots;
  for (auto r : positive_roots) {
    sub.roots.push_back(r);
    sub.roots.push_back(rs.negative(r));
  }
  std::sort(sub.roots.begin(), sub.roots.end());
  std::unordered_set<std::uint32_t> members(sub.roots.begin(), sub.roots.end());
  for (auto a : positive_roots)
    for (auto b : positive_roots)
      if (!members.count(rs.reflection_perm(a)[b]))
        throw std::invalid_argument("root subset is not closed under its reflections");

  if (positive_roots.empty()) {
    sub.group = PermGroup(rs.num_roots(), {});
    return sub;
  }
  RecognizedDiagram diagram = recognize(root_subsystem(rs, positive_roots));
  for (auto k : diagram.nodes) sub.simple.push_back(positive_roots[k]);
  sub.type = diagram.type;
  sub.group = PermGroup(rs.num_roots(), reflections_of(rs, sub.simple));
  if (sub.group.order() != sub.type.order())
    throw std::logic_error("reflection subgroup of type " + sub.type.to_string() + " has order " +
                           sub.group.order().get_str());
  return sub;
}

CoxeterType reflection_subgroup_type(const RootSystem& rs, const std::vector<std::uint32_t>& rootset) {
  std::unordered_set<std::uint32_t> members(rootset.begin(), rootset.end());
  std::vector<std::uint32_t> positive;
  for (auto r : rootset) {
    if (!members.count(rs.negative(r))) throw std::invalid_argument("root set is not closed under negation");
    if (rs.is_positive(r)) positive.push_back(r);
  }
  return root_subgroup(rs, positive).type;
}

PlusMinus g_plus_minus(const RootSystem& rs, const Perm& u) {
  std::vector<std::uint32_t> plus, minus;
  for (auto r : rs.positive_roots()) {
    if (u[r] == r) plus.push_back(r);
    else if (u[r] == rs.negative(r)) minus.push_back(r);
  }
  return {root_subgroup(rs, plus), root_subgroup(rs, minus)};
}

std::vector<LowDegreeInvolution> low_degree_involutions(const RootSystem& rs, const Perm& u) {
  std::vector<LowDegreeInvolution> out;
  std::unordered_set<Perm, PermHash> seen;
  auto pos = rs.positive_roots();
  for (auto r : pos) {
    if (u[r] == r || u[r] == rs.negative(r)) {
      out.push_back({rs.reflection_perm(r), {r}});
      seen.insert(rs.reflection_perm(r));
    }
  }
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      if (!rs.orthogonal(pos[i], pos[j])) continue;
      Perm g = rs.reflection_perm(pos[i]) * rs.reflection_perm(pos[j]);
      if (!commute(g, u) || seen.count(g)) continue;
      seen.insert(g);
      out.push_back({std::move(g), {pos[i], pos[j]}});
    }
  }
  return out;
}

Perm TildeGroup::map(const Perm& g) const {
  if (point_root.empty()) return Perm::identity(image.degree());
  std::vector<Perm::point_type> img(point_root.size());
  for (std::size_t p = 0; p < point_root.size(); ++p)
    img[p] = static_cast<Perm::point_type>(root_to_point[g[point_root[p]]]);
  return Perm(std::move(img));
}

TildeGroup tilde_group(const RootSystem& rs, const PermGroup& cent, const Perm& u, Side side,
                       const std::vector<LowDegreeInvolution>& candidates) {
  if (rs.is_dihedral_model()) return dihedral_tilde(rs, cent, u, side);

  TildeGroup t;
  t.side = side;
  const std::size_t N = rs.num_roots();
  std::unordered_map<std::string, std::uint32_t> index;
  t.root_to_point.assign(N, -1);
  for (std::uint32_t r = 0; r < N; ++r) {
    Vector v = projection(rs, u, r, side);
    if (is_zero(v)) continue;
    auto key = to_string(v);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, static_cast<std::uint32_t>(t.points.size())).first;
      t.points.push_back(std::move(v));
      t.point_root.push_back(r);
    }
    t.root_to_point[r] = it->second;
  }
  t.dimension = t.points.empty() ? 0 : static_cast<int>(rank(Matrix::from_rows(t.points)));
  int expected_dim = side == Side::Minus ? rs.degree(u) : rs.rank() - rs.degree(u);
  if (t.dimension != expected_dim) throw std::logic_error("projected roots do not span the eigenspace");

  if (t.points.empty()) {
    t.image = PermGroup(1, {});
    t.order = 1;
    t.reflection_subgroup_order = 1;
    t.reflection_generated = true;
    return t;
  }

  const std::size_t P = t.points.size();
  std::vector<Perm> gens;
  for (const auto& g : cent.generators()) {
    Perm x = t.map(g);
    if (!x.is_identity()) gens.push_back(std::move(x));
  }
  t.image = PermGroup(P, gens);
  t.order = t.image.order();

  auto point_neg = [&](std::uint32_t p) {
    return static_cast<std::uint32_t>(t.root_to_point[rs.negative(t.point_root[p])]);
  };
  auto positive = [&](std::uint32_t p) { return lex_sign(t.points[p]) > 0; };
  auto positivize = [&](std::uint32_t p) { return positive(p) ? p : point_neg(p); };

  // Reflections of the image: projections of rank one, closed under conjugation.
  std::unordered_map<Perm, std::size_t, PermHash> found;
  auto add = [&](Perm x, std::uint32_t normal) {
    if (found.count(x)) return;
    found.emplace(x, t.reflections.size());
    t.reflections.push_back(std::move(x));
    t.normals.push_back(positivize(normal));
  };
  for (const auto& c : candidates) {
    std::vector<Vector> proj;
    for (auto r : c.roots) proj.push_back(projection(rs, u, r, side));
    if (small_rank(proj) != 1) continue;
    std::uint32_t root = is_zero(proj[0]) ? c.roots[1] : c.roots[0];
    add(t.map(c.element), static_cast<std::uint32_t>(t.root_to_point[root]));
  }
  for (std::size_t k = 0; k < t.reflections.size(); ++k) {
    for (const auto& h : t.image.generators()) {
      Perm y = conjugate(h, t.reflections[k]);
      add(std::move(y), h[t.normals[k]]);
    }
  }

  PermGroup sub(P, t.reflections);
  t.reflection_subgroup_order = sub.order();
  t.reflection_generated = t.reflection_subgroup_order == t.order;
  if (!t.reflections.empty()) {
    ReflectionSystem sys{t.reflections, t.normals, positive};
    t.type = recognize(sys).type;
  }
  if (t.type.order() != t.reflection_subgroup_order)
    throw RecognitionError("tilde group recognized as " + t.type.to_string() + " but its reflections generate " +
                           t.reflection_subgroup_order.get_str() + " elements");
  return t;
}

std::vector<Matrix> tilde_generator_matrices(const RootSystem& rs, const PermGroup& cent, const Perm& u,
                                             Side side) {
  std::size_t n = static_cast<std::size_t>(rs.rank());
  Matrix mu = rs.element_matrix(u);
  Matrix id = Matrix::identity(n);
  std::vector<Vector> basis = kernel_basis(side == Side::Plus ? mu - id : mu + id);
  std::vector<Matrix> out;
  if (basis.empty()) return out;
  Matrix b = Matrix::from_columns(basis);
  Matrix bt = b.transpose();
  Matrix left = *inverse(bt * b) * bt;  // left inverse of b
  for (const auto& g : cent.generators()) {
    Matrix mg = rs.element_matrix(g);
    Matrix r = left * mg * b;
    if (!(b * r == mg * b)) throw std::logic_error("centralizer element does not preserve the eigenspace");
    out.push_back(std::move(r));
  }
  return out;
}

PermGroup centralizer(const InvolutionCensus& census, std::size_t cls) {
  const RootSystem& rs = census.root_system();
  BigInt target = rs.group().order() / census[cls].class_size;
  return census.orbit(cls).stabilizer(rs.num_roots(), target);
}

std::string printed_gamma(const RootSystem& rs, const InvolutionClass& cls, const GroupStructure& gamma) {
  const Irreducible t = rs.irreducible();
  if (t.family == Family::A && t.n >= 2) return std::to_string(cls.degree);
  if (t.family == Family::B || t.family == Family::D) {
    const auto& s = *cls.invariants;
    std::string out = std::to_string(s.b);
    if (t.family == Family::D && s.a > 0 && s.a_prime > 0) out += ",2";
    return out;
  }
  if (gamma.kind == GroupStructure::Kind::Symmetric) return std::to_string(gamma.r);
  return gamma.label;
}

ClassAnalysis analyze_class(const InvolutionCensus& census, std::size_t cls) {
  const RootSystem& rs = census.root_system();
  const InvolutionClass& c = census[cls];
  ClassAnalysis a;
  a.index = cls;
  a.u = c.representative;
  a.centralizer = centralizer(census, cls);
  a.pm = g_plus_minus(rs, a.u);

  std::vector<std::uint32_t> g1_roots = a.pm.plus.positive;
  g1_roots.insert(g1_roots.end(), a.pm.minus.positive.begin(), a.pm.minus.positive.end());
  a.g1 = PermGroup(rs.num_roots(), reflections_of(rs, g1_roots));

  a.low_degree = low_degree_involutions(rs, a.u);
  a.tilde_minus = tilde_group(rs, a.centralizer, a.u, Side::Minus, a.low_degree);
  a.tilde_plus = tilde_group(rs, a.centralizer, a.u, Side::Plus, a.low_degree);

  CentralizerProfile& p = a.profile;
  p.degree = c.degree;
  p.label = c.label;
  p.class_size = c.class_size;
  p.order = a.centralizer.order();
  p.g_minus = a.pm.minus.type;
  p.g_plus = a.pm.plus.type;
  p.tilde_minus = a.tilde_minus.type;
  p.tilde_plus = a.tilde_plus.type;
  p.tilde_minus_reflection_generated = a.tilde_minus.reflection_generated;
  p.tilde_plus_reflection_generated = a.tilde_plus.reflection_generated;
  p.order_g1 = a.g1.order();

  a.gamma_action = std::make_shared<QuotientAction>(a.centralizer, a.g1);
  p.gamma.order = a.gamma_action->index();
  try {
    p.gamma.structure = fingerprint(a.gamma_action->image());
  } catch (const std::length_error&) {
    p.gamma.identified = false;
    p.gamma.structure.kind = GroupStructure::Kind::Other;
    p.gamma.structure.r = 0;
    p.gamma.structure.order = p.gamma.order;
    p.gamma.structure.label = "unidentified(order=" + std::to_string(p.gamma.order) + ")";
  }
  p.gamma.printed = printed_gamma(rs, c, p.gamma.structure);
  return a;
}

GroupAnalysis::GroupAnalysis(RootSystem rs)
    : rs_(std::make_unique<RootSystem>(std::move(rs))), census_(std::make_unique<InvolutionCensus>(*rs_)) {
  // Classes are independent once the shared lazy state is built, so they
  // run on a small pool; each worker writes only its own slot.
  (void)rs_->group().order();
  (void)rs_->has_minus_one();
  std::size_t n = census_->size();
  classes_.resize(n);
  std::size_t workers = std::min<std::size_t>(n, std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        classes_[i] = std::make_unique<ClassAnalysis>(analyze_class(*census_, i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<CentralizerProfile> GroupAnalysis::profiles() const {
  std::vector<CentralizerProfile> out;
  for (const auto& c : classes_) out.push_back(c->profile);
  return out;
}

}  // namespace coxinv
