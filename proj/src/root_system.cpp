#include "coxinv/root_system.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace coxinv {

namespace {

Vector unit(std::size_t dim, std::size_t i, const Scalar& c = 1) {
  Vector v(dim);
  v[i] = c;
  return v;
}

Scalar half() { return Scalar(mpq_class(1, 2)); }

std::vector<Vector> simple_A(int n) {
  std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<Vector> s;
  for (std::size_t i = 0; i + 1 < dim; ++i) s.push_back(sub(unit(dim, i), unit(dim, i + 1)));
  return s;
}

std::vector<Vector> simple_B(int n) {
  std::size_t dim = static_cast<std::size_t>(n);
  std::vector<Vector> s;
  for (std::size_t i = 0; i + 1 < dim; ++i) s.push_back(sub(unit(dim, i), unit(dim, i + 1)));
  s.push_back(unit(dim, dim - 1));
  return s;
}

std::vector<Vector> simple_D(int n) {
  std::size_t dim = static_cast<std::size_t>(n);
  std::vector<Vector> s;
  for (std::size_t i = 0; i + 1 < dim; ++i) s.push_back(sub(unit(dim, i), unit(dim, i + 1)));
  s.push_back(add(unit(dim, dim - 2), unit(dim, dim - 1)));
  return s;
}

// Bourbaki plates: E6 and E7 use the first simple roots of E8.
std::vector<Vector> simple_E(int n) {
  std::vector<Vector> s;
  Vector a1(8, -half());
  a1[0] = half();
  a1[7] = half();
  s.push_back(a1);
  s.push_back(add(unit(8, 0), unit(8, 1)));
  for (std::size_t i = 0; i + 2 < 8; ++i) s.push_back(sub(unit(8, i + 1), unit(8, i)));
  s.resize(static_cast<std::size_t>(n));
  return s;
}

std::vector<Vector> simple_F4() {
  std::vector<Vector> s;
  s.push_back(sub(unit(4, 1), unit(4, 2)));
  s.push_back(sub(unit(4, 2), unit(4, 3)));
  s.push_back(unit(4, 3));
  Vector a4(4, -half());
  a4[0] = half();
  s.push_back(a4);
  return s;
}

// Vertices of the 600-cell (unit length): the 120 roots of H4.
std::vector<Vector> h4_roots() {
  std::vector<Vector> roots;
  auto push_signed = [&](const Vector& base) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (!base[i].is_zero()) nz.push_back(i);
    for (unsigned mask = 0; mask < (1u << nz.size()); ++mask) {
      Vector v = base;
      for (std::size_t b = 0; b < nz.size(); ++b)
        if (mask & (1u << b)) v[nz[b]] = -v[nz[b]];
      roots.push_back(v);
    }
  };
  for (std::size_t i = 0; i < 4; ++i) push_signed(unit(4, i));
  push_signed(Vector(4, half()));
  Scalar phi = Scalar::golden();
  Vector base = {half() * phi, half(), half() * (phi - 1), Scalar(0)};
  std::vector<int> p = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    if (inversions % 2) continue;
    Vector v(4);
    for (std::size_t i = 0; i < 4; ++i) v[static_cast<std::size_t>(p[i])] = base[i];
    push_signed(v);
  } while (std::next_permutation(p.begin(), p.end()));
  return roots;
}

std::vector<Vector> h3_roots() {
  std::vector<Vector> roots;
  for (const auto& r : h4_roots()) {
    if (r[3].is_zero()) roots.push_back(Vector(r.begin(), r.begin() + 3));
  }
  return roots;
}

// Simple system of a lexicographic positive system, ordered along the
// Coxeter path starting at the end of the 5-bond.
std::vector<Vector> simple_H(int n) {
  std::vector<Vector> roots = n == 3 ? h3_roots() : h4_roots();
  auto reflect = [](const Vector& x, const Vector& a) { return sub(x, scale(Scalar(2) * dot(x, a) / dot(a, a), a)); };
  std::vector<Vector> positive;
  for (const auto& r : roots)
    if (lex_sign(r) > 0) positive.push_back(r);
  std::vector<Vector> simple;
  for (const auto& a : positive) {
    bool ok = true;
    for (const auto& b : positive) {
      if (b == a) continue;
      if (lex_sign(reflect(b, a)) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) simple.push_back(a);
  }
  if (simple.size() != static_cast<std::size_t>(n)) throw std::logic_error("H simple system has wrong size");
  // Unit roots: a.b = -cos(pi/m); m = 5 iff a.b = -phi/2.
  Scalar five_bond = -half() * Scalar::golden();
  auto bond = [&](std::size_t i, std::size_t j) -> int {
    Scalar d = dot(simple[i], simple[j]);
    if (d.is_zero()) return 2;
    if (d == -half()) return 3;
    if (d == five_bond) return 5;
    throw std::logic_error("unexpected H bond");
  };
  std::vector<std::size_t> order;
  std::vector<bool> used(simple.size(), false);
  for (std::size_t i = 0; i < simple.size() && order.empty(); ++i) {
    int neighbours = 0;
    bool has5 = false;
    for (std::size_t j = 0; j < simple.size(); ++j) {
      if (j == i) continue;
      int m = bond(i, j);
      if (m > 2) ++neighbours;
      if (m == 5) has5 = true;
    }
    if (neighbours == 1 && has5) order.push_back(i);
  }
  if (order.empty()) throw std::logic_error("H diagram has no 5-bond end");
  used[order[0]] = true;
  while (order.size() < simple.size()) {
    std::size_t last = order.back();
    bool extended = false;
    for (std::size_t j = 0; j < simple.size(); ++j) {
      if (!used[j] && bond(last, j) > 2) {
        order.push_back(j);
        used[j] = true;
        extended = true;
        break;
      }
    }
    if (!extended) throw std::logic_error("H diagram is not a path");
  }
  std::vector<Vector> out;
  for (auto i : order) out.push_back(simple[i]);
  return out;
}

std::string key(const Vector& v) { return to_string(v); }

Scalar height(const Vector& c) { return std::accumulate(c.begin(), c.end(), Scalar(0)); }

}  // namespace

TypeRequest parse_type_name(const std::string& name) {
  if (name == "A") return {Family::A, std::nullopt};
  if (name == "B") return {Family::B, std::nullopt};
  if (name == "D") return {Family::D, std::nullopt};
  if (name == "I2" || name == "I") return {Family::I, std::nullopt};
  if (name == "E6") return {Family::E, 6};
  if (name == "E7") return {Family::E, 7};
  if (name == "E8") return {Family::E, 8};
  if (name == "F4") return {Family::F, 4};
  if (name == "H3") return {Family::H, 3};
  if (name == "H4") return {Family::H, 4};
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D') &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    Family f = name[0] == 'A' ? Family::A : name[0] == 'B' ? Family::B : Family::D;
    return {f, std::stoi(name.substr(1))};
  }
  throw CapabilityError("unsupported type '" + name + "'");
}

RootSystem RootSystem::build(const std::string& name, int n, const BuildLimits& limits) {
  TypeRequest req = parse_type_name(name);
  return build(req.family, req.n.value_or(n), limits);
}

RootSystem RootSystem::build(Family family, int n, const BuildLimits& limits) {
  auto classical = [&](int lo) {
    if (n < lo || n > limits.max_classical_rank)
      throw CapabilityError(std::string("unsupported rank ") + std::to_string(n) + " for type " +
                            family_letter(family) + " (supported " + std::to_string(lo) + ".." +
                            std::to_string(limits.max_classical_rank) + ")");
  };
  switch (family) {
    case Family::A: classical(1); return build_geometric(family, n, simple_A(n));
    case Family::B: classical(1); return build_geometric(family, n, simple_B(n));
    case Family::D: classical(3); return build_geometric(family, n, simple_D(n));
    case Family::E:
      if (n < 6 || n > 8) throw CapabilityError("type E requires rank 6, 7 or 8");
      return build_geometric(family, n, simple_E(n));
    case Family::F:
      if (n != 4) throw CapabilityError("type F requires rank 4");
      return build_geometric(family, n, simple_F4());
    case Family::H:
      if (n != 3 && n != 4) throw CapabilityError("type H requires rank 3 or 4");
      return build_geometric(family, n, simple_H(n));
    case Family::I:
      if (n < 3 || n > limits.max_dihedral_m)
        throw CapabilityError("I2(m) requires 3 <= m <= " + std::to_string(limits.max_dihedral_m));
      return build_dihedral(n);
    case Family::G:
      break;
  }
  throw CapabilityError("type G2 is handled as I2(6)");
}

RootSystem RootSystem::build_geometric(Family family, int n, const std::vector<Vector>& simple_ambient) {
  RootSystem rs;
  rs.irreducible_ = {family, n};
  rs.type_ = CoxeterType::make(family, n);
  rs.name_ = rs.irreducible_.to_string();
  rs.rank_ = n;
  std::size_t rank = static_cast<std::size_t>(n);
  rs.ambient_dim_ = simple_ambient[0].size();
  rs.ambient_basis_ = Matrix::from_columns(simple_ambient);
  rs.gram_ = Matrix(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) rs.gram_(i, j) = dot(simple_ambient[i], simple_ambient[j]);

  auto reflect_simple = [&](const Vector& c, std::size_t j) {
    Scalar pairing;
    for (std::size_t i = 0; i < rank; ++i)
      if (!c[i].is_zero()) pairing += c[i] * rs.gram_(i, j);
    Vector r = c;
    r[j] -= Scalar(2) * pairing / rs.gram_(j, j);
    return r;
  };

  // Closure of the simple roots under the simple reflections.
  std::vector<Vector> found;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < rank; ++i) {
    found.push_back(unit(rank, i));
    seen.emplace(key(found.back()), i);
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t j = 0; j < rank; ++j) {
      Vector r = reflect_simple(found[k], j);
      if (seen.emplace(key(r), found.size()).second) found.push_back(std::move(r));
    }
  }
  std::size_t expected = 2 * static_cast<std::size_t>(rs.type_.reflections());
  if (found.size() != expected)
    throw std::logic_error(rs.name_ + ": closure produced " + std::to_string(found.size()) + " roots, expected " +
                           std::to_string(expected));

  std::vector<Vector> positive;
  for (auto& c : found) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.sign() >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.sign() <= 0; });
    if (!nonneg && !nonpos) throw std::logic_error(rs.name_ + ": root with mixed signs " + to_string(c));
    if (nonneg) positive.push_back(c);
  }
  std::sort(positive.begin(), positive.end(), [](const Vector& x, const Vector& y) {
    auto hx = height(x);
    auto hy = height(y);
    if (hx != hy) return hx < hy;
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
  });
  std::size_t P = positive.size();
  rs.coords_ = positive;
  for (const auto& c : positive) rs.coords_.push_back(scale(Scalar(-1), c));
  std::size_t N = rs.coords_.size();
  rs.positive_.assign(N, false);
  rs.negation_.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    rs.positive_[i] = i < P;
    rs.negation_[i] = static_cast<std::uint32_t>((i + P) % N);
  }
  for (std::size_t i = 0; i < rank; ++i) {
    if (rs.coords_[i] != unit(rank, i)) throw std::logic_error(rs.name_ + ": simple roots not first in order");
    rs.simple_.push_back(static_cast<std::uint32_t>(i));
  }
  for (std::size_t i = 0; i < N; ++i) {
    rs.ambient_.push_back(rs.ambient_basis_ * rs.coords_[i]);
    rs.by_coords_.emplace(key(rs.coords_[i]), static_cast<std::uint32_t>(i));
    rs.by_ambient_.emplace(key(rs.ambient_.back()), static_cast<std::uint32_t>(i));
  }

  // Simple reflections directly; the others by conjugation s_b = s_j s_b' s_j.
  rs.reflections_.assign(N, Perm());
  std::vector<Perm> simple_perm;
  for (std::size_t j = 0; j < rank; ++j) {
    std::vector<Perm::point_type> img(N);
    for (std::size_t r = 0; r < N; ++r) img[r] = static_cast<Perm::point_type>(rs.by_coords_.at(key(reflect_simple(rs.coords_[r], j))));
    simple_perm.emplace_back(std::move(img));
    rs.reflections_[j] = simple_perm.back();
  }
  for (std::size_t r = rank; r < P; ++r) {
    Vector pairing = rs.gram_ * rs.coords_[r];
    std::size_t j = 0;
    while (j < rank && pairing[j].sign() <= 0) ++j;
    if (j == rank) throw std::logic_error(rs.name_ + ": positive root without descent");
    std::size_t lower = simple_perm[j][r];
    if (lower >= r) throw std::logic_error(rs.name_ + ": descent did not lower the height");
    rs.reflections_[r] = simple_perm[j] * rs.reflections_[lower] * simple_perm[j];
  }
  for (std::size_t r = P; r < N; ++r) rs.reflections_[r] = rs.reflections_[r - P];

  bool integral = std::all_of(rs.coords_.begin(), rs.coords_.end(), [](const Vector& c) {
    return std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.is_integer(); });
  });
  if (rs.irreducible_.crystallographic()) {
    if (!integral) throw std::logic_error(rs.name_ + ": crystallographic root with non-integer coordinates");
    Matrix cartan(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) {
        cartan(i, j) = Scalar(2) * rs.gram_(i, j) / rs.gram_(j, j);
        if (!cartan(i, j).is_integer()) throw std::logic_error(rs.name_ + ": non-integral Cartan entry");
      }
    rs.cartan_ = std::move(cartan);
    rs.highest_ = static_cast<std::uint32_t>(P - 1);
  }
  return rs;
}

RootSystem RootSystem::build_dihedral(int m) {
  RootSystem rs;
  rs.irreducible_ = {Family::I, m};
  rs.type_ = CoxeterType::make(Family::I, m);
  rs.name_ = "I2(" + std::to_string(m) + ")";
  rs.dihedral_ = true;
  rs.rank_ = 2;
  std::size_t M = static_cast<std::size_t>(m);
  std::size_t N = 2 * M;
  rs.positive_.assign(N, false);
  rs.negation_.resize(N);
  for (std::size_t k = 0; k < N; ++k) {
    rs.positive_[k] = k < M;
    rs.negation_[k] = static_cast<std::uint32_t>((k + M) % N);
  }
  rs.simple_ = {0, static_cast<std::uint32_t>(M - 1)};
  // Root k sits at angle k*pi/m; s_j(k) = 2j + m - k mod 2m.
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<Perm::point_type> img(N);
    for (std::size_t k = 0; k < N; ++k) img[k] = static_cast<Perm::point_type>((2 * j + M + N - k) % N);
    rs.reflections_.emplace_back(std::move(img));
  }
  return rs;
}

void RootSystem::require_geometric(const char* what) const {
  if (dihedral_) throw CapabilityError(std::string(what) + " is not available for the dihedral model " + name_);
}

std::vector<std::uint32_t> RootSystem::positive_roots() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < num_roots(); ++r)
    if (positive_[r]) out.push_back(r);
  return out;
}

std::vector<Perm> RootSystem::simple_reflections() const {
  std::vector<Perm> out;
  for (auto s : simple_) out.push_back(reflections_[s]);
  return out;
}

Perm RootSystem::minus_one_perm() const {
  std::vector<Perm::point_type> img(negation_.begin(), negation_.end());
  return Perm(std::move(img));
}

const Vector& RootSystem::coords(std::uint32_t r) const {
  require_geometric("root coordinates");
  return coords_.at(r);
}

const Vector& RootSystem::ambient(std::uint32_t r) const {
  require_geometric("ambient coordinates");
  return ambient_.at(r);
}

const Matrix& RootSystem::gram() const {
  require_geometric("Gram matrix");
  return gram_;
}

Scalar RootSystem::inner(const Vector& x, const Vector& y) const { return dot(x, gram() * y); }

std::optional<std::uint32_t> RootSystem::find_root(const Vector& simple_coords) const {
  auto it = by_coords_.find(key(simple_coords));
  if (it == by_coords_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> RootSystem::find_ambient(const Vector& ambient_coords) const {
  auto it = by_ambient_.find(key(ambient_coords));
  if (it == by_ambient_.end()) return std::nullopt;
  return it->second;
}

Matrix RootSystem::element_matrix(const Perm& g) const {
  require_geometric("element matrices");
  std::vector<Vector> cols;
  for (auto s : simple_) cols.push_back(coords_[g[s]]);
  return Matrix::from_columns(cols);
}

GroupElement RootSystem::reflection(std::uint32_t r) const {
  require_geometric("reflection matrices");
  const Vector& a = coords_.at(r);
  Vector ga = gram_ * a;
  Scalar den = dot(a, ga);
  std::size_t n = a.size();
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a[i].is_zero() && !ga[j].is_zero()) m(i, j) -= Scalar(2) * a[i] * ga[j] / den;
  return {reflections_[r], std::move(m)};
}

int RootSystem::degree(const Perm& g) const {
  if (!(g * g).is_identity()) throw std::invalid_argument("degree: element is not an involution");
  if (dihedral_) {
    if (g.is_identity()) return 0;
    if (g == minus_one_perm()) return 2;
    return 1;
  }
  Matrix m = element_matrix(g) - Matrix::identity(static_cast<std::size_t>(rank_));
  return static_cast<int>(coxinv::rank(m));
}

const PermGroup& RootSystem::group() const {
  if (!group_) group_ = std::make_shared<PermGroup>(num_roots(), simple_reflections());
  return *group_;
}

bool RootSystem::has_minus_one() const {
  if (!has_minus_one_) has_minus_one_ = group().contains(minus_one_perm());
  return *has_minus_one_;
}

std::vector<std::uint32_t> RootSystem::extended_diagram_Y() const {
  if (!crystallographic()) throw CapabilityError("extended diagram requires a crystallographic type, got " + name_);
  const Vector& theta = coords_[*highest_];
  std::vector<std::uint32_t> y;
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    if (inner(unit(simple_.size(), i), theta).is_zero()) y.push_back(simple_[i]);
  }
  return y;
}

std::vector<std::uint8_t> RootSystem::mod2_vector(std::uint32_t r, Mod2Mode mode) const {
  if (!crystallographic()) throw std::invalid_argument("mod2_vector requires a crystallographic type");
  const Vector& c = coords_.at(r);
  std::vector<std::uint8_t> out;
  auto parity = [](const Scalar& x) {
    mpz_class v = x.rational().get_num();
    return static_cast<std::uint8_t>(mpz_odd_p(v.get_mpz_t()) ? 1 : 0);
  };
  if (mode == Mod2Mode::RootModTwoRoot) {
    for (const auto& x : c) out.push_back(parity(x));
    return out;
  }
  if (!(irreducible_ == Irreducible{Family::E, 7}))
    throw std::invalid_argument("R/2P coordinates are only provided for E7, got " + name_);
  // Fundamental-weight coordinates: <x, alpha_j^vee> = sum_i c_i A_ij.
  const Matrix& a = *cartan_;
  for (std::size_t j = 0; j < c.size(); ++j) {
    Scalar w;
    for (std::size_t i = 0; i < c.size(); ++i) w += c[i] * a(i, j);
    out.push_back(parity(w));
  }
  return out;
}

int RootSystem::mod2_form(std::uint32_t x, std::uint32_t y) const {
  if (!crystallographic()) throw std::invalid_argument("mod2_form requires a crystallographic type");
  Scalar v = Scalar(2) * inner(coords_.at(x), coords_.at(y)) / norm2(y);
  mpz_class z = v.rational().get_num();
  return mpz_odd_p(z.get_mpz_t()) ? 1 : 0;
}

std::string RootSystem::to_json_string() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["type"] = name_;
  j["rank"] = rank_;
  j["model"] = dihedral_ ? "dihedral" : "geometric";
  j["num_roots"] = num_roots();
  j["simple_roots"] = simple_;
  auto roots = nlohmann::ordered_json::array();
  for (std::uint32_t r = 0; r < num_roots(); ++r) {
    nlohmann::ordered_json e;
    e["index"] = r;
    e["positive"] = static_cast<bool>(positive_[r]);
    if (dihedral_) {
      e["angle"] = std::to_string(r) + "pi/" + std::to_string(irreducible_.n);
    } else {
      auto strs = [](const Vector& v) {
        std::vector<std::string> s;
        for (const auto& x : v) s.push_back(x.to_string());
        return s;
      };
      e["coords"] = strs(coords_[r]);
      e["ambient"] = strs(ambient_[r]);
    }
    roots.push_back(e);
  }
  j["roots"] = roots;
  if (!dihedral_) {
    auto g = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < gram_.rows(); ++i) {
      std::vector<std::string> row;
      for (std::size_t k = 0; k < gram_.cols(); ++k) row.push_back(gram_(i, k).to_string());
      g.push_back(row);
    }
    j["gram"] = g;
  }
  return j.dump(2);
}

}  // namespace coxinv
