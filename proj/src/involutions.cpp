#include "coxinv/involutions.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coxinv {

Perm product_of_reflections(const RootSystem& rs, const std::vector<std::uint32_t>& roots) {
  Perm p = Perm::identity(rs.num_roots());
  for (auto r : roots) p = p * rs.reflection_perm(r);
  return p;
}

std::vector<Cube> cube_decompositions(const RootSystem& rs, const Perm& u, std::size_t limit) {
  int d = rs.degree(u);
  std::vector<std::uint32_t> minus;
  for (auto r : rs.positive_roots())
    if (u[r] == rs.negative(r)) minus.push_back(r);
  std::vector<Cube> out;
  std::vector<std::uint32_t> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (out.size() >= limit) return;
    if (chosen.size() == static_cast<std::size_t>(d)) {
      if (product_of_reflections(rs, chosen) != u)
        throw std::logic_error("cube decomposition does not multiply to u");
      out.push_back({chosen});
      return;
    }
    for (std::size_t i = start; i < minus.size(); ++i) {
      std::uint32_t r = minus[i];
      bool orth = std::all_of(chosen.begin(), chosen.end(), [&](auto c) { return rs.orthogonal(c, r); });
      if (!orth) continue;
      chosen.push_back(r);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

SignedInvariants signed_invariants(const RootSystem& rs, const Perm& u) {
  Family f = rs.irreducible().family;
  if (f != Family::B && f != Family::D) throw std::invalid_argument("signed invariants need type B or D");
  std::size_t n = static_cast<std::size_t>(rs.rank());
  std::vector<Vector> simple;
  for (auto s : rs.simple_roots()) simple.push_back(rs.ambient(s));
  Matrix t = Matrix::from_columns(simple);
  Matrix amb = t * rs.element_matrix(u) * *inverse(t);
  SignedInvariants inv;
  int moved = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nonzero = 0;
    std::size_t row = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!amb(r, i).is_zero()) {
        ++nonzero;
        row = r;
      }
    }
    if (nonzero != 1 || !(amb(row, i) == Scalar(1) || amb(row, i) == Scalar(-1)))
      throw std::logic_error("element is not a signed permutation");
    if (row != i) {
      ++moved;
    } else if (amb(row, i) == Scalar(1)) {
      ++inv.a_prime;
    } else {
      ++inv.a;
    }
  }
  inv.b = moved / 2;
  return inv;
}

InvolutionCensus::InvolutionCensus(const RootSystem& rs) : rs_(&rs) {
  const PermGroup& g = rs.group();
  const BigInt order = g.order();
  const std::size_t N = rs.num_roots();
  const int n = rs.rank();
  const bool minus_one = rs.has_minus_one();
  const int direct_max = minus_one ? n / 2 : n;

  auto add_class = [&](Perm rep, int degree, std::vector<std::uint32_t> cube_roots) {
    auto orbit = std::make_shared<Orbit<ByConjugation>>(g.generators(), rep);
    if (order % static_cast<unsigned long>(orbit->size()) != 0)
      throw std::logic_error("class size does not divide the group order");
    InvolutionClass c;
    c.representative = std::move(rep);
    c.degree = degree;
    c.class_size = static_cast<unsigned long>(orbit->size());
    std::sort(cube_roots.begin(), cube_roots.end());
    c.cube.roots = std::move(cube_roots);
    if (rs.degree(c.representative) != degree) throw std::logic_error("BFS level and degree disagree");
    classes_.push_back(std::move(c));
    orbits_.push_back(std::move(orbit));
  };
  auto known = [&](int degree, const Perm& x) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (classes_[i].degree == degree && orbits_[i]->find(x)) return true;
    }
    return false;
  };

  add_class(Perm::identity(N), 0, {});
  std::size_t level_begin = 0;
  for (int d = 0; d < direct_max; ++d) {
    std::size_t level_end = classes_.size();
    for (std::size_t c = level_begin; c < level_end; ++c) {
      Perm u = classes_[c].representative;
      std::vector<std::uint32_t> word = classes_[c].cube.roots;
      for (auto r : rs.positive_roots()) {
        if (u[r] != r) continue;
        Perm v = u * rs.reflection_perm(r);
        if (known(d + 1, v)) continue;
        std::vector<std::uint32_t> w = word;
        w.push_back(r);
        add_class(std::move(v), d + 1, std::move(w));
      }
    }
    if (level_end == classes_.size()) break;
    level_begin = level_end;
  }

  if (minus_one) {
    Perm neg = rs.minus_one_perm();
    std::size_t direct = classes_.size();
    for (std::size_t c = direct; c-- > 0;) {
      int d = n - classes_[c].degree;
      if (d <= direct_max) continue;
      InvolutionClass k;
      k.representative = neg * classes_[c].representative;
      k.degree = d;
      k.class_size = classes_[c].class_size;
      k.dual = c;
      auto cubes = cube_decompositions(rs, k.representative, 1);
      if (cubes.empty()) throw std::logic_error("derived class without a cube decomposition");
      k.cube = cubes.front();
      if (rs.degree(k.representative) != d) throw std::logic_error("derived class has the wrong degree");
      classes_.push_back(std::move(k));
      orbits_.push_back(nullptr);
    }
  }

  label_all();

  std::vector<std::size_t> order_idx(classes_.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t x, std::size_t y) {
    if (classes_[x].degree != classes_[y].degree) return classes_[x].degree < classes_[y].degree;
    return classes_[x].label < classes_[y].label;
  });
  std::vector<std::size_t> where(classes_.size());
  for (std::size_t i = 0; i < order_idx.size(); ++i) where[order_idx[i]] = i;
  std::vector<InvolutionClass> sorted;
  std::vector<std::shared_ptr<Orbit<ByConjugation>>> sorted_orbits;
  for (auto i : order_idx) {
    sorted.push_back(std::move(classes_[i]));
    if (sorted.back().dual) sorted.back().dual = where[*sorted.back().dual];
    sorted_orbits.push_back(std::move(orbits_[i]));
  }
  classes_ = std::move(sorted);
  orbits_ = std::move(sorted_orbits);
}

void InvolutionCensus::label_all() {
  const RootSystem& rs = *rs_;
  const Irreducible t = rs.irreducible();
  const int n = rs.rank();

  for (std::size_t i = 0; i < classes_.size(); ++i) {
    InvolutionClass& c = classes_[i];
    switch (t.family) {
      case Family::A:
        c.label = "a=" + std::to_string(n + 1 - 2 * c.degree);
        break;
      case Family::B:
      case Family::D: {
        SignedInvariants s = signed_invariants(rs, c.representative);
        if (s.a + s.b != c.degree) throw std::logic_error("signed invariants disagree with the degree");
        c.invariants = s;
        c.label = std::to_string(s.a) + "," + std::to_string(s.a_prime) + "," + std::to_string(s.b);
        break;
      }
      default:
        break;
    }
  }

  if (t.family == Family::D) {
    // a = a' = 0: two classes; '+' holds the product of the canonical pairs e_{2k} - e_{2k+1}.
    std::vector<std::size_t> split;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const auto& s = *classes_[i].invariants;
      if (s.a == 0 && s.a_prime == 0) split.push_back(i);
    }
    if (!split.empty()) {
      if (split.size() != 2) throw std::logic_error("unlabeled combination: D split classes");
      std::vector<std::uint32_t> roots;
      for (int k = 0; k < n / 2; ++k) {
        Vector e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(2 * k)] = 1;
        e[static_cast<std::size_t>(2 * k + 1)] = -1;
        roots.push_back(*rs.find_ambient(e));
      }
      Perm witness = product_of_reflections(rs, roots);
      bool first_plus = contains(split[0], witness);
      if (first_plus == contains(split[1], witness)) throw std::logic_error("D split witness is ambiguous");
      classes_[split[0]].label += first_plus ? "+" : "-";
      classes_[split[1]].label += first_plus ? "-" : "+";
    }
  }

  for (std::size_t i = 0; i < classes_.size(); ++i) {
    InvolutionClass& c = classes_[i];
    if (c.dual && t.family != Family::A && t.family != Family::B && t.family != Family::D) {
      continue;  // taken from -u below
    }
    if (t == Irreducible{Family::E, 7} && c.degree == 3) {
      std::vector<std::uint8_t> sum(7, 0);
      for (auto r : c.cube.roots) {
        auto v = rs.mod2_vector(r, Mod2Mode::RootModTwoWeight);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] ^= v[k];
      }
      bool zero = std::all_of(sum.begin(), sum.end(), [](auto x) { return x == 0; });
      c.label = zero ? "droite" : "triangle";
    } else if (t == Irreducible{Family::E, 8} && c.degree == 4) {
      std::vector<std::uint8_t> sum(8, 0);
      for (auto r : c.cube.roots) {
        auto v = rs.mod2_vector(r, Mod2Mode::RootModTwoRoot);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] ^= v[k];
      }
      bool in_2r = std::all_of(sum.begin(), sum.end(), [](auto x) { return x == 0; });
      c.label = in_2r ? "rectangle" : "tetraedre";
    } else if (t.family == Family::F && c.degree == 1) {
      c.label = rs.norm2(c.cube.roots[0]) == Scalar(2) ? "L" : "C";
    } else if (t.family == Family::F && c.degree == 2) {
      auto cubes = cube_decompositions(rs, c.representative);
      bool same_length = false;
      for (const auto& cube : cubes) {
        if (rs.norm2(cube.roots[0]) == rs.norm2(cube.roots[1])) same_length = true;
      }
      if (same_length && cubes.size() == 2) {
        c.label = "2";
      } else if (!same_length && cubes.size() == 1) {
        c.label = "2'";
      } else {
        throw std::logic_error("unlabeled combination: F4 degree 2 with " + std::to_string(cubes.size()) + " cubes");
      }
    } else if (t.family == Family::I && t.n % 2 == 0 && c.degree == 1) {
      c.label = contains(i, rs.reflection_perm(rs.simple_roots()[0])) ? "s1" : "s2";
    }
  }
  for (auto& c : classes_) {
    if (c.dual && t.family != Family::A && t.family != Family::B && t.family != Family::D)
      c.label = classes_[*c.dual].label;
  }

  std::map<std::pair<int, std::string>, int> seen;
  for (const auto& c : classes_) {
    if (++seen[{c.degree, c.label}] > 1)
      throw std::logic_error("unlabeled combination: two classes of degree " + std::to_string(c.degree) +
                             " share label '" + c.label + "' in " + rs.name());
  }
}

bool InvolutionCensus::contains(std::size_t cls, const Perm& x) const {
  const auto& c = classes_.at(cls);
  if (c.dual) return orbits_[*c.dual]->find(rs_->minus_one_perm() * x).has_value();
  return orbits_[cls]->find(x).has_value();
}

std::optional<std::size_t> InvolutionCensus::class_of(const Perm& x) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (contains(i, x)) return i;
  }
  return std::nullopt;
}

const Orbit<ByConjugation>& InvolutionCensus::orbit(std::size_t cls) const {
  const auto& c = classes_.at(cls);
  return c.dual ? *orbits_[*c.dual] : *orbits_[cls];
}

std::vector<Perm> InvolutionCensus::elements(std::size_t cls) const {
  const auto& c = classes_.at(cls);
  if (!c.dual) return orbits_[cls]->states();
  Perm neg = rs_->minus_one_perm();
  std::vector<Perm> out;
  for (const auto& x : orbits_[*c.dual]->states()) out.push_back(neg * x);
  return out;
}

std::string InvolutionCensus::to_json_string() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["type"] = rs_->name();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : classes_) {
    nlohmann::ordered_json e;
    e["type"] = rs_->name();
    e["degree"] = c.degree;
    e["label"] = c.label;
    e["class_size"] = c.class_size.get_str();
    e["representative"] = c.cube.roots;
    arr.push_back(e);
  }
  j["classes"] = arr;
  return j.dump(2);
}

}  // namespace coxinv
