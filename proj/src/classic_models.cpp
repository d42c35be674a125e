#include "coxinv/classic_models.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace coxinv {

namespace {

CentralizerProfile row(int degree, std::string label, BigInt order, CoxeterType gm, CoxeterType tm, CoxeterType gp,
                       CoxeterType tp, int r, bool times_c2, std::string printed) {
  CentralizerProfile p;
  p.degree = degree;
  p.label = std::move(label);
  p.order = std::move(order);
  p.g_minus = std::move(gm);
  p.tilde_minus = std::move(tm);
  p.g_plus = std::move(gp);
  p.tilde_plus = std::move(tp);
  p.order_g1 = p.g_minus.order() * p.g_plus.order();
  int rr = std::max(r, 1);
  p.gamma.structure.kind = times_c2 ? GroupStructure::Kind::SymmetricTimesC2 : GroupStructure::Kind::Symmetric;
  p.gamma.structure.r = rr;
  BigInt gamma_order = factorial(static_cast<unsigned>(rr)) * (times_c2 ? 2 : 1);
  p.gamma.order = gamma_order.get_ui();
  p.gamma.structure.order = p.gamma.order;
  p.gamma.structure.label = times_c2 ? "Sym" + std::to_string(rr) + "xC2" : "Sym" + std::to_string(rr);
  p.gamma.printed = std::move(printed);
  p.tilde_minus_reflection_generated = p.tilde_plus_reflection_generated = true;
  return p;
}

std::string abb(int a, int a_prime, int b) {
  return std::to_string(a) + "," + std::to_string(a_prime) + "," + std::to_string(b);
}

unsigned u(int x) { return static_cast<unsigned>(x); }

}  // namespace

CentralizerProfile predict_profile_A(int n, int d) {
  if (n < 2 || d < 0 || 2 * d > n) throw std::invalid_argument("predict_profile_A: need 0 <= d <= n/2, n >= 2");
  int a = n - 2 * d;
  BigInt order = power(2, u(d)) * factorial(u(d)) * factorial(u(a));
  CoxeterType a1 = CoxeterType::A(1);
  return row(d, "a=" + std::to_string(a), order, a1.pow(d), CoxeterType::B(d), CoxeterType::A(a - 1),
             CoxeterType::A(a - 1) * CoxeterType::A(d - 1), d, false, std::to_string(d));
}

CentralizerProfile predict_profile_B(int n, int a, int a_prime, int b) {
  if (a < 0 || a_prime < 0 || b < 0 || a + a_prime + 2 * b != n)
    throw std::invalid_argument("predict_profile_B: invariants do not satisfy n = a + a' + 2b");
  BigInt order = power(2, u(n)) * factorial(u(a)) * factorial(u(a_prime)) * factorial(u(b));
  CoxeterType ab = CoxeterType::A(1).pow(b);
  return row(a + b, abb(a, a_prime, b), order, CoxeterType::B(a) * ab, CoxeterType::B(a) * CoxeterType::B(b),
             CoxeterType::B(a_prime) * ab, CoxeterType::B(a_prime) * CoxeterType::B(b), b, false, std::to_string(b));
}

CentralizerProfile predict_profile_D(int n, int a, int a_prime, int b, DSplit split) {
  if (a < 0 || a_prime < 0 || b < 0 || a + a_prime + 2 * b != n || a % 2 != 0)
    throw std::invalid_argument("predict_profile_D: invariants do not satisfy n = a + a' + 2b with a even");
  bool split_case = a == 0 && a_prime == 0;
  if (split_case != (split != DSplit::None))
    throw std::invalid_argument("predict_profile_D: the split sign is required exactly when a = a' = 0");
  std::string label = abb(a, a_prime, b);
  if (split == DSplit::Plus) label += "+";
  if (split == DSplit::Minus) label += "-";
  CoxeterType ab = CoxeterType::A(1).pow(b);
  CoxeterType bb = CoxeterType::B(b);
  BigInt fb = factorial(u(b));
  int deg = a + b;
  if (split_case)
    return row(deg, label, power(2, u(n)) * fb, ab, bb, ab, bb, b, false, std::to_string(b));
  BigInt half = power(2, u(n - 1));
  if (a == 0)
    return row(deg, label, half * factorial(u(a_prime)) * fb, ab, bb, CoxeterType::D(a_prime) * ab,
               CoxeterType::D(a_prime) * bb, b, false, std::to_string(b));
  if (a_prime == 0)
    return row(deg, label, half * factorial(u(a)) * fb, CoxeterType::D(a) * ab, CoxeterType::D(a) * bb, ab, bb, b,
               false, std::to_string(b));
  return row(deg, label, half * factorial(u(a)) * factorial(u(a_prime)) * fb, CoxeterType::D(a) * ab,
             CoxeterType::B(a) * bb, CoxeterType::D(a_prime) * ab, CoxeterType::B(a_prime) * bb, b, true,
             std::to_string(b) + ",2");
}

std::vector<CentralizerProfile> predict_table(Family family, int rank) {
  std::vector<CentralizerProfile> out;
  switch (family) {
    case Family::A:
      for (int d = 0; 2 * d <= rank + 1; ++d) out.push_back(predict_profile_A(rank + 1, d));
      break;
    case Family::B:
      for (int b = 0; 2 * b <= rank; ++b)
        for (int a = 0; a + 2 * b <= rank; ++a) out.push_back(predict_profile_B(rank, a, rank - a - 2 * b, b));
      break;
    case Family::D:
      for (int b = 0; 2 * b <= rank; ++b)
        for (int a = 0; a + 2 * b <= rank; a += 2) {
          int ap = rank - a - 2 * b;
          if (a == 0 && ap == 0) {
            out.push_back(predict_profile_D(rank, a, ap, b, DSplit::Plus));
            out.push_back(predict_profile_D(rank, a, ap, b, DSplit::Minus));
          } else {
            out.push_back(predict_profile_D(rank, a, ap, b));
          }
        }
      break;
    default:
      throw std::invalid_argument("predict_table: only A, B and D have closed-form models");
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.label < y.label;
  });
  return out;
}

SignedPerm::SignedPerm(std::vector<int> perm, std::vector<int> sign) : perm_(std::move(perm)), sign_(std::move(sign)) {
  if (perm_.size() != sign_.size()) throw std::invalid_argument("SignedPerm: size mismatch");
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return SignedPerm(p, std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::vector<int> SignedPerm::apply(const std::vector<int>& v) const {
  std::vector<int> w(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) w[static_cast<std::size_t>(perm_[i])] += sign_[i] * v[i];
  return w;
}

bool SignedPerm::even() const {
  return std::count(sign_.begin(), sign_.end(), -1) % 2 == 0;
}

SignedPerm operator*(const SignedPerm& p, const SignedPerm& q) {
  std::size_t n = p.perm_.size();
  std::vector<int> perm(n), sign(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto j = static_cast<std::size_t>(q.perm_[i]);
    perm[i] = p.perm_[j];
    sign[i] = q.sign_[i] * p.sign_[j];
  }
  return SignedPerm(std::move(perm), std::move(sign));
}

namespace {

using Group = std::set<SignedPerm>;

Group closure(const std::vector<SignedPerm>& gens, int n) {
  Group g = {SignedPerm::identity(n)};
  std::vector<SignedPerm> queue(g.begin(), g.end());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : gens) {
      SignedPerm x = s * queue[k];
      if (g.insert(x).second) queue.push_back(x);
    }
  }
  return g;
}

struct Reflection {
  SignedPerm element;
  std::vector<int> root;
};

std::vector<Reflection> reflections(Family family, int n) {
  std::vector<Reflection> out;
  auto base = [&] {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        if (family == Family::A && s == -1) continue;
        // e_i <-> s e_j, root e_i - s e_j
        auto p = base();
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        std::vector<int> sg(static_cast<std::size_t>(n), 1);
        sg[static_cast<std::size_t>(i)] = s;
        sg[static_cast<std::size_t>(j)] = s;
        std::vector<int> root(static_cast<std::size_t>(n), 0);
        root[static_cast<std::size_t>(i)] = 1;
        root[static_cast<std::size_t>(j)] = -s;
        out.push_back({SignedPerm(p, sg), root});
      }
  if (family == Family::B) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> sg(static_cast<std::size_t>(n), 1);
      sg[static_cast<std::size_t>(i)] = -1;
      std::vector<int> root(static_cast<std::size_t>(n), 0);
      root[static_cast<std::size_t>(i)] = 1;
      out.push_back({SignedPerm(base(), sg), root});
    }
  }
  return out;
}

std::vector<int> negated(std::vector<int> v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

BruteForceOrders brute_force_orders(Family family, int n, int a, int a_prime, int b) {
  if (family != Family::A && family != Family::B && family != Family::D)
    throw std::invalid_argument("brute_force_orders: families A, B, D only");
  if (n > 6) throw std::invalid_argument("brute_force_orders: n too large to enumerate");
  if (a + a_prime + 2 * b != n) throw std::invalid_argument("brute_force_orders: invariants do not add up");
  if (family == Family::A && a != 0) throw std::invalid_argument("brute_force_orders: type A has no negated points");
  if (family == Family::D && a % 2 != 0) throw std::invalid_argument("brute_force_orders: a must be even in D");

  auto refl = reflections(family, n);
  std::vector<SignedPerm> gens;
  for (const auto& r : refl) gens.push_back(r.element);
  Group g = closure(gens, n);

  // u: negate the first a points, fix the next a', swap the remaining pairs.
  std::vector<int> p(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < a; ++i) s[static_cast<std::size_t>(i)] = -1;
  for (int k = 0; k < b; ++k) std::swap(p[static_cast<std::size_t>(a + a_prime + 2 * k)], p[static_cast<std::size_t>(a + a_prime + 2 * k + 1)]);
  SignedPerm uu(p, s);
  if (!g.count(uu)) throw std::logic_error("brute_force_orders: representative outside the group");

  std::vector<SignedPerm> cent;
  for (const auto& x : g)
    if (x * uu == uu * x) cent.push_back(x);

  std::vector<SignedPerm> minus, plus, one;
  for (const auto& r : refl) {
    auto ur = uu.apply(r.root);
    if (ur == r.root) plus.push_back(r.element);
    if (ur == negated(r.root)) minus.push_back(r.element);
    if (ur == r.root || ur == negated(r.root)) one.push_back(r.element);
  }

  // Kernels of the restrictions to V_u^{+-}, spanned by e_i +- u(e_i).
  auto kernel = [&](int sgn) {
    std::vector<std::vector<int>> span;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      auto ue = uu.apply(e);
      for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] += sgn * ue[static_cast<std::size_t>(k)];
      span.push_back(e);
    }
    std::size_t count = 0;
    for (const auto& x : cent) {
      bool trivial = std::all_of(span.begin(), span.end(), [&](const auto& v) { return x.apply(v) == v; });
      if (trivial) ++count;
    }
    return count;
  };

  BruteForceOrders o;
  o.group = static_cast<unsigned long>(g.size());
  o.centralizer = static_cast<unsigned long>(cent.size());
  o.minus = static_cast<unsigned long>(closure(minus, n).size());
  o.plus = static_cast<unsigned long>(closure(plus, n).size());
  o.g1 = static_cast<unsigned long>(closure(one, n).size());
  o.gamma = o.centralizer / o.g1;
  o.tilde_plus = o.centralizer / static_cast<unsigned long>(kernel(1));
  o.tilde_minus = o.centralizer / static_cast<unsigned long>(kernel(-1));
  return o;
}

}  // namespace coxinv
