#include "coxinv/recognize.hpp"

#include <algorithm>
#include <string>

namespace coxinv {

namespace {

std::string describe(const std::vector<std::vector<int>>& m) {
  std::string s;
  for (const auto& row : m) {
    for (int x : row) s += std::to_string(x) + " ";
    s += "/ ";
  }
  return s;
}

CoxeterType classify_component(const std::vector<std::vector<int>>& m, const std::vector<std::size_t>& nodes) {
  std::size_t k = nodes.size();
  auto M = [&](std::size_t i, std::size_t j) { return m[nodes[i]][nodes[j]]; };
  if (k == 1) return CoxeterType::A(1);
  if (k == 2) return CoxeterType::make(Family::I, M(0, 1));

  std::vector<std::vector<std::size_t>> adj(k);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (M(i, j) > 2) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
  if (edges != k - 1) throw RecognitionError("Coxeter graph is not a tree: " + describe(m));
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < k; ++i) {
    if (adj[i].size() > 3) throw RecognitionError("vertex of valence > 3: " + describe(m));
    if (adj[i].size() == 3) branch.push_back(i);
  }

  if (branch.empty()) {
    std::size_t start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<std::size_t> path = {start};
    while (path.size() < k) {
      std::size_t last = path.back();
      std::size_t prev = path.size() > 1 ? path[path.size() - 2] : k;
      for (auto nb : adj[last])
        if (nb != prev) {
          path.push_back(nb);
          break;
        }
    }
    std::vector<int> labels;
    for (std::size_t i = 0; i + 1 < k; ++i) labels.push_back(M(path[i], path[i + 1]));
    std::vector<std::size_t> special;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != 3) special.push_back(i);
    int n = static_cast<int>(k);
    if (special.empty()) return CoxeterType::A(n);
    if (special.size() == 1) {
      std::size_t pos = special[0];
      int lab = labels[pos];
      bool at_end = pos == 0 || pos + 1 == labels.size();
      if (lab == 4 && at_end) return CoxeterType::B(n);
      if (lab == 4 && k == 4 && pos == 1) return CoxeterType::make(Family::F, 4);
      if (lab == 5 && at_end && (k == 3 || k == 4)) return CoxeterType::make(Family::H, n);
    }
    throw RecognitionError("not a finite Coxeter path: " + describe(m));
  }

  if (branch.size() != 1) throw RecognitionError("more than one branch vertex: " + describe(m));
  std::size_t b = branch[0];
  std::vector<int> arms;
  for (auto start : adj[b]) {
    if (M(b, start) != 3) throw RecognitionError("labelled edge at branch vertex: " + describe(m));
    int len = 1;
    std::size_t prev = b;
    std::size_t cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      if (M(cur, next) != 3) throw RecognitionError("labelled edge on a branch arm: " + describe(m));
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  int n = static_cast<int>(k);
  if (arms[0] == 1 && arms[1] == 1) return CoxeterType::D(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return CoxeterType::make(Family::E, n);
  throw RecognitionError("branched graph of infinite type: " + describe(m));
}

}  // namespace

CoxeterType classify_coxeter_matrix(const std::vector<std::vector<int>>& m) {
  std::size_t n = m.size();
  std::vector<int> comp(n, -1);
  CoxeterType result;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes = {s};
    comp[s] = static_cast<int>(s);
    for (std::size_t q = 0; q < nodes.size(); ++q)
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && m[nodes[q]][j] > 2) {
          comp[j] = static_cast<int>(s);
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    result = result * classify_component(m, nodes);
  }
  return result;
}

RecognizedDiagram recognize(const ReflectionSystem& system) {
  const auto& refl = system.reflections;
  const auto& normals = system.normals;
  if (refl.size() != normals.size()) throw std::invalid_argument("recognize: reflections and normals differ in count");
  RecognizedDiagram out;
  for (std::size_t i = 0; i < refl.size(); ++i) {
    if (!system.positive(normals[i])) throw std::invalid_argument("recognize: normal is not positive");
    bool simple = true;
    for (std::size_t j = 0; j < refl.size() && simple; ++j) {
      if (j != i && !system.positive(refl[i][normals[j]])) simple = false;
    }
    if (simple) out.nodes.push_back(i);
  }
  std::size_t k = out.nodes.size();
  out.m.assign(k, std::vector<int>(k, 1));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      int order = static_cast<int>((refl[out.nodes[a]] * refl[out.nodes[b]]).order());
      if (order < 2) throw RecognitionError("two simple reflections coincide");
      out.m[a][b] = out.m[b][a] = order;
    }
  out.type = classify_coxeter_matrix(out.m);
  if (out.type.reflections() != static_cast<int>(refl.size()))
    throw RecognitionError("recognized " + out.type.to_string() + " with " + std::to_string(out.type.reflections()) +
                           " reflections, but the system has " + std::to_string(refl.size()));
  return out;
}

ReflectionSystem root_subsystem(const RootSystem& rs, const std::vector<std::uint32_t>& positive_roots) {
  ReflectionSystem sys;
  for (auto r : positive_roots) {
    if (!rs.is_positive(r)) throw std::invalid_argument("root_subsystem: expected positive roots");
    sys.reflections.push_back(rs.reflection_perm(r));
    sys.normals.push_back(r);
  }
  sys.positive = [&rs](std::uint32_t x) { return rs.is_positive(x); };
  return sys;
}

}  // namespace coxinv
