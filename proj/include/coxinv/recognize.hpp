#pragma once

#include "coxinv/coxeter_type.hpp"
#include "coxinv/perm.hpp"
#include "coxinv/root_system.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace coxinv {

class RecognitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reflections acting on a point set that contains their normals.  Each
// normal is the positive one of its pair.
struct ReflectionSystem {
  std::vector<Perm> reflections;
  std::vector<std::uint32_t> normals;
  std::function<bool(std::uint32_t)> positive;
};

struct RecognizedDiagram {
  std::vector<std::size_t> nodes;  // indices of the simple reflections
  std::vector<std::vector<int>> m;
  CoxeterType type;
};

// A reflection is simple iff it sends every other positive normal to a
// positive point.
RecognizedDiagram recognize(const ReflectionSystem& system);
CoxeterType classify_coxeter_matrix(const std::vector<std::vector<int>>& m);

// The reflections of a closed set of positive roots of rs.
ReflectionSystem root_subsystem(const RootSystem& rs, const std::vector<std::uint32_t>& positive_roots);

}  // namespace coxinv
