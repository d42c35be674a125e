#pragma once

#include "coxinv/structure.hpp"

#include <string>

namespace coxinv {

// Table rows, one per involution class, sorted by degree then label.
std::string profiles_csv(const GroupAnalysis& ga);
std::string profiles_json(const GroupAnalysis& ga);

}  // namespace coxinv
