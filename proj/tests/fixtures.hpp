#pragma once

#include "razavy/coupled.hpp"
#include "razavy/potential.hpp"

namespace fixtures {

inline const razavy::SingleWellBasis& basis() {
  static const razavy::SingleWellBasis b = razavy::normalization_and_gamma(razavy::PotentialParams{});
  return b;
}

inline razavy::CoupledSystem system(double g) { return razavy::build_coupled(basis(), g); }

}  // namespace fixtures
