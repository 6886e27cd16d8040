#pragma once

#include <cstddef>
#include <vector>

#include "isoprod/rational.hpp"

namespace isoprod {

using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(RationalMatrix m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric matrix by congruence (symmetric
/// elimination), exact. Throws on a non-symmetric input.
Inertia inertia(RationalMatrix m);

}  // namespace isoprod
