#ifndef MONRES_TESTS_HELPERS_HPP
#define MONRES_TESTS_HELPERS_HPP

#include <vector>

#include "monres/ideal.hpp"

namespace monres::testing {

/// Newton-polyhedron membership without the facet machinery: a lies in the
/// hull-plus-orthant iff k*a dominates a sum of k generators for some k,
/// since rational hull coefficients clear to integers. kMax = 8 covers
/// every denominator that can occur at corpus scale (facet lattice widths
/// are bounded by the largest exponent).
inline bool inNewtonHullOracle(const MonIdeal& ideal, const Exponent& a,
                               long kMax = 8) {
  for (long k = 1; k <= kMax; ++k)
    if (contains(power(ideal, Int(k)), scaled(Int(k), a)))
      return true;
  return false;
}

/// Integral closure by brute force over the generator box, via the hull
/// oracle above. Independent of the facet-enumeration code path.
inline MonIdeal closureOracle(const MonIdeal& ideal, long kMax = 8) {
  std::vector<Exponent> members;
  forEachPointInBox(generatorBox(ideal), [&](const Exponent& p) {
    if (inNewtonHullOracle(ideal, p, kMax))
      members.push_back(p);
  });
  return MonIdeal(ideal.dim(), std::move(members));
}

}  // namespace monres::testing

#endif
