#ifndef MONRES_FAN_HPP
#define MONRES_FAN_HPP

#include <cstddef>
#include <vector>

#include "monres/ideal.hpp"
#include "monres/newton.hpp"

namespace monres {

/// A full-dimensional simplicial cone, stored as indices into the ray list
/// of its fan, sorted increasingly.
struct Cone {
  std::vector<std::size_t> rayIndices;

  bool operator==(const Cone&) const = default;
};

/// A simplicial fan supported on the closed positive orthant. Rays are
/// primitive integer vectors. For n = 2 the rays are stored in angular
/// order from (1,0) to (0,1) and the cones are the consecutive pairs; for
/// n = 3 rays are sorted lexicographically.
struct Fan {
  std::size_t n = 0;
  std::vector<Exponent> rays;
  std::vector<Cone> maximalCones;
};

/// The fan dual to the Newton polyhedron, supported on the orthant: the
/// coordinate rays together with one ray per compact facet normal. For
/// n = 3 it is built by successive star subdivision of the orthant at the
/// facet normals, which refines the true normal fan into simplicial
/// cones. Dimensions other than 2 and 3 are not supported (input_error).
Fan normalFan(const MonIdeal& ideal);

/// True when the cone is unimodular: its rays (indices into the fan's ray
/// list) generate the full lattice of their span. Full-dimensional cones
/// are tested by |det| = 1, lower-dimensional ones by Smith invariants.
bool isRegular(const Cone& cone, const Fan& fan);

/// True when every maximal cone of the fan is unimodular.
bool isRegular(const Fan& fan);

/// Refines the fan until every cone is unimodular, inserting new rays
/// only. For n = 2 each cone is filled in with the Hilbert basis of its
/// lattice points in one step; for n = 3 cones are split at fundamental
/// parallelepiped points of smallest coordinate sum until regular, with
/// an iteration cap guarding termination.
Fan regularize(const Fan& fan);

/// One exceptional or strict-transform divisor row of the smallness table:
/// a ray of the (regularized) fan, the order of the ideal along it, the
/// vanishing order sum(rho) - 1 of the pulled-back coordinate form, and
/// whether the ray is a Rees valuation of the ideal.
struct DivisorRow {
  Ray rho;
  Int idealOrderAlongRay;
  Int coordinateFormOrder;
  bool isRees = false;
};

/// The divisor table of a fan against an Artinian ideal, one row per ray
/// in the fan's ray order.
std::vector<DivisorRow> divisorTable(const Fan& fan, const MonIdeal& ideal);

}  // namespace monres

#endif
