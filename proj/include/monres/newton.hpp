#ifndef MONRES_NEWTON_HPP
#define MONRES_NEWTON_HPP

#include <vector>

#include "monres/ideal.hpp"
#include "monres/util.hpp"

namespace monres {

/// A primitive integer vector with strictly positive entries: the inward
/// normal of a compact facet of a Newton polyhedron, equivalently the
/// weight vector of a monomial valuation centered at the origin.
struct Ray {
  Exponent rho;

  bool operator==(const Ray&) const = default;
  bool operator<(const Ray& other) const { return rho < other.rho; }
};

/// One compact facet of the Newton polyhedron: the inequality
/// <rho, a> >= r, tight on the facet. r is the order of the ideal along
/// rho, so the pair is also a Rees valuation of the ideal.
struct CompactFacet {
  Ray normal;
  Int offset;

  bool operator==(const CompactFacet&) const = default;
};

/// The Newton polyhedron of a monomial ideal: the convex hull of the
/// generator exponents plus the positive orthant, described by its compact
/// facets. Facets with some zero normal entry are unbounded and carry no
/// valuation data for Artinian ideals, so only compact facets are kept.
class NewtonPolyhedron {
public:
  NewtonPolyhedron(std::size_t n, std::vector<CompactFacet> facets)
      : n_(n), facets_(std::move(facets)) {}

  std::size_t dim() const { return n_; }
  const std::vector<CompactFacet>& facets() const { return facets_; }

  /// True when e satisfies every compact facet inequality. For Artinian
  /// ideals this is exactly membership in the polyhedron.
  bool contains(const Exponent& e) const;

private:
  std::size_t n_;
  std::vector<CompactFacet> facets_;
};

/// Enumerates the compact facets exactly, sorted lexicographically by
/// normal. Requires an Artinian ideal.
std::vector<CompactFacet> compactFacets(const MonIdeal& ideal);

NewtonPolyhedron newtonPolyhedron(const MonIdeal& ideal);

/// The Rees valuations of an Artinian monomial ideal: one (ray, order)
/// pair per compact facet, offset equal to idealOrder(rho, ideal).
std::vector<CompactFacet> reesValuations(const MonIdeal& ideal);

/// The integral closure: all lattice points of the Newton polyhedron,
/// returned as a monomial ideal. Requires an Artinian ideal.
MonIdeal integralClosure(const MonIdeal& ideal);

bool isIntegrallyClosed(const MonIdeal& ideal);

}  // namespace monres

#endif
