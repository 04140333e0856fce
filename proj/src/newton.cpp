#include "monres/newton.hpp"

#include <algorithm>

#include "monres/linalg.hpp"

namespace monres {

bool NewtonPolyhedron::contains(const Exponent& e) const {
  requireInput(e.dim() == n_, "polyhedron membership: dimension mismatch");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const CompactFacet& f) {
                       return weightOf(f.normal.rho, e) >= f.offset;
                     });
}

namespace {

Exponent primitivize(std::vector<Int> v) {
  Int g = 0;
  for (const Int& c : v)
    g = gcdInt(g, c);
  requireInternal(g > 0, "primitivize: zero vector");
  for (Int& c : v)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return Exponent(std::move(v));
}

/// Walks all size-k subsets of [0, count), calling visit with index lists.
void forEachSubset(std::size_t count, std::size_t k,
                   const std::function<void(const std::vector<std::size_t>&)>&
                       visit) {
  if (k > count)
    return;
  std::vector<std::size_t> indices(k);
  for (std::size_t i = 0; i < k; ++i)
    indices[i] = i;
  while (true) {
    visit(indices);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (indices[i] != i + count - k) {
        ++indices[i];
        for (std::size_t j = i + 1; j < k; ++j)
          indices[j] = indices[j - 1] + 1;
        break;
      }
      if (i == 0)
        return;
    }
    if (k == 0)
      return;
  }
}

}  // namespace

std::vector<CompactFacet> compactFacets(const MonIdeal& ideal) {
  requireInput(isArtinian(ideal), "compactFacets: ideal must be Artinian");
  const std::size_t n = ideal.dim();
  const auto& gens = ideal.generators();

  if (n == 1)
    return {CompactFacet{Ray{onesExponent(1)}, gens[0][0]}};

  std::vector<CompactFacet> facets;
  // Every compact facet is spanned by generators, so its normal shows up
  // as the kernel of the difference matrix of some n generators that
  // affinely span it.
  forEachSubset(gens.size(), n, [&](const std::vector<std::size_t>& sub) {
    IntMatrix diffs(n - 1, std::vector<Int>(n));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        diffs[i - 1][j] = gens[sub[i]][j] - gens[sub[0]][j];
    std::vector<Int> normal = kernelVectorOfCorankOne(diffs);

    int sign = 0;
    for (const Int& c : normal) {
      int s = sgn(c);
      if (s == 0)
        return;  // zero entry: not compact (or rank-deficient subset)
      if (sign == 0)
        sign = s;
      else if (s != sign)
        return;  // mixed signs: facet meets the orthant at infinity
    }
    if (sign < 0)
      for (Int& c : normal)
        c = -c;

    Exponent rho = primitivize(std::move(normal));
    Int offset = weightOf(rho, gens[sub[0]]);
    for (const Exponent& g : gens)
      if (weightOf(rho, g) < offset)
        return;  // supporting hyperplane fails: not a face
    facets.push_back(CompactFacet{Ray{rho}, offset});
  });

  std::sort(facets.begin(), facets.end(),
            [](const CompactFacet& a, const CompactFacet& b) {
              return a.normal < b.normal;
            });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  for (const CompactFacet& f : facets)
    requireInternal(f.offset == idealOrder(f.normal.rho, ideal),
                    "compactFacets: offset is not the ideal order");
  return facets;
}

NewtonPolyhedron newtonPolyhedron(const MonIdeal& ideal) {
  return NewtonPolyhedron(ideal.dim(), compactFacets(ideal));
}

std::vector<CompactFacet> reesValuations(const MonIdeal& ideal) {
  return compactFacets(ideal);
}

MonIdeal integralClosure(const MonIdeal& ideal) {
  requireInput(isArtinian(ideal), "integralClosure: ideal must be Artinian");
  NewtonPolyhedron np = newtonPolyhedron(ideal);
  // Minimal generators of the closure divide the componentwise max of the
  // original generators, so a box scan finds them all.
  std::vector<Exponent> members;
  forEachPointInBox(generatorBox(ideal), [&](const Exponent& p) {
    if (np.contains(p))
      members.push_back(p);
  });
  MonIdeal closure(ideal.dim(), std::move(members));
  requireInternal(isSubideal(ideal, closure),
                  "integralClosure: closure lost a generator");
  return closure;
}

bool isIntegrallyClosed(const MonIdeal& ideal) {
  return integralClosure(ideal) == ideal;
}

}  // namespace monres
