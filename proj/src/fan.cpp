#include "monres/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "monres/linalg.hpp"

namespace monres {

namespace {

Int cross2(const Exponent& u, const Exponent& v) {
  return u[0] * v[1] - u[1] * v[0];
}

/// Angular order in the closed positive quadrant, x-axis first.
bool angularLess(const Exponent& u, const Exponent& v) {
  Int c = cross2(u, v);
  if (c != 0)
    return c > 0;
  return u < v;
}

Exponent primitivize(const Exponent& v) {
  Int g = 0;
  for (std::size_t i = 0; i < v.dim(); ++i)
    g = gcdInt(g, v[i]);
  requireInternal(g > 0, "primitivize: zero ray");
  std::vector<Int> c(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    mpz_divexact(c[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return Exponent(std::move(c));
}

Exponent axisRay(std::size_t n, std::size_t i) {
  std::vector<Int> c(n, Int(0));
  c[i] = 1;
  return Exponent(std::move(c));
}

IntMatrix raysAsColumns(const Fan& fan, const Cone& cone) {
  const std::size_t n = fan.n;
  IntMatrix m(n, std::vector<Int>(cone.rayIndices.size()));
  for (std::size_t j = 0; j < cone.rayIndices.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      m[i][j] = fan.rays[cone.rayIndices[j]][i];
  return m;
}

void sortRaysCanonically(Fan& fan) {
  std::vector<std::size_t> order(fan.rays.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  if (fan.n == 2)
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return angularLess(fan.rays[a], fan.rays[b]);
    });
  else
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return fan.rays[a] < fan.rays[b];
    });

  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    position[order[i]] = i;
  std::vector<Exponent> sorted;
  sorted.reserve(fan.rays.size());
  for (std::size_t i : order)
    sorted.push_back(fan.rays[i]);
  fan.rays = std::move(sorted);
  for (Cone& cone : fan.maximalCones) {
    for (std::size_t& idx : cone.rayIndices)
      idx = position[idx];
    std::sort(cone.rayIndices.begin(), cone.rayIndices.end());
  }
  std::sort(fan.maximalCones.begin(), fan.maximalCones.end(),
            [](const Cone& a, const Cone& b) {
              return a.rayIndices < b.rayIndices;
            });
}

/// Splits every cone containing w at w. No-op when w is already a ray.
void starSubdivide(Fan& fan, const Exponent& w) {
  for (const Exponent& ray : fan.rays)
    if (ray == w)
      return;
  fan.rays.push_back(w);
  const std::size_t wIndex = fan.rays.size() - 1;

  std::vector<Cone> next;
  for (const Cone& cone : fan.maximalCones) {
    std::vector<Rat> lambda =
        solveSquare(raysAsColumns(fan, cone), w.coords());
    bool inside = std::all_of(lambda.begin(), lambda.end(),
                              [](const Rat& l) { return l >= 0; });
    if (!inside) {
      next.push_back(cone);
      continue;
    }
    for (std::size_t f = 0; f < lambda.size(); ++f) {
      if (lambda[f] == 0)
        continue;
      Cone child;
      for (std::size_t j = 0; j < cone.rayIndices.size(); ++j)
        if (j != f)
          child.rayIndices.push_back(cone.rayIndices[j]);
      child.rayIndices.push_back(wIndex);
      std::sort(child.rayIndices.begin(), child.rayIndices.end());
      next.push_back(std::move(child));
    }
  }
  fan.maximalCones = std::move(next);
}

/// Lattice points of {s u + t v : 0 <= s,t <= 1} other than 0, for a
/// 2-dimensional cone spanned by u and v.
std::vector<Exponent> parallelogramPoints(const Exponent& u,
                                          const Exponent& v) {
  Int d = cross2(u, v);
  requireInternal(d > 0, "parallelogramPoints: rays not in angular order");
  std::vector<Exponent> points;
  forEachPointInBox(u.plus(v), [&](const Exponent& p) {
    if (p.isZero())
      return;
    // p = s u + t v with s = cross(p, v) / d, t = cross(u, p) / d.
    Int sNum = cross2(p, v);
    Int tNum = cross2(u, p);
    if (sNum >= 0 && sNum <= d && tNum >= 0 && tNum <= d)
      points.push_back(p);
  });
  return points;
}

/// The Hilbert basis of a 2-dimensional cone: the irreducible lattice
/// points, which all lie in the spanning parallelogram.
std::vector<Exponent> hilbertBasis2(const Exponent& u, const Exponent& v) {
  std::vector<Exponent> points = parallelogramPoints(u, v);
  std::set<Exponent> pointSet(points.begin(), points.end());
  std::vector<Exponent> basis;
  for (const Exponent& p : points) {
    bool reducible = false;
    for (const Exponent& q : points) {
      if (!q.divides(p))
        continue;
      Exponent rest = p.minus(q);
      if (!rest.isZero() && pointSet.count(rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible)
      basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end(), angularLess);
  return basis;
}

}  // namespace

Fan normalFan(const MonIdeal& ideal) {
  requireInput(ideal.dim() == 2 || ideal.dim() == 3,
               "normalFan: only dimensions 2 and 3 are supported");
  const std::size_t n = ideal.dim();
  std::vector<CompactFacet> facets = compactFacets(ideal);

  Fan fan;
  fan.n = n;
  if (n == 2) {
    std::vector<Exponent> rays{axisRay(2, 0), axisRay(2, 1)};
    for (const CompactFacet& f : facets)
      rays.push_back(f.normal.rho);
    std::sort(rays.begin(), rays.end(), angularLess);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    fan.rays = std::move(rays);
    for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i)
      fan.maximalCones.push_back(Cone{{i, i + 1}});
    return fan;
  }

  fan.rays = {axisRay(3, 0), axisRay(3, 1), axisRay(3, 2)};
  fan.maximalCones = {Cone{{0, 1, 2}}};
  for (const CompactFacet& f : facets)
    starSubdivide(fan, f.normal.rho);
  sortRaysCanonically(fan);
  return fan;
}

bool isRegular(const Cone& cone, const Fan& fan) {
  for (std::size_t idx : cone.rayIndices)
    requireInput(idx < fan.rays.size(), "isRegular: ray index out of range");
  IntMatrix m = raysAsColumns(fan, cone);
  if (cone.rayIndices.size() == fan.n)
    return abs(determinant(m)) == 1;
  for (const Int& inv : smithInvariants(m))
    if (inv != 1)
      return false;
  return true;
}

bool isRegular(const Fan& fan) {
  for (const Cone& cone : fan.maximalCones)
    if (!isRegular(cone, fan))
      return false;
  return true;
}

namespace {

Fan regularize2(const Fan& fan) {
  Fan result;
  result.n = 2;
  requireInput(!fan.rays.empty(), "regularize: empty fan");
  result.rays.push_back(fan.rays.front());
  for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i) {
    const Exponent& u = fan.rays[i];
    const Exponent& v = fan.rays[i + 1];
    Int d = cross2(u, v);
    requireInput(d > 0, "regularize: rays not in strict angular order");
    if (d > 1)
      for (const Exponent& w : hilbertBasis2(u, v))
        if (!(w == u) && !(w == v))
          result.rays.push_back(w);
    result.rays.push_back(v);
  }
  for (std::size_t i = 0; i + 1 < result.rays.size(); ++i) {
    requireInternal(cross2(result.rays[i], result.rays[i + 1]) == 1,
                    "regularize: a refined cone is still singular");
    result.maximalCones.push_back(Cone{{i, i + 1}});
  }
  return result;
}

Fan regularize3(const Fan& fan) {
  Fan result = fan;
  const std::size_t iterationCap = 10000;
  for (std::size_t iteration = 0;; ++iteration) {
    requireInput(iteration < iterationCap,
                 "regularize: iteration cap exceeded");
    sortRaysCanonically(result);

    const Cone* singular = nullptr;
    for (const Cone& cone : result.maximalCones)
      if (abs(determinant(raysAsColumns(result, cone))) != 1) {
        singular = &cone;
        break;
      }
    if (!singular)
      return result;

    // Pick the nonzero lattice point of the fundamental parallelepiped
    // with the smallest coordinate sum; it is automatically primitive.
    IntMatrix m = raysAsColumns(result, *singular);
    Exponent corner = result.rays[singular->rayIndices[0]];
    for (std::size_t j = 1; j < singular->rayIndices.size(); ++j)
      corner = corner.plus(result.rays[singular->rayIndices[j]]);
    Exponent best;
    bool found = false;
    forEachPointInBox(corner, [&](const Exponent& p) {
      if (p.isZero())
        return;
      std::vector<Rat> lambda = solveSquare(m, p.coords());
      for (const Rat& l : lambda)
        if (l < 0 || l >= 1)
          return;
      if (!found || p.coordinateSum() < best.coordinateSum() ||
          (p.coordinateSum() == best.coordinateSum() && p < best)) {
        best = p;
        found = true;
      }
    });
    requireInternal(found,
                    "regularize: singular cone without interior point");
    requireInternal(best == primitivize(best),
                    "regularize: chosen point is not primitive");
    starSubdivide(result, best);
  }
}

}  // namespace

Fan regularize(const Fan& fan) {
  requireInput(fan.n == 2 || fan.n == 3,
               "regularize: only dimensions 2 and 3 are supported");
  Fan result = fan.n == 2 ? regularize2(fan) : regularize3(fan);
  requireInternal(isRegular(result), "regularize: result is not regular");
  return result;
}

std::vector<DivisorRow> divisorTable(const Fan& fan, const MonIdeal& ideal) {
  requireInput(fan.n == ideal.dim(), "divisorTable: dimension mismatch");
  requireInput(isArtinian(ideal), "divisorTable: ideal must be Artinian");
  std::set<Exponent> reesRays;
  for (const CompactFacet& f : reesValuations(ideal))
    reesRays.insert(f.normal.rho);

  std::vector<DivisorRow> rows;
  for (const Exponent& ray : fan.rays) {
    DivisorRow row;
    row.rho = Ray{ray};
    row.idealOrderAlongRay = idealOrder(ray, ideal);
    row.coordinateFormOrder = ray.coordinateSum() - 1;
    row.isRees = reesRays.count(ray) > 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace monres
