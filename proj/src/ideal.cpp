#include "monres/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace monres {

Exponent::Exponent(std::vector<Int> coords) : coords_(std::move(coords)) {
  for (const Int& c : coords_)
    requireInput(c >= 0, "exponent entries must be non-negative");
}

Exponent::Exponent(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) {
    requireInput(c >= 0, "exponent entries must be non-negative");
    coords_.emplace_back(c);
  }
}

bool Exponent::operator<(const Exponent& other) const {
  return std::lexicographical_compare(coords_.begin(), coords_.end(),
                                      other.coords_.begin(),
                                      other.coords_.end());
}

bool Exponent::divides(const Exponent& other) const {
  requireInput(dim() == other.dim(), "exponent dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i)
    if (coords_[i] > other.coords_[i])
      return false;
  return true;
}

Exponent Exponent::plus(const Exponent& other) const {
  requireInput(dim() == other.dim(), "exponent dimension mismatch");
  std::vector<Int> c(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    c[i] = coords_[i] + other.coords_[i];
  return Exponent(std::move(c));
}

Exponent Exponent::minus(const Exponent& other) const {
  requireInput(other.divides(*this),
               "exponent difference would leave N^n");
  std::vector<Int> c(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    c[i] = coords_[i] - other.coords_[i];
  return Exponent(std::move(c));
}

Exponent Exponent::join(const Exponent& other) const {
  requireInput(dim() == other.dim(), "exponent dimension mismatch");
  std::vector<Int> c(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    c[i] = std::max(coords_[i], other.coords_[i]);
  return Exponent(std::move(c));
}

Int Exponent::coordinateSum() const {
  Int s = 0;
  for (const Int& c : coords_)
    s += c;
  return s;
}

bool Exponent::isZero() const {
  for (const Int& c : coords_)
    if (c != 0)
      return false;
  return true;
}

bool Exponent::allPositive() const {
  for (const Int& c : coords_)
    if (c <= 0)
      return false;
  return true;
}

std::string Exponent::toString() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i > 0)
      out << ",";
    out << coords_[i].get_str();
  }
  out << ")";
  return out.str();
}

Exponent zeroExponent(std::size_t n) {
  return Exponent(std::vector<Int>(n, Int(0)));
}

Exponent onesExponent(std::size_t n) {
  return Exponent(std::vector<Int>(n, Int(1)));
}

Exponent scaled(const Int& k, const Exponent& e) {
  requireInput(k >= 0, "scaled: factor must be non-negative");
  std::vector<Int> c(e.dim());
  for (std::size_t i = 0; i < e.dim(); ++i)
    c[i] = k * e[i];
  return Exponent(std::move(c));
}

Int weightOf(const Exponent& rho, const Exponent& e) {
  requireInput(rho.dim() == e.dim(), "weightOf: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < e.dim(); ++i)
    s += rho[i] * e[i];
  return s;
}

std::vector<Exponent> minimalize(std::size_t n, std::vector<Exponent> raw) {
  for (const Exponent& e : raw)
    requireInput(e.dim() == n, "generator dimension mismatch");
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Exponent> minimal;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
      if (j != i && raw[j].divides(raw[i]))
        redundant = true;
    if (!redundant)
      minimal.push_back(raw[i]);
  }
  return minimal;
}

MonIdeal::MonIdeal(std::size_t n, std::vector<Exponent> generators)
    : n_(n), generators_(minimalize(n, std::move(generators))) {}

bool MonIdeal::isUnit() const {
  return generators_.size() == 1 && generators_[0].isZero();
}

bool contains(const MonIdeal& ideal, const Exponent& e) {
  requireInput(e.dim() == ideal.dim(), "contains: dimension mismatch");
  for (const Exponent& g : ideal.generators())
    if (g.divides(e))
      return true;
  return false;
}

bool isArtinian(const MonIdeal& ideal) {
  requireInput(!ideal.isZero(), "isArtinian: zero ideal");
  const std::size_t n = ideal.dim();
  std::vector<bool> hasPurePower(n, false);
  for (const Exponent& g : ideal.generators()) {
    std::size_t support = 0, index = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] != 0) {
        ++support;
        index = i;
      }
    if (support == 1)
      hasPurePower[index] = true;
    if (support == 0)
      return true;  // unit ideal
  }
  return std::all_of(hasPurePower.begin(), hasPurePower.end(),
                     [](bool b) { return b; });
}

bool isSubideal(const MonIdeal& inner, const MonIdeal& outer) {
  requireInput(inner.dim() == outer.dim(), "isSubideal: dimension mismatch");
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Exponent& g) { return contains(outer, g); });
}

MonIdeal multiply(const MonIdeal& a, const MonIdeal& b) {
  requireInput(a.dim() == b.dim(), "multiply: dimension mismatch");
  std::vector<Exponent> sums;
  sums.reserve(a.generatorCount() * b.generatorCount());
  for (const Exponent& g : a.generators())
    for (const Exponent& h : b.generators())
      sums.push_back(g.plus(h));
  return MonIdeal(a.dim(), std::move(sums));
}

MonIdeal power(const MonIdeal& ideal, const Int& k) {
  requireInput(k >= 1, "power: exponent must be positive");
  MonIdeal result = ideal;
  for (Int i = 1; i < k; ++i)
    result = multiply(result, ideal);
  return result;
}

MonIdeal intersect(const MonIdeal& a, const MonIdeal& b) {
  requireInput(a.dim() == b.dim(), "intersect: dimension mismatch");
  std::vector<Exponent> joins;
  joins.reserve(a.generatorCount() * b.generatorCount());
  for (const Exponent& g : a.generators())
    for (const Exponent& h : b.generators())
      joins.push_back(g.join(h));
  return MonIdeal(a.dim(), std::move(joins));
}

MonIdeal powersIdeal(const Exponent& b) {
  requireInput(b.allPositive(), "powersIdeal: entries must be >= 1");
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    std::vector<Int> c(b.dim(), Int(0));
    c[i] = b[i];
    gens.emplace_back(std::move(c));
  }
  return MonIdeal(b.dim(), std::move(gens));
}

MonIdeal maximalIdeal(std::size_t n) {
  return powersIdeal(onesExponent(n));
}

Int idealOrder(const Exponent& rho, const MonIdeal& ideal) {
  requireInput(!ideal.isZero(), "idealOrder: zero ideal has no order");
  requireInput(rho.dim() == ideal.dim(), "idealOrder: dimension mismatch");
  Int best = weightOf(rho, ideal.generators()[0]);
  for (const Exponent& g : ideal.generators())
    best = std::min(best, weightOf(rho, g));
  return best;
}

Exponent generatorBox(const MonIdeal& ideal) {
  requireInput(!ideal.isZero(), "generatorBox: zero ideal");
  Exponent box = ideal.generators()[0];
  for (const Exponent& g : ideal.generators())
    box = box.join(g);
  return box;
}

void forEachPointInBox(const Exponent& corner,
                       const std::function<void(const Exponent&)>& visit,
                       const Int& maxPoints) {
  const std::size_t n = corner.dim();
  Int total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= corner[i] + 1;
  requireInput(total <= maxPoints, "box enumeration too large");

  std::vector<Int> point(n, Int(0));
  while (true) {
    visit(Exponent(point));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (point[i] < corner[i]) {
        ++point[i];
        std::fill(point.begin() + static_cast<long>(i) + 1, point.end(),
                  Int(0));
        break;
      }
      if (i == 0)
        return;
    }
    if (n == 0)
      return;
  }
}

std::vector<Exponent> standardMonomials(const MonIdeal& ideal) {
  requireInput(isArtinian(ideal),
               "standardMonomials: ideal must be Artinian");
  if (ideal.isUnit())
    return {};
  std::vector<Exponent> result;
  // Standard monomials sit strictly below the pure powers, hence inside
  // the box one step under the generator corner.
  Exponent corner = generatorBox(ideal).minus(onesExponent(ideal.dim()));
  forEachPointInBox(corner, [&](const Exponent& p) {
    if (!contains(ideal, p))
      result.push_back(p);
  });
  return result;
}

std::vector<Exponent> irreducibleDecomposition(const MonIdeal& ideal) {
  std::vector<Exponent> standard = standardMonomials(ideal);
  std::vector<Exponent> corners;
  for (std::size_t i = 0; i < standard.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < standard.size() && maximal; ++j)
      if (j != i && standard[i].divides(standard[j]))
        maximal = false;
    if (maximal)
      corners.push_back(standard[i].plus(onesExponent(ideal.dim())));
  }
  std::sort(corners.begin(), corners.end());

  MonIdeal check(ideal.dim(), {zeroExponent(ideal.dim())});
  for (const Exponent& a : corners)
    check = intersect(check, powersIdeal(a));
  requireInternal(check == ideal,
                  "irreducibleDecomposition: intersection identity failed");
  return corners;
}

std::string monomialString(const Exponent& e) {
  static const char* small[] = {"x", "y", "z"};
  if (e.isZero())
    return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i] == 0)
      continue;
    if (!first)
      out << "*";
    first = false;
    if (e.dim() <= 3)
      out << small[i];
    else
      out << "z" << (i + 1);
    if (e[i] != 1)
      out << "^" << e[i].get_str();
  }
  return out.str();
}

std::string idealString(const MonIdeal& ideal) {
  if (ideal.isZero())
    return "(0)";
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < ideal.generatorCount(); ++i) {
    if (i > 0)
      out << ", ";
    out << monomialString(ideal.generators()[i]);
  }
  out << ")";
  return out.str();
}

}  // namespace monres
