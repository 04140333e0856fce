#ifndef MONRES_IDEAL_HPP
#define MONRES_IDEAL_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "monres/util.hpp"

namespace monres {

/// A point of N^n: the exponent vector of a monomial. Entries are
/// non-negative. Comparisons are lexicographic so exponents can live in
/// ordered containers; divisibility is the componentwise order and is
/// queried through divides().
class Exponent {
public:
  Exponent() = default;
  explicit Exponent(std::vector<Int> coords);
  Exponent(std::initializer_list<long> coords);

  std::size_t dim() const { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Int>& coords() const { return coords_; }

  bool operator==(const Exponent& other) const = default;
  bool operator<(const Exponent& other) const;  // lexicographic

  /// True when this divides other as monomials, i.e. this <= other
  /// componentwise.
  bool divides(const Exponent& other) const;

  Exponent plus(const Exponent& other) const;
  /// Componentwise difference; requires other.divides(*this).
  Exponent minus(const Exponent& other) const;
  /// Componentwise max: the exponent of lcm(z^this, z^other).
  Exponent join(const Exponent& other) const;

  Int coordinateSum() const;
  bool isZero() const;
  bool allPositive() const;

  std::string toString() const;

private:
  std::vector<Int> coords_;
};

Exponent zeroExponent(std::size_t n);
Exponent onesExponent(std::size_t n);
Exponent scaled(const Int& k, const Exponent& e);

/// <rho, e>, the order of the monomial z^e along the monomial valuation
/// with weight vector rho.
Int weightOf(const Exponent& rho, const Exponent& e);

/// A monomial ideal in n variables, held as its unique minimal generating
/// set: an antichain of exponents under divisibility, sorted
/// lexicographically. The empty antichain is the zero ideal.
class MonIdeal {
public:
  explicit MonIdeal(std::size_t n) : n_(n) {}
  /// Minimalizes and sorts; dimensions must all equal n.
  MonIdeal(std::size_t n, std::vector<Exponent> generators);

  std::size_t dim() const { return n_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  std::size_t generatorCount() const { return generators_.size(); }

  bool operator==(const MonIdeal& other) const = default;

  bool isZero() const { return generators_.empty(); }
  bool isUnit() const;

private:
  std::size_t n_ = 0;
  std::vector<Exponent> generators_;
};

/// Membership test: some generator divides z^e.
bool contains(const MonIdeal& ideal, const Exponent& e);

/// True when the quotient by the ideal is finite dimensional, i.e. each
/// variable appears alone in some generator.
bool isArtinian(const MonIdeal& ideal);

/// Drops generators divisible by another generator and deduplicates.
std::vector<Exponent> minimalize(std::size_t n, std::vector<Exponent> raw);

bool isSubideal(const MonIdeal& inner, const MonIdeal& outer);

/// Ideal product: pairwise sums of generators, minimalized.
MonIdeal multiply(const MonIdeal& a, const MonIdeal& b);

/// k-th power, k >= 1.
MonIdeal power(const MonIdeal& ideal, const Int& k);

/// Intersection: pairwise componentwise maxima, minimalized.
MonIdeal intersect(const MonIdeal& a, const MonIdeal& b);

/// The ideal (z_1^{b_1}, ..., z_n^{b_n}) for b >= 1 componentwise. Its
/// standard monomials fill the box [0, b-1].
MonIdeal powersIdeal(const Exponent& b);

/// The maximal ideal (z_1, ..., z_n).
MonIdeal maximalIdeal(std::size_t n);

/// min over generators g of <rho, g>. Requires a nonzero ideal.
Int idealOrder(const Exponent& rho, const MonIdeal& ideal);

/// All exponents outside the ideal, sorted lexicographically. Requires an
/// Artinian ideal; the result is the monomial basis of the quotient.
std::vector<Exponent> standardMonomials(const MonIdeal& ideal);

/// Writes the ideal as an intersection of ideals (z_1^{a_1},...,z_n^{a_n}):
/// one exponent a per maximal standard monomial, shifted up by one. The
/// returned list is sorted; the intersection identity is verified before
/// returning. Requires an Artinian ideal.
std::vector<Exponent> irreducibleDecomposition(const MonIdeal& ideal);

/// Componentwise max of all generators: the corner of the smallest box
/// containing them. Requires a nonzero ideal.
Exponent generatorBox(const MonIdeal& ideal);

/// Calls visit for every lattice point in [0, corner], lexicographic
/// order. Throws input_error when the box has more than maxPoints points.
void forEachPointInBox(const Exponent& corner,
                       const std::function<void(const Exponent&)>& visit,
                       const Int& maxPoints = Int(4000000));

/// Renders z^e with variables x, y, z for n <= 3 and z1..zn otherwise.
std::string monomialString(const Exponent& e);
std::string idealString(const MonIdeal& ideal);

}  // namespace monres

#endif
