#ifndef MONRES_UTIL_HPP
#define MONRES_UTIL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace monres {

/// Arbitrary-precision integer. All exponent, offset and order arithmetic in
/// the library is exact; no operation ever rounds.
using Int = mpz_class;

/// Arbitrary-precision rational, used for exact linear algebra.
using Rat = mpq_class;

/// Raised when a caller violates a documented precondition or feeds the
/// library malformed data. Maps to exit code 2 in the CLI.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal invariant fails. Indicates a bug, never bad
/// input. Maps to exit code 3 in the CLI.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void requireInput(bool condition, const std::string& message) {
  if (!condition)
    throw input_error(message);
}

inline void requireInternal(bool condition, const std::string& message) {
  if (!condition)
    throw internal_error(message);
}

/// ceil(a / b) for b > 0.
inline Int ceilDiv(const Int& a, const Int& b) {
  requireInternal(b > 0, "ceilDiv: divisor must be positive");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// base^exp for exp >= 0.
inline Int powInt(const Int& base, const Int& exp) {
  requireInternal(exp >= 0 && exp.fits_ulong_p(),
                  "powInt: exponent out of range");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return r;
}

inline Int gcdInt(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// The first `count` primes, for evaluating monomial matrices at generic
/// integer points.
std::vector<long> firstPrimes(std::size_t count);

}  // namespace monres

#endif
