#include "monres/linalg.hpp"

#include <algorithm>
#include <utility>

namespace monres {

std::vector<long> firstPrimes(std::size_t count) {
  std::vector<long> primes;
  long candidate = 2;
  while (primes.size() < count) {
    bool isPrime = true;
    for (long p : primes) {
      if (p * p > candidate)
        break;
      if (candidate % p == 0) {
        isPrime = false;
        break;
      }
    }
    if (isPrime)
      primes.push_back(candidate);
    ++candidate;
  }
  return primes;
}

Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    requireInternal(row.size() == n, "determinant: matrix not square");
  if (n == 0)
    return 1;

  // Bareiss fraction-free elimination; every division below is exact.
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0)
        ++pivot;
      if (pivot == n)
        return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

std::size_t rankExact(const IntMatrix& m) {
  if (m.empty() || m[0].empty())
    return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    requireInternal(m[i].size() == cols, "rankExact: ragged matrix");
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = Rat(m[i][j]);
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0)
        continue;
      Rat factor = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Int> kernelVectorOfCorankOne(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows + 1;
  for (const auto& row : m)
    requireInternal(row.size() == cols,
                    "kernelVectorOfCorankOne: need (n-1) x n matrix");
  std::vector<Int> kernel(cols);
  for (std::size_t skip = 0; skip < cols; ++skip) {
    IntMatrix minor(rows, std::vector<Int>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == skip)
          continue;
        minor[i][jj++] = m[i][j];
      }
    }
    Int d = determinant(std::move(minor));
    kernel[skip] = (skip % 2 == 0) ? d : Int(-d);
  }
  return kernel;
}

std::vector<Int> smithInvariants(IntMatrix m) {
  if (m.empty() || m[0].empty())
    return {};
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  for (const auto& row : m)
    requireInternal(row.size() == cols, "smithInvariants: ragged matrix");

  std::vector<Int> invariants;
  std::size_t top = 0;
  while (top < rows && top < cols) {
    // Find the entry of smallest absolute value to use as pivot.
    std::size_t pi = top, pj = top;
    bool found = false;
    Int best = 0;
    for (std::size_t i = top; i < rows; ++i)
      for (std::size_t j = top; j < cols; ++j) {
        if (m[i][j] == 0)
          continue;
        Int a = abs(m[i][j]);
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found)
      break;
    std::swap(m[top], m[pi]);
    for (std::size_t i = 0; i < rows; ++i)
      std::swap(m[i][top], m[i][pj]);

    bool reduced = false;
    while (!reduced) {
      reduced = true;
      for (std::size_t i = top + 1; i < rows; ++i) {
        if (m[i][top] == 0)
          continue;
        Int q = m[i][top] / m[top][top];
        for (std::size_t j = top; j < cols; ++j)
          m[i][j] -= q * m[top][j];
        if (m[i][top] != 0) {
          std::swap(m[top], m[i]);
          reduced = false;
        }
      }
      for (std::size_t j = top + 1; j < cols; ++j) {
        if (m[top][j] == 0)
          continue;
        Int q = m[top][j] / m[top][top];
        for (std::size_t i = top; i < rows; ++i)
          m[i][j] -= q * m[i][top];
        if (m[top][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i)
            std::swap(m[i][top], m[i][j]);
          reduced = false;
        }
      }
    }
    invariants.push_back(abs(m[top][top]));
    ++top;
  }

  // Fix up divisibility d1 | d2 | ... by repeated gcd/lcm exchange.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < invariants.size(); ++i) {
      if (invariants[i + 1] % invariants[i] != 0) {
        Int g = gcdInt(invariants[i], invariants[i + 1]);
        Int l = invariants[i] / g * invariants[i + 1];
        invariants[i] = g;
        invariants[i + 1] = l;
        changed = true;
      }
    }
  }
  return invariants;
}

std::vector<Rat> solveSquare(const IntMatrix& m, const std::vector<Int>& rhs) {
  const std::size_t n = m.size();
  requireInternal(rhs.size() == n, "solveSquare: size mismatch");
  Int d = determinant(m);
  requireInternal(d != 0, "solveSquare: singular matrix");
  std::vector<Rat> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix replaced = m;
    for (std::size_t i = 0; i < n; ++i)
      replaced[i][j] = rhs[i];
    x[j] = Rat(determinant(std::move(replaced)), d);
    x[j].canonicalize();
  }
  return x;
}

}  // namespace monres
