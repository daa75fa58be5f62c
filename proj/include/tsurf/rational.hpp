#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "tsurf/error.hpp"

namespace tsurf {

using Rational = mpq_class;
using Integer = mpz_class;

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::SyntaxError, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline long lcm_long(long a, long b) {
  Integer l;
  mpz_lcm_ui(l.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b));
  if (!l.fits_slong_p()) fail(ErrorCode::Overflow, "lcm overflow");
  return l.get_si();
}

// Solves A x = b exactly by Gaussian elimination. A is column-major
// (cols[j][i] = A(i,j)) and may be non-square; returns nullopt when the
// system is inconsistent. Free variables, if any, are set to zero.
inline std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> cols, std::vector<Rational> b) {
  const size_t rows = b.size();
  const size_t ncols = cols.size();
  std::vector<size_t> pivot_col_of_row(rows, SIZE_MAX);
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows; ++c) {
    size_t p = SIZE_MAX;
    for (size_t i = r; i < rows; ++i) {
      if (sgn(cols[c][i]) != 0) { p = i; break; }
    }
    if (p == SIZE_MAX) continue;
    if (p != r) {
      for (size_t j = c; j < ncols; ++j) std::swap(cols[j][p], cols[j][r]);
      std::swap(b[p], b[r]);
    }
    Rational inv = 1 / cols[c][r];
    for (size_t j = c; j < ncols; ++j) cols[j][r] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(cols[c][i]) == 0) continue;
      Rational f = cols[c][i];
      for (size_t j = c; j < ncols; ++j) cols[j][i] -= f * cols[j][r];
      b[i] -= f * b[r];
    }
    pivot_col_of_row[r] = c;
    ++r;
  }
  for (size_t i = r; i < rows; ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(ncols, Rational(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

}  // namespace tsurf
