#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tsurf/error.hpp"
#include "tsurf/mpfr_interval.hpp"
#include "tsurf/rational.hpp"

namespace tsurf {

namespace detail {

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i <= n; ++i) {
    if (n % i == 0) d.push_back(i);
  }
  return d;
}

// Exact division of integer polynomials, quotient returned; used only where
// the division is known to be exact (divisor monic).
inline std::vector<Integer> poly_div_exact(std::vector<Integer> num,
                                           const std::vector<Integer>& den) {
  const size_t dd = den.size() - 1;
  require_internal(num.size() >= den.size(), "poly_div_exact degree");
  std::vector<Integer> q(num.size() - dd, Integer(0));
  for (size_t i = num.size() - 1;; --i) {
    Integer c = num[i];  // den is monic
    q[i - dd] = c;
    if (c != 0) {
      for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    if (i == dd) break;
  }
  for (size_t j = 0; j < dd; ++j) require_internal(num[j] == 0, "inexact poly division");
  return q;
}

// N-th cyclotomic polynomial, monic with integer coefficients,
// coeffs[i] = coefficient of x^i.
inline const std::vector<Integer>& cyclotomic_poly(unsigned n) {
  static std::map<unsigned, std::vector<Integer>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<Integer>&(unsigned)> get =
      [&](unsigned m) -> const std::vector<Integer>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<Integer> poly;
    if (m == 1) {
      poly = {Integer(-1), Integer(1)};  // x - 1
    } else {
      poly.assign(m + 1, Integer(0));
      poly[0] = -1;
      poly[m] = 1;  // x^m - 1
      for (unsigned d : divisors(m)) {
        if (d == m) continue;
        poly = poly_div_exact(std::move(poly), get(d));
      }
    }
    return cache.emplace(m, std::move(poly)).first->second;
  };
  return get(n);
}

// Reduces a rational polynomial modulo the monic integer polynomial `mod`,
// returning a vector of exactly deg(mod) coefficients.
inline std::vector<Rational> poly_mod(std::vector<Rational> p,
                                      const std::vector<Integer>& mod) {
  const size_t d = mod.size() - 1;
  while (p.size() > d) {
    Rational c = std::move(p.back());
    p.pop_back();
    if (sgn(c) != 0) {
      const size_t base = p.size() - d;
      for (size_t j = 0; j < d; ++j) {
        if (mod[j] != 0) p[base + j] -= c * Rational(mod[j]);
      }
    }
  }
  p.resize(d, Rational(0));
  return p;
}

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Power basis image of zeta_M^j inside Q(zeta_L), M | L, as reduced
// coefficient vectors; one column per j < phi(M).
inline const std::vector<std::vector<Rational>>& lift_columns(unsigned m, unsigned l) {
  static std::map<std::pair<unsigned, unsigned>, std::vector<std::vector<Rational>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, l);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const auto& mod = cyclotomic_poly(l);
  const unsigned dm = euler_phi(m);
  const unsigned step = l / m;
  std::vector<std::vector<Rational>> cols;
  cols.reserve(dm);
  for (unsigned j = 0; j < dm; ++j) {
    std::vector<Rational> p(static_cast<size_t>(step) * j + 1, Rational(0));
    p.back() = 1;  // x^(step*j)
    cols.push_back(poly_mod(std::move(p), mod));
  }
  return cache.emplace(key, std::move(cols)).first->second;
}

}  // namespace detail

struct Approx {
  std::complex<double> value;
  double error = 0.0;  // guaranteed |value - exact| <= error (up to double conversion)
};

// An exact element of the cyclotomic field Q(zeta_N), stored as the reduced
// coefficient vector on the power basis 1, zeta, ..., zeta^(phi(N)-1).
// Values are immutable once constructed and safe to share across threads.
class AlgNum {
 public:
  AlgNum() : level_(1), c_{Rational(0)} {}
  AlgNum(long v) : level_(1), c_{Rational(v)} {}  // NOLINT(runtime/explicit)
  AlgNum(const Rational& v) : level_(1), c_{v} {}  // NOLINT(runtime/explicit)

  AlgNum(unsigned level, std::vector<Rational> poly) : level_(level) {
    if (level == 0) fail(ErrorCode::SyntaxError, "level must be positive");
    const auto& mod = detail::cyclotomic_poly(level);
    if (poly.size() < mod.size() - 1) poly.resize(mod.size() - 1, Rational(0));
    c_ = detail::poly_mod(std::move(poly), mod);
    for (auto& q : c_) q.canonicalize();
  }

  static AlgNum zeta(unsigned n) {
    if (n == 0) fail(ErrorCode::SyntaxError, "zeta level must be positive");
    return AlgNum(n, {Rational(0), Rational(1)});
  }

  unsigned level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_) {
      if (sgn(q) != 0) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i) {
      if (sgn(c_[i]) != 0) return false;
    }
    return true;
  }

  // Only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  AlgNum lifted_to(unsigned l) const {
    if (l == level_) return *this;
    require_internal(l % level_ == 0, "lift target not a multiple of level");
    const auto& cols = detail::lift_columns(level_, l);
    std::vector<Rational> out(detail::euler_phi(l), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      const auto& col = cols[k];
      for (size_t i = 0; i < col.size(); ++i) {
        if (sgn(col[i]) != 0) out[i] += c_[k] * col[i];
      }
    }
    AlgNum r;
    r.level_ = l;
    r.c_ = std::move(out);
    return r;
  }

  friend unsigned common_level(const AlgNum& a, const AlgNum& b) {
    return static_cast<unsigned>(
        lcm_long(static_cast<long>(a.level_), static_cast<long>(b.level_)));
  }

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b) {
    unsigned l = common_level(a, b);
    AlgNum x = a.lifted_to(l), y = b.lifted_to(l);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend AlgNum operator-(const AlgNum& a, const AlgNum& b) {
    unsigned l = common_level(a, b);
    AlgNum x = a.lifted_to(l), y = b.lifted_to(l);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  AlgNum operator-() const {
    AlgNum r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }

  friend AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    if (a.level_ == 1) return b.scaled(a.c_[0]);
    if (b.level_ == 1) return a.scaled(b.c_[0]);
    unsigned l = common_level(a, b);
    AlgNum x = a.lifted_to(l), y = b.lifted_to(l);
    AlgNum r;
    r.level_ = l;
    r.c_ = detail::poly_mod(detail::poly_mul(x.c_, y.c_), detail::cyclotomic_poly(l));
    return r;
  }

  AlgNum scaled(const Rational& q) const {
    AlgNum r = *this;
    for (auto& c : r.c_) c *= q;
    return r;
  }

  AlgNum inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (is_rational()) {
      AlgNum r;
      r.level_ = 1;
      r.c_ = {1 / c_[0]};
      return r;
    }
    // Solve (mult-by-this) x = 1 in the power basis.
    const size_t d = c_.size();
    const auto& mod = detail::cyclotomic_poly(level_);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(d);
    for (size_t j = 0; j < d; ++j) {
      std::vector<Rational> xj(j + 1, Rational(0));
      xj.back() = 1;
      cols.push_back(detail::poly_mod(detail::poly_mul(c_, xj), mod));
    }
    std::vector<Rational> e0(d, Rational(0));
    e0[0] = 1;
    auto sol = solve_linear(std::move(cols), std::move(e0));
    require_internal(sol.has_value(), "field element not invertible");
    AlgNum r;
    r.level_ = level_;
    r.c_ = std::move(*sol);
    return r;
  }

  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

  AlgNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgNum base = *this;
    AlgNum acc(1);
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
      if (u & 1) acc = acc * base;
      base = base * base;
      u >>= 1;
    }
    return acc;
  }

  // Complex conjugation: the automorphism zeta_N -> zeta_N^(-1).
  AlgNum conj() const {
    if (level_ <= 2) return *this;
    std::vector<Rational> p(level_, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      p[(k * (level_ - 1)) % level_] += c_[k];
    }
    AlgNum r;
    r.level_ = level_;
    r.c_ = detail::poly_mod(std::move(p), detail::cyclotomic_poly(level_));
    return r;
  }

  bool is_real() const { return conj() == *this; }

  friend bool operator==(const AlgNum& a, const AlgNum& b) {
    if (a.level_ == b.level_) return a.c_ == b.c_;
    unsigned l = common_level(a, b);
    return a.lifted_to(l).c_ == b.lifted_to(l).c_;
  }
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  // Exact sign of a real element: exact zero test on the canonical
  // coefficients, then interval refinement at doubling precision.
  int sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    if (!is_real()) fail(ErrorCode::NotReal, "sign of a non-real element");
    for (mpfr_prec_t prec = 64;; prec *= 2) {
      int s = real_part_interval(prec).sign_or_zero();
      if (s != 0) return s;
      require_internal(prec < (mpfr_prec_t(1) << 24), "sign refinement runaway");
    }
  }

  Approx approx(unsigned bits = 53) const {
    if (bits < 16) bits = 16;
    const double target = std::ldexp(1.0, -static_cast<int>(bits) + 2);
    for (mpfr_prec_t prec = bits + 16;; prec *= 2) {
      RealInterval re = real_part_interval(prec);
      RealInterval im = imag_part_interval(prec);
      double w = std::max(re.width(), im.width());
      if (w <= target || prec > (mpfr_prec_t(1) << 24)) {
        Approx a;
        a.value = {re.mid(), im.mid()};
        a.error = w;
        return a;
      }
    }
  }

  double to_double() const { return approx(53).value.real(); }

  // Smallest M dividing the level such that the value lies in Q(zeta_M).
  AlgNum reduced() const {
    if (is_rational()) {
      AlgNum r;
      r.level_ = 1;
      r.c_ = {c_[0]};
      return r;
    }
    for (unsigned m : detail::divisors(level_)) {
      if (m == level_) break;
      auto cols = detail::lift_columns(m, level_);
      auto sol = solve_linear(cols, c_);
      if (sol) {
        AlgNum r;
        r.level_ = m;
        r.c_ = std::move(*sol);
        return r;
      }
    }
    return *this;
  }

  // Serialization: {level;c0,c1,...} with rationals in lowest terms.
  std::string to_string() const {
    std::ostringstream os;
    os << '{' << level_ << ';';
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ',';
      os << c_[i].get_str();
    }
    os << '}';
    return os.str();
  }

  static AlgNum from_string(const std::string& s) {
    if (s.size() < 4 || s.front() != '{' || s.back() != '}')
      fail(ErrorCode::SyntaxError, "bad algebraic number '" + s + "'");
    auto semi = s.find(';');
    if (semi == std::string::npos) fail(ErrorCode::SyntaxError, "missing ';' in '" + s + "'");
    unsigned level = 0;
    try {
      level = static_cast<unsigned>(std::stoul(s.substr(1, semi - 1)));
    } catch (const std::exception&) {
      fail(ErrorCode::SyntaxError, "bad level in '" + s + "'");
    }
    if (level == 0) fail(ErrorCode::SyntaxError, "level must be positive in '" + s + "'");
    std::vector<Rational> coeffs;
    std::string body = s.substr(semi + 1, s.size() - semi - 2);
    if (!body.empty()) {
      std::istringstream is(body);
      std::string tok;
      while (std::getline(is, tok, ',')) coeffs.push_back(rational_from_string(tok));
    }
    if (coeffs.size() > detail::euler_phi(level))
      fail(ErrorCode::SyntaxError, "too many coefficients in '" + s + "'");
    return AlgNum(level, std::move(coeffs));
  }

  // Strict weak order usable as a container key (not the value order on reals;
  // callers who need canonical keys should reduce() first).
  static int key_compare(const AlgNum& a, const AlgNum& b) {
    if (a.level_ != b.level_) return a.level_ < b.level_ ? -1 : 1;
    for (size_t i = 0; i < a.c_.size(); ++i) {
      int c = mpq_cmp(a.c_[i].get_mpq_t(), b.c_[i].get_mpq_t());
      if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
  }

 private:
  RealInterval real_part_interval(mpfr_prec_t prec) const {
    RealInterval sum(prec);
    RealInterval two_pi = RealInterval::pi(prec).scaled(2, 1);
    for (size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      RealInterval angle = two_pi.scaled(static_cast<long>(k), level_);
      sum = sum + angle.cos() * RealInterval::from_rational(c_[k], prec);
    }
    return sum;
  }

  RealInterval imag_part_interval(mpfr_prec_t prec) const {
    RealInterval sum(prec);
    RealInterval two_pi = RealInterval::pi(prec).scaled(2, 1);
    for (size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      RealInterval angle = two_pi.scaled(static_cast<long>(k), level_);
      sum = sum + angle.sin() * RealInterval::from_rational(c_[k], prec);
    }
    return sum;
  }

  unsigned level_;
  std::vector<Rational> c_;
};

struct AlgNumKeyLess {
  bool operator()(const AlgNum& a, const AlgNum& b) const {
    return AlgNum::key_compare(a, b) < 0;
  }
};

// Value comparison helpers for real elements.
inline int compare_real(const AlgNum& a, const AlgNum& b) { return (a - b).sign(); }

inline AlgNum zeta(unsigned n) { return AlgNum::zeta(n); }

// cos(p*pi/q) as an exact real element (of Q(zeta_2q)).
inline AlgNum cos_pi_times(long p, long q) {
  require_internal(q > 0, "cos_pi_times: q > 0");
  unsigned n = static_cast<unsigned>(2 * q);
  AlgNum z = zeta(n).pow(((p % (2 * q)) + 2 * q) % (2 * q));
  return (z + z.conj()).scaled(Rational(1, 2));
}

// sin(p*pi/q) = cos((q-2p)*pi/(2q)), exact in Q(zeta_4q).
inline AlgNum sin_pi_times(long p, long q) {
  require_internal(q > 0, "sin_pi_times: q > 0");
  return cos_pi_times(q - 2 * p, 2 * q);
}

}  // namespace tsurf
