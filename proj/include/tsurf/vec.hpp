#pragma once

#include <cmath>
#include <cstdlib>

#include "tsurf/algnum.hpp"

namespace tsurf {

template <class S>
struct Vec2 {
  S x{};
  S y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator*(const S& s, const Vec2& v) { return {s * v.x, s * v.y}; }
};

template <class S>
S cross(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class S>
S dot(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class S>
S norm_sq(const Vec2<S>& v) {
  return v.x * v.x + v.y * v.y;
}

// Exact planar vectors double as complex numbers over the real subfield.
using ExactVec = Vec2<AlgNum>;

inline ExactVec cmul(const ExactVec& a, const ExactVec& b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

inline ExactVec cconj(const ExactVec& a) { return {a.x, -a.y}; }

inline ExactVec cdiv(const ExactVec& a, const ExactVec& b) {
  AlgNum n = norm_sq(b);
  if (n.is_zero()) fail(ErrorCode::DivisionByZero, "complex division by zero");
  ExactVec w = cmul(a, cconj(b));
  AlgNum inv = n.inverse();
  return {w.x * inv, w.y * inv};
}

// Exact kernel: all predicates are decided exactly over the cyclotomic field.
struct ExactKernel {
  using Scalar = AlgNum;

  Scalar from_int(long v) const { return AlgNum(v); }
  Scalar from_rational(const Rational& q) const { return AlgNum(q); }
  double to_double(const Scalar& s) const { return s.to_double(); }

  int sign(const Scalar& s) const { return s.sign(); }
  int cmp(const Scalar& a, const Scalar& b) const { return (a - b).sign(); }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
  bool is_zero(const Scalar& s) const { return s.is_zero(); }

  int cross_sign(const Vec2<Scalar>& u, const Vec2<Scalar>& v) const {
    return cross(u, v).sign();
  }
  int dot_sign(const Vec2<Scalar>& u, const Vec2<Scalar>& v) const {
    return dot(u, v).sign();
  }
  int orient(const Vec2<Scalar>& a, const Vec2<Scalar>& b, const Vec2<Scalar>& c) const {
    return cross_sign(b - a, c - a);
  }
  bool eq_point(const Vec2<Scalar>& p, const Vec2<Scalar>& q) const {
    return p.x == q.x && p.y == q.y;
  }

  // Sign of the incircle determinant: > 0 when d lies strictly inside the
  // circumcircle of the counterclockwise triangle (a, b, c).
  int incircle(const Vec2<Scalar>& a, const Vec2<Scalar>& b, const Vec2<Scalar>& c,
               const Vec2<Scalar>& d) const {
    Vec2<Scalar> p = a - d, q = b - d, r = c - d;
    AlgNum pl = norm_sq(p), ql = norm_sq(q), rl = norm_sq(r);
    AlgNum det = pl * cross(q, r) - ql * cross(p, r) + rl * cross(p, q);
    return det.sign();
  }
};

// Floating kernel: double coordinates, predicates decided up to a relative
// tolerance eps (magnitude-aware, so large coordinates stay usable).
struct FloatKernel {
  using Scalar = double;
  double eps = 1e-9;

  Scalar from_int(long v) const { return static_cast<double>(v); }
  Scalar from_rational(const Rational& q) const { return q.get_d(); }
  double to_double(const Scalar& s) const { return s; }

  int fuzzy_sign(double value, double magnitude) const {
    double tol = eps * std::max(magnitude, 1e-300);
    if (value > tol) return 1;
    if (value < -tol) return -1;
    return 0;
  }

  int sign(double s) const { return fuzzy_sign(s, 1.0); }
  int cmp(double a, double b) const {
    return fuzzy_sign(a - b, std::max(std::abs(a), std::abs(b)));
  }
  bool eq(double a, double b) const { return cmp(a, b) == 0; }
  bool is_zero(double s) const { return sign(s) == 0; }

  int cross_sign(const Vec2<double>& u, const Vec2<double>& v) const {
    double d = u.x * v.y - u.y * v.x;
    double mag = std::abs(u.x * v.y) + std::abs(u.y * v.x);
    return fuzzy_sign(d, mag);
  }
  int dot_sign(const Vec2<double>& u, const Vec2<double>& v) const {
    double d = u.x * v.x + u.y * v.y;
    double mag = std::abs(u.x * v.x) + std::abs(u.y * v.y);
    return fuzzy_sign(d, mag);
  }
  int orient(const Vec2<double>& a, const Vec2<double>& b, const Vec2<double>& c) const {
    return cross_sign(b - a, c - a);
  }
  bool eq_point(const Vec2<double>& p, const Vec2<double>& q) const {
    double scale = std::max({std::abs(p.x), std::abs(p.y), std::abs(q.x), std::abs(q.y), 1.0});
    return std::abs(p.x - q.x) <= eps * scale && std::abs(p.y - q.y) <= eps * scale;
  }

  int incircle(const Vec2<double>& a, const Vec2<double>& b, const Vec2<double>& c,
               const Vec2<double>& d) const {
    Vec2<double> p = a - d, q = b - d, r = c - d;
    double pl = norm_sq(p), ql = norm_sq(q), rl = norm_sq(r);
    double det = pl * (q.x * r.y - q.y * r.x) - ql * (p.x * r.y - p.y * r.x) +
                 rl * (p.x * q.y - p.y * q.x);
    double mag = std::abs(pl) * (std::abs(q.x * r.y) + std::abs(q.y * r.x)) +
                 std::abs(ql) * (std::abs(p.x * r.y) + std::abs(p.y * r.x)) +
                 std::abs(rl) * (std::abs(p.x * q.y) + std::abs(p.y * q.x));
    return fuzzy_sign(det, mag);
  }
};

template <class K>
Vec2<double> approx_vec(const K& k, const Vec2<typename K::Scalar>& v) {
  return {k.to_double(v.x), k.to_double(v.y)};
}

template <class K>
double approx_length(const K& k, const typename K::Scalar& sq) {
  return std::sqrt(std::max(0.0, k.to_double(sq)));
}

}  // namespace tsurf
