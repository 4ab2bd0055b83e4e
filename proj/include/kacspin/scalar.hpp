#pragma once
/**
 * Exact scalar arithmetic for the commutative Q-algebra with basis
 * {1, sqrt(2), sqrt(D), sqrt(2D)} where D is a fixed positive integer.
 *
 * Values are kept canonical at all times:
 *  - rational coefficients in lowest terms (GMP mpq_class invariant);
 *  - the square part of D is folded into the coefficients, so the stored D is
 *    square-free; if it collapses to 1 or 2 the radical components are folded
 *    into the rational / sqrt(2) components (e.g. sqrt(72) = 6*sqrt(2));
 *  - D == 0 whenever both sqrt(D) components vanish.
 *
 * With a square-free D >= 3 the four basis elements are linearly independent
 * over Q, so equality is decidable by coefficient comparison and the algebra
 * is the field Q(sqrt(2), sqrt(D)).
 */

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace kacspin {

using Rat = mpq_class;

class Scalar {
 public:
  Scalar() : d_(0) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  Scalar(const Rat& r) : d_(0) {
    c_[0] = r;
    c_[0].canonicalize();  // mpq_class(n, d) does not reduce on its own
  }
  Scalar(long v) : d_(0) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  Scalar(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3, long d);

  static Scalar sqrt2();
  /// sqrt(d) for a positive integer d (normalized, e.g. sqrtD(72) = 6*sqrt2()).
  static Scalar sqrtD(long d);

  const Rat& c0() const { return c_[0]; }
  const Rat& c1() const { return c_[1]; }
  const Rat& c2() const { return c_[2]; }
  const Rat& c3() const { return c_[3]; }
  /// Square-free radicand of the sqrt(D) components; 0 when they vanish.
  long d() const { return d_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Exact sign: -1, 0, or +1.
  int sgn() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Exact division; throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  double to_double() const;
  /// "a/b" for rationals, otherwise "c0 + c1*r2 + c2*rD + c3*r2D [D=d]".
  std::string to_string() const;

 private:
  void normalize();

  std::array<Rat, 4> c_;  // 1, sqrt2, sqrtD, sqrt(2D) coefficients
  long d_;
};

inline Scalar operator*(const Rat& r, const Scalar& s) { return Scalar(r) * s; }
inline Scalar operator*(long r, const Scalar& s) { return Scalar(r) * s; }

/// Exact sign of a + b*sqrt(2).
int sign_quadratic(const Rat& a, const Rat& b, long radicand);

}  // namespace kacspin
