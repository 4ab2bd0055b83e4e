#include "kacspin/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace kacspin {

namespace {

/// Largest f with f*f dividing d, together with the square-free cofactor.
void square_split(long d, long* f, long* sf) {
  *f = 1;
  *sf = d;
  for (long p = 2; p * p <= *sf; ++p) {
    while (*sf % (p * p) == 0) {
      *sf /= p * p;
      *f *= p;
    }
  }
}

}  // namespace

Scalar::Scalar(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3, long d)
    : c_{c0, c1, c2, c3}, d_(d) {
  normalize();
}

void Scalar::normalize() {
  // Restore the lowest-terms invariant first: two-argument mpq_class
  // construction stores numerator and denominator verbatim, and mpq equality
  // is only meaningful on canonical values.
  for (auto& c : c_) c.canonicalize();
  if (c_[2] == 0 && c_[3] == 0) {
    d_ = 0;
    return;
  }
  if (d_ <= 0) throw std::domain_error("Scalar: sqrt(D) component without a positive D");
  long f = 1, sf = d_;
  square_split(d_, &f, &sf);
  if (f != 1) {
    c_[2] *= f;
    c_[3] *= f;
    d_ = sf;
  }
  if (d_ == 1) {  // sqrt(1) = 1, sqrt(2*1) = sqrt2
    c_[0] += c_[2];
    c_[1] += c_[3];
    c_[2] = 0;
    c_[3] = 0;
    d_ = 0;
  } else if (d_ == 2) {  // sqrt(2) and sqrt(4) = 2
    c_[1] += c_[2];
    c_[0] += 2 * c_[3];
    c_[2] = 0;
    c_[3] = 0;
    d_ = 0;
  }
  if (c_[2] == 0 && c_[3] == 0) d_ = 0;
}

Scalar Scalar::sqrt2() { return Scalar(0, 1, 0, 0, 0); }

Scalar Scalar::sqrtD(long d) {
  if (d <= 0) throw std::domain_error("Scalar::sqrtD: radicand must be positive");
  return Scalar(0, 0, 1, 0, d);
}

bool Scalar::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Scalar::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

namespace {
long merge_d(long a, long b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if (a != b) throw std::domain_error("Scalar: mixing incompatible radicands");
  return a;
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3],
                merge_d(d_, o.d_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3],
                merge_d(d_, o.d_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  // Fast paths: zero and rational-by-anything.
  if (is_zero() || o.is_zero()) return Scalar();
  if (is_rational())
    return Scalar(c_[0] * o.c_[0], c_[0] * o.c_[1], c_[0] * o.c_[2], c_[0] * o.c_[3], o.d_);
  if (o.is_rational())
    return Scalar(o.c_[0] * c_[0], o.c_[0] * c_[1], o.c_[0] * c_[2], o.c_[0] * c_[3], d_);
  const long d = merge_d(d_, o.d_);
  const Rat D(d == 0 ? 0 : d);
  const auto& a = c_;
  const auto& b = o.c_;
  // Basis products: r2*r2=2, rD*rD=D, r2D*r2D=2D, r2*rD=r2D, r2*r2D=2*rD, rD*r2D=D*r2.
  Rat c0 = a[0] * b[0] + 2 * a[1] * b[1] + D * a[2] * b[2] + 2 * D * a[3] * b[3];
  Rat c1 = a[0] * b[1] + a[1] * b[0] + D * (a[2] * b[3] + a[3] * b[2]);
  Rat c2 = a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]);
  Rat c3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  return Scalar(c0, c1, c2, c3, d);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (is_rational()) return Scalar(1 / c_[0]);
  // Multiply by the conjugate flipping sqrt(D), landing in Q(sqrt2); then by the
  // conjugate flipping sqrt(2), landing in Q.
  Scalar conj_d(c_[0], c_[1], -c_[2], -c_[3], d_);
  Scalar p1 = *this * conj_d;  // in Q(sqrt2)
  Scalar conj_r(p1.c_[0], -p1.c_[1], 0, 0, 0);
  Scalar p2 = p1 * conj_r;  // rational
  if (!p2.is_rational() || p2.c_[0] == 0)
    throw std::logic_error("Scalar::inverse: norm computation failed");
  return conj_d * conj_r * Scalar(1 / p2.c_[0]);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2] && c_[3] == o.c_[3] &&
         d_ == o.d_;
}

int sign_quadratic(const Rat& a, const Rat& b, long radicand) {
  // sign of a + b*sqrt(radicand), radicand >= 2
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with radicand*b^2
  Rat lhs = a * a, rhs = radicand * b * b;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

int Scalar::sgn() const {
  if (is_zero()) return 0;
  if (d_ == 0) return sign_quadratic(c_[0], c_[1], 2);
  // x + y*sqrt(D) with x = c0 + c1*sqrt2, y = c2 + c3*sqrt2.
  const int sx = sign_quadratic(c_[0], c_[1], 2);
  const int sy = sign_quadratic(c_[2], c_[3], 2);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // compare x^2 with D*y^2 inside Q(sqrt2)
  Scalar x(c_[0], c_[1], 0, 0, 0);
  Scalar y(c_[2], c_[3], 0, 0, 0);
  Scalar diff = x * x - Rat(d_) * y * y;
  const int sd = sign_quadratic(diff.c0(), diff.c1(), 2);
  if (sd == 0) return 0;
  return (sd > 0) ? sx : sy;
}

double Scalar::to_double() const {
  double v = c_[0].get_d() + c_[1].get_d() * 1.4142135623730951;
  if (d_ != 0) {
    double rd = std::sqrt(static_cast<double>(d_));
    v += c_[2].get_d() * rd + c_[3].get_d() * rd * 1.4142135623730951;
  }
  return v;
}

std::string Scalar::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::string s = c_[0].get_str();
  s += " + " + c_[1].get_str() + "*r2";
  if (d_ != 0) {
    s += " + " + c_[2].get_str() + "*rD + " + c_[3].get_str() + "*r2D [D=" +
         std::to_string(d_) + "]";
  }
  return s;
}

}  // namespace kacspin
