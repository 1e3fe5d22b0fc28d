#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/rational.hpp>
#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lojex {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

}  // namespace lojex

namespace Eigen {
template <>
struct NumTraits<lojex::Rational> : GenericNumTraits<lojex::Rational> {
  typedef lojex::Rational Real;
  typedef lojex::Rational NonInteger;
  typedef lojex::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(lojex::Int(0)); }
  static inline Real dummy_precision() { return Real(lojex::Int(0)); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace lojex {

/// Column vectors over the exact scalars. Exponent vectors are plain ints;
/// geometry promotes to Int on entry.
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using ExpVec = Eigen::Matrix<int, Eigen::Dynamic, 1>;

inline Rational ratio(Int num, Int den = 1) { return Rational(std::move(num), std::move(den)); }
inline Rational ratio(long num, long den = 1) { return Rational(Int(num), Int(den)); }

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& q) {
  return to_double(q.numerator()) / to_double(q.denominator());
}

/// Canonical "p/q" form used in all JSON output.
inline std::string to_fraction_string(const Rational& q) {
  return q.numerator().str() + "/" + q.denominator().str();
}

/// Human form: drops the "/1" on integers.
inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return q.numerator().str();
  return to_fraction_string(q);
}

/// Parses "p", "p/q" or a finite decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

/// Complex number with exact rational parts. Coefficient field of every
/// polynomial in the library; floating evaluation converts on demand.
struct ComplexRat {
  Rational re{Int(0)};
  Rational im{Int(0)};

  ComplexRat() = default;
  ComplexRat(Rational r, Rational i = Rational(Int(0))) : re(std::move(r)), im(std::move(i)) {}
  static ComplexRat integer(long v) { return ComplexRat(ratio(v)); }

  bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }
  bool is_real() const { return im.numerator() == 0; }
  ComplexRat conj() const { return ComplexRat(re, -im); }

  friend ComplexRat operator+(const ComplexRat& a, const ComplexRat& b) {
    return ComplexRat(a.re + b.re, a.im + b.im);
  }
  friend ComplexRat operator-(const ComplexRat& a, const ComplexRat& b) {
    return ComplexRat(a.re - b.re, a.im - b.im);
  }
  friend ComplexRat operator*(const ComplexRat& a, const ComplexRat& b) {
    return ComplexRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  ComplexRat operator-() const { return ComplexRat(-re, -im); }
  friend bool operator==(const ComplexRat& a, const ComplexRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRat& a, const ComplexRat& b) { return !(a == b); }

  ComplexRat& operator+=(const ComplexRat& o) { *this = *this + o; return *this; }
  ComplexRat& operator*=(const ComplexRat& o) { *this = *this * o; return *this; }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  ComplexRat pow(int k) const {
    ComplexRat acc = integer(1);
    for (int i = 0; i < k; ++i) acc *= *this;
    return acc;
  }

  /// |a|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  std::string str() const;
};

inline Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) { Int t = a % b; a = std::move(b); b = std::move(t); }
  return a;
}

/// Divides an integer vector by the gcd of its entries; zero vector is left alone.
inline IVec primitive(IVec v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] /= g;
  return v;
}

/// Clears denominators and divides by the content: the primitive integer
/// representative of a rational direction.
inline IVec primitive_direction(const QVec& w) {
  Int lcm = 1;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const Int& d = w[i].denominator();
    lcm = lcm / gcd(lcm, d) * d;
  }
  IVec out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    out[i] = w[i].numerator() * (lcm / w[i].denominator());
  return primitive(std::move(out));
}

inline QVec to_rational_vec(const IVec& v) {
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

inline QVec to_rational_vec(const ExpVec& v) {
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rational(Int(v[i]));
  return out;
}

inline IVec to_int_vec(const ExpVec& v) {
  IVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Int(v[i]);
  return out;
}

inline Rational dot(const QVec& w, const ExpVec& p) {
  Rational acc(Int(0));
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (p[i] != 0) acc += w[i] * Rational(Int(p[i]));
  return acc;
}

inline Int dot(const IVec& w, const IVec& p) {
  Int acc = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) acc += w[i] * p[i];
  return acc;
}

inline Int dot(const IVec& w, const ExpVec& p) {
  Int acc = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (p[i] != 0) acc += w[i] * Int(p[i]);
  return acc;
}

/// Smallest integer strictly greater than q.
inline Int floor_plus_one(const Rational& q) {
  Int fl = q.numerator() / q.denominator();
  if (q.numerator() < 0 && q.numerator() % q.denominator() != 0) fl -= 1;
  return fl + 1;
}

}  // namespace lojex
