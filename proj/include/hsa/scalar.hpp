#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "hsa/error.hpp"

namespace hsa {

/// Element of Q(i): exact rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  /// num/den, exact.
  static GaussianRational ratio(long num, long den);
  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussianRational operator+(const GaussianRational& o) const {
    return GaussianRational(re_ + o.re_, im_ + o.im_);
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return GaussianRational(re_ - o.re_, im_ - o.im_);
  }
  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  GaussianRational operator*(const GaussianRational& o) const {
    return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  GaussianRational inverse() const;

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

  std::string str() const;

 private:
  mpq_class re_, im_;
};

/// Laurent polynomial in the formal deformation parameter k with Gaussian
/// rational coefficients.  Zero coefficients are never stored; the zero
/// value is the empty term map.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) {
    if (n != 0) terms_[0] = GaussianRational(n);
  }
  Scalar(GaussianRational c, int kappa_exponent = 0) {
    if (!c.is_zero()) terms_[kappa_exponent] = std::move(c);
  }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(GaussianRational::i()); }
  /// k^exp with unit coefficient.
  static Scalar kappa(int exp = 1) { return Scalar(GaussianRational(1), exp); }
  static Scalar ratio(long num, long den) { return Scalar(GaussianRational::ratio(num, den)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
  }
  bool is_monomial() const { return terms_.size() == 1; }

  const std::map<int, GaussianRational>& terms() const { return terms_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }

  /// Multiplicative inverse of a one-term Scalar.
  Scalar inverse_monomial() const;

  /// Evaluation of the limit k^-1 -> 0: negative exponents are dropped,
  /// positive exponents diverge.
  Scalar classical_limit() const;

  /// Canonical textual form, re-readable by the DSL scalar grammar,
  /// e.g. "-(i/2)*k^-1".
  std::string str() const;

 private:
  std::map<int, GaussianRational> terms_;
};

}  // namespace hsa
