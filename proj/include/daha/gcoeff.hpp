#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace daha {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Gaussian rational a + b*I with exact arbitrary-precision parts.
/// mpq_class keeps denominators positive and in lowest terms once
/// canonicalized; every constructor below guarantees that.
class GCoeff {
 public:
  GCoeff() : re_(0), im_(0) {}
  GCoeff(long n) : re_(n), im_(0) {}
  GCoeff(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw DivisionByZero();
    re_.canonicalize();
  }
  GCoeff(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GCoeff i() { return GCoeff(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GCoeff operator-() const { return GCoeff(-re_, -im_); }

  GCoeff& operator+=(const GCoeff& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GCoeff& operator-=(const GCoeff& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GCoeff& operator*=(const GCoeff& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GCoeff operator+(GCoeff a, const GCoeff& b) { return a += b; }
  friend GCoeff operator-(GCoeff a, const GCoeff& b) { return a -= b; }
  friend GCoeff operator*(GCoeff a, const GCoeff& b) { return a *= b; }

  GCoeff inv() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class n = re_ * re_ + im_ * im_;
    return GCoeff(re_ / n, -im_ / n);
  }
  friend GCoeff operator/(const GCoeff& a, const GCoeff& b) { return a * b.inv(); }

  friend bool operator==(const GCoeff& a, const GCoeff& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GCoeff& a, const GCoeff& b) { return !(a == b); }

  // Total order, used only to pick canonical representatives.
  friend bool operator<(const GCoeff& a, const GCoeff& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  /// "p/q" or "p/q+r/si" (imaginary part suppressed when zero).
  std::string str() const;

 private:
  mpq_class re_, im_;
};

inline std::string GCoeff::str() const {
  auto rat = [](const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
  };
  if (sgn(im_) == 0) return rat(re_);
  std::string s = rat(re_);
  if (sgn(im_) >= 0) s += "+";
  return s + rat(im_) + "i";
}

}  // namespace daha
