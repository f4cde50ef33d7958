#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "twistder/error.hpp"

namespace twistder {

// Parses "p", "-p" or "p/q" into a canonical rational.
inline mpq_class parse_rational(std::string_view text) {
  mpq_class value;
  std::string s(text);
  if (s.empty() || value.set_str(s, 10) != 0) {
    fail(ErrorKind::SpecError, "cannot parse rational '" + s + "'");
  }
  if (value.get_den() == 0) {
    fail(ErrorKind::SpecError, "zero denominator in '" + s + "'");
  }
  value.canonicalize();
  return value;
}

inline std::string rational_string(const mpq_class& q) { return q.get_str(10); }

/// Element of Q(i): exact real and imaginary rational parts, always canonical.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string to_string() const {
    if (sgn(im_) == 0) return rational_string(re_);
    std::string s;
    if (sgn(re_) != 0) s = rational_string(re_) + (sgn(im_) > 0 ? "+" : "");
    if (im_ == 1) return s + "i";
    if (im_ == -1) return s + "-i";
    return s + rational_string(im_) + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& q) {
    return os << q.to_string();
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace twistder
