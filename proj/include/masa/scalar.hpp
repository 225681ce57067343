#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace masa {

/// Exact Gaussian rational a + b*i with mpq components.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(mpq_class r) : re(std::move(r)), im(0) { re.canonicalize(); }
  GaussianRational(mpq_class r, mpq_class i)
      : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// |z|^2, exact.
  mpq_class abs2() const { return re * re + im * im; }

  double abs() const { return std::sqrt(abs2().get_d()); }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  GaussianRational inverse() const {
    mpq_class n = abs2();
    return {re / n, -im / n};
  }

  std::string str() const {
    if (im == 0) return re.get_str();
    std::string imag = im == 1 ? "i" : im == -1 ? "-i" : im.get_str() + "i";
    if (re == 0) return imag;
    return re.get_str() + (im > 0 ? "+" : "") + imag;
  }
};

}  // namespace masa
