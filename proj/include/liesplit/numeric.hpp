#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace liesplit {

/// Exact rational scalar. All arithmetic in the library is exact; no
/// floating point appears anywhere.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline long to_long(const Rat& x) {
  return mpz_get_si(x.get_num_mpz_t());
}

/// Gaussian rational a + b*i. The quadric computations need i explicitly;
/// everything else stays in Rat.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long v) : re(v), im(0) {}  // NOLINT: implicit by design
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat unit_im() { return GaussRat(Rat(0), Rat(1)); }

  GaussRat operator-() const { return GaussRat(-re, -im); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rat n = o.re * o.re + o.im * o.im;  // |o|^2, nonzero for o != 0
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
};

inline bool is_zero(const GaussRat& x) {
  return is_zero(x.re) && is_zero(x.im);
}

std::string to_string(const Rat& x);
std::string to_string(const GaussRat& x);

inline std::ostream& operator<<(std::ostream& os, const GaussRat& x) {
  return os << to_string(x);
}

using RatVec = std::vector<Rat>;

}  // namespace liesplit
