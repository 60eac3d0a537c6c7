#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "liesplit/numeric.hpp"

namespace liesplit {

/// Derive a stream seed from a base seed and a textual tag (case key,
/// sweep name, ...). FNV-1a over the tag, mixed with the base and an index.
/// Keeps parallel sweeps reproducible: every case owns its stream.
inline std::uint64_t mix_seed(std::uint64_t base, std::string_view tag,
                              std::uint64_t k = 0) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  h ^= base + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= k * 0xbf58476d1ce4e5b9ull;
  h ^= h >> 29;
  return h;
}

/// Deterministic generator. mt19937_64 output is pinned by the standard;
/// the int mappings below avoid std distributions, whose streams are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    // modulo with rejection of the biased tail
    const std::uint64_t lim = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= lim);
    return v % n;
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Small random rational; nonzero numerator by default.
  Rat rational(long max_num = 9, long max_den = 4, bool nonzero = true) {
    long num = range(-max_num, max_num);
    if (nonzero)
      while (num == 0) num = range(-max_num, max_num);
    long den = range(1, max_den);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  GaussRat gaussian(long max_num = 4, long max_den = 2, bool nonzero = true) {
    Rat re = rational(max_num, max_den, false);
    Rat im = rational(max_num, max_den, false);
    if (nonzero)
      while (is_zero(re) && is_zero(im)) {
        re = rational(max_num, max_den, false);
        im = rational(max_num, max_den, false);
      }
    return GaussRat(re, im);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace liesplit
