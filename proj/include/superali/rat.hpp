#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "superali/errors.hpp"

namespace superali {

/// Exact arbitrary-precision rational. All coefficient arithmetic in the
/// library goes through this type; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw not_invertible_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical "num/den" form, denominator always present and positive.
inline std::string rat_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Human form: omits "/1".
inline std::string rat_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return rat_fraction_string(r);
}

inline Rational rat_parse(std::string_view s) {
  Rational r;
  if (r.set_str(std::string(s), 10) != 0)
    throw parse_error("bad rational: '" + std::string(s) + "'");
  if (r.get_den() == 0) throw parse_error("zero denominator: '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

inline std::size_t rat_hash(const Rational& r) {
  auto h = [](const mpz_class& z) {
    std::size_t x = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) * 0x9e3779b97f4a7c15ull;
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
      x = x * 0x100000001b3ull ^ mpz_getlimbn(z.get_mpz_t(), i);
    return x;
  };
  return h(r.get_num()) * 31 + h(r.get_den());
}

} // namespace superali
