#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "distrig/errors.hpp"

namespace distrig {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" (optional sign on p, q > 0). No decimal points.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : trim(text.substr(slash + 1));
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ParseError("invalid rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  const Integer q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), q);
  r.canonicalize();
  return r;
}

// "p" when integral, otherwise "p/q".
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline int sign(const Rational& r) { return sgn(r); }

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept {
    const std::size_t a = mpz_get_ui(r.get_num_mpz_t()) ^ (mpz_sgn(r.get_num_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ULL : 0);
    const std::size_t b = mpz_get_ui(r.get_den_mpz_t());
    return a * 0x100000001b3ULL ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  }
};

}  // namespace distrig
