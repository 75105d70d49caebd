#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace liectrl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace detail {
inline bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
}  // namespace detail

/// Parses "p" or "p/q" with optional sign; rejects q == 0.
inline std::optional<Rational> parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::is_integer_token(s)) return std::nullopt;
    return Rational(BigInt(std::string(s)));
  }
  const auto num = s.substr(0, slash);
  const auto den = s.substr(slash + 1);
  if (!detail::is_integer_token(num) || !detail::is_integer_token(den)) return std::nullopt;
  BigInt q{std::string(den)};
  if (q == 0) return std::nullopt;
  return Rational(BigInt(std::string(num)), q);
}

}  // namespace liectrl
