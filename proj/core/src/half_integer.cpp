#include "fuzzydist/half_integer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

bool parse_int(std::string_view s, std::int64_t& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void bad(std::string_view text) {
  throw DomainError("not a half-integer: '" + std::string(text) + "'");
}

}  // namespace

HalfInteger HalfInteger::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    if (!parse_int(s.substr(0, slash), num) || !parse_int(s.substr(slash + 1), den)) bad(text);
    if (den == 2) return from_twice(num);
    if (den == 1) return integer(num);
    bad(text);
  }

  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    // Exact decimal: integer part plus a fraction that must be 0 or 5 (trailing zeros allowed).
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    std::int64_t ip = 0;
    if (!whole.empty() && !parse_int(whole, ip)) bad(text);
    if (whole.empty() && frac.empty()) bad(text);
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    std::int64_t twice = 2 * ip;
    if (frac == "5") {
      twice += 1;
    } else if (!frac.empty()) {
      bad(text);
    }
    return from_twice(negative ? -twice : twice);
  }

  std::int64_t v = 0;
  if (!parse_int(s, v)) bad(text);
  return integer(v);
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace fuzzydist
