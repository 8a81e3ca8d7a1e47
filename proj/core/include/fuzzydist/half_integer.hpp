#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace fuzzydist {

/// An element of Z/2 stored as its doubled integer value, so spin labels
/// n, n3 and products like n(n+1) - n3(n3+1) stay exact.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(std::int64_t twice) { return HalfInteger(twice); }
  static constexpr HalfInteger integer(std::int64_t value) { return HalfInteger(2 * value); }

  /// Accepts "3/2", "-1/2", "2", "1.5", "-0.5". Throws DomainError otherwise.
  static HalfInteger parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double to_double() const { return static_cast<double>(twice_) / 2.0; }

  /// "p/2" for half-odd values, plain integer otherwise.
  std::string to_string() const;

  constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }
  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
  constexpr HalfInteger& operator+=(HalfInteger o) { twice_ += o.twice_; return *this; }
  constexpr HalfInteger& operator-=(HalfInteger o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  constexpr explicit HalfInteger(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

inline constexpr HalfInteger kOne = HalfInteger::integer(1);
inline constexpr HalfInteger kHalf = HalfInteger::from_twice(1);

/// 4 * a * b, exact.
constexpr std::int64_t four_times_product(HalfInteger a, HalfInteger b) {
  return a.twice() * b.twice();
}

/// 4 * [n(n+1) - m(m+1)], exact. This is the squared ladder coefficient
/// <m+1|J+|m>^2 scaled by four.
constexpr std::int64_t four_ladder_sq(HalfInteger n, HalfInteger m) {
  return n.twice() * (n.twice() + 2) - m.twice() * (m.twice() + 2);
}

/// n(n+1) - m(m+1) as a double, evaluated exactly before conversion.
constexpr double ladder_sq(HalfInteger n, HalfInteger m) {
  return static_cast<double>(four_ladder_sq(n, m)) / 4.0;
}

/// n(n+1) as a double.
constexpr double casimir_value(HalfInteger n) {
  return static_cast<double>(n.twice() * (n.twice() + 2)) / 4.0;
}

}  // namespace fuzzydist

template <>
struct std::hash<fuzzydist::HalfInteger> {
  std::size_t operator()(const fuzzydist::HalfInteger& h) const noexcept {
    return std::hash<std::int64_t>{}(h.twice());
  }
};
