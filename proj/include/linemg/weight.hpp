#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace linemg {

/// Exact non-negative-or-signed rational number used for edge and vertex
/// weights. Always normalized: den > 0 and gcd(|num|, den) == 1.
class Weight {
public:
  constexpr Weight() = default;
  constexpr Weight(std::int64_t integer) : num_(integer) {}
  Weight(std::int64_t num, std::int64_t den);

  /// Accepts "7", "-3", "2.25", "3/4".
  static Weight parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  /// Shortest exact decimal when the denominator divides a power of ten,
  /// otherwise "num/den".
  std::string to_string() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Weight& o);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Weight& b) { return a *= b; }

  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace linemg
