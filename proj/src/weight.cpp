#include "linemg/weight.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace linemg {

namespace {

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("weight arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Weight make(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Weight(checked(num), checked(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed weight '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Weight::Weight(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("weight with zero denominator");
  if (den < 0) {
    num = checked(-static_cast<__int128>(num));
    den = checked(-static_cast<__int128>(den));
  }
  std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Weight Weight::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty weight");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Weight(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Weight(parse_int(text, text));

  std::string_view int_part = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative || (!int_part.empty() && int_part.front() == '+')) int_part.remove_prefix(1);
  if (frac.empty() || frac.size() > 18) throw std::invalid_argument("malformed weight '" + std::string(text) + "'");
  for (char c : frac) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed weight '" + std::string(text) + "'");
  }
  __int128 scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  __int128 whole = int_part.empty() ? 0 : parse_int(int_part, text);
  if (whole < 0) throw std::invalid_argument("malformed weight '" + std::string(text) + "'");
  __int128 num = whole * scale + parse_int(frac, text);
  return make(negative ? -num : num, scale);
}

std::string Weight::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1 || std::max(twos, fives) > 18) return std::to_string(num_) + "/" + std::to_string(den_);

  int digits = std::max(twos, fives);
  __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  __int128 scaled = static_cast<__int128>(num_) * (scale / den_);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string f = std::to_string(frac);
  f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
  return (negative ? "-" : "") + std::to_string(whole) + "." + f;
}

Weight& Weight::operator+=(const Weight& o) {
  *this = make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
               static_cast<__int128>(den_) * o.den_);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  *this = make(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
               static_cast<__int128>(den_) * o.den_);
  return *this;
}

Weight& Weight::operator*=(const Weight& o) {
  *this = make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

}  // namespace linemg
