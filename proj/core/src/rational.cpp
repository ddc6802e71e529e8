#include "roughmap/rational.hpp"

#include <charconv>
#include <string>

#include "roughmap/error.hpp"

namespace roughmap {
namespace {

std::int64_t pow10(int places) {
  std::int64_t p = 1;
  for (int i = 0; i < places; ++i) p *= 10;
  return p;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::Parse, "not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational truncate_decimal(const Rational& value, int places) {
  const std::int64_t scale = pow10(places);
  // Integer division truncates toward zero.
  const std::int64_t scaled = value.numerator() * scale / value.denominator();
  return Rational(scaled, scale);
}

std::string format_decimal(const Rational& value, int places) {
  const std::int64_t scale = pow10(places);
  std::int64_t scaled = value.numerator() * scale / value.denominator();
  std::string out;
  if (scaled < 0) {
    out.push_back('-');
    scaled = -scaled;
  }
  out += std::to_string(scaled / scale);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  return out;
}

std::string format_fraction(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    std::string_view int_part = text.substr(0, dot);
    const bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative) int_part.remove_prefix(1);
    const auto whole = int_part.empty() ? 0 : parse_int(int_part, text);
    const auto digits = parse_int(frac, text);
    const auto scale = pow10(static_cast<int>(frac.size()));
    Rational r(whole * scale + digits, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, text));
}

}  // namespace roughmap
