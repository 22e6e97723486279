#include "etq/coefficients.hpp"

#include <charconv>

#include "etq/error.hpp"

namespace etq {

Coefficients Coefficients::mod_power(int s) {
  if (s < 1) throw Error(Errc::invalid_argument, "coefficient level s must be >= 1, got " + std::to_string(s));
  return {Kind::mod2s, s};
}

Coefficients Coefficients::parse(std::string_view text) {
  if (text == "mod2") return mod_two();
  if (text == "2adic") return two_adic_integers();
  constexpr std::string_view prefix = "mod2s:";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    int s = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty() && s >= 1 && s <= 62)
      return mod_power(s);
  }
  throw Error(Errc::invalid_argument,
              "unknown coefficients '" + std::string(text) + "' (expected mod2, mod2s:<s> with 1 <= s <= 62, or 2adic)");
}

std::string Coefficients::to_string() const {
  switch (kind) {
    case Kind::mod2: return "mod2";
    case Kind::mod2s: return "mod2s:" + std::to_string(s);
    case Kind::two_adic: return "2adic";
  }
  return {};
}

}  // namespace etq
