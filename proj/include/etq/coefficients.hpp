#pragma once

#include <string>
#include <string_view>

namespace etq {

/// Coefficient ring of a cohomology computation.
struct Coefficients {
  enum class Kind { mod2, mod2s, two_adic };

  Kind kind = Kind::two_adic;
  int s = 0;  // level for mod2s; 1 for mod2, 0 for two_adic

  static Coefficients mod_two() { return {Kind::mod2, 1}; }
  static Coefficients mod_power(int s);
  static Coefficients two_adic_integers() { return {Kind::two_adic, 0}; }

  /// Accepts "mod2", "mod2s:<s>" (s >= 1) and "2adic"; throws InvalidArgument otherwise.
  static Coefficients parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

}  // namespace etq
