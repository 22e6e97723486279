#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etq {

enum class Errc {
  invalid_index,
  invalid_dimension,
  invalid_argument,
  invalid_hom,
  out_of_region,
  not_stabilized,
  higher_torsion_ambiguity,
  non_homogeneous_relation,
  unknown_family,
  parse_error,
};

/// Canonical name of an error kind, e.g. "InvalidDimension".
std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace etq
