#include "etq/error.hpp"

namespace etq {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_index: return "InvalidIndex";
    case Errc::invalid_dimension: return "InvalidDimension";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::invalid_hom: return "InvalidHom";
    case Errc::out_of_region: return "OutOfRegion";
    case Errc::not_stabilized: return "NotStabilized";
    case Errc::higher_torsion_ambiguity: return "HigherTorsionAmbiguity";
    case Errc::non_homogeneous_relation: return "NonHomogeneousRelation";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace etq
