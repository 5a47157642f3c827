#include "loops/errors.hpp"

namespace loops {

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_entry: return "BadEntry";
    case errc::not_latin: return "NotLatin";
    case errc::no_identity: return "NoIdentity";
    case errc::no_two_sided_inverse: return "NoTwoSidedInverse";
    case errc::no_inverse: return "NoInverse";
    case errc::not_power_associative: return "NotPowerAssociative";
    case errc::squaring_not_bijective: return "SquaringNotBijective";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::empty_degree: return "EmptyDegree";
    case errc::point_out_of_range: return "PointOutOfRange";
    case errc::too_large_to_enumerate: return "TooLargeToEnumerate";
    case errc::not_a_subloop: return "NotASubloop";
    case errc::not_normal: return "NotNormal";
    case errc::ill_defined: return "IllDefined";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_normalized: return "NotNormalized";
    case errc::not_a_unit: return "NotAUnit";
    case errc::not_a_loop: return "NotALoop";
    case errc::bad_k: return "BadK";
    case errc::not_a_group: return "NotAGroup";
    case errc::inconsistent_spec: return "InconsistentSpec";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

loop_error::loop_error(errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(errc code, const std::string& what) { throw loop_error(code, what); }

}  // namespace loops
