#pragma once

#include <stdexcept>
#include <string>

namespace loops {

// Every failure mode the library reports deliberately.  Tests match on the
// code, messages are for humans.
enum class errc {
  // table validation
  bad_entry,
  not_latin,
  no_identity,
  // inverses / powers
  no_two_sided_inverse,
  no_inverse,
  not_power_associative,
  squaring_not_bijective,
  // permutation groups
  degree_mismatch,
  empty_degree,
  point_out_of_range,
  too_large_to_enumerate,
  // subloops / quotients
  not_a_subloop,
  not_normal,
  ill_defined,
  // constructions
  dimension_mismatch,
  not_normalized,
  not_a_unit,
  not_a_loop,
  bad_k,
  // searches
  not_a_group,
  inconsistent_spec,
  // file handling
  io_error,
};

const char* errc_name(errc c);

class loop_error : public std::runtime_error {
 public:
  loop_error(errc code, const std::string& what);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

}  // namespace loops
