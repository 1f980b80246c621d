#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

enum class Errc {
  syntax_error,
  not_decreasing,
  non_positive_part,
  rank_too_small,
  box_outside,
  not_addable,
  not_removable,
  empty_table,
  axiom_i_violation,
  axiom_ii_violation,
  horizon_exceeds_table,
  same_box,
  same_diagonal,
  residue_mismatch,
  residue_out_of_range,
  zero_exponent,
  compatibility_undefined,
  not_regular,
  depth_mismatch,
  rank_mismatch,
  io_error,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace crystal
