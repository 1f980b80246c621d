#include "crystal/error.hpp"
#include "crystal/residue.hpp"

namespace crystal {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::syntax_error: return "SyntaxError";
    case Errc::not_decreasing: return "NotDecreasing";
    case Errc::non_positive_part: return "NonPositivePart";
    case Errc::rank_too_small: return "RankTooSmall";
    case Errc::box_outside: return "BoxOutside";
    case Errc::not_addable: return "NotAddable";
    case Errc::not_removable: return "NotRemovable";
    case Errc::empty_table: return "Empty";
    case Errc::axiom_i_violation: return "AxiomIViolation";
    case Errc::axiom_ii_violation: return "AxiomIIViolation";
    case Errc::horizon_exceeds_table: return "HorizonExceedsTable";
    case Errc::same_box: return "SameBox";
    case Errc::same_diagonal: return "SameDiagonal";
    case Errc::residue_mismatch: return "ResidueMismatch";
    case Errc::residue_out_of_range: return "ResidueOutOfRange";
    case Errc::zero_exponent: return "ZeroExponent";
    case Errc::compatibility_undefined: return "CompatibilityUndefinedForOddN";
    case Errc::not_regular: return "NotRegular";
    case Errc::depth_mismatch: return "DepthMismatch";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

void require_rank(int n) {
  if (n < 3) {
    throw Error(Errc::rank_too_small,
                "rank must be at least 3, got " + std::to_string(n));
  }
}

Residue::Residue(long long value, int rank) : rank_(rank) {
  require_rank(rank);
  long long r = value % rank;
  if (r < 0) r += rank;
  value_ = static_cast<int>(r);
}

}  // namespace crystal
