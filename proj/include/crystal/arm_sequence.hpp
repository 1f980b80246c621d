#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crystal/partition.hpp"

namespace crystal {

/// A violated arm-sequence axiom. Axiom (i) reports only t (u is 0);
/// axiom (ii) reports the pair with t <= u.
struct ArmViolation {
  enum class Axiom { bounds, additivity };
  Axiom axiom;
  int t;
  int u = 0;

  bool operator==(const ArmViolation&) const = default;
};

std::string to_string(const ArmViolation& v);

/// An arm sequence A_1, A_2, ... for rank n. The horizontal sequence is
/// given by formula and answers every t; table-backed sequences answer only
/// up to their length and throw past it.
class ArmSequence {
 public:
  /// A_t = ceil(nt/2) - 1.
  static ArmSequence horizontal(int n);

  /// Validates both axioms over the whole table. Throws Errc::empty_table,
  /// Errc::axiom_i_violation or Errc::axiom_ii_violation.
  static ArmSequence from_values(int n, std::vector<int> values,
                                 std::string descriptor = "table");

  /// A table taken as-is, for exercising the validator.
  static ArmSequence unchecked(int n, std::vector<int> values);

  /// A table of the given length satisfying both axioms, each entry drawn
  /// uniformly from the window the earlier entries leave open.
  static ArmSequence random(int n, int horizon, std::uint64_t seed);

  int rank() const noexcept { return n_; }
  bool is_horizontal() const noexcept { return horizontal_; }
  /// Largest queryable t; nullopt for the formula-backed sequence.
  std::optional<int> horizon() const noexcept;

  /// A_t for t >= 1. Throws Errc::horizon_exceeds_table past a table's end.
  int at(int t) const;

  /// "horizontal", "file:PATH", "random:SEED:T" or "table".
  const std::string& descriptor() const noexcept { return descriptor_; }

 private:
  ArmSequence(int n, bool horizontal, std::vector<int> table,
              std::string descriptor);

  int n_;
  bool horizontal_;
  std::vector<int> table_;
  std::string descriptor_;
};

/// Every violation of the axioms among t, u with t + u <= horizon (and
/// axiom (i) for t <= horizon). Throws Errc::horizon_exceeds_table if the
/// sequence is a table shorter than horizon.
std::vector<ArmViolation> validate_arm(const ArmSequence& arm, int horizon);

/// Reads whitespace-separated integers A_1 A_2 ... without validating them.
std::vector<int> read_arm_values(const std::filesystem::path& path);

/// read_arm_values followed by ArmSequence::from_values.
ArmSequence load_arm_file(const std::filesystem::path& path, int n);

/// Resolves "horizontal", "file:PATH" or "random:SEED:T".
ArmSequence parse_arm_spec(std::string_view spec, int n);

struct IllegalBox {
  BoxCoord box;
  int hook;
  int arm;
  int t;
};

/// True iff hook(b) = n t and arm(b) = A_t for some t >= 1.
bool is_illegal_box(const Partition& lambda, BoxCoord b,
                    const ArmSequence& arm);

/// All A-illegal boxes of lambda, in row-major order.
std::vector<IllegalBox> illegal_boxes(const Partition& lambda,
                                      const ArmSequence& arm);

/// Membership in B^A: no box is A-illegal.
bool is_regular(const Partition& lambda, const ArmSequence& arm);

}  // namespace crystal
