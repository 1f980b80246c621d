#pragma once

#include <optional>
#include <utility>

#include "crystal/arm_sequence.hpp"
#include "crystal/bracket.hpp"
#include "crystal/partition.hpp"

namespace crystal {

using PartitionBrackets = BracketString<BoxCoord>;

/// Whether b_prime >_A b. The boxes must be distinct and share a color
/// (c(b') - c(b) = n t with t != 0). Throws Errc::same_box,
/// Errc::same_diagonal, Errc::residue_mismatch, or
/// Errc::horizon_exceeds_table when A_|t| is past a table's end.
bool succeeds(BoxCoord b_prime, BoxCoord b, const ArmSequence& arm);

/// Sort key for the horizontal sequence: descending (height, content)
/// reproduces the >_{A^H} order.
inline std::pair<int, int> horizontal_key(BoxCoord b) {
  return {height(b), content(b)};
}

enum class BoxOrdering {
  /// Uses horizontal_key when the arm sequence is the horizontal one.
  automatic,
  /// Always sorts with succeeds().
  generic,
};

/// S^A_i(lambda): "(" per i-addable box and ")" per i-removable box, in
/// decreasing >_A order from left to right, with cancellation applied.
PartitionBrackets bracket_string(const Partition& lambda, Residue color,
                                 const ArmSequence& arm,
                                 BoxOrdering ordering = BoxOrdering::automatic);

/// Removes the box under the first uncancelled ")" from the right.
std::optional<Partition> apply_e(const Partition& lambda, Residue color,
                                 const ArmSequence& arm);

/// Adds the box under the first uncancelled "(" from the left.
std::optional<Partition> apply_f(const Partition& lambda, Residue color,
                                 const ArmSequence& arm);

struct EpsPhi {
  int eps = 0;
  int phi = 0;

  bool operator==(const EpsPhi&) const = default;
};

EpsPhi eps_phi(const Partition& lambda, Residue color, const ArmSequence& arm);

}  // namespace crystal
