#include "crystal/fayers.hpp"

#include <algorithm>

#include "crystal/error.hpp"

namespace crystal {

bool succeeds(BoxCoord b_prime, BoxCoord b, const ArmSequence& arm) {
  if (b_prime == b) {
    throw Error(Errc::same_box, "cannot order box " + to_string(b) +
                                    " against itself");
  }
  const int n = arm.rank();
  const int diff = content(b_prime) - content(b);
  if (diff == 0) {
    throw Error(Errc::same_diagonal, "boxes " + to_string(b_prime) + " and " +
                                         to_string(b) + " share a diagonal");
  }
  if (diff % n != 0) {
    throw Error(Errc::residue_mismatch, "boxes " + to_string(b_prime) +
                                            " and " + to_string(b) +
                                            " have different colors");
  }
  // Orient so the right-hand box has the larger content.
  if (diff > 0) return b_prime.col - b.col > arm.at(diff / n);
  return !(b.col - b_prime.col > arm.at(-diff / n));
}

PartitionBrackets bracket_string(const Partition& lambda, Residue color,
                                 const ArmSequence& arm,
                                 BoxOrdering ordering) {
  if (color.rank() != arm.rank()) {
    throw Error(Errc::rank_mismatch, "residue and arm sequence ranks differ");
  }
  std::vector<BracketToken<BoxCoord>> tokens;
  for (BoxCoord b : lambda.addable_boxes(color)) {
    tokens.push_back({Bracket::open, b});
  }
  for (BoxCoord b : lambda.removable_boxes(color)) {
    tokens.push_back({Bracket::close, b});
  }

  if (ordering == BoxOrdering::automatic && arm.is_horizontal()) {
    std::sort(tokens.begin(), tokens.end(), [](const auto& l, const auto& r) {
      return horizontal_key(l.payload) > horizontal_key(r.payload);
    });
  } else {
    std::sort(tokens.begin(), tokens.end(), [&](const auto& l, const auto& r) {
      return succeeds(l.payload, r.payload, arm);
    });
  }
  return PartitionBrackets(std::move(tokens));
}

std::optional<Partition> apply_e(const Partition& lambda, Residue color,
                                 const ArmSequence& arm) {
  auto brackets = bracket_string(lambda, color, arm);
  auto at = brackets.rightmost_unmatched_close();
  if (!at) return std::nullopt;
  return lambda.remove_box(brackets.tokens()[*at].payload);
}

std::optional<Partition> apply_f(const Partition& lambda, Residue color,
                                 const ArmSequence& arm) {
  auto brackets = bracket_string(lambda, color, arm);
  auto at = brackets.leftmost_unmatched_open();
  if (!at) return std::nullopt;
  return lambda.add_box(brackets.tokens()[*at].payload);
}

EpsPhi eps_phi(const Partition& lambda, Residue color, const ArmSequence& arm) {
  auto brackets = bracket_string(lambda, color, arm);
  return {brackets.eps(), brackets.phi()};
}

}  // namespace crystal
