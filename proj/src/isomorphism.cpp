#include "crystal/isomorphism.hpp"

#include <map>

#include "crystal/arm_sequence.hpp"
#include "crystal/error.hpp"

namespace crystal {

Monomial psi(const Partition& lambda, int n) {
  Monomial m(n);
  for (BoxCoord b : lambda.addable_boxes()) {
    m.multiply({residue(b, n).value(), height(b) - 1}, 1);
  }
  for (BoxCoord b : lambda.removable_boxes()) {
    m.multiply({residue(b, n).value(), height(b) + 1}, -1);
  }
  return m;
}

bool check_bv(const Partition& lambda, BoxCoord b, int n) {
  auto grown = lambda.add_box(b);
  return psi(grown, n) == mult_A(psi(lambda, n), residue(b, n), height(b), -1);
}

namespace {

void require_horizontal_regular(const Partition& lambda, int n,
                                const ArmSequence& horizontal) {
  if (!is_regular(lambda, horizontal)) {
    throw Error(Errc::not_regular, lambda.to_string() +
                                       " is not regular for the horizontal "
                                       "arm sequence with n=" +
                                       std::to_string(n));
  }
}

std::string label(const std::optional<Monomial>& m) {
  return m ? m->to_string() : "0";
}

}  // namespace

IntertwineReport check_intertwine(const Partition& lambda, Residue i) {
  const int n = i.rank();
  const auto horizontal = ArmSequence::horizontal(n);
  require_horizontal_regular(lambda, n, horizontal);

  const Monomial image = psi(lambda, n);
  auto side = [&](std::optional<Partition> moved,
                  std::optional<Monomial> monomial) {
    std::optional<Monomial> mapped;
    if (moved) mapped = psi(*moved, n);
    SideCheck check;
    check.pass = mapped == monomial;
    check.partition_side = label(mapped);
    check.monomial_side = label(monomial);
    return check;
  };

  IntertwineReport report;
  report.e = side(apply_e(lambda, i, horizontal), apply_e(image, i));
  report.f = side(apply_f(lambda, i, horizontal), apply_f(image, i));
  return report;
}

WhenIllegalReport check_when_illegal(const Partition& lambda, Residue i) {
  const int n = i.rank();
  const auto horizontal = ArmSequence::horizontal(n);
  require_horizontal_regular(lambda, n, horizontal);

  const auto addable = lambda.addable_boxes(i);
  const auto removable = lambda.removable_boxes(i);
  auto above = [&](BoxCoord x, BoxCoord y) {
    return succeeds(x, y, horizontal);
  };

  WhenIllegalReport report;
  auto fail = [&](const char* part, BoxCoord b, BoxCoord bp) {
    report.failures.push_back(std::string(part) + " b=" + to_string(b) +
                              " b'=" + to_string(bp) + " in " +
                              lambda.to_string());
  };

  for (BoxCoord b : addable) {
    for (BoxCoord bp : removable) {
      if (height(b) == height(bp) + 1) fail("(i)", b, bp);
      if (height(b) == height(bp) && !(content(bp) > content(b) && above(bp, b)))
        fail("(ii)", b, bp);
      if (above(b, bp) != (height(b) - 1 >= height(bp) + 1)) fail("(iii)", b, bp);
      if (height(b) - 1 != height(bp) + 1) continue;
      for (BoxCoord c : addable) {
        if (c == b) continue;
        if (above(b, c) && above(c, bp) && height(c) != height(b))
          fail("(iv)", b, bp);
      }
      for (BoxCoord c : removable) {
        if (c == bp) continue;
        if (above(b, c) && above(c, bp) && height(c) != height(bp))
          fail("(v)", b, bp);
      }
    }
  }
  return report;
}

ReducedBrackets reduce_psi_pairs(const PartitionBrackets& brackets,
                                 Residue i) {
  // Opens of height k+1 and closes of height k-1 both land on Y_{i,k}.
  std::map<int, int> opens;
  std::map<int, int> closes;
  for (const auto& token : brackets.tokens()) {
    const int h = height(token.payload);
    if (token.side == Bracket::open) {
      ++opens[h - 1];
    } else {
      ++closes[h + 1];
    }
  }
  std::map<int, int> cancel;
  ReducedBrackets out;
  for (const auto& [k, count] : opens) {
    auto it = closes.find(k);
    if (it == closes.end()) continue;
    cancel[k] = std::min(count, it->second);
    out.cancelled_pairs += cancel[k];
  }

  std::map<int, int> dropped_open;
  std::map<int, int> dropped_close;
  for (const auto& token : brackets.tokens()) {
    const int h = height(token.payload);
    const bool is_open = token.side == Bracket::open;
    const int k = is_open ? h - 1 : h + 1;
    auto limit = cancel.find(k);
    if (limit != cancel.end()) {
      int& dropped = is_open ? dropped_open[k] : dropped_close[k];
      if (dropped < limit->second) {
        ++dropped;
        continue;
      }
    }
    out.tokens.push_back({token.side, Site{i.value(), k}});
  }
  return out;
}

bool check_bracket_correspondence(const Partition& lambda, Residue i) {
  const int n = i.rank();
  const auto horizontal = ArmSequence::horizontal(n);
  require_horizontal_regular(lambda, n, horizontal);
  auto reduced = reduce_psi_pairs(bracket_string(lambda, i, horizontal), i);
  return reduced.tokens == bracket_string(psi(lambda, n), i).tokens();
}

}  // namespace crystal
