#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/fayers.hpp"
#include "crystal/monomial.hpp"
#include "crystal/partition.hpp"

namespace crystal {

/// Product of Y_{c(b), h(b)-1} over addable boxes and Y_{c(b), h(b)+1}^{-1}
/// over removable boxes.
Monomial psi(const Partition& lambda, int n);

/// psi(lambda + b) == A_{c(b), h(b)}^{-1} psi(lambda). Throws
/// Errc::not_addable.
bool check_bv(const Partition& lambda, BoxCoord b, int n);

/// Outcome of one side of the intertwining check; "0" stands for the null
/// result.
struct SideCheck {
  bool pass = false;
  std::string partition_side;  // psi(x_i^H lambda)
  std::string monomial_side;   // x_i^M psi(lambda)
};

struct IntertwineReport {
  SideCheck e;
  SideCheck f;

  bool passed() const noexcept { return e.pass && f.pass; }
};

/// Compares psi(e_i^H lambda) with e_i^M psi(lambda), and likewise for f,
/// using the horizontal sequence. Throws Errc::not_regular unless lambda is
/// in B^H.
IntertwineReport check_intertwine(const Partition& lambda, Residue i);

struct WhenIllegalReport {
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Checks, for every b in A_i(lambda) and b' in R_i(lambda):
///   (i)   h(b) != h(b') + 1;
///   (ii)  h(b) == h(b') implies c(b') > c(b);
///   (iii) b >_{A^H} b' iff h(b) - 1 >= h(b') + 1;
///   (iv)  if h(b) - 1 == h(b') + 1, any addable c strictly between them in
///         >_{A^H} has h(c) == h(b);
///   (v)   likewise any removable c between them has h(c) == h(b').
/// Orders are taken from the generic comparator. Throws Errc::not_regular.
WhenIllegalReport check_when_illegal(const Partition& lambda, Residue i);

/// S^H_i(lambda) with, for every k, as many "(" of height k+1 cancelled
/// against ")" of height k-1 as possible; the survivors are relabelled by
/// the psi factor they produce ("(" of height h -> Y_{i,h-1}, ")" of height
/// h -> Y_{i,h+1}^{-1}).
struct ReducedBrackets {
  std::vector<BracketToken<Site>> tokens;
  int cancelled_pairs = 0;
};

ReducedBrackets reduce_psi_pairs(const PartitionBrackets& brackets,
                                 Residue i);

/// reduce_psi_pairs(S^H_i(lambda)) equals S^M_i(psi(lambda)) token for
/// token. Throws Errc::not_regular.
bool check_bracket_correspondence(const Partition& lambda, Residue i);

}  // namespace crystal
