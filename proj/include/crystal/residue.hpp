#pragma once

#include <compare>
#include <string>

namespace crystal {

/// Throws Errc::rank_too_small unless n >= 3.
void require_rank(int n);

/// An element of Z/nZ, always stored normalized to [0, n).
class Residue {
 public:
  Residue(long long value, int rank);

  int value() const noexcept { return value_; }
  int rank() const noexcept { return rank_; }

  Residue operator+(long long shift) const { return {value_ + shift, rank_}; }
  Residue operator-(long long shift) const { return {value_ - shift, rank_}; }

  bool operator==(const Residue&) const = default;
  auto operator<=>(const Residue&) const = default;

 private:
  int value_;
  int rank_;
};

}  // namespace crystal
