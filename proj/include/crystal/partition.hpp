#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crystal/residue.hpp"

namespace crystal {

/// Cell address in a Ferrers diagram. Rows and columns are 1-based; the box
/// center sits at x = row - 1/2, y = col - 1/2.
struct BoxCoord {
  int row = 1;
  int col = 1;

  bool operator==(const BoxCoord&) const = default;
  auto operator<=>(const BoxCoord&) const = default;
};

/// y - x of the box center.
inline int content(BoxCoord b) { return b.col - b.row; }

/// x + y of the box center.
inline int height(BoxCoord b) { return b.row + b.col - 1; }

/// The color of a box: its content modulo n.
Residue residue(BoxCoord b, int n);

std::string to_string(BoxCoord b);

/// A weakly decreasing sequence of positive integers. Immutable; all
/// modifiers return a fresh value.
class Partition {
 public:
  Partition() = default;

  /// Throws Errc::not_decreasing or Errc::non_positive_part.
  explicit Partition(std::vector<int> parts);

  /// Parses the bracket form "[a,b,c]".
  static Partition parse(std::string_view text);

  /// Canonical text: "[a,b,c]" without spaces, "[]" when empty.
  std::string to_string() const;

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Length of a 1-based row; 0 for rows past the end.
  int row_length(int row) const noexcept;
  /// Length of a 1-based column; 0 for columns past the first row.
  int column_length(int col) const noexcept;

  bool contains(BoxCoord b) const noexcept;

  Partition conjugate() const;

  /// A(lambda): one box per row that can grow, plus the new-row box.
  /// Sorted by row ascending.
  std::vector<BoxCoord> addable_boxes() const;
  /// R(lambda): the last box of every row strictly longer than the next.
  /// Sorted by row ascending.
  std::vector<BoxCoord> removable_boxes() const;

  std::vector<BoxCoord> addable_boxes(Residue color) const;
  std::vector<BoxCoord> removable_boxes(Residue color) const;

  bool is_addable(BoxCoord b) const noexcept;
  bool is_removable(BoxCoord b) const noexcept;

  Partition add_box(BoxCoord b) const;
  Partition remove_box(BoxCoord b) const;

  bool operator==(const Partition& other) const noexcept {
    return parts_ == other.parts_;
  }
  auto operator<=>(const Partition& other) const noexcept {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Number of boxes strictly right of b in its row. Throws Errc::box_outside.
int arm(const Partition& lambda, BoxCoord b);
/// Number of boxes strictly below b in its column. Throws Errc::box_outside.
int leg(const Partition& lambda, BoxCoord b);
/// arm + leg + 1. Throws Errc::box_outside.
int hook(const Partition& lambda, BoxCoord b);

/// All partitions of m in reverse lexicographic order ([m] first).
std::vector<Partition> partitions_of(int m);

}  // namespace crystal
