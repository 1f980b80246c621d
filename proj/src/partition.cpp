#include "crystal/partition.hpp"

#include <cctype>
#include <charconv>

#include "crystal/error.hpp"

namespace crystal {

Residue residue(BoxCoord b, int n) { return Residue(content(b), n); }

std::string to_string(BoxCoord b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw Error(Errc::non_positive_part,
                  "part " + std::to_string(i + 1) + " is not positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(Errc::not_decreasing,
                  "parts increase at position " + std::to_string(i + 1));
    }
    size_ += parts_[i];
  }
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

[[noreturn]] void syntax(std::string_view text, std::size_t pos) {
  throw Error(Errc::syntax_error, "malformed partition '" + std::string(text) +
                                      "' at offset " + std::to_string(pos));
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '[') syntax(text, pos);
  ++pos;
  skip_space(text, pos);

  std::vector<int> parts;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip_space(text, pos);
      int value = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      if (first != last && *first == '+') syntax(text, pos);
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{}) syntax(text, pos);
      pos += static_cast<std::size_t>(ptr - first);
      parts.push_back(value);
      skip_space(text, pos);
      if (pos >= text.size()) syntax(text, pos);
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] != ']') syntax(text, pos);
      ++pos;
      break;
    }
  }
  skip_space(text, pos);
  if (pos != text.size()) syntax(text, pos);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

int Partition::row_length(int row) const noexcept {
  if (row < 1 || row > length()) return 0;
  return parts_[static_cast<std::size_t>(row - 1)];
}

int Partition::column_length(int col) const noexcept {
  if (col < 1) return 0;
  int count = 0;
  for (int p : parts_) {
    if (p < col) break;
    ++count;
  }
  return count;
}

bool Partition::contains(BoxCoord b) const noexcept {
  return b.row >= 1 && b.col >= 1 && b.col <= row_length(b.row);
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  int first = row_length(1);
  cols.reserve(static_cast<std::size_t>(first));
  for (int c = 1; c <= first; ++c) cols.push_back(column_length(c));
  return Partition(std::move(cols));
}

std::vector<BoxCoord> Partition::addable_boxes() const {
  std::vector<BoxCoord> out;
  for (int r = 1; r <= length(); ++r) {
    if (r == 1 || row_length(r - 1) > row_length(r)) {
      out.push_back({r, row_length(r) + 1});
    }
  }
  out.push_back({length() + 1, 1});
  return out;
}

std::vector<BoxCoord> Partition::removable_boxes() const {
  std::vector<BoxCoord> out;
  for (int r = 1; r <= length(); ++r) {
    if (row_length(r) > row_length(r + 1)) out.push_back({r, row_length(r)});
  }
  return out;
}

namespace {

std::vector<BoxCoord> filter_color(std::vector<BoxCoord> boxes, Residue color) {
  std::erase_if(boxes, [&](BoxCoord b) {
    return residue(b, color.rank()) != color;
  });
  return boxes;
}

}  // namespace

std::vector<BoxCoord> Partition::addable_boxes(Residue color) const {
  return filter_color(addable_boxes(), color);
}

std::vector<BoxCoord> Partition::removable_boxes(Residue color) const {
  return filter_color(removable_boxes(), color);
}

bool Partition::is_addable(BoxCoord b) const noexcept {
  if (b.row < 1 || b.row > length() + 1) return false;
  if (b.col != row_length(b.row) + 1) return false;
  return b.row == 1 || row_length(b.row - 1) >= b.col;
}

bool Partition::is_removable(BoxCoord b) const noexcept {
  if (b.row < 1 || b.row > length()) return false;
  return b.col == row_length(b.row) && row_length(b.row + 1) < b.col;
}

Partition Partition::add_box(BoxCoord b) const {
  if (!is_addable(b)) {
    throw Error(Errc::not_addable, "box " + crystal::to_string(b) +
                                       " cannot be added to " + to_string());
  }
  Partition out = *this;
  if (b.row > length()) {
    out.parts_.push_back(1);
  } else {
    ++out.parts_[static_cast<std::size_t>(b.row - 1)];
  }
  ++out.size_;
  return out;
}

Partition Partition::remove_box(BoxCoord b) const {
  if (!is_removable(b)) {
    throw Error(Errc::not_removable, "box " + crystal::to_string(b) +
                                         " cannot be removed from " +
                                         to_string());
  }
  Partition out = *this;
  auto& part = out.parts_[static_cast<std::size_t>(b.row - 1)];
  if (--part == 0) out.parts_.pop_back();
  --out.size_;
  return out;
}

namespace {

void require_inside(const Partition& lambda, BoxCoord b) {
  if (!lambda.contains(b)) {
    throw Error(Errc::box_outside, "box " + to_string(b) + " is not in " +
                                       lambda.to_string());
  }
}

}  // namespace

int arm(const Partition& lambda, BoxCoord b) {
  require_inside(lambda, b);
  return lambda.row_length(b.row) - b.col;
}

int leg(const Partition& lambda, BoxCoord b) {
  require_inside(lambda, b);
  return lambda.column_length(b.col) - b.row;
}

int hook(const Partition& lambda, BoxCoord b) {
  return arm(lambda, b) + leg(lambda, b) + 1;
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> prefix;
  extend(m, m, prefix, out);
  return out;
}

}  // namespace crystal
