#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crystal {

enum class Bracket : char { open = '(', close = ')' };

template <class Payload>
struct BracketToken {
  Bracket side;
  Payload payload;

  bool operator==(const BracketToken&) const = default;
};

/// An ordered bracket string with its cancellation. A ")" cancels the
/// nearest uncancelled "(" to its left; what survives reads ")...)(...(".
template <class Payload>
class BracketString {
 public:
  BracketString() = default;

  explicit BracketString(std::vector<BracketToken<Payload>> tokens)
      : tokens_(std::move(tokens)), partner_(tokens_.size()) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].side == Bracket::open) {
        open.push_back(i);
      } else if (!open.empty()) {
        partner_[i] = open.back();
        partner_[open.back()] = i;
        open.pop_back();
      }
    }
  }

  const std::vector<BracketToken<Payload>>& tokens() const noexcept {
    return tokens_;
  }
  std::size_t size() const noexcept { return tokens_.size(); }

  std::optional<std::size_t> partner(std::size_t index) const {
    return partner_.at(index);
  }
  bool matched(std::size_t index) const { return partner_.at(index).has_value(); }

  /// Number of uncancelled ")".
  int eps() const noexcept { return count_unmatched(Bracket::close); }
  /// Number of uncancelled "(".
  int phi() const noexcept { return count_unmatched(Bracket::open); }

  /// Position of the first uncancelled ")" read from the right.
  std::optional<std::size_t> rightmost_unmatched_close() const noexcept {
    for (std::size_t i = tokens_.size(); i-- > 0;) {
      if (tokens_[i].side == Bracket::close && !partner_[i]) return i;
    }
    return std::nullopt;
  }

  /// Position of the first uncancelled "(" read from the left.
  std::optional<std::size_t> leftmost_unmatched_open() const noexcept {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].side == Bracket::open && !partner_[i]) return i;
    }
    return std::nullopt;
  }

  /// Brackets separated by single spaces, e.g. ") ( ( ( )".
  std::string to_string() const {
    std::string out;
    for (const auto& token : tokens_) {
      if (!out.empty()) out += ' ';
      out += static_cast<char>(token.side);
    }
    return out;
  }

 private:
  int count_unmatched(Bracket side) const noexcept {
    int count = 0;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].side == side && !partner_[i]) ++count;
    }
    return count;
  }

  std::vector<BracketToken<Payload>> tokens_;
  std::vector<std::optional<std::size_t>> partner_;
};

}  // namespace crystal
