#include "crystal/arm_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "crystal/error.hpp"

namespace crystal {

std::string to_string(const ArmViolation& v) {
  if (v.axiom == ArmViolation::Axiom::bounds) {
    return "(i) t=" + std::to_string(v.t);
  }
  return "(ii) t=" + std::to_string(v.t) + " u=" + std::to_string(v.u);
}

ArmSequence::ArmSequence(int n, bool horizontal, std::vector<int> table,
                         std::string descriptor)
    : n_(n),
      horizontal_(horizontal),
      table_(std::move(table)),
      descriptor_(std::move(descriptor)) {
  require_rank(n);
}

ArmSequence ArmSequence::horizontal(int n) {
  return ArmSequence(n, true, {}, "horizontal");
}

ArmSequence ArmSequence::unchecked(int n, std::vector<int> values) {
  return ArmSequence(n, false, std::move(values), "table");
}

ArmSequence ArmSequence::from_values(int n, std::vector<int> values,
                                     std::string descriptor) {
  require_rank(n);
  if (values.empty()) {
    throw Error(Errc::empty_table, "arm sequence table is empty");
  }
  const int length = static_cast<int>(values.size());
  ArmSequence seq(n, false, std::move(values), std::move(descriptor));
  auto violations = validate_arm(seq, length);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(v.axiom == ArmViolation::Axiom::bounds
                    ? Errc::axiom_i_violation
                    : Errc::axiom_ii_violation,
                "arm sequence violates axiom " + to_string(v));
  }
  return seq;
}

ArmSequence ArmSequence::random(int n, int horizon, std::uint64_t seed) {
  require_rank(n);
  if (horizon < 1) {
    throw Error(Errc::empty_table, "random arm sequence needs horizon >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(horizon));
  for (int t = 1; t <= horizon; ++t) {
    int lo = t - 1;
    int hi = (n - 1) * t;
    for (int s = 1; s < t; ++s) {
      int sum = values[static_cast<std::size_t>(s - 1)] +
                values[static_cast<std::size_t>(t - s - 1)];
      lo = std::max(lo, sum);
      hi = std::min(hi, sum + 1);
    }
    if (lo > hi) {
      throw std::logic_error("random arm sequence: empty window at t=" +
                             std::to_string(t));
    }
    // Modular reduction keeps the draw identical across standard libraries.
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    values.push_back(lo + static_cast<int>(rng() % span));
  }
  return ArmSequence(n, false, std::move(values),
                     "random:" + std::to_string(seed) + ":" +
                         std::to_string(horizon));
}

std::optional<int> ArmSequence::horizon() const noexcept {
  if (horizontal_) return std::nullopt;
  return static_cast<int>(table_.size());
}

int ArmSequence::at(int t) const {
  if (t < 1) throw std::out_of_range("arm sequence index must be >= 1");
  if (horizontal_) return (n_ * t + 1) / 2 - 1;
  if (t > static_cast<int>(table_.size())) {
    throw Error(Errc::horizon_exceeds_table,
                "arm sequence " + descriptor_ + " has no entry A_" +
                    std::to_string(t) + " (length " +
                    std::to_string(table_.size()) + ")");
  }
  return table_[static_cast<std::size_t>(t - 1)];
}

std::vector<ArmViolation> validate_arm(const ArmSequence& arm, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (auto h = arm.horizon(); h && *h < horizon) {
    throw Error(Errc::horizon_exceeds_table,
                "table of length " + std::to_string(*h) +
                    " cannot be validated to horizon " +
                    std::to_string(horizon));
  }
  const int n = arm.rank();
  std::vector<int> a(static_cast<std::size_t>(horizon) + 1);
  for (int t = 1; t <= horizon; ++t) a[static_cast<std::size_t>(t)] = arm.at(t);

  std::vector<ArmViolation> out;
  for (int t = 1; t <= horizon; ++t) {
    int v = a[static_cast<std::size_t>(t)];
    if (v < t - 1 || v > (n - 1) * t) {
      out.push_back({ArmViolation::Axiom::bounds, t, 0});
    }
  }
  for (int t = 1; 2 * t <= horizon; ++t) {
    for (int u = t; t + u <= horizon; ++u) {
      int sum = a[static_cast<std::size_t>(t)] + a[static_cast<std::size_t>(u)];
      int v = a[static_cast<std::size_t>(t + u)];
      if (v != sum && v != sum + 1) {
        out.push_back({ArmViolation::Axiom::additivity, t, u});
      }
    }
  }
  return out;
}

std::vector<int> read_arm_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io_error, "cannot open arm file " + path.string());
  }
  std::vector<int> values;
  std::string word;
  while (in >> word) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
      throw Error(Errc::syntax_error,
                  "arm file " + path.string() + ": bad integer '" + word + "'");
    }
    values.push_back(value);
  }
  return values;
}

ArmSequence load_arm_file(const std::filesystem::path& path, int n) {
  return ArmSequence::from_values(n, read_arm_values(path),
                                  "file:" + path.string());
}

namespace {

template <class Int>
Int parse_number(std::string_view text, std::string_view spec) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::syntax_error,
                "bad arm specification '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

ArmSequence parse_arm_spec(std::string_view spec, int n) {
  if (spec == "horizontal") return ArmSequence::horizontal(n);
  if (spec.starts_with("file:")) {
    return load_arm_file(std::filesystem::path(spec.substr(5)), n);
  }
  if (spec.starts_with("random:")) {
    auto rest = spec.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(Errc::syntax_error,
                  "bad arm specification '" + std::string(spec) + "'");
    }
    auto seed = parse_number<std::uint64_t>(rest.substr(0, colon), spec);
    auto horizon = parse_number<int>(rest.substr(colon + 1), spec);
    return ArmSequence::random(n, horizon, seed);
  }
  throw Error(Errc::syntax_error,
              "unknown arm specification '" + std::string(spec) +
                  "' (expected horizontal, file:PATH or random:SEED:T)");
}

bool is_illegal_box(const Partition& lambda, BoxCoord b,
                    const ArmSequence& arm) {
  const int h = hook(lambda, b);
  const int n = arm.rank();
  if (h % n != 0) return false;
  return crystal::arm(lambda, b) == arm.at(h / n);
}

std::vector<IllegalBox> illegal_boxes(const Partition& lambda,
                                      const ArmSequence& arm) {
  std::vector<IllegalBox> out;
  const int n = arm.rank();
  const auto columns = lambda.conjugate();
  for (int r = 1; r <= lambda.length(); ++r) {
    const int row = lambda.row_length(r);
    for (int c = 1; c <= row; ++c) {
      int a = row - c;
      int h = a + columns.row_length(c) - r + 1;
      if (h % n != 0) continue;
      int t = h / n;
      if (a == arm.at(t)) out.push_back({{r, c}, h, a, t});
    }
  }
  return out;
}

bool is_regular(const Partition& lambda, const ArmSequence& arm) {
  return illegal_boxes(lambda, arm).empty();
}

}  // namespace crystal
