#include "crystal/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "crystal/error.hpp"

namespace crystal {

namespace {

void require_same_rank(const Monomial& m, Residue i) {
  if (m.rank() != i.rank()) {
    throw Error(Errc::rank_mismatch, "residue and monomial ranks differ");
  }
}

}  // namespace

Monomial::Monomial(int n) : n_(n) { require_rank(n); }

Monomial Monomial::Y(int n, int residue, int k, int power) {
  Monomial m(n);
  if (residue < 0 || residue >= n) {
    throw Error(Errc::residue_out_of_range,
                "residue " + std::to_string(residue) + " outside [0," +
                    std::to_string(n) + ")");
  }
  m.multiply({residue, k}, power);
  return m;
}

int Monomial::exponent(int residue, int k) const {
  auto it = exponents_.find({residue, k});
  return it == exponents_.end() ? 0 : it->second;
}

Monomial& Monomial::multiply(Site site, int power) {
  if (power == 0) return *this;
  auto [it, inserted] = exponents_.try_emplace(site, power);
  if (!inserted && (it->second += power) == 0) exponents_.erase(it);
  return *this;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.n_ != n_) {
    throw Error(Errc::rank_mismatch, "multiplying monomials of different rank");
  }
  for (const auto& [site, power] : other.exponents_) multiply(site, power);
  return *this;
}

std::string Monomial::to_string() const {
  if (exponents_.empty()) return "1";
  std::string out;
  for (const auto& [site, power] : exponents_) {
    if (!out.empty()) out += '*';
    out += "Y(" + std::to_string(site.residue) + "," + std::to_string(site.k) +
           ")";
    if (power != 1) out += "^" + std::to_string(power);
  }
  return out;
}

namespace {

class MonomialLexer {
 public:
  explicit MonomialLexer(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail();
    ++pos_;
  }

  int integer() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail();
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail() const {
    throw Error(Errc::syntax_error, "malformed monomial '" +
                                        std::string(text_) + "' at offset " +
                                        std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial Monomial::parse(std::string_view text, int n) {
  Monomial m(n);
  text = trim(text);
  if (text == "1") return m;

  MonomialLexer lex(text);
  for (;;) {
    lex.expect('Y');
    lex.expect('(');
    int residue = lex.integer();
    lex.expect(',');
    int k = lex.integer();
    lex.expect(')');
    int power = 1;
    if (lex.peek('^')) {
      lex.expect('^');
      power = lex.integer();
      if (power == 0) {
        throw Error(Errc::zero_exponent,
                    "zero exponent in monomial '" + std::string(text) + "'");
      }
    }
    if (residue < 0 || residue >= n) {
      throw Error(Errc::residue_out_of_range,
                  "residue " + std::to_string(residue) + " outside [0," +
                      std::to_string(n) + ")");
    }
    m.multiply({residue, k}, power);
    if (lex.done()) break;
    lex.expect('*');
  }
  return m;
}

Monomial a_monomial(int n, Residue i, int k) {
  Monomial a(n);
  a.multiply({i.value(), k - 1}, 1);
  a.multiply({i.value(), k + 1}, 1);
  a.multiply({(i + 1).value(), k}, -1);
  a.multiply({(i - 1).value(), k}, -1);
  return a;
}

Monomial mult_A(const Monomial& m, Residue i, int k, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("mult_A sign must be +1 or -1");
  }
  require_same_rank(m, i);
  Monomial out = m;
  out.multiply({i.value(), k - 1}, sign);
  out.multiply({i.value(), k + 1}, sign);
  out.multiply({(i + 1).value(), k}, -sign);
  out.multiply({(i - 1).value(), k}, -sign);
  return out;
}

int WeightVector::level() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), 0);
}

WeightVector weight(const Monomial& m) {
  WeightVector w{std::vector<int>(static_cast<std::size_t>(m.rank()), 0)};
  for (const auto& [site, power] : m.exponents()) {
    w.coefficients[static_cast<std::size_t>(site.residue)] += power;
  }
  return w;
}

namespace {

/// (k, u_{i,k}) for one residue, increasing k.
std::vector<std::pair<int, int>> column(const Monomial& m, Residue i) {
  require_same_rank(m, i);
  std::vector<std::pair<int, int>> out;
  for (const auto& [site, power] : m.exponents()) {
    if (site.residue == i.value()) out.emplace_back(site.k, power);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

MonomialStats stats(const Monomial& m, Residue i) {
  const auto col = column(m, i);
  MonomialStats s;

  // eps_{i,L} is constant on each interval (k_{j-1}, k_j] and 0 above the
  // support, so the candidates for p are the support points.
  int suffix = 0;
  for (std::size_t j = col.size(); j-- > 0;) {
    suffix -= col[j].second;
    if (suffix > s.eps) {
      s.eps = suffix;
      s.p = col[j].first;
    }
  }

  // phi_{i,L} is constant on each [k_j, k_{j+1}) and 0 below the support.
  int prefix = 0;
  for (const auto& [k, u] : col) {
    prefix += u;
    if (prefix > s.phi) {
      s.phi = prefix;
      s.q = k;
    }
  }
  return s;
}

MonomialBrackets bracket_string(const Monomial& m, Residue i) {
  require_same_rank(m, i);
  std::vector<BracketToken<Site>> tokens;
  for (const auto& [site, power] : m.exponents()) {
    if (site.residue != i.value()) continue;
    const Bracket side = power > 0 ? Bracket::open : Bracket::close;
    for (int unit = 0; unit < std::abs(power); ++unit) {
      tokens.push_back({side, site});
    }
  }
  return MonomialBrackets(std::move(tokens));
}

std::optional<Monomial> apply_e(const Monomial& m, Residue i,
                                OperatorMode mode) {
  if (mode == OperatorMode::analytic) {
    auto s = stats(m, i);
    if (s.eps == 0) return std::nullopt;
    return mult_A(m, i, *s.p - 1, 1);
  }
  auto brackets = bracket_string(m, i);
  auto at = brackets.rightmost_unmatched_close();
  if (!at) return std::nullopt;
  return mult_A(m, i, brackets.tokens()[*at].payload.k - 1, 1);
}

std::optional<Monomial> apply_f(const Monomial& m, Residue i,
                                OperatorMode mode) {
  if (mode == OperatorMode::analytic) {
    auto s = stats(m, i);
    if (s.phi == 0) return std::nullopt;
    return mult_A(m, i, *s.q + 1, -1);
  }
  auto brackets = bracket_string(m, i);
  auto at = brackets.leftmost_unmatched_open();
  if (!at) return std::nullopt;
  return mult_A(m, i, brackets.tokens()[*at].payload.k + 1, -1);
}

bool is_dominant(const Monomial& m) {
  return std::all_of(m.exponents().begin(), m.exponents().end(),
                     [](const auto& entry) { return entry.second > 0; });
}

bool is_compatible(const Monomial& m) {
  if (m.rank() % 2 != 0) {
    throw Error(Errc::compatibility_undefined,
                "compatibility is only defined for even rank");
  }
  return std::all_of(m.exponents().begin(), m.exponents().end(),
                     [](const auto& entry) {
                       return (entry.first.k - entry.first.residue) % 2 == 0;
                     });
}

}  // namespace crystal
