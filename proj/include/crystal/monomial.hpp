#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crystal/bracket.hpp"
#include "crystal/residue.hpp"

namespace crystal {

/// The index (i, k) of a variable Y_{i,k}.
struct Site {
  int residue;
  int k;

  bool operator==(const Site&) const = default;
};

/// Decreasing k, then increasing residue: the printing order.
struct SiteOrder {
  bool operator()(Site a, Site b) const noexcept {
    if (a.k != b.k) return a.k > b.k;
    return a.residue < b.residue;
  }
};

/// A Laurent monomial in the Y_{i,k}. No stored exponent is zero.
class Monomial {
 public:
  using Exponents = std::map<Site, int, SiteOrder>;

  /// The constant monomial 1.
  explicit Monomial(int n);

  /// Y_{i,k}^power.
  static Monomial Y(int n, int residue, int k, int power = 1);

  /// Grammar: term ('*' term)*, term = 'Y(' RES ',' INT ')' ('^' INT)?,
  /// or "1" for the empty product. Throws Errc::syntax_error,
  /// Errc::residue_out_of_range, Errc::zero_exponent.
  static Monomial parse(std::string_view text, int n);

  /// Canonical text in SiteOrder, "1" when constant.
  std::string to_string() const;

  int rank() const noexcept { return n_; }
  const Exponents& exponents() const noexcept { return exponents_; }
  bool is_constant() const noexcept { return exponents_.empty(); }

  int exponent(int residue, int k) const;

  /// Multiplies in Y_{i,k}^power, cancelling to zero when needed.
  Monomial& multiply(Site site, int power);
  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) {
    return lhs *= rhs;
  }

  bool operator==(const Monomial& other) const = default;

 private:
  int n_;
  Exponents exponents_;
};

/// A_{i,k} = Y_{i,k-1} Y_{i,k+1} Y_{i+1,k}^{-1} Y_{i-1,k}^{-1}.
Monomial a_monomial(int n, Residue i, int k);

/// m * A_{i,k}^sign, sign in {+1, -1}.
Monomial mult_A(const Monomial& m, Residue i, int k, int sign);

/// Coefficients of Lambda_0 ... Lambda_{n-1}.
struct WeightVector {
  std::vector<int> coefficients;

  int operator[](int residue) const {
    return coefficients.at(static_cast<std::size_t>(residue));
  }
  int level() const;
  bool operator==(const WeightVector&) const = default;
};

WeightVector weight(const Monomial& m);

struct MonomialStats {
  int eps = 0;
  int phi = 0;
  /// Largest L where eps_{i,L} attains eps; set iff eps > 0.
  std::optional<int> p;
  /// Smallest L where phi_{i,L} attains phi; set iff phi > 0.
  std::optional<int> q;
};

MonomialStats stats(const Monomial& m, Residue i);

enum class OperatorMode {
  /// Through the partial sums eps_{i,L} and phi_{i,L}.
  analytic,
  /// Through the bracket string S_i(m).
  bracket,
};

using MonomialBrackets = BracketString<Site>;

/// "(" per unit of positive exponent of Y_{i,k}, ")" per unit of negative
/// exponent, ordered by decreasing k.
MonomialBrackets bracket_string(const Monomial& m, Residue i);

std::optional<Monomial> apply_e(const Monomial& m, Residue i,
                                OperatorMode mode = OperatorMode::bracket);
std::optional<Monomial> apply_f(const Monomial& m, Residue i,
                                OperatorMode mode = OperatorMode::bracket);

bool is_dominant(const Monomial& m);
/// Only defined for even n. Throws Errc::compatibility_undefined otherwise.
bool is_compatible(const Monomial& m);

}  // namespace crystal
