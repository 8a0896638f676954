#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patsemi/semigroup.hpp"

namespace patsemi {

/// A linear pattern a1*x1 + ... + an*xn + a0 with every ai nonzero.
///
/// A semigroup admits the pattern when every evaluation at a nonincreasing
/// sequence of nonzero members is again a member.
class Pattern {
 public:
  Pattern(std::vector<Int> coefficients, Int constant);

  std::span<const Int> coefficients() const noexcept { return coefficients_; }
  Int constant() const noexcept { return constant_; }
  std::size_t length() const noexcept { return coefficients_.size(); }

  /// sigma_j = a1 + ... + aj for j = 1..n.
  std::vector<Int> partial_sums() const;
  Int total() const;

  Int evaluate(std::span<const Int> values) const;

  /// The same linear part with a different constant term.
  Pattern with_constant(Int constant) const { return Pattern(coefficients_, constant); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Int> coefficients_;
  Int constant_;
};

enum class Admissibility { Empty, ExactlyN0, Admissible };

std::string_view to_string(Admissibility a) noexcept;

/// Which semigroups admit p, up to the trichotomy: none, only the full set,
/// or some semigroup other than the full set.
Admissibility classify(const Pattern& p);

/// The multiplicities m >= 1 for which the ordinary semigroup {0, m, ->}
/// admits an admissible pattern.
struct MultiplicityCondition {
  enum class Kind { LowerBounded, All, Interval };
  Kind kind;
  Int low = 1;
  Int high = 0;  // only meaningful for Interval

  bool admits(Int m) const noexcept {
    if (m < 1) return false;
    switch (kind) {
      case Kind::LowerBounded: return m >= low;
      case Kind::All: return true;
      case Kind::Interval: return m >= low && m <= high;
    }
    return false;
  }
  bool empty() const noexcept { return kind == Kind::Interval && high < low; }
  /// Smallest admissible multiplicity, if any.
  std::optional<Int> smallest() const noexcept {
    if (empty()) return std::nullopt;
    return low;
  }
  /// Smallest admissible multiplicity above 1, if any.
  std::optional<Int> smallest_nontrivial() const noexcept {
    if (admits(std::max<Int>(low, 2))) return std::max<Int>(low, 2);
    return std::nullopt;
  }

  friend bool operator==(const MultiplicityCondition&, const MultiplicityCondition&) = default;
};

std::string to_string(const MultiplicityCondition& c);

/// Throws NotAdmissible unless classify(p) is Admissible.
MultiplicityCondition admissible_multiplicities(const Pattern& p);

/// Either a pattern or, when the last variable has been dropped, the bare
/// constant term.
struct DerivedPattern {
  std::optional<Pattern> pattern;
  Int constant = 0;

  bool degenerate() const noexcept { return !pattern.has_value(); }
};

/// p - x1 when a1 > 1; p(0, x1, ..., x_{n-1}) when a1 = 1. Throws NegativeLead
/// when a1 < 1.
DerivedPattern derived_pattern(const Pattern& p);

bool is_strongly_admissible(const Pattern& p);

/// True when p is strongly admissible and m is a p-admissible multiplicity;
/// the setting in which the semigroups of multiplicity m admitting p form a
/// variety.
bool is_variety_setting(const Pattern& p, Int m);

/// Outcome of the check for patterns whose constant is k times the
/// multiplicity.
struct MultipleOfMultiplicity {
  bool applicable = false;
  bool ordinary_admits = false;
};

/// For p = sum ai*xi + k*m with m > 1: when k = -1 or some partial sum equals
/// 1, a multiplicity-m semigroup admits p iff {0, m, ->} does iff every
/// partial sum is nonnegative and sigma_n + k >= 1. Outside that case the
/// ordinary semigroup is tested directly.
MultipleOfMultiplicity multiple_of_multiplicity_check(std::span<const Int> coefficients, Int k,
                                                      Int m);

Pattern med_pattern(Int m);
Pattern gm_pattern(Int q, Int m);
Pattern br_pattern(Int q, Int m);
Pattern config_pattern(Int n);
Pattern arf_pattern();

/// Canonical text such as `x1+x2-1`, `2x1-6`, `-x1+2x2+3`.
std::string format_pattern(const Pattern& p);

/// Accepts `2*x1+x2-3` style text (the `*` is optional) and the machine form
/// `coeffs=1,1;const=-1`.
Pattern parse_pattern(std::string_view text);

}  // namespace patsemi
