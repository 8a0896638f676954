#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patsemi {

using Int = std::int64_t;

/// Default upper limit on the conductor of any semigroup we build.
inline constexpr Int kDefaultConductorLimit = Int{1} << 20;

/// A numerical semigroup, stored as a membership bitmap over [0, conductor).
///
/// Every integer at or above the conductor is a member. The full set of
/// nonnegative integers is the value with conductor 0 (multiplicity 1,
/// Frobenius number -1, genus 0). Values are immutable once built.
class NumericalSemigroup {
 public:
  /// The full set of nonnegative integers.
  NumericalSemigroup();

  /// Additive closure of `generators`. Throws NotCofinite when their gcd is
  /// not 1, and ConductorTooLarge when the conductor would exceed `limit`.
  static NumericalSemigroup from_generators(std::span<const Int> generators,
                                            Int limit = kDefaultConductorLimit);
  static NumericalSemigroup from_generators(std::initializer_list<Int> generators);

  /// {0} together with every integer >= m.
  static NumericalSemigroup ordinary(Int m);

  /// The semigroup with exactly these gaps. Throws InvalidArgument if the
  /// complement is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const Int> gaps);

  /// Builds from membership flags over [0, bits.size()); everything past the
  /// end counts as a member. Validates all invariants.
  static NumericalSemigroup from_membership(std::vector<std::uint8_t> bits);

  Int conductor() const noexcept { return conductor_; }
  Int frobenius() const noexcept { return conductor_ - 1; }
  Int multiplicity() const noexcept { return multiplicity_; }
  Int genus() const noexcept { return genus_; }
  bool is_full() const noexcept { return conductor_ == 0; }
  bool is_ordinary() const noexcept { return genus_ == multiplicity_ - 1; }

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return bits_[static_cast<std::size_t>(x)] != 0;
  }

  std::vector<Int> gaps() const;
  /// Members in [0, bound).
  std::vector<Int> members_below(Int bound) const;

  /// Members s with s - x not a member. Throws NotMember unless x is a
  /// nonzero member.
  std::vector<Int> apery(Int x) const;

  std::vector<Int> minimal_generators() const;
  /// Minimal generators strictly above the Frobenius number; these all lie
  /// in [conductor, conductor + multiplicity).
  std::vector<Int> minimal_generators_above_frobenius() const;
  bool is_minimal_generator(Int x) const;

  Int embedding_dimension() const;
  bool is_med() const { return embedding_dimension() == multiplicity_; }

  NumericalSemigroup intersect(const NumericalSemigroup& other) const;
  /// Adds the Frobenius number. Throws IsFullSet on the full set.
  NumericalSemigroup adjoin_frobenius() const;
  /// Removes a minimal generator. Throws NotMinimalGenerator otherwise.
  NumericalSemigroup remove_element(Int x) const;
  /// {x : k*x is a member}, for k >= 1.
  NumericalSemigroup quotient(Int k) const;

  /// True when every member of this semigroup belongs to `other`.
  bool is_subset_of(const NumericalSemigroup& other) const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  struct Unchecked {};
  // Every minimal generator lies below this (1 is the only one of the full set).
  Int generator_bound() const noexcept { return conductor_ == 0 ? 2 : conductor_ + multiplicity_; }
  NumericalSemigroup(Unchecked, std::vector<std::uint8_t> bits);

  std::vector<std::uint8_t> bits_;  // length == conductor_
  Int conductor_ = 0;
  Int multiplicity_ = 1;
  Int genus_ = 0;
};

/// Orders by genus, then by minimal generator list.
bool canonical_less(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// `<g1,g2,...>` built from the minimal generators.
std::string format_semigroup(const NumericalSemigroup& s);

/// Accepts `<g1,g2,...>` (also without angle brackets) or `gaps:1,2,3`.
NumericalSemigroup parse_semigroup(std::string_view text);

Int gcd_of(std::span<const Int> values);

}  // namespace patsemi
