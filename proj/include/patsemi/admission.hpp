#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "patsemi/pattern.hpp"
#include "patsemi/semigroup.hpp"

namespace patsemi {

struct SearchLimits {
  /// Largest delta-box volume we are willing to scan.
  std::uint64_t volume_ceiling = 1'000'000'000;
  /// Allow the OpenMP kernel; the serial path is used when false.
  bool parallel = true;
};

/// Finite search space for violations of p in a semigroup.
///
/// A nonincreasing sequence s1 >= ... >= sn >= m is written through its
/// steps d_j = s_j - s_{j+1} (d_n = s_n - m), so that
///
///   p(s) = sum_j sigma_j * d_j + sigma_n * m + a0.
///
/// With every sigma_j >= 0 only sequences with sum_j sigma_j * d_j <= slack,
/// slack = F - sigma_n * m - a0, can produce a gap. That bounds d_j by
/// slack / sigma_j when sigma_j >= 1. A step with sigma_j = 0 does not move
/// the value, and lowering it to the conductor c keeps every shifted entry
/// at or above m + c > F, so capping such steps at c loses no violation.
struct DeltaBox {
  std::vector<Int> sums;    // sigma_1..sigma_n, all >= 0
  std::vector<Int> bounds;  // inclusive upper bound per step
  Int slack = 0;
  Int multiplicity = 1;

  /// prod(bounds[j] + 1), saturated at UINT64_MAX.
  std::uint64_t volume() const noexcept;
};

/// The box for (semigroup, p); requires every partial sum of p to be >= 0.
DeltaBox delta_box(const NumericalSemigroup& s, const Pattern& p);

/// A nonincreasing sequence of nonzero members whose value is a gap.
struct Witness {
  std::vector<Int> sequence;
  Int value = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Exact decision of "s admits p". Runs the OpenMP kernel for large boxes.
/// Throws SearchTooLarge when the box volume exceeds the ceiling.
bool admits(const NumericalSemigroup& s, const Pattern& p, const SearchLimits& limits = {});

/// Single-threaded kernel; same search as `admits`.
bool admits_serial(const NumericalSemigroup& s, const Pattern& p,
                   const SearchLimits& limits = {});

/// Reference scan: walks the delta box in lexicographic order (d_1 most
/// significant) and returns the first violation, or nothing when s admits p.
/// When some partial sum is negative the witness is the classical one: the
/// first j entries equal a member l, the rest equal m, with l the smallest
/// member that sends the value outside s.
std::optional<Witness> violating_sequence(const NumericalSemigroup& s, const Pattern& p,
                                          const SearchLimits& limits = {});

/// Whether x is a minimal generator of s relative to the variety of
/// multiplicity-m semigroups admitting p, i.e. whether s minus {x} is still
/// in that variety.
///
/// Requires p strongly admissible, the multiplicity of s p-admissible, s
/// admitting p and x a nonzero member; throws PreconditionViolated otherwise.
bool is_minimal_v_generator(const NumericalSemigroup& s, const Pattern& p, Int x,
                            const SearchLimits& limits = {});

}  // namespace patsemi
