#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "patsemi/admission.hpp"
#include "patsemi/pattern.hpp"
#include "patsemi/semigroup.hpp"

namespace patsemi {

/// A submonoid of the nonnegative integers of the form scale * core, where
/// core is a numerical semigroup. This covers every finitely generated
/// submonoid, and in particular every closure computed by `v_closure`.
struct SubmonoidRep {
  Int scale = 1;
  NumericalSemigroup core;

  bool contains(Int x) const noexcept {
    return x >= 0 && x % scale == 0 && core.contains(x / scale);
  }
  /// True when the monoid is itself a numerical semigroup.
  bool is_cofinite() const noexcept { return scale == 1; }

  friend bool operator==(const SubmonoidRep&, const SubmonoidRep&) = default;
};

/// Smallest submonoid containing A and m that is closed under p on
/// nonincreasing sequences of nonzero elements; equivalently the
/// intersection of all multiplicity-m semigroups admitting p that contain A.
///
/// Saturates: while some sequence escapes, adjoin its value and re-close.
/// Throws PreconditionViolated outside the variety setting and
/// ElementBelowMultiplicity for elements of A in [1, m).
SubmonoidRep v_closure(const Pattern& p, Int m, std::span<const Int> elements,
                       const SearchLimits& limits = {});

/// The variety-minimal generators of s, i.e. the x for which s minus {x}
/// still belongs to the variety. The multiplicity is never one of them.
std::vector<Int> minimal_v_generating_system(const NumericalSemigroup& s, const Pattern& p,
                                             const SearchLimits& limits = {});

/// Membership sweep over every nonzero member below conductor +
/// multiplicity, testing "s minus {x} is a semigroup of multiplicity m
/// admitting p" from scratch. `discrepancies` lists members on which this
/// disagrees with `is_minimal_v_generator`.
struct GeneratorSweep {
  std::vector<Int> generators;
  std::vector<Int> discrepancies;
};
GeneratorSweep sweep_minimal_v_generators(const NumericalSemigroup& s, const Pattern& p,
                                          const SearchLimits& limits = {});

/// s minus {x} for every minimal generator x > F(s), x != m, whose removal
/// keeps p admitted; ordered by x.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s, const Pattern& p,
                                         const SearchLimits& limits = {});

struct TreeNode {
  NumericalSemigroup semigroup;
  std::vector<Int> generators;
  std::optional<std::size_t> parent;
  std::optional<Int> removed;  // F(semigroup) for every non-root node
};

struct VarietyTree {
  std::vector<TreeNode> nodes;  // genus layers; each layer sorted by generators
};

struct TreeOptions {
  /// Stop after this genus; nullopt walks the whole tree.
  std::optional<Int> max_genus;
  std::size_t node_ceiling = 1'000'000;
  bool parallel = true;
  SearchLimits search;
};

/// Breadth-first tree of the multiplicity-m semigroups admitting p, rooted
/// at {0, m, ->}, where each node's parent is node plus its Frobenius
/// number. Throws NodeCeilingExceeded past the ceiling.
VarietyTree tree_enumerate(const Pattern& p, Int m, const TreeOptions& options = {});

/// True when only finitely many multiplicity-m semigroups admit p; that
/// happens exactly when gcd(m, a0) = 1. Requires a0 != 0.
bool is_variety_finite(const Pattern& p, Int m);

/// {d*i : i >= m/d} together with {0} and [k, ->), d = gcd(m, a0), for
/// k >= m. When p is strongly admissible and m is p-admissible this is a
/// multiplicity-m semigroup admitting p. Throws GcdIsOne when d = 1.
NumericalSemigroup infinite_family_witness(const Pattern& p, Int m, Int k);

}  // namespace patsemi
