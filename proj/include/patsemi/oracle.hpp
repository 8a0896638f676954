#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "patsemi/pattern.hpp"
#include "patsemi/semigroup.hpp"

// Brute-force reference machinery for tests. Nothing in here calls into the
// admission or variety code; keeping the two paths apart is the point.
namespace patsemi::oracle {

/// Visits every numerical semigroup of genus <= max_genus exactly once,
/// walking the removal tree rooted at the full set (children remove one
/// minimal generator above the Frobenius number). With `multiplicity` set,
/// only semigroups of that multiplicity are visited.
void for_each_semigroup(Int max_genus, std::optional<Int> multiplicity,
                        const std::function<void(const NumericalSemigroup&)>& visit);

std::vector<NumericalSemigroup> enumerate_semigroups(Int max_genus,
                                                     std::optional<Int> multiplicity = {});

/// Number of semigroups of each genus 0..max_genus.
std::vector<std::size_t> genus_counts(Int max_genus);

/// Checks p(s) on every nonincreasing sequence of nonzero members with
/// s1 <= s1_bound, by direct evaluation.
bool naive_admits(const NumericalSemigroup& s, const Pattern& p, Int s1_bound);

/// 3 * (F + n*(F+1) + |a0| + 1), floored at the multiplicity.
Int triple_bound(const NumericalSemigroup& s, const Pattern& p);

/// Patterns with n <= max_length, 0 < |ai| <= max_coeff, |a0| <= max_const.
std::vector<Pattern> pattern_grid(std::size_t max_length, Int max_coeff, Int max_const);

}  // namespace patsemi::oracle
