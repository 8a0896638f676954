#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "patsemi/oracle.hpp"
#include "patsemi/semigroup.hpp"

namespace patsemi::testing {

// All sums of generators up to `bound`, by repeated relaxation.
inline std::set<Int> brute_closure(const std::vector<Int>& gens, Int bound) {
  std::vector<bool> reach(static_cast<std::size_t>(bound + 1), false);
  reach[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Int x = 0; x <= bound; ++x) {
      if (!reach[static_cast<std::size_t>(x)]) continue;
      for (Int g : gens) {
        if (x + g <= bound && !reach[static_cast<std::size_t>(x + g)]) {
          reach[static_cast<std::size_t>(x + g)] = true;
          changed = true;
        }
      }
    }
  }
  std::set<Int> out;
  for (Int x = 0; x <= bound; ++x) {
    if (reach[static_cast<std::size_t>(x)]) out.insert(x);
  }
  return out;
}

inline std::vector<Int> brute_gaps(const std::vector<Int>& gens, Int bound) {
  const auto members = brute_closure(gens, bound);
  std::vector<Int> gaps;
  for (Int x = 1; x <= bound; ++x) {
    if (!members.contains(x)) gaps.push_back(x);
  }
  return gaps;
}

inline std::vector<Int> members_upto(const NumericalSemigroup& s, Int bound) {
  return s.members_below(bound + 1);
}

// Search bound for oracle::naive_admits. The triple bound alone collapses on
// the full set (F = -1), where a negative partial sum needs s1 around
// sum |ai| + |a0| before the value drops below 0.
inline Int generous_bound(const NumericalSemigroup& s, const Pattern& p) {
  Int spread = p.constant() < 0 ? -p.constant() : p.constant();
  for (Int a : p.coefficients()) spread += a < 0 ? -a : a;
  return std::max(oracle::triple_bound(s, p), 3 * (spread + 1));
}

}  // namespace patsemi::testing
