#pragma once

#include <optional>

#include "patsemi/semigroup.hpp"

namespace patsemi {

/// #(S \ union over nonzero members l of (q*l + S)) + 1, for q >= 1.
///
/// Every member x >= q*m + c lies in q*m + S, so only [0, q*m + c) is
/// scanned.
Int gm_bound(const NumericalSemigroup& s, Int q);

/// Same count over an explicit window [0, window); used to check that the
/// default window loses nothing.
Int gm_bound_in_window(const NumericalSemigroup& s, Int q, Int window);

/// 1 + q*m.
Int lewittes_bound(const NumericalSemigroup& s, Int q);

/// gm_bound with q - 1 in place of q; q >= 2.
Int br_bound(const NumericalSemigroup& s, Int q);

/// Outcome of the test "k*x - k*m is a member for every minimal generator
/// x", with the first generator that fails.
struct CoincidenceCheck {
  bool holds = true;
  std::optional<Int> failing_generator;
};

/// Minimal-generator test for k >= 1. Cross-checked against the bound
/// comparison and against S \ {0} being inside m + S/k; a disagreement
/// throws std::logic_error.
CoincidenceCheck multiplicity_shift_check(const NumericalSemigroup& s, Int k);

/// Whether the Geil-Matsumoto and Lewittes bounds agree (q >= 2).
CoincidenceCheck gm_equals_lewittes(const NumericalSemigroup& s, Int q);

/// Same test on every nonzero member below conductor + k*m.
bool shift_holds_on_all_members(const NumericalSemigroup& s, Int k);

/// S \ {0} contained in m + S/k.
bool shift_holds_via_quotient(const NumericalSemigroup& s, Int k);

struct BoundReport {
  Int gm = 0;
  Int lewittes = 0;
  Int br = 0;
  bool coincide_gm_lewittes = false;
  bool coincide_br = false;  // br == 1 + (q-1)*m
  std::optional<Int> failing_generator;
};

BoundReport bound_report(const NumericalSemigroup& s, Int q);

}  // namespace patsemi
