#include "patsemi/bounds.hpp"

#include <stdexcept>
#include <string>

#include "patsemi/error.hpp"

namespace patsemi {

namespace {

void require_positive(Int q, Int least) {
  if (q < least) {
    throw Error(ErrorCode::InvalidArgument, "field size must be at least " + std::to_string(least));
  }
}

// x in q*l + S for some nonzero member l.
bool covered(const NumericalSemigroup& s, Int q, Int x) {
  for (Int l = s.multiplicity(); q * l <= x; ++l) {
    if (s.contains(l) && s.contains(x - q * l)) return true;
  }
  return false;
}

}  // namespace

Int gm_bound_in_window(const NumericalSemigroup& s, Int q, Int window) {
  require_positive(q, 1);
  Int count = 0;
  for (Int x = 0; x < window; ++x) {
    if (s.contains(x) && !covered(s, q, x)) ++count;
  }
  return count + 1;
}

Int gm_bound(const NumericalSemigroup& s, Int q) {
  return gm_bound_in_window(s, q, q * s.multiplicity() + s.conductor());
}

Int lewittes_bound(const NumericalSemigroup& s, Int q) {
  require_positive(q, 1);
  return 1 + q * s.multiplicity();
}

Int br_bound(const NumericalSemigroup& s, Int q) {
  require_positive(q, 2);
  return gm_bound(s, q - 1);
}

bool shift_holds_on_all_members(const NumericalSemigroup& s, Int k) {
  const Int m = s.multiplicity();
  for (Int x = m; x < s.conductor() + k * m + 1; ++x) {
    if (s.contains(x) && !s.contains(k * x - k * m)) return false;
  }
  return true;
}

bool shift_holds_via_quotient(const NumericalSemigroup& s, Int k) {
  const auto q = s.quotient(k);
  const Int m = s.multiplicity();
  for (Int x = 1; x < m + q.conductor() + 1; ++x) {
    if (s.contains(x) && !q.contains(x - m)) return false;
  }
  return true;
}

CoincidenceCheck multiplicity_shift_check(const NumericalSemigroup& s, Int k) {
  require_positive(k, 1);
  const Int m = s.multiplicity();
  CoincidenceCheck out;
  for (Int x : s.minimal_generators()) {
    if (!s.contains(k * x - k * m)) {
      out.holds = false;
      out.failing_generator = x;
      break;
    }
  }
  const bool by_bound = gm_bound(s, k) == lewittes_bound(s, k);
  const bool by_quotient = shift_holds_via_quotient(s, k);
  if (by_bound != out.holds || by_quotient != out.holds) {
    throw std::logic_error("bound coincidence criteria disagree on " + format_semigroup(s) +
                           " with k = " + std::to_string(k));
  }
  return out;
}

CoincidenceCheck gm_equals_lewittes(const NumericalSemigroup& s, Int q) {
  require_positive(q, 2);
  return multiplicity_shift_check(s, q);
}

BoundReport bound_report(const NumericalSemigroup& s, Int q) {
  require_positive(q, 2);
  BoundReport r;
  r.gm = gm_bound(s, q);
  r.lewittes = lewittes_bound(s, q);
  r.br = br_bound(s, q);
  const auto check = gm_equals_lewittes(s, q);
  r.coincide_gm_lewittes = check.holds;
  r.failing_generator = check.failing_generator;
  r.coincide_br = r.br == 1 + (q - 1) * s.multiplicity();
  return r;
}

}  // namespace patsemi
