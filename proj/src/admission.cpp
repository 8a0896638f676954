#include "patsemi/admission.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "patsemi/error.hpp"

namespace patsemi {

namespace {

constexpr std::uint64_t kParallelThreshold = 1 << 16;

bool has_negative_sum(const std::vector<Int>& sums) {
  return std::any_of(sums.begin(), sums.end(), [](Int s) { return s < 0; });
}

DeltaBox make_box(const std::vector<Int>& sums, Int slack, Int cap, Int m) {
  DeltaBox box;
  box.sums = sums;
  box.slack = slack;
  box.multiplicity = m;
  box.bounds.reserve(sums.size());
  for (Int sigma : sums) box.bounds.push_back(sigma >= 1 ? slack / sigma : cap);
  return box;
}

void check_volume(const DeltaBox& box, const SearchLimits& limits) {
  if (box.volume() > limits.volume_ceiling) {
    throw Error(ErrorCode::SearchTooLarge,
                "delta box volume exceeds " + std::to_string(limits.volume_ceiling));
  }
}

// Member-driven depth-first search over the box, choosing s_n first so that
// nonmembers are skipped before descending. `member` decides which entries
// are allowed; `hit(acc)` receives sum_j sigma_j d_j of a complete sequence.
// Sequences with acc > slack are never visited.
template <class Member, class Hit>
class BoxSearch {
 public:
  BoxSearch(const DeltaBox& box, Member member, Hit hit)
      : box_(box), member_(member), hit_(hit), n_(box.sums.size()) {}

  bool run(bool parallel) {
    const std::size_t last = n_ - 1;
    const Int top = box_.bounds[last];
    const Int sigma = box_.sums[last];
    std::atomic<bool> found{false};
    const bool go_parallel = parallel && box_.volume() >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic) if (go_parallel)
    for (Int d = 0; d <= top; ++d) {
      if (found.load(std::memory_order_relaxed)) continue;
      const Int acc = sigma * d;
      if (acc > box_.slack) continue;
      const Int s = box_.multiplicity + d;
      if (!member_(s)) continue;
      if (descend(last, s, acc)) found.store(true, std::memory_order_relaxed);
    }
    return found.load();
  }

 private:
  // Entry `index` has been fixed to `s` with running weighted sum `acc`.
  bool descend(std::size_t index, Int s, Int acc) const {
    if (index == 0) return hit_(acc);
    const std::size_t next = index - 1;
    const Int sigma = box_.sums[next];
    for (Int d = 0; d <= box_.bounds[next]; ++d) {
      const Int a = acc + sigma * d;
      if (a > box_.slack) break;
      if (!member_(s + d)) continue;
      if (descend(next, s + d, a)) return true;
    }
    return false;
  }

  const DeltaBox& box_;
  Member member_;
  Hit hit_;
  std::size_t n_;
};

template <class Member, class Hit>
bool search(const DeltaBox& box, Member member, Hit hit, bool parallel) {
  return BoxSearch<Member, Hit>(box, member, hit).run(parallel);
}

bool admits_impl(const NumericalSemigroup& s, const Pattern& p, const SearchLimits& limits,
                 bool parallel) {
  const auto sums = p.partial_sums();
  if (has_negative_sum(sums)) return false;
  const DeltaBox box = delta_box(s, p);
  if (box.slack < 0) return true;
  check_volume(box, limits);
  const Int base = sums.back() * s.multiplicity() + p.constant();
  const auto member = [&s](Int x) { return s.contains(x); };
  const auto gap = [&s, base](Int acc) { return !s.contains(acc + base); };
  return !search(box, member, gap, parallel);
}

std::optional<Witness> negative_sum_witness(const NumericalSemigroup& s, const Pattern& p,
                                            const std::vector<Int>& sums) {
  const auto j = static_cast<std::size_t>(
      std::find_if(sums.begin(), sums.end(), [](Int v) { return v < 0; }) - sums.begin());
  const Int m = s.multiplicity();
  const auto a = p.coefficients();
  Int rest = p.constant();
  for (std::size_t k = j + 1; k < a.size(); ++k) rest += a[k] * m;
  for (Int l = m;; ++l) {
    if (!s.contains(l)) continue;
    const Int value = sums[j] * l + rest;
    if (!s.contains(value)) {
      Witness w;
      w.sequence.assign(a.size(), m);
      std::fill(w.sequence.begin(), w.sequence.begin() + static_cast<std::ptrdiff_t>(j + 1), l);
      w.value = value;
      return w;
    }
  }
}

}  // namespace

std::uint64_t DeltaBox::volume() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v = 1;
  for (Int b : bounds) {
    const auto f = static_cast<std::uint64_t>(std::max<Int>(b, 0)) + 1;
    if (v > kMax / f) return kMax;
    v *= f;
  }
  return v;
}

DeltaBox delta_box(const NumericalSemigroup& s, const Pattern& p) {
  const auto sums = p.partial_sums();
  if (has_negative_sum(sums)) {
    throw Error(ErrorCode::InvalidArgument, "delta box needs nonnegative partial sums");
  }
  const Int slack = s.frobenius() - sums.back() * s.multiplicity() - p.constant();
  return make_box(sums, slack, s.conductor(), s.multiplicity());
}

bool admits(const NumericalSemigroup& s, const Pattern& p, const SearchLimits& limits) {
  return admits_impl(s, p, limits, limits.parallel);
}

bool admits_serial(const NumericalSemigroup& s, const Pattern& p, const SearchLimits& limits) {
  return admits_impl(s, p, limits, false);
}

std::optional<Witness> violating_sequence(const NumericalSemigroup& s, const Pattern& p,
                                          const SearchLimits& limits) {
  const auto sums = p.partial_sums();
  if (has_negative_sum(sums)) return negative_sum_witness(s, p, sums);
  const DeltaBox box = delta_box(s, p);
  if (box.slack < 0) return std::nullopt;
  check_volume(box, limits);

  const std::size_t n = sums.size();
  const Int m = s.multiplicity();
  const Int base = sums.back() * m + p.constant();
  std::vector<Int> deltas(n, 0);
  std::optional<Witness> found;

  // Odometer over d_1..d_n, d_1 most significant; `acc` tracks the weighted
  // sum of the fixed prefix so that over-slack branches are cut early.
  auto visit = [&](auto&& self, std::size_t j, Int acc) -> bool {
    if (j == n) {
      std::vector<Int> seq(n);
      Int tail = m;
      for (std::size_t i = n; i-- > 0;) {
        tail += deltas[i];
        if (!s.contains(tail)) return false;
        seq[i] = tail;
      }
      const Int value = acc + base;
      if (s.contains(value)) return false;
      found = Witness{std::move(seq), value};
      return true;
    }
    for (Int d = 0; d <= box.bounds[j]; ++d) {
      const Int a = acc + sums[j] * d;
      if (a > box.slack) break;
      deltas[j] = d;
      if (self(self, j + 1, a)) return true;
    }
    deltas[j] = 0;
    return false;
  };
  visit(visit, 0, 0);
  return found;
}

bool is_minimal_v_generator(const NumericalSemigroup& s, const Pattern& p, Int x,
                            const SearchLimits& limits) {
  const Int m = s.multiplicity();
  if (!is_variety_setting(p, m)) {
    throw Error(ErrorCode::PreconditionViolated,
                "pattern must be strongly admissible with multiplicity " + std::to_string(m) +
                    " admissible");
  }
  if (!admits(s, p, limits)) {
    throw Error(ErrorCode::PreconditionViolated, format_semigroup(s) + " does not admit " +
                                                     format_pattern(p));
  }
  if (x <= 0 || !s.contains(x)) {
    throw Error(ErrorCode::PreconditionViolated, std::to_string(x) + " is not a nonzero member");
  }
  if (x == m || !s.is_minimal_generator(x)) return false;

  // s \ {x} is a semigroup admitting p unless some sequence inside it hits x.
  const auto sums = p.partial_sums();
  const Int target = x - sums.back() * m - p.constant();
  if (target < 0) return true;
  const DeltaBox box = make_box(sums, target, std::max(s.conductor(), x + 1), m);
  check_volume(box, limits);
  const auto member = [&s, x](Int y) { return y != x && s.contains(y); };
  const auto reaches = [target](Int acc) { return acc == target; };
  return !search(box, member, reaches, limits.parallel);
}

}  // namespace patsemi
