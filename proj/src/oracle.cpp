#include "patsemi/oracle.hpp"

#include <algorithm>

#include "patsemi/error.hpp"

namespace patsemi::oracle {

namespace {

// Gap-set view of a semigroup, independent of NumericalSemigroup's own
// generator routines.
struct Node {
  std::vector<bool> member;  // over [0, conductor)
  Int conductor = 0;
  Int multiplicity = 1;
  Int genus = 0;

  bool contains(Int x) const { return x >= conductor || (x >= 0 && member[std::size_t(x)]); }
};

bool decomposes(const Node& n, Int x) {
  for (Int y = 1; y <= x / 2; ++y) {
    if (n.contains(y) && n.contains(x - y)) return true;
  }
  return false;
}

Node without(const Node& n, Int x) {
  Node out = n;
  out.member.resize(std::size_t(x + 1), true);
  out.member[std::size_t(x)] = false;
  out.conductor = x + 1;
  out.genus = n.genus + 1;
  if (x == n.multiplicity) {
    out.multiplicity = x + 1;
  }
  return out;
}

NumericalSemigroup materialize(const Node& n) {
  std::vector<Int> gaps;
  for (Int x = 1; x < n.conductor; ++x) {
    if (!n.contains(x)) gaps.push_back(x);
  }
  return NumericalSemigroup::from_gaps(gaps);
}

void walk(const Node& n, Int max_genus, std::optional<Int> multiplicity,
          const std::function<void(const NumericalSemigroup&)>& visit) {
  if (!multiplicity || n.multiplicity == *multiplicity) visit(materialize(n));
  if (n.genus == max_genus) return;
  // Generators above the Frobenius number lie in [c, c + m) (just 1 for N0).
  const Int top = n.conductor == 0 ? 2 : n.conductor + n.multiplicity;
  for (Int x = std::max<Int>(n.conductor, 1); x < top; ++x) {
    if (decomposes(n, x)) continue;
    Node child = without(n, x);
    if (multiplicity && child.multiplicity > *multiplicity) continue;
    walk(child, max_genus, multiplicity, visit);
  }
}

}  // namespace

void for_each_semigroup(Int max_genus, std::optional<Int> multiplicity,
                        const std::function<void(const NumericalSemigroup&)>& visit) {
  if (max_genus < 0) return;
  walk(Node{}, max_genus, multiplicity, visit);
}

std::vector<NumericalSemigroup> enumerate_semigroups(Int max_genus,
                                                     std::optional<Int> multiplicity) {
  std::vector<NumericalSemigroup> out;
  for_each_semigroup(max_genus, multiplicity,
                     [&](const NumericalSemigroup& s) { out.push_back(s); });
  return out;
}

std::vector<std::size_t> genus_counts(Int max_genus) {
  std::vector<std::size_t> counts(std::size_t(max_genus + 1), 0);
  for_each_semigroup(max_genus, std::nullopt,
                     [&](const NumericalSemigroup& s) { ++counts[std::size_t(s.genus())]; });
  return counts;
}

bool naive_admits(const NumericalSemigroup& s, const Pattern& p, Int s1_bound) {
  std::vector<Int> members;
  for (Int x = 1; x <= s1_bound; ++x) {
    if (s.contains(x)) members.push_back(x);
  }
  const auto coeffs = p.coefficients();
  const std::size_t n = coeffs.size();

  const Int c = s.conductor();

  // Entries are indexes into `members`, each at most the previous one.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t cap, Int acc) -> bool {
    if (pos + 1 == n) {
      // Walk the last entry in the direction that raises the value; once it
      // reaches the conductor every remaining choice is a member.
      const Int a = coeffs[pos];
      const Int base = acc + p.constant();
      for (std::size_t k = 0; k <= cap; ++k) {
        const Int v = base + a * members[a > 0 ? k : cap - k];
        if (v >= c) break;
        if (!s.contains(v)) return false;
      }
      return true;
    }
    for (std::size_t i = 0; i <= cap; ++i) {
      if (!self(self, pos + 1, i, acc + coeffs[pos] * members[i])) return false;
    }
    return true;
  };
  if (members.empty()) return true;
  return rec(rec, 0, members.size() - 1, 0);
}

Int triple_bound(const NumericalSemigroup& s, const Pattern& p) {
  const Int f = s.frobenius();
  const Int n = static_cast<Int>(p.length());
  const Int a0 = p.constant() < 0 ? -p.constant() : p.constant();
  return std::max(s.multiplicity(), 3 * (f + n * (f + 1) + a0 + 1));
}

std::vector<Pattern> pattern_grid(std::size_t max_length, Int max_coeff, Int max_const) {
  std::vector<Int> values;
  for (Int a = -max_coeff; a <= max_coeff; ++a) {
    if (a != 0) values.push_back(a);
  }
  std::vector<Pattern> out;
  std::vector<Int> coeffs;
  auto rec = [&](auto&& self, std::size_t len) -> void {
    if (coeffs.size() == len) {
      for (Int c = -max_const; c <= max_const; ++c) out.emplace_back(coeffs, c);
      return;
    }
    for (Int a : values) {
      coeffs.push_back(a);
      self(self, len);
      coeffs.pop_back();
    }
  };
  for (std::size_t len = 1; len <= max_length; ++len) rec(rec, len);
  return out;
}

}  // namespace patsemi::oracle
