#include "patsemi/variety.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "patsemi/error.hpp"

namespace patsemi {

namespace {

void require_variety_setting(const Pattern& p, Int m) {
  if (m < 1 || !is_variety_setting(p, m)) {
    throw Error(ErrorCode::PreconditionViolated,
                format_pattern(p) + " must be strongly admissible and multiplicity " +
                    std::to_string(m) + " p-admissible");
  }
}

void require_member_of_variety(const NumericalSemigroup& s, const Pattern& p,
                               const SearchLimits& limits) {
  require_variety_setting(p, s.multiplicity());
  if (!admits(s, p, limits)) {
    throw Error(ErrorCode::PreconditionViolated,
                format_semigroup(s) + " does not admit " + format_pattern(p));
  }
}

Int abs_value(Int x) { return x < 0 ? -x : x; }

// scale * core together with one more element, as scale' * core'.
SubmonoidRep adjoin(const SubmonoidRep& monoid, Int value) {
  std::vector<Int> gens;
  for (Int g : monoid.core.minimal_generators()) gens.push_back(g * monoid.scale);
  gens.push_back(value);
  const Int scale = gcd_of(gens);
  for (Int& g : gens) g /= scale;
  return {scale, NumericalSemigroup::from_generators(gens)};
}

std::vector<NumericalSemigroup> admitted_removals(const NumericalSemigroup& s, const Pattern& p,
                                                  const SearchLimits& limits) {
  std::vector<NumericalSemigroup> out;
  for (Int x : s.minimal_generators_above_frobenius()) {
    if (x == s.multiplicity()) continue;
    auto child = s.remove_element(x);
    if (admits(child, p, limits)) out.push_back(std::move(child));
  }
  return out;
}

}  // namespace

SubmonoidRep v_closure(const Pattern& p, Int m, std::span<const Int> elements,
                       const SearchLimits& limits) {
  require_variety_setting(p, m);
  std::vector<Int> gens{m};
  for (Int a : elements) {
    if (a == 0) continue;
    if (a < m) {
      throw Error(ErrorCode::ElementBelowMultiplicity,
                  std::to_string(a) + " lies below the multiplicity " + std::to_string(m));
    }
    gens.push_back(a);
  }
  SubmonoidRep monoid{gcd_of(gens), {}};
  for (Int& g : gens) g /= monoid.scale;
  monoid.core = NumericalSemigroup::from_generators(gens);

  const Int a0 = p.constant();
  while (true) {
    if (a0 % monoid.scale != 0) {
      // p(m,...,m) is congruent to a0 modulo the scale, so it escapes.
      monoid = adjoin(monoid, p.total() * m + a0);
      continue;
    }
    // Every value is a multiple of the scale: p(scale*y) = scale*q(y) with
    // q the same linear part and constant a0/scale.
    const Pattern scaled = p.with_constant(a0 / monoid.scale);
    const auto witness = violating_sequence(monoid.core, scaled, limits);
    if (!witness) return monoid;
    monoid = adjoin(monoid, witness->value * monoid.scale);
  }
}

std::vector<Int> minimal_v_generating_system(const NumericalSemigroup& s, const Pattern& p,
                                             const SearchLimits& limits) {
  require_member_of_variety(s, p, limits);
  std::vector<Int> out;
  for (Int x : s.minimal_generators()) {
    if (is_minimal_v_generator(s, p, x, limits)) out.push_back(x);
  }
  return out;
}

GeneratorSweep sweep_minimal_v_generators(const NumericalSemigroup& s, const Pattern& p,
                                          const SearchLimits& limits) {
  require_member_of_variety(s, p, limits);
  const Int m = s.multiplicity();
  const Int top = std::max<Int>(s.conductor(), 1) + m;
  GeneratorSweep sweep;
  for (Int x = 1; x < top; ++x) {
    if (!s.contains(x)) continue;
    bool in_variety = false;
    if (x != m) {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(std::max(s.conductor(), x + 1)));
      for (Int y = 0; y < static_cast<Int>(bits.size()); ++y) {
        bits[static_cast<std::size_t>(y)] = (y != x && s.contains(y)) ? 1 : 0;
      }
      try {
        const auto smaller = NumericalSemigroup::from_membership(std::move(bits));
        in_variety = smaller.multiplicity() == m && admits(smaller, p, limits);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidArgument) throw;
      }
    }
    if (in_variety) sweep.generators.push_back(x);
    if (in_variety != is_minimal_v_generator(s, p, x, limits)) sweep.discrepancies.push_back(x);
  }
  return sweep;
}

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s, const Pattern& p,
                                         const SearchLimits& limits) {
  require_member_of_variety(s, p, limits);
  return admitted_removals(s, p, limits);
}

VarietyTree tree_enumerate(const Pattern& p, Int m, const TreeOptions& options) {
  require_variety_setting(p, m);
  auto root = NumericalSemigroup::ordinary(m);
  if (!admits(root, p, options.search)) {
    throw Error(ErrorCode::PreconditionViolated, "the ordinary semigroup does not admit " +
                                                     format_pattern(p));
  }
  VarietyTree tree;
  if (options.max_genus && root.genus() > *options.max_genus) return tree;
  auto gens = root.minimal_generators();
  tree.nodes.push_back({std::move(root), std::move(gens), std::nullopt, std::nullopt});

  // Inner admission searches stay serial; the level is the parallel unit.
  SearchLimits inner = options.search;
  inner.parallel = false;

  std::size_t begin = 0;
  std::size_t end = 1;
  while (begin < end) {
    const Int genus = tree.nodes[begin].semigroup.genus();
    if (options.max_genus && genus >= *options.max_genus) break;

    const auto width = static_cast<std::ptrdiff_t>(end - begin);
    std::vector<std::vector<TreeNode>> found(static_cast<std::size_t>(width));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(width));
#pragma omp parallel for schedule(dynamic) if (options.parallel && width > 1)
    for (std::ptrdiff_t i = 0; i < width; ++i) {
      const auto idx = begin + static_cast<std::size_t>(i);
      try {
        for (auto& child : admitted_removals(tree.nodes[idx].semigroup, p, inner)) {
          auto child_gens = child.minimal_generators();
          const Int removed = child.frobenius();
          found[static_cast<std::size_t>(i)].push_back(
              {std::move(child), std::move(child_gens), idx, removed});
        }
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    std::vector<TreeNode> layer;
    for (auto& batch : found) {
      for (auto& node : batch) layer.push_back(std::move(node));
    }
    std::sort(layer.begin(), layer.end(),
              [](const TreeNode& a, const TreeNode& b) { return a.generators < b.generators; });
    if (tree.nodes.size() + layer.size() > options.node_ceiling) {
      throw Error(ErrorCode::NodeCeilingExceeded,
                  "tree exceeds " + std::to_string(options.node_ceiling) + " nodes");
    }
    for (auto& node : layer) tree.nodes.push_back(std::move(node));
    begin = end;
    end = tree.nodes.size();
  }
  return tree;
}

bool is_variety_finite(const Pattern& p, Int m) {
  require_variety_setting(p, m);
  if (p.constant() == 0) {
    throw Error(ErrorCode::PreconditionViolated, "finiteness needs a nonzero constant term");
  }
  return std::gcd(m, abs_value(p.constant())) == 1;
}

NumericalSemigroup infinite_family_witness(const Pattern& p, Int m, Int k) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "multiplicity must be positive");
  const Int d = std::gcd(m, abs_value(p.constant()));
  if (d == 1) {
    throw Error(ErrorCode::GcdIsOne, "gcd(m, a0) = 1, the variety is finite");
  }
  if (k < m) {
    throw Error(ErrorCode::PreconditionViolated, "k must be at least the multiplicity");
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(k), 0);
  bits[0] = 1;
  for (Int x = m; x < k; x += d) bits[static_cast<std::size_t>(x)] = 1;
  return NumericalSemigroup::from_membership(std::move(bits));
}

}  // namespace patsemi
