#pragma once

#include <string>
#include <string_view>

#include "patsemi/admission.hpp"
#include "patsemi/bounds.hpp"
#include "patsemi/semigroup.hpp"
#include "patsemi/variety.hpp"

namespace patsemi::io {

/// `{"gens":[...],"gaps":[...],"multiplicity":m,"frobenius":F,"genus":g}`
std::string semigroup_json(const NumericalSemigroup& s);
/// Reads the `gens` (or `gaps`) field of `semigroup_json` output.
NumericalSemigroup semigroup_from_json(std::string_view text);

/// `{"nodes":[{"id":0,"gens":[5,6,7,8,9],"genus":4,"parent":null,"removed":null},...]}`
std::string tree_json(const VarietyTree& tree);
VarietyTree tree_from_json(std::string_view text);

/// Graphviz digraph; node labels `<g1,...>`, edge labels `-x`.
std::string tree_dot(const VarietyTree& tree);

/// One line per node: `id genus <gens> [parent=P removed=x]`.
std::string tree_text(const VarietyTree& tree);

/// `s=(4) -> 2`
std::string format_witness(const Witness& w);

}  // namespace patsemi::io
