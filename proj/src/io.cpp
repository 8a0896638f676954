#include "patsemi/io.hpp"

#include <json.hpp>
#include <sstream>

#include "patsemi/error.hpp"

namespace patsemi::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string join(const std::vector<Int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string semigroup_json(const NumericalSemigroup& s) {
  json j;
  j["gens"] = s.minimal_generators();
  j["gaps"] = s.gaps();
  j["multiplicity"] = s.multiplicity();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  return j.dump();
}

NumericalSemigroup semigroup_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    if (j.contains("gens")) return NumericalSemigroup::from_generators(j.at("gens").get<std::vector<Int>>());
    if (j.contains("gaps")) return NumericalSemigroup::from_gaps(j.at("gaps").get<std::vector<Int>>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  throw Error(ErrorCode::ParseError, "semigroup JSON needs a 'gens' or 'gaps' field");
}

std::string tree_json(const VarietyTree& tree) {
  json nodes = json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    json node;
    node["id"] = i;
    node["gens"] = n.generators;
    node["genus"] = n.semigroup.genus();
    node["parent"] = n.parent ? json(*n.parent) : json(nullptr);
    node["removed"] = n.removed ? json(*n.removed) : json(nullptr);
    nodes.push_back(std::move(node));
  }
  json out;
  out["nodes"] = std::move(nodes);
  return out.dump();
}

VarietyTree tree_from_json(std::string_view text) {
  const json j = parse_json(text);
  VarietyTree tree;
  try {
    const auto& nodes = j.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i];
      if (n.at("id").get<std::size_t>() != i) {
        throw Error(ErrorCode::ParseError, "node ids must be 0, 1, 2, ... in order");
      }
      auto gens = n.at("gens").get<std::vector<Int>>();
      auto s = NumericalSemigroup::from_generators(gens);
      if (s.minimal_generators() != gens || s.genus() != n.at("genus").get<Int>()) {
        throw Error(ErrorCode::ParseError, "node " + std::to_string(i) + " is inconsistent");
      }
      TreeNode node{std::move(s), std::move(gens), std::nullopt, std::nullopt};
      if (!n.at("parent").is_null()) node.parent = n.at("parent").get<std::size_t>();
      if (!n.at("removed").is_null()) node.removed = n.at("removed").get<Int>();
      tree.nodes.push_back(std::move(node));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return tree;
}

std::string tree_dot(const VarietyTree& tree) {
  std::ostringstream out;
  out << "digraph variety {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"<" << join(tree.nodes[i].generators, ',') << ">\"];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    if (!n.parent) continue;
    out << "  n" << *n.parent << " -> n" << i << " [label=\"-" << *n.removed << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string tree_text(const VarietyTree& tree) {
  std::ostringstream out;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    out << i << " genus=" << n.semigroup.genus() << " <" << join(n.generators, ',') << ">";
    if (n.parent) out << " parent=" << *n.parent << " removed=" << *n.removed;
    out << '\n';
  }
  return out.str();
}

std::string format_witness(const Witness& w) {
  return "s=(" + join(w.sequence, ',') + ") -> " + std::to_string(w.value);
}

}  // namespace patsemi::io
