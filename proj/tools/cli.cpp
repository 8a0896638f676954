#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "patsemi/admission.hpp"
#include "patsemi/bounds.hpp"
#include "patsemi/error.hpp"
#include "patsemi/io.hpp"
#include "patsemi/oracle.hpp"
#include "patsemi/pattern.hpp"
#include "patsemi/semigroup.hpp"
#include "patsemi/variety.hpp"

namespace patsemi::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Dot };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return json{{"s", w->sequence}, {"value", w->value}};
}

std::string kind_name(MultiplicityCondition::Kind k) {
  switch (k) {
    case MultiplicityCondition::Kind::LowerBounded: return "lower-bounded";
    case MultiplicityCondition::Kind::All: return "all";
    case MultiplicityCondition::Kind::Interval: return "interval";
  }
  return "unknown";
}

// Arguments shared by the subcommands; each command reads what it needs.
struct Args {
  std::string pattern;
  std::string semigroup;
  std::vector<Int> elements;
  std::vector<Int> coeffs;
  Int multiplicity = 0;
  Int k = 0;
  Int q = 2;
  Int bound = 0;
  Int apery = 0;
  Int quotient = 0;
  std::optional<Int> max_genus;
  std::optional<Int> oracle_multiplicity;
  bool exhaustive = false;
  bool sweep = false;
  std::size_t ceiling = 1'000'000;
  std::uint64_t search_ceiling = 1'000'000'000;
};

class Runner {
 public:
  Runner(const Args& a, Format f, std::ostream& out) : a_(a), format_(f), out_(out) {}

  void require_format(std::initializer_list<Format> allowed) const {
    for (Format f : allowed) {
      if (f == format_) return;
    }
    throw Usage("--format dot is only valid for the tree command");
  }

  SearchLimits limits() const {
    SearchLimits l;
    l.volume_ceiling = a_.search_ceiling;
    return l;
  }

  void classify_cmd() {
    require_format({Format::Text, Format::Json});
    const auto p = parse_pattern(a_.pattern);
    const auto c = classify(p);
    if (format_ == Format::Json) {
      out_ << json{{"pattern", format_pattern(p)},
                   {"class", to_string(c)},
                   {"strongly_admissible", is_strongly_admissible(p)}}
                  .dump()
           << '\n';
    } else {
      out_ << to_string(c) << '\n';
    }
  }

  void multiplicities_cmd() {
    require_format({Format::Text, Format::Json});
    const auto c = admissible_multiplicities(parse_pattern(a_.pattern));
    if (format_ == Format::Json) {
      json j{{"kind", kind_name(c.kind)}, {"low", c.low}};
      if (c.kind == MultiplicityCondition::Kind::Interval) j["high"] = c.high;
      out_ << j.dump() << '\n';
    } else {
      out_ << to_string(c) << '\n';
    }
  }

  void admits_cmd() {
    require_format({Format::Text, Format::Json});
    const auto p = parse_pattern(a_.pattern);
    const auto s = parse_semigroup(a_.semigroup);
    const bool ok = admits(s, p, limits());
    std::optional<Witness> w;
    if (!ok) w = violating_sequence(s, p, limits());
    if (format_ == Format::Json) {
      out_ << json{{"admits", ok}, {"witness", witness_json(w)}}.dump() << '\n';
    } else {
      out_ << boolean(ok) << '\n';
      if (w) out_ << "witness " << io::format_witness(*w) << '\n';
    }
  }

  void witness_cmd() {
    require_format({Format::Text, Format::Json});
    const auto w = violating_sequence(parse_semigroup(a_.semigroup), parse_pattern(a_.pattern),
                                      limits());
    if (format_ == Format::Json) {
      out_ << json{{"witness", witness_json(w)}}.dump() << '\n';
    } else {
      out_ << (w ? io::format_witness(*w) : std::string("none")) << '\n';
    }
  }

  void children_cmd() {
    require_format({Format::Text, Format::Json});
    const auto kids =
        children(parse_semigroup(a_.semigroup), parse_pattern(a_.pattern), limits());
    if (format_ == Format::Json) {
      json list = json::array();
      for (const auto& c : kids) list.push_back(c.minimal_generators());
      out_ << json{{"children", list}}.dump() << '\n';
    } else {
      for (const auto& c : kids) out_ << format_semigroup(c) << '\n';
    }
  }

  void tree_cmd() {
    if (!a_.exhaustive && !a_.max_genus) throw Usage("tree needs --max-genus or --exhaustive");
    if (a_.exhaustive && a_.max_genus) {
      throw Usage("--max-genus and --exhaustive are exclusive");
    }
    TreeOptions options;
    options.max_genus = a_.max_genus;
    options.node_ceiling = a_.ceiling;
    options.search = limits();
    const auto tree = tree_enumerate(parse_pattern(a_.pattern), a_.multiplicity, options);
    switch (format_) {
      case Format::Json: out_ << io::tree_json(tree) << '\n'; break;
      case Format::Dot: out_ << io::tree_dot(tree); break;
      case Format::Text: out_ << io::tree_text(tree); break;
    }
  }

  void closure_cmd() {
    require_format({Format::Text, Format::Json});
    const auto m = v_closure(parse_pattern(a_.pattern), a_.multiplicity, a_.elements, limits());
    if (format_ == Format::Json) {
      out_ << json{{"scale", m.scale}, {"core", m.core.minimal_generators()}}.dump() << '\n';
    } else {
      out_ << "scale=" << m.scale << " core=" << format_semigroup(m.core) << '\n';
    }
  }

  void mingen_cmd() {
    require_format({Format::Text, Format::Json});
    const auto p = parse_pattern(a_.pattern);
    const auto s = parse_semigroup(a_.semigroup);
    std::vector<Int> gens;
    std::optional<std::vector<Int>> discrepancies;
    if (a_.sweep) {
      auto sweep = sweep_minimal_v_generators(s, p, limits());
      gens = std::move(sweep.generators);
      discrepancies = std::move(sweep.discrepancies);
    } else {
      gens = minimal_v_generating_system(s, p, limits());
    }
    if (format_ == Format::Json) {
      json j{{"generators", gens}};
      if (discrepancies) j["discrepancies"] = *discrepancies;
      out_ << j.dump() << '\n';
    } else {
      out_ << '{' << join(gens) << "}\n";
      if (discrepancies && !discrepancies->empty()) {
        out_ << "discrepancies {" << join(*discrepancies) << "}\n";
      }
    }
  }

  void finite_cmd() {
    require_format({Format::Text, Format::Json});
    const bool finite = is_variety_finite(parse_pattern(a_.pattern), a_.multiplicity);
    if (format_ == Format::Json) {
      out_ << json{{"finite", finite}}.dump() << '\n';
    } else {
      out_ << boolean(finite) << '\n';
    }
  }

  void family_cmd() {
    require_format({Format::Text, Format::Json});
    const auto s = infinite_family_witness(parse_pattern(a_.pattern), a_.multiplicity, a_.k);
    if (format_ == Format::Json) {
      out_ << io::semigroup_json(s) << '\n';
    } else {
      out_ << format_semigroup(s) << '\n';
    }
  }

  void multiple_cmd() {
    require_format({Format::Text, Format::Json});
    const auto r = multiple_of_multiplicity_check(a_.coeffs, a_.k, a_.multiplicity);
    if (format_ == Format::Json) {
      out_ << json{{"applicable", r.applicable}, {"ordinary_admits", r.ordinary_admits}}.dump()
           << '\n';
    } else {
      out_ << "applicable=" << boolean(r.applicable)
           << " ordinary_admits=" << boolean(r.ordinary_admits) << '\n';
    }
  }

  void bound_cmd() {
    require_format({Format::Text, Format::Json});
    const auto r = bound_report(parse_semigroup(a_.semigroup), a_.q);
    if (format_ == Format::Json) {
      json j{{"gm", r.gm},
             {"lewittes", r.lewittes},
             {"br", r.br},
             {"coincide_gm_lewittes", r.coincide_gm_lewittes},
             {"coincide_br", r.coincide_br},
             {"failing_generator", r.failing_generator ? json(*r.failing_generator) : json()}};
      out_ << j.dump() << '\n';
    } else {
      out_ << "gm=" << r.gm << "\nlewittes=" << r.lewittes << "\nbr=" << r.br
           << "\ngm_equals_lewittes=" << boolean(r.coincide_gm_lewittes)
           << "\nbr_equals_1+(q-1)m=" << boolean(r.coincide_br) << '\n';
      if (r.failing_generator) out_ << "failing_generator=" << *r.failing_generator << '\n';
    }
  }

  void semigroup_cmd() {
    require_format({Format::Text, Format::Json});
    const auto s = parse_semigroup(a_.semigroup);
    std::optional<std::vector<Int>> ap;
    std::optional<NumericalSemigroup> quot;
    if (a_.apery != 0) ap = s.apery(a_.apery);
    if (a_.quotient != 0) quot = s.quotient(a_.quotient);
    if (format_ == Format::Json) {
      auto j = json::parse(io::semigroup_json(s));
      j["med"] = s.is_med();
      if (ap) j["apery"] = *ap;
      if (quot) j["quotient"] = quot->minimal_generators();
      out_ << j.dump() << '\n';
    } else {
      out_ << format_semigroup(s) << "\nmultiplicity=" << s.multiplicity()
           << "\nfrobenius=" << s.frobenius() << "\ngenus=" << s.genus() << "\ngaps={"
           << join(s.gaps()) << "}\nembedding_dimension=" << s.embedding_dimension()
           << "\nmed=" << boolean(s.is_med()) << '\n';
      if (ap) out_ << "apery={" << join(*ap) << "}\n";
      if (quot) out_ << "quotient=" << format_semigroup(*quot) << '\n';
    }
  }

  void oracle_check_cmd() {
    require_format({Format::Text, Format::Json});
    if (!a_.max_genus) throw Usage("oracle-check needs --max-genus");
    const auto p = parse_pattern(a_.pattern);
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
    oracle::for_each_semigroup(*a_.max_genus, a_.oracle_multiplicity,
                               [&](const NumericalSemigroup& s) {
                                 ++checked;
                                 const bool exact = admits(s, p, limits());
                                 const bool naive =
                                     oracle::naive_admits(s, p, oracle::triple_bound(s, p));
                                 if (exact != naive) mismatches.push_back(format_semigroup(s));
                               });
    if (format_ == Format::Json) {
      out_ << json{{"checked", checked}, {"mismatches", mismatches}}.dump() << '\n';
    } else {
      out_ << "checked=" << checked << " mismatches=" << mismatches.size() << '\n';
      for (const auto& s : mismatches) out_ << "mismatch " << s << '\n';
    }
  }

  void oracle_enumerate_cmd() {
    require_format({Format::Text, Format::Json});
    const auto all = oracle::enumerate_semigroups(a_.max_genus.value_or(0), a_.oracle_multiplicity);
    if (format_ == Format::Json) {
      json list = json::array();
      for (const auto& s : all) list.push_back(s.minimal_generators());
      out_ << json{{"semigroups", list}}.dump() << '\n';
    } else {
      for (const auto& s : all) out_ << format_semigroup(s) << " genus=" << s.genus() << '\n';
    }
  }

  void oracle_counts_cmd() {
    require_format({Format::Text, Format::Json});
    const auto counts = oracle::genus_counts(a_.max_genus.value_or(0));
    if (format_ == Format::Json) {
      out_ << json{{"counts", counts}}.dump() << '\n';
    } else {
      for (std::size_t g = 0; g < counts.size(); ++g) out_ << g << ' ' << counts[g] << '\n';
    }
  }

  void oracle_naive_cmd() {
    require_format({Format::Text, Format::Json});
    const auto p = parse_pattern(a_.pattern);
    const auto s = parse_semigroup(a_.semigroup);
    const Int bound = a_.bound > 0 ? a_.bound : oracle::triple_bound(s, p);
    const bool ok = oracle::naive_admits(s, p, bound);
    if (format_ == Format::Json) {
      out_ << json{{"admits", ok}, {"bound", bound}}.dump() << '\n';
    } else {
      out_ << boolean(ok) << '\n';
    }
  }

 private:
  const Args& a_;
  Format format_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonhomogeneous patterns on numerical semigroups", "patsemi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");

  Args a;
  std::string format = "text";
  int threads = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for parallel kernels (0 = default)");
  app.add_option("--search-ceiling", a.search_ceiling, "Largest admissible search volume");

  auto pattern_arg = [&](CLI::App* sub) {
    sub->add_option("pattern", a.pattern, "Pattern, e.g. x1+x2-1")->required();
  };
  auto semigroup_arg = [&](CLI::App* sub) {
    sub->add_option("semigroup", a.semigroup, "Semigroup, e.g. <5,6,8,9> or gaps:1,2,3")
        ->required();
  };
  auto multiplicity_opt = [&](CLI::App* sub) {
    sub->add_option("-m,--multiplicity", a.multiplicity, "Multiplicity")->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Admissibility class of a pattern");
  pattern_arg(classify_cmd);
  auto* mult_cmd = app.add_subcommand("multiplicities", "p-admissible multiplicities");
  pattern_arg(mult_cmd);
  auto* admits_cmd = app.add_subcommand("admits", "Decide whether a semigroup admits a pattern");
  pattern_arg(admits_cmd);
  semigroup_arg(admits_cmd);
  auto* witness_cmd = app.add_subcommand("witness", "First violating sequence, if any");
  pattern_arg(witness_cmd);
  semigroup_arg(witness_cmd);
  auto* children_cmd = app.add_subcommand("children", "Children of a node in the variety tree");
  pattern_arg(children_cmd);
  semigroup_arg(children_cmd);
  auto* tree_cmd = app.add_subcommand("tree", "Tree of multiplicity-m semigroups admitting p");
  pattern_arg(tree_cmd);
  multiplicity_opt(tree_cmd);
  tree_cmd->add_option("--max-genus", a.max_genus, "Genus cap");
  tree_cmd->add_flag("--exhaustive", a.exhaustive, "Walk the whole tree");
  tree_cmd->add_option("--ceiling", a.ceiling, "Node ceiling")->capture_default_str();
  auto* closure_cmd = app.add_subcommand("closure", "Closure of a set under + and p");
  pattern_arg(closure_cmd);
  multiplicity_opt(closure_cmd);
  closure_cmd->add_option("elements", a.elements, "Elements")->required();
  auto* mingen_cmd = app.add_subcommand("mingen", "Minimal generating system in the variety");
  pattern_arg(mingen_cmd);
  semigroup_arg(mingen_cmd);
  mingen_cmd->add_flag("--sweep", a.sweep, "Test every member from scratch and report mismatches");
  auto* finite_cmd = app.add_subcommand("finite", "Whether the variety is finite");
  pattern_arg(finite_cmd);
  multiplicity_opt(finite_cmd);
  auto* family_cmd = app.add_subcommand("family", "Member of the infinite family (gcd(m,a0) > 1)");
  pattern_arg(family_cmd);
  multiplicity_opt(family_cmd);
  family_cmd->add_option("-k", a.k, "Start of the final interval")->required();
  auto* multiple_cmd =
      app.add_subcommand("multiple-check", "Pattern sum ai*xi + k*m against {0,m,->}");
  multiple_cmd->add_option("coeffs", a.coeffs, "Coefficients a1 a2 ...")->required();
  multiple_cmd->add_option("-k", a.k, "Constant factor k")->required();
  multiplicity_opt(multiple_cmd);
  auto* bound_cmd = app.add_subcommand("bound", "Geil-Matsumoto, Lewittes and Beelen-Ruano bounds");
  semigroup_arg(bound_cmd);
  bound_cmd->add_option("-q", a.q, "Field size")->capture_default_str();
  auto* semigroup_cmd = app.add_subcommand("semigroup", "Invariants of a semigroup");
  semigroup_arg(semigroup_cmd);
  semigroup_cmd->add_option("--apery", a.apery, "Apery set with respect to this member");
  semigroup_cmd->add_option("--quotient", a.quotient, "Quotient by this positive integer");
  auto* check_cmd =
      app.add_subcommand("oracle-check", "Compare admits with brute force over a semigroup family");
  pattern_arg(check_cmd);
  check_cmd->add_option("--max-genus", a.max_genus, "Genus cap")->required();
  check_cmd->add_option("-m,--multiplicity", a.oracle_multiplicity, "Multiplicity filter");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference tools");
  oracle_cmd->require_subcommand(1);
  auto* enumerate_cmd = oracle_cmd->add_subcommand("enumerate", "All semigroups up to a genus");
  enumerate_cmd->add_option("--max-genus", a.max_genus, "Genus cap")->required();
  enumerate_cmd->add_option("-m,--multiplicity", a.oracle_multiplicity, "Multiplicity filter");
  auto* counts_cmd = oracle_cmd->add_subcommand("counts", "Semigroup counts per genus");
  counts_cmd->add_option("--max-genus", a.max_genus, "Genus cap")->required();
  auto* naive_cmd = oracle_cmd->add_subcommand("naive-admits", "Brute-force admission check");
  pattern_arg(naive_cmd);
  semigroup_arg(naive_cmd);
  naive_cmd->add_option("--bound", a.bound, "Largest s1 (default: triple bound)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  const Format fmt = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
  Runner r(a, fmt, out);
  try {
    if (*classify_cmd) r.classify_cmd();
    else if (*mult_cmd) r.multiplicities_cmd();
    else if (*admits_cmd) r.admits_cmd();
    else if (*witness_cmd) r.witness_cmd();
    else if (*children_cmd) r.children_cmd();
    else if (*tree_cmd) r.tree_cmd();
    else if (*closure_cmd) r.closure_cmd();
    else if (*mingen_cmd) r.mingen_cmd();
    else if (*finite_cmd) r.finite_cmd();
    else if (*family_cmd) r.family_cmd();
    else if (*multiple_cmd) r.multiple_cmd();
    else if (*bound_cmd) r.bound_cmd();
    else if (*semigroup_cmd) r.semigroup_cmd();
    else if (*check_cmd) r.oracle_check_cmd();
    else if (*enumerate_cmd) r.oracle_enumerate_cmd();
    else if (*counts_cmd) r.oracle_counts_cmd();
    else if (*naive_cmd) r.oracle_naive_cmd();
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (category(e.code())) {
      case ErrorCategory::Input: return kExitInput;
      case ErrorCategory::Precondition: return kExitPrecondition;
      case ErrorCategory::Resource: return kExitResource;
    }
  }
  return kExitOk;
}

}  // namespace patsemi::cli
