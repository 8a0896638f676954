#include "patsemi/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "patsemi/admission.hpp"
#include "patsemi/error.hpp"

namespace patsemi {

Pattern::Pattern(std::vector<Int> coefficients, Int constant)
    : coefficients_(std::move(coefficients)), constant_(constant) {
  if (coefficients_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a pattern needs at least one variable");
  }
  for (Int a : coefficients_) {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "pattern coefficients must be nonzero");
  }
}

std::vector<Int> Pattern::partial_sums() const {
  std::vector<Int> sums(coefficients_.size());
  Int acc = 0;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    acc += coefficients_[i];
    sums[i] = acc;
  }
  return sums;
}

Int Pattern::total() const {
  Int acc = 0;
  for (Int a : coefficients_) acc += a;
  return acc;
}

Int Pattern::evaluate(std::span<const Int> values) const {
  if (values.size() != coefficients_.size()) {
    throw Error(ErrorCode::InvalidArgument, "pattern evaluated at the wrong number of values");
  }
  Int acc = constant_;
  for (std::size_t i = 0; i < values.size(); ++i) acc += coefficients_[i] * values[i];
  return acc;
}

std::string_view to_string(Admissibility a) noexcept {
  switch (a) {
    case Admissibility::Empty: return "empty";
    case Admissibility::ExactlyN0: return "exactly-N0";
    case Admissibility::Admissible: return "admissible";
  }
  return "unknown";
}

namespace {

// Smallest positive partial sum among sigma_1..sigma_{n-1}. When the last
// partial sum is 0 these are the only ones that move the value of p.
Int smallest_positive_leading_sum(const std::vector<Int>& sums) {
  Int best = 0;
  for (std::size_t j = 0; j + 1 < sums.size(); ++j) {
    if (sums[j] > 0 && (best == 0 || sums[j] < best)) best = sums[j];
  }
  return best;
}

Int ceil_div(Int num, Int den) {
  // den > 0
  if (num >= 0) return (num + den - 1) / den;
  return -((-num) / den);
}

}  // namespace

Admissibility classify(const Pattern& p) {
  const auto sums = p.partial_sums();
  if (std::any_of(sums.begin(), sums.end(), [](Int s) { return s < 0; })) {
    return Admissibility::Empty;
  }
  const Int total = sums.back();
  const Int a0 = p.constant();
  if (a0 < 0) {
    if (total <= 0) return Admissibility::Empty;
    if (total == 1) {
      // p(1,...,1) = 1 + a0, so only a0 = -1 keeps the full set.
      return a0 == -1 ? Admissibility::ExactlyN0 : Admissibility::Empty;
    }
    return Admissibility::Admissible;
  }
  if (total >= 1) return Admissibility::Admissible;
  // total == 0: p(s,...,s) = a0 for every s, and with a0 = 0 the value
  // sigma_j is reached by a unit step at position j.
  if (a0 >= 2) return Admissibility::Admissible;
  if (a0 == 1) return Admissibility::ExactlyN0;
  const Int step = smallest_positive_leading_sum(sums);
  return step >= 2 ? Admissibility::Admissible : Admissibility::ExactlyN0;
}

std::string to_string(const MultiplicityCondition& c) {
  switch (c.kind) {
    case MultiplicityCondition::Kind::LowerBounded:
      return "m >= " + std::to_string(c.low);
    case MultiplicityCondition::Kind::All:
      return "all m >= 1";
    case MultiplicityCondition::Kind::Interval:
      return std::to_string(c.low) + " <= m <= " + std::to_string(c.high);
  }
  return {};
}

MultiplicityCondition admissible_multiplicities(const Pattern& p) {
  if (classify(p) != Admissibility::Admissible) {
    throw Error(ErrorCode::NotAdmissible, format_pattern(p) + " is not admissible");
  }
  const auto sums = p.partial_sums();
  const Int total = sums.back();
  const Int a0 = p.constant();
  if (total > 1) {
    return {MultiplicityCondition::Kind::LowerBounded, std::max<Int>(1, ceil_div(-a0, total - 1))};
  }
  if (total == 1) return {MultiplicityCondition::Kind::All, 1};
  if (a0 > 0) return {MultiplicityCondition::Kind::Interval, 1, a0};
  return {MultiplicityCondition::Kind::Interval, 1, smallest_positive_leading_sum(sums)};
}

DerivedPattern derived_pattern(const Pattern& p) {
  const auto a = p.coefficients();
  if (a[0] < 1) {
    throw Error(ErrorCode::NegativeLead, "derived pattern needs a1 >= 1");
  }
  if (a[0] > 1) {
    std::vector<Int> next(a.begin(), a.end());
    --next[0];
    return {Pattern(std::move(next), p.constant()), p.constant()};
  }
  if (a.size() == 1) return {std::nullopt, p.constant()};
  return {Pattern(std::vector<Int>(a.begin() + 1, a.end()), p.constant()), p.constant()};
}

bool is_strongly_admissible(const Pattern& p) {
  if (classify(p) != Admissibility::Admissible) return false;
  const auto derived = derived_pattern(p);
  if (derived.degenerate()) return true;
  const auto sums = derived.pattern->partial_sums();
  return std::all_of(sums.begin(), sums.end(), [](Int s) { return s >= 0; });
}

bool is_variety_setting(const Pattern& p, Int m) {
  return is_strongly_admissible(p) && admissible_multiplicities(p).admits(m);
}

MultipleOfMultiplicity multiple_of_multiplicity_check(std::span<const Int> coefficients, Int k,
                                                      Int m) {
  if (m <= 1) throw Error(ErrorCode::InvalidArgument, "multiplicity must exceed 1");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be nonzero");
  const Pattern p(std::vector<Int>(coefficients.begin(), coefficients.end()), k * m);
  const auto sums = p.partial_sums();
  MultipleOfMultiplicity out;
  out.applicable = k == -1 || std::find(sums.begin(), sums.end(), Int{1}) != sums.end();
  if (out.applicable) {
    out.ordinary_admits = std::all_of(sums.begin(), sums.end(), [](Int s) { return s >= 0; }) &&
                          sums.back() + k >= 1;
  } else {
    out.ordinary_admits = admits(NumericalSemigroup::ordinary(m), p);
  }
  return out;
}

Pattern med_pattern(Int m) { return Pattern({1, 1}, -m); }
Pattern gm_pattern(Int q, Int m) { return Pattern({q}, -q * m); }
Pattern br_pattern(Int q, Int m) { return Pattern({q - 1}, -(q - 1) * m); }
Pattern config_pattern(Int n) { return Pattern({1, 1}, -n); }
Pattern arf_pattern() { return Pattern({1, 1, -1}, 0); }

std::string format_pattern(const Pattern& p) {
  std::string out;
  const auto a = p.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Int c = a[i];
    if (c < 0) {
      out += '-';
    } else if (i > 0) {
      out += '+';
    }
    const Int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += 'x';
    out += std::to_string(i + 1);
  }
  if (p.constant() > 0) {
    out += '+' + std::to_string(p.constant());
  } else if (p.constant() < 0) {
    out += std::to_string(p.constant());
  }
  return out;
}

namespace {

Int parse_integer(std::string_view s, std::string_view context) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError,
                "bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

std::vector<Int> parse_list(std::string_view s, std::string_view context) {
  std::vector<Int> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_integer(s.substr(0, comma), context));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

Pattern parse_machine_form(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorCode::ParseError, "missing ';const='");
  auto coeffs = text.substr(0, semi);
  auto cons = text.substr(semi + 1);
  if (!coeffs.starts_with("coeffs=") || !cons.starts_with("const=")) {
    throw Error(ErrorCode::ParseError, "expected coeffs=...;const=...");
  }
  auto list = parse_list(coeffs.substr(7), text);
  if (std::find(list.begin(), list.end(), Int{0}) != list.end()) {
    throw Error(ErrorCode::ParseError, "zero coefficient in '" + std::string(text) + "'");
  }
  return Pattern(std::move(list), parse_integer(cons.substr(6), text));
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw Error(ErrorCode::ParseError, "empty pattern");
  if (compact.starts_with("coeffs=")) return parse_machine_form(compact);

  std::map<Int, Int> coeffs;
  Int constant = 0;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    Int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' in '" + compact + "'");
    }
    auto end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) end = compact.size();
    std::string_view term(compact.data() + pos, end - pos);
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + compact + "'");
    pos = end;

    const auto x = term.find('x');
    if (x == std::string_view::npos) {
      constant += sign * parse_integer(term, compact);
      continue;
    }
    auto head = term.substr(0, x);
    if (head.ends_with('*')) head.remove_suffix(1);
    const Int mag = head.empty() ? 1 : parse_integer(head, compact);
    if (mag == 0) throw Error(ErrorCode::ParseError, "zero coefficient in '" + compact + "'");
    const Int index = parse_integer(term.substr(x + 1), compact);
    if (index < 1) throw Error(ErrorCode::ParseError, "variables are numbered from 1");
    coeffs[index] += sign * mag;
  }
  if (coeffs.empty()) throw Error(ErrorCode::ParseError, "pattern has no variables");
  std::vector<Int> list;
  Int expected = 1;
  for (auto [index, c] : coeffs) {
    if (index != expected) {
      throw Error(ErrorCode::ParseError, "variable x" + std::to_string(expected) + " is missing");
    }
    if (c == 0) {
      throw Error(ErrorCode::ParseError, "coefficient of x" + std::to_string(index) + " is zero");
    }
    list.push_back(c);
    ++expected;
  }
  return Pattern(std::move(list), constant);
}

}  // namespace patsemi
