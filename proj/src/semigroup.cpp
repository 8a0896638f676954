#include "patsemi/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "patsemi/error.hpp"

namespace patsemi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::IsFullSet: return "IsFullSet";
    case ErrorCode::NotMinimalGenerator: return "NotMinimalGenerator";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NegativeLead: return "NegativeLead";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::GcdIsOne: return "GcdIsOne";
    case ErrorCode::ElementBelowMultiplicity: return "ElementBelowMultiplicity";
    case ErrorCode::ConductorTooLarge: return "ConductorTooLarge";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::NodeCeilingExceeded: return "NodeCeilingExceeded";
  }
  return "Unknown";
}

ErrorCategory category(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NotCofinite:
    case ErrorCode::InvalidArgument:
      return ErrorCategory::Input;
    case ErrorCode::ConductorTooLarge:
    case ErrorCode::SearchTooLarge:
    case ErrorCode::NodeCeilingExceeded:
      return ErrorCategory::Resource;
    default:
      return ErrorCategory::Precondition;
  }
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

NumericalSemigroup::NumericalSemigroup() = default;

// Trims trailing members so that the stored length equals the conductor,
// then caches the invariants. Callers guarantee additive closure.
NumericalSemigroup::NumericalSemigroup(Unchecked, std::vector<std::uint8_t> bits) {
  while (!bits.empty() && bits.back() != 0) bits.pop_back();
  bits_ = std::move(bits);
  conductor_ = static_cast<Int>(bits_.size());
  multiplicity_ = 1;
  genus_ = 0;
  if (conductor_ == 0) return;
  multiplicity_ = conductor_;
  for (Int x = 1; x < conductor_; ++x) {
    if (bits_[static_cast<std::size_t>(x)] != 0) {
      multiplicity_ = x;
      break;
    }
  }
  genus_ = static_cast<Int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{0}));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> generators,
                                                       Int limit) {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty generator set");
  }
  std::vector<Int> gens;
  for (Int g : generators) {
    if (g < 0) throw Error(ErrorCode::InvalidArgument, "negative generator " + std::to_string(g));
    if (g > 0) gens.push_back(g);
  }
  if (gens.empty() || gcd_of(gens) != 1) {
    throw Error(ErrorCode::NotCofinite, "generators have gcd " + std::to_string(gcd_of(gens)));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const Int smallest = gens.front();

  // Sieve upward until `smallest` consecutive members appear; the first
  // member of that run is the conductor.
  std::vector<std::uint8_t> reach{1};
  Int run = 0;
  Int x = 0;
  while (run < smallest) {
    ++x;
    if (x > limit + smallest) {
      throw Error(ErrorCode::ConductorTooLarge,
                  "conductor exceeds limit " + std::to_string(limit));
    }
    std::uint8_t hit = 0;
    for (Int g : gens) {
      if (g > x) break;
      if (reach[static_cast<std::size_t>(x - g)] != 0) {
        hit = 1;
        break;
      }
    }
    reach.push_back(hit);
    run = hit ? run + 1 : 0;
  }
  reach.resize(static_cast<std::size_t>(x - smallest + 1));
  if (static_cast<Int>(reach.size()) > limit) {
    throw Error(ErrorCode::ConductorTooLarge, "conductor exceeds limit " + std::to_string(limit));
  }
  return NumericalSemigroup(Unchecked{}, std::move(reach));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Int> generators) {
  return from_generators(std::span<const Int>(generators.begin(), generators.size()));
}

NumericalSemigroup NumericalSemigroup::ordinary(Int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "multiplicity must be positive");
  if (m > kDefaultConductorLimit) {
    throw Error(ErrorCode::ConductorTooLarge, "conductor exceeds limit");
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(m), 0);
  bits[0] = 1;
  return NumericalSemigroup(Unchecked{}, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const Int> gaps) {
  Int top = 0;
  for (Int g : gaps) {
    if (g <= 0) throw Error(ErrorCode::InvalidArgument, "gaps must be positive");
    top = std::max(top, g);
  }
  if (top >= kDefaultConductorLimit) {
    throw Error(ErrorCode::ConductorTooLarge, "conductor exceeds limit");
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(top + 1), 1);
  for (Int g : gaps) bits[static_cast<std::size_t>(g)] = 0;
  return from_membership(std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<std::uint8_t> bits) {
  if (!bits.empty() && bits[0] == 0) {
    throw Error(ErrorCode::InvalidArgument, "0 must be a member");
  }
  const auto n = static_cast<Int>(bits.size());
  for (Int x = 1; x < n; ++x) {
    if (bits[static_cast<std::size_t>(x)] == 0) continue;
    for (Int y = x; x + y < n; ++y) {
      if (bits[static_cast<std::size_t>(y)] != 0 && bits[static_cast<std::size_t>(x + y)] == 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "not closed under addition: " + std::to_string(x) + " + " +
                        std::to_string(y) + " is missing");
      }
    }
  }
  return NumericalSemigroup(Unchecked{}, std::move(bits));
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Int x = 1; x < conductor_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::members_below(Int bound) const {
  std::vector<Int> out;
  for (Int x = 0; x < bound; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::apery(Int x) const {
  if (x <= 0 || !contains(x)) {
    throw Error(ErrorCode::NotMember, std::to_string(x) + " is not a nonzero member");
  }
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(x));
  for (Int s = 0; s < conductor_ + x; ++s) {
    if (contains(s) && !contains(s - x)) out.push_back(s);
  }
  return out;
}

bool NumericalSemigroup::is_minimal_generator(Int x) const {
  if (x <= 0 || !contains(x)) return false;
  for (Int y = multiplicity_; 2 * y <= x; ++y) {
    if (contains(y) && contains(x - y)) return false;
  }
  return true;
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
  std::vector<Int> out;
  for (Int x = multiplicity_; x < generator_bound(); ++x) {
    if (is_minimal_generator(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::minimal_generators_above_frobenius() const {
  std::vector<Int> out;
  for (Int x = std::max(conductor_, Int{1}); x < generator_bound(); ++x) {
    if (is_minimal_generator(x)) out.push_back(x);
  }
  return out;
}

Int NumericalSemigroup::embedding_dimension() const {
  return static_cast<Int>(minimal_generators().size());
}

NumericalSemigroup NumericalSemigroup::intersect(const NumericalSemigroup& other) const {
  const Int c = std::max(conductor_, other.conductor_);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(c));
  for (Int x = 0; x < c; ++x) {
    bits[static_cast<std::size_t>(x)] = (contains(x) && other.contains(x)) ? 1 : 0;
  }
  return NumericalSemigroup(Unchecked{}, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::adjoin_frobenius() const {
  if (is_full()) throw Error(ErrorCode::IsFullSet, "the full set has no Frobenius number");
  auto bits = bits_;
  bits.back() = 1;
  return NumericalSemigroup(Unchecked{}, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::remove_element(Int x) const {
  if (!is_minimal_generator(x)) {
    throw Error(ErrorCode::NotMinimalGenerator, std::to_string(x) + " is not a minimal generator");
  }
  auto bits = bits_;
  if (x >= conductor_) bits.resize(static_cast<std::size_t>(x + 1), 1);
  bits[static_cast<std::size_t>(x)] = 0;
  return NumericalSemigroup(Unchecked{}, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::quotient(Int k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "quotient needs k >= 1");
  const Int c = (conductor_ + k - 1) / k;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(c));
  for (Int x = 0; x < c; ++x) bits[static_cast<std::size_t>(x)] = contains(k * x) ? 1 : 0;
  return NumericalSemigroup(Unchecked{}, std::move(bits));
}

bool NumericalSemigroup::is_subset_of(const NumericalSemigroup& other) const {
  if (conductor_ < other.conductor_) {
    for (Int x = conductor_; x < other.conductor_; ++x) {
      if (!other.contains(x)) return false;
    }
  }
  for (Int x = 0; x < conductor_; ++x) {
    if (contains(x) && !other.contains(x)) return false;
  }
  return true;
}

bool canonical_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (a.genus() != b.genus()) return a.genus() < b.genus();
  return a.minimal_generators() < b.minimal_generators();
}

std::string format_semigroup(const NumericalSemigroup& s) {
  std::string out = "<";
  bool first = true;
  for (Int g : s.minimal_generators()) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  out += '>';
  return out;
}

namespace {

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  if (pos == text.size()) return out;
  while (true) {
    skip_space();
    Int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) {
      throw Error(ErrorCode::ParseError, "expected integer in '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw Error(ErrorCode::ParseError, "expected ',' in '" + std::string(text) + "'");
    }
    ++pos;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

NumericalSemigroup parse_semigroup(std::string_view text) {
  text = trim(text);
  if (text.starts_with("gaps:")) {
    auto gaps = parse_int_list(text.substr(5));
    return NumericalSemigroup::from_gaps(gaps);
  }
  if (text.starts_with("<")) {
    if (!text.ends_with(">")) throw Error(ErrorCode::ParseError, "missing '>'");
    text = text.substr(1, text.size() - 2);
  }
  auto gens = parse_int_list(text);
  if (gens.empty()) throw Error(ErrorCode::ParseError, "empty generator list");
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace patsemi
