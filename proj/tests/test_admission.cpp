#include <doctest.h>

#include "patsemi/admission.hpp"
#include "patsemi/error.hpp"
#include "patsemi/oracle.hpp"
#include "support.hpp"

using namespace patsemi;
using patsemi::testing::generous_bound;

namespace {

NumericalSemigroup gen(std::initializer_list<Int> g) { return NumericalSemigroup::from_generators(g); }

void check_witness(const NumericalSemigroup& s, const Pattern& p, const Witness& w) {
  REQUIRE(w.sequence.size() == p.length());
  for (std::size_t i = 0; i < w.sequence.size(); ++i) {
    CHECK(w.sequence[i] > 0);
    CHECK(s.contains(w.sequence[i]));
    if (i > 0) CHECK(w.sequence[i - 1] >= w.sequence[i]);
  }
  CHECK(p.evaluate(w.sequence) == w.value);
  CHECK_FALSE(s.contains(w.value));
}

}  // namespace

TEST_CASE("admission examples") {
  const auto o5 = NumericalSemigroup::ordinary(5);
  const Pattern med({1, 1}, -1);
  CHECK(admits(o5, med));
  CHECK_FALSE(violating_sequence(o5, med));

  const auto o3 = NumericalSemigroup::ordinary(3);
  const Pattern gm({2}, -6);
  CHECK_FALSE(admits(o3, gm));
  auto w = violating_sequence(o3, gm);
  REQUIRE(w);
  CHECK(w->sequence == std::vector<Int>{4});
  CHECK(w->value == 2);

  const auto s = gen({3, 7, 8});
  CHECK(s.members_below(7) == std::vector<Int>{0, 3, 6});
  CHECK(admits(s, gm));

  const auto no9 = o5.remove_element(9);
  CHECK(no9 == gen({5, 6, 7, 8}));
  CHECK_FALSE(admits(no9, med));
  w = violating_sequence(no9, med);
  REQUIRE(w);
  CHECK(w->sequence == std::vector<Int>{5, 5});
  CHECK(w->value == 9);
}

TEST_CASE("full set") {
  const NumericalSemigroup n0;
  CHECK(admits(n0, Pattern({1}, -1)));
  CHECK_FALSE(admits(n0, Pattern({1}, -2)));
  CHECK(admits(n0, Pattern({1, 1, -1}, 0)));
  const auto box = delta_box(n0, Pattern({1}, -1));
  CHECK(box.slack == -1);
  CHECK(box.multiplicity == 1);
}

TEST_CASE("negative partial sums") {
  const Pattern p({-1, 2}, 3);
  for (const auto& s : {NumericalSemigroup(), gen({2, 3}), gen({5, 6, 8, 9})}) {
    CAPTURE(format_semigroup(s));
    CHECK_FALSE(admits(s, p));
    const auto w = violating_sequence(s, p);
    REQUIRE(w);
    check_witness(s, p, *w);
  }
  // s1 = 6 is the first member that takes -s1 + 2*1 + 3 below 0.
  const auto w = violating_sequence(NumericalSemigroup(), p);
  CHECK(w->sequence == std::vector<Int>{6, 1});
  CHECK(w->value == -1);
  CHECK_THROWS_AS(delta_box(NumericalSemigroup(), p), Error);
}

TEST_CASE("delta boxes") {
  auto box = delta_box(NumericalSemigroup::ordinary(3), Pattern({2}, -6));
  CHECK(box.slack == 2);
  CHECK(box.bounds == std::vector<Int>{1});
  CHECK(box.volume() == 2);

  // Arf pattern on <3,5,7>: sigma = (1,2,1), F = 4, slack 1.
  box = delta_box(gen({3, 5, 7}), Pattern({1, 1, -1}, 0));
  CHECK(box.sums == std::vector<Int>{1, 2, 1});
  CHECK(box.slack == 1);
  CHECK(box.bounds == std::vector<Int>{1, 0, 1});
  CHECK(box.volume() == 4);

  // A zero partial sum is capped at the conductor.
  box = delta_box(gen({5, 6, 8, 9}), Pattern({1, -1, 2}, -3));
  CHECK(box.sums == std::vector<Int>{1, 0, 2});
  CHECK(box.slack == 0);
  CHECK(box.bounds == std::vector<Int>{0, 8, 0});
}

TEST_CASE("search ceiling") {
  const auto s = gen({40, 41});
  const Pattern p({1, -1, 1, -1, 1}, 0);
  SearchLimits tight;
  tight.volume_ceiling = 100;
  try {
    admits(s, p, tight);
    FAIL("expected SearchTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchTooLarge);
    CHECK(category(e.code()) == ErrorCategory::Resource);
  }
  CHECK_THROWS_AS(violating_sequence(s, p, tight), Error);
}

TEST_CASE("minimal V-generators") {
  const auto o5 = NumericalSemigroup::ordinary(5);
  const Pattern p({1, 1}, -1);
  CHECK_FALSE(is_minimal_v_generator(o5, p, 9));
  CHECK(is_minimal_v_generator(o5, p, 7));
  CHECK(is_minimal_v_generator(o5, p, 6));
  CHECK(is_minimal_v_generator(o5, p, 8));
  CHECK_FALSE(is_minimal_v_generator(o5, p, 5));
  CHECK_FALSE(is_minimal_v_generator(o5, p, 10));

  auto code = [&](const NumericalSemigroup& s, const Pattern& q, Int x) {
    try {
      is_minimal_v_generator(s, q, x);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code(o5.remove_element(9), p, 6) == ErrorCode::PreconditionViolated);
  CHECK(code(gen({5, 6, 8, 9}), p, 7) == ErrorCode::PreconditionViolated);
  CHECK(code(o5, p, 0) == ErrorCode::PreconditionViolated);
  CHECK(code(NumericalSemigroup::ordinary(3), Pattern({2}, -6), 4) ==
        ErrorCode::PreconditionViolated);
  CHECK(code(o5, Pattern({1, -1, 1}, 1), 6) == ErrorCode::PreconditionViolated);
}

TEST_CASE("property: kernels agree with the brute-force oracle") {
  std::vector<NumericalSemigroup> family;
  for (Int m = 1; m <= 4; ++m) {
    for (auto& s : oracle::enumerate_semigroups(7, m)) family.push_back(std::move(s));
  }
  SearchLimits serial;
  serial.parallel = false;
  for (const auto& p : oracle::pattern_grid(3, 2, 5)) {
    for (const auto& s : family) {
      const bool expected = oracle::naive_admits(s, p, generous_bound(s, p));
      const bool fast = admits(s, p);
      if (fast != expected || admits(s, p, serial) != expected) {
        FAIL_CHECK(format_semigroup(s) << " " << format_pattern(p));
        continue;
      }
      CHECK(admits_serial(s, p) == expected);
      const auto w = violating_sequence(s, p);
      CHECK(w.has_value() == !expected);
      if (w) check_witness(s, p, *w);
    }
  }
}

TEST_CASE("property: large boxes take the parallel path and agree") {
  const std::vector<NumericalSemigroup> family{gen({11, 13}), gen({17, 19, 23}),
                                               gen({9, 31}), gen({13, 14, 15, 16})};
  const std::vector<Pattern> patterns{Pattern({1, -1, 1}, 0),      Pattern({1, -1, 1}, 3),
                                      Pattern({2, -2, 1}, 1),      Pattern({1, -1, 3}, -4),
                                      Pattern({1, 1, -1}, 0),       Pattern({1, -1, 2}, -5),
                                      Pattern({3, -3, 1}, 2)};
  for (const auto& s : family) {
    for (const auto& p : patterns) {
      CAPTURE(format_semigroup(s));
      CAPTURE(format_pattern(p));
      const bool fast = admits(s, p);
      CHECK(fast == admits_serial(s, p));
      const auto w = violating_sequence(s, p);
      CHECK(w.has_value() == !fast);
      if (w) check_witness(s, p, *w);
    }
  }
  CHECK(delta_box(gen({11, 13}), Pattern({1, -1, 1}, 0)).volume() >= (1u << 16));
}

TEST_CASE("property: witnesses of strongly admissible patterns stay below F") {
  const auto family = oracle::enumerate_semigroups(9);
  for (const auto& p : oracle::pattern_grid(3, 2, 4)) {
    if (!is_strongly_admissible(p)) continue;
    const auto cond = admissible_multiplicities(p);
    for (const auto& s : family) {
      if (!cond.admits(s.multiplicity())) continue;
      const auto w = violating_sequence(s, p);
      if (w) CHECK(w->sequence.front() <= s.frobenius());
    }
  }
}

TEST_CASE("property: variety closure laws") {
  const auto family = oracle::enumerate_semigroups(9);
  for (const auto& p : oracle::pattern_grid(2, 2, 4)) {
    if (!is_strongly_admissible(p)) continue;
    const auto cond = admissible_multiplicities(p);
    std::vector<const NumericalSemigroup*> in;
    for (const auto& s : family) {
      if (cond.admits(s.multiplicity()) && admits(s, p)) in.push_back(&s);
    }
    for (const auto* s : in) {
      if (!s->is_ordinary()) CHECK(admits(s->adjoin_frobenius(), p));
    }
    for (std::size_t i = 0; i < in.size(); i += 5) {
      for (std::size_t j = i + 1; j < in.size(); j += 3) {
        if (in[i]->multiplicity() != in[j]->multiplicity()) continue;
        CHECK(admits(in[i]->intersect(*in[j]), p));
      }
    }
  }
}
