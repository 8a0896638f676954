#include <doctest.h>

#include <numeric>
#include <random>

#include "patsemi/error.hpp"
#include "patsemi/semigroup.hpp"
#include "support.hpp"

using namespace patsemi;
using patsemi::testing::brute_closure;
using patsemi::testing::brute_gaps;

namespace {

NumericalSemigroup gen(std::initializer_list<Int> g) { return NumericalSemigroup::from_generators(g); }

std::vector<NumericalSemigroup> random_family(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Int> value(2, 23);
  std::uniform_int_distribution<int> size(2, 4);
  std::vector<NumericalSemigroup> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Int> g;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) g.push_back(value(rng));
    if (gcd_of(g) != 1) continue;
    out.push_back(NumericalSemigroup::from_generators(g));
  }
  return out;
}

void check_additive_closure(const NumericalSemigroup& s) {
  for (Int x = 1; x < s.conductor(); ++x) {
    if (!s.contains(x)) continue;
    for (Int y = x; x + y < s.conductor(); ++y) {
      if (s.contains(y)) REQUIRE(s.contains(x + y));
    }
  }
}

}  // namespace

TEST_CASE("full set from generator 1") {
  const auto s = gen({1});
  CHECK(s.is_full());
  CHECK(s.frobenius() == -1);
  CHECK(s.genus() == 0);
  CHECK(s.multiplicity() == 1);
  CHECK(s == NumericalSemigroup());
  CHECK(s.minimal_generators() == std::vector<Int>{1});
}

TEST_CASE("closure of {5,6,8,9} matches brute-force sums") {
  const auto s = gen({5, 6, 8, 9});
  CHECK(s.gaps() == brute_gaps({5, 6, 8, 9}, 18));
  CHECK(s.gaps() == std::vector<Int>{1, 2, 3, 4, 7});
  CHECK(s.frobenius() == 7);
  CHECK(s.genus() == 5);
  CHECK(s.multiplicity() == 5);
  CHECK_FALSE(s.contains(7));
  CHECK(s.contains(10));
}

TEST_CASE("generators with gcd above 1 are rejected") {
  try {
    gen({2, 4});
    FAIL("expected NotCofinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCofinite);
  }
}

TEST_CASE("conductor limit is enforced") {
  const std::vector<Int> g{1000, 1001};
  CHECK_THROWS_AS(NumericalSemigroup::from_generators(g, 5000), Error);
  CHECK_NOTHROW(NumericalSemigroup::from_generators(g, 1'100'000));
}

TEST_CASE("ordinary semigroups") {
  CHECK(NumericalSemigroup::ordinary(1).is_full());
  const auto o5 = NumericalSemigroup::ordinary(5);
  CHECK(o5.gaps() == std::vector<Int>{1, 2, 3, 4});
  CHECK(o5.genus() == 4);
  CHECK(o5.frobenius() == 4);
  CHECK(o5.contains(7));
  CHECK_FALSE(o5.contains(-1));
  const auto o3 = NumericalSemigroup::ordinary(3);
  CHECK(o3.members_below(6) == std::vector<Int>{0, 3, 4, 5});
  CHECK(o3.is_ordinary());
}

TEST_CASE("apery sets") {
  CHECK(NumericalSemigroup::ordinary(5).apery(5) == std::vector<Int>{0, 6, 7, 8, 9});
  CHECK(gen({2, 3}).apery(2) == std::vector<Int>{0, 3});

  // Smallest member per residue class, from the brute-force closure.
  const auto members = brute_closure({5, 6, 8, 9}, 60);
  std::vector<Int> expected(5, -1);
  for (Int x : members) {
    if (expected[static_cast<std::size_t>(x % 5)] < 0) expected[static_cast<std::size_t>(x % 5)] = x;
  }
  std::sort(expected.begin(), expected.end());
  CHECK(gen({5, 6, 8, 9}).apery(5) == expected);
  CHECK(expected == std::vector<Int>{0, 6, 8, 9, 12});

  CHECK_THROWS_AS(gen({5, 6, 8, 9}).apery(7), Error);
  CHECK_THROWS_AS(gen({5, 6, 8, 9}).apery(0), Error);
}

TEST_CASE("minimal generators and embedding dimension") {
  CHECK(NumericalSemigroup::ordinary(5).minimal_generators() == std::vector<Int>{5, 6, 7, 8, 9});
  CHECK(gen({2, 3}).minimal_generators() == std::vector<Int>{2, 3});
  CHECK(gen({5, 6, 8, 9}).minimal_generators() == std::vector<Int>{5, 6, 8, 9});
  CHECK(gen({5, 6, 8, 9, 12, 13}).minimal_generators() == std::vector<Int>{5, 6, 8, 9});

  CHECK(NumericalSemigroup::ordinary(5).embedding_dimension() == 5);
  CHECK(NumericalSemigroup::ordinary(5).is_med());
  CHECK(gen({2, 3}).embedding_dimension() == 2);
  CHECK(gen({2, 3}).is_med());
  const auto s = gen({4, 6, 7});
  CHECK(s.embedding_dimension() == 3);
  CHECK(s.multiplicity() == 4);
  CHECK_FALSE(s.is_med());
}

TEST_CASE("intersections") {
  const auto o4 = NumericalSemigroup::ordinary(4);
  const auto o5 = NumericalSemigroup::ordinary(5);
  CHECK(o4.intersect(o5) == o5);
  const auto s = gen({5, 6, 8, 9});
  CHECK(s.intersect(NumericalSemigroup()) == s);

  const auto t = gen({5, 7, 9, 11, 13});
  const auto a = brute_closure({5, 6, 8, 9}, 60);
  const auto b = brute_closure({5, 7, 9, 11, 13}, 60);
  std::vector<Int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  const auto meet = s.intersect(t);
  CHECK(meet.members_below(61) == both);
  CHECK(meet.members_below(15) == std::vector<Int>{0, 5, 9, 10, 11, 12, 13, 14});
}

TEST_CASE("adjoining the Frobenius number") {
  CHECK(gen({5, 6, 8, 9}).adjoin_frobenius() == NumericalSemigroup::ordinary(5));
  CHECK(NumericalSemigroup::ordinary(5).adjoin_frobenius() == NumericalSemigroup::ordinary(4));
  CHECK(gen({5, 9, 13, 17, 21}).adjoin_frobenius() == gen({5, 9, 13, 16, 17}));
  CHECK_THROWS_AS(NumericalSemigroup().adjoin_frobenius(), Error);
}

TEST_CASE("removing minimal generators") {
  CHECK(NumericalSemigroup::ordinary(5).remove_element(7) == gen({5, 6, 8, 9}));
  const auto r = gen({2, 3}).remove_element(3);
  CHECK(r.members_below(7) == std::vector<Int>{0, 2, 4, 5, 6});
  CHECK(r == gen({2, 5}));
  try {
    NumericalSemigroup::ordinary(5).remove_element(10);
    FAIL("expected NotMinimalGenerator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMinimalGenerator);
  }
  const auto o5 = NumericalSemigroup::ordinary(5);
  CHECK(o5.remove_element(5).multiplicity() == 6);
  CHECK(o5.remove_element(6).multiplicity() == 5);
}

TEST_CASE("quotients") {
  CHECK(gen({2, 3}).quotient(2).is_full());
  // 2x in <3,5> = {0,3,5,6,8,->} holds for x = 0 and x >= 3.
  CHECK(gen({3, 5}).quotient(2) == NumericalSemigroup::ordinary(3));
  const auto s = gen({5, 6, 8, 9});
  CHECK(s.quotient(1) == s);
  CHECK(s.quotient(5).is_full());
  CHECK_THROWS_AS(s.quotient(0), Error);
}

TEST_CASE("text form") {
  CHECK(format_semigroup(gen({5, 6, 8, 9})) == "<5,6,8,9>");
  CHECK(format_semigroup(NumericalSemigroup()) == "<1>");
  CHECK(parse_semigroup("<5,6,8,9>") == gen({5, 6, 8, 9}));
  CHECK(parse_semigroup(" 5, 6 ,8,9 ") == gen({5, 6, 8, 9}));
  CHECK(parse_semigroup("gaps:1,2,3,4,7") == gen({5, 6, 8, 9}));
  CHECK(parse_semigroup("gaps:") == NumericalSemigroup());
  CHECK_THROWS_AS(parse_semigroup("gaps:1,4"), Error);  // 2+2 = 4
  CHECK_THROWS_AS(parse_semigroup("<2,4>"), Error);
  CHECK_THROWS_AS(parse_semigroup("<5,6"), Error);
  CHECK_THROWS_AS(parse_semigroup("<a>"), Error);
}

TEST_CASE("property: invariants over random semigroups") {
  const auto family = random_family(7, 120);
  for (const auto& s : family) {
    CAPTURE(format_semigroup(s));
    check_additive_closure(s);
    CHECK(s.genus() == static_cast<Int>(s.gaps().size()));
    CHECK_FALSE(s.contains(s.frobenius()));
    for (Int x = 1; x < s.multiplicity(); ++x) CHECK_FALSE(s.contains(x));

    // Apery sets: one element per residue class.
    for (Int x : {s.multiplicity(), s.multiplicity() + s.conductor()}) {
      const auto ap = s.apery(x);
      REQUIRE(static_cast<Int>(ap.size()) == x);
      std::vector<bool> seen(static_cast<std::size_t>(x), false);
      for (Int a : ap) seen[static_cast<std::size_t>(a % x)] = true;
      CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }

    const auto gens = s.minimal_generators();
    CHECK(NumericalSemigroup::from_generators(gens) == s);
    CHECK(static_cast<Int>(gens.size()) <= s.multiplicity());

    for (Int x : s.minimal_generators_above_frobenius()) {
      const auto smaller = s.remove_element(x);
      CHECK(smaller.genus() == s.genus() + 1);
      CHECK((smaller.multiplicity() != s.multiplicity()) == (x == s.multiplicity()));
      CHECK(smaller.adjoin_frobenius() == s);
    }

    for (Int k = 1; k <= 4; ++k) {
      const auto q = s.quotient(k);
      CHECK(s.is_subset_of(q));
    }
  }
}

TEST_CASE("property: intersection laws") {
  const auto family = random_family(11, 30);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& a = family[i];
    CHECK(a.intersect(a) == a);
    for (std::size_t j = 0; j < family.size(); j += 3) {
      const auto& b = family[j];
      const auto ab = a.intersect(b);
      CHECK(ab == b.intersect(a));
      CHECK(ab.genus() >= std::max(a.genus(), b.genus()));
      CHECK(ab.is_subset_of(a));
      CHECK(ab.is_subset_of(b));
      const auto& c = family[(i + j + 1) % family.size()];
      CHECK(ab.intersect(c) == a.intersect(b.intersect(c)));
    }
  }
}
