#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "cantor/errors.hpp"
#include "cantor/upset.hpp"

using namespace cantor;

namespace {

UPSet evens() { return UPSet::progression(0, 2); }
UPSet odds() { return UPSet::progression(1, 2); }

// {2} together with {n >= 5 : n = 1 mod 3}
UPSet sample_mixed() { return UPSet::normalize({5, 3, {1}, {2}}); }

UPSet random_upset(std::mt19937_64& rng) {
  UPSetParts parts;
  parts.threshold = rng() % 12;
  parts.period = 1 + rng() % 12;
  for (std::uint64_t r = 0; r < parts.period; ++r) {
    if (rng() % 3 == 0) parts.residues.push_back(r);
  }
  for (std::uint64_t f = 0; f < parts.threshold; ++f) {
    if (rng() % 2 == 0) parts.exceptionals.push_back(f);
  }
  return UPSet::normalize(parts);
}

bool raw_member(const UPSetParts& p, std::uint64_t m) {
  if (m < p.threshold) return std::find(p.exceptionals.begin(), p.exceptionals.end(), m) != p.exceptionals.end();
  return std::find(p.residues.begin(), p.residues.end(), m % p.period) != p.residues.end();
}

}  // namespace

TEST_CASE("from_finite") {
  const UPSet zero = UPSet::from_finite({0});
  CHECK(zero.threshold() == 1);
  CHECK(zero.exceptionals() == std::vector<std::uint64_t>{0});
  CHECK(zero.period() == 1);
  CHECK(zero.residues().empty());

  const UPSet odd_small = UPSet::from_finite({1, 3, 5});
  CHECK(odd_small.threshold() == 6);
  CHECK(odd_small.exceptionals() == std::vector<std::uint64_t>{1, 3, 5});
  CHECK(odd_small.period() == 1);
  CHECK(odd_small.residues().empty());

  const UPSet none = UPSet::from_finite({});
  CHECK(none.threshold() == 0);
  CHECK(none.empty());
}

TEST_CASE("membership") {
  CHECK(evens().contains(10));
  CHECK_FALSE(evens().contains(7));
  CHECK(sample_mixed().contains(7));
  CHECK(sample_mixed().contains(2));
  CHECK_FALSE(sample_mixed().contains(4));
  CHECK_FALSE(sample_mixed().contains(1));
}

TEST_CASE("shift") {
  CHECK(UPSet::from_finite({0, 2}).shifted(1) == UPSet::from_finite({1, 3}));
  CHECK(evens().shifted(1) == odds());
  CHECK(UPSet().shifted(5).empty());
  CHECK(UPSet::naturals().shifted(1) == UPSet::progression(1, 1));
}

TEST_CASE("intersect") {
  CHECK(UPSet::intersect(evens(), odds()).empty());
  CHECK(UPSet::intersect(evens(), UPSet::progression(0, 3)) == UPSet::progression(0, 6));
  std::vector<std::uint64_t> upto10(11);
  std::iota(upto10.begin(), upto10.end(), 0);
  CHECK(UPSet::intersect(sample_mixed(), UPSet::from_finite(upto10)) == UPSet::from_finite({2, 7, 10}));

  CHECK_THROWS_AS(UPSet::intersect(UPSet::progression(0, 1021), UPSet::progression(0, 1031)),
                  PeriodCapExceeded);
  CHECK_THROWS_AS(UPSet::intersect(evens(), UPSet::progression(0, 3), 5), PeriodCapExceeded);
}

TEST_CASE("is_empty") {
  CHECK(UPSet().empty());
  CHECK_FALSE(evens().empty());
  CHECK(UPSet::intersect(evens(), odds()).empty());
}

TEST_CASE("normalize") {
  const UPSet halved = UPSet::normalize({0, 4, {0, 2}, {}});
  CHECK(halved.threshold() == 0);
  CHECK(halved.period() == 2);
  CHECK(halved.residues() == std::vector<std::uint64_t>{0});

  const UPSet all = UPSet::normalize({3, 1, {0}, {0, 1, 2}});
  CHECK(all == UPSet::naturals());
  CHECK(all.threshold() == 0);

  // 0 is not a member but the periodic rule would admit it, so the threshold
  // cannot reach 0; at 1 both readings say "absent", so it drops to 1.
  const UPSetParts raw{2, 2, {0}, {}};
  const UPSet kept = UPSet::normalize(raw);
  CHECK(kept.threshold() == 1);
  CHECK(kept.period() == 2);
  CHECK(kept.residues() == std::vector<std::uint64_t>{0});
  for (std::uint64_t m = 0; m < 2 + 2 * 2; ++m) CHECK(kept.contains(m) == raw_member(raw, m));

  CHECK_THROWS_AS(UPSet::normalize({0, 0, {}, {}}), InvalidArgument);
  CHECK_THROWS_AS(UPSet::normalize({0, 2, {2}, {}}), InvalidArgument);
  CHECK_THROWS_AS(UPSet::normalize({1, 1, {}, {1}}), InvalidArgument);
  CHECK_THROWS_AS(UPSet::normalize({0, (1u << 20) + 1, {0}, {}}), PeriodCapExceeded);
}

TEST_CASE("min_element") {
  CHECK(*evens().min_element() == 0);
  CHECK(*odds().min_element() == 1);
  CHECK(*sample_mixed().min_element() == 2);
  CHECK(*UPSet::normalize({5, 3, {1}, {}}).min_element() == 7);
  CHECK_FALSE(UPSet().min_element().has_value());
}

TEST_CASE("literal syntax") {
  CHECK(UPSet::parse("finite(0,2)") == UPSet::from_finite({0, 2}));
  CHECK(UPSet::parse(" up( t = 0 , d = 2 , r = 0 ) ") == evens());
  CHECK(UPSet::parse("up(t=5,d=3,r=1,f=2)") == sample_mixed());
  CHECK(UPSet::parse("up(d=3,r=1,t=5,f=2)") == sample_mixed());
  CHECK(UPSet::parse("finite()").empty());
  CHECK(UPSet::parse("up(t=4,d=1,r=)").empty());
  CHECK(evens().literal() == "up(t=0,d=2,r=0)");
  CHECK(sample_mixed().literal() == "up(t=5,d=3,r=1,f=2)");
  CHECK(UPSet::from_finite({3, 1}).literal() == "finite(1,3)");

  CHECK_THROWS_AS(UPSet::parse("evens"), ParseError);
  CHECK_THROWS_AS(UPSet::parse("finite(1,,2)"), ParseError);
  CHECK_THROWS_AS(UPSet::parse("finite(-1)"), ParseError);
  CHECK_THROWS_AS(UPSet::parse("up(t=1,d=2)"), ParseError);
  CHECK_THROWS_AS(UPSet::parse("up(t=1,d=2,r=2)"), ParseError);
  CHECK_THROWS_AS(UPSet::parse("up(t=1,d=2,r=0,f=1)"), ParseError);
  CHECK_THROWS_AS(UPSet::parse("up(t=1,t=1,d=2,r=0)"), ParseError);
  CHECK_THROWS_AS(UPSet::parse("up(t=1,d=2,r=0,x=3)"), ParseError);
}

TEST_CASE("property: normalize and literal round-trip preserve membership") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    UPSetParts raw;
    raw.threshold = rng() % 10;
    raw.period = 1 + rng() % 12;
    for (std::uint64_t r = 0; r < raw.period; ++r) {
      if (rng() % 2) raw.residues.push_back(r);
    }
    for (std::uint64_t f = 0; f < raw.threshold; ++f) {
      if (rng() % 2) raw.exceptionals.push_back(f);
    }
    const UPSet s = UPSet::normalize(raw);
    const UPSet reparsed = UPSet::parse(s.literal());
    CHECK(reparsed == s);
    CHECK(UPSet::normalize({s.threshold(), s.period(), s.residues(), s.exceptionals()}) == s);
    const std::uint64_t end = raw.threshold + 4 * raw.period;
    for (std::uint64_t m = 0; m <= end; ++m) {
      CHECK(s.contains(m) == raw_member(raw, m));
      CHECK(reparsed.contains(m) == raw_member(raw, m));
    }
    CHECK(s.period() <= raw.period);
    CHECK(s.threshold() <= raw.threshold);
  }
}

TEST_CASE("property: intersection is commutative, associative, pointwise") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const UPSet a = random_upset(rng);
    const UPSet b = random_upset(rng);
    const UPSet c = random_upset(rng);
    const UPSet ab = UPSet::intersect(a, b);
    CHECK(ab == UPSet::intersect(b, a));
    CHECK(UPSet::intersect(ab, c) == UPSet::intersect(a, UPSet::intersect(b, c)));
    const std::uint64_t end = std::max(a.threshold(), b.threshold()) + 2 * std::lcm(a.period(), b.period());
    for (std::uint64_t m = 0; m <= end; ++m) CHECK(ab.contains(m) == (a.contains(m) && b.contains(m)));
    CHECK(ab.empty() == ab.members_up_to(end).empty());
  }
}

TEST_CASE("property: shifts compose") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const UPSet s = random_upset(rng);
    const std::uint64_t a = rng() % 7;
    const std::uint64_t b = rng() % 7;
    CHECK(s.shifted(a).shifted(b) == s.shifted(a + b));
    for (std::uint64_t m = 0; m < 60; ++m) {
      CHECK(s.shifted(a).contains(m) == (m >= a && s.contains(m - a)));
    }
  }
}
