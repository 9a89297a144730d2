#include <doctest.h>

#include "helpers.hpp"
#include "isg/error.hpp"
#include "isg/fuzzy.hpp"

using namespace isg;
using namespace isg::testing;

TEST_CASE("fuzzy family construction") {
  auto s = fuzzy_family_build({mpq_class(1, 5), 40}, OpKind::min);
  CHECK(s.size() == 41);

  auto constant = fuzzy_family_build({mpq_class(1), 7}, OpKind::min);
  CHECK(constant.size() == 1);

  // Under max the top element [0,1] is absorbing and the least element is
  // the identity.
  auto m = fuzzy_family_build({mpq_class(1, 2), 3}, OpKind::max);
  CHECK(m.size() == 4);
  REQUIRE(m.identity());
  CHECK(m.label(*m.identity()) == "[0, 1/8]");
  REQUIRE(m.zero());
  CHECK(m.label(*m.zero()) == "[0, 1]");
}

TEST_CASE("semilattice laws hold exhaustively for r in {1/2, 1/5, 7/10}, n_max = 40") {
  for (auto ratio : {mpq_class(1, 2), mpq_class(1, 5), mpq_class(7, 10)}) {
    for (auto op : {OpKind::min, OpKind::max}) {
      auto s = fuzzy_family_build({ratio, 40}, op);
      CHECK(s.size() == 41);
      int n = static_cast<int>(s.size());
      for (int x = 0; x < n; ++x) {
        CHECK(s.op(x, x) == x);
        for (int y = 0; y < n; ++y) {
          CHECK(s.op(x, y) == s.op(y, x));
          for (int z = 0; z < n; ++z) CHECK(s.op(s.op(x, y), z) == s.op(x, s.op(y, z)));
        }
      }
      // Bottom absorbing and top neutral under min; dual under max.
      int bottom = 0, top = n - 1;  // canonical order is ascending
      if (op == OpKind::min) {
        CHECK(s.zero() == bottom);
        CHECK(s.identity() == top);
      } else {
        CHECK(s.zero() == top);
        CHECK(s.identity() == bottom);
      }
    }
  }
}

TEST_CASE("fuzzy ideals: the 6.3.7 tail and 6.3.9 head sets") {
  auto t = fuzzy_family_build({mpq_class(1, 5), 40}, OpKind::min);
  std::vector<int> tail;  // exponents 20..40 are the 21 smallest values
  for (int i = 0; i <= 20; ++i) tail.push_back(i);
  CHECK(fuzzy_ideal_check(t, tail).ok);

  auto s = fuzzy_family_build({mpq_class(1, 8), 30}, OpKind::max);
  std::vector<int> head;  // exponents 0..20 are the 21 largest values
  for (int i = 0; i < 21; ++i) head.push_back(static_cast<int>(s.size()) - 1 - i);
  CHECK(fuzzy_ideal_check(s, head).ok);

  // {[0,1]} is not an ideal in a min family.
  std::vector<int> top{static_cast<int>(t.size()) - 1};
  auto check = fuzzy_ideal_check(t, top);
  CHECK_FALSE(check.ok);
  REQUIRE(check.witness);
}

TEST_CASE("fuzzy ideals under min are exactly the downward-closed subsets") {
  for (auto ratio : {mpq_class(1, 2), mpq_class(2, 3)}) {
    auto s = fuzzy_family_build({ratio, 10}, OpKind::min);
    int n = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> subset;
      for (int b = 0; b < n; ++b)
        if (mask & (1 << b)) subset.push_back(b);
      bool downward = true;  // canonical order ascending: closed below
      for (int b = 0; b < n; ++b)
        if ((mask & (1 << b)) && b > 0 && !(mask & (1 << (b - 1)))) downward = false;
      CHECK(fuzzy_ideal_check(s, subset).ok == downward);
    }
  }
}

TEST_CASE("special fuzzy maps: reciprocal on Z45") {
  auto s = FiniteSemigroup::build(interval_spec(CoefficientDomain::mod(45), OpKind::mul));
  auto mu = SpecialFuzzyMap::reciprocal_or_one(s);
  auto report = special_fuzzy_map_check(s, mu, FuzzyLawMode::le);
  // The exhaustive 45^2 scan finds violations of every mode: zero-divisor
  // pairs such as 5 * 9 = 0 jump back to mu = 1.
  CHECK_FALSE(report.eq_holds);
  CHECK_FALSE(report.le_holds);
  int five = must_index(s, "[0, 5]");
  int nine = must_index(s, "[0, 9]");
  bool found = false;
  for (auto [x, y] : report.violations)
    if (x == five && y == nine) found = true;
  CHECK(found);
  for (auto [x, y] : report.violations) {
    CHECK(mu.values[static_cast<size_t>(s.op(x, y))] >
          std::min(mu.values[static_cast<size_t>(x)], mu.values[static_cast<size_t>(y)]));
  }
}

TEST_CASE("constant map satisfies the equality law") {
  auto s = FiniteSemigroup::build(interval_spec(CoefficientDomain::mod(6), OpKind::mul));
  std::map<std::string, mpq_class> table;
  for (size_t i = 0; i < s.size(); ++i) table[s.label(static_cast<int>(i))] = 1;
  auto mu = SpecialFuzzyMap::from_table(s, table);
  auto report = special_fuzzy_map_check(s, mu, FuzzyLawMode::eq);
  CHECK(report.eq_holds);
  CHECK(report.violation_total == 0);
}

TEST_CASE("fuzzy map validation") {
  auto s = FiniteSemigroup::build(interval_spec(CoefficientDomain::mod(6), OpKind::mul));
  std::map<std::string, mpq_class> partial{{"[0, 0]", mpq_class(1)}};
  CHECK_THROWS_AS(SpecialFuzzyMap::from_table(s, partial), error);
  std::map<std::string, mpq_class> bad;
  for (size_t i = 0; i < s.size(); ++i) bad[s.label(static_cast<int>(i))] = 2;
  CHECK_THROWS_AS(SpecialFuzzyMap::from_table(s, bad), error);
}
