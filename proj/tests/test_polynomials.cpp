#include <doctest.h>

#include <random>

#include "isg/error.hpp"
#include "isg/polynomial.hpp"

using namespace isg;

namespace {

IntervalPolynomial poly(const CoefficientDomain& d, std::map<long, std::string> coeffs) {
  return make_polynomial(d, coeffs);
}

// Convolution oracle over plain integers (no quotient rule).
std::map<long, long> conv_oracle(const std::map<long, long>& p, const std::map<long, long>& q) {
  std::map<long, long> r;
  for (auto [ep, cp] : p)
    for (auto [eq, cq] : q) r[ep + eq] += cp * cq;
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

TEST_CASE("poly_add reproduces the worked sum over Z+") {
  auto zp = CoefficientDomain::nonneg_int();
  auto p = poly(zp, {{0, "2"}, {2, "3"}, {7, "7"}, {9, "11"}});
  auto q = poly(zp, {{0, "12"}, {1, "7"}, {3, "14"}, {7, "10"}, {8, "5"}, {9, "12"}, {20, "5"}});
  auto expect = poly(zp, {{0, "14"}, {1, "7"}, {2, "3"}, {3, "14"}, {7, "17"}, {8, "5"},
                          {9, "23"}, {20, "5"}});
  CHECK(poly_add(p, q) == expect);
  CHECK(poly_add(p, IntervalPolynomial{zp, {}}) == p);
}

TEST_CASE("poly_add cancels to the zero polynomial") {
  auto z3 = CoefficientDomain::mod(3);
  auto one = poly(z3, {{0, "1"}});
  auto two = poly(z3, {{0, "2"}});
  CHECK(poly_add(one, two).is_zero());
  CHECK(poly_add(one, two).coeffs.empty());
}

TEST_CASE("poly_mul with x^7 = 1 over Z6 reproduces the worked product") {
  auto z6 = CoefficientDomain::mod(6);
  auto p = poly(z6, {{0, "2"}, {1, "1"}, {5, "5"}});
  auto q = poly(z6, {{0, "4"}, {3, "3"}});
  auto got = poly_mul(p, q, CyclicRule{7, UnitKind::one});
  CHECK(got == poly(z6, {{0, "2"}, {1, "1"}, {4, "3"}, {5, "2"}}));
}

TEST_CASE("pure neutrosophic product without rule") {
  auto zpi = CoefficientDomain::pure_neutro_nonneg();
  auto p = poly(zpi, {{2, "3I"}, {1, "2I"}, {0, "7I"}});
  auto q = poly(zpi, {{3, "12I"}, {1, "3I"}, {0, "2I"}});
  auto expect = poly(zpi, {{5, "36I"}, {4, "24I"}, {3, "93I"}, {2, "12I"}, {1, "25I"}, {0, "14I"}});
  CHECK(poly_mul(p, q) == expect);
}

TEST_CASE("the first chapter-3 product: derived x^5 coefficient is 133") {
  auto zp = CoefficientDomain::nonneg_int();
  auto p = poly(zp, {{0, "3"}, {2, "5"}, {5, "11"}});
  auto q = poly(zp, {{0, "8"}, {1, "1"}, {3, "9"}});
  auto got = poly_mul(p, q);
  auto oracle = conv_oracle({{0, 3}, {2, 5}, {5, 11}}, {{0, 8}, {1, 1}, {3, 9}});
  CHECK(oracle ==
        std::map<long, long>{{0, 24}, {1, 3}, {2, 40}, {3, 32}, {5, 133}, {6, 11}, {8, 99}});
  for (auto [e, c] : oracle) CHECK(got.coeffs.at(e).real == c);
  CHECK(got.coeffs.at(5).real == 133);
}

TEST_CASE("multiplying by zero") {
  auto z6 = CoefficientDomain::mod(6);
  auto p = poly(z6, {{0, "2"}, {1, "1"}});
  CHECK(poly_mul(p, IntervalPolynomial{z6, {}}).is_zero());
}

TEST_CASE("degree law over nonneg integers") {
  auto zp = CoefficientDomain::nonneg_int();
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coeff(1, 9), deg(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<long, DomainElement> pc, qc;
    long dp = deg(rng), dq = deg(rng);
    pc[dp] = {mpq_class(coeff(rng)), 0};
    qc[dq] = {mpq_class(coeff(rng)), 0};
    if (dp > 0) pc[0] = {mpq_class(coeff(rng)), 0};
    if (dq > 0) qc[0] = {mpq_class(coeff(rng)), 0};
    auto p = make_polynomial(zp, pc), q = make_polynomial(zp, qc);
    CHECK(poly_mul(p, q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("poly_mul associativity: exhaustive over Z2 with k = 3") {
  auto z2 = CoefficientDomain::mod(2);
  auto all = full_cyclic_poly_semigroup(z2, 3, 100);
  CHECK(all.size() == 8);
  CyclicRule rule{3, UnitKind::one};
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        CHECK(poly_mul(poly_mul(a, b, rule), c, rule) == poly_mul(a, poly_mul(b, c, rule), rule));
}

TEST_CASE("poly_mul associativity: randomized over Z6 and Z12") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> pick(0, 11), exp(0, 9);
  for (unsigned m : {6u, 12u}) {
    auto d = CoefficientDomain::mod(m);
    for (int trial = 0; trial < 60; ++trial) {
      auto rand_poly = [&]() {
        std::map<long, DomainElement> c;
        for (int t = 0; t < 3; ++t) c[exp(rng)] = {mpq_class(pick(rng) % m), 0};
        return make_polynomial(d, c);
      };
      auto a = rand_poly(), b = rand_poly(), c = rand_poly();
      CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
      CyclicRule rule{5, UnitKind::one};
      CHECK(poly_mul(poly_mul(a, b, rule), c, rule) == poly_mul(a, poly_mul(b, c, rule), rule));
    }
  }
}

TEST_CASE("monomial semigroup orders match (|d|-1)k+1") {
  struct Case {
    CoefficientDomain d;
    long k;
    UnitKind unit;
    size_t expect;
  };
  std::vector<Case> cases = {
      {CoefficientDomain::pure_neutro_mod(6), 7, UnitKind::I, 36},
      {CoefficientDomain::pure_neutro_mod(8), 3, UnitKind::I, 22},
      {CoefficientDomain::pure_neutro_mod(17), 2, UnitKind::I, 33},
      {CoefficientDomain::pure_neutro_mod(13), 2, UnitKind::I, 25},
      {CoefficientDomain::pure_neutro_mod(11), 3, UnitKind::I, 31},
      {CoefficientDomain::pure_neutro_mod(12), 3, UnitKind::I, 34},
      {CoefficientDomain::pure_neutro_mod(5), 3, UnitKind::I, 13},
      {CoefficientDomain::neutro_mod(3), 2, UnitKind::one, 17},
      {CoefficientDomain::neutro_mod(2), 3, UnitKind::one, 10},
      {CoefficientDomain::neutro_mod(5), 2, UnitKind::one, 49},
  };
  for (const auto& c : cases) {
    auto s = monomial_semigroup(c.d, CyclicRule{c.k, c.unit}, 10000);
    CHECK(s.size() == c.expect);
    CHECK(s.size() == (c.d.size() - 1) * static_cast<size_t>(c.k) + 1);
  }
}

TEST_CASE("order formula holds for every finite domain and k <= 8") {
  for (unsigned m : {2u, 3u, 5u}) {
    for (auto d : {CoefficientDomain::mod(m), CoefficientDomain::pure_neutro_mod(m),
                   CoefficientDomain::neutro_mod(m)}) {
      for (long k = 1; k <= 8; ++k) {
        UnitKind unit = d.is_pure_neutrosophic() ? UnitKind::I : UnitKind::one;
        CHECK(monomial_semigroup(d, CyclicRule{k, unit}, 10000).size() ==
              (d.size() - 1) * static_cast<size_t>(k) + 1);
      }
    }
  }
}

TEST_CASE("monomial semigroup closure, exhaustive") {
  for (auto [d, k, unit] :
       {std::tuple{CoefficientDomain::pure_neutro_mod(6), 7L, UnitKind::I},
        std::tuple{CoefficientDomain::neutro_mod(2), 3L, UnitKind::one},
        std::tuple{CoefficientDomain::neutro_mod(3), 2L, UnitKind::one}}) {
    CyclicRule rule{k, unit};
    auto all = monomial_semigroup(d, rule, 10000);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto p = poly_mul(a, b, rule);
        CHECK(std::find(all.begin(), all.end(), p) != all.end());
      }
  }
}

TEST_CASE("full cyclic semigroup over Z2 with k = 4") {
  auto z2 = CoefficientDomain::mod(2);
  auto all = full_cyclic_poly_semigroup(z2, 4, 100);
  CHECK(all.size() == 16);
  CHECK(full_cyclic_poly_semigroup(z2, 1, 100).size() == 2);

  CyclicRule rule{4, UnitKind::one};
  // {1, x, x^2, x^3} is a cyclic group of order 4.
  auto x = poly(z2, {{1, "1"}});
  auto cur = x;
  std::vector<IntervalPolynomial> orbit{cur};
  for (int i = 0; i < 3; ++i) {
    cur = poly_mul(cur, x, rule);
    orbit.push_back(cur);
  }
  CHECK(orbit.back() == poly(z2, {{0, "1"}}));
  CHECK(orbit.size() == 4);

  // {0, 1+x+x^2+x^3} is an ideal: exhaustive absorption check.
  auto full = poly(z2, {{0, "1"}, {1, "1"}, {2, "1"}, {3, "1"}});
  auto zero = IntervalPolynomial{z2, {}};
  for (const auto& s : all) {
    for (const auto& t : {zero, full}) {
      auto p = poly_mul(s, t, rule);
      CHECK((p == zero || p == full));
    }
  }
}

TEST_CASE("rule validation") {
  auto z6 = CoefficientDomain::mod(6);
  CHECK_THROWS_AS(validate_rule(z6, CyclicRule{0, UnitKind::one}), error);
  CHECK_THROWS_AS(validate_rule(z6, CyclicRule{3, UnitKind::I}), error);
  CHECK_THROWS_AS(validate_rule(CoefficientDomain::neutro_mod(3), CyclicRule{3, UnitKind::I}),
                  error);
  validate_rule(CoefficientDomain::pure_neutro_mod(5), CyclicRule{3, UnitKind::I});
}

TEST_CASE("rendering") {
  auto z6 = CoefficientDomain::mod(6);
  CHECK(render_polynomial(poly(z6, {{0, "2"}, {1, "1"}, {4, "3"}})) ==
        "[0, 2] + [0, 1]x + [0, 3]x^4");
  CHECK(render_polynomial(IntervalPolynomial{z6, {}}) == "0");
}
