#include <doctest.h>

#include <random>

#include "isg/error.hpp"
#include "isg/transformation.hpp"

using namespace isg;

namespace {
IntervalLabel lab(long lo, long hi) { return {mpq_class(lo), mpq_class(hi)}; }
}  // namespace

TEST_CASE("compose applies the right factor first") {
  auto f = make_tmap(3, {1, 2, 0});
  auto g = make_tmap(3, {0, 0, 0});
  CHECK(tmap_compose(f, g) == make_tmap(3, {1, 1, 1}));
  CHECK(tmap_compose(f, tmap_identity(3)) == f);
  CHECK(tmap_compose(tmap_identity(3), f) == f);
  CHECK_THROWS_AS(tmap_compose(f, tmap_identity(4)), error);
}

TEST_CASE("the 6-cycle has order 6") {
  auto shift = make_tmap(6, {1, 2, 3, 4, 5, 0});
  auto cur = shift;
  for (int i = 1; i < 6; ++i) {
    CHECK_FALSE(cur == tmap_identity(6));
    cur = tmap_compose(cur, shift);
  }
  CHECK(cur == tmap_identity(6));
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_transformations(2, TmapKind::all, 100).size() == 4);
  CHECK(enumerate_transformations(3, TmapKind::all, 100).size() == 27);
  CHECK(enumerate_transformations(3, TmapKind::bijections, 100).size() == 6);
  for (int n = 1; n <= 5; ++n) {
    auto perms = enumerate_transformations(n, TmapKind::bijections, 1000);
    CHECK(perms.size() == symmetric_group_order(n).get_ui());
    for (const auto& p : perms) CHECK(p.is_bijection());
  }
  CHECK_THROWS_AS(enumerate_transformations(5, TmapKind::all, 100), error);
}

TEST_CASE("enumeration is duplicate-free and lexicographic") {
  auto all = enumerate_transformations(3, TmapKind::all, 100);
  for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].images < all[i].images);
}

TEST_CASE("composition is associative (exhaustive n <= 3, randomized n = 4, 5)") {
  for (int n = 2; n <= 3; ++n) {
    auto all = enumerate_transformations(n, TmapKind::all, 100);
    for (const auto& f : all)
      for (const auto& g : all)
        for (const auto& h : all)
          CHECK(tmap_compose(tmap_compose(f, g), h) == tmap_compose(f, tmap_compose(g, h)));
  }
  std::mt19937 rng(9);
  for (int n : {4, 5}) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 300; ++trial) {
      auto rand_map = [&]() {
        std::vector<int> im(static_cast<size_t>(n));
        for (auto& v : im) v = pick(rng);
        return make_tmap(n, im);
      };
      auto f = rand_map(), g = rand_map(), h = rand_map();
      CHECK(tmap_compose(tmap_compose(f, g), h) == tmap_compose(f, tmap_compose(g, h)));
    }
  }
}

TEST_CASE("bijections form a group (exhaustive n <= 4)") {
  for (int n = 2; n <= 4; ++n) {
    auto perms = enumerate_transformations(n, TmapKind::bijections, 100);
    auto id = tmap_identity(n);
    for (const auto& f : perms) {
      bool has_inverse = false;
      for (const auto& g : perms) {
        CHECK(tmap_compose(f, g).is_bijection());
        if (tmap_compose(f, g) == id && tmap_compose(g, f) == id) has_inverse = true;
      }
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("the index-forgetting map is an isomorphism witness") {
  // Labeled composition: apply maps to an arbitrary list of distinct labels
  // and compare with composing on indices first.
  std::vector<std::string> labels{"[0, 3]", "[0, 8]", "[0, 11/2]"};
  auto apply_labels = [&](const TransformationMap& f, const std::vector<std::string>& in) {
    std::vector<std::string> out(in.size());
    for (size_t i = 0; i < in.size(); ++i) out[i] = in[static_cast<size_t>(f.images[i])];
    return out;
  };
  auto all = enumerate_transformations(3, TmapKind::all, 100);
  for (const auto& f : all)
    for (const auto& g : all) {
      auto composed = tmap_compose(f, g);
      // g first, then f, on labels.
      std::vector<std::string> via_labels(labels.size());
      for (size_t i = 0; i < labels.size(); ++i)
        via_labels[i] = labels[static_cast<size_t>(
            f.images[static_cast<size_t>(g.images[i])])];
      CHECK(apply_labels(composed, labels) == via_labels);
    }
}

TEST_CASE("special interval sets and spans") {
  auto x = make_interval_set({lab(7, 12), lab(5, 10), lab(3, 8)});
  CHECK(x.special);
  auto span = span_special_intervals(x);
  CHECK(span.labels.size() == 9);
  CHECK(span.labels[0] == lab(7, 12));
  CHECK(span.labels[1] == lab(7, 10));

  auto single = make_interval_set({lab(2, 5)});
  CHECK(span_special_intervals(single).labels == std::vector<IntervalLabel>{lab(2, 5)});

  // A set containing [54, 5] fails label validation (54 >= 5), which is the
  // same non-specialness condition.
  CHECK_THROWS_AS(make_interval_set({lab(5, 10), lab(6, 7), lab(54, 5), lab(9, 12)}), error);
  auto not_special = make_interval_set({lab(5, 10), lab(6, 7), lab(9, 12)});
  CHECK_FALSE(not_special.special);
  CHECK_THROWS_AS(span_special_intervals(not_special), error);
  CHECK_THROWS_AS(make_interval_set({lab(1, 2), lab(1, 2)}), error);
}

TEST_CASE("S(<X>) order is computed arithmetically") {
  CHECK(full_transformation_order(9).get_str() == "387420489");
  CHECK(full_transformation_order(4) == 256);
  CHECK(symmetric_group_order(5) == 120);
  CHECK(full_transformation_order(16).get_str() == "18446744073709551616");
}

TEST_CASE("n-cycles and p-cycles have the right order") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = (i + 1) % n;
    auto cycle = make_tmap(n, im);
    auto cur = cycle;
    int order = 1;
    while (!(cur == tmap_identity(n))) {
      cur = tmap_compose(cur, cycle);
      ++order;
    }
    CHECK(order == n);
  }
  // p-element cycle inside a larger map, p prime dividing n.
  auto eta = make_tmap(6, {1, 2, 0, 3, 4, 5});
  auto cur = eta;
  int order = 1;
  while (!(cur == tmap_identity(6))) {
    cur = tmap_compose(cur, eta);
    ++order;
  }
  CHECK(order == 3);
}
