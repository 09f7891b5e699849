#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "weylbraid/errors.hpp"
#include "weylbraid/weyl_group.hpp"

using namespace weylbraid;
using weyl::WeylElement;
using weyl::WeylGroup;
using rootsys::RootVector;

namespace {

rootsys::RootSystem build(const char* s) {
  return rootsys::build_root_system(rootsys::RootSystemSpec::parse(s));
}

int element_order(const WeylElement& g) {
  auto id = WeylElement::identity_of_rank(g.rank());
  auto cur = g;
  int n = 1;
  while (!(cur == id)) {
    cur = cur * g;
    ++n;
    REQUIRE(n < 1000);
  }
  return n;
}

} // namespace

TEST_CASE("reflection matrices in small systems") {
  auto a1 = build("A1");
  WeylGroup g1(a1);
  CHECK(g1.reflection_matrix(0).data() == std::vector<int>{-1});

  auto a2 = build("A2");
  WeylGroup g2(a2);
  auto s1 = weyl::reflection_element(g2, {1, 0});
  // alpha1 -> -alpha1, alpha2 -> alpha1+alpha2
  CHECK(s1.element.apply({1, 0}) == RootVector{-1, 0});
  CHECK(s1.element.apply({0, 1}) == RootVector{1, 1});
  CHECK(s1.axis == RootVector{1, 0});

  // the axis and its negative give the same reflection
  auto sm = weyl::reflection_element(g2, {-1, 0});
  CHECK(sm.element == s1.element);
  CHECK(sm.axis == s1.axis);
}

TEST_CASE("multiplication, inverse, identity") {
  auto a2 = build("A2");
  WeylGroup g(a2);
  auto s1 = g.reflection_matrix(a2.axis_index({1, 0}));
  auto s2 = g.reflection_matrix(a2.axis_index({0, 1}));

  CHECK((s1 * s1).is_identity());
  CHECK(element_order(s1 * s2) == 3);
  CHECK(weyl::inverse(g.identity()) == g.identity());
  CHECK(weyl::inverse(s1 * s2) == s2 * s1);
  CHECK(((s1 * s2) * weyl::inverse(s1 * s2)).is_identity());

  auto b2 = build("B2");
  WeylGroup gb(b2);
  CHECK(element_order(gb.reflection_matrix(b2.axis_index({1, 0})) *
                      gb.reflection_matrix(b2.axis_index({0, 1}))) == 4);
  auto g2sys = build("G2");
  WeylGroup gg(g2sys);
  CHECK(element_order(gg.reflection_matrix(g2sys.axis_index({1, 0})) *
                      gg.reflection_matrix(g2sys.axis_index({0, 1}))) == 6);

  auto a1 = build("A1");
  WeylGroup g1(a1);
  CHECK_THROWS_AS(g1.identity() * g.identity(), validation_error);
}

TEST_CASE("reflection recognition") {
  auto a2 = build("A2");
  WeylGroup g(a2);
  CHECK_FALSE(g.is_reflection(g.identity()).has_value());

  auto s1 = g.reflection_matrix(a2.axis_index({1, 0}));
  auto s2 = g.reflection_matrix(a2.axis_index({0, 1}));
  CHECK_FALSE(g.is_reflection(s1 * s2).has_value()); // a rotation

  // conjugates are reflections in the image axis
  auto conj = s2 * s1 * s2.inverse();
  auto rec = g.is_reflection(conj);
  REQUIRE(rec.has_value());
  CHECK(a2.positive_roots()[*rec] ==
        a2.positive_representative(s2.apply({1, 0})));
}

TEST_CASE("conjugation covariance over whole small groups") {
  for (const char* s : {"A2", "B2"}) {
    auto rs = build(s);
    WeylGroup g(rs);
    for (const auto& w : g.elements()) {
      auto wi = w.inverse();
      for (int k = 0; k < rs.positive_count(); ++k) {
        auto conj = w * g.reflection_matrix(k) * wi;
        auto rec = g.is_reflection(conj);
        REQUIRE(rec.has_value());
        CHECK(rs.positive_roots()[*rec] ==
              rs.positive_representative(w.apply(rs.positive_roots()[k])));
      }
    }
  }
}

TEST_CASE("subgroup closure sizes match known group orders") {
  auto order_of = [](const char* s) {
    auto rs = build(s);
    WeylGroup g(rs);
    return g.order();
  };
  CHECK(order_of("A2") == 6);
  CHECK(order_of("B2") == 8);
  CHECK(order_of("G2") == 12);
  CHECK(order_of("A3") == 24);
  CHECK(order_of("B3") == 48);
  CHECK(order_of("A1+A1") == 4);
}

TEST_CASE("empty generating set yields the trivial group") {
  auto sub = weyl::generate_subgroup({});
  REQUIRE(sub.size() == 1);
  CHECK(sub[0].is_identity());
}

TEST_CASE("closure is independent of generator order") {
  auto rs = build("B2");
  WeylGroup g(rs);
  std::vector<WeylElement> gens;
  for (int k = 0; k < rs.positive_count(); ++k) gens.push_back(g.reflection_matrix(k));
  auto base = weyl::generate_subgroup(gens);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(weyl::generate_subgroup(gens) == base);
  }
}

TEST_CASE("closure fails loudly when capped") {
  auto rs = build("A3");
  WeylGroup g(rs);
  std::vector<WeylElement> gens;
  for (int k = 0; k < rs.positive_count(); ++k) gens.push_back(g.reflection_matrix(k));
  CHECK_THROWS_AS(weyl::generate_subgroup(gens, 10), cap_exceeded_error);
}

TEST_CASE("short-root reflections of G2 generate no long-root reflection") {
  auto rs = build("G2");
  WeylGroup g(rs);
  std::vector<WeylElement> gens;
  for (int k = 0; k < rs.positive_count(); ++k)
    if (!rs.is_long(k)) gens.push_back(g.reflection_matrix(k));
  auto sub = weyl::generate_subgroup(gens);
  CHECK(sub.size() == 6);
  for (const auto& w : sub) {
    auto rec = g.is_reflection(w);
    if (rec) CHECK_FALSE(rs.is_long(*rec));
  }
}

TEST_CASE("sign character") {
  auto rs = build("B2");
  WeylGroup g(rs);
  CHECK(weyl::sign(g.identity()) == 1);
  for (int k = 0; k < rs.positive_count(); ++k)
    CHECK(weyl::sign(g.reflection_matrix(k)) == -1);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, rs.positive_count() - 1);
  for (int t = 0; t < 50; ++t) {
    auto w = g.identity();
    int len = 2 * (1 + static_cast<int>(rng() % 3));
    for (int i = 0; i < len; ++i) w = w * g.reflection_matrix(pick(rng));
    CHECK(weyl::sign(w) == 1);
  }
}

TEST_CASE("reflections split into per-length conjugacy orbits") {
  // simply laced: one orbit of axes; non-simply laced: exactly two
  for (const char* s : {"A3", "B2", "G2"}) {
    auto rs = build(s);
    WeylGroup g(rs);
    std::set<int> seen;
    std::vector<std::set<int>> orbits;
    for (int k = 0; k < rs.positive_count(); ++k) {
      if (seen.count(k)) continue;
      std::set<int> orbit;
      std::vector<int> stack{k};
      while (!stack.empty()) {
        int b = stack.back();
        stack.pop_back();
        if (!orbit.insert(b).second) continue;
        for (int a = 0; a < rs.positive_count(); ++a) stack.push_back(rs.reflect_index(a, b));
      }
      for (int b : orbit) seen.insert(b);
      orbits.push_back(std::move(orbit));
    }
    bool laced = rs.components()[0].simply_laced;
    CHECK(orbits.size() == (laced ? 1u : 2u));
    for (const auto& orbit : orbits) {
      bool lng = rs.is_long(*orbit.begin());
      for (int b : orbit) CHECK(rs.is_long(b) == lng);
    }
  }
}

TEST_CASE("set_height sums axis heights") {
  auto rs = build("A2");
  WeylGroup g(rs);
  std::vector<weyl::Reflection> t{weyl::reflection_element(g, {1, 1}),
                                  weyl::reflection_element(g, {0, 1})};
  CHECK(weyl::set_height(rs, t) == 3);
}
