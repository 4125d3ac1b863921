#include "doctest.h"

#include <random>

#include "iasgl/labeling.hpp"

using namespace iasgl;

namespace {

Labeling star6() {
  GroundSet x(IntegerSet{0, 1, 2});
  return Labeling(x, {{"v0", {0}}, {"v1", {1}}, {"v2", {2}}, {"v3", {0, 1}}, {"v4", {0, 2}}, {"v5", {1, 2}},
                      {"v6", {0, 1, 2}}});
}

bool has_rule(const Verification& v, const std::string& rule) {
  return std::any_of(v.violations.begin(), v.violations.end(), [&](const Violation& x) { return x.rule == rule; });
}

}  // namespace

TEST_CASE("star K_{1,6} over {0,1,2} is an IASGL") {
  Graph g = generate(GraphKind::Star, 6);
  CHECK(verify_iasgl(g, star6()).passed);
  CHECK(highest_rung(g, star6()) == Rung::IASGL);
}

TEST_CASE("labels are validated against the ground set") {
  GroundSet x(IntegerSet{0, 1});
  CHECK_THROWS_AS(Labeling(x, {{"a", {}}}), Error);
  CHECK_THROWS_AS(Labeling(x, {{"a", {2}}}), Error);
  Labeling f(x, {{"a", {1}}});
  CHECK_THROWS_WITH_AS(f.at("b"), "unassigned vertex: b", Error);
}

TEST_CASE("violations name the failing rule") {
  GroundSet x(IntegerSet{0, 1, 2, 3});
  Graph g = Graph::create({"a", "b"}, {{"a", "b"}});

  auto escape = verify_iasl(g, Labeling(x, {{"a", {1}}, {"b", {3}}}));
  CHECK_FALSE(escape.passed);
  REQUIRE(has_rule(escape, "edge-in-ground-set"));
  CHECK(escape.violations.front().vertices == std::vector<VertexId>{"a", "b"});

  auto dup = verify_iasl(g, Labeling(x, {{"a", {1}}, {"b", {1}}}));
  CHECK(has_rule(dup, "injective"));

  Graph k = Graph::create({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  auto collide = verify_iasi(k, Labeling(x, {{"a", {0, 1}}, {"b", {0, 2}}, {"c", {0, 1, 2}}}));
  CHECK(has_rule(collide, "edge-injective"));
}

TEST_CASE("IASGL rules for zero edges and coverage") {
  GroundSet x(IntegerSet{0, 1});
  Graph g = Graph::create({"a", "b"}, {{"a", "b"}});
  auto v = verify_iasgl(g, Labeling(x, {{"a", {0}}, {"b", {1}}}));
  CHECK(has_rule(v, "edge-labels-exhaust-targets"));
  CHECK(has_rule(v, "edge-count"));
  CHECK(highest_rung(g, Labeling(x, {{"a", {0}}, {"b", {1}}})) == Rung::IASI);

  CHECK_THROWS_AS(verify_iasl(g, Labeling(x, {{"a", {0}}})), Error);
  CHECK_THROWS_AS(verify_iasl(g, Labeling(x, {{"a", {0}}, {"b", {1}}, {"c", {0, 1}}})), Error);
}

TEST_CASE("ladder implication on random labelings") {
  std::mt19937_64 rng(7);
  GroundSet x(IntegerSet{0, 1, 2, 3});
  auto subsets = enumerate_nonempty_subsets(x);
  std::uniform_int_distribution<std::size_t> pick(0, subsets.size() - 1);
  std::size_t by_rung[4] = {};
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t m = 2 + trial % 6;
    Graph g = trial % 3 == 0 ? generate(GraphKind::Star, m - 1) : trial % 3 == 1 ? generate(GraphKind::Path, m)
                                                                                 : generate(GraphKind::Complete, std::min<std::size_t>(m, 4));
    std::map<VertexId, IntegerSet> a;
    for (const auto& id : g.vertex_ids()) a[id] = subsets[pick(rng)];
    Labeling f(x, a);
    const bool l = verify_iasl(g, f).passed;
    const bool i = verify_iasi(g, f).passed;
    const bool gl = verify_iasgl(g, f).passed;
    REQUIRE((!i || l));
    REQUIRE((!gl || i));
    ++by_rung[static_cast<int>(highest_rung(g, f))];
  }
  CHECK(by_rung[static_cast<int>(Rung::None)] > 0);
  CHECK(by_rung[static_cast<int>(Rung::IASL)] + by_rung[static_cast<int>(Rung::IASI)] > 0);
}

TEST_CASE("scaling preserves every rung") {
  Graph g = generate(GraphKind::Star, 6);
  for (Element k : {2, 3, 10}) {
    Labeling f = star6().scaled(k);
    CHECK(f.ground().base() == IntegerSet{0, k, 2 * k});
    CHECK(verify_iasgl(g, f).passed);
  }
  CHECK_THROWS_AS(star6().scaled(0), Error);
}

TEST_CASE("structural gate rules") {
  GroundSet x(IntegerSet{0, 1, 2, 3});
  auto star = structural_gate(generate(GraphKind::Star, 14), x);
  CHECK(star.passed);

  auto k4 = structural_gate(generate(GraphKind::Complete, 4), GroundSet(IntegerSet{0, 1, 3}));
  CHECK_FALSE(k4.violates("R1"));
  CHECK(k4.violates("R3"));
  CHECK(k4.violates("R4"));

  auto c5 = structural_gate(generate(GraphKind::Cycle, 5), x);
  CHECK(c5.violates("R1"));

  auto path = structural_gate(generate(GraphKind::Path, 15), x);
  CHECK_FALSE(path.violates("R1"));
  CHECK(path.violates("R2"));

  CHECK_THROWS_AS(structural_gate(generate(GraphKind::Star, 2), GroundSet(IntegerSet{1, 2})), Error);
  CHECK(graceful_edge_count(3) == 6);
  CHECK(graceful_edge_count(4) == 14);
}
