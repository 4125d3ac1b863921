#include "doctest.h"

#include "iasgl/search.hpp"
#include "oracles.hpp"

using namespace iasgl;

namespace {

oracle::Graph plain(const Graph& g) {
  oracle::Graph out{g.vertex_count(), {}};
  for (auto [u, v] : g.edges()) out.edges.push_back({u, v});
  return out;
}

std::vector<unsigned long> plain(const GroundSet& x) { return {x.base().begin(), x.base().end()}; }

SearchConfig all_witnesses() {
  SearchConfig cfg;
  cfg.find_all = true;
  return cfg;
}

// Graphs with 6 edges: every free tree on 7 vertices plus a few with cycles.
std::vector<Graph> six_edge_graphs() {
  std::vector<Graph> out = enumerate_free_trees(7);
  out.push_back(generate(GraphKind::Cycle, 6));
  out.push_back(generate(GraphKind::Complete, 4));
  out.push_back(Graph::from_indices(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {0, 5}}));
  out.push_back(Graph::from_indices(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}}));
  out.push_back(Graph::from_indices(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 3}}));
  out.push_back(Graph::from_indices(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {5, 6}}));
  return out;
}

}  // namespace

TEST_CASE("spec examples") {
  auto star = search_iasgl(generate(GraphKind::Star, 6), GroundSet(IntegerSet{0, 1, 2}));
  CHECK(star.status == SearchStatus::Found);
  REQUIRE(star.witnesses.size() == 1);
  CHECK(verify_iasgl(generate(GraphKind::Star, 6), star.witnesses[0]).passed);

  CHECK(search_iasgl(generate(GraphKind::Star, 2), GroundSet(IntegerSet{0, 1})).status == SearchStatus::Found);
  CHECK(search_iasgl(generate(GraphKind::Complete, 4), GroundSet(IntegerSet{0, 1, 3})).status ==
        SearchStatus::ExhaustedNone);
  CHECK(search_iasgl(generate(GraphKind::Cycle, 5), GroundSet(IntegerSet{0, 1, 2})).status ==
        SearchStatus::GateRejected);
  CHECK(search_iasgl(generate(GraphKind::Path, 7), GroundSet(IntegerSet{0, 1, 2})).status ==
        SearchStatus::ExhaustedNone);
}

TEST_CASE("preconditions") {
  Graph g = generate(GraphKind::Star, 2);
  CHECK_THROWS_WITH_AS(search_iasgl(g, GroundSet(IntegerSet{1, 2})), "graceful ground set must contain 0", Error);
  CHECK_THROWS_AS(search_iasgl(g, GroundSet(IntegerSet{0, 1, 2, 3, 4, 5, 6})), Error);
  SearchConfig cfg;
  cfg.node_budget = 0;
  CHECK_THROWS_AS(search_iasgl(g, GroundSet(IntegerSet{0, 1}), cfg), Error);
}

TEST_CASE("existence matches brute force for |X| = 2") {
  std::vector<Graph> graphs{generate(GraphKind::Path, 3), Graph::from_indices(4, {{0, 1}, {2, 3}}),
                            generate(GraphKind::Star, 2)};
  for (const auto& g : graphs) {
    GroundSet x(IntegerSet{0, 1});
    auto ref = oracle::iasgl_labelings(plain(g), plain(x), 1000);
    auto out = search_iasgl(g, x, all_witnesses());
    CHECK((out.status == SearchStatus::Found) == !ref.empty());
    CHECK(out.witnesses.size() == ref.size());
  }
}

TEST_CASE("existence and witness count match brute force for |X| = 3") {
  std::size_t found = 0;
  std::size_t total = 0;
  for (const auto& x : canonical_ground_sets(3, 5))
    for (const auto& g : six_edge_graphs()) {
      auto ref = oracle::iasgl_labelings(plain(g), plain(x), 100000);
      auto out = search_iasgl(g, x, all_witnesses());
      CHECK(out.status != SearchStatus::BudgetExceeded);
      CHECK((out.status == SearchStatus::Found) == !ref.empty());
      CHECK(out.witnesses.size() == ref.size());
      for (const auto& w : out.witnesses) CHECK(verify_iasgl(g, w).passed);
      found += !ref.empty();
      ++total;
    }
  CHECK(found > 0);
  CHECK(found < total);
}

TEST_CASE("turning off a prune rule never changes the answer") {
  GroundSet x(IntegerSet{0, 1, 2});
  for (const auto& g : six_edge_graphs()) {
    auto base = search_iasgl(g, x, all_witnesses());
    for (int rule = 0; rule < 4; ++rule) {
      SearchConfig cfg = all_witnesses();
      bool* flags[] = {&cfg.prune.zero_label_degree, &cfg.prune.non_summand_pendant, &cfg.prune.incremental_edges,
                       &cfg.prune.target_coverage};
      *flags[rule] = false;
      auto out = search_iasgl(g, x, cfg);
      CHECK(out.status == base.status);
      CHECK(out.witnesses == base.witnesses);
      CHECK(out.stats.nodes >= base.stats.nodes);
    }
  }
}

TEST_CASE("serial and parallel outcomes are identical") {
  std::vector<std::pair<Graph, GroundSet>> cases{
      {generate(GraphKind::Star, 6), GroundSet(IntegerSet{0, 1, 2})},
      {generate(GraphKind::Complete, 4), GroundSet(IntegerSet{0, 1, 3})},
      {generate(GraphKind::Star, 14), GroundSet(IntegerSet{0, 1, 2, 3})},
      {generate(GraphKind::Path, 7), GroundSet(IntegerSet{0, 2, 3})},
  };
  for (const auto& [g, x] : cases)
    for (bool find_all : {false, true}) {
      SearchConfig cfg;
      cfg.find_all = find_all && g.vertex_count() < 10;
      auto serial = kernels::search_iasgl_serial(g, x, cfg);
      for (std::size_t t : {1, 2, 3, 8}) {
        auto par = kernels::search_iasgl_parallel(g, x, cfg, t);
        CHECK(par.status == serial.status);
        CHECK(par.witnesses == serial.witnesses);
        CHECK(par.stats == serial.stats);
      }
    }
}

TEST_CASE("node budget yields BudgetExceeded, never a verdict") {
  SearchConfig cfg;
  cfg.node_budget = 3;
  auto out = search_iasgl(generate(GraphKind::Complete, 4), GroundSet(IntegerSet{0, 1, 3}), cfg);
  CHECK(out.status == SearchStatus::BudgetExceeded);
  CHECK(out.witnesses.empty());
  for (std::size_t t : {1, 4}) {
    cfg.threads = t;
    CHECK(search_iasgl(generate(GraphKind::Complete, 4), GroundSet(IntegerSet{0, 1, 3}), cfg).stats ==
          out.stats);
  }
}

TEST_CASE("seeded label order keeps the verdict") {
  for (std::uint64_t seed : {1, 2, 99}) {
    SearchConfig cfg;
    cfg.seed = seed;
    CHECK(search_iasgl(generate(GraphKind::Star, 6), GroundSet(IntegerSet{0, 1, 3}), cfg).status ==
          SearchStatus::Found);
    CHECK(search_iasgl(generate(GraphKind::Complete, 4), GroundSet(IntegerSet{0, 1, 2}), cfg).status ==
          SearchStatus::ExhaustedNone);
  }
}

TEST_CASE("star witnesses put {0} on the centre") {
  GroundSet x(IntegerSet{0, 1, 2, 3});
  Graph g = generate(GraphKind::Star, 14);
  for (std::uint64_t seed : {0, 5, 17}) {
    SearchConfig cfg;
    cfg.seed = seed;
    auto out = search_iasgl(g, x, cfg);
    REQUIRE(out.status == SearchStatus::Found);
    CHECK(out.witnesses.front().at("v0") == IntegerSet{0});
  }
}

TEST_CASE("sweeps") {
  auto entries = sweep_ground_sets(generate(GraphKind::Cycle, 6), 3, 6);
  CHECK(entries.size() == canonical_ground_sets(3, 6).size());
  for (const auto& e : entries) CHECK(e.outcome.status != SearchStatus::Found);
  auto stars = sweep_ground_sets(generate(GraphKind::Star, 6), 3, 6);
  for (const auto& e : stars) CHECK(e.outcome.status == SearchStatus::Found);
  CHECK_THROWS_AS(sweep_ground_sets(generate(GraphKind::Star, 6), 1, 6), Error);
  CHECK_THROWS_AS(sweep_ground_sets(generate(GraphKind::Star, 6), 4, 2), Error);
}
