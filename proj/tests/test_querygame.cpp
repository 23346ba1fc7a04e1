#include "xp/querygame.hpp"

#include <gtest/gtest.h>

#include <array>
#include <functional>
#include <map>

#include "xp/generators.hpp"
#include "util.hpp"

namespace {

using namespace xp;
using namespace xp::testutil;

// plays back a fixed query list, then concedes
class ScriptedStrategy : public NodeStrategy {
 public:
  explicit ScriptedStrategy(std::vector<NodeId> queries) : queries_(std::move(queries)) {}

  std::optional<NodeId> next_query(const Trace&) override {
    if (next_ >= queries_.size()) return std::nullopt;
    return queries_[next_++];
  }

  std::vector<NodeId> output(const Trace&) override { return {}; }

 private:
  std::vector<NodeId> queries_;
  std::size_t next_ = 0;
};

// enumerate all perfect matchings on {0..m-1}, calling f on each partner map
void enumerate_matchings(std::vector<std::uint32_t>& partner, std::uint32_t m,
                         const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  std::uint32_t first = m;
  for (std::uint32_t i = 0; i < m; ++i)
    if (partner[i] == m) {
      first = i;
      break;
    }
  if (first == m) {
    f(partner);
    return;
  }
  for (std::uint32_t j = first + 1; j < m; ++j) {
    if (partner[j] != m) continue;
    partner[first] = j;
    partner[j] = first;
    enumerate_matchings(partner, m, f);
    partner[first] = m;
    partner[j] = m;
  }
}

MatchingGraph make_mg(std::uint32_t n, int d, std::vector<std::uint32_t> partner) {
  MatchingGraph mg;
  mg.n = n;
  mg.d = d;
  mg.partner = std::move(partner);
  EXPECT_TRUE(mg.is_valid_involution());
  return mg;
}

TEST(RunTraced, ConnectedAfterOneStepOnCompleteGraph) {
  Graph g = complete_graph(4);
  ScriptedStrategy strat({0, 3});
  GameResult res = run_traced(strat, g, 10);
  ASSERT_EQ(res.trace.steps.size(), 2u);
  auto cls = classify_trace(res.trace, 4, 0, 3);
  EXPECT_FALSE(cls[0].connected);
  EXPECT_TRUE(cls[1].connected);  // incidence of 0 already contains (0,3)
  EXPECT_TRUE(cls[2].connected);
}

TEST(RunTraced, ZeroBudgetIsTheUselessBaseCase) {
  Graph g = complete_graph(4);
  BiBfsStrategy strat(4, 0, 3);
  GameResult res = run_traced(strat, g, 0);
  EXPECT_TRUE(res.trace.steps.empty());
  EXPECT_EQ(res.queries_used, 0u);
  auto cls = classify_trace(res.trace, 4, 0, 3, 0.5);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_FALSE(cls[0].connected);
  EXPECT_TRUE(cls[0].useless);
  EXPECT_EQ(cls[0].edges_discovered, 0u);
}

TEST(RunTraced, BibfsStrategyPinnedOnRandomCubic) {
  Graph g = gen_random_regular(4096, 3, 5);
  BiBfsStrategy strat(4096, 0, 4095);
  GameResult res = run_traced(strat, g, 100000);
  EXPECT_EQ(res.trace.steps.size(), 103u);  // regression value, fixed by the seed
  EXPECT_EQ(res.queries_used, 103u);
  auto cls = classify_trace(res.trace, 4096, 0, 4095);
  for (std::uint32_t k = 0; k < 103; ++k) EXPECT_FALSE(cls[k].connected);
  EXPECT_TRUE(cls[103].connected);
  EXPECT_TRUE(is_valid_st_path(g, res.path, 0, 4095));

  BiBfsStrategy replay(4096, 0, 4095);
  GameResult res2 = run_traced(replay, g, 100000);
  ASSERT_EQ(res2.trace.steps.size(), res.trace.steps.size());
  for (std::size_t i = 0; i < res.trace.steps.size(); ++i)
    EXPECT_EQ(res2.trace.steps[i].query, res.trace.steps[i].query);
  EXPECT_EQ(res2.path, res.path);
}

TEST(RunTraced, BudgetCapsQueryCount) {
  Graph g = two_triangles();
  RandomProbeStrategy strat(6, 0, 3, 42);  // never connects, never concedes early
  GameResult res = run_traced(strat, g, 5);
  EXPECT_EQ(res.trace.steps.size(), 5u);
  EXPECT_EQ(res.queries_used, 5u);
}

TEST(RunTraced, OutOfRangeQueryIsStrategyError) {
  Graph g = cycle_graph(6);
  ScriptedStrategy strat({99});
  EXPECT_THROW(run_traced(strat, g, 10), strategy_error);
}

TEST(ClassifyTrace, ConnectedOnceBothEdgesAreSeen) {
  Trace tr;
  tr.steps.push_back({0, {{0, 5}}});
  tr.steps.push_back({5, {{3, 5}}});
  auto cls = classify_trace(tr, 6, 0, 3);
  EXPECT_FALSE(cls[0].connected);
  EXPECT_FALSE(cls[1].connected);
  EXPECT_TRUE(cls[2].connected);
}

TEST(ClassifyTrace, DisjointEdgesNeverConnect) {
  Trace tr;
  tr.steps.push_back({0, {{0, 5}}});
  tr.steps.push_back({1, {{1, 3}}});
  for (const auto& c : classify_trace(tr, 6, 0, 3)) EXPECT_FALSE(c.connected);
}

TEST(ClassifyTrace, UselessBudgetArithmetic) {
  // synthetic trace (classification reads edge sets as given): 29 distinct
  // edges after 3 steps vs the 2pnk = 30 budget at n=100, p=0.05
  auto star_edges = [](NodeId hub, NodeId lo, NodeId hi) {
    std::vector<Edge> out;
    for (NodeId v = lo; v <= hi; ++v) out.push_back(make_edge(hub, v));
    return out;
  };
  Trace small;
  small.steps.push_back({2, star_edges(2, 3, 12)});    // 10 edges
  small.steps.push_back({13, star_edges(13, 14, 23)});  // 10 edges
  small.steps.push_back({24, star_edges(24, 25, 34)});  // 9 edges after the pop
  small.steps.back().returned_edges.pop_back();
  auto cls = classify_trace(small, 100, 0, 1, 0.05);
  EXPECT_EQ(cls[3].edges_discovered, 29u);
  EXPECT_FALSE(cls[3].connected);
  EXPECT_TRUE(cls[3].useless);  // 29 <= 30

  Trace big = small;
  big.steps.back().returned_edges = star_edges(24, 25, 35);  // now 31 total
  cls = classify_trace(big, 100, 0, 1, 0.05);
  EXPECT_EQ(cls[3].edges_discovered, 31u);
  EXPECT_FALSE(cls[3].useless);  // 31 > 30

  Trace conn;
  conn.steps.push_back({0, {{0, 1}}});
  cls = classify_trace(conn, 100, 0, 1, 0.05);
  EXPECT_TRUE(cls[1].connected);
  EXPECT_FALSE(cls[1].useless);  // connected is never useless
}

TEST(ClassifyTrace, MonotoneAndUselessImpliesDisconnected) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = gen_erdos_renyi(60, 0.08, seed);
    RandomProbeStrategy strat(60, 0, 59, seed + 100);
    GameResult res = run_traced(strat, g, 40);
    auto cls = classify_trace(res.trace, 60, 0, 59, 0.08);
    bool was_connected = false;
    for (const auto& c : cls) {
      if (was_connected) EXPECT_TRUE(c.connected);
      was_connected = c.connected;
      if (c.useless) EXPECT_FALSE(c.connected);
    }
  }
}

TEST(ClassifyTrace, ReplayIsDeterministic) {
  Graph g = gen_erdos_renyi(80, 0.06, 3);
  for (const char* name : {"bibfs", "random", "greedy"}) {
    auto a = make_node_strategy(name, 80, 0, 79, 11);
    auto b = make_node_strategy(name, 80, 0, 79, 11);
    GameResult ra = run_traced(*a, g, 30);
    GameResult rb = run_traced(*b, g, 30);
    ASSERT_EQ(ra.trace.steps.size(), rb.trace.steps.size()) << name;
    for (std::size_t i = 0; i < ra.trace.steps.size(); ++i)
      EXPECT_EQ(ra.trace.steps[i].query, rb.trace.steps[i].query) << name;
    EXPECT_EQ(ra.path, rb.path) << name;
  }
}

TEST(MetaGame, DirectGroupEdgeIsValid) {
  MatchingGraph mg = make_mg(2, 2, {2, 3, 0, 1});  // ((0,0),(1,0)) and ((0,1),(1,1))
  EXPECT_TRUE(is_valid_meta_path(mg, {0, 1}, 0, 1));
  GreedyGroupBfsStrategy strat(2, 2, 0, 1);
  MetaGameResult res = run_meta_game(strat, mg, 10);
  EXPECT_TRUE(res.valid);
  EXPECT_EQ(res.meta_path, (MetaPath{0, 1}));
  EXPECT_EQ(res.queries_used, 1u);
}

TEST(MetaGame, ChainMatchingValidity) {
  // three groups, both slots of group 0 paired into group 1, group 2 closed
  // on itself: 0-1 is the only meta-edge
  MatchingGraph chain3 = make_mg(3, 2, {2, 3, 0, 1, 5, 4});
  EXPECT_TRUE(is_valid_meta_path(chain3, {0, 1}, 0, 1));
  EXPECT_FALSE(is_valid_meta_path(chain3, {0, 1, 2}, 0, 2));
  EXPECT_FALSE(is_valid_meta_path(chain3, {0, 2}, 0, 2));

  // four groups in a cycle 0-1-2-3: the two-hop meta-path is valid, the
  // direct one is not
  MatchingGraph cycle4 = make_mg(4, 2, {2, 6, 0, 4, 3, 7, 1, 5});
  EXPECT_TRUE(is_valid_meta_path(cycle4, {0, 1, 2}, 0, 2));
  EXPECT_FALSE(is_valid_meta_path(cycle4, {0, 2}, 0, 2));
}

TEST(MetaGame, RejectsMalformedMetaPaths) {
  MatchingGraph mg = make_mg(2, 2, {2, 3, 0, 1});
  EXPECT_FALSE(is_valid_meta_path(mg, {}, 0, 1));
  EXPECT_FALSE(is_valid_meta_path(mg, {0}, 0, 1));         // wrong endpoint
  EXPECT_FALSE(is_valid_meta_path(mg, {1, 0}, 0, 1));      // endpoints swapped
  EXPECT_FALSE(is_valid_meta_path(mg, {0, 9}, 0, 9));      // out of range
  MatchingGraph cycle4 = make_mg(4, 2, {2, 6, 0, 4, 3, 7, 1, 5});
  EXPECT_FALSE(is_valid_meta_path(cycle4, {0, 1, 0, 1}, 0, 1));  // repeated group
}

TEST(MetaGame, GroupOracleEmitsNormalizedEdges) {
  MatchingGraph mg = make_mg(2, 2, {2, 3, 0, 1});
  GroupOracle oracle(mg);
  auto edges = oracle.group_incidence(0);
  EXPECT_EQ(edges, (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(oracle.incidence_queries(), 1u);
  EXPECT_THROW(oracle.group_incidence(5), std::out_of_range);

  MatchingGraph intra = make_mg(1, 2, {1, 0});
  GroupOracle o2(intra);
  EXPECT_EQ(o2.group_incidence(0), (std::vector<Edge>{{0, 1}}));  // one copy only
}

TEST(MetaGame, GreedyValidityRatePinned) {
  int valid = 0;
  for (int i = 0; i < 500; ++i) {
    MatchingGraph mg = gen_matching_model(1000, 3, derive_seed(77, static_cast<std::uint64_t>(i)));
    GreedyGroupBfsStrategy strat(1000, 3, 0, 999);
    MetaGameResult res = run_meta_game(strat, mg, 200);
    if (res.valid) ++valid;
  }
  EXPECT_EQ(valid, 193);  // regression value, fixed by the seed schedule
}

TEST(MetaGame, ZeroBudgetFallsBackToDirectGuess) {
  MatchingGraph chain3 = make_mg(3, 2, {2, 3, 0, 1, 5, 4});
  GreedyGroupBfsStrategy strat(3, 2, 0, 2);
  MetaGameResult res = run_meta_game(strat, chain3, 0, 0, 2);
  EXPECT_EQ(res.queries_used, 0u);
  EXPECT_EQ(res.meta_path, (MetaPath{0, 2}));
  EXPECT_FALSE(res.valid);  // no 0-2 meta-edge in this matching
}

TEST(ContractGroups, ForcedDuplicateIsRejected) {
  MatchingGraph mg = make_mg(2, 2, {2, 3, 0, 1});
  EXPECT_FALSE(contract_groups(mg).has_value());  // edge (0,1) twice
}

TEST(ContractGroups, SingleEdgeContractsToOneRegularGraph) {
  MatchingGraph mg = make_mg(2, 1, {1, 0});
  auto g = contract_groups(mg);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(g->num_nodes(), 2u);
  EXPECT_TRUE(g->has_edge(0, 1));
  ASSERT_TRUE(g->regular_degree().has_value());
  EXPECT_EQ(*g->regular_degree(), 1);
  EXPECT_TRUE(validate(*g).valid());
}

TEST(ContractGroups, AcceptanceMatchesExhaustiveEnumeration) {
  // exact acceptance fraction of M_{4,3} by enumerating all 11!! = 10395
  // matchings on 12 half-nodes; every accepted contraction must be K4
  const std::uint32_t m = 12;
  std::vector<std::uint32_t> partner(m, m);
  std::uint64_t total = 0, accepted = 0;
  Graph k4 = complete_graph(4);
  enumerate_matchings(partner, m, [&](const std::vector<std::uint32_t>& pm) {
    ++total;
    MatchingGraph mg;
    mg.n = 4;
    mg.d = 3;
    mg.partner = pm;
    if (auto g = contract_groups(mg)) {
      ++accepted;
      EXPECT_EQ(*g, k4);
    }
  });
  EXPECT_EQ(total, 10395u);
  EXPECT_EQ(accepted, 1296u);  // (3!)^4 slot assignments realizing K4
  double exact = static_cast<double>(accepted) / static_cast<double>(total);

  int hits = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i)
    if (contract_groups(gen_matching_model(4, 3, derive_seed(9, static_cast<std::uint64_t>(i))))
            .has_value())
      ++hits;
  EXPECT_NEAR(static_cast<double>(hits) / trials, exact, 0.004);  // ~4 sigma
}

TEST(SuccessVsBudget, FullExplorationAlwaysSucceeds) {
  GraphModel model = [](std::uint64_t) { return cycle_graph(32); };
  StrategyFactory factory = [](const Graph& g, std::uint64_t seed) {
    return make_node_strategy("bibfs", g.num_nodes(), 0, g.num_nodes() - 1, seed);
  };
  auto pts = success_vs_budget(model, factory, {32}, 10, 1);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_DOUBLE_EQ(pts[0].success_rate, 1.0);
  EXPECT_DOUBLE_EQ(pts[0].connected_rate, 1.0);
  EXPECT_GT(pts[0].mean_edges, 0.0);
}

TEST(SuccessVsBudget, DirectGuessMatchesEdgeProbability) {
  GraphModel model = [](std::uint64_t seed) { return gen_erdos_renyi(1000, 0.01, seed); };
  StrategyFactory factory = [](const Graph& g, std::uint64_t) {
    return make_node_strategy("guess", g.num_nodes(), 0, g.num_nodes() - 1, 0);
  };
  auto pts = success_vs_budget(model, factory, {0}, 10000, 4);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_NEAR(pts[0].success_rate, 0.01, 0.005);
  EXPECT_DOUBLE_EQ(pts[0].connected_rate, 0.0);
  EXPECT_DOUBLE_EQ(pts[0].mean_edges, 0.0);
}

TEST(SuccessVsBudget, MoreBudgetNeverHurts) {
  GraphModel model = [](std::uint64_t seed) { return gen_random_regular(256, 3, seed); };
  StrategyFactory factory = [](const Graph& g, std::uint64_t seed) {
    return make_node_strategy("bibfs", g.num_nodes(), 0, g.num_nodes() - 1, seed);
  };
  auto pts = success_vs_budget(model, factory, {4, 256}, 40, 2);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_LE(pts[0].success_rate, pts[1].success_rate + 1e-12);
  EXPECT_GE(pts[1].success_rate, 0.9);
}

TEST(MatchingModel, ConditionalPartnerIsUniformExhaustively) {
  // condition on the edge 0-3 being revealed; the partner of half-node 1 is
  // then uniform over the 7 remaining half-nodes (9!! enumeration)
  const std::uint32_t m = 10;
  std::vector<std::uint32_t> partner(m, m);
  std::map<std::uint32_t, int> hist;
  enumerate_matchings(partner, m, [&](const std::vector<std::uint32_t>& pm) {
    if (pm[0] == 3) ++hist[pm[1]];
  });
  ASSERT_EQ(hist.size(), 7u);
  for (const auto& [v, count] : hist) {
    EXPECT_NE(v, 0u);
    EXPECT_NE(v, 3u);
    EXPECT_EQ(count, 15);  // 5!! completions each
  }
}

TEST(MatchingModel, ConditionalPartnerIsUniformEmpirically) {
  std::map<std::uint32_t, int> hist;
  int conditioned = 0;
  for (int i = 0; i < 200000; ++i) {
    MatchingGraph mg = gen_matching_model(5, 2, derive_seed(13, static_cast<std::uint64_t>(i)));
    if (mg.partner[0] != 3) continue;
    ++conditioned;
    ++hist[mg.partner[1]];
  }
  ASSERT_GT(conditioned, 10000);
  ASSERT_EQ(hist.size(), 7u);
  for (const auto& [v, count] : hist)
    EXPECT_NEAR(static_cast<double>(count) / conditioned, 1.0 / 7.0, 0.02);
}

}  // namespace
