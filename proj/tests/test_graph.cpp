#include "xp/graph.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

#include "util.hpp"
#include "xp/graph_io.hpp"
#include "xp/oracle.hpp"

namespace {

using xp::Edge;
using xp::Graph;
using xp::NodeId;

TEST(Graph, CycleBasics) {
  Graph g = xp::testutil::cycle_graph(6);
  EXPECT_EQ(g.num_nodes(), 6u);
  EXPECT_EQ(g.num_edges(), 6u);
  for (NodeId v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(0, 5));
  EXPECT_FALSE(g.has_edge(0, 3));
  auto nb = g.neighbors(0);
  ASSERT_EQ(nb.size(), 2u);
  EXPECT_EQ(nb[0], 1u);
  EXPECT_EQ(nb[1], 5u);
  EXPECT_EQ(*g.regular_degree(), 2);
}

TEST(Graph, CompleteGraphNeighborsSorted) {
  Graph g = xp::testutil::complete_graph(4);
  EXPECT_EQ(g.num_edges(), 6u);
  for (NodeId v = 0; v < 4; ++v) {
    auto nb = g.neighbors(v);
    EXPECT_EQ(nb.size(), 3u);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (NodeId u : nb) EXPECT_NE(u, v);
  }
}

TEST(Graph, FromEdgesRejectsBadInput) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), xp::parameter_error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), xp::parameter_error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {0, 1}}), xp::parameter_error);
}

TEST(Graph, FromAdjacencyKeepsDefects) {
  // edge 0->1 present but 1->0 missing
  Graph g = Graph::from_adjacency({{1}, {}, {}});
  auto rep = xp::validate(g);
  EXPECT_FALSE(rep.symmetric);
  EXPECT_TRUE(rep.simple);
  EXPECT_FALSE(rep.valid());
  EXPECT_FALSE(rep.violations.empty());
}

TEST(Graph, ValidateFlagsSelfLoopAndParallel) {
  Graph self = Graph::from_adjacency({{0, 1}, {0}});
  auto rep1 = xp::validate(self);
  EXPECT_FALSE(rep1.simple);

  Graph parallel = Graph::from_adjacency({{1, 1}, {0, 0}});
  auto rep2 = xp::validate(parallel);
  EXPECT_FALSE(rep2.simple);
  EXPECT_TRUE(rep2.symmetric);
}

TEST(Graph, ValidateChecksDeclaredDegree) {
  Graph g = Graph::from_adjacency({{1}, {0}, {}}, 1);
  auto rep = xp::validate(g);
  EXPECT_FALSE(rep.regular_ok);

  Graph ok = xp::testutil::cycle_graph(5);
  auto rep2 = xp::validate(ok);
  EXPECT_TRUE(rep2.valid());
  EXPECT_TRUE(rep2.violations.empty());
}

TEST(Graph, OutOfRangeAccessThrows) {
  Graph g = xp::testutil::cycle_graph(4);
  EXPECT_THROW(g.degree(4), std::out_of_range);
  EXPECT_THROW(g.neighbors(9), std::out_of_range);
  EXPECT_THROW(g.has_edge(0, 4), std::out_of_range);
}

TEST(Graph, EqualityIsStructural) {
  Graph a = xp::testutil::cycle_graph(5);
  Graph b = xp::testutil::cycle_graph(5);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, xp::testutil::path_graph(5));
}

TEST(Oracle, CountsEveryQueryKind) {
  Graph g = xp::testutil::cycle_graph(6);
  xp::QueryOracle oracle(g);
  EXPECT_EQ(oracle.total_queries(), 0u);
  EXPECT_EQ(oracle.degree(0), 2);
  EXPECT_EQ(oracle.neighbor(0, 0), 1u);
  EXPECT_EQ(oracle.neighbor(0, 1), 5u);
  EXPECT_EQ(oracle.degree_queries(), 1u);
  EXPECT_EQ(oracle.neighbor_queries(), 2u);
  EXPECT_EQ(oracle.incidence_queries(), 0u);
  EXPECT_EQ(oracle.total_queries(), 3u);

  auto inc = oracle.node_incidence(0);
  ASSERT_EQ(inc.size(), 2u);
  EXPECT_EQ(inc[0], Edge(0, 1));
  EXPECT_EQ(inc[1], Edge(0, 5));
  EXPECT_EQ(oracle.incidence_queries(), 1u);  // one query regardless of degree
  EXPECT_EQ(oracle.total_queries(), 4u);

  oracle.reset();
  EXPECT_EQ(oracle.total_queries(), 0u);
}

TEST(Oracle, NeighborIndexOutOfRangeThrows) {
  Graph g = xp::testutil::cycle_graph(6);
  xp::QueryOracle oracle(g);
  EXPECT_THROW(oracle.neighbor(0, 2), std::out_of_range);
  EXPECT_THROW(oracle.neighbor(0, -1), std::out_of_range);
}

TEST(Oracle, LogRecordsInOrder) {
  Graph g = xp::testutil::cycle_graph(6);
  xp::QueryOracle oracle(g);
  oracle.enable_log(true);
  oracle.degree(3);
  oracle.neighbor(3, 0);
  oracle.node_incidence(5);
  ASSERT_EQ(oracle.log().size(), 3u);
  EXPECT_EQ(oracle.log()[0].node, 3u);
  EXPECT_EQ(oracle.log()[2].node, 5u);
  EXPECT_EQ(oracle.log()[2].kind, xp::QueryOracle::QueryKind::kIncidence);
}

TEST(GraphIo, TextRoundTrip) {
  Graph g = xp::testutil::petersen();
  std::ostringstream os;
  xp::write_edge_list(g, os);
  std::istringstream is(os.str());
  Graph back = xp::read_edge_list(is);
  EXPECT_EQ(g, back);
  EXPECT_EQ(*back.regular_degree(), 3);
}

TEST(GraphIo, TextHeaderCarriesDegree) {
  std::istringstream is("3 2\n0 1\n1 2\n");
  Graph g = xp::read_edge_list(is);
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_FALSE(g.regular_degree().has_value());

  std::istringstream is2("3 3 2\n0 1\n1 2\n0 2\n");
  Graph g2 = xp::read_edge_list(is2);
  EXPECT_EQ(*g2.regular_degree(), 2);
}

TEST(GraphIo, TextRejectsMalformed) {
  std::istringstream missing("3 2\n0 1\n");
  EXPECT_THROW(xp::read_edge_list(missing), xp::io_error);
  std::istringstream bad_endpoint("2 1\n0 5\n");
  EXPECT_THROW(xp::read_edge_list(bad_endpoint), xp::io_error);
  std::istringstream empty("");
  EXPECT_THROW(xp::read_edge_list(empty), xp::io_error);
}

TEST(GraphIo, BinaryRoundTrip) {
  Graph g = xp::testutil::petersen();
  std::ostringstream os(std::ios::binary);
  xp::write_binary(g, os);
  std::string blob = os.str();
  EXPECT_EQ(blob.substr(0, 4), "XPGR");
  std::istringstream is(blob, std::ios::binary);
  Graph back = xp::read_binary(is);
  EXPECT_EQ(g, back);
}

TEST(GraphIo, BinaryLayoutIsExact) {
  // one edge 0-1 on two nodes: 4 magic + 4 version + 8 n + 8 m + 24 offsets + 8 adj
  Graph g = Graph::from_edges(2, {{0, 1}});
  std::ostringstream os(std::ios::binary);
  xp::write_binary(g, os);
  std::string blob = os.str();
  ASSERT_EQ(blob.size(), 4u + 4 + 8 + 8 + 3 * 8 + 2 * 4);
  EXPECT_EQ(static_cast<unsigned char>(blob[4]), 1u);  // version, little-endian
  EXPECT_EQ(static_cast<unsigned char>(blob[8]), 2u);  // n
  EXPECT_EQ(static_cast<unsigned char>(blob[16]), 1u); // m
}

TEST(GraphIo, BinaryRejectsCorruption) {
  Graph g = xp::testutil::cycle_graph(4);
  std::ostringstream os(std::ios::binary);
  xp::write_binary(g, os);
  std::string blob = os.str();

  std::string bad_magic = blob;
  bad_magic[0] = 'Y';
  std::istringstream is1(bad_magic, std::ios::binary);
  EXPECT_THROW(xp::read_binary(is1), xp::io_error);

  std::string truncated = blob.substr(0, blob.size() - 3);
  std::istringstream is2(truncated, std::ios::binary);
  EXPECT_THROW(xp::read_binary(is2), xp::io_error);

  std::string bad_version = blob;
  bad_version[4] = 9;
  std::istringstream is3(bad_version, std::ios::binary);
  EXPECT_THROW(xp::read_binary(is3), xp::io_error);
}

TEST(GraphIo, BinaryRecoversRegularDegree) {
  Graph g = xp::testutil::cycle_graph(8);
  std::ostringstream os(std::ios::binary);
  xp::write_binary(g, os);
  std::istringstream is(os.str(), std::ios::binary);
  Graph back = xp::read_binary(is);
  ASSERT_TRUE(back.regular_degree().has_value());
  EXPECT_EQ(*back.regular_degree(), 2);
}

}  // namespace
