#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "xp/graph.hpp"

namespace xp {

// Text format:
//   n m [d]
//   u v        (m lines, 0-based, u < v)
// Binary format: magic "XPGR", version u32, n u64, m u64, CSR offsets
// (n+1 x u64), neighbor lists (2m x u32), all little-endian.

namespace detail {

inline void store_u32_le(std::ostream& os, std::uint32_t x) {
  std::array<unsigned char, 4> b{};
  for (int i = 0; i < 4; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(x >> (8 * i));
  os.write(reinterpret_cast<const char*>(b.data()), 4);
}

inline void store_u64_le(std::ostream& os, std::uint64_t x) {
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(x >> (8 * i));
  os.write(reinterpret_cast<const char*>(b.data()), 8);
}

inline std::uint32_t load_u32_le(std::istream& is) {
  std::array<unsigned char, 4> b{};
  is.read(reinterpret_cast<char*>(b.data()), 4);
  if (!is) throw io_error("unexpected end of binary graph file");
  std::uint32_t x = 0;
  for (int i = 3; i >= 0; --i) x = (x << 8) | b[static_cast<std::size_t>(i)];
  return x;
}

inline std::uint64_t load_u64_le(std::istream& is) {
  std::array<unsigned char, 8> b{};
  is.read(reinterpret_cast<char*>(b.data()), 8);
  if (!is) throw io_error("unexpected end of binary graph file");
  std::uint64_t x = 0;
  for (int i = 7; i >= 0; --i) x = (x << 8) | b[static_cast<std::size_t>(i)];
  return x;
}

}  // namespace detail

inline constexpr std::uint32_t kBinaryFormatVersion = 1;

inline void write_edge_list(const Graph& g, std::ostream& os) {
  os << g.num_nodes() << ' ' << g.num_edges();
  if (g.regular_degree()) os << ' ' << *g.regular_degree();
  os << '\n';
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v) os << u << ' ' << v << '\n';
}

inline void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw io_error("cannot open " + path + " for writing");
  write_edge_list(g, os);
  if (!os) throw io_error("write failed: " + path);
}

inline Graph read_edge_list(std::istream& is) {
  std::string line;
  std::uint64_t n = 0, m = 0;
  int d = -1;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> n >> m)) {
        if (line.empty() || line[0] == '#') continue;
        throw io_error("edge list: bad header line");
      }
      ls >> d;
      if (n > std::numeric_limits<NodeId>::max()) throw io_error("edge list: n too large");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    std::uint64_t u, v;
    if (!(ls >> u >> v)) {
      if (line.empty() || line[0] == '#') continue;
      throw io_error("edge list: bad edge line: " + line);
    }
    if (u >= n || v >= n) throw io_error("edge list: endpoint out of range: " + line);
    edges.push_back(make_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)));
  }
  if (!have_header) throw io_error("edge list: missing header");
  if (edges.size() != m) throw io_error("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(edges.size()));
  std::optional<int> reg;
  if (d >= 0) reg = d;
  return Graph::from_edges(static_cast<NodeId>(n), edges, reg);
}

inline Graph read_edge_list(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw io_error("cannot open " + path);
  return read_edge_list(is);
}

inline void write_binary(const Graph& g, std::ostream& os) {
  os.write("XPGR", 4);
  detail::store_u32_le(os, kBinaryFormatVersion);
  detail::store_u64_le(os, g.num_nodes());
  detail::store_u64_le(os, g.num_edges());
  std::uint64_t off = 0;
  detail::store_u64_le(os, off);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    off += static_cast<std::uint64_t>(g.degree(v));
    detail::store_u64_le(os, off);
  }
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    for (NodeId u : g.neighbors(v)) detail::store_u32_le(os, u);
}

inline void write_binary(const Graph& g, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("cannot open " + path + " for writing");
  write_binary(g, os);
  if (!os) throw io_error("write failed: " + path);
}

inline std::vector<std::vector<NodeId>> to_lists(const Graph& g) {
  std::vector<std::vector<NodeId>> adj(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  return adj;
}

inline Graph read_binary(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "XPGR", 4) != 0) throw io_error("binary graph: bad magic");
  std::uint32_t version = detail::load_u32_le(is);
  if (version != kBinaryFormatVersion)
    throw io_error("binary graph: unsupported version " + std::to_string(version));
  std::uint64_t n = detail::load_u64_le(is);
  std::uint64_t m = detail::load_u64_le(is);
  if (n > std::numeric_limits<NodeId>::max()) throw io_error("binary graph: n too large");
  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& o : offsets) o = detail::load_u64_le(is);
  if (offsets.front() != 0 || offsets.back() != 2 * m)
    throw io_error("binary graph: inconsistent offsets");
  std::vector<std::vector<NodeId>> adj(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    if (offsets[v + 1] < offsets[v]) throw io_error("binary graph: offsets not monotone");
    adj[v].resize(offsets[v + 1] - offsets[v]);
    for (auto& u : adj[v]) {
      u = detail::load_u32_le(is);
      if (u >= n) throw io_error("binary graph: neighbor out of range");
    }
  }
  Graph g = Graph::from_adjacency(std::move(adj));
  // Degree uniformity is recoverable from the data itself.
  if (n > 0) {
    int d0 = g.degree(0);
    bool all = true;
    for (NodeId v = 1; v < g.num_nodes() && all; ++v) all = g.degree(v) == d0;
    if (all) return Graph::from_adjacency(to_lists(g), d0);
  }
  return g;
}

inline Graph read_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open " + path);
  return read_binary(is);
}

}  // namespace xp
