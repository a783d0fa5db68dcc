#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace wsat {

// Dinic's algorithm on a directed network with 64-bit capacities.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(std::size_t nodes);

  void add_edge(std::size_t from, std::size_t to, std::int64_t capacity);
  std::int64_t run(std::size_t source, std::size_t sink);

  // After run(): nodes reachable from the source in the residual network.
  std::vector<char> source_side(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };
  bool bfs(std::size_t s, std::size_t t);
  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t pushed);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace wsat
