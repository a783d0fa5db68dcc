#include "wsat/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace wsat {

MaxFlow::MaxFlow(std::size_t nodes) : out_(nodes), level_(nodes), iter_(nodes) {}

void MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
  out_[from].push_back(arcs_.size());
  arcs_.push_back({to, capacity});
  out_[to].push_back(arcs_.size());
  arcs_.push_back({from, 0});
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto id : out_[v]) {
      const auto& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(std::size_t v, std::size_t t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (auto& i = iter_[v]; i < out_[v].size(); ++i) {
    const auto id = out_[v][i];
    auto& a = arcs_[id];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    if (auto got = dfs(a.to, t, std::min(pushed, a.cap)); got > 0) {
      a.cap -= got;
      arcs_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  std::int64_t flow = 0;
  while (bfs(source, sink)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    while (auto f = dfs(source, sink, kInfinite)) flow += f;
  }
  return flow;
}

std::vector<char> MaxFlow::source_side(std::size_t source) const {
  std::vector<char> seen(out_.size(), 0);
  std::vector<std::size_t> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto id : out_[v]) {
      const auto& a = arcs_[id];
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace wsat
