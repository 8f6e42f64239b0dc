#include "limitsets/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace limitsets {

namespace {
constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

std::vector<bool> prune(const Adjacency& graph, bool need_in, bool need_out) {
  const std::size_t n = graph.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> in_degree(n, 0), out_degree(n, 0);
  Adjacency preds = reversed(graph);
  for (std::size_t v = 0; v < n; ++v) {
    out_degree[v] = graph[v].size();
    in_degree[v] = preds[v].size();
  }
  std::deque<std::size_t> queue;
  auto dead = [&](std::size_t v) {
    return (need_in && in_degree[v] == 0) || (need_out && out_degree[v] == 0);
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (dead(v)) {
      alive[v] = false;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : graph[v]) {
      if (!alive[w]) continue;
      --in_degree[w];
      if (dead(w)) {
        alive[w] = false;
        queue.push_back(w);
      }
    }
    for (std::size_t u : preds[v]) {
      if (!alive[u]) continue;
      --out_degree[u];
      if (dead(u)) {
        alive[u] = false;
        queue.push_back(u);
      }
    }
  }
  return alive;
}
}  // namespace

Adjacency reversed(const Adjacency& graph) {
  Adjacency result(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    for (std::size_t w : graph[v]) result[w].push_back(v);
  }
  for (auto& list : result) std::sort(list.begin(), list.end());
  return result;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const Adjacency& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, kUnvisited), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t next_index = 0;

  // Explicit DFS frames: (vertex, position in successor list).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < graph[v].size()) {
        std::size_t w = graph[v][pos++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        std::size_t parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

std::vector<std::size_t> component_ids(const Adjacency& graph,
                                       const std::vector<std::vector<std::size_t>>& components) {
  std::vector<std::size_t> ids(graph.size(), kUnvisited);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t v : components[c]) ids[v] = c;
  }
  return ids;
}

bool has_cycle(const Adjacency& graph, const std::vector<std::size_t>& component) {
  if (component.size() > 1) return true;
  if (component.empty()) return false;
  std::size_t v = component.front();
  return std::binary_search(graph[v].begin(), graph[v].end(), v);
}

std::vector<std::size_t> shortest_path(const Adjacency& graph, std::size_t from, std::size_t to) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> parent(n, kUnvisited);
  std::deque<std::size_t> queue;
  // Seed with the successors of `from` so that from == to yields a cycle.
  for (std::size_t w : graph[from]) {
    if (parent[w] == kUnvisited) {
      parent[w] = from;
      queue.push_back(w);
    }
  }
  while (!queue.empty() && parent[to] == kUnvisited) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : graph[v]) {
      if (parent[w] == kUnvisited) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[to] == kUnvisited) return {};
  std::vector<std::size_t> path{to};
  std::size_t v = to;
  do {
    v = parent[v];
    path.push_back(v);
  } while (v != from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<bool> bi_essential(const Adjacency& graph) { return prune(graph, true, true); }

std::vector<bool> forward_essential(const Adjacency& graph) { return prune(graph, false, true); }

}  // namespace limitsets
