#include "rigidcay/nac_search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rigidcay/errors.hpp"
#include "rigidcay/union_find.hpp"

namespace rigidcay {

namespace {

// Edges adjacent to already-ordered edges come first so that union-find
// violations surface as early as possible.
std::vector<int> fill_in_order(const SimpleGraph& graph) {
  const int m = static_cast<int>(graph.edges.size());
  std::vector<int> order;
  order.reserve(m);
  std::vector<char> placed(m, 0);
  std::vector<int> touch(graph.vertex_count, 0);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    int best_score = -1;
    for (int e = 0; e < m; ++e) {
      if (placed[e]) continue;
      const int score =
          step == 0 ? 0 : touch[graph.edges[e].first] + touch[graph.edges[e].second];
      if (score > best_score) {
        best = e;
        best_score = score;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    ++touch[graph.edges[best].first];
    ++touch[graph.edges[best].second];
  }
  return order;
}

struct Worker {
  const SimpleGraph& graph;
  const SearchOptions& opt;
  const std::vector<int>& order;
  long long budget;

  TrailUnionFind red;
  TrailUnionFind blue;
  std::vector<EdgeColor> assigned;       // indexed by edge id
  std::vector<int> red_edges;            // assignment stacks by order position
  std::vector<int> blue_edges;
  std::vector<long long> key_buffer;

  long long nodes = 0;
  long long leaf_count = 0;
  bool complete = true;
  bool stop = false;
  std::vector<EdgeColoring> found;
  std::atomic<bool>* shared_found = nullptr;

  Worker(const SimpleGraph& g, const SearchOptions& o, const std::vector<int>& ord,
         long long node_budget)
      : graph(g),
        opt(o),
        order(ord),
        budget(node_budget),
        red(g.vertex_count),
        blue(g.vertex_count),
        assigned(g.edges.size(), EdgeColor::Red) {
    key_buffer.reserve(g.vertex_count);
  }

  bool shared_stop() const {
    return shared_found != nullptr && shared_found->load(std::memory_order_relaxed);
  }

  // Returns false when the new assignment forces a monochromatic-component
  // violation (and leaves the union-finds untouched).
  bool try_assign(int pos, EdgeColor color) {
    const int e = order[pos];
    const auto& [u, v] = graph.edges[e];
    TrailUnionFind& same = color == EdgeColor::Red ? red : blue;
    const TrailUnionFind& other = color == EdgeColor::Red ? blue : red;
    auto& same_stack = color == EdgeColor::Red ? red_edges : blue_edges;
    const auto& other_stack = color == EdgeColor::Red ? blue_edges : red_edges;

    // This edge inside one component of the other color.
    if (other.connected(u, v)) return false;
    const std::size_t trail = same.mark();
    const bool merged = same.unite(u, v);
    if (merged) {
      // An earlier other-color edge may now close inside a same-color component.
      for (int oe : other_stack) {
        const auto& [x, y] = graph.edges[oe];
        if (same.connected(x, y)) {
          same.rewind(trail);
          return false;
        }
      }
    }
    assigned[e] = color;
    same_stack.push_back(e);
    return true;
  }

  void unassign(EdgeColor color, std::size_t red_trail, std::size_t blue_trail) {
    if (color == EdgeColor::Red) {
      red_edges.pop_back();
      red.rewind(red_trail);
    } else {
      blue_edges.pop_back();
      blue.rewind(blue_trail);
    }
  }

  bool leaf_is_good() {
    key_buffer.clear();
    for (int v = 0; v < graph.vertex_count; ++v)
      key_buffer.push_back(static_cast<long long>(red.find(v)) * graph.vertex_count +
                           blue.find(v));
    std::sort(key_buffer.begin(), key_buffer.end());
    return std::adjacent_find(key_buffer.begin(), key_buffer.end()) == key_buffer.end();
  }

  void emit_leaf() {
    if (red_edges.empty() || blue_edges.empty()) return;  // not surjective
    switch (opt.mode) {
      case SearchMode::CountAll:
        ++leaf_count;
        break;
      case SearchMode::EnumerateAll: {
        EdgeColoring coloring{assigned};
        found.push_back(coloring);
        found.push_back(swapped(coloring));
        leaf_count += 2;
        break;
      }
      case SearchMode::FirstAny:
        found.push_back(EdgeColoring{assigned});
        stop = true;
        break;
      case SearchMode::FirstGood:
        if (leaf_is_good()) {
          found.push_back(EdgeColoring{assigned});
          stop = true;
        }
        break;
    }
    if (stop && shared_found != nullptr)
      shared_found->store(true, std::memory_order_relaxed);
  }

  void dfs(int pos) {
    if (stop || shared_stop()) return;
    if (pos == static_cast<int>(order.size())) {
      emit_leaf();
      return;
    }
    for (EdgeColor color : {EdgeColor::Red, EdgeColor::Blue}) {
      if (pos == 0 && color == EdgeColor::Blue) break;  // swap symmetry
      if (++nodes > budget) {
        complete = false;
        stop = true;
        return;
      }
      const std::size_t red_trail = red.mark();
      const std::size_t blue_trail = blue.mark();
      if (try_assign(pos, color)) {
        dfs(pos + 1);
        unassign(color, red_trail, blue_trail);
        if (stop || shared_stop()) return;
      }
    }
  }

  // Forces the first `prefix_len` order positions from the bits of `prefix`
  // (position 0 stays red). Returns false when the prefix itself is pruned.
  bool run_with_prefix(unsigned prefix, int prefix_len) {
    if (!try_assign(0, EdgeColor::Red)) return false;
    for (int i = 1; i <= prefix_len; ++i) {
      const EdgeColor color =
          (prefix >> (i - 1)) & 1u ? EdgeColor::Blue : EdgeColor::Red;
      ++nodes;
      if (!try_assign(i, color)) return false;
    }
    dfs(prefix_len + 1);
    return true;
  }
};

SearchResult merge(std::vector<Worker>& workers, const SearchOptions& opt) {
  SearchResult result;
  for (Worker& w : workers) {
    result.nodes += w.nodes;
    result.nac_count += w.leaf_count;
    result.complete = result.complete && w.complete;
    for (auto& c : w.found) result.colorings.push_back(std::move(c));
  }
  if (opt.mode == SearchMode::CountAll) result.nac_count *= 2;
  if (opt.mode == SearchMode::FirstAny || opt.mode == SearchMode::FirstGood) {
    if (result.colorings.size() > 1) result.colorings.resize(1);
    result.nac_count = static_cast<long long>(result.colorings.size());
    // A hit decides the question even if some worker ran out of budget.
    if (!result.colorings.empty()) result.complete = true;
  }
  return result;
}

}  // namespace

SearchResult search_nac(const SimpleGraph& graph, const SearchOptions& options) {
  const int m = static_cast<int>(graph.edges.size());
  if ((options.mode == SearchMode::CountAll || options.mode == SearchMode::EnumerateAll) &&
      m > options.exhaustive_edge_cap)
    throw CapacityExceededError("exhaustive search capped at " +
                                std::to_string(options.exhaustive_edge_cap) + " edges, graph has " +
                                std::to_string(m));
  if (m == 0) return {};

  const std::vector<int> order = fill_in_order(graph);

  const int workers = std::max(1, options.workers);
  if (workers == 1 || m < 3) {
    std::vector<Worker> pool;
    pool.emplace_back(graph, options, order, options.budget);
    pool[0].run_with_prefix(0, 0);
    return merge(pool, options);
  }

  const int split = std::max(1, std::min({options.split_depth, m - 1, 20}));
  const unsigned prefixes = 1u << split;
  std::atomic<bool> found_flag{false};
  std::vector<Worker> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back(graph, options, order, options.budget / workers + 1);
    if (options.mode == SearchMode::FirstAny || options.mode == SearchMode::FirstGood)
      pool[w].shared_found = &found_flag;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      Worker& worker = pool[w];
      for (unsigned prefix = w; prefix < prefixes; prefix += static_cast<unsigned>(workers)) {
        if (worker.shared_stop()) break;
        worker.run_with_prefix(prefix, split);
        worker.red.rewind(0);
        worker.blue.rewind(0);
        worker.red_edges.clear();
        worker.blue_edges.clear();
        if (worker.stop) break;  // found (first modes) or budget exhausted
      }
    });
  }
  for (auto& t : threads) t.join();
  return merge(pool, options);
}

}  // namespace rigidcay
