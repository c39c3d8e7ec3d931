#pragma once

#include <cstddef>
#include <vector>

namespace rigidcay {

/// Plain union-find with path compression, for one-shot component queries.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int find(int v) {
    int root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      int next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  int component_count() const { return components_; }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

/// Union by size without path compression; every union is recorded on a
/// trail so the structure can be rewound in LIFO order during backtracking.
class TrailUnionFind {
public:
  explicit TrailUnionFind(int n) : parent_(n), size_(n, 1) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool connected(int a, int b) const { return find(a) == find(b); }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    trail_.push_back({b, a});
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void rewind(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [child, parent] = trail_.back();
      trail_.pop_back();
      size_[parent] -= size_[child];
      parent_[child] = child;
    }
  }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> trail_;
};

}  // namespace rigidcay
