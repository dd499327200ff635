#pragma once

#include <numeric>
#include <vector>

namespace bondspan {

// Union-find with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int i) {
        while (i != parent_[i]) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    // Returns false if i and j were already in the same set.
    bool unite(int i, int j) {
        int a = find(i);
        int b = find(j);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    bool same(int i, int j) { return find(i) == find(j); }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

} // namespace bondspan
