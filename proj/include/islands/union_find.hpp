#pragma once

#include <numeric>
#include <vector>

namespace islands {

/// Union-find with path halving. Reusable scratch structure.
class UnionFind {
public:
    explicit UnionFind(int n) { reset(n); }

    void reset(int n) {
        parent_.resize(static_cast<size_t>(n));
        std::iota(parent_.begin(), parent_.end(), 0);
        classes_ = n;
    }

    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }

    /// Returns true if the two elements were in different classes.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<size_t>(a)] = b;
        --classes_;
        return true;
    }

    int num_classes() const { return classes_; }

private:
    std::vector<int> parent_;
    int classes_ = 0;
};

}  // namespace islands
