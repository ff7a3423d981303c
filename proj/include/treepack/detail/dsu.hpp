#pragma once

#include <numeric>
#include <vector>

namespace treepack::detail {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False when x and y were already joined.
    bool unite(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        if (rank_[x] < rank_[y])
            std::swap(x, y);
        parent_[y] = x;
        if (rank_[x] == rank_[y])
            ++rank_[x];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

}  // namespace treepack::detail
