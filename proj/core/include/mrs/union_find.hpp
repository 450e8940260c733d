#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace mrs {

/// Union-find with path compression and union-by-size.  unite() keeps the
/// smaller index as the representative on equal sizes, so representatives
/// are reproducible.
class UnionFind {
public:
    explicit UnionFind(std::int32_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::int32_t find(std::int32_t x) {
        std::int32_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            const std::int32_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    bool unite(std::int32_t a, std::int32_t b) {
        std::int32_t ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size_[ra] < size_[rb] || (size_[ra] == size_[rb] && rb < ra)) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        return true;
    }

private:
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> size_;
};

}  // namespace mrs
