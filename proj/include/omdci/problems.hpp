#pragma once

// Input types for the two source problems the reductions start from:
// exact cover by 3-sets, and Hamiltonian cycle on simple undirected graphs.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "omdci/core.hpp"

namespace omdci {

// Exact-cover input: base set [3q] and m triples over it. Triples are
// normalized to ascending element order; their list order is preserved.
class X3CInstance {
public:
    X3CInstance(std::size_t q, std::vector<std::array<std::size_t, 3>> triples)
        : q_(q), triples_(std::move(triples)) {
        if (q_ < 1) throw DomainError("q must be positive");
        if (triples_.empty()) throw DomainError("at least one triple is required");
        for (auto& t : triples_) {
            std::sort(t.begin(), t.end());
            if (t[0] == t[1] || t[1] == t[2])
                throw DomainError("triple elements must be distinct");
            if (t[0] < 1 || t[2] > 3 * q_)
                throw DomainError("triple elements must lie in [1, " +
                                  std::to_string(3 * q_) + "]");
        }
    }

    std::size_t q() const { return q_; }
    std::size_t m() const { return triples_.size(); }
    std::size_t base_size() const { return 3 * q_; }
    const std::vector<std::array<std::size_t, 3>>& triples() const { return triples_; }

    friend bool operator==(const X3CInstance&, const X3CInstance&) = default;

private:
    std::size_t q_;
    std::vector<std::array<std::size_t, 3>> triples_;
};

// Simple undirected graph on vertices 1..n with sorted adjacency lists.
class Graph {
public:
    Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) : n_(n) {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (auto [u, v] : edges) {
            if (u == v) throw DomainError("self-loops are not allowed");
            if (u > v) std::swap(u, v);
            if (u < 1 || v > n_)
                throw DomainError("edge endpoint out of range [1, " + std::to_string(n_) + "]");
            if (!seen.insert({u, v}).second) throw DomainError("duplicate edge");
        }
        edges_.assign(seen.begin(), seen.end());
        adjacency_.assign(n_ + 1, {});
        for (auto [u, v] : edges_) {
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    std::size_t n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Normalized (u < v) edges in ascending order.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    // Ascending neighbor list of vertex v (1-based).
    const std::vector<std::size_t>& neighbors(std::size_t v) const {
        if (v < 1 || v > n_) throw DomainError("vertex out of range");
        return adjacency_[v];
    }

    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

    bool adjacent(std::size_t u, std::size_t v) const {
        const auto& nbrs = neighbors(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace omdci
