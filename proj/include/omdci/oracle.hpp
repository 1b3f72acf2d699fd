#pragma once

// Brute-force deciders for the two source problems. These validate the
// reductions empirically and deliberately share no search code with the
// solvers or the reduction constructors: they must stay simple enough to
// trust by inspection.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "omdci/problems.hpp"

namespace omdci {

// First q-subset of triple indices (in lexicographic order) whose union is
// exactly [3q] with no element repeated. Indices are 1-based.
inline std::optional<std::vector<std::size_t>> x3c_oracle(const X3CInstance& x) {
    std::size_t q = x.q();
    std::size_t m = x.m();
    if (m < q) return std::nullopt;
    std::vector<std::size_t> combo(q);
    for (std::size_t i = 0; i < q; ++i) combo[i] = i;
    while (true) {
        std::set<std::size_t> covered;
        bool disjoint = true;
        for (std::size_t c : combo) {
            for (std::size_t e : x.triples()[c]) {
                if (!covered.insert(e).second) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) break;
        }
        if (disjoint && covered.size() == x.base_size()) {
            std::vector<std::size_t> out;
            for (std::size_t c : combo) out.push_back(c + 1);
            return out;
        }
        // next combination
        std::size_t i = q;
        while (i > 0 && combo[i - 1] == m - q + i - 1) --i;
        if (i == 0) return std::nullopt;
        ++combo[i - 1];
        for (std::size_t j = i; j < q; ++j) combo[j] = combo[j - 1] + 1;
    }
}

namespace detail {

inline bool hamiltonian_extend(const Graph& g, std::vector<std::size_t>& path,
                               std::vector<bool>& used) {
    if (path.size() == g.n()) return g.adjacent(path.back(), path.front());
    for (std::size_t next : g.neighbors(path.back())) {
        if (used[next]) continue;
        used[next] = true;
        path.push_back(next);
        if (hamiltonian_extend(g, path, used)) return true;
        path.pop_back();
        used[next] = false;
    }
    return false;
}

}  // namespace detail

// Backtracking search for a Hamiltonian cycle, anchored at vertex 1 with
// neighbors tried in ascending order. Returns the first cycle found.
inline std::optional<std::vector<std::size_t>> hamiltonian_oracle(const Graph& g) {
    if (g.n() < 3) throw DomainError("hamiltonian_oracle requires n >= 3");
    std::vector<std::size_t> path{1};
    std::vector<bool> used(g.n() + 1, false);
    used[1] = true;
    if (detail::hamiltonian_extend(g, path, used)) return path;
    return std::nullopt;
}

}  // namespace omdci
