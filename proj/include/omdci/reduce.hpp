#pragma once

// Executable hardness reductions: exact cover by 3-sets to full-pattern
// matching (omdci+), and Hamiltonian cycle to positive-solution existence
// (omdci, where "no Hamiltonian cycle" maps to "k_max = 0"). Each reduction
// also has a reverse extractor recovering a cover or cycle from a verified
// solution, and the cycle direction has a forward witness constructor.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "omdci/core.hpp"
#include "omdci/problems.hpp"
#include "omdci/verify.hpp"

namespace omdci {

enum class ReductionKind { x3c, cohc };

// One emitted position: which gadget produced it and the block it carries.
struct MapRecord {
    std::string gadget;
    Block block;
};

// Bookkeeping produced alongside a reduced instance. Position tables are
// 1-based; every emitted position appears exactly once in m_records or
// a_records.
struct ReductionMap {
    ReductionKind kind = ReductionKind::x3c;
    std::size_t q = 0;  // exact-cover dims
    std::size_t m = 0;
    std::size_t n = 0;  // graph dims
    std::vector<MapRecord> m_records;
    std::vector<MapRecord> a_records;

    // Exact cover: A positions of the element-carrying block (i, j).
    std::map<std::pair<std::size_t, std::size_t>, std::array<std::size_t, 3>> p_positions;

    // Graph reduction position tables, keyed (i, j).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> m_selection_pos;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> m_prelink_pos;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> m_postlink_pos;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> a_selection_pos;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> a_prelink_pos;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> a_postlink_pos;

    // Second subscript of every emitted color.
    std::map<std::string, std::size_t> beta;
};

namespace detail {

inline std::string sub2(const std::string& base, std::size_t i, std::size_t j) {
    return base + "_" + std::to_string(i) + "_" + std::to_string(j);
}

inline std::string sub3(const std::string& base, std::size_t i, std::size_t j, std::size_t k) {
    return sub2(base, i, j) + "_" + std::to_string(k);
}

}  // namespace detail

// Builds the pattern T(1)..T(q) and program X(1)..X(q) of the exact-cover
// reduction. Gadget T(i) lists chars C_i_1 .. C_i_{3m-3} over the colors
// v_i_j_r and closes with the base elements b_{3i-2}, b_{3i-1}, b_{3i}.
// Gadget X(i) interleaves element-carrying blocks P (triple elements as
// chars), lead blocks L, and hold blocks H so that matching all of T(i)
// forces exactly one P block, whose triple joins the cover. |M| = 3mq and
// |A| = (9m-6)q; the cover exists iff the instance has a full solution.
inline std::pair<Instance, ReductionMap> reduce_x3c(const X3CInstance& x) {
    const std::size_t q = x.q();
    const std::size_t m = x.m();
    ReductionMap map;
    map.kind = ReductionKind::x3c;
    map.q = q;
    map.m = m;

    std::vector<Block> m_blocks;
    for (std::size_t i = 1; i <= q; ++i) {
        std::string gadget = "T_" + std::to_string(i);
        for (std::size_t j = 1; j + 1 <= m; ++j) {
            for (std::size_t r = 1; r <= 3; ++r) {
                Block b = make_block(detail::sub2("C", i, 3 * (j - 1) + r),
                                     detail::sub3("v", i, j, r));
                m_blocks.push_back(b);
                map.m_records.push_back({gadget, b});
            }
        }
        for (std::size_t r = 1; r <= 3; ++r) {
            Block b = make_block("b_" + std::to_string(3 * (i - 1) + r),
                                 detail::sub3("v", i, m, r));
            m_blocks.push_back(b);
            map.m_records.push_back({gadget, b});
        }
    }

    std::vector<Block> a_blocks;
    auto emit = [&](const std::string& gadget, const Block& b) {
        a_blocks.push_back(b);
        map.a_records.push_back({gadget, b});
        return a_blocks.size();
    };
    auto emit_p = [&](std::size_t i, std::size_t j) {
        const auto& triple = x.triples()[j - 1];
        std::array<std::size_t, 3> where{};
        for (std::size_t r = 1; r <= 3; ++r)
            where[r - 1] = emit(detail::sub2("P", i, j),
                                make_block("b_" + std::to_string(triple[r - 1]),
                                           detail::sub3("v", i, j, r)));
        map.p_positions[{i, j}] = where;
    };
    auto emit_l = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 1; r <= 3; ++r)
            emit(detail::sub2("L", i, j), make_block(detail::sub2("C", i, 3 * j - 6 + r),
                                                     detail::sub3("v", i, j, r)));
    };
    auto emit_h = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 1; r <= 3; ++r)
            emit(detail::sub2("H", i, j), make_block(detail::sub2("C", i, 3 * j - 3 + r),
                                                     detail::sub3("v", i, j, r)));
    };
    for (std::size_t i = 1; i <= q; ++i) {
        for (std::size_t j = 1; j + 1 <= m; ++j) {
            emit_p(i, j);
            emit_l(i, j + 1);
            emit_h(i, j);
        }
        emit_p(i, m);
    }

    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            for (std::size_t r = 1; r <= 3; ++r) map.beta[detail::sub3("v", i, j, r)] = j;

    Instance inst(Variant::omdci_plus, ColoredString(std::move(m_blocks)),
                  ColoredString(std::move(a_blocks)));
    return {std::move(inst), std::move(map)};
}

// Recovers the exact cover selected by a verified full solution: for each
// gadget i the unique j whose element-carrying block P(i, j) supplied
// A positions. Returns the triple indices sorted ascending.
inline std::vector<std::size_t> extract_cover(const X3CInstance& x, const ReductionMap& map,
                                              const SolutionPair& sol) {
    if (map.kind != ReductionKind::x3c)
        throw DomainError("reduction map does not describe an exact-cover reduction");
    if (map.q != x.q() || map.m != x.m())
        throw DomainError("reduction map does not match the exact-cover input");
    auto [inst, fresh_map] = reduce_x3c(x);
    VerifyResult check = verify_plus(inst, sol);
    if (!check.ok)
        throw DomainError("solution does not verify on the reduced instance: " +
                          check.to_string());
    std::set<std::size_t> matched(sol.idx_a.begin(), sol.idx_a.end());
    std::vector<std::size_t> cover;
    for (std::size_t i = 1; i <= x.q(); ++i) {
        std::optional<std::size_t> pick;
        for (std::size_t j = 1; j <= x.m(); ++j) {
            const auto& where = map.p_positions.at({i, j});
            bool hit = false;
            for (std::size_t pos : where)
                if (matched.contains(pos)) hit = true;
            if (!hit) continue;
            if (pick && *pick != j)
                throw DomainError("gadget " + std::to_string(i) +
                                  " matched more than one element-carrying block");
            pick = j;
        }
        if (!pick)
            throw DomainError("gadget " + std::to_string(i) +
                              " matched no element-carrying block");
        cover.push_back(*pick);
    }
    std::sort(cover.begin(), cover.end());
    std::set<std::size_t> covered;
    for (std::size_t j : cover)
        for (std::size_t e : x.triples()[j - 1])
            if (!covered.insert(e).second)
                throw DomainError("extracted triples overlap on element " + std::to_string(e));
    if (covered.size() != x.base_size())
        throw DomainError("extracted triples do not cover the base set");
    return cover;
}

// Builds the graph reduction: Selection gadgets encode picking one vertex
// h_i per slot i (A lists the slot colors P_i_j in reverse, so at most one
// can match); Linking gadgets chain slot i's pick to slot i+1 (cyclically)
// through an adjacency-constrained block, so any positive solution spells
// out a Hamiltonian cycle and has size exactly 3n. |M| = 3n^2 and
// |A| = 2n^2 + 2n|E|.
inline std::pair<Instance, ReductionMap> reduce_cohc(const Graph& g) {
    const std::size_t n = g.n();
    if (n < 3) throw DomainError("graph reduction requires n >= 3");
    ReductionMap map;
    map.kind = ReductionKind::cohc;
    map.n = n;
    auto succ = [n](std::size_t i) { return i % n + 1; };

    std::vector<Block> m_blocks;
    auto emit_m = [&](const std::string& gadget, const Block& b) {
        m_blocks.push_back(b);
        map.m_records.push_back({gadget, b});
        return m_blocks.size();
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            map.m_selection_pos[{i, j}] =
                emit_m("MSelection_" + std::to_string(i),
                       make_block(detail::sub2("p", i, j), detail::sub2("P", i, j)));
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i <= n; ++i) {
            map.m_prelink_pos[{i, j}] =
                emit_m(detail::sub2("MPreLink", i, j),
                       make_block(detail::sub2("s", i, j), detail::sub2("S", i, j)));
            map.m_postlink_pos[{i, j}] =
                emit_m(detail::sub2("MPostLink", i, j),
                       make_block(detail::sub2("t", i, j), detail::sub2("T", i, j)));
        }
    }

    std::vector<Block> a_blocks;
    auto emit_a = [&](const std::string& gadget, const Block& b) {
        a_blocks.push_back(b);
        map.a_records.push_back({gadget, b});
        return a_blocks.size();
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = n; j >= 1; --j)
            map.a_selection_pos[{i, j}] =
                emit_a("ASelection_" + std::to_string(i),
                       make_block(detail::sub2("s", i, j), detail::sub2("P", i, j)));
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i <= n; ++i)
            map.a_prelink_pos[{i, j}] =
                emit_a(detail::sub2("APreLink", i, j),
                       make_block(detail::sub2("t", i, j), detail::sub2("S", i, j)));
        for (std::size_t i = 1; i <= n; ++i) {
            auto& list = map.a_postlink_pos[{i, j}];
            for (std::size_t nbr : g.neighbors(j))
                list.push_back(emit_a(detail::sub2("APostLink", i, j),
                                      make_block(detail::sub2("p", succ(i), nbr),
                                                 detail::sub2("T", i, j))));
        }
    }

    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            map.beta[detail::sub2("P", i, j)] = j;
            map.beta[detail::sub2("S", i, j)] = j;
            map.beta[detail::sub2("T", i, j)] = j;
        }
    }

    Instance inst(Variant::omdci, ColoredString(std::move(m_blocks)),
                  ColoredString(std::move(a_blocks)));
    return {std::move(inst), std::move(map)};
}

namespace detail {

inline void require_hamiltonian_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
    const std::size_t n = g.n();
    if (cycle.size() != n)
        throw DomainError("cycle must visit all " + std::to_string(n) + " vertices");
    std::set<std::size_t> seen;
    for (std::size_t v : cycle) {
        if (v < 1 || v > n) throw DomainError("cycle vertex out of range");
        if (!seen.insert(v).second) throw DomainError("cycle repeats a vertex");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.adjacent(cycle[i], cycle[(i + 1) % n]))
            throw DomainError("cycle uses the non-edge {" + std::to_string(cycle[i]) + ", " +
                              std::to_string(cycle[(i + 1) % n]) + "}");
    }
}

}  // namespace detail

// Reads the vertex picked in each Selection gadget of a verified positive
// solution; the resulting sequence is a Hamiltonian cycle of g.
inline std::vector<std::size_t> extract_cycle(const Graph& g, const ReductionMap& map,
                                              const SolutionPair& sol) {
    if (map.kind != ReductionKind::cohc)
        throw DomainError("reduction map does not describe a graph reduction");
    if (map.n != g.n()) throw DomainError("reduction map does not match the graph");
    auto [inst, fresh_map] = reduce_cohc(g);
    VerifyResult check = verify_omdci(inst, sol);
    if (!check.ok)
        throw DomainError("solution does not verify on the reduced instance: " +
                          check.to_string());
    const std::size_t n = g.n();
    std::vector<std::size_t> cycle;
    std::size_t cursor = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        std::optional<std::size_t> pick;
        for (; cursor < sol.idx_m.size() && sol.idx_m[cursor] <= i * n; ++cursor) {
            std::size_t pos = sol.idx_m[cursor];
            if (pos <= (i - 1) * n) continue;
            if (pick)
                throw DomainError("malformed_witness: selection gadget " + std::to_string(i) +
                                  " matched more than one slot color");
            pick = pos - (i - 1) * n;
        }
        if (!pick)
            throw DomainError("malformed_witness: selection gadget " + std::to_string(i) +
                              " matched no slot color");
        cycle.push_back(*pick);
    }
    detail::require_hamiltonian_cycle(g, cycle);
    return cycle;
}

// Builds the canonical size-3n solution encoding a Hamiltonian cycle
// q_1..q_n: per slot i it selects the Selection block colored P_{i, q_i},
// the PreLink block colored S_{i, q_i}, and the PostLink block carrying the
// successor's char p_{succ(i), q_{succ(i)}}.
inline SolutionPair witness_from_cycle(const Graph& g, const ReductionMap& map,
                                       const std::vector<std::size_t>& cycle) {
    if (map.kind != ReductionKind::cohc)
        throw DomainError("reduction map does not describe a graph reduction");
    if (map.n != g.n()) throw DomainError("reduction map does not match the graph");
    detail::require_hamiltonian_cycle(g, cycle);
    const std::size_t n = g.n();
    std::vector<std::size_t> idx_m;
    std::vector<std::size_t> idx_a;
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t here = cycle[i - 1];
        std::size_t next = cycle[i % n];
        idx_m.push_back(map.m_selection_pos.at({i, here}));
        idx_m.push_back(map.m_prelink_pos.at({i, here}));
        idx_m.push_back(map.m_postlink_pos.at({i, here}));
        idx_a.push_back(map.a_selection_pos.at({i, here}));
        idx_a.push_back(map.a_prelink_pos.at({i, here}));
        const auto& nbrs = g.neighbors(here);
        std::size_t rank = std::lower_bound(nbrs.begin(), nbrs.end(), next) - nbrs.begin();
        idx_a.push_back(map.a_postlink_pos.at({i, here}).at(rank));
    }
    std::sort(idx_m.begin(), idx_m.end());
    std::sort(idx_a.begin(), idx_a.end());
    return SolutionPair{std::move(idx_m), std::move(idx_a)};
}

}  // namespace omdci
