#pragma once

// Seeded deterministic generators for instances, graphs, and exact-cover
// inputs. All outputs are pure functions of (seed, parameters).

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "omdci/core.hpp"
#include "omdci/problems.hpp"

namespace omdci {

// splitmix64: state advances by the golden-gamma constant and the output is
// a finalizing mix of it. Reference vectors (seed 0): 0xe220a8397b1dcdaf,
// 0x6e789e6aa1b965f4, 0x06c45d188009454f.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n) via modulo; the bias is negligible for the
    // desk-scale bounds used here.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw DomainError("below(0) is undefined");
        return next() % n;
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

namespace detail {

// Fisher-Yates shuffle, descending index order, j = below(i + 1).
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

inline std::vector<std::string> color_alphabet(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

inline std::vector<std::string> char_alphabet(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
    return out;
}

}  // namespace detail

// Uniform random instance. Colors are named 1..n_colors and chars
// a1..n_chars. For the omdci and omdci+ variants M is a random permutation
// pairing of the two alphabets, which requires m_len = n_colors = n_chars.
inline Instance gen_random_instance(std::uint64_t seed, Variant variant, std::size_t m_len,
                                    std::size_t a_len, std::size_t n_colors,
                                    std::size_t n_chars) {
    if (variant != Variant::general && (m_len != n_colors || m_len != n_chars))
        throw DomainError("permutation variants require m_len = n_colors = n_chars");
    if (variant == Variant::general && m_len > 0 && (n_colors == 0 || n_chars == 0))
        throw DomainError("alphabets must be non-empty");
    if (a_len > 0 && (n_colors == 0 || n_chars == 0))
        throw DomainError("alphabets must be non-empty");
    SplitMix64 rng(seed);
    std::vector<std::string> colors = detail::color_alphabet(n_colors);
    std::vector<std::string> chars = detail::char_alphabet(n_chars);
    std::vector<Block> m_blocks;
    if (variant == Variant::general) {
        for (std::size_t i = 0; i < m_len; ++i) {
            std::size_t c = static_cast<std::size_t>(rng.below(n_chars));
            std::size_t g = static_cast<std::size_t>(rng.below(n_colors));
            m_blocks.push_back(make_block(chars[c], colors[g]));
        }
    } else {
        std::vector<std::string> perm_colors = colors;
        std::vector<std::string> perm_chars = chars;
        detail::shuffle(perm_colors, rng);
        detail::shuffle(perm_chars, rng);
        for (std::size_t i = 0; i < m_len; ++i)
            m_blocks.push_back(make_block(perm_chars[i], perm_colors[i]));
    }
    std::vector<Block> a_blocks;
    for (std::size_t i = 0; i < a_len; ++i) {
        std::size_t c = static_cast<std::size_t>(rng.below(n_chars));
        std::size_t g = static_cast<std::size_t>(rng.below(n_colors));
        a_blocks.push_back(make_block(chars[c], colors[g]));
    }
    return Instance(variant, ColoredString(std::move(m_blocks)),
                    ColoredString(std::move(a_blocks)));
}

inline Graph make_cycle(std::size_t n) {
    if (n < 3) throw DomainError("cycle requires n >= 3");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n});
    return Graph(n, std::move(edges));
}

inline Graph make_path(std::size_t n) {
    if (n < 1) throw DomainError("path requires n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

inline Graph make_complete(std::size_t n) {
    if (n < 1) throw DomainError("complete graph requires n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

// Star with center vertex 1 and leaves 2..n.
inline Graph make_star(std::size_t n) {
    if (n < 2) throw DomainError("star requires n >= 2");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t j = 2; j <= n; ++j) edges.push_back({1, j});
    return Graph(n, std::move(edges));
}

// Petersen graph: outer cycle 1..5, spokes i to i+5, inner pentagram.
inline Graph make_petersen() {
    std::vector<std::pair<std::size_t, std::size_t>> edges = {
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
        {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
        {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9},
    };
    return Graph(10, std::move(edges));
}

// Each pair {u, v} with u < v (ascending pair order) is included with
// probability p.
inline Graph make_random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw DomainError("random graph requires n >= 1");
    if (p < 0.0 || p > 1.0) throw DomainError("edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (rng.next_double() < p) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// A random vertex cycle (guaranteeing Hamiltonicity) plus each remaining
// pair with probability extra_p.
inline Graph make_planted_hc(std::size_t n, double extra_p, std::uint64_t seed) {
    if (n < 3) throw DomainError("planted cycle requires n >= 3");
    if (extra_p < 0.0 || extra_p > 1.0) throw DomainError("edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
    detail::shuffle(order, rng);
    std::set<std::pair<std::size_t, std::size_t>> picked;
    auto norm = [](std::size_t u, std::size_t v) {
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    };
    for (std::size_t i = 0; i < n; ++i) picked.insert(norm(order[i], order[(i + 1) % n]));
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (!picked.contains({u, v}) && rng.next_double() < extra_p) picked.insert({u, v});
    return Graph(n, {picked.begin(), picked.end()});
}

// Random exact-cover input with m triples over [3q]. When planted, the
// first q triples drawn form a partition of [3q] (so a cover exists);
// triple list order is then shuffled.
inline X3CInstance gen_x3c(std::uint64_t seed, std::size_t q, std::size_t m, bool planted) {
    if (q < 1 || m < q) throw DomainError("gen_x3c requires m >= q >= 1");
    SplitMix64 rng(seed);
    std::vector<std::size_t> base(3 * q);
    for (std::size_t i = 0; i < base.size(); ++i) base[i] = i + 1;
    std::vector<std::array<std::size_t, 3>> triples;
    auto random_triple = [&]() {
        std::vector<std::size_t> pool = base;
        std::array<std::size_t, 3> t{};
        for (std::size_t r = 0; r < 3; ++r) {
            std::size_t j = static_cast<std::size_t>(rng.below(pool.size() - r)) + r;
            std::swap(pool[r], pool[j]);
            t[r] = pool[r];
        }
        return t;
    };
    if (planted) {
        std::vector<std::size_t> shuffled = base;
        detail::shuffle(shuffled, rng);
        for (std::size_t i = 0; i < q; ++i)
            triples.push_back({shuffled[3 * i], shuffled[3 * i + 1], shuffled[3 * i + 2]});
        for (std::size_t i = q; i < m; ++i) triples.push_back(random_triple());
        detail::shuffle(triples, rng);
    } else {
        for (std::size_t i = 0; i < m; ++i) triples.push_back(random_triple());
    }
    return X3CInstance(q, std::move(triples));
}

}  // namespace omdci
