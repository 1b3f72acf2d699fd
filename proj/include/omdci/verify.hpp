#pragma once

// Solution checkers for the three problem variants. Exactly one violation is
// reported: the first failing check in the order the enum lists them.

#include <cstddef>
#include <optional>
#include <string>

#include "omdci/core.hpp"

namespace omdci {

enum class Violation {
    non_increasing_indices,
    index_out_of_range,
    length_mismatch,
    color_mismatch_at,
    char_multiset_mismatch,
    k_zero,
    m_not_permutation,
    incomplete_m_cover,
};

struct VerifyResult {
    bool ok = false;
    std::optional<Violation> violation;
    // For color_mismatch_at: the A position of the first mismatching pair.
    std::size_t position = 0;

    static VerifyResult pass() { return VerifyResult{true, std::nullopt, 0}; }

    static VerifyResult fail(Violation v, std::size_t pos = 0) {
        return VerifyResult{false, v, pos};
    }

    std::string to_string() const {
        if (ok) return "ok";
        switch (*violation) {
            case Violation::non_increasing_indices: return "non_increasing_indices";
            case Violation::index_out_of_range: return "index_out_of_range";
            case Violation::length_mismatch: return "length_mismatch";
            case Violation::color_mismatch_at:
                return "color_mismatch_at(" + std::to_string(position) + ")";
            case Violation::char_multiset_mismatch: return "char_multiset_mismatch";
            case Violation::k_zero: return "k_zero";
            case Violation::m_not_permutation: return "m_not_permutation";
            case Violation::incomplete_m_cover: return "incomplete_m_cover";
        }
        return "unknown";
    }
};

namespace detail {

inline bool strictly_increasing(const std::vector<std::size_t>& idx) {
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] <= idx[i - 1]) return false;
    return true;
}

inline bool in_range(const std::vector<std::size_t>& idx, std::size_t limit) {
    for (std::size_t i : idx)
        if (i < 1 || i > limit) return false;
    return true;
}

}  // namespace detail

// ok iff k > 0, both index sequences are strictly increasing and in range,
// colors agree pairwise, and the char multisets of M' and A' are equal.
inline VerifyResult verify_general(const Instance& inst, const SolutionPair& sol) {
    if (!detail::strictly_increasing(sol.idx_m) || !detail::strictly_increasing(sol.idx_a))
        return VerifyResult::fail(Violation::non_increasing_indices);
    if (!detail::in_range(sol.idx_m, inst.m().size()) ||
        !detail::in_range(sol.idx_a, inst.a().size()))
        return VerifyResult::fail(Violation::index_out_of_range);
    if (sol.idx_m.size() != sol.idx_a.size())
        return VerifyResult::fail(Violation::length_mismatch);
    for (std::size_t l = 0; l < sol.idx_m.size(); ++l) {
        if (inst.m().at(sol.idx_m[l]).color != inst.a().at(sol.idx_a[l]).color)
            return VerifyResult::fail(Violation::color_mismatch_at, sol.idx_a[l]);
    }
    if (char_multiset(inst.m(), sol.idx_m) != char_multiset(inst.a(), sol.idx_a))
        return VerifyResult::fail(Violation::char_multiset_mismatch);
    if (sol.idx_m.empty()) return VerifyResult::fail(Violation::k_zero);
    return VerifyResult::pass();
}

// verify_general plus the requirement that M is a permutation string.
inline VerifyResult verify_omdci(const Instance& inst, const SolutionPair& sol) {
    VerifyResult r = verify_general(inst, sol);
    if (!r.ok) return r;
    if (!is_permutation_string(inst.m()))
        return VerifyResult::fail(Violation::m_not_permutation);
    return VerifyResult::pass();
}

// verify_omdci plus full coverage of M: k = |M|, which for strictly
// increasing indices forces idx_m = (1, 2, ..., |M|).
inline VerifyResult verify_plus(const Instance& inst, const SolutionPair& sol) {
    VerifyResult r = verify_omdci(inst, sol);
    if (!r.ok) return r;
    if (sol.idx_m.size() != inst.m().size())
        return VerifyResult::fail(Violation::incomplete_m_cover);
    return VerifyResult::pass();
}

}  // namespace omdci
