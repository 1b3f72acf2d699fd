#pragma once

// Exact solvers. solve_general / solve_omdci_max run a backtracking search
// over matched position pairs with char-balance pruning; solve_plus_fpt
// enumerates the d! candidate patterns for full-pattern matching.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "omdci/core.hpp"

namespace omdci {

struct SolveBudget {
    // Cap on search states entered; hitting it returns the best found so far
    // with exhausted=false.
    std::optional<std::uint64_t> max_nodes;
    // Cap on the matched-subset size enumerated (general variant only).
    std::optional<std::size_t> max_k_subset;
};

struct SolveOutcome {
    std::optional<SolutionPair> best;
    std::size_t k_max = 0;
    // True iff the search space was fully explored, so k_max is provably
    // optimal (for the early-exit search: the yes/no answer is conclusive).
    bool exhausted = false;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

inline void validate_budget(const SolveBudget& budget) {
    if (budget.max_nodes && *budget.max_nodes == 0)
        throw DomainError("max_nodes must be positive");
    if (budget.max_k_subset && *budget.max_k_subset == 0)
        throw DomainError("max_k_subset must be positive");
}

// Depth-first search over pairs (M position, A position) taken left to
// right with equal colors. A running char balance (M picks minus A picks)
// tracks multiset equality; any state with k > 0 and empty balance is a
// valid solution. Among equal-k solutions the lexicographically smallest
// (idx_m, then idx_a) is kept, which is safe because every solution of the
// current best size is still enumerated: the length bound only skips pairs
// that cannot reach best_k at all.
class PairSearch {
public:
    PairSearch(const Instance& inst, const SolveBudget& budget, bool early_exit)
        : m_str_(inst.m()),
          a_str_(inst.a()),
          n_(m_str_.size()),
          m_(a_str_.size()),
          max_nodes_(budget.max_nodes),
          max_k_(budget.max_k_subset),
          early_exit_(early_exit) {
        for (std::size_t p = 0; p < m_; ++p) {
            a_by_color_[a_str_.blocks()[p].color].push_back(p);
            a_char_pos_[a_str_.blocks()[p].ch].push_back(p);
        }
        for (std::size_t p = 0; p < n_; ++p) m_char_pos_[m_str_.blocks()[p].ch].push_back(p);
    }

    SolveOutcome run() {
        go(0, 0);
        SolveOutcome out;
        out.best = best_;
        out.k_max = best_k_;
        out.exhausted = early_exit_ ? (found_ || !aborted_) : (!aborted_ && !truncated_);
        out.nodes_explored = nodes_;
        return out;
    }

private:
    using PosTable = std::map<CriticalChar, std::vector<std::size_t>>;

    static std::size_t suffix_count(const PosTable& table, const CriticalChar& c,
                                    std::size_t from) {
        auto it = table.find(c);
        if (it == table.end()) return 0;
        const auto& v = it->second;
        return static_cast<std::size_t>(v.end() - std::lower_bound(v.begin(), v.end(), from));
    }

    bool balance_feasible(std::size_t im0, std::size_t ia0) const {
        for (const auto& [c, owed] : balance_) {
            if (owed > 0 && suffix_count(a_char_pos_, c, ia0) < static_cast<std::size_t>(owed))
                return false;
            if (owed < 0 && suffix_count(m_char_pos_, c, im0) < static_cast<std::size_t>(-owed))
                return false;
        }
        return true;
    }

    void adjust(const CriticalChar& c, long long delta) {
        long long v = (balance_[c] += delta);
        if (v == 0) balance_.erase(c);
    }

    void consider_current() {
        std::size_t k = cur_m_.size();
        bool better = k > best_k_ ||
                      (k == best_k_ && best_ &&
                       (cur_m_ < best_->idx_m ||
                        (cur_m_ == best_->idx_m && cur_a_ < best_->idx_a)));
        if (better) {
            best_ = SolutionPair{cur_m_, cur_a_};
            best_k_ = k;
        }
    }

    bool extension_exists(std::size_t im0, std::size_t ia0) const {
        for (std::size_t am = im0; am < n_; ++am) {
            auto it = a_by_color_.find(m_str_.blocks()[am].color);
            if (it == a_by_color_.end()) continue;
            if (std::lower_bound(it->second.begin(), it->second.end(), ia0) != it->second.end())
                return true;
        }
        return false;
    }

    void go(std::size_t im0, std::size_t ia0) {
        if (max_nodes_ && nodes_ >= *max_nodes_) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        std::size_t k = cur_m_.size();
        if (k > 0 && balance_.empty()) {
            consider_current();
            if (early_exit_) {
                found_ = true;
                return;
            }
        }
        if (max_k_ && k >= *max_k_) {
            if (!truncated_ && extension_exists(im0, ia0)) truncated_ = true;
            return;
        }
        for (std::size_t am = im0; am < n_; ++am) {
            if (k + 1 + std::min(n_ - am - 1, m_ - ia0) < best_k_) break;
            auto it = a_by_color_.find(m_str_.blocks()[am].color);
            if (it == a_by_color_.end()) continue;
            const auto& positions = it->second;
            for (auto pit = std::lower_bound(positions.begin(), positions.end(), ia0);
                 pit != positions.end(); ++pit) {
                std::size_t ab = *pit;
                if (k + 1 + std::min(n_ - am - 1, m_ - ab - 1) < best_k_) break;
                adjust(m_str_.blocks()[am].ch, +1);
                adjust(a_str_.blocks()[ab].ch, -1);
                cur_m_.push_back(am + 1);
                cur_a_.push_back(ab + 1);
                if (balance_feasible(am + 1, ab + 1)) go(am + 1, ab + 1);
                cur_m_.pop_back();
                cur_a_.pop_back();
                adjust(a_str_.blocks()[ab].ch, +1);
                adjust(m_str_.blocks()[am].ch, -1);
                if (found_ || aborted_) return;
            }
        }
    }

    const ColoredString& m_str_;
    const ColoredString& a_str_;
    std::size_t n_;
    std::size_t m_;
    std::map<Color, std::vector<std::size_t>> a_by_color_;
    PosTable m_char_pos_;
    PosTable a_char_pos_;
    std::map<CriticalChar, long long> balance_;
    std::vector<std::size_t> cur_m_;
    std::vector<std::size_t> cur_a_;
    std::optional<SolutionPair> best_;
    std::size_t best_k_ = 0;
    std::uint64_t nodes_ = 0;
    std::optional<std::uint64_t> max_nodes_;
    std::optional<std::size_t> max_k_;
    bool early_exit_;
    bool aborted_ = false;
    bool truncated_ = false;
    bool found_ = false;
};

}  // namespace detail

// Maximum-k search without permutation assumptions. Honors both budget caps.
inline SolveOutcome solve_general(const Instance& inst, const SolveBudget& budget = {}) {
    detail::validate_budget(budget);
    return detail::PairSearch(inst, budget, false).run();
}

// Maximum-k search requiring M to be a permutation string. max_k_subset is
// ignored (it applies to the general variant only).
inline SolveOutcome solve_omdci_max(const Instance& inst, const SolveBudget& budget = {}) {
    detail::validate_budget(budget);
    if (!is_permutation_string(inst.m()))
        throw DomainError("solve_omdci_max requires M to be a permutation string");
    SolveBudget b{budget.max_nodes, std::nullopt};
    return detail::PairSearch(inst, b, false).run();
}

// Early-exit search: stops at the first valid solution found. In the
// returned outcome exhausted=true means the answer is conclusive.
inline SolveOutcome solve_omdci_any(const Instance& inst, const SolveBudget& budget = {}) {
    detail::validate_budget(budget);
    if (!is_permutation_string(inst.m()))
        throw DomainError("solve_omdci_any requires M to be a permutation string");
    SolveBudget b{budget.max_nodes, std::nullopt};
    return detail::PairSearch(inst, b, true).run();
}

// True iff some solution with k > 0 exists. Solutions are not downward
// closed in k, so this runs the full pair search with early exit rather
// than checking k = 1 candidates.
inline bool has_positive_solution(const Instance& inst) {
    return solve_omdci_any(inst).k_max > 0;
}

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    return a > cap - b ? cap : a + b;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    if (a == 0 || b == 0) return 0;
    return a > cap / b ? cap : a * b;
}

// Saturating factorials fact[0..d]; 21! and beyond clamp to 2^64 - 1.
inline std::vector<std::uint64_t> saturating_factorials(std::size_t d) {
    std::vector<std::uint64_t> fact(d + 1, 1);
    for (std::size_t i = 1; i <= d; ++i) fact[i] = sat_mul(fact[i - 1], i);
    return fact;
}

struct FptResult {
    SolveOutcome outcome;
    bool steps_exceeded = false;
};

// Candidate patterns assign M's chars to M's color positions (colors fixed
// in order); candidates are enumerated lexicographically by char identifier.
// Each candidate block must match a position of A exactly (color and char),
// so a greedy leftmost scan is complete: taking the earliest occurrence
// never forecloses a later match. A prefix of bindings determines the scan
// state, so a dead binding at depth t rules out (d-t-1)! whole candidates
// at once; nodes_explored counts candidates ruled out or matched, saturating
// at 2^64 - 1.
class FptSearch {
public:
    FptSearch(const Instance& inst, std::optional<std::uint64_t> max_steps)
        : m_str_(inst.m()), a_str_(inst.a()), d_(m_str_.size()), max_steps_(max_steps) {
        for (const Block& b : m_str_.blocks()) chars_.push_back(b.ch);
        std::sort(chars_.begin(), chars_.end());
        used_.assign(d_, false);
        for (std::size_t p = 0; p < a_str_.size(); ++p)
            a_places_[a_str_.blocks()[p]].push_back(p);
        fact_ = saturating_factorials(d_);
    }

    FptResult run() {
        FptResult r;
        if (d_ == 0) {
            r.outcome = SolveOutcome{std::nullopt, 0, true, 1};
            return r;
        }
        bool ok = go(0, 0);
        if (ok) {
            accounted_ = sat_add(accounted_, 1);
            std::vector<std::size_t> idx_m(d_);
            for (std::size_t i = 0; i < d_; ++i) idx_m[i] = i + 1;
            r.outcome.best = SolutionPair{std::move(idx_m), picked_};
            r.outcome.k_max = d_;
            r.outcome.exhausted = true;
        } else {
            r.outcome.k_max = 0;
            r.outcome.exhausted = !exceeded_;
            r.steps_exceeded = exceeded_;
        }
        r.outcome.nodes_explored = accounted_;
        return r;
    }

private:
    bool go(std::size_t t, std::size_t from) {
        if (t == d_) return true;
        const Color& color = m_str_.blocks()[t].color;
        for (std::size_t ci = 0; ci < d_; ++ci) {
            if (used_[ci]) continue;
            if (max_steps_ && steps_ >= *max_steps_) {
                exceeded_ = true;
                return false;
            }
            ++steps_;
            std::size_t pos = 0;
            bool hit = false;
            auto it = a_places_.find(Block{chars_[ci], color});
            if (it != a_places_.end()) {
                auto pit = std::lower_bound(it->second.begin(), it->second.end(), from);
                if (pit != it->second.end()) {
                    pos = *pit;
                    hit = true;
                }
            }
            if (!hit) {
                accounted_ = sat_add(accounted_, fact_[d_ - t - 1]);
                continue;
            }
            used_[ci] = true;
            picked_.push_back(pos + 1);
            if (go(t + 1, pos + 1)) return true;
            picked_.pop_back();
            used_[ci] = false;
            if (exceeded_) return false;
        }
        return false;
    }

    const ColoredString& m_str_;
    const ColoredString& a_str_;
    std::size_t d_;
    std::vector<CriticalChar> chars_;
    std::vector<bool> used_;
    std::map<Block, std::vector<std::size_t>> a_places_;
    std::vector<std::size_t> picked_;
    std::vector<std::uint64_t> fact_;
    std::uint64_t accounted_ = 0;
    std::uint64_t steps_ = 0;
    std::optional<std::uint64_t> max_steps_;
    bool exceeded_ = false;
};

inline FptResult fpt_search(const Instance& inst, std::optional<std::uint64_t> max_steps) {
    if (inst.variant() != Variant::omdci_plus)
        throw DomainError("solve_plus_fpt requires an omdci+ instance");
    if (!is_permutation_string(inst.m()))
        throw DomainError("solve_plus_fpt requires M to be a permutation string");
    return FptSearch(inst, max_steps).run();
}

}  // namespace detail

// Full-pattern solver: returns the first candidate pattern (in lexicographic
// char order) that matches A, as a solution with idx_m = (1, ..., |M|), or
// k_max = 0 with exhausted=true after all |M|! candidates fail.
inline SolveOutcome solve_plus_fpt(const Instance& inst) {
    return detail::fpt_search(inst, std::nullopt).outcome;
}

// Budgeted variant: max_nodes caps the number of binding attempts; hitting
// the cap returns k_max = 0 with exhausted=false.
inline SolveOutcome solve_plus_fpt(const Instance& inst, const SolveBudget& budget) {
    detail::validate_budget(budget);
    return detail::fpt_search(inst, budget.max_nodes).outcome;
}

namespace detail {

inline std::vector<std::string> fresh_identifiers(const std::set<std::string>& used,
                                                  const std::string& base, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 1; out.size() < count; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!used.contains(candidate)) out.push_back(candidate);
    }
    return out;
}

}  // namespace detail

// Appends two blocks with fresh colors and fresh chars (the same pairs, in
// the same order) to both M and A. The new blocks alone form a k=2 solution
// and extend any solution by exactly 2, so the padded instance has
// k_max = original k_max + 2; in particular the original has k_max = 0 iff
// the padded instance has k_max = 2. The variant tag is preserved.
inline Instance pad_for_hardness(const Instance& inst) {
    if (!is_permutation_string(inst.m()))
        throw DomainError("pad_for_hardness requires M to be a permutation string");
    std::set<std::string> used_colors;
    std::set<std::string> used_chars;
    for (const ColoredString* s : {&inst.m(), &inst.a()}) {
        for (const Block& b : s->blocks()) {
            used_colors.insert(b.color.id());
            used_chars.insert(b.ch.id());
        }
    }
    std::vector<std::string> colors = detail::fresh_identifiers(used_colors, "pad_c", 2);
    std::vector<std::string> chars = detail::fresh_identifiers(used_chars, "pad_x", 2);
    std::vector<Block> m_blocks = inst.m().blocks();
    std::vector<Block> a_blocks = inst.a().blocks();
    for (std::size_t j = 0; j < 2; ++j) {
        Block b = make_block(chars[j], colors[j]);
        m_blocks.push_back(b);
        a_blocks.push_back(b);
    }
    return Instance(inst.variant(), ColoredString(std::move(m_blocks)),
                    ColoredString(std::move(a_blocks)));
}

}  // namespace omdci
