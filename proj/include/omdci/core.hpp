#pragma once

// Core value types for strings with colored indices: each position of a
// string carries a color (block similarity class) and a critical character.
// All external indices are 1-based; empty strings are legal everywhere.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace omdci {

// Input text could not be parsed; line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                  : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a semantic requirement (bad index range,
// non-permutation pattern, infeasible generator parameters, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& message) : std::runtime_error(message) {}
};

class Color {
public:
    explicit Color(std::string id) : id_(std::move(id)) {
        if (id_.empty()) throw DomainError("color identifier must be non-empty");
    }

    const std::string& id() const { return id_; }

    friend auto operator<=>(const Color&, const Color&) = default;

private:
    std::string id_;
};

class CriticalChar {
public:
    explicit CriticalChar(std::string id) : id_(std::move(id)) {
        if (id_.empty()) throw DomainError("char identifier must be non-empty");
    }

    const std::string& id() const { return id_; }

    friend auto operator<=>(const CriticalChar&, const CriticalChar&) = default;

private:
    std::string id_;
};

struct Block {
    CriticalChar ch;
    Color color;

    friend auto operator<=>(const Block&, const Block&) = default;
};

inline Block make_block(std::string ch, std::string color) {
    return Block{CriticalChar(std::move(ch)), Color(std::move(color))};
}

// Immutable sequence of (char, color) blocks. at() takes 1-based positions.
class ColoredString {
public:
    ColoredString() = default;
    explicit ColoredString(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

    std::size_t size() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }

    const Block& at(std::size_t pos) const {
        if (pos < 1 || pos > blocks_.size())
            throw DomainError("position " + std::to_string(pos) + " out of range [1, " +
                              std::to_string(blocks_.size()) + "]");
        return blocks_[pos - 1];
    }

    const std::vector<Block>& blocks() const { return blocks_; }

    friend bool operator==(const ColoredString&, const ColoredString&) = default;

private:
    std::vector<Block> blocks_;
};

enum class Variant { general, omdci, omdci_plus };

inline std::string variant_name(Variant v) {
    switch (v) {
        case Variant::general: return "general";
        case Variant::omdci: return "omdci";
        case Variant::omdci_plus: return "omdci+";
    }
    throw DomainError("unknown variant");
}

// True iff every color occurs exactly once in s and every char occurs
// exactly once in s. Vacuously true for the empty string.
inline bool is_permutation_string(const ColoredString& s) {
    std::set<Color> colors;
    std::set<CriticalChar> chars;
    for (const Block& b : s.blocks()) {
        if (!colors.insert(b.color).second) return false;
        if (!chars.insert(b.ch).second) return false;
    }
    return true;
}

// A pattern/program pair. For the omdci and omdci+ variants the pattern M
// must be a permutation string in both colors and chars.
class Instance {
public:
    Instance(Variant variant, ColoredString m, ColoredString a)
        : variant_(variant), m_(std::move(m)), a_(std::move(a)) {
        if (variant_ != Variant::general && !is_permutation_string(m_))
            throw DomainError("variant " + variant_name(variant_) +
                              " requires M to be a permutation string");
    }

    Variant variant() const { return variant_; }
    const ColoredString& m() const { return m_; }
    const ColoredString& a() const { return a_; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Variant variant_;
    ColoredString m_;
    ColoredString a_;
};

// Candidate solution: 1-based index sequences into M and A. Deliberately
// unvalidated so the verifiers can report malformed pairs.
struct SolutionPair {
    std::vector<std::size_t> idx_m;
    std::vector<std::size_t> idx_a;

    std::size_t k() const { return idx_m.size(); }

    friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

// Multiset of critical chars; counts are strictly positive.
class Multiset {
public:
    void add(const CriticalChar& c, std::size_t n = 1) {
        if (n) counts_[c] += n;
    }

    std::size_t count(const CriticalChar& c) const {
        auto it = counts_.find(c);
        return it == counts_.end() ? 0 : it->second;
    }

    bool empty() const { return counts_.empty(); }

    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [c, n] : counts_) t += n;
        return t;
    }

    const std::map<CriticalChar, std::size_t>& counts() const { return counts_; }

    friend bool operator==(const Multiset&, const Multiset&) = default;

private:
    std::map<CriticalChar, std::size_t> counts_;
};

namespace detail {

inline void check_index_sequence(const ColoredString& s, const std::vector<std::size_t>& idx) {
    std::size_t prev = 0;
    for (std::size_t i : idx) {
        if (i <= prev) throw DomainError("index sequence is not strictly increasing");
        if (i < 1 || i > s.size())
            throw DomainError("index " + std::to_string(i) + " out of range [1, " +
                              std::to_string(s.size()) + "]");
        prev = i;
    }
}

}  // namespace detail

// Blocks of s at the given strictly increasing 1-based positions.
inline ColoredString subsequence_at(const ColoredString& s, const std::vector<std::size_t>& idx) {
    detail::check_index_sequence(s, idx);
    std::vector<Block> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(s.at(i));
    return ColoredString(std::move(out));
}

// Multiset of the chars of s at the given positions.
inline Multiset char_multiset(const ColoredString& s, const std::vector<std::size_t>& idx) {
    detail::check_index_sequence(s, idx);
    Multiset ms;
    for (std::size_t i : idx) ms.add(s.at(i).ch);
    return ms;
}

}  // namespace omdci
