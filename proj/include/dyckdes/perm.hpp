#pragma once

// Permutations, 123-avoidance, descent statistics, and the
// left-to-right-minima block decomposition.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyckdes {

/// A permutation of {1..n}, stored one-based. n = 0 is allowed.
struct Permutation {
    std::vector<int> entries;

    std::size_t size() const { return entries.size(); }
    bool operator==(const Permutation&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(entries[i]);
        }
        return out;
    }
};

/// Validates that entries form a permutation of {1..n}. Throws with the
/// duplicated or out-of-range value named.
inline void validate_permutation(const std::vector<int>& entries) {
    const int n = static_cast<int>(entries.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

/// Parses a one-line permutation: base-10 values separated by spaces or
/// commas. The empty string is the length-0 permutation.
inline Permutation parse_permutation(const std::string& text) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<int> entries;
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("non-integer token '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("non-integer token '" + tok + "'");
        entries.push_back(v);
    }
    validate_permutation(entries);
    return Permutation{std::move(entries)};
}

/// First 123 occurrence as 1-based positions (i, j, k), or nullopt.
/// Cubic scan; kept as the oracle for the fast test and for diagnostics.
inline std::optional<std::array<int, 3>> find_123(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (p.entries[j] <= p.entries[i]) continue;
            for (int k = j + 1; k < n; ++k)
                if (p.entries[k] > p.entries[j])
                    return std::array<int, 3>{i + 1, j + 1, k + 1};
        }
    return std::nullopt;
}

/// True iff the longest increasing subsequence has length <= 2.
/// tails[r] = smallest possible last value of an increasing subsequence
/// of length r+1 seen so far.
inline bool avoids_123(const Permutation& p) {
    int tail1 = 0, tail2 = 0;  // 0 = none yet
    for (int v : p.entries) {
        if (tail2 != 0 && v > tail2) return false;
        if (tail1 != 0 && v > tail1) {
            if (tail2 == 0 || v < tail2) tail2 = v;
        } else {
            tail1 = v;
        }
    }
    return true;
}

/// Number of positions i with p(i) > p(i+1).
inline int descent_count(const Permutation& p) {
    int des = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p.entries[i] > p.entries[i + 1]) ++des;
    return des;
}

/// One block of the minima decomposition: a left-to-right minimum and the
/// word that follows it up to the next minimum.
struct MinBlock {
    int minimum;
    std::vector<int> word;
    bool operator==(const MinBlock&) const = default;
};

struct MinDecomposition {
    std::vector<MinBlock> blocks;

    Permutation flatten() const {
        Permutation p;
        for (const auto& b : blocks) {
            p.entries.push_back(b.minimum);
            p.entries.insert(p.entries.end(), b.word.begin(), b.word.end());
        }
        return p;
    }
    bool operator==(const MinDecomposition&) const = default;
};

/// Splits p at its left-to-right minima. The first entry is always a
/// minimum, so every entry lands in exactly one block.
inline MinDecomposition min_decompose(const Permutation& p) {
    MinDecomposition d;
    int current_min = static_cast<int>(p.size()) + 1;
    for (int v : p.entries) {
        if (v < current_min) {
            current_min = v;
            d.blocks.push_back(MinBlock{v, {}});
        } else {
            d.blocks.back().word.push_back(v);
        }
    }
    return d;
}

/// Calls fn with every permutation of {1..n} in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    Permutation p;
    p.entries.resize(static_cast<std::size_t>(n));
    std::iota(p.entries.begin(), p.entries.end(), 1);
    if (n == 0) {
        fn(p);
        return;
    }
    do {
        fn(p);
    } while (std::next_permutation(p.entries.begin(), p.entries.end()));
}

}  // namespace dyckdes
