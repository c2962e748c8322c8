#pragma once

// Dyck paths and their statistics: valleys, triple falls, returns,
// irreducibility, last-return decomposition, and exhaustive generation.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyckdes {

enum class Step : std::uint8_t { up, down };

/// A balanced U/D step sequence whose every prefix has #U >= #D.
struct DyckPath {
    std::vector<Step> steps;

    std::size_t semilength() const { return steps.size() / 2; }
    bool empty() const { return steps.empty(); }
    bool operator==(const DyckPath&) const = default;
    bool operator<(const DyckPath& o) const { return steps < o.steps; }

    std::string to_string() const {
        std::string s;
        s.reserve(steps.size());
        for (Step st : steps) s += (st == Step::up ? 'U' : 'D');
        return s;
    }
};

/// Parses a U/D string (case-insensitive, no separators) and validates
/// both Dyck invariants. Positions in errors are 1-based.
inline DyckPath parse_path(const std::string& text) {
    DyckPath p;
    p.steps.reserve(text.size());
    int height = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'U' || c == 'u') {
            p.steps.push_back(Step::up);
            ++height;
        } else if (c == 'D' || c == 'd') {
            p.steps.push_back(Step::down);
            --height;
            if (height < 0)
                throw std::invalid_argument(
                    "path dips below zero at position " + std::to_string(i + 1));
        } else {
            throw std::invalid_argument("illegal character '" + std::string(1, c) +
                                        "' at position " + std::to_string(i + 1));
        }
    }
    if (height != 0)
        throw std::invalid_argument("unbalanced path: " + std::to_string(height) +
                                    " unmatched up steps");
    return p;
}

/// Number of DU factors.
inline int valleys(const DyckPath& p) {
    int v = 0;
    for (std::size_t i = 0; i + 1 < p.steps.size(); ++i)
        if (p.steps[i] == Step::down && p.steps[i + 1] == Step::up) ++v;
    return v;
}

/// Number of DDD factors, overlaps counted: a maximal descent run of
/// length d contributes max(d - 2, 0).
inline int triple_falls(const DyckPath& p) {
    int tf = 0;
    for (std::size_t i = 0; i + 2 < p.steps.size(); ++i)
        if (p.steps[i] == Step::down && p.steps[i + 1] == Step::down &&
            p.steps[i + 2] == Step::down)
            ++tf;
    return tf;
}

/// Number of down steps ending at height 0.
inline int returns(const DyckPath& p) {
    int r = 0, height = 0;
    for (Step s : p.steps) {
        height += (s == Step::up ? 1 : -1);
        if (s == Step::down && height == 0) ++r;
    }
    return r;
}

/// Exactly one return; the empty path is not irreducible.
inline bool is_irreducible(const DyckPath& p) { return returns(p) == 1; }

/// Splits p = prefix + suffix at the last return; the suffix is irreducible,
/// the prefix possibly empty.
inline std::pair<DyckPath, DyckPath> last_return_split(const DyckPath& p) {
    if (p.empty()) throw std::invalid_argument("cannot split the empty path");
    int height = 0;
    std::size_t split = 0;  // index just after the second-to-last return
    for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) {
        height += (p.steps[i] == Step::up ? 1 : -1);
        if (height == 0) split = i + 1;
    }
    DyckPath prefix{{p.steps.begin(), p.steps.begin() + static_cast<long>(split)}};
    DyckPath suffix{{p.steps.begin() + static_cast<long>(split), p.steps.end()}};
    return {std::move(prefix), std::move(suffix)};
}

/// U . p . D — always irreducible, semilength + 1.
inline DyckPath elevate(const DyckPath& p) {
    DyckPath e;
    e.steps.reserve(p.steps.size() + 2);
    e.steps.push_back(Step::up);
    e.steps.insert(e.steps.end(), p.steps.begin(), p.steps.end());
    e.steps.push_back(Step::down);
    return e;
}

/// Run-length view: maximal ascent/descent pairs (a_i, d_i).
struct RunForm {
    std::vector<std::pair<int, int>> runs;
};

inline RunForm run_form(const DyckPath& p) {
    RunForm rf;
    std::size_t i = 0;
    while (i < p.steps.size()) {
        int a = 0, d = 0;
        while (i < p.steps.size() && p.steps[i] == Step::up) ++a, ++i;
        while (i < p.steps.size() && p.steps[i] == Step::down) ++d, ++i;
        rf.runs.emplace_back(a, d);
    }
    return rf;
}

inline constexpr int kDefaultOracleBound = 14;

/// Calls fn with every Dyck path of semilength n, in lexicographic step
/// order (U < D). Backtracking with prefix-feasibility pruning.
template <typename Fn>
void for_each_path(int n, Fn&& fn, int bound = kDefaultOracleBound) {
    if (n < 0) throw std::invalid_argument("negative semilength");
    if (n > bound)
        throw std::invalid_argument("semilength " + std::to_string(n) +
                                    " exceeds oracle bound " + std::to_string(bound));
    DyckPath p;
    p.steps.reserve(static_cast<std::size_t>(2 * n));
    // ups/downs remaining; never let downs exceed ups emitted.
    auto rec = [&](auto&& self, int ups, int downs, int height) -> void {
        if (ups == 0 && downs == 0) {
            fn(const_cast<const DyckPath&>(p));
            return;
        }
        if (ups > 0) {
            p.steps.push_back(Step::up);
            self(self, ups - 1, downs, height + 1);
            p.steps.pop_back();
        }
        if (downs > 0 && height > 0) {
            p.steps.push_back(Step::down);
            self(self, ups, downs - 1, height - 1);
            p.steps.pop_back();
        }
    };
    rec(rec, n, n, 0);
}

}  // namespace dyckdes
