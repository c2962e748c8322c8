#pragma once

// The modified Krattenthaler bijection kappa : S_n(123) -> Dyck paths of
// semilength n, its inverse, and the descents = valleys + triple falls
// translation.

#include <stdexcept>
#include <string>

#include "dyckdes/dyck.hpp"
#include "dyckdes/perm.hpp"

namespace dyckdes {

/// Maps a 123-avoider to its Dyck path: each left-to-right minimum x_i
/// becomes x_{i-1} - x_i up steps (x_0 = n + 1), each word w_i becomes
/// |w_i| + 1 down steps. Throws on non-avoiders, naming a witness.
inline DyckPath kappa(const Permutation& p) {
    if (auto w = find_123(p))
        throw std::invalid_argument("contains 123 at positions " +
                                    std::to_string((*w)[0]) + " " +
                                    std::to_string((*w)[1]) + " " +
                                    std::to_string((*w)[2]));
    DyckPath d;
    d.steps.reserve(2 * p.size());
    int prev_min = static_cast<int>(p.size()) + 1;
    for (const auto& block : min_decompose(p).blocks) {
        for (int k = 0; k < prev_min - block.minimum; ++k)
            d.steps.push_back(Step::up);
        for (std::size_t k = 0; k <= block.word.size(); ++k)
            d.steps.push_back(Step::down);
        prev_min = block.minimum;
    }
    return d;
}

/// Inverse map, read off the run form (a_i, d_i): the minima are the
/// partial differences x_i = x_{i-1} - a_i from x_0 = n + 1, the word
/// lengths are l_i = d_i - 1, and the words are the leftover values of
/// {1..n} in decreasing order, cut into consecutive blocks.
inline Permutation kappa_inverse(const DyckPath& d) {
    const int n = static_cast<int>(d.semilength());
    RunForm rf = run_form(d);
    std::vector<int> minima;
    std::vector<int> word_lengths;
    int x = n + 1;
    for (auto [a, dn] : rf.runs) {
        x -= a;
        minima.push_back(x);
        word_lengths.push_back(dn - 1);
    }
    std::vector<bool> is_min(static_cast<std::size_t>(n) + 1, false);
    for (int m : minima) is_min[static_cast<std::size_t>(m)] = true;
    std::vector<int> leftovers;
    for (int v = n; v >= 1; --v)
        if (!is_min[static_cast<std::size_t>(v)]) leftovers.push_back(v);

    Permutation p;
    p.entries.reserve(static_cast<std::size_t>(n));
    std::size_t next = 0;
    for (std::size_t i = 0; i < minima.size(); ++i) {
        p.entries.push_back(minima[i]);
        for (int k = 0; k < word_lengths[i]; ++k)
            p.entries.push_back(leftovers[next++]);
    }
    return p;
}

/// des(p), valleys and triple falls of kappa(p), and whether
/// des = v + tf holds.
struct Prop1Check {
    int des;
    int valleys;
    int triple_falls;
    bool holds;
};

inline Prop1Check check_descent_translation(const Permutation& p) {
    DyckPath d = kappa(p);
    Prop1Check c{descent_count(p), valleys(d), triple_falls(d), false};
    c.holds = (c.des == c.valleys + c.triple_falls);
    return c;
}

/// Calls fn with every 123-avoider of length n, generated directly from
/// Dyck paths through the inverse bijection (no n! filtering).
template <typename Fn>
void for_each_avoider(int n, Fn&& fn, int bound = kDefaultOracleBound) {
    for_each_path(n, [&](const DyckPath& d) { fn(kappa_inverse(d)); }, bound);
}

}  // namespace dyckdes
