#pragma once

// Exact DP tables for the joint (valleys, triple falls) distribution:
// a_{n,p,q} over all Dyck paths and b_{n,p,q} over irreducible ones,
// with the Eulerian rows e_{n,k} obtained as anti-diagonal sums.
// Brute-force oracles live alongside for cross-validation.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dyckdes/bijection.hpp"
#include "dyckdes/dyck.hpp"
#include "dyckdes/numbers.hpp"
#include "dyckdes/perm.hpp"

namespace dyckdes {

enum class TableKind { all_paths, irreducible };

/// Sparse counts (p = valleys, q = triple falls) -> count for one
/// semilength. Keys iterate sorted by (p, q).
struct TriStatTable {
    int n = 0;
    TableKind kind = TableKind::all_paths;
    std::map<std::pair<int, int>, Count> counts;

    Count total() const {
        Count t = 0;
        for (const auto& [key, c] : counts) t += c;
        return t;
    }
    Count at(int p, int q) const {
        auto it = counts.find({p, q});
        return it == counts.end() ? Count(0) : it->second;
    }
    void add(int p, int q, const Count& c) {
        if (c == 0) return;
        counts[{p, q}] += c;
    }
    bool operator==(const TriStatTable& o) const {
        return n == o.n && counts == o.counts;
    }
};

/// e_{n,0..n-1} (row 0 is the single entry 1).
struct EulerianRow {
    int n = 0;
    std::vector<Count> counts;
    bool operator==(const EulerianRow&) const = default;
};

/// a[0..max_n] and b[1..max_n] (b[0] is an unused placeholder: the empty
/// path has no return, so b_0 is only a series-level convention).
struct TableSet {
    std::vector<TriStatTable> a;
    std::vector<TriStatTable> b;
};

/// Builds both tables by the two recurrences:
///   b_{n,p,q} = a_{n-1,p,q-1} - a_{n-2,p-1,q-1} + a_{n-2,p-1,q}   (n > 2)
///   a_{n,p,q} = b_{n,p,q} + sum_{i=1}^{n-1} sum_{j,s>=0}
///               b_{i,j,s} a_{n-i,p-j-1,q-s}
/// with hand-seeded bases up to n = 2. Negative intermediate counts are a
/// hard error (the b recurrence subtracts overlapping classes).
inline TableSet build_tables(int max_n) {
    if (max_n < 0) throw std::invalid_argument("negative max_n");
    TableSet t;
    t.a.resize(static_cast<std::size_t>(max_n) + 1);
    t.b.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        t.a[static_cast<std::size_t>(n)].n = n;
        t.b[static_cast<std::size_t>(n)].n = n;
        t.b[static_cast<std::size_t>(n)].kind = TableKind::irreducible;
    }
    t.a[0].add(0, 0, 1);
    if (max_n >= 1) {
        t.a[1].add(0, 0, 1);
        t.b[1].add(0, 0, 1);
    }
    if (max_n >= 2) {
        t.a[2].add(0, 0, 1);
        t.a[2].add(1, 0, 1);
        t.b[2].add(0, 0, 1);
    }
    for (int n = 3; n <= max_n; ++n) {
        auto& bn = t.b[static_cast<std::size_t>(n)];
        const auto& a1 = t.a[static_cast<std::size_t>(n - 1)];
        const auto& a2 = t.a[static_cast<std::size_t>(n - 2)];
        for (int p = 0; p <= n - 1; ++p)
            for (int q = 0; q <= n - 2; ++q) {
                Count v = a1.at(p, q - 1) - a2.at(p - 1, q - 1) + a2.at(p - 1, q);
                if (v < 0)
                    throw std::logic_error("negative intermediate count at n=" +
                                           std::to_string(n) + " p=" + std::to_string(p) +
                                           " q=" + std::to_string(q));
                bn.add(p, q, v);
            }
        auto& an = t.a[static_cast<std::size_t>(n)];
        for (const auto& [key, c] : bn.counts) an.add(key.first, key.second, c);
        for (int i = 1; i <= n - 1; ++i) {
            const auto& bi = t.b[static_cast<std::size_t>(i)];
            const auto& arest = t.a[static_cast<std::size_t>(n - i)];
            for (const auto& [bk, bc] : bi.counts)
                for (const auto& [ak, ac] : arest.counts)
                    an.add(bk.first + ak.first + 1, bk.second + ak.second, bc * ac);
        }
    }
    return t;
}

/// e_{n,k} = sum_{p+q=k} a_{n,p,q}.
inline std::vector<EulerianRow> eulerian_rows(const TableSet& t) {
    std::vector<EulerianRow> rows;
    rows.reserve(t.a.size());
    for (const auto& tab : t.a) {
        EulerianRow row{tab.n, std::vector<Count>(
                                   static_cast<std::size_t>(std::max(tab.n, 1)), Count(0))};
        for (const auto& [key, c] : tab.counts)
            row.counts[static_cast<std::size_t>(key.first + key.second)] += c;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<EulerianRow> eulerian_rows(int max_n) {
    return eulerian_rows(build_tables(max_n));
}

/// Exhaustive tally of (valleys, triple_falls) over all paths of
/// semilength n; kind irreducible filters to one-return paths.
inline TriStatTable oracle_tristat(int n, TableKind kind = TableKind::all_paths,
                                   int bound = kDefaultOracleBound) {
    TriStatTable tab;
    tab.n = n;
    tab.kind = kind;
    for_each_path(n, [&](const DyckPath& d) {
        if (kind == TableKind::irreducible && !is_irreducible(d)) return;
        tab.add(valleys(d), triple_falls(d), 1);
    }, bound);
    return tab;
}

/// Descent tally over all 123-avoiders of length n, generated via the
/// bijection rather than by filtering S_n.
inline EulerianRow oracle_eulerian(int n, int bound = kDefaultOracleBound) {
    EulerianRow row{n, std::vector<Count>(static_cast<std::size_t>(std::max(n, 1)), Count(0))};
    for_each_avoider(n, [&](const Permutation& p) {
        row.counts[static_cast<std::size_t>(descent_count(p))] += 1;
    }, bound);
    return row;
}

}  // namespace dyckdes
