#pragma once

// Report-based verification of the functional equations, the two
// closed-form identities, the four specializations, and the DP-vs-oracle
// equivalences. All comparisons are exact.

#include <algorithm>
#include <string>
#include <vector>

#include "dyckdes/numbers.hpp"
#include "dyckdes/series.hpp"
#include "dyckdes/tables.hpp"

namespace dyckdes {

struct CheckReport {
    std::string name;
    int order = 0;
    bool pass = false;
    std::string detail;  // on failure: first differing monomial, both values

    std::string line() const {
        std::string s = name + " order=" + std::to_string(order) + " " +
                        (pass ? "PASS" : "FAIL");
        if (!pass && !detail.empty()) s += " (" + detail + ")";
        return s;
    }
};

inline bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.pass; });
}

/// Coefficientwise comparison; on mismatch reports the lexicographically
/// first differing monomial (x-degree first, then (deg_y, deg_z)).
inline CheckReport compare_series(const std::string& name, const PolySeries& lhs,
                                  const PolySeries& rhs, int order) {
    CheckReport rep{name, order, true, ""};
    for (int i = 0; i <= order; ++i) {
        const Poly& a = lhs.at(i);
        const Poly& b = rhs.at(i);
        if (a == b) continue;
        Poly diff = a - b;
        const auto& [key, val] = *diff.terms.begin();
        rep.pass = false;
        rep.detail = "x^" + std::to_string(i) + " y^" + std::to_string(key.first) +
                     " z^" + std::to_string(key.second) +
                     ": lhs=" + a.coeff(key.first, key.second).str() +
                     " rhs=" + b.coeff(key.first, key.second).str();
        return rep;
    }
    return rep;
}

// --- the fixed polynomials of the closed forms -------------------------

/// 2xy(xyz - z - xy) = -2xyz + 2x^2 y^2 z - 2x^2 y^2.
inline PolySeries theorem5_multiplier(int order) {
    return PolySeries::monomial(-2, 1, 1, 1, order) +
           PolySeries::monomial(2, 2, 2, 1, order) +
           PolySeries::monomial(-2, 2, 2, 0, order);
}

/// -1 + xy + 2x^2 y - 2x^2 y^2 + xz - 2xyz - 2x^2 yz + 2x^2 y^2 z.
inline PolySeries theorem5_polynomial(int order) {
    return PolySeries::monomial(-1, 0, 0, 0, order) +
           PolySeries::monomial(1, 1, 1, 0, order) +
           PolySeries::monomial(2, 2, 1, 0, order) +
           PolySeries::monomial(-2, 2, 2, 0, order) +
           PolySeries::monomial(1, 1, 0, 1, order) +
           PolySeries::monomial(-2, 1, 1, 1, order) +
           PolySeries::monomial(-2, 2, 1, 1, order) +
           PolySeries::monomial(2, 2, 2, 1, order);
}

/// 1 - 2xy - 4x^2 y + x^2 y^2 - 2xz + 2x^2 yz + x^2 z^2.
inline PolySeries theorem5_radicand(int order) {
    return PolySeries::monomial(1, 0, 0, 0, order) +
           PolySeries::monomial(-2, 1, 1, 0, order) +
           PolySeries::monomial(-4, 2, 1, 0, order) +
           PolySeries::monomial(1, 2, 2, 0, order) +
           PolySeries::monomial(-2, 1, 0, 1, order) +
           PolySeries::monomial(2, 2, 1, 1, order) +
           PolySeries::monomial(1, 2, 0, 2, order);
}

/// 2xy^2(xy - 1 - x) = 2x^2 y^3 - 2xy^2 - 2x^2 y^2.
inline PolySeries theorem6_multiplier(int order) {
    return PolySeries::monomial(2, 2, 3, 0, order) +
           PolySeries::monomial(-2, 1, 2, 0, order) +
           PolySeries::monomial(-2, 2, 2, 0, order);
}

/// -1 + 2xy + 2x^2 y - 2xy^2 - 4x^2 y^2 + 2x^2 y^3.
inline PolySeries theorem6_polynomial(int order) {
    return PolySeries::monomial(-1, 0, 0, 0, order) +
           PolySeries::monomial(2, 1, 1, 0, order) +
           PolySeries::monomial(2, 2, 1, 0, order) +
           PolySeries::monomial(-2, 1, 2, 0, order) +
           PolySeries::monomial(-4, 2, 2, 0, order) +
           PolySeries::monomial(2, 2, 3, 0, order);
}

/// 1 - 4xy - 4x^2 y + 4x^2 y^2.
inline PolySeries theorem6_radicand(int order) {
    return PolySeries::monomial(1, 0, 0, 0, order) +
           PolySeries::monomial(-4, 1, 1, 0, order) +
           PolySeries::monomial(-4, 2, 1, 0, order) +
           PolySeries::monomial(4, 2, 2, 0, order);
}

// --- checks ------------------------------------------------------------

/// B = (A - 1)(xz + x^2 y - x^2 yz) + 1 + x + x^2 - x^2 z,
/// A = B + y(B - 1)(A - 1), both coefficientwise up to max_n.
inline std::vector<CheckReport> check_functional_equations(const TableSet& t, int max_n) {
    PolySeries a = a_from_tables(t, max_n);
    PolySeries b = b_from_tables(t, max_n);
    PolySeries one = PolySeries::constant(1, max_n);

    PolySeries factor = PolySeries::monomial(1, 1, 0, 1, max_n) +
                        PolySeries::monomial(1, 2, 1, 0, max_n) +
                        PolySeries::monomial(-1, 2, 1, 1, max_n);
    PolySeries tail = one + PolySeries::monomial(1, 1, 0, 0, max_n) +
                      PolySeries::monomial(1, 2, 0, 0, max_n) +
                      PolySeries::monomial(-1, 2, 0, 1, max_n);
    PolySeries rhs4 = (a - one) * factor + tail;

    PolySeries y = PolySeries::monomial(1, 0, 1, 0, max_n);
    PolySeries rhs5 = b + y * (b - one) * (a - one);

    return {compare_series("eq4_irreducible_from_all", b, rhs4, max_n),
            compare_series("eq5_last_return_convolution", a, rhs5, max_n)};
}

/// Cross-multiplied trivariate closed form:
/// 2xy(xyz - z - xy) A = P + sqrt(radicand).
inline CheckReport check_trivariate_closed_form(const TableSet& t, int max_n) {
    PolySeries a = a_from_tables(t, max_n);
    PolySeries lhs = theorem5_multiplier(max_n) * a;
    PolySeries rhs = theorem5_polynomial(max_n) + series_sqrt(theorem5_radicand(max_n));
    return compare_series("trivariate_closed_form", lhs, rhs, max_n);
}

/// Secondary route: expand A directly by exact division of the closed
/// form and compare with the table series. Throws if any coefficient
/// fails to divide exactly.
inline CheckReport check_trivariate_direct_expansion(const TableSet& t, int max_n) {
    PolySeries num = theorem5_polynomial(max_n + 1) +
                     series_sqrt(theorem5_radicand(max_n + 1));
    PolySeries a_direct = divide_exact(num, theorem5_multiplier(max_n + 1)).truncated(max_n);
    return compare_series("trivariate_direct_expansion", a_direct,
                          a_from_tables(t, max_n), max_n);
}

/// (a) E equals A with z <- y; (b) cross-multiplied Eulerian closed form
/// 2xy^2(xy - 1 - x) E = P6 + sqrt(radicand6).
inline std::vector<CheckReport> check_eulerian_closed_form(const TableSet& t, int max_n) {
    PolySeries e = e_from_rows(eulerian_rows(t), max_n);
    PolySeries a_spec = a_from_tables(t, max_n).with_z_set_to_y();
    CheckReport part_a = compare_series("eulerian_equals_diagonal", e, a_spec, max_n);

    PolySeries lhs = theorem6_multiplier(max_n) * e;
    PolySeries rhs = theorem6_polynomial(max_n) + series_sqrt(theorem6_radicand(max_n));
    CheckReport part_b = compare_series("eulerian_closed_form", lhs, rhs, max_n);
    return {part_a, part_b};
}

inline Count rational_to_count(const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error("non-integer coefficient: " + r.str());
    return boost::multiprecision::numerator(r);
}

/// The four specializations of A(x,y,z).
struct Specializations {
    std::vector<Count> catalan;                        // A(x,1,1)
    std::vector<Count> motzkin;                        // A(x,1,0)
    std::vector<std::vector<Count>> narayana_triangle; // yA(x,y,1), row n: k=1..n
    std::vector<std::vector<Count>> triple_fall_triangle;  // A(x,1,z), row n: q=0..
};

inline Specializations specializations(const TableSet& t, int max_n) {
    PolySeries a = a_from_tables(t, max_n);
    Specializations sp;
    PolySeries cat = a.with_y(1).with_z(1);
    PolySeries mot = a.with_y(1).with_z(0);
    PolySeries nar = a.with_z(1);
    PolySeries tfz = a.with_y(1);
    for (int n = 0; n <= max_n; ++n) {
        sp.catalan.push_back(rational_to_count(cat.at(n).coeff(0, 0)));
        sp.motzkin.push_back(rational_to_count(mot.at(n).coeff(0, 0)));
        // yA(x,y,1): row n lists the coefficients of y^1..y^n.
        std::vector<Count> nrow;
        for (int k = 1; k <= n; ++k)
            nrow.push_back(rational_to_count(nar.at(n).coeff(k - 1, 0)));
        sp.narayana_triangle.push_back(std::move(nrow));
        std::vector<Count> trow;
        int qmax = std::max(n - 2, 0);
        for (int q = 0; q <= qmax; ++q)
            trow.push_back(rational_to_count(tfz.at(n).coeff(0, q)));
        sp.triple_fall_triangle.push_back(std::move(trow));
    }
    return sp;
}

/// Checks the four specializations against independent sources: the
/// Catalan and Motzkin recurrences, the Narayana binomial formula, and
/// the exhaustive tally of paths by triple-fall count.
inline std::vector<CheckReport> check_specializations(const TableSet& t, int max_n,
                                                      int oracle_max_n = 12) {
    Specializations sp = specializations(t, max_n);
    std::vector<CheckReport> reports;

    auto mismatch = [](const std::string& where, const Count& got, const Count& want) {
        return where + ": got " + got.str() + " want " + want.str();
    };

    CheckReport cat{"specialization_catalan", max_n, true, ""};
    auto catalan_ref = catalan_numbers(max_n);
    for (int n = 0; n <= max_n && cat.pass; ++n)
        if (sp.catalan[static_cast<std::size_t>(n)] != catalan_ref[static_cast<std::size_t>(n)]) {
            cat.pass = false;
            cat.detail = mismatch("n=" + std::to_string(n),
                                  sp.catalan[static_cast<std::size_t>(n)],
                                  catalan_ref[static_cast<std::size_t>(n)]);
        }
    reports.push_back(cat);

    CheckReport mot{"specialization_motzkin", max_n, true, ""};
    auto motzkin_ref = motzkin_numbers(max_n);
    for (int n = 0; n <= max_n && mot.pass; ++n)
        if (sp.motzkin[static_cast<std::size_t>(n)] != motzkin_ref[static_cast<std::size_t>(n)]) {
            mot.pass = false;
            mot.detail = mismatch("n=" + std::to_string(n),
                                  sp.motzkin[static_cast<std::size_t>(n)],
                                  motzkin_ref[static_cast<std::size_t>(n)]);
        }
    reports.push_back(mot);

    CheckReport nar{"specialization_narayana", max_n, true, ""};
    for (int n = 1; n <= max_n && nar.pass; ++n)
        for (int k = 1; k <= n; ++k) {
            Count want = narayana(n, k);
            Count got = sp.narayana_triangle[static_cast<std::size_t>(n)]
                                            [static_cast<std::size_t>(k - 1)];
            if (got != want) {
                nar.pass = false;
                nar.detail = mismatch("n=" + std::to_string(n) + " k=" + std::to_string(k),
                                      got, want);
                break;
            }
        }
    reports.push_back(nar);

    int tf_max = std::min(max_n, oracle_max_n);
    CheckReport tfr{"specialization_triple_falls", tf_max, true, ""};
    for (int n = 0; n <= tf_max && tfr.pass; ++n) {
        std::vector<Count> tally(static_cast<std::size_t>(std::max(n - 2, 0)) + 1, Count(0));
        for_each_path(n, [&](const DyckPath& d) {
            tally[static_cast<std::size_t>(triple_falls(d))] += 1;
        });
        const auto& row = sp.triple_fall_triangle[static_cast<std::size_t>(n)];
        for (std::size_t q = 0; q < tally.size(); ++q)
            if (row[q] != tally[q]) {
                tfr.pass = false;
                tfr.detail = mismatch("n=" + std::to_string(n) + " q=" + std::to_string(q),
                                      row[q], tally[q]);
                break;
            }
    }
    reports.push_back(tfr);
    return reports;
}

/// DP tables vs exhaustive path enumeration (both kinds), and Eulerian
/// rows vs the descent tally over generated avoiders.
inline std::vector<CheckReport> check_oracles(const TableSet& t, int path_max_n,
                                              int perm_max_n,
                                              int bound = kDefaultOracleBound) {
    std::vector<CheckReport> reports;

    CheckReport pa{"oracle_tristat_all", path_max_n, true, ""};
    CheckReport pb{"oracle_tristat_irreducible", path_max_n, true, ""};
    for (int n = 0; n <= path_max_n; ++n) {
        if (pa.pass && !(t.a[static_cast<std::size_t>(n)] ==
                         oracle_tristat(n, TableKind::all_paths, bound))) {
            pa.pass = false;
            pa.detail = "mismatch at n=" + std::to_string(n);
        }
        if (n >= 1 && pb.pass &&
            !(t.b[static_cast<std::size_t>(n)] ==
              oracle_tristat(n, TableKind::irreducible, bound))) {
            pb.pass = false;
            pb.detail = "mismatch at n=" + std::to_string(n);
        }
    }
    reports.push_back(pa);
    reports.push_back(pb);

    CheckReport pe{"oracle_eulerian", perm_max_n, true, ""};
    auto rows = eulerian_rows(t);
    for (int n = 0; n <= perm_max_n && pe.pass; ++n)
        if (!(rows[static_cast<std::size_t>(n)] == oracle_eulerian(n, bound))) {
            pe.pass = false;
            pe.detail = "mismatch at n=" + std::to_string(n);
        }
    reports.push_back(pe);
    return reports;
}

}  // namespace dyckdes
