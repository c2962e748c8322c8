#pragma once

// Truncated formal power series in x whose coefficients are sparse
// polynomials in y, z with exact rational coefficients. Ring arithmetic,
// Newton square root, exact division, and assembly from the DP tables.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyckdes/tables.hpp"

namespace dyckdes {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse polynomial in y and z, keyed by (deg_y, deg_z) in sorted order.
struct Poly {
    std::map<std::pair<int, int>, Rational> terms;

    static Poly constant(const Rational& c) {
        Poly p;
        if (c != 0) p.terms[{0, 0}] = c;
        return p;
    }
    static Poly monomial(const Rational& c, int dy, int dz) {
        Poly p;
        if (c != 0) p.terms[{dy, dz}] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Poly&) const = default;

    Rational coeff(int dy, int dz) const {
        auto it = terms.find({dy, dz});
        return it == terms.end() ? Rational(0) : it->second;
    }

    void add_term(int dy, int dz, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.try_emplace({dy, dz}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [k, c] : o.terms) r.add_term(k.first, k.second, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [k, c] : o.terms) r.add_term(k.first, k.second, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [k1, c1] : terms)
            for (const auto& [k2, c2] : o.terms)
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    Poly operator*(const Rational& s) const {
        Poly r;
        if (s == 0) return r;
        for (const auto& [k, c] : terms) r.terms[k] = c * s;
        return r;
    }

    /// Substitutes z <- y.
    Poly collapse_z_to_y() const {
        Poly r;
        for (const auto& [k, c] : terms) r.add_term(k.first + k.second, 0, c);
        return r;
    }

    /// Evaluates at fixed y, keeping z: returns coefficients by deg_z.
    Poly eval_y(const Rational& y) const {
        Poly r;
        for (const auto& [k, c] : terms) {
            Rational f = c;
            for (int i = 0; i < k.first; ++i) f *= y;
            r.add_term(0, k.second, f);
        }
        return r;
    }
    /// Evaluates at fixed z, keeping y.
    Poly eval_z(const Rational& z) const {
        Poly r;
        for (const auto& [k, c] : terms) {
            Rational f = c;
            for (int i = 0; i < k.second; ++i) f *= z;
            r.add_term(k.first, 0, f);
        }
        return r;
    }

    /// Exact division by a monomial divisor; throws if any term is not
    /// divisible (degree too low in y or z).
    Poly divexact_monomial(const Rational& c, int dy, int dz) const {
        if (c == 0) throw std::invalid_argument("division by zero monomial");
        Poly r;
        for (const auto& [k, t] : terms) {
            if (k.first < dy || k.second < dz)
                throw std::domain_error("polynomial not divisible by monomial");
            r.terms[{k.first - dy, k.second - dz}] = t / c;
        }
        return r;
    }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms) {
            if (!s.empty()) s += " + ";
            s += c.str();
            if (k.first > 0) s += "*y^" + std::to_string(k.first);
            if (k.second > 0) s += "*z^" + std::to_string(k.second);
        }
        return s;
    }
};

/// Power series in x truncated at order N; coeff[i] is the coefficient
/// polynomial of x^i.
struct PolySeries {
    int order = 0;
    std::vector<Poly> coeff;

    explicit PolySeries(int n = 0) : order(n), coeff(static_cast<std::size_t>(n) + 1) {}

    static PolySeries constant(const Rational& c, int order) {
        PolySeries s(order);
        s.coeff[0] = Poly::constant(c);
        return s;
    }
    /// c * x^dx * y^dy * z^dz.
    static PolySeries monomial(const Rational& c, int dx, int dy, int dz, int order) {
        PolySeries s(order);
        if (dx <= order) s.coeff[static_cast<std::size_t>(dx)] = Poly::monomial(c, dy, dz);
        return s;
    }

    const Poly& at(int i) const { return coeff[static_cast<std::size_t>(i)]; }
    bool operator==(const PolySeries& o) const {
        return order == o.order && coeff == o.coeff;
    }

    PolySeries truncated(int n) const {
        PolySeries r(n);
        for (int i = 0; i <= std::min(n, order); ++i) r.coeff[static_cast<std::size_t>(i)] = at(i);
        return r;
    }

    PolySeries operator+(const PolySeries& o) const {
        int n = std::min(order, o.order);
        PolySeries r(n);
        for (int i = 0; i <= n; ++i)
            r.coeff[static_cast<std::size_t>(i)] = at(i) + o.at(i);
        return r;
    }
    PolySeries operator-(const PolySeries& o) const {
        int n = std::min(order, o.order);
        PolySeries r(n);
        for (int i = 0; i <= n; ++i)
            r.coeff[static_cast<std::size_t>(i)] = at(i) - o.at(i);
        return r;
    }
    PolySeries operator*(const PolySeries& o) const {
        int n = std::min(order, o.order);
        PolySeries r(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n && j <= o.order; ++j) {
                if (at(i).is_zero()) break;
                if (o.at(j).is_zero()) continue;
                r.coeff[static_cast<std::size_t>(i + j)] =
                    r.coeff[static_cast<std::size_t>(i + j)] + at(i) * o.at(j);
            }
        return r;
    }
    PolySeries operator*(const Rational& s) const {
        PolySeries r(order);
        for (int i = 0; i <= order; ++i) r.coeff[static_cast<std::size_t>(i)] = at(i) * s;
        return r;
    }

    /// Substitutes z <- y in every coefficient.
    PolySeries with_z_set_to_y() const {
        PolySeries r(order);
        for (int i = 0; i <= order; ++i)
            r.coeff[static_cast<std::size_t>(i)] = at(i).collapse_z_to_y();
        return r;
    }
    PolySeries with_y(const Rational& y) const {
        PolySeries r(order);
        for (int i = 0; i <= order; ++i) r.coeff[static_cast<std::size_t>(i)] = at(i).eval_y(y);
        return r;
    }
    PolySeries with_z(const Rational& z) const {
        PolySeries r(order);
        for (int i = 0; i <= order; ++i) r.coeff[static_cast<std::size_t>(i)] = at(i).eval_z(z);
        return r;
    }
};

/// Multiplicative inverse of a series with constant term 1, by the
/// standard linear recurrence T_n = -sum_{k=1..n} S_k T_{n-k}.
inline PolySeries invert_unit_series(const PolySeries& s) {
    if (s.at(0) != Poly::constant(1))
        throw std::invalid_argument("inverse requires constant term 1");
    PolySeries t(s.order);
    t.coeff[0] = Poly::constant(1);
    for (int n = 1; n <= s.order; ++n) {
        Poly acc;
        for (int k = 1; k <= n; ++k)
            acc = acc + s.at(k) * t.at(n - k);
        t.coeff[static_cast<std::size_t>(n)] = Poly::constant(0) - acc;
    }
    return t;
}

/// Square root of a series with constant term 1 by Newton iteration with
/// precision doubling: S <- (S + r/S) / 2.
inline PolySeries series_sqrt(const PolySeries& r) {
    if (r.at(0) != Poly::constant(1))
        throw std::invalid_argument("sqrt requires constant term 1");
    PolySeries s = PolySeries::constant(1, 0);
    int prec = 0;
    while (prec < r.order) {
        prec = std::min(2 * prec + 1, r.order);
        PolySeries sp = s.truncated(prec);
        PolySeries quotient = r.truncated(prec) * invert_unit_series(sp);
        s = (sp + quotient) * Rational(1, 2);
    }
    return s;
}

/// Exact series division num / den where the lowest nonzero x-coefficient
/// of den is a single monomial in y, z. Every step performs exact
/// polynomial division and throws if a coefficient is not divisible.
inline PolySeries divide_exact(const PolySeries& num, const PolySeries& den) {
    int v = 0;
    while (v <= den.order && den.at(v).is_zero()) ++v;
    if (v > den.order) throw std::invalid_argument("division by zero series");
    const Poly& lead = den.at(v);
    if (lead.terms.size() != 1)
        throw std::invalid_argument("divisor's lowest coefficient must be a monomial");
    for (int i = 0; i < v; ++i)
        if (!num.at(i).is_zero())
            throw std::domain_error("numerator valuation below divisor valuation");
    const auto& [mk, mc] = *lead.terms.begin();
    int n = num.order - v;
    PolySeries q(n);
    for (int i = 0; i <= n; ++i) {
        Poly acc = num.at(i + v);
        for (int k = 1; k <= i && v + k <= den.order; ++k)
            acc = acc - den.at(v + k) * q.at(i - k);
        q.coeff[static_cast<std::size_t>(i)] = acc.divexact_monomial(mc, mk.first, mk.second);
    }
    return q;
}

/// A(x,y,z) truncated at max_n, assembled from the a-tables.
inline PolySeries series_from_tables(const std::vector<TriStatTable>& tabs, int max_n) {
    PolySeries s(max_n);
    for (int n = 0; n <= max_n; ++n)
        for (const auto& [key, c] : tabs[static_cast<std::size_t>(n)].counts)
            s.coeff[static_cast<std::size_t>(n)].add_term(key.first, key.second, Rational(c));
    return s;
}

inline PolySeries a_from_tables(const TableSet& t, int max_n) {
    return series_from_tables(t.a, max_n);
}

/// B carries constant term 1 by series convention; b_1, b_2, ... come
/// from the table.
inline PolySeries b_from_tables(const TableSet& t, int max_n) {
    PolySeries s(max_n);
    s.coeff[0] = Poly::constant(1);
    for (int n = 1; n <= max_n; ++n)
        for (const auto& [key, c] : t.b[static_cast<std::size_t>(n)].counts)
            s.coeff[static_cast<std::size_t>(n)].add_term(key.first, key.second, Rational(c));
    return s;
}

/// E(x,y) truncated at max_n, from the Eulerian rows (pure y, no z).
inline PolySeries e_from_rows(const std::vector<EulerianRow>& rows, int max_n) {
    PolySeries s(max_n);
    for (int n = 0; n <= max_n; ++n) {
        const auto& row = rows[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < row.counts.size(); ++k)
            s.coeff[static_cast<std::size_t>(n)].add_term(static_cast<int>(k), 0,
                                                          Rational(row.counts[k]));
    }
    return s;
}

}  // namespace dyckdes
