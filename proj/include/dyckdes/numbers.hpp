#pragma once

// Classical reference sequences computed from their recurrences, used as
// independent cross-checks. Arbitrary precision throughout.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace dyckdes {

using Count = boost::multiprecision::cpp_int;

/// C_0..C_max via C_{n+1} = sum_i C_i C_{n-i}.
inline std::vector<Count> catalan_numbers(int max_n) {
    std::vector<Count> c(static_cast<std::size_t>(max_n) + 1);
    c[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        Count sum = 0;
        for (int i = 0; i < n; ++i) sum += c[static_cast<std::size_t>(i)] *
                                            c[static_cast<std::size_t>(n - 1 - i)];
        c[static_cast<std::size_t>(n)] = sum;
    }
    return c;
}

/// M_0..M_max via M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}.
inline std::vector<Count> motzkin_numbers(int max_n) {
    std::vector<Count> m(static_cast<std::size_t>(max_n) + 1);
    m[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        Count sum = m[static_cast<std::size_t>(n - 1)];
        for (int k = 0; k <= n - 2; ++k)
            sum += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(n - 2 - k)];
        m[static_cast<std::size_t>(n)] = sum;
    }
    return m;
}

inline Count binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Count b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= (n - k + i);
        b /= i;
    }
    return b;
}

/// N(n, k) = (1/n) binom(n, k-1) binom(n, k) for 1 <= k <= n.
inline Count narayana(int n, int k) {
    if (n <= 0 || k < 1 || k > n) return 0;
    Count v = binomial(n, k - 1) * binomial(n, k);
    if (v % n != 0) throw std::logic_error("narayana: non-integral value");
    return v / n;
}

}  // namespace dyckdes
