#include <doctest.h>

#include "dyckdes/numbers.hpp"
#include "dyckdes/tables.hpp"

using namespace dyckdes;

namespace {
TriStatTable make_table(int n, TableKind kind,
                        std::initializer_list<std::pair<std::pair<int, int>, int>> init) {
    TriStatTable t;
    t.n = n;
    t.kind = kind;
    for (const auto& [key, c] : init) t.add(key.first, key.second, c);
    return t;
}
}  // namespace

TEST_CASE("base cases and n = 3") {
    auto t = build_tables(3);
    CHECK(t.a[0] == make_table(0, TableKind::all_paths, {{{0, 0}, 1}}));
    CHECK(t.a[1] == make_table(1, TableKind::all_paths, {{{0, 0}, 1}}));
    CHECK(t.a[2] == make_table(2, TableKind::all_paths, {{{0, 0}, 1}, {{1, 0}, 1}}));
    CHECK(t.b[1] == make_table(1, TableKind::irreducible, {{{0, 0}, 1}}));
    CHECK(t.b[2] == make_table(2, TableKind::irreducible, {{{0, 0}, 1}}));
    CHECK(t.b[3] == make_table(3, TableKind::irreducible, {{{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(t.a[3] == make_table(3, TableKind::all_paths,
                               {{{2, 0}, 1}, {{1, 0}, 3}, {{0, 1}, 1}}));
    CHECK(t.a[2].total() == 2);
}

TEST_CASE("tables match the exhaustive oracle up to n = 9") {
    auto t = build_tables(9);
    auto cat = catalan_numbers(9);
    for (int n = 0; n <= 9; ++n) {
        CHECK(t.a[static_cast<std::size_t>(n)] == oracle_tristat(n));
        if (n >= 1)
            CHECK(t.b[static_cast<std::size_t>(n)] ==
                  oracle_tristat(n, TableKind::irreducible));
        CHECK(t.a[static_cast<std::size_t>(n)].total() == cat[static_cast<std::size_t>(n)]);
        if (n >= 1)
            CHECK(t.b[static_cast<std::size_t>(n)].total() ==
                  cat[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("eulerian rows reproduce the reference table") {
    auto rows = eulerian_rows(7);
    auto as_ints = [](const EulerianRow& r) {
        std::vector<long long> v;
        for (const auto& c : r.counts) v.push_back(c.convert_to<long long>());
        return v;
    };
    CHECK(as_ints(rows[0]) == std::vector<long long>{1});
    CHECK(as_ints(rows[1]) == std::vector<long long>{1});
    CHECK(as_ints(rows[2]) == std::vector<long long>{1, 1});
    CHECK(as_ints(rows[3]) == std::vector<long long>{0, 4, 1});
    CHECK(as_ints(rows[4]) == std::vector<long long>{0, 2, 11, 1});
    CHECK(as_ints(rows[5]) == std::vector<long long>{0, 0, 15, 26, 1});
    CHECK(as_ints(rows[6]) == std::vector<long long>{0, 0, 5, 69, 57, 1});
    CHECK(as_ints(rows[7]) == std::vector<long long>{0, 0, 0, 56, 252, 120, 1});
}

TEST_CASE("anti-diagonal sum at n = 7, k = 3 is 56") {
    auto t = build_tables(7);
    Count sum = 0;
    for (const auto& [key, c] : t.a[7].counts)
        if (key.first + key.second == 3) sum += c;
    CHECK(sum == 56);
}

TEST_CASE("eulerian rows match the permutation oracle up to n = 9") {
    auto rows = eulerian_rows(9);
    for (int n = 0; n <= 9; ++n)
        CHECK(rows[static_cast<std::size_t>(n)] == oracle_eulerian(n));
}

TEST_CASE("oracle_eulerian reference rows") {
    auto as_ints = [](const EulerianRow& r) {
        std::vector<long long> v;
        for (const auto& c : r.counts) v.push_back(c.convert_to<long long>());
        return v;
    };
    CHECK(as_ints(oracle_eulerian(2)) == std::vector<long long>{1, 1});
    CHECK(as_ints(oracle_eulerian(3)) == std::vector<long long>{0, 4, 1});
    CHECK(as_ints(oracle_eulerian(5)) == std::vector<long long>{0, 0, 15, 26, 1});
}

TEST_CASE("row sums are Catalan up to n = 30") {
    auto rows = eulerian_rows(30);
    auto cat = catalan_numbers(30);
    for (int n = 0; n <= 30; ++n) {
        Count sum = 0;
        for (const auto& c : rows[static_cast<std::size_t>(n)].counts) sum += c;
        CHECK(sum == cat[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("Narayana and Motzkin marginals of the a-table") {
    auto t = build_tables(12);
    auto motzkin = motzkin_numbers(12);
    for (int n = 1; n <= 12; ++n) {
        const auto& tab = t.a[static_cast<std::size_t>(n)];
        for (int p = 0; p <= n - 1; ++p) {
            Count sum = 0;
            for (const auto& [key, c] : tab.counts)
                if (key.first == p) sum += c;
            CHECK(sum == narayana(n, p + 1));
        }
        Count tf_free = 0;
        for (const auto& [key, c] : tab.counts)
            if (key.second == 0) tf_free += c;
        CHECK(tf_free == motzkin[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("oracle bounds are enforced") {
    CHECK_THROWS_AS(oracle_tristat(15), std::invalid_argument);
    CHECK_THROWS_AS(oracle_eulerian(15), std::invalid_argument);
}
