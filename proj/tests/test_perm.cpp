#include <doctest.h>

#include <algorithm>

#include "dyckdes/numbers.hpp"
#include "dyckdes/perm.hpp"

using namespace dyckdes;

TEST_CASE("parse_permutation accepts spaces and commas") {
    CHECK(parse_permutation("5 7 2 6 4 3 1").entries ==
          std::vector<int>{5, 7, 2, 6, 4, 3, 1});
    CHECK(parse_permutation("3,1,2").entries == std::vector<int>{3, 1, 2});
    CHECK(parse_permutation("").entries.empty());
}

TEST_CASE("parse_permutation rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_permutation("1 1 2"), "duplicate value 1",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1 3"), std::invalid_argument);  // missing 2
    CHECK_THROWS_AS(parse_permutation("1 x 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("0 1"), std::invalid_argument);
}

TEST_CASE("avoids_123 basics") {
    CHECK(avoids_123(parse_permutation("5 7 2 6 4 3 1")));
    CHECK_FALSE(avoids_123(parse_permutation("1 2 3")));
    CHECK(avoids_123(Permutation{}));
    CHECK(avoids_123(parse_permutation("2 1")));
}

TEST_CASE("avoids_123 agrees with the cubic witness scan") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            CHECK(avoids_123(p) == !find_123(p).has_value());
        });
}

TEST_CASE("find_123 reports 1-based witness positions") {
    auto w = find_123(parse_permutation("3 1 2 4"));
    REQUIRE(w.has_value());
    auto [i, j, k] = *w;
    CHECK(i < j);
    CHECK(j < k);
    const auto p = parse_permutation("3 1 2 4");
    CHECK(p.entries[i - 1] < p.entries[j - 1]);
    CHECK(p.entries[j - 1] < p.entries[k - 1]);
}

TEST_CASE("avoider counts match Catalan numbers") {
    auto cat = catalan_numbers(8);
    for (int n = 0; n <= 8; ++n) {
        Count c = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            if (avoids_123(p)) ++c;
        });
        CHECK(c == cat[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("descent_count") {
    CHECK(descent_count(parse_permutation("5 7 2 6 4 3 1")) == 4);
    CHECK(descent_count(parse_permutation("1 2 3 4 5")) == 0);
    CHECK(descent_count(parse_permutation("3 2 1")) == 2);
    CHECK(descent_count(Permutation{}) == 0);
}

TEST_CASE("min_decompose examples") {
    auto d = min_decompose(parse_permutation("5 7 2 6 4 3 1"));
    REQUIRE(d.blocks.size() == 3);
    CHECK(d.blocks[0] == MinBlock{5, {7}});
    CHECK(d.blocks[1] == MinBlock{2, {6, 4, 3}});
    CHECK(d.blocks[2] == MinBlock{1, {}});

    auto single = min_decompose(parse_permutation("1"));
    CHECK(single.blocks == std::vector<MinBlock>{{1, {}}});

    auto dec = min_decompose(parse_permutation("3 2 1"));
    CHECK(dec.blocks.size() == 3);
    for (const auto& b : dec.blocks) CHECK(b.word.empty());
}

TEST_CASE("min_decompose properties over all small permutations") {
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            auto d = min_decompose(p);
            CHECK(d.flatten() == p);
            // minima strictly decrease and end at 1
            for (std::size_t i = 1; i < d.blocks.size(); ++i)
                CHECK(d.blocks[i].minimum < d.blocks[i - 1].minimum);
            if (!p.entries.empty()) CHECK(d.blocks.back().minimum == 1);
            // for avoiders the concatenated words strictly decrease
            if (avoids_123(p)) {
                std::vector<int> words;
                for (const auto& b : d.blocks)
                    words.insert(words.end(), b.word.begin(), b.word.end());
                for (std::size_t i = 1; i < words.size(); ++i)
                    CHECK(words[i] < words[i - 1]);
            }
        });
}
