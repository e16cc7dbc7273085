#include "doctest.h"

#include "helpers.hpp"
#include "kron/blasiak.hpp"
#include "kron/partition.hpp"
#include "kron/tableau.hpp"

using kron::barred;
using kron::colored_tableau;
using kron::order;
using kron::partition;
using kron::unbarred;
using testutil::fixture_tableau;

TEST_SUITE("tableaux") {

TEST_CASE("letter orders") {
    // natural: 1~ < 1 < 2~ < 2; small bar: 1~ < 2~ < 1 < 2
    CHECK(barred(1).natural_key() < unbarred(1).natural_key());
    CHECK(unbarred(1).natural_key() < barred(2).natural_key());
    CHECK(barred(1).small_bar_key() < barred(2).small_bar_key());
    CHECK(barred(2).small_bar_key() < unbarred(1).small_bar_key());
    CHECK(kron::colored_letter::parse("4~") == barred(4));
    CHECK(kron::colored_letter::parse("12") == unbarred(12));
    CHECK(barred(3).str() == "3~");
}

TEST_CASE("semistandard: worked-example fixtures") {
    CHECK(kron::is_semistandard(
        fixture_tableau("conversion_chain_0.txt", order::small_bar)));
    CHECK(kron::is_semistandard(
        fixture_tableau("conversion_chain_5.txt", order::natural)));
    // The small-bar tableau is not semistandard for the natural order.
    CHECK_FALSE(kron::is_semistandard(
        fixture_tableau("conversion_chain_0.txt", order::natural)));
}

TEST_CASE("semistandard: bar-dependent strictness") {
    const auto single_row =
        kron::make_tableau({{unbarred(1), unbarred(1), unbarred(1)}}, order::natural);
    CHECK(kron::is_semistandard(single_row));
    auto row_small = single_row;
    row_small.tag = order::small_bar;
    CHECK(kron::is_semistandard(row_small));

    // Equal barred letters may not repeat along a row.
    CHECK_FALSE(kron::is_semistandard(
        kron::make_tableau({{barred(1), barred(1)}}, order::natural)));
    // Equal unbarred letters may not repeat down a column.
    CHECK_FALSE(kron::is_semistandard(
        kron::make_tableau({{unbarred(1)}, {unbarred(1)}}, order::natural)));
    // Equal barred letters may repeat down a column.
    CHECK(kron::is_semistandard(
        kron::make_tableau({{barred(1)}, {barred(1)}}, order::natural)));
}

TEST_CASE("malformed tableau is a structural error") {
    colored_tableau bad;
    bad.outer = partition({2});
    bad.rows = {{unbarred(1)}};
    CHECK_THROWS_AS(kron::is_semistandard(bad), kron::structural_error);
    colored_tableau skew;
    skew.outer = partition({1});
    skew.inner = partition({2});
    skew.rows = {{}};
    CHECK_THROWS_AS(kron::validate_structure(skew), kron::structural_error);
}

TEST_CASE("content profile") {
    const auto typed = fixture_tableau("content_type_skew.txt", order::natural);
    const auto profile = kron::content_profile(typed);
    CHECK(profile.content.entries == std::vector<int>{2, 4, 2, 4, 0, 3});
    CHECK(profile.total_color == 0);

    CHECK(kron::content_profile(colored_tableau{}).content.entries.empty());
    CHECK(kron::content_profile(colored_tableau{}).total_color == 0);

    const auto chain0 = fixture_tableau("conversion_chain_0.txt", order::small_bar);
    CHECK(kron::content_profile(chain0).total_color == 7);
    CHECK(kron::content_profile(chain0).content.entries ==
          std::vector<int>{6, 4, 4, 2, 1});
}

TEST_CASE("barred subtableau") {
    const auto chain0 = fixture_tableau("conversion_chain_0.txt", order::small_bar);
    const auto tb = kron::barred_subtableau(chain0);
    CHECK(tb.outer == partition({3, 3, 1}));
    CHECK(kron::format_tableau(tb) ==
          testutil::fixture_text("composite_barred_part.txt"));

    const auto no_bars =
        kron::make_tableau({{unbarred(1), unbarred(2)}}, order::small_bar);
    CHECK(kron::barred_subtableau(no_bars).outer == partition{});

    // Natural-order tableaux with interleaved bars are rejected.
    const auto natural = fixture_tableau("conversion_chain_5.txt", order::natural);
    CHECK_THROWS_AS(kron::barred_subtableau(natural), kron::invalid_order_error);
}

TEST_CASE("composite tableau of the worked example") {
    const auto chain0 = fixture_tableau("conversion_chain_0.txt", order::small_bar);
    const auto composite = kron::build_composite(chain0);
    CHECK(kron::format_tableau(composite) ==
          testutil::fixture_text("composite_result.txt"));
    CHECK(composite.outer == partition({7, 7, 7, 6, 5, 3, 2, 2}));
    CHECK(composite.inner == partition({6, 6, 4, 3, 3}));
}

TEST_CASE("composite preserves the letter multiset, bars erased") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& nu : kron::partitions_of(n)) {
            testutil::for_each_ssyt(
                nu, order::small_bar, std::min(n, 4),
                [&](const colored_tableau& t) {
                    const auto composite = kron::build_composite(t);
                    const auto word = kron::reverse_reading_word(composite);
                    CHECK(static_cast<int>(word.size()) == composite.cell_count());
                    CHECK(composite.cell_count() == t.cell_count());
                    std::vector<int> got(static_cast<size_t>(n) + 1, 0);
                    std::vector<int> want(static_cast<size_t>(n) + 1, 0);
                    for (int v : word) ++got[static_cast<size_t>(v)];
                    for (const auto& row : t.rows)
                        for (const auto& cell : row)
                            ++want[static_cast<size_t>(cell.value)];
                    CHECK(got == want);
                });
        }
    }
}

TEST_CASE("composite degenerate cases") {
    // No barred letters: the composite is the tableau itself.
    const auto plain = kron::make_tableau(
        {{unbarred(1), unbarred(1)}, {unbarred(2), unbarred(2)}}, order::small_bar);
    const auto composite = kron::build_composite(plain);
    CHECK(composite.inner == partition{});
    CHECK(composite.outer == plain.outer);
    CHECK(kron::reverse_reading_word(composite) == std::vector<int>{1, 1, 2, 2});

    // All letters barred: the composite is the transpose, bars dropped.
    const auto all_barred =
        fixture_tableau("composite_barred_part.txt", order::small_bar);
    const auto transposed = kron::build_composite(all_barred);
    CHECK(kron::reverse_reading_word(transposed) ==
          std::vector<int>{2, 1, 1, 3, 2, 4, 3});
}

TEST_CASE("reverse reading word") {
    const auto skew = fixture_tableau("reverse_word_skew.txt", order::natural);
    CHECK(kron::reverse_reading_word(skew) ==
          std::vector<int>{2, 1, 8, 6, 5, 3, 9, 7, 4});
    CHECK(kron::reverse_reading_word(
              kron::make_tableau({{unbarred(5)}}, order::natural)) ==
          std::vector<int>{5});
    CHECK(kron::reverse_reading_word(kron::make_tableau(
              {{unbarred(1), unbarred(2), unbarred(3)}}, order::natural)) ==
          std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(
        kron::reverse_reading_word(kron::make_tableau({{barred(1)}}, order::natural)),
        kron::structural_error);
}

TEST_CASE("lattice words") {
    CHECK(kron::is_lattice({1, 1, 1, 2, 2, 3, 2, 1}));
    CHECK_FALSE(kron::is_lattice({2, 1}));
    CHECK(kron::is_lattice({}));
}

TEST_CASE("lattice agrees with the prefix-count restatement") {
    // Exhaustive over words of length <= 8 on the alphabet {1,2,3}.
    for (int len = 0; len <= 8; ++len) {
        std::vector<int> word(static_cast<size_t>(len), 1);
        for (;;) {
            bool expected = true;
            std::vector<int> count(5, 0);
            for (int v : word) {
                ++count[static_cast<size_t>(v)];
                for (int i = 1; i + 1 < 5; ++i)
                    if (count[static_cast<size_t>(i)] <
                        count[static_cast<size_t>(i + 1)])
                        expected = false;
            }
            CHECK(kron::is_lattice(word) == expected);
            int pos = len - 1;
            while (pos >= 0 && word[static_cast<size_t>(pos)] == 3) {
                word[static_cast<size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++word[static_cast<size_t>(pos)];
        }
    }
}

TEST_CASE("yamanouchi") {
    // Superstandard rectangle filling, no bars: word is 1^m 2^m ... t^m.
    const auto super = kron::make_tableau(
        {{unbarred(1), unbarred(1)}, {unbarred(2), unbarred(2)},
         {unbarred(3), unbarred(3)}},
        order::natural);
    CHECK(kron::is_yamanouchi(super));

    // The worked-example natural tableau is Yamanouchi.
    CHECK(kron::is_yamanouchi(
        fixture_tableau("conversion_chain_5.txt", order::natural)));

    // A composite whose word starts with 2 fails.
    const auto column =
        kron::make_tableau({{barred(1)}, {unbarred(2)}}, order::natural);
    CHECK_FALSE(kron::is_yamanouchi(column));
}

TEST_CASE("SW corner") {
    CHECK(kron::sw_corner_unbarred(
        fixture_tableau("conversion_chain_5.txt", order::natural)));
    CHECK_FALSE(kron::sw_corner_unbarred(
        kron::make_tableau({{barred(1)}}, order::natural)));
    CHECK(kron::sw_corner_unbarred(
        kron::make_tableau({{unbarred(1)}}, order::natural)));
    CHECK_THROWS_AS(kron::sw_corner_unbarred(colored_tableau{}),
                    kron::structural_error);
}

TEST_CASE("barred region of small-bar tableaux is a partition shape") {
    // Every small-bar semistandard tableau of rectangular content has a
    // top-left barred block whose size is the total color.
    for (int n = 2; n <= 7; ++n) {
        for (const auto& nu : kron::partitions_of(n)) {
            testutil::for_each_ssyt(
                nu, order::small_bar, std::min(n, 4),
                [&](const colored_tableau& t) {
                    const auto profile = kron::content_profile(t);
                    const auto tb = kron::barred_subtableau(t);
                    CHECK(tb.outer.sum() == profile.total_color);
                });
        }
    }
}

TEST_CASE("tableau text round trip") {
    for (const char* name :
         {"conversion_chain_0.txt", "conversion_chain_5.txt",
          "composite_result.txt", "reverse_word_skew.txt"}) {
        const std::string text = testutil::fixture_text(name);
        CHECK(kron::format_tableau(kron::parse_tableau(text, order::natural)) ==
              text);
    }
    CHECK_THROWS_AS(kron::parse_tableau("1 . 2\n", order::natural),
                    kron::structural_error);
}

}  // TEST_SUITE
