#include <doctest.h>

#include "phg/word.hpp"

#include <random>
#include <set>

using namespace phg;

namespace {
Word W(const char* s) { return Word::from_string(s); }

// independent admissible-index counter: build tuples entry by entry
int count_admissible_rec(int wt_left, int dp_left, int ht_left, bool is_last) {
    if (dp_left == 0)
        return (wt_left == 0 && ht_left == 0) ? 1 : 0;
    int total = 0;
    for (int k = 1; k + (dp_left - 1) <= wt_left; ++k) {
        if (is_last && k == 1)
            continue; // final entry must exceed 1
        int ht_used = (k > 1) ? 1 : 0;
        if (ht_used > ht_left)
            continue;
        total += count_admissible_rec(wt_left - k, dp_left - 1, ht_left - ht_used, false);
    }
    return total;
}

int count_admissible(int k, int n, int s) {
    // entries are generated from the last (admissible) slot inward
    // reverse the tuple: first generated entry is k_n
    return count_admissible_rec(k, n, s, true);
}
} // namespace

TEST_CASE("word basics") {
    CHECK(W("011").weight() == 3);
    CHECK(W("011").depth() == 2);
    CHECK(W("01").ends_with(Letter::T1));
    CHECK(W("01").starts_with(Letter::T0));
    CHECK(W("011").str() == "T0T1T1");
}

TEST_CASE("shuffle unit and length-1 recursions") {
    NCPoly w = NCPoly::word(W("0110"));
    NCPoly sh = shuffle(NCPoly::unit(), w);
    CHECK(sh.terms.size() == 1);
    CHECK(sh.terms.begin()->second == 1);

    NCPoly t0t1 = shuffle_words(W("0"), W("1"));
    CHECK(t0t1.terms.at(W("01")) == 1);
    CHECK(t0t1.terms.at(W("10")) == 1);
    CHECK(t0t1.terms.size() == 2);

    NCPoly sq = shuffle_words(W("0"), W("0"));
    CHECK(sq.terms.at(W("00")) == 2);
    CHECK(sq.terms.size() == 1);
}

TEST_CASE("shuffle is commutative, associative, weight-additive") {
    std::mt19937 rng(2024);
    auto random_word = [&](int maxlen) {
        int len = static_cast<int>(rng() % maxlen) + 1;
        std::vector<Letter> ls;
        for (int i = 0; i < len; ++i)
            ls.push_back((rng() % 2) ? Letter::T1 : Letter::T0);
        return Word(std::move(ls));
    };
    for (int trial = 0; trial < 20; ++trial) {
        Word a = random_word(3), b = random_word(3), c = random_word(2);
        NCPoly ab = shuffle_words(a, b);
        NCPoly ba = shuffle_words(b, a);
        CHECK(ab.terms == ba.terms);
        for (const auto& [w, coef] : ab.terms)
            CHECK(w.weight() == a.weight() + b.weight());
        NCPoly left = shuffle(shuffle_words(a, b), NCPoly::word(c));
        NCPoly right = shuffle(NCPoly::word(a), shuffle_words(b, c));
        CHECK(left.terms == right.terms);
    }
}

TEST_CASE("fprime fixes M' and the unit, kills words ending in T0") {
    CHECK(fprime(NCPoly::unit(Rational(3))).unit_coeff == 3);
    NCPoly t1 = fprime(NCPoly::word(W("1")));
    CHECK(t1.terms.at(W("1")) == 1);

    // f'(T1 sh T0) = T0T1 (the T1T0 term dies)
    NCPoly sh = shuffle_words(W("1"), W("0"));
    NCPoly f = fprime(sh);
    CHECK(f.terms.size() == 1);
    CHECK(f.terms.at(W("01")) == 1);

    // idempotent on its image
    NCPoly again = fprime(f);
    CHECK(again.terms == f.terms);

    // kills exactly the words ending in T0
    for (const Word& w : enumerate_words(4)) {
        NCPoly img = fprime(NCPoly::word(w));
        if (w.ends_with(Letter::T0))
            CHECK(img.is_zero());
        else
            CHECK(img.terms.at(w) == 1);
    }
}

TEST_CASE("word to index examples") {
    CHECK(word_to_index(W("1")) == std::vector<int>{1});
    CHECK(word_to_index(W("01")) == std::vector<int>{2});
    CHECK(word_to_index(W("001")) == std::vector<int>{3});
    CHECK(word_to_index(W("101")) == std::vector<int>{2, 1});
    CHECK(word_to_index(W("0011")) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(word_to_index(W("10")), std::invalid_argument);
}

TEST_CASE("word/index round trips") {
    for (int wt = 1; wt <= 7; ++wt) {
        for (const Word& w : enumerate_words(wt)) {
            if (!w.ends_with(Letter::T1))
                continue;
            auto idx = word_to_index(w);
            int sum = 0;
            for (int k : idx)
                sum += k;
            CHECK(sum == w.weight());
            CHECK(static_cast<int>(idx.size()) == w.depth());
            CHECK(index_to_word(idx) == w);
        }
        for (const auto& idx : enumerate_compositions(wt))
            CHECK(word_to_index(index_to_word(idx)) == idx);
    }
}

TEST_CASE("admissible index attributes and counting") {
    AdmissibleIndex i13{{1, 3}};
    CHECK(i13.wt() == 4);
    CHECK(i13.dp() == 2);
    CHECK(i13.ht() == 1);
    CHECK(i13.admissible());
    CHECK_FALSE(AdmissibleIndex{{2, 1}}.admissible());

    CHECK(enumerate_admissible(2, 1, 1).size() == 1); // just (2)
    auto g421 = enumerate_admissible(4, 2, 1);
    REQUIRE(g421.size() == 1); // height 1 forces (1,3)
    CHECK(g421[0].entries == std::vector<int>{1, 3});

    for (int k = 2; k <= 8; ++k)
        for (int n = 1; n <= k; ++n)
            for (int s = 1; s <= n; ++s)
                CHECK(static_cast<int>(enumerate_admissible(k, n, s).size()) ==
                      count_admissible(k, n, s));
}

TEST_CASE("weight >= depth + height for admissible indices") {
    for (int k = 2; k <= 7; ++k)
        for (const auto& comp : enumerate_compositions(k)) {
            AdmissibleIndex idx{comp};
            if (idx.admissible())
                CHECK(idx.wt() >= idx.dp() + idx.ht());
        }
}
