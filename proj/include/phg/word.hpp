#pragma once

#include "phg/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace phg {

enum class Letter : std::uint8_t { T0 = 0, T1 = 1 };

// Monomial in the free alphabet {T0, T1}. The empty sequence is the algebra
// unit and is not a Word; NCPoly carries the unit coefficient separately.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
    static Word from_string(const std::string& s); // e.g. "011" = T0 T1 T1

    int weight() const { return static_cast<int>(letters.size()); }
    int depth() const;
    bool empty() const { return letters.empty(); }
    bool ends_with(Letter l) const { return !letters.empty() && letters.back() == l; }
    bool starts_with(Letter l) const { return !letters.empty() && letters.front() == l; }

    Word prefix(int n) const; // first n letters
    Word suffix(int n) const; // last n letters
    Word tail() const;        // drop first letter
    Word concat(const Word& other) const;

    std::string str() const; // "T0T1T1"

    auto operator<=>(const Word&) const = default;
};

// Exact-rational linear combination of words plus a unit coefficient.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly unit(const Rational& c = 1);
    static NCPoly word(const Word& w, const Rational& c = 1);

    Rational unit_coeff;
    std::map<Word, Rational> terms;

    void add_term(const Word& w, const Rational& c);
    NCPoly& operator+=(const NCPoly& other);
    friend NCPoly operator+(NCPoly a, const NCPoly& b);
    NCPoly scaled(const Rational& c) const;
    bool is_zero() const { return unit_coeff == 0 && terms.empty(); }

    std::string str() const;
};

// Shuffle product: bilinear extension of the recursive word shuffle.
NCPoly shuffle(const NCPoly& x, const NCPoly& y);
NCPoly shuffle_words(const Word& a, const Word& b);

// Projection annihilating words that end in T0; words ending in T1 and the
// unit are fixed; extended linearly.
NCPoly fprime(const NCPoly& x);

// Tuple (k_1, ..., k_n) of positive integers; admissible when k_n > 1.
struct AdmissibleIndex {
    std::vector<int> entries;

    int wt() const;
    int dp() const { return static_cast<int>(entries.size()); }
    int ht() const;
    bool admissible() const { return !entries.empty() && entries.back() > 1; }
};

// Index tuple of a word in M' = A*T1 (word ending in T1); inverse of
// index_to_word.
std::vector<int> word_to_index(const Word& w);
Word index_to_word(const std::vector<int>& index);

// All words of the given weight, in deterministic order.
std::vector<Word> enumerate_words(int weight);

// All admissible indices with wt = k, dp = n, ht = s.
std::vector<AdmissibleIndex> enumerate_admissible(int k, int n, int s);

// All index tuples (not necessarily admissible) of total weight wt.
std::vector<std::vector<int>> enumerate_compositions(int wt);

} // namespace phg
