#include "phg/word.hpp"

#include <sstream>
#include <stdexcept>

namespace phg {

Word Word::from_string(const std::string& s) {
    std::vector<Letter> ls;
    ls.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            ls.push_back(Letter::T0);
        else if (c == '1')
            ls.push_back(Letter::T1);
        else
            throw std::invalid_argument("Word::from_string: expected '0'/'1'");
    }
    return Word(std::move(ls));
}

int Word::depth() const {
    int d = 0;
    for (Letter l : letters)
        if (l == Letter::T1)
            ++d;
    return d;
}

Word Word::prefix(int n) const {
    return Word(std::vector<Letter>(letters.begin(), letters.begin() + n));
}

Word Word::suffix(int n) const {
    return Word(std::vector<Letter>(letters.end() - n, letters.end()));
}

Word Word::tail() const {
    return Word(std::vector<Letter>(letters.begin() + 1, letters.end()));
}

Word Word::concat(const Word& other) const {
    std::vector<Letter> ls = letters;
    ls.insert(ls.end(), other.letters.begin(), other.letters.end());
    return Word(std::move(ls));
}

std::string Word::str() const {
    std::string s;
    for (Letter l : letters)
        s += (l == Letter::T0) ? "T0" : "T1";
    return s;
}

NCPoly NCPoly::unit(const Rational& c) {
    NCPoly p;
    p.unit_coeff = c;
    return p;
}

NCPoly NCPoly::word(const Word& w, const Rational& c) {
    NCPoly p;
    if (w.empty())
        p.unit_coeff = c;
    else if (c != 0)
        p.terms.emplace(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0)
        return;
    if (w.empty()) {
        unit_coeff += c;
        return;
    }
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
    unit_coeff += other.unit_coeff;
    for (const auto& [w, c] : other.terms)
        add_term(w, c);
    return *this;
}

NCPoly operator+(NCPoly a, const NCPoly& b) {
    a += b;
    return a;
}

NCPoly NCPoly::scaled(const Rational& c) const {
    NCPoly p;
    if (c == 0)
        return p;
    p.unit_coeff = unit_coeff * c;
    for (const auto& [w, coef] : terms)
        p.terms.emplace(w, coef * c);
    return p;
}

std::string NCPoly::str() const {
    std::ostringstream out;
    bool first = true;
    if (unit_coeff != 0) {
        out << to_string(unit_coeff);
        first = false;
    }
    for (const auto& [w, c] : terms) {
        if (!first)
            out << " + ";
        out << to_string(c) << "*" << w.str();
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

NCPoly shuffle_words(const Word& a, const Word& b) {
    if (a.empty())
        return NCPoly::word(b);
    if (b.empty())
        return NCPoly::word(a);
    // a1 u sh b + b1 (a sh v) with a = a1 u, b = b1 v
    NCPoly left = shuffle_words(a.tail(), b);
    NCPoly right = shuffle_words(a, b.tail());
    NCPoly out;
    Word a1({a.letters.front()});
    Word b1({b.letters.front()});
    out.unit_coeff = 0;
    for (const auto& [w, c] : left.terms)
        out.add_term(a1.concat(w), c);
    if (left.unit_coeff != 0)
        out.add_term(a1, left.unit_coeff);
    for (const auto& [w, c] : right.terms)
        out.add_term(b1.concat(w), c);
    if (right.unit_coeff != 0)
        out.add_term(b1, right.unit_coeff);
    return out;
}

NCPoly shuffle(const NCPoly& x, const NCPoly& y) {
    NCPoly out;
    out.unit_coeff = x.unit_coeff * y.unit_coeff;
    for (const auto& [w, c] : x.terms)
        out.add_term(w, c * y.unit_coeff);
    for (const auto& [w, c] : y.terms)
        out.add_term(w, c * x.unit_coeff);
    for (const auto& [wa, ca] : x.terms)
        for (const auto& [wb, cb] : y.terms) {
            NCPoly sh = shuffle_words(wa, wb);
            for (const auto& [w, c] : sh.terms)
                out.add_term(w, c * ca * cb);
        }
    return out;
}

NCPoly fprime(const NCPoly& x) {
    NCPoly out;
    out.unit_coeff = x.unit_coeff;
    for (const auto& [w, c] : x.terms)
        if (w.ends_with(Letter::T1))
            out.add_term(w, c);
    return out;
}

int AdmissibleIndex::wt() const {
    int s = 0;
    for (int k : entries)
        s += k;
    return s;
}

int AdmissibleIndex::ht() const {
    int h = 0;
    for (int k : entries)
        if (k > 1)
            ++h;
    return h;
}

std::vector<int> word_to_index(const Word& w) {
    if (!w.ends_with(Letter::T1))
        throw std::invalid_argument("word_to_index: word must end in T1 (lie in M')");
    // parse W = T1^q0 T0^p1 T1^q1 ... T0^pk T1^qk
    std::size_t i = 0;
    const auto& ls = w.letters;
    int q0 = 0;
    while (i < ls.size() && ls[i] == Letter::T1) {
        ++q0;
        ++i;
    }
    std::vector<int> ps, qs;
    while (i < ls.size()) {
        int p = 0;
        while (i < ls.size() && ls[i] == Letter::T0) {
            ++p;
            ++i;
        }
        int q = 0;
        while (i < ls.size() && ls[i] == Letter::T1) {
            ++q;
            ++i;
        }
        ps.push_back(p);
        qs.push_back(q);
    }
    // tuple (1^{q_k-1}, p_k+1, 1^{q_{k-1}-1}, p_{k-1}+1, ..., 1^{q_1-1}, p_1+1, 1^{q_0})
    std::vector<int> index;
    for (int blk = static_cast<int>(ps.size()) - 1; blk >= 0; --blk) {
        for (int j = 0; j < qs[static_cast<std::size_t>(blk)] - 1; ++j)
            index.push_back(1);
        index.push_back(ps[static_cast<std::size_t>(blk)] + 1);
    }
    for (int j = 0; j < q0; ++j)
        index.push_back(1);
    return index;
}

Word index_to_word(const std::vector<int>& index) {
    // Trailing 1s give q0 leading T1s; scanning leftwards, each entry p+1 and
    // the run of 1s before it give a T0^p T1^q block, appended left to right.
    for (int k : index)
        if (k < 1)
            throw std::invalid_argument("index_to_word: entries must be positive");
    std::vector<Letter> out;
    std::size_t j = index.size();
    std::size_t ones_tail = 0;
    while (j > 0 && index[j - 1] == 1) {
        ++ones_tail;
        --j;
    }
    for (std::size_t t = 0; t < ones_tail; ++t)
        out.push_back(Letter::T1);
    while (j > 0) {
        int pval = index[j - 1] - 1; // entry >= 2
        --j;
        int q = 1;
        while (j > 0 && index[j - 1] == 1) {
            ++q;
            --j;
        }
        out.insert(out.end(), static_cast<std::size_t>(pval), Letter::T0);
        out.insert(out.end(), static_cast<std::size_t>(q), Letter::T1);
    }
    return Word(std::move(out));
}

std::vector<Word> enumerate_words(int weight) {
    std::vector<Word> out;
    if (weight <= 0)
        return out;
    out.reserve(static_cast<std::size_t>(1) << weight);
    for (std::uint64_t bits = 0; bits < (static_cast<std::uint64_t>(1) << weight); ++bits) {
        std::vector<Letter> ls(static_cast<std::size_t>(weight));
        for (int i = 0; i < weight; ++i)
            ls[static_cast<std::size_t>(i)] =
                ((bits >> i) & 1) ? Letter::T1 : Letter::T0;
        out.emplace_back(std::move(ls));
    }
    return out;
}

namespace {
void enumerate_rec(int rem, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = 1; k <= rem; ++k) {
        cur.push_back(k);
        enumerate_rec(rem - k, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<std::vector<int>> enumerate_compositions(int wt) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_rec(wt, cur, out);
    return out;
}

std::vector<AdmissibleIndex> enumerate_admissible(int k, int n, int s) {
    std::vector<AdmissibleIndex> out;
    for (auto& comp : enumerate_compositions(k)) {
        AdmissibleIndex idx{comp};
        if (idx.dp() == n && idx.ht() == s && idx.admissible())
            out.push_back(std::move(idx));
    }
    return out;
}

} // namespace phg
