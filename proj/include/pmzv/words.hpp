#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pmzv {

// Letter 0 is e_0; letter k+1 is e_{zeta^k}.
using Letter = unsigned char;

struct Word {
    std::string s;

    Word() = default;
    explicit Word(std::string letters) : s(std::move(letters)) {}
    static Word e0pow(int k) { return Word(std::string(k, '\0')); }
    static Word letter(Letter x) { return Word(std::string(1, (char)x)); }

    int weight() const { return (int)s.size(); }
    int depth() const {
        int d = 0;
        for (char c : s) d += c != 0;
        return d;
    }
    Letter operator[](size_t i) const { return (Letter)s[i]; }
    bool empty() const { return s.empty(); }
    Word reversed() const { return Word(std::string(s.rbegin(), s.rend())); }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.s + b.s); }
    friend bool operator<(const Word& a, const Word& b) { return a.s < b.s; }
    friend bool operator==(const Word& a, const Word& b) { return a.s == b.s; }
};

// Text form: N == 1 uses one character per letter ("0" / "1"); otherwise
// space separated tokens "0" and "x{k}".
std::string word_text(const Word& w, unsigned N);
Word parse_word(const std::string& text, unsigned N);

// ((n_1..n_d); (xi_1..xi_{d+1})) with roots stored as exponents of zeta_N.
struct HarmonicWord {
    std::vector<int> n;
    std::vector<int> roots;

    HarmonicWord() = default;
    HarmonicWord(std::vector<int> n_, std::vector<int> roots_ = {});

    int depth() const { return (int)n.size(); }
    int weight() const;
    // e_{xi_{d+1}} e0^{n_d-1} e_{xi_d} ... e0^{n_1-1} e_{xi_1}
    Word embed() const;
    std::string text() const;  // "(n1,...)/(k1,...)"

    friend bool operator<(const HarmonicWord& a, const HarmonicWord& b) {
        return a.n != b.n ? a.n < b.n : a.roots < b.roots;
    }
    friend bool operator==(const HarmonicWord& a, const HarmonicWord& b) {
        return a.n == b.n && a.roots == b.roots;
    }
};

HarmonicWord parse_harmonic(const std::string& text, unsigned N);
// Inverse of embed on words starting and ending with a non-e0 letter.
std::optional<HarmonicWord> as_harmonic(const Word& w);

std::vector<Word> shuffle_set(const Word& u, const Word& v);
std::vector<HarmonicWord> stuffle_set(const HarmonicWord& u, const HarmonicWord& v, unsigned N);

// All words over e_0, e_{zeta^0..zeta^{N-1}} with weight <= W and depth <= D.
std::vector<Word> all_words(unsigned N, int W, int D);

// All harmonic words (roots all 0 when N == 1) with weight <= W and depth in [1, D].
std::vector<HarmonicWord> all_harmonic_words(unsigned N, int W, int D);

}  // namespace pmzv
