#include "pmzv/words.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace pmzv {

std::string word_text(const Word& w, unsigned N) {
    std::string out;
    for (size_t i = 0; i < w.s.size(); ++i) {
        Letter x = w[i];
        if (N <= 1) {
            out += x ? '1' : '0';
            continue;
        }
        if (i) out += ' ';
        out += x ? "x" + std::to_string(x - 1) : "0";
    }
    return out;
}

Word parse_word(const std::string& text, unsigned N) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == 'x') {
            int k = std::stoi(tok.substr(1));
            w.s += (char)(1 + ((k % (int)std::max(N, 1u)) + std::max(N, 1u)) % std::max(N, 1u));
            continue;
        }
        for (char c : tok) {
            if (c == '0') w.s += '\0';
            else if (c == '1' && N <= 1) w.s += '\1';
            else throw std::invalid_argument("bad word token: " + tok);
        }
    }
    return w;
}

HarmonicWord::HarmonicWord(std::vector<int> n_, std::vector<int> roots_) : n(std::move(n_)), roots(std::move(roots_)) {
    if (roots.empty()) roots.assign(n.size() + 1, 0);
    if (roots.size() != n.size() + 1) throw std::invalid_argument("harmonic word needs d+1 roots");
    for (int x : n)
        if (x < 1) throw std::invalid_argument("harmonic exponents must be positive");
}

int HarmonicWord::weight() const {
    int s = 0;
    for (int x : n) s += x;
    return s;
}

Word HarmonicWord::embed() const {
    Word w;
    int d = depth();
    w.s += (char)(1 + roots[d]);
    for (int i = d - 1; i >= 0; --i) {
        w.s += std::string(n[i] - 1, '\0');
        w.s += (char)(1 + roots[i]);
    }
    return w;
}

std::string HarmonicWord::text() const {
    std::string s = "(";
    for (size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    s += ")/(";
    for (size_t i = 0; i < roots.size(); ++i) s += (i ? "," : "") + std::to_string(roots[i]);
    return s + ")";
}

namespace {
std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string t;
    for (char c : s) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            out.push_back(std::stoi(t));
            t.clear();
        } else {
            t += c;
        }
    }
    if (!t.empty()) out.push_back(std::stoi(t));
    return out;
}
}  // namespace

HarmonicWord parse_harmonic(const std::string& text, unsigned N) {
    auto slash = text.find('/');
    auto n = parse_int_list(text.substr(0, slash));
    std::vector<int> r;
    if (slash != std::string::npos) r = parse_int_list(text.substr(slash + 1));
    for (auto& k : r) k = ((k % (int)std::max(N, 1u)) + std::max(N, 1u)) % std::max(N, 1u);
    if (n.empty()) throw std::invalid_argument("empty harmonic word");
    return HarmonicWord(n, r);
}

std::optional<HarmonicWord> as_harmonic(const Word& w) {
    if (w.weight() < 2 || w[0] == 0 || w[w.s.size() - 1] == 0) return std::nullopt;
    std::vector<int> n, roots;
    roots.push_back(w[w.s.size() - 1] - 1);
    int run = 0;
    for (size_t i = w.s.size() - 1; i-- > 0;) {
        if (w[i] == 0) {
            ++run;
            continue;
        }
        n.push_back(run + 1);
        roots.push_back(w[i] - 1);
        run = 0;
    }
    return HarmonicWord(n, roots);
}

std::vector<Word> shuffle_set(const Word& u, const Word& v) {
    std::vector<Word> out;
    std::string cur;
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == u.s.size() && j == v.s.size()) {
            out.emplace_back(cur);
            return;
        }
        if (i < u.s.size()) {
            cur.push_back(u.s[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < v.s.size()) {
            cur.push_back(v.s[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<HarmonicWord> stuffle_set(const HarmonicWord& u, const HarmonicWord& v, unsigned N) {
    // Letters (n_i, rho_i) with rho_i = xi_{i+1}/xi_i; the outer factor is xi_{d+1}^{-1}.
    int Nm = (int)std::max(N, 1u);
    auto md = [&](int x) { return ((x % Nm) + Nm) % Nm; };
    auto letters = [&](const HarmonicWord& w) {
        std::vector<std::pair<int, int>> L;
        for (int i = 0; i < w.depth(); ++i) L.push_back({w.n[i], md(w.roots[i + 1] - w.roots[i])});
        return L;
    };
    auto A = letters(u), B = letters(v);
    int top = md(u.roots.back() + v.roots.back());
    std::vector<HarmonicWord> out;
    std::vector<std::pair<int, int>> cur;
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == A.size() && j == B.size()) {
            std::vector<int> n, roots(cur.size() + 1);
            roots[cur.size()] = top;
            for (size_t k = cur.size(); k-- > 0;) {
                n.insert(n.begin(), cur[k].first);
                roots[k] = md(roots[k + 1] - cur[k].second);
            }
            out.emplace_back(n, roots);
            return;
        }
        if (i < A.size()) {
            cur.push_back(A[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < B.size()) {
            cur.push_back(B[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
        if (i < A.size() && j < B.size()) {
            cur.push_back({A[i].first + B[j].first, md(A[i].second + B[j].second)});
            rec(i + 1, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Word> all_words(unsigned N, int W, int D) {
    std::vector<Word> out{Word()};
    unsigned alpha = std::max(N, 1u) + 1;
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i].weight() >= W) continue;
        for (unsigned x = 0; x < alpha; ++x) {
            Word w = out[i] + Word::letter((Letter)x);
            if (w.depth() <= D) out.push_back(w);
        }
    }
    return out;
}

std::vector<HarmonicWord> all_harmonic_words(unsigned N, int W, int D) {
    std::vector<HarmonicWord> out;
    std::vector<int> n;
    std::function<void(int)> rec = [&](int rem) {
        if (!n.empty()) {
            if (N <= 1) {
                out.emplace_back(n);
            } else {
                std::vector<int> r(n.size() + 1, 0);
                std::function<void(size_t)> rr = [&](size_t k) {
                    if (k == r.size()) {
                        out.emplace_back(n, r);
                        return;
                    }
                    for (unsigned x = 0; x < N; ++x) {
                        r[k] = x;
                        rr(k + 1);
                    }
                };
                rr(0);
            }
        }
        if ((int)n.size() >= D) return;
        for (int k = 1; k <= rem; ++k) {
            n.push_back(k);
            rec(rem - k);
            n.pop_back();
        }
    };
    rec(W);
    return out;
}

}  // namespace pmzv
