#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pmzv/scalar.hpp"
#include "pmzv/words.hpp"

namespace pmzv {

// Per (weight, depth) minimal p-adic valuation; an absent entry is +infinity.
// Comparisons of norms are made on valuations: |x| <= |y| iff v(x) >= v(y).
struct NormPoly {
    std::map<std::pair<int, int>, long> v;

    void absorb(int n, int d, long val) {
        auto it = v.find({n, d});
        if (it == v.end() || val < it->second) v[{n, d}] = val;
    }
    // true iff this <= o coefficientwise, with entry (n, d) of o weighted by |kappa|^n
    bool leq(const NormPoly& o, long kappa_val = 0) const {
        for (auto& [k, val] : v) {
            auto it = o.v.find(k);
            if (it == o.v.end() || val < it->second + kappa_val * k.first) return false;
        }
        return true;
    }
    bool operator==(const NormPoly& o) const { return v == o.v; }
    Rat abs_value(int n, int d, unsigned long p) const {
        auto it = v.find({n, d});
        return it == v.end() ? Rat(0) : rpow(Rat(p), -it->second);
    }
};

template <class S>
class NCSeries {
public:
    NCSeries(unsigned N, int W, int D, S one) : N_(N), W_(W), D_(D), one_(std::move(one)) {}

    static NCSeries unit(unsigned N, int W, int D, const S& one) {
        NCSeries f(N, W, D, one);
        f.set(Word(), one);
        return f;
    }
    static NCSeries letter(unsigned N, int W, int D, const S& one, Letter x) {
        NCSeries f(N, W, D, one);
        f.set(Word::letter(x), one);
        return f;
    }

    unsigned N() const { return N_; }
    int W() const { return W_; }
    int D() const { return D_; }
    const S& one() const { return one_; }
    S zero() const { return scalar_from(one_, Rat(0)); }
    S constant(const Rat& r) const { return scalar_from(one_, r); }
    const std::map<Word, S>& terms() const { return c_; }

    bool fits(const Word& w) const { return w.weight() <= W_ && w.depth() <= D_; }
    S operator[](const Word& w) const {
        auto it = c_.find(w);
        return it == c_.end() ? zero() : it->second;
    }
    void set(const Word& w, const S& x) {
        if (!fits(w)) return;
        if (x.is_zero()) c_.erase(w);
        else c_[w] = x;
    }
    void add(const Word& w, const S& x) {
        if (!fits(w) || x.is_zero()) return;
        auto it = c_.find(w);
        if (it == c_.end()) {
            c_.emplace(w, x);
            return;
        }
        it->second += x;
        if (it->second.is_zero()) c_.erase(it);
    }

    NCSeries with_caps(int W, int D) const {
        NCSeries r(N_, W, D, one_);
        for (auto& [w, x] : c_) r.set(w, x);
        return r;
    }

    NCSeries& operator+=(const NCSeries& o) {
        check(o);
        for (auto& [w, x] : o.c_) add(w, x);
        return *this;
    }
    NCSeries& operator-=(const NCSeries& o) {
        check(o);
        for (auto& [w, x] : o.c_) add(w, -x);
        return *this;
    }
    NCSeries scaled(const S& s) const {
        NCSeries r(N_, W_, D_, one_);
        for (auto& [w, x] : c_) r.set(w, x * s);
        return r;
    }
    friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
    NCSeries operator-() const { return scaled(-one_); }

    friend bool operator==(const NCSeries& a, const NCSeries& b) {
        NCSeries d = a - b;
        return d.c_.empty();
    }
    friend bool operator!=(const NCSeries& a, const NCSeries& b) { return !(a == b); }

    void check(const NCSeries& o) const {
        if (o.N_ != N_) throw std::invalid_argument("series: cyclotomic order mismatch");
    }
    // Eager truncation to the smaller caps.
    NCSeries meet(const NCSeries& o) const {
        check(o);
        return NCSeries(N_, std::min(W_, o.W_), std::min(D_, o.D_), one_);
    }

private:
    unsigned N_;
    int W_, D_;
    S one_;
    std::map<Word, S> c_;
};

template <class S>
NCSeries<S> concat_mul(const NCSeries<S>& f, const NCSeries<S>& g) {
    NCSeries<S> r = f.meet(g);
    for (auto& [u, a] : f.terms()) {
        if (!r.fits(u)) continue;
        for (auto& [v, b] : g.terms()) {
            if (u.weight() + v.weight() > r.W() || u.depth() + v.depth() > r.D()) continue;
            r.add(u + v, a * b);
        }
    }
    return r;
}

// Inverse for concatenation; f[empty] must be invertible.
template <class S>
NCSeries<S> series_inverse(const NCSeries<S>& f) {
    S c0 = f[Word()];
    if (c0.is_zero()) throw std::domain_error("series_inverse: constant term not invertible");
    S inv0 = f.one() / c0;
    NCSeries<S> g(f.N(), f.W(), f.D(), f.one());
    g.set(Word(), inv0);
    // g[w] = -inv0 * sum_{w = u v, u nonempty} f[u] g[v], by increasing weight
    for (const Word& w : all_words(f.N(), f.W(), f.D())) {
        if (w.empty()) continue;
        S acc = f.zero();
        for (size_t k = 1; k <= w.s.size(); ++k) {
            Word u(w.s.substr(0, k)), v(w.s.substr(k));
            auto it = f.terms().find(u);
            if (it == f.terms().end()) continue;
            auto jt = g.terms().find(v);
            if (jt == g.terms().end()) continue;
            acc += it->second * jt->second;
        }
        g.set(w, -(inv0 * acc));
    }
    return g;
}

// (-1)^{|w|} f[reverse(w)]: the inverse of a grouplike series.
template <class S>
NCSeries<S> antipode(const NCSeries<S>& f) {
    NCSeries<S> g(f.N(), f.W(), f.D(), f.one());
    for (auto& [w, x] : f.terms()) g.set(w.reversed(), (w.weight() % 2) ? -x : x);
    return g;
}

template <class S>
NCSeries<S> tau_scale(const S& lambda, const NCSeries<S>& f) {
    NCSeries<S> r(f.N(), f.W(), f.D(), f.one());
    std::vector<S> pw{f.one()};
    for (int n = 1; n <= f.W(); ++n) pw.push_back(pw.back() * lambda);
    for (auto& [w, x] : f.terms()) r.set(w, x * pw[w.weight()]);
    return r;
}

template <class S>
NCSeries<S> tau_n(int n, const NCSeries<S>& f) {
    NCSeries<S> r(f.N(), f.W(), f.D(), f.one());
    for (auto& [w, x] : f.terms())
        if (w.weight() == n) r.set(w, x);
    return r;
}

template <class S>
NCSeries<S> tau_depth_le(int d, const NCSeries<S>& f) {
    NCSeries<S> r(f.N(), f.W(), f.D(), f.one());
    for (auto& [w, x] : f.terms())
        if (w.depth() <= d) r.set(w, x);
    return r;
}

// Letter relabelling e_eta -> e_{xi eta} with xi = zeta^k.
inline Word xi_twist_word(const Word& w, unsigned N, long k) {
    Word r = w;
    long Nm = std::max(N, 1u);
    for (auto& c : r.s)
        if (c) c = (char)(1 + (((c - 1) + k) % Nm + Nm) % Nm);
    return r;
}

template <class S>
NCSeries<S> xi_twist(const NCSeries<S>& f, long k) {
    NCSeries<S> r(f.N(), f.W(), f.D(), f.one());
    for (auto& [w, x] : f.terms()) r.set(xi_twist_word(w, f.N(), k), x);
    return r;
}

template <class S>
NormPoly norm_LD(const NCSeries<S>& f, unsigned long p) {
    NormPoly n;
    for (auto& [w, x] : f.terms()) n.absorb(w.weight(), w.depth(), ScalarOps<S>::valuation(x, p));
    return n;
}

// Depth-indexed sup: minimal valuation per depth.
template <class S>
std::map<int, long> norm_D(const NCSeries<S>& f, unsigned long p) {
    std::map<int, long> out;
    for (auto& [w, x] : f.terms()) {
        long v = ScalarOps<S>::valuation(x, p);
        auto it = out.find(w.depth());
        if (it == out.end() || v < it->second) out[w.depth()] = v;
    }
    return out;
}

// Support restricted to words that start and end with a non-e0 letter.
// Single letters e_xi are kept as the depth-0 harmonic words.
inline bool is_harmonic_support(const Word& w) {
    return !w.empty() && w[0] != 0 && w[w.s.size() - 1] != 0;
}

template <class S>
NCSeries<S> harmonic_project(const NCSeries<S>& f) {
    NCSeries<S> r(f.N(), f.W(), f.D(), f.one());
    for (auto& [w, x] : f.terms())
        if (is_harmonic_support(w)) r.set(w, x);
    return r;
}

// Shuffle relations f[u] f[v] = sum f[shuffle] for all u, v within caps, f[empty] = 1.
template <class S>
bool is_grouplike(const NCSeries<S>& f) {
    if (f[Word()] != f.one()) return false;
    auto words = all_words(f.N(), f.W(), f.D());
    for (const Word& u : words) {
        if (u.empty()) continue;
        for (const Word& v : words) {
            if (v.empty() || v < u) continue;
            if (u.weight() + v.weight() > f.W() || u.depth() + v.depth() > f.D()) continue;
            S lhs = f[u] * f[v], rhs = f.zero();
            for (auto& w : shuffle_set(u, v)) rhs += f[w];
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace pmzv
