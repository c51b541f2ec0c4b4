#pragma once

#include <map>
#include <stdexcept>

#include "pmzv/engine.hpp"
#include "pmzv/ihara.hpp"

namespace pmzv {

template <class S>
S power_of(const S& one, const S& x, long e) {
    S r = one;
    for (long i = 0; i < e; ++i) r = r * x;
    return r;
}

// Output at each harmonic-support word w: sum_{l <= lmax} f[e0^l w].
// The weight cap drops by lmax so every output coefficient sees all its terms.
template <class S>
NCSeries<S> sigma_sum(const NCSeries<S>& f, int lmax) {
    if (lmax < 0 || lmax >= f.W()) throw std::invalid_argument("sigma_sum: weight cap too small for lmax");
    NCSeries<S> out(f.N(), f.W() - lmax, f.D(), f.one());
    for (auto& [w, x] : f.terms()) {
        size_t l = 0;
        while (l < w.s.size() && w.s[l] == 0) ++l;
        if ((int)l > lmax) continue;
        Word rest(w.s.substr(l));
        if (is_harmonic_support(rest) && out.fits(rest)) out.add(rest, x);
    }
    return out;
}

// Coefficients placed on the embedded words, zero elsewhere.
template <class S>
NCSeries<S> canonical_section(const NCSeries<S>& h) {
    return harmonic_project(h);
}

// Harmonic-part series with e_1 -> 1 and embed(w) -> values[w].
template <class S>
NCSeries<S> harmonic_series(unsigned N, int W, int D, const S& one, const std::map<HarmonicWord, S>& values) {
    NCSeries<S> h = NCSeries<S>::letter(N, W, D, one, 1);
    for (auto& [w, x] : values) h.set(w.embed(), x);
    return h;
}

// Sigma(adjoint_ihara(g, section(h))): h is rewritten with its letters replaced by g.
template <class S>
NCSeries<S> har_action(const NCSeries<S>& g, const NCSeries<S>& h, int lmax) {
    return sigma_sum(adjoint_ihara(g, canonical_section(h)), lmax);
}

// The action of the m-th level: g is first rescaled by tau(m).
template <class S>
NCSeries<S> har_action_level(const S& m, const NCSeries<S>& g, const NCSeries<S>& h, int lmax) {
    return har_action(tau_scale(m, g).scaled(g.one() / m), h, lmax);
}

// f[w] -> (-1)^{depth(w) - 1} f[w]; commutes with substitution and absorbs the
// (-1)^d of the harmonic-sum formula.
template <class S>
NCSeries<S> depth_sign(const NCSeries<S>& f) {
    NCSeries<S> r(f.N(), f.W(), f.D(), f.one());
    for (auto& [w, x] : f.terms()) r.set(w, (w.depth() % 2) ? x : -x);
    return r;
}

// lambda^{-1} tau(lambda) f: the image of Ad_g(e1) under g -> tau(lambda) g.
template <class S>
NCSeries<S> tau_ad(const S& lambda, const NCSeries<S>& f) {
    return tau_scale(lambda, f).scaled(f.one() / lambda);
}

// Fixed-point form: (lambda^{-1} tau(lambda) A) acting on h, with A the signed
// Ad series of the fixed point and h the harmonic-part series at infinity.
template <class S>
NCSeries<S> fixed_point_eval(const NCSeries<S>& A, const NCSeries<S>& h, const S& lambda, int lmax) {
    return har_action(tau_ad(lambda, A), h, lmax);
}

// Coefficient of lambda^n at w in the fixed-point form: a section word of weight k
// lands in degree wt(output) - k.
template <class S>
S fixed_point_coeff(const NCSeries<S>& A, const NCSeries<S>& h, long n, const HarmonicWord& w) {
    Word x = w.embed();
    NCSeries<S> sec = canonical_section(h);
    S acc = A.zero();
    for (int k = 1; k <= sec.W(); ++k) {
        long l = n + k - x.weight();
        if (l < 0 || l + x.weight() > A.W()) continue;
        NCSeries<S> part = tau_n(k, sec);
        if (part.terms().empty()) continue;
        acc += adjoint_ihara(A, part)[Word::e0pow((int)l) + x];
    }
    return acc;
}

// B with B(e0, A) = e1 = A(e0, B): the signed Ad series of the inverse element.
template <class S>
NCSeries<S> ad_inverse(const NCSeries<S>& A) {
    NCSeries<S> e1 = NCSeries<S>::letter(A.N(), A.W(), A.D(), A.one(), 1);
    NCSeries<S> B = e1;
    // each pass fixes one more depth
    for (int d = 1; d < A.D(); ++d) B -= adjoint_ihara(A, B) - e1;
    return B;
}

// Signed Ad series of the inverse of iterate(a, lambda, g), from the signed Ad
// series A of the inverse of g: A(e0, B_1), B_i = tau_ad(lambda^i, A)(e0, B_{i+1}).
template <class S>
NCSeries<S> iterate_ad(long a, const S& lambda, const NCSeries<S>& A) {
    if (a < 1) throw std::invalid_argument("iterate_ad: a >= 1 required");
    NCSeries<S> r = A;
    S mu = A.one();
    for (long i = 1; i < a; ++i) {
        mu = mu * lambda;
        r = adjoint_ihara(tau_ad(mu, A), r);
    }
    return r;
}

// Sigma of the a-fold iterate; a must exceed the depth of every harmonic word
// read from the result.
template <class S>
NCSeries<S> iter_har_integral(long a, const S& lambda, const NCSeries<S>& A, int lmax, int max_depth) {
    if (a <= max_depth) throw std::invalid_argument("iter_har_integral: a must exceed the word depth");
    return sigma_sum(iterate_ad(a, lambda, A), lmax);
}

// Family of fixed-point evaluations at lambda = Q^alpha.
template <class S>
std::map<long, NCSeries<S>> comp_iter(const NCSeries<S>& A, const NCSeries<S>& h, const S& Q,
                                      const std::vector<long>& alphas, int lmax) {
    std::map<long, NCSeries<S>> out;
    for (long a : alphas) out.emplace(a, fixed_point_eval(A, h, power_of(A.one(), Q, a), lmax));
    return out;
}

// Inverts the fixed-point form depth by depth. At a word w the constant term is
// h[w]; the coefficient of lambda^n (n >= wt(w)) is A[e0^{n - wt(w)} embed(w)] plus
// terms from h in lower depth and A off the harmonic form, which must be present.
template <class S>
void extract_triangular(NCSeries<S>& A, NCSeries<S>& h, const std::map<HarmonicWord, std::map<long, S>>& coeffs) {
    int maxd = 0;
    for (auto& [w, c] : coeffs) maxd = std::max(maxd, w.depth());
    for (int d = 1; d <= maxd; ++d) {
        for (auto& [w, cs] : coeffs) {
            if (w.depth() != d) continue;
            for (auto& [n, c] : cs) {
                if (n == 0) {
                    h.set(w.embed(), c);
                    continue;
                }
                long l = n - w.weight();
                if (l < 0) continue;
                Word x = Word::e0pow((int)l) + w.embed();
                if (!A.fits(x)) continue;
                A.set(x, A.zero());
                A.set(x, c - fixed_point_coeff(A, h, n, w));
            }
        }
    }
}

}  // namespace pmzv
