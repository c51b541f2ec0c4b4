#pragma once

#include <functional>
#include <random>
#include <stdexcept>

#include "pmzv/ncseries.hpp"

namespace pmzv {

// Image of f under the continuous algebra map e0 -> e0, e_{zeta^k} -> Y[k],
// truncated to the caps (W, D).
template <class S>
NCSeries<S> substitute(const NCSeries<S>& f, const std::vector<NCSeries<S>>& Y, int W, int D) {
    unsigned N = f.N();
    // minimal depth of each substituted letter series bounds the recursion caps
    std::vector<int> mind(Y.size(), D + 1);
    for (size_t k = 0; k < Y.size(); ++k)
        for (auto& [w, x] : Y[k].terms()) mind[k] = std::min(mind[k], w.depth());

    using It = typename std::map<Word, S>::const_iterator;
    // R(range of words sharing a prefix of length k)
    std::function<NCSeries<S>(It, It, size_t, int, int)> rec = [&](It b, It e, size_t k, int Wc,
                                                                     int Dc) -> NCSeries<S> {
        NCSeries<S> out(N, Wc, Dc, f.one());
        if (b != e && b->first.s.size() == k) {
            out.set(Word(), b->second);
            ++b;
        }
        while (b != e) {
            Letter x = (Letter)b->first.s[k];
            It m = b;
            while (m != e && (Letter)m->first.s[k] == x) ++m;
            if (x == 0) {
                if (Wc >= 1) {
                    NCSeries<S> r = rec(b, m, k + 1, Wc - 1, Dc);
                    for (auto& [w, c] : r.terms()) out.add(Word::letter(0) + w, c);
                }
            } else {
                int md = mind[x - 1];
                if (Wc >= 1 && md <= Dc) {
                    NCSeries<S> r = rec(b, m, k + 1, Wc - 1, Dc - md);
                    out += concat_mul(Y[x - 1].with_caps(Wc, Dc), r.with_caps(Wc, Dc));
                }
            }
            b = m;
        }
        return out;
    };
    return rec(f.terms().begin(), f.terms().end(), 0, W, D);
}

// f^{-1} x f
template <class S>
NCSeries<S> ad_series(const NCSeries<S>& f, const NCSeries<S>& x) {
    return concat_mul(concat_mul(series_inverse(f), x), f);
}

template <class S>
NCSeries<S> ad_e1(const NCSeries<S>& f) {
    return ad_series(f, NCSeries<S>::letter(f.N(), f.W(), f.D(), f.one(), 1));
}

// The letter images (g^{(xi)})^{-1} e_xi g^{(xi)} used by the Ihara product.
template <class S>
std::vector<NCSeries<S>> ihara_letters(const NCSeries<S>& g) {
    NCSeries<S> A = ad_e1(g);
    std::vector<NCSeries<S>> Y;
    for (unsigned k = 0; k < std::max(g.N(), 1u); ++k) Y.push_back(xi_twist(A, k));
    return Y;
}

template <class S>
NCSeries<S> ihara_mul(const NCSeries<S>& g, const NCSeries<S>& f) {
    NCSeries<S> caps = g.meet(f);
    return concat_mul(g, substitute(f, ihara_letters(g), caps.W(), caps.D()));
}

// f(e0, (h^{(x)})_x)
template <class S>
NCSeries<S> adjoint_ihara(const NCSeries<S>& h, const NCSeries<S>& f) {
    NCSeries<S> caps = h.meet(f);
    std::vector<NCSeries<S>> Y;
    for (unsigned k = 0; k < std::max(f.N(), 1u); ++k) Y.push_back(xi_twist(h, k));
    return substitute(f, Y, caps.W(), caps.D());
}

// Weight-by-weight solve of g . h(e0, Ad) = 1.
template <class S>
NCSeries<S> ihara_inv(const NCSeries<S>& g) {
    auto Y = ihara_letters(g);
    NCSeries<S> target = series_inverse(g);
    NCSeries<S> h = NCSeries<S>::unit(g.N(), g.W(), g.D(), g.one());
    for (int n = 1; n <= g.W(); ++n) {
        NCSeries<S> r = tau_n(n, target - substitute(h, Y, g.W(), g.D()));
        for (auto& [w, x] : r.terms()) h.add(w, x);
    }
    return h;
}

template <class S>
NCSeries<S> weighted_ihara(const S& lambda, const NCSeries<S>& g, const NCSeries<S>& f) {
    if (lambda.is_zero()) throw std::domain_error("weighted_ihara: lambda = 0");
    return ihara_mul(g, tau_scale(lambda, f));
}

template <class S>
NCSeries<S> weighted_ihara_inv(const S& lambda, const NCSeries<S>& g, const NCSeries<S>& f) {
    if (lambda.is_zero()) throw std::domain_error("weighted_ihara_inv: lambda = 0");
    return tau_scale(g.one() / lambda, ihara_mul(ihara_inv(g), f));
}

// Unique fix with g o tau(lambda) fix = fix; weight n is divided by 1 - lambda^n.
template <class S>
NCSeries<S> fixed_point(const S& lambda, const NCSeries<S>& g, unsigned long p) {
    if (ScalarOps<S>::valuation(lambda, p) < 1) throw std::domain_error("fixed_point: need |lambda|_p < 1");
    auto Y = ihara_letters(g);
    NCSeries<S> fix = NCSeries<S>::unit(g.N(), g.W(), g.D(), g.one());
    S ln = g.one();
    for (int n = 1; n <= g.W(); ++n) {
        ln = ln * lambda;
        NCSeries<S> r = tau_n(n, concat_mul(g, substitute(tau_scale(lambda, fix), Y, g.W(), g.D())));
        S inv = g.one() / (g.one() - ln);
        for (auto& [w, x] : r.terms()) fix.set(w, x * inv);
    }
    return fix;
}

// g o tau(lambda) g o ... o tau(lambda^{a-1}) g
template <class S>
NCSeries<S> iterate(long a, const S& lambda, const NCSeries<S>& g) {
    NCSeries<S> r = NCSeries<S>::unit(g.N(), g.W(), g.D(), g.one());
    for (long i = 0; i < a; ++i) r = weighted_ihara(lambda, g, r);
    return r;
}

// Coefficientwise N(inv(F2) o F1) <= N(inv(f2) o f1) evaluated at kappa * Lambda.
template <class S>
bool contraction_check(const std::function<NCSeries<S>(const NCSeries<S>&)>& apply, const NCSeries<S>& f1,
                       const NCSeries<S>& f2, const S& kappa, unsigned long p, bool require_equality = false) {
    long kv = ScalarOps<S>::valuation(kappa, p);
    NormPoly lhs = norm_LD(ihara_mul(ihara_inv(apply(f2)), apply(f1)), p);
    NormPoly rhs = norm_LD(ihara_mul(ihara_inv(f2), f1), p);
    if (!require_equality) return lhs.leq(rhs, kv);
    NormPoly shifted;
    for (auto& [k, v] : rhs.v) shifted.v[k] = v + kv * k.first;
    return lhs == shifted;
}

// exp(L) for L without constant term.
template <class S>
NCSeries<S> series_exp(const NCSeries<S>& L) {
    NCSeries<S> out = NCSeries<S>::unit(L.N(), L.W(), L.D(), L.one());
    NCSeries<S> pw = out;
    for (int k = 1; k <= L.W(); ++k) {
        pw = concat_mul(pw, L).scaled(L.constant(Rat(1, k)));
        out += pw;
    }
    return out;
}

// Random grouplike element with f[e0] = f[e_xi] = 0: exp of a combination of
// left-normed brackets of weight >= 2. Coefficients are c * p^j with c a small
// p-adic unit and j in [jmin, jmax].
template <class S>
NCSeries<S> random_pi_tilde(std::mt19937_64& rng, unsigned N, int W, int D, const S& one, unsigned long p,
                            int jmin = -1, int jmax = 2, int terms = 6) {
    NCSeries<S> L(N, W, D, one);
    unsigned alpha = std::max(N, 1u) + 1;
    std::uniform_int_distribution<int> len(2, W), let(0, alpha - 1), num(1, 9), expo(jmin, jmax);
    for (int t = 0; t < terms; ++t) {
        int k = len(rng);
        std::vector<Letter> xs(k);
        int d = 0;
        for (auto& x : xs) {
            x = (Letter)let(rng);
            d += x != 0;
        }
        if (d > D || d == 0 || d == k) {
            --t;
            continue;
        }
        // [x1, [x2, ... [x_{k-1}, x_k]]]
        NCSeries<S> b = NCSeries<S>::letter(N, W, D, one, xs[k - 1]);
        for (int i = k - 2; i >= 0; --i) {
            NCSeries<S> x = NCSeries<S>::letter(N, W, D, one, xs[i]);
            b = concat_mul(x, b) - concat_mul(b, x);
        }
        int c = num(rng);
        while (c % (int)p == 0) c = num(rng);
        Rat coef = Rat(num(rng) % 2 ? c : -c) * rpow(Rat(p), expo(rng));
        L += b.scaled(L.constant(coef));
    }
    return series_exp(L);
}

}  // namespace pmzv
