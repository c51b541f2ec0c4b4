#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "pmzv/exact.hpp"

namespace pmzv {

// B_k with B_1 = -1/2.
Rat bernoulli(unsigned k);

// Coefficients of n^0..n^{l+1} in sum_{j<n} j^l (the table B^l_m at xi = 1).
const std::vector<Rat>& faulhaber_poly(unsigned l);

// Closed form produced by applying (T d/dT)^alpha to (T^M - 1)/(T - 1).
// A term (e, j, k) -> c(M) stands for c(M) * (T^M)^e * T^j / (T - 1)^k.
struct TdTForm {
    std::map<std::tuple<int, int, int>, std::vector<Rat>> terms;

    static TdTForm geometric(unsigned alpha);

    // P with sum_{v<M} T^v v^alpha = T^M P(M) - P(0), T != 1.
    template <class S>
    std::vector<S> marker_poly(const S& T) const;
    template <class S>
    S boundary(const S& T) const;  // the marker-free part, equals -P(0)
    template <class S>
    S eval(const S& T, long M) const;
};

// P_{l,T}: sum_{j<n} T^j j^l = T^n P(n) - P(0) for T != 1.
template <class S>
std::vector<S> twisted_faulhaber(unsigned l, const S& T) {
    return TdTForm::geometric(l).marker_poly(T);
}

// bcoef(l, m, xi = zeta_N^k); for xi != 1 the P(n) - P(0) convention applies.
ExactScalar bcoef(unsigned l, unsigned m, unsigned N, long k);

// --- template bodies ---

namespace detail {
template <class S>
S spow(const S& x, long e) {
    S r = S(1), b = e < 0 ? S(1) / x : x;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * b;
    return r;
}
}  // namespace detail

template <class S>
std::vector<S> TdTForm::marker_poly(const S& T) const {
    std::vector<S> out;
    S inv = S(1) / (T - S(1));
    for (auto& [key, c] : terms) {
        auto [e, j, k] = key;
        if (!e) continue;
        S w = detail::spow(T, j) * detail::spow(inv, k);
        if (out.size() < c.size()) out.resize(c.size(), S(0));
        for (size_t m = 0; m < c.size(); ++m)
            if (c[m] != 0) out[m] = out[m] + S(c[m]) * w;
    }
    return out;
}

template <class S>
S TdTForm::boundary(const S& T) const {
    S out = S(0);
    S inv = S(1) / (T - S(1));
    for (auto& [key, c] : terms) {
        auto [e, j, k] = key;
        if (e) continue;
        out = out + S(c.at(0)) * detail::spow(T, j) * detail::spow(inv, k);
    }
    return out;
}

template <class S>
S TdTForm::eval(const S& T, long M) const {
    auto P = marker_poly(T);
    S acc = S(0), Mp = S(1);
    for (auto& c : P) {
        acc = acc + c * Mp;
        Mp = Mp * S(Rat(M));
    }
    return detail::spow(T, M) * acc + boundary(T);
}

}  // namespace pmzv
