#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "pmzv/exact.hpp"
#include "pmzv/faulhaber.hpp"
#include "pmzv/padic.hpp"
#include "pmzv/words.hpp"

namespace pmzv {

// S(a) = sum c_{n,m} Lambda^n a^m, Lambda = Q^a.
template <class S>
struct ExpansionPoly {
    std::map<std::pair<long, int>, S> terms;

    void add(long n, int m, const S& c) {
        auto it = terms.find({n, m});
        if (it == terms.end()) {
            terms.emplace(std::make_pair(n, m), c);
        } else {
            it->second += c;
        }
    }
    ExpansionPoly& operator+=(const ExpansionPoly& o) {
        for (auto& [k, c] : o.terms) add(k.first, k.second, c);
        return *this;
    }
    S coeff(long n, int m) const {
        auto it = terms.find({n, m});
        return it == terms.end() ? S() : it->second;
    }
    int max_m() const {
        int r = 0;
        for (auto& [k, c] : terms) r = std::max(r, k.second);
        return r;
    }
    // Drop exact zeros (Rat only makes sense here; padic zeros stay).
    void prune() {
        for (auto it = terms.begin(); it != terms.end();)
            it = (it->second == S(0)) ? terms.erase(it) : std::next(it);
    }
};

// Exact evaluation at Lambda = Q^a.
Rat eval_expansion(const ExpansionPoly<Rat>& E, long Q, long a);

// Closed form sum_U U^M P_U(M) of a chain sum.
struct MarkerSum {
    std::map<Rat, std::vector<Rat>> terms;  // U -> coefficients of P_U in M
    Rat eval(long M) const;
};

// sum_{0 <= v < M} T^v v^alpha, kept symbolic in M.
MarkerSum geom_poly_sum(unsigned alpha, const Rat& T);

// sum_{0 <= v_1 < ... < v_d < M} prod T_i^{v_i} A_i(v_i); A_i low degree first.
MarkerSum chain_sum_closed(const std::vector<Rat>& T, const std::vector<std::vector<Rat>>& A);

// Same with T_i = Q^{C_i}; the result is keyed by the exponent E of U = Q^E.
std::map<long, std::vector<Rat>> chain_sum_exponents(long Q, const std::vector<long>& C);

// sum_{v = lo}^{hi - 1} xi^v v^l through the B-polynomial at both ends (xi = zeta_N^k).
ExactScalar faulhaber_twisted(unsigned l, unsigned N, long k, long lo, long hi);

// Ordered set partitions of {0..d-1}: block index per element, blocks 0..B-1.
std::vector<std::vector<int>> ordered_partitions(int d);

// Contribution of one l-vector and one valuation pattern to har_{Q^a}(n) (N = 1),
// after eliminating u, r and v.  pattern[i] = rank of v_i among distinct values.
ExpansionPoly<Rat> eliminate_pattern(const std::vector<int>& n, const std::vector<int>& l,
                                     const std::vector<int>& pattern, long Q);

// All patterns summed for a fixed l-vector.
ExpansionPoly<Rat> sum_over_valuations(const std::vector<int>& n, const std::vector<int>& l, long Q);

// The l-layers |l| = s for s = 0..L, summed.
struct SeriesExpansion {
    ExpansionPoly<Rat> poly;
    std::vector<ExpansionPoly<Rat>> layers;  // layers[s]
    int L = 0;
    long Q = 0;
    int weight = 0;
    // Lower bound on v_p(E_L(a) - har_{Q^a}(w)).
    long value_certificate() const { return weight + L + 1; }
};
SeriesExpansion series_expansion(const HarmonicWord& w, unsigned long p, int alpha0, int L);

// Direct re-summation of the digit decomposition truncated at |l| <= L (oracle).
Rat digit_enumeration(const std::vector<int>& n, long Q, long a, int L);

struct SeriesValue {
    PadicScalar value;  // precision is the certificate
    int L = 0;
    ExpansionPoly<Rat> poly;
};
// har_{q^alpha}(w) from the base at q^{alpha0}, N = 1, alpha0 | alpha.
SeriesValue iter_har_series(const HarmonicWord& w, unsigned long p, int alpha0, int alpha, int target);

// Depth-1 closed form: coefficient of Lambda^{n+b} (b >= 1) and the constant term,
// each with the l-sum taken over l <= lmax.
Rat depth1_coeff(int n, int b, unsigned long p, int alpha0, int lmax);
Rat depth1_constant(int n, unsigned long p, int alpha0, int lmax);

// v_p lower bound for the L-th term of the depth-1 (b, n) series (l = L + b).
long truncation_certificate(int n, int b, int L, unsigned long p);

struct FitResult {
    ExpansionPoly<Rat> poly;
    bool consistent = true;
    Rat residual;       // first nonzero residual over the extra samples
    long residual_at = 0;
};
// Exact fit of S(a) = sum_{n in [n_lo, n_hi], m <= m_cap} c_{n,m} Q^{na} a^m.
FitResult fit_expansion(const std::map<long, Rat>& samples, long Q, long n_lo, long n_hi, int m_cap);
// Same over an explicit set of (n, m) columns; no samples gives the zero poly.
FitResult fit_expansion(const std::map<long, Rat>& samples, long Q, const std::vector<std::pair<long, int>>& cols);

}  // namespace pmzv
