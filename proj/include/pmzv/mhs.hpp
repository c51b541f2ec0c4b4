#pragma once

#include <map>
#include <vector>

#include "pmzv/ncseries.hpp"
#include "pmzv/padic.hpp"
#include "pmzv/words.hpp"

namespace pmzv {

// m^{weight} * sum_{0<m_1<...<m_d<m} prod (xi_{i+1}/xi_i)^{m_i} / m_i^{n_i} * xi_{d+1}^{-m}
ExactScalar har(long m, const HarmonicWord& w, unsigned N = 1);
ExactScalar mhs_unweighted(long m, const HarmonicWord& w, unsigned N = 1);

// N = 1 fast paths on plain rationals.
Rat har_rat(long m, const std::vector<int>& n);
Rat mhs_rat(long m, const std::vector<int>& n);

// sum_{0<r_1<...<r_d<R} prod zeta^{rho_i r_i} / r_i^{e_i}, e_i any integers.
ExactScalar har_localized(long R, const std::vector<int>& exps, const std::vector<int>& rho, unsigned N = 1);
Rat har_localized_rat(long R, const std::vector<int>& exps);

// Values har(m, w) for all (m, w); OpenMP over words, and the serial reference.
using HarTable = std::map<std::pair<long, std::vector<int>>, Rat>;
HarTable har_table(const std::vector<long>& ms, const std::vector<HarmonicWord>& words);
HarTable har_table_serial(const std::vector<long>& ms, const std::vector<HarmonicWord>& words);

// h_m(w) through the q-adic digit splitting of m, with the shifted l-sums
// truncated so that the dropped part has valuation >= target (N = 1).
struct SplitResult {
    PadicScalar value;  // precision = certificate
    int lmax = 0;       // largest l-sum used in any block
    int pieces = 0;     // number of slot assignments
};
SplitResult split_by_digits(long m, const HarmonicWord& w, unsigned long p, int target);

// (-1)^d sum_xi xi^{-tag} sum_{l <= lmax} A^{(xi)}[e0^l w], tag taken mod N.
template <class S>
S har_from_ad(const NCSeries<S>& A, const HarmonicWord& w, long tag, int lmax) {
    unsigned N = std::max(A.N(), 1u);
    if (w.weight() + lmax + 1 > A.W() || w.depth() + 1 > A.D())
        throw std::invalid_argument("har_from_ad: series caps too small");
    S acc = A.zero();
    Word hw = w.embed();
    for (unsigned k = 0; k < N; ++k) {
        // A^{(xi)}[u] = A[twist^{-1} u]
        Word base = xi_twist_word(hw, N, -(long)k);
        S part = A.zero();
        for (int l = 0; l <= lmax; ++l) part += A[Word::e0pow(l) + base];
        if (N > 1) part = part * ScalarOps<S>::zeta(A.one(), -(long)k * tag);
        acc += part;
    }
    return w.depth() % 2 ? -acc : acc;
}

}  // namespace pmzv
