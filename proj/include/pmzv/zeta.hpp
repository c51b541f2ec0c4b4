#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pmzv/engine.hpp"
#include "pmzv/harmonic.hpp"
#include "pmzv/ncseries.hpp"
#include "pmzv/padic.hpp"

namespace pmzv {

// Ad_{Phi_inf}(e1)[e0^b e1 e0^{n-1} e1] from the depth-1 l-series at base p^alpha0,
// truncated once every dropped term has valuation >= target.
PadicScalar ad_infinity_coeff(int b, int n, unsigned long p, int alpha0, int target);

struct ZetaRecord {
    int k = 0;
    int b = -1, n = -1;  // decomposition, or -1 for the combined record
    PadicScalar value;   // zeta_{q,inf}(k) = -Phi_inf[e0^{k-1} e1]
    int alpha0 = 1;
    std::string method;
    long cert = 0;
};

struct ZetaResult {
    ZetaRecord combined;
    std::vector<ZetaRecord> parts;  // one per b = 1..k-1
    bool consistent = true;
    int worst_agreement = 0;
};

// zeta(k) = (-1)^{n+1} A(b, n) / C(k-1, b), over all k = n + b with b >= 1.
ZetaResult zeta_depth1(int k, unsigned long p, int alpha0, int target);

// Signed Ad series (coefficient at depth d times (-1)^{d-1}) of Phi_{-inf},
// complete in depth <= 2 up to weight W; depth-3 entries start empty.
NCSeries<PadicScalar> ad_minus_infinity(unsigned long p, int alpha0, int W, int target);

// Lambda^n coefficients (m = 0) of the series leg for a depth >= 2 word, with
// the size of the last two l-layers as precision estimate.
std::map<long, PadicScalar> series_lambda_coeffs(const HarmonicWord& w, unsigned long p, int alpha0, int L,
                                                 long nmax);

// Data of the fixed-point form: A acts on h. Depth-1 entries of h come from the
// closed form; the listed depth-2 words get their constant term and the depth-3
// entries of A through extract_triangular.
struct InfinityData {
    NCSeries<PadicScalar> A;  // signed Ad of Phi_{-inf}
    NCSeries<PadicScalar> h;  // harmonic-part series at infinity
};
InfinityData infinity_data(unsigned long p, int alpha0, int W, int target,
                           const std::vector<HarmonicWord>& depth2 = {}, int L = 11);

// Signed Ad series of Phi_{alpha0}: B(e0, q^{-alpha0} tau(q^{alpha0}) A).
NCSeries<PadicScalar> ad_base(const InfinityData& D, unsigned long p, int alpha0);

// Lower bound on the valuation of everything the weight cap W drops from the
// fixed-point form at w with lambda = p^alpha.
long fixed_point_tail(const HarmonicWord& w, int W, int alpha, unsigned long p);

// Same for the iterated Ad series, whose Phi_inf part is not damped by lambda.
long integral_tail(const HarmonicWord& w, int W, unsigned long p);

struct ThreeWayReport {
    HarmonicWord w;
    int alpha = 0;
    std::map<std::string, PadicScalar> legs;  // fixed-point, integral, series, brute
    std::map<std::string, int> distance;      // "a|b" -> v_p(a - b)
    int min_cert = 0;
    bool pass = false;
};

// har(q^alpha, w) four ways at N = 1 (q = p, base alpha0).
std::vector<ThreeWayReport> verify_three_way(const HarmonicWord& w, unsigned long p, int alpha0,
                                             const std::vector<int>& alphas, int target);

struct RelationReport {
    int b = 0, n = 0;
    PadicScalar lhs, rhs;  // both sides of the printed proportionality
    PadicScalar factor;    // rhs / lhs
    bool holds = false;
};
RelationReport phi_alpha0_relation_check(int b, int n, unsigned long p, int alpha0, int target);

}  // namespace pmzv
