#include "pmzv/zeta.hpp"

#include <algorithm>
#include <stdexcept>

#include "pmzv/harmonic.hpp"
#include "pmzv/mhs.hpp"

namespace pmzv {

namespace {

const PadicField& field(unsigned long p) { return PadicField::get(p, 1); }

PadicScalar padic(unsigned long p, const Rat& x, int prec) { return PadicScalar::from_rat(field(p), x, prec); }

}  // namespace

PadicScalar ad_infinity_coeff(int b, int n, unsigned long p, int alpha0, int target) {
    if (n < 1 || b < 0) throw std::invalid_argument("ad_infinity_coeff: need n >= 1, b >= 0");
    if (b == 0) {
        // constant term of the depth-1 expansion; its terms carry the same bound with b = 1
        int L = -1;
        while (truncation_certificate(n, 1, L, p) < target) ++L;
        return padic(p, depth1_constant(n, p, alpha0, L + 1), target);
    }
    int L = -1;
    while (truncation_certificate(n, b, L, p) < target) ++L;
    return padic(p, depth1_coeff(n, b, p, alpha0, L + b - 1), target);
}

ZetaResult zeta_depth1(int k, unsigned long p, int alpha0, int target) {
    if (k < 2) throw std::invalid_argument("zeta_depth1: k >= 2 required");
    ZetaResult out;
    for (int b = 1; b < k; ++b) {
        int n = k - b;
        Int c = binom(k - 1, b);
        long loss = vp(c, p);
        PadicScalar A = ad_infinity_coeff(b, n, p, alpha0, target + (int)loss);
        PadicScalar z = A / padic(p, Rat(c), target + (int)loss);
        if (n % 2 == 0) z = -z;
        ZetaRecord r;
        r.k = k;
        r.b = b;
        r.n = n;
        r.value = z.with_prec(target);
        r.alpha0 = alpha0;
        r.method = "depth1-closed-form";
        r.cert = r.value.prec();
        out.parts.push_back(r);
    }
    out.worst_agreement = target;
    for (size_t i = 1; i < out.parts.size(); ++i) {
        int ag = padic_agreement(out.parts[0].value, out.parts[i].value);
        out.worst_agreement = std::min(out.worst_agreement, ag);
        if (ag < std::min(out.parts[0].cert, out.parts[i].cert)) out.consistent = false;
    }
    out.combined = out.parts.front();
    out.combined.b = out.combined.n = -1;
    out.combined.method = "overdetermined-depth1";
    return out;
}

NCSeries<PadicScalar> ad_minus_infinity(unsigned long p, int alpha0, int W, int target) {
    PadicScalar one = padic(p, 1, target);
    NCSeries<PadicScalar> A = NCSeries<PadicScalar>::letter(1, W, 3, one, 1);
    // phi_k = Phi_inf[e0^{k-1} e1] = -zeta(k)
    std::vector<PadicScalar> phi(W + 1, padic(p, 0, target));
    for (int k = 2; k < W; ++k) phi[k] = -zeta_depth1(k, p, alpha0, target).combined.value;
    // Ad_{Phi_inf}(e1)[e0^a e1 e0^b e1 e0^c]
    //   = [a=0](-1)^c C(b+c,c) phi_{b+c+1} - [c=0](-1)^b C(a+b,b) phi_{a+b+1};
    // Ad_{Phi_-inf} is its negative in depth 2, and the depth sign flips it back.
    for (int a = 0; a + 2 <= W; ++a)
        for (int b = 0; a + b + 2 <= W; ++b)
            for (int c = 0; a + b + c + 2 <= W; ++c) {
                if (a && c) continue;
                PadicScalar x = padic(p, 0, target);
                if (a == 0) {
                    PadicScalar t = phi[b + c + 1] * padic(p, Rat(binom(b + c, c)), target);
                    x += (c % 2) ? -t : t;
                }
                if (c == 0) {
                    PadicScalar t = phi[a + b + 1] * padic(p, Rat(binom(a + b, b)), target);
                    x -= (b % 2) ? -t : t;
                }
                A.set(Word::e0pow(a) + Word::letter(1) + Word::e0pow(b) + Word::letter(1) + Word::e0pow(c), x);
            }
    return A;
}

std::map<long, PadicScalar> series_lambda_coeffs(const HarmonicWord& w, unsigned long p, int alpha0, int L,
                                                 long nmax) {
    if (L < 2) throw std::invalid_argument("series_lambda_coeffs: L >= 2 required");
    SeriesExpansion S = series_expansion(w, p, alpha0, L);
    std::map<long, PadicScalar> out;
    for (long n = 0; n <= nmax; ++n) {
        Rat c = S.poly.coeff(n, 0);
        long stab = 64;
        for (int s : {L, L - 1}) {
            Rat d = S.layers[s].coeff(n, 0);
            if (d != 0) stab = std::min(stab, vp(d, p));
        }
        out.emplace(n, padic(p, c, (int)stab));
    }
    return out;
}

InfinityData infinity_data(unsigned long p, int alpha0, int W, int target, const std::vector<HarmonicWord>& depth2,
                           int L) {
    InfinityData D{ad_minus_infinity(p, alpha0, W, target), NCSeries<PadicScalar>(1, W, 3, padic(p, 1, target))};
    D.h.set(Word::letter(1), D.h.one());
    for (int n = 1; n + 1 <= W; ++n) D.h.set(HarmonicWord({n}).embed(), ad_infinity_coeff(0, n, p, alpha0, target));
    std::map<HarmonicWord, std::map<long, PadicScalar>> coeffs;
    for (auto& w : depth2) {
        if (w.depth() != 2) throw std::invalid_argument("infinity_data: depth-2 words only");
        auto cs = series_lambda_coeffs(w, p, alpha0, L, W - 1);
        for (auto& [n, c] : cs)
            if (n == 0 || n >= w.weight()) coeffs[w].emplace(n, c.with_prec(std::min(c.prec(), target)));
    }
    extract_triangular(D.A, D.h, coeffs);
    return D;
}

NCSeries<PadicScalar> ad_base(const InfinityData& D, unsigned long p, int alpha0) {
    PadicScalar Q = padic(p, Rat(ipow(p, alpha0)), D.A.one().prec());
    return adjoint_ihara(tau_ad(Q, D.A), ad_inverse(D.A));
}

long fixed_point_tail(const HarmonicWord& w, int W, int alpha, unsigned long p) {
    // dropped terms sit in lambda-degree N >= W - wt(w); their coefficients have
    // valuation >= N - 2 - log_p(N + 1)
    long N = std::max(1, W - w.weight());
    long lg = 0;
    for (unsigned long t = p; t <= (unsigned long)(N + 1); t *= p) ++lg;
    return alpha * N + N - 2 - lg;
}

long integral_tail(const HarmonicWord& w, int W, unsigned long p) {
    // the Ad series of Phi_inf is not damped by lambda: its coefficient at
    // e0^l embed(w) only has valuation >= wt(w) + l - 2 - log_p(l + 1)
    long l = std::max(1, W - w.weight());
    long lg = 0;
    for (unsigned long t = p; t <= (unsigned long)(l + 1); t *= p) ++lg;
    return w.weight() + l - 2 - lg;
}

std::vector<ThreeWayReport> verify_three_way(const HarmonicWord& w, unsigned long p, int alpha0,
                                             const std::vector<int>& alphas, int target) {
    if (w.depth() > 2) throw std::invalid_argument("verify_three_way: depth <= 2 only");
    int W = w.weight() + 2;
    while (integral_tail(w, W, p) < target + 2 || fixed_point_tail(w, W, alpha0, p) < target + 2) ++W;
    int inner = target + 8;
    std::vector<HarmonicWord> d2;
    if (w.depth() == 2) d2.push_back(w);
    InfinityData D = infinity_data(p, alpha0, W, inner, d2);
    NCSeries<PadicScalar> base = ad_base(D, p, alpha0);
    int lmax = W - w.weight() - 1;
    const PadicField& F = field(p);
    std::vector<ThreeWayReport> out;
    for (int alpha : alphas) {
        if (alpha % alpha0) throw std::invalid_argument("verify_three_way: alpha0 must divide alpha");
        ThreeWayReport r;
        r.w = w;
        r.alpha = alpha;
        long tail = fixed_point_tail(w, W, alpha, p);
        PadicScalar lam = padic(p, Rat(ipow(p, alpha)), inner);
        PadicScalar fp = fixed_point_eval(D.A, D.h, lam, lmax)[w.embed()];
        r.legs["fixed-point"] = fp.with_prec((int)std::min<long>(fp.prec(), tail));
        // the a-fold iterate is valid as a value for every a; a > depth only matters for the expansion
        long a = alpha / alpha0;
        PadicScalar Q = padic(p, Rat(ipow(p, alpha0)), inner);
        PadicScalar it = sigma_sum(iterate_ad(a, Q, base), lmax)[w.embed()];
        r.legs["integral"] = it.with_prec((int)std::min({(long)it.prec(), tail, integral_tail(w, W, p)}));
        r.legs["series"] = iter_har_series(w, p, alpha0, alpha, target).value;
        r.legs["brute"] = PadicScalar::from_rat(F, har_rat((long)ipow(p, alpha).get_si(), w.n), inner + 20);
        r.min_cert = inner + 20;
        for (auto& [k, v] : r.legs) r.min_cert = std::min(r.min_cert, v.prec());
        r.pass = true;
        for (auto i = r.legs.begin(); i != r.legs.end(); ++i)
            for (auto j = std::next(i); j != r.legs.end(); ++j) {
                int d = padic_agreement(i->second, j->second);
                r.distance[i->first + "|" + j->first] = d;
                if (d < std::min(r.min_cert, target)) r.pass = false;
            }
        out.push_back(std::move(r));
    }
    return out;
}

RelationReport phi_alpha0_relation_check(int b, int n, unsigned long p, int alpha0, int target) {
    if (b < 1) throw std::invalid_argument("phi_alpha0_relation_check: b >= 1");
    int W = n + b + 1;
    InfinityData D = infinity_data(p, alpha0, W, target);
    NCSeries<PadicScalar> base = ad_base(D, p, alpha0);
    Word x = Word::e0pow(b) + HarmonicWord({n}).embed();
    RelationReport r;
    r.b = b;
    r.n = n;
    Int Q = ipow(p, alpha0);
    // depth-2 coefficients carry the sign -1 in the signed series
    r.lhs = -base[x] * padic(p, Rat(ipow(p, alpha0 * b)) / Rat(Q - 1), target);
    r.rhs = ad_infinity_coeff(b, n, p, alpha0, target);
    r.holds = padic_agreement(r.lhs, r.rhs) >= std::min(r.lhs.prec(), r.rhs.prec());
    if (!r.lhs.is_zero()) r.factor = r.rhs / r.lhs;
    return r;
}

}  // namespace pmzv
