#include "pmzv/mhs.hpp"

#include <omp.h>

#include <functional>
#include <stdexcept>

namespace pmzv {

namespace {

// sum over 0<t_1<...<t_d<R of prod f_i(t_i), by prefix accumulation in t
template <class S, class F>
S nested_sum(long R, int d, const F& term, const S& zero, const S& one) {
    if (d == 0) return one;
    std::vector<S> acc(d + 1, zero);  // acc[k] = sum over chains of length k with top < t
    acc[0] = one;
    for (long t = 1; t < R; ++t)
        for (int k = std::min<long>(d, t); k >= 1; --k) {
            if (acc[k - 1] == zero) continue;
            acc[k] += acc[k - 1] * term(k - 1, t);
        }
    return acc[d];
}

}  // namespace

Rat mhs_rat(long m, const std::vector<int>& n) { return har_localized_rat(m, n); }

Rat har_rat(long m, const std::vector<int>& n) {
    long wt = 0;
    for (int x : n) wt += x;
    return rpow(Rat(m), wt) * mhs_rat(m, n);
}

Rat har_localized_rat(long R, const std::vector<int>& exps) {
    return nested_sum<Rat>(R, (int)exps.size(), [&](int i, long t) { return rpow(Rat(t), -exps[i]); }, Rat(0),
                           Rat(1));
}

ExactScalar har_localized(long R, const std::vector<int>& exps, const std::vector<int>& rho, unsigned N) {
    if (exps.size() != rho.size()) throw std::invalid_argument("har_localized: exponent/root length mismatch");
    if (N <= 1) return ExactScalar(har_localized_rat(R, exps));
    ExactScalar z(Rat(0), N), o(Rat(1), N);
    return nested_sum<ExactScalar>(
        R, (int)exps.size(),
        [&](int i, long t) { return ExactScalar::zeta_pow(N, (long)rho[i] * t) * ExactScalar(rpow(Rat(t), -exps[i]), N); },
        z, o);
}

ExactScalar mhs_unweighted(long m, const HarmonicWord& w, unsigned N) {
    if (N <= 1) return ExactScalar(mhs_rat(m, w.n));
    std::vector<int> rho;
    for (int i = 0; i < w.depth(); ++i) rho.push_back(w.roots[i + 1] - w.roots[i]);
    return har_localized(m, w.n, rho, N) * ExactScalar::zeta_pow(N, -(long)w.roots.back() * m);
}

ExactScalar har(long m, const HarmonicWord& w, unsigned N) {
    ExactScalar h = mhs_unweighted(m, w, N);
    return h * ExactScalar(rpow(Rat(m), w.weight()), N);
}

HarTable har_table(const std::vector<long>& ms, const std::vector<HarmonicWord>& words) {
    std::vector<std::vector<Rat>> vals(words.size(), std::vector<Rat>(ms.size()));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)words.size(); ++i)
        for (size_t j = 0; j < ms.size(); ++j) vals[i][j] = har_rat(ms[j], words[i].n);
    HarTable out;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < ms.size(); ++j) out[{ms[j], words[i].n}] = vals[i][j];
    return out;
}

HarTable har_table_serial(const std::vector<long>& ms, const std::vector<HarmonicWord>& words) {
    HarTable out;
    for (auto& w : words)
        for (long m : ms) out[{m, w.n}] = har_rat(m, w.n);
    return out;
}

namespace {

long floor_log(long x, unsigned long p) {
    long k = 0;
    for (long t = (long)p; t <= x; t *= (long)p) ++k;
    return k;
}

struct SplitCtx {
    const PadicField* F;
    int P;  // working absolute precision
    std::map<std::pair<long, std::vector<int>>, PadicScalar> hcache;

    // p-adic h_L(exps), N = 1
    PadicScalar H(long L, const std::vector<int>& exps) {
        auto key = std::make_pair(L, exps);
        auto it = hcache.find(key);
        if (it != hcache.end()) return it->second;
        PadicScalar zero = PadicScalar::zero(*F, P), one = PadicScalar::from_rat(*F, Rat(1), P);
        PadicScalar r = nested_sum<PadicScalar>(
            L, (int)exps.size(), [&](int i, long t) { return PadicScalar::from_rat(*F, rpow(Rat(t), -exps[i]), P); },
            zero, one);
        hcache.emplace(key, r);
        return r;
    }
};

}  // namespace

SplitResult split_by_digits(long m, const HarmonicWord& w, unsigned long p, int target) {
    if (m < 2) throw std::invalid_argument("split_by_digits: m >= 2 required");
    for (int r : w.roots)
        if (r != 0) throw std::invalid_argument("split_by_digits: N = 1 words only");
    // nu_0 = 0 < nu_1 < ... < nu_{d'} = m: partial sums of the top digits
    std::vector<long> digits;
    for (long t = m, pw = 1; t > 0; t /= (long)p, pw *= (long)p)
        if (t % (long)p) digits.push_back((t % (long)p) * pw);
    std::vector<long> nu{0};
    for (size_t i = digits.size(); i-- > 0;) nu.push_back(nu.back() + digits[i]);
    int dp = (int)nu.size() - 1;
    int d = w.depth();
    long Y = floor_log(m, p);

    // slots: 2j = interval (nu_j, nu_{j+1}), 2j-1 = breakpoint nu_j (j >= 1)
    int nslots = 2 * dp - 1;
    auto vnu = [&](int j) { return j == 0 ? 0L : vp(Int(nu[j]), p); };
    auto vmax = [&](int j) { return floor_log(nu[j + 1] - nu[j] - 1, p); };

    // working precision covers every negative valuation met
    int guard = 4;
    int P0 = target + (int)(Y * (w.weight() + 2 * (target + Y * w.weight() + guard))) + guard;
    SplitCtx ctx{&PadicField::get(p, 1, 2 * P0), P0, {}};
    const PadicField& F = *ctx.F;

    SplitResult res;
    res.value = PadicScalar::zero(F, P0);
    std::vector<int> slot(d);
    std::function<void(int, int)> rec = [&](int i, int from) {
        if (i == d) {
            ++res.pieces;
            // group indices by slot
            std::vector<std::vector<int>> blocks(nslots);
            for (int k = 0; k < d; ++k) blocks[slot[k]].push_back(k);
            // lower bounds: fixed part and per expanded block bound(s)
            long fixed = 0;
            for (int s = 0; s < nslots; ++s) {
                if (blocks[s].empty()) continue;
                long nb = 0;
                for (int k : blocks[s]) nb += w.n[k];
                if (s % 2) fixed -= nb * vnu((s + 1) / 2);
                else fixed -= nb * vmax(s / 2);
            }
            // choose the l-sum cap per expanded block: bound(s) = s (v(nu_j) - vmax_j) + fixed part
            std::vector<int> cap(nslots, 0);
            for (int s = 2; s < nslots; s += 2) {
                if (blocks[s].empty()) continue;
                long gain = vnu(s / 2) - vmax(s / 2);
                long need = target - fixed;
                cap[s] = need <= gain ? 0 : (int)((need + gain - 1) / gain) - 1;
                res.lmax = std::max(res.lmax, cap[s]);
            }
            PadicScalar term = PadicScalar::from_rat(F, Rat(1), P0);
            for (int s = 0; s < nslots && !term.is_zero(); ++s) {
                auto& B = blocks[s];
                if (B.empty()) continue;
                if (s % 2) {
                    term *= PadicScalar::from_rat(F, rpow(Rat(nu[(s + 1) / 2]), -w.n[B[0]]), P0);
                    continue;
                }
                int j = s / 2;
                long L = nu[j + 1] - nu[j];
                std::vector<int> e;
                for (int k : B) e.push_back(w.n[k]);
                if (j == 0) {
                    term *= ctx.H(L, e);
                    continue;
                }
                // sum over l-vectors with |l| <= cap of prod C(-n,l) nu_j^{|l|} h_L(n + l)
                PadicScalar blk = PadicScalar::zero(F, P0);
                std::vector<int> l(B.size(), 0);
                std::function<void(size_t, int)> lrec = [&](size_t u, int left) {
                    if (u == B.size()) {
                        Rat c = 1;
                        int tot = 0;
                        std::vector<int> ee(e);
                        for (size_t k = 0; k < B.size(); ++k) {
                            c *= Rat(binom(-e[k], l[k]));
                            tot += l[k];
                            ee[k] += l[k];
                        }
                        c *= rpow(Rat(nu[j]), tot);
                        blk += PadicScalar::from_rat(F, c, P0) * ctx.H(L, ee);
                        return;
                    }
                    for (int x = 0; x <= left; ++x) {
                        l[u] = x;
                        lrec(u + 1, left - x);
                    }
                };
                lrec(0, cap[s]);
                term *= blk;
            }
            if (term.prec() < target) throw std::runtime_error("split_by_digits: working precision exhausted");
            res.value += term.with_prec(target);
            return;
        }
        for (int s = from; s < nslots; ++s) {
            slot[i] = s;
            rec(i + 1, s % 2 ? s + 1 : s);
        }
    };
    rec(0, 0);
    res.value = res.value.with_prec(target);
    return res;
}

}  // namespace pmzv
