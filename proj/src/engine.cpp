#include "pmzv/engine.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

#include "pmzv/mhs.hpp"

namespace pmzv {

Rat eval_expansion(const ExpansionPoly<Rat>& E, long Q, long a) {
    Rat acc = 0;
    for (auto& [k, c] : E.terms) acc += c * rpow(Rat(Q), k.first * a) * rpow(Rat(a), k.second);
    return acc;
}

Rat MarkerSum::eval(long M) const {
    Rat acc = 0;
    for (auto& [U, P] : terms) {
        Rat s = 0, Mp = 1;
        for (auto& c : P) {
            s += c * Mp;
            Mp *= M;
        }
        acc += rpow(U, M) * s;
    }
    return acc;
}

namespace {

std::mutex cache_mu;

const std::vector<Rat>& twisted_cached(unsigned e, const Rat& T) {
    static std::map<std::pair<unsigned, Rat>, std::vector<Rat>> cache;
    std::lock_guard<std::mutex> g(cache_mu);
    auto key = std::make_pair(e, T);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, twisted_faulhaber(e, T)).first;
    return it->second;
}

void poly_add(std::vector<Rat>& a, const std::vector<Rat>& b, const Rat& s = 1) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// sum_{y<x} V^y P(y) = V^x A(x) + B, returned as (A, B); V == 1 folds everything into A.
std::pair<std::vector<Rat>, Rat> sum_below(const std::vector<Rat>& P, const Rat& V) {
    std::vector<Rat> A;
    Rat B = 0;
    for (size_t e = 0; e < P.size(); ++e) {
        if (P[e] == 0) continue;
        if (V == 1) {
            poly_add(A, faulhaber_poly(e), P[e]);
        } else {
            const auto& tw = twisted_cached(e, V);
            poly_add(A, tw, P[e]);
            if (!tw.empty()) B -= P[e] * tw[0];
        }
    }
    return {A, B};
}

}  // namespace

MarkerSum geom_poly_sum(unsigned alpha, const Rat& T) {
    MarkerSum out;
    if (T == 1) {
        out.terms[Rat(1)] = faulhaber_poly(alpha);
        return out;
    }
    auto form = TdTForm::geometric(alpha);
    out.terms[T] = form.marker_poly(T);
    out.terms[Rat(1)] = {form.boundary(T)};
    return out;
}

MarkerSum chain_sum_closed(const std::vector<Rat>& T, const std::vector<std::vector<Rat>>& A) {
    if (T.empty() || T.size() != A.size()) throw std::invalid_argument("chain_sum_closed: bad input");
    std::map<Rat, std::vector<Rat>> state{{Rat(1), {Rat(1)}}};
    for (size_t i = 0; i < T.size(); ++i) {
        std::map<Rat, std::vector<Rat>> next;
        for (auto& [U, P] : state) {
            Rat V = U * T[i];
            auto [a, b] = sum_below(poly_mul(P, A[i]), V);
            poly_add(next[V], a);
            if (b != 0) poly_add(next[Rat(1)], {b});
        }
        state = std::move(next);
    }
    MarkerSum out;
    out.terms = std::move(state);
    return out;
}

std::map<long, std::vector<Rat>> chain_sum_exponents(long Q, const std::vector<long>& C) {
    std::map<long, std::vector<Rat>> state{{0, {Rat(1)}}};
    for (long c : C) {
        std::map<long, std::vector<Rat>> next;
        for (auto& [E, P] : state) {
            long V = E + c;
            auto [a, b] = sum_below(P, rpow(Rat(Q), V));
            poly_add(next[V], a);
            if (b != 0) poly_add(next[0], {b});
        }
        state = std::move(next);
    }
    return state;
}

ExactScalar faulhaber_twisted(unsigned l, unsigned N, long k, long lo, long hi) {
    bool trivial = N <= 1 || k % (long)N == 0;
    auto P = [&](long x) {
        ExactScalar acc(Rat(0), trivial ? 0 : N);
        for (unsigned m = 0; m <= l + 1; ++m) acc += bcoef(l, m, N, trivial ? 0 : k) * ExactScalar(rpow(Rat(x), m));
        return trivial ? acc : acc * ExactScalar::zeta_pow(N, k * x);
    };
    return P(hi) - P(lo);
}

std::vector<std::vector<int>> ordered_partitions(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d);
    // assign block labels; keep those whose labels form 0..B-1
    std::function<void(int)> rec = [&](int i) {
        if (i == d) {
            int B = 0;
            for (int x : cur) B = std::max(B, x + 1);
            std::vector<bool> used(B, false);
            for (int x : cur) used[x] = true;
            for (bool u : used)
                if (!u) return;
            out.push_back(cur);
            return;
        }
        for (int b = 0; b < d; ++b) {
            cur[i] = b;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

namespace {

// [r_i < r_j] (strict) or [r_i <= r_j]
using Atom = std::tuple<int, int, bool>;

struct Mono {
    std::vector<long> q;  // exponent of Q: const, a, v_0..v_{d-1}
    std::vector<int> u, r;
    std::vector<Atom> ind;
    bool operator<(const Mono& o) const { return std::tie(q, u, r, ind) < std::tie(o.q, o.u, o.r, o.ind); }
};
using Poly = std::map<Mono, Rat>;

void add_atom(Mono& m, const Atom& a) {
    auto it = std::lower_bound(m.ind.begin(), m.ind.end(), a);
    if (it == m.ind.end() || *it != a) m.ind.insert(it, a);
}

void put(Poly& P, const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = P.find(m);
    if (it == P.end()) {
        P.emplace(m, c);
    } else if ((it->second += c) == 0) {
        P.erase(it);
    }
}

// Boundary expressions for the u-range of the node being eliminated.
struct Bound {
    enum Kind { Zero, Top, UInd, Scaled } kind = Zero;
    int j = -1;  // neighbour
    Atom atom{};
};

// Adds c * base * X^m to P, node i being eliminated.
void add_power(Poly& P, const Mono& base, const Rat& c, const Bound& X, int i, int m) {
    switch (X.kind) {
        case Bound::Zero:
            return;
        case Bound::Top: {
            Mono t = base;
            t.q[0] -= m;
            t.q[1] += m;
            t.q[2 + i] -= m;
            put(P, t, c);
            return;
        }
        case Bound::UInd:
            for (int k = 0; k <= m; ++k) {
                Mono t = base;
                t.u[X.j] += k;
                if (m - k > 0) add_atom(t, X.atom);
                put(P, t, c * Rat(binom(m, k)));
            }
            return;
        case Bound::Scaled:
            // (Q^{v_j - v_i - 1} (Q u_j + r_j))^m
            for (int k = 0; k <= m; ++k) {
                Mono t = base;
                t.q[0] += -m + k;
                t.q[2 + X.j] += m;
                t.q[2 + i] -= m;
                t.u[X.j] += k;
                t.r[X.j] += m - k;
                put(P, t, c * Rat(binom(m, k)));
            }
            return;
    }
}

Rat r_sum(const Mono& m, long Q, const std::vector<std::vector<int>>& orders,
          std::map<std::vector<int>, Rat>& cache) {
    Rat total = 0;
    int d = (int)m.r.size();
    for (auto& ord : orders) {
        bool ok = true;
        for (auto& [i, j, strict] : m.ind)
            if (strict ? !(ord[i] < ord[j]) : !(ord[i] <= ord[j])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        int B = 0;
        for (int x : ord) B = std::max(B, x + 1);
        std::vector<int> e(B, 0);
        for (int i = 0; i < d; ++i) e[ord[i]] -= m.r[i];
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, har_localized_rat(Q, e)).first;
        total += it->second;
    }
    return total;
}

}  // namespace

ExpansionPoly<Rat> eliminate_pattern(const std::vector<int>& n, const std::vector<int>& l,
                                     const std::vector<int>& pattern, long Q) {
    int d = (int)n.size();
    if (d == 0 || (int)l.size() != d || (int)pattern.size() != d)
        throw std::invalid_argument("eliminate_pattern: bad input");
    Mono m0;
    m0.q.assign(d + 2, 0);
    m0.u = l;
    m0.r.assign(d, 0);
    Rat c0 = 1;
    for (int i = 0; i < d; ++i) {
        c0 *= Rat(binom(-n[i], l[i]));
        m0.q[0] += l[i];
        m0.q[1] += n[i];
        m0.q[2 + i] -= n[i];
        m0.r[i] = -n[i] - l[i];
    }
    Poly P;
    put(P, m0, c0);

    // minimum valuation first, ties to the lowest index
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return pattern[x] < pattern[y]; });
    std::vector<bool> alive(d, true);
    for (int i : order) {
        int j = -1, k = -1;
        for (int t = i - 1; t >= 0; --t)
            if (alive[t]) {
                j = t;
                break;
            }
        for (int t = i + 1; t < d; ++t)
            if (alive[t]) {
                k = t;
                break;
            }
        Bound lo, hi;
        if (j >= 0) {
            lo.j = j;
            if (pattern[j] == pattern[i]) {
                lo.kind = Bound::UInd;
                lo.atom = Atom{i, j, false};  // u_i >= u_j + [r_j >= r_i]
            } else {
                lo.kind = Bound::Scaled;
            }
        }
        if (k >= 0) {
            hi.j = k;
            if (pattern[k] == pattern[i]) {
                hi.kind = Bound::UInd;
                hi.atom = Atom{i, k, true};  // u_i <= u_k - 1 + [r_i < r_k]
            } else {
                hi.kind = Bound::Scaled;
            }
        } else {
            hi.kind = Bound::Top;
        }
        Poly next;
        for (auto& [m, c] : P) {
            int e = m.u[i];
            const auto& F = faulhaber_poly(e);
            Mono base = m;
            base.u[i] = 0;
            for (int mm = 1; mm < (int)F.size(); ++mm) {
                if (F[mm] == 0) continue;
                add_power(next, base, c * F[mm], hi, i, mm);
                add_power(next, base, -c * F[mm], lo, i, mm);
            }
        }
        P = std::move(next);
        alive[i] = false;
    }

    // r-sums, then collect by the Q-exponent form
    auto orders = ordered_partitions(d);
    std::map<std::vector<int>, Rat> rcache;
    std::map<std::vector<long>, Rat> byq;
    for (auto& [m, c] : P) {
        Rat s = r_sum(m, Q, orders, rcache);
        if (s == 0) continue;
        byq[m.q] += c * s;
    }

    // v-sums over 0 <= w_1 < ... < w_B < a
    int B = 0;
    for (int x : pattern) B = std::max(B, x + 1);
    ExpansionPoly<Rat> out;
    for (auto& [q, c] : byq) {
        if (c == 0) continue;
        std::vector<long> C(B, 0);
        for (int i = 0; i < d; ++i) C[pattern[i]] += q[2 + i];
        auto chain = chain_sum_exponents(Q, C);
        Rat pre = c * rpow(Rat(Q), q[0]);
        for (auto& [E, poly] : chain)
            for (size_t jdeg = 0; jdeg < poly.size(); ++jdeg)
                if (poly[jdeg] != 0) out.add(q[1] + E, (int)jdeg, pre * poly[jdeg]);
    }
    out.prune();
    return out;
}

ExpansionPoly<Rat> sum_over_valuations(const std::vector<int>& n, const std::vector<int>& l, long Q) {
    ExpansionPoly<Rat> out;
    for (auto& pat : ordered_partitions((int)n.size())) out += eliminate_pattern(n, l, pat, Q);
    out.prune();
    return out;
}

namespace {

void compositions(int d, int s, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == d - 1) {
        cur.push_back(s);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= s; ++x) {
        cur.push_back(x);
        compositions(d, s - x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SeriesExpansion series_expansion(const HarmonicWord& w, unsigned long p, int alpha0, int L) {
    if (w.depth() > 3) throw std::invalid_argument("series_expansion: depth > 3 unsupported");
    SeriesExpansion S;
    S.L = L;
    S.Q = (long)ipow(p, alpha0).get_si();
    S.weight = w.weight();
    for (int s = 0; s <= L; ++s) {
        std::vector<std::vector<int>> ls;
        std::vector<int> cur;
        compositions(w.depth(), s, cur, ls);
        ExpansionPoly<Rat> layer;
        for (auto& l : ls) layer += sum_over_valuations(w.n, l, S.Q);
        layer.prune();
        S.poly += layer;
        S.layers.push_back(std::move(layer));
    }
    S.poly.prune();
    return S;
}

Rat digit_enumeration(const std::vector<int>& n, long Q, long a, int L) {
    int d = (int)n.size();
    long top = (long)ipow(Q, a).get_si();
    struct Dig {
        long v, u, r;
    };
    auto dec = [&](long m) {
        long v = 0;
        while (m % Q == 0) {
            m /= Q;
            ++v;
        }
        return Dig{v, m / Q, m % Q};
    };
    // term(i, m) for each l_i, as a table over l
    auto term = [&](int i, long m, int li) -> Rat {
        Dig g = dec(m);
        return Rat(binom(-n[i], li)) * rpow(Rat(Q), (a - g.v) * n[i] + li) * rpow(Rat(g.u), li) *
               rpow(Rat(g.r), -n[i] - li);
    };
    Rat total = 0;
    std::vector<long> ms(d);
    std::function<void(int, long)> rec = [&](int i, long lo) {
        if (i == d) {
            // sum over l with |l| <= L
            std::function<Rat(int, int)> lsum = [&](int k, int budget) -> Rat {
                if (k == d) return Rat(1);
                Rat s = 0;
                for (int li = 0; li <= budget; ++li) {
                    if (li > 0 && dec(ms[k]).u == 0) break;
                    s += term(k, ms[k], li) * lsum(k + 1, budget - li);
                }
                return s;
            };
            total += lsum(0, L);
            return;
        }
        for (long m = lo; m < top; ++m) {
            ms[i] = m;
            rec(i + 1, m + 1);
        }
    };
    rec(0, 1);
    return total;
}

SeriesValue iter_har_series(const HarmonicWord& w, unsigned long p, int alpha0, int alpha, int target) {
    if (alpha0 < 1 || alpha % alpha0) throw std::invalid_argument("iter_har_series: alpha0 must divide alpha");
    long a = alpha / alpha0;
    int L = std::max(0, target - w.weight() - 1);
    auto S = series_expansion(w, p, alpha0, L);
    SeriesValue out;
    out.L = L;
    out.poly = S.poly;
    Rat v = eval_expansion(S.poly, S.Q, a);
    int prec = (int)S.value_certificate();
    if (a == 1) prec = std::max(prec, target);  // exact: only the l = 0 layer survives
    out.value = PadicScalar::from_rat(PadicField::get(p, 1), v, prec);
    return out;
}

Rat depth1_coeff(int n, int b, unsigned long p, int alpha0, int lmax) {
    long Q = (long)ipow(p, alpha0).get_si();
    Rat acc = 0;
    for (int l = std::max(0, b - 1); l <= lmax; ++l) {
        const auto& F = faulhaber_poly(l);
        if (b >= (int)F.size() || F[b] == 0) continue;
        acc += Rat(binom(-n, l)) * F[b] * har_rat(Q, {n + l});
    }
    return acc / (rpow(Rat(Q), n + b) - 1);
}

Rat depth1_constant(int n, unsigned long p, int alpha0, int lmax) {
    long Q = (long)ipow(p, alpha0).get_si();
    Rat acc = 0;
    for (int l = 0; l <= lmax; ++l) {
        const auto& F = faulhaber_poly(l);
        Rat inner = 0;
        for (int m = 1; m <= l + 1; ++m) inner += F[m] / (rpow(Rat(Q), n + m) - 1);
        acc -= Rat(binom(-n, l)) * har_rat(Q, {n + l}) * inner;
    }
    return acc;
}

long truncation_certificate(int n, int b, int L, unsigned long p) {
    long lg = 0;
    for (unsigned long t = p; t <= (unsigned long)(L + b + 1); t *= p) ++lg;
    return (long)n + b + L - 1 - lg;
}

FitResult fit_expansion(const std::map<long, Rat>& samples, long Q, long n_lo, long n_hi, int m_cap) {
    std::vector<std::pair<long, int>> cols;
    for (long n = n_lo; n <= n_hi; ++n)
        for (int m = 0; m <= m_cap; ++m) cols.push_back({n, m});
    return fit_expansion(samples, Q, cols);
}

FitResult fit_expansion(const std::map<long, Rat>& samples, long Q, const std::vector<std::pair<long, int>>& cols) {
    if (samples.empty()) return {};
    size_t U = cols.size();
    if (samples.size() < U) throw std::invalid_argument("fit_expansion: not enough samples");
    std::vector<std::vector<Rat>> M;
    std::vector<long> at;
    for (auto& [a, s] : samples) {
        std::vector<Rat> row;
        for (auto& [n, m] : cols) row.push_back(rpow(Rat(Q), n * a) * rpow(Rat(a), m));
        row.push_back(s);
        M.push_back(std::move(row));
        at.push_back(a);
    }
    size_t R = M.size();
    std::vector<size_t> pivrow(U);
    size_t r = 0;
    for (size_t c = 0; c < U; ++c) {
        size_t piv = r;
        while (piv < R && M[piv][c] == 0) ++piv;
        if (piv == R) throw std::invalid_argument("fit_expansion: singular system");
        std::swap(M[piv], M[r]);
        std::swap(at[piv], at[r]);
        for (size_t i = 0; i < R; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rat f = M[i][c] / M[r][c];
            for (size_t k = c; k <= U; ++k) M[i][k] -= f * M[r][k];
        }
        pivrow[c] = r++;
    }
    FitResult out;
    for (size_t c = 0; c < U; ++c) {
        Rat v = M[pivrow[c]][U] / M[pivrow[c]][c];
        if (v != 0) out.poly.terms[cols[c]] = v;
    }
    for (size_t i = U; i < R; ++i)
        if (M[i][U] != 0) {
            out.consistent = false;
            out.residual = M[i][U];
            out.residual_at = at[i];
            break;
        }
    return out;
}

}  // namespace pmzv
