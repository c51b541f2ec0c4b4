#include "pmzv/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "pmzv/harmonic.hpp"
#include "pmzv/ihara.hpp"
#include "pmzv/mhs.hpp"

namespace pmzv {

bool Report::pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::optional<std::string> Report::first_failure() const {
    for (auto& c : checks)
        if (!c.pass) return suite + "/" + c.name;
    return std::nullopt;
}

json report_json(const std::vector<Report>& rs) {
    if (rs.empty()) return json::object();
    json suites = json::array();
    std::optional<std::string> first;
    for (auto& r : rs) {
        json checks = json::array();
        for (auto& c : r.checks) {
            json j = {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
            if (c.cert >= 0) j["cert"] = c.cert;
            checks.push_back(j);
        }
        suites.push_back({{"suite", r.suite}, {"status", r.pass() ? "pass" : "fail"}, {"checks", checks}});
        if (!first) first = r.first_failure();
    }
    json out = {{"status", first ? "fail" : "pass"}, {"suites", suites}};
    if (first) out["first_failure"] = *first;
    return out;
}

std::string report_text(const std::vector<Report>& rs) {
    if (rs.empty()) return "no checks run\n";
    std::ostringstream os;
    for (auto& r : rs) {
        os << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
        for (auto& c : r.checks) {
            os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name;
            if (c.cert >= 0) os << " [cert " << c.cert << "]";
            if (!c.detail.empty()) os << "  " << c.detail;
            os << "\n";
        }
    }
    return os.str();
}

namespace {

using Ser = NCSeries<ExactScalar>;

// Counts outcomes of one property over many samples.
struct Tally {
    std::string name;
    int total = 0, failed = 0;
    long cert = -1;
    std::string first;
    void add(bool ok, const std::string& what = "") {
        ++total;
        if (!ok && failed++ == 0) first = what;
    }
    void bound(long c) { cert = cert < 0 ? c : std::min(cert, c); }
    Check check() const {
        Check c{name, failed == 0 && total > 0, cert, ""};
        c.detail = std::to_string(total - failed) + "/" + std::to_string(total) + " hold";
        if (failed) c.detail += "; first failure " + first;
        return c;
    }
};

template <class F>
Report timed(const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    Report r{name, body(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

unsigned long prime_of(const SuiteConfig& c, unsigned long dflt) { return c.primes.empty() ? dflt : c.primes[0]; }
int or_default(int v, int d) { return v > 0 ? v : d; }

PadicScalar qp(unsigned long p, const Rat& x, int prec) { return PadicScalar::from_rat(PadicField::get(p, 1), x, prec); }

long qpow(unsigned long p, long e) { return ipow(p, e).get_si(); }

std::vector<Ser> random_elements(const SuiteConfig& c, unsigned long p, int count, unsigned long salt) {
    std::mt19937_64 rng(c.seed + salt);
    ExactScalar one(Rat(1), c.N);
    std::vector<Ser> out;
    for (int i = 0; i < count; ++i) out.push_back(random_pi_tilde(rng, c.N, c.weight_cap, c.depth_cap, one, p));
    return out;
}

// Entry (n, d) of N(f) N(g) Lambda^sn D^sd, as valuations.
NormPoly norm_product(const NormPoly& a, const NormPoly& b, int W, int D, int sn = 0, int sd = 0) {
    NormPoly r;
    for (auto& [x, va] : a.v)
        for (auto& [y, vb] : b.v) {
            int n = x.first + y.first + sn, d = x.second + y.second + sd;
            if (n <= W && d <= D) r.absorb(n, d, va + vb);
        }
    return r;
}

// The weight-0 entry that N(unit) contributes to a product.
NormPoly with_unit(NormPoly a) {
    a.absorb(0, 0, 0);
    return a;
}

std::string word_label(const HarmonicWord& w) { return w.text(); }

}  // namespace

Report suite_stuffle(const SuiteConfig& c) {
    return timed("stuffle", [&] {
        long M = c.max_m > 0 ? c.max_m : 100;
        int W = or_default(c.max_weight, 4);
        auto words = all_harmonic_words(1, W, W);
        std::vector<std::pair<size_t, size_t>> pairs;
        std::map<std::vector<int>, HarmonicWord> needed;
        std::map<std::pair<size_t, size_t>, std::vector<HarmonicWord>> prods;
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = i; j < words.size(); ++j) {
                auto s = stuffle_set(words[i], words[j], 1);
                for (auto& w : s) needed.emplace(w.n, w);
                for (auto& w : {words[i], words[j]}) needed.emplace(w.n, w);
                prods[{i, j}] = std::move(s);
            }
        std::vector<long> ms;
        for (long m = 1; m <= M; ++m) ms.push_back(m);
        std::vector<HarmonicWord> all;
        for (auto& [k, w] : needed) all.push_back(w);
        HarTable T = har_table(ms, all);
        Tally t{"har(m,u) har(m,v) = sum over stuffle(u,v)"};
        for (auto& [ij, s] : prods)
            for (long m : ms) {
                Rat lhs = T.at({m, words[ij.first].n}) * T.at({m, words[ij.second].n}), rhs = 0;
                for (auto& w : s) rhs += T.at({m, w.n});
                t.add(lhs == rhs, "m=" + std::to_string(m) + " " + words[ij.first].text() + "*" + words[ij.second].text());
            }
        return std::vector<Check>{t.check()};
    });
}

Report suite_splitting(const SuiteConfig& c) {
    return timed("splitting", [&] {
        std::vector<unsigned long> ps = c.primes.empty() ? std::vector<unsigned long>{2, 3} : c.primes;
        long M = c.max_m > 0 ? c.max_m : 200;
        int target = or_default(c.precision, 8);
        auto words = all_harmonic_words(1, or_default(c.max_weight, 3), 2);
        std::vector<Check> out;
        for (unsigned long p : ps) {
            struct Item {
                long m;
                size_t w;
                bool ok;
                long cert;
            };
            std::vector<Item> items;
            // m = 1 is the empty sum
            for (long m = 2; m <= M; ++m)
                for (size_t i = 0; i < words.size(); ++i) items.push_back({m, i, false, 0});
#pragma omp parallel for schedule(dynamic)
            for (long k = 0; k < (long)items.size(); ++k) {
                auto& it = items[k];
                try {
                    SplitResult s = split_by_digits(it.m, words[it.w], p, target);
                    PadicScalar brute = qp(p, mhs_rat(it.m, words[it.w].n), target + 20);
                    it.cert = std::min<long>(s.value.prec(), padic_agreement(s.value, brute));
                    it.ok = it.cert >= target;
                } catch (const std::exception&) {
                    it.ok = false;
                }
            }
            Tally t{"split_by_digits = brute, p=" + std::to_string(p)};
            for (auto& it : items) {
                t.add(it.ok, "m=" + std::to_string(it.m) + " " + words[it.w].text());
                t.bound(it.cert);
            }
            out.push_back(t.check());
        }
        return out;
    });
}

Report suite_group(const SuiteConfig& c) {
    return timed("group", [&] {
        unsigned long p = prime_of(c, 3);
        auto g = random_elements(c, p, or_default(c.count, 50), 0);
        ExactScalar one(Rat(1), c.N), lam(Rat((long)p), c.N);
        Ser unit = Ser::unit(c.N, c.weight_cap, c.depth_cap, one);
        Tally tu{"unit"}, ta{"associativity"}, ti{"inverse"}, tc{"closure"}, t1{"graded action"},
            t2{"grading shift of Ad(e1)"}, t3{"graded adjoint action"}, tw{"Ad(e1) intertwines the products"};
        size_t n = g.size();
        for (size_t i = 0; i < n; ++i) {
            const Ser &a = g[i], &b = g[(i + 1) % n], &d = g[(i + 2) % n];
            std::string at = "#" + std::to_string(i);
            tu.add(ihara_mul(unit, a) == a && ihara_mul(a, unit) == a, at);
            Ser ab = ihara_mul(a, b);
            ta.add(ihara_mul(ab, d) == ihara_mul(a, ihara_mul(b, d)), at);
            Ser ai = ihara_inv(a);
            ti.add(ihara_mul(a, ai) == unit && ihara_mul(ai, a) == unit, at);
            tc.add(is_grouplike(ab), at);
            // g o tau(lambda) f = sum_n lambda^n g o tau_n f
            Ser lhs = ihara_mul(a, tau_scale(lam, b)), rhs(c.N, c.weight_cap, c.depth_cap, one);
            ExactScalar ln = one;
            for (int k = 0; k <= c.weight_cap; ++k, ln *= lam) rhs += ihara_mul(a, tau_n(k, b)).scaled(ln);
            t1.add(lhs == rhs, at);
            // tau_{n+1} Ad(e1) = Ad(e1) tau_n, in the form tau(lambda) Ad_f(e1) = lambda Ad_{tau(lambda) f}(e1)
            Ser Ab = ad_e1(b);
            bool ok2 = true;
            for (const Rat& x : {Rat((long)p), Rat(1, (long)p), Rat(-2)}) {
                ExactScalar l(x, c.N);
                ok2 = ok2 && tau_scale(l, Ab) == ad_e1(tau_scale(l, b)).scaled(l);
            }
            t2.add(ok2, at);
            // Ad_g o_Ad lambda^{-1} tau(lambda) Ad_f = sum_n lambda^n Ad_g o_Ad tau_{n+1} Ad_f
            Ser Aa = ad_e1(a);
            Ser l3 = adjoint_ihara(Aa, tau_ad(lam, Ab)), r3(c.N, c.weight_cap, c.depth_cap, one);
            ln = one;
            for (int k = 0; k < c.weight_cap; ++k, ln *= lam) r3 += adjoint_ihara(Aa, tau_n(k + 1, Ab)).scaled(ln);
            t3.add(l3 == r3, at);
            tw.add(ad_e1(ab) == adjoint_ihara(Aa, Ab), at);
        }
        return std::vector<Check>{tu.check(), ta.check(), ti.check(), tc.check(),
                                  t1.check(), t2.check(), t3.check(), tw.check()};
    });
}

Report suite_norms(const SuiteConfig& c) {
    return timed("norms", [&] {
        unsigned long p = prime_of(c, 3);
        auto g = random_elements(c, p, or_default(c.count, 50), 0);
        int W = c.weight_cap, D = c.depth_cap;
        ExactScalar one(Rat(1), c.N), lam(Rat((long)p), c.N);
        Ser unit = Ser::unit(c.N, W, D, one);
        Tally ts{"N(g o f) <= N(g) N(f)"}, tcm{"N(g f) <= N(g) N(f)"}, tad{"N(Ad_f(e1)) <= Lambda D N(f)"},
            tb{"N(Ad_{g o (1 + tau_n f)}(e1)) <= Lambda D N(g) N(f)"}, tt{"N(tau(lambda) f)(Lambda) = N(f)(lambda Lambda)"},
            te{"N(fix) = N(iter) = N(inv) = N(g)"};
        size_t n = g.size();
        for (size_t i = 0; i < n; ++i) {
            const Ser &a = g[i], &b = g[(i + 1) % n];
            std::string at = "#" + std::to_string(i);
            NormPoly na = norm_LD(a, p), nb = norm_LD(b, p);
            NormPoly prod = norm_product(with_unit(na), with_unit(nb), W, D);
            ts.add(norm_LD(ihara_mul(a, b), p).leq(prod), at);
            tcm.add(norm_LD(concat_mul(a, b), p).leq(prod), at);
            tad.add(norm_LD(ad_e1(b), p).leq(norm_product(with_unit(nb), NormPoly{{{{0, 0}, 0}}}, W, D, 1, 1)), at);
            bool okb = true;
            NormPoly bound = norm_product(with_unit(na), with_unit(nb), W, D, 1, 1);
            for (int k = 0; k <= W; ++k) {
                Ser f = k ? unit + tau_n(k, b) : unit;
                okb = okb && norm_LD(ad_e1(ihara_mul(a, f)), p).leq(bound);
            }
            tb.add(okb, at);
            NormPoly shifted;
            for (auto& [k, v] : nb.v) shifted.v[k] = v + k.first;
            tt.add(norm_LD(tau_scale(lam, b), p) == shifted, at);
            bool eq = norm_LD(fixed_point(lam, a, p), p) == na && norm_LD(iterate(3, lam, a), p) == na &&
                      norm_LD(ihara_inv(a), p) == na;
            te.add(eq, at);
        }
        return std::vector<Check>{ts.check(), tcm.check(), tad.check(), tb.check(), tt.check(), te.check()};
    });
}

Report suite_contraction(const SuiteConfig& c) {
    return timed("contraction", [&] {
        unsigned long p = prime_of(c, 3);
        int count = or_default(c.count, 20);
        auto g = random_elements(c, p, 3 * count, 1);
        ExactScalar lam(Rat((long)p), c.N), lam2 = lam * lam;
        Tally te{"equality at kappa = lambda"}, ts{"fails for |kappa| < |lambda|"}, tf{"fixed-point equation"},
            tl{"fixed point = 12 iterates"};
        for (int i = 0; i < count; ++i) {
            const Ser &h = g[3 * i], &f1 = g[3 * i + 1], &f2 = g[3 * i + 2];
            std::string at = "#" + std::to_string(i);
            std::function<Ser(const Ser&)> app = [&](const Ser& f) { return weighted_ihara(lam, h, f); };
            te.add(contraction_check(app, f1, f2, lam, p, true), at);
            ts.add(!contraction_check(app, f1, f2, lam2, p), at);
            Ser fix = fixed_point(lam, h, p);
            tf.add(weighted_ihara(lam, h, fix) == fix, at);
            // the weight-n part moves by lambda^{12 n} per fixed-point step
            Ser diff = fix - iterate(12, lam, h);
            long v = 1L << 20;
            for (auto& [w, x] : diff.terms())
                if (!x.is_zero()) v = std::min(v, ScalarOps<ExactScalar>::valuation(x, p));
            tl.add(v >= 12, at);
            tl.bound(v);
        }
        return std::vector<Check>{te.check(), ts.check(), tf.check(), tl.check()};
    });
}

Report suite_iter_structure(const SuiteConfig& c) {
    return timed("iter-structure", [&] {
        unsigned long p = prime_of(c, 3);
        auto g = random_elements(c, p, or_default(c.count, 5), 2);
        long Q = (long)p;
        ExactScalar lam(Rat(Q), c.N);
        Tally t{"fit on a = d+1..d+6 predicts a = d+7, d+8"};
        for (size_t i = 0; i < g.size(); ++i) {
            std::vector<Ser> it{Ser::unit(c.N, c.weight_cap, c.depth_cap, g[i].one())};
            for (int a = 1; a <= 10; ++a) it.push_back(weighted_ihara(lam, g[i], it.back()));
            for (const Word& w : all_words(c.N, c.weight_cap, 2)) {
                int d = w.depth(), n = w.weight();
                if (d == 0) continue;
                // Lambda-degrees {0, n} in depth 1, {0} u [2, n-2] u {n} in depth 2; no powers of a
                std::vector<std::pair<long, int>> cols{{0, 0}, {n, 0}};
                if (d == 2)
                    for (int k = 2; k <= n - 2; ++k) cols.push_back({k, 0});
                std::map<long, Rat> smp;
                for (int a = d + 1; a <= d + 6; ++a) smp[a] = it[a][w].rational();
                FitResult f = fit_expansion(smp, Q, cols);
                bool ok = f.consistent;
                for (int a = d + 7; a <= d + 8; ++a) ok = ok && eval_expansion(f.poly, Q, a) == it[a][w].rational();
                t.add(ok, "#" + std::to_string(i) + " " + word_text(w, c.N));
            }
        }
        return std::vector<Check>{t.check()};
    });
}

Report suite_series(const SuiteConfig& c, const std::vector<HarmonicWord>& words) {
    return timed("series", [&] {
        unsigned long p = prime_of(c, 3);
        int target = or_default(c.precision, 12);
        std::vector<int> alphas = c.alphas.empty() ? std::vector<int>{2, 3} : c.alphas;
        std::vector<Check> out;
        for (auto& w : words)
            for (int a : alphas) {
                SeriesValue s = iter_har_series(w, p, c.alpha0, a, target);
                PadicScalar brute = qp(p, har_rat(qpow(p, a), w.n), target + 20);
                long cert = std::min<long>(s.value.prec(), padic_agreement(s.value, brute));
                out.push_back({"har(" + std::to_string(p) + "^" + std::to_string(a) + ", " + word_label(w) + ")",
                               cert >= target, cert, "L=" + std::to_string(s.L)});
            }
        return out;
    });
}

Report suite_cross_alpha(const SuiteConfig& c) {
    return timed("cross-alpha", [&] {
        unsigned long p = prime_of(c, 3);
        int target = or_default(c.precision, 10), K = or_default(c.max_weight, 6);
        Tally t{"Ad_inf coefficients at base 1 and 2 agree"};
        for (int b = 0; b < K; ++b)
            for (int n = 1; b + n <= K; ++n) {
                PadicScalar a1 = ad_infinity_coeff(b, n, p, 1, target), a2 = ad_infinity_coeff(b, n, p, 2, target);
                long ag = padic_agreement(a1, a2);
                t.add(ag >= target, "b=" + std::to_string(b) + " n=" + std::to_string(n));
                t.bound(ag);
            }
        return std::vector<Check>{t.check()};
    });
}

Report suite_reconstruction(const SuiteConfig& c) {
    return timed("reconstruction", [&] {
        unsigned long p = prime_of(c, 3);
        int target = or_default(c.precision, 8), nmax = or_default(c.max_weight, 4);
        std::vector<int> alphas = c.alphas.empty() ? std::vector<int>{1, 2, 3} : c.alphas;
        std::vector<Check> out;
        for (int a : alphas) {
            int W = 6 + 12 / a;
            InfinityData D = infinity_data(p, c.alpha0, W, target + 6);
            PadicScalar lam = qp(p, Rat(ipow(p, a)), target + 30);
            Tally t{"har(" + std::to_string(p) + "^" + std::to_string(a) + ", (n)) from data at infinity"};
            for (int n = 1; n <= nmax; ++n) {
                HarmonicWord w({n});
                PadicScalar got = fixed_point_eval(D.A, D.h, lam, W - n - 1)[w.embed()];
                long ag = padic_agreement(got, qp(p, har_rat(qpow(p, a), {n}), target + 30));
                t.add(ag >= target, "n=" + std::to_string(n));
                t.bound(ag);
            }
            out.push_back(t.check());
        }
        // refit the engine values with the low degrees as free columns; they must come out zero
        Tally v{"Lambda-degrees 1..min(n)-1 vanish in the fitted expansion"};
        for (auto n : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
            SeriesExpansion S = series_expansion(HarmonicWord(n), p, c.alpha0, 3);
            int mn = *std::min_element(n.begin(), n.end());
            std::vector<std::pair<long, int>> cols;
            for (auto& [k, x] : S.poly.terms) cols.push_back(k);
            for (long k = 1; k < mn; ++k)
                for (int m = 0; m <= S.poly.max_m(); ++m)
                    if (!S.poly.terms.count({k, m})) cols.push_back({k, m});
            std::map<long, Rat> smp;
            for (long a = 1; a <= (long)cols.size() + 2; ++a) smp[a] = eval_expansion(S.poly, S.Q, a);
            FitResult f = fit_expansion(smp, S.Q, cols);
            bool ok = f.consistent;
            for (long k = 1; k < mn; ++k)
                for (int m = 0; m <= S.poly.max_m(); ++m) ok = ok && f.poly.coeff(k, m) == 0;
            v.add(ok, HarmonicWord(n).text());
        }
        out.push_back(v.check());
        return out;
    });
}

Report suite_three_way(const SuiteConfig& c, const std::vector<HarmonicWord>& words) {
    return timed("three-way", [&] {
        unsigned long p = prime_of(c, 3);
        int target = or_default(c.precision, 8);
        std::vector<int> alphas = c.alphas.empty() ? std::vector<int>{2, 3} : c.alphas;
        std::vector<Check> out;
        for (auto& w : words)
            for (auto& r : verify_three_way(w, p, c.alpha0, alphas, target)) {
                std::string d;
                for (auto& [k, v] : r.distance) d += (d.empty() ? "" : " ") + k + ":" + std::to_string(v);
                out.push_back({word_label(w) + " alpha=" + std::to_string(r.alpha), r.pass && r.min_cert >= target,
                               r.min_cert, d});
            }
        return out;
    });
}

Report suite_fitting(const SuiteConfig& c) {
    return timed("fitting", [&] {
        std::mt19937_64 rng(c.seed + 3);
        std::uniform_int_distribution<int> num(-20, 20), den(1, 6), deg(0, 5), mm(0, 2), cnt(1, 6);
        long Q = (long)prime_of(c, 3);
        Tally rt{"synthetic expansions round-trip"}, rj{"perturbed samples are rejected"};
        for (int t = 0; t < or_default(c.count, 20); ++t) {
            ExpansionPoly<Rat> E;
            int k = cnt(rng);
            while ((int)E.terms.size() < k) {
                int nn = deg(rng), m = mm(rng), a = num(rng);
                Rat x(a, den(rng));
                x.canonicalize();
                if (a) E.terms[{nn, m}] = x;
            }
            std::vector<std::pair<long, int>> cols;
            for (long nn = 0; nn <= 5; ++nn)
                for (int m = 0; m <= 2; ++m) cols.push_back({nn, m});
            std::map<long, Rat> smp;
            for (long a = 1; a <= (long)cols.size() + 2; ++a) smp[a] = eval_expansion(E, Q, a);
            FitResult f = fit_expansion(smp, Q, cols);
            rt.add(f.consistent && f.poly.terms == E.terms, "#" + std::to_string(t));
            smp[(long)cols.size() + 1] += Rat(1, 7);
            FitResult g = fit_expansion(smp, Q, cols);
            rj.add(!g.consistent && g.residual != 0, "#" + std::to_string(t));
        }
        return std::vector<Check>{rt.check(), rj.check()};
    });
}

Report suite_overdetermination(const SuiteConfig& c) {
    return timed("zeta-overdetermination", [&] {
        unsigned long p = prime_of(c, 3);
        int target = or_default(c.precision, 8);
        std::vector<Check> out;
        for (int k = 2; k <= or_default(c.max_weight, 7); ++k) {
            ZetaResult z = zeta_depth1(k, p, c.alpha0, target);
            long cert = std::min<long>(z.worst_agreement, z.combined.cert);
            out.push_back({"zeta(" + std::to_string(k) + ") over " + std::to_string(z.parts.size()) + " decompositions",
                           z.consistent && cert >= target, cert, ""});
        }
        return out;
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"stuffle",        "norms",    "group",      "contraction",
                                                "iter-structure", "three-way", "cross-alpha", "splitting",
                                                "series",         "reconstruction", "fitting", "zeta-overdetermination"};
    return names;
}

Report run_suite(const std::string& name, const SuiteConfig& c) {
    if (name == "stuffle") return suite_stuffle(c);
    if (name == "norms") return suite_norms(c);
    if (name == "group") return suite_group(c);
    if (name == "contraction") return suite_contraction(c);
    if (name == "iter-structure") return suite_iter_structure(c);
    if (name == "three-way") return suite_three_way(c, {HarmonicWord({1}), HarmonicWord({2}), HarmonicWord({1, 1})});
    if (name == "cross-alpha") return suite_cross_alpha(c);
    if (name == "splitting") return suite_splitting(c);
    if (name == "series") return suite_series(c, {HarmonicWord({1}), HarmonicWord({2}), HarmonicWord({3})});
    if (name == "reconstruction") return suite_reconstruction(c);
    if (name == "fitting") return suite_fitting(c);
    if (name == "zeta-overdetermination") return suite_overdetermination(c);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace pmzv
