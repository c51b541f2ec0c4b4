#include "pmzv/faulhaber.hpp"

#include <mutex>
#include <stdexcept>

namespace pmzv {

Rat bernoulli(unsigned k) {
    static std::mutex mu;
    static std::vector<Rat> B{Rat(1)};
    std::lock_guard<std::mutex> lk(mu);
    while (B.size() <= k) {
        unsigned n = B.size();
        // sum_{j<=n} C(n+1, j) B_j = 0
        Rat s = 0;
        for (unsigned j = 0; j < n; ++j) s += Rat(binom(n + 1, j)) * B[j];
        B.push_back(-s / Rat(n + 1));
    }
    return B[k];
}

const std::vector<Rat>& faulhaber_poly(unsigned l) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<Rat>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(l);
        if (it != cache.end()) return it->second;
    }
    std::vector<Rat> c(l + 2, Rat(0));
    for (unsigned m = 1; m <= l + 1; ++m)
        c[m] = Rat(binom(l + 1, m)) * bernoulli(l + 1 - m) / Rat(l + 1);
    // defining identity on n = 1..l+3
    for (long n = 1; n <= (long)l + 3; ++n) {
        Rat lhs = 0, rhs = 0, np = 1;
        for (long j = 0; j < n; ++j) lhs += rpow(Rat(j), l);
        for (auto& x : c) {
            rhs += x * np;
            np *= n;
        }
        if (lhs != rhs) throw std::logic_error("faulhaber table check failed");
    }
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(l, std::move(c)).first->second;
}

TdTForm TdTForm::geometric(unsigned alpha) {
    TdTForm f;
    f.terms[{1, 0, 1}] = {Rat(1)};
    f.terms[{0, 0, 1}] = {Rat(-1)};
    auto add = [](auto& dst, std::tuple<int, int, int> key, const std::vector<Rat>& c,
                  const Rat& s, int shift) {
        auto& v = dst[key];
        if (v.size() < c.size() + shift) v.resize(c.size() + shift, Rat(0));
        for (size_t i = 0; i < c.size(); ++i) v[i + shift] += s * c[i];
    };
    for (unsigned it = 0; it < alpha; ++it) {
        std::map<std::tuple<int, int, int>, std::vector<Rat>> nt;
        for (auto& [key, c] : f.terms) {
            auto [e, j, k] = key;
            // T d/dT (T^M)^e T^j (T-1)^{-k}
            if (e) add(nt, key, c, Rat(1), 1);
            if (j) add(nt, key, c, Rat(j), 0);
            if (k) add(nt, {e, j + 1, k + 1}, c, Rat(-k), 0);
        }
        for (auto it2 = nt.begin(); it2 != nt.end();) {
            bool z = true;
            for (auto& x : it2->second) z = z && x == 0;
            it2 = z ? nt.erase(it2) : std::next(it2);
        }
        f.terms = std::move(nt);
    }
    return f;
}

ExactScalar bcoef(unsigned l, unsigned m, unsigned N, long k) {
    if (m > l + 1) throw std::invalid_argument("bcoef: m > l+1");
    bool trivial = N <= 1 || ((k % (long)N) + N) % N == 0;
    if (trivial) return ExactScalar(faulhaber_poly(l)[m], N);

    static std::mutex mu;
    static std::map<std::tuple<unsigned, unsigned, long>, std::vector<ExactScalar>> cache;
    long kk = ((k % (long)N) + N) % N;
    std::tuple<unsigned, unsigned, long> key{l, N, kk};
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return m < it->second.size() ? it->second[m] : ExactScalar(Rat(0), N);
    }
    ExactScalar xi = ExactScalar::zeta_pow(N, kk);
    auto P = twisted_faulhaber(l, xi);
    P.resize(l + 2, ExactScalar(Rat(0), N));
    // sum_{j<n} xi^j j^l == xi^n P(n) - P(0) for n = 1..l+3
    for (long n = 1; n <= (long)l + 3; ++n) {
        ExactScalar lhs(Rat(0), N), rhs(Rat(0), N), np(Rat(1), N);
        for (long j = 0; j < n; ++j) lhs += ExactScalar::zeta_pow(N, kk * j) * ExactScalar(rpow(Rat(j), l));
        for (auto& c : P) {
            rhs += c * np;
            np *= ExactScalar(Rat(n));
        }
        rhs = ExactScalar::zeta_pow(N, kk * n) * rhs - P[0];
        if (lhs != rhs) throw std::logic_error("twisted faulhaber check failed");
    }
    std::lock_guard<std::mutex> lk(mu);
    auto& v = cache.emplace(key, P).first->second;
    return v[m];
}

}  // namespace pmzv
