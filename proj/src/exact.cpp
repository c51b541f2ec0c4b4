#include "pmzv/exact.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pmzv {

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

long vp(const Int& x, unsigned long p) {
    if (x == 0) throw std::domain_error("vp of zero");
    Int t = abs(x);
    long v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long vp(const Rat& x, unsigned long p) {
    return vp(Int(x.get_num()), p) - vp(Int(x.get_den()), p);
}

Int binom(long n, long k) {
    if (k < 0) return 0;
    Int r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), n, k);
        return r;
    }
    // C(n,k) = (-1)^k C(k-n-1, k)
    mpz_bin_uiui(r.get_mpz_t(), k - n - 1, k);
    return (k % 2) ? Int(-r) : r;
}

Int ipow(unsigned long b, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

Rat rpow(const Rat& x, long e) {
    if (e == 0) return 1;
    Int n, d;
    unsigned long ae = e < 0 ? -e : e;
    mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), ae);
    mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), ae);
    Rat r = e > 0 ? Rat(n, d) : Rat(d, n);
    r.canonicalize();
    return r;
}

unsigned euler_phi(unsigned N) {
    unsigned r = N, n = N;
    for (unsigned f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            while (n % f == 0) n /= f;
            r -= r / f;
        }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

using IPoly = std::vector<Int>;

IPoly poly_divexact(IPoly a, const IPoly& b) {
    IPoly q(a.size() - b.size() + 1);
    for (size_t i = q.size(); i-- > 0;) {
        q[i] = a[i + b.size() - 1] / b.back();
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
    return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(unsigned N) {
    static std::mutex mu;
    static std::map<unsigned, IPoly> cache;
    std::lock_guard<std::mutex> lk(mu);
    for (unsigned d = 1; d <= N; ++d) {
        if (N % d || cache.count(d)) continue;
        IPoly num(d + 1);
        num[0] = -1;
        num[d] = 1;
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) num = poly_divexact(num, cache.at(e));
        cache.emplace(d, num);
    }
    return cache.at(N);
}

ExactScalar::ExactScalar(const Rat& r, unsigned N) : N_(N) {
    c_.assign(N <= 1 ? 1 : euler_phi(N), Rat(0));
    c_[0] = r;
    c_[0].canonicalize();
}

ExactScalar ExactScalar::zeta_pow(unsigned N, long k) {
    if (N == 0) throw std::invalid_argument("zeta_pow needs N >= 1");
    long e = ((k % (long)N) + N) % N;
    ExactScalar z(Rat(0), N);
    z.c_.assign(std::max<size_t>(e + 1, z.c_.size()), Rat(0));
    z.c_[e] = 1;
    z.reduce();
    return z;
}

void ExactScalar::lift_to(unsigned N) {
    if (N_ == N || N == 0) return;
    if (N_ != 0) throw std::invalid_argument("cyclotomic order mismatch");
    N_ = N;
    c_.resize(N <= 1 ? 1 : euler_phi(N), Rat(0));
}

void ExactScalar::reduce() {
    size_t deg = N_ <= 1 ? 1 : euler_phi(N_);
    if (c_.size() <= deg) {
        c_.resize(deg, Rat(0));
        return;
    }
    if (N_ <= 1) {
        // N == 1: zeta = 1
        Rat s = 0;
        for (auto& x : c_) s += x;
        c_.assign(1, s);
        return;
    }
    const auto& f = cyclotomic_poly(N_);
    for (size_t i = c_.size(); i-- > deg;) {
        if (c_[i] == 0) continue;
        Rat t = c_[i];
        for (size_t j = 0; j <= deg; ++j) c_[i - deg + j] -= t * f[j];
    }
    c_.resize(deg);
}

bool ExactScalar::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool ExactScalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat ExactScalar::rational() const {
    if (!is_rational()) throw std::domain_error("not rational");
    return c_[0];
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    if (o.N_ == 0) {
        c_[0] += o.c_[0];
        return *this;
    }
    lift_to(o.N_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    if (o.N_ == 0 || o.c_.size() == 1) {
        Rat s = o.c_[0];
        if (o.N_ && o.N_ != N_) lift_to(o.N_);
        for (auto& x : c_) x *= s;
        return *this;
    }
    if (N_ == 0 || c_.size() == 1) {
        Rat s = c_[0];
        *this = o;
        for (auto& x : c_) x *= s;
        return *this;
    }
    if (N_ != o.N_) throw std::invalid_argument("cyclotomic order mismatch");
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    reduce();
    return *this;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    size_t n = c_.size();
    if (n == 1) return ExactScalar(1 / c_[0], N_);
    // columns: coordinates of this * z^j
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, Rat(0)));
    for (size_t j = 0; j < n; ++j) {
        ExactScalar col = *this * zeta_pow(N_, j);
        for (size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (m[piv][c] == 0) ++piv;
        std::swap(m[piv], m[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    ExactScalar x(Rat(0), N_);
    for (size_t i = 0; i < n; ++i) x.c_[i] = m[i][n] / m[i][i];
    return x;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar d = a - b;
    return d.is_zero();
}

std::string ExactScalar::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + rat_str(c_[i]) + ")";
        if (i) s += "*z^" + std::to_string(i);
    }
    return s;
}

}  // namespace pmzv
