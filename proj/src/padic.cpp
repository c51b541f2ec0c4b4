#include "pmzv/padic.hpp"

#include <climits>
#include <map>
#include <numeric>
#include <tuple>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace pmzv {

namespace {

Int modp(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Multiply polynomials over Z/m modulo the monic g.
std::vector<Int> polymulmod(const std::vector<Int>& a, const std::vector<Int>& b,
                            const std::vector<Int>& g, const Int& m) {
    size_t d = g.size() - 1;
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (size_t i = r.size(); i-- > d;) {
        if (r[i] == 0) continue;
        Int t = r[i];
        for (size_t j = 0; j <= d; ++j) r[i - d + j] -= t * g[j];
    }
    r.resize(d, Int(0));
    for (auto& x : r) x = modp(x, m);
    return r;
}

std::vector<Int> polypowmod(std::vector<Int> b, Int e, const std::vector<Int>& g, const Int& m) {
    std::vector<Int> r(g.size() - 1, Int(0));
    r[0] = 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = polymulmod(r, b, g, m);
        b = polymulmod(b, b, g, m);
        e >>= 1;
    }
    return r;
}

unsigned mult_order(unsigned long p, unsigned N) {
    if (N <= 1) return 1;
    unsigned o = 1;
    unsigned long x = p % N;
    while (x != 1) {
        x = x * p % N;
        ++o;
    }
    return o;
}

bool divides_mod_p(std::vector<Int> a, const std::vector<Int>& g, unsigned long p) {
    Int P = p;
    size_t d = g.size() - 1;
    for (size_t i = a.size(); i-- > d;) {
        Int t = modp(a[i], P);
        if (t == 0) continue;
        for (size_t j = 0; j <= d; ++j) a[i - d + j] -= t * g[j];
    }
    for (size_t i = 0; i < std::min(d, a.size()); ++i)
        if (modp(a[i], P) != 0) return false;
    return true;
}

std::unique_ptr<PadicField> build_field(unsigned long p, unsigned N, int M) {
    if (N == 0 || std::gcd((unsigned long)N, p) != 1) throw std::invalid_argument("need gcd(p, N) = 1");
    auto F = std::make_unique<PadicField>();
    F->p = p;
    F->N = N;
    F->deg = mult_order(p, N);
    F->M = M;
    F->pM = ipow(p, M);
    unsigned d = F->deg;
    if (N == 1) {
        F->f = {Int(-1), Int(1)};
        F->frob = {{Int(1)}};
        return F;
    }
    // monic degree-d factor g of Phi_N over F_p, by search
    const auto& phi = cyclotomic_poly(N);
    Int count = ipow(p, d);
    if (count > 2000000) throw std::invalid_argument("residue field too large for factor search");
    std::vector<Int> g;
    for (unsigned long idx = 0; idx < count.get_ui(); ++idx) {
        std::vector<Int> cand(d + 1);
        unsigned long t = idx;
        for (unsigned i = 0; i < d; ++i) {
            cand[i] = t % p;
            t /= p;
        }
        cand[d] = 1;
        if (divides_mod_p(phi, cand, p)) {
            g = cand;
            break;
        }
    }
    if (g.empty()) throw std::logic_error("no factor of the cyclotomic polynomial found");
    // Teichmueller lift of x in (Z/p^M)[x]/(g)
    std::vector<Int> t(d, Int(0));
    if (d == 1) t[0] = modp(-g[0], F->pM);
    else t[1] = 1;
    Int q = ipow(p, d);
    for (int i = 0; i < M + 1; ++i) t = polypowmod(t, q, g, F->pM);
    // f(Y) = prod_i (Y - t^{p^i}); coefficients are elements of the ring above
    std::vector<std::vector<Int>> fy{std::vector<Int>(d, Int(0))};
    fy[0][0] = 1;
    std::vector<Int> ti = t;
    for (unsigned i = 0; i < d; ++i) {
        std::vector<std::vector<Int>> nf(fy.size() + 1, std::vector<Int>(d, Int(0)));
        for (size_t k = 0; k < fy.size(); ++k) {
            auto prod = polymulmod(fy[k], ti, g, F->pM);
            for (unsigned c = 0; c < d; ++c) {
                nf[k + 1][c] = modp(nf[k + 1][c] + fy[k][c], F->pM);
                nf[k][c] = modp(nf[k][c] - prod[c], F->pM);
            }
        }
        fy = std::move(nf);
        ti = polypowmod(ti, Int(p), g, F->pM);
    }
    F->f.resize(d + 1);
    for (unsigned k = 0; k <= d; ++k) {
        for (unsigned c = 1; c < d; ++c)
            if (fy[k][c] != 0) throw std::logic_error("minimal polynomial not over Z_p");
        F->f[k] = fy[k][0];
    }
    F->frob.resize(d);
    for (unsigned i = 0; i < d; ++i) {
        std::vector<Int> x(d, Int(0));
        if (d == 1) x[0] = modp(-F->f[0], F->pM);
        else x[1] = 1;
        F->frob[i] = polypowmod(x, Int((unsigned long)p * i), F->f, F->pM);
    }
    return F;
}

}  // namespace

const PadicField& PadicField::get(unsigned long p, unsigned N, int M) {
    static std::mutex mu;
    static std::map<std::tuple<unsigned long, unsigned, int>, std::unique_ptr<PadicField>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_tuple(p, N, M);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_field(p, N, M)).first;
    return *it->second;
}

std::vector<Int> PadicField::reduce(std::vector<Int> a, const Int& mod) const {
    size_t d = deg;
    for (size_t i = a.size(); i-- > d;) {
        if (a[i] == 0) continue;
        Int t = a[i];
        for (size_t j = 0; j <= d; ++j) a[i - d + j] -= t * f[j];
    }
    a.resize(d, Int(0));
    for (auto& x : a) x = modp(x, mod);
    return a;
}

std::vector<Int> PadicField::mul(const std::vector<Int>& a, const std::vector<Int>& b, const Int& mod) const {
    if (deg == 1) return {modp(a[0] * b[0], mod)};
    return polymulmod(a, b, f, mod);
}

PadicScalar PadicScalar::zero(const PadicField& F, int prec) {
    PadicScalar z;
    z.F_ = &F;
    z.val_ = z.prec_ = prec;
    return z;
}

PadicScalar PadicScalar::normalized(const PadicField* F, std::vector<Int> c, int v0, int prec) {
    int rel = std::min(prec - v0, F->M);
    prec = v0 + rel;
    if (rel <= 0) return zero(*F, prec);
    Int mod = ipow(F->p, rel);
    c = F->reduce(std::move(c), mod);
    long t = -1;
    for (auto& x : c)
        if (x != 0) {
            long v = vp(x, F->p);
            if (t < 0 || v < t) t = v;
        }
    if (t < 0) return zero(*F, prec);
    PadicScalar r;
    r.F_ = F;
    r.prec_ = prec;
    r.val_ = v0 + (int)t;
    if (t > 0) {
        Int pt = ipow(F->p, t);
        for (auto& x : c) x /= pt;
    }
    r.u_ = std::move(c);
    return r;
}

PadicScalar PadicScalar::from_rat(const PadicField& F, const Rat& x0, int prec) {
    Rat x = x0;
    x.canonicalize();
    if (x == 0) return zero(F, prec);
    long v = vp(x, F.p);
    Int pv = ipow(F.p, v < 0 ? -v : v);
    Int num = x.get_num(), den = x.get_den();
    if (v > 0) num /= pv;
    if (v < 0) den /= pv;
    int rel = std::min<int>(prec - v, F.M);
    if (rel <= 0) return zero(F, prec);
    Int mod = ipow(F.p, rel), inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    std::vector<Int> c(F.deg, Int(0));
    c[0] = modp(num * inv, mod);
    return normalized(&F, std::move(c), (int)v, prec);
}

PadicScalar PadicScalar::embed(const ExactScalar& x, const PadicField& F, int prec) {
    if (x.is_rational()) return from_rat(F, x.rational(), prec);
    if (x.order() != F.N) throw std::invalid_argument("embed: cyclotomic order mismatch");
    const auto& c = x.coords();
    long v0 = LONG_MAX;
    for (auto& r : c)
        if (r != 0) v0 = std::min(v0, vp(r, F.p));
    int rel = std::min<int>(prec - v0, F.M);
    if (rel <= 0) return zero(F, prec);
    Int mod = ipow(F.p, rel);
    std::vector<Int> out(c.size(), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long vi = vp(c[i], F.p);
        Rat s = c[i] / rpow(Rat(F.p), vi);
        Int inv, den = s.get_den();
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
        out[i] = modp(Int(s.get_num()) * inv * ipow(F.p, vi - v0), mod);
    }
    // powers of zeta beyond the field degree reduce modulo f
    return normalized(&F, std::move(out), (int)v0, prec);
}

PadicScalar PadicScalar::with_prec(int prec) const {
    if (prec >= prec_) return *this;
    if (!F_) {
        PadicScalar z;
        z.val_ = z.prec_ = prec;
        return z;
    }
    if (is_zero() || val_ >= prec) return zero(*F_, prec);
    return normalized(F_, u_, val_, prec);
}

PadicScalar PadicScalar::operator-() const {
    if (is_zero()) return *this;
    PadicScalar r = *this;
    Int mod = ipow(F_->p, prec_ - val_);
    for (auto& x : r.u_) x = modp(-x, mod);
    return r;
}

// Fields built for the same (p, N) agree up to their common modulus; keep the finer one.
void PadicScalar::adopt_field(const PadicScalar& o) {
    if (F_ == o.F_) return;
    if (F_->p != o.F_->p || F_->N != o.F_->N) throw std::invalid_argument("p-adic field mismatch");
    if (o.F_->M > F_->M) F_ = o.F_;
}

PadicScalar& PadicScalar::operator+=(const PadicScalar& o) {
    if (!o.F_) return *this = with_prec(o.prec_);
    if (!F_) return *this = o.with_prec(prec_);
    adopt_field(o);
    int prec = std::min(prec_, o.prec_);
    if (o.is_zero()) return *this = with_prec(prec);
    if (is_zero()) return *this = o.with_prec(prec);
    int v0 = std::min(val_, o.val_);
    std::vector<Int> c(F_->deg, Int(0));
    Int sa = ipow(F_->p, val_ - v0), sb = ipow(F_->p, o.val_ - v0);
    for (unsigned i = 0; i < F_->deg; ++i) c[i] = u_[i] * sa + o.u_[i] * sb;
    return *this = normalized(F_, std::move(c), v0, prec);
}

PadicScalar& PadicScalar::operator*=(const PadicScalar& o) {
    if (!F_ || !o.F_) {
        const PadicScalar& z = !F_ ? *this : o;
        if (z.prec_ >= INT_MAX / 8) return *this = PadicScalar();
        const PadicScalar& w = !F_ ? o : *this;
        if (!w.F_) return *this = PadicScalar();
        return *this = zero(*w.F_, z.prec_ + w.val_);
    }
    adopt_field(o);
    int prec = std::min(prec_ + o.val_, o.prec_ + val_);
    if (is_zero() || o.is_zero()) return *this = zero(*F_, prec);
    int v = val_ + o.val_;
    int rel = std::min(prec - v, F_->M);
    Int mod = ipow(F_->p, rel);
    auto c = F_->mul(u_, o.u_, mod);
    return *this = normalized(F_, std::move(c), v, prec);
}

PadicScalar PadicScalar::inverse() const {
    if (is_zero()) throw std::domain_error("p-adic division by zero (at precision)");
    int rel = prec_ - val_;
    Int mod = ipow(F_->p, rel);
    std::vector<Int> x(F_->deg, Int(0));
    if (F_->deg == 1) {
        mpz_invert(x[0].get_mpz_t(), u_[0].get_mpz_t(), mod.get_mpz_t());
    } else {
        Int P = F_->p;
        x = polypowmod(u_, ipow(F_->p, F_->deg) - 2, F_->f, P);
        // Newton: x <- x (2 - u x)
        for (int k = 1; k < rel; k *= 2) {
            Int m2 = ipow(F_->p, std::min(2 * k, rel));
            auto ux = polymulmod(u_, x, F_->f, m2);
            for (auto& c : ux) c = -c;
            ux[0] += 2;
            x = polymulmod(x, ux, F_->f, m2);
        }
    }
    PadicScalar r;
    r.F_ = F_;
    r.val_ = -val_;
    r.prec_ = -val_ + rel;
    r.u_ = std::move(x);
    return r;
}

PadicScalar PadicScalar::sigma() const {
    if (!F_ || is_zero() || F_->deg == 1) return *this;
    Int mod = ipow(F_->p, prec_ - val_);
    std::vector<Int> c(F_->deg, Int(0));
    for (unsigned i = 0; i < F_->deg; ++i)
        for (unsigned j = 0; j < F_->deg; ++j) c[j] += u_[i] * F_->frob[i][j];
    return normalized(F_, std::move(c), val_, prec_);
}

std::vector<Int> PadicScalar::digits_base_p(size_t coord) const {
    std::vector<Int> out;
    if (is_zero()) return out;
    Int x = u_.at(coord);
    for (int i = 0; i < prec_ - val_; ++i) {
        out.push_back(modp(x, Int(F_->p)));
        x /= F_->p;
    }
    return out;
}

std::string PadicScalar::str() const {
    std::string s;
    if (is_zero()) return "O(p^" + std::to_string(prec_) + ")";
    for (size_t i = 0; i < u_.size(); ++i) {
        if (i) s += ",";
        s += u_[i].get_str();
    }
    if (u_.size() > 1) s = "[" + s + "]";
    return s + "*" + std::to_string(F_->p) + "^" + std::to_string(val_) + " + O(" +
           std::to_string(F_->p) + "^" + std::to_string(prec_) + ")";
}

int padic_agreement(const PadicScalar& a, const PadicScalar& b) { return (a - b).valuation(); }

}  // namespace pmzv
