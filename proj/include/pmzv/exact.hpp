#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pmzv {

using Rat = mpq_class;
using Int = mpz_class;

Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& x);

// v_p of a nonzero rational; throws on zero.
long vp(const Rat& x, unsigned long p);
long vp(const Int& x, unsigned long p);

Int binom(long n, long k);              // n may be negative
Rat rpow(const Rat& x, long e);         // e may be negative
Int ipow(unsigned long b, unsigned long e);

// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
const std::vector<Int>& cyclotomic_poly(unsigned N);
unsigned euler_phi(unsigned N);

// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}.
// N == 0 marks a context-free constant (only coords[0] used) that adopts
// the cyclotomic order of whatever it is combined with.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(const Rat& r, unsigned N = 0);
    ExactScalar(long v) : ExactScalar(Rat(v)) {}

    static ExactScalar zeta_pow(unsigned N, long k);

    unsigned order() const { return N_; }
    const std::vector<Rat>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational() const;  // throws unless is_rational()

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }
    ExactScalar operator-() const;
    ExactScalar inverse() const;

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b);
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    std::string str() const;

private:
    void lift_to(unsigned N);
    void reduce();
    unsigned N_ = 0;
    std::vector<Rat> c_{Rat(0)};
};

}  // namespace pmzv
