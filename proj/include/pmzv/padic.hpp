#pragma once

#include <climits>
#include <string>
#include <vector>

#include "pmzv/exact.hpp"

namespace pmzv {

// K = Q_p(mu_N) realized as Q_p[X]/(f), f the Hensel-lifted minimal
// polynomial of a Teichmueller N-th root of unity; zeta = X.
struct PadicField {
    unsigned long p;
    unsigned N;
    unsigned deg;  // residue degree: order of p mod N
    int M;         // f and the Frobenius table are known mod p^M
    Int pM;
    std::vector<Int> f;                   // monic, low degree first
    std::vector<std::vector<Int>> frob;  // frob[i] = X^{p i} mod f

    static const PadicField& get(unsigned long p, unsigned N, int M = 64);

    std::vector<Int> reduce(std::vector<Int> a, const Int& mod) const;
    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b, const Int& mod) const;
};

// Absolute-precision p-adic element: value known mod p^prec.
// A default-constructed value is an exact, field-less zero.
class PadicScalar {
public:
    PadicScalar() = default;

    static PadicScalar zero(const PadicField& F, int prec);
    static PadicScalar from_rat(const PadicField& F, const Rat& x, int prec);
    static PadicScalar embed(const ExactScalar& x, const PadicField& F, int prec);

    const PadicField* field() const { return F_; }
    bool is_zero() const { return u_.empty(); }
    int valuation() const { return val_; }  // equals prec() for zero
    int prec() const { return prec_; }
    const std::vector<Int>& unit() const { return u_; }

    PadicScalar with_prec(int prec) const;  // lowers precision only
    PadicScalar sigma() const;
    PadicScalar inverse() const;
    PadicScalar operator-() const;

    PadicScalar& operator+=(const PadicScalar& o);
    PadicScalar& operator-=(const PadicScalar& o) { return *this += -o; }
    PadicScalar& operator*=(const PadicScalar& o);
    PadicScalar& operator/=(const PadicScalar& o) { return *this *= o.inverse(); }
    friend PadicScalar operator+(PadicScalar a, const PadicScalar& b) { return a += b; }
    friend PadicScalar operator-(PadicScalar a, const PadicScalar& b) { return a -= b; }
    friend PadicScalar operator*(PadicScalar a, const PadicScalar& b) { return a *= b; }
    friend PadicScalar operator/(PadicScalar a, const PadicScalar& b) { return a /= b; }

    // Equality at the joint precision.
    friend bool operator==(const PadicScalar& a, const PadicScalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const PadicScalar& a, const PadicScalar& b) { return !(a == b); }

    // Representative of the value as an integer coordinate vector times p^val.
    std::vector<Int> digits_base_p(size_t coord) const;
    std::string str() const;

private:
    void adopt_field(const PadicScalar& o);
    static PadicScalar normalized(const PadicField* F, std::vector<Int> c, int v0, int prec);
    const PadicField* F_ = nullptr;
    int val_ = INT_MAX / 4;
    int prec_ = INT_MAX / 4;
    std::vector<Int> u_;
};

// Minimum of v_p(a - b) and the joint precision.
int padic_agreement(const PadicScalar& a, const PadicScalar& b);

}  // namespace pmzv
