#pragma once

#include "pmzv/exact.hpp"
#include "pmzv/padic.hpp"

namespace pmzv {

// Construction of constants from a prototype of the same kind.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<ExactScalar> {
    static ExactScalar from_rat(const ExactScalar& proto, const Rat& r) { return ExactScalar(r, proto.order()); }
    static ExactScalar zeta(const ExactScalar& proto, long k) {
        return proto.order() <= 1 ? ExactScalar(Rat(1), proto.order()) : ExactScalar::zeta_pow(proto.order(), k);
    }
    static long valuation(const ExactScalar& x, unsigned long p);
    static const char* kind() { return "exact"; }
};

template <>
struct ScalarOps<PadicScalar> {
    static PadicScalar from_rat(const PadicScalar& proto, const Rat& r) {
        return PadicScalar::from_rat(*proto.field(), r, proto.field()->M);
    }
    static PadicScalar zeta(const PadicScalar& proto, long k) {
        const auto& F = *proto.field();
        return PadicScalar::embed(F.N <= 1 ? ExactScalar(1) : ExactScalar::zeta_pow(F.N, k), F, F.M);
    }
    static long valuation(const PadicScalar& x, unsigned long) { return x.valuation(); }
    static const char* kind() { return "padic"; }
};

template <class S>
S scalar_from(const S& proto, const Rat& r) {
    return ScalarOps<S>::from_rat(proto, r);
}

}  // namespace pmzv
