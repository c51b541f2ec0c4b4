#include "pmzv/scalar.hpp"

#include <climits>

namespace pmzv {

long ScalarOps<ExactScalar>::valuation(const ExactScalar& x, unsigned long p) {
    if (x.is_zero()) return INT_MAX / 4;
    if (x.is_rational()) return vp(x.rational(), p);
    const auto& F = PadicField::get(p, x.order());
    return PadicScalar::embed(x, F, F.M).valuation();
}

}  // namespace pmzv
