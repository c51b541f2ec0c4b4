#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pmzv/ihara.hpp"

using namespace pmzv;
using Ser = NCSeries<ExactScalar>;

namespace {
const ExactScalar ONE(1);
Word w(const char* s) { return parse_word(s, 1); }
Ser unit(int W = 6, int D = 3) { return Ser::unit(1, W, D, ONE); }
Ser rnd(std::mt19937_64& rng, int W = 6, int D = 3) { return random_pi_tilde<ExactScalar>(rng, 1, W, D, ONE, 3); }
}  // namespace

TEST_CASE("ihara product unit and weight one") {
    std::mt19937_64 rng(1);
    Ser f = rnd(rng);
    CHECK(ihara_mul(unit(), f) == f);
    CHECK(ihara_mul(f, unit()) == f);
    // grouplike with weight-one letters
    Ser a = Ser::letter(1, 6, 3, ONE, 0).scaled(ExactScalar(2)) + Ser::letter(1, 6, 3, ONE, 1).scaled(ExactScalar(5));
    Ser b = Ser::letter(1, 6, 3, ONE, 1).scaled(ExactScalar(Rat(1, 3)));
    Ser g1 = series_exp(a), g2 = series_exp(b);
    Ser pr = ihara_mul(g1, g2);
    CHECK(pr[w("0")] == ExactScalar(2));
    CHECK(pr[w("1")] == ExactScalar(5) + ExactScalar(Rat(1, 3)));
    CHECK(is_grouplike(pr));
}

TEST_CASE("ihara inverse") {
    CHECK(ihara_inv(unit()) == unit());
    std::mt19937_64 rng(2);
    for (int t = 0; t < 5; ++t) {
        Ser g = rnd(rng);
        Ser h = ihara_inv(g);
        CHECK(ihara_mul(g, h) == unit());
        CHECK(ihara_mul(h, g) == unit());
        CHECK(norm_LD(h, 3) == norm_LD(g, 3));
    }
    Ser e = series_exp(Ser::letter(1, 5, 3, ONE, 1).scaled(ExactScalar(7)) + Ser::letter(1, 5, 3, ONE, 0));
    Ser ei = ihara_inv(e);
    CHECK(ei[w("1")] == ExactScalar(-7));
    CHECK(ei[w("0")] == ExactScalar(-1));
}

TEST_CASE("adjoint action and Ad(e1)") {
    std::mt19937_64 rng(3);
    Ser f = rnd(rng);
    Ser e1 = Ser::letter(1, 6, 3, ONE, 1);
    CHECK(adjoint_ihara(e1, f) == f);
    Ser h = rnd(rng, 6, 3) - unit();
    Ser ee = Ser(1, 6, 3, ONE);
    ee.set(w("11"), ExactScalar(1));
    CHECK(adjoint_ihara(h, ee) == concat_mul(h, h));
    CHECK(ad_e1(unit()) == e1);
    Ser A = ad_e1(f);
    CHECK(tau_depth_le(1, A) == e1);
    // N(Ad_f(e1)) <= Lambda D N(f)
    NormPoly nA = norm_LD(A, 3), nf = norm_LD(f, 3), shifted;
    for (auto& [k, v] : nf.v) shifted.absorb(k.first + 1, k.second + 1, v);
    CHECK(nA.leq(shifted));
}

TEST_CASE("Ad(e1) intertwines the two group laws (seed 4)") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 5; ++t) {
        Ser g = rnd(rng), f = rnd(rng);
        CHECK(ad_e1(ihara_mul(g, f)) == adjoint_ihara(ad_e1(g), ad_e1(f)));
    }
}

TEST_CASE("weighted action, fixed point, iteration") {
    std::mt19937_64 rng(6);
    Ser g = rnd(rng, 5, 2);
    ExactScalar lam(3);
    Ser f = rnd(rng, 5, 2);
    CHECK(weighted_ihara_inv(lam, g, weighted_ihara(lam, g, f)) == f);
    CHECK(weighted_ihara(ONE, unit(5, 2), f) == f);

    CHECK(fixed_point(lam, unit(5, 2), 3) == unit(5, 2));
    Ser fix = fixed_point(lam, g, 3);
    CHECK(weighted_ihara(lam, g, fix) == fix);
    CHECK(norm_LD(fix, 3) == norm_LD(g, 3));
    CHECK_THROWS(fixed_point(ExactScalar(2), g, 3));

    Ser e = series_exp(Ser::letter(1, 5, 2, ONE, 1).scaled(ExactScalar(2)));
    CHECK(fixed_point(lam, e, 3)[w("1")] == ExactScalar(-1));

    CHECK(iterate(1, lam, g) == g);
    CHECK(iterate(3, lam, unit(5, 2)) == unit(5, 2));
    CHECK(iterate(3, lam, e)[w("1")] == ExactScalar(2 * (1 + 3 + 9)));
    // a-fold fixed-point identity
    for (long a : {2, 3}) {
        ExactScalar la(1);
        for (long i = 0; i < a; ++i) la *= lam;
        CHECK(weighted_ihara(la, iterate(a, lam, g), fix) == fix);
    }
    // iterate(ab, lambda) = iterate(b, lambda^a, iterate(a, lambda))
    CHECK(iterate(6, lam, g) == iterate(3, ExactScalar(9), iterate(2, lam, g)));
}

TEST_CASE("contraction with equality at kappa = lambda (seed 8)") {
    std::mt19937_64 rng(8);
    Ser g = rnd(rng, 5, 2);
    ExactScalar lam(3);
    std::function<Ser(const Ser&)> app = [&](const Ser& f) { return weighted_ihara(lam, g, f); };
    std::function<Ser(const Ser&)> id = [](const Ser& f) { return f; };
    Ser f1 = rnd(rng, 5, 2), f2 = rnd(rng, 5, 2);
    CHECK(contraction_check(id, f1, f1, lam, 3));
    CHECK(contraction_check(app, f1, f2, lam, 3, true));
    CHECK(!contraction_check(app, f1, f2, ExactScalar(9), 3));
}
