#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "pmzv/mhs.hpp"

using namespace pmzv;

namespace {
// lexicographic enumeration over (m_1, ..., m_d)
Rat enum_mhs(long m, const std::vector<int>& n) {
    Rat acc = 0;
    std::vector<long> idx(n.size());
    std::function<void(size_t, long)> rec = [&](size_t i, long lo) {
        if (i == n.size()) {
            Rat t = 1;
            for (size_t k = 0; k < n.size(); ++k) t /= rpow(Rat(idx[k]), n[k]);
            acc += t;
            return;
        }
        for (long x = lo; x < m; ++x) {
            idx[i] = x;
            rec(i + 1, x + 1);
        }
    };
    rec(0, 1);
    return acc;
}
}  // namespace

TEST_CASE("harmonic sum examples") {
    CHECK(har(5, HarmonicWord({1})) == ExactScalar(Rat(125, 12)));
    CHECK(har(2, HarmonicWord({1})) == ExactScalar(2));
    CHECK(har(5, HarmonicWord({1, 1})) == ExactScalar(Rat(875, 24)));
    CHECK(har(5, HarmonicWord({2})) == ExactScalar(Rat(5125, 144)));
    CHECK(Rat(125, 12) * Rat(125, 12) == 2 * Rat(875, 24) + Rat(5125, 144));
    CHECK(mhs_unweighted(4, HarmonicWord({1})) == ExactScalar(Rat(11, 6)));
    CHECK(mhs_unweighted(1, HarmonicWord({2, 1})).is_zero());
    CHECK(mhs_unweighted(5, HarmonicWord({1})) == ExactScalar(Rat(25, 12)));
    CHECK(mhs_unweighted(9, HarmonicWord({1})) == ExactScalar(Rat(761, 280)));
    CHECK(har(3, HarmonicWord({1, 1})) == ExactScalar(Rat(9, 2)));
}

TEST_CASE("prefix accumulation matches lexicographic enumeration") {
    for (long m : {1L, 2L, 3L, 7L, 12L})
        for (auto n : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {1, 3}, {1, 1, 1}, {2, 1, 2}})
            CHECK(mhs_rat(m, n) == enum_mhs(m, n));
}

TEST_CASE("localized sums") {
    CHECK(har_localized(5, {1}, {0}) == ExactScalar(Rat(25, 12)));
    CHECK(har_localized(3, {-1}, {0}) == ExactScalar(3));
    CHECK(har_localized(4, {0}, {0}) == ExactScalar(3));
    CHECK(har_localized(4, {-1, 0}, {0, 0}) == ExactScalar(1 + 1 + 2));
}

TEST_CASE("cyclotomic harmonic sums and stuffle at N = 3") {
    unsigned N = 3;
    HarmonicWord a({1}, {0, 1}), b({2}, {2, 1});
    for (long m : {4L, 7L}) {
        ExactScalar lhs = mhs_unweighted(m, a, N) * mhs_unweighted(m, b, N), rhs(Rat(0), N);
        for (auto& w : stuffle_set(a, b, N)) rhs += mhs_unweighted(m, w, N);
        CHECK(lhs == rhs);
    }
    // xi_1 = xi_2 = 1: reduces to the N = 1 value
    CHECK(mhs_unweighted(6, HarmonicWord({2}, {0, 0}), 3) == ExactScalar(Rat(mhs_rat(6, {2})), 3));
}

TEST_CASE("stuffle and weighting on small ranges") {
    auto words = all_harmonic_words(1, 3, 3);
    for (long m = 1; m <= 20; ++m)
        for (auto& u : words)
            for (auto& v : words) {
                if (u.weight() + v.weight() > 4) continue;
                Rat rhs = 0;
                for (auto& x : stuffle_set(u, v, 1)) rhs += har_rat(m, x.n);
                CHECK(har_rat(m, u.n) * har_rat(m, v.n) == rhs);
            }
    for (auto& w : words) CHECK(har(9, w) == ExactScalar(rpow(Rat(9), w.weight()) * mhs_rat(9, w.n)));
}

TEST_CASE("valuation bound of prime weighted sums") {
    for (unsigned long p : {3ul, 5ul})
        for (long a = 1; a <= 3; ++a) {
            long m = (long)ipow(p, a).get_ui();
            for (auto& w : all_harmonic_words(1, 4, 3)) {
                Rat v = har_rat(m, w.n);
                if (v != 0) CHECK(vp(v, p) >= w.weight());
            }
        }
}

TEST_CASE("parallel table matches the serial reference") {
    std::vector<long> ms;
    for (long m = 1; m <= 30; ++m) ms.push_back(m);
    auto words = all_harmonic_words(1, 4, 4);
    CHECK(har_table(ms, words) == har_table_serial(ms, words));
}

TEST_CASE("digit splitting") {
    // single digit: no shifted blocks
    auto r = split_by_digits(9, HarmonicWord({1}), 3, 10);
    CHECK(r.value == PadicScalar::from_rat(PadicField::get(3, 1), mhs_rat(9, {1}), 10));
    auto s = split_by_digits(7, HarmonicWord({1}), 2, 10);
    CHECK(mhs_rat(7, {1}) == Rat(49, 20));
    CHECK(s.value.prec() >= 10);
    CHECK(s.value == PadicScalar::from_rat(PadicField::get(2, 1), Rat(49, 20), 10));
    auto t = split_by_digits(10, HarmonicWord({1, 1}), 3, 8);
    CHECK(t.value == PadicScalar::from_rat(PadicField::get(3, 1), mhs_rat(10, {1, 1}), 8));
    for (long m : {5L, 11L, 22L, 37L, 100L})
        for (auto& w : all_harmonic_words(1, 3, 2))
            for (unsigned long p : {2ul, 3ul}) {
                auto z = split_by_digits(m, w, p, 8);
                CHECK(z.value == PadicScalar::from_rat(PadicField::get(p, 1), mhs_rat(m, w.n), 8));
            }
}
