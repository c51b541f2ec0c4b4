#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pmzv/ihara.hpp"
#include "pmzv/json_io.hpp"

using namespace pmzv;

TEST_CASE("exact scalar JSON") {
    CHECK(to_json(ExactScalar(Rat(-3, 4))).dump() == R"({"coords":["-3/4"]})");
    ExactScalar z = ExactScalar::zeta_pow(3, 1) * ExactScalar(Rat(2, 5), 3) + ExactScalar(Rat(1), 3);
    CHECK(exact_from_json(to_json(z), 3) == z);
}

TEST_CASE("p-adic scalar JSON uses little-endian digits") {
    const PadicField& F = PadicField::get(3, 1);
    PadicScalar x = PadicScalar::from_rat(F, Rat(7 * 9), 6);  // 7 = 1 + 2*3
    json j = to_json(x);
    CHECK(j["val"] == 2);
    CHECK(j["prec"] == 6);
    CHECK(j["unit"][0] == json::array({1, 2, 0, 0}));
    CHECK(padic_from_json(j, 3, 1) == x);

    const PadicField& G = PadicField::get(5, 3);
    PadicScalar y = PadicScalar::embed(ExactScalar::zeta_pow(3, 2) * ExactScalar(Rat(5, 2), 3), G, 8);
    PadicScalar back = padic_from_json(to_json(y), 5, 3);
    CHECK(back == y);
    CHECK(back.prec() == y.prec());
}

TEST_CASE("series JSON round trip and canonical form") {
    std::mt19937_64 rng(31);
    for (unsigned N : {1u, 3u}) {
        auto g = random_pi_tilde(rng, N, 5, 3, ExactScalar(Rat(1), N), 7);
        json j = series_to_json(g, 7);
        CHECK(j["scalar"] == "exact");
        CHECK(j["weight_cap"] == 5);
        auto back = exact_series_from_json(j);
        CHECK(back.terms().size() == g.terms().size());
        for (auto& [w, c] : g.terms()) CHECK(back[w] == c);
        CHECK(series_to_json(back, 7).dump() == j.dump());
        auto pad = padic_series_from_json(j, 10);
        for (auto& [w, c] : g.terms()) CHECK(pad[w] == PadicScalar::embed(c, PadicField::get(7, N), 10));
    }
    auto f = NCSeries<ExactScalar>::letter(1, 3, 2, ExactScalar(1), 1);
    CHECK(series_to_json(f, 3, std::string("inf")).dump() ==
          R"({"N":1,"alpha_tag":"inf","depth_cap":2,"p":3,"scalar":"exact","terms":[{"coeff":{"coords":["1"]},"word":"1"}],"weight_cap":3})");
    json bad = series_to_json(f, 3);
    bad["terms"][0]["word"] = "1111";
    CHECK_THROWS(exact_series_from_json(bad));
}

TEST_CASE("expansion and zeta record JSON") {
    ExpansionPoly<Rat> E;
    E.add(2, 0, Rat(1, 3));
    E.add(0, 1, Rat(-2));
    CHECK(to_json(E).dump() ==
          R"({"terms":[{"coeff":"-2","m":1,"n":0},{"coeff":"1/3","m":0,"n":2}]})");
    ZetaRecord r;
    r.k = 3;
    r.value = PadicScalar::from_rat(PadicField::get(3, 1), Rat(3), 4);
    r.method = "depth1-closed-form";
    r.cert = 4;
    json j = to_json(r);
    CHECK(j["index"] == json({{"k", 3}}));
    r.b = 1;
    r.n = 2;
    CHECK(to_json(r)["index"] == json({{"b", 1}, {"n", 2}}));
}
