#include "pmzv/json_io.hpp"

#include <stdexcept>

namespace pmzv {

json to_json(const ExactScalar& x) {
    json c = json::array();
    for (auto& r : x.coords()) c.push_back(rat_str(r));
    return {{"coords", c}};
}

json to_json(const PadicScalar& x) {
    json unit = json::array();
    for (size_t i = 0; i < x.unit().size(); ++i) {
        json d = json::array();
        for (auto& v : x.digits_base_p(i)) d.push_back(v.get_si());
        unit.push_back(d);
    }
    return {{"val", x.valuation()}, {"unit", unit}, {"prec", x.prec()}};
}

json to_json(const ExpansionPoly<Rat>& E) {
    json t = json::array();
    for (auto& [k, c] : E.terms) t.push_back({{"n", k.first}, {"m", k.second}, {"coeff", rat_str(c)}});
    return {{"terms", t}};
}

json to_json(const ZetaRecord& r) {
    json idx = r.b < 0 ? json{{"k", r.k}} : json{{"b", r.b}, {"n", r.n}};
    return {{"index", idx}, {"value", to_json(r.value)}, {"alpha0", r.alpha0}, {"method", r.method}, {"cert", r.cert}};
}

ExactScalar exact_from_json(const json& j, unsigned N) {
    const json& c = j.at("coords");
    if (c.size() == 1) return ExactScalar(parse_rat(c[0].get<std::string>()), N);
    ExactScalar acc(Rat(0), N);
    for (size_t i = 0; i < c.size(); ++i)
        acc += ExactScalar(parse_rat(c[i].get<std::string>()), N) * ExactScalar::zeta_pow(N, (long)i);
    return acc;
}

PadicScalar padic_from_json(const json& j, unsigned long p, unsigned N) {
    const PadicField& F = PadicField::get(p, std::max(N, 1u));
    int val = j.at("val"), prec = j.at("prec");
    PadicScalar acc = PadicScalar::zero(F, prec);
    const json& unit = j.at("unit");
    PadicScalar proto = PadicScalar::from_rat(F, Rat(1), F.M);
    for (size_t i = 0; i < unit.size(); ++i) {
        Int x = 0, pk = 1;
        for (auto& d : unit[i]) {
            x += pk * Int(d.get<long>());
            pk *= p;
        }
        Rat r = Rat(x) * rpow(Rat((long)p), val);
        acc += PadicScalar::from_rat(F, r, prec) * ScalarOps<PadicScalar>::zeta(proto, (long)i);
    }
    return acc.with_prec(prec);
}

namespace {
void check_header(const json& j, const char* kind) {
    if (j.at("scalar").get<std::string>() != kind)
        throw std::invalid_argument(std::string("series JSON: expected scalar ") + kind);
}
}  // namespace

NCSeries<ExactScalar> exact_series_from_json(const json& j) {
    check_header(j, "exact");
    unsigned N = j.at("N");
    NCSeries<ExactScalar> f(N, j.at("weight_cap"), j.at("depth_cap"), ExactScalar(Rat(1), N));
    for (auto& t : j.at("terms")) {
        Word w = parse_word(t.at("word"), N);
        if (!f.fits(w)) throw std::invalid_argument("series JSON: word exceeds caps");
        f.set(w, exact_from_json(t.at("coeff"), N));
    }
    return f;
}

NCSeries<PadicScalar> padic_series_from_json(const json& j, int prec) {
    unsigned long p = j.at("p");
    unsigned N = j.at("N");
    const PadicField& F = PadicField::get(p, std::max(N, 1u));
    NCSeries<PadicScalar> f(N, j.at("weight_cap"), j.at("depth_cap"), PadicScalar::from_rat(F, Rat(1), prec));
    bool exact = j.at("scalar").get<std::string>() == "exact";
    for (auto& t : j.at("terms")) {
        Word w = parse_word(t.at("word"), N);
        if (!f.fits(w)) throw std::invalid_argument("series JSON: word exceeds caps");
        f.set(w, exact ? PadicScalar::embed(exact_from_json(t.at("coeff"), N), F, prec)
                       : padic_from_json(t.at("coeff"), p, N));
    }
    return f;
}

}  // namespace pmzv
