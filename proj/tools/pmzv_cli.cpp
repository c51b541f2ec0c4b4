// pmzv: batch front-end for harmonic sums, Ihara-action series and p-adic zeta tables.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pmzv/harmonic.hpp"
#include "pmzv/ihara.hpp"
#include "pmzv/json_io.hpp"
#include "pmzv/mhs.hpp"
#include "pmzv/suites.hpp"

using namespace pmzv;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    unsigned long p = 3;
    unsigned N = 1;
    int alpha0 = 1;
    std::vector<int> alpha;
    int weight_cap = 6, depth_cap = 3;
    int precision = 8;
    bool precision_set = false;
    int lmax = -1;
    std::string format = "json";
    unsigned long seed = 20261018;
    long m = 0;
    int k = 0, l = 0;
    std::string word;
    long max_m = 0;
    int max_weight = 0, count = 0;
    bool unweighted = false;
    std::string suite, op, f_path, g_path, input;
    std::string lambda = "0";
    long a = 1;
};

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void validate(const Opts& o) {
    if (!is_prime(o.p)) throw ConfigError("--p must be prime");
    if (std::gcd(o.p, (unsigned long)o.N) != 1) throw ConfigError("gcd(p, N) must be 1");
    if (o.N < 1 || o.weight_cap < 1 || o.depth_cap < 1) throw ConfigError("caps and N must be >= 1");
    if (o.precision < 1) throw ConfigError("--precision must be >= 1");
    if (o.alpha0 < 1) throw ConfigError("--alpha0 must be >= 1");
}

json read_json(const std::string& path) {
    if (path.empty()) throw ConfigError("missing input file");
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

HarmonicWord word_of(const Opts& o) {
    if (o.word.empty()) throw ConfigError("--word is required");
    try {
        return parse_harmonic(o.word, o.N);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad --word: ") + e.what());
    }
}

json scalar_json(const ExactScalar& x) { return x.is_rational() ? json(rat_str(x.rational())) : to_json(x); }

void emit(const json& j, const Opts& o) {
    if (o.format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    for (auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int cmd_mhs(const Opts& o) {
    if (o.m < 1) throw ConfigError("--m must be >= 1");
    HarmonicWord w = word_of(o);
    ExactScalar v = o.unweighted ? mhs_unweighted(o.m, w, o.N) : har(o.m, w, o.N);
    emit({{"m", o.m}, {"word", w.text()}, {"value", scalar_json(v)}}, o);
    return 0;
}

int cmd_bcoef(const Opts& o) {
    if (o.l < 0 || o.m < 0) throw ConfigError("--l and --m must be >= 0");
    ExactScalar v = bcoef(o.l, (unsigned)o.m, o.N, o.k);
    emit({{"l", o.l}, {"m", o.m}, {"xi", o.k}, {"N", o.N}, {"value", scalar_json(v)}}, o);
    return 0;
}

int cmd_split(const Opts& o) {
    if (o.N != 1) throw ConfigError("split supports N = 1");
    HarmonicWord w = word_of(o);
    SplitResult s = split_by_digits(o.m, w, o.p, o.precision);
    emit({{"m", o.m}, {"word", w.text()}, {"value", to_json(s.value)}, {"cert", s.value.prec()}, {"lmax", s.lmax},
          {"pieces", s.pieces}},
         o);
    return 0;
}

int cmd_ihara(const Opts& o) {
    json fj = read_json(o.f_path);
    unsigned long p = fj.at("p");
    auto f = exact_series_from_json(fj);
    ExactScalar lam(parse_rat(o.lambda), f.N());
    json out;
    if (o.op == "mul") {
        auto g = exact_series_from_json(read_json(o.g_path));
        out = series_to_json(ihara_mul(f, g), p);
    } else if (o.op == "inv") {
        out = series_to_json(ihara_inv(f), p);
    } else if (o.op == "fix") {
        if (lam.is_zero()) throw ConfigError("fix needs --lambda");
        out = series_to_json(fixed_point(lam, f, p), p);
    } else if (o.op == "iter") {
        if (lam.is_zero()) throw ConfigError("iter needs --lambda");
        out = series_to_json(iterate(o.a, lam, f), p);
    } else if (o.op == "ad") {
        out = series_to_json(ad_e1(f), p);
    } else {
        throw ConfigError("unknown ihara op " + o.op);
    }
    emit(out, o);
    return 0;
}

int cmd_har_action(const Opts& o) {
    json gj = read_json(o.g_path), hj = read_json(o.f_path);
    unsigned long p = gj.at("p");
    auto g = exact_series_from_json(gj);
    auto h = exact_series_from_json(hj);
    int lmax = o.lmax >= 0 ? o.lmax : std::max(0, std::min(g.W(), h.W()) - 2);
    emit(series_to_json(har_action(g, h, lmax), p), o);
    return 0;
}

int cmd_iter_series(const Opts& o) {
    if (o.N != 1) throw ConfigError("iter-series supports N = 1");
    HarmonicWord w = word_of(o);
    int alpha = o.alpha.empty() ? 2 * o.alpha0 : o.alpha[0];
    SeriesValue s = iter_har_series(w, o.p, o.alpha0, alpha, o.precision);
    emit({{"word", w.text()},
          {"alpha0", o.alpha0},
          {"alpha", alpha},
          {"value", to_json(s.value)},
          {"cert", s.value.prec()},
          {"L", s.L},
          {"expansion", to_json(s.poly)}},
         o);
    return 0;
}

int cmd_zeta(const Opts& o) {
    if (o.k > 0) {
        ZetaResult z = zeta_depth1(o.k, o.p, o.alpha0, o.precision);
        json j = to_json(z.combined);
        if (o.format == "json") j["consistent"] = z.consistent;
        emit(j, o);
        return z.consistent ? 0 : 1;
    }
    json table = json::array();
    bool ok = true;
    for (int k = 2; k <= (o.max_weight > 0 ? o.max_weight : 7); ++k) {
        ZetaResult z = zeta_depth1(k, o.p, o.alpha0, o.precision);
        ok = ok && z.consistent;
        table.push_back(to_json(z.combined));
    }
    if (o.format == "json")
        std::cout << table.dump() << "\n";
    else
        for (auto& r : table) std::cout << "zeta(" << r["index"]["k"] << "): " << r.dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_verify(const Opts& o) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw ConfigError("unknown suite " + o.suite);
    SuiteConfig c;
    c.primes = {o.p};
    c.N = o.N;
    c.alpha0 = o.alpha0;
    c.alphas = o.alpha;
    c.weight_cap = o.weight_cap;
    c.depth_cap = o.depth_cap;
    c.precision = o.precision_set ? o.precision : 0;
    c.seed = o.seed;
    c.max_m = o.max_m;
    c.max_weight = o.max_weight;
    c.count = o.count;
    std::vector<Report> rs{run_suite(o.suite, c)};
    if (o.format == "json")
        std::cout << report_json(rs).dump() << "\n";
    else
        std::cout << report_text(rs);
    if (auto f = rs[0].first_failure()) {
        std::cerr << "failed: " << *f << "\n";
        return 1;
    }
    return 0;
}

int cmd_fit(const Opts& o) {
    // {"Q": q, "samples": {"a": "value", ...}, "columns": [[n, m], ...]}
    json in = read_json(o.input);
    long Q = in.at("Q");
    std::map<long, Rat> smp;
    for (auto& [a, v] : in.at("samples").items()) smp[std::stol(a)] = parse_rat(v.get<std::string>());
    std::vector<std::pair<long, int>> cols;
    for (auto& c : in.at("columns")) cols.push_back({c.at(0).get<long>(), c.at(1).get<int>()});
    FitResult f = fit_expansion(smp, Q, cols);
    json j = to_json(f.poly);
    j["consistent"] = f.consistent;
    if (!f.consistent) {
        j["residual"] = rat_str(f.residual);
        j["residual_at"] = f.residual_at;
    }
    emit(j, o);
    if (!f.consistent) std::cerr << "failed: samples are not fitted by the given columns\n";
    return f.consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic multiple zeta values through iterated harmonic sums"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    app.add_option("--p", o.p, "prime");
    app.add_option("--N", o.N, "cyclotomic order");
    app.add_option("--alpha0", o.alpha0, "base exponent");
    app.add_option("--alpha", o.alpha, "target exponent(s)")->delimiter(',');
    app.add_option("--weight-cap", o.weight_cap, "series weight cap");
    app.add_option("--depth-cap", o.depth_cap, "series depth cap");
    app.add_option_function<int>("--precision", [&](int v) { o.precision = v, o.precision_set = true; },
                                 "target p-adic precision");
    app.add_option("--lmax", o.lmax, "summation cutoff override");
    app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", o.seed, "seed for randomized suites");
    app.add_option("--m", o.m, "upper bound m, or Faulhaber index");
    app.add_option("--k", o.k, "zeta argument, or root index");
    app.add_option("--l", o.l, "Faulhaber degree");
    app.add_option("--word", o.word, "harmonic word \"(n1,...)/(k1,...)\"");
    app.add_option("--max-m", o.max_m, "largest m in suites");
    app.add_option("--max-weight", o.max_weight, "largest weight in suites and tables");
    app.add_option("--count", o.count, "random samples in suites");

    auto* mhs = app.add_subcommand("mhs", "weighted harmonic sum har(m, w)");
    mhs->add_flag("--unweighted", o.unweighted, "drop the m^weight factor");
    app.add_subcommand("bcoef", "Faulhaber coefficient at xi = zeta_N^k");
    app.add_subcommand("split", "harmonic sum through digit splitting");
    auto* ih = app.add_subcommand("ihara", "Ihara product, inverse, fixed point, iterate on JSON series");
    ih->add_option("op", o.op, "mul | inv | fix | iter | ad")->required();
    ih->add_option("--f", o.f_path, "series JSON")->required();
    ih->add_option("--g", o.g_path, "second series JSON (mul)");
    ih->add_option("--lambda", o.lambda, "rational weight");
    ih->add_option("--a", o.a, "number of iterates");
    auto* ha = app.add_subcommand("har-action", "harmonic action of g on a harmonic-part series h");
    ha->add_option("--g", o.g_path, "acting series JSON")->required();
    ha->add_option("--har", o.f_path, "harmonic-part series JSON")->required();
    app.add_subcommand("iter-series", "har(q^alpha, w) from the series at base q^alpha0");
    app.add_subcommand("zeta", "depth-one zeta values at infinity");
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", o.suite, "suite name")->required();
    auto* fit = app.add_subcommand("fit", "fit samples by an exponential polynomial");
    fit->add_option("--input", o.input, "samples JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string cmd = app.get_subcommands()[0]->get_name();
    try {
        validate(o);
        if (cmd == "mhs") return cmd_mhs(o);
        if (cmd == "bcoef") return cmd_bcoef(o);
        if (cmd == "split") return cmd_split(o);
        if (cmd == "ihara") return cmd_ihara(o);
        if (cmd == "har-action") return cmd_har_action(o);
        if (cmd == "iter-series") return cmd_iter_series(o);
        if (cmd == "zeta") return cmd_zeta(o);
        if (cmd == "verify") return cmd_verify(o);
        if (cmd == "fit") return cmd_fit(o);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
