// Runs the twelve acceptance criteria and prints one line per criterion.
#include <cstdio>
#include <functional>
#include <iostream>

#include "pmzv/suites.hpp"

using namespace pmzv;

namespace {

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds; 0 for none
    std::function<std::vector<Report>()> run;
};

SuiteConfig cfg(std::vector<unsigned long> ps, int precision) {
    SuiteConfig c;
    c.primes = std::move(ps);
    c.precision = precision;
    return c;
}

std::vector<HarmonicWord> words(std::initializer_list<std::vector<int>> ns) {
    std::vector<HarmonicWord> out;
    for (auto& n : ns) out.emplace_back(n);
    return out;
}

}  // namespace

int main() {
    std::vector<Criterion> cs = {
        {1, "stuffle, m <= 100, weight <= 4", 60,
         [] {
             SuiteConfig c = cfg({3, 5}, 0);
             c.max_m = 100;
             c.max_weight = 4;
             return std::vector<Report>{suite_stuffle(c)};
         }},
        {2, "digit splitting, m <= 200, p in {2,3}, >= p^8", 120,
         [] {
             SuiteConfig c = cfg({2, 3}, 8);
             c.max_m = 200;
             c.max_weight = 3;
             return std::vector<Report>{suite_splitting(c)};
         }},
        {3, "Ihara group, graded identities and norms, 50 elements", 0,
         [] {
             SuiteConfig c = cfg({3}, 0);
             c.count = 50;
             return std::vector<Report>{suite_group(c), suite_norms(c)};
         }},
        {4, "contraction and fixed point, 20 pairs", 0,
         [] {
             SuiteConfig c = cfg({3}, 0);
             c.count = 20;
             return std::vector<Report>{suite_contraction(c)};
         }},
        {5, "iteration structure, depth <= 2", 0, [] { return std::vector<Report>{suite_iter_structure(cfg({3}, 0))}; }},
        {6, "depth-1 series iteration, >= 3^12 and >= 5^10", 60,
         [] {
             SuiteConfig c3 = cfg({3}, 12), c5 = cfg({5}, 10);
             c3.alphas = {2, 3};
             c5.alphas = {2};
             return std::vector<Report>{suite_series(c3, words({{1}, {2}, {3}})), suite_series(c5, words({{1}, {2}}))};
         }},
        {7, "depth-2 series iteration, >= 3^8", 0,
         [] {
             SuiteConfig c = cfg({3}, 8);
             c.alphas = {2, 3};
             return std::vector<Report>{suite_series(c, words({{1, 1}, {1, 2}, {2, 1}, {2, 2}}))};
         }},
        {8, "cross-base Ad coefficients, b + n <= 6, >= 3^10", 0,
         [] {
             SuiteConfig c = cfg({3}, 10);
             c.max_weight = 6;
             return std::vector<Report>{suite_cross_alpha(c)};
         }},
        {9, "reconstruction from infinity, >= 3^8; low degrees vanish", 0,
         [] {
             SuiteConfig c = cfg({3}, 8);
             c.alphas = {1, 2, 3};
             c.max_weight = 4;
             return std::vector<Report>{suite_reconstruction(c)};
         }},
        {10, "three-way equality on (1), (2), (1,1), >= 3^8", 0,
         [] {
             SuiteConfig c = cfg({3}, 8);
             c.alphas = {2, 3};
             return std::vector<Report>{suite_three_way(c, words({{1}, {2}, {1, 1}}))};
         }},
        {11, "expansion fitting round trip and rejection", 0, [] { return std::vector<Report>{suite_fitting(cfg({3}, 0))}; }},
        {12, "zeta(k), k = 2..7, across decompositions, >= 3^8", 0,
         [] {
             SuiteConfig c = cfg({3}, 8);
             c.max_weight = 7;
             return std::vector<Report>{suite_overdetermination(c)};
         }},
    };

    int failed = 0;
    for (auto& c : cs) {
        std::vector<Report> rs;
        std::string err;
        try {
            rs = c.run();
        } catch (const std::exception& e) {
            err = e.what();
        }
        double secs = 0;
        bool ok = err.empty();
        for (auto& r : rs) {
            secs += r.seconds;
            ok = ok && r.pass();
        }
        bool in_time = c.time_limit <= 0 || secs < c.time_limit;
        ok = ok && in_time;
        failed += !ok;
        std::printf("[%s] %2d %s (%.1f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
        if (!ok) {
            if (!err.empty()) std::printf("       error: %s\n", err.c_str());
            if (!in_time) std::printf("       over the %.0f s limit\n", c.time_limit);
            std::cout << report_text(rs);
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", (int)(cs.size() - failed), cs.size());
    return failed ? 1 : 0;
}
