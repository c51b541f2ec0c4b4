#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmzv/json_io.hpp"

namespace pmzv {

struct Check {
    std::string name;
    bool pass = false;
    long cert = -1;  // -1: exact check, no precision involved
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;
    bool pass() const;
    std::optional<std::string> first_failure() const;
};

json report_json(const std::vector<Report>& rs);
std::string report_text(const std::vector<Report>& rs);

struct SuiteConfig {
    std::vector<unsigned long> primes;  // empty: the suite default
    unsigned N = 1;
    int alpha0 = 1;
    std::vector<int> alphas;  // empty: the suite default
    int weight_cap = 6;
    int depth_cap = 3;
    int precision = 0;
    unsigned long seed = 20261018;
    // 0 in any of these: the suite default
    long max_m = 0;
    int max_weight = 0;
    int count = 0;
};

Report suite_stuffle(const SuiteConfig& c);         // har(m, u) har(m, v) = sum over the stuffle
Report suite_splitting(const SuiteConfig& c);       // digit splitting vs brute force
Report suite_group(const SuiteConfig& c);           // group axioms and the graded identities
Report suite_norms(const SuiteConfig& c);           // norm bounds and equalities
Report suite_contraction(const SuiteConfig& c);     // contraction and the fixed point
Report suite_iter_structure(const SuiteConfig& c);  // iterates are exponential polynomials in a
Report suite_series(const SuiteConfig& c, const std::vector<HarmonicWord>& words);
Report suite_cross_alpha(const SuiteConfig& c);
Report suite_reconstruction(const SuiteConfig& c);
Report suite_three_way(const SuiteConfig& c, const std::vector<HarmonicWord>& words);
Report suite_fitting(const SuiteConfig& c);
Report suite_overdetermination(const SuiteConfig& c);

// Names accepted by run_suite; series and three-way use their default words.
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, const SuiteConfig& c);

}  // namespace pmzv
