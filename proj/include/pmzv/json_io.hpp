#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "pmzv/engine.hpp"
#include "pmzv/ncseries.hpp"
#include "pmzv/scalar.hpp"
#include "pmzv/zeta.hpp"

namespace pmzv {

using json = nlohmann::json;  // std::map objects, so dumps are key-sorted

json to_json(const ExactScalar& x);
json to_json(const PadicScalar& x);
json to_json(const ExpansionPoly<Rat>& E);
json to_json(const ZetaRecord& r);

ExactScalar exact_from_json(const json& j, unsigned N);
PadicScalar padic_from_json(const json& j, unsigned long p, unsigned N);

template <class S>
json series_to_json(const NCSeries<S>& f, unsigned long p, const std::optional<std::string>& alpha_tag = {}) {
    json terms = json::array();
    for (auto& [w, c] : f.terms()) terms.push_back({{"word", word_text(w, f.N())}, {"coeff", to_json(c)}});
    json j = {{"p", p},
              {"N", f.N()},
              {"weight_cap", f.W()},
              {"depth_cap", f.D()},
              {"scalar", ScalarOps<S>::kind()},
              {"terms", terms}};
    if (alpha_tag) j["alpha_tag"] = *alpha_tag;
    return j;
}

NCSeries<ExactScalar> exact_series_from_json(const json& j);
NCSeries<PadicScalar> padic_series_from_json(const json& j, int prec);

}  // namespace pmzv
