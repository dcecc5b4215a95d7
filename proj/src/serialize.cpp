#include "a2m/serialize.hpp"

#include "a2m/graph6.hpp"
#include "a2m/invariants.hpp"

namespace a2m {

using nlohmann::json;

json target_to_json(const MinorTarget& target) {
    if (target.kind == MinorTarget::Kind::CompleteGraph) return {{"k", target.clique_count}};
    return {{"ell", target.clique_count}, {"m", target.independent_count}};
}

MinorTarget target_from_json(const json& j) {
    if (j.contains("k")) return MinorTarget::complete(j.at("k").get<int>());
    return MinorTarget::clique_join_independent(j.at("ell").get<int>(), j.at("m").get<int>());
}

json model_to_json(const MinorTarget& target, const MinorModel& model) {
    return {{"target", target_to_json(target)},
            {"clique_side", model.clique_side},
            {"independent_side", model.independent_side}};
}

MinorModel model_from_json(const json& j) {
    MinorModel m;
    j.at("clique_side").get_to(m.clique_side);
    j.at("independent_side").get_to(m.independent_side);
    return m;
}

json certificate_to_json(const Certificate& cert) {
    json trace = json::array();
    for (const auto& step : cert.trace) {
        json s = {{"kind", to_string(step.kind)}, {"depth", step.depth}, {"n", step.order}, {"ell", step.ell}};
        for (const auto& [key, values] : step.data) s[key] = values;
        trace.push_back(std::move(s));
    }
    return {{"input_graph6", emit_graph6(cert.input)},
            {"n", cert.input.order()},
            {"alpha_leq_2", alpha_at_most_two(cert.input)},
            {"form", cert.form == MinorForm::Half ? "half" : "chromatic"},
            {"chi", cert.chi},
            {"ell", cert.ell},
            {"target", target_to_json(cert.target)},
            {"model", model_to_json(cert.target, cert.model)},
            {"trace", std::move(trace)},
            {"validated", cert.validated}};
}

}  // namespace a2m
