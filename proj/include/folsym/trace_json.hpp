#pragma once

#include <cmath>
#include <string>

#include "json.hpp"

#include "folsym/surface.hpp"

namespace folsym {

/** Exact field triple plus a decimal rendering (null when the value is not real). */
inline nlohmann::json quad_json(const QuadNumber& v) {
    nlohmann::json j;
    j["rational"] = v.rational_part().str();
    j["surd"] = v.surd_part().str();
    j["radicand"] = v.radicand().str();
    j["str"] = v.str();
    if (v.is_real()) {
        double approx = v.rational_part().convert_to<double>();
        if (v.radicand() != 0)
            approx += v.surd_part().convert_to<double>() *
                      std::sqrt(v.radicand().convert_to<double>());
        j["decimal"] = approx;
    } else {
        j["decimal"] = nullptr;
    }
    return j;
}

inline nlohmann::json point_json(const ChartPoint& p) {
    return nlohmann::json::array({quad_json(p.first), quad_json(p.second)});
}

inline const char* sing_type_name(SingType t) {
    switch (t) {
        case SingType::Regular: return "regular";
        case SingType::NonDegenerate: return "non_degenerate";
        case SingType::SaddleNode: return "saddle_node";
        default: return "non_reduced";
    }
}

inline nlohmann::json report_json(const SurfaceModel& m, const SingularityReport& r) {
    nlohmann::json j;
    j["chart"] = m.charts()[(std::size_t)r.chart].name;
    j["chart_id"] = r.chart;
    j["point"] = point_json(r.point);
    j["type"] = sing_type_name(r.sing.type);
    j["reduced"] = r.sing.reduced;
    j["order"] = r.sing.order;
    if (r.sing.type == SingType::NonDegenerate) {
        j["eigenvalues"] = nlohmann::json::array(
            {quad_json(r.sing.lambda1), quad_json(r.sing.lambda2)});
        j["ratio"] = quad_json(r.sing.ratio);
    }
    if (r.sing.type == SingType::SaddleNode) {
        j["weak_order"] = r.sing.weak_order;
        if (r.sing.transition) j["transition"] = quad_json(*r.sing.transition);
    }
    return j;
}

inline nlohmann::json trace_json(const SurfaceModel& m, const ReductionTrace& tr,
                                 const std::string& form_text, const std::string& atlas,
                                 int max_blowups) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["input"] = {{"form", form_text}, {"atlas", atlas}, {"max_blowups", max_blowups}};
    j["blowups"] = nlohmann::json::array();
    for (const auto& s : tr.steps) {
        nlohmann::json b;
        b["chart"] = m.charts()[(std::size_t)s.chart].name;
        b["chart_id"] = s.chart;
        b["center"] = point_json(s.center);
        b["curve"] = m.curves()[(std::size_t)s.curve].name;
        b["multiplicity"] = s.multiplicity;
        b["dicritical"] = s.dicritical;
        j["blowups"].push_back(std::move(b));
    }
    j["blowup_count"] = tr.blowup_count;
    j["dicritical_count"] = tr.dicritical_count;
    j["final_reports"] = nlohmann::json::array();
    for (const auto& r : tr.final_reports) j["final_reports"].push_back(report_json(m, r));
    j["curves"] = nlohmann::json::array();
    for (const auto& c : m.curves())
        j["curves"].push_back({{"name", c.name},
                               {"self_int", c.self_int},
                               {"invariant", c.invariant}});
    return j;
}

}  // namespace folsym
