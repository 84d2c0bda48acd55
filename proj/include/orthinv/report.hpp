#ifndef ORTHINV_REPORT_HPP
#define ORTHINV_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthinv/invariant.hpp"
#include "orthinv/zerocheck.hpp"

namespace orthinv {

inline constexpr const char* kVersion = "1.0.0";

struct Report {
    std::string suite;
    std::uint32_t p = 0;
    std::optional<std::uint32_t> lambda;
    std::uint32_t max_degree = 0;
    std::uint64_t seed = 0;
    std::vector<DegreeCheck> per_degree;
    nlohmann::json extras = nlohmann::json::object();
    bool pass = false;
    double elapsed_seconds = 0.0;

    nlohmann::json to_json() const {
        nlohmann::json pd = nlohmann::json::array();
        for (const auto& c : per_degree)
            pd.push_back({{"degree", c.degree},
                          {"dim_expected", c.dim_expected},
                          {"dim_actual", c.dim_actual},
                          {"ok", c.ok}});
        nlohmann::json j = {
            {"suite", suite},
            {"p", p},
            {"max_degree", max_degree},
            {"seed", seed},
            {"per_degree", pd},
            {"extras", extras},
            {"overall", pass ? "PASS" : "FAIL"},
            {"version", kVersion},
            {"elapsed_seconds", elapsed_seconds},
        };
        if (lambda) j["lambda"] = *lambda;
        else j["lambda"] = nullptr;
        return j;
    }
};

inline nlohmann::json verdict_to_json(const ZeroTestVerdict& v) {
    nlohmann::json j = {
        {"nonzero", v.nonzero},
        {"trials", v.trials},
        {"extension_degree", v.extension_degree},
        {"field_order", v.field_order},
        {"degree_bound", v.degree_bound},
    };
    if (v.nonzero) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& coord : *v.witness) w.push_back(coord);
        j["witness"] = w;
        j["failure_bound"] = nullptr;
    } else {
        j["witness"] = nullptr;
        j["failure_bound"] = v.failure_bound;
    }
    return j;
}

} // namespace orthinv

#endif
