#pragma once

#include <json.hpp>

#include "jnpoly/oracle.hpp"
#include "jnpoly/preimage.hpp"

namespace jnpoly {

inline nlohmann::json to_json(const BasicEvalRecord& rec) {
    return nlohmann::json{{"tuple", rec.tuple},
                          {"value", rec.value.to_text()},
                          {"parity", rec.parity == Parity::Pure ? "odd" : "even"}};
}

inline nlohmann::json to_json(const ClassificationReport& report) {
    nlohmann::json j;
    j["class"] = std::string(image_class_name(report.image_class));
    j["real_witness"] = report.real_witness ? to_json(*report.real_witness)
                                            : nlohmann::json(nullptr);
    j["pure_witness"] = report.pure_witness ? to_json(*report.pure_witness)
                                            : nlohmann::json(nullptr);
    j["tuples_examined"] = report.tuples_examined;
    return j;
}

inline nlohmann::json to_json(const SampleReport& report) {
    nlohmann::json j;
    j["trials"] = report.trials;
    j["empirical_class"] = std::string(image_class_name(report.empirical));
    j["nonzero_scalar_seen"] = report.nonzero_scalar_seen;
    j["nonzero_pure_seen"] = report.nonzero_pure_seen;
    j["scalar_exhibit"] = report.scalar_exhibit ? nlohmann::json(report.scalar_exhibit->to_text())
                                                : nlohmann::json(nullptr);
    j["pure_exhibit"] = report.pure_exhibit ? nlohmann::json(report.pure_exhibit->to_text())
                                            : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json to_json(const ConsistencyReport& report) {
    return nlohmann::json{{"exact", to_json(report.exact)},
                          {"sampled", to_json(report.sampled)},
                          {"consistent", report.consistent}};
}

}  // namespace jnpoly
