#include "gprisp/config.hpp"

#include <set>

#include <json.hpp>

#include "gprisp/errors.hpp"

namespace gprisp {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& j, const std::set<std::string>& allowed,
                           const std::string& scope) {
    for (const auto& item : j.items())
        if (!allowed.contains(item.key()))
            throw invalid_input("config: unknown field '" + scope + item.key() + "'");
}

double number_field(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) throw invalid_input("config: field '" + key + "' must be a number");
    return j.at(key).get<double>();
}

int int_field(const json& j, const std::string& key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer())
        throw invalid_input("config: field '" + key + "' must be an integer");
    return j.at(key).get<int>();
}

SourceSpec parse_source(const json& j) {
    reject_unknown_fields(j, {"variant", "params"}, "source.");
    if (!j.contains("variant") || !j.at("variant").is_string())
        throw invalid_input("config: field 'source.variant' must be a string");
    const std::string variant = j.at("variant").get<std::string>();
    const json params = j.contains("params") ? j.at("params") : json::array();
    if (!params.is_array()) throw invalid_input("config: field 'source.params' must be an array");

    if (variant == "gaussian-mix") {
        std::vector<GaussianTerm> terms;
        for (const auto& t : params) {
            if (!t.is_array() || t.size() != 3)
                throw invalid_input("config: 'source.params' entries must be "
                                    "[amplitude, center, width] triples");
            terms.push_back({t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
        }
        if (terms.empty()) throw invalid_input("config: 'source.params' needs >= 1 Gaussian");
        return SourceSpec::gaussian_mix(std::move(terms));
    }
    if (variant == "hat") {
        if (!params.empty()) throw invalid_input("config: 'hat' source takes no params");
        return SourceSpec::hat();
    }
    if (variant == "box") {
        if (params.size() != 3)
            throw invalid_input("config: 'box' source takes [amplitude, lo, hi]");
        return SourceSpec::box(params[0].get<double>(), params[1].get<double>(),
                               params[2].get<double>());
    }
    if (variant == "fourier") {
        std::vector<double> coeffs;
        for (const auto& v : params) {
            if (!v.is_number()) throw invalid_input("config: 'fourier' params must be numbers");
            coeffs.push_back(v.get<double>());
        }
        return SourceSpec::fourier(std::move(coeffs));
    }
    throw invalid_input("config: unknown field value 'source.variant' = '" + variant + "'");
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw invalid_input(std::string("config: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw invalid_input("config: top level must be a JSON object");

    static const std::set<std::string> allowed = {
        "c", "c0", "T", "M", "kappa", "omega", "nu", "N", "alpha",
        "gamma", "seed", "seeds", "source", "method", "oversample"};
    reject_unknown_fields(j, allowed, "");

    ExperimentConfig cfg;
    try {
        cfg.physics.c = number_field(j, "c", cfg.physics.c);
        cfg.physics.c0 = number_field(j, "c0", cfg.physics.c0);
        cfg.physics.T = number_field(j, "T", cfg.physics.T);
        cfg.physics.kappa = number_field(j, "kappa", cfg.physics.kappa);
        cfg.physics.M = int_field(j, "M", cfg.physics.M);
        cfg.omega = number_field(j, "omega", cfg.omega);
        cfg.nu = number_field(j, "nu", cfg.nu);
        cfg.modes = int_field(j, "N", cfg.modes);
        cfg.alpha = number_field(j, "alpha", cfg.alpha);
        cfg.gamma = number_field(j, "gamma", cfg.gamma);
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
                throw invalid_input("config: field 'seed' must be an integer");
            cfg.seed = j.at("seed").get<std::uint64_t>();
        }
        cfg.seed_count = int_field(j, "seeds", cfg.seed_count);
        if (j.contains("source")) cfg.source = parse_source(j.at("source"));
        if (j.contains("method")) {
            const std::string m = j.at("method").get<std::string>();
            if (m == "spectral") cfg.method = Method::spectral;
            else if (m == "volterra") cfg.method = Method::volterra;
            else throw invalid_input("config: field 'method' must be 'spectral' or 'volterra'");
        }
        cfg.oversample = int_field(j, "oversample", cfg.oversample);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("config: malformed value: ") + e.what());
    }

    cfg.physics.validate();
    if (!(cfg.omega > 0.0)) throw invalid_input("config: field 'omega' must be > 0");
    if (cfg.nu < 0.0) throw invalid_input("config: field 'nu' must be >= 0");
    if (cfg.modes < 1) throw invalid_input("config: field 'N' must be >= 1");
    if (cfg.alpha < 0.0) throw invalid_input("config: field 'alpha' must be >= 0");
    if (cfg.gamma < 0.0) throw invalid_input("config: field 'gamma' must be >= 0");
    if (cfg.seed_count < 1) throw invalid_input("config: field 'seeds' must be >= 1");
    if (cfg.oversample < 1) throw invalid_input("config: field 'oversample' must be >= 1");
    return cfg;
}

}  // namespace gprisp
