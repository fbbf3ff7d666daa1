#include "relcharge/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "relcharge/invariants.hpp"

namespace relcharge {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& context) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key))
            throw ConfigError("unknown key '" + key + "' in " + context);
    }
}

const json& need(const json& j, const std::string& key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError("missing key '" + key + "' in " + context);
    return *it;
}

double need_number(const json& j, const std::string& key, const std::string& context) {
    const json& v = need(j, key, context);
    if (!v.is_number()) throw ConfigError("key '" + key + "' in " + context + " must be a number");
    return v.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) throw ConfigError("key '" + key + "' must be a number");
    return it->get<double>();
}

Profile parse_profile(const json& j, const std::string& context) {
    if (!j.is_object()) throw ConfigError(context + " must be an object");
    const std::string type = need(j, "type", context).get<std::string>();
    try {
        if (type == "zero") {
            check_keys(j, {"type"}, context);
            return Profile::zero();
        }
        if (type == "sinusoid") {
            check_keys(j, {"type", "amplitude", "omega"}, context);
            return Profile::sinusoid(need_number(j, "amplitude", context),
                                     need_number(j, "omega", context));
        }
        if (type == "cosine") {
            check_keys(j, {"type", "amplitude", "omega"}, context);
            return Profile::cosine(need_number(j, "amplitude", context),
                                   need_number(j, "omega", context));
        }
        if (type == "polynomial") {
            check_keys(j, {"type", "coeffs"}, context);
            const json& c = need(j, "coeffs", context);
            if (!c.is_array()) throw ConfigError("'coeffs' in " + context + " must be an array");
            return Profile::polynomial(c.get<std::vector<double>>());
        }
        if (type == "gaussian_sinusoid") {
            check_keys(j, {"type", "amplitude", "omega", "sigma"}, context);
            return Profile::gaussian_sinusoid(need_number(j, "amplitude", context),
                                              need_number(j, "omega", context),
                                              need_number(j, "sigma", context));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(context + ": " + e.what());
    }
    throw ConfigError("unknown profile type '" + type + "' in " + context +
                      "; valid: cosine, gaussian_sinusoid, polynomial, sinusoid, zero");
}

FieldSpec parse_field(const json& j) {
    if (!j.is_object()) throw ConfigError("'field' must be an object");
    const std::string name = need(j, "name", "field").get<std::string>();
    try {
        if (name == "free") {
            check_keys(j, {"name"}, "field");
            return Free{};
        }
        if (name == "plane_wave") {
            check_keys(j, {"name", "f1", "f2"}, "field");
            return PlaneWave{parse_profile(need(j, "f1", "field"), "field.f1"),
                             parse_profile(need(j, "f2", "field"), "field.f2")};
        }
        if (name == "tm_mode") {
            check_keys(j, {"name", "f"}, "field");
            return TmMode{parse_profile(need(j, "f", "field"), "field.f")};
        }
        if (name == "undulator") {
            check_keys(j, {"name", "B0", "omega"}, "field");
            Undulator u{need_number(j, "B0", "field"), need_number(j, "omega", "field")};
            if (u.omega <= 0.0) throw ConfigError("undulator omega must be positive");
            return u;
        }
        if (name == "helical_boost") {
            check_keys(j, {"name", "F0", "omega"}, "field");
            HelicalBoost h{need_number(j, "F0", "field"), need_number(j, "omega", "field")};
            if (h.omega <= 0.0) throw ConfigError("helical_boost omega must be positive");
            return h;
        }
        if (name == "vortex") {
            check_keys(j, {"name", "B0", "omega"}, "field");
            Vortex v{need_number(j, "B0", "field"), need_number(j, "omega", "field")};
            if (v.omega <= 0.0) throw ConfigError("vortex omega must be positive");
            return v;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("field: ") + e.what());
    }
    throw ConfigError("unknown field name '" + name +
                      "'; valid: free, helical_boost, plane_wave, tm_mode, undulator, vortex");
}

void validate(RunConfig& cfg) {
    const std::string system = field_name(cfg.field);

    if (cfg.span[0] != cfg.launch_time())
        throw ConfigError("span[0] must equal the initial state's time");

    if (std::holds_alternative<TmMode>(cfg.field)) {
        if (cfg.form != Form::front) throw ConfigError("tm_mode runs in the front form");
        const double a = cfg.span[0], b = cfg.span[1];
        if (a == 0.0 || b == 0.0 || (a > 0) != (b > 0))
            throw ConfigError("tm_mode span must exclude x+ = 0");
    }
    if (const auto* hb = std::get_if<HelicalBoost>(&cfg.field)) {
        if (cfg.form != Form::front) throw ConfigError("helical_boost runs in the front form");
        if (cfg.initial_front.p_minus == 0.0 ||
            hb->F0 / (2.0 * cfg.initial_front.p_minus) <= 0.0)
            throw ConfigError("helical_boost requires F0 / (2 p_minus) > 0");
    }
    if (std::holds_alternative<Vortex>(cfg.field)) {
        if (cfg.form != Form::front) throw ConfigError("vortex runs in the front form");
        if (cfg.initial_front.p_minus == 0.0)
            throw ConfigError("vortex requires p_minus != 0");
    }
    if (std::holds_alternative<Undulator>(cfg.field) && cfg.form != Form::instant)
        throw ConfigError("undulator runs in the instant form");

    if (!cfg.tracked.empty()) {
        std::vector<std::string> known;
        if (cfg.form == Form::front) {
            const auto set = front_invariants(cfg.field, cfg.launch_time());
            known = set.quantity_names();
            for (const auto& f : set.identities) known.push_back(f.name);
        } else {
            const auto set = instant_invariants(cfg.field);
            known = set.quantity_names();
            for (const auto& f : set.identities) known.push_back(f.name);
        }
        for (const auto& name : cfg.tracked) {
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                std::string valid;
                for (const auto& k : known) valid += (valid.empty() ? "" : ", ") + k;
                throw ConfigError("unknown tracked invariant '" + name + "' for " + system +
                                  (valid.empty() ? " (none available)" : "; valid: " + valid));
            }
        }
    }

    if (cfg.sweep) {
        if (cfg.sweep->parameter != "amplitude")
            throw ConfigError("unsupported sweep parameter '" + cfg.sweep->parameter +
                              "'; valid: amplitude");
        if (cfg.sweep->count < 1) throw ConfigError("sweep count must be >= 1");
        if (!(cfg.sweep->min <= cfg.sweep->max))
            throw ConfigError("sweep min must not exceed max");
        try {
            (void)with_amplitude(cfg.field, cfg.sweep->min);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("sweep: ") + e.what());
        }
    }

    if (cfg.rel_tol <= 0 || cfg.abs_tol <= 0)
        throw ConfigError("tolerances must be positive");
    if (cfg.scan.samples < 2) throw ConfigError("scan samples must be >= 2");
    if (cfg.scan.tol <= 0) throw ConfigError("scan tol must be positive");
    if (cfg.compare.tolerance <= 0) throw ConfigError("compare tolerance must be positive");
    if (cfg.compare.grid < 2) throw ConfigError("compare grid must be >= 2");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    check_keys(j,
               {"schema", "field", "form", "initial", "span", "rel_tol", "abs_tol", "tracked",
                "output", "seed", "workers", "scan", "compare", "sweep"},
               "config");

    if (need(j, "schema", "config").get<int>() != 1)
        throw ConfigError("unsupported schema version; expected 1");

    RunConfig cfg;
    cfg.field = parse_field(need(j, "field", "config"));

    const std::string form = need(j, "form", "config").get<std::string>();
    if (form == "front")
        cfg.form = Form::front;
    else if (form == "instant")
        cfg.form = Form::instant;
    else
        throw ConfigError("unknown form '" + form + "'; valid: front, instant");

    const json& init = need(j, "initial", "config");
    if (cfg.form == Form::front) {
        check_keys(init, {"x_plus", "x_minus", "x", "y", "p_minus", "p1", "p2"}, "initial");
        cfg.initial_front = {need_number(init, "x_plus", "initial"),
                             need_number(init, "x_minus", "initial"),
                             need_number(init, "x", "initial"),
                             need_number(init, "y", "initial"),
                             need_number(init, "p_minus", "initial"),
                             need_number(init, "p1", "initial"),
                             need_number(init, "p2", "initial")};
    } else {
        check_keys(init, {"t", "x", "y", "z", "p1", "p2", "p3"}, "initial");
        cfg.initial_instant = {need_number(init, "t", "initial"),
                               need_number(init, "x", "initial"),
                               need_number(init, "y", "initial"),
                               need_number(init, "z", "initial"),
                               need_number(init, "p1", "initial"),
                               need_number(init, "p2", "initial"),
                               need_number(init, "p3", "initial")};
    }

    const json& span = need(j, "span", "config");
    if (!span.is_array() || span.size() != 2)
        throw ConfigError("'span' must be an array of two numbers");
    cfg.span = {span[0].get<double>(), span[1].get<double>()};

    cfg.rel_tol = number_or(j, "rel_tol", cfg.rel_tol);
    cfg.abs_tol = number_or(j, "abs_tol", cfg.abs_tol);

    if (auto it = j.find("tracked"); it != j.end()) {
        if (!it->is_array()) throw ConfigError("'tracked' must be an array of names");
        cfg.tracked = it->get<std::vector<std::string>>();
    }

    if (auto it = j.find("output"); it != j.end()) {
        check_keys(*it, {"csv", "summary"}, "output");
        if (it->contains("csv")) cfg.csv_path = (*it)["csv"].get<std::string>();
        if (it->contains("summary")) cfg.summary_path = (*it)["summary"].get<std::string>();
    }

    if (auto it = j.find("seed"); it != j.end()) cfg.seed = it->get<std::uint64_t>();
    if (auto it = j.find("workers"); it != j.end()) cfg.workers = it->get<std::size_t>();

    if (auto it = j.find("scan"); it != j.end()) {
        check_keys(*it, {"samples", "tol"}, "scan");
        if (it->contains("samples")) cfg.scan.samples = (*it)["samples"].get<std::size_t>();
        cfg.scan.tol = number_or(*it, "tol", cfg.scan.tol);
    }
    if (auto it = j.find("compare"); it != j.end()) {
        check_keys(*it, {"tolerance", "grid"}, "compare");
        cfg.compare.tolerance = number_or(*it, "tolerance", cfg.compare.tolerance);
        if (it->contains("grid")) cfg.compare.grid = (*it)["grid"].get<std::size_t>();
    }
    if (auto it = j.find("sweep"); it != j.end()) {
        check_keys(*it, {"parameter", "min", "max", "count"}, "sweep");
        SweepConfig sweep;
        sweep.parameter = need(*it, "parameter", "sweep").get<std::string>();
        sweep.min = need_number(*it, "min", "sweep");
        sweep.max = need_number(*it, "max", "sweep");
        sweep.count = need(*it, "count", "sweep").get<std::size_t>();
        cfg.sweep = sweep;
    }

    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

}  // namespace relcharge
