#include "relcharge/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iostream>
#include <thread>

#include "relcharge/closedform.hpp"
#include "relcharge/report.hpp"
#include "relcharge/symmetry.hpp"

namespace relcharge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class State>
std::vector<PhaseFunction<State>> resolve_tracked(const InvariantSet<State>& set,
                                                  const std::vector<std::string>& names) {
    std::vector<PhaseFunction<State>> out;
    for (const auto& name : names) {
        const PhaseFunction<State>* f = set.find(name);
        if (!f) throw ConfigError("unknown tracked invariant '" + name + "'");
        out.push_back(*f);
    }
    return out;
}

InvariantSet<FrontFormState> invariant_set_for(const FieldSpec& field, double launch,
                                               const FrontFormState&) {
    return front_invariants(field, launch);
}

InvariantSet<InstantFormState> invariant_set_for(const FieldSpec& field, double,
                                                 const InstantFormState&) {
    return instant_invariants(field);
}

JsonValue common_header(const RunConfig& cfg, const char* command) {
    JsonValue j = JsonValue::object();
    j.set("schema", 1);
    j.set("command", command);
    j.set("field", field_name(cfg.field));
    j.set("form", cfg.form == Form::front ? "front" : "instant");
    j.set("seed", static_cast<long long>(cfg.seed));
    return j;
}

template <class State>
std::string trajectory_csv(const Trajectory<State>& traj) {
    std::string out;
    const auto cols = state_column_names(traj.form);
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    for (const auto& name : traj.tracked_names) out += "," + name;
    out += '\n';
    for (const auto& s : traj.samples) {
        const PhaseCoords c = coords_of(s.state);
        out += format_double(c.time);
        for (double q : c.q) out += "," + format_double(q);
        for (double p : c.p) out += "," + format_double(p);
        for (double v : s.tracked) out += "," + format_double(v);
        out += '\n';
    }
    return out;
}

template <class State>
int simulate_impl(const RunConfig& cfg, const State& initial, const CommandOptions& opts) {
    const auto set = invariant_set_for(cfg.field, cfg.launch_time(), initial);
    const auto tracked = resolve_tracked(set, cfg.tracked);

    IntegrateOptions iopts;
    iopts.rel_tol = cfg.rel_tol;
    iopts.abs_tol = cfg.abs_tol;

    JsonValue summary = common_header(cfg, "simulate");
    summary.set("rel_tol", cfg.rel_tol);
    summary.set("abs_tol", cfg.abs_tol);
    JsonValue span = JsonValue::array();
    span.push(cfg.span[0]);
    span.push(cfg.span[1]);
    summary.set("span", std::move(span));

    const auto start = Clock::now();
    Trajectory<State> traj;
    try {
        traj = integrate(cfg.field, initial, cfg.span[1], tracked, iopts);
    } catch (const std::domain_error& e) {
        summary.set("status", "error");
        summary.set("error", e.what());
        summary.set("wall_time_s", seconds_since(start));
        write_text_file((opts.out_dir / cfg.summary_path).string(), summary.dump());
        if (!opts.quiet) std::cerr << "simulate: " << e.what() << "\n";
        return kExitDomain;
    }

    write_text_file((opts.out_dir / cfg.csv_path).string(), trajectory_csv(traj));

    JsonValue drift = JsonValue::object();
    for (const auto& d : drift_along(traj)) {
        JsonValue e = JsonValue::object();
        e.set("initial", d.initial);
        e.set("max_abs", d.max_abs_drift);
        e.set("max_rel", d.max_rel_drift);
        drift.set(d.name, std::move(e));
    }
    summary.set("invariant_drift", std::move(drift));
    summary.set("steps", static_cast<long long>(traj.steps));
    summary.set("rejected_steps", static_cast<long long>(traj.rejected_steps));
    summary.set("samples", static_cast<long long>(traj.samples.size()));
    summary.set("termination", to_string(traj.status));
    summary.set("status", traj.status == TerminationStatus::completed ? "ok" : "error");
    summary.set("csv", cfg.csv_path);
    summary.set("wall_time_s", seconds_since(start));
    write_text_file((opts.out_dir / cfg.summary_path).string(), summary.dump());

    if (!opts.quiet)
        std::cout << "simulate: " << traj.samples.size() << " samples, " << to_string(traj.status)
                  << "\n";
    return traj.status == TerminationStatus::completed ? kExitOk : kExitDomain;
}

}  // namespace

int cmd_simulate(RunConfig cfg, const CommandOptions& opts) {
    if (opts.seed) cfg.seed = *opts.seed;
    std::filesystem::create_directories(opts.out_dir);
    if (cfg.form == Form::front) return simulate_impl(cfg, cfg.initial_front, opts);
    return simulate_impl(cfg, cfg.initial_instant, opts);
}

int cmd_scan(RunConfig cfg, const CommandOptions& opts) {
    if (opts.seed) cfg.seed = *opts.seed;
    std::filesystem::create_directories(opts.out_dir);

    const auto points = scan_sample_points(cfg.field, cfg.scan.samples, cfg.seed);
    SymmetryScanResult result;
    try {
        result = symmetry_scan(cfg.field, points, cfg.scan.tol);
    } catch (const std::invalid_argument& e) {
        if (!opts.quiet) std::cerr << "scan: " << e.what() << "\n";
        return kExitDomain;
    }

    JsonValue j = common_header(cfg, "scan");
    j.set("dimension", result.dimension());
    j.set("sample_count", static_cast<long long>(result.sample_count));
    j.set("tol", cfg.scan.tol);
    JsonValue names = JsonValue::array();
    for (const auto& n : generator_basis_names()) names.push(n);
    j.set("generator_order", std::move(names));
    JsonValue sv = JsonValue::array();
    for (double v : result.singular_values) sv.push(v);
    j.set("singular_values", std::move(sv));
    JsonValue basis = JsonValue::array();
    for (const auto& coeff : result.coefficients) {
        JsonValue row = JsonValue::array();
        for (double c : coeff) row.push(c);
        basis.push(std::move(row));
    }
    j.set("basis", std::move(basis));
    JsonValue residuals = JsonValue::array();
    for (double r : result.residuals) residuals.push(r);
    j.set("residuals", std::move(residuals));

    write_text_file((opts.out_dir / cfg.summary_path).string(), j.dump());
    if (!opts.quiet) std::cout << "scan: dimension " << result.dimension() << "\n";
    return kExitOk;
}

int cmd_compare(RunConfig cfg, const CommandOptions& opts) {
    if (opts.seed) cfg.seed = *opts.seed;
    std::filesystem::create_directories(opts.out_dir);

    if (cfg.form != Form::front) {
        if (!opts.quiet) std::cerr << "compare: no closed form\n";
        return kExitUnsupported;
    }

    JsonValue j = common_header(cfg, "compare");
    j.set("tolerance", cfg.compare.tolerance);
    j.set("grid", static_cast<long long>(cfg.compare.grid));

    const auto start = Clock::now();
    try {
        const ClosedFormOrbit orbit = closed_form_orbit(cfg.field, cfg.initial_front);
        IntegrateOptions iopts;
        iopts.rel_tol = cfg.rel_tol;
        iopts.abs_tol = cfg.abs_tol;
        const auto traj = integrate(cfg.field, cfg.initial_front, cfg.span[1], {}, iopts);
        if (traj.status != TerminationStatus::completed)
            throw std::domain_error(traj.diagnostic);

        const auto cols = state_column_names(Form::front);
        std::array<double, 6> dev{};
        const std::size_t n = cfg.compare.grid;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = cfg.span[0] + (cfg.span[1] - cfg.span[0]) * static_cast<double>(i) /
                                               static_cast<double>(n - 1);
            const PhaseCoords a = coords_of(traj.state_at(t));
            const PhaseCoords b = coords_of(orbit.at(t));
            for (int k = 0; k < 3; ++k) {
                dev[k] = std::max(dev[k], std::abs(a.q[k] - b.q[k]));
                dev[k + 3] = std::max(dev[k + 3], std::abs(a.p[k] - b.p[k]));
            }
        }
        JsonValue deviations = JsonValue::object();
        double max_dev = 0.0;
        for (int k = 0; k < 6; ++k) {
            deviations.set(cols[k + 1], dev[k]);
            max_dev = std::max(max_dev, dev[k]);
        }
        j.set("deviations", std::move(deviations));
        j.set("max_deviation", max_dev);
        const bool pass = max_dev <= cfg.compare.tolerance;
        j.set("pass", pass);
        j.set("wall_time_s", seconds_since(start));
        write_text_file((opts.out_dir / cfg.summary_path).string(), j.dump());
        if (!opts.quiet)
            std::cout << "compare: max deviation " << max_dev << (pass ? " (pass)" : " (fail)")
                      << "\n";
        return pass ? kExitOk : kExitFailure;
    } catch (const std::invalid_argument& e) {
        if (!opts.quiet) std::cerr << "compare: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::domain_error& e) {
        j.set("status", "error");
        j.set("error", e.what());
        write_text_file((opts.out_dir / cfg.summary_path).string(), j.dump());
        if (!opts.quiet) std::cerr << "compare: " << e.what() << "\n";
        return kExitDomain;
    }
}

namespace {

template <class State>
SweepRecord sweep_point(const RunConfig& cfg, const State& initial, std::size_t index,
                        double amplitude) {
    SweepRecord rec;
    rec.index = index;
    rec.amplitude = amplitude;
    try {
        const FieldSpec field = with_amplitude(cfg.field, amplitude);
        const auto set = invariant_set_for(field, cfg.launch_time(), initial);
        const auto tracked = resolve_tracked(set, cfg.tracked);
        IntegrateOptions iopts;
        iopts.rel_tol = cfg.rel_tol;
        iopts.abs_tol = cfg.abs_tol;
        const auto traj = integrate(field, initial, cfg.span[1], tracked, iopts);
        rec.status = traj.status == TerminationStatus::completed ? "completed" : traj.diagnostic;
        rec.drift = drift_along(traj);
    } catch (const std::exception& e) {
        rec.status = e.what();
    }
    return rec;
}

}  // namespace

SweepResult run_sweep(const RunConfig& cfg, std::size_t workers) {
    if (!cfg.sweep) throw ConfigError("sweep block missing from config");
    const SweepConfig& sw = *cfg.sweep;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    std::vector<double> amplitudes(sw.count);
    for (std::size_t i = 0; i < sw.count; ++i)
        amplitudes[i] =
            sw.count == 1
                ? sw.min
                : sw.min + (sw.max - sw.min) * static_cast<double>(i) / static_cast<double>(sw.count - 1);

    SweepResult result;
    result.workers = workers;
    result.records.resize(sw.count);

    const auto start = Clock::now();
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= sw.count) return;
            if (cfg.form == Form::front)
                result.records[i] = sweep_point(cfg, cfg.initial_front, i, amplitudes[i]);
            else
                result.records[i] = sweep_point(cfg, cfg.initial_instant, i, amplitudes[i]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    result.wall_time_s = seconds_since(start);
    return result;
}

int cmd_sweep(RunConfig cfg, const CommandOptions& opts) {
    if (opts.seed) cfg.seed = *opts.seed;
    std::filesystem::create_directories(opts.out_dir);

    std::size_t workers = cfg.workers;
    if (opts.workers) workers = *opts.workers;
    const SweepResult result = run_sweep(cfg, workers);

    // aggregate drift statistics per invariant
    JsonValue aggregate = JsonValue::object();
    for (std::size_t k = 0; k < cfg.tracked.size(); ++k) {
        std::vector<double> rel;
        double max_rel = 0.0;
        for (const auto& rec : result.records) {
            if (rec.status != "completed") continue;
            if (k < rec.drift.size()) {
                rel.push_back(rec.drift[k].max_rel_drift);
                max_rel = std::max(max_rel, rec.drift[k].max_rel_drift);
            }
        }
        JsonValue stats = JsonValue::object();
        stats.set("max_rel_drift", max_rel);
        if (!rel.empty()) {
            std::sort(rel.begin(), rel.end());
            const std::size_t n = rel.size();
            const double median = n % 2 ? rel[n / 2] : 0.5 * (rel[n / 2 - 1] + rel[n / 2]);
            stats.set("median_rel_drift", median);
        }
        aggregate.set(cfg.tracked[k], std::move(stats));
    }

    JsonValue records = JsonValue::array();
    std::size_t failures = 0;
    for (const auto& rec : result.records) {
        JsonValue r = JsonValue::object();
        r.set("index", static_cast<long long>(rec.index));
        r.set("amplitude", rec.amplitude);
        r.set("status", rec.status);
        if (rec.status == "completed") {
            JsonValue drift = JsonValue::object();
            for (const auto& d : rec.drift) drift.set(d.name, d.max_rel_drift);
            r.set("drift", std::move(drift));
        } else {
            ++failures;
        }
        records.push(std::move(r));
    }

    JsonValue j = common_header(cfg, "sweep");
    j.set("parameter", cfg.sweep->parameter);
    j.set("count", static_cast<long long>(cfg.sweep->count));
    j.set("workers", static_cast<long long>(result.workers));
    j.set("failures", static_cast<long long>(failures));
    j.set("aggregate", std::move(aggregate));
    j.set("records", std::move(records));
    j.set("wall_time_s", result.wall_time_s);
    write_text_file((opts.out_dir / cfg.summary_path).string(), j.dump());

    if (!opts.quiet)
        std::cout << "sweep: " << result.records.size() << " points, " << failures
                  << " failures, " << result.wall_time_s << " s\n";
    return failures == 0 ? kExitOk : kExitDomain;
}

}  // namespace relcharge
