#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relcharge/dynamics.hpp"
#include "relcharge/fields.hpp"

namespace relcharge {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScanConfig {
    std::size_t samples{40};
    double tol{1e-9};
};

struct CompareConfig {
    double tolerance{1e-6};
    std::size_t grid{400};
};

struct SweepConfig {
    std::string parameter{"amplitude"};
    double min{0};
    double max{1};
    std::size_t count{1};
};

// One run description; strict schema, unknown keys rejected.
struct RunConfig {
    FieldSpec field{Free{}};
    Form form{Form::front};
    FrontFormState initial_front{};
    InstantFormState initial_instant{};
    std::array<double, 2> span{{0.0, 0.0}};
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    std::vector<std::string> tracked;
    std::string csv_path{"trajectory.csv"};
    std::string summary_path{"summary.json"};
    std::uint64_t seed{1};
    std::size_t workers{0};  // 0 = hardware concurrency
    ScanConfig scan{};
    CompareConfig compare{};
    std::optional<SweepConfig> sweep;

    double launch_time() const {
        return form == Form::front ? initial_front.x_plus : initial_instant.t;
    }
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

}  // namespace relcharge
