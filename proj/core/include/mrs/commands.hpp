#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrs/jcn.hpp"
#include "mrs/similarity.hpp"

namespace mrs {

/// Resolved configuration of one CLI invocation.
struct RunConfig {
    enum class Command { build, compare, timeseries, gen_synthetic };
    Command command = Command::build;

    int levels = 3;
    Weights weights = Weights::equal();
    std::string weight_label = "equal";
    bool custom_weights = false;  // explicit w1,w2,w3,w4 on the command line
    BuildMode mode = BuildMode::fragment;
    bool symmetrize = false;
    std::vector<std::string> inputs;
    std::string out_dir = ".";
    std::string format = "json";  // json | csv | dot

    // gen-synthetic parameters
    std::string family;            // double-torus-height | ring-height |
                                   // splitting-blobs | random-smooth
    std::vector<int> dims{16, 16};
    std::uint64_t seed = 1;
    int steps = 10;
    int split_step = 6;
    int gen_fields = 2;

    void validate() const;  // throws std::invalid_argument on bad combinations
};

/// Exports mrs.json, per-level jcn_<k>.json / jcn_<k>.dot and mdrg_<k>.json
/// for one dataset.
void cmd_build(const RunConfig& cfg);

/// Writes report.json and mpair.json, prints the overall similarity to
/// stdout as one 9-decimal line, and returns it.
double cmd_compare(const RunConfig& cfg);

struct TimeseriesResult {
    std::string csv;  // step,level_count,weight_preset,phi_bar rows
    struct ArgminEntry {
        int level_count = 0;
        std::string weight_preset;
        int argmin_step = -1;
        double phi_bar = 0.0;
    };
    std::vector<ArgminEntry> argmin;
};

/// Pairwise comparison of consecutive steps for every resolution prefix and
/// weight preset.  Writes timeseries.csv and argmin.json.
TimeseriesResult cmd_timeseries(const RunConfig& cfg);

/// Writes deterministic synthetic dataset files; returns the paths.
std::vector<std::string> cmd_gen_synthetic(const RunConfig& cfg);

}  // namespace mrs
