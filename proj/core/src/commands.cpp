#include "mrs/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <memory>
#include <stdexcept>

#include "mrs/error.hpp"
#include "mrs/io.hpp"
#include "mrs/matching.hpp"
#include "mrs/mdrg.hpp"
#include "mrs/mrs.hpp"
#include "mrs/parallel.hpp"
#include "mrs/synthetic.hpp"

namespace mrs {

namespace fs = std::filesystem;

void RunConfig::validate() const {
    if (levels < 1) throw std::invalid_argument("--levels must be >= 1");
    weights.validate();
    if (format != "json" && format != "csv" && format != "dot")
        throw std::invalid_argument("--format must be json, csv or dot");
    switch (command) {
        case Command::build:
            if (inputs.size() != 1) throw std::invalid_argument("build takes one input file");
            break;
        case Command::compare:
            if (inputs.size() != 2) throw std::invalid_argument("compare takes two input files");
            break;
        case Command::timeseries:
            if (inputs.size() < 2)
                throw std::invalid_argument("timeseries takes at least two input files");
            break;
        case Command::gen_synthetic:
            if (family != "double-torus-height" && family != "ring-height" &&
                family != "splitting-blobs" && family != "random-smooth")
                throw std::invalid_argument(
                    "--family must be double-torus-height, ring-height, splitting-blobs or "
                    "random-smooth");
            break;
    }
}

namespace {

fs::path ensure_out_dir(const RunConfig& cfg) {
    fs::path dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError(cfg.out_dir + ": cannot create output directory");
    return dir;
}

std::shared_ptr<const MultiFieldDataset> load_shared(const std::string& path) {
    return std::make_shared<const MultiFieldDataset>(load_dataset(path));
}

}  // namespace

void cmd_build(const RunConfig& cfg) {
    cfg.validate();
    const fs::path dir = ensure_out_dir(cfg);
    auto ds = load_shared(cfg.inputs[0]);
    const MrsStructure mrs = build_mrs(ds, cfg.levels, cfg.mode);

    write_text_file((dir / "mrs.json").string(), mrs_to_json(mrs));
    for (int k = 0; k < mrs.n_levels; ++k) {
        const std::string stem = "jcn_" + std::to_string(k);
        write_text_file((dir / (stem + ".json")).string(), jcn_to_json(mrs.jcns[k]));
        write_text_file((dir / (stem + ".dot")).string(), jcn_to_dot(mrs.jcns[k]));
        const Mdrg mdrg = build_mdrg(mrs.jcns[k]);
        write_text_file((dir / ("mdrg_" + std::to_string(k) + ".json")).string(),
                        mdrg_to_json(mdrg));
    }
}

double cmd_compare(const RunConfig& cfg) {
    cfg.validate();
    const fs::path dir = ensure_out_dir(cfg);
    auto f = load_shared(cfg.inputs[0]);
    auto g = load_shared(cfg.inputs[1]);
    if (f->n_fields != g->n_fields)
        throw DataError("field count mismatch: " + std::to_string(f->n_fields) + " vs " +
                        std::to_string(g->n_fields));

    const MrsStructure mrs_f = build_mrs(f, cfg.levels, cfg.mode);
    const MrsStructure mrs_g = build_mrs(g, cfg.levels, cfg.mode);
    const SimilarityReport report = compare_mrs(mrs_f, mrs_g, cfg.weights, cfg.symmetrize);

    write_text_file((dir / "report.json").string(), report_to_json(report));
    write_text_file((dir / "mpair.json").string(),
                    mpairs_to_json(report.pairs, report.pair_phi));
    if (cfg.format == "csv")
        write_text_file((dir / "report.csv").string(),
                        csv_header() + csv_row(0, cfg.levels, cfg.weight_label, report.phi_bar));

    std::printf("%.9f\n", report.phi_bar);
    return report.phi_bar;
}

TimeseriesResult cmd_timeseries(const RunConfig& cfg) {
    cfg.validate();
    const fs::path dir = ensure_out_dir(cfg);
    const int steps = static_cast<int>(cfg.inputs.size());

    // Each step's structure is built once and reused for both neighbouring
    // comparisons.  Builds are independent, so they run in parallel.
    std::vector<MrsStructure> structures(steps);
    parallel_for(steps, [&](std::int64_t t) {
        try {
            structures[t] = build_mrs(load_shared(cfg.inputs[t]), cfg.levels, cfg.mode);
        } catch (const std::exception& e) {
            throw DataError("step " + std::to_string(t) + ": " + e.what());
        }
    });
    for (int t = 1; t < steps; ++t)
        if (structures[t].jcns[0].n_fields != structures[0].jcns[0].n_fields)
            throw DataError("step " + std::to_string(t) + ": field count differs from step 0");

    std::vector<std::pair<std::string, Weights>> presets = {
        {"equal", Weights::equal()},
        {"volume", Weights::volume_only()},
        {"range", Weights::range_only()},
        {"b0", Weights::b0_only()},
        {"degree", Weights::degree_only()},
    };
    if (cfg.custom_weights) presets.emplace_back("custom", cfg.weights);

    // phi[t][p][L-1] = similarity of (t, t+1) under preset p with the first
    // L levels.  One matching run per (t, preset) serves every prefix.
    TimeseriesResult result;
    result.csv = csv_header();
    std::vector<std::vector<std::vector<double>>> phi(
        steps - 1, std::vector<std::vector<double>>(presets.size(),
                                                    std::vector<double>(cfg.levels, 0.0)));
    parallel_for(steps - 1, [&](std::int64_t t) {
        for (size_t p = 0; p < presets.size(); ++p) {
            const SimilarityReport rep = compare_mrs(structures[t], structures[t + 1],
                                                     presets[p].second, cfg.symmetrize);
            double acc = 0.0;
            for (int L = 1; L <= cfg.levels; ++L) {
                acc += rep.levels[L - 1].phi;
                phi[t][p][L - 1] = acc / L;
            }
        }
    });

    for (int t = 0; t + 1 < steps; ++t)
        for (int L = 1; L <= cfg.levels; ++L)
            for (size_t p = 0; p < presets.size(); ++p)
                result.csv += csv_row(t, L, presets[p].first, phi[t][p][L - 1]);

    for (int L = 1; L <= cfg.levels; ++L) {
        for (size_t p = 0; p < presets.size(); ++p) {
            TimeseriesResult::ArgminEntry entry;
            entry.level_count = L;
            entry.weight_preset = presets[p].first;
            for (int t = 0; t + 1 < steps; ++t) {
                if (entry.argmin_step == -1 || phi[t][p][L - 1] < entry.phi_bar) {
                    entry.argmin_step = t;
                    entry.phi_bar = phi[t][p][L - 1];
                }
            }
            result.argmin.push_back(entry);
        }
    }

    write_text_file((dir / "timeseries.csv").string(), result.csv);
    {
        std::string json = "[\n";
        for (size_t i = 0; i < result.argmin.size(); ++i) {
            const auto& e = result.argmin[i];
            char buf[192];
            std::snprintf(buf, sizeof(buf),
                          "  {\"level_count\": %d, \"weight_preset\": \"%s\", "
                          "\"argmin_step\": %d, \"phi_bar\": %.9f}%s\n",
                          e.level_count, e.weight_preset.c_str(), e.argmin_step, e.phi_bar,
                          i + 1 < result.argmin.size() ? "," : "");
            json += buf;
        }
        json += "]\n";
        write_text_file((dir / "argmin.json").string(), json);
    }

    for (const auto& e : result.argmin)
        std::printf("argmin level_count=%d preset=%s step=%d phi_bar=%.9f\n", e.level_count,
                    e.weight_preset.c_str(), e.argmin_step, e.phi_bar);
    return result;
}

std::vector<std::string> cmd_gen_synthetic(const RunConfig& cfg) {
    cfg.validate();
    const fs::path dir = ensure_out_dir(cfg);
    if (cfg.dims.size() != 2 && cfg.dims.size() != 3)
        throw std::invalid_argument("--dims must have 2 or 3 axes");

    if (cfg.family != "random-smooth" && cfg.dims.size() != 2)
        throw std::invalid_argument("--family " + cfg.family + " needs a 2-axis grid");

    std::vector<std::string> written;
    auto emit = [&](const MultiFieldDataset& ds, const std::string& name) {
        const std::string path = (dir / name).string();
        save_dataset(ds, path, FileFormat::header_binary);
        written.push_back(path);
    };

    if (cfg.family == "splitting-blobs") {
        const auto series =
            gen_splitting_blobs(cfg.dims[0], cfg.dims[1], cfg.steps, cfg.split_step, cfg.seed);
        for (int t = 0; t < static_cast<int>(series.size()); ++t) {
            char name[64];
            std::snprintf(name, sizeof(name), "step_%03d.mrsfield", t);
            emit(series[t], name);
        }
    } else if (cfg.family == "ring-height") {
        emit(gen_ring_height(cfg.dims[0], cfg.dims[1]), "ring_height.mrsfield");
    } else if (cfg.family == "double-torus-height") {
        emit(gen_double_torus_height(cfg.dims[0], cfg.dims[1]), "double_torus_height.mrsfield");
    } else {  // random-smooth
        emit(gen_random_smooth(cfg.dims, cfg.gen_fields, cfg.seed), "random_smooth.mrsfield");
    }

    for (const auto& p : written) std::printf("wrote %s\n", p.c_str());
    return written;
}

}  // namespace mrs
