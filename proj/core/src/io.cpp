#include "mrs/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mrs/error.hpp"

namespace mrs {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_dims_csv(const std::string& text, const std::string& context) {
    std::vector<int> dims;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            dims.push_back(std::stoi(tok));
        } catch (...) {
            throw DataError(context + ": bad dims value '" + tok + "'");
        }
    }
    if (dims.size() != 2 && dims.size() != 3)
        throw DataError(context + ": dims must have 2 or 3 axes");
    return dims;
}

MultiFieldDataset load_header_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError(path + ": cannot open file");

    std::string header;
    if (!std::getline(in, header)) throw DataError(path + ": missing header line");
    if (!header.empty() && header.back() == '\r') header.pop_back();

    std::stringstream hs(header);
    std::string magic, version;
    hs >> magic >> version;
    if (magic != "MRSFIELD" || version != "v1")
        throw DataError(path + ": malformed header (expected 'MRSFIELD v1 ...')");

    std::vector<int> dims;
    int n_fields = -1;
    bool dtype_ok = false, order_ok = false;
    std::string kv;
    while (hs >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw DataError(path + ": malformed header token '" + kv + "'");
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "dims") {
            dims = parse_dims_csv(val, path);
        } else if (key == "fields") {
            try {
                n_fields = std::stoi(val);
            } catch (...) {
                throw DataError(path + ": bad fields value '" + val + "'");
            }
        } else if (key == "dtype") {
            if (val != "f64") throw DataError(path + ": unsupported dtype '" + val + "'");
            dtype_ok = true;
        } else if (key == "order") {
            if (val != "row-major") throw DataError(path + ": unsupported order '" + val + "'");
            order_ok = true;
        } else {
            throw DataError(path + ": unknown header key '" + key + "'");
        }
    }
    if (dims.empty() || n_fields < 1 || !dtype_ok || !order_ok)
        throw DataError(path + ": incomplete header");

    GridSpec grid = GridSpec::regular(dims);
    const std::int64_t count = grid.vertex_count() * n_fields;
    std::vector<double> samples(count);
    in.read(reinterpret_cast<char*>(samples.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(count * sizeof(double)))
        throw DataError(path + ": sample block truncated (expected " + std::to_string(count) +
                        " doubles)");
    char extra;
    if (in.read(&extra, 1))
        throw DataError(path + ": trailing bytes after the sample block");

    return make_dataset(std::move(grid), n_fields, std::move(samples));
}

MultiFieldDataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError(path + ": cannot open file");

    std::vector<int> dims;
    std::vector<double> samples;
    int n_fields = -1;
    std::string line;
    std::int64_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty()) continue;
        if (trimmed[0] == '#') {
            const auto pos = trimmed.find("dims=");
            if (pos != std::string::npos) {
                std::string val = trimmed.substr(pos + 5);
                const auto end = val.find_first_of(" \t");
                if (end != std::string::npos) val = val.substr(0, end);
                dims = parse_dims_csv(val, path);
            }
            continue;
        }
        if (dims.empty())
            throw DataError(path + ": a '# dims=<d1,d2[,d3]>' comment must precede the data");

        std::vector<double> vals;
        std::stringstream ss(trimmed);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                vals.push_back(std::stod(tok));
            } catch (...) {
                throw DataError(path + ": bad value '" + tok + "' at row " + std::to_string(row));
            }
        }
        if (n_fields == -1) n_fields = static_cast<int>(vals.size());
        if (static_cast<int>(vals.size()) != n_fields)
            throw DataError(path + ": inconsistent column count at row " + std::to_string(row));
        samples.insert(samples.end(), vals.begin(), vals.end());
        ++row;
    }
    if (dims.empty()) throw DataError(path + ": no '# dims=' header and no data");
    if (n_fields < 1) throw DataError(path + ": no data rows");

    GridSpec grid = GridSpec::regular(dims);
    return make_dataset(std::move(grid), n_fields, std::move(samples));
}

}  // namespace

MultiFieldDataset load_dataset(const std::string& path, FileFormat format) {
    return format == FileFormat::header_binary ? load_header_binary(path) : load_csv(path);
}

MultiFieldDataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError(path + ": cannot open file");
    char magic[8] = {};
    in.read(magic, 8);
    in.close();
    if (std::memcmp(magic, "MRSFIELD", 8) == 0) return load_header_binary(path);
    return load_csv(path);
}

void save_dataset(const MultiFieldDataset& ds, const std::string& path, FileFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError(path + ": cannot open file for writing");

    std::string dims_csv;
    for (size_t a = 0; a < ds.grid.dims.size(); ++a) {
        if (a) dims_csv += ',';
        dims_csv += std::to_string(ds.grid.dims[a]);
    }

    if (format == FileFormat::header_binary) {
        out << "MRSFIELD v1 dims=" << dims_csv << " fields=" << ds.n_fields
            << " dtype=f64 order=row-major\n";
        out.write(reinterpret_cast<const char*>(ds.samples.data()),
                  static_cast<std::streamsize>(ds.samples.size() * sizeof(double)));
    } else {
        out << "# dims=" << dims_csv << " fields=" << ds.n_fields << "\n";
        char buf[64];
        for (std::int64_t v = 0; v < ds.vertex_count(); ++v) {
            for (int f = 0; f < ds.n_fields; ++f) {
                std::snprintf(buf, sizeof(buf), "%.17g", ds.sample(v, f));
                if (f) out << ',';
                out << buf;
            }
            out << '\n';
        }
    }
    if (!out) throw DataError(path + ": write failed");
}

namespace {

ordered_json jcn_json_value(const JcnGraph& jcn) {
    ordered_json j;
    j["level"] = jcn.level;
    auto& nodes = j["nodes"] = ordered_json::array();
    for (const auto& nd : jcn.nodes) {
        ordered_json n;
        n["id"] = nd.id;
        n["bin"] = nd.bin;
        n["volume"] = nd.attrs.volume;
        n["range_measure"] = nd.attrs.range_measure;
        n["b0"] = nd.attrs.component_count;
        n["degree"] = nd.attrs.degree;
        nodes.push_back(std::move(n));
    }
    auto& edges = j["edges"] = ordered_json::array();
    for (const auto& [a, b] : jcn.edges) edges.push_back({a, b});
    return j;
}

ordered_json mdrg_graph_json(const Mdrg& mdrg, int dim, std::int32_t graph_idx) {
    const ReebGraphQ& rg = mdrg.graphs[dim][graph_idx];
    ordered_json j;
    j["dim"] = dim;
    auto& nodes = j["nodes"] = ordered_json::array();
    for (const auto& nd : rg.nodes) {
        ordered_json n;
        n["id"] = nd.id;
        n["members"] = nd.members;
        // Branch id of the node: shared by all members per dimension.
        n["branch"] = mdrg.node_refs[dim][nd.members.front()].branch;
        auto& children = n["children"] = ordered_json::array();
        const std::int32_t child = mdrg.child_graph[dim][graph_idx][nd.id];
        if (child >= 0) children.push_back(mdrg_graph_json(mdrg, dim + 1, child));
        nodes.push_back(std::move(n));
    }
    auto& edges = j["edges"] = ordered_json::array();
    for (const auto& [a, b] : rg.edges) edges.push_back({a, b});
    return j;
}

}  // namespace

std::string jcn_to_json(const JcnGraph& jcn) { return jcn_json_value(jcn).dump(2) + "\n"; }

std::string jcn_to_dot(const JcnGraph& jcn) {
    std::ostringstream out;
    out << "graph jcn_" << jcn.level << " {\n";
    for (const auto& nd : jcn.nodes) {
        out << "  n" << nd.id << " [label=\"(";
        for (size_t f = 0; f < nd.bin.size(); ++f) {
            if (f) out << ",";
            out << nd.bin[f];
        }
        out << ")\"];\n";
    }
    for (const auto& [a, b] : jcn.edges) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string mrs_to_json(const MrsStructure& mrs) {
    ordered_json j;
    auto& levels = j["levels"] = ordered_json::array();
    for (const auto& jcn : mrs.jcns) levels.push_back(jcn_json_value(jcn));
    auto& parents = j["parents"] = ordered_json::array();
    for (int k = 1; k < mrs.n_levels; ++k) {
        for (std::int32_t c = 0; c < static_cast<std::int32_t>(mrs.parent_map[k].size()); ++c) {
            ordered_json p;
            p["level"] = k;
            p["child"] = c;
            p["parent"] = mrs.parent_map[k][c];
            parents.push_back(std::move(p));
        }
    }
    return j.dump(2) + "\n";
}

std::string mdrg_to_json(const Mdrg& mdrg) {
    return mdrg_graph_json(mdrg, 0, 0).dump(2) + "\n";
}

std::string mpairs_to_json(std::span<const MatchPair> pairs, std::span<const double> phi) {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < pairs.size(); ++i) {
        ordered_json p;
        p["level"] = pairs[i].level;
        p["f_node"] = pairs[i].node_f;
        p["g_node"] = pairs[i].node_g;
        p["phi"] = i < phi.size() ? phi[i] : 0.0;
        arr.push_back(std::move(p));
    }
    return arr.dump(2) + "\n";
}

std::string report_to_json(const SimilarityReport& report) {
    ordered_json j;
    j["weights"] = {{"volume", report.weights.volume},
                    {"range", report.weights.range},
                    {"b0", report.weights.b0},
                    {"degree", report.weights.degree}};
    auto& levels = j["levels"] = ordered_json::array();
    for (const auto& lv : report.levels) {
        ordered_json l;
        l["k"] = lv.k;
        l["phi_level"] = lv.phi;
        l["pairs"] = lv.pair_count;
        levels.push_back(std::move(l));
    }
    j["phi_bar"] = report.phi_bar;
    if (report.symmetrized) {
        j["symmetrized"] = true;
        j["phi_bar_fg"] = report.phi_bar_fg;
        j["phi_bar_gf"] = report.phi_bar_gf;
    }
    return j.dump(2) + "\n";
}

std::string csv_header() { return "step,level_count,weight_preset,phi_bar\n"; }

std::string csv_row(int step, int level_count, const std::string& preset, double phi_bar) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d,%d,%s,%.9f\n", step, level_count, preset.c_str(),
                  phi_bar);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError(path + ": cannot open file for writing");
    out << content;
    if (!out) throw DataError(path + ": write failed");
}

}  // namespace mrs
