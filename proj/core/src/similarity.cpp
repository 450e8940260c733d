#include "mrs/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mrs {

void Weights::validate() const {
    const double parts[4] = {volume, range, b0, degree};
    double sum = 0.0;
    for (double w : parts) {
        if (!(w >= 0.0 && w <= 1.0))
            throw std::invalid_argument("weights must lie in [0, 1]");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("weights must sum to 1");
}

std::optional<Weights> Weights::preset(std::string_view name) {
    if (name == "equal") return equal();
    if (name == "volume") return volume_only();
    if (name == "range") return range_only();
    if (name == "b0") return b0_only();
    if (name == "degree") return degree_only();
    return std::nullopt;
}

Weights Weights::parse(const std::string& text) {
    if (auto p = preset(text)) return *p;
    std::stringstream ss(text);
    double v[4];
    char comma;
    for (int i = 0; i < 4; ++i) {
        if (i > 0 && (!(ss >> comma) || comma != ','))
            throw std::invalid_argument("expected a weight preset name or w1,w2,w3,w4");
        if (!(ss >> v[i]))
            throw std::invalid_argument("expected a weight preset name or w1,w2,w3,w4");
    }
    std::string rest;
    if (ss >> rest) throw std::invalid_argument("trailing content after weights");
    Weights w{v[0], v[1], v[2], v[3]};
    w.validate();
    return w;
}

double ratio(double r1, double r2) {
    if (r1 < 0.0 || r2 < 0.0) throw std::invalid_argument("ratio arguments must be non-negative");
    if (r1 == 0.0 && r2 == 0.0) return 1.0;  // identical attributes
    return std::min(r1, r2) / std::max(r1, r2);
}

double node_similarity(const NodeAttrs& a, const NodeAttrs& b, const Weights& w) {
    return w.volume * ratio(a.volume, b.volume) +
           w.range * ratio(a.range_measure, b.range_measure) +
           w.b0 * ratio(a.component_count, b.component_count) +
           w.degree * ratio(a.degree, b.degree);
}

double level_similarity(std::span<const MatchPair> pairs, const JcnGraph& f, const JcnGraph& g,
                        const Weights& w) {
    double phi = 0.0;
    for (const MatchPair& p : pairs) {
        const NodeAttrs& am = f.nodes[p.node_f].attrs;
        const NodeAttrs& an = g.nodes[p.node_g].attrs;
        phi += 0.5 * (am.volume + an.volume) * node_similarity(am, an, w);
    }
    return phi;
}

double mrs_similarity(std::span<const double> level_values) {
    if (level_values.empty()) throw std::invalid_argument("need at least one level");
    double sum = 0.0;
    for (double v : level_values) sum += v;
    return sum / static_cast<double>(level_values.size());
}

namespace {

// Matching plus the level sums for one direction.
SimilarityReport compare_directed(const MrsStructure& f, const MrsStructure& g,
                                  const Weights& w) {
    SimilarityReport report;
    report.weights = w;
    report.pairs = create_matching_pairs(f, g, w);
    report.pair_phi.reserve(report.pairs.size());
    for (const MatchPair& p : report.pairs)
        report.pair_phi.push_back(node_similarity(f.jcns[p.level].nodes[p.node_f].attrs,
                                                  g.jcns[p.level].nodes[p.node_g].attrs, w));

    std::vector<double> level_phi(f.n_levels, 0.0);
    for (int k = 0; k < f.n_levels; ++k) {
        std::vector<MatchPair> at_level;
        for (const MatchPair& p : report.pairs)
            if (p.level == k) at_level.push_back(p);
        level_phi[k] = level_similarity(at_level, f.jcns[k], g.jcns[k], w);
        report.levels.push_back({k, level_phi[k], static_cast<int>(at_level.size())});
    }
    report.phi_bar = mrs_similarity(level_phi);
    return report;
}

}  // namespace

SimilarityReport compare_mrs(const MrsStructure& f, const MrsStructure& g, const Weights& w,
                             bool symmetrize) {
    w.validate();
    SimilarityReport report = compare_directed(f, g, w);
    if (symmetrize) {
        const SimilarityReport reverse = compare_directed(g, f, w);
        report.symmetrized = true;
        report.phi_bar_fg = report.phi_bar;
        report.phi_bar_gf = reverse.phi_bar;
        report.phi_bar = 0.5 * (report.phi_bar_fg + report.phi_bar_gf);
    }
    return report;
}

}  // namespace mrs
