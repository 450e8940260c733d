#pragma once

#include <span>
#include <string>
#include <vector>

#include "mrs/dataset.hpp"
#include "mrs/jcn.hpp"
#include "mrs/matching.hpp"
#include "mrs/mdrg.hpp"
#include "mrs/mrs.hpp"
#include "mrs/similarity.hpp"

namespace mrs {

enum class FileFormat { header_binary, csv };

/// header+binary layout: a single UTF-8 header line
///   MRSFIELD v1 dims=<d1,d2[,d3]> fields=<n> dtype=f64 order=row-major
/// followed by raw little-endian doubles, vertex-major (all fields of
/// vertex 0, then vertex 1, ...).  CSV layout: one row per vertex in
/// row-major order with n comma-separated values; '#' lines are comments,
/// and a `# dims=<d1,d2[,d3]>` comment must precede the data.
MultiFieldDataset load_dataset(const std::string& path, FileFormat format);

/// Sniffs the format from the file content (MRSFIELD magic vs. text).
MultiFieldDataset load_dataset(const std::string& path);

void save_dataset(const MultiFieldDataset& ds, const std::string& path,
                  FileFormat format = FileFormat::header_binary);

std::string jcn_to_json(const JcnGraph& jcn);
std::string jcn_to_dot(const JcnGraph& jcn);
std::string mrs_to_json(const MrsStructure& mrs);
std::string mdrg_to_json(const Mdrg& mdrg);
std::string mpairs_to_json(std::span<const MatchPair> pairs, std::span<const double> phi);
std::string report_to_json(const SimilarityReport& report);

/// One `step,level_count,weight_preset,phi_bar` row (no newline handling
/// beyond the trailing '\n').
std::string csv_row(int step, int level_count, const std::string& preset, double phi_bar);
std::string csv_header();

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mrs
