#pragma once

#include <string>

#include "rsbf/search.hpp"

namespace rsbf {

constexpr int kRunSchemaVersion = 1;

// Run records serialize with a fixed key order and shortest round-trip
// number formatting, so identical runs produce byte-identical files.
std::string run_result_to_json(const RunResult& result);
RunResult run_result_from_json(const std::string& text);

// One header row and one data row: the five-number summary of best fitness,
// then the same summary of best nonlinearity under nl_-prefixed columns.
std::string batch_summary_csv(const RunConfig& config, const BatchResult& batch);

// results/<n>/<encoding>/<objective>/run_<seed>.json next to summary.csv.
std::string default_run_path(const std::string& root, const RunConfig& config);
std::string default_summary_path(const std::string& root, const RunConfig& config);

// Creates missing parent directories, writes to a sibling temp file, then
// renames it into place so readers never see a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace rsbf
