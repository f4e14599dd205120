#pragma once

// File formats: edge-list TSV, data CSV, adjacency CSV, feature-matrix CSV,
// labeled training pairs, and metric-record JSON lines. All readers raise
// data_error with file context on malformed input.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pairgraph/graph.hpp"
#include "pairgraph/scorer.hpp"
#include "pairgraph/types.hpp"

namespace pairgraph {

// Edge-list TSV: header line "#d=<int>", then one edge per line "i<TAB>j",
// with an optional third column "u" marking an undirected edge.
void write_edge_list(const std::filesystem::path& path, int d, const std::vector<Edge>& directed,
                     const std::vector<Edge>& undirected = {});
MixedGraph read_edge_list(const std::filesystem::path& path);

// Strict readers for files that must be fully directed / acyclic.
DirectedGraph read_directed_graph(const std::filesystem::path& path);
AcyclicGraph read_acyclic_graph(const std::filesystem::path& path);

// Data CSV: optional header row, n rows x d float columns.
VariableMatrix read_data_csv(const std::filesystem::path& path);
void write_data_csv(const std::filesystem::path& path, const VariableMatrix& x);

// Adjacency CSV: d rows of d comma-separated floats.
WeightedAdjacency read_adjacency_csv(const std::filesystem::path& path);
void write_adjacency_csv(const std::filesystem::path& path, const WeightedAdjacency& a);

// Feature-matrix CSV: header "i,j,<feature names>", one row per pair in
// lexicographic order.
void write_feature_matrix_csv(const std::filesystem::path& path, const VariableMatrix& x);

// Training pairs: a directory of per-pair CSVs (two columns a,b) plus a
// labels CSV with rows "pair_id,label". Pair files are <dir>/<pair_id>.csv.
std::vector<LabeledPairSample> read_training_pairs(const std::filesystem::path& pairs_dir,
                                                   const std::filesystem::path& labels_csv);

// One evaluation result; written as a single JSON object per line.
struct MetricRecord {
    std::string config;
    std::string method;
    int rep = -1;
    std::map<std::string, double> values;
};

std::string metric_record_to_json(const MetricRecord& record);
std::vector<MetricRecord> read_metric_records(const std::filesystem::path& file_or_dir);
void append_metric_record(const std::filesystem::path& path, const MetricRecord& record);

}  // namespace pairgraph
