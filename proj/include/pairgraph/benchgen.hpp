#pragma once

// Random ground-truth DAGs (Erdos-Renyi, scale-free) and nonlinear SEM
// observational data, plus the suite writer for full benchmark grids.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pairgraph/graph.hpp"
#include "pairgraph/types.hpp"

namespace pairgraph {

enum class GraphModel { ER, SF };

std::string to_string(GraphModel model);
GraphModel graph_model_from_string(const std::string& name);

struct BenchmarkConfig {
    int d = 0;
    int edges = 0;
    int n = 0;
    GraphModel model = GraphModel::ER;
    int reps = 1;
    std::uint64_t seed = 0;

    std::string label() const;  // e.g. "er_d10_e10_n200"
};

// The 16-configuration grid: model {ER, SF} x d {10, 20} x e {1d, 4d}
// x n {200, 1000}.
std::vector<BenchmarkConfig> paper_grid(int reps, std::uint64_t seed);

// Uniform random permutation; e distinct unordered pairs oriented from the
// earlier node to the later one under it. Exactly e edges.
AcyclicGraph gen_er_dag(int d, int e, std::uint64_t seed);

// Barabasi-Albert preferential attachment with m = max(1, round(e/d))
// links per arriving node, oriented earlier -> later, then trimmed or
// topped up with random earlier -> later pairs to exactly e edges.
AcyclicGraph gen_sf_dag(int d, int e, std::uint64_t seed);

// Nodes evaluated in topological order. Roots are standard Gaussian;
// every other node is a random one-hidden-layer MLP of its parents
// (width 100, sigmoid, weight magnitudes uniform in [0.5, 2.0] with random
// sign) plus standard Gaussian noise. Output is not standardized.
VariableMatrix sample_sem(const AcyclicGraph& g, int n, std::uint64_t seed);

struct SuiteCase {
    std::string config;
    std::string model;
    int d = 0;
    int edges = 0;
    int n = 0;
    int rep = 0;
    std::uint64_t seed = 0;
    std::string truth_path;  // relative to the suite directory
    std::string data_path;
};

struct SuiteManifest {
    std::uint64_t base_seed = 0;
    std::vector<SuiteCase> cases;
};

// Writes <out_dir>/<label>/rep<k>/{truth.tsv, data.csv} for every config
// and repetition, with per-case seeds derived from (base seed, config
// index, repetition), plus a top-level manifest.json. Data files are
// written standardized.
SuiteManifest gen_suite(const std::vector<BenchmarkConfig>& configs,
                        const std::filesystem::path& out_dir);

SuiteManifest load_manifest(const std::filesystem::path& manifest_path);

}  // namespace pairgraph
