#include "pairgraph/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "pairgraph/features.hpp"
#include "pairgraph/io.hpp"
#include "pairgraph/rng.hpp"

namespace pairgraph {

namespace {

constexpr int kHiddenWidth = 100;
constexpr std::uint64_t kGraphStream = 0xA11CE;
constexpr std::uint64_t kDataStream = 0xB0B;

using Json = nlohmann::json;

void check_edge_count(int d, int e) {
    if (d < 2) throw invariant_error("need at least 2 nodes");
    if (e < 1 || static_cast<std::size_t>(e) > pair_count(d)) {
        throw invariant_error("edge count " + std::to_string(e) + " out of range [1, " +
                              std::to_string(pair_count(d)) + "] for d=" + std::to_string(d));
    }
}

std::vector<Edge> all_pairs(int d) {
    std::vector<Edge> pairs;
    pairs.reserve(pair_count(d));
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) pairs.push_back({i, j});
    }
    return pairs;
}

// Magnitude uniform in [0.5, 2.0], sign Bernoulli(1/2).
double sem_weight(std::mt19937_64& eng) {
    const double mag = 0.5 + 1.5 * next_double(eng);
    return next_double(eng) < 0.5 ? -mag : mag;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

std::string to_string(GraphModel model) { return model == GraphModel::ER ? "er" : "sf"; }

GraphModel graph_model_from_string(const std::string& name) {
    if (name == "er" || name == "ER") return GraphModel::ER;
    if (name == "sf" || name == "SF") return GraphModel::SF;
    throw data_error("unknown graph model '" + name + "'");
}

std::string BenchmarkConfig::label() const {
    return to_string(model) + "_d" + std::to_string(d) + "_e" + std::to_string(edges) + "_n" +
           std::to_string(n);
}

std::vector<BenchmarkConfig> paper_grid(int reps, std::uint64_t seed) {
    std::vector<BenchmarkConfig> configs;
    for (GraphModel model : {GraphModel::ER, GraphModel::SF}) {
        for (int d : {10, 20}) {
            for (int mult : {1, 4}) {
                for (int n : {200, 1000}) {
                    configs.push_back({d, mult * d, n, model, reps, seed});
                }
            }
        }
    }
    return configs;
}

AcyclicGraph gen_er_dag(int d, int e, std::uint64_t seed) {
    check_edge_count(d, e);
    std::mt19937_64 eng = make_engine(mix_seed(seed, kGraphStream));

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    shuffle_in_place(order, eng);
    std::vector<int> position(d);
    for (int k = 0; k < d; ++k) position[order[k]] = k;

    std::vector<Edge> pairs = all_pairs(d);
    // Partial Fisher-Yates: the first e entries are a uniform subset.
    for (int k = 0; k < e; ++k) {
        const std::size_t j = k + next_index(eng, pairs.size() - k);
        std::swap(pairs[k], pairs[j]);
    }
    std::vector<Edge> edges(pairs.begin(), pairs.begin() + e);
    for (Edge& edge : edges) {
        if (position[edge.first] > position[edge.second]) std::swap(edge.first, edge.second);
    }
    return AcyclicGraph(d, std::move(edges));
}

AcyclicGraph gen_sf_dag(int d, int e, std::uint64_t seed) {
    check_edge_count(d, e);
    std::mt19937_64 eng = make_engine(mix_seed(seed, kGraphStream));
    const int m = std::max(1, static_cast<int>(std::llround(static_cast<double>(e) / d)));

    std::vector<int> degree(d, 0);
    std::vector<Edge> edges;
    for (int arriving = 1; arriving < d; ++arriving) {
        const int links = std::min(m, arriving);
        std::vector<int> pool(arriving);
        std::iota(pool.begin(), pool.end(), 0);
        for (int t = 0; t < links; ++t) {
            // Weighted pick (degree + 1) without replacement.
            double total = 0.0;
            for (int candidate : pool) total += degree[candidate] + 1;
            double r = next_double(eng) * total;
            std::size_t pick = pool.size() - 1;  // fallback absorbs rounding at the top end
            for (std::size_t k = 0; k < pool.size(); ++k) {
                r -= degree[pool[k]] + 1;
                if (r < 0.0) {
                    pick = k;
                    break;
                }
            }
            const int chosen = pool[pick];
            pool.erase(pool.begin() + pick);
            edges.push_back({chosen, arriving});
            ++degree[chosen];
            ++degree[arriving];
        }
    }

    // Trim or top up to exactly e edges.
    while (static_cast<int>(edges.size()) > e) {
        const std::size_t k = next_index(eng, edges.size());
        edges.erase(edges.begin() + k);
    }
    if (static_cast<int>(edges.size()) < e) {
        std::vector<Edge> absent;
        std::vector<Edge> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        for (const Edge& p : all_pairs(d)) {
            if (!std::binary_search(sorted.begin(), sorted.end(), p)) absent.push_back(p);
        }
        const int needed = e - static_cast<int>(edges.size());
        for (int k = 0; k < needed; ++k) {
            const std::size_t j = k + next_index(eng, absent.size() - k);
            std::swap(absent[k], absent[j]);
            edges.push_back(absent[k]);
        }
    }
    return AcyclicGraph(d, std::move(edges));
}

VariableMatrix sample_sem(const AcyclicGraph& g, int n, std::uint64_t seed) {
    if (n < 2) throw invariant_error("need at least 2 samples");
    const int d = g.node_count();
    std::vector<std::vector<int>> parents(d);
    for (const Edge& e : g.edges()) parents[e.second].push_back(e.first);
    for (auto& p : parents) std::sort(p.begin(), p.end());

    const TopologicalOrder order = toposort(g);
    std::mt19937_64 eng = make_engine(mix_seed(seed, kDataStream));

    std::vector<double> values(static_cast<std::size_t>(n) * d, 0.0);
    std::vector<double> hidden_weights;
    std::vector<double> output_weights(kHiddenWidth);
    for (int node : order.order()) {
        const std::vector<int>& pa = parents[node];
        if (pa.empty()) {
            for (int r = 0; r < n; ++r) {
                values[static_cast<std::size_t>(r) * d + node] = next_normal(eng);
            }
            continue;
        }
        hidden_weights.resize(pa.size() * kHiddenWidth);
        for (double& w : hidden_weights) w = sem_weight(eng);
        for (double& w : output_weights) w = sem_weight(eng);
        for (int r = 0; r < n; ++r) {
            double x = 0.0;
            for (int h = 0; h < kHiddenWidth; ++h) {
                double pre = 0.0;
                for (std::size_t k = 0; k < pa.size(); ++k) {
                    pre += values[static_cast<std::size_t>(r) * d + pa[k]] *
                           hidden_weights[k * kHiddenWidth + h];
                }
                x += sigmoid(pre) * output_weights[h];
            }
            values[static_cast<std::size_t>(r) * d + node] = x + next_normal(eng);
        }
    }
    return VariableMatrix(n, d, std::move(values));
}

SuiteManifest gen_suite(const std::vector<BenchmarkConfig>& configs,
                        const std::filesystem::path& out_dir) {
    SuiteManifest manifest;
    if (configs.empty()) throw invariant_error("no benchmark configs given");
    manifest.base_seed = configs.front().seed;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw data_error("cannot create " + out_dir.string() + ": " + ec.message());

    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
        const BenchmarkConfig& cfg = configs[ci];
        if (cfg.reps < 1) throw invariant_error("reps must be at least 1");
        for (int rep = 0; rep < cfg.reps; ++rep) {
            const std::uint64_t case_seed = mix_seed(mix_seed(cfg.seed, ci), rep);
            const AcyclicGraph truth = cfg.model == GraphModel::ER
                                           ? gen_er_dag(cfg.d, cfg.edges, case_seed)
                                           : gen_sf_dag(cfg.d, cfg.edges, case_seed);
            const VariableMatrix data = standardize_columns(sample_sem(truth, cfg.n, case_seed));

            const std::filesystem::path case_dir =
                out_dir / cfg.label() / ("rep" + std::to_string(rep));
            std::filesystem::create_directories(case_dir, ec);
            if (ec) throw data_error("cannot create " + case_dir.string() + ": " + ec.message());

            write_edge_list(case_dir / "truth.tsv", cfg.d, truth.edges());
            write_data_csv(case_dir / "data.csv", data);

            SuiteCase sc;
            sc.config = cfg.label();
            sc.model = to_string(cfg.model);
            sc.d = cfg.d;
            sc.edges = cfg.edges;
            sc.n = cfg.n;
            sc.rep = rep;
            sc.seed = case_seed;
            sc.truth_path = (std::filesystem::path(cfg.label()) /
                             ("rep" + std::to_string(rep)) / "truth.tsv").generic_string();
            sc.data_path = (std::filesystem::path(cfg.label()) /
                            ("rep" + std::to_string(rep)) / "data.csv").generic_string();
            manifest.cases.push_back(std::move(sc));
        }
    }

    Json cases = Json::array();
    for (const SuiteCase& sc : manifest.cases) {
        cases.push_back({{"config", sc.config},
                         {"model", sc.model},
                         {"d", sc.d},
                         {"edges", sc.edges},
                         {"n", sc.n},
                         {"rep", sc.rep},
                         {"seed", sc.seed},
                         {"truth", sc.truth_path},
                         {"data", sc.data_path}});
    }
    std::ofstream out(out_dir / "manifest.json");
    if (!out) throw data_error("cannot open " + (out_dir / "manifest.json").string());
    out << Json{{"base_seed", manifest.base_seed}, {"cases", cases}}.dump(2) << '\n';
    if (!out) throw data_error("write failed: " + (out_dir / "manifest.json").string());
    return manifest;
}

SuiteManifest load_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw data_error("cannot open " + manifest_path.string());
    Json j;
    try {
        in >> j;
        SuiteManifest manifest;
        manifest.base_seed = j.at("base_seed").get<std::uint64_t>();
        for (const Json& c : j.at("cases")) {
            SuiteCase sc;
            sc.config = c.at("config").get<std::string>();
            sc.model = c.at("model").get<std::string>();
            sc.d = c.at("d").get<int>();
            sc.edges = c.at("edges").get<int>();
            sc.n = c.at("n").get<int>();
            sc.rep = c.at("rep").get<int>();
            sc.seed = c.at("seed").get<std::uint64_t>();
            sc.truth_path = c.at("truth").get<std::string>();
            sc.data_path = c.at("data").get<std::string>();
            manifest.cases.push_back(std::move(sc));
        }
        return manifest;
    } catch (const Json::exception& e) {
        throw data_error(manifest_path.string() + ": " + e.what());
    }
}

}  // namespace pairgraph
