// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion. Criteria that exercise the CLI receive
// its path as argv[1]; scratch files go under argv[2].

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pairgraph/assemble.hpp"
#include "pairgraph/benchgen.hpp"
#include "pairgraph/features.hpp"
#include "pairgraph/io.hpp"
#include "pairgraph/metrics.hpp"
#include "pairgraph/rng.hpp"
#include "pairgraph/scorer.hpp"

using namespace pairgraph;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_work;

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

int run_cli(const std::string& args, bool quiet = true) {
    const std::string cmd = "\"" + g_cli + "\" " + args + (quiet ? " > /dev/null" : "");
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

void require_cli(const std::string& args, const std::string& what) {
    const int code = run_cli(args);
    require(code == 0, what + " exited with code " + std::to_string(code));
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PairBeliefs random_beliefs(int d, std::mt19937_64& eng) {
    std::vector<BeliefTriple> entries(pair_count(d));
    for (BeliefTriple& t : entries) {
        const double a = -std::log(1.0 - next_double(eng));
        const double b = -std::log(1.0 - next_double(eng));
        const double c = -std::log(1.0 - next_double(eng));
        const double z = a + b + c;
        t = {a / z, b / z, c / z};
    }
    return PairBeliefs(d, std::move(entries));
}

PairBeliefs delta_beliefs(const AcyclicGraph& g) {
    const int d = g.node_count();
    std::vector<BeliefTriple> entries(pair_count(d));
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            BeliefTriple t{0.0, 1.0, 0.0};
            if (g.has_edge(i, j)) t = {0.0, 0.0, 1.0};
            if (g.has_edge(j, i)) t = {1.0, 0.0, 0.0};
            entries[pair_index(d, i, j)] = t;
        }
    }
    return PairBeliefs(d, std::move(entries));
}

// All 27 pair-status assignments on d=3; the 25 acyclic ones are the DAGs.
std::vector<DirectedGraph> digraphs3() {
    std::vector<DirectedGraph> graphs;
    for (int code = 0; code < 27; ++code) {
        int rest = code;
        std::vector<Edge> edges;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                const int status = rest % 3;
                rest /= 3;
                if (status == 1) edges.push_back({i, j});
                if (status == 2) edges.push_back({j, i});
            }
        }
        graphs.push_back(DirectedGraph(3, std::move(edges)));
    }
    return graphs;
}

// Writes the 300-pair synthetic training set (100 per class) in the
// training-pairs directory layout and trains a scorer through the CLI.
// Cached across criteria.
fs::path shared_model() {
    static fs::path model;
    if (!model.empty()) return model;

    const fs::path dir = g_work / "train_pairs";
    fs::create_directories(dir);
    std::mt19937_64 eng = make_engine(424242);
    std::ofstream labels(dir / "labels.csv");
    labels << "pair_id,label\n";
    const int n = 200;
    int pair_id = 0;
    auto write_pair = [&](const std::vector<double>& u, const std::vector<double>& v, int label) {
        const std::string id = "pair" + std::to_string(pair_id++);
        std::ofstream out(dir / (id + ".csv"));
        out << "a,b\n";
        for (int i = 0; i < n; ++i) out << u[i] << ',' << v[i] << '\n';
        labels << id << ',' << label << '\n';
    };
    for (int k = 0; k < 100; ++k) {
        std::vector<double> u(n), v(n);
        for (int i = 0; i < n; ++i) {
            u[i] = next_normal(eng);
            v[i] = u[i] * u[i] + 0.5 * next_normal(eng);
        }
        write_pair(u, v, 1);
        for (int i = 0; i < n; ++i) {
            v[i] = next_normal(eng);
            u[i] = v[i] * v[i] + 0.5 * next_normal(eng);
        }
        write_pair(u, v, -1);
        for (int i = 0; i < n; ++i) {
            u[i] = next_normal(eng);
            v[i] = next_normal(eng);
        }
        write_pair(u, v, 0);
    }
    labels.close();

    model = g_work / "scorer.json";
    require_cli("train --pairs " + dir.string() + " --labels " + (dir / "labels.csv").string() +
                    " --out " + model.string() + " --seed 7 --force",
                "train");
    return model;
}

// --------------------------------------------------------------------------
// Criteria

// Independent brute-force metric oracle over raw edge sets.
void criterion_metric_oracle() {
    const std::vector<DirectedGraph> graphs = digraphs3();
    int truths = 0, estimates = 0;
    for (const DirectedGraph& t : graphs) {
        if (has_cycle(t)) continue;
        ++truths;
        const AcyclicGraph truth(3, t.edges());
        estimates = 0;
        for (const DirectedGraph& est : graphs) {
            if (has_cycle(est)) continue;
            ++estimates;
            double shd = 0.0, tp = 0.0, fp = 0.0;
            int true_edges = 0;
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    const int ts = truth.has_edge(i, j) ? 1 : (truth.has_edge(j, i) ? 2 : 0);
                    const int es = est.has_edge(i, j) ? 1 : (est.has_edge(j, i) ? 2 : 0);
                    if (ts != 0) {
                        ++true_edges;
                        if (es == ts) {
                            tp += 1.0;
                        } else {
                            shd += 1.0;
                            if (es != 0) fp += 1.0;
                        }
                    } else if (es != 0) {
                        shd += 1.0;
                        fp += 1.0;
                    }
                }
            }
            const GraphMetrics got = point_metrics(est, truth);
            require(got.shd == shd, "SHD mismatch vs oracle");
            require(got.tpr == tp / std::max(1.0, static_cast<double>(true_edges)),
                    "TPR mismatch vs oracle");
            require(got.fpr == fp / std::max(1.0, 3.0 - true_edges), "FPR mismatch vs oracle");
        }
    }
    require(truths == 25 && estimates == 25, "expected 25 DAGs per side on d=3");
}

void criterion_worked_example() {
    std::vector<double> a(4, 0.0);
    a[0 * 2 + 1] = 0.8;
    a[1 * 2 + 0] = 0.1;
    const WeightedAdjacency adj(2, std::move(a));
    const AcyclicGraph truth(2, {{0, 1}});
    require(std::abs(prob_shd(adj, truth) - 0.2) <= 1e-12, "SHD != 0.2");
    require(std::abs(prob_tpr(adj, truth) - 0.8) <= 1e-12, "TPR != 0.8");
    require(std::abs(prob_fpr(adj, truth) - 0.1) <= 1e-12, "FPR != 0.1");
}

void criterion_mlg_optimal() {
    std::mt19937_64 eng = make_engine(1301);
    const std::vector<DirectedGraph> graphs = digraphs3();
    for (int trial = 0; trial < 200; ++trial) {
        const PairBeliefs b = random_beliefs(3, eng);
        double best = -std::numeric_limits<double>::infinity();
        for (const DirectedGraph& g : graphs) best = std::max(best, graph_log_probability(b, g));
        require(graph_log_probability(b, mlg(b)) == best, "mlg below the exhaustive maximum");
    }
}

void criterion_mldag_optimal() {
    std::mt19937_64 eng = make_engine(1409);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> perm = {0, 1, 2, 3};
        shuffle_in_place(perm, eng);
        const TopologicalOrder order(perm);
        std::vector<double> probs(6);
        for (double& p : probs) p = next_double(eng);
        const OrderedEdgeBeliefs ob(order, probs);

        double best = -std::numeric_limits<double>::infinity();
        for (int code = 0; code < 64; ++code) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int i = 0; i < 4; ++i) {
                for (int j = i + 1; j < 4; ++j, ++bit) {
                    if (code & (1 << bit)) {
                        const bool fwd = order.position()[i] < order.position()[j];
                        edges.push_back(fwd ? Edge{i, j} : Edge{j, i});
                    }
                }
            }
            best = std::max(best, dag_log_probability(ob, AcyclicGraph(4, std::move(edges))));
        }
        require(dag_log_probability(ob, mldag(ob)) == best, "mldag below the exhaustive maximum");
    }
}

void criterion_dagness() {
    std::mt19937_64 eng = make_engine(1511);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + static_cast<int>(next_index(eng, 29));
        const PairBeliefs b = random_beliefs(d, eng);
        const WeightedAdjacency a = beliefs_to_adjacency(b);
        const AcyclicGraph spanning = msdag(a);
        require(!has_cycle(spanning), "msdag output has a cycle");

        const OrderedEdgeBeliefs ob = renormalize(b, toposort(spanning));
        require(!has_cycle(mldag(ob)), "mldag output has a cycle");
        for (int s = 0; s < 3; ++s) {
            require(!has_cycle(sample_dag(ob, mix_seed(trial, s))), "sample_dag draw has a cycle");
        }

        // Greedy maximality via reachability on the msdag output.
        std::vector<std::vector<int>> out(d);
        for (const Edge& e : spanning.edges()) out[e.first].push_back(e.second);
        std::vector<char> visited(d);
        std::vector<int> stack;
        auto reaches = [&](int from, int to) {
            std::fill(visited.begin(), visited.end(), 0);
            stack.assign(1, from);
            visited[from] = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                if (v == to) return true;
                for (int w : out[v]) {
                    if (!visited[w]) {
                        visited[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            return false;
        };
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (i == j || a.at(i, j) <= 0.0 || spanning.has_edge(i, j)) continue;
                require(reaches(j, i), "excluded positive-weight edge does not close a cycle");
            }
        }
    }
}

void criterion_perfect_recovery() {
    std::mt19937_64 eng = make_engine(1613);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + static_cast<int>(next_index(eng, 9));
        const int max_e = static_cast<int>(pair_count(d));
        const int e = 1 + static_cast<int>(next_index(eng, max_e));
        const AcyclicGraph truth = gen_er_dag(d, e, mix_seed(9000, trial));
        const PairBeliefs b = delta_beliefs(truth);

        require(mlg(b).edges() == truth.edges(), "mlg failed to recover the truth");
        require(point_metrics(mlg(b), truth).shd == 0.0, "mlg SHD not zero");

        const AcyclicGraph pipeline = mldag(renormalize(b, ml_order(b)));
        require(pipeline.edges() == truth.edges(), "mldag pipeline failed to recover the truth");
        require(point_metrics(pipeline, truth).shd == 0.0, "mldag SHD not zero");
    }
}

void criterion_renormalization() {
    std::mt19937_64 eng = make_engine(1721);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + static_cast<int>(next_index(eng, 12));
        PairBeliefs b = random_beliefs(d, eng);
        if (trial % 4 == 0) {
            // Inject degenerate triples: all mass on the reverse class.
            std::vector<BeliefTriple> entries = b.entries();
            entries[0] = {1.0, 0.0, 0.0};
            b = PairBeliefs(d, std::move(entries));
        }
        std::vector<int> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        shuffle_in_place(perm, eng);
        const TopologicalOrder order(perm);
        const OrderedEdgeBeliefs ob = renormalize(b, order);
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                const double p = ob.prob_along_order(i, j);
                require(p >= 0.0 && p <= 1.0, "renormalized probability outside [0,1]");
                const BeliefTriple& t = b.at(i, j);
                const double mass = order.position()[i] < order.position()[j] ? t.fwd : t.rev;
                const double denom = mass + t.none;
                const double expected = denom > 0.0 ? mass / denom : 0.0;
                require(std::abs(p - expected) <= 1e-12, "renormalization formula mismatch");
            }
        }
    }
}

void criterion_benchmark_protocol() {
    const fs::path suite = g_work / "grid10";
    fs::remove_all(suite);
    require_cli("gen --grid paper --reps 10 --seed 20260810 --out " + suite.string(), "gen");

    const SuiteManifest manifest = load_manifest(suite / "manifest.json");
    require(manifest.cases.size() == 160, "expected 160 cases, got " +
                                              std::to_string(manifest.cases.size()));
    std::vector<std::string> configs;
    for (const SuiteCase& sc : manifest.cases) configs.push_back(sc.config);
    std::sort(configs.begin(), configs.end());
    configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
    require(configs.size() == 16, "expected 16 distinct configurations");

    for (const SuiteCase& sc : manifest.cases) {
        const AcyclicGraph truth = read_acyclic_graph(suite / sc.truth_path);
        require(truth.node_count() == sc.d, "node count mismatch in " + sc.truth_path);
        require(static_cast<int>(truth.edge_count()) == sc.edges,
                "edge count mismatch in " + sc.truth_path);

        const VariableMatrix data = read_data_csv(suite / sc.data_path);
        require(data.n == sc.n && data.d == sc.d, "data shape mismatch in " + sc.data_path);
        for (int c = 0; c < data.d; ++c) {
            const std::vector<double> col = data.column(c);
            const double mean = std::accumulate(col.begin(), col.end(), 0.0) / col.size();
            double ss = 0.0;
            for (double v : col) ss += (v - mean) * (v - mean);
            const double sd = std::sqrt(ss / (col.size() - 1));
            require(std::abs(mean) < 1e-9, "column mean not standardized in " + sc.data_path);
            require(std::abs(sd - 1.0) < 1e-9, "column std not standardized in " + sc.data_path);
        }
    }
}

void criterion_end_to_end() {
    const auto t0 = std::chrono::steady_clock::now();
    const fs::path model = shared_model();

    const fs::path suite = g_work / "grid2";
    fs::remove_all(suite);
    require_cli("gen --grid paper --reps 2 --seed 31337 --out " + suite.string(), "gen");
    const SuiteManifest manifest = load_manifest(suite / "manifest.json");
    require(manifest.cases.size() == 32, "expected 32 cases");

    const fs::path runs = g_work / "runs.jsonl";
    fs::remove(runs);

    for (const SuiteCase& sc : manifest.cases) {
        const fs::path case_dir = suite / sc.config / ("rep" + std::to_string(sc.rep));
        const fs::path beliefs = case_dir / "beliefs.json";
        require_cli("score --data " + (suite / sc.data_path).string() + " --model " +
                        model.string() + " --out " + beliefs.string() + " --force",
                    "score " + sc.config);

        const std::string stamp = " --config " + sc.config + " --rep " +
                                  std::to_string(sc.rep) + " --out " + runs.string();
        const fs::path truth = suite / sc.truth_path;

        require_cli("assemble --beliefs " + beliefs.string() + " --method pg --out " +
                        (case_dir / "pg.csv").string() + " --force",
                    "assemble pg");
        require_cli("eval --truth " + truth.string() + " --adjacency " +
                        (case_dir / "pg.csv").string() + " --method pg" + stamp,
                    "eval pg");

        require_cli("assemble --beliefs " + beliefs.string() + " --method mlg --out " +
                        (case_dir / "mlg.tsv").string() + " --force",
                    "assemble mlg");
        require_cli("eval --truth " + truth.string() + " --graph " +
                        (case_dir / "mlg.tsv").string() + " --method mlg" + stamp,
                    "eval mlg");

        require_cli("assemble --beliefs " + beliefs.string() + " --method pdag --out " +
                        (case_dir / "pdag.json").string() + " --emit-adjacency " +
                        (case_dir / "pdag_adj.csv").string() + " --force",
                    "assemble pdag");
        require_cli("eval --truth " + truth.string() + " --adjacency " +
                        (case_dir / "pdag_adj.csv").string() + " --method pdag" + stamp,
                    "eval pdag");

        require_cli("assemble --beliefs " + beliefs.string() + " --method mldag --out " +
                        (case_dir / "mldag.tsv").string() + " --force",
                    "assemble mldag");
        require_cli("eval --truth " + truth.string() + " --graph " +
                        (case_dir / "mldag.tsv").string() + " --method mldag" + stamp,
                    "eval mldag");
    }

    const fs::path table = g_work / "report.csv";
    require_cli("report --runs " + runs.string() + " --format csv --out " + table.string() +
                    " --force",
                "report");

    // A Tables I/II-shaped report: one row per (config, method), finite
    // values, TPR in [0,1], SHD/d >= 0.
    std::ifstream in(table);
    require(static_cast<bool>(in), "report.csv missing");
    std::string header;
    std::getline(in, header);
    require(header.find("shd_per_node_mean") != std::string::npos, "report lacks shd_per_node");
    require(header.find("tpr_mean") != std::string::npos, "report lacks tpr");
    require(header.find("fpr_mean") != std::string::npos, "report lacks fpr");

    std::vector<std::string> head_cols;
    {
        std::stringstream ss(header);
        std::string cell;
        while (std::getline(ss, cell, ',')) head_cols.push_back(cell);
    }
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        std::stringstream ss(line);
        std::string cell;
        std::size_t col = 0;
        double shd_per_node = -1.0, tpr = -1.0;
        while (std::getline(ss, cell, ',')) {
            if (col >= 3) {  // config, method, reps come first
                const double v = std::stod(cell);
                require(std::isfinite(v), "non-finite value in report");
                if (head_cols[col] == "shd_per_node_mean") shd_per_node = v;
                if (head_cols[col] == "tpr_mean") tpr = v;
            }
            ++col;
        }
        require(shd_per_node >= 0.0, "SHD/d negative");
        require(tpr >= 0.0 && tpr <= 1.0, "TPR outside [0,1]");
    }
    require(rows == 64, "expected 64 report rows (16 configs x 4 methods), got " +
                            std::to_string(rows));

    const double elapsed = seconds_since(t0);
    require(elapsed < 600.0, "pipeline exceeded 10 minutes: " + std::to_string(elapsed) + "s");
}

void criterion_complexity() {
    const fs::path model = shared_model();
    std::vector<double> log_d, log_t;
    for (int d : {10, 20, 40}) {
        const AcyclicGraph g = gen_er_dag(d, 2 * d, 555 + d);
        const VariableMatrix x = standardize_columns(sample_sem(g, 200, 555 + d));
        const fs::path data = g_work / ("scale_d" + std::to_string(d) + ".csv");
        write_data_csv(data, x);

        double best = 1e300;
        for (int rep = 0; rep < 2; ++rep) {
            const fs::path out = g_work / ("scale_beliefs_d" + std::to_string(d) + ".json");
            const auto t0 = std::chrono::steady_clock::now();
            require_cli("score --data " + data.string() + " --model " + model.string() +
                            " --out " + out.string() + " --threads 1 --force",
                        "score d=" + std::to_string(d));
            best = std::min(best, seconds_since(t0));
        }
        log_d.push_back(std::log(static_cast<double>(d)));
        log_t.push_back(std::log(best));
    }
    const double xm = std::accumulate(log_d.begin(), log_d.end(), 0.0) / log_d.size();
    const double ym = std::accumulate(log_t.begin(), log_t.end(), 0.0) / log_t.size();
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < log_d.size(); ++k) {
        num += (log_d[k] - xm) * (log_t[k] - ym);
        den += (log_d[k] - xm) * (log_d[k] - xm);
    }
    const double slope = num / den;
    std::printf("        log-log slope: %.2f\n", slope);
    require(slope <= 2.5, "wall-time slope " + std::to_string(slope) + " exceeds 2.5");
}

void criterion_sampler() {
    const PairBeliefs coin(2, {BeliefTriple{0.2, 0.3, 0.5}});
    int rev = 0, none = 0, fwd = 0;
    for (int seed = 0; seed < 10000; ++seed) {
        const DirectedGraph g = sample_digraph(coin, seed);
        if (g.has_edge(0, 1)) {
            ++fwd;
        } else if (g.has_edge(1, 0)) {
            ++rev;
        } else {
            ++none;
        }
    }
    require(std::abs(rev / 10000.0 - 0.2) <= 0.02, "reverse frequency off");
    require(std::abs(none / 10000.0 - 0.3) <= 0.02, "none frequency off");
    require(std::abs(fwd / 10000.0 - 0.5) <= 0.02, "forward frequency off");
}

void criterion_real_data_format() {
    const fs::path model = shared_model();

    // A dataset with the real-data shape: 11 variables, 7466 samples, and a
    // 17-edge consensus list.
    const AcyclicGraph consensus = gen_er_dag(11, 17, 20130414);
    const VariableMatrix data = standardize_columns(sample_sem(consensus, 7466, 20130414));
    const fs::path data_csv = g_work / "protein_like.csv";
    write_data_csv(data_csv, data);
    const fs::path consensus_tsv = g_work / "consensus.tsv";
    write_edge_list(consensus_tsv, 11, consensus.edges());

    const fs::path beliefs_json = g_work / "protein_beliefs.json";
    require_cli("score --data " + data_csv.string() + " --model " + model.string() + " --out " +
                    beliefs_json.string() + " --force",
                "score");
    const PairBeliefs beliefs = load_beliefs(beliefs_json);
    require(beliefs.entries().size() == 55, "expected 55 pair beliefs for d=11");

    const fs::path adjacency_csv = g_work / "protein_pg.csv";
    require_cli("assemble --beliefs " + beliefs_json.string() + " --method pg --out " +
                    adjacency_csv.string() + " --force",
                "assemble pg");

    const fs::path counts = g_work / "protein_counts.jsonl";
    fs::remove(counts);
    require_cli("eval --counts-only --truth-edges " + consensus_tsv.string() + " --adjacency " +
                    adjacency_csv.string() + " --method pg --out " + counts.string(),
                "eval counts (adjacency)");

    const fs::path mlg_tsv = g_work / "protein_mlg.tsv";
    require_cli("assemble --beliefs " + beliefs_json.string() + " --method mlg --out " +
                    mlg_tsv.string() + " --force",
                "assemble mlg");
    require_cli("eval --counts-only --truth-edges " + consensus_tsv.string() + " --graph " +
                    mlg_tsv.string() + " --method mlg --out " + counts.string(),
                "eval counts (graph)");

    const std::vector<MetricRecord> records = read_metric_records(counts);
    require(records.size() == 2, "expected two count records");
    for (const MetricRecord& r : records) {
        require(r.values.count("predicted") == 1, "missing predicted count");
        require(r.values.count("correct") == 1, "missing correct count");
        require(r.values.count("reversed") == 1, "missing reversed count");
        require(r.values.at("correct") + r.values.at("reversed") <=
                    r.values.at("predicted") + 1e-9,
                "count invariant violated");
    }
}

struct Criterion {
    int id;
    const char* name;
    std::function<void()> fn;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <pairgraph-cli> <workdir>\n");
        return 2;
    }
    g_cli = argv[1];
    g_work = argv[2];
    fs::create_directories(g_work);

    const std::vector<Criterion> criteria = {
        {1, "metric-oracle-equivalence", criterion_metric_oracle},
        {2, "probabilistic-metric-worked-examples", criterion_worked_example},
        {3, "mlg-optimality", criterion_mlg_optimal},
        {4, "mldag-optimality-given-order", criterion_mldag_optimal},
        {5, "dagness-and-greedy-maximality", criterion_dagness},
        {6, "perfect-belief-recovery", criterion_perfect_recovery},
        {7, "renormalization", criterion_renormalization},
        {8, "benchmark-protocol-shape", criterion_benchmark_protocol},
        {9, "end-to-end-scaled-experiment", criterion_end_to_end},
        {10, "complexity-claim", criterion_complexity},
        {11, "sampler-correctness", criterion_sampler},
        {12, "real-data-format-ingestion", criterion_real_data_format},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string note;
        bool ok = true;
        try {
            c.fn();
        } catch (const Failure& f) {
            ok = false;
            note = f.message;
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2d %-40s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    seconds_since(t0), note.empty() ? "" : " - ", note.c_str());
        std::fflush(stdout);
        failures += !ok;
    }

    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
