// pairgraph CLI: benchmark generation, pair-scorer training, pairwise
// scoring, graph assembly, evaluation, and report aggregation.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 internal
// invariant violation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "pairgraph/assemble.hpp"
#include "pairgraph/benchgen.hpp"
#include "pairgraph/features.hpp"
#include "pairgraph/io.hpp"
#include "pairgraph/metrics.hpp"
#include "pairgraph/rng.hpp"
#include "pairgraph/scorer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace pairgraph;

namespace {

void require_writable(const fs::path& path, bool force) {
    if (!force && fs::exists(path)) {
        throw data_error(path.string() + " already exists (use --force to overwrite)");
    }
}

std::string format_stat(const AggregateStat& s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f±%.2f", s.mean, s.stderr_);
    return buf;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
    std::string model = "er";
    int nodes = 0;
    int edges = 0;
    int samples = 0;
    int reps = 1;
    std::uint64_t seed = 0;
    std::string out;
    std::string grid;
    bool force = false;
};

int run_gen(const GenArgs& args) {
    std::vector<BenchmarkConfig> configs;
    if (!args.grid.empty()) {
        if (args.grid != "paper") throw CLI::ValidationError("--grid", "only 'paper' is defined");
        configs = paper_grid(args.reps, args.seed);
    } else {
        if (args.nodes < 2) throw CLI::ValidationError("--nodes", "need at least 2 nodes");
        if (args.edges < 1 ||
            static_cast<std::size_t>(args.edges) > pair_count(args.nodes)) {
            throw CLI::ValidationError("--edges", "must be in [1, d(d-1)/2]");
        }
        if (args.samples < 2) throw CLI::ValidationError("--samples", "need at least 2 samples");
        BenchmarkConfig cfg;
        cfg.model = graph_model_from_string(args.model);
        cfg.d = args.nodes;
        cfg.edges = args.edges;
        cfg.n = args.samples;
        cfg.reps = args.reps;
        cfg.seed = args.seed;
        configs.push_back(cfg);
    }
    require_writable(fs::path(args.out) / "manifest.json", args.force);
    const SuiteManifest manifest = gen_suite(configs, args.out);
    std::cout << "wrote " << manifest.cases.size() << " cases under " << args.out << "\n";
    std::cout << "manifest: " << (fs::path(args.out) / "manifest.json").string() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
    std::string pairs_dir;
    std::string labels;
    std::string out;
    TrainConfig config;
    bool force = false;
};

int predicted_label(const BeliefTriple& t) {
    // Same tie preference as the maximum-likelihood digraph: none, fwd, rev.
    if (t.fwd > t.none && t.fwd >= t.rev) return 1;
    if (t.rev > t.none && t.rev > t.fwd) return -1;
    return 0;
}

int run_train(const TrainArgs& args) {
    require_writable(args.out, args.force);
    const std::vector<LabeledPairSample> samples =
        read_training_pairs(args.pairs_dir, args.labels);

    // Seeded 80/20 split; the scorer is fit on the first portion only.
    std::vector<std::size_t> idx(samples.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 eng = make_engine(mix_seed(args.config.seed, 0x5417));
    shuffle_in_place(idx, eng);
    const std::size_t held = std::max<std::size_t>(1, samples.size() / 5);
    const std::size_t cut = samples.size() - held;

    std::vector<LabeledPairSample> train_set, holdout;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        (k < cut ? train_set : holdout).push_back(samples[idx[k]]);
    }

    const PairScorer scorer = train_scorer(train_set, args.config);
    std::size_t hits = 0;
    for (const LabeledPairSample& s : holdout) {
        if (predicted_label(predict_pair(scorer, s.u, s.v)) == s.label) ++hits;
    }
    save_scorer(scorer, args.out);
    std::cout << "trained on " << train_set.size() << " pairs; held-out accuracy "
              << static_cast<double>(hits) / static_cast<double>(holdout.size()) << " (n="
              << holdout.size() << ")\n";
    std::cout << "model: " << args.out << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// score

struct ScoreArgs {
    std::string data;
    std::string model;
    std::string out;
    std::string dump_features;
    bool standardize = true;
    int threads = 0;
    bool force = false;
};

int run_score(const ScoreArgs& args) {
    require_writable(args.out, args.force);
#ifdef _OPENMP
    if (args.threads > 0) omp_set_num_threads(args.threads);
#endif
    VariableMatrix x = read_data_csv(args.data);
    if (args.standardize) x = standardize_columns(x);
    if (!args.dump_features.empty()) {
        require_writable(args.dump_features, args.force);
        write_feature_matrix_csv(args.dump_features, x);
    }
    const PairScorer scorer = load_scorer(args.model);
    const PairBeliefs beliefs = score_all_pairs(scorer, x);
    save_beliefs(beliefs, args.out);
    std::cout << "scored " << beliefs.entries().size() << " pairs (d=" << x.d << ", n=" << x.n
              << ") -> " << args.out << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// assemble

struct AssembleArgs {
    std::string beliefs;
    std::string method;
    std::string out;
    std::string emit_adjacency;
    int sample = 0;
    std::uint64_t seed = 0;
    bool force = false;
};

int run_assemble(const AssembleArgs& args) {
    const PairBeliefs beliefs = load_beliefs(args.beliefs);
    const int d = beliefs.node_count();

    if (args.sample > 0) {
        if (args.method != "pg" && args.method != "pdag") {
            throw CLI::ValidationError("--sample", "sampling is defined for pg and pdag only");
        }
        const fs::path dir(args.out);
        require_writable(dir / "sample_0.tsv", args.force);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw data_error("cannot create " + dir.string() + ": " + ec.message());
        std::optional<OrderedEdgeBeliefs> ordered;
        if (args.method == "pdag") ordered.emplace(renormalize(beliefs, ml_order(beliefs)));
        for (int k = 0; k < args.sample; ++k) {
            const std::uint64_t draw_seed = mix_seed(args.seed, k);
            const fs::path path = dir / ("sample_" + std::to_string(k) + ".tsv");
            if (ordered) {
                write_edge_list(path, d, sample_dag(*ordered, draw_seed).edges());
            } else {
                write_edge_list(path, d, sample_digraph(beliefs, draw_seed).edges());
            }
        }
        std::cout << "wrote " << args.sample << " sampled graphs under " << args.out << "\n";
        return 0;
    }

    require_writable(args.out, args.force);
    if (args.method == "pg") {
        write_adjacency_csv(args.out, beliefs_to_adjacency(beliefs));
    } else if (args.method == "mlg") {
        write_edge_list(args.out, d, mlg(beliefs).edges());
    } else if (args.method == "mldag") {
        write_edge_list(args.out, d, mldag(renormalize(beliefs, ml_order(beliefs))).edges());
    } else {  // pdag
        const TopologicalOrder order = ml_order(beliefs);
        const OrderedEdgeBeliefs ordered = renormalize(beliefs, order);
        nlohmann::json edges = nlohmann::json::array();
        const std::vector<int>& pos = order.position();
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                const int from = pos[i] < pos[j] ? i : j;
                const int to = pos[i] < pos[j] ? j : i;
                edges.push_back(
                    {{"from", from}, {"to", to}, {"p", ordered.prob_along_order(i, j)}});
            }
        }
        std::ofstream out(args.out);
        if (!out) throw data_error("cannot open " + args.out + " for writing");
        out << nlohmann::json{{"d", d}, {"order", order.order()}, {"edges", edges}}.dump(2)
            << '\n';
        if (!out) throw data_error("write failed: " + args.out);
        if (!args.emit_adjacency.empty()) {
            require_writable(args.emit_adjacency, args.force);
            std::vector<double> a(static_cast<std::size_t>(d) * d, 0.0);
            for (int i = 0; i < d; ++i) {
                for (int j = i + 1; j < d; ++j) {
                    const int from = pos[i] < pos[j] ? i : j;
                    const int to = pos[i] < pos[j] ? j : i;
                    a[static_cast<std::size_t>(from) * d + to] = ordered.prob_along_order(i, j);
                }
            }
            write_adjacency_csv(args.emit_adjacency, WeightedAdjacency(d, std::move(a)));
        }
    }
    std::cout << args.method << " -> " << args.out << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
    std::string truth;
    std::string graph;
    std::string adjacency;
    std::string truth_edges;
    std::string out;
    std::string config;
    std::string method;
    int rep = -1;
    bool counts_only = false;
    bool force = false;
};

int run_eval(const EvalArgs& args) {
    if (args.graph.empty() == args.adjacency.empty()) {
        throw CLI::ValidationError("--graph/--adjacency", "give exactly one estimate input");
    }

    WeightedAdjacency estimate = [&] {
        if (!args.adjacency.empty()) return read_adjacency_csv(args.adjacency);
        return indicator_adjacency(read_edge_list(args.graph));
    }();

    MetricRecord record;
    record.config = args.config;
    record.method = args.method;
    record.rep = args.rep;

    if (args.counts_only) {
        if (args.truth_edges.empty()) {
            throw CLI::ValidationError("--truth-edges", "required with --counts-only");
        }
        const DirectedGraph consensus = read_directed_graph(args.truth_edges);
        if (consensus.node_count() != estimate.node_count()) {
            throw data_error("node count mismatch between estimate and consensus edges");
        }
        const EdgeCounts counts = expected_edge_counts(estimate, consensus.edges());
        record.values["predicted"] = counts.predicted;
        record.values["correct"] = counts.correct;
        record.values["reversed"] = counts.reversed;
    } else {
        if (args.truth.empty()) throw CLI::ValidationError("--truth", "required");
        const AcyclicGraph truth = read_acyclic_graph(args.truth);
        if (truth.node_count() != estimate.node_count()) {
            throw data_error("node count mismatch between truth and estimate");
        }
        const GraphMetrics gm = prob_metrics(estimate, truth);
        const EdgeCounts counts = expected_edge_counts(estimate, truth.edges());
        record.values["shd"] = gm.shd;
        record.values["shd_per_node"] = gm.shd_per_node;
        record.values["tpr"] = gm.tpr;
        record.values["fpr"] = gm.fpr;
        record.values["predicted"] = counts.predicted;
        record.values["correct"] = counts.correct;
        record.values["reversed"] = counts.reversed;
    }

    if (args.out.empty()) {
        std::cout << metric_record_to_json(record) << "\n";
    } else {
        append_metric_record(args.out, record);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs {
    std::string runs;
    std::string format = "table";
    std::string out;
    bool force = false;
};

int method_rank(const std::string& m) {
    const std::vector<std::string> known = {"pg", "mlg", "pdag", "mldag"};
    const auto it = std::find(known.begin(), known.end(), m);
    return it == known.end() ? static_cast<int>(known.size()) : static_cast<int>(it - known.begin());
}

int run_report(const ReportArgs& args) {
    const std::vector<MetricRecord> records = read_metric_records(args.runs);

    std::map<std::pair<std::string, std::string>, std::vector<const MetricRecord*>> groups;
    for (const MetricRecord& r : records) groups[{r.config, r.method}].push_back(&r);

    const std::vector<std::string> metric_order = {"shd_per_node", "tpr",     "fpr",
                                                   "predicted",    "correct", "reversed"};
    std::vector<std::string> columns;
    for (const std::string& m : metric_order) {
        const bool present = std::any_of(records.begin(), records.end(), [&](const MetricRecord& r) {
            return r.values.count(m) > 0;
        });
        if (present) columns.push_back(m);
    }

    std::vector<std::pair<std::string, std::string>> keys;
    for (const auto& [key, _] : groups) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        const int ra = method_rank(a.second), rb = method_rank(b.second);
        if (ra != rb) return ra < rb;
        return a.second < b.second;
    });

    struct Row {
        std::string config, method;
        std::size_t reps;
        std::map<std::string, AggregateStat> stats;
    };
    std::vector<Row> rows;
    for (const auto& key : keys) {
        Row row;
        row.config = key.first;
        row.method = key.second;
        row.reps = groups[key].size();
        for (const std::string& m : columns) {
            std::vector<double> xs;
            for (const MetricRecord* r : groups[key]) {
                const auto it = r->values.find(m);
                if (it != r->values.end()) xs.push_back(it->second);
            }
            if (!xs.empty()) row.stats[m] = aggregate_values(xs);
        }
        rows.push_back(std::move(row));
    }

    std::ostringstream body;
    if (args.format == "csv") {
        body << "config,method,reps";
        for (const std::string& m : columns) body << ',' << m << "_mean," << m << "_stderr";
        body << '\n';
        for (const Row& row : rows) {
            body << row.config << ',' << row.method << ',' << row.reps;
            for (const std::string& m : columns) {
                const auto it = row.stats.find(m);
                if (it == row.stats.end()) {
                    body << ",,";
                } else {
                    body << ',' << it->second.mean << ',' << it->second.stderr_;
                }
            }
            body << '\n';
        }
    } else {
        std::size_t cw = 6, mw = 6;
        for (const Row& row : rows) {
            cw = std::max(cw, row.config.size());
            mw = std::max(mw, row.method.size());
        }
        body << std::left << std::setw(static_cast<int>(cw) + 2) << "config"
             << std::setw(static_cast<int>(mw) + 2) << "method" << std::setw(6) << "reps";
        for (const std::string& m : columns) body << std::setw(14) << m;
        body << '\n';
        for (const Row& row : rows) {
            body << std::left << std::setw(static_cast<int>(cw) + 2) << row.config
                 << std::setw(static_cast<int>(mw) + 2) << row.method << std::setw(6) << row.reps;
            for (const std::string& m : columns) {
                const auto it = row.stats.find(m);
                body << std::setw(14) << (it == row.stats.end() ? "-" : format_stat(it->second));
            }
            body << '\n';
        }
    }

    if (args.out.empty()) {
        std::cout << body.str();
    } else {
        require_writable(args.out, args.force);
        std::ofstream out(args.out);
        if (!out) throw data_error("cannot open " + args.out + " for writing");
        out << body.str();
        if (!out) throw data_error("write failed: " + args.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Causal graph estimation from pairwise cause-effect beliefs"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate benchmark DAGs and SEM data");
    cmd_gen->add_option("--model", gen.model, "Graph model (er|sf)")
        ->check(CLI::IsMember({"er", "sf"}));
    cmd_gen->add_option("--nodes", gen.nodes, "Node count d");
    cmd_gen->add_option("--edges", gen.edges, "Edge count e");
    cmd_gen->add_option("--samples", gen.samples, "Samples per node n");
    cmd_gen->add_option("--reps", gen.reps, "Repetitions per configuration")
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--seed", gen.seed, "Base seed");
    cmd_gen->add_option("--out", gen.out, "Output directory")->required();
    cmd_gen->add_option("--grid", gen.grid, "Named grid ('paper': 16 configurations)");
    cmd_gen->add_flag("--force", gen.force, "Overwrite existing outputs");

    TrainArgs train;
    CLI::App* cmd_train = app.add_subcommand("train", "Train the pair scorer");
    cmd_train->add_option("--pairs", train.pairs_dir, "Directory of pair CSVs")->required();
    cmd_train->add_option("--labels", train.labels, "Labels CSV (pair_id,label)")->required();
    cmd_train->add_option("--out", train.out, "Model JSON output path")->required();
    cmd_train->add_option("--l2", train.config.l2, "L2 penalty")->check(CLI::NonNegativeNumber);
    cmd_train->add_option("--iterations", train.config.iterations, "Gradient steps")
        ->check(CLI::PositiveNumber);
    cmd_train->add_option("--learning-rate", train.config.learning_rate, "Step size")
        ->check(CLI::PositiveNumber);
    cmd_train->add_option("--seed", train.config.seed, "Split seed");
    cmd_train->add_flag("--force", train.force, "Overwrite existing outputs");

    ScoreArgs score;
    CLI::App* cmd_score = app.add_subcommand("score", "Score all column pairs of a dataset");
    cmd_score->add_option("--data", score.data, "Data CSV")->required();
    cmd_score->add_option("--model", score.model, "Scorer model JSON")->required();
    cmd_score->add_option("--out", score.out, "Beliefs JSON output path")->required();
    cmd_score->add_flag("--standardize,!--no-standardize", score.standardize,
                        "Standardize columns first (default on)");
    cmd_score->add_option("--dump-features", score.dump_features,
                          "Also write the pair feature matrix CSV");
    cmd_score->add_option("--threads", score.threads, "OpenMP thread count (0 = default)");
    cmd_score->add_flag("--force", score.force, "Overwrite existing outputs");

    AssembleArgs assemble;
    CLI::App* cmd_assemble = app.add_subcommand("assemble", "Assemble a graph estimate");
    cmd_assemble->add_option("--beliefs", assemble.beliefs, "Beliefs JSON")->required();
    cmd_assemble->add_option("--method", assemble.method, "pg|mlg|pdag|mldag")
        ->required()
        ->check(CLI::IsMember({"pg", "mlg", "pdag", "mldag"}));
    cmd_assemble->add_option("--out", assemble.out, "Output path (directory with --sample)")
        ->required();
    cmd_assemble->add_option("--sample", assemble.sample, "Emit k sampled graphs instead")
        ->check(CLI::NonNegativeNumber);
    cmd_assemble->add_option("--seed", assemble.seed, "Sampling seed");
    cmd_assemble->add_option("--emit-adjacency", assemble.emit_adjacency,
                             "With --method pdag: also write the induced adjacency CSV");
    cmd_assemble->add_flag("--force", assemble.force, "Overwrite existing outputs");

    EvalArgs eval;
    CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate an estimate against ground truth");
    cmd_eval->add_option("--truth", eval.truth, "Truth DAG edge-list TSV");
    cmd_eval->add_option("--graph", eval.graph, "Point estimate edge-list TSV (u-edges allowed)");
    cmd_eval->add_option("--adjacency", eval.adjacency, "Probabilistic estimate adjacency CSV");
    cmd_eval->add_flag("--counts-only", eval.counts_only,
                       "Emit expected edge counts against --truth-edges");
    cmd_eval->add_option("--truth-edges", eval.truth_edges, "Consensus edge-list TSV");
    cmd_eval->add_option("--out", eval.out, "Append the record here instead of stdout");
    cmd_eval->add_option("--config", eval.config, "Config label stamped into the record");
    cmd_eval->add_option("--method", eval.method, "Method label stamped into the record");
    cmd_eval->add_option("--rep", eval.rep, "Repetition index stamped into the record");

    ReportArgs report;
    CLI::App* cmd_report = app.add_subcommand("report", "Aggregate metric records into a table");
    cmd_report->add_option("--runs", report.runs, "Metric records JSONL file or directory")
        ->required();
    cmd_report->add_option("--format", report.format, "table|csv")
        ->check(CLI::IsMember({"table", "csv"}));
    cmd_report->add_option("--out", report.out, "Write the table here instead of stdout");
    cmd_report->add_flag("--force", report.force, "Overwrite existing outputs");

    try {
        app.parse(argc, argv);
        if (*cmd_gen) return run_gen(gen);
        if (*cmd_train) return run_train(train);
        if (*cmd_score) return run_score(score);
        if (*cmd_assemble) return run_assemble(assemble);
        if (*cmd_eval) return run_eval(eval);
        if (*cmd_report) return run_report(report);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
