#include "pairgraph/scorer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pairgraph {

namespace {

constexpr const char* kModelFormat = "pairgraph.scorer.v1";
constexpr double kBeliefsFileTolerance = 1e-6;

using Json = nlohmann::json;

std::array<double, kClassCount> softmax(const std::array<double, kClassCount>& scores) {
    const double top = *std::max_element(scores.begin(), scores.end());
    std::array<double, kClassCount> p{};
    double z = 0.0;
    for (int c = 0; c < kClassCount; ++c) {
        p[c] = std::exp(scores[c] - top);
        z += p[c];
    }
    for (double& x : p) x /= z;
    return p;
}

int class_index(int label) { return label + 1; }  // -1,0,1 -> 0,1,2

// Standardized feature vector with the trailing bias slot set to 1.
std::vector<double> standardized_input(const PairScorer& s, const FeatureVector& f) {
    const std::size_t k = f.values.size();
    std::vector<double> z(k + 1);
    for (std::size_t i = 0; i < k; ++i) z[i] = (f.values[i] - s.mean()[i]) / s.stddev()[i];
    z[k] = 1.0;
    return z;
}

std::array<double, kClassCount> class_probabilities(const PairScorer& s,
                                                    const std::vector<double>& z) {
    std::array<double, kClassCount> scores{};
    for (int c = 0; c < kClassCount; ++c) {
        scores[c] = std::inner_product(z.begin(), z.end(), s.weights()[c].begin(), 0.0);
    }
    return softmax(scores);
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw data_error(path.string() + ": " + e.what());
    }
    return j;
}

void write_json_file(const Json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw data_error("write failed: " + path.string());
}

}  // namespace

PairScorer::PairScorer(std::vector<std::string> feature_names, std::vector<double> mean,
                       std::vector<double> stddev, std::vector<std::vector<double>> weights)
    : feature_names_(std::move(feature_names)),
      mean_(std::move(mean)),
      stddev_(std::move(stddev)),
      weights_(std::move(weights)) {
    const std::size_t k = feature_names_.size();
    if (mean_.size() != k || stddev_.size() != k) {
        throw invariant_error("standardization stats do not match feature count");
    }
    if (weights_.size() != kClassCount) throw invariant_error("scorer needs 3 weight rows");
    for (const auto& row : weights_) {
        if (row.size() != k + 1) throw invariant_error("weight row must have feature count + 1");
        for (double w : row) {
            if (!std::isfinite(w)) throw invariant_error("non-finite scorer weight");
        }
    }
    for (double s : stddev_) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw invariant_error("feature stddev must be positive and finite");
        }
    }
}

PairScorer train_scorer(const std::vector<LabeledPairSample>& samples, const TrainConfig& config,
                        std::vector<double>* loss_history) {
    bool present[kClassCount] = {};
    for (const LabeledPairSample& s : samples) {
        if (s.label < -1 || s.label > 1) throw invariant_error("label must be in {-1, 0, 1}");
        present[class_index(s.label)] = true;
    }
    for (int c = 0; c < kClassCount; ++c) {
        if (!present[c]) {
            throw data_error("class absent from training data: " + std::to_string(c - 1));
        }
    }
    if (config.iterations < 1 || config.learning_rate <= 0.0 || config.l2 < 0.0) {
        throw invariant_error("bad training config");
    }

    // Swap augmentation keeps the learned decision symmetric in the pair order.
    const std::size_t n = samples.size() * 2;
    const std::size_t k = FeatureVector::size;
    std::vector<std::vector<double>> x(n);
    std::vector<int> y(n);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const LabeledPairSample& s = samples[i];
        x[2 * i] = extract_features(s.u, s.v).values;
        y[2 * i] = class_index(s.label);
        x[2 * i + 1] = extract_features(s.v, s.u).values;
        y[2 * i + 1] = class_index(-s.label);
    }

    std::vector<double> mean(k, 0.0), stddev(k, 1.0);
    for (std::size_t j = 0; j < k; ++j) {
        double m = 0.0;
        for (const auto& row : x) m += row[j];
        m /= static_cast<double>(n);
        double ss = 0.0;
        for (const auto& row : x) ss += (row[j] - m) * (row[j] - m);
        const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
        mean[j] = m;
        stddev[j] = sd > 0.0 ? sd : 1.0;
    }
    for (auto& row : x) {
        for (std::size_t j = 0; j < k; ++j) row[j] = (row[j] - mean[j]) / stddev[j];
        row.push_back(1.0);  // bias slot
    }

    std::vector<std::vector<double>> w(kClassCount, std::vector<double>(k + 1, 0.0));
    const double inv_n = 1.0 / static_cast<double>(n);

    auto loss_of = [&]() {
        double nll = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::array<double, kClassCount> scores{};
            for (int c = 0; c < kClassCount; ++c) {
                scores[c] = std::inner_product(x[i].begin(), x[i].end(), w[c].begin(), 0.0);
            }
            nll -= std::log(softmax(scores)[y[i]]);
        }
        double reg = 0.0;
        for (const auto& row : w) {
            for (std::size_t j = 0; j < k; ++j) reg += row[j] * row[j];  // bias excluded
        }
        return nll * inv_n + 0.5 * config.l2 * reg;
    };

    if (loss_history) {
        loss_history->clear();
        loss_history->push_back(loss_of());
    }

    std::vector<std::vector<double>> grad(kClassCount, std::vector<double>(k + 1));
    for (int it = 0; it < config.iterations; ++it) {
        for (auto& row : grad) std::fill(row.begin(), row.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            std::array<double, kClassCount> scores{};
            for (int c = 0; c < kClassCount; ++c) {
                scores[c] = std::inner_product(x[i].begin(), x[i].end(), w[c].begin(), 0.0);
            }
            const auto p = softmax(scores);
            for (int c = 0; c < kClassCount; ++c) {
                const double delta = (p[c] - (y[i] == c ? 1.0 : 0.0)) * inv_n;
                for (std::size_t j = 0; j <= k; ++j) grad[c][j] += delta * x[i][j];
            }
        }
        for (int c = 0; c < kClassCount; ++c) {
            for (std::size_t j = 0; j < k; ++j) {
                w[c][j] -= config.learning_rate * (grad[c][j] + config.l2 * w[c][j]);
            }
            w[c][k] -= config.learning_rate * grad[c][k];
        }
        if (loss_history) loss_history->push_back(loss_of());
    }

    return PairScorer(FeatureVector::names(), std::move(mean), std::move(stddev), std::move(w));
}

BeliefTriple predict_pair(const PairScorer& scorer, std::span<const double> u,
                          std::span<const double> v) {
    const auto pf = class_probabilities(scorer, standardized_input(scorer, extract_features(u, v)));
    const auto pb = class_probabilities(scorer, standardized_input(scorer, extract_features(v, u)));
    // Average the two directions with the direction classes mirrored.
    BeliefTriple t;
    t.rev = 0.5 * (pf[0] + pb[2]);
    t.none = 0.5 * (pf[1] + pb[1]);
    t.fwd = 0.5 * (pf[2] + pb[0]);
    return t;
}

namespace {

PairBeliefs score_pairs(const PairScorer& scorer, const VariableMatrix& x, bool parallel) {
    const int d = x.d;
    std::vector<std::vector<double>> cols(d);
    for (int c = 0; c < d; ++c) cols[c] = x.column(c);

    struct PairId {
        int i, j;
    };
    std::vector<PairId> pairs;
    pairs.reserve(pair_count(d));
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) pairs.push_back({i, j});
    }

    std::vector<BeliefTriple> entries(pairs.size());
    std::string first_error;

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pairs.size()); ++k) {
            try {
                entries[k] = predict_pair(scorer, cols[pairs[k].i], cols[pairs[k].j]);
            } catch (const std::exception& e) {
#pragma omp critical
                if (first_error.empty()) {
                    first_error = "pair (" + std::to_string(pairs[k].i) + "," +
                                  std::to_string(pairs[k].j) + "): " + e.what();
                }
            }
        }
    } else {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            try {
                entries[k] = predict_pair(scorer, cols[pairs[k].i], cols[pairs[k].j]);
            } catch (const std::exception& e) {
                throw data_error("pair (" + std::to_string(pairs[k].i) + "," +
                                 std::to_string(pairs[k].j) + "): " + e.what());
            }
        }
    }
    if (!first_error.empty()) throw data_error(first_error);

    return PairBeliefs(d, std::move(entries));
}

}  // namespace

PairBeliefs score_all_pairs(const PairScorer& scorer, const VariableMatrix& x) {
    return score_pairs(scorer, x, true);
}

PairBeliefs score_all_pairs_serial(const PairScorer& scorer, const VariableMatrix& x) {
    return score_pairs(scorer, x, false);
}

void save_scorer(const PairScorer& scorer, const std::filesystem::path& path) {
    Json j;
    j["format"] = kModelFormat;
    j["features"] = scorer.feature_names();
    j["mean"] = scorer.mean();
    j["std"] = scorer.stddev();
    j["weights"] = scorer.weights();
    write_json_file(j, path);
}

PairScorer load_scorer(const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    try {
        if (j.at("format").get<std::string>() != kModelFormat) {
            throw data_error(path.string() + ": unsupported model format");
        }
        return PairScorer(j.at("features").get<std::vector<std::string>>(),
                          j.at("mean").get<std::vector<double>>(),
                          j.at("std").get<std::vector<double>>(),
                          j.at("weights").get<std::vector<std::vector<double>>>());
    } catch (const Json::exception& e) {
        throw data_error(path.string() + ": " + e.what());
    } catch (const invariant_error& e) {
        throw data_error(path.string() + ": " + e.what());
    }
}

void save_beliefs(const PairBeliefs& beliefs, const std::filesystem::path& path) {
    const int d = beliefs.node_count();
    Json pairs = Json::array();
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const BeliefTriple& t = beliefs.at(i, j);
            pairs.push_back(
                {{"i", i}, {"j", j}, {"p_rev", t.rev}, {"p_none", t.none}, {"p_fwd", t.fwd}});
        }
    }
    write_json_file(Json{{"d", d}, {"pairs", pairs}}, path);
}

PairBeliefs load_beliefs(const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    int d = 0;
    std::vector<BeliefTriple> entries;
    try {
        d = j.at("d").get<int>();
        if (d < 2) throw data_error(path.string() + ": d must be at least 2");
        const Json& pairs = j.at("pairs");
        if (pairs.size() != pair_count(d)) {
            throw data_error(path.string() + ": expected " + std::to_string(pair_count(d)) +
                             " pairs for d=" + std::to_string(d) + ", found " +
                             std::to_string(pairs.size()));
        }
        entries.reserve(pairs.size());
        std::size_t k = 0;
        for (int i = 0; i < d; ++i) {
            for (int jj = i + 1; jj < d; ++jj, ++k) {
                const Json& p = pairs.at(k);
                const std::string tag = "pair (" + std::to_string(i) + "," + std::to_string(jj) + ")";
                if (p.at("i").get<int>() != i || p.at("j").get<int>() != jj) {
                    throw data_error(path.string() + ": " + tag +
                                     " missing or out of lexicographic order");
                }
                BeliefTriple t{p.at("p_rev").get<double>(), p.at("p_none").get<double>(),
                               p.at("p_fwd").get<double>()};
                if (!(t.rev >= 0.0 && t.rev <= 1.0 && t.none >= 0.0 && t.none <= 1.0 &&
                      t.fwd >= 0.0 && t.fwd <= 1.0)) {
                    throw data_error(path.string() + ": " + tag + " has probability outside [0,1]");
                }
                const double sum = t.rev + t.none + t.fwd;
                if (std::abs(sum - 1.0) > kBeliefsFileTolerance) {
                    throw data_error(path.string() + ": " + tag + " probabilities sum to " +
                                     std::to_string(sum));
                }
                if (std::abs(sum - 1.0) > 1e-9) {  // renormalize sloppy but acceptable triples
                    t.rev /= sum;
                    t.none /= sum;
                    t.fwd /= sum;
                }
                entries.push_back(t);
            }
        }
    } catch (const Json::exception& e) {
        throw data_error(path.string() + ": " + e.what());
    }
    return PairBeliefs(d, std::move(entries));
}

}  // namespace pairgraph
