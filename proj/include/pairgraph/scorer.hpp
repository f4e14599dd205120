#pragma once

// Turns a variable pair into the categorical belief (p_rev, p_none, p_fwd).
// The native model is a multinomial logistic regression over the pairfeat
// features; externally produced beliefs enter through the beliefs file.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pairgraph/features.hpp"
#include "pairgraph/types.hpp"

namespace pairgraph {

// Class order everywhere: (reverse, none, forward) = (-1, 0, 1).
inline constexpr int kClassCount = 3;

struct LabeledPairSample {
    std::vector<double> u;
    std::vector<double> v;
    int label = 0;  // -1 reverse, 0 none, 1 forward
};

struct TrainConfig {
    double l2 = 1e-3;
    int iterations = 500;
    double learning_rate = 0.1;
    std::uint64_t seed = 0;
};

// Trained multinomial linear model plus the feature standardization it was
// fitted with. Immutable; prediction is safe to call concurrently.
class PairScorer {
public:
    PairScorer(std::vector<std::string> feature_names, std::vector<double> mean,
               std::vector<double> stddev, std::vector<std::vector<double>> weights);

    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const std::vector<double>& mean() const { return mean_; }
    const std::vector<double>& stddev() const { return stddev_; }
    // kClassCount rows of (feature count + 1) columns; last column is the bias.
    const std::vector<std::vector<double>>& weights() const { return weights_; }

private:
    std::vector<std::string> feature_names_;
    std::vector<double> mean_;
    std::vector<double> stddev_;
    std::vector<std::vector<double>> weights_;
};

// Fits by full-batch gradient descent on the swap-augmented sample set
// (every (u, v, l) also enters as (v, u, -l)). Deterministic. Requires all
// three classes among `samples`. When `loss_history` is non-null it receives
// the regularized loss before training and after every iteration.
PairScorer train_scorer(const std::vector<LabeledPairSample>& samples, const TrainConfig& config,
                        std::vector<double>* loss_history = nullptr);

// Symmetrized categorical belief for the pair (u, v): the model is applied
// in both argument orders and the two softmax outputs are averaged with the
// direction classes mirrored.
BeliefTriple predict_pair(const PairScorer& scorer, std::span<const double> u,
                          std::span<const double> v);

// predict_pair over every column pair i < j. The parallel variant spreads
// pairs across OpenMP threads; results are identical to the serial one.
PairBeliefs score_all_pairs(const PairScorer& scorer, const VariableMatrix& x);
PairBeliefs score_all_pairs_serial(const PairScorer& scorer, const VariableMatrix& x);

// Scorer model file (JSON).
void save_scorer(const PairScorer& scorer, const std::filesystem::path& path);
PairScorer load_scorer(const std::filesystem::path& path);

// Beliefs file (JSON): all pairs i < j in lexicographic order.
void save_beliefs(const PairBeliefs& beliefs, const std::filesystem::path& path);
PairBeliefs load_beliefs(const std::filesystem::path& path);

}  // namespace pairgraph
