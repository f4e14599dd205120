#pragma once

// Statistical and information-theoretic features of a variable pair, the
// inputs to the pair scorer. All functions are pure and row-permutation
// invariant; non-finite intermediate results are mapped to 0 (except the
// documented IGCI degenerate error).

#include <span>
#include <string>
#include <vector>

#include "pairgraph/types.hpp"

namespace pairgraph {

// Fixed-arity feature vector. Layout (23 entries):
//   0..5   u block: min, max, unique_ratio, skewness, kurtosis, entropy
//   6..11  v block: same measures of v
//   12..16 symmetric pair: pearson, abs_pearson, spearman, abs_spearman,
//          mutual_information
//   17     hsic
//   18     igci_diff        igci(u,v) - igci(v,u); negative favors u -> v
//   19     cross_moment_21  E[u^2 v] - E[u v^2]
//   20     cross_moment_31  E[u^3 v] - E[u v^3]
//   21     entropy_diff     H(u) - H(v)
//   22     unique_ratio_diff
struct FeatureVector {
    std::vector<double> values;

    static constexpr int size = 23;
    static const std::vector<std::string>& names();
};

// Per-column z-scoring with the sample standard deviation (n-1); a constant
// column maps to all zeros.
VariableMatrix standardize_columns(const VariableMatrix& x);

// Product-moment correlation; 0 if either vector is constant.
double pearson(std::span<const double> u, std::span<const double> v);

// Pearson correlation of mid-ranks (ties get their average rank).
double spearman(std::span<const double> u, std::span<const double> v);

// Shannon entropy (nats) of the 16-bin equal-width histogram over
// [min(u), max(u)]; constant input gives 0.
double discretized_entropy(std::span<const double> u);

// Mutual information (nats) of the joint 16x16 equal-width histogram,
// clipped below at 0.
double mutual_information(std::span<const double> u, std::span<const double> v);

// Biased V-statistic HSIC with Gaussian kernels; bandwidth is the median
// pairwise distance per variable (1.0 when the median is 0). Inputs are
// stride-subsampled deterministically to at most 500 points.
double hsic(std::span<const double> u, std::span<const double> v);

// Slope-based IGCI score of the direction u -> v: both variables are
// min-max normalized, samples sorted by u, and the mean of
// ln(|dv|/|du|) is taken over consecutive distinct-u pairs (dv = 0
// contributes ln(1e-10)). Throws data_error("degenerate cause variable")
// when u has fewer than 2 distinct values.
double igci_slope(std::span<const double> u, std::span<const double> v);

// The full 23-feature vector for the pair (u, v). Substitutes 0 for the
// IGCI score when exactly one direction is degenerate; propagates the
// error only when both are.
FeatureVector extract_features(std::span<const double> u, std::span<const double> v);

}  // namespace pairgraph
