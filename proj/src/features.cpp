#include "pairgraph/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pairgraph {

namespace {

constexpr int kHistogramBins = 16;
constexpr int kHsicMaxPoints = 500;
constexpr double kIgciSlopeFloor = 1e-10;

double mean_of(std::span<const double> u) {
    return std::accumulate(u.begin(), u.end(), 0.0) / static_cast<double>(u.size());
}

// Central moment of order k.
double central_moment(std::span<const double> u, double mean, int k) {
    double acc = 0.0;
    for (double x : u) acc += std::pow(x - mean, k);
    return acc / static_cast<double>(u.size());
}

int unique_count(std::span<const double> u) {
    std::vector<double> s(u.begin(), u.end());
    std::sort(s.begin(), s.end());
    return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

int bin_of(double x, double lo, double width) {
    const int b = static_cast<int>((x - lo) / width);
    return std::clamp(b, 0, kHistogramBins - 1);
}

// Mid-ranks: ties are assigned the average of the ranks they span.
std::vector<double> midranks(std::span<const double> u) {
    const std::size_t n = u.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
    std::vector<double> ranks(n);
    std::size_t k = 0;
    while (k < n) {
        std::size_t e = k;
        while (e + 1 < n && u[idx[e + 1]] == u[idx[k]]) ++e;
        const double r = 0.5 * (static_cast<double>(k) + static_cast<double>(e)) + 1.0;
        for (std::size_t t = k; t <= e; ++t) ranks[idx[t]] = r;
        k = e + 1;
    }
    return ranks;
}

std::vector<double> stride_subsample(std::span<const double> u, int limit) {
    const int n = static_cast<int>(u.size());
    if (n <= limit) return std::vector<double>(u.begin(), u.end());
    std::vector<double> out(limit);
    for (int k = 0; k < limit; ++k) {
        out[k] = u[static_cast<std::size_t>(static_cast<double>(k) * n / limit)];
    }
    return out;
}

double median_pairwise_distance(const std::vector<double>& u) {
    std::vector<double> dist;
    dist.reserve(u.size() * (u.size() - 1) / 2);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) dist.push_back(std::abs(u[i] - u[j]));
    }
    if (dist.empty()) return 0.0;
    const std::size_t mid = dist.size() / 2;
    std::nth_element(dist.begin(), dist.begin() + mid, dist.end());
    return dist[mid];
}

// Gaussian kernel matrix, double-centered in place.
std::vector<double> centered_kernel(const std::vector<double>& u) {
    const std::size_t m = u.size();
    double sigma = median_pairwise_distance(u);
    if (sigma == 0.0) sigma = 1.0;
    const double scale = -1.0 / (2.0 * sigma * sigma);

    std::vector<double> k(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        k[i * m + i] = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = u[i] - u[j];
            const double v = std::exp(scale * d * d);
            k[i * m + j] = v;
            k[j * m + i] = v;
        }
    }

    std::vector<double> rowmean(m, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += k[i * m + j];
        rowmean[i] = acc / static_cast<double>(m);
        total += acc;
    }
    total /= static_cast<double>(m) * static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            k[i * m + j] += total - rowmean[i] - rowmean[j];
        }
    }
    return k;
}

double finite_or_zero(double x) { return std::isfinite(x) ? x : 0.0; }

}  // namespace

const std::vector<std::string>& FeatureVector::names() {
    static const std::vector<std::string> kNames = {
        "u_min",    "u_max",    "u_unique_ratio", "u_skewness", "u_kurtosis", "u_entropy",
        "v_min",    "v_max",    "v_unique_ratio", "v_skewness", "v_kurtosis", "v_entropy",
        "pearson",  "abs_pearson", "spearman",    "abs_spearman", "mutual_information",
        "hsic",     "igci_diff",   "cross_moment_21", "cross_moment_31", "entropy_diff",
        "unique_ratio_diff"};
    return kNames;
}

VariableMatrix standardize_columns(const VariableMatrix& x) {
    std::vector<double> out(x.values.size());
    for (int c = 0; c < x.d; ++c) {
        double mean = 0.0;
        for (int r = 0; r < x.n; ++r) mean += x.at(r, c);
        mean /= x.n;
        double ss = 0.0;
        for (int r = 0; r < x.n; ++r) {
            const double delta = x.at(r, c) - mean;
            ss += delta * delta;
        }
        const double sd = std::sqrt(ss / (x.n - 1));
        for (int r = 0; r < x.n; ++r) {
            out[static_cast<std::size_t>(r) * x.d + c] = sd == 0.0 ? 0.0 : (x.at(r, c) - mean) / sd;
        }
    }
    return VariableMatrix(x.n, x.d, std::move(out), x.column_names);
}

double pearson(std::span<const double> u, std::span<const double> v) {
    const double mu = mean_of(u);
    const double mv = mean_of(v);
    double suv = 0.0, suu = 0.0, svv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double du = u[i] - mu;
        const double dv = v[i] - mv;
        suv += du * dv;
        suu += du * du;
        svv += dv * dv;
    }
    if (suu == 0.0 || svv == 0.0) return 0.0;
    return std::clamp(suv / std::sqrt(suu * svv), -1.0, 1.0);
}

double spearman(std::span<const double> u, std::span<const double> v) {
    const std::vector<double> ru = midranks(u);
    const std::vector<double> rv = midranks(v);
    return pearson(ru, rv);
}

double discretized_entropy(std::span<const double> u) {
    const auto [lo_it, hi_it] = std::minmax_element(u.begin(), u.end());
    const double lo = *lo_it, hi = *hi_it;
    if (lo == hi) return 0.0;
    const double width = (hi - lo) / kHistogramBins;

    int counts[kHistogramBins] = {};
    for (double x : u) ++counts[bin_of(x, lo, width)];

    const double n = static_cast<double>(u.size());
    double h = 0.0;
    for (int c : counts) {
        if (c > 0) {
            const double p = c / n;
            h -= p * std::log(p);
        }
    }
    return std::max(h, 0.0);
}

double mutual_information(std::span<const double> u, std::span<const double> v) {
    const auto [ulo_it, uhi_it] = std::minmax_element(u.begin(), u.end());
    const auto [vlo_it, vhi_it] = std::minmax_element(v.begin(), v.end());
    const double ulo = *ulo_it, uhi = *uhi_it, vlo = *vlo_it, vhi = *vhi_it;
    if (ulo == uhi || vlo == vhi) return 0.0;
    const double uw = (uhi - ulo) / kHistogramBins;
    const double vw = (vhi - vlo) / kHistogramBins;

    int joint[kHistogramBins][kHistogramBins] = {};
    int row[kHistogramBins] = {};
    int col[kHistogramBins] = {};
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int a = bin_of(u[i], ulo, uw);
        const int b = bin_of(v[i], vlo, vw);
        ++joint[a][b];
        ++row[a];
        ++col[b];
    }

    const double n = static_cast<double>(u.size());
    double mi = 0.0;
    for (int a = 0; a < kHistogramBins; ++a) {
        for (int b = 0; b < kHistogramBins; ++b) {
            if (joint[a][b] > 0) {
                const double p = joint[a][b] / n;
                mi += p * std::log(p * n * n / (static_cast<double>(row[a]) * col[b]));
            }
        }
    }
    return std::max(mi, 0.0);
}

double hsic(std::span<const double> u, std::span<const double> v) {
    const std::vector<double> us = stride_subsample(u, kHsicMaxPoints);
    const std::vector<double> vs = stride_subsample(v, kHsicMaxPoints);
    const std::size_t m = us.size();

    const std::vector<double> ku = centered_kernel(us);
    const std::vector<double> kv = centered_kernel(vs);

    double acc = 0.0;
    for (std::size_t i = 0; i < m * m; ++i) acc += ku[i] * kv[i];
    return std::max(acc / (static_cast<double>(m) * static_cast<double>(m)), 0.0);
}

double igci_slope(std::span<const double> u, std::span<const double> v) {
    const auto [ulo_it, uhi_it] = std::minmax_element(u.begin(), u.end());
    const auto [vlo_it, vhi_it] = std::minmax_element(v.begin(), v.end());
    const double ulo = *ulo_it, uhi = *uhi_it, vlo = *vlo_it, vhi = *vhi_it;
    if (ulo == uhi) throw data_error("degenerate cause variable");
    const double uscale = uhi - ulo;
    const double vscale = vhi == vlo ? 1.0 : vhi - vlo;

    const std::size_t n = u.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });

    double acc = 0.0;
    int pairs = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double du = (u[idx[k + 1]] - u[idx[k]]) / uscale;
        if (du == 0.0) continue;
        const double dv = std::abs(v[idx[k + 1]] - v[idx[k]]) / vscale;
        acc += dv == 0.0 ? std::log(kIgciSlopeFloor) : std::log(dv / du);
        ++pairs;
    }
    return acc / pairs;
}

FeatureVector extract_features(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw invariant_error("pair vectors differ in length");
    if (u.size() < 3) throw invariant_error("pair needs at least 3 samples");
    const double n = static_cast<double>(u.size());

    double igci_diff = 0.0;
    try {
        igci_diff = igci_slope(u, v) - igci_slope(v, u);
    } catch (const data_error&) {
        const bool u_degenerate = unique_count(u) < 2;
        const bool v_degenerate = unique_count(v) < 2;
        if (u_degenerate && v_degenerate) throw;
        igci_diff = 0.0;
    }

    // Grouped so that an argument swap negates each term bit-exactly.
    double m21 = 0.0, m31 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double uu = u[i] * u[i];
        const double vv = v[i] * v[i];
        m21 += uu * v[i] - u[i] * vv;
        m31 += (uu * u[i]) * v[i] - u[i] * (vv * v[i]);
    }
    m21 /= n;
    m31 /= n;

    auto block = [&](std::span<const double> w, double* out) {
        const double mean = mean_of(w);
        const double m2 = central_moment(w, mean, 2);
        out[0] = *std::min_element(w.begin(), w.end());
        out[1] = *std::max_element(w.begin(), w.end());
        out[2] = unique_count(w) / n;
        out[3] = m2 == 0.0 ? 0.0 : central_moment(w, mean, 3) / std::pow(m2, 1.5);
        out[4] = m2 == 0.0 ? 0.0 : central_moment(w, mean, 4) / (m2 * m2) - 3.0;  // excess
        out[5] = discretized_entropy(w);
    };

    FeatureVector f;
    f.values.resize(FeatureVector::size);
    block(u, &f.values[0]);
    block(v, &f.values[6]);
    const double r = pearson(u, v);
    const double rho = spearman(u, v);
    f.values[12] = r;
    f.values[13] = std::abs(r);
    f.values[14] = rho;
    f.values[15] = std::abs(rho);
    f.values[16] = mutual_information(u, v);
    f.values[17] = hsic(u, v);
    f.values[18] = igci_diff;
    f.values[19] = m21;
    f.values[20] = m31;
    f.values[21] = f.values[5] - f.values[11];
    f.values[22] = f.values[2] - f.values[8];

    for (double& x : f.values) x = finite_or_zero(x);
    return f;
}

}  // namespace pairgraph
