#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pairgraph/features.hpp"
#include "pairgraph/rng.hpp"

using namespace pairgraph;

namespace {

std::vector<double> normals(int n, std::mt19937_64& eng) {
    std::vector<double> out(n);
    for (double& x : out) x = next_normal(eng);
    return out;
}

// Independent oracle for spearman: explicit rank-then-pearson.
double spearman_oracle(const std::vector<double>& u, const std::vector<double>& v) {
    auto ranks = [](const std::vector<double>& w) {
        std::vector<double> r(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            double less = 0.0, equal = 0.0;
            for (double x : w) {
                if (x < w[i]) ++less;
                if (x == w[i]) ++equal;
            }
            r[i] = less + (equal + 1.0) / 2.0;
        }
        return r;
    };
    return pearson(ranks(u), ranks(v));
}

}  // namespace

TEST_CASE("standardize_columns hits mean 0 / sample std 1 and zeroes constants") {
    const VariableMatrix x(3, 2, {1, 5, 2, 5, 3, 5});
    const VariableMatrix z = standardize_columns(x);
    CHECK(z.at(0, 0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(z.at(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(z.at(2, 0) == doctest::Approx(1.0).epsilon(1e-12));
    for (int r = 0; r < 3; ++r) CHECK(z.at(r, 1) == 0.0);

    // Idempotence within 1e-9.
    const VariableMatrix zz = standardize_columns(z);
    for (int r = 0; r < 3; ++r) {
        CHECK(std::abs(zz.at(r, 0) - z.at(r, 0)) < 1e-9);
    }
}

TEST_CASE("standardized columns of random data have exact-enough moments") {
    std::mt19937_64 eng = make_engine(3);
    std::vector<double> raw(40 * 3);
    for (double& x : raw) x = 5.0 + 3.0 * next_normal(eng);
    const VariableMatrix z = standardize_columns(VariableMatrix(40, 3, std::move(raw)));
    for (int c = 0; c < 3; ++c) {
        const std::vector<double> col = z.column(c);
        const double mean = std::accumulate(col.begin(), col.end(), 0.0) / col.size();
        double ss = 0.0;
        for (double x : col) ss += (x - mean) * (x - mean);
        CHECK(std::abs(mean) < 1e-9);
        CHECK(std::abs(std::sqrt(ss / (col.size() - 1)) - 1.0) < 1e-9);
    }
}

TEST_CASE("pearson worked examples") {
    CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{2, 4, 6}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{3, 2, 1}) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    // Direct evaluation of the covariance/variance formula gives 4/5.
    CHECK(pearson(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 3, 2, 4}) ==
          doctest::Approx(0.8).epsilon(1e-12));
    CHECK(pearson(std::vector<double>{2, 2, 2}, std::vector<double>{1, 2, 3}) == 0.0);
}

TEST_CASE("spearman uses mid-ranks and matches the brute-force oracle") {
    CHECK(spearman(std::vector<double>{1, 2, 5}, std::vector<double>{10, 40, 41}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spearman(std::vector<double>{1, 2, 3}, std::vector<double>{9, 4, 1}) ==
          doctest::Approx(-1.0).epsilon(1e-12));

    const std::vector<double> u = {1, 1, 2};
    const std::vector<double> v = {1, 2, 3};
    CHECK(spearman(u, v) == doctest::Approx(spearman_oracle(u, v)).epsilon(1e-12));
    // Mid-ranks [1.5, 1.5, 3] vs [1, 2, 3]: r = 1.5 / sqrt(1.5 * 2).
    CHECK(spearman(u, v) == doctest::Approx(1.5 / std::sqrt(3.0)).epsilon(1e-12));

    std::mt19937_64 eng = make_engine(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a(30), b(30);
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = std::floor(next_double(eng) * 8);  // heavy ties
            b[i] = std::floor(next_double(eng) * 8);
        }
        CHECK(spearman(a, b) == doctest::Approx(spearman_oracle(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("discretized_entropy: constant, uniform, and two-bin cases") {
    CHECK(discretized_entropy(std::vector<double>{4, 4, 4, 4}) == 0.0);

    std::vector<double> one_per_bin(16);
    for (int k = 0; k < 16; ++k) one_per_bin[k] = (2.0 * k + 1.0) / 32.0;
    CHECK(discretized_entropy(one_per_bin) == doctest::Approx(std::log(16.0)).epsilon(1e-12));

    CHECK(discretized_entropy(std::vector<double>{0, 0, 1, 1}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("mutual_information: degenerate, identity, and independent cases") {
    CHECK(mutual_information(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}) == 0.0);

    std::vector<double> one_per_bin(16);
    for (int k = 0; k < 16; ++k) one_per_bin[k] = (2.0 * k + 1.0) / 32.0;
    CHECK(mutual_information(one_per_bin, one_per_bin) ==
          doctest::Approx(discretized_entropy(one_per_bin)).epsilon(1e-12));

    std::mt19937_64 eng = make_engine(5);
    std::vector<double> u(10000), v(10000);
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = next_double(eng);
        v[i] = next_double(eng);
    }
    CHECK(mutual_information(u, v) < 0.05);
}

TEST_CASE("hsic separates dependent from independent and is permutation invariant") {
    std::mt19937_64 eng = make_engine(29);
    const std::vector<double> u0 = normals(200, eng);
    CHECK(hsic(std::vector<double>(200, 3.0), u0) == 0.0);

    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> u = normals(200, eng);
        std::vector<double> shuffled = u;
        shuffle_in_place(shuffled, eng);
        CHECK(hsic(u, u) > hsic(u, shuffled));
    }

    // Applying one permutation to both vectors leaves the statistic unchanged.
    std::vector<double> u = normals(120, eng);
    std::vector<double> v(120);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = u[i] * u[i] + 0.1 * next_normal(eng);
    std::vector<std::size_t> perm(120);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    shuffle_in_place(perm, eng);
    std::vector<double> up(120), vp(120);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        up[i] = u[perm[i]];
        vp[i] = v[perm[i]];
    }
    CHECK(hsic(up, vp) == doctest::Approx(hsic(u, v)).epsilon(1e-9));
}

TEST_CASE("igci: identity, affine, quadratic, and degenerate cases") {
    std::mt19937_64 eng = make_engine(41);
    std::vector<double> u(1000);
    for (double& x : u) x = next_double(eng);

    CHECK(igci_slope(u, u) - igci_slope(u, u) == 0.0);

    std::vector<double> affine(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) affine[i] = 2.0 * u[i] + 3.0;
    CHECK(std::abs(igci_slope(u, affine) - igci_slope(affine, u)) < 1e-9);

    std::vector<double> v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] * u[i];
    // Negative favors the u -> v direction.
    CHECK(igci_slope(u, v) - igci_slope(v, u) < 0.0);

    CHECK_THROWS_AS(igci_slope(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}),
                    data_error);
}

TEST_CASE("extract_features: arity, self-pair values, and degenerate handling") {
    std::mt19937_64 eng = make_engine(53);
    const std::vector<double> u = normals(80, eng);

    const FeatureVector f = extract_features(u, u);
    CHECK(f.values.size() == 23);
    CHECK(FeatureVector::names().size() == 23);
    CHECK(f.values[12] == doctest::Approx(1.0).epsilon(1e-12));  // pearson
    CHECK(f.values[18] == 0.0);                                  // igci_diff
    CHECK(f.values[19] == 0.0);                                  // cross moments
    CHECK(f.values[20] == 0.0);
    CHECK(f.values[21] == 0.0);  // entropy diff
    CHECK(f.values[22] == 0.0);  // unique ratio diff

    // One degenerate side substitutes 0 for the IGCI score.
    const std::vector<double> constant(80, 2.0);
    const FeatureVector g = extract_features(constant, u);
    CHECK(g.values[18] == 0.0);
    for (double x : g.values) CHECK(std::isfinite(x));

    CHECK_THROWS_AS(extract_features(constant, constant), data_error);
}

TEST_CASE("feature symmetry classes under argument swap") {
    std::mt19937_64 eng = make_engine(61);
    std::vector<double> u = normals(150, eng);
    std::vector<double> v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = std::sin(u[i]) + 0.5 * next_normal(eng);

    const FeatureVector fuv = extract_features(u, v);
    const FeatureVector fvu = extract_features(v, u);

    for (int k = 0; k < 6; ++k) CHECK(fuv.values[k] == fvu.values[k + 6]);  // blocks swap
    CHECK(fuv.values[12] == fvu.values[12]);
    CHECK(fuv.values[13] == fvu.values[13]);
    CHECK(fuv.values[14] == fvu.values[14]);
    CHECK(fuv.values[15] == fvu.values[15]);
    CHECK(fuv.values[16] == doctest::Approx(fvu.values[16]).epsilon(1e-12));  // MI
    CHECK(fuv.values[17] == fvu.values[17]);                                  // HSIC
    CHECK(fuv.values[18] == -fvu.values[18]);
    CHECK(fuv.values[19] == -fvu.values[19]);
    CHECK(fuv.values[20] == -fvu.values[20]);
    CHECK(fuv.values[21] == -fvu.values[21]);
    CHECK(fuv.values[22] == -fvu.values[22]);
}

TEST_CASE("features are invariant to joint row permutation") {
    std::mt19937_64 eng = make_engine(67);
    std::vector<double> u = normals(100, eng);
    std::vector<double> v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] * u[i] + 0.2 * next_normal(eng);

    std::vector<std::size_t> perm(u.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    shuffle_in_place(perm, eng);
    std::vector<double> up(u.size()), vp(u.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        up[i] = u[perm[i]];
        vp[i] = v[perm[i]];
    }

    const FeatureVector a = extract_features(u, v);
    const FeatureVector b = extract_features(up, vp);
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        CHECK(a.values[k] == doctest::Approx(b.values[k]).epsilon(1e-9));
    }

    // Ranges.
    CHECK(a.values[12] >= -1.0);
    CHECK(a.values[12] <= 1.0);
    CHECK(a.values[14] >= -1.0);
    CHECK(a.values[14] <= 1.0);
    CHECK(a.values[16] >= 0.0);
    CHECK(a.values[17] >= 0.0);
    CHECK(a.values[5] >= 0.0);
}
