#include <doctest.h>

#include <cmath>

#include "kenmotsu/numkit.hpp"
#include "kenmotsu/rng.hpp"

using namespace kenmotsu;

namespace {

RealMatrix diag(const Vec& d) {
    RealMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

RealMatrix random_spd(int n, SplitMix64& rng) {
    RealMatrix m(n, n);
    for (double& x : m.entries) x = rng.uniform(-1.0, 1.0);
    RealMatrix g = matmul(transpose(m), m);
    for (int i = 0; i < n; ++i) g(i, i) += 0.5 * n;
    return g;
}

ComplexMatrix random_hermitian(int n, SplitMix64& rng) {
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

} // namespace

TEST_CASE("gram_schmidt orthonormalizes under the euclidean inner product") {
    const std::vector<Vec> in{{1.0, 0.0}, {1.0, 1.0}};
    const auto out = gram_schmidt(in, RealMatrix::identity(2));
    REQUIRE(out.size() == 2);
    CHECK(out[0][0] == doctest::Approx(1.0));
    CHECK(out[0][1] == doctest::Approx(0.0));
    CHECK(out[1][0] == doctest::Approx(0.0));
    CHECK(out[1][1] == doctest::Approx(1.0));
}

TEST_CASE("gram_schmidt normalizes a single vector") {
    const auto out = gram_schmidt({{2.0, 0.0, 0.0}}, RealMatrix::identity(3));
    CHECK(out[0][0] == doctest::Approx(1.0));
    CHECK(out[0][1] == 0.0);
    CHECK(out[0][2] == 0.0);
}

TEST_CASE("gram_schmidt respects a non-euclidean gram matrix") {
    const RealMatrix gram = diag({4.0, 1.0});
    const auto out = gram_schmidt({{1.0, 0.0}, {1.0, 1.0}}, gram);
    CHECK(out[0][0] == doctest::Approx(0.5));
    CHECK(out[0][1] == doctest::Approx(0.0));
    CHECK(out[1][0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(out[1][1] == doctest::Approx(1.0));
    // <v, v>_gram = 1 by direct evaluation
    CHECK(gram_inner(out[0], gram, out[0]) == doctest::Approx(1.0));
    CHECK(gram_inner(out[1], gram, out[1]) == doctest::Approx(1.0));
}

TEST_CASE("gram_schmidt rejects dependent input") {
    try {
        gram_schmidt({{1.0, 0.0}, {2.0, 0.0}}, RealMatrix::identity(2));
        FAIL("expected DependentInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DependentInput);
    }
    try {
        gram_schmidt({{1.0, 0.0}, {-1.0, 1e-12}}, RealMatrix::identity(2));
        FAIL("expected DependentInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DependentInput);
    }
}

TEST_CASE("gram_schmidt stays orthonormal on randomized SPD gram matrices") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 7);
        const RealMatrix gram = random_spd(n, rng);
        REQUIRE(is_spd(gram));
        std::vector<Vec> vecs(n, Vec(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) vecs[i][j] = rng.uniform(-1.0, 1.0);
        std::vector<Vec> onb;
        try {
            onb = gram_schmidt(vecs, gram, 1e-9);
        } catch (const Error& e) {
            // A genuinely near-singular draw is allowed to be rejected.
            CHECK(e.kind() == ErrorKind::DependentInput);
            continue;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double expected = (i == j) ? 1.0 : 0.0;
                CHECK(std::abs(gram_inner(onb[i], gram, onb[j]) - expected) < 1e-9);
            }
    }
}

TEST_CASE("hermitian_eigen handles the identity") {
    const auto eig = hermitian_eigen(ComplexMatrix::identity(2));
    CHECK(eig.values[0] == doctest::Approx(1.0));
    CHECK(eig.values[1] == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigen diagonalizes a real reflection") {
    ComplexMatrix h(2);
    h(0, 1) = Complex{1.0, 0.0};
    h(1, 0) = Complex{1.0, 0.0};
    const auto eig = hermitian_eigen(h);
    CHECK(eig.values[0] == doctest::Approx(1.0));
    CHECK(eig.values[1] == doctest::Approx(-1.0));
}

TEST_CASE("hermitian_eigen on a 1x1 matrix returns the entry") {
    ComplexMatrix h(1);
    h(0, 0) = Complex{2.0, 0.0};
    const auto eig = hermitian_eigen(h);
    CHECK(eig.values[0] == doctest::Approx(2.0));
    CHECK(std::abs(eig.vectors(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigen rejects non-hermitian input") {
    ComplexMatrix h(2);
    h(0, 1) = Complex{1.0, 0.0};
    h(1, 0) = Complex{0.5, 0.0};
    try {
        hermitian_eigen(h, 1e-9);
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHermitian);
    }
}

TEST_CASE("hermitian_eigen reconstructs randomized inputs up to n = 16") {
    SplitMix64 rng(202);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 16);
        const ComplexMatrix h = random_hermitian(n, rng);
        const auto eig = hermitian_eigen(h, 1e-9);

        // descending order
        for (int k = 1; k < n; ++k) CHECK(eig.values[k - 1] >= eig.values[k]);

        // H V = V diag within 10 tol
        double residual = 0.0;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                Complex acc{0.0, 0.0};
                for (int j = 0; j < n; ++j) acc += h(i, j) * eig.vectors(j, k);
                acc -= eig.values[k] * eig.vectors(i, k);
                residual = std::max(residual, std::abs(acc));
            }
        CHECK(residual < 1e-8);

        // V* V = Id within 10 tol
        double unitary = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Complex acc{0.0, 0.0};
                for (int k = 0; k < n; ++k)
                    acc += std::conj(eig.vectors(k, i)) * eig.vectors(k, j);
                if (i == j) acc -= 1.0;
                unitary = std::max(unitary, std::abs(acc));
            }
        CHECK(unitary < 1e-8);

        // reconstruction in the max norm
        double recon = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Complex acc{0.0, 0.0};
                for (int k = 0; k < n; ++k)
                    acc += eig.vectors(i, k) * eig.values[k] * std::conj(eig.vectors(j, k));
                recon = std::max(recon, std::abs(acc - h(i, j)));
            }
        CHECK(recon < 1e-8);
    }
}

TEST_CASE("inverse and determinant agree on small matrices") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        RealMatrix m(n, n);
        for (double& x : m.entries) x = rng.uniform(-2.0, 2.0);
        if (std::abs(determinant(m)) < 1e-6) continue;
        const RealMatrix inv = inverse(m);
        const RealMatrix prod = matmul(m, inv);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(std::abs(prod(i, j) - ((i == j) ? 1.0 : 0.0)) < 1e-9);
    }
    RealMatrix singular(2, 2);
    singular(0, 0) = 1.0;
    singular(1, 0) = 1.0;
    CHECK_THROWS_AS((void)inverse(singular), Error);
    CHECK(determinant(singular) == 0.0);
}

TEST_CASE("is_spd accepts gram matrices and rejects indefinite ones") {
    CHECK(is_spd(RealMatrix::identity(4)));
    CHECK(is_spd(diag({4.0, 1.0})));
    CHECK_FALSE(is_spd(diag({1.0, -1.0})));
    CHECK_FALSE(is_spd(diag({1.0, 0.0})));
    RealMatrix asym(2, 2);
    asym(0, 0) = 1.0;
    asym(1, 1) = 1.0;
    asym(0, 1) = 0.5;
    CHECK_FALSE(is_spd(asym));
}
