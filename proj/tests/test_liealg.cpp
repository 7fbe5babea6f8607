#include <doctest.h>

#include <cmath>

#include "kenmotsu/classify.hpp"
#include "kenmotsu/model.hpp"
#include "kenmotsu/rng.hpp"
#include "kenmotsu/verify.hpp"

using namespace kenmotsu;

namespace {

Vec basis_vec(int dim, int i) {
    Vec v(dim, 0.0);
    v[i] = 1.0;
    return v;
}

MetricLieAlgebra abelian(int dim) { return MetricLieAlgebra(dim, RealMatrix::identity(dim)); }

} // namespace

TEST_CASE("bracket of the model reproduces the defining relations") {
    const auto [a, s] = model_algebra(Lambda({2.0}));
    (void)s;
    // [e0, e1] = -e1 - 2 f1
    const Vec b01 = bracket(a, basis_vec(3, 0), basis_vec(3, 1));
    CHECK(b01[0] == 0.0);
    CHECK(b01[1] == -1.0);
    CHECK(b01[2] == -2.0);
    // h is abelian: [e1, f1] = 0
    CHECK(max_abs(bracket(a, basis_vec(3, 1), basis_vec(3, 2))) == 0.0);
}

TEST_CASE("bracket is antisymmetric and bilinear on random vectors") {
    SplitMix64 rng(11);
    const auto [a, s] = model_algebra(random_lambda(3, rng));
    (void)s;
    for (int trial = 0; trial < 20; ++trial) {
        Vec x(a.dim), y(a.dim);
        for (double& v : x) v = rng.uniform(-2.0, 2.0);
        for (double& v : y) v = rng.uniform(-2.0, 2.0);
        CHECK(max_abs(bracket(a, x, x)) == 0.0);
        const Vec bxy = bracket(a, x, y);
        const Vec byx = bracket(a, y, x);
        for (int k = 0; k < a.dim; ++k) CHECK(bxy[k] == doctest::Approx(-byx[k]).epsilon(1e-12));
    }
}

TEST_CASE("jacobi_residual vanishes on abelian and model algebras") {
    CHECK(jacobi_residual(abelian(5)) == 0.0);
    CHECK(jacobi_residual(model_algebra(Lambda({2.0})).first) == 0.0);
    CHECK(jacobi_residual(model_algebra(Lambda({3.0, -1.0})).first) == 0.0);
    SplitMix64 rng(3);
    CHECK(jacobi_residual(model_algebra(random_lambda(4, rng)).first) < 1e-12);
}

TEST_CASE("jacobi_residual detects a non-Lie structure tensor") {
    // [b0,b1] = b1, [b0,b2] = b2, [b1,b2] = b0 violates Jacobi:
    // [b0,[b1,b2]] + [b1,[b2,b0]] + [b2,[b0,b1]] = 0 - b0 - b0 = -2 b0.
    MetricLieAlgebra a = abelian(3);
    a.c(0, 1, 1) = 1.0;
    a.c(1, 0, 1) = -1.0;
    a.c(0, 2, 2) = 1.0;
    a.c(2, 0, 2) = -1.0;
    a.c(1, 2, 0) = 1.0;
    a.c(2, 1, 0) = -1.0;
    CHECK(jacobi_residual(a) == doctest::Approx(2.0));
}

TEST_CASE("is_ideal accepts the reeb complement of the model") {
    const auto [a, s] = model_algebra(Lambda({2.0, -3.0}));
    (void)s;
    Subspace h;
    h.ambient_dim = a.dim;
    for (int i = 1; i < a.dim; ++i) h.basis.push_back(basis_vec(a.dim, i));
    const Check c = is_ideal(a, h);
    CHECK(c.pass);
    CHECK(c.residual == 0.0);
}

TEST_CASE("is_ideal accepts the whole space") {
    const auto [a, s] = model_algebra(Lambda({1.0}));
    (void)s;
    Subspace whole;
    whole.ambient_dim = a.dim;
    for (int i = 0; i < a.dim; ++i) whole.basis.push_back(basis_vec(a.dim, i));
    CHECK(is_ideal(a, whole).pass);
}

TEST_CASE("is_ideal rejects a line that brackets out of itself") {
    const auto [a, s] = model_algebra(Lambda({2.0}));
    (void)s;
    Subspace line;
    line.ambient_dim = a.dim;
    line.basis.push_back(basis_vec(a.dim, 1)); // span(e1)
    const Check c = is_ideal(a, line);
    CHECK_FALSE(c.pass);
    // [e0, e1] = -e1 - 2 f1 has off-span component -2 f1
    CHECK(c.residual == doctest::Approx(2.0));
}

TEST_CASE("is_derivation accepts the zero map and anything on an abelian algebra") {
    const auto [a, s] = model_algebra(Lambda({1.5}));
    (void)s;
    CHECK(is_derivation(a, RealMatrix(3, 3)).pass);

    SplitMix64 rng(5);
    MetricLieAlgebra ab = abelian(4);
    RealMatrix m(4, 4);
    for (double& x : m.entries) x = rng.uniform(-3.0, 3.0);
    CHECK(is_derivation(ab, m).pass);
}

TEST_CASE("ad_xi restricted to the abelian complement is a derivation") {
    // On h itself the bracket vanishes, so D = [[-1,2],[-2,-1]] is trivially
    // a derivation of the restricted (abelian) algebra.
    MetricLieAlgebra h = abelian(2);
    RealMatrix d(2, 2);
    d(0, 0) = -1.0;
    d(0, 1) = 2.0;
    d(1, 0) = -2.0;
    d(1, 1) = -1.0;
    CHECK(is_derivation(h, d).pass);
}

TEST_CASE("pushforward by the identity is the identity") {
    const auto [a, s] = model_algebra(Lambda({2.0, 0.5}));
    const auto [pa, ps] = pushforward(a, s, RealMatrix::identity(a.dim));
    CHECK(structure_distance(pa, ps, a, s) == 0.0);
}

TEST_CASE("pushforward round trips through the inverse map") {
    SplitMix64 rng(17);
    const auto [a, s] = model_algebra(random_lambda(2, rng));
    const RealMatrix t = random_invertible(a.dim, rng, 1e3);
    const auto [pa, ps] = pushforward(a, s, t);
    const auto [ra, rs] = pushforward(pa, ps, inverse(t));
    CHECK(structure_distance(ra, rs, a, s) < 1e-9);
}

TEST_CASE("pushforward preserves kenmotsu residuals") {
    SplitMix64 rng(23);
    const auto [a, s] = model_algebra(random_lambda(3, rng));
    const RealMatrix t = random_invertible(a.dim, rng, 1e3);
    const auto [pa, ps] = pushforward(a, s, t);
    const Report report = verify_kenmotsu(pa, ps, 1e-8);
    CHECK(report.pass());
}

TEST_CASE("pushforward rejects singular and ill-conditioned maps") {
    const auto [a, s] = model_algebra(Lambda({1.0}));
    RealMatrix singular(3, 3);
    singular(0, 0) = 1.0;
    singular(1, 0) = 1.0;
    try {
        pushforward(a, s, singular);
        FAIL("expected SingularMap");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularMap);
    }

    RealMatrix skewed = RealMatrix::identity(3);
    skewed(0, 0) = 1e12;
    try {
        pushforward(a, s, skewed);
        FAIL("expected SingularMap for condition estimate");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularMap);
    }
}

TEST_CASE("validate_algebra rejects malformed tensors") {
    MetricLieAlgebra bad = abelian(2);
    bad.c(0, 1, 0) = 1.0; // missing antisymmetric mirror
    CHECK_THROWS_AS(validate_algebra(bad), Error);

    MetricLieAlgebra too_big(130, RealMatrix::identity(130));
    CHECK_THROWS_AS(validate_algebra(too_big), Error);
}
