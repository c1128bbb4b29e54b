#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "paulikit/complementarity.hpp"
#include "paulikit/rng.hpp"
#include "paulikit/spectral.hpp"

using namespace paulikit;

namespace {

// Poles and near-poles sit on the closed-form branch cuts of eigenvector().
std::vector<BlochDirection> edge_directions() {
    const double eps = 1e-9;
    const double s = std::sqrt(1.0 - (1.0 - eps) * (1.0 - eps));
    return {
        BlochDirection::from_unit(0.0, 0.0, 1.0),
        BlochDirection::from_unit(0.0, 0.0, -1.0),
        BlochDirection::from_unit(s, 0.0, 1.0 - eps),
        BlochDirection::from_unit(0.0, s, -(1.0 - eps)),
        BlochDirection::from_unit(1.0, 0.0, 0.0),
        BlochDirection::from_unit(0.0, 1.0, 0.0),
    };
}

double residual_norm(const Matrix2c& m, const CVec2& psi, double lambda) {
    const CVec2 image = m * psi;
    const CVec2 diff{image.u - lambda * psi.u, image.w - lambda * psi.w};
    return diff.norm();
}

}  // namespace

TEST_CASE("subset lattice basics") {
    const auto subsets = all_subsets();
    CHECK(subsets[0] == SpectralSubset::empty());
    CHECK(subsets[1] == SpectralSubset::minus());
    CHECK(subsets[2] == SpectralSubset::plus());
    CHECK(subsets[3] == SpectralSubset::full());
    CHECK(SpectralSubset::singleton(-1) == SpectralSubset::minus());
    CHECK(SpectralSubset::singleton(+1) == SpectralSubset::plus());
    CHECK_THROWS_AS(SpectralSubset::singleton(0), std::invalid_argument);
    CHECK(SpectralSubset::empty().label() == "{}");
    CHECK(SpectralSubset::minus().label() == "{-1}");
    CHECK(SpectralSubset::plus().label() == "{+1}");
    CHECK(SpectralSubset::full().label() == "{-1,+1}");
}

TEST_CASE("cvec2 inner product is conjugate-linear in the first slot") {
    const CVec2 x{{0.0, 1.0}, {0.0, 0.0}};
    const CVec2 y{{1.0, 0.0}, {0.0, 0.0}};
    CHECK(inner(x, x) == Cplx{1.0, 0.0});
    CHECK(inner(y, x) == Cplx{0.0, 1.0});
    CHECK(inner(x, y) == Cplx{0.0, -1.0});
    CHECK_THROWS_AS(CVec2({std::nan(""), 0.0}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("eigenvector frozen values at axis directions") {
    const BlochDirection e1 = BlochDirection::from_unit(1.0, 0.0, 0.0);
    const BlochDirection e3 = BlochDirection::from_unit(0.0, 0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);

    const CVec2 p3 = eigenvector(e3, +1);
    CHECK(p3.u == Cplx{1.0, 0.0});
    CHECK(p3.w == Cplx{0.0, 0.0});
    const CVec2 m3 = eigenvector(e3, -1);
    CHECK(std::abs(m3.u) == 0.0);
    CHECK(std::abs(std::abs(m3.w) - 1.0) == 0.0);

    const CVec2 p1 = eigenvector(e1, +1);
    CHECK(p1.u == Cplx{r, 0.0});
    CHECK(p1.w == Cplx{r, 0.0});
    const CVec2 m1 = eigenvector(e1, -1);
    // Phase is branch-dependent; the projector is what is pinned down.
    CHECK(std::abs(inner(p1, m1)) <= 1e-15);

    CHECK_THROWS_AS((void)eigenvector(e1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)eigenvector(e1, 2), std::invalid_argument);
}

TEST_CASE("eigenvector solves the eigenproblem everywhere on the sphere") {
    std::vector<BlochDirection> dirs = edge_directions();
    Rng rng(201);
    for (int t = 0; t < 2000; ++t) dirs.push_back(random_direction(rng));

    for (const BlochDirection& d : dirs) {
        const Matrix2c m = sigma_map(d);
        for (const int sign : {-1, +1}) {
            const CVec2 psi = eigenvector(d, sign);
            CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);
            CHECK(residual_norm(m, psi, sign) <= 1e-12);
        }
        CHECK(std::abs(inner(eigenvector(d, +1), eigenvector(d, -1))) <= 1e-12);
    }
}

TEST_CASE("the three projector routes agree") {
    std::vector<BlochDirection> dirs = edge_directions();
    Rng rng(202);
    for (int t = 0; t < 2000; ++t) dirs.push_back(random_direction(rng));

    for (const BlochDirection& d : dirs) {
        const SpectralMeasure m = pvm(d);
        for (const int sign : {-1, +1}) {
            const Matrix2c closed =
                sign == +1 ? m.e_plus.matrix() : m.e_minus.matrix();
            // Interpolation reassociates 0.5*(I +- A) as 0.5*A +- 0.5*I; both
            // scalings are exact, so the routes collide bit for bit.
            CHECK(max_abs_diff(lagrange_projector(d, sign).matrix(), closed) == 0.0);
            const Matrix2c outer = outer_projector(eigenvector(d, sign)).matrix();
            CHECK(max_abs_diff(outer, closed) <= 1e-12);
        }
    }
}

TEST_CASE("pvm projector invariants") {
    std::vector<BlochDirection> dirs = edge_directions();
    Rng rng(203);
    for (int t = 0; t < 2000; ++t) dirs.push_back(random_direction(rng));

    for (const BlochDirection& d : dirs) {
        const SpectralMeasure m = pvm(d);
        const Matrix2c& ep = m.e_plus.matrix();
        const Matrix2c& em = m.e_minus.matrix();
        CHECK(max_abs_diff(ep, ep.adjoint()) == 0.0);
        CHECK(max_abs_diff(em, em.adjoint()) == 0.0);
        CHECK(max_abs_diff(ep * ep, ep) <= 1e-15);
        CHECK(max_abs_diff(em * em, em) <= 1e-15);
        CHECK(max_abs_diff(ep + em, Matrix2c::identity()) <= 1e-15);
        CHECK(max_abs(ep * em) <= 1e-15);
        CHECK(std::abs(normalized_trace(ep).real() - 0.5) <= 1e-15);
        CHECK(std::abs(normalized_trace(em).real() - 0.5) <= 1e-15);
    }
}

TEST_CASE("projector validation gates") {
    const BlochDirection e1 = BlochDirection::from_unit(1.0, 0.0, 0.0);
    const Matrix2c good = pvm(e1).e_plus.matrix();
    CHECK_NOTHROW((void)Projector::validated(good));
    CHECK_THROWS_WITH_AS((void)Projector::validated(0.9 * good), doctest::Contains("idempotent"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)Projector::validated(Matrix2c{{0.5, 0.0}, {0.5, 0.1}, {0.5, 0.0}, {0.5, 0.0}}),
        doctest::Contains("Hermitian"), std::invalid_argument);

    CHECK_THROWS_WITH_AS((void)outer_projector(CVec2{{1.0, 0.0}, {1.0, 0.0}}),
                         doctest::Contains("normaliz"), std::invalid_argument);
}

TEST_CASE("evaluate is exactly additive over the subset lattice") {
    Rng rng(204);
    for (int t = 0; t < 500; ++t) {
        const SpectralMeasure m = pvm(random_direction(rng));
        const Matrix2c whole = evaluate(m, SpectralSubset::full());
        const Matrix2c parts =
            evaluate(m, SpectralSubset::minus()) + evaluate(m, SpectralSubset::plus());
        CHECK(max_abs_diff(whole, parts) == 0.0);
        CHECK(evaluate(m, SpectralSubset::empty()) == Matrix2c::zero());
        CHECK(evaluate(m, SpectralSubset::minus()) == m.e_minus.matrix());
        CHECK(evaluate(m, SpectralSubset::plus()) == m.e_plus.matrix());
    }
}

TEST_CASE("induced probabilities reproduce the symmetric bernoulli measure") {
    CHECK(bernoulli_measure(SpectralSubset::empty()) == 0.0);
    CHECK(bernoulli_measure(SpectralSubset::minus()) == 0.5);
    CHECK(bernoulli_measure(SpectralSubset::plus()) == 0.5);
    CHECK(bernoulli_measure(SpectralSubset::full()) == 1.0);

    Rng rng(205);
    for (int t = 0; t < 2000; ++t) {
        const BlochDirection d = random_direction(rng);
        double total = 0.0;
        for (const SpectralSubset s : all_subsets()) {
            const double p = induced_probability(d, s);
            CHECK(std::abs(p - bernoulli_measure(s)) <= 1e-14);
            if (s == SpectralSubset::minus() || s == SpectralSubset::plus()) total += p;
        }
        // Law of total probability across the two singletons.
        CHECK(std::abs(induced_probability(d, SpectralSubset::full()) - total) <= 1e-14);
    }
}
