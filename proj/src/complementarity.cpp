#include "paulikit/complementarity.hpp"

#include <Eigen/Dense>

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace paulikit {

namespace {

void require_tol(double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
}

double trace_of_product(const SpectralMeasure& ma, const SpectralMeasure& mb, SpectralSubset s1,
                        SpectralSubset s2) {
    const Cplx t = normalized_trace(evaluate(ma, s1) * evaluate(mb, s2));
    assert(std::abs(t.imag()) <= 1e-12);
    return t.real();
}

ComplementarityReport report_from_measures(const SpectralMeasure& ma, const SpectralMeasure& mb,
                                           double tol) {
    ComplementarityReport r{ma.direction, mb.direction, {}, ma.direction.dot(mb.direction), tol,
                            0.0, false};
    std::size_t k = 0;
    for (const SpectralSubset s1 : all_subsets()) {
        for (const SpectralSubset s2 : all_subsets()) {
            const double trace = trace_of_product(ma, mb, s1, s2);
            const double target = bernoulli_measure(s1) * bernoulli_measure(s2);
            const double dev = std::abs(trace - target);
            r.entries[k++] = {s1, s2, trace, target, dev};
            r.max_deviation = std::max(r.max_deviation, dev);
        }
    }
    r.verdict = r.max_deviation <= tol;
    return r;
}

/// Smallest eigenvalue of the 4x4 Gram matrix of four directions.
double gram_lambda_min(const std::array<BlochDirection, 4>& dirs) {
    Eigen::Matrix4d g;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            g(i, j) = dirs[static_cast<std::size_t>(i)].dot(dirs[static_cast<std::size_t>(j)]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(g, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

}  // namespace

double pair_trace(const BlochDirection& alpha, const BlochDirection& beta, SpectralSubset s1,
                  SpectralSubset s2) {
    return trace_of_product(pvm(alpha), pvm(beta), s1, s2);
}

ComplementarityReport check_pair_exhaustive(const BlochDirection& alpha,
                                            const BlochDirection& beta, double tol) {
    require_tol(tol);
    return report_from_measures(pvm(alpha), pvm(beta), tol);
}

bool check_pair_fast(const BlochDirection& alpha, const BlochDirection& beta, double tol) {
    require_tol(tol);
    return std::abs(alpha.dot(beta)) <= 4.0 * tol;
}

SetReport check_set(std::span<const BlochDirection> dirs, double tol) {
    require_tol(tol);
    if (dirs.size() < 2) {
        throw std::invalid_argument("check_set: need at least 2 directions, got " +
                                    std::to_string(dirs.size()));
    }
    SetReport report;
    report.directions.assign(dirs.begin(), dirs.end());
    report.tol = tol;
    report.verdict = true;
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            report.pairs.push_back({i, j, check_pair_exhaustive(dirs[i], dirs[j], tol)});
            if (!report.pairs.back().report.verdict) {
                report.verdict = false;
                if (!report.first_failure) {
                    report.first_failure = report.pairs.size() - 1;
                }
            }
        }
    }
    return report;
}

BlochDirection random_direction(Rng& rng) {
    for (;;) {
        const Vec3 v{rng.normal(), rng.normal(), rng.normal()};
        if (v.norm() >= 1e-6) {
            return BlochDirection::normalized(v);
        }
    }
}

std::array<BlochDirection, 3> orthonormal_triple(std::optional<BlochDirection> first,
                                                 std::uint64_t seed) {
    Rng rng(seed);
    const BlochDirection v1 = first ? *first : random_direction(rng);
    // Gram-Schmidt a random draw against v1; redraw while the residual is
    // too small to normalize reliably.
    Vec3 residual;
    for (;;) {
        const Vec3 r{rng.normal(), rng.normal(), rng.normal()};
        residual = r - r.dot(v1.vec()) * v1.vec();
        if (residual.norm() >= 1e-6) break;
    }
    const BlochDirection v2 = BlochDirection::normalized(residual);
    const BlochDirection v3 = BlochDirection::normalized(v1.vec().cross(v2.vec()));
    return {v1, v2, v3};
}

FourSetEvidence no_four_set_evidence(int trials, std::uint64_t seed, double tol) {
    require_tol(tol);
    if (trials < 1) {
        throw std::invalid_argument("no_four_set_evidence: trials must be >= 1");
    }
    Rng rng(seed);
    FourSetEvidence ev;
    ev.trials = trials;
    ev.min_gram_lambda = std::numeric_limits<double>::infinity();
    ev.max_gram_lambda = -std::numeric_limits<double>::infinity();
    ev.min_worst_deviation = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const std::array<BlochDirection, 4> dirs{random_direction(rng), random_direction(rng),
                                                 random_direction(rng), random_direction(rng)};
        const SetReport report = check_set(dirs, tol);
        if (report.verdict) {
            ++ev.complementary_found;
        }
        double worst = 0.0;
        for (const SetPairEntry& p : report.pairs) {
            worst = std::max(worst, p.report.max_deviation);
        }
        ev.min_worst_deviation = std::min(ev.min_worst_deviation, worst);

        const double lambda = gram_lambda_min(dirs);
        ev.min_gram_lambda = std::min(ev.min_gram_lambda, lambda);
        ev.max_gram_lambda = std::max(ev.max_gram_lambda, lambda);
    }
    ev.gram_certificate_ok = ev.max_gram_lambda <= 3.0 * tol;
    return ev;
}

std::vector<SweepRow> sweep_rows(int steps, double tol) {
    require_tol(tol);
    if (steps < 1) {
        throw std::invalid_argument("sweep: steps must be >= 1");
    }
    const BlochDirection alpha = BlochDirection::from_unit(1.0, 0.0, 0.0);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        const double theta = std::numbers::pi * k / steps;
        const BlochDirection beta = BlochDirection::from_unit(std::cos(theta), std::sin(theta), 0.0);
        const ComplementarityReport r = check_pair_exhaustive(alpha, beta, tol);
        rows.push_back({theta, r.inner_product, r.max_deviation});
    }
    return rows;
}

}  // namespace paulikit
