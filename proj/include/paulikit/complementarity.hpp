// Complementarity of pairs and sets of unit directions: the exhaustive
// subset-pair trace check, its orthogonality shortcut, complementary-triple
// construction, and sampled evidence that no 4-set can pass.
//
// A pair of unit directions is complementary when tr(E_a(S1) E_b(S2)) splits
// as mu(S1) mu(S2) for every pair of Borel sets, which reduces to the sixteen
// subset pairs of the two-point spectrum and holds exactly when the
// directions are orthogonal.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paulikit/rng.hpp"
#include "paulikit/spectral.hpp"

namespace paulikit {

/// Default deviation tolerance: far above 2x2 round-off, far below any
/// physically distinct angle.
inline constexpr double kDefaultTol = 1e-9;

/// One subset pair: the computed trace, its product target, and |difference|.
struct SubsetPairTrace {
    SpectralSubset s1;
    SpectralSubset s2;
    double trace_value = 0.0;
    double target = 0.0;
    double deviation = 0.0;
};

/// All sixteen subset pairs for one direction pair.
struct ComplementarityReport {
    BlochDirection alpha;
    BlochDirection beta;
    std::array<SubsetPairTrace, 16> entries;
    double inner_product = 0.0;
    double tol = kDefaultTol;
    double max_deviation = 0.0;
    bool verdict = false;
};

struct SetPairEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    ComplementarityReport report;
};

/// Pairwise reports over all C(n,2) unordered pairs; the set passes iff
/// every pair does.
struct SetReport {
    std::vector<BlochDirection> directions;
    std::vector<SetPairEntry> pairs;
    double tol = kDefaultTol;
    bool verdict = false;
    std::optional<std::size_t> first_failure;  // index into `pairs`, lexicographic (i, j)
};

/// Outcome of sampling 4-element direction sets plus the Gram-rank
/// certificate. Four unit vectors in R^3 are dependent, so the smallest
/// eigenvalue of their 4x4 Gram matrix is 0; a complementary 4-set would
/// need that Gram matrix within tolerance of I. The sampling side counts
/// complementary sets found (none exist); the certificate side records the
/// smallest Gram eigenvalues observed.
struct FourSetEvidence {
    int trials = 0;
    int complementary_found = 0;
    double min_gram_lambda = 0.0;    // minimum observed smallest Gram eigenvalue
    double max_gram_lambda = 0.0;    // largest observed; certificate needs <= 3 tol
    double min_worst_deviation = 0.0;  // closest any sampled set came to passing
    bool gram_certificate_ok = false;
};

/// tr(E_alpha(S1) E_beta(S2)). The product trace is real for Hermitian
/// factors; the imaginary part is asserted away.
double pair_trace(const BlochDirection& alpha, const BlochDirection& beta, SpectralSubset s1,
                  SpectralSubset s2);

/// Evaluates all 16 subset pairs against mu(S1) mu(S2). Rejects tol <= 0.
ComplementarityReport check_pair_exhaustive(const BlochDirection& alpha,
                                            const BlochDirection& beta, double tol = kDefaultTol);

/// Orthogonality shortcut: |<alpha, beta>| <= 4 tol. The factor 4 makes this
/// agree with the exhaustive verdict, whose singleton deviations are exactly
/// |<alpha, beta>| / 4.
bool check_pair_fast(const BlochDirection& alpha, const BlochDirection& beta,
                     double tol = kDefaultTol);

/// Exhaustive check over every unordered pair. Rejects fewer than 2 directions.
SetReport check_set(std::span<const BlochDirection> dirs, double tol = kDefaultTol);

/// Uniform direction on S^2: three standard normals, normalized (norms below
/// 1e-6 are redrawn).
BlochDirection random_direction(Rng& rng);

/// Pairwise-orthogonal unit triple: the given (or seeded random) first
/// direction, a Gram-Schmidt-completed second from a seeded random draw, and
/// their cross product. Deterministic for fixed inputs.
std::array<BlochDirection, 3> orthonormal_triple(std::optional<BlochDirection> first,
                                                 std::uint64_t seed);

/// Samples `trials` random 4-sets and runs both the exhaustive check and the
/// Gram certificate on each.
FourSetEvidence no_four_set_evidence(int trials, std::uint64_t seed, double tol = kDefaultTol);

/// One row of the angle sweep alpha = e1, beta = (cos theta, sin theta, 0).
struct SweepRow {
    double theta = 0.0;
    double inner_product = 0.0;
    double max_deviation = 0.0;
};

/// steps+1 rows over theta in [0, pi]. The deviation identity makes
/// max_deviation equal |cos theta| / 4. Rejects steps < 1.
std::vector<SweepRow> sweep_rows(int steps, double tol = kDefaultTol);

}  // namespace paulikit
