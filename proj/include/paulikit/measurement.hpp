// Sequential projective spin measurements in direction alpha then beta,
// starting from the maximally mixed state. The first outcome is a fair coin
// for every direction; the second is conditioned through the Lueders update,
// which for rank-1 projectors gives p(b | a) = (1 + a b <alpha, beta>) / 2.
// Complementary directions make every conditional 1/2: the first outcome
// carries no information about the second.
#pragma once

#include <array>
#include <cstdint>

#include "paulikit/complementarity.hpp"

namespace paulikit {

/// Cell index for outcome pair (a, b), each in {-1, +1}.
std::size_t outcome_cell(int a, int b);

/// Counts of (first outcome, second outcome) pairs.
struct JointHistogram {
    std::array<std::uint64_t, 4> counts{};  // indexed by outcome_cell
    std::uint64_t shots = 0;

    std::uint64_t count(int a, int b) const { return counts[outcome_cell(a, b)]; }

    bool operator==(const JointHistogram&) const = default;
};

/// Conditional outcome table p(b | a) with first-outcome marginals p(a).
struct ConditionalTable {
    std::array<double, 4> conditional{};  // indexed by outcome_cell(a, b)
    std::array<double, 2> marginal{};     // index 0 -> a = -1, 1 -> a = +1

    double p_cond(int b, int a) const { return conditional[outcome_cell(a, b)]; }
    double p_first(int a) const { return marginal[a > 0 ? 1 : 0]; }
};

/// (P(-1), P(+1)) for the first measurement: the induced probabilities of the
/// two singletons, (1/2, 1/2) regardless of direction.
std::array<double, 2> first_outcome_distribution(const BlochDirection& alpha);

/// P(second outcome b | first outcome a) via the trace formula
/// tr(E_alpha({a}) E_beta({b})) / tr(E_alpha({a})), clamped into [0, 1].
double conditional_probability(const BlochDirection& alpha, int a, const BlochDirection& beta,
                               int b);

/// Table of conditional_probability values with the first-outcome marginals.
ConditionalTable exact_conditionals(const BlochDirection& alpha, const BlochDirection& beta);

/// Monte Carlo run: per shot, draw a from the first-outcome distribution and
/// b from the conditional row for a. Deterministic for fixed (seed,
/// partitions); partitions > 1 splits the shots across concurrent workers
/// with substreams derived from (seed, partition index), and the merged
/// counts do not depend on scheduling. partitions = 1 is the reference.
JointHistogram simulate(const BlochDirection& alpha, const BlochDirection& beta,
                        std::uint64_t shots, std::uint64_t seed, unsigned partitions = 1);

/// Empirical p(b | a) = n(a, b) / n(a). Rejects histograms where either
/// first-outcome marginal is empty.
ConditionalTable empirical_conditionals(const JointHistogram& h);

}  // namespace paulikit
