#include "paulikit/measurement.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace paulikit {

namespace {

void require_outcome(int v) {
    if (v != 1 && v != -1) {
        throw std::invalid_argument("measurement outcome must be +1 or -1");
    }
}

JointHistogram run_partition(const BlochDirection& alpha, const BlochDirection& beta,
                             std::uint64_t shots, Rng rng) {
    const double p_first_plus = induced_probability(alpha, SpectralSubset::plus());
    const double p_plus_given_plus = conditional_probability(alpha, +1, beta, +1);
    const double p_plus_given_minus = conditional_probability(alpha, -1, beta, +1);
    JointHistogram h;
    h.shots = shots;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const int a = rng.uniform() < p_first_plus ? +1 : -1;
        const double p_b_plus = a > 0 ? p_plus_given_plus : p_plus_given_minus;
        const int b = rng.uniform() < p_b_plus ? +1 : -1;
        ++h.counts[outcome_cell(a, b)];
    }
    return h;
}

}  // namespace

std::size_t outcome_cell(int a, int b) {
    require_outcome(a);
    require_outcome(b);
    return static_cast<std::size_t>(a > 0) * 2 + static_cast<std::size_t>(b > 0);
}

std::array<double, 2> first_outcome_distribution(const BlochDirection& alpha) {
    return {induced_probability(alpha, SpectralSubset::minus()),
            induced_probability(alpha, SpectralSubset::plus())};
}

double conditional_probability(const BlochDirection& alpha, int a, const BlochDirection& beta,
                               int b) {
    const double joint = pair_trace(alpha, beta, SpectralSubset::singleton(a),
                                    SpectralSubset::singleton(b));
    const double marginal = induced_probability(alpha, SpectralSubset::singleton(a));
    return std::clamp(joint / marginal, 0.0, 1.0);
}

ConditionalTable exact_conditionals(const BlochDirection& alpha, const BlochDirection& beta) {
    ConditionalTable t;
    for (const int a : {-1, +1}) {
        t.marginal[a > 0 ? 1 : 0] = induced_probability(alpha, SpectralSubset::singleton(a));
        for (const int b : {-1, +1}) {
            t.conditional[outcome_cell(a, b)] = conditional_probability(alpha, a, beta, b);
        }
    }
    return t;
}

JointHistogram simulate(const BlochDirection& alpha, const BlochDirection& beta,
                        std::uint64_t shots, std::uint64_t seed, unsigned partitions) {
    if (shots < 1) {
        throw std::invalid_argument("simulate: shots must be >= 1");
    }
    if (partitions < 1) {
        throw std::invalid_argument("simulate: partitions must be >= 1");
    }
    partitions = static_cast<unsigned>(std::min<std::uint64_t>(partitions, shots));

    std::vector<std::future<JointHistogram>> futures;
    futures.reserve(partitions);
    for (unsigned p = 0; p < partitions; ++p) {
        const std::uint64_t share = shots / partitions + (p < shots % partitions ? 1 : 0);
        futures.push_back(std::async(std::launch::async, run_partition, alpha, beta, share,
                                     Rng::substream(seed, p)));
    }
    JointHistogram merged;
    for (auto& f : futures) {
        const JointHistogram part = f.get();
        merged.shots += part.shots;
        for (std::size_t i = 0; i < merged.counts.size(); ++i) {
            merged.counts[i] += part.counts[i];
        }
    }
    return merged;
}

ConditionalTable empirical_conditionals(const JointHistogram& h) {
    ConditionalTable t;
    for (const int a : {-1, +1}) {
        const std::uint64_t n_a = h.count(a, -1) + h.count(a, +1);
        if (n_a == 0) {
            throw std::invalid_argument("empirical_conditionals: no shots with first outcome " +
                                        std::string(a > 0 ? "+1" : "-1") +
                                        "; rerun with more shots");
        }
        t.marginal[a > 0 ? 1 : 0] = static_cast<double>(n_a) / static_cast<double>(h.shots);
        for (const int b : {-1, +1}) {
            t.conditional[outcome_cell(a, b)] =
                static_cast<double>(h.count(a, b)) / static_cast<double>(n_a);
        }
    }
    return t;
}

}  // namespace paulikit
