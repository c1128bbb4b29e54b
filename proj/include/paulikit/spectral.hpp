// Eigenvectors, spectral projections, and the projection-valued measure of
// v . sigma for unit v, plus the induced symmetric Bernoulli measure on the
// two-point spectrum {-1, +1}.
#pragma once

#include <array>
#include <string>

#include "paulikit/algebra.hpp"

namespace paulikit {

/// Projector invariants are asserted at this tolerance in constructors...
inline constexpr double kProjectorAssertTol = 1e-12;
/// ...and gated at this looser one where user data enters.
inline constexpr double kProjectorGateTol = 1e-9;

/// Column vector in C^2 with finite components.
struct CVec2 {
    Cplx u{0.0, 0.0};
    Cplx w{0.0, 0.0};

    CVec2() = default;
    CVec2(Cplx u_, Cplx w_);

    double norm2() const { return std::norm(u) + std::norm(w); }
    double norm() const;

    bool operator==(const CVec2&) const = default;
};

CVec2 operator*(const Matrix2c& m, const CVec2& psi);
/// <x, y>, conjugate-linear in the first argument.
Cplx inner(const CVec2& x, const CVec2& y);

/// Orthogonal projection on C^2: Hermitian and idempotent to 1e-12
/// (debug-asserted; use `validated` for untrusted matrices).
class Projector {
  public:
    explicit Projector(const Matrix2c& m);

    /// Gate at kProjectorGateTol, naming the violated invariant.
    static Projector validated(const Matrix2c& m);

    const Matrix2c& matrix() const { return m_; }

  private:
    Matrix2c m_;
};

/// Intersection of a Borel set with the spectrum {-1, +1}: all E and mu_B
/// can see of it.
struct SpectralSubset {
    bool contains_minus = false;
    bool contains_plus = false;

    static constexpr SpectralSubset empty() { return {false, false}; }
    static constexpr SpectralSubset minus() { return {true, false}; }
    static constexpr SpectralSubset plus() { return {false, true}; }
    static constexpr SpectralSubset full() { return {true, true}; }
    static SpectralSubset singleton(int sign);

    std::string label() const;

    bool operator==(const SpectralSubset&) const = default;
};

/// The four subsets in canonical order: {}, {-1}, {+1}, {-1,+1}.
std::array<SpectralSubset, 4> all_subsets();

/// The projection-valued measure of v . sigma, determined by its values on
/// the two singletons. e_plus + e_minus = I and e_plus * e_minus = 0,
/// both to 1e-12.
struct SpectralMeasure {
    BlochDirection direction;
    Projector e_plus;
    Projector e_minus;
};

/// Normalized eigenvector of (dir . sigma) with eigenvalue `sign` (+1 or -1).
/// Defined on all of S^2: each closed-form branch is singular at one pole
/// only, so the branch is picked by the sign of the third component.
/// The global phase is whatever the branch formula yields; compare projectors
/// or |<psi, phi>|, not raw components.
CVec2 eigenvector(const BlochDirection& dir, int sign);

/// Rank-1 projector |psi><psi|. Rejects non-normalized input (gate 1e-9).
Projector outer_projector(const CVec2& psi);

/// Closed form: E({+1}) = (I + dir.sigma)/2, E({-1}) = (I - dir.sigma)/2.
SpectralMeasure pvm(const BlochDirection& dir);

/// Same projectors through Lagrange interpolation on the spectrum: the
/// degree-<=1 interpolant of the indicator of {sign} evaluated at dir.sigma.
Projector lagrange_projector(const BlochDirection& dir, int sign);

/// E(S) over the subset lattice: 0, e_minus, e_plus, or e_plus + e_minus.
/// The full-set value is the computed sum, which keeps additivity over
/// disjoint subsets exact.
Matrix2c evaluate(const SpectralMeasure& measure, SpectralSubset s);

/// tr E(S), a real in [0, 1]. Equals bernoulli_measure(S) for every direction.
double induced_probability(const BlochDirection& dir, SpectralSubset s);

/// The symmetric Bernoulli measure: 1/2 on each of -1 and +1.
double bernoulli_measure(SpectralSubset s);

}  // namespace paulikit
