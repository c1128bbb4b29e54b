#include "paulikit/spectral.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace paulikit {

namespace {

void require_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("eigenvalue sign must be +1 or -1");
    }
}

/// p(A) for the degree-<=1 interpolant with p(+1) = f_plus, p(-1) = f_minus.
Matrix2c spectral_poly(const Matrix2c& a_sigma, double f_plus, double f_minus) {
    const double c1 = 0.5 * (f_plus - f_minus);
    const double c0 = 0.5 * (f_plus + f_minus);
    return c1 * a_sigma + c0 * Matrix2c::identity();
}

}  // namespace

CVec2::CVec2(Cplx u_, Cplx w_) : u(u_), w(w_) {
    if (!std::isfinite(u.real()) || !std::isfinite(u.imag()) || !std::isfinite(w.real()) ||
        !std::isfinite(w.imag())) {
        throw std::invalid_argument("CVec2: components must be finite");
    }
}

double CVec2::norm() const { return std::sqrt(norm2()); }

CVec2 operator*(const Matrix2c& m, const CVec2& psi) {
    return {m.a * psi.u + m.b * psi.w, m.c * psi.u + m.d * psi.w};
}

Cplx inner(const CVec2& x, const CVec2& y) {
    return std::conj(x.u) * y.u + std::conj(x.w) * y.w;
}

Projector::Projector(const Matrix2c& m) : m_(m) {
    assert(max_abs_diff(m_, m_.adjoint()) <= kProjectorAssertTol);
    assert(max_abs_diff(m_ * m_, m_) <= kProjectorAssertTol);
}

Projector Projector::validated(const Matrix2c& m) {
    const double herm = max_abs_diff(m, m.adjoint());
    if (herm > kProjectorGateTol) {
        throw std::invalid_argument("Projector: matrix is not Hermitian (max |P - P*| = " +
                                    std::to_string(herm) + ")");
    }
    const double idem = max_abs_diff(m * m, m);
    if (idem > kProjectorGateTol) {
        throw std::invalid_argument("Projector: matrix is not idempotent (max |P^2 - P| = " +
                                    std::to_string(idem) + ")");
    }
    return Projector(m);
}

SpectralSubset SpectralSubset::singleton(int sign) {
    require_sign(sign);
    return sign > 0 ? plus() : minus();
}

std::string SpectralSubset::label() const {
    if (contains_minus && contains_plus) return "{-1,+1}";
    if (contains_minus) return "{-1}";
    if (contains_plus) return "{+1}";
    return "{}";
}

std::array<SpectralSubset, 4> all_subsets() {
    return {SpectralSubset::empty(), SpectralSubset::minus(), SpectralSubset::plus(),
            SpectralSubset::full()};
}

CVec2 eigenvector(const BlochDirection& dir, int sign) {
    require_sign(sign);
    const double x1 = dir.x1();
    const double x2 = dir.x2();
    const double x3 = dir.x3();
    if (sign == 1) {
        if (x3 >= 0.0) {
            const double s = 1.0 / std::sqrt(2.0 * (1.0 + x3));
            return {Cplx{s * (1.0 + x3), 0.0}, s * Cplx{x1, x2}};
        }
        const double s = 1.0 / std::sqrt(2.0 * (1.0 - x3));
        return {s * Cplx{x1, -x2}, Cplx{s * (1.0 - x3), 0.0}};
    }
    if (x3 <= 0.0) {
        const double s = 1.0 / std::sqrt(2.0 * (1.0 - x3));
        return {Cplx{s * (-1.0 + x3), 0.0}, s * Cplx{x1, x2}};
    }
    const double s = 1.0 / std::sqrt(2.0 * (1.0 + x3));
    return {s * Cplx{x1, -x2}, Cplx{-s * (1.0 + x3), 0.0}};
}

Projector outer_projector(const CVec2& psi) {
    const double gap = std::abs(psi.norm() - 1.0);
    if (gap > kProjectorGateTol) {
        throw std::invalid_argument("outer_projector: |  ||psi|| - 1 | = " + std::to_string(gap) +
                                    " exceeds the normalization tolerance");
    }
    return Projector({std::norm(psi.u), psi.u * std::conj(psi.w),
                      psi.w * std::conj(psi.u), std::norm(psi.w)});
}

SpectralMeasure pvm(const BlochDirection& dir) {
    const Matrix2c a_sigma = sigma_map(dir);
    const Matrix2c id = Matrix2c::identity();
    SpectralMeasure m{dir, Projector(0.5 * (id + a_sigma)), Projector(0.5 * (id - a_sigma))};
    assert(max_abs_diff(m.e_plus.matrix() + m.e_minus.matrix(), id) <= kProjectorAssertTol);
    assert(max_abs(m.e_plus.matrix() * m.e_minus.matrix()) <= kProjectorAssertTol);
    return m;
}

Projector lagrange_projector(const BlochDirection& dir, int sign) {
    require_sign(sign);
    const double f_plus = sign == 1 ? 1.0 : 0.0;
    return Projector(spectral_poly(sigma_map(dir), f_plus, 1.0 - f_plus));
}

Matrix2c evaluate(const SpectralMeasure& measure, SpectralSubset s) {
    if (s.contains_minus && s.contains_plus) {
        return measure.e_plus.matrix() + measure.e_minus.matrix();
    }
    if (s.contains_minus) return measure.e_minus.matrix();
    if (s.contains_plus) return measure.e_plus.matrix();
    return Matrix2c::zero();
}

double induced_probability(const BlochDirection& dir, SpectralSubset s) {
    const Cplx t = normalized_trace(evaluate(pvm(dir), s));
    assert(std::abs(t.imag()) <= kProjectorAssertTol);
    return t.real();
}

double bernoulli_measure(SpectralSubset s) {
    return (s.contains_minus ? 0.5 : 0.0) + (s.contains_plus ? 0.5 : 0.0);
}

}  // namespace paulikit
