#include "paulikit/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace paulikit {

namespace {

bool finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

Matrix2c::Matrix2c(Cplx a_, Cplx b_, Cplx c_, Cplx d_) : a(a_), b(b_), c(c_), d(d_) {
    if (!finite(a) || !finite(b) || !finite(c) || !finite(d)) {
        throw std::invalid_argument("Matrix2c: entries must be finite");
    }
}

Matrix2c operator+(const Matrix2c& x, const Matrix2c& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Matrix2c operator-(const Matrix2c& x, const Matrix2c& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

Matrix2c operator*(const Matrix2c& x, const Matrix2c& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2c operator*(Cplx s, const Matrix2c& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

Matrix2c operator*(double s, const Matrix2c& x) { return Cplx{s, 0.0} * x; }

double max_abs(const Matrix2c& m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

double max_abs_diff(const Matrix2c& x, const Matrix2c& y) { return max_abs(x - y); }

bool is_su2(const Matrix2c& m, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("is_su2: tolerance must be positive");
    }
    return max_abs_diff(m, m.adjoint()) <= tol && std::abs(normalized_trace(m)) <= tol;
}

Vec3::Vec3(double x1_, double x2_, double x3_) : x1(x1_), x2(x2_), x3(x3_) {
    if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3)) {
        throw std::invalid_argument("Vec3: components must be finite");
    }
}

double Vec3::norm() const { return std::hypot(x1, x2, x3); }

Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x1 + v.x1, u.x2 + v.x2, u.x3 + v.x3}; }
Vec3 operator-(const Vec3& u, const Vec3& v) { return {u.x1 - v.x1, u.x2 - v.x2, u.x3 - v.x3}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v.x1, s * v.x2, s * v.x3}; }
Vec3 operator-(const Vec3& v) { return {-v.x1, -v.x2, -v.x3}; }

BlochDirection BlochDirection::from_unit(const Vec3& v) {
    const double gap = std::abs(v.norm2() - 1.0);
    if (gap > kUnitTol) {
        throw std::invalid_argument("BlochDirection: |  ||v||^2 - 1 | = " + fmt(gap) +
                                    " exceeds the unit tolerance " + fmt(kUnitTol));
    }
    return BlochDirection(v);
}

BlochDirection BlochDirection::from_unit(double x1, double x2, double x3) {
    return from_unit(Vec3{x1, x2, x3});
}

BlochDirection BlochDirection::normalized(const Vec3& v) {
    const double n = v.norm();
    if (n == 0.0) {
        throw std::invalid_argument("BlochDirection: the zero vector has no direction");
    }
    return from_unit(Vec3{v.x1 / n, v.x2 / n, v.x3 / n});
}

Matrix2c pauli(int k) {
    switch (k) {
        case 1: return {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
        case 2: return {{0, 0}, {0, -1}, {0, 1}, {0, 0}};
        case 3: return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}};
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

Matrix2c sigma_map(const Vec3& v) {
    return {{v.x3, 0.0}, {v.x1, -v.x2}, {v.x1, v.x2}, {-v.x3, 0.0}};
}

Vec3 inverse_sigma_map(const Matrix2c& m) {
    const double herm = max_abs_diff(m, m.adjoint());
    if (herm > kSu2Tol) {
        throw std::invalid_argument("inverse_sigma_map: input is not Hermitian (max |A - A*| = " +
                                    fmt(herm) + ")");
    }
    const double tr = std::abs(normalized_trace(m));
    if (tr > kSu2Tol) {
        throw std::invalid_argument("inverse_sigma_map: input is not traceless (|tr A| = " +
                                    fmt(tr) + ")");
    }
    // Components against the orthonormal basis: v_k = Re tr(sigma_k A).
    // Exact for matrices in the image of sigma_map, so the round trip is bit-exact.
    return {normalized_trace(pauli(1) * m).real(),
            normalized_trace(pauli(2) * m).real(),
            normalized_trace(pauli(3) * m).real()};
}

}  // namespace paulikit
