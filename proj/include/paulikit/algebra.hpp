// Exact 2x2 complex matrix algebra over the Pauli basis: the normalized
// trace, the Hilbert-Schmidt inner product, and the unitary isomorphism
// between R^3 and the traceless Hermitian matrices.
#pragma once

#include <complex>

namespace paulikit {

using Cplx = std::complex<double>;

/// Gate for unit-norm membership of a BlochDirection, |  ||v||^2 - 1 | <= kUnitTol.
inline constexpr double kUnitTol = 1e-9;
/// Gate for Hermitian/traceless checks at API boundaries.
inline constexpr double kSu2Tol = 1e-9;

/// Dense 2x2 complex matrix, row-major [[a, b], [c, d]].
/// Public constructors reject non-finite entries.
struct Matrix2c {
    Cplx a{0.0, 0.0};
    Cplx b{0.0, 0.0};
    Cplx c{0.0, 0.0};
    Cplx d{0.0, 0.0};

    Matrix2c() = default;
    Matrix2c(Cplx a_, Cplx b_, Cplx c_, Cplx d_);

    static Matrix2c zero() { return {}; }
    static Matrix2c identity() { return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}; }

    Matrix2c adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

    bool operator==(const Matrix2c&) const = default;
};

Matrix2c operator+(const Matrix2c& x, const Matrix2c& y);
Matrix2c operator-(const Matrix2c& x, const Matrix2c& y);
Matrix2c operator*(const Matrix2c& x, const Matrix2c& y);
Matrix2c operator*(Cplx s, const Matrix2c& x);
Matrix2c operator*(double s, const Matrix2c& x);

/// tr A = (a + d) / 2.
inline Cplx normalized_trace(const Matrix2c& m) { return 0.5 * (m.a + m.d); }

/// <A, B> = tr(A* B) under the normalized trace.
inline Cplx hs_inner(const Matrix2c& x, const Matrix2c& y) {
    return normalized_trace(x.adjoint() * y);
}

/// Max-absolute-entry norm, the canonical comparison norm for 2x2 matrices here.
double max_abs(const Matrix2c& m);
double max_abs_diff(const Matrix2c& x, const Matrix2c& y);

/// True iff A is Hermitian and traceless, both within tol. Rejects tol <= 0.
bool is_su2(const Matrix2c& m, double tol);

/// Point of R^3 with finite components.
struct Vec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    Vec3() = default;
    Vec3(double x1_, double x2_, double x3_);

    double dot(const Vec3& o) const { return x1 * o.x1 + x2 * o.x2 + x3 * o.x3; }
    double norm2() const { return dot(*this); }
    double norm() const;
    Vec3 cross(const Vec3& o) const {
        return {x2 * o.x3 - x3 * o.x2, x3 * o.x1 - x1 * o.x3, x1 * o.x2 - x2 * o.x1};
    }

    bool operator==(const Vec3&) const = default;
};

Vec3 operator+(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u, const Vec3& v);
Vec3 operator*(double s, const Vec3& v);
Vec3 operator-(const Vec3& v);

/// Unit vector on S^2. `from_unit` is strict (rejects |  ||v||^2 - 1 | > kUnitTol);
/// `normalized` divides by the norm and rejects only the zero vector.
class BlochDirection {
  public:
    static BlochDirection from_unit(const Vec3& v);
    static BlochDirection from_unit(double x1, double x2, double x3);
    static BlochDirection normalized(const Vec3& v);

    const Vec3& vec() const { return v_; }
    double x1() const { return v_.x1; }
    double x2() const { return v_.x2; }
    double x3() const { return v_.x3; }
    double dot(const BlochDirection& o) const { return v_.dot(o.v_); }

    BlochDirection operator-() const { return BlochDirection(-v_); }
    bool operator==(const BlochDirection&) const = default;

  private:
    explicit BlochDirection(const Vec3& v) : v_(v) {}
    Vec3 v_;
};

/// The Pauli matrix sigma_k, k in {1, 2, 3}.
Matrix2c pauli(int k);

/// v . sigma = v1*sigma_1 + v2*sigma_2 + v3*sigma_3, assembled as the closed
/// form [[v3, v1 - i*v2], [v1 + i*v2, -v3]]. Hermitian with zero normalized
/// trace for every v in R^3.
Matrix2c sigma_map(const Vec3& v);
inline Matrix2c sigma_map(const BlochDirection& d) { return sigma_map(d.vec()); }

/// Inverse of sigma_map: components of A against the orthonormal Pauli basis.
/// Rejects inputs that are not Hermitian and traceless within kSu2Tol.
Vec3 inverse_sigma_map(const Matrix2c& m);

}  // namespace paulikit
