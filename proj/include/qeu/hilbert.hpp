// Copyright 2026 The qeu Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Dense complex linear algebra for the small Hilbert spaces used by the
// decision models (dimension 2..8): unit state vectors, Hermitian operators,
// orthogonal projectors and Born-rule probabilities.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qeu/error.hpp"

namespace qeu::hilbert {

using Complex = std::complex<double>;

inline constexpr std::size_t kMinDimension = 2;
inline constexpr std::size_t kMaxDimension = 8;

/// Tolerance for invariants of values we construct (norms, Hermiticity).
inline constexpr double kConstructTolerance = 1e-12;
/// Tolerance for identities derived through a few matrix products.
inline constexpr double kDerivedTolerance = 1e-10;

inline double degrees_to_radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

/// modulus * e^{i*degrees}. Quarter turns are snapped to exact values so that
/// a 90 degree phase yields a purely imaginary number.
inline Complex polar_degrees(double modulus, double degrees) {
    const double turns = degrees / 90.0;
    const double nearest = std::round(turns);
    if (std::abs(turns - nearest) < 1e-15) {
        switch (((static_cast<long long>(nearest) % 4) + 4) % 4) {
        case 0: return {modulus, 0.0};
        case 1: return {0.0, modulus};
        case 2: return {-modulus, 0.0};
        default: return {0.0, -modulus};
        }
    }
    return std::polar(modulus, degrees_to_radians(degrees));
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void check_dimension(std::size_t n) {
    if (n < kMinDimension || n > kMaxDimension) {
        throw Error(ErrorCode::InvalidArgument,
                    "dimension " + std::to_string(n) + " outside [2, 8]");
    }
}

inline void check_same_dimension(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(a) + " vs " + std::to_string(b));
    }
}

/// Unit vector of complex amplitudes in C^n.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
        check_dimension(amps_.size());
        for (const auto& a : amps_) {
            if (!is_finite(a)) {
                throw Error(ErrorCode::InvalidArgument, "non-finite amplitude");
            }
        }
        const double norm2 = squared_norm(amps_);
        if (std::abs(norm2 - 1.0) > kConstructTolerance) {
            throw Error(ErrorCode::NonUnitState,
                        "squared norm " + std::to_string(norm2) + " differs from 1");
        }
    }

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    static StateVector normalized(std::vector<Complex> amplitudes) {
        const double norm = std::sqrt(squared_norm(amplitudes));
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw Error(ErrorCode::NonUnitState, "cannot normalize a zero or non-finite vector");
        }
        for (auto& a : amplitudes) {
            a /= norm;
        }
        return StateVector(std::move(amplitudes));
    }

    /// Canonical basis vector |alpha_index> of C^n.
    static StateVector basis(std::size_t n, std::size_t index) {
        if (index >= n) {
            throw Error(ErrorCode::InvalidArgument, "basis index out of range");
        }
        std::vector<Complex> amps(n, Complex{0.0, 0.0});
        amps[index] = 1.0;
        return StateVector(std::move(amps));
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_.at(i); }

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    static double squared_norm(const std::vector<Complex>& v) {
        double s = 0.0;
        for (const auto& a : v) {
            s += std::norm(a);
        }
        return s;
    }

    std::vector<Complex> amps_;
};

/// Dense row-major n x n complex matrix.
class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, Complex{0.0, 0.0}) { check_dimension(n); }

    Matrix(std::size_t n, std::vector<Complex> row_major) : n_(n), data_(std::move(row_major)) {
        check_dimension(n);
        if (data_.size() != n * n) {
            throw Error(ErrorCode::DimensionMismatch, "matrix data does not have n*n entries");
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Matrix diagonal(std::span<const double> values) {
        Matrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            m(i, i) = values[i];
        }
        return m;
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
    [[nodiscard]] std::span<const Complex> data() const noexcept { return data_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    [[nodiscard]] Matrix adjoint() const {
        Matrix out(n_);
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    [[nodiscard]] Complex trace() const {
        Complex t{0.0, 0.0};
        for (std::size_t i = 0; i < n_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    [[nodiscard]] bool is_diagonal(double tol) const {
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) {
                if (r != c && std::abs((*this)(r, c)) > tol) {
                    return false;
                }
            }
        }
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        check_same_dimension(a.n_, b.n_);
        Matrix out(a.n_);
        for (std::size_t r = 0; r < a.n_; ++r) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                const Complex ark = a(r, k);
                for (std::size_t c = 0; c < a.n_; ++c) {
                    out(r, c) += ark * b(k, c);
                }
            }
        }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        check_same_dimension(a.n_, b.n_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            a.data_[i] += b.data_[i];
        }
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        check_same_dimension(a.n_, b.n_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            a.data_[i] -= b.data_[i];
        }
        return a;
    }

    friend Matrix operator*(Complex s, Matrix a) {
        for (auto& x : a.data_) {
            x *= s;
        }
        return a;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_difference(const Matrix& a, const Matrix& b) {
    check_same_dimension(a.dimension(), b.dimension());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

inline std::vector<Complex> apply(const Matrix& m, const StateVector& v) {
    check_same_dimension(m.dimension(), v.dimension());
    std::vector<Complex> out(v.dimension(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < m.dimension(); ++r) {
        for (std::size_t c = 0; c < m.dimension(); ++c) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

class HermitianOperator {
public:
    explicit HermitianOperator(Matrix m) : m_(std::move(m)) {
        for (const auto& x : m_.data()) {
            if (!is_finite(x)) {
                throw Error(ErrorCode::InvalidArgument, "non-finite operator entry");
            }
        }
        if (max_abs_difference(m_, m_.adjoint()) > kConstructTolerance) {
            throw Error(ErrorCode::NotHermitian, "operator differs from its adjoint");
        }
    }

    static HermitianOperator diagonal(std::span<const double> values) {
        return HermitianOperator(Matrix::diagonal(values));
    }

    [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return m_.dimension(); }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
        return HermitianOperator(a.m_ + b.m_);
    }
    friend HermitianOperator operator*(double s, const HermitianOperator& a) {
        return HermitianOperator(Complex{s, 0.0} * a.m_);
    }

    friend bool operator==(const HermitianOperator&, const HermitianOperator&) = default;

private:
    Matrix m_;
};

/// Orthogonal projection operator: Hermitian, idempotent, integer trace.
class Projector {
public:
    explicit Projector(HermitianOperator op) : op_(std::move(op)) {
        const Matrix& m = op_.matrix();
        if (max_abs_difference(m * m, m) > kDerivedTolerance) {
            throw Error(ErrorCode::NotProjector, "operator is not idempotent");
        }
        const double tr = m.trace().real();
        const double rounded = std::round(tr);
        if (std::abs(tr - rounded) > kDerivedTolerance) {
            throw Error(ErrorCode::NotProjector, "trace is not an integer");
        }
        rank_ = static_cast<std::size_t>(rounded);
    }

    explicit Projector(Matrix m) : Projector(HermitianOperator(std::move(m))) {}

    [[nodiscard]] const HermitianOperator& as_operator() const noexcept { return op_; }
    [[nodiscard]] const Matrix& matrix() const noexcept { return op_.matrix(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return op_.dimension(); }
    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const { return op_(r, c); }

    /// 1 - P, the other member of the spectral family {P, 1 - P}.
    [[nodiscard]] Projector complement() const {
        return Projector(Matrix::identity(dimension()) - matrix());
    }

    friend bool operator==(const Projector&, const Projector&) = default;

private:
    HermitianOperator op_;
    std::size_t rank_ = 0;
};

/// <a|b>, conjugate-linear in the first argument.
inline Complex inner_product(const StateVector& a, const StateVector& b) {
    check_same_dimension(a.dimension(), b.dimension());
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

/// |v><v|
inline Projector rank1_projector(const StateVector& v) {
    const std::size_t n = v.dimension();
    Matrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    // The outer product is exactly Hermitian up to the product rounding; pin it.
    for (std::size_t r = 0; r < n; ++r) {
        m(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            m(c, r) = std::conj(m(r, c));
        }
    }
    return Projector(std::move(m));
}

/// P_i = |alpha_i><alpha_i| for the canonical basis.
inline Projector canonical_projector(std::size_t n, std::size_t index) {
    return rank1_projector(StateVector::basis(n, index));
}

inline std::vector<Projector> canonical_spectral_family(std::size_t n) {
    std::vector<Projector> family;
    family.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        family.push_back(canonical_projector(n, i));
    }
    return family;
}

namespace detail {
inline Complex sandwich(const StateVector& v, const Matrix& m) {
    const auto mv = apply(m, v);
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        s += std::conj(v[i]) * mv[i];
    }
    return s;
}
} // namespace detail

/// <v|A|v>. A residual imaginary part above kDerivedTolerance means the
/// operator was not Hermitian, which the types should have excluded.
inline double expectation(const StateVector& v, const HermitianOperator& a) {
    check_same_dimension(v.dimension(), a.dimension());
    const Complex s = detail::sandwich(v, a.matrix());
    if (std::abs(s.imag()) > kDerivedTolerance) {
        throw Error(ErrorCode::NotHermitian, "expectation has imaginary part");
    }
    return s.real();
}

/// Born-rule probability <v|P|v>, clamped onto [0, 1] for round-off.
inline double born_probability(const StateVector& v, const Projector& p) {
    const double prob = expectation(v, p.as_operator());
    if (prob < -kConstructTolerance || prob > 1.0 + kConstructTolerance) {
        throw Error(ErrorCode::NotProjector, "Born probability outside [0, 1]");
    }
    return std::clamp(prob, 0.0, 1.0);
}

} // namespace qeu::hilbert
