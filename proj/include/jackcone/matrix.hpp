#ifndef JACKCONE_MATRIX_HPP
#define JACKCONE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "jackcone/error.hpp"
#include "jackcone/rational.hpp"

namespace jackcone {

/// Small dense row-major matrix. Only what the engine needs: these are at
/// most rank-sized (r <= ~20) symmetric matrices.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& values) {
        const int n = static_cast<int>(values.size());
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    T trace() const {
        T t = T(0);
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_same(const Matrix& o) const {
        if (o.rows_ != rows_ || o.cols_ != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

RealMatrix to_real(const RationalMatrix& m);
RationalMatrix to_rational(const RealMatrix& m);

// Exact routines.
Rational determinant(const RationalMatrix& m);
/// Throws SingularSystem for singular input.
RationalMatrix inverse(const RationalMatrix& m);
int rank(const RationalMatrix& m);
/// Symmetric input assumed. Positive definite iff every LDL^T pivot is > 0.
bool is_positive_definite(const RationalMatrix& m);
/// Symmetric input assumed. Exact LDL^T with diagonal pivoting.
bool is_positive_semidefinite(const RationalMatrix& m);
/// tr(M), tr(M^2), ..., tr(M^k).
std::vector<Rational> power_sums(const RationalMatrix& m, int k);

// Floating-point routines (symmetric input).
std::vector<double> symmetric_eigenvalues(const RealMatrix& m);
/// Singular values below rel_tol * largest count as zero.
int numerical_rank(const RealMatrix& m, double rel_tol = 1e-10);
bool cholesky_succeeds(const RealMatrix& m);
RealMatrix symmetric_sqrt(const RealMatrix& m);
RealMatrix symmetric_inverse_sqrt(const RealMatrix& m);
RealMatrix real_inverse(const RealMatrix& m);
double real_determinant(const RealMatrix& m);
std::vector<double> power_sums(const RealMatrix& m, int k);

}  // namespace jackcone

#endif  // JACKCONE_MATRIX_HPP
