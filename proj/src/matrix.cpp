#include "jackcone/matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace jackcone {

namespace {

Eigen::MatrixXd to_eigen(const RealMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

RealMatrix from_eigen(const Eigen::MatrixXd& e) {
    RealMatrix m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = e(i, j);
    return m;
}

void require_square(int rows, int cols) {
    if (rows != cols) throw Error(ErrorCode::DimensionMismatch, "square matrix required");
}

}  // namespace

RealMatrix to_real(const RationalMatrix& m) {
    RealMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = to_double(m(i, j));
    return r;
}

RationalMatrix to_rational(const RealMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = from_double(m(i, j));
    return r;
}

Rational determinant(const RationalMatrix& input) {
    require_square(input.rows(), input.cols());
    RationalMatrix a = input;
    const int n = a.rows();
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) continue;
            const Rational f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& input) {
    require_square(input.rows(), input.cols());
    const int n = input.rows();
    RationalMatrix a = input;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
        if (pivot == n) throw Error(ErrorCode::SingularSystem, "matrix is singular");
        if (pivot != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        const Rational p = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || sgn(a(i, k)) == 0) continue;
            const Rational f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

int rank(const RationalMatrix& input) {
    RationalMatrix a = input;
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int pivot = r;
        while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
        for (int i = r + 1; i < a.rows(); ++i) {
            if (sgn(a(i, col)) == 0) continue;
            const Rational f = a(i, col) / a(r, col);
            for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

bool is_positive_definite(const RationalMatrix& input) {
    require_square(input.rows(), input.cols());
    RationalMatrix a = input;
    const int n = a.rows();
    for (int k = 0; k < n; ++k) {
        if (sgn(a(k, k)) <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

bool is_positive_semidefinite(const RationalMatrix& input) {
    require_square(input.rows(), input.cols());
    RationalMatrix a = input;
    const int n = a.rows();
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        int k = -1;
        for (int i = 0; i < n; ++i)
            if (!done[static_cast<std::size_t>(i)] && (k < 0 || a(i, i) > a(k, k))) k = i;
        if (sgn(a(k, k)) < 0) return false;
        if (sgn(a(k, k)) == 0) {
            // Largest remaining diagonal is zero: PSD iff the remaining block vanishes.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)] && sgn(a(i, j)) != 0)
                        return false;
            return true;
        }
        done[static_cast<std::size_t>(k)] = true;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<std::size_t>(i)] || sgn(a(i, k)) == 0) continue;
            const Rational f = a(i, k) / a(k, k);
            for (int j = 0; j < n; ++j)
                if (!done[static_cast<std::size_t>(j)]) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

std::vector<Rational> power_sums(const RationalMatrix& m, int k) {
    require_square(m.rows(), m.cols());
    std::vector<Rational> out;
    RationalMatrix p = m;
    for (int j = 1; j <= k; ++j) {
        if (j > 1) p = p * m;
        out.push_back(p.trace());
    }
    return out;
}

std::vector<double> symmetric_eigenvalues(const RealMatrix& m) {
    require_square(m.rows(), m.cols());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int numerical_rank(const RealMatrix& m, double rel_tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0)) ++r;
    return r;
}

bool cholesky_succeeds(const RealMatrix& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(m));
    return llt.info() == Eigen::Success;
}

RealMatrix symmetric_sqrt(const RealMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m));
    return from_eigen(solver.operatorSqrt());
}

RealMatrix symmetric_inverse_sqrt(const RealMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m));
    return from_eigen(solver.operatorInverseSqrt());
}

RealMatrix real_inverse(const RealMatrix& m) {
    require_square(m.rows(), m.cols());
    return from_eigen(to_eigen(m).inverse());
}

double real_determinant(const RealMatrix& m) {
    require_square(m.rows(), m.cols());
    return to_eigen(m).determinant();
}

std::vector<double> power_sums(const RealMatrix& m, int k) {
    require_square(m.rows(), m.cols());
    std::vector<double> out;
    RealMatrix p = m;
    for (int j = 1; j <= k; ++j) {
        if (j > 1) p = p * m;
        out.push_back(p.trace());
    }
    return out;
}

}  // namespace jackcone
