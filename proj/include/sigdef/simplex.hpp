#pragma once

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace sigdef {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
    Scalar objective = Scalar(0);
    int iterations = 0;
};

template <typename Scalar>
struct SimplexOptions {
    Scalar pivot_tol = Scalar(1e-10);
    Scalar feasibility_tol = Scalar(1e-9);
    int max_iterations = 10000;
};

/**
 * Row-reduces [A | b] with partial pivoting and drops dependent rows.
 *
 * Returns the reduced system, which has the same solution set as the input and
 * full row rank. Sets consistent = false when a dependent row carries a
 * nonzero right-hand side.
 */
template <typename Scalar>
struct ReducedSystem {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b;
    bool consistent = true;
};

template <typename Scalar>
ReducedSystem<Scalar> remove_redundant_rows(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
                                            const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b, Scalar tol) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const auto m = A.rows(), n = A.cols();
    Mat aug(m, n + 1);
    aug << A, b;

    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < n && rank < m; ++col) {
        Eigen::Index pivot = rank;
        aug.col(col).segment(rank, m - rank).cwiseAbs().maxCoeff(&pivot);
        pivot += rank;
        if (std::abs(aug(pivot, col)) <= tol) continue;
        aug.row(rank).swap(aug.row(pivot));
        aug.row(rank) /= aug(rank, col);
        for (Eigen::Index r = 0; r < m; ++r)
            if (r != rank && aug(r, col) != Scalar(0)) aug.row(r) -= aug(r, col) * aug.row(rank);
        ++rank;
    }

    ReducedSystem<Scalar> out;
    for (Eigen::Index r = rank; r < m; ++r)
        if (std::abs(aug(r, n)) > tol) out.consistent = false;
    out.A = aug.topLeftCorner(rank, n);
    out.b = aug.col(n).head(rank);
    return out;
}

namespace detail {

template <typename Scalar>
class Tableau {
public:
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    Tableau(const Mat& A, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b, const SimplexOptions<Scalar>& opt)
        : m_(A.rows()), n_(A.cols()), opt_(opt), t_(Mat::Zero(A.rows() + 1, A.cols() + A.rows() + 1)),
          basis_(static_cast<std::size_t>(A.rows())) {
        for (Eigen::Index i = 0; i < m_; ++i) {
            const Scalar sign = b[i] < Scalar(0) ? Scalar(-1) : Scalar(1);
            t_.row(i).head(n_) = sign * A.row(i);
            t_(i, n_ + i) = Scalar(1);
            t_(i, rhs()) = sign * b[i];
            basis_[static_cast<std::size_t>(i)] = n_ + i;
        }
    }

    /// Phase I: minimize the sum of artificials. Returns the residual infeasibility.
    Scalar phase_one(int& iterations) {
        t_.row(m_).setZero();
        for (Eigen::Index i = 0; i < m_; ++i) {
            t_.row(m_).head(n_) -= t_.row(i).head(n_);
            t_(m_, rhs()) -= t_(i, rhs());
        }
        iterate(n_ + m_, iterations);
        return -t_(m_, rhs());
    }

    /// Pivots remaining zero-level artificials out of the basis.
    void expel_artificials() {
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basis_[static_cast<std::size_t>(i)] < n_) continue;
            Eigen::Index col = -1;
            for (Eigen::Index j = 0; j < n_; ++j) {
                if (std::abs(t_(i, j)) > opt_.pivot_tol) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) pivot(i, col);
        }
    }

    LpStatus phase_two(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c, int& iterations) {
        t_.row(m_).setZero();
        t_.row(m_).head(n_) = c.transpose();
        for (Eigen::Index i = 0; i < m_; ++i) {
            const auto bi = basis_[static_cast<std::size_t>(i)];
            const Scalar cb = bi < n_ ? c[bi] : Scalar(0);
            if (cb != Scalar(0)) t_.row(m_) -= cb * t_.row(i);
        }
        return iterate(n_, iterations);
    }

    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solution() const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            const auto bi = basis_[static_cast<std::size_t>(i)];
            if (bi < n_) x[bi] = std::max(Scalar(0), t_(i, rhs()));
        }
        return x;
    }

private:
    Eigen::Index rhs() const { return n_ + m_; }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t_.row(row) /= t_(row, col);
        for (Eigen::Index r = 0; r <= m_; ++r)
            if (r != row && t_(r, col) != Scalar(0)) t_.row(r) -= t_(r, col) * t_.row(row);
        basis_[static_cast<std::size_t>(row)] = col;
    }

    // Bland's rule: lowest-index improving column, ratio ties broken by lowest basic index.
    LpStatus iterate(Eigen::Index eligible_columns, int& iterations) {
        while (true) {
            if (iterations >= opt_.max_iterations) throw std::runtime_error("simplex iteration limit reached");
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < eligible_columns; ++j) {
                if (t_(m_, j) < -opt_.pivot_tol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return LpStatus::Optimal;

            Eigen::Index leave = -1;
            Scalar best_ratio = std::numeric_limits<Scalar>::infinity();
            for (Eigen::Index i = 0; i < m_; ++i) {
                const Scalar a = t_(i, enter);
                if (a <= opt_.pivot_tol) continue;
                const Scalar ratio = t_(i, rhs()) / a;
                if (ratio < best_ratio - opt_.pivot_tol ||
                    (ratio <= best_ratio + opt_.pivot_tol && leave >= 0 &&
                     basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
                    best_ratio = std::min(ratio, best_ratio);
                    leave = i;
                }
            }
            if (leave < 0) return LpStatus::Unbounded;
            pivot(leave, enter);
            ++iterations;
        }
    }

    Eigen::Index m_, n_;
    SimplexOptions<Scalar> opt_;
    Mat t_;
    std::vector<Eigen::Index> basis_;
};

}  // namespace detail

/// Solves min c.x subject to A x = b, x >= 0 with a dense two-phase simplex.
template <typename Scalar>
LpResult<Scalar> solve_lp(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
                          const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b,
                          const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c, const SimplexOptions<Scalar>& opt = {}) {
    if (A.rows() != b.size() || A.cols() != c.size()) throw std::invalid_argument("solve_lp: dimension mismatch");

    LpResult<Scalar> result;
    const auto reduced = remove_redundant_rows<Scalar>(A, b, opt.pivot_tol);
    if (!reduced.consistent) return result;

    detail::Tableau<Scalar> tableau(reduced.A, reduced.b, opt);
    if (tableau.phase_one(result.iterations) > opt.feasibility_tol) return result;
    tableau.expel_artificials();
    result.status = tableau.phase_two(c, result.iterations);
    if (result.status != LpStatus::Optimal) return result;
    result.x = tableau.solution();
    result.objective = c.dot(result.x);
    return result;
}

}  // namespace sigdef
