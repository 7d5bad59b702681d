#ifndef QH_INTLIN_HPP
#define QH_INTLIN_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace qh {

using Int = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_) if (x != 0) return false;
        return true;
    }

    std::vector<Int> column(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    std::vector<Int> mul(const std::vector<Int>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("IntMatrix::mul: dimension mismatch");
        std::vector<Int> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (x[j] != 0) y[i] += at(i, j) * x[j];
        return y;
    }

    IntMatrix mul(const IntMatrix& b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("IntMatrix::mul: dimension mismatch");
        IntMatrix r(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b.at(k, j) != 0) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... , di >= 0.
/// v_inv and u_inv are maintained alongside so kernel coordinates and
/// generator lifts come out without a separate inversion pass.
struct SnfDecomposition {
    IntMatrix u, s, v;
    IntMatrix u_inv, v_inv;
    std::size_t rank = 0;

    /// Diagonal entries d1..d_rank (all nonzero).
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        d.reserve(rank);
        for (std::size_t i = 0; i < rank; ++i) d.push_back(s.at(i, i));
        return d;
    }
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Some integer x with A*x = b, or nullopt. Free coordinates are set to zero.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_linear(const SnfDecomposition& snf, const std::vector<Int>& b);

struct Cokernel {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, increasing
};

Cokernel cokernel(const IntMatrix& a);
Cokernel cokernel(const SnfDecomposition& snf, std::size_t rows);

/// Columns r+1..cols of V: a lattice basis of ker(A).
IntMatrix kernel_basis(const SnfDecomposition& snf);

}  // namespace qh

#endif
