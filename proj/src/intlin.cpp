#include "qh/intlin.hpp"

#include <algorithm>
#include <cstdlib>

namespace qh {

namespace {

// In-place elementary operations, mirrored onto the transformation
// matrices so that u*a*v stays equal to the evolving work matrix.
struct SnfWork {
    IntMatrix a, u, u_inv, v, v_inv;

    explicit SnfWork(const IntMatrix& m)
        : a(m),
          u(IntMatrix::identity(m.rows())),
          u_inv(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          v_inv(IntMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
        for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
        // inverse of a row swap on the left is a column swap on u_inv
        for (std::size_t k = 0; k < u_inv.rows(); ++k) std::swap(u_inv.at(k, i), u_inv.at(k, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
        for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
        for (std::size_t k = 0; k < v_inv.cols(); ++k) std::swap(v_inv.at(i, k), v_inv.at(j, k));
    }

    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
        for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv.at(k, i) = -u_inv.at(k, i);
    }

    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) += q * a.at(j, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) += q * u.at(j, k);
        for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv.at(k, j) -= q * u_inv.at(k, i);
    }

    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, i) += q * a.at(k, j);
        for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, i) += q * v.at(k, j);
        for (std::size_t k = 0; k < v_inv.cols(); ++k) v_inv.at(j, k) -= q * v_inv.at(i, k);
    }
};

// Smallest nonzero absolute value in a[t.., t..], ties by lowest (row, col).
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& x = a.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
    SnfWork w(m);
    const std::size_t n = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    for (; t < n; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(w.a, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            // clear column t below the pivot
            bool dirty = false;
            for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
                if (w.a.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, t).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                w.add_row(i, t, -q);
                if (w.a.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
                if (w.a.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(t, j).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                w.add_col(j, t, -q);
                if (w.a.at(t, j) != 0) dirty = true;
            }
            if (!dirty) {
                // pivot divides its row and column remainders exactly; check the
                // divisibility chain against the rest of the submatrix
                bool fixed = true;
                for (std::size_t i = t + 1; i < w.a.rows() && fixed; ++i)
                    for (std::size_t j = t + 1; j < w.a.cols() && fixed; ++j)
                        if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                            w.add_row(t, i, 1);
                            fixed = false;
                        }
                if (fixed) break;
                continue;
            }
            // a smaller remainder appeared somewhere in row/column t
            std::size_t pi2, pj2;
            find_pivot(w.a, t, pi2, pj2);
            w.swap_rows(t, pi2);
            w.swap_cols(t, pj2);
        }
        if (w.a.at(t, t) < 0) w.negate_row(t);
    }

    SnfDecomposition out;
    out.rank = t;
    out.u = std::move(w.u);
    out.u_inv = std::move(w.u_inv);
    out.v = std::move(w.v);
    out.v_inv = std::move(w.v_inv);
    out.s = std::move(w.a);
    return out;
}

std::optional<std::vector<Int>> solve_linear(const SnfDecomposition& snf, const std::vector<Int>& b) {
    if (b.size() != snf.u.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    std::vector<Int> c = snf.u.mul(b);
    std::vector<Int> y(snf.v.rows());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.rank) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c[i].get_mpz_t(), snf.s.at(i, i).get_mpz_t());
            if (r != 0) return std::nullopt;
            y[i] = q;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.v.mul(y);
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    return solve_linear(smith_normal_form(a), b);
}

Cokernel cokernel(const SnfDecomposition& snf, std::size_t rows) {
    Cokernel ck;
    ck.free_rank = rows - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.s.at(i, i) > 1) ck.torsion.push_back(snf.s.at(i, i));
    return ck;
}

Cokernel cokernel(const IntMatrix& a) {
    return cokernel(smith_normal_form(a), a.rows());
}

IntMatrix kernel_basis(const SnfDecomposition& snf) {
    const std::size_t n = snf.v.rows();
    IntMatrix k(n, n - snf.rank);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = snf.rank; j < n; ++j)
            k.at(i, j - snf.rank) = snf.v.at(i, j);
    return k;
}

}  // namespace qh
