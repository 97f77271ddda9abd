#include "flagcoh/linalg.hpp"

#include <gmpxx.h>

namespace flagcoh {

Matrix::Matrix(int rows, int cols, FieldTag field)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
         FieldScalar::zero(field)) {
    if (rows < 0 || cols < 0) throw UsageError("negative matrix dimension");
}

FieldScalar& Matrix::at(int i, int j) {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
}

const FieldScalar& Matrix::at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
}

namespace {

int rank_bareiss_rational(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // Clear denominators per row; rank is unchanged by row scaling.
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).rational().get_den().get_mpz_t());
        a[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) {
            mpq_class scaled = m.at(i, j).rational() * lcm;
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = scaled.get_num();
        }
    }
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        const mpz_class pv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int i = rank + 1; i < rows; ++i) {
            const mpz_class head = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            for (int j = col; j < cols; ++j) {
                mpz_class v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pv -
                              head * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            }
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

int rank_prime_field(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<FieldScalar>> a(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        a[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    }
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        const FieldScalar inv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)].inverse();
        for (int i = rank + 1; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) continue;
            const FieldScalar factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * inv;
            for (int j = col; j < cols; ++j) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    factor * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int exact_rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return m.field().kind == FieldKind::Rational ? rank_bareiss_rational(m) : rank_prime_field(m);
}

std::vector<std::vector<FieldScalar>> nullspace(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    const FieldTag field = m.field();
    std::vector<std::vector<FieldScalar>> a(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        a[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
        const FieldScalar inv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].inverse();
        for (int j = col; j < cols; ++j)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) continue;
            const FieldScalar factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            for (int j = col; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    factor * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<FieldScalar>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<FieldScalar> v(static_cast<std::size_t>(cols), FieldScalar::zero(field));
        v[static_cast<std::size_t>(free)] = FieldScalar::one(field);
        for (int i = 0; i < r; ++i)
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
                -a[static_cast<std::size_t>(i)][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace flagcoh
