#pragma once

#include <vector>

#include "flagcoh/field.hpp"

namespace flagcoh {

/// Dense matrix over an exact field, sized for desk-scale rank problems.
class Matrix {
public:
    Matrix(int rows, int cols, FieldTag field);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldTag field() const { return field_; }

    FieldScalar& at(int i, int j);
    const FieldScalar& at(int i, int j) const;

private:
    int rows_;
    int cols_;
    FieldTag field_;
    std::vector<FieldScalar> a_;
};

/// Exact rank.  Over Q this clears denominators rowwise and runs fraction-free
/// (Bareiss) elimination on integers; over F_p it is standard elimination.
int exact_rank(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}, via reduced row echelon form.
std::vector<std::vector<FieldScalar>> nullspace(const Matrix& m);

}  // namespace flagcoh
