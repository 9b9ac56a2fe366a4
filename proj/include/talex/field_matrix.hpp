#ifndef TALEX_FIELD_MATRIX_HPP
#define TALEX_FIELD_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "talex/field.hpp"

namespace talex {

/// Small dense square-or-rectangular matrix over the coefficient field.
/// Used for representation values and exact rank/determinant work; the
/// Laurent-entry matrices live in RingMatrix.
class FieldMatrix {
   public:
    FieldMatrix(const FieldDescriptor& desc, size_t rows, size_t cols);

    static FieldMatrix identity(const FieldDescriptor& desc, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldDescriptor& descriptor() const { return desc_; }

    const FieldElement& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    void set(size_t i, size_t j, FieldElement value);

    FieldMatrix operator*(const FieldMatrix& other) const;
    FieldMatrix operator+(const FieldMatrix& other) const;
    FieldMatrix operator-(const FieldMatrix& other) const;

    bool operator==(const FieldMatrix& other) const;
    bool operator!=(const FieldMatrix& other) const { return !(*this == other); }

    bool is_identity() const;

    /// Gauss-Jordan inverse; throws DivisionByZero when singular.
    FieldMatrix inverse() const;

    /// Exact determinant by Gaussian elimination.
    FieldElement determinant() const;

    /// Rank over the field by Gaussian elimination.
    size_t rank() const;

    std::string to_string() const;

   private:
    size_t rows_, cols_;
    FieldDescriptor desc_;
    std::vector<FieldElement> entries_;
};

}  // namespace talex

#endif
