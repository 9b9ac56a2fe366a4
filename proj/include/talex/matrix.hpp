#ifndef TALEX_MATRIX_HPP
#define TALEX_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "talex/field_matrix.hpp"
#include "talex/laurent.hpp"

namespace talex {

/// Dense matrix over F[t,1/t]. All entries share one field descriptor;
/// empty shapes (0 rows or 0 columns) are legal and show up naturally
/// as boundary maps of short complexes.
class RingMatrix {
   public:
    RingMatrix(const FieldDescriptor& desc, size_t rows, size_t cols);

    static RingMatrix identity(const FieldDescriptor& desc, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldDescriptor& descriptor() const { return desc_; }

    const LaurentPolynomial& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    void set(size_t i, size_t j, LaurentPolynomial value);

    RingMatrix operator*(const RingMatrix& other) const;
    RingMatrix operator+(const RingMatrix& other) const;
    RingMatrix operator-(const RingMatrix& other) const;
    RingMatrix transposed() const;

    bool operator==(const RingMatrix& other) const;
    bool operator!=(const RingMatrix& other) const { return !(*this == other); }
    bool is_zero() const;

    /// Copies a block with its top-left corner at (row0, col0).
    void set_block(size_t row0, size_t col0, const RingMatrix& block);

    /// Entrywise evaluation at t = point (point != 0).
    FieldMatrix evaluate(const FieldElement& point) const;

    /// Exact determinant by cofactor expansion; meant for the small
    /// representation-sized blocks, not for the boundary matrices.
    LaurentPolynomial determinant() const;

    /// Nested bracket lists of polynomial strings.
    std::string to_string() const;

    // Elementary operations (used by the Smith reduction).
    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    /// row_i += c * row_j
    void add_row_multiple(size_t i, size_t j, const LaurentPolynomial& c);
    /// col_i += c * col_j
    void add_col_multiple(size_t i, size_t j, const LaurentPolynomial& c);
    void scale_row(size_t i, const LaurentPolynomial& unit);
    void scale_col(size_t j, const LaurentPolynomial& unit);

   private:
    size_t rows_, cols_;
    FieldDescriptor desc_;
    std::vector<LaurentPolynomial> entries_;
};

}  // namespace talex

#endif
