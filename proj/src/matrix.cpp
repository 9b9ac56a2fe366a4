#include "talex/matrix.hpp"

#include <sstream>

#include "talex/errors.hpp"

namespace talex {

RingMatrix::RingMatrix(const FieldDescriptor& desc, size_t rows, size_t cols)
    : rows_(rows), cols_(cols), desc_(desc), entries_(rows * cols, LaurentPolynomial::zero(desc)) {}

RingMatrix RingMatrix::identity(const FieldDescriptor& desc, size_t n) {
    RingMatrix m(desc, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, LaurentPolynomial::one(desc));
    return m;
}

void RingMatrix::set(size_t i, size_t j, LaurentPolynomial value) {
    if (value.descriptor() != desc_) throw DescriptorMismatch("matrix entry over a different field");
    entries_[i * cols_ + j] = std::move(value);
}

RingMatrix RingMatrix::operator*(const RingMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    if (desc_ != other.desc_) throw DescriptorMismatch("matrix product over different fields");
    RingMatrix out(desc_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const LaurentPolynomial& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < other.cols_; ++j) {
                if (other.at(k, j).is_zero()) continue;
                out.set(i, j, out.at(i, j) + a * other.at(k, j));
            }
        }
    }
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    RingMatrix out(desc_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix diff shape mismatch");
    RingMatrix out(desc_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

RingMatrix RingMatrix::transposed() const {
    RingMatrix out(desc_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    }
    return out;
}

bool RingMatrix::operator==(const RingMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && desc_ == other.desc_ && entries_ == other.entries_;
}

bool RingMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

void RingMatrix::set_block(size_t row0, size_t col0, const RingMatrix& block) {
    if (row0 + block.rows() > rows_ || col0 + block.cols() > cols_) {
        throw DimensionMismatch("block does not fit in matrix");
    }
    for (size_t i = 0; i < block.rows(); ++i) {
        for (size_t j = 0; j < block.cols(); ++j) set(row0 + i, col0 + j, block.at(i, j));
    }
}

FieldMatrix RingMatrix::evaluate(const FieldElement& point) const {
    FieldMatrix out(desc_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j).evaluate(point));
    }
    return out;
}

LaurentPolynomial RingMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    if (rows_ == 0) return LaurentPolynomial::one(desc_);
    if (rows_ == 1) return at(0, 0);
    LaurentPolynomial det = LaurentPolynomial::zero(desc_);
    for (size_t j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        RingMatrix minor(desc_, rows_ - 1, cols_ - 1);
        for (size_t i = 1; i < rows_; ++i) {
            size_t col = 0;
            for (size_t k = 0; k < cols_; ++k) {
                if (k == j) continue;
                minor.set(i - 1, col++, at(i, k));
            }
        }
        LaurentPolynomial term = at(0, j) * minor.determinant();
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::string RingMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) out << ", ";
        out << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

void RingMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < cols_; ++k) std::swap(entries_[i * cols_ + k], entries_[j * cols_ + k]);
}

void RingMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < rows_; ++k) std::swap(entries_[k * cols_ + i], entries_[k * cols_ + j]);
}

void RingMatrix::add_row_multiple(size_t i, size_t j, const LaurentPolynomial& c) {
    for (size_t k = 0; k < cols_; ++k) {
        if (at(j, k).is_zero() || c.is_zero()) continue;
        set(i, k, at(i, k) + c * at(j, k));
    }
}

void RingMatrix::add_col_multiple(size_t i, size_t j, const LaurentPolynomial& c) {
    for (size_t k = 0; k < rows_; ++k) {
        if (at(k, j).is_zero() || c.is_zero()) continue;
        set(k, i, at(k, i) + c * at(k, j));
    }
}

void RingMatrix::scale_row(size_t i, const LaurentPolynomial& unit) {
    for (size_t k = 0; k < cols_; ++k) set(i, k, at(i, k) * unit);
}

void RingMatrix::scale_col(size_t j, const LaurentPolynomial& unit) {
    for (size_t k = 0; k < rows_; ++k) set(k, j, at(k, j) * unit);
}

}  // namespace talex
