#include "talex/field_matrix.hpp"

#include <sstream>

#include "talex/errors.hpp"

namespace talex {

FieldMatrix::FieldMatrix(const FieldDescriptor& desc, size_t rows, size_t cols)
    : rows_(rows), cols_(cols), desc_(desc), entries_(rows * cols, FieldElement::zero(desc)) {}

FieldMatrix FieldMatrix::identity(const FieldDescriptor& desc, size_t n) {
    FieldMatrix m(desc, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, FieldElement::one(desc));
    return m;
}

void FieldMatrix::set(size_t i, size_t j, FieldElement value) {
    if (value.descriptor() != desc_) throw DescriptorMismatch("matrix entry over a different field");
    entries_[i * cols_ + j] = std::move(value);
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("field matrix product shape mismatch");
    if (desc_ != other.desc_) throw DescriptorMismatch("field matrix product over different fields");
    FieldMatrix out(desc_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < other.cols_; ++j) {
                out.set(i, j, out.at(i, j) + a * other.at(k, j));
            }
        }
    }
    return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("field matrix sum shape mismatch");
    FieldMatrix out(desc_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("field matrix diff shape mismatch");
    FieldMatrix out(desc_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

bool FieldMatrix::operator==(const FieldMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && desc_ == other.desc_ && entries_ == other.entries_;
}

bool FieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(desc_, rows_);
}

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
    FieldMatrix work(*this);
    FieldMatrix inv = identity(desc_, rows_);
    for (size_t col = 0; col < cols_; ++col) {
        size_t pivot = col;
        while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) throw DivisionByZero("singular matrix has no inverse");
        if (pivot != col) {
            for (size_t j = 0; j < cols_; ++j) {
                std::swap(work.entries_[pivot * cols_ + j], work.entries_[col * cols_ + j]);
                std::swap(inv.entries_[pivot * cols_ + j], inv.entries_[col * cols_ + j]);
            }
        }
        const FieldElement scale = work.at(col, col).inverse();
        for (size_t j = 0; j < cols_; ++j) {
            work.set(col, j, work.at(col, j) * scale);
            inv.set(col, j, inv.at(col, j) * scale);
        }
        for (size_t i = 0; i < rows_; ++i) {
            if (i == col || work.at(i, col).is_zero()) continue;
            const FieldElement factor = work.at(i, col);
            for (size_t j = 0; j < cols_; ++j) {
                work.set(i, j, work.at(i, j) - factor * work.at(col, j));
                inv.set(i, j, inv.at(i, j) - factor * inv.at(col, j));
            }
        }
    }
    return inv;
}

FieldElement FieldMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    FieldMatrix work(*this);
    FieldElement det = FieldElement::one(desc_);
    for (size_t col = 0; col < cols_; ++col) {
        size_t pivot = col;
        while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return FieldElement::zero(desc_);
        if (pivot != col) {
            for (size_t j = 0; j < cols_; ++j) {
                std::swap(work.entries_[pivot * cols_ + j], work.entries_[col * cols_ + j]);
            }
            det = -det;
        }
        det = det * work.at(col, col);
        const FieldElement inv = work.at(col, col).inverse();
        for (size_t i = col + 1; i < rows_; ++i) {
            if (work.at(i, col).is_zero()) continue;
            const FieldElement factor = work.at(i, col) * inv;
            for (size_t j = col; j < cols_; ++j) {
                work.set(i, j, work.at(i, j) - factor * work.at(col, j));
            }
        }
    }
    return det;
}

size_t FieldMatrix::rank() const {
    FieldMatrix work(*this);
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank) {
            for (size_t j = 0; j < cols_; ++j) {
                std::swap(work.entries_[pivot * cols_ + j], work.entries_[rank * cols_ + j]);
            }
        }
        const FieldElement inv = work.at(rank, col).inverse();
        for (size_t i = rank + 1; i < rows_; ++i) {
            if (work.at(i, col).is_zero()) continue;
            const FieldElement factor = work.at(i, col) * inv;
            for (size_t j = col; j < cols_; ++j) {
                work.set(i, j, work.at(i, j) - factor * work.at(rank, j));
            }
        }
        ++rank;
    }
    return rank;
}

std::string FieldMatrix::to_string() const {
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

}  // namespace talex
