#include "lpa/intmatrix.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "lpa/checked.hpp"

namespace lpa {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, long long fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> r;
    for (const auto& row : rows) r.emplace_back(row);
    *this = from_rows(r);
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw std::invalid_argument("ragged rows in matrix literal");
        }
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

long long IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return (*this)(i, j);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

bool IntMatrix::all_nonnegative() const {
    for (long long e : entries_) {
        if (e < 0) return false;
    }
    return true;
}

long long IntMatrix::max_abs_entry() const {
    long long m = 0;
    for (long long e : entries_) {
        long long a = e < 0 ? checked_neg(e) : e;
        if (a > m) m = a;
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, long long factor) {
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(dst, j) = checked_add((*this)(dst, j), checked_mul(factor, (*this)(src, j)));
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, long long factor) {
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, dst) = checked_add((*this)(i, dst), checked_mul(factor, (*this)(i, src)));
    }
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = checked_neg((*this)(i, j));
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix size mismatch in addition");
    }
    IntMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        r.entries_[k] = checked_add(a.entries_[k], b.entries_[k]);
    }
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix size mismatch in subtraction");
    }
    IntMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        r.entries_[k] = checked_sub(a.entries_[k], b.entries_[k]);
    }
    return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix size mismatch in multiplication");
    }
    IntMatrix r(a.rows_, b.cols_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            long long aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                r(i, j) = checked_add(r(i, j), checked_mul(aik, b(k, j)));
            }
        }
    }
    return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.entries_ < b.entries_;
}

std::vector<long long> IntMatrix::apply(const std::vector<long long>& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length does not match matrix columns");
    }
    std::vector<long long> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r[i] = checked_add(r[i], checked_mul((*this)(i, j), v[j]));
        }
    }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j);
        }
        os << "]";
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

}  // namespace lpa
