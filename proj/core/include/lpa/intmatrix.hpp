#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lpa {

// Dense integer matrix, row-major, with overflow-checked arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, long long fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    long long& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    long long operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    long long at(std::size_t i, std::size_t j) const;

    const std::vector<long long>& entries() const { return entries_; }

    IntMatrix transpose() const;
    bool all_nonnegative() const;
    long long max_abs_entry() const;

    // In-place elementary operations; every mutation goes through checked arithmetic.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, long long factor);
    void add_col_multiple(std::size_t dst, std::size_t src, long long factor);
    void negate_row(std::size_t i);

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    // Row-major lexicographic order on (rows, cols, entries); used for
    // canonical forms and deterministic sorting.
    friend bool operator<(const IntMatrix& a, const IntMatrix& b);

    std::vector<long long> apply(const std::vector<long long>& v) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<long long> entries_;
};

}  // namespace lpa
