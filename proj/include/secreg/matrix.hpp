#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace secreg {

/// Dense real matrix, row-major. Dimensions here are antenna counts, so
/// everything is plain loops over contiguous storage; no BLAS, no views.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<double> entries);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<const double> data() const noexcept { return data_; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(double s) const;

    double trace() const;
    double frobenius_norm() const;
    /// max_ij |a_ij - b_ij|; shapes must match
    double max_abs_diff(const Matrix& rhs) const;
    bool all_finite() const noexcept;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

inline Matrix operator*(double s, const Matrix& m) { return m * s; }

} // namespace secreg
