#pragma once

#include "rpart/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rpart {

/// Row-major dense matrix of Rational.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);
    /// Copy with column j replaced by `column`.
    RatMatrix with_column(std::size_t j, const std::vector<Rational>& column) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Fraction-free determinant. Each row is scaled by the lcm of its entry
/// denominators, the integer matrix is reduced by Bareiss elimination, and
/// the accumulated scale is divided back out. Throws std::invalid_argument
/// for non-square input. The 0x0 determinant is 1.
Rational det_bareiss(const RatMatrix& m);

/// Plain Gaussian elimination over Rational. Slow reference path.
Rational det_gaussian(const RatMatrix& m);

/// Rank by Gaussian elimination over Rational.
std::size_t rank(const RatMatrix& m);

/// Solves m x = b for square nonsingular m by Gaussian elimination.
/// Returns nullopt when m is singular.
std::optional<std::vector<Rational>> solve_gaussian(const RatMatrix& m, const std::vector<Rational>& b);

}  // namespace rpart
