#pragma once

// Small dense exact-rational matrices. Everything here is Gaussian
// elimination over mpq; sizes are desk scale (a few hundred rows at most).

#include <optional>
#include <vector>

#include "superdual/numeric.hpp"

namespace superdual {

class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rank() const;

    // Basis of the right kernel (each vector has cols() entries).
    std::vector<std::vector<Rat>> kernel() const;

    // One solution x of A x = b, if any.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

}  // namespace superdual
