#pragma once

#include <vector>

#include "hwprobe/field.hpp"

namespace hwprobe {

/// Dense row-major matrix over a prime field.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Coeff> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
  Coeff& at(int i, int j) { return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
  Coeff at(int i, int j) const { return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rowReduce(DenseMatrix& m, const PrimeField& field);
int rank(DenseMatrix m, const PrimeField& field);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Coeff>> nullspace(DenseMatrix m, const PrimeField& field);

}  // namespace hwprobe
