#pragma once

#include <string>
#include <vector>

#include "hwprobe/free_module.hpp"

namespace hwprobe {

/// Graded matrix over a polynomial ring: a map from the free module with
/// twists `colDegrees` to the free module with twists `rowDegrees`. Entry
/// (i, j) is zero or homogeneous of degree colDegrees[j] - rowDegrees[i].
class Matrix {
 public:
  Matrix() = default;
  Matrix(PolyRingPtr ring, std::vector<int> rowDegrees, std::vector<int> colDegrees);

  static Matrix fromColumns(PolyRingPtr ring, std::vector<int> rowDegrees,
                            const std::vector<Vec>& columns, std::vector<int> colDegrees);
  static Matrix identity(PolyRingPtr ring, std::vector<int> degrees);

  const PolyRingPtr& ringPtr() const { return ring_; }
  const PolyRing& ring() const { return *ring_; }
  int rows() const { return static_cast<int>(rowDegrees_.size()); }
  int cols() const { return static_cast<int>(colDegrees_.size()); }
  const std::vector<int>& rowDegrees() const { return rowDegrees_; }
  const std::vector<int>& colDegrees() const { return colDegrees_; }

  const Poly& at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, Poly p) { entries_[index(i, j)] = std::move(p); }

  FreeModule target() const { return FreeModule(ring_, rowDegrees_); }
  FreeModule source() const { return FreeModule(ring_, colDegrees_); }
  Vec column(int j) const;
  std::vector<Vec> columns() const;

  bool isZero() const;
  bool isHomogeneous() const;
  /// Degree-respecting transpose: rows get degrees -colDegrees and vice versa.
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Poly& p, int degreeShift) const;
  /// this (x) other with basis order (i, k) -> i * other.rows() + k.
  Matrix kronecker(const Matrix& other) const;
  /// All row and column degrees raised by s.
  Matrix shifted(int s) const;
  Matrix withColumns(const std::vector<int>& keep) const;
  Matrix withRows(const std::vector<int>& keep) const;
  /// [this | other]; row degrees must agree.
  Matrix concatColumns(const Matrix& other) const;
  Matrix directSum(const Matrix& other) const;

  bool operator==(const Matrix& other) const;
  std::string toString() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * colDegrees_.size() + static_cast<std::size_t>(j);
  }

  PolyRingPtr ring_;
  std::vector<int> rowDegrees_;
  std::vector<int> colDegrees_;
  std::vector<Poly> entries_;
};

}  // namespace hwprobe
