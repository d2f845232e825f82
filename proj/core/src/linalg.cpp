#include "hwprobe/linalg.hpp"

#include <utility>

namespace hwprobe {

std::vector<int> rowReduce(DenseMatrix& m, const PrimeField& field) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Coeff inv = field.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = field.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Coeff f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = field.sub(m.at(i, j), field.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(DenseMatrix m, const PrimeField& field) {
  return static_cast<int>(rowReduce(m, field).size());
}

std::vector<std::vector<Coeff>> nullspace(DenseMatrix m, const PrimeField& field) {
  auto pivots = rowReduce(m, field);
  std::vector<bool> isPivot(static_cast<std::size_t>(m.cols), false);
  for (int c : pivots) isPivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Coeff>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (isPivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Coeff> v(static_cast<std::size_t>(m.cols), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<std::size_t>(pivots[k])] = field.neg(m.at(static_cast<int>(k), f));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hwprobe
