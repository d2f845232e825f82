#include "hwprobe/matrix.hpp"

#include <sstream>

#include "hwprobe/error.hpp"

namespace hwprobe {

Matrix::Matrix(PolyRingPtr ring, std::vector<int> rowDegrees, std::vector<int> colDegrees)
    : ring_(std::move(ring)),
      rowDegrees_(std::move(rowDegrees)),
      colDegrees_(std::move(colDegrees)),
      entries_(rowDegrees_.size() * colDegrees_.size()) {}

Matrix Matrix::fromColumns(PolyRingPtr ring, std::vector<int> rowDegrees,
                           const std::vector<Vec>& columns, std::vector<int> colDegrees) {
  if (columns.size() != colDegrees.size())
    throw InternalError("column count does not match column degrees");
  FreeModule f(ring, rowDegrees);
  Matrix m(std::move(ring), std::move(rowDegrees), std::move(colDegrees));
  for (int j = 0; j < m.cols(); ++j) {
    auto col = f.toColumn(columns[static_cast<std::size_t>(j)]);
    for (int i = 0; i < m.rows(); ++i) m.set(i, j, std::move(col[static_cast<std::size_t>(i)]));
  }
  return m;
}

Matrix Matrix::identity(PolyRingPtr ring, std::vector<int> degrees) {
  Matrix m(ring, degrees, degrees);
  for (int i = 0; i < m.rows(); ++i) m.set(i, i, ring->constant(1));
  return m;
}

Vec Matrix::column(int j) const {
  std::vector<Poly> col;
  col.reserve(rowDegrees_.size());
  for (int i = 0; i < rows(); ++i) col.push_back(at(i, j));
  return target().fromColumn(col);
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(colDegrees_.size());
  for (int j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

bool Matrix::isZero() const {
  for (const auto& e : entries_)
    if (!e.isZero()) return false;
  return true;
}

bool Matrix::isHomogeneous() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Poly& p = at(i, j);
      if (p.isZero()) continue;
      if (!ring_->isHomogeneous(p)) return false;
      if (p.lead().mono.degree != colDegrees_[static_cast<std::size_t>(j)] -
                                      rowDegrees_[static_cast<std::size_t>(i)])
        return false;
    }
  return true;
}

Matrix Matrix::transpose() const {
  std::vector<int> r, c;
  for (int d : colDegrees_) r.push_back(-d);
  for (int d : rowDegrees_) c.push_back(-d);
  Matrix t(ring_, std::move(r), std::move(c));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols() != other.rows()) throw InternalError("matrix product shape mismatch");
  Matrix m(ring_, rowDegrees_, other.colDegrees_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < other.cols(); ++j) {
      Poly acc;
      for (int k = 0; k < cols(); ++k) {
        if (at(i, k).isZero() || other.at(k, j).isZero()) continue;
        acc = ring_->add(acc, ring_->mul(at(i, k), other.at(k, j)));
      }
      m.set(i, j, std::move(acc));
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows() != other.rows() || cols() != other.cols())
    throw InternalError("matrix sum shape mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = ring_->add(entries_[k], other.entries_[k]);
  return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows() != other.rows() || cols() != other.cols())
    throw InternalError("matrix difference shape mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = ring_->sub(entries_[k], other.entries_[k]);
  return m;
}

Matrix Matrix::scaled(const Poly& p, int degreeShift) const {
  Matrix m = *this;
  for (auto& d : m.colDegrees_) d += degreeShift;
  for (auto& e : m.entries_) e = ring_->mul(e, p);
  return m;
}

Matrix Matrix::kronecker(const Matrix& other) const {
  std::vector<int> r, c;
  for (int a : rowDegrees_)
    for (int b : other.rowDegrees_) r.push_back(a + b);
  for (int a : colDegrees_)
    for (int b : other.colDegrees_) c.push_back(a + b);
  Matrix m(ring_, std::move(r), std::move(c));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      if (at(i, j).isZero()) continue;
      for (int k = 0; k < other.rows(); ++k)
        for (int l = 0; l < other.cols(); ++l) {
          if (other.at(k, l).isZero()) continue;
          m.set(i * other.rows() + k, j * other.cols() + l, ring_->mul(at(i, j), other.at(k, l)));
        }
    }
  return m;
}

Matrix Matrix::shifted(int s) const {
  Matrix m = *this;
  for (auto& d : m.rowDegrees_) d += s;
  for (auto& d : m.colDegrees_) d += s;
  return m;
}

Matrix Matrix::withColumns(const std::vector<int>& keep) const {
  std::vector<int> c;
  for (int j : keep) c.push_back(colDegrees_[static_cast<std::size_t>(j)]);
  Matrix m(ring_, rowDegrees_, std::move(c));
  for (int i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < keep.size(); ++k) m.set(i, static_cast<int>(k), at(i, keep[k]));
  return m;
}

Matrix Matrix::withRows(const std::vector<int>& keep) const {
  std::vector<int> r;
  for (int i : keep) r.push_back(rowDegrees_[static_cast<std::size_t>(i)]);
  Matrix m(ring_, std::move(r), colDegrees_);
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (int j = 0; j < cols(); ++j) m.set(static_cast<int>(k), j, at(keep[k], j));
  return m;
}

Matrix Matrix::concatColumns(const Matrix& other) const {
  if (rowDegrees_ != other.rowDegrees_) throw InternalError("row degrees differ in concatenation");
  std::vector<int> c = colDegrees_;
  c.insert(c.end(), other.colDegrees_.begin(), other.colDegrees_.end());
  Matrix m(ring_, rowDegrees_, std::move(c));
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) m.set(i, j, at(i, j));
    for (int j = 0; j < other.cols(); ++j) m.set(i, cols() + j, other.at(i, j));
  }
  return m;
}

Matrix Matrix::directSum(const Matrix& other) const {
  std::vector<int> r = rowDegrees_, c = colDegrees_;
  r.insert(r.end(), other.rowDegrees_.begin(), other.rowDegrees_.end());
  c.insert(c.end(), other.colDegrees_.begin(), other.colDegrees_.end());
  Matrix m(ring_, std::move(r), std::move(c));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) m.set(i, j, at(i, j));
  for (int i = 0; i < other.rows(); ++i)
    for (int j = 0; j < other.cols(); ++j) m.set(rows() + i, cols() + j, other.at(i, j));
  return m;
}

bool Matrix::operator==(const Matrix& other) const {
  return rowDegrees_ == other.rowDegrees_ && colDegrees_ == other.colDegrees_ &&
         entries_ == other.entries_;
}

std::string Matrix::toString() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols(); ++j) {
      if (j) os << ", ";
      os << ring_->toString(at(i, j));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace hwprobe
