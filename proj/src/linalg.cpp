#include "crn/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "crn/errors.hpp"

namespace crn {

std::string to_string(const Rational& q) { return q.str(); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : r) entries_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * cols);
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> indices) const {
  RationalMatrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw std::out_of_range("row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(indices[i], c);
  }
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> indices) const {
  RationalMatrix out(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw std::out_of_range("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, indices[j]);
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c).str();
    }
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult out{m, {}};
  RationalMatrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(pivot_row, k));

    const Rational inv = 1 / a(pivot_row, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(pivot_row, k) *= inv;

    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(i, k) -= factor * a(pivot_row, k);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivot_columns.size(); }

namespace {

// Incrementally maintained echelon basis of a row space. Each stored row has
// a leading 1 in its pivot column and zeros in the pivot columns of every
// other stored row.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t cols) : cols_(cols) {}

  // Reduces v against the stored rows; returns the residual.
  RationalVector reduce(std::span<const Rational> v) const {
    RationalVector w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = w[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols_; ++k) w[k] -= f * rows_[i][k];
    }
    return w;
  }

  // Inserts v if independent; returns whether it was.
  bool insert(std::span<const Rational> v) {
    RationalVector w = reduce(v);
    auto lead = std::find_if(w.begin(), w.end(), [](const Rational& q) { return q != 0; });
    if (lead == w.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - w.begin());
    const Rational inv = 1 / w[p];
    for (auto& q : w) q *= inv;
    for (auto& row : rows_) {
      const Rational f = row[p];
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols_; ++k) row[k] -= f * w[k];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  std::size_t dimension() const { return rows_.size(); }

 private:
  std::size_t cols_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

BasisSelection select_basis_rows(const RationalMatrix& m) {
  BasisSelection sel;
  EchelonSpan span(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (span.dimension() == m.cols()) break;
    if (span.insert(m.row(r))) sel.basis_rows.push_back(r);
  }
  return sel;
}

BasisSelection basis_from_rows(const RationalMatrix& m, std::vector<std::size_t> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= m.rows()) throw std::invalid_argument("basis row index out of range");
    if (i > 0 && rows[i] <= rows[i - 1])
      throw std::invalid_argument("basis rows must be strictly increasing");
  }
  EchelonSpan span(m.cols());
  for (std::size_t r : rows)
    if (!span.insert(m.row(r))) throw std::invalid_argument("basis rows are linearly dependent");
  if (span.dimension() != rank(m))
    throw std::invalid_argument("basis rows do not span the row space");
  return BasisSelection{std::move(rows)};
}

RationalVector coordinates(std::span<const Rational> v, const RationalMatrix& basis) {
  if (v.size() != basis.cols()) throw std::invalid_argument("vector length does not match basis");
  const std::size_t p = basis.rows();
  // Solve basis^T a = v via the augmented system [basis^T | v].
  RationalMatrix aug(basis.cols(), p + 1);
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    for (std::size_t j = 0; j < p; ++j) aug(i, j) = basis(j, i);
    aug(i, p) = v[i];
  }
  RrefResult red = rref(aug);
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == p)
    throw NotInSpanError("vector is not in the span of the basis rows");
  if (red.pivot_columns.size() != p)
    throw std::invalid_argument("basis rows are linearly dependent");
  RationalVector a(p);
  for (std::size_t i = 0; i < p; ++i) a[red.pivot_columns[i]] = red.reduced(i, p);
  return a;
}

}  // namespace crn
