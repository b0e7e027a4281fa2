#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crn {

// Arbitrary-precision rational, always normalized (lowest terms, positive
// denominator).
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

std::string to_string(const Rational& q);

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  RationalMatrix select_rows(std::span<const std::size_t> indices) const;
  RationalMatrix select_columns(std::span<const std::size_t> indices) const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::string to_string(const RationalMatrix& m);

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Row indices of a basis of the row space, chosen greedily in row order.
struct BasisSelection {
  std::vector<std::size_t> basis_rows;

  std::size_t rank() const { return basis_rows.size(); }
  friend bool operator==(const BasisSelection&, const BasisSelection&) = default;
};

// A row joins the basis iff it is not in the span of the rows already chosen.
BasisSelection select_basis_rows(const RationalMatrix& m);

// Accepts a caller-chosen basis: the rows must be strictly increasing,
// linearly independent and span the row space of m. Throws
// std::invalid_argument otherwise.
BasisSelection basis_from_rows(const RationalMatrix& m, std::vector<std::size_t> rows);

// Unique a with v = sum_j a[j] * basis.row(j). The rows of basis must be
// linearly independent. Throws NotInSpanError if v is outside their span.
RationalVector coordinates(std::span<const Rational> v, const RationalMatrix& basis);

}  // namespace crn
