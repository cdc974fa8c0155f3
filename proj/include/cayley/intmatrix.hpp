#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cayley {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;

// Floored division/modulo (quotient rounded toward -inf, remainder >= 0 for
// positive divisor).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

/// Dense matrix of exact integers, row-major. Square in almost all uses;
/// rectangular shapes appear only in internal lattice computations.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
  explicit IntMatrix(int n) : IntMatrix(n, n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  /// Dimension of a square matrix.
  int dim() const { return rows_; }

  Int& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix operator*(const IntMatrix& o) const;
  Vec operator*(const Vec& v) const;
  IntMatrix operator-() const;
  IntMatrix transpose() const;

  void swap_cols(int a, int b);
  void swap_rows(int a, int b);
  /// col(a) += f * col(b)
  void add_col(int a, int b, const Int& f);
  void add_row(int a, int b, const Int& f);
  void negate_col(int a);
  void negate_row(int a);

  /// Matrix text format: rows separated by `;`, entries by `,`, whitespace
  /// ignored; a leading `[` switches to JSON array-of-rows parsing.
  static IntMatrix parse(const std::string& text);
  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> e_;
};

/// Exact determinant: cofactor expansion for n <= 3, Bareiss elimination above.
Int det(const IntMatrix& m);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
std::string vec_str(const Vec& v);

}  // namespace cayley
