#include "cayley/intmatrix.hpp"

#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  e_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged initializer");
    for (long long x : r) e_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

Vec IntMatrix::operator*(const Vec& v) const {
  if (cols_ != static_cast<int>(v.size())) throw DimensionMismatch("matrix-vector shape");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::add_col(int a, int b, const Int& f) {
  if (f == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, a) += f * (*this)(i, b);
}

void IntMatrix::add_row(int a, int b, const Int& f) {
  if (f == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(a, j) += f * (*this)(b, j);
}

void IntMatrix::negate_col(int a) {
  for (int i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

void IntMatrix::negate_row(int a) {
  for (int j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

namespace {

Int parse_int(const std::string& tok) {
  std::string t;
  for (char c : tok)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty matrix entry");
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) throw ParseError("bad matrix entry '" + tok + "'");
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw ParseError("bad matrix entry '" + tok + "'");
  return Int(t);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

IntMatrix IntMatrix::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty matrix");

  std::vector<std::vector<Int>> rows;
  if (s[0] == '[') {
    // JSON array-of-rows: [[2,-1],[0,3]]
    if (s.size() < 4 || s.back() != ']') throw ParseError("unbalanced brackets");
    std::string inner = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
      if (inner[pos] == ',') ++pos;
      if (pos >= inner.size() || inner[pos] != '[') throw ParseError("expected '[' in row list");
      std::size_t end = inner.find(']', pos);
      if (end == std::string::npos) throw ParseError("unbalanced brackets");
      std::vector<Int> row;
      for (const auto& tok : split(inner.substr(pos + 1, end - pos - 1), ','))
        row.push_back(parse_int(tok));
      rows.push_back(std::move(row));
      pos = end + 1;
    }
  } else {
    for (const auto& rtext : split(s, ';')) {
      std::vector<Int> row;
      for (const auto& tok : split(rtext, ',')) row.push_back(parse_int(tok));
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw ParseError("empty matrix");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) throw ParseError("ragged matrix rows");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
  }
  return os.str();
}

Int det(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of non-square matrix");
  const int n = m.dim();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n == 3)
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));

  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace cayley
