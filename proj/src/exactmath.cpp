#include "lgeo/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

#include "lgeo/errors.hpp"

namespace lgeo {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt digits_to_int(std::string_view s) { return BigInt(std::string(s), 10); }

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw InputError("malformed rational '" + std::string(text) + "'"); };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    BigInt d = digits_to_int(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    q = Rational(digits_to_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) fail();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt w = whole.empty() ? BigInt(0) : digits_to_int(whole);
    BigInt f = frac.empty() ? BigInt(0) : digits_to_int(frac);
    q = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) fail();
    q = Rational(digits_to_int(s));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool IntMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(r, c) != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t last) const {
  IntMatrix b(last - first, cols_);
  for (std::size_t r = first; r < last; ++r)
    for (std::size_t c = 0; c < cols_; ++c) b(r - first, c) = (*this)(r, c);
  return b;
}

IntMatrix IntMatrix::stacked(const IntMatrix& other) const {
  if (other.cols_ != cols_) throw DimensionError("stacking matrices of different widths");
  IntMatrix s(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), s.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(),
            s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row[target] -= q * row[source]
void sub_multiple(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) -= q * m(source, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

// (row_a, row_b) <- (s*row_a + t*row_b, x*row_b - y*row_a)
void combine(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& s, const BigInt& t,
             const BigInt& x, const BigInt& y) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BigInt va = m(a, c);
    BigInt vb = m(b, c);
    m(a, c) = s * va + t * vb;
    m(b, c) = x * vb - y * va;
  }
}

}  // namespace

HermiteResult hnf(const IntMatrix& m) {
  HermiteResult out{m, IntMatrix::identity(m.rows())};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
    for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      if (h(pivot_row, c) == 0) {
        swap_rows(h, pivot_row, i);
        swap_rows(u, pivot_row, i);
        continue;
      }
      BigInt a = h(pivot_row, c);
      BigInt b = h(i, c);
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      BigInt x = a / g;
      BigInt y = b / g;
      combine(h, pivot_row, i, s, t, x, y);
      combine(u, pivot_row, i, s, t, x, y);
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const BigInt pivot = h(pivot_row, c);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      sub_multiple(h, i, pivot_row, q);
      sub_multiple(u, i, pivot_row, q);
    }
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const IntMatrix& m) {
  const IntMatrix h = hnf(m).H;
  std::size_t r = 0;
  while (r < h.rows() && !h.row_is_zero(r)) ++r;
  return r;
}

namespace {

IntMatrix nonzero_rows(const IntMatrix& h) {
  std::size_t r = 0;
  while (r < h.rows() && !h.row_is_zero(r)) ++r;
  return h.row_block(0, r);
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& m) {
  // U * M^T = H; rows of U facing zero rows of H span the left kernel of M^T.
  const HermiteResult t = hnf(m.transpose());
  std::size_t r = 0;
  while (r < t.H.rows() && !t.H.row_is_zero(r)) ++r;
  IntMatrix basis = t.U.row_block(r, t.U.rows());
  return nonzero_rows(hnf(basis).H);
}

bool lattice_span_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("lattice comparison needs equal widths");
  return nonzero_rows(hnf(a).H) == nonzero_rows(hnf(b).H);
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix parse_int_matrix(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::size_t line_no = 0;
  std::size_t width = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<BigInt> row;
    std::string tok;
    while (fields >> tok) {
      std::string_view digits = tok;
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
      if (!all_digits(digits)) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no,
                         line.find(tok) + 1);
      }
      row.emplace_back(tok.front() == '+' ? tok.substr(1) : tok, 10);
    }
    if (row.empty()) continue;
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(width),
                       line_no, 1);
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, width);
}

std::string format_int_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += m(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  return os << format_int_matrix(m);
}

}  // namespace lgeo
