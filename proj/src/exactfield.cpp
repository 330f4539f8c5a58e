#include "tiltlab/exactfield.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "tiltlab/errors.hpp"

namespace tiltlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Scalar p) : p_(p) {
  if (!is_prime(p) || p > 65521) {
    throw ContractError("field modulus must be a prime below 65536, got " + std::to_string(p));
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw ContractError("inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

Mat::Mat(std::size_t rows, std::size_t cols, Scalar p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Mat Mat::identity(std::size_t n, Scalar p) {
  Mat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long long>> rows, Scalar p) {
  std::vector<std::vector<long long>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  const std::size_t cols = copy.empty() ? 0 : copy.front().size();
  return from_rows(copy, cols, p);
}

Mat Mat::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols, Scalar p) {
  Mat m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ContractError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Mat Mat::from_reduced(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> data) {
  if (data.size() != rows * cols) throw ContractError("matrix data size mismatch");
  Mat m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.p_ = p;
  m.data_ = std::move(data);
  return m;
}

void Mat::set(std::size_t r, std::size_t c, long long v) {
  const auto m = static_cast<long long>(p_);
  auto x = v % m;
  data_[r * cols_ + c] = static_cast<Scalar>(x < 0 ? x + m : x);
}

bool Mat::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ContractError("block out of range");
  Mat b(nr, nc, p_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
  return b;
}

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
  Mat s(rows_, cols.size(), p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) s.data_[r * cols.size() + k] = data_[r * cols_ + cols[k]];
  return s;
}

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (a.modulus() != b.modulus()) throw ContractError("matrices over different fields");
}

}  // namespace

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw ContractError("matrix product shape mismatch");
  const std::uint64_t p = a.modulus();
  std::vector<Scalar> out(a.rows() * b.cols(), 0);
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a(i, k);
      if (x == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + x * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] = static_cast<Scalar>(acc[j]);
  }
  return Mat::from_reduced(a.rows(), b.cols(), a.modulus(), std::move(out));
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractError("matrix sum shape mismatch");
  const PrimeField f(a.modulus());
  std::vector<Scalar> out(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], b.data()[i]);
  return Mat::from_reduced(a.rows(), a.cols(), a.modulus(), std::move(out));
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractError("matrix difference shape mismatch");
  const PrimeField f(a.modulus());
  std::vector<Scalar> out(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(out[i], b.data()[i]);
  return Mat::from_reduced(a.rows(), a.cols(), a.modulus(), std::move(out));
}

Mat scaled(const Mat& a, Scalar s) {
  const PrimeField f(a.modulus());
  std::vector<Scalar> out(a.data().begin(), a.data().end());
  for (auto& x : out) x = f.mul(x, s % a.modulus());
  return Mat::from_reduced(a.rows(), a.cols(), a.modulus(), std::move(out));
}

Mat hstack(std::span<const Mat> parts, std::size_t rows, Scalar p) {
  std::size_t cols = 0;
  for (const auto& m : parts) {
    if (m.rows() != rows || m.modulus() != p) throw ContractError("hstack shape mismatch");
    cols += m.cols();
  }
  std::vector<Scalar> out(rows * cols);
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    for (std::size_t r = 0; r < rows; ++r) std::copy(m.row(r).begin(), m.row(r).end(), out.begin() + r * cols + c0);
    c0 += m.cols();
  }
  return Mat::from_reduced(rows, cols, p, std::move(out));
}

Mat vstack(std::span<const Mat> parts, std::size_t cols, Scalar p) {
  std::vector<Scalar> out;
  std::size_t rows = 0;
  for (const auto& m : parts) {
    if (m.cols() != cols || m.modulus() != p) throw ContractError("vstack shape mismatch");
    out.insert(out.end(), m.data().begin(), m.data().end());
    rows += m.rows();
  }
  return Mat::from_reduced(rows, cols, p, std::move(out));
}

Mat block_diagonal(std::span<const Mat> parts, Scalar p) {
  std::size_t rows = 0, cols = 0;
  for (const auto& m : parts) {
    rows += m.rows();
    cols += m.cols();
  }
  std::vector<Scalar> out(rows * cols, 0);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& m : parts) {
    if (m.modulus() != p) throw ContractError("block_diagonal field mismatch");
    for (std::size_t r = 0; r < m.rows(); ++r)
      std::copy(m.row(r).begin(), m.row(r).end(), out.begin() + (r0 + r) * cols + c0);
    r0 += m.rows();
    c0 += m.cols();
  }
  return Mat::from_reduced(rows, cols, p, std::move(out));
}

Echelon rref(const Mat& m) {
  const PrimeField f(m.modulus());
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Scalar> a(m.data().begin(), m.data().end());
  auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return a[r * cols + c]; };

  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    // First nonzero entry at or below the pivot row.
    std::size_t sel = prow;
    while (sel < rows && at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != prow)
      std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols, a.begin() + prow * cols);
    const Scalar inv = f.inv(at(prow, c));
    for (std::size_t k = c; k < cols; ++k) at(prow, k) = f.mul(at(prow, k), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow) continue;
      const Scalar factor = at(r, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) at(r, k) = f.sub(at(r, k), f.mul(factor, at(prow, k)));
    }
    pivots.push_back(c);
    ++prow;
  }
  return {Mat::from_reduced(rows, cols, m.modulus(), std::move(a)), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return m.empty() ? 0 : rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
  const PrimeField f(m.modulus());
  const auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Mat basis(m.cols(), free_cols.size(), m.modulus());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto fc = free_cols[k];
    basis.set(fc, k, 1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis.set(ech.pivots[r], k, f.neg(ech.reduced(r, fc)));
  }
  return basis;
}

Mat left_kernel_basis(const Mat& m) { return kernel_basis(m.transposed()).transposed(); }

Mat column_space_basis(const Mat& m) {
  const auto ech = rref(m);
  return m.select_columns(ech.pivots);
}

std::vector<std::size_t> column_space_complement(const Mat& m) {
  // Row space of m^T equals the column space of m; non-pivot unit vectors of
  // rref(m^T) complement it.
  const auto ech = rref(m.transposed());
  std::vector<bool> is_pivot(m.rows(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!is_pivot[r]) out.push_back(r);
  return out;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw ContractError("solve: row count mismatch");
  const std::array<Mat, 2> parts{a, b};
  const auto ech = rref(hstack(parts, a.rows(), a.modulus()));

  Mat x(a.cols(), b.cols(), a.modulus());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const auto c = ech.pivots[r];
    if (c >= a.cols()) return std::nullopt;  // pivot in the augmented block
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(c, j, ech.reduced(r, a.cols() + j));
  }
  return x;
}

}  // namespace tiltlab
