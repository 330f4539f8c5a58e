#pragma once

// Dense matrices over a prime field F_p with exact Gaussian elimination.
//
// Entries are stored row-major and always reduced to 0..p-1. Every matrix
// carries its modulus; binary operations require equal moduli.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tiltlab {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  explicit PrimeField(Scalar p);

  Scalar modulus() const noexcept { return p_; }
  Scalar reduce(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Scalar>(r < 0 ? r + m : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} + b) % p_); }
  Scalar sub(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} + p_ - b) % p_); }
  Scalar mul(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} * b) % p_); }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar inv(Scalar a) const;

 private:
  Scalar p_;
};

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Scalar p);

  static Mat identity(std::size_t n, Scalar p);
  static Mat from_rows(std::initializer_list<std::initializer_list<long long>> rows, Scalar p);
  // Column count must be given explicitly so that 0-row matrices keep their width.
  static Mat from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols, Scalar p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar modulus() const noexcept { return p_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v);
  std::span<const Scalar> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  Mat transposed() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Mat select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const Mat&, const Mat&) = default;

  // Takes ownership of row-major entries already reduced mod p.
  static Mat from_reduced(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> data);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Scalar p_ = 2;
  std::vector<Scalar> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat scaled(const Mat& a, Scalar s);

// Concatenation helpers. The explicit extent keeps empty lists well-shaped.
Mat hstack(std::span<const Mat> parts, std::size_t rows, Scalar p);
Mat vstack(std::span<const Mat> parts, std::size_t cols, Scalar p);
Mat block_diagonal(std::span<const Mat> parts, Scalar p);

struct Echelon {
  Mat reduced;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);

// Columns form a basis of {x : m x = 0}; width is cols - rank.
Mat kernel_basis(const Mat& m);
// Rows form a basis of {y : y m = 0}; height is rows - rank.
Mat left_kernel_basis(const Mat& m);
// A maximal independent subset of the columns of m, in original order.
Mat column_space_basis(const Mat& m);
// Indices r such that the unit vectors e_r complete the column space of m.
std::vector<std::size_t> column_space_complement(const Mat& m);

// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

}  // namespace tiltlab
