// Copyright 2026 The splitord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPLITORD_KERNEL_NUMBER_HPP_
#define SPLITORD_KERNEL_NUMBER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace splitord {

/// Arbitrary precision integer. Saturation can produce large coordinates,
/// so nothing in the library uses fixed-width arithmetic for group data.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);
bool is_integral(const Rational& q);

/// Parses "3", "-1/2", "2/4" (normalized to 1/2). Accepts U+2212 as a minus
/// sign. Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// q^n for integer n (n may be negative when q != 0).
Rational power(const Rational& q, std::int64_t n);

/// Converts to int64 when the value is an integer that fits.
std::optional<std::int64_t> to_int64(const Rational& q);

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_integral() const;
  bool is_diagonal() const;
  bool is_identity() const;
  Rational determinant() const;
  /// Inverse over the rationals, or nullopt when singular.
  std::optional<Matrix> inverse() const;
  /// Unique solution of M y = rhs for square nonsingular M.
  std::optional<std::vector<Rational>> solve(
      const std::vector<Rational>& rhs) const;
  Matrix power(std::int64_t n) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace splitord

#endif  // SPLITORD_KERNEL_NUMBER_HPP_
