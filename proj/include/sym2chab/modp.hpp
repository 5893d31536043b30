#pragma once

// F_2 and F_4 arithmetic, bit-packed F_2 vectors and matrices, points of P^{g-1}(F_2).

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sym2chab/errors.hpp"

namespace sym2chab {

/// F_4 = F_2[alpha]/(alpha^2 + alpha + 1); the code is bit0 + bit1 * alpha.
enum class F4 : std::uint8_t { Zero = 0, One = 1, Alpha = 2, AlphaPlusOne = 3 };

inline constexpr F4 kF4All[4] = {F4::Zero, F4::One, F4::Alpha, F4::AlphaPlusOne};

F4 operator+(F4 x, F4 y);
F4 operator*(F4 x, F4 y);
inline F4 frobenius(F4 x) { return x * x; }
bool in_f2(F4 x);
std::string to_string(F4 x);

struct F4TableReport {
  int products_checked = 0;
  int sums_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the 16 sums and 16 products against polynomial arithmetic modulo alpha^2 + alpha + 1.
F4TableReport f4_table_check();

/// Bit vector in F_2^n; coordinate 0 is printed first.
class F2Vec {
 public:
  F2Vec() = default;
  explicit F2Vec(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}
  static F2Vec unit(std::size_t length, std::size_t index);
  /// Parses "1010". Throws ParseError on anything else.
  static F2Vec parse(std::string_view bits);

  std::size_t size() const { return length_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool is_zero() const;
  int weight() const;
  /// Index of the first set coordinate, or size() when zero.
  std::size_t leading_index() const;

  F2Vec& operator^=(const F2Vec& other);
  friend F2Vec operator^(F2Vec x, const F2Vec& y) { return x ^= y; }
  /// Dot product over F_2.
  friend bool dot(const F2Vec& x, const F2Vec& y);

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::string to_string() const;

  friend bool operator==(const F2Vec&, const F2Vec&) = default;
  friend std::strong_ordering operator<=>(const F2Vec& x, const F2Vec& y);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A point of P^{g-1}(F_2). F_2 has a single unit, so the nonzero vector is the canonical representative.
class ProjPtF2 {
 public:
  const F2Vec& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }
  /// "(1:0:1)".
  std::string to_string() const;

  friend bool operator==(const ProjPtF2&, const ProjPtF2&) = default;
  friend auto operator<=>(const ProjPtF2& x, const ProjPtF2& y) { return x.coords_ <=> y.coords_; }

 private:
  friend ProjPtF2 projectivize(const F2Vec& v);
  explicit ProjPtF2(F2Vec v) : coords_(std::move(v)) {}
  F2Vec coords_;
};

/// Throws ZeroVector for v = 0.
ProjPtF2 projectivize(const F2Vec& v);

/// All 2^n - 1 points of P^{n-1}(F_2), in increasing bit-mask order.
std::vector<ProjPtF2> all_points(std::size_t n);

/// r x c matrix over F_2 stored as bit-packed rows.
class MatF2 {
 public:
  MatF2() = default;
  MatF2(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, F2Vec(cols)) {}
  static MatF2 from_rows(std::size_t cols, std::vector<F2Vec> rows);
  static MatF2 identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const F2Vec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<F2Vec>& row_vectors() const { return rows_; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }
  void append_row(const F2Vec& v);

  std::size_t rank() const;
  MatF2 transpose() const;

  friend F2Vec operator*(const MatF2& m, const F2Vec& v);
  friend MatF2 operator*(const MatF2& a, const MatF2& b);
  friend bool operator==(const MatF2&, const MatF2&) = default;

  /// One row per line, "1010".
  std::string to_string() const;
  std::vector<std::string> row_strings() const;

 private:
  std::size_t cols_ = 0;
  std::vector<F2Vec> rows_;
};

struct RankReport {
  std::size_t rank = 0;
  /// The rows are linearly independent, i.e. the map F_2^r -> F_2^g they define is injective.
  bool injective = false;
};

RankReport rank_and_injectivity(const MatF2& m);

/// Calls visit(combination, mask) once for every nonzero mask over the r rows, where combination
/// is the XOR of the selected rows. Masks arrive in binary-reflected Gray-code order. Requires r <= 62.
void for_each_row_combination(const MatF2& m,
                              const std::function<void(const F2Vec&, std::uint64_t)>& visit);

}  // namespace sym2chab
