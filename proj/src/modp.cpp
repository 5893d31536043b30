#include "sym2chab/modp.hpp"

#include <algorithm>
#include <bit>

namespace sym2chab {

namespace {

constexpr std::uint8_t kMul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},  // alpha^2 = alpha + 1, alpha(alpha + 1) = 1
    {0, 3, 1, 2},
};

// Reference product: multiply the bit polynomials, then reduce by alpha^2 = alpha + 1.
unsigned poly_mul(unsigned x, unsigned y) {
  unsigned p = 0;
  for (int i = 0; i < 2; ++i)
    if ((y >> i) & 1U) p ^= x << i;
  if (p & 4U) p ^= 0b111;
  return p;
}

}  // namespace

F4 operator+(F4 x, F4 y) { return static_cast<F4>(static_cast<unsigned>(x) ^ static_cast<unsigned>(y)); }

F4 operator*(F4 x, F4 y) { return static_cast<F4>(kMul[static_cast<unsigned>(x)][static_cast<unsigned>(y)]); }

bool in_f2(F4 x) { return x == F4::Zero || x == F4::One; }

std::string to_string(F4 x) {
  switch (x) {
    case F4::Zero: return "0";
    case F4::One: return "1";
    case F4::Alpha: return "a";
    case F4::AlphaPlusOne: return "a+1";
  }
  return "?";
}

F4TableReport f4_table_check() {
  F4TableReport report;
  for (unsigned x = 0; x < 4; ++x) {
    for (unsigned y = 0; y < 4; ++y) {
      const auto fx = static_cast<F4>(x);
      const auto fy = static_cast<F4>(y);
      ++report.products_checked;
      if (static_cast<unsigned>(fx * fy) != poly_mul(x, y))
        report.failures.push_back(to_string(fx) + "*" + to_string(fy));
      ++report.sums_checked;
      if (static_cast<unsigned>(fx + fy) != (x ^ y))
        report.failures.push_back(to_string(fx) + "+" + to_string(fy));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

F2Vec F2Vec::unit(std::size_t length, std::size_t index) {
  F2Vec v(length);
  v.set(index, true);
  return v;
}

F2Vec F2Vec::parse(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty bit string");
  F2Vec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw ParseError("bit string may only contain 0 and 1: '" + std::string(bits) + "'");
  }
  return v;
}

void F2Vec::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

bool F2Vec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int F2Vec::weight() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::size_t F2Vec::leading_index() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return length_;
}

F2Vec& F2Vec::operator^=(const F2Vec& other) {
  if (other.length_ != length_) throw DimensionMismatch("F_2 vectors of different lengths");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

bool dot(const F2Vec& x, const F2Vec& y) {
  if (x.length_ != y.length_) throw DimensionMismatch("F_2 vectors of different lengths");
  unsigned parity = 0;
  for (std::size_t k = 0; k < x.words_.size(); ++k) parity ^= std::popcount(x.words_[k] & y.words_[k]) & 1U;
  return parity != 0;
}

std::string F2Vec::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::strong_ordering operator<=>(const F2Vec& x, const F2Vec& y) {
  if (auto c = x.length_ <=> y.length_; c != 0) return c;
  // Lexicographic on the printed string, so sorted output reads naturally.
  for (std::size_t i = 0; i < x.length_; ++i)
    if (x.get(i) != y.get(i)) return x.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string ProjPtF2::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += coords_.get(i) ? '1' : '0';
  }
  return s + ")";
}

ProjPtF2 projectivize(const F2Vec& v) {
  if (v.is_zero()) throw ZeroVector("cannot projectivize the zero vector");
  return ProjPtF2(v);
}

std::vector<ProjPtF2> all_points(std::size_t n) {
  if (n == 0 || n > 24) throw DimensionMismatch("point enumeration supports 1 <= n <= 24");
  std::vector<ProjPtF2> pts;
  pts.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    F2Vec v(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) v.set(i, true);
    pts.push_back(projectivize(v));
  }
  return pts;
}

// ---------------------------------------------------------------------------

MatF2 MatF2::from_rows(std::size_t cols, std::vector<F2Vec> rows) {
  for (const F2Vec& r : rows)
    if (r.size() != cols) throw DimensionMismatch("row length does not match column count");
  MatF2 m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

MatF2 MatF2::identity(std::size_t n) {
  MatF2 m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void MatF2::append_row(const F2Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
  rows_.push_back(v);
}

std::size_t MatF2::rank() const {
  std::vector<F2Vec> work = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < work.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < work.size() && !work[pivot].get(col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    for (std::size_t r = rank + 1; r < work.size(); ++r)
      if (work[r].get(col)) work[r] ^= work[rank];
    ++rank;
  }
  return rank;
}

MatF2 MatF2::transpose() const {
  MatF2 t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

F2Vec operator*(const MatF2& m, const F2Vec& v) {
  if (v.size() != m.cols_) throw DimensionMismatch("matrix-vector size mismatch");
  F2Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, dot(m.rows_[i], v));
  return out;
}

MatF2 operator*(const MatF2& a, const MatF2& b) {
  if (a.cols_ != b.rows()) throw DimensionMismatch("matrix product size mismatch");
  MatF2 out(a.rows(), b.cols_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a.get(i, k)) out.rows_[i] ^= b.rows_[k];
  return out;
}

std::vector<std::string> MatF2::row_strings() const {
  std::vector<std::string> out;
  for (const F2Vec& r : rows_) out.push_back(r.to_string());
  return out;
}

std::string MatF2::to_string() const {
  std::string s;
  for (const F2Vec& r : rows_) s += r.to_string() + "\n";
  return s;
}

RankReport rank_and_injectivity(const MatF2& m) {
  RankReport report;
  report.rank = m.rank();
  report.injective = report.rank == m.rows();
  return report;
}

void for_each_row_combination(const MatF2& m,
                              const std::function<void(const F2Vec&, std::uint64_t)>& visit) {
  const std::size_t r = m.rows();
  if (r > 62) throw RankTooLarge("row-space enumeration limited to 62 rows");
  // Gray-code walk: each step flips one row, so the running XOR costs one vector update.
  F2Vec acc(m.cols());
  std::uint64_t mask = 0;
  const std::uint64_t count = std::uint64_t{1} << r;
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    acc ^= m.row(bit);
    mask ^= std::uint64_t{1} << bit;
    visit(acc, mask);
  }
}

}  // namespace sym2chab
