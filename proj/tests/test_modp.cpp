#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "sym2chab/modp.hpp"

using namespace sym2chab;

namespace {

// Span size by enumerating every subset of rows.
std::size_t span_size(const std::vector<std::uint32_t>& rows) {
  std::set<std::uint32_t> span;
  for (std::uint32_t mask = 0; mask < (1U << rows.size()); ++mask) {
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (mask >> i & 1U) acc ^= rows[i];
    span.insert(acc);
  }
  return span.size();
}

F2Vec vec_of(std::uint32_t bits, std::size_t n) {
  F2Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, bits >> i & 1U);
  return v;
}

}  // namespace

TEST_CASE("F4 tables") {
  CHECK(f4_table_check().ok());
  CHECK(F4::Alpha * F4::Alpha == F4::AlphaPlusOne);
  CHECK(F4::Alpha * F4::AlphaPlusOne == F4::One);
  CHECK(F4::Alpha + F4::AlphaPlusOne == F4::One);
  CHECK(frobenius(F4::Alpha) == F4::AlphaPlusOne);
  CHECK(in_f2(F4::One));
  CHECK_FALSE(in_f2(F4::Alpha));
  for (F4 x : kF4All) {
    CHECK(x + x == F4::Zero);
    CHECK(frobenius(frobenius(x)) == x);
  }
}

TEST_CASE("F2Vec basics") {
  const F2Vec v = F2Vec::parse("1011");
  CHECK(v.size() == 4);
  CHECK(v.weight() == 3);
  CHECK(v.to_string() == "1011");
  CHECK(v.leading_index() == 0);
  CHECK(F2Vec(5).leading_index() == 5);
  CHECK((v ^ v).is_zero());
  CHECK(dot(v, F2Vec::parse("1100")));
  CHECK_FALSE(dot(v, F2Vec::parse("1110")));
  CHECK_THROWS_AS(F2Vec::parse("10a1"), ParseError);
  const F2Vec wide = F2Vec::unit(130, 129);
  CHECK(wide.get(129));
  CHECK(wide.weight() == 1);
}

TEST_CASE("projective points") {
  CHECK(projectivize(F2Vec::parse("101")).to_string() == "(1:0:1)");
  CHECK_THROWS_AS(projectivize(F2Vec(3)), ZeroVector);
  const auto plane = all_points(3);
  CHECK(plane.size() == 7);
  CHECK(std::set<ProjPtF2>(plane.begin(), plane.end()).size() == 7);
}

TEST_CASE("rank agrees with brute-force span size") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t r = rng() % 7;
    std::vector<std::uint32_t> raw;
    MatF2 m(0, n);
    for (std::size_t i = 0; i < r; ++i) {
      raw.push_back(rng() & ((1U << n) - 1));
      m.append_row(vec_of(raw.back(), n));
    }
    const std::size_t span = span_size(raw);
    CHECK((std::size_t{1} << m.rank()) == span);
    const RankReport rep = rank_and_injectivity(m);
    CHECK(rep.rank == m.rank());
    CHECK(rep.injective == (span == (std::size_t{1} << r)));
    CHECK(m.transpose().rank() == m.rank());
  }
}

TEST_CASE("matrix products") {
  const MatF2 a = MatF2::from_rows(3, {F2Vec::parse("110"), F2Vec::parse("011")});
  const MatF2 i3 = MatF2::identity(3);
  CHECK(a * i3 == a);
  CHECK((a * F2Vec::parse("111")).to_string() == "00");
  CHECK((a * F2Vec::parse("100")).to_string() == "10");
  CHECK((a * a.transpose()).to_string() == "01\n10\n");
  CHECK_THROWS_AS(a * F2Vec(2), DimensionMismatch);
}

TEST_CASE("row combinations in Gray-code order") {
  const MatF2 m = MatF2::from_rows(4, {F2Vec::parse("1000"), F2Vec::parse("0110"), F2Vec::parse("0011")});
  std::set<std::uint64_t> masks;
  std::uint64_t previous = 0;
  for_each_row_combination(m, [&](const F2Vec& combo, std::uint64_t mask) {
    masks.insert(mask);
    F2Vec expect(4);
    for (std::size_t i = 0; i < 3; ++i)
      if (mask >> i & 1U) expect ^= m.row(i);
    CHECK(combo == expect);
    CHECK(__builtin_popcountll(mask ^ previous) == 1);
    previous = mask;
  });
  CHECK(masks.size() == 7);
  CHECK(masks.count(0) == 0);
}
