#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "doctest.h"
#include "kr/ring.hpp"

using namespace kr;

namespace {

// schoolbook product in Q[y], then y^m -> p
std::vector<Rational> naive_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, long p, int m) {
  std::vector<Rational> full(a.size() + b.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) full[i + j] += a[i] * b[j];
  for (std::size_t k = full.size(); k-- > static_cast<std::size_t>(m);) {
    full[k - static_cast<std::size_t>(m)] += full[k] * p;
    full[k] = 0;
  }
  full.resize(static_cast<std::size_t>(m));
  return full;
}

RingElem random_elem(const ScalarRing& ring, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(ring.m));
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return RingElem(ring, c);
}

// det by permutation expansion
RingElem leibniz_det(const RingMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RingElem total(a.ring(), 0);
  do {
    RingElem term(a.ring(), 1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

RingElem horner(const RingPoly& f, const RingElem& t) {
  RingElem acc(f.ring(), 0);
  for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * t + f.coeffs()[k];
  return acc;
}

RingMatrix random_matrix(const ScalarRing& ring, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  RingMatrix a(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_elem(ring, rng);
  return a;
}

}  // namespace

TEST_CASE("scalar ring validation") {
  CHECK_NOTHROW(ScalarRing(5, 3));
  CHECK_THROWS_AS(ScalarRing(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(ScalarRing(5, 0), std::invalid_argument);
}

TEST_CASE("arithmetic in Q[y]/(y^m - p)") {
  const ScalarRing ring(5, 3);
  const RingElem y = RingElem::generator(ring);
  CHECK(y * y * y == RingElem(ring, 5));
  CHECK((y * y).coeffs() == std::vector<Rational>{0, 0, 1});
  CHECK(RingElem(ring, std::vector<Rational>{0, 0, 0, 1}) == RingElem(ring, 5));
  CHECK(y.inverse() == RingElem(ring, std::vector<Rational>{0, 0, Rational(1, 5)}));
  CHECK_FALSE(y.inverse().is_integral());
  CHECK_THROWS_AS(RingElem(ring, 0).inverse(), std::domain_error);

  std::mt19937 rng(11);
  for (int m = 1; m <= 4; ++m) {
    const ScalarRing r(3, m);
    for (int trial = 0; trial < 50; ++trial) {
      const RingElem a = random_elem(r, rng), b = random_elem(r, rng);
      CHECK((a * b).coeffs() == naive_mul(a.coeffs(), b.coeffs(), 3, m));
      CHECK(a + b - b == a);
      if (!b.is_zero()) {
        CHECK(a / b * b == a);
        CHECK(b * b.inverse() == RingElem(r, 1));
      }
    }
  }
  CHECK_THROWS(RingElem(ring, 1) + RingElem(ScalarRing(5, 2), 1));
}

TEST_CASE("integrality and residues") {
  const ScalarRing ring(5, 2);
  CHECK(RingElem(ring, Rational(3, 2)).is_integral());
  CHECK(RingElem(ring, Rational(3, 2)).residue() == 4);
  CHECK(RingElem(ring, std::vector<Rational>{7, 1}).residue() == 2);
  CHECK(RingElem(ring, -1).residue() == 4);
  CHECK_FALSE(RingElem(ring, Rational(1, 5)).is_integral());
  CHECK_THROWS_AS(RingElem(ring, Rational(1, 5)).residue(), std::domain_error);
}

TEST_CASE("characteristic polynomials") {
  const ScalarRing ring(5, 3);
  const RingElem y = RingElem::generator(ring);
  RingMatrix companion(ring, 2, 2);
  companion(0, 1) = y;
  companion(1, 0) = RingElem(ring, 1);
  const RingPoly target = RingPoly::binomial(2, y);
  CHECK(char_poly(companion) == target);

  RingMatrix one(ring, 1, 1);
  one(0, 0) = y;
  CHECK(char_poly(one) == RingPoly::linear(y));
  CHECK(char_poly(RingMatrix(ring, 0, 0)) == RingPoly::one(ring));

  const RingMatrix both = RingMatrix::block_diagonal(ring, {companion, one});
  CHECK(char_poly(both) == target * RingPoly::linear(y));
  CHECK(evaluate(char_poly(both), both).is_zero());

  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const ScalarRing r(3, 2);
      const RingMatrix a = random_matrix(r, n, n, rng);
      const RingPoly f = char_poly(a);
      CHECK(f.degree() == static_cast<long>(n));
      CHECK(evaluate(f, a).is_zero());
      for (long t = -2; t <= 2; ++t) {
        const RingElem tt(r, t);
        CHECK(horner(f, tt) == leibniz_det(tt * RingMatrix::identity(r, n) - a));
      }
    }
}

TEST_CASE("kernels, ranks and solving") {
  const ScalarRing ring(5, 2);
  const RingElem y = RingElem::generator(ring);
  RingMatrix a(ring, 2, 3);
  a(0, 0) = RingElem(ring, 1);
  a(0, 1) = y;
  a(1, 2) = RingElem(ring, 1);
  const RingMatrix k = kernel(a);
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK(rank(a) == 2);
  CHECK(rank(RingMatrix::identity(ring, 3)) == 3);
  CHECK(kernel(RingMatrix::identity(ring, 3)).cols() == 0);

  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const RingMatrix yy = random_matrix(ring, 4, 2, rng);
    const RingMatrix b = random_matrix(ring, 2, 3, rng);
    RingMatrix out;
    REQUIRE(rank(yy) == 2);
    CHECK(solve_full_column_rank(yy, yy * b, out));
    CHECK(out == b);
    const RingMatrix sq = random_matrix(ring, 3, 3, rng);
    RingMatrix inv;
    REQUIRE(invert(sq, inv));
    CHECK(sq * inv == RingMatrix::identity(ring, 3));
  }
  RingMatrix col(ring, 2, 1);
  col(0, 0) = RingElem(ring, 1);
  RingMatrix rhs(ring, 2, 1);
  rhs(1, 0) = RingElem(ring, 1);
  RingMatrix out;
  CHECK_FALSE(solve_full_column_rank(col, rhs, out));
  RingMatrix inv;
  CHECK_FALSE(invert(RingMatrix(ring, 2, 2), inv));
}

TEST_CASE("residue field ranks") {
  ModMatrix a(5, 2, 3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  CHECK(rank(a) == 1);
  a(1, 2) = 3;
  CHECK(rank(a) == 2);
  ModMatrix b(5, 3, 1);
  b(0, 0) = 4;
  b(1, 0) = 1;
  const ModMatrix c = a * b;
  CHECK(c(0, 0) == (4 + 2) % 5);
  CHECK(c(1, 0) == (8 + 4) % 5);
}

TEST_CASE("ring json") {
  const ScalarRing ring(5, 3);
  const RingElem a(ring, std::vector<Rational>{Rational(1, 2), 0, 3});
  CHECK(to_json_value(a) == nlohmann::json{"1/2", 0, 3});
  CHECK(ring_elem_from_json(ring, to_json_value(a)) == a);
  CHECK(ring_elem_from_json(ring, 7) == RingElem(ring, 7));
  CHECK(rational_from_json("-3/4") == Rational(-3, 4));
  CHECK_THROWS(rational_from_json(1.5));
  const RingPoly f = RingPoly::binomial(2, RingElem::generator(ring));
  CHECK(ring_poly_from_json(ring, to_json_value(f)) == f);
  RingMatrix m(ring, 2, 2);
  m(0, 1) = a;
  CHECK(ring_matrix_from_json(ring, to_json_value(m)) == m);
  CHECK(ring_matrix_from_json(ring, nlohmann::json::array(), 0).rows() == 0);
}

namespace {

// zeta -> exp(2 pi i / N), y -> p^(1/m)
std::complex<double> embed(const RingElem& a) {
  const ScalarRing& r = a.ring();
  const std::complex<double> z = std::polar(1.0, 2 * M_PI / r.cyclotomic);
  const double y = std::pow(static_cast<double>(r.p), 1.0 / r.m);
  std::complex<double> acc = 0;
  const std::size_t m = static_cast<std::size_t>(r.m);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k)
    acc += a.coeffs()[k].get_d() * std::pow(z, static_cast<double>(k / m)) * std::pow(y, static_cast<double>(k % m));
  return acc;
}

RingElem random_cyclotomic(const ScalarRing& ring, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  std::vector<std::vector<Rational>> rows(ring.zeta_degree(), std::vector<Rational>(static_cast<std::size_t>(ring.m)));
  for (auto& row : rows)
    for (auto& x : row) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
  return RingElem(ring, rows);
}

}  // namespace

TEST_CASE("cyclotomic ring validation") {
  CHECK_NOTHROW(ScalarRing(7, 3, 3));
  CHECK_NOTHROW(ScalarRing(13, 2, 12));
  CHECK_THROWS_AS(ScalarRing(5, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(ScalarRing(7, 1, 0), std::invalid_argument);
  CHECK(ScalarRing(7, 3, 3).zeta_degree() == 2);
  CHECK(ScalarRing(13, 2, 12).zeta_degree() == 4);
  CHECK(ScalarRing(7, 3, 3).dimension() == 6);
  CHECK(ScalarRing(5, 2).zeta_degree() == 1);
}

TEST_CASE("roots of unity") {
  for (auto [p, n] : {std::pair{7L, 3}, {5L, 4}, {7L, 6}, {11L, 5}, {13L, 12}}) {
    const ScalarRing ring(p, 2, n);
    const RingElem z = RingElem::zeta(ring);
    RingElem power(ring, 1), sum(ring, 0);
    long residue_power = 1;
    for (int k = 1; k <= n; ++k) {
      sum += power;
      power *= z;
      residue_power = residue_power * ring.zeta_residue % p;
      CHECK((power == RingElem(ring, 1)) == (k == n));
      CHECK((residue_power == 1) == (k == n));
      CHECK(power.residue() == residue_power);
    }
    CHECK(sum.is_zero());
  }
}

TEST_CASE("cyclotomic arithmetic matches the complex embedding") {
  std::mt19937 rng(17);
  for (auto [p, m, n] : {std::tuple{7L, 3, 3}, {5L, 2, 4}, {7L, 2, 6}, {11L, 1, 5}}) {
    const ScalarRing ring(p, m, n);
    for (int trial = 0; trial < 30; ++trial) {
      const RingElem a = random_cyclotomic(ring, rng), b = random_cyclotomic(ring, rng);
      CHECK(std::abs(embed(a * b) - embed(a) * embed(b)) < 1e-6 * (1 + std::abs(embed(a) * embed(b))));
      CHECK(std::abs(embed(a + b) - embed(a) - embed(b)) < 1e-9 * (1 + std::abs(embed(a)) + std::abs(embed(b))));
      if (!b.is_zero()) {
        CHECK(a / b * b == a);
        CHECK(std::abs(embed(b.inverse()) * embed(b) - 1.0) < 1e-6);
      }
      if (a.is_integral() && b.is_integral())
        CHECK((a * b).residue() == a.residue() * b.residue() % p);
    }
  }
}

TEST_CASE("cyclotomic json") {
  const ScalarRing ring(7, 3, 3);
  const RingElem a = RingElem::zeta(ring) * RingElem::generator(ring) + RingElem(ring, Rational(1, 2));
  const nlohmann::json j = to_json_value(a);
  CHECK(j.is_array());
  CHECK(j[0].is_array());
  CHECK(ring_elem_from_json(ring, j) == a);
  CHECK(ring_elem_from_json(ring, to_json_value(RingElem(ring, 4))) == RingElem(ring, 4));
}
