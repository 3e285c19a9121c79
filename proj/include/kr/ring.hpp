#pragma once

// Exact arithmetic in K = Q(zeta_N)[y]/(y^m - p), p prime. y^m - p is
// Eisenstein, so K is a field; y is a uniformiser at the prime above p where
// zeta_N reduces to a fixed primitive N-th root of unity in F_p (this needs
// p = 1 mod N). N = 1 gives Q[y]/(y^m - p); m = 1 as well gives Q.

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "kr/weyl.hpp"

namespace kr {

struct ScalarRing {
  long p = 2;
  int m = 1;
  int cyclotomic = 1;     ///< N
  long zeta_residue = 1;  ///< image of zeta_N in F_p

  ScalarRing() = default;
  /// Throws std::invalid_argument unless p is prime, m >= 1, N >= 1 and
  /// p = 1 mod N.
  ScalarRing(long p, int m, int cyclotomic = 1);

  /// phi(N): the degree of zeta_N over Q.
  std::size_t zeta_degree() const;
  std::size_t dimension() const { return zeta_degree() * static_cast<std::size_t>(m); }

  friend bool operator==(const ScalarRing&, const ScalarRing&) = default;
};

class RingElem {
public:
  RingElem() = default;
  RingElem(const ScalarRing& ring, long value);
  RingElem(const ScalarRing& ring, const Rational& value);
  /// Coefficients of 1, y, y^2, ...; powers y^m and above are reduced.
  RingElem(const ScalarRing& ring, std::vector<Rational> coeffs);
  /// by_zeta[a] holds the y-coefficients of zeta^a; powers of zeta at or
  /// above phi(N) are reduced as well.
  RingElem(const ScalarRing& ring, const std::vector<std::vector<Rational>>& by_zeta);

  static RingElem generator(const ScalarRing& ring);
  static RingElem zeta(const ScalarRing& ring);

  const ScalarRing& ring() const { return ring_; }
  /// Coefficient of zeta^a y^b at index a * m + b.
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  /// All coefficients have denominators prime to p.
  bool is_integral() const;
  /// Residue in F_p (y -> 0, zeta -> zeta_residue). Throws if not integral.
  long residue() const;
  RingElem inverse() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator/=(const RingElem& o);
  RingElem operator-() const;

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator/(RingElem a, const RingElem& b) { return a /= b; }
  friend bool operator==(const RingElem& a, const RingElem& b);

  std::string to_string() const;

private:
  void check_ring(const RingElem& o) const;

  ScalarRing ring_;
  std::vector<Rational> c_ = std::vector<Rational>(1);
};

/// Polynomial in T over K, coefficients from degree 0 upward, no trailing zeros.
class RingPoly {
public:
  explicit RingPoly(const ScalarRing& ring) : ring_(ring) {}
  RingPoly(const ScalarRing& ring, std::vector<RingElem> coeffs);

  static RingPoly one(const ScalarRing& ring);
  /// T - a
  static RingPoly linear(const RingElem& a);
  /// T^s - c
  static RingPoly binomial(std::size_t s, const RingElem& c);

  const ScalarRing& ring() const { return ring_; }
  const std::vector<RingElem>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  RingElem coeff(std::size_t k) const;

  friend RingPoly operator*(const RingPoly& a, const RingPoly& b);
  friend bool operator==(const RingPoly& a, const RingPoly& b);

  std::string to_string() const;

private:
  void trim();

  ScalarRing ring_;
  std::vector<RingElem> c_;
};

class RingMatrix {
public:
  RingMatrix() = default;
  RingMatrix(const ScalarRing& ring, std::size_t rows, std::size_t cols);

  static RingMatrix identity(const ScalarRing& ring, std::size_t n);
  static RingMatrix block_diagonal(const ScalarRing& ring, const std::vector<RingMatrix>& blocks);

  const ScalarRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RingElem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const RingElem& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RingMatrix transpose() const;
  RingMatrix rows_range(std::size_t begin, std::size_t end) const;
  bool is_zero() const;

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator*(const RingElem& s, const RingMatrix& a);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

private:
  ScalarRing ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElem> a_;
};

/// Matrices over F_p, entries in [0, p).
struct ModMatrix {
  long p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long> a;

  ModMatrix() = default;
  ModMatrix(long p, std::size_t rows, std::size_t cols) : p(p), rows(rows), cols(cols), a(rows * cols, 0) {}

  long& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  long operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
std::size_t rank(const ModMatrix& a);

// ---------------------------------------------------------------------------
// Linear algebra over K

/// Column basis of the right kernel, in reduced form.
RingMatrix kernel(const RingMatrix& a);
std::size_t rank(const RingMatrix& a);
/// Solve Y B = Z. Returns false if inconsistent; throws std::invalid_argument
/// if Y does not have full column rank.
bool solve_full_column_rank(const RingMatrix& y, const RingMatrix& z, RingMatrix& b);
/// Inverse of a square matrix, or false if singular.
bool invert(const RingMatrix& a, RingMatrix& inv);

/// det(T - A), exact.
RingPoly char_poly(const RingMatrix& a);

/// Evaluate a polynomial at a square matrix.
RingMatrix evaluate(const RingPoly& f, const RingMatrix& a);

// ---------------------------------------------------------------------------
// JSON: ring elements as y-coefficient lists, or for N > 1 as lists of
// y-coefficient lists indexed by the power of zeta; rationals as integers
// or "a/b".

Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& q);
RingElem ring_elem_from_json(const ScalarRing& ring, const nlohmann::json& j);
nlohmann::json to_json_value(const RingElem& a);
RingPoly ring_poly_from_json(const ScalarRing& ring, const nlohmann::json& j);
nlohmann::json to_json_value(const RingPoly& f);
RingMatrix ring_matrix_from_json(const ScalarRing& ring, const nlohmann::json& j, std::size_t cols_if_empty = 0);
nlohmann::json to_json_value(const RingMatrix& m);

}  // namespace kr
