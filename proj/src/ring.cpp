#include "kr/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kr {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

long mod_p(const mpz_class& z, long p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

long mod_inverse(long a, long p) {
  long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  return ((t % p) + p) % p;
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<RingElem>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const RingElem inv = rows[r][c].inverse();
    for (RingElem& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const RingElem f = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Phi_N with integer coefficients, lowest degree first.
const std::vector<long>& cyclotomic_poly(int n) {
  thread_local std::map<int, std::vector<long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& den = cyclotomic_poly(d);
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      quot[k] = num[k + den.size() - 1];
      for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= quot[k] * den[i];
    }
    num = std::move(quot);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

long pow_mod(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

long primitive_root_of_unity(int n, long p) {
  if (n == 1) return 1;
  for (long g = 2; g < p; ++g) {
    if (pow_mod(g, n, p) != 1) continue;
    bool primitive = true;
    for (int q = 2; q <= n && primitive; ++q) {
      bool prime = true;
      for (int t = 2; t * t <= q; ++t) prime = prime && q % t != 0;
      if (prime && n % q == 0 && pow_mod(g, n / q, p) == 1) primitive = false;
    }
    if (primitive) return g;
  }
  throw std::logic_error("primitive_root_of_unity: none found");
}

/// Flatten rows[a][b] (coefficient of zeta^a y^b), reducing y^m = p and
/// Phi_N(zeta) = 0.
std::vector<Rational> reduce_terms(const ScalarRing& ring, std::vector<std::vector<Rational>> rows) {
  const std::size_t m = static_cast<std::size_t>(ring.m);
  const std::size_t phi = ring.zeta_degree();
  const std::vector<long>& cyc = cyclotomic_poly(ring.cyclotomic);
  for (auto& row : rows) {
    for (std::size_t b = row.size(); b-- > m;) {
      if (row[b] == 0) continue;
      row[b - m] += row[b] * ring.p;
      row[b] = 0;
    }
    row.resize(m, Rational(0));
  }
  for (std::size_t a = rows.size(); a-- > phi;) {
    for (std::size_t i = 0; i < phi; ++i) {
      if (cyc[i] == 0) continue;
      for (std::size_t b = 0; b < m; ++b) rows[a - phi + i][b] -= rows[a][b] * cyc[i];
    }
  }
  rows.resize(phi, std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> out;
  out.reserve(phi * m);
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<std::vector<RingElem>> to_rows(const RingMatrix& a) {
  std::vector<std::vector<RingElem>> rows(a.rows(), std::vector<RingElem>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return rows;
}

}  // namespace

ScalarRing::ScalarRing(long p_, int m_, int cyclotomic_) : p(p_), m(m_), cyclotomic(cyclotomic_) {
  if (!is_prime(p)) throw std::invalid_argument("ScalarRing: p must be prime");
  if (m < 1) throw std::invalid_argument("ScalarRing: m must be positive");
  if (cyclotomic < 1) throw std::invalid_argument("ScalarRing: cyclotomic order must be positive");
  if ((p - 1) % cyclotomic != 0) throw std::invalid_argument("ScalarRing: need p = 1 mod N for zeta_N to reduce into F_p");
  zeta_residue = primitive_root_of_unity(cyclotomic, p);
}

std::size_t ScalarRing::zeta_degree() const { return cyclotomic_poly(cyclotomic).size() - 1; }

// ---------------------------------------------------------------------------
// RingElem

RingElem::RingElem(const ScalarRing& ring, long value) : RingElem(ring, Rational(value)) {}

RingElem::RingElem(const ScalarRing& ring, const Rational& value) : ring_(ring), c_(ring.dimension(), Rational(0)) {
  c_[0] = value;
}

RingElem::RingElem(const ScalarRing& ring, std::vector<Rational> coeffs)
    : ring_(ring), c_(reduce_terms(ring, {std::move(coeffs)})) {}

RingElem::RingElem(const ScalarRing& ring, const std::vector<std::vector<Rational>>& by_zeta)
    : ring_(ring), c_(reduce_terms(ring, by_zeta)) {}

RingElem RingElem::generator(const ScalarRing& ring) {
  std::vector<Rational> c(2, Rational(0));
  c[1] = 1;
  return RingElem(ring, std::move(c));
}

RingElem RingElem::zeta(const ScalarRing& ring) {
  return RingElem(ring, std::vector<std::vector<Rational>>{{Rational(0)}, {Rational(1)}});
}

bool RingElem::is_zero() const {
  for (const Rational& q : c_)
    if (q != 0) return false;
  return true;
}

bool RingElem::is_integral() const {
  for (const Rational& q : c_)
    if (mod_p(q.get_den(), ring_.p) == 0) return false;
  return true;
}

long RingElem::residue() const {
  if (!is_integral()) throw std::domain_error("residue: element is not integral");
  const long p = ring_.p;
  const std::size_t m = static_cast<std::size_t>(ring_.m);
  long out = 0, zeta_power = 1;
  for (std::size_t a = 0; a < ring_.zeta_degree(); ++a) {
    const Rational& q = c_[a * m];
    const long term = mod_p(q.get_num(), p) * mod_inverse(mod_p(q.get_den(), p), p) % p;
    out = (out + term * zeta_power) % p;
    zeta_power = zeta_power * ring_.zeta_residue % p;
  }
  return out;
}

RingElem RingElem::inverse() const {
  if (is_zero()) throw std::domain_error("RingElem: division by zero");
  const std::size_t dim = c_.size();
  // Solve (multiplication by *this) x = 1 over Q.
  std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(dim + 1, Rational(0)));
  for (std::size_t j = 0; j < dim; ++j) {
    RingElem basis(ring_, 0);
    basis.c_[j] = 1;
    const RingElem col = *this * basis;
    for (std::size_t i = 0; i < dim; ++i) aug[i][j] = col.c_[i];
  }
  aug[0][dim] = 1;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t sel = c;
    while (sel < dim && aug[sel][c] == 0) ++sel;
    if (sel == dim) throw std::logic_error("RingElem::inverse: singular multiplication map");
    std::swap(aug[c], aug[sel]);
    const Rational piv = aug[c][c];
    for (Rational& x : aug[c]) x /= piv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t k = c; k <= dim; ++k) aug[i][k] -= f * aug[c][k];
    }
  }
  RingElem out(ring_, 0);
  for (std::size_t i = 0; i < dim; ++i) out.c_[i] = aug[i][dim];
  return out;
}

void RingElem::check_ring(const RingElem& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("RingElem: mixed rings");
}

RingElem& RingElem::operator+=(const RingElem& o) {
  check_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  check_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  check_ring(o);
  const std::size_t m = static_cast<std::size_t>(ring_.m);
  const std::size_t phi = ring_.zeta_degree();
  if (phi == 1) {
    std::vector<Rational> out(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (o.c_[j] == 0) continue;
        const std::size_t k = i + j;
        if (k < m) {
          out[k] += c_[i] * o.c_[j];
        } else {
          out[k - m] += c_[i] * o.c_[j] * ring_.p;
        }
      }
    }
    c_ = std::move(out);
    return *this;
  }
  std::vector<std::vector<Rational>> rows(2 * phi - 1, std::vector<Rational>(2 * m - 1, Rational(0)));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      rows[i / m + j / m][i % m + j % m] += c_[i] * o.c_[j];
    }
  }
  c_ = reduce_terms(ring_, std::move(rows));
  return *this;
}

RingElem& RingElem::operator/=(const RingElem& o) { return *this *= o.inverse(); }

RingElem RingElem::operator-() const {
  RingElem out = *this;
  for (Rational& q : out.c_) q = -q;
  return out;
}

bool operator==(const RingElem& a, const RingElem& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

std::string RingElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  const std::size_t m = static_cast<std::size_t>(ring_.m);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::size_t a = k / m, b = k % m;
    if (k == 0) {
      os << c_[k];
      continue;
    }
    if (c_[k] != 1) os << c_[k] << "*";
    if (a > 0) os << "z" << (a > 1 ? "^" + std::to_string(a) : "") << (b > 0 ? "*" : "");
    if (b > 0) os << "y" << (b > 1 ? "^" + std::to_string(b) : "");
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// RingPoly

RingPoly::RingPoly(const ScalarRing& ring, std::vector<RingElem> coeffs) : ring_(ring), c_(std::move(coeffs)) {
  for (const RingElem& a : c_)
    if (!(a.ring() == ring_)) throw std::invalid_argument("RingPoly: mixed rings");
  trim();
}

RingPoly RingPoly::one(const ScalarRing& ring) { return RingPoly(ring, {RingElem(ring, 1)}); }

RingPoly RingPoly::linear(const RingElem& a) { return RingPoly(a.ring(), {-a, RingElem(a.ring(), 1)}); }

RingPoly RingPoly::binomial(std::size_t s, const RingElem& c) {
  std::vector<RingElem> coeffs(s + 1, RingElem(c.ring(), 0));
  coeffs[0] = -c;
  coeffs[s] += RingElem(c.ring(), 1);
  return RingPoly(c.ring(), std::move(coeffs));
}

RingElem RingPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : RingElem(ring_, 0); }

void RingPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RingPoly operator*(const RingPoly& a, const RingPoly& b) {
  if (!(a.ring_ == b.ring_)) throw std::invalid_argument("RingPoly: mixed rings");
  if (a.c_.empty() || b.c_.empty()) return RingPoly(a.ring_);
  std::vector<RingElem> out(a.c_.size() + b.c_.size() - 1, RingElem(a.ring_, 0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return RingPoly(a.ring_, std::move(out));
}

bool operator==(const RingPoly& a, const RingPoly& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

std::string RingPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[k] == RingElem(ring_, 1);
    if (!unit || k == 0) os << "(" << c_[k].to_string() << ")";
    if (k > 0) os << (unit ? "" : "*") << "T" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RingMatrix

RingMatrix::RingMatrix(const ScalarRing& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, RingElem(ring, 0)) {}

RingMatrix RingMatrix::identity(const ScalarRing& ring, std::size_t n) {
  RingMatrix out(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = RingElem(ring, 1);
  return out;
}

RingMatrix RingMatrix::block_diagonal(const ScalarRing& ring, const std::vector<RingMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const RingMatrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  RingMatrix out(ring, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const RingMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RingMatrix RingMatrix::rows_range(std::size_t begin, std::size_t end) const {
  RingMatrix out(ring_, end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i - begin, j) = (*this)(i, j);
  return out;
}

bool RingMatrix::is_zero() const {
  for (const RingElem& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RingMatrix: dimension mismatch in product");
  RingMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RingElem& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += x * b(k, j);
      }
    }
  return out;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RingMatrix: dimension mismatch in sum");
  RingMatrix out = a;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
  return out;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RingMatrix: dimension mismatch in difference");
  RingMatrix out = a;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= b.a_[k];
  return out;
}

RingMatrix operator*(const RingElem& s, const RingMatrix& a) {
  RingMatrix out = a;
  for (RingElem& x : out.a_) x = s * x;
  return out;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

// ---------------------------------------------------------------------------
// ModMatrix

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols != b.rows || a.p != b.p) throw std::invalid_argument("ModMatrix: dimension mismatch");
  ModMatrix out(a.p, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) = (out(i, j) + a(i, k) * b(k, j)) % a.p;
  return out;
}

std::size_t rank(const ModMatrix& m) {
  ModMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t sel = r;
    while (sel < a.rows && a(sel, c) == 0) ++sel;
    if (sel == a.rows) continue;
    for (std::size_t k = 0; k < a.cols; ++k) std::swap(a(r, k), a(sel, k));
    const long inv = mod_inverse(a(r, c), a.p);
    for (std::size_t k = 0; k < a.cols; ++k) a(r, k) = a(r, k) * inv % a.p;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const long f = a(i, c);
      for (std::size_t k = 0; k < a.cols; ++k) a(i, k) = ((a(i, k) - f * a(r, k)) % a.p + a.p) % a.p;
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Linear algebra over K

RingMatrix kernel(const RingMatrix& a) {
  auto rows = to_rows(a);
  const auto pivots = rref(rows, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  RingMatrix out(a.ring(), a.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = RingElem(a.ring(), 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = -rows[r][free[k]];
  }
  return out;
}

std::size_t rank(const RingMatrix& a) {
  auto rows = to_rows(a);
  return rref(rows, a.cols()).size();
}

bool solve_full_column_rank(const RingMatrix& y, const RingMatrix& z, RingMatrix& b) {
  if (y.rows() != z.rows()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t r = y.cols();
  std::vector<std::vector<RingElem>> rows(y.rows(), std::vector<RingElem>(r + z.cols()));
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t j = 0; j < r; ++j) rows[i][j] = y(i, j);
    for (std::size_t j = 0; j < z.cols(); ++j) rows[i][r + j] = z(i, j);
  }
  const auto pivots = rref(rows, r);
  if (pivots.size() != r) throw std::invalid_argument("solve: matrix does not have full column rank");
  for (std::size_t i = r; i < rows.size(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j)
      if (!rows[i][r + j].is_zero()) return false;
  b = RingMatrix(y.ring(), r, z.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) b(i, j) = rows[i][r + j];
  return true;
}

bool invert(const RingMatrix& a, RingMatrix& inv) {
  if (a.rows() != a.cols()) return false;
  if (rank(a) != a.rows()) return false;
  return solve_full_column_rank(a, RingMatrix::identity(a.ring(), a.rows()), inv);
}

RingPoly char_poly(const RingMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const ScalarRing& ring = a.ring();
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<RingElem> c(n + 1, RingElem(ring, 0));
  c[n] = RingElem(ring, 1);
  RingMatrix m(ring, n, n);
  const RingMatrix id = RingMatrix::identity(ring, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    const RingMatrix am = a * m;
    RingElem tr(ring, 0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr * RingElem(ring, Rational(1, static_cast<long>(k)));
  }
  return RingPoly(ring, std::move(c));
}

RingMatrix evaluate(const RingPoly& f, const RingMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("evaluate: matrix not square");
  const std::size_t n = a.rows();
  RingMatrix out(a.ring(), n, n);
  const RingMatrix id = RingMatrix::identity(a.ring(), n);
  for (std::size_t k = f.coeffs().size(); k-- > 0;) out = out * a + f.coeffs()[k] * id;
  return out;
}

// ---------------------------------------------------------------------------
// JSON

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q(j.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw std::invalid_argument("expected integer or \"a/b\" rational");
}

nlohmann::json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

namespace {

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return c;
}

nlohmann::json trimmed_json(std::vector<Rational>::const_iterator begin, std::vector<Rational>::const_iterator end) {
  while (end - begin > 1 && *(end - 1) == 0) --end;
  nlohmann::json out = nlohmann::json::array();
  for (auto it = begin; it != end; ++it) out.push_back(rational_to_json(*it));
  return out;
}

}  // namespace

RingElem ring_elem_from_json(const ScalarRing& ring, const nlohmann::json& j) {
  if (!j.is_array()) return RingElem(ring, rational_from_json(j));
  if (!j.empty() && j.front().is_array()) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) rows.push_back(rationals_from_json(row));
    return RingElem(ring, rows);
  }
  return RingElem(ring, rationals_from_json(j));
}

nlohmann::json to_json_value(const RingElem& a) {
  const auto& c = a.coeffs();
  if (a.ring().cyclotomic == 1) return trimmed_json(c.begin(), c.end());
  const std::size_t m = static_cast<std::size_t>(a.ring().m);
  std::size_t rows = c.size() / m;
  auto row_zero = [&](std::size_t r) {
    return std::all_of(c.begin() + static_cast<long>(r * m), c.begin() + static_cast<long>((r + 1) * m),
                       [](const Rational& q) { return q == 0; });
  };
  while (rows > 1 && row_zero(rows - 1)) --rows;
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < rows; ++r)
    out.push_back(trimmed_json(c.begin() + static_cast<long>(r * m), c.begin() + static_cast<long>((r + 1) * m)));
  return out;
}

RingPoly ring_poly_from_json(const ScalarRing& ring, const nlohmann::json& j) {
  std::vector<RingElem> c;
  for (const auto& x : j) c.push_back(ring_elem_from_json(ring, x));
  return RingPoly(ring, std::move(c));
}

nlohmann::json to_json_value(const RingPoly& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const RingElem& a : f.coeffs()) out.push_back(to_json_value(a));
  return out;
}

RingMatrix ring_matrix_from_json(const ScalarRing& ring, const nlohmann::json& j, std::size_t cols_if_empty) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? cols_if_empty : j[0].size();
  RingMatrix out(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix rows have unequal length");
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = ring_elem_from_json(ring, j[i][c]);
  }
  return out;
}

nlohmann::json to_json_value(const RingMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json_value(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace kr
