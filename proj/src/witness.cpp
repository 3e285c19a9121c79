#include "kr/witness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kr {

namespace {

ModMatrix hconcat(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix out(a.p, a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) out(i, a.cols + j) = b(i, j);
  }
  return out;
}

RingMatrix unit_block(const ScalarRing& ring, std::size_t e, std::size_t s) {
  RingMatrix out(ring, e, s);
  for (std::size_t k = 0; k < s; ++k) out(k, k) = RingElem(ring, 1);
  return out;
}

ModMatrix reduced_unit_block_diagonal(long p, std::size_t e, const IntVec& sizes) {
  std::size_t r = 0;
  for (long s : sizes) r += static_cast<std::size_t>(s);
  ModMatrix out(p, e * sizes.size(), r);
  std::size_t col = 0;
  for (std::size_t a = 0; a < sizes.size(); ++a)
    for (long k = 0; k < sizes[a]; ++k, ++col) out(a * e + static_cast<std::size_t>(k), col) = 1;
  return out;
}

IntVec positive_sorted(const IntVec& sizes) {
  IntVec out;
  for (long s : sizes)
    if (s > 0) out.push_back(s);
  std::sort(out.rbegin(), out.rend());
  return out;
}

RingElem trace_pi_power(const ScalarRing& ring, long e, long k) {
  // Tr_{F/F_0}(pi^k) for pi^e = p: e p^{k/e} if e | k, else 0.
  if (k % e != 0) return RingElem(ring, 0);
  Rational v(e);
  const long q = k / e;
  for (long t = 0; t < std::abs(q); ++t) v = q > 0 ? Rational(v * ring.p) : Rational(v / ring.p);
  return RingElem(ring, v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Pi and the chain

RingMatrix pi_block(const ScalarRing& ring, std::size_t e) {
  if (e == 0) throw std::invalid_argument("pi_block: e must be positive");
  RingMatrix out(ring, e, e);
  for (std::size_t k = 1; k < e; ++k) out(k - 1, k) = RingElem(ring, 1);
  out(e - 1, 0) += RingElem(ring, ring.p);
  return out;
}

RingMatrix pi_matrix(const ScalarRing& ring, std::size_t e, std::size_t d, std::size_t i) {
  if (i >= d) throw std::invalid_argument("pi_matrix: chain index out of range");
  return RingMatrix::block_diagonal(ring, std::vector<RingMatrix>(d, pi_block(ring, e)));
}

RingMatrix chain_transition(const ScalarRing& ring, std::size_t e, std::size_t d, std::size_t i) {
  if (i >= d) throw std::invalid_argument("chain_transition: chain index out of range");
  std::vector<RingMatrix> blocks(d, RingMatrix::identity(ring, e));
  blocks[i] = pi_block(ring, e);
  return RingMatrix::block_diagonal(ring, blocks);
}

std::optional<RingMatrix> solve_A(const RingMatrix& m, const RingMatrix& pi) {
  if (pi.rows() != m.rows() || pi.cols() != m.rows()) throw std::invalid_argument("solve_A: dimension mismatch");
  if (rank(m) != m.cols()) throw std::invalid_argument("solve_A: M does not have full column rank");
  const RingMatrix pm = pi * m;
  RingMatrix a;
  if (!solve_full_column_rank(m, pm, a)) return std::nullopt;
  if (!(m * a == pm)) return std::nullopt;
  return a;
}

std::optional<RingMatrix> construct_M(std::size_t e, std::size_t r, const RingPoly& chi) {
  if (r > e) throw std::invalid_argument("construct_M: need r <= e");
  if (chi.degree() != static_cast<long>(r)) throw std::invalid_argument("construct_M: chi must have degree r");
  const ScalarRing& ring = chi.ring();
  const RingMatrix pi = pi_block(ring, e);
  const RingMatrix ker = kernel(evaluate(chi, pi));
  if (ker.cols() != r) return std::nullopt;
  if (r == 0) return ker;
  RingMatrix top_inv;
  if (!invert(ker.rows_range(0, r), top_inv)) return std::nullopt;
  RingMatrix m = ker * top_inv;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integral()) return std::nullopt;
  const auto a = solve_A(m, pi);
  if (!a || !(char_poly(*a) == chi)) return std::nullopt;
  return m;
}

// ---------------------------------------------------------------------------
// Lifts

std::optional<BlockModel> block_model(std::size_t e, long p, const IntVec& sizes) {
  for (long s : sizes)
    if (s < 0 || s > static_cast<long>(e)) return std::nullopt;
  const IntVec chain = positive_sorted(sizes);
  bool divisible = true;
  long g = static_cast<long>(e);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (static_cast<long>(e) % chain[k] != 0) divisible = false;
    if (k + 1 < chain.size() && chain[k] % chain[k + 1] != 0) divisible = false;
    g = std::gcd(g, chain[k]);
  }
  if (divisible) {
    // y = pi^g; the roots of T^s - pi^s are nested along the chain
    BlockModel out{ScalarRing(p, static_cast<int>(static_cast<long>(e) / g)), e, sizes, {}};
    const RingElem y = RingElem::generator(out.ring);
    for (long s : sizes) {
      if (s == 0) {
        out.targets.push_back(RingPoly::one(out.ring));
        continue;
      }
      RingElem c(out.ring, 1);
      for (long t = 0; t < s / g; ++t) c *= y;
      out.targets.push_back(RingPoly::binomial(static_cast<std::size_t>(s), c));
    }
    return out;
  }
  // y = pi and embeddings phi_j(pi) = zeta^j pi; block s uses phi_0..phi_{s-1}
  if ((p - 1) % static_cast<long>(e) != 0) return std::nullopt;
  BlockModel out{ScalarRing(p, static_cast<int>(e), static_cast<int>(e)), e, sizes, {}};
  const RingElem y = RingElem::generator(out.ring);
  const RingElem zeta = RingElem::zeta(out.ring);
  for (long s : sizes) {
    RingPoly f = RingPoly::one(out.ring);
    RingElem root = y;
    for (long j = 0; j < s; ++j, root *= zeta) f = f * RingPoly::linear(root);
    out.targets.push_back(std::move(f));
  }
  return out;
}

Witness build_block_lift(const ScalarRing& ring, std::size_t e, const std::vector<RingMatrix>& blocks, Group group) {
  if (blocks.empty()) throw std::invalid_argument("build_block_lift: no blocks");
  RingPoly chi = RingPoly::one(ring);
  for (const RingMatrix& b : blocks) {
    if (b.rows() != e) throw std::invalid_argument("build_block_lift: block must have e rows");
    if (b.cols() > e) throw std::invalid_argument("build_block_lift: block has more than e columns");
    const auto a = solve_A(b, pi_block(ring, e));
    if (!a) throw std::invalid_argument("build_block_lift: block is not pi-stable");
    chi = chi * char_poly(*a);
  }
  Witness w;
  w.ring = ring;
  w.e = e;
  w.d = blocks.size();
  w.group = group;
  w.chi = chi;
  w.m.assign(w.d, RingMatrix::block_diagonal(ring, blocks));
  return w;
}

std::optional<Witness> block_lift(const BlockModel& model, Group group) {
  std::vector<RingMatrix> blocks;
  RingPoly chi = RingPoly::one(model.ring);
  for (std::size_t a = 0; a < model.sizes.size(); ++a) {
    const auto s = static_cast<std::size_t>(model.sizes[a]);
    const auto m = construct_M(model.e, s, model.targets[a]);
    if (!m) return std::nullopt;
    blocks.push_back(*m);
    chi = chi * model.targets[a];
  }
  Witness w = build_block_lift(model.ring, model.e, blocks, group);
  w.chi = chi;
  w.m_bar = std::vector<ModMatrix>(w.d, reduced_unit_block_diagonal(model.ring.p, model.e, model.sizes));
  w.jordan = positive_sorted(model.sizes);
  return w;
}

Witness constant_lift(long p, std::size_t e, const IntVec& nu, Group group) {
  const ScalarRing ring(p, 1);
  std::vector<RingMatrix> blocks;
  for (long s : nu) {
    if (s != 0 && s != static_cast<long>(e)) throw std::invalid_argument("constant_lift: entries must be 0 or e");
    blocks.push_back(unit_block(ring, e, static_cast<std::size_t>(s)));
  }
  Witness w = build_block_lift(ring, e, blocks, group);
  w.m_bar = std::vector<ModMatrix>(w.d, reduced_unit_block_diagonal(p, e, nu));
  w.jordan = positive_sorted(nu);
  return w;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

bool check_shapes(const Witness& w, CheckResult& res) {
  if (w.m.size() != w.d) {
    res.fail("expected " + std::to_string(w.d) + " matrices, got " + std::to_string(w.m.size()));
    return false;
  }
  for (std::size_t i = 0; i < w.m.size(); ++i) {
    if (w.m[i].rows() != w.d * w.e || w.m[i].cols() != w.r()) {
      res.fail("index " + std::to_string(i) + ": matrix is not (de) x r");
      return false;
    }
  }
  return true;
}

}  // namespace

CheckResult verify_det_condition(const Witness& w) {
  CheckResult res;
  if (!check_shapes(w, res)) return res;
  if (w.chi.degree() != static_cast<long>(w.r())) res.fail("chi has degree " + std::to_string(w.chi.degree()) + ", r = " + std::to_string(w.r()));
  for (std::size_t i = 0; i < w.d; ++i) {
    std::optional<RingMatrix> a;
    try {
      a = solve_A(w.m[i], pi_matrix(w.ring, w.e, w.d, i));
    } catch (const std::invalid_argument& ex) {
      res.fail("index " + std::to_string(i) + ": " + ex.what());
      continue;
    }
    if (!a) {
      res.fail("index " + std::to_string(i) + ": span is not pi-stable");
      continue;
    }
    const RingPoly f = char_poly(*a);
    if (!(f == w.chi))
      res.fail("index " + std::to_string(i) + ": det(T - A) = " + f.to_string() + " != " + w.chi.to_string());
  }
  return res;
}

CheckResult verify_chain(const Witness& w) {
  CheckResult res;
  if (!check_shapes(w, res)) return res;
  RingMatrix cycle = RingMatrix::identity(w.ring, w.d * w.e);
  for (std::size_t i = 0; i < w.d; ++i) {
    const RingMatrix t = chain_transition(w.ring, w.e, w.d, i);
    cycle = t * cycle;
    const std::size_t next = (i + 1) % w.d;
    RingMatrix b;
    bool carried = false;
    try {
      carried = solve_full_column_rank(w.m[next], t * w.m[i], b);
    } catch (const std::invalid_argument& ex) {
      res.fail("index " + std::to_string(next) + ": " + ex.what());
      continue;
    }
    if (!carried) res.fail("index " + std::to_string(i) + ": F_" + std::to_string(i) + " not carried into F_" + std::to_string(next));
  }
  if (!(cycle == pi_matrix(w.ring, w.e, w.d, 0))) res.fail("chain cycle is not multiplication by pi");
  return res;
}

ModMatrix reduce_mod_max_ideal(const RingMatrix& m) {
  ModMatrix out(m.ring().p, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integral())
        throw std::domain_error("reduce_mod_max_ideal: entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not integral");
      out(i, j) = m(i, j).residue();
    }
  return out;
}

ModMatrix pi_bar(long p, std::size_t e, std::size_t d) {
  ModMatrix out(p, d * e, d * e);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 1; k < e; ++k) out(a * e + k - 1, a * e + k) = 1;
  return out;
}

IntVec jordan_type(const ModMatrix& m_bar, const ModMatrix& pi) {
  const std::size_t r = m_bar.cols;
  if (rank(m_bar) != r) throw std::invalid_argument("jordan_type: reduced matrix is rank deficient");
  if (rank(hconcat(m_bar, pi * m_bar)) != r) throw std::invalid_argument("jordan_type: span is not stable");
  // at_least[k] = number of blocks of size >= k = rank(N^{k-1}) - rank(N^k)
  std::vector<long> ranks{static_cast<long>(r)};
  ModMatrix cur = m_bar;
  while (ranks.back() > 0) {
    cur = pi * cur;
    ranks.push_back(static_cast<long>(rank(cur)));
    if (ranks.size() > r + 2) throw std::invalid_argument("jordan_type: operator is not nilpotent on the span");
  }
  IntVec out;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    const long at_least = ranks[k - 1] - ranks[k];
    const long next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (long c = 0; c < at_least - next; ++c) out.push_back(static_cast<long>(k));
  }
  return out;
}

CheckResult verify_reduction(const Witness& w) {
  CheckResult res;
  if (!check_shapes(w, res)) return res;
  const ModMatrix pb = pi_bar(w.ring.p, w.e, w.d);
  for (std::size_t i = 0; i < w.d; ++i) {
    const std::string tag = "index " + std::to_string(i) + ": ";
    ModMatrix mb;
    try {
      mb = reduce_mod_max_ideal(w.m[i]);
    } catch (const std::domain_error& ex) {
      res.fail(tag + ex.what());
      continue;
    }
    if (w.m_bar && (i >= w.m_bar->size() || !((*w.m_bar)[i] == mb))) res.fail(tag + "reduction differs from the claimed stratum matrix");
    try {
      const IntVec jt = jordan_type(mb, pb);
      if (w.jordan && jt != *w.jordan) res.fail(tag + "Jordan type differs from the claim");
    } catch (const std::invalid_argument& ex) {
      res.fail(tag + ex.what());
    }
  }
  return res;
}

RingMatrix gram_matrix(const ScalarRing& ring, std::size_t g, std::size_t e, std::optional<long> delta_exponent) {
  if (g == 0 || e == 0) throw std::invalid_argument("gram_matrix: g and e must be positive");
  const long ee = static_cast<long>(e);
  if (!delta_exponent && ee % ring.p == 0)
    throw std::domain_error("gram_matrix: wild ramification, pi^(1-e) does not generate the inverse different");
  const long de = delta_exponent.value_or(1 - ee);
  const std::size_t n = 2 * g;
  RingMatrix out(ring, n * e, n * e);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t partner = n - 1 - j;
    const RingElem sign(ring, j < g ? 1L : -1L);
    for (std::size_t k = 1; k <= e; ++k)
      for (std::size_t kk = 1; kk <= e; ++kk) {
        // exactly one of e^i_j, e^{2g-i}_{partner} carries pi^{-1}; the extra pi cancels it
        const long power = de + 2 * ee - static_cast<long>(k) - static_cast<long>(kk);
        out(j * e + k - 1, partner * e + kk - 1) = sign * trace_pi_power(ring, ee, power);
      }
  }
  return out;
}

CheckResult verify_isotropy(const Witness& w, const RingMatrix& gram) {
  CheckResult res;
  if (!check_shapes(w, res)) return res;
  if (w.d % 2 != 0) {
    res.fail("isotropy needs an even number of lines");
    return res;
  }
  if (gram.rows() != w.d * w.e || gram.cols() != w.d * w.e) {
    res.fail("gram matrix has the wrong size");
    return res;
  }
  for (std::size_t i = 0; i < w.d; ++i) {
    const std::size_t partner = (w.d - i) % w.d;
    const RingMatrix pairing = w.m[i].transpose() * gram * w.m[partner];
    for (std::size_t a = 0; a < pairing.rows(); ++a)
      for (std::size_t b = 0; b < pairing.cols(); ++b)
        if (!pairing(a, b).is_zero()) {
          std::ostringstream os;
          os << "index " << i << ": <F_" << i << ", F_" << partner << "> entry (" << a << "," << b
             << ") = " << pairing(a, b).to_string();
          res.fail(os.str());
          a = pairing.rows();
          break;
        }
  }
  return res;
}

WitnessReport verify_witness(const Witness& w) {
  WitnessReport rep{verify_det_condition(w), verify_chain(w), verify_reduction(w), std::nullopt};
  if (w.group == Group::GSp) {
    CheckResult iso;
    try {
      iso = verify_isotropy(w, gram_matrix(w.ring, w.d / 2, w.e, w.delta_exponent));
    } catch (const std::exception& ex) {
      iso.fail(ex.what());
    }
    rep.isotropy = iso;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  w.e = j.at("e").get<std::size_t>();
  w.d = j.at("d").get<std::size_t>();
  w.ring = ScalarRing(j.at("p").get<long>(), j.value("m", 1), j.value("cyclotomic", 1));
  w.group = group_from_string(j.value("group", std::string("gl")));
  if (w.e == 0 || w.d == 0) throw std::invalid_argument("witness: e and d must be positive");
  const auto r = j.at("r").get<std::size_t>();
  w.chi = ring_poly_from_json(w.ring, j.at("chi"));
  for (const auto& mj : j.at("M")) {
    RingMatrix m = ring_matrix_from_json(w.ring, mj, r);
    if (m.rows() == 0 && w.d * w.e > 0) m = RingMatrix(w.ring, w.d * w.e, r);
    w.m.push_back(std::move(m));
  }
  if (j.contains("M_bar")) {
    std::vector<ModMatrix> bars;
    for (const auto& mj : j.at("M_bar")) {
      ModMatrix mb(w.ring.p, mj.size(), r);
      for (std::size_t a = 0; a < mj.size(); ++a) {
        if (mj[a].size() != r) throw std::invalid_argument("witness: M_bar row length mismatch");
        for (std::size_t b = 0; b < r; ++b) mb(a, b) = ((mj[a][b].get<long>() % w.ring.p) + w.ring.p) % w.ring.p;
      }
      bars.push_back(std::move(mb));
    }
    w.m_bar = std::move(bars);
  }
  if (j.contains("jordan_type")) w.jordan = j.at("jordan_type").get<IntVec>();
  if (j.contains("delta_exponent")) w.delta_exponent = j.at("delta_exponent").get<long>();
  return w;
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j{{"group", to_string(w.group)}, {"e", w.e}, {"d", w.d}, {"p", w.ring.p}, {"m", w.ring.m},
                   {"r", w.r()}, {"chi", to_json_value(w.chi)}};
  if (w.ring.cyclotomic != 1) j["cyclotomic"] = w.ring.cyclotomic;
  nlohmann::json ms = nlohmann::json::array();
  for (const RingMatrix& m : w.m) ms.push_back(to_json_value(m));
  j["M"] = std::move(ms);
  if (w.m_bar) {
    nlohmann::json bars = nlohmann::json::array();
    for (const ModMatrix& mb : *w.m_bar) {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t a = 0; a < mb.rows; ++a) {
        std::vector<long> row(mb.cols);
        for (std::size_t b = 0; b < mb.cols; ++b) row[b] = mb(a, b);
        rows.push_back(row);
      }
      bars.push_back(std::move(rows));
    }
    j["M_bar"] = std::move(bars);
  }
  if (w.jordan) j["jordan_type"] = *w.jordan;
  if (w.delta_exponent) j["delta_exponent"] = *w.delta_exponent;
  return j;
}

void to_json(nlohmann::json& j, const CheckResult& c) { j = nlohmann::json{{"ok", c.ok}, {"failures", c.failures}}; }

void to_json(nlohmann::json& j, const WitnessReport& r) {
  j = nlohmann::json{{"ok", r.ok()}, {"det_condition", r.det}, {"chain", r.chain}, {"reduction", r.reduction}};
  if (r.isotropy) j["isotropy"] = *r.isotropy;
}

}  // namespace kr
