#pragma once

// Matrix witnesses for liftings of special-fibre points: the subspaces
// F_i of Lambda_i (x) O_E, the operator Pi, the chain maps, and the
// alternating pairing in the symplectic case.
//
// Coordinates: Lambda_i has O_F-basis e^i_1..e^i_d; each O_F-line is
// expanded over O_{F_0} in the decreasing basis b_k = pi^{e-k}, k = 1..e,
// so row (j-1)e + (k-1) is the coefficient of pi^{e-k} e^i_j.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kr/order.hpp"
#include "kr/ring.hpp"
#include "kr/weyl.hpp"

namespace kr {

/// e x e block of multiplication by pi: pi b_k = b_{k-1}, pi b_1 = p b_e.
RingMatrix pi_block(const ScalarRing& ring, std::size_t e);
/// de x de multiplication by pi on Lambda_i (the same for every i).
RingMatrix pi_matrix(const ScalarRing& ring, std::size_t e, std::size_t d, std::size_t i);
/// Inclusion Lambda_i -> Lambda_{i+1}; for i = d-1 composed with
/// pi: Lambda_d -> Lambda_0. Pi in block i, identity elsewhere.
RingMatrix chain_transition(const ScalarRing& ring, std::size_t e, std::size_t d, std::size_t i);

/// A with pi M = M A, or nullopt if span(M) is not pi-stable. Throws
/// std::invalid_argument if M lacks full column rank.
std::optional<RingMatrix> solve_A(const RingMatrix& m, const RingMatrix& pi);

/// M = (I_r; B) spanning ker chi(Pi) in one O_F-line, with A = top rows of
/// Pi M. nullopt if the kernel has the wrong dimension, the top block is
/// singular, or B is not p-integral.
std::optional<RingMatrix> construct_M(std::size_t e, std::size_t r, const RingPoly& chi);

/// Scalar ring and per-block targets for a list of block sizes. If the
/// nonzero sizes divide e and form a divisibility chain: y^{e/g} = p with
/// g their gcd and targets T^s - y^{s/g}. Otherwise y^e = p with zeta_e
/// adjoined and targets (T - y)(T - zeta y)...(T - zeta^{s-1} y).
struct BlockModel {
  ScalarRing ring;
  std::size_t e = 1;
  IntVec sizes;
  std::vector<RingPoly> targets;
};

/// nullopt if a size lies outside [0, e], or if zeta_e is needed and
/// p != 1 mod e.
std::optional<BlockModel> block_model(std::size_t e, long p, const IntVec& sizes);

struct Witness {
  ScalarRing ring;
  std::size_t e = 1;
  std::size_t d = 1;
  Group group = Group::GL;
  RingPoly chi{ScalarRing{}};
  std::vector<RingMatrix> m;                         ///< one per chain index
  std::optional<std::vector<ModMatrix>> m_bar;       ///< claimed reductions
  std::optional<IntVec> jordan;                      ///< claimed Jordan type
  std::optional<long> delta_exponent;                ///< delta = pi^k, default 1 - e

  std::size_t r() const { return m.empty() ? 0 : m.front().cols(); }
};

/// Same block-diagonal matrix at every chain index; chi is the product of
/// the block char polys of the supplied blocks.
Witness build_block_lift(const ScalarRing& ring, std::size_t e, const std::vector<RingMatrix>& blocks, Group group);

/// Block lift from a model: M(e, s) for each size s (empty for s = 0).
/// nullopt if some construct_M fails.
std::optional<Witness> block_lift(const BlockModel& model, Group group);

/// Constant 0/1 lift: I_e or empty per block. m = 1.
Witness constant_lift(long p, std::size_t e, const IntVec& nu, Group group);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

CheckResult verify_det_condition(const Witness& w);
CheckResult verify_chain(const Witness& w);

/// y -> 0, zeta -> its residue, rationals mod p. Throws std::domain_error on
/// non-integral entries.
ModMatrix reduce_mod_max_ideal(const RingMatrix& m);
/// Reduction of Pi: the nilpotent shift, blockwise.
ModMatrix pi_bar(long p, std::size_t e, std::size_t d);
/// Block sizes of pi_bar on span(m_bar), descending. Throws
/// std::invalid_argument if the span is not stable or m_bar is rank deficient.
IntVec jordan_type(const ModMatrix& m_bar, const ModMatrix& pi_bar);
CheckResult verify_reduction(const Witness& w);

/// 2ge x 2ge matrix of <u, pi w> for u in Lambda_i, w in Lambda_{2g-i}
/// (equivalently the perfect pairing Lambda_i x Lambda_{-i}); independent
/// of i. delta_exponent = 1 - e by default; throws std::domain_error when
/// p | e and the trace of a non-unit power would be needed with that delta.
RingMatrix gram_matrix(const ScalarRing& ring, std::size_t g, std::size_t e, std::optional<long> delta_exponent = {});
CheckResult verify_isotropy(const Witness& w, const RingMatrix& gram);

struct WitnessReport {
  CheckResult det;
  CheckResult chain;
  CheckResult reduction;
  std::optional<CheckResult> isotropy;

  bool ok() const { return det.ok && chain.ok && reduction.ok && (!isotropy || isotropy->ok); }
};

WitnessReport verify_witness(const Witness& w);

Witness witness_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const Witness& w);
void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const WitnessReport& r);

}  // namespace kr
