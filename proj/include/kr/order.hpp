#pragma once

// Dominance order, the polytopes P_mu (GL_n) and P_{G,mu} (GSp_2g), and the
// Bruhat order on the extended affine Weyl group.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kr/weyl.hpp"

namespace kr {

enum class Group { GL, GSp };

std::string to_string(Group g);
Group group_from_string(const std::string& s);

bool is_dominant(const IntVec& v);
bool is_dominant(const QVec& v);

/// Partial-sum (majorization) order on dominant vectors of equal length.
/// Throws std::invalid_argument on non-dominant input or length mismatch.
bool dominance_leq(const QVec& lambda, const QVec& mu);
bool dominance_leq(const IntVec& lambda, const IntVec& mu);

/// Convex hull of the finite Weyl group orbit of a dominant coweight.
/// For GSp the rank is 2g and mu must satisfy mu(i) + mu(2g+1-i) = const.
struct MuPolytope {
  MuPolytope(IntVec mu, Group group);

  IntVec mu;
  Group group;
  std::size_t rank() const { return mu.size(); }
};

/// GL membership: sum(v) = sum(mu) and sort-descending(v) is dominated by mu.
bool in_polytope(const QVec& v, const IntVec& mu);
bool in_polytope(const IntVec& v, const IntVec& mu);

/// Orbit of mu under the Weyl group of Sp_2g, i.e. permutations of
/// {1..2g} commuting with i -> 2g+1-i. Sorted, deduplicated.
std::vector<IntVec> sp_weyl_orbit(const IntVec& mu);

/// GSp membership, decided by exact linear feasibility over the orbit.
bool in_polytope_sp(const QVec& v, const IntVec& mu);

bool in_polytope(const QVec& v, const MuPolytope& p);

/// Bruhat order with a per-instance memo table. Elements in different
/// Omega-components are incomparable.
class BruhatOrder {
public:
  bool leq(const AffineElement& x, const AffineElement& y);
  std::size_t memo_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

private:
  struct PairHash {
    std::size_t operator()(const std::pair<AffineElement, AffineElement>& p) const noexcept;
  };
  bool leq_same_component(const AffineElement& x, long lx, const AffineElement& y, long ly);

  std::unordered_map<std::pair<AffineElement, AffineElement>, bool, PairHash> memo_;
};

/// Uses a thread-local BruhatOrder.
bool bruhat_leq(const AffineElement& x, const AffineElement& y);

/// Elements with no strictly larger element in `s`, sorted.
std::vector<AffineElement> maximal_elements(const std::vector<AffineElement>& s);

}  // namespace kr
