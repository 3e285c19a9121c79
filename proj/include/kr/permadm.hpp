#pragma once

// mu-permissible and mu-admissible sets for GL_n and GSp_2g, Iwahori and
// parahoric, together with the constructive extension step used to lift
// permissible faces along projections F_I -> F_J.

#include <cstddef>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kr/faces.hpp"
#include "kr/order.hpp"
#include "kr/weyl.hpp"

namespace kr {

// ---------------------------------------------------------------------------
// Multiplicities

/// mu_j = #{phi : r_phi >= j}, j = 1..d. Throws if r is not weakly
/// decreasing or has entries outside [0, d].
IntVec dual_partition(const IntVec& r, long d);

/// 0/1 matrix with rows alpha = 1..d and columns phi = 1..e.
struct SplitMatrix {
  std::vector<std::vector<int>> entries;

  IntVec row_sums() const;
  IntVec column_sums() const;
};

/// r_phi^alpha = [phi <= nu_alpha]; nu must be a permutation of
/// dual_partition(r, nu.size()).
SplitMatrix split_multiplicities(const IntVec& r, const IntVec& nu);

// ---------------------------------------------------------------------------
// Perm / Adm

/// Throws std::invalid_argument unless (mu, type, group) is a supported
/// configuration: mu dominant of rank type.n(); for GSp additionally a
/// symmetric type and mu = (d^g, 0^g).
void check_configuration(const IntVec& mu, const FaceType& type, Group group);

/// Integer points of P_mu, sorted.
std::vector<IntVec> lattice_points(const IntVec& mu);

/// GL: faces of type I with v_i - omega_i in P_mu for all i.
/// GSp: G-faces with x(eta_i) - eta_i in P_{G,mu} for i in I, 0 <= i <= g.
/// Sorted.
std::vector<Face> perm_set(const IntVec& mu, const FaceType& type, Group group);

/// Elements below some t_{w mu}, w in W_0 (resp. W_0(Sp), intersected with
/// W~_G). Sorted.
std::vector<AffineElement> adm_elements(const IntVec& mu, Group group);

/// Image of adm_elements under x -> face_from_element(x, type). Sorted.
std::vector<Face> adm_set(const IntVec& mu, const FaceType& type, Group group);

/// Translation elements t_{w mu} (the expected maximal elements). Sorted.
std::vector<AffineElement> extreme_translations(const IntVec& mu, Group group);

/// Subword products of a word (times tau^r on the right): the Bruhat
/// interval below the element the word represents when it is reduced.
std::vector<AffineElement> subword_closure(std::size_t n, const std::vector<int>& word, long r);

/// GL-permissible faces of type I that are G-faces.
std::vector<Face> sp_perm_intersection(const IntVec& mu, const FaceType& type);

// ---------------------------------------------------------------------------
// Extension lemma

enum class ExtensionCase { Direct = 1, Sorted = 2 };

struct Extension {
  IntVec v;               ///< v_{k+1}
  ExtensionCase which;
  int m;                  ///< 1-based coordinate with v_{k+1} = v_k + e_m
};

/// Given v_k, v_l with k < l <= k+n, both permissible, v_l - v_k minuscule
/// and sum(v_l) - sum(v_k) = l - k, produce a permissible v_{k+1} between
/// them. Throws std::invalid_argument if a hypothesis fails.
Extension extend_permissible_traced(const IntVec& v_k, const IntVec& v_l, long k, long l, const IntVec& mu);
IntVec extend_permissible(const IntVec& v_k, const IntVec& v_l, long k, long l, const IntVec& mu);

/// Lift a permissible face to a permissible alcove by filling every gap
/// with extend_permissible in increasing index order.
Face lift_to_alcove_gl(const Face& f, const IntVec& mu);
/// Symplectic variant: each new index k+1 is mirrored to -(k+1) via Theta.
Face lift_to_alcove_gsp(const Face& f, const IntVec& mu);

// ---------------------------------------------------------------------------
// Reports

struct SurjectivityReport {
  bool surjective = true;
  std::size_t targets = 0;
  /// (face of type J, constructed preimage of type I)
  std::vector<std::pair<Face, Face>> preimages;
  /// faces of type J for which the construction failed
  std::vector<Face> failures;
  /// GSp only: mirrored vectors that left P_{G,mu}.
  std::size_t mirror_failures = 0;
};

SurjectivityReport perm_surjectivity_check(const IntVec& mu, const FaceType& i_type, const FaceType& j_type,
                                           Group group);

struct EqualityReport {
  bool equal = true;
  std::size_t perm_size = 0;
  std::size_t adm_size = 0;
  std::vector<Face> only_in_perm;
  std::vector<Face> only_in_adm;
};

EqualityReport compare_face_sets(const std::vector<Face>& perm, const std::vector<Face>& adm);
EqualityReport check_perm_eq_adm(const IntVec& mu, const FaceType& type, Group group);

void to_json(nlohmann::json& j, const EqualityReport& r);
void to_json(nlohmann::json& j, const SurjectivityReport& r);

}  // namespace kr
