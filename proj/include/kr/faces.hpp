#pragma once

// Faces of type I: periodic families (v_i)_{i in I} of integer vectors,
// v_{i+n} = v_i + 1, monotone in i with sum(v_i) - sum(v_j) = i - j.
// They parametrise W~/W_I with the standard alcove as base point.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "json.hpp"
#include "kr/weyl.hpp"

namespace kr {

class FaceType {
public:
  FaceType() = default;
  /// Indices are reduced mod n, sorted and deduplicated. Throws if empty.
  FaceType(std::size_t n, std::vector<int> indices);

  static FaceType iwahori(std::size_t n);

  std::size_t n() const { return n_; }
  const std::vector<int>& indices() const { return indices_; }
  bool contains(long i) const;
  bool is_iwahori() const { return indices_.size() == n_; }
  bool is_subset_of(const FaceType& other) const;
  /// The preimage I in Z satisfies I = -I.
  bool symmetric() const;

  friend bool operator==(const FaceType&, const FaceType&) = default;
  friend auto operator<=>(const FaceType&, const FaceType&) = default;

private:
  std::size_t n_ = 0;
  std::vector<int> indices_;
};

/// All nonempty subsets of Z/nZ, as face types.
std::vector<FaceType> all_face_types(std::size_t n);
/// All nonempty symmetric subsets of Z/2gZ.
std::vector<FaceType> symmetric_face_types(std::size_t g);

struct Face {
  FaceType type;
  /// vectors[k] is v_i for i = type.indices()[k].
  std::vector<IntVec> vectors;

  std::size_t n() const { return type.n(); }
  /// v_i for any i in the preimage of the index set, using periodicity.
  IntVec at(long i) const;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;
};

/// omega_i = (1^i, 0^{n-i}), extended by omega_{i+n} = omega_i + 1.
IntVec omega(std::size_t n, long i);

Face base_face(const FaceType& type);
bool validate_face(const Face& f);
Face face_from_element(const AffineElement& x, const FaceType& type);
/// Restriction to a nonempty subset J of the index set.
Face project(const Face& f, const FaceType& j);
/// x . f, acting on every vector.
Face act(const AffineElement& x, const Face& f);

/// All w with v_k <= w <= v_l componentwise and sum(w) = sum(v_k) + 1.
std::vector<IntVec> fiber_extensions(const IntVec& v_k, const IntVec& v_l);

/// (x_1, ..., x_2g) -> (-x_2g, ..., -x_1).
QVec theta(const QVec& v);
IntVec theta(const IntVec& v);

/// The shift d with v_{2g-i} = Theta(v_i) + (d^{2g}) for all i in I, if any.
/// Throws std::invalid_argument if the type is not symmetric.
std::optional<long> is_G_face(const Face& f);

struct EtaVertex {
  int index;
  QVec eta;
};
/// eta_i = (omega_i + omega_{2g-i}) / 2 for i in I and 0 <= i <= g.
std::vector<EtaVertex> eta_vertices(std::size_t g, const FaceType& type);

/// The alcove (type Z/nZ face) f determines x uniquely.
AffineElement element_from_alcove(const Face& alcove);
/// Some alcove projecting to f; gaps are filled with the first fiber extension.
Face complete_to_alcove(const Face& f);
/// Minimal-length element of the coset x W_I corresponding to f.
AffineElement min_coset_rep(const Face& f);
/// Membership in W~_{GSp_2g}, via the G-face criterion on the alcove of x.
bool in_symplectic_weyl_group(const AffineElement& x);

void to_json(nlohmann::json& j, const Face& f);
void from_json(const nlohmann::json& j, Face& f);

}  // namespace kr
