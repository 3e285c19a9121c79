#pragma once

// Extended affine Weyl group of GL_n, realised as Z^n x| S_n acting on
// R^n by v -> t + w(v), where w(v)(i) = v(w^{-1}(i)).

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>
#include "json.hpp"

namespace kr {

using IntVec = std::vector<long>;
using Rational = mpq_class;
using QVec = std::vector<Rational>;

QVec to_rational(const IntVec& v);

/// Bijection of {0..n-1}; images_[j] = w(j). Serialised 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, int a, int b);

  std::size_t size() const { return images_.size(); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (*this o other)(j) = (*this)(other(j)).
  Permutation after(const Permutation& other) const;

  /// Place action: result(w(j)) = v(j).
  template <typename T>
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != images_.size()) throw std::invalid_argument("permutation: length mismatch");
    std::vector<T> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[static_cast<std::size_t>(images_[j])] = v[j];
    return out;
  }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

class AffineElement {
public:
  AffineElement() = default;
  AffineElement(IntVec translation, Permutation perm);

  static AffineElement identity(std::size_t n);
  static AffineElement translation_element(const IntVec& mu);
  /// Simple reflections: i in 1..n-1 swaps coordinates i, i+1 (1-based);
  /// i = 0 is v -> v - (<v, e_1 - e_n> - 1)(e_1 - e_n).
  static AffineElement simple_reflection(std::size_t n, int i);
  /// The length-zero generator tau: v -> (v_n + 1, v_1, ..., v_{n-1}).
  static AffineElement tau(std::size_t n);
  static AffineElement tau_power(std::size_t n, long r);

  std::size_t rank() const { return translation_.size(); }
  const IntVec& translation() const { return translation_; }
  const Permutation& perm() const { return perm_; }

  AffineElement inverse() const;

  IntVec act(const IntVec& v) const;
  QVec act(const QVec& v) const;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend auto operator<=>(const AffineElement&, const AffineElement&) = default;

private:
  IntVec translation_;
  Permutation perm_;
};

/// x o y. Throws std::invalid_argument on rank mismatch.
AffineElement compose(const AffineElement& x, const AffineElement& y);

IntVec act(const AffineElement& x, const IntVec& v);
QVec act(const AffineElement& x, const QVec& v);

/// Throws if any entry of mu is not an integer.
AffineElement translation_element(const QVec& mu);

/// Number of affine root hyperplanes separating the base alcove from its
/// image under x.
long length(const AffineElement& x);

/// Sum of translation entries; identifies the Omega-coset.
long omega_component(const AffineElement& x);

/// Left-greedy reduced word [i_1, ..., i_k] with
/// x = s_{i_1} ... s_{i_k} tau^{omega_component(x)}.
std::vector<int> reduced_word(const AffineElement& x);

/// s_{i_1} ... s_{i_k} tau^r.
AffineElement word_product(std::size_t n, const std::vector<int>& word, long r);

/// True iff s_i x is shorter than x.
bool is_left_descent(const AffineElement& x, int i);

void to_json(nlohmann::json& j, const AffineElement& x);
void from_json(const nlohmann::json& j, AffineElement& x);

struct AffineElementHash {
  std::size_t operator()(const AffineElement& x) const noexcept;
};

}  // namespace kr
