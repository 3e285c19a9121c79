#include "kr/faces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kr {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

long floor_div(long a, long n) { return (a - mod(a, n)) / n; }

long sum(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0L); }

bool leq(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVec plus(IntVec v, long c) {
  for (long& x : v) x += c;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// FaceType

FaceType::FaceType(std::size_t n, std::vector<int> indices) : n_(n) {
  if (n == 0) throw std::invalid_argument("FaceType: n must be positive");
  for (int& i : indices) i = static_cast<int>(mod(i, static_cast<long>(n)));
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) throw std::invalid_argument("FaceType: empty index set");
  indices_ = std::move(indices);
}

FaceType FaceType::iwahori(std::size_t n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return FaceType(n, std::move(all));
}

bool FaceType::contains(long i) const {
  return std::binary_search(indices_.begin(), indices_.end(), static_cast<int>(mod(i, static_cast<long>(n_))));
}

bool FaceType::is_subset_of(const FaceType& other) const {
  if (n_ != other.n_) return false;
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

bool FaceType::symmetric() const {
  for (int i : indices_)
    if (!contains(-static_cast<long>(i))) return false;
  return true;
}

std::vector<FaceType> all_face_types(std::size_t n) {
  std::vector<FaceType> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) idx.push_back(static_cast<int>(i));
    out.emplace_back(n, std::move(idx));
  }
  return out;
}

std::vector<FaceType> symmetric_face_types(std::size_t g) {
  std::vector<FaceType> out;
  const std::size_t n = 2 * g;
  for (std::size_t mask = 1; mask < (std::size_t{1} << (g + 1)); ++mask) {
    std::vector<int> idx;
    for (std::size_t i = 0; i <= g; ++i) {
      if ((mask >> i) & 1U) {
        idx.push_back(static_cast<int>(i));
        idx.push_back(static_cast<int>((n - i) % n));
      }
    }
    out.emplace_back(n, std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Face

IntVec Face::at(long i) const {
  const long nn = static_cast<long>(n());
  const long r = mod(i, nn);
  auto it = std::lower_bound(type.indices().begin(), type.indices().end(), static_cast<int>(r));
  if (it == type.indices().end() || *it != r) throw std::out_of_range("Face::at: index not in type");
  return plus(vectors[static_cast<std::size_t>(it - type.indices().begin())], floor_div(i, nn));
}

IntVec omega(std::size_t n, long i) {
  const long nn = static_cast<long>(n);
  const long r = mod(i, nn);
  IntVec v(n, floor_div(i, nn));
  for (long k = 0; k < r; ++k) v[static_cast<std::size_t>(k)] += 1;
  return v;
}

Face base_face(const FaceType& type) {
  Face f{type, {}};
  for (int i : type.indices()) f.vectors.push_back(omega(type.n(), i));
  return f;
}

bool validate_face(const Face& f) {
  const auto& idx = f.type.indices();
  if (f.vectors.size() != idx.size() || idx.empty()) return false;
  for (const IntVec& v : f.vectors)
    if (v.size() != f.n()) return false;
  const long n = static_cast<long>(f.n());
  // Consecutive indices, including the wrap to indices[0] + n, suffice.
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const long i = idx[k];
    const long j = k + 1 < idx.size() ? idx[k + 1] : idx[0] + n;
    const IntVec vi = f.at(i);
    const IntVec vj = f.at(j);
    if (!leq(vi, vj)) return false;
    if (sum(vj) - sum(vi) != j - i) return false;
  }
  return true;
}

Face face_from_element(const AffineElement& x, const FaceType& type) {
  if (x.rank() != type.n()) throw std::invalid_argument("face_from_element: rank mismatch");
  Face f{type, {}};
  for (int i : type.indices()) f.vectors.push_back(x.act(omega(type.n(), i)));
  return f;
}

Face project(const Face& f, const FaceType& j) {
  if (!j.is_subset_of(f.type)) throw std::invalid_argument("project: target type is not a subset");
  Face out{j, {}};
  for (int i : j.indices()) out.vectors.push_back(f.at(i));
  return out;
}

Face act(const AffineElement& x, const Face& f) {
  if (x.rank() != f.n()) throw std::invalid_argument("act: rank mismatch");
  Face out{f.type, {}};
  for (const IntVec& v : f.vectors) out.vectors.push_back(x.act(v));
  return out;
}

std::vector<IntVec> fiber_extensions(const IntVec& v_k, const IntVec& v_l) {
  if (v_k.size() != v_l.size()) throw std::invalid_argument("fiber_extensions: length mismatch");
  if (!leq(v_k, v_l) || sum(v_l) - sum(v_k) < 1)
    throw std::invalid_argument("fiber_extensions: need v_k <= v_l and sum(v_l) > sum(v_k)");
  std::vector<IntVec> out;
  for (std::size_t m = 0; m < v_k.size(); ++m) {
    if (v_l[m] > v_k[m]) {
      IntVec w = v_k;
      w[m] += 1;
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QVec theta(const QVec& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("theta: odd length");
  QVec out(v.rbegin(), v.rend());
  for (Rational& x : out) x = -x;
  return out;
}

IntVec theta(const IntVec& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("theta: odd length");
  IntVec out(v.rbegin(), v.rend());
  for (long& x : out) x = -x;
  return out;
}

std::optional<long> is_G_face(const Face& f) {
  if (f.n() % 2 != 0 || !f.type.symmetric()) throw std::invalid_argument("is_G_face: type not symmetric");
  const long n = static_cast<long>(f.n());
  std::optional<long> d;
  for (int i : f.type.indices()) {
    const IntVec partner = f.at(n - i);
    const IntVec mirrored = theta(f.at(i));
    for (std::size_t c = 0; c < partner.size(); ++c) {
      const long shift = partner[c] - mirrored[c];
      if (!d) d = shift;
      if (*d != shift) return std::nullopt;
    }
  }
  return d;
}

std::vector<EtaVertex> eta_vertices(std::size_t g, const FaceType& type) {
  if (type.n() != 2 * g || !type.symmetric()) throw std::invalid_argument("eta_vertices: need symmetric type of rank 2g");
  std::vector<EtaVertex> out;
  for (int i : type.indices()) {
    if (static_cast<std::size_t>(i) > g) continue;
    IntVec a = omega(2 * g, i);
    IntVec b = omega(2 * g, static_cast<long>(2 * g) - i);
    QVec eta(2 * g);
    for (std::size_t c = 0; c < eta.size(); ++c) eta[c] = Rational(a[c] + b[c], 2);
    for (Rational& q : eta) q.canonicalize();
    out.push_back({i, std::move(eta)});
  }
  return out;
}

AffineElement element_from_alcove(const Face& alcove) {
  if (!alcove.type.is_iwahori()) throw std::invalid_argument("element_from_alcove: face is not an alcove");
  const std::size_t n = alcove.n();
  std::vector<int> images(n, -1);
  for (std::size_t i = 1; i <= n; ++i) {
    const IntVec step = [&] {
      IntVec hi = alcove.at(static_cast<long>(i));
      IntVec lo = alcove.at(static_cast<long>(i) - 1);
      for (std::size_t c = 0; c < n; ++c) hi[c] -= lo[c];
      return hi;
    }();
    int where = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (step[c] == 1 && where < 0) {
        where = static_cast<int>(c);
      } else if (step[c] != 0) {
        throw std::invalid_argument("element_from_alcove: not a valid alcove");
      }
    }
    if (where < 0) throw std::invalid_argument("element_from_alcove: not a valid alcove");
    images[i - 1] = where;
  }
  return AffineElement(alcove.vectors.front(), Permutation(std::move(images)));
}

Face complete_to_alcove(const Face& f) {
  const long n = static_cast<long>(f.n());
  const auto& idx = f.type.indices();
  Face out{FaceType::iwahori(f.n()), std::vector<IntVec>(f.n())};
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const long i = idx[k];
    const long j = k + 1 < idx.size() ? idx[k + 1] : idx[0] + n;
    IntVec cur = f.at(i);
    const IntVec target = f.at(j);
    out.vectors[static_cast<std::size_t>(i)] = cur;
    for (long step = i + 1; step < j; ++step) {
      cur = fiber_extensions(cur, target).front();
      out.vectors[static_cast<std::size_t>(mod(step, n))] = plus(cur, -floor_div(step, n));
    }
  }
  return out;
}

AffineElement min_coset_rep(const Face& f) {
  AffineElement x = element_from_alcove(complete_to_alcove(f));
  const std::size_t n = f.n();
  long len = length(x);
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < static_cast<int>(n); ++j) {
      if (f.type.contains(j)) continue;
      AffineElement y = compose(x, AffineElement::simple_reflection(n, j));
      long ly = length(y);
      if (ly < len) {
        x = std::move(y);
        len = ly;
        changed = true;
      }
    }
  }
  return x;
}

bool in_symplectic_weyl_group(const AffineElement& x) {
  if (x.rank() % 2 != 0) return false;
  return is_G_face(face_from_element(x, FaceType::iwahori(x.rank()))).has_value();
}

void to_json(nlohmann::json& j, const Face& f) {
  nlohmann::json v = nlohmann::json::object();
  for (std::size_t k = 0; k < f.vectors.size(); ++k) v[std::to_string(f.type.indices()[k])] = f.vectors[k];
  j = nlohmann::json{{"n", f.n()}, {"I", f.type.indices()}, {"v", std::move(v)}};
}

void from_json(const nlohmann::json& j, Face& f) {
  const auto n = j.at("n").get<std::size_t>();
  FaceType type(n, j.at("I").get<std::vector<int>>());
  Face out{type, {}};
  for (int i : type.indices()) {
    IntVec v = j.at("v").at(std::to_string(i)).get<IntVec>();
    if (v.size() != n) throw std::invalid_argument("face json: vector length mismatch");
    out.vectors.push_back(std::move(v));
  }
  f = std::move(out);
}

}  // namespace kr
