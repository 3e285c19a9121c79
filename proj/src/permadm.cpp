#include "kr/permadm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace kr {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }
long floor_div(long a, long n) { return (a - mod(a, n)) / n; }
long sum(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0L); }

IntVec minus(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

IntVec plus_const(IntVec v, long c) {
  for (long& x : v) x += c;
  return v;
}

bool is_minuscule(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0 || x == 1; });
}

bool permissible_gl(const IntVec& v, long i, const IntVec& mu) {
  return in_polytope(minus(v, omega(mu.size(), i)), mu);
}

/// 0/1 vectors of length n grouped by weight.
const std::vector<std::vector<IntVec>>& minuscule_by_weight(std::size_t n) {
  thread_local std::map<std::size_t, std::vector<std::vector<IntVec>>> cache;
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    it->second.resize(n + 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      IntVec v(n, 0);
      std::size_t w = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if ((mask >> c) & 1U) {
          v[c] = 1;
          ++w;
        }
      }
      it->second[w].push_back(std::move(v));
    }
  }
  return it->second;
}

/// Integer vectors with entries in [lo, hi] summing to total.
void box_points(std::size_t n, long lo, long hi, long total, IntVec& cur, std::vector<IntVec>& out) {
  const std::size_t pos = cur.size();
  if (pos == n) {
    if (total == 0) out.push_back(cur);
    return;
  }
  const long rest = static_cast<long>(n - pos - 1);
  for (long x = lo; x <= hi; ++x) {
    const long remaining = total - x;
    if (remaining < rest * lo || remaining > rest * hi) continue;
    cur.push_back(x);
    box_points(n, lo, hi, remaining, cur, out);
    cur.pop_back();
  }
}

std::vector<IntVec> box_points(std::size_t n, long lo, long hi, long total) {
  std::vector<IntVec> out;
  IntVec cur;
  box_points(n, lo, hi, total, cur, out);
  return out;
}

std::vector<Face> sorted_unique(std::vector<Face> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Vector-per-index scratch face, addressed by integers via periodicity.
class PartialFace {
public:
  explicit PartialFace(std::size_t n) : n_(n), slots_(n) {}

  bool has(long i) const { return slots_[static_cast<std::size_t>(mod(i, static_cast<long>(n_)))].has_value(); }
  IntVec get(long i) const {
    const auto& s = slots_[static_cast<std::size_t>(mod(i, static_cast<long>(n_)))];
    return plus_const(*s, floor_div(i, static_cast<long>(n_)));
  }
  void set(long i, const IntVec& v) {
    slots_[static_cast<std::size_t>(mod(i, static_cast<long>(n_)))] = plus_const(v, -floor_div(i, static_cast<long>(n_)));
  }
  std::vector<long> known() const {
    std::vector<long> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (slots_[i]) out.push_back(static_cast<long>(i));
    return out;
  }
  /// Smallest known index strictly greater than k.
  long next_known(long k) const {
    for (long step = 1; step <= static_cast<long>(n_); ++step)
      if (has(k + step)) return k + step;
    throw std::logic_error("PartialFace: empty");
  }
  Face to_alcove() const {
    Face f{FaceType::iwahori(n_), {}};
    for (const auto& s : slots_) {
      if (!s) throw std::logic_error("PartialFace: incomplete");
      f.vectors.push_back(*s);
    }
    return f;
  }

private:
  std::size_t n_;
  std::vector<std::optional<IntVec>> slots_;
};

long sp_shift(const IntVec& mu) {
  // mu = (d^g, 0^g)
  return mu.front();
}

}  // namespace

// ---------------------------------------------------------------------------
// Multiplicities

IntVec dual_partition(const IntVec& r, long d) {
  if (d < 0) throw std::invalid_argument("dual_partition: negative d");
  if (!is_dominant(r)) throw std::invalid_argument("dual_partition: r not weakly decreasing");
  for (long x : r)
    if (x < 0 || x > d) throw std::invalid_argument("dual_partition: entry outside [0, d]");
  IntVec mu(static_cast<std::size_t>(d), 0);
  for (long j = 1; j <= d; ++j)
    mu[static_cast<std::size_t>(j - 1)] = std::count_if(r.begin(), r.end(), [j](long x) { return x >= j; });
  return mu;
}

IntVec SplitMatrix::row_sums() const {
  IntVec out;
  for (const auto& row : entries) out.push_back(std::accumulate(row.begin(), row.end(), 0L));
  return out;
}

IntVec SplitMatrix::column_sums() const {
  IntVec out(entries.empty() ? 0 : entries.front().size(), 0);
  for (const auto& row : entries)
    for (std::size_t c = 0; c < row.size(); ++c) out[c] += row[c];
  return out;
}

SplitMatrix split_multiplicities(const IntVec& r, const IntVec& nu) {
  const long d = static_cast<long>(nu.size());
  IntVec mu = dual_partition(r, d);
  IntVec sorted_nu = nu;
  std::sort(sorted_nu.begin(), sorted_nu.end(), std::greater<>());
  if (sorted_nu != mu) throw std::invalid_argument("split_multiplicities: nu is not a permutation of the dual partition");
  SplitMatrix s;
  for (long a : nu) {
    std::vector<int> row(r.size(), 0);
    for (long phi = 1; phi <= static_cast<long>(r.size()); ++phi) row[static_cast<std::size_t>(phi - 1)] = phi <= a ? 1 : 0;
    s.entries.push_back(std::move(row));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Configurations

void check_configuration(const IntVec& mu, const FaceType& type, Group group) {
  if (mu.empty()) throw std::invalid_argument("mu must be nonempty");
  if (!is_dominant(mu)) throw std::invalid_argument("mu must be dominant (weakly decreasing)");
  if (type.n() != mu.size()) throw std::invalid_argument("face type rank differs from length of mu");
  if (group == Group::GSp) {
    const std::size_t n = mu.size();
    if (n % 2 != 0) throw std::invalid_argument("GSp requires even rank");
    if (!type.symmetric()) throw std::invalid_argument("GSp requires a symmetric index set");
    const long d = mu.front();
    for (std::size_t i = 0; i < n; ++i)
      if (mu[i] != (i < n / 2 ? d : 0)) throw std::invalid_argument("GSp requires mu = (d^g, 0^g)");
    if (d < 0) throw std::invalid_argument("GSp requires d >= 0");
  }
}

std::vector<IntVec> lattice_points(const IntVec& mu) {
  thread_local std::map<IntVec, std::vector<IntVec>> cache;
  auto [it, inserted] = cache.try_emplace(mu);
  if (inserted) {
    const auto [lo, hi] = std::minmax_element(mu.begin(), mu.end());
    for (IntVec& v : box_points(mu.size(), *lo, *hi, sum(mu)))
      if (in_polytope(v, mu)) it->second.push_back(std::move(v));
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Perm

namespace {

void perm_dfs_gl(const IntVec& mu, const std::vector<int>& idx, std::vector<IntVec>& chain, std::vector<Face>& out,
                 const FaceType& type) {
  const std::size_t n = mu.size();
  const std::size_t k = chain.size() - 1;
  if (k + 1 == idx.size()) {
    IntVec closing = minus(plus_const(chain.front(), 1), chain.back());
    if (std::all_of(closing.begin(), closing.end(), [](long x) { return x >= 0; })) out.push_back(Face{type, chain});
    return;
  }
  const std::size_t weight = static_cast<std::size_t>(idx[k + 1] - idx[k]);
  for (const IntVec& step : minuscule_by_weight(n)[weight]) {
    IntVec next = chain.back();
    for (std::size_t c = 0; c < n; ++c) next[c] += step[c];
    if (!permissible_gl(next, idx[k + 1], mu)) continue;
    chain.push_back(std::move(next));
    perm_dfs_gl(mu, idx, chain, out, type);
    chain.pop_back();
  }
}

std::vector<Face> perm_set_gl(const IntVec& mu, const FaceType& type) {
  const auto& idx = type.indices();
  std::vector<Face> out;
  for (const IntVec& u : lattice_points(mu)) {
    IntVec v = u;
    IntVec w0 = omega(mu.size(), idx.front());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += w0[c];
    std::vector<IntVec> chain{v};
    perm_dfs_gl(mu, idx, chain, out, type);
  }
  return sorted_unique(std::move(out));
}

struct SpSearch {
  const IntVec& mu;
  const FaceType& type;
  std::size_t g;
  long shift;                  // the G-face constant d'
  std::vector<int> low;        // indices of type in [0, g]
  std::vector<QVec> eta_twice; // 2 * eta_a for a in low
  std::vector<Face>* out;

  bool eta_ok(std::size_t pos, const IntVec& va) const {
    const long n = static_cast<long>(2 * g);
    const long a = low[pos];
    const IntVec vp = plus_const(theta(va), shift);  // v_{2g-a}
    if (a == 0 && vp != plus_const(va, 1)) return false;
    if (static_cast<std::size_t>(a) == g && vp != va) return false;
    QVec x(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < x.size(); ++c) {
      x[c] = Rational(va[c] + vp[c]) - eta_twice[pos][c];
      x[c] /= 2;
    }
    return in_polytope_sp(x, mu);
  }

  void dfs(std::vector<IntVec>& chain) const {
    const std::size_t n = 2 * g;
    const std::size_t pos = chain.size() - 1;
    if (!eta_ok(pos, chain.back())) return;
    if (pos + 1 == low.size()) {
      emit(chain);
      return;
    }
    const std::size_t weight = static_cast<std::size_t>(low[pos + 1] - low[pos]);
    for (const IntVec& step : minuscule_by_weight(n)[weight]) {
      IntVec next = chain.back();
      for (std::size_t c = 0; c < n; ++c) next[c] += step[c];
      chain.push_back(std::move(next));
      dfs(chain);
      chain.pop_back();
    }
  }

  void emit(const std::vector<IntVec>& chain) const {
    const long n = static_cast<long>(2 * g);
    Face f{type, {}};
    for (int i : type.indices()) {
      if (static_cast<std::size_t>(i) <= g) {
        auto it = std::find(low.begin(), low.end(), i);
        f.vectors.push_back(chain[static_cast<std::size_t>(it - low.begin())]);
      } else {
        auto it = std::find(low.begin(), low.end(), n - i);
        f.vectors.push_back(plus_const(theta(chain[static_cast<std::size_t>(it - low.begin())]), shift));
      }
    }
    if (!validate_face(f)) return;
    auto d = is_G_face(f);
    if (!d || *d != shift) return;
    out->push_back(std::move(f));
  }
};

std::vector<Face> perm_set_gsp(const IntVec& mu, const FaceType& type) {
  const std::size_t n = mu.size();
  const std::size_t g = n / 2;
  std::vector<int> low;
  for (int i : type.indices())
    if (static_cast<std::size_t>(i) <= g) low.push_back(i);
  std::vector<QVec> eta_twice;
  for (int a : low) {
    IntVec s = omega(n, a);
    IntVec t = omega(n, static_cast<long>(n) - a);
    QVec q(n);
    for (std::size_t c = 0; c < n; ++c) q[c] = s[c] + t[c];
    eta_twice.push_back(std::move(q));
  }

  // x(eta_a) - eta_a lies in P_{G,mu}, whose points have entries in
  // [min mu, max mu]; the face conditions force v_a - omega_a into the same
  // box, with coordinate sum equal to sum(mu).
  const auto [lo, hi] = std::minmax_element(mu.begin(), mu.end());
  const long total = sum(mu);
  // Face condition (3) between a and 2g - a fixes the G-face constant.
  if (total % static_cast<long>(g) != 0) return {};
  const long shift = total / static_cast<long>(g) + 1;

  std::vector<Face> out;
  SpSearch search{mu, type, g, shift, low, eta_twice, &out};
  for (IntVec u : box_points(n, *lo, *hi, total)) {
    IntVec w = omega(n, low.front());
    for (std::size_t c = 0; c < n; ++c) u[c] += w[c];
    std::vector<IntVec> chain{u};
    search.dfs(chain);
  }
  return sorted_unique(std::move(out));
}

}  // namespace

std::vector<Face> perm_set(const IntVec& mu, const FaceType& type, Group group) {
  check_configuration(mu, type, group);
  return group == Group::GL ? perm_set_gl(mu, type) : perm_set_gsp(mu, type);
}

std::vector<Face> sp_perm_intersection(const IntVec& mu, const FaceType& type) {
  check_configuration(mu, type, Group::GSp);
  std::vector<Face> out;
  for (Face& f : perm_set_gl(mu, type))
    if (is_G_face(f)) out.push_back(std::move(f));
  return out;
}

// ---------------------------------------------------------------------------
// Adm

std::vector<AffineElement> subword_closure(std::size_t n, const std::vector<int>& word, long r) {
  std::unordered_set<AffineElement, AffineElementHash> seen{AffineElement::identity(n)};
  std::vector<AffineElement> products{AffineElement::identity(n)};
  for (int i : word) {
    const AffineElement s = AffineElement::simple_reflection(n, i);
    const std::size_t count = products.size();
    for (std::size_t k = 0; k < count; ++k) {
      AffineElement p = compose(products[k], s);
      if (seen.insert(p).second) products.push_back(std::move(p));
    }
  }
  const AffineElement t = AffineElement::tau_power(n, r);
  for (AffineElement& p : products) p = compose(p, t);
  std::sort(products.begin(), products.end());
  return products;
}

std::vector<AffineElement> extreme_translations(const IntVec& mu, Group group) {
  std::vector<IntVec> orbit;
  if (group == Group::GSp) {
    orbit = sp_weyl_orbit(mu);
  } else {
    IntVec v = mu;
    std::sort(v.begin(), v.end());
    do orbit.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
  }
  std::vector<AffineElement> out;
  for (const IntVec& lambda : orbit) out.push_back(AffineElement::translation_element(lambda));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineElement> adm_elements(const IntVec& mu, Group group) {
  check_configuration(mu, FaceType::iwahori(mu.size()), group);
  std::set<AffineElement> all;
  for (const AffineElement& t : extreme_translations(mu, group)) {
    for (AffineElement& x : subword_closure(mu.size(), reduced_word(t), omega_component(t))) {
      if (group == Group::GSp && !in_symplectic_weyl_group(x)) continue;
      all.insert(std::move(x));
    }
  }
  return {all.begin(), all.end()};
}

std::vector<Face> adm_set(const IntVec& mu, const FaceType& type, Group group) {
  check_configuration(mu, type, group);
  std::vector<Face> out;
  for (const AffineElement& x : adm_elements(mu, group)) out.push_back(face_from_element(x, type));
  return sorted_unique(std::move(out));
}

// ---------------------------------------------------------------------------
// Extension lemma

Extension extend_permissible_traced(const IntVec& v_k, const IntVec& v_l, long k, long l, const IntVec& mu) {
  const std::size_t n = mu.size();
  if (v_k.size() != n || v_l.size() != n) throw std::invalid_argument("extend_permissible: length mismatch");
  if (!(k < l && l <= k + static_cast<long>(n))) throw std::invalid_argument("extend_permissible: need k < l <= k + n");
  const IntVec diff = minus(v_l, v_k);
  if (!is_minuscule(diff)) throw std::invalid_argument("extend_permissible: v_l - v_k is not minuscule");
  if (sum(diff) != l - k) throw std::invalid_argument("extend_permissible: sum(v_l) - sum(v_k) != l - k");
  if (!permissible_gl(v_k, k, mu)) throw std::invalid_argument("extend_permissible: v_k - omega_k not in P_mu");
  if (!permissible_gl(v_l, l, mu)) throw std::invalid_argument("extend_permissible: v_l - omega_l not in P_mu");

  // k' = k + 1 as a 1-based coordinate
  const std::size_t kp = static_cast<std::size_t>(mod(k, static_cast<long>(n)));
  Extension ext{v_k, ExtensionCase::Direct, 0};
  std::size_t m = kp;
  if (diff[kp] != 1) {
    ext.which = ExtensionCase::Sorted;
    const IntVec u = minus(v_k, omega(n, k));
    // sigma lists coordinates so that sigma(u) is dominant, with k' last in
    // its block of equal values. Within a block, coordinates where v_l
    // exceeds v_k come first so the chosen m satisfies v_l(m) - v_k(m) = 1.
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::sort(sigma.begin(), sigma.end(), [&](std::size_t a, std::size_t b) {
      if (u[a] != u[b]) return u[a] > u[b];
      if ((a == kp) != (b == kp)) return b == kp;
      if (diff[a] != diff[b]) return diff[a] > diff[b];
      return a < b;
    });
    std::size_t m2 = 0;  // max position with sigma(v_l) > sigma(v_k)
    for (std::size_t pos = 0; pos < n; ++pos)
      if (diff[sigma[pos]] > 0) m2 = pos;
    std::size_t m1 = m2;  // first position of the same value block
    while (m1 > 0 && u[sigma[m1 - 1]] == u[sigma[m2]]) --m1;
    m = sigma[m1];
  }
  ext.v[m] += 1;
  ext.m = static_cast<int>(m) + 1;
  return ext;
}

IntVec extend_permissible(const IntVec& v_k, const IntVec& v_l, long k, long l, const IntVec& mu) {
  return extend_permissible_traced(v_k, v_l, k, l, mu).v;
}

Face lift_to_alcove_gl(const Face& f, const IntVec& mu) {
  PartialFace partial(f.n());
  for (int i : f.type.indices()) partial.set(i, f.at(i));
  for (int i : f.type.indices()) {
    const long l = partial.next_known(i);
    const IntVec target = partial.get(l);
    IntVec cur = partial.get(i);
    for (long k = i; k + 1 < l; ++k) {
      cur = extend_permissible(cur, target, k, l, mu);
      partial.set(k + 1, cur);
    }
  }
  return partial.to_alcove();
}

Face lift_to_alcove_gsp(const Face& f, const IntVec& mu) {
  const long n = static_cast<long>(f.n());
  auto d = is_G_face(f);
  if (!d) throw std::invalid_argument("lift_to_alcove_gsp: not a G-face");
  PartialFace partial(f.n());
  for (int i : f.type.indices()) partial.set(i, f.at(i));
  for (;;) {
    std::vector<long> known = partial.known();
    if (known.size() == static_cast<std::size_t>(n)) break;
    long k = -1;
    for (long i : known) {
      if (!partial.has(i + 1)) {
        k = i;
        break;
      }
    }
    const long l = partial.next_known(k);
    const IntVec w = extend_permissible(partial.get(k), partial.get(l), k, l, mu);
    partial.set(k + 1, w);
    partial.set(n - (k + 1), plus_const(theta(w), *d));
  }
  return partial.to_alcove();
}

// ---------------------------------------------------------------------------
// Reports

SurjectivityReport perm_surjectivity_check(const IntVec& mu, const FaceType& i_type, const FaceType& j_type,
                                           Group group) {
  check_configuration(mu, i_type, group);
  check_configuration(mu, j_type, group);
  if (!j_type.is_subset_of(i_type)) throw std::invalid_argument("perm_surjectivity_check: J is not a subset of I");

  const std::vector<Face> source = perm_set(mu, i_type, group);
  const std::vector<Face> targets = perm_set(mu, j_type, group);
  const long n = static_cast<long>(mu.size());

  SurjectivityReport report;
  report.targets = targets.size();
  for (const Face& f : targets) {
    try {
      const Face alcove = group == Group::GL ? lift_to_alcove_gl(f, mu) : lift_to_alcove_gsp(f, mu);
      if (group == Group::GSp) {
        // Every mirrored vertex must satisfy the same polytope condition.
        const long dd = sp_shift(mu);
        for (long i = 0; i < n; ++i) {
          const IntVec lambda = minus(alcove.at(i), omega(mu.size(), i));
          if (!in_polytope_sp(to_rational(lambda), mu)) continue;
          const IntVec mirrored = plus_const(theta(lambda), dd);
          if (!in_polytope_sp(to_rational(mirrored), mu)) ++report.mirror_failures;
        }
      }
      Face pre = project(alcove, i_type);
      const bool ok = validate_face(alcove) && project(pre, j_type) == f &&
                      std::binary_search(source.begin(), source.end(), pre);
      if (ok) {
        report.preimages.emplace_back(f, std::move(pre));
      } else {
        report.failures.push_back(f);
      }
    } catch (const std::invalid_argument&) {
      report.failures.push_back(f);
    }
  }
  report.surjective = report.failures.empty() && report.mirror_failures == 0;
  return report;
}

EqualityReport compare_face_sets(const std::vector<Face>& perm, const std::vector<Face>& adm) {
  EqualityReport r;
  r.perm_size = perm.size();
  r.adm_size = adm.size();
  std::set_difference(perm.begin(), perm.end(), adm.begin(), adm.end(), std::back_inserter(r.only_in_perm));
  std::set_difference(adm.begin(), adm.end(), perm.begin(), perm.end(), std::back_inserter(r.only_in_adm));
  r.equal = r.only_in_perm.empty() && r.only_in_adm.empty();
  return r;
}

EqualityReport check_perm_eq_adm(const IntVec& mu, const FaceType& type, Group group) {
  return compare_face_sets(perm_set(mu, type, group), adm_set(mu, type, group));
}

void to_json(nlohmann::json& j, const EqualityReport& r) {
  j = nlohmann::json{{"equal", r.equal},
                     {"perm_size", r.perm_size},
                     {"adm_size", r.adm_size},
                     {"only_in_perm", r.only_in_perm},
                     {"only_in_adm", r.only_in_adm}};
}

void to_json(nlohmann::json& j, const SurjectivityReport& r) {
  nlohmann::json pre = nlohmann::json::array();
  for (const auto& [target, source] : r.preimages) pre.push_back({{"face", target}, {"preimage", source}});
  j = nlohmann::json{{"surjective", r.surjective},
                     {"targets", r.targets},
                     {"preimages", std::move(pre)},
                     {"failures", r.failures},
                     {"mirror_failures", r.mirror_failures}};
}

}  // namespace kr
