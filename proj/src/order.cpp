#include "kr/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kr/hull.hpp"

namespace kr {

std::string to_string(Group g) { return g == Group::GL ? "gl" : "gsp"; }

Group group_from_string(const std::string& s) {
  if (s == "gl") return Group::GL;
  if (s == "gsp") return Group::GSp;
  throw std::invalid_argument("unknown group '" + s + "'");
}

bool is_dominant(const IntVec& v) { return std::is_sorted(v.rbegin(), v.rend()); }
bool is_dominant(const QVec& v) { return std::is_sorted(v.rbegin(), v.rend()); }

namespace {

template <typename T>
bool majorized(const std::vector<T>& lambda, const std::vector<T>& mu) {
  T a = 0, b = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    a += lambda[i];
    b += mu[i];
    if (a > b) return false;
  }
  return a == b;
}

}  // namespace

bool dominance_leq(const QVec& lambda, const QVec& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance_leq: length mismatch");
  if (!is_dominant(lambda) || !is_dominant(mu)) throw std::invalid_argument("dominance_leq: non-dominant input");
  return majorized(lambda, mu);
}

bool dominance_leq(const IntVec& lambda, const IntVec& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance_leq: length mismatch");
  if (!is_dominant(lambda) || !is_dominant(mu)) throw std::invalid_argument("dominance_leq: non-dominant input");
  return majorized(lambda, mu);
}

MuPolytope::MuPolytope(IntVec mu_, Group group_) : mu(std::move(mu_)), group(group_) {
  if (!is_dominant(mu)) throw std::invalid_argument("MuPolytope: mu not dominant");
  if (group == Group::GSp) {
    if (mu.size() % 2 != 0 || mu.empty()) throw std::invalid_argument("MuPolytope: GSp needs even rank");
    const std::size_t n = mu.size();
    for (std::size_t i = 0; i < n; ++i)
      if (mu[i] + mu[n - 1 - i] != mu[0] + mu[n - 1])
        throw std::invalid_argument("MuPolytope: not a GSp coweight");
  }
}

bool in_polytope(const QVec& v, const IntVec& mu) {
  if (v.size() != mu.size()) throw std::invalid_argument("in_polytope: length mismatch");
  QVec sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return majorized(sorted, to_rational(mu));
}

bool in_polytope(const IntVec& v, const IntVec& mu) {
  if (v.size() != mu.size()) throw std::invalid_argument("in_polytope: length mismatch");
  IntVec sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return majorized(sorted, mu);
}

std::vector<IntVec> sp_weyl_orbit(const IntVec& mu) {
  const std::size_t n = mu.size();
  if (n % 2 != 0) throw std::invalid_argument("sp_weyl_orbit: odd length");
  const std::size_t g = n / 2;
  std::set<IntVec> orbit;
  std::vector<std::size_t> pairs(g);
  std::iota(pairs.begin(), pairs.end(), 0);
  do {
    for (std::size_t flips = 0; flips < (std::size_t{1} << g); ++flips) {
      // pair j = {j, n-1-j} goes to pair pairs[j], swapped if bit j is set.
      IntVec out(n);
      for (std::size_t j = 0; j < g; ++j) {
        std::size_t lo = pairs[j], hi = n - 1 - pairs[j];
        bool swap = (flips >> j) & 1U;
        out[swap ? hi : lo] = mu[j];
        out[swap ? lo : hi] = mu[n - 1 - j];
      }
      orbit.insert(std::move(out));
    }
  } while (std::next_permutation(pairs.begin(), pairs.end()));
  return {orbit.begin(), orbit.end()};
}

bool in_polytope_sp(const QVec& v, const IntVec& mu) {
  if (v.size() != mu.size()) throw std::invalid_argument("in_polytope_sp: length mismatch");
  if (v.size() % 2 != 0) throw std::invalid_argument("in_polytope_sp: odd length");
  thread_local std::map<IntVec, std::vector<QVec>> orbit_cache;
  thread_local std::map<std::pair<IntVec, QVec>, bool> result_cache;
  auto key = std::make_pair(mu, v);
  if (auto it = result_cache.find(key); it != result_cache.end()) return it->second;

  auto [it, inserted] = orbit_cache.try_emplace(mu);
  if (inserted)
    for (const IntVec& p : sp_weyl_orbit(mu)) it->second.push_back(to_rational(p));
  bool result = convex_hull_contains(it->second, v);
  if (result_cache.size() > (1U << 18)) result_cache.clear();
  result_cache.emplace(std::move(key), result);
  return result;
}

bool in_polytope(const QVec& v, const MuPolytope& p) {
  return p.group == Group::GL ? in_polytope(v, p.mu) : in_polytope_sp(v, p.mu);
}

// ---------------------------------------------------------------------------
// Bruhat order

std::size_t BruhatOrder::PairHash::operator()(const std::pair<AffineElement, AffineElement>& p) const noexcept {
  AffineElementHash h;
  return h(p.first) * 31 + h(p.second);
}

bool BruhatOrder::leq(const AffineElement& x, const AffineElement& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  if (omega_component(x) != omega_component(y)) return false;
  return leq_same_component(x, length(x), y, length(y));
}

bool BruhatOrder::leq_same_component(const AffineElement& x, long lx, const AffineElement& y, long ly) {
  if (lx > ly) return false;
  if (lx == ly) return x == y;
  auto key = std::make_pair(x, y);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Lifting property: for s with sy < y, x <= y iff min(x, sx) <= sy.
  const std::size_t n = y.rank();
  bool result = false;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    AffineElement s = AffineElement::simple_reflection(n, i);
    AffineElement sy = compose(s, y);
    if (length(sy) >= ly) continue;
    AffineElement sx = compose(s, x);
    long lsx = length(sx);
    result = lsx < lx ? leq_same_component(sx, lsx, sy, ly - 1) : leq_same_component(x, lx, sy, ly - 1);
    break;
  }
  if (memo_.size() > (1U << 20)) memo_.clear();
  memo_.emplace(std::move(key), result);
  return result;
}

bool bruhat_leq(const AffineElement& x, const AffineElement& y) {
  thread_local BruhatOrder order;
  return order.leq(x, y);
}

std::vector<AffineElement> maximal_elements(const std::vector<AffineElement>& s) {
  std::vector<std::pair<long, AffineElement>> by_length;
  by_length.reserve(s.size());
  for (const AffineElement& x : s) by_length.emplace_back(length(x), x);
  std::sort(by_length.begin(), by_length.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<AffineElement> out;
  for (std::size_t i = 0; i < by_length.size(); ++i) {
    const auto& [lx, x] = by_length[i];
    bool dominated = false;
    for (std::size_t j = 0; j < by_length.size() && by_length[j].first > lx; ++j) {
      if (bruhat_leq(x, by_length[j].second)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace kr
