#include "kr/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace kr {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_same_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": rank mismatch");
}

}  // namespace

QVec to_rational(const IntVec& v) {
  QVec out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("permutation: not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, int a, int b) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::swap(im[static_cast<std::size_t>(a)], im[static_cast<std::size_t>(b)]);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) inv[static_cast<std::size_t>(images_[j])] = static_cast<int>(j);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::after(const Permutation& other) const {
  require_same_rank(size(), other.size(), "permutation compose");
  std::vector<int> im(images_.size());
  for (std::size_t j = 0; j < im.size(); ++j) im[j] = images_[static_cast<std::size_t>(other.images_[j])];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != static_cast<int>(j)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// AffineElement

AffineElement::AffineElement(IntVec translation, Permutation perm)
    : translation_(std::move(translation)), perm_(std::move(perm)) {
  require_same_rank(translation_.size(), perm_.size(), "affine element");
}

AffineElement AffineElement::identity(std::size_t n) {
  return AffineElement(IntVec(n, 0), Permutation::identity(n));
}

AffineElement AffineElement::translation_element(const IntVec& mu) {
  return AffineElement(mu, Permutation::identity(mu.size()));
}

AffineElement AffineElement::simple_reflection(std::size_t n, int i) {
  if (n < 2 || i < 0 || static_cast<std::size_t>(i) >= n)
    throw std::invalid_argument("simple reflection index out of range");
  if (i == 0) {
    IntVec t(n, 0);
    t.front() = 1;
    t.back() = -1;
    return AffineElement(std::move(t), Permutation::transposition(n, 0, static_cast<int>(n) - 1));
  }
  return AffineElement(IntVec(n, 0), Permutation::transposition(n, i - 1, i));
}

AffineElement AffineElement::tau(std::size_t n) {
  std::vector<int> im(n);
  for (std::size_t j = 0; j < n; ++j) im[j] = static_cast<int>((j + 1) % n);
  IntVec t(n, 0);
  if (n > 0) t[0] = 1;
  return AffineElement(std::move(t), Permutation(std::move(im)));
}

AffineElement AffineElement::tau_power(std::size_t n, long r) {
  AffineElement step = r >= 0 ? tau(n) : tau(n).inverse();
  AffineElement out = identity(n);
  for (long k = 0; k < std::labs(r); ++k) out = compose(out, step);
  return out;
}

AffineElement AffineElement::inverse() const {
  // x^{-1}(v) = w^{-1}(v - t) = -w^{-1}(t) + w^{-1}(v)
  Permutation winv = perm_.inverse();
  IntVec t = winv.apply(translation_);
  for (long& x : t) x = -x;
  return AffineElement(std::move(t), std::move(winv));
}

IntVec AffineElement::act(const IntVec& v) const {
  IntVec out = perm_.apply(v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += translation_[i];
  return out;
}

QVec AffineElement::act(const QVec& v) const {
  QVec out = perm_.apply(v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += translation_[i];
  return out;
}

AffineElement compose(const AffineElement& x, const AffineElement& y) {
  require_same_rank(x.rank(), y.rank(), "compose");
  IntVec t = x.perm().apply(y.translation());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += x.translation()[i];
  return AffineElement(std::move(t), x.perm().after(y.perm()));
}

IntVec act(const AffineElement& x, const IntVec& v) {
  require_same_rank(x.rank(), v.size(), "act");
  return x.act(v);
}

QVec act(const AffineElement& x, const QVec& v) {
  require_same_rank(x.rank(), v.size(), "act");
  return x.act(v);
}

AffineElement translation_element(const QVec& mu) {
  IntVec t;
  t.reserve(mu.size());
  for (const Rational& q : mu) {
    if (q.get_den() != 1) throw std::invalid_argument("translation_element: non-integer entry");
    t.push_back(q.get_num().get_si());
  }
  return AffineElement::translation_element(t);
}

long length(const AffineElement& x) {
  const long n = static_cast<long>(x.rank());
  // n * barycenter of the base alcove is (n-1, n-2, ..., 0).
  IntVec bary(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) bary[static_cast<std::size_t>(i)] = n - 1 - i;
  IntVec image = x.perm().apply(bary);
  for (long i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] += n * x.translation()[static_cast<std::size_t>(i)];
  long count = 0;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      count += std::labs(floor_div(image[static_cast<std::size_t>(i)] - image[static_cast<std::size_t>(j)], n));
  return count;
}

long omega_component(const AffineElement& x) {
  return std::accumulate(x.translation().begin(), x.translation().end(), 0L);
}

bool is_left_descent(const AffineElement& x, int i) {
  return length(compose(AffineElement::simple_reflection(x.rank(), i), x)) < length(x);
}

std::vector<int> reduced_word(const AffineElement& x) {
  const std::size_t n = x.rank();
  std::vector<int> word;
  AffineElement cur = x;
  long len = length(cur);
  while (len > 0) {
    bool stepped = false;
    for (int i = 0; i < static_cast<int>(n); ++i) {
      AffineElement next = compose(AffineElement::simple_reflection(n, i), cur);
      long next_len = length(next);
      if (next_len < len) {
        word.push_back(i);
        cur = std::move(next);
        len = next_len;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("reduced_word: no descent found for element of positive length");
  }
  return word;
}

AffineElement word_product(std::size_t n, const std::vector<int>& word, long r) {
  AffineElement out = AffineElement::identity(n);
  for (int i : word) out = compose(out, AffineElement::simple_reflection(n, i));
  return compose(out, AffineElement::tau_power(n, r));
}

void to_json(nlohmann::json& j, const AffineElement& x) {
  std::vector<int> w;
  for (int im : x.perm().images()) w.push_back(im + 1);
  j = nlohmann::json{{"t", x.translation()}, {"w", w}};
}

void from_json(const nlohmann::json& j, AffineElement& x) {
  IntVec t = j.at("t").get<IntVec>();
  std::vector<int> w = j.at("w").get<std::vector<int>>();
  for (int& im : w) --im;
  x = AffineElement(std::move(t), Permutation(std::move(w)));
}

std::size_t AffineElementHash::operator()(const AffineElement& x) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](long v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (long v : x.translation()) mix(v);
  for (int v : x.perm().images()) mix(v);
  return h;
}

}  // namespace kr
