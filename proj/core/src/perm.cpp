#include "coxtile/perm.hpp"

#include "coxtile/errors.hpp"

namespace coxtile {

Perm Perm::identity(int n) {
  if (n < 0 || n > kMaxSize) throw Error("permutation size out of range");
  Perm p;
  p.n_ = static_cast<int8_t>(n);
  for (int i = 0; i < n; ++i) p.img_[static_cast<size_t>(i)] = static_cast<int8_t>(i);
  return p;
}

Perm Perm::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxSize) throw ParseError("permutation size out of range");
  Perm p;
  p.n_ = static_cast<int8_t>(n);
  uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<size_t>(i)];
    if (v < 0 || v >= n || (seen >> v & 1u))
      throw ParseError("not a permutation: invalid or repeated image");
    seen |= 1u << v;
    p.img_[static_cast<size_t>(i)] = static_cast<int8_t>(v);
  }
  return p;
}

Perm operator*(const Perm& u, const Perm& v) {
  Perm r;
  r.n_ = u.n_;
  for (int x = 0; x < u.n_; ++x)
    r.img_[static_cast<size_t>(x)] = u.img_[static_cast<size_t>(v.img_[static_cast<size_t>(x)])];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.n_ = n_;
  for (int x = 0; x < n_; ++x)
    r.img_[static_cast<size_t>(img_[static_cast<size_t>(x)])] = static_cast<int8_t>(x);
  return r;
}

bool Perm::is_identity() const {
  for (int x = 0; x < n_; ++x)
    if (img_[static_cast<size_t>(x)] != x) return false;
  return true;
}

int Perm::order() const {
  Perm acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    if (++k > 1000000) throw Error("permutation order runaway");
  }
  return k;
}

std::vector<int> Perm::images() const {
  std::vector<int> out(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<size_t>(i)] = img_[static_cast<size_t>(i)];
  return out;
}

size_t Perm::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) {
    h ^= static_cast<uint64_t>(img_[static_cast<size_t>(i)]);
    h *= 1099511628211ull;
  }
  h ^= static_cast<uint64_t>(n_);
  h *= 1099511628211ull;
  return static_cast<size_t>(h);
}

}  // namespace coxtile
