#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace coxtile {

// Permutation of {0,...,n-1} in one-line form, n <= 16.  Composition acts as
// function application: (u * v)[x] = u[v[x]].
class Perm {
 public:
  static constexpr int kMaxSize = 16;

  Perm() { img_.fill(0); }

  static Perm identity(int n);
  // Validates that images is a bijection on {0..n-1}; throws ParseError.
  static Perm from_images(const std::vector<int>& images);

  int size() const { return n_; }
  int operator[](int x) const { return img_[static_cast<size_t>(x)]; }

  friend Perm operator*(const Perm& u, const Perm& v);
  Perm inverse() const;
  bool is_identity() const;
  int order() const;

  std::vector<int> images() const;
  size_t hash() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::array<int8_t, kMaxSize> img_{};
  int8_t n_ = 0;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace coxtile
