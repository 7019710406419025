#pragma once

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace thhcheck::fincat {

// Images of a morphism of the injection category, 1-indexed values.
using ImageVector = boost::container::small_vector<int, 16>;

/// A morphism m -> n of the category of finite sets {1..n} and injective
/// maps. `images()[i - 1]` is the image of i.
class Injection {
 public:
  /// The empty injection 0 -> 0.
  Injection() = default;

  /// Validates that every image lies in 1..target and that images are
  /// pairwise distinct. Throws ArityError otherwise.
  Injection(int target, ImageVector images);

  static Injection identity(int n);
  /// The unique map 0 -> n.
  static Injection empty(int target);
  /// The standard inclusion m -> n, i |-> i.
  static Injection inclusion(int m, int n);

  int source() const noexcept { return static_cast<int>(images_.size()); }
  int target() const noexcept { return target_; }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return {images_.data(), images_.size()}; }

  bool is_bijective() const noexcept { return source() == target_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Injection& a, const Injection& b) noexcept {
    return a.target_ == b.target_ && a.images_ == b.images_;
  }
  friend bool operator<(const Injection& a, const Injection& b) noexcept;

  std::string to_string() const;

 private:
  struct Unchecked {};
  Injection(Unchecked, int target, ImageVector&& images) noexcept : target_(target), images_(std::move(images)) {}

  int target_ = 0;
  ImageVector images_;

  friend Injection compose(const Injection& g, const Injection& f);
  friend Injection concat(const Injection& f, const Injection& g);
  friend Injection concat_all(std::span<const Injection> parts);
  friend Injection concat_indexed(std::span<const Injection> parts, std::span<const int> order);
  friend Injection injection_unrank(int m, int n, std::size_t rank);
  friend class Permutation;
};

/// A bijection of {1..n}; composition convention (g o f)(x) = g(f(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(ImageVector images);
  explicit Permutation(Injection bijection);

  static Permutation identity(int n);

  int degree() const noexcept { return map_.source(); }
  int operator()(int i) const { return map_(i); }
  std::span<const int> images() const noexcept { return map_.images(); }
  const Injection& as_injection() const noexcept { return map_; }
  operator const Injection&() const noexcept { return map_; }  // NOLINT

  bool is_identity() const noexcept { return map_.is_identity(); }
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept { return a.map_ == b.map_; }
  friend bool operator<(const Permutation& a, const Permutation& b) noexcept { return a.map_ < b.map_; }

  std::string to_string() const { return map_.to_string(); }

 private:
  explicit Permutation(Injection::Unchecked, int degree, ImageVector&& images) noexcept
      : map_(Injection::Unchecked{}, degree, std::move(images)) {}
  static Permutation from_trusted(ImageVector images) noexcept {
    const int degree = static_cast<int>(images.size());
    return Permutation(Injection::Unchecked{}, degree, std::move(images));
  }
  static Permutation from_trusted(Injection bijection) noexcept {
    Permutation p;
    p.map_ = std::move(bijection);
    return p;
  }

  Injection map_;

  friend Permutation compose(const Permutation& g, const Permutation& f);
  friend Permutation concat(const Permutation& f, const Permutation& g);
  friend Permutation block_permutation(int m, int n);
  friend Permutation adjacent_transposition(int n, int i);
  friend Permutation canonical_extension(const Injection& f);
};

/// g o f. Throws CompositionError unless f.target() == g.source().
Injection compose(const Injection& g, const Injection& f);
Permutation compose(const Permutation& g, const Permutation& f);

/// Ordered concatenation f |_| g: the first block maps by f, the second by g
/// shifted by f.target().
Injection concat(const Injection& f, const Injection& g);
Permutation concat(const Permutation& f, const Permutation& g);
/// Concatenation of a whole sequence; the empty sequence gives 0 -> 0.
Injection concat_all(std::span<const Injection> parts);
/// parts[order[0]] |_| parts[order[1]] |_| ...
Injection concat_indexed(std::span<const Injection> parts, std::span<const int> order);

/// The symmetry tau_(m,n): m |_| n -> n |_| m, i |-> n + i, m + j |-> j.
Permutation block_permutation(int m, int n);

/// s_i on n: swaps i and i + 1. Throws ArityError unless 1 <= i < n.
Permutation adjacent_transposition(int n, int i);

/// n! / (n - m)!, or 0 when m > n.
std::uint64_t count_injections(int m, int n);

/// All injections m -> n in lexicographic order of their image sequences.
std::vector<Injection> enumerate_injections(int m, int n);
std::vector<Permutation> enumerate_permutations(int n);

/// Position of f in enumerate_injections(f.source(), f.target()).
std::size_t injection_rank(const Injection& f);
/// Inverse of injection_rank.
Injection injection_unrank(int m, int n, std::size_t rank);

/// Extends f: m -> n to a permutation of n that agrees with f on 1..m and
/// sends m+1..n onto the complement of the image in increasing order.
Permutation canonical_extension(const Injection& f);

}  // namespace thhcheck::fincat
