#include "thhcheck/fincat/injection.hpp"

#include <algorithm>
#include <sstream>

#include "thhcheck/error.hpp"

namespace thhcheck::fincat {

namespace {

// Tracks used values 1..n without allocating for the common small case.
class UsedSet {
 public:
  explicit UsedSet(int n) : n_(n) {
    if (n > 64) wide_.assign(static_cast<std::size_t>(n) + 1, false);
  }

  // Returns false if v was already present.
  bool insert(int v) {
    if (n_ > 64) {
      if (wide_[static_cast<std::size_t>(v)]) return false;
      wide_[static_cast<std::size_t>(v)] = true;
      return true;
    }
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (mask_ & bit) return false;
    mask_ |= bit;
    return true;
  }

  bool contains(int v) const {
    if (n_ > 64) return wide_[static_cast<std::size_t>(v)];
    return (mask_ >> (v - 1)) & 1U;
  }

 private:
  int n_;
  std::uint64_t mask_ = 0;
  std::vector<bool> wide_;
};

std::uint64_t falling_factorial(int n, int m) {
  std::uint64_t out = 1;
  for (int i = 0; i < m; ++i) out *= static_cast<std::uint64_t>(n - i);
  return out;
}

void enumerate_into(int m, int n, ImageVector& prefix, UsedSet& used, std::vector<Injection>& out) {
  if (static_cast<int>(prefix.size()) == m) {
    out.emplace_back(n, prefix);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used.contains(v)) continue;
    UsedSet next = used;
    next.insert(v);
    prefix.push_back(v);
    enumerate_into(m, n, prefix, next, out);
    prefix.pop_back();
  }
}

}  // namespace

Injection::Injection(int target, ImageVector images) : target_(target), images_(std::move(images)) {
  if (target < 0) throw ArityError("injection target must be non-negative");
  if (source() > target) {
    throw ArityError("no injection " + std::to_string(source()) + " -> " + std::to_string(target));
  }
  UsedSet used(target);
  for (int v : images_) {
    if (v < 1 || v > target) {
      throw ArityError("image " + std::to_string(v) + " outside 1.." + std::to_string(target));
    }
    if (!used.insert(v)) throw ArityError("image " + std::to_string(v) + " repeated");
  }
}

Injection Injection::identity(int n) {
  ImageVector images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return {Unchecked{}, n, std::move(images)};
}

Injection Injection::empty(int target) {
  if (target < 0) throw ArityError("injection target must be non-negative");
  return {Unchecked{}, target, {}};
}

Injection Injection::inclusion(int m, int n) {
  if (m > n || m < 0) throw ArityError("no standard inclusion " + std::to_string(m) + " -> " + std::to_string(n));
  ImageVector images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return {Unchecked{}, n, std::move(images)};
}

bool Injection::is_identity() const noexcept {
  if (source() != target_) return false;
  for (int i = 0; i < source(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

bool operator<(const Injection& a, const Injection& b) noexcept {
  if (a.source() != b.source()) return a.source() < b.source();
  if (a.target_ != b.target_) return a.target_ < b.target_;
  return std::lexicographical_compare(a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
}

std::string Injection::to_string() const {
  std::ostringstream os;
  os << source() << "->" << target_ << " [";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

Permutation::Permutation(ImageVector images) {
  const int n = static_cast<int>(images.size());
  map_ = Injection(n, std::move(images));
}

Permutation::Permutation(Injection bijection) : map_(std::move(bijection)) {
  if (!map_.is_bijective()) throw ArityError("not a permutation: " + map_.to_string());
}

Permutation Permutation::identity(int n) { return Permutation(Injection::identity(n)); }

Permutation Permutation::inverse() const {
  ImageVector inv(static_cast<std::size_t>(degree()));
  for (int i = 1; i <= degree(); ++i) inv[static_cast<std::size_t>(map_(i) - 1)] = i;
  return from_trusted(std::move(inv));
}

Injection compose(const Injection& g, const Injection& f) {
  if (f.target() != g.source()) {
    throw CompositionError("cannot compose " + g.to_string() + " after " + f.to_string());
  }
  ImageVector images(f.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = g(f.images_[i]);
  return {Injection::Unchecked{}, g.target(), std::move(images)};
}

Permutation compose(const Permutation& g, const Permutation& f) {
  return Permutation::from_trusted(compose(g.map_, f.map_));
}

Injection concat(const Injection& f, const Injection& g) {
  ImageVector images;
  images.reserve(f.images_.size() + g.images_.size());
  images.insert(images.end(), f.images_.begin(), f.images_.end());
  for (int v : g.images_) images.push_back(v + f.target());
  return {Injection::Unchecked{}, f.target() + g.target(), std::move(images)};
}

Permutation concat(const Permutation& f, const Permutation& g) {
  return Permutation::from_trusted(concat(f.map_, g.map_));
}

Injection concat_all(std::span<const Injection> parts) {
  ImageVector images;
  int offset = 0;
  for (const auto& p : parts) {
    for (int v : p.images_) images.push_back(v + offset);
    offset += p.target();
  }
  return {Injection::Unchecked{}, offset, std::move(images)};
}

Injection concat_indexed(std::span<const Injection> parts, std::span<const int> order) {
  ImageVector images;
  int offset = 0;
  for (int i : order) {
    const Injection& p = parts[static_cast<std::size_t>(i)];
    for (int v : p.images_) images.push_back(v + offset);
    offset += p.target();
  }
  return {Injection::Unchecked{}, offset, std::move(images)};
}

Permutation block_permutation(int m, int n) {
  if (m < 0 || n < 0) throw ArityError("block sizes must be non-negative");
  ImageVector images(static_cast<std::size_t>(m + n));
  for (int i = 1; i <= m; ++i) images[static_cast<std::size_t>(i - 1)] = n + i;
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(m + j - 1)] = j;
  return Permutation::from_trusted(std::move(images));
}

Permutation adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw ArityError("no transposition s_" + std::to_string(i) + " on " + std::to_string(n));
  ImageVector images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j - 1)] = j;
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
  return Permutation::from_trusted(std::move(images));
}

std::uint64_t count_injections(int m, int n) {
  if (m < 0 || n < 0 || m > n) return 0;
  return falling_factorial(n, m);
}

std::vector<Injection> enumerate_injections(int m, int n) {
  std::vector<Injection> out;
  if (m < 0 || n < 0 || m > n) return out;
  out.reserve(count_injections(m, n));
  ImageVector prefix;
  UsedSet used(n);
  enumerate_into(m, n, prefix, used, out);
  return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> out;
  for (auto& f : enumerate_injections(n, n)) out.emplace_back(std::move(f));
  return out;
}

std::size_t injection_rank(const Injection& f) {
  const int m = f.source();
  const int n = f.target();
  UsedSet used(n);
  std::uint64_t rank = 0;
  for (int i = 0; i < m; ++i) {
    const int v = f.images()[static_cast<std::size_t>(i)];
    int smaller_free = 0;
    for (int u = 1; u < v; ++u) {
      if (!used.contains(u)) ++smaller_free;
    }
    rank += static_cast<std::uint64_t>(smaller_free) * falling_factorial(n - i - 1, m - i - 1);
    used.insert(v);
  }
  return static_cast<std::size_t>(rank);
}

Injection injection_unrank(int m, int n, std::size_t rank) {
  const std::uint64_t total = count_injections(m, n);
  if (rank >= total) throw ArityError("injection rank out of range");
  UsedSet used(n);
  ImageVector images;
  std::uint64_t rest = rank;
  std::uint64_t block = total;
  for (int i = 0; i < m; ++i) {
    block /= static_cast<std::uint64_t>(n - i);
    auto skip = static_cast<int>(rest / block);
    rest %= block;
    for (int v = 1; v <= n; ++v) {
      if (used.contains(v)) continue;
      if (skip-- == 0) {
        images.push_back(v);
        used.insert(v);
        break;
      }
    }
  }
  return {Injection::Unchecked{}, n, std::move(images)};
}

Permutation canonical_extension(const Injection& f) {
  ImageVector images(f.images().begin(), f.images().end());
  UsedSet used(f.target());
  for (int v : images) used.insert(v);
  for (int v = 1; v <= f.target(); ++v) {
    if (!used.contains(v)) images.push_back(v);
  }
  return Permutation::from_trusted(std::move(images));
}

}  // namespace thhcheck::fincat
