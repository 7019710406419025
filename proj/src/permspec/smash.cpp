#include "thhcheck/permspec/smash.hpp"

#include "thhcheck/disjoint_set.hpp"

namespace thhcheck::permspec {

namespace {

// Slot of the (n1, n2) block in first_; n1 + n2 <= n.
std::size_t pair_slot(int n, int n1, int n2) { return static_cast<std::size_t>(n1 * (n + 1) + n2); }

}  // namespace

std::size_t SymSeqLevel::index_of(const Injection& alpha, int n1, int x, int y) const {
  const int n2 = alpha.source() - n1;
  const std::size_t slot = pair_slot(level_, n1, n2);
  const auto ys = static_cast<std::size_t>(y_count_[static_cast<std::size_t>(n2)]);
  const std::size_t per_alpha = static_cast<std::size_t>(x_count_[static_cast<std::size_t>(n1)]) * ys;
  return first_[slot] + fincat::injection_rank(alpha) * per_alpha + static_cast<std::size_t>(x - 1) * ys +
         static_cast<std::size_t>(y - 1);
}

std::size_t SymSeqLevel::class_of(const Injection& alpha, int n1, int x, int y) const {
  if (alpha.target() != level_ || n1 < 0 || n1 > alpha.source()) {
    throw DiagramError("triple does not live at level " + std::to_string(level_));
  }
  if (x == 0 || y == 0) return 0;
  return representative_.at(index_of(alpha, n1, x, y) + 1);
}

SymSeqLevel smash_level(const TruncatedIDiagram& X, const TruncatedIDiagram& Y, int n) {
  if (n < 0 || n > X.bound() || n > Y.bound()) {
    throw DiagramError("smash level " + std::to_string(n) + " exceeds the truncation");
  }
  SymSeqLevel s;
  s.level_ = n;
  for (int m = 0; m <= n; ++m) {
    s.x_count_.push_back(X.level_size(m) - 1);
    s.y_count_.push_back(Y.level_size(m) - 1);
  }
  s.first_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int n2 = 0; n1 + n2 <= n; ++n2) {
      s.first_[pair_slot(n, n1, n2)] = s.triples_.size();
      for (auto& alpha : fincat::enumerate_injections(n1 + n2, n)) {
        for (int x = 1; x <= s.x_count_[static_cast<std::size_t>(n1)]; ++x) {
          for (int y = 1; y <= s.y_count_[static_cast<std::size_t>(n2)]; ++y) s.triples_.push_back({alpha, n1, x, y});
        }
      }
    }
  }

  // Node 0 is the basepoint, node i + 1 the i-th triple.
  DisjointSet classes(s.triples_.size() + 1);
  auto node = [&](const Injection& alpha, int n1, int x, int y) -> std::size_t {
    return x == 0 || y == 0 ? 0 : s.index_of(alpha, n1, x, y) + 1;
  };
  // Generators b: m -> m' act on one side; for every alpha': m' |_| n2 -> n
  // unite (alpha' o (b |_| id), x, y) with (alpha', b x, y), and likewise on
  // the right.
  struct Gen {
    Injection map;
    int swap;  // i for s_i, 0 for the inclusion
  };
  auto generators_into = [](int m) {
    std::vector<Gen> out;
    for (int i = 1; i < m; ++i) out.push_back({fincat::adjacent_transposition(m, i).as_injection(), i});
    if (m >= 1) out.push_back({Injection::inclusion(m - 1, m), 0});
    return out;
  };
  auto act = [](const TruncatedIDiagram& d, const Gen& g, int v) {
    return g.swap ? d.transpose(g.map.target(), g.swap, v) : d.include(g.map.source(), v);
  };
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      for (const auto& alpha : fincat::enumerate_injections(a + b, n)) {
        for (const Gen& g : generators_into(a)) {
          const int m = g.map.source();
          const Injection moved = compose(alpha, fincat::concat(g.map, Injection::identity(b)));
          for (int x = 1; x < X.level_size(m); ++x) {
            for (int y = 1; y < Y.level_size(b); ++y) {
              classes.unite(node(moved, m, x, y), node(alpha, a, act(X, g, x), y));
            }
          }
        }
        for (const Gen& g : generators_into(b)) {
          const int m = g.map.source();
          const Injection moved = compose(alpha, fincat::concat(Injection::identity(a), g.map));
          for (int x = 1; x < X.level_size(a); ++x) {
            for (int y = 1; y < Y.level_size(m); ++y) {
              classes.unite(node(moved, a, x, y), node(alpha, a, x, act(Y, g, y)));
            }
          }
        }
      }
    }
  }
  s.representative_.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    s.representative_[i] = classes.find(i);
    if (s.representative_[i] == i) ++s.class_count_;
  }
  return s;
}

std::size_t canonical_smash_map(const SymSeqLevel& s, int n1, int x, int y) {
  return s.class_of(Injection::identity(s.level()), n1, x, y);
}

}  // namespace thhcheck::permspec
