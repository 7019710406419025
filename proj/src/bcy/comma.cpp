#include "thhcheck/bcy/comma.hpp"

#include <stdexcept>
#include <vector>

#include "thhcheck/disjoint_set.hpp"
#include "thhcheck/fincat/injection.hpp"
#include "thhcheck/sweep.hpp"

namespace thhcheck::bcy {

namespace {

struct Object {
  int n1;
  int n2;
  int point;  // h(1)

  bool in_first_block() const { return point <= n1; }
};

// Objects indexed densely: (n1, n2) pairs in order, then h(1).
class CommaGraph {
 public:
  explicit CommaGraph(int max_n) : max_n_(max_n) {
    if (max_n < 1) throw std::invalid_argument("comma category needs max_n >= 1");
    require_bound("max_n", max_n, 6);
    for (int n1 = 0; n1 <= max_n; ++n1) {
      for (int n2 = 0; n2 <= max_n; ++n2) {
        offset_.push_back(static_cast<int>(objects_.size()));
        for (int p = 1; p <= n1 + n2; ++p) objects_.push_back({n1, n2, p});
      }
    }
  }

  std::size_t size() const { return objects_.size(); }
  const Object& operator[](std::size_t i) const { return objects_[i]; }

  std::size_t index_of(int n1, int n2, int point) const {
    return static_cast<std::size_t>(offset_[static_cast<std::size_t>(n1 * (max_n_ + 1) + n2)] + point - 1);
  }

  // Calls edge(from, to) for every morphism (f1, f2) out of every object.
  template <class Edge>
  void for_each_edge(Edge edge) const {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      const Object& o = objects_[i];
      for (int m1 = o.n1; m1 <= max_n_; ++m1) {
        for (int m2 = o.n2; m2 <= max_n_; ++m2) {
          for (const auto& f1 : fincat::enumerate_injections(o.n1, m1)) {
            for (const auto& f2 : fincat::enumerate_injections(o.n2, m2)) {
              const int image = fincat::concat(f1, f2)(o.point);
              edge(i, index_of(m1, m2, image));
            }
          }
        }
      }
    }
  }

 private:
  int max_n_;
  std::vector<Object> objects_;
  std::vector<int> offset_;
};

int count_components(const CommaGraph& graph) {
  DisjointSet classes(graph.size());
  graph.for_each_edge([&](std::size_t a, std::size_t b) { classes.unite(a, b); });
  int count = 0;
  for (std::size_t i = 0; i < graph.size(); ++i) count += classes.find(i) == i;
  return count;
}

}  // namespace

int comma_components_mu2(int max_n) { return count_components(CommaGraph(max_n)); }

Report verify_comma_components(int max_n) {
  if (max_n < 1) throw std::invalid_argument("comma category needs max_n >= 1");
  Report report;
  nlohmann::json counts = nlohmann::json::array();
  for (int n = 1; n <= max_n; ++n) {
    const CommaGraph graph(n);
    graph.for_each_edge([&](std::size_t a, std::size_t b) {
      ++report.instances_checked;
      if (graph[a].in_first_block() != graph[b].in_first_block()) {
        report.add_violation({{"max_n", n},
                              {"from", {graph[a].n1, graph[a].n2, graph[a].point}},
                              {"to", {graph[b].n1, graph[b].n2, graph[b].point}}});
      }
    });
    const int components = count_components(graph);
    counts.push_back(components);
    if (components != 2) report.add_violation({{"max_n", n}, {"components", components}});
    report.value = components;
  }
  report.details = {{"components_by_max_n", counts}};
  return report;
}

}  // namespace thhcheck::bcy
