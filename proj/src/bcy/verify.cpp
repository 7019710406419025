#include "thhcheck/bcy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "thhcheck/fincat/json_io.hpp"
#include "thhcheck/sweep.hpp"

namespace thhcheck::bcy {

using fincat::concat_all;
using fincat::count_injections;
using fincat::enumerate_injections;
using fincat::enumerate_monotone_maps;
using nlohmann::json;

namespace {

json tuple_json(std::span<const int> t) { return json(std::vector<int>(t.begin(), t.end())); }

json maps_json(std::span<const Injection> maps) {
  json out = json::array();
  for (const auto& f : maps) out.push_back(f);
  return out;
}

int sum(std::span<const int> t) {
  int s = 0;
  for (int v : t) s += v;
  return s;
}

// Largest value <= `value` whose cost fits `budget`; throws BoundError
// naming it when `value` itself does not fit.
template <class Cost>
void require_budget(const std::string& name, int value, double budget, Cost cost) {
  if (cost(value) <= budget) return;
  int best = value;
  while (best > 0 && cost(best) > budget) --best;
  throw BoundError(name + " = " + std::to_string(value) + " makes the sweep too large to enumerate (maximum " +
                       std::to_string(best) + ")",
                   best);
}

double monotone_count(int k, int l) {
  // C(k + l + 1, k + 1)
  double c = 1;
  for (int i = 1; i <= k + 1; ++i) c = c * (l + i) / i;
  return c;
}

// ---------------------------------------------------------------------------
// Operator strings for the identity checks, listed in application order.

struct Op {
  enum Kind : std::uint8_t { Face, Degeneracy, Cyclic } kind;
  int index;
};

using Ops = boost::container::small_vector<Op, 8>;

std::string describe(const Ops& ops) {
  if (ops.empty()) return "id";
  std::string out;
  // Written in composition order: the last operator applied comes first.
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += it->kind == Op::Face         ? "d" + std::to_string(it->index)
           : it->kind == Op::Degeneracy ? "s" + std::to_string(it->index)
                                        : std::string("t");
  }
  return out;
}

struct Identity {
  std::string family;
  Ops lhs;
  Ops rhs;
};

Op d(int i) { return {Op::Face, i}; }
Op s(int i) { return {Op::Degeneracy, i}; }
Op t() { return {Op::Cyclic, 0}; }

std::vector<Identity> simplicial_identities(int k) {
  std::vector<Identity> out;
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i < j; ++i) {
      if (k >= 2) out.push_back({"d_i d_j = d_(j-1) d_i", {d(j), d(i)}, {d(i), d(j - 1)}});
      out.push_back({"d_i s_j = s_(j-1) d_i", {s(j), d(i)}, {d(i), s(j - 1)}});
    }
    out.push_back({"d_j s_j = id", {s(j), d(j)}, {}});
    out.push_back({"d_(j+1) s_j = id", {s(j), d(j + 1)}, {}});
    for (int i = j + 2; i <= k + 1; ++i) out.push_back({"d_i s_j = s_j d_(i-1)", {s(j), d(i)}, {d(i - 1), s(j)}});
    for (int i = 0; i <= j; ++i) out.push_back({"s_i s_j = s_(j+1) s_i", {s(j), s(i)}, {s(i), s(j + 1)}});
  }
  return out;
}

std::vector<Identity> cyclic_identities(int k) {
  std::vector<Identity> out;
  Ops full;
  for (int r = 0; r <= k; ++r) full.push_back(t());
  out.push_back({"t^(k+1) = id", full, {}});
  if (k >= 1) out.push_back({"d_0 t = d_k", {t(), d(0)}, {d(k)}});
  for (int i = 1; i <= k; ++i) out.push_back({"d_i t = t d_(i-1)", {t(), d(i)}, {d(i - 1), t()}});
  out.push_back({"s_0 t = t^2 s_k", {t(), s(0)}, {s(k), t(), t()}});
  for (int i = 1; i <= k; ++i) out.push_back({"s_i t = t s_(i-1)", {t(), s(i)}, {s(i - 1), t()}});
  return out;
}

struct Pushed {
  Tuple tuple;
  Permutation twist;
};

Pushed push_object(const Ops& ops, const Tuple& start, TwistMode mode) {
  BcyObj cur(start);
  Permutation perm = Permutation::identity(cur.total());
  for (const Op& op : ops) {
    const int k = cur.degree();
    switch (op.kind) {
      case Op::Face: {
        const Generator g = Generator::face(op.index, k);
        if (g.is_last_face()) perm = compose(generator_twist(g, as_span(cur.tuple), mode), perm);
        cur = face_on_tuple(op.index, cur);
        break;
      }
      case Op::Degeneracy:
        cur = degeneracy_on_tuple(op.index, cur);
        break;
      case Op::Cyclic:
        if (mode == TwistMode::Twisted) perm = compose(cyclic_twist(as_span(cur.tuple)), perm);
        cur = cyclic_on_tuple(cur);
        break;
    }
  }
  return {std::move(cur.tuple), std::move(perm)};
}

MorTuple push_maps(const Ops& ops, MorTuple cur) {
  for (const Op& op : ops) {
    switch (op.kind) {
      case Op::Face:
        cur = face_on_morphisms(op.index, as_span(cur));
        break;
      case Op::Degeneracy:
        cur = degeneracy_on_morphisms(op.index, as_span(cur));
        break;
      case Op::Cyclic:
        cur = cyclic_on_morphisms(as_span(cur));
        break;
    }
  }
  return cur;
}

// Injections m -> n with m, n <= max_n: the per-position choices for
// morphism tuples.
std::vector<Injection> injection_pool(int max_source, int max_target) {
  std::vector<Injection> pool;
  for (int m = 0; m <= max_source; ++m) {
    for (int n = m; n <= max_target; ++n) {
      for (auto& f : enumerate_injections(m, n)) pool.push_back(std::move(f));
    }
  }
  return pool;
}

double pool_size(int max_source, int max_target) {
  double total = 0;
  for (int m = 0; m <= max_source; ++m) {
    for (int n = m; n <= max_target; ++n) total += static_cast<double>(count_injections(m, n));
  }
  return total;
}

// Calls `body` on every tuple of `len` entries drawn from `pool`.
template <class Body>
void for_each_pool_tuple(const std::vector<Injection>& pool, int len, Body body) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
  MorTuple cur;
  for (int j = 0; j < len; ++j) cur.push_back(pool[0]);
  while (true) {
    body(static_cast<const MorTuple&>(cur));
    int pos = len - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == pool.size()) {
      idx[static_cast<std::size_t>(pos)] = 0;
      cur[static_cast<std::size_t>(pos)] = pool[0];
      --pos;
    }
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    cur[static_cast<std::size_t>(pos)] = pool[idx[static_cast<std::size_t>(pos)]];
  }
}

Report run_identity_sweep(const std::function<std::vector<Identity>(int)>& identities_at, int min_k, int max_k,
                          int max_n, TwistMode mode) {
  Report report;
  const std::vector<Injection> pool = injection_pool(max_n, max_n);
  for (int k = min_k; k <= max_k; ++k) {
    const std::vector<Identity> ids = identities_at(k);
    for (const Tuple& tuple : all_tuples(k + 1, max_n)) {
      for (const auto& id : ids) {
        ++report.instances_checked;
        const Pushed lhs = push_object(id.lhs, tuple, mode);
        const Pushed rhs = push_object(id.rhs, tuple, mode);
        if (lhs.tuple != rhs.tuple || lhs.twist != rhs.twist) {
          report.record_violation([&]() -> nlohmann::json {
            return {{"family", id.family},
                    {"lhs", describe(id.lhs)},
                    {"rhs", describe(id.rhs)},
                    {"tuple", tuple_json(as_span(tuple))},
                    {"lhs_tuple", tuple_json(as_span(lhs.tuple))},
                    {"rhs_tuple", tuple_json(as_span(rhs.tuple))},
                    {"lhs_twist", lhs.twist},
                    {"rhs_twist", rhs.twist}};
          });
        }
      }
    }
    for_each_pool_tuple(pool, k + 1, [&](const MorTuple& maps) {
      for (const auto& id : ids) {
        ++report.instances_checked;
        const MorTuple lhs = push_maps(id.lhs, maps);
        const MorTuple rhs = push_maps(id.rhs, maps);
        if (lhs != rhs) {
          report.record_violation([&]() -> nlohmann::json {
            return {{"family", id.family},
                    {"lhs", describe(id.lhs)},
                    {"rhs", describe(id.rhs)},
                    {"maps", maps_json(as_span(maps))},
                    {"lhs_maps", maps_json(as_span(lhs))},
                    {"rhs_maps", maps_json(as_span(rhs))}};
          });
        }
      }
    });
  }
  return report;
}

void require_identity_bounds(int max_k, int max_n) {
  require_bound("max_k", max_k, 6);
  require_bound("max_n", max_n, 6);
  require_budget("max_n", max_n, 2e5, [max_k](int n) { return std::pow(pool_size(n, n), max_k + 1); });
}

}  // namespace

std::vector<Tuple> all_tuples(int len, int max_entry) {
  std::vector<Tuple> out;
  if (len <= 0 || max_entry < 0) return out;
  Tuple t(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(t);
    int pos = len - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == max_entry) t[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
  }
  return out;
}

Report verify_simplicial_identities(int max_k, int max_n, TwistMode mode) {
  require_identity_bounds(max_k, max_n);
  Report report = run_identity_sweep(simplicial_identities, 0, max_k, max_n, mode);

  // The dual identities among the generator maps of Delta.
  for (int k = 1; k <= max_k + 1; ++k) {
    auto df = [](int i, int n) { return MonotoneMap::face(i, n); };
    auto sg = [](int i, int n) { return MonotoneMap::degeneracy(i, n); };
    auto expect = [&report](const MonotoneMap& a, const MonotoneMap& b, const char* family) {
      ++report.instances_checked;
      if (a != b)
        report.record_violation(
            [&]() -> nlohmann::json { return {{"family", family}, {"lhs_map", a}, {"rhs_map", b}}; });
    };
    for (int j = 1; j <= k + 1; ++j) {
      for (int i = 0; i < j; ++i)
        expect(compose(df(j, k + 1), df(i, k)), compose(df(i, k + 1), df(j - 1, k)), "delta^j delta^i");
    }
    for (int j = 0; j <= k; ++j) {
      for (int i = 0; i <= j; ++i)
        expect(compose(sg(j, k), sg(i, k + 1)), compose(sg(i, k), sg(j + 1, k + 1)), "sigma^j sigma^i");
      for (int i = 0; i <= k + 1; ++i) {
        const MonotoneMap lhs = compose(sg(j, k), df(i, k + 1));
        if (i < j) {
          expect(lhs, compose(df(i, k), sg(j - 1, k - 1)), "sigma^j delta^i, i < j");
        } else if (i <= j + 1) {
          expect(lhs, MonotoneMap::identity(k), "sigma^j delta^i = id");
        } else {
          expect(lhs, compose(df(i - 1, k), sg(j, k - 1)), "sigma^j delta^i, i > j + 1");
        }
      }
    }
  }
  report.details = {{"max_k", max_k}, {"max_n", max_n}};
  return report;
}

Report verify_cyclic_identities(int max_k, int max_n, TwistMode mode) {
  require_identity_bounds(max_k, max_n);
  Report report = run_identity_sweep(cyclic_identities, 0, max_k, max_n, mode);
  report.details = {{"max_k", max_k}, {"max_n", max_n}};
  return report;
}

// ---------------------------------------------------------------------------
// Factorization independence on the graph of partial composites.
//
// A state is a composite psi: [d] -> [l] reached by some word. For every
// tuple T it stores psi^* T and the twist accumulated along the first word
// that reached it. Appending a generator g gives psi o g; its data is
// computed from psi's data and compared with whatever is stored there.
// Intermediate degrees are capped at the largest degree any word of the
// allowed length can pass through.

namespace {

class CompositeGraph {
 public:
  CompositeGraph(int l, int max_degree, int max_n, TwistMode mode)
      : l_(l), max_degree_(max_degree), mode_(mode), tuples_(all_tuples(l + 1, max_n)) {
    for (const auto& t : tuples_) totals_.push_back(sum(as_span(t)));
  }

  void run(Report& report) {
    State root{MonotoneMap::identity(l_), -1, Generator::face(0, 0), {}};
    for (std::size_t t = 0; t < tuples_.size(); ++t) {
      for (int v : tuples_[t]) root.data.push_back(static_cast<std::uint8_t>(v));
      for (int x = 0; x < totals_[t]; ++x) root.data.push_back(static_cast<std::uint8_t>(x + 1));
    }
    add_state(std::move(root));
    for (std::size_t s = 0; s < states_.size(); ++s) {
      const int d = states_[s].psi.source();
      if (d >= 1) {
        for (int i = 0; i <= d; ++i) extend(s, Generator::face(i, d), report);
      }
      if (d + 1 <= max_degree_) {
        for (int i = 0; i <= d; ++i) extend(s, Generator::degeneracy(i, d), report);
      }
    }
  }

  // Compares each stored twist with the normal-form twist of its composite.
  void compare_with_twist(int max_k, Report& report) const {
    for (const auto& st : states_) {
      if (st.psi.source() > max_k) continue;
      const SimplicialOperator op(st.psi);
      std::size_t off = 0;
      for (std::size_t t = 0; t < tuples_.size(); ++t) {
        off += static_cast<std::size_t>(st.psi.source() + 1);
        const Permutation expected = twist(op, as_span(tuples_[t]), mode_);
        ++report.instances_checked;
        bool same = true;
        for (int x = 0; x < totals_[t]; ++x) {
          same = same && expected.images()[static_cast<std::size_t>(x)] == st.data[off + static_cast<std::size_t>(x)];
        }
        if (!same) {
          report.record_violation([&]() -> nlohmann::json {
            return {{"map", st.psi},
                    {"tuple", tuple_json(as_span(tuples_[t]))},
                    {"word", word_of(&st - states_.data()).to_string()},
                    {"normal_form", op.word.to_string()},
                    {"word_twist", stored_perm(st, off, t)},
                    {"normal_form_twist", expected}};
          });
        }
        off += static_cast<std::size_t>(totals_[t]);
      }
    }
  }

  std::size_t states() const { return states_.size(); }
  std::size_t edges() const { return edges_; }

 private:
  struct State {
    MonotoneMap psi;
    std::ptrdiff_t parent;
    Generator letter;
    std::vector<std::uint8_t> data;
  };

  void add_state(State st) {
    index_.emplace(st.psi.key(), states_.size());
    states_.push_back(std::move(st));
  }

  json stored_perm(const State& st, std::size_t off, std::size_t t) const {
    std::vector<int> images;
    for (int x = 0; x < totals_[t]; ++x) images.push_back(st.data[off + static_cast<std::size_t>(x)]);
    return images;
  }

  SimplicialWord word_of(std::ptrdiff_t s) const {
    std::vector<Generator> letters;
    const int source = states_[static_cast<std::size_t>(s)].psi.source();
    while (states_[static_cast<std::size_t>(s)].parent >= 0) {
      letters.push_back(states_[static_cast<std::size_t>(s)].letter);
      s = states_[static_cast<std::size_t>(s)].parent;
    }
    std::reverse(letters.begin(), letters.end());
    return SimplicialWord(source, std::move(letters));
  }

  void extend(std::size_t s, const Generator& g, Report& report) {
    ++edges_;
    const State& st = states_[s];
    const int d = g.target;
    const int d2 = g.source();
    const bool twisted = mode_ == TwistMode::Twisted && g.is_last_face();
    std::vector<std::uint8_t> data;
    data.reserve(st.data.size() + tuples_.size());
    std::size_t off = 0;
    for (std::size_t t = 0; t < tuples_.size(); ++t) {
      const std::uint8_t* cur = st.data.data() + off;
      // g^* on the tuple.
      if (g.is_face()) {
        const int i = g.index;
        if (i == d) {
          data.push_back(static_cast<std::uint8_t>(cur[d] + cur[0]));
          for (int j = 1; j < d; ++j) data.push_back(cur[j]);
        } else {
          for (int j = 0; j < d; ++j) {
            data.push_back(j < i ? cur[j] : j == i ? static_cast<std::uint8_t>(cur[j] + cur[j + 1]) : cur[j + 1]);
          }
        }
      } else {
        for (int j = 0; j <= d; ++j) {
          data.push_back(cur[j]);
          if (j == g.index) data.push_back(0);
        }
      }
      const std::uint8_t* perm = cur + d + 1;
      const int total = totals_[t];
      if (twisted) {
        const Tuple before(cur, cur + d + 1);
        const Permutation tau = generator_twist(g, as_span(before), mode_);
        for (int x = 0; x < total; ++x) data.push_back(static_cast<std::uint8_t>(tau(perm[x])));
      } else {
        data.insert(data.end(), perm, perm + total);
      }
      off += static_cast<std::size_t>(d + 1 + total);
    }

    const MonotoneMap next = compose(st.psi, g.map());
    report.instances_checked += tuples_.size();
    const auto found = index_.find(next.key());
    if (found == index_.end()) {
      add_state({next, static_cast<std::ptrdiff_t>(s), g, std::move(data)});
      return;
    }
    const State& other = states_[found->second];
    if (other.data == data) return;
    std::size_t off2 = 0;
    for (std::size_t t = 0; t < tuples_.size(); ++t) {
      const std::size_t len = static_cast<std::size_t>(d2 + 1 + totals_[t]);
      if (!std::equal(data.begin() + static_cast<std::ptrdiff_t>(off2),
                      data.begin() + static_cast<std::ptrdiff_t>(off2 + len),
                      other.data.begin() + static_cast<std::ptrdiff_t>(off2))) {
        SimplicialWord w1 = word_of(static_cast<std::ptrdiff_t>(s));
        std::vector<Generator> letters = w1.letters();
        letters.push_back(g);
        const SimplicialWord w2(d2, std::move(letters));
        const SimplicialWord w0 = word_of(static_cast<std::ptrdiff_t>(found->second));
        report.record_violation([&]() -> nlohmann::json {
          return {{"map", next},
                  {"tuple", tuple_json(as_span(tuples_[t]))},
                  {"word_a", w0.to_string()},
                  {"word_b", w2.to_string()},
                  {"twist_a", word_twist(w0, as_span(tuples_[t]), mode_)},
                  {"twist_b", word_twist(w2, as_span(tuples_[t]), mode_)}};
        });
      }
      off2 += len;
    }
  }

  int l_;
  int max_degree_;
  TwistMode mode_;
  std::vector<Tuple> tuples_;
  std::vector<int> totals_;
  std::vector<State> states_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t edges_ = 0;
};

}  // namespace

Report verify_twist_well_defined(int max_k, int max_n, int max_extra_length, TwistMode mode) {
  require_bound("max_k", max_k, 6);
  require_bound("max_n", max_n, 6);
  require_bound("max_extra_length", max_extra_length, 4);
  require_budget("max_n", max_n, 5e7, [&](int n) {
    double work = 0;
    for (int l = 0; l <= max_k; ++l) {
      const int top = max_k + l + max_extra_length / 2;
      double states = 0;
      for (int dd = 0; dd <= top; ++dd) states += monotone_count(dd, l);
      work += states * 2 * (top + 1) * std::pow(n + 1, l + 1);
    }
    return work;
  });
  Report report;
  std::size_t states = 0;
  std::size_t edges = 0;
  for (int l = 0; l <= max_k; ++l) {
    // A word of length <= |normal form| + extra from [k] to [l] passes
    // through degrees <= k + l + extra / 2.
    CompositeGraph graph(l, max_k + l + max_extra_length / 2, max_n, mode);
    graph.run(report);
    graph.compare_with_twist(max_k, report);
    states += graph.states();
    edges += graph.edges();
  }
  report.details = {{"max_k", max_k},
                    {"max_n", max_n},
                    {"max_extra_length", max_extra_length},
                    {"composites", states},
                    {"generator_steps", edges}};
  return report;
}

Report verify_twist_factorizations(int max_k, int max_n, int max_extra_length, TwistMode mode) {
  require_bound("max_k", max_k, 3);
  require_bound("max_n", max_n, 3);
  require_bound("max_extra_length", max_extra_length, 3);
  Report report;
  std::uint64_t words = 0;
  for (int l = 0; l <= max_k; ++l) {
    const std::vector<Tuple> tuples = all_tuples(l + 1, max_n);
    for (int k = 0; k <= max_k; ++k) {
      for (const auto& alpha : enumerate_monotone_maps(k, l)) {
        const SimplicialOperator op(alpha);
        const auto factorizations = fincat::all_factorizations(alpha, max_extra_length);
        words += factorizations.size();
        for (const auto& tuple : tuples) {
          const Permutation expected = twist(op, as_span(tuple), mode);
          for (const auto& w : factorizations) {
            ++report.instances_checked;
            const Permutation got = word_twist(w, as_span(tuple), mode);
            if (got != expected) {
              report.record_violation([&]() -> nlohmann::json {
                return {{"map", alpha},
                        {"tuple", tuple_json(as_span(tuple))},
                        {"word_a", op.word.to_string()},
                        {"word_b", w.to_string()},
                        {"twist_a", expected},
                        {"twist_b", got}};
              });
            }
          }
        }
      }
    }
  }
  report.details = {{"max_k", max_k}, {"max_n", max_n}, {"max_extra_length", max_extra_length}, {"words", words}};
  return report;
}

Report verify_twist_block_structure(int max_k, int max_n, TwistMode mode) {
  require_bound("max_k", max_k, 6);
  require_bound("max_n", max_n, 6);
  Report report;
  for (int l = 0; l <= max_k; ++l) {
    const std::vector<Tuple> tuples = all_tuples(l + 1, max_n);
    for (int k = 0; k <= max_k; ++k) {
      for (const auto& alpha : enumerate_monotone_maps(k, l)) {
        const SimplicialOperator op(alpha);
        for (const auto& tuple : tuples) {
          ++report.instances_checked;
          const Permutation p = twist(op, as_span(tuple), mode);
          bool ok = p.degree() == sum(as_span(tuple));
          int start = 1;
          for (int n : tuple) {
            for (int x = start; ok && x + 1 < start + n; ++x) ok = p(x + 1) == p(x) + 1;
            start += n;
          }
          if (!ok)
            report.record_violation([&]() -> nlohmann::json {
              return {{"map", alpha}, {"tuple", tuple_json(as_span(tuple))}, {"twist", p}};
            });
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

// Every monotone map with degrees <= max_degree with its operator data.
class OperatorTable {
 public:
  explicit OperatorTable(int max_degree) {
    for (int k = 0; k <= max_degree; ++k) {
      for (int l = 0; l <= max_degree; ++l) {
        for (auto& alpha : enumerate_monotone_maps(k, l)) {
          index_.emplace(alpha.key(), ops_.size());
          ops_.emplace_back(std::move(alpha));
        }
      }
    }
  }

  std::size_t index_of(const MonotoneMap& alpha) const { return index_.at(alpha.key()); }
  const SimplicialOperator& operator[](std::size_t i) const { return ops_[i]; }

 private:
  std::vector<SimplicialOperator> ops_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Memoized twist(op, tuple) for operators of an OperatorTable.
class TwistCache {
 public:
  TwistCache(const OperatorTable& table, TwistMode mode) : table_(table), mode_(mode) {}

  const Permutation& get(std::size_t op, std::span<const int> tuple) {
    // Tuples have at most 7 entries below 64.
    std::uint64_t key = 0;
    for (int v : tuple) key = (key << 6) | static_cast<std::uint64_t>(v);
    key |= static_cast<std::uint64_t>(op) << 42;
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, twist(table_[op], tuple, mode_)).first;
    return it->second;
  }

 private:
  const OperatorTable& table_;
  TwistMode mode_;
  std::unordered_map<std::uint64_t, Permutation> cache_;
};

// Number of I-parts out of `pulled`: injections into pulled_j + pad_j for pad_j in {0, 1}.
double ipart_count(std::span<const int> pulled) {
  double c = 1;
  for (int a : pulled) c *= static_cast<double>(count_injections(a, a) + count_injections(a, a + 1));
  return c;
}

// Calls body(i_part) for every I-part out of `pulled`.
template <class Body>
void for_each_ipart(std::span<const int> pulled, Body body) {
  MorTuple cur;
  std::function<void(std::size_t)> go = [&](std::size_t j) {
    if (j == pulled.size()) {
      body(static_cast<const MorTuple&>(cur));
      return;
    }
    for (int pad = 0; pad <= 1; ++pad) {
      for (auto& f : enumerate_injections(pulled[j], pulled[j] + pad)) {
        cur.push_back(std::move(f));
        go(j + 1);
        cur.pop_back();
      }
    }
  };
  go(0);
}

template <class Rng>
MorTuple random_ipart(std::span<const int> pulled, Rng& rng) {
  MorTuple out;
  for (int a : pulled) {
    const int pad = static_cast<int>(rng() % 2);
    const std::uint64_t n = count_injections(a, a + pad);
    out.push_back(fincat::injection_unrank(a, a + pad, static_cast<std::size_t>(rng() % n)));
  }
  return out;
}

Tuple targets_of(const MorTuple& maps) {
  Tuple out;
  for (const auto& f : maps) out.push_back(f.target());
  return out;
}

json mor_json(std::span<const int> source, const MonotoneMap& delta, std::span<const Injection> i_part) {
  return {{"source", tuple_json(source)}, {"delta", delta}, {"i_part", maps_json(i_part)}};
}

}  // namespace

Report verify_mu_tw_functor(const FunctorSweep& sweep) {
  require_bound("max_k", sweep.max_k, 6);
  require_bound("max_n", sweep.max_n, 6);
  if (sweep.samples < 1) throw std::invalid_argument("samples must be positive");
  require_budget("max_k", sweep.max_k, 2.5e7, [&](int K) {
    double work = 0;
    for (int l = 0; l <= K; ++l) {
      double pairs = 0;
      for (int k = 0; k <= K; ++k) {
        double inner = 0;
        for (int j = 0; j <= K; ++j) inner += monotone_count(j, k);
        pairs += monotone_count(k, l) * inner;
      }
      work += pairs * std::pow(sweep.max_n + 1, l + 1);
    }
    return work * sweep.samples;
  });

  const OperatorTable table(sweep.max_k);
  TwistCache twists(table, sweep.mode);
  Report report;
  std::uint64_t blocks = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t sampled = 0;

  struct Pair {
    std::size_t second;
    std::size_t composite;
  };

  for (int l = 0; l <= sweep.max_k; ++l) {
    const std::vector<Tuple> tuples = all_tuples(l + 1, sweep.max_n);
    for (int k = 0; k <= sweep.max_k; ++k) {
      for (const auto& alpha1 : enumerate_monotone_maps(k, l)) {
        const std::size_t i1 = table.index_of(alpha1);
        const SimplicialOperator& op1 = table[i1];
        std::vector<Pair> pairs;
        for (int j = 0; j <= sweep.max_k; ++j) {
          for (const auto& alpha2 : enumerate_monotone_maps(j, k)) {
            pairs.push_back({table.index_of(alpha2), table.index_of(compose(alpha1, alpha2))});
          }
        }
        for (const Tuple& tuple : tuples) {
          const Tuple pulled1 = op1.plan.apply(as_span(tuple));
          const Permutation& tw1 = twists.get(i1, as_span(tuple));
          SplitMix64 rng(mix_seed(sweep.seed, blocks++));

          // Each stage is enumerated when it has at most ipart_cap choices
          // and sampled otherwise.
          auto stage = [&](std::span<const int> pulled, auto&& body) {
            if (ipart_count(pulled) <= static_cast<double>(sweep.ipart_cap)) {
              ++enumerated;
              for_each_ipart(pulled, body);
            } else {
              ++sampled;
              for (int r = 0; r < sweep.samples; ++r) body(random_ipart(pulled, rng));
            }
          };

          stage(as_span(pulled1), [&](const MorTuple& f1) {
            const Tuple mid = targets_of(f1);
            const Injection first = mu_tw_arrow(tw1, as_span(f1));
            for (const Pair& pair : pairs) {
              const SimplicialOperator& op2 = table[pair.second];
              ++pairs_checked;
              const Tuple pulled2 = op2.plan.apply(as_span(mid));
              const Permutation& tw2 = twists.get(pair.second, as_span(mid));
              const Permutation& tw12 = twists.get(pair.composite, as_span(tuple));
              stage(as_span(pulled2), [&](const MorTuple& f2) {
                ++report.instances_checked;
                const Injection lhs = mu_tw_arrow(tw12, as_span(composite_i_part(op2.plan, as_span(f1), as_span(f2))));
                const Injection rhs = compose(mu_tw_arrow(tw2, as_span(f2)), first);
                if (lhs != rhs) {
                  report.record_violation([&]() -> nlohmann::json {
                    return {{"m1", mor_json(as_span(tuple), op1.map, as_span(f1))},
                            {"m2", mor_json(as_span(mid), op2.map, as_span(f2))},
                            {"mu_of_composite", lhs},
                            {"composite_of_mu", rhs}};
                  });
                }
              });
            }
          });
        }
      }
    }
  }
  report.details = {{"max_k", sweep.max_k},
                    {"max_n", sweep.max_n},
                    {"composable_pairs", pairs_checked},
                    {"enumerated_stages", enumerated},
                    {"sampled_stages", sampled},
                    {"samples_per_instance", sweep.samples},
                    {"ipart_cap", sweep.ipart_cap}};
  return report;
}

Report verify_twist_naturality(int max_k, int max_n, int max_arity, TwistMode mode) {
  require_bound("max_k", max_k, 6);
  require_bound("max_n", max_n, 6);
  require_bound("max_arity", max_arity, 7);
  if (max_arity < max_n) throw std::invalid_argument("max_arity must be at least max_n");
  require_budget("max_k", max_k, 4e7, [&](int K) {
    double work = 0;
    for (int l = 0; l <= K; ++l) work += 2 * (l + 1) * std::pow(pool_size(max_n, max_arity), l + 1);
    return work;
  });
  const std::vector<Injection> pool = injection_pool(max_n, max_arity);
  Report report;
  for (int l = 0; l <= max_k; ++l) {
    std::vector<Generator> gens;
    if (l >= 1) {
      for (int i = 0; i <= l; ++i) gens.push_back(Generator::face(i, l));
    }
    for (int i = 0; i <= l; ++i) gens.push_back(Generator::degeneracy(i, l));
    std::vector<BlockPlan> plans;
    for (const auto& g : gens) plans.push_back(BlockPlan::of_generator(g));

    for_each_pool_tuple(pool, l + 1, [&](const MorTuple& maps) {
      Tuple sources;
      Tuple targets;
      for (const auto& f : maps) {
        sources.push_back(f.source());
        targets.push_back(f.target());
      }
      const Injection whole = concat_all(as_span(maps));
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        ++report.instances_checked;
        const Injection lhs = compose(generator_twist(gens[gi], as_span(targets), mode).as_injection(), whole);
        const Injection rhs = compose(concat_all(as_span(plans[gi].apply(as_span(maps)))),
                                      generator_twist(gens[gi], as_span(sources), mode).as_injection());
        if (lhs != rhs) {
          report.record_violation([&]() -> nlohmann::json {
            return {
                {"generator", gens[gi].to_string()}, {"maps", maps_json(as_span(maps))}, {"lhs", lhs}, {"rhs", rhs}};
          });
        }
      }
    });
  }
  report.details = {{"max_k", max_k}, {"max_n", max_n}, {"max_arity", max_arity}};
  return report;
}

Report verify_groth_category_laws(int max_k, int max_n, int triples, std::uint64_t seed) {
  require_bound("max_k", max_k, 6);
  require_bound("max_n", max_n, 6);
  Report report;
  auto random_map = [](SplitMix64& rng, int k, int l) {
    const auto maps = enumerate_monotone_maps(k, l);
    return maps[static_cast<std::size_t>(rng() % maps.size())];
  };
  auto random_mor = [&](SplitMix64& rng, const BcyObj& source) {
    const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(max_k + 1));
    const MonotoneMap alpha = random_map(rng, k, source.degree());
    const Tuple pulled = block_plan(alpha).apply(as_span(source.tuple));
    return BcyMor(source, alpha, random_ipart(as_span(pulled), rng));
  };
  for (int r = 0; r < triples; ++r) {
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    const int l = static_cast<int>(rng() % static_cast<std::uint64_t>(max_k + 1));
    Tuple tuple;
    for (int j = 0; j <= l; ++j) tuple.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(max_n + 1)));
    const BcyMor m1 = random_mor(rng, BcyObj(tuple));
    const BcyMor m2 = random_mor(rng, m1.target());
    const BcyMor m3 = random_mor(rng, m2.target());
    report.instances_checked += 3;
    const BcyMor left = groth_compose(m3, groth_compose(m2, m1));
    const BcyMor right = groth_compose(groth_compose(m3, m2), m1);
    if (left != right) {
      report.record_violation([&]() -> nlohmann::json {
        return {{"law", "associativity"},
                {"m1", mor_json(as_span(m1.source.tuple), m1.delta, as_span(m1.i_part))},
                {"m2", mor_json(as_span(m2.source.tuple), m2.delta, as_span(m2.i_part))},
                {"m3", mor_json(as_span(m3.source.tuple), m3.delta, as_span(m3.i_part))}};
      });
    }
    if (groth_compose(m1, BcyMor::identity(m1.source)) != m1 ||
        groth_compose(BcyMor::identity(m1.target()), m1) != m1) {
      report.record_violation([&]() -> nlohmann::json {
        return {{"law", "unit"}, {"m", mor_json(as_span(m1.source.tuple), m1.delta, as_span(m1.i_part))}};
      });
    }
  }
  return report;
}

}  // namespace thhcheck::bcy
