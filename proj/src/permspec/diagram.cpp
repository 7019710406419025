#include "thhcheck/permspec/diagram.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <regex>

#include "thhcheck/fincat/json_io.hpp"
#include "thhcheck/sweep.hpp"

namespace thhcheck::permspec {

using fincat::ImageVector;
using nlohmann::json;

namespace {

// Swaps performed while bubble-sorting the images of p; applying s at these
// positions in order realizes p.
std::vector<int> transposition_word(const Permutation& p) {
  std::vector<int> a(p.images().begin(), p.images().end());
  std::vector<int> word;
  for (std::size_t pass = 0; pass < a.size(); ++pass) {
    for (std::size_t j = 0; j + 1 < a.size() - pass; ++j) {
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        word.push_back(static_cast<int>(j) + 1);
      }
    }
  }
  return word;
}

Injection adjacent_swap(int n, int i) { return fincat::adjacent_transposition(n, i).as_injection(); }

// Builds a diagram from a rule on value vectors: `values(n)` lists X(n)
// without the basepoint and `apply(h, v)` is the image of v under a
// generator h, or nullopt for the basepoint.
template <class Values, class Apply, class Name>
TruncatedIDiagram build(int bound, Values values, Apply apply, Name name) {
  std::vector<std::vector<std::vector<int>>> elements;
  std::vector<std::map<std::vector<int>, int>> index;
  std::vector<std::vector<std::string>> names;
  for (int n = 0; n <= bound; ++n) {
    elements.push_back(values(n));
    auto& idx = index.emplace_back();
    auto& nm = names.emplace_back();
    for (const auto& v : elements.back()) {
      idx.emplace(v, static_cast<int>(idx.size()) + 1);
      nm.push_back(name(v));
    }
  }
  TruncatedIDiagram d(bound, std::move(names));
  auto table = [&](int from, const Injection& h) {
    std::vector<int> images{0};
    for (const auto& v : elements[static_cast<std::size_t>(from)]) {
      const std::optional<std::vector<int>> w = apply(h, v);
      images.push_back(w ? index[static_cast<std::size_t>(h.target())].at(*w) : 0);
    }
    return images;
  };
  for (int n = 0; n <= bound; ++n) {
    for (int i = 1; i < n; ++i) d.set_transposition(n, i, table(n, adjacent_swap(n, i)));
    if (n < bound) d.set_inclusion(n, table(n, Injection::inclusion(n, n + 1)));
  }
  return d;
}

std::string vector_name(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + std::to_string(v[j]);
  return out + "]";
}

}  // namespace

TruncatedIDiagram::TruncatedIDiagram(int bound, std::vector<std::vector<std::string>> levels) : bound_(bound) {
  if (bound < 0) throw DiagramError("diagram bound must be non-negative");
  if (static_cast<int>(levels.size()) != bound + 1) {
    throw DiagramError("expected " + std::to_string(bound + 1) + " levels, got " + std::to_string(levels.size()));
  }
  for (auto& level : levels) {
    std::vector<std::string> names{"*"};
    for (auto& s : level) {
      if (s == "*") throw DiagramError("\"*\" is reserved for the basepoint");
      if (std::find(names.begin(), names.end(), s) != names.end()) throw DiagramError("duplicate element " + s);
      names.push_back(std::move(s));
    }
    names_.push_back(std::move(names));
  }
  for (int n = 0; n <= bound; ++n) {
    const auto size = static_cast<std::size_t>(level_size(n));
    transpositions_.emplace_back(static_cast<std::size_t>(std::max(n - 1, 0)), std::vector<int>(size, 0));
    if (n < bound) inclusions_.emplace_back(size, 0);
  }
}

const std::string& TruncatedIDiagram::name(int n, int x) const {
  return names_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(x));
}

int TruncatedIDiagram::find(int n, std::string_view name) const {
  if (n < 0 || n > bound_) throw DiagramError("level " + std::to_string(n) + " outside 0.." + std::to_string(bound_));
  const auto& level = names_[static_cast<std::size_t>(n)];
  const auto it = std::find(level.begin(), level.end(), name);
  if (it == level.end()) throw DiagramError("no element " + std::string(name) + " at level " + std::to_string(n));
  return static_cast<int>(it - level.begin());
}

void TruncatedIDiagram::check_table(int from, int to, const std::vector<int>& images) const {
  if (static_cast<int>(images.size()) != level_size(from)) throw DiagramError("action table has the wrong length");
  for (int y : images) {
    if (y < 0 || y >= level_size(to)) throw DiagramError("action table points outside the target level");
  }
}

void TruncatedIDiagram::set_transposition(int n, int i, std::vector<int> images) {
  if (n < 0 || n > bound_ || i < 1 || i >= n)
    throw DiagramError("no transposition s_" + std::to_string(i) + " on " + std::to_string(n));
  check_table(n, n, images);
  transpositions_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i - 1)] = std::move(images);
}

void TruncatedIDiagram::set_inclusion(int n, std::vector<int> images) {
  if (n < 0 || n >= bound_) throw DiagramError("no inclusion out of level " + std::to_string(n));
  check_table(n, n + 1, images);
  inclusions_[static_cast<std::size_t>(n)] = std::move(images);
}

int TruncatedIDiagram::transpose(int n, int i, int x) const {
  return transpositions_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(x)];
}

int TruncatedIDiagram::include(int n, int x) const {
  return inclusions_[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)];
}

int TruncatedIDiagram::act(const Injection& h, int x) const {
  if (h.target() > bound_) throw DiagramError("injection " + h.to_string() + " exceeds the truncation");
  for (int n = h.source(); n < h.target(); ++n) x = include(n, x);
  for (int i : transposition_word(fincat::canonical_extension(h))) x = transpose(h.target(), i, x);
  return x;
}

void TruncatedIDiagram::add_listed_action(Injection map, std::vector<int> images) {
  if (map.target() > bound_) throw DiagramError("action " + map.to_string() + " exceeds the truncation");
  check_table(map.source(), map.target(), images);
  listed_.push_back({std::move(map), std::move(images)});
}

Report validate_presentation(const TruncatedIDiagram& d) {
  Report report;
  auto expect = [&](bool ok, const char* relation, int n, int x, json extra = {}) {
    ++report.instances_checked;
    if (ok) return;
    json w{{"relation", relation}, {"level", n}, {"element", d.name(n, x)}};
    if (!extra.is_null()) w.update(extra);
    report.add_violation(std::move(w));
  };
  for (int n = 0; n <= d.bound(); ++n) {
    for (int x = 0; x < d.level_size(n); ++x) {
      for (int i = 1; i < n; ++i) {
        expect(d.transpose(n, i, d.transpose(n, i, x)) == x, "s_i s_i = 1", n, x, {{"i", i}});
        if (i + 1 < n) {
          const int a = d.transpose(n, i, d.transpose(n, i + 1, d.transpose(n, i, x)));
          const int b = d.transpose(n, i + 1, d.transpose(n, i, d.transpose(n, i + 1, x)));
          expect(a == b, "s_i s_(i+1) s_i = s_(i+1) s_i s_(i+1)", n, x, {{"i", i}});
        }
        for (int j = i + 2; j < n; ++j) {
          expect(d.transpose(n, i, d.transpose(n, j, x)) == d.transpose(n, j, d.transpose(n, i, x)),
                 "s_i s_j = s_j s_i", n, x, {{"i", i}, {"j", j}});
        }
        if (n < d.bound()) {
          expect(d.include(n, d.transpose(n, i, x)) == d.transpose(n + 1, i, d.include(n, x)),
                 "inclusion s_i = s_i inclusion", n, x, {{"i", i}});
        }
      }
      if (n + 2 <= d.bound()) {
        const int twice = d.include(n + 1, d.include(n, x));
        expect(d.transpose(n + 2, n + 1, twice) == twice, "s_(n+1) inclusion inclusion = inclusion inclusion", n, x);
      }
    }
    for (int i = 1; i < n; ++i) expect(d.transpose(n, i, 0) == 0, "basepoint fixed", n, 0, {{"i", i}});
    if (n < d.bound()) expect(d.include(n, 0) == 0, "basepoint fixed", n, 0, {{"inclusion", true}});
  }
  for (const auto& listed : d.listed_actions()) {
    for (int x = 0; x < d.level_size(listed.map.source()); ++x) {
      const int got = d.act(listed.map, x);
      const int want = listed.images[static_cast<std::size_t>(x)];
      expect(got == want, "listed action agrees with generators", listed.map.source(), x,
             {{"map", listed.map},
              {"listed", d.name(listed.map.target(), want)},
              {"from_generators", d.name(listed.map.target(), got)}});
    }
  }
  return report;
}

Report validate_functoriality(const TruncatedIDiagram& d, int max_level) {
  require_bound("max_level", max_level, std::min(d.bound(), 5));
  Report report;
  for (int m = 0; m <= max_level; ++m) {
    for (int x = 0; x < d.level_size(m); ++x) {
      ++report.instances_checked;
      if (d.act(Injection::identity(m), x) != x) {
        report.add_violation({{"identity", m}, {"element", d.name(m, x)}});
      }
    }
    for (int n = m; n <= max_level; ++n) {
      const auto fs = fincat::enumerate_injections(m, n);
      for (int p = n; p <= max_level; ++p) {
        const auto gs = fincat::enumerate_injections(n, p);
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            const Injection gf = compose(g, f);
            for (int x = 0; x < d.level_size(m); ++x) {
              ++report.instances_checked;
              const int whole = d.act(gf, x);
              const int stepwise = d.act(g, d.act(f, x));
              if (whole != stepwise) {
                report.add_violation({{"f", f},
                                      {"g", g},
                                      {"element", d.name(m, x)},
                                      {"act_composite", d.name(p, whole)},
                                      {"act_g_after_act_f", d.name(p, stepwise)}});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

TruncatedIDiagram sphere_model(int bound, int labels) {
  require_bound("labels", labels, 9);
  auto values = [labels](int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<int> nonzero;
      for (int a : v) {
        if (a) nonzero.push_back(a);
      }
      std::sort(nonzero.begin(), nonzero.end());
      if (std::adjacent_find(nonzero.begin(), nonzero.end()) == nonzero.end()) out.push_back(v);
      int pos = n - 1;
      while (pos >= 0 && v[static_cast<std::size_t>(pos)] == labels) v[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++v[static_cast<std::size_t>(pos)];
    }
    return out;
  };
  // lambda o h^-1 on the image of h, blank elsewhere.
  auto apply = [](const Injection& h, const std::vector<int>& v) -> std::optional<std::vector<int>> {
    std::vector<int> out(static_cast<std::size_t>(h.target()), 0);
    for (int i = 1; i <= h.source(); ++i) out[static_cast<std::size_t>(h(i) - 1)] = v[static_cast<std::size_t>(i - 1)];
    return out;
  };
  return build(bound, values, apply, vector_name);
}

int sphere_element(const TruncatedIDiagram& d, const Permutation& p) {
  const auto images = p.images();
  return d.find(p.degree(), vector_name(std::vector<int>(images.begin(), images.end())));
}

TruncatedIDiagram conjugation_model(int bound) {
  require_bound("bound", bound, 7);
  auto values = [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : fincat::enumerate_permutations(n)) out.emplace_back(p.images().begin(), p.images().end());
    return out;
  };
  auto apply = [](const Injection& h, const std::vector<int>& g) -> std::optional<std::vector<int>> {
    std::vector<int> out(static_cast<std::size_t>(h.target()));
    for (int j = 1; j <= h.target(); ++j) out[static_cast<std::size_t>(j - 1)] = j;
    for (int i = 1; i <= h.source(); ++i)
      out[static_cast<std::size_t>(h(i) - 1)] = h(g[static_cast<std::size_t>(i - 1)]);
    return out;
  };
  return build(bound, values, apply, vector_name);
}

TruncatedIDiagram free_diagram(int m, int bound) {
  require_bound("bound", bound, 7);
  if (m < 0) throw DiagramError("free diagram needs a non-negative generator level");
  auto values = [m](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& f : fincat::enumerate_injections(m, n)) out.emplace_back(f.images().begin(), f.images().end());
    return out;
  };
  auto apply = [](const Injection& h, const std::vector<int>& f) -> std::optional<std::vector<int>> {
    std::vector<int> out;
    for (int v : f) out.push_back(h(v));
    return out;
  };
  return build(bound, values, apply, vector_name);
}

TruncatedIDiagram unit_diagram(int bound) { return free_diagram(0, bound); }

TruncatedIDiagram builtin_diagram(std::string_view name, int bound) {
  if (name == "sphere-model") return sphere_model(bound, bound);
  if (name == "conjugation-model") return conjugation_model(bound);
  if (name == "unit") return unit_diagram(bound);
  static const std::regex free_re(R"(free\((\d)\))");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_match(name.begin(), name.end(), m, free_re)) return free_diagram(std::stoi(m[1].str()), bound);
  throw DiagramError("unknown built-in diagram " + std::string(name));
}

TruncatedIDiagram load_diagram(const json& description) {
  try {
    const int bound = description.at("bound").get<int>();
    require_bound("bound", bound, 7);
    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(bound + 1));
    for (const auto& [key, elements] : description.at("levels").items()) {
      const int n = std::stoi(key);
      if (n < 0 || n > bound) throw DiagramError("level " + key + " outside 0.." + std::to_string(bound));
      for (const auto& e : elements) {
        if (e.get<std::string>() != "*") levels[static_cast<std::size_t>(n)].push_back(e.get<std::string>());
      }
    }
    TruncatedIDiagram d(bound, std::move(levels));
    std::vector<std::vector<bool>> have_swap(static_cast<std::size_t>(bound + 1));
    std::vector<bool> have_inclusion(static_cast<std::size_t>(bound), false);
    for (int n = 0; n <= bound; ++n)
      have_swap[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(std::max(n - 1, 0)), false);

    for (const auto& a : description.value("actions", json::array())) {
      const int from = a.at("from").get<int>();
      const int to = a.at("to").get<int>();
      const auto images = a.at("images").get<std::vector<int>>();
      const Injection h(to, ImageVector(images.begin(), images.end()));
      if (h.source() != from) throw DiagramError("action images do not match \"from\"");
      if (to > bound) throw DiagramError("action target exceeds the bound");
      std::vector<int> table(static_cast<std::size_t>(d.level_size(from)), -1);
      table[0] = 0;
      for (const auto& [x, y] : a.at("map").items()) {
        const int xi = d.find(from, x);
        const int yi = d.find(to, y.get<std::string>());
        if (xi == 0 && yi != 0) throw DiagramError("action moves the basepoint", {{"map", h}});
        table[static_cast<std::size_t>(xi)] = yi;
      }
      for (std::size_t x = 0; x < table.size(); ++x) {
        if (table[x] < 0) {
          throw DiagramError("action " + h.to_string() + " misses element " + d.name(from, static_cast<int>(x)));
        }
      }
      if (to == from + 1 && h == Injection::inclusion(from, to)) {
        d.set_inclusion(from, table);
        have_inclusion[static_cast<std::size_t>(from)] = true;
        continue;
      }
      bool swap = false;
      for (int i = 1; i < to && to == from; ++i) {
        if (h == adjacent_swap(to, i)) {
          d.set_transposition(to, i, table);
          have_swap[static_cast<std::size_t>(to)][static_cast<std::size_t>(i - 1)] = true;
          swap = true;
        }
      }
      if (!swap) d.add_listed_action(h, std::move(table));
    }
    for (int n = 0; n <= bound; ++n) {
      for (int i = 1; i < n; ++i) {
        if (!have_swap[static_cast<std::size_t>(n)][static_cast<std::size_t>(i - 1)]) {
          throw DiagramError("missing action for the transposition s_" + std::to_string(i) + " on " +
                             std::to_string(n));
        }
      }
      if (n < bound && !have_inclusion[static_cast<std::size_t>(n)]) {
        throw DiagramError("missing action for the inclusion " + std::to_string(n) + " -> " + std::to_string(n + 1));
      }
    }
    return d;
  } catch (const json::exception& e) {
    throw DiagramError(std::string("malformed diagram: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const DiagramError*>(&e) || dynamic_cast<const BoundError*>(&e)) throw;
    throw DiagramError(std::string("malformed diagram: ") + e.what());
  }
}

}  // namespace thhcheck::permspec
