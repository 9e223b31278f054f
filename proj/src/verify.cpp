#include "affevac/verify.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "affevac/poly.hpp"
#include "affevac/rmatrix.hpp"
#include "affevac/tableau.hpp"

namespace affevac {

std::int64_t count_self_evacuating(const Composition& shape) {
  std::int64_t count = 0;
  for (const Tabloid& t : enumerate_tabloids(shape))
    if (affine_evacuation(t) == t) ++count;
  return count;
}

std::int64_t count_self_evacuating(const Partition& shape) {
  return count_self_evacuating(shape.parts);
}

namespace {

std::int64_t rec_t(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  int n = 0;
  for (int p : parts) n += p;
  if (n <= 1) return 1;
  std::int64_t total = 0;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int v = parts[i], mult = static_cast<int>(j - i);
    if (mult % 2 == 1 && v >= 2) {
      auto next = parts;
      next[i] -= 2;
      total += rec_t(std::move(next));
    }
    if (mult >= 2) {
      auto next = parts;
      next[i] -= 1;
      next[i + 1] -= 1;
      total += 2 * (mult / 2) * rec_t(std::move(next));
    }
    i = j;
  }
  return total;
}

}  // namespace

std::int64_t recurrence_t(const Partition& shape) { return rec_t(shape.parts); }

std::int64_t recurrence_rhs(const Partition& shape) {
  if (shape.size() < 2)
    throw std::invalid_argument("recurrence_rhs requires |lambda| >= 2");
  std::int64_t total = 0;
  const auto& parts = shape.parts;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int v = parts[i], mult = static_cast<int>(j - i);
    if (mult % 2 == 1 && v >= 2) {
      auto next = parts;
      next[i] -= 2;
      total += rec_t(next);
    }
    if (mult >= 2) {
      auto next = parts;
      next[i] -= 1;
      next[i + 1] -= 1;
      total += 2 * (mult / 2) * rec_t(next);
    }
    i = j;
  }
  return total;
}

std::int64_t closed_form_rectangle(int m, int rows) {
  if (m < 1 || rows < 1)
    throw std::invalid_argument("rectangle dimensions must be positive");
  int half = rows / 2;
  std::int64_t big = m * static_cast<std::int64_t>(half);
  std::int64_t nHalf = (static_cast<std::int64_t>(m) * rows) / 2;
  std::int64_t value = 1;
  for (int i = 0; i < m * half; ++i) value *= 2;
  value *= factorial(static_cast<int>(nHalf));
  for (int i = 0; i < half; ++i) value /= factorial(m);
  value /= factorial(static_cast<int>(nHalf - big));
  return value;
}

std::int64_t closed_form_even_multiplicities(const Partition& shape) {
  // Halve each multiplicity: <2,2,1,1> -> <2,1>.
  std::vector<int> half;
  const auto& parts = shape.parts;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int mult = static_cast<int>(j - i);
    if (mult % 2 != 0)
      throw OddMultiplicity("part " + std::to_string(parts[i]) +
                            " has odd multiplicity");
    for (int r = 0; r < mult / 2; ++r) half.push_back(parts[i]);
    i = j;
  }
  Partition mu(half);
  std::int64_t value = 1;
  for (int i = 0; i < mu.size(); ++i) value *= 2;
  return value * multinomial(mu.parts);
}

std::int64_t count_variant_fixed(const Partition& shape, int c) {
  std::int64_t count = 0;
  for (const Tabloid& t : enumerate_tabloids(shape.parts))
    if (evacuation_variant(t, c) == t) ++count;
  return count;
}

std::int64_t count_self_evacuating_syt(const Partition& shape) {
  std::int64_t count = 0;
  for (const Tableau& t : enumerate_syt(shape))
    if (finite_evacuation(t) == t) ++count;
  return count;
}

std::int64_t count_ssyt_fixed(const Partition& lambda, const Partition& mu) {
  int d = static_cast<int>(mu.parts.size());
  std::int64_t count = 0;
  for (const Tableau& t : enumerate_ssyt(lambda, mu))
    if (e_d_star(t, d) == t) ++count;
  return count;
}

int KnuthGraph::index_of(const Tabloid& t) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
  if (it == vertices.end() || !(*it == t)) return -1;
  return static_cast<int>(it - vertices.begin());
}

KnuthGraph knuth_graph(const Partition& shape) {
  KnuthGraph g;
  g.vertices = enumerate_tabloids(shape.parts);
  std::sort(g.vertices.begin(), g.vertices.end());
  for (size_t u = 0; u < g.vertices.size(); ++u)
    for (const KnuthNeighbor& nb : knuth_neighbors(g.vertices[u])) {
      int v = g.index_of(nb.tabloid);
      if (v > static_cast<int>(u)) g.edges.push_back({static_cast<int>(u), v, nb.types});
    }
  return g;
}

namespace {

std::set<int> complement_types(const std::set<int>& types, int n) {
  std::set<int> out;
  for (int k : types) out.insert(residue_mod(n - k - 1, n));
  return out;
}

// Typed adjacency of vertex u as (neighbor, types) pairs.
std::vector<std::pair<int, std::set<int>>> typed_neighbors(const KnuthGraph& g, int u) {
  std::vector<std::pair<int, std::set<int>>> out;
  for (const auto& e : g.edges) {
    if (e.u == u) out.push_back({e.v, e.types});
    if (e.v == u) out.push_back({e.u, e.types});
  }
  return out;
}

}  // namespace

bool evacuation_is_graph_automorphism(const KnuthGraph& g) {
  if (g.vertices.empty()) return true;
  int n = g.vertices[0].n;
  Partition shape = sort_to_partition(g.vertices[0].shape());
  for (int k = 1; k <= n; ++k) {
    Tabloid r = rrss(shape, k);
    if (!(affine_evacuation(r) == rrss(shape, n - k))) return false;
  }
  for (const auto& e : g.edges) {
    int eu = g.index_of(affine_evacuation(g.vertices[e.u]));
    int ev = g.index_of(affine_evacuation(g.vertices[e.v]));
    if (eu < 0 || ev < 0) return false;
    bool found = false;
    for (const auto& [v, types] : typed_neighbors(g, eu))
      if (v == ev && types == complement_types(e.types, n)) found = true;
    if (!found) return false;
  }
  return true;
}

bool evacuation_automorphism_unique(const KnuthGraph& g) {
  if (g.vertices.empty()) return true;
  int n = g.vertices[0].n;
  Partition shape = sort_to_partition(g.vertices[0].shape());
  std::vector<int> image(g.vertices.size(), -1);
  std::vector<int> queue;
  for (int k = 1; k <= n; ++k) {
    int u = g.index_of(rrss(shape, k));
    int v = g.index_of(rrss(shape, n - k));
    if (u < 0 || v < 0) return false;
    if (image[u] >= 0 && image[u] != v) return false;
    if (image[u] < 0) {
      image[u] = v;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    for (const auto& [v, types] : typed_neighbors(g, u)) {
      std::set<int> want = complement_types(types, n);
      int candidate = -1;
      bool ambiguous = false;
      for (const auto& [w, wTypes] : typed_neighbors(g, image[u]))
        if (wTypes == want) {
          if (candidate >= 0) ambiguous = true;
          candidate = w;
        }
      if (ambiguous || candidate < 0) continue;
      if (image[v] >= 0) {
        if (image[v] != candidate) return false;
      } else {
        image[v] = candidate;
        queue.push_back(v);
      }
    }
  }
  for (size_t u = 0; u < g.vertices.size(); ++u) {
    if (image[u] < 0) return false;
    if (!(g.vertices[image[u]] == affine_evacuation(g.vertices[u]))) return false;
  }
  return true;
}

FixedPointReport build_report(const Partition& shape) {
  FixedPointReport rep;
  rep.shape = shape;
  rep.n = shape.size();
  rep.t_count = count_self_evacuating(shape);
  rep.greens_eval =
      static_cast<std::int64_t>(greens_polynomial(shape, rho2(rep.n)).eval(-1));
  rep.recurrence_value = recurrence_t(shape);
  bool rectangle = true;
  for (int p : shape.parts) rectangle = rectangle && p == shape.parts[0];
  if (rectangle && !shape.parts.empty()) {
    rep.closed_form =
        closed_form_rectangle(shape.parts[0], static_cast<int>(shape.parts.size()));
  } else {
    try {
      rep.closed_form = closed_form_even_multiplicities(shape);
    } catch (const OddMultiplicity&) {
    }
  }
  if (rep.n % 2 == 0)
    for (int c = 1; c < rep.n; c += 2)
      rep.variant_counts[c] = count_variant_fixed(shape, c);
  bool ok = rep.t_count == rep.greens_eval && rep.t_count == rep.recurrence_value &&
            (!rep.closed_form || *rep.closed_form == rep.t_count);
  rep.status = ok ? "ok" : "mismatch";
  return rep;
}

std::string report_to_json(const std::vector<FixedPointReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json row{{"shape", format_partition(rep.shape)},
                       {"n", rep.n},
                       {"t", rep.t_count},
                       {"greens", rep.greens_eval},
                       {"recurrence", rep.recurrence_value},
                       {"status", rep.status}};
    if (rep.closed_form) row["closed_form"] = *rep.closed_form;
    nlohmann::json variants = nlohmann::json::object();
    for (const auto& [c, count] : rep.variant_counts)
      variants[std::to_string(c)] = count;
    row["variants"] = variants;
    out.push_back(row);
  }
  return out.dump(2);
}

std::string report_to_csv(const std::vector<FixedPointReport>& reports) {
  std::ostringstream out;
  out << "shape,n,t,greens,recurrence,closed_form,variants,status\n";
  for (const auto& rep : reports) {
    out << "\"" << format_partition(rep.shape) << "\"," << rep.n << "," << rep.t_count << ","
        << rep.greens_eval << "," << rep.recurrence_value << ",";
    if (rep.closed_form) out << *rep.closed_form;
    out << ",";
    bool first = true;
    for (const auto& [c, count] : rep.variant_counts) {
      if (!first) out << ";";
      out << c << ":" << count;
      first = false;
    }
    out << "," << rep.status << "\n";
  }
  return out.str();
}

std::string report_to_plain(const std::vector<FixedPointReport>& reports) {
  std::ostringstream out;
  for (const auto& rep : reports) {
    out << "<" << format_partition(rep.shape) << ">  n=" << rep.n
        << "  t=" << rep.t_count << "  greens=" << rep.greens_eval
        << "  recurrence=" << rep.recurrence_value;
    if (rep.closed_form) out << "  closed_form=" << *rep.closed_form;
    for (const auto& [c, count] : rep.variant_counts)
      out << "  t'[c=" << c << "]=" << count;
    out << "  " << rep.status << "\n";
  }
  return out.str();
}

}  // namespace affevac
