#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "affevac/partition.hpp"
#include "affevac/tabloid.hpp"

namespace affevac {

struct OddMultiplicity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// t(lambda): tabloids fixed by affine evacuation, by direct enumeration.
std::int64_t count_self_evacuating(const Partition& shape);
std::int64_t count_self_evacuating(const Composition& shape);

/// t computed purely through the recurrence (bases t(empty) = t(<1>) = 1).
std::int64_t recurrence_t(const Partition& shape);
/// One unfolding of the recurrence right-hand side at |lambda| >= 2.
std::int64_t recurrence_rhs(const Partition& shape);

/// Self-evacuating count for the rectangle <m^rows> in closed form.
std::int64_t closed_form_rectangle(int m, int rows);
/// Closed form when every part multiplicity is even; throws OddMultiplicity.
std::int64_t closed_form_even_multiplicities(const Partition& shape);

/// Fixed points of pr^c composed with evacuation.
std::int64_t count_variant_fixed(const Partition& shape, int c);
/// u(lambda): standard Young tableaux fixed by finite evacuation.
std::int64_t count_self_evacuating_syt(const Partition& shape);
/// v(lambda, mu): SSYT(lambda, mu) fixed by e_d*.
std::int64_t count_ssyt_fixed(const Partition& lambda, const Partition& mu);

struct KnuthGraph {
  std::vector<Tabloid> vertices;
  struct Edge {
    int u, v;
    std::set<int> types;
  };
  std::vector<Edge> edges;

  int index_of(const Tabloid& t) const;
};

KnuthGraph knuth_graph(const Partition& shape);

/// Checks that evacuation fixes the RRSS orbit as required and reverses
/// every typed edge (type k -> type n-k-1).
bool evacuation_is_graph_automorphism(const KnuthGraph& g);

/// Forced propagation from the RRSS images along typed edges: returns true
/// when the constraints pin down a unique map and it equals evacuation.
bool evacuation_automorphism_unique(const KnuthGraph& g);

struct FixedPointReport {
  Partition shape;
  int n = 0;
  std::int64_t t_count = 0;
  std::int64_t greens_eval = 0;
  std::int64_t recurrence_value = 0;
  std::optional<std::int64_t> closed_form;
  std::map<int, std::int64_t> variant_counts;
  std::string status;
};

FixedPointReport build_report(const Partition& shape);

std::string report_to_json(const std::vector<FixedPointReport>& reports);
std::string report_to_csv(const std::vector<FixedPointReport>& reports);
std::string report_to_plain(const std::vector<FixedPointReport>& reports);

}  // namespace affevac
