#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "affevac/partition.hpp"
#include "affevac/tableau.hpp"

namespace affevac {

struct InvalidConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A sequence of partitions nu^(1), nu^(2), ... together with the content
/// mu that drives the vacancy numbers.
struct Configuration {
  Partition mu;
  std::vector<Partition> nus;

  bool operator==(const Configuration&) const = default;
};

/// P_r^(k) = sum_{i<=r} (a_i^(k-1) + a_i^(k+1) - 2 a_i^(k)), where a_i^(k)
/// is the i-th column length of nu^(k) and a_i^(0) that of mu.
int vacancy(const Configuration& config, int k, int r);

/// Riggings stored parallel to nu^(k).parts; canonical form sorts riggings
/// weakly decreasing within each equal-length block.
struct RiggedConfiguration {
  Configuration config;
  std::vector<std::vector<int>> riggings;

  void canonicalize();
  bool operator==(const RiggedConfiguration&) const = default;
};

bool is_admissible(const Configuration& config, const Partition& lambda);

RiggedConfiguration phi(const Tableau& t);
Tableau phi_inverse(const RiggedConfiguration& rc, const Partition& lambda);

/// Replaces every rigging s by its corigging P - s.
RiggedConfiguration theta(const RiggedConfiguration& rc);

int cc_config(const Configuration& config);
int cc(const RiggedConfiguration& rc);

std::vector<Configuration> enumerate_admissible(const Partition& lambda,
                                                const Partition& mu);
std::vector<RiggedConfiguration> enumerate_rigged(const Partition& lambda,
                                                  const Partition& mu);

/// One line per nu^(k): rows rendered as "length:rigging/vacancy".
std::string format_rigged(const RiggedConfiguration& rc);

}  // namespace affevac
