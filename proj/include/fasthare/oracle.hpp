#ifndef FASTHARE_ORACLE_HPP
#define FASTHARE_ORACLE_HPP

#include <vector>

#include "fasthare/model.hpp"

// Brute-force ground truth for desk-scale instances: exact weighted min-cut
// (cut space includes the empty cut), exact non-separability index, exact
// ground states. Deliberately exponential; guarded by size limits.

namespace fasthare {

struct OracleResult {
  weight_t min_capacity = 0;
  std::vector<Cut> argmin_cuts;  // canonical side: field node outside S
  weight_t ground_energy = 0;
  std::vector<SpinConfiguration> ground_states;
};

inline constexpr int kMaxOracleNodes = 24;    // cut enumeration is 2^(|V|-1)
inline constexpr int kMaxOracleSpins = 22;    // state enumeration is 2^n
inline constexpr std::size_t kMaxStoredOptima = std::size_t(1) << 20;

// Enumerates every cut with the field node on the V\S side; fills
// min_capacity and all argmin_cuts.
OracleResult exact_min_cut(const SKGraph& g);

// nu(X) = min over separating cuts minus min over non-separating cuts,
// by exhaustive enumeration. S separates X iff X∩S is neither empty nor X.
weight_t exact_nonseparability_index(const SKGraph& g, const std::vector<node_id>& x);

// Exhaustive ground-state search; fills ground_energy and all ground_states.
OracleResult exact_ground_states(const IsingHamiltonian& h);

}  // namespace fasthare

#endif
