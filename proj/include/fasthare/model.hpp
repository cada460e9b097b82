#ifndef FASTHARE_MODEL_HPP
#define FASTHARE_MODEL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

// Core data types for Ising / QUBO / SK-graph representations and the exact
// evaluation of energies and cut capacities. All arithmetic is exact signed
// 64-bit; zero-weight entries are never stored.

namespace fasthare {

using node_id = std::int32_t;
using weight_t = std::int64_t;

// Largest admissible |weight| for parsed or generated inputs. Keeps every
// internal accumulation (1-norms, capacities, energies, doubled scores)
// inside int64 for instances up to ~2^20 terms.
inline constexpr weight_t kMaxInputWeight = weight_t(1) << 40;

using spin_pair = std::pair<node_id, node_id>;  // canonical: first < second

inline spin_pair make_pair_key(node_id a, node_id b) {
  return a < b ? spin_pair{a, b} : spin_pair{b, a};
}

// H(s) = -sum_i h_i s_i - sum_{i<j} j_ij s_i s_j, s_i in {-1,+1}.
// j holds the combined coupling of each unordered pair; entries are nonzero.
struct IsingHamiltonian {
  int n = 0;
  std::map<node_id, weight_t> h;
  std::map<spin_pair, weight_t> j;

  IsingHamiltonian() = default;
  explicit IsingHamiltonian(int n_spins);

  // Aggregating setters: add onto the stored value, erase on zero result.
  void add_field(node_id i, weight_t v);
  void add_coupling(node_id i, node_id k, weight_t v);

  weight_t field(node_id i) const;
  weight_t coupling(node_id i, node_id k) const;
  std::size_t term_count() const { return h.size() + j.size(); }
  bool empty() const { return h.empty() && j.empty(); }
};

// Q(x) = sum_{i<=j} q_ij x_i x_j over binary x; diagonal entries are the
// linear terms.
struct QuboInstance {
  int n = 0;
  std::map<spin_pair, weight_t> q;  // (i,j) with i <= j, values nonzero

  QuboInstance() = default;
  explicit QuboInstance(int n_vars);
  void add_term(node_id i, node_id k, weight_t v);
};

// Vector of +-1 spins; values[i] is spin i+1.
struct SpinConfiguration {
  std::vector<std::int8_t> values;

  SpinConfiguration() = default;
  explicit SpinConfiguration(std::vector<std::int8_t> v) : values(std::move(v)) {}
  int size() const { return static_cast<int>(values.size()); }
  int spin(node_id i) const { return values[static_cast<std::size_t>(i) - 1]; }
  bool operator==(const SpinConfiguration& o) const { return values == o.values; }
  bool operator<(const SpinConfiguration& o) const { return values < o.values; }
};

// One side of a cut; sorted unique node ids. The empty cut is legal.
struct Cut {
  std::vector<node_id> side;

  Cut() = default;
  explicit Cut(std::vector<node_id> s);
  bool contains(node_id v) const;
  bool operator==(const Cut& o) const { return side == o.side; }
  bool operator<(const Cut& o) const { return side < o.side; }
};

// Weighted undirected graph holding both couplings and external fields of a
// Hamiltonian; node n+1 is the field node. Mutable through flips and merges;
// dead node ids are never reused. Symmetric adjacency, no zero edges, no
// self-loops.
class SKGraph {
 public:
  SKGraph() = default;
  explicit SKGraph(int n_spins);

  int spin_count() const { return n_spins_; }
  node_id field_node() const { return field_node_; }
  node_id max_node_id() const { return static_cast<node_id>(adj_.size()) - 1; }

  bool alive(node_id u) const;
  int live_count() const { return live_count_; }
  std::vector<node_id> live_nodes() const;

  const std::map<node_id, weight_t>& neighbors(node_id u) const;
  weight_t weight(node_id u, node_id v) const;  // 0 when the edge is absent
  bool has_edge(node_id u, node_id v) const;
  int degree(node_id u) const;
  std::size_t edge_count() const { return edge_count_; }
  weight_t total_weight() const;      // sum of w over edges, each pair once
  weight_t abs_weight_sum(node_id u) const;  // ||w^(u)||, the 1-norm

  void set_weight(node_id u, node_id v, weight_t w);   // w == 0 deletes
  void add_weight(node_id u, node_id v, weight_t dw);  // zero result deletes
  void negate_incident(node_id u);

  // Folds src into dst: parallel edges aggregate, zero sums delete, the
  // internal edge (if any) disappears. Returns the internal edge weight that
  // was removed. The field node follows the survivor.
  weight_t merge_into(node_id dst, node_id src);

  // Full structural check (symmetry, liveness, no zeros/self-loops); used by
  // tests and heavy-check builds.
  void validate() const;

 private:
  void require_alive(node_id u) const;

  int n_spins_ = 0;
  node_id field_node_ = 0;
  int live_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<char> alive_;                         // index 0 unused
  std::vector<std::map<node_id, weight_t>> adj_;    // index 0 unused
};

// Result of converting a QUBO to spin variables. The Hamiltonian and offset
// are stored scaled by a fixed denominator of 4 so that
//   4 * Q(x) = scaled.H(s) + offset_x4   with x_i = (s_i + 1) / 2.
struct QuboConversion {
  static constexpr weight_t denominator = 4;
  IsingHamiltonian hamiltonian;  // 4x the exact field/coupling values
  weight_t offset_x4 = 0;
};

QuboConversion qubo_to_ising(const QuboInstance& q);

SKGraph ising_to_sk(const IsingHamiltonian& h);

// Reads the SK edges back into fields and couplings; identity after
// ising_to_sk on an unmodified graph.
IsingHamiltonian sk_to_ising(const SKGraph& g);

weight_t energy(const IsingHamiltonian& h, const SpinConfiguration& s);

weight_t cut_capacity(const SKGraph& g, const Cut& c);

// Spin configuration induced by a cut of the uncompressed SK graph: +1 inside
// S, -1 outside, normalized so the field node carries +1, field entry dropped.
SpinConfiguration config_of_cut(const SKGraph& g, const Cut& c);

}  // namespace fasthare

#endif
