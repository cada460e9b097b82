#include "fasthare/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace fasthare {

namespace {

// Capacity of the cut given by a bitmask over `nodes` (bit i set => nodes[i]
// in S), using weights restricted to the listed nodes.
weight_t mask_capacity(const SKGraph& g, const std::vector<node_id>& nodes,
                       const std::vector<int>& pos, std::uint32_t mask) {
  weight_t sum = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    for (const auto& [v, w] : g.neighbors(nodes[i])) {
      int pv = pos[static_cast<std::size_t>(v)];
      if (!(mask >> pv & 1u)) sum += w;
    }
  }
  return sum;
}

std::vector<int> position_index(const SKGraph& g, const std::vector<node_id>& nodes) {
  std::vector<int> pos(static_cast<std::size_t>(g.max_node_id()) + 1, -1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    pos[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
  return pos;
}

}  // namespace

OracleResult exact_min_cut(const SKGraph& g) {
  std::vector<node_id> nodes = g.live_nodes();
  int k = static_cast<int>(nodes.size());
  if (k > kMaxOracleNodes) throw std::invalid_argument("graph too large for exact min-cut");

  // Put the field node last and keep it out of S: capacity is
  // complement-invariant, so this halves the enumeration.
  auto it = std::find(nodes.begin(), nodes.end(), g.field_node());
  std::iter_swap(it, nodes.end() - 1);
  std::sort(nodes.begin(), nodes.end() - 1);
  std::vector<int> pos = position_index(g, nodes);

  OracleResult out;
  out.min_capacity = 0;
  std::vector<std::uint32_t> best_masks{0};
  std::uint32_t total = k >= 1 ? (1u << (k - 1)) : 1u;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    weight_t c = mask_capacity(g, nodes, pos, mask);
    if (c < out.min_capacity) {
      out.min_capacity = c;
      best_masks.assign(1, mask);
    } else if (c == out.min_capacity) {
      if (best_masks.size() >= kMaxStoredOptima)
        throw std::length_error("too many optimal cuts to store");
      best_masks.push_back(mask);
    }
  }

  out.argmin_cuts.reserve(best_masks.size());
  for (std::uint32_t mask : best_masks) {
    std::vector<node_id> side;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      if (mask >> i & 1u) side.push_back(nodes[i]);
    out.argmin_cuts.emplace_back(std::move(side));
  }
  std::sort(out.argmin_cuts.begin(), out.argmin_cuts.end());
  return out;
}

weight_t exact_nonseparability_index(const SKGraph& g, const std::vector<node_id>& x) {
  std::vector<node_id> nodes = g.live_nodes();
  int k = static_cast<int>(nodes.size());
  if (k > kMaxOracleNodes) throw std::invalid_argument("graph too large for exact index");
  if (x.size() < 2) throw std::invalid_argument("non-separability needs |X| >= 2");
  for (node_id v : x)
    if (!g.alive(v)) throw std::invalid_argument("X references dead node");

  std::vector<int> pos = position_index(g, nodes);
  std::uint32_t x_mask = 0;
  for (node_id v : x) x_mask |= 1u << pos[static_cast<std::size_t>(v)];

  // Fix the last node out of S; both capacity and separation status are
  // complement-invariant.
  bool have_sep = false, have_nonsep = false;
  weight_t min_sep = 0, min_nonsep = 0;
  std::uint32_t total = 1u << (k - 1);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    weight_t c = mask_capacity(g, nodes, pos, mask);
    std::uint32_t inter = mask & x_mask;
    bool separates = inter != 0 && inter != x_mask;
    if (separates) {
      if (!have_sep || c < min_sep) min_sep = c;
      have_sep = true;
    } else {
      if (!have_nonsep || c < min_nonsep) min_nonsep = c;
      have_nonsep = true;
    }
  }
  if (!have_sep) throw std::logic_error("no separating cut found");
  return min_sep - min_nonsep;
}

OracleResult exact_ground_states(const IsingHamiltonian& h) {
  if (h.n > kMaxOracleSpins) throw std::invalid_argument("instance too large for exact solve");

  OracleResult out;
  std::vector<std::int8_t> s(static_cast<std::size_t>(h.n), 1);
  SpinConfiguration cfg(s);
  out.ground_energy = energy(h, cfg);
  out.ground_states.push_back(cfg);

  // Gray-code walk: one spin flips per step, energy updated locally.
  std::vector<std::vector<std::pair<node_id, weight_t>>> adj(static_cast<std::size_t>(h.n) + 1);
  for (const auto& [key, w] : h.j) {
    adj[static_cast<std::size_t>(key.first)].emplace_back(key.second, w);
    adj[static_cast<std::size_t>(key.second)].emplace_back(key.first, w);
  }

  weight_t e = out.ground_energy;
  std::uint64_t total = h.n >= 1 ? (std::uint64_t(1) << h.n) : 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    int bit = __builtin_ctzll(step);
    node_id i = static_cast<node_id>(bit + 1);
    weight_t local = h.field(i);
    for (const auto& [t, w] : adj[static_cast<std::size_t>(i)])
      local += w * s[static_cast<std::size_t>(t) - 1];
    // Flipping s_i changes H by 2 * s_i * (h_i + sum_j j_ij s_j).
    e += 2 * s[static_cast<std::size_t>(i) - 1] * local;
    s[static_cast<std::size_t>(i) - 1] =
        static_cast<std::int8_t>(-s[static_cast<std::size_t>(i) - 1]);
    if (e < out.ground_energy) {
      out.ground_energy = e;
      out.ground_states.assign(1, SpinConfiguration(s));
    } else if (e == out.ground_energy) {
      if (out.ground_states.size() >= kMaxStoredOptima)
        throw std::length_error("too many ground states to store");
      out.ground_states.emplace_back(s);
    }
  }
  std::sort(out.ground_states.begin(), out.ground_states.end());
  return out;
}

}  // namespace fasthare
