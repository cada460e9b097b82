#include "fasthare/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fasthare {

namespace {

void check_weight_range(weight_t v) {
  if (v > kMaxInputWeight || v < -kMaxInputWeight)
    throw std::invalid_argument("weight magnitude exceeds supported range");
}

void check_spin_index(node_id i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("spin index out of range: " + std::to_string(i));
}

}  // namespace

IsingHamiltonian::IsingHamiltonian(int n_spins) : n(n_spins) {
  if (n_spins < 0) throw std::invalid_argument("negative spin count");
}

void IsingHamiltonian::add_field(node_id i, weight_t v) {
  check_spin_index(i, n);
  check_weight_range(v);
  if (v == 0) return;
  auto [it, inserted] = h.emplace(i, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) h.erase(it);
  }
}

void IsingHamiltonian::add_coupling(node_id i, node_id k, weight_t v) {
  check_spin_index(i, n);
  check_spin_index(k, n);
  if (i == k) throw std::invalid_argument("self-coupling rejected");
  check_weight_range(v);
  if (v == 0) return;
  auto key = make_pair_key(i, k);
  auto [it, inserted] = j.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) j.erase(it);
  }
}

weight_t IsingHamiltonian::field(node_id i) const {
  auto it = h.find(i);
  return it == h.end() ? 0 : it->second;
}

weight_t IsingHamiltonian::coupling(node_id i, node_id k) const {
  auto it = j.find(make_pair_key(i, k));
  return it == j.end() ? 0 : it->second;
}

QuboInstance::QuboInstance(int n_vars) : n(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("negative variable count");
}

void QuboInstance::add_term(node_id i, node_id k, weight_t v) {
  check_spin_index(i, n);
  check_spin_index(k, n);
  check_weight_range(v);
  if (v == 0) return;
  auto key = make_pair_key(i, k);  // diagonal stays (i,i)
  auto [it, inserted] = q.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) q.erase(it);
  }
}

Cut::Cut(std::vector<node_id> s) : side(std::move(s)) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
}

bool Cut::contains(node_id v) const {
  return std::binary_search(side.begin(), side.end(), v);
}

SKGraph::SKGraph(int n_spins) : n_spins_(n_spins) {
  if (n_spins < 0) throw std::invalid_argument("negative spin count");
  field_node_ = n_spins + 1;
  live_count_ = n_spins + 1;
  alive_.assign(static_cast<std::size_t>(n_spins) + 2, 1);
  alive_[0] = 0;
  adj_.resize(static_cast<std::size_t>(n_spins) + 2);
}

bool SKGraph::alive(node_id u) const {
  return u >= 1 && u <= max_node_id() && alive_[static_cast<std::size_t>(u)];
}

void SKGraph::require_alive(node_id u) const {
  if (!alive(u)) throw std::invalid_argument("dead or invalid node: " + std::to_string(u));
}

std::vector<node_id> SKGraph::live_nodes() const {
  std::vector<node_id> out;
  out.reserve(static_cast<std::size_t>(live_count_));
  for (node_id u = 1; u <= max_node_id(); ++u)
    if (alive_[static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

const std::map<node_id, weight_t>& SKGraph::neighbors(node_id u) const {
  require_alive(u);
  return adj_[static_cast<std::size_t>(u)];
}

weight_t SKGraph::weight(node_id u, node_id v) const {
  require_alive(u);
  require_alive(v);
  const auto& m = adj_[static_cast<std::size_t>(u)];
  auto it = m.find(v);
  return it == m.end() ? 0 : it->second;
}

bool SKGraph::has_edge(node_id u, node_id v) const { return weight(u, v) != 0; }

int SKGraph::degree(node_id u) const {
  require_alive(u);
  return static_cast<int>(adj_[static_cast<std::size_t>(u)].size());
}

weight_t SKGraph::total_weight() const {
  weight_t sum = 0;
  for (node_id u = 1; u <= max_node_id(); ++u) {
    if (!alive_[static_cast<std::size_t>(u)]) continue;
    for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)])
      if (u < v) sum += w;
  }
  return sum;
}

weight_t SKGraph::abs_weight_sum(node_id u) const {
  require_alive(u);
  weight_t sum = 0;
  for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)]) sum += w < 0 ? -w : w;
  return sum;
}

void SKGraph::set_weight(node_id u, node_id v, weight_t w) {
  require_alive(u);
  require_alive(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  auto& mu = adj_[static_cast<std::size_t>(u)];
  auto& mv = adj_[static_cast<std::size_t>(v)];
  auto it = mu.find(v);
  if (w == 0) {
    if (it != mu.end()) {
      mu.erase(it);
      mv.erase(u);
      --edge_count_;
    }
    return;
  }
  if (it == mu.end()) {
    mu.emplace(v, w);
    mv.emplace(u, w);
    ++edge_count_;
  } else {
    it->second = w;
    mv[u] = w;
  }
}

void SKGraph::add_weight(node_id u, node_id v, weight_t dw) {
  set_weight(u, v, weight(u, v) + dw);
}

void SKGraph::negate_incident(node_id u) {
  require_alive(u);
  auto& mu = adj_[static_cast<std::size_t>(u)];
  for (auto& [v, w] : mu) {
    w = -w;
    adj_[static_cast<std::size_t>(v)][u] = w;
  }
}

weight_t SKGraph::merge_into(node_id dst, node_id src) {
  require_alive(dst);
  require_alive(src);
  if (dst == src) throw std::invalid_argument("cannot merge a node with itself");

  weight_t internal = weight(dst, src);
  if (internal != 0) set_weight(dst, src, 0);

  // Detach src, then re-aggregate its edges onto dst.
  auto& ms = adj_[static_cast<std::size_t>(src)];
  std::vector<std::pair<node_id, weight_t>> edges(ms.begin(), ms.end());
  for (const auto& [t, w] : edges) {
    adj_[static_cast<std::size_t>(t)].erase(src);
    --edge_count_;
  }
  ms.clear();
  alive_[static_cast<std::size_t>(src)] = 0;
  --live_count_;

  for (const auto& [t, w] : edges) add_weight(dst, t, w);

  if (field_node_ == src) field_node_ = dst;
  return internal;
}

void SKGraph::validate() const {
  std::size_t seen = 0;
  int live = 0;
  for (node_id u = 1; u <= max_node_id(); ++u) {
    bool a = alive_[static_cast<std::size_t>(u)];
    const auto& m = adj_[static_cast<std::size_t>(u)];
    if (!a) {
      if (!m.empty()) throw std::logic_error("dead node has edges");
      continue;
    }
    ++live;
    for (const auto& [v, w] : m) {
      if (w == 0) throw std::logic_error("zero-weight edge stored");
      if (v == u) throw std::logic_error("self-loop stored");
      if (!alive(v)) throw std::logic_error("edge to dead node");
      auto it = adj_[static_cast<std::size_t>(v)].find(u);
      if (it == adj_[static_cast<std::size_t>(v)].end() || it->second != w)
        throw std::logic_error("asymmetric adjacency");
      ++seen;
    }
  }
  if (live != live_count_) throw std::logic_error("live count out of sync");
  if (seen != 2 * edge_count_) throw std::logic_error("edge count out of sync");
  if (!alive(field_node_)) throw std::logic_error("field node is dead");
}

QuboConversion qubo_to_ising(const QuboInstance& q) {
  // x_i = (s_i + 1) / 2 termwise; everything scaled by 4 to stay integral:
  //   4*q_ii x_i      = 2*q_ii s_i + 2*q_ii
  //   4*q_ij x_i x_j  = q_ij s_i s_j + q_ij s_i + q_ij s_j + q_ij
  QuboConversion out;
  out.hamiltonian = IsingHamiltonian(q.n);
  for (const auto& [key, v] : q.q) {
    auto [i, k] = key;
    if (i == k) {
      out.hamiltonian.add_field(i, -2 * v);
      out.offset_x4 += 2 * v;
    } else {
      out.hamiltonian.add_coupling(i, k, -v);
      out.hamiltonian.add_field(i, -v);
      out.hamiltonian.add_field(k, -v);
      out.offset_x4 += v;
    }
  }
  return out;
}

SKGraph ising_to_sk(const IsingHamiltonian& h) {
  SKGraph g(h.n);
  node_id field = g.field_node();
  for (const auto& [key, w] : h.j) g.set_weight(key.first, key.second, w);
  for (const auto& [i, w] : h.h) g.set_weight(i, field, w);
  return g;
}

IsingHamiltonian sk_to_ising(const SKGraph& g) {
  IsingHamiltonian h(g.spin_count());
  node_id field = g.field_node();
  for (node_id u : g.live_nodes()) {
    for (const auto& [v, w] : g.neighbors(u)) {
      if (v < u) continue;
      if (u == field)
        h.add_field(v, w);
      else if (v == field)
        h.add_field(u, w);
      else
        h.add_coupling(u, v, w);
    }
  }
  return h;
}

weight_t energy(const IsingHamiltonian& h, const SpinConfiguration& s) {
  if (s.size() != h.n) throw std::invalid_argument("configuration length mismatch");
  weight_t e = 0;
  for (const auto& [i, v] : h.h) e -= v * s.spin(i);
  for (const auto& [key, v] : h.j) e -= v * s.spin(key.first) * s.spin(key.second);
  return e;
}

weight_t cut_capacity(const SKGraph& g, const Cut& c) {
  weight_t sum = 0;
  for (node_id u : c.side) {
    if (!g.alive(u)) throw std::invalid_argument("cut references dead node");
    for (const auto& [v, w] : g.neighbors(u))
      if (!c.contains(v)) sum += w;
  }
  return sum;
}

SpinConfiguration config_of_cut(const SKGraph& g, const Cut& c) {
  int n = g.spin_count();
  node_id field = g.field_node();
  std::vector<std::int8_t> y(static_cast<std::size_t>(n) + 1, -1);
  for (node_id u : c.side) y[static_cast<std::size_t>(u) - 1] = 1;
  if (y[static_cast<std::size_t>(field) - 1] < 0)
    for (auto& v : y) v = static_cast<std::int8_t>(-v);
  y.pop_back();  // drop the field-node entry
  return SpinConfiguration(std::move(y));
}

}  // namespace fasthare
