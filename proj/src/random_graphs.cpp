#include "pathsep/random_graphs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "pathsep/error.hpp"

namespace pathsep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Induced subgraph on `block` with local indices 0..m-1.
struct Induced {
  std::vector<Vertex> global;
  std::vector<std::vector<int>> adj;
};

Induced induce(const Graph& g, std::vector<Vertex> block) {
  std::sort(block.begin(), block.end());
  block.erase(std::unique(block.begin(), block.end()), block.end());
  Induced h;
  h.global = block;
  h.adj.resize(block.size());
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (Vertex y : g.neighbors(block[i])) {
      const auto it = std::lower_bound(block.begin(), block.end(), y);
      if (it != block.end() && *it == y) h.adj[i].push_back(static_cast<int>(it - block.begin()));
    }
  }
  return h;
}

bool connected(const Induced& h) {
  const std::size_t m = h.adj.size();
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : h.adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == m;
}

// Rotation-extension: grow from the current end; when stuck, rotate the path
// around a neighbour of the end to expose a new end.
std::optional<std::vector<int>> posa(const Induced& h, int start, std::mt19937_64& rng) {
  const int m = static_cast<int>(h.adj.size());
  std::vector<int> path{start};
  std::vector<int> pos(static_cast<std::size_t>(m), -1);
  pos[start] = 0;
  const long limit = 20L * m * m + 100;
  for (long step = 0; step < limit && static_cast<int>(path.size()) < m; ++step) {
    const int end = path.back();
    std::vector<int> fresh;
    for (int y : h.adj[end]) {
      if (pos[y] < 0) fresh.push_back(y);
    }
    if (!fresh.empty()) {
      const int y = fresh[std::uniform_int_distribution<std::size_t>(0, fresh.size() - 1)(rng)];
      pos[y] = static_cast<int>(path.size());
      path.push_back(y);
      continue;
    }
    std::vector<int> pivots;
    for (int y : h.adj[end]) {
      if (pos[y] >= 0 && pos[y] + 1 < static_cast<int>(path.size()) - 1) pivots.push_back(y);
    }
    if (pivots.empty()) {
      std::reverse(path.begin(), path.end());
      for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
      continue;
    }
    const int y = pivots[std::uniform_int_distribution<std::size_t>(0, pivots.size() - 1)(rng)];
    std::reverse(path.begin() + pos[y] + 1, path.end());
    for (std::size_t i = static_cast<std::size_t>(pos[y]) + 1; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
  }
  if (static_cast<int>(path.size()) == m) return path;
  return std::nullopt;
}

class Backtrack {
 public:
  Backtrack(const Induced& h, std::uint64_t budget) : h_(h), budget_(budget), used_(h.adj.size(), 0) {}

  // nullopt: budget exhausted. Empty vector: proven impossible.
  std::optional<std::vector<int>> run(const std::vector<int>& starts) {
    for (int s : starts) {
      path_ = {s};
      used_.assign(h_.adj.size(), 0);
      used_[s] = 1;
      if (extend()) return path_;
      if (exhausted_) return std::nullopt;
    }
    return std::vector<int>{};
  }

 private:
  bool extend() {
    if (path_.size() == h_.adj.size()) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    std::vector<std::pair<int, int>> next;
    for (int y : h_.adj[path_.back()]) {
      if (used_[y]) continue;
      int free = 0;
      for (int z : h_.adj[y]) free += used_[z] ? 0 : 1;
      next.emplace_back(free, y);
    }
    std::sort(next.begin(), next.end());
    for (auto [free, y] : next) {
      (void)free;
      used_[y] = 1;
      path_.push_back(y);
      if (extend()) return true;
      if (exhausted_) return false;
      path_.pop_back();
      used_[y] = 0;
    }
    return false;
  }

  const Induced& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<char> used_;
  std::vector<int> path_;
};

Path to_global(const Induced& h, const std::vector<int>& local) {
  Path p;
  for (int x : local) p.vertices.push_back(h.global[x]);
  return p;
}

double clamp_probability(double p) {
  if (std::isnan(p)) return 0.0;
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(clamp_probability(p));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back(Edge{u, v});
    }
  }
  return Graph::with_order(n, edges);
}

int ceil_log2(std::uint64_t n) {
  int b = 0;
  while ((std::uint64_t{1} << b) < n) ++b;
  return b;
}

SetSystem separating_set_system(int n) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "a separating set system needs n >= 2");
  const int k = n / 2;
  const int bits = ceil_log2(static_cast<std::uint64_t>(k) + 1);
  // Codes 1, 2, ..., 2^bits - 2 and then 0: never the all-ones code, so every
  // position of B lies in at least one mixed block.
  std::vector<int> code(static_cast<std::size_t>(k));
  const int top = (1 << bits) - 2;
  for (int j = 0; j < k; ++j) code[j] = j < top ? j + 1 : 0;
  SetSystem s;
  for (int i = 0; i < bits; ++i) {
    std::vector<int> block;
    for (int j = 0; j < k; ++j) {
      if (code[j] >> i & 1) block.push_back(j);
    }
    for (int j = 0; j < k; ++j) {
      if (!(code[j] >> i & 1)) block.push_back(k + j);
    }
    if (!block.empty()) s.blocks.push_back(std::move(block));
  }
  std::vector<int> a(static_cast<std::size_t>(k));
  std::iota(a.begin(), a.end(), 0);
  s.blocks.push_back(std::move(a));
  if (n % 2 == 1) s.blocks.push_back({2 * k});
  return s;
}

HamiltonianResult hamiltonian_path(const Graph& g, const std::vector<Vertex>& block, std::uint64_t seed,
                                   std::uint64_t node_budget) {
  HamiltonianResult res;
  const Induced h = induce(g, block);
  const int m = static_cast<int>(h.adj.size());
  if (m == 0) {
    res.status = SearchStatus::CertifiedNone;
    return res;
  }
  if (m == 1) {
    res.status = SearchStatus::Found;
    res.path = Path({h.global[0]});
    return res;
  }
  std::vector<int> ends;
  for (int i = 0; i < m; ++i) {
    if (h.adj[i].empty()) {
      res.status = SearchStatus::CertifiedNone;
      return res;
    }
    if (h.adj[i].size() == 1) ends.push_back(i);
  }
  if (ends.size() > 2 || !connected(h)) {
    res.status = SearchStatus::CertifiedNone;
    return res;
  }

  std::mt19937_64 rng(seed);
  int low = 0;
  for (int i = 1; i < m; ++i) {
    if (h.adj[i].size() < h.adj[low].size()) low = i;
  }
  for (int attempt = 0; attempt < 20; ++attempt) {
    const int start = attempt == 0 ? low : std::uniform_int_distribution<int>(0, m - 1)(rng);
    if (auto p = posa(h, start, rng)) {
      res.status = SearchStatus::Found;
      res.path = to_global(h, *p);
      return res;
    }
  }

  // A spanning path must end at every degree-1 vertex, so those suffice as starts.
  std::vector<int> starts;
  if (!ends.empty()) {
    starts.push_back(ends.front());
  } else {
    starts.resize(static_cast<std::size_t>(m));
    std::iota(starts.begin(), starts.end(), 0);
  }
  Backtrack bt(h, node_budget);
  const auto found = bt.run(starts);
  if (!found) {
    res.status = SearchStatus::NotFound;
  } else if (found->empty()) {
    res.status = SearchStatus::CertifiedNone;
  } else {
    res.status = SearchStatus::Found;
    res.path = to_global(h, *found);
  }
  return res;
}

std::optional<PathSystem> random_vertex_system(const Graph& g, std::uint64_t seed) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  const SetSystem sys = separating_set_system(n);
  PathSystem fs;
  for (std::size_t i = 0; i < sys.blocks.size(); ++i) {
    std::vector<Vertex> block;
    for (int position : sys.blocks[i]) block.push_back(perm[position]);
    const auto res = hamiltonian_path(g, block, splitmix64(seed + i));
    if (!res.path) return std::nullopt;
    fs.paths.push_back(*res.path);
  }
  const auto ts = TargetSet::of(g, TargetKind::Vertices);
  if (!separates_and_covers(g, fs, ts)) {
    throw Error(ErrorCode::InternalClassificationError, "spanning paths of the set system failed to separate");
  }
  return fs;
}

int isolated_count(const Graph& g) {
  int c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == 0 ? 1 : 0;
  return c;
}

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(trial) + 1));
}

ExperimentStats run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1 || cfg.n < 1) throw Error(ErrorCode::UsageError, "experiment needs n >= 1 and trials >= 1");
  const auto start = std::chrono::steady_clock::now();
  ExperimentStats st;
  st.config = cfg;
  long isolated_total = 0;
  for (int i = 0; i < cfg.trials; ++i) {
    TrialRecord rec;
    rec.seed = trial_seed(cfg.seed, i);
    const Graph g = gen_gnp(cfg.n, cfg.p, rec.seed);
    rec.isolated = isolated_count(g);
    if (auto fs = random_vertex_system(g, splitmix64(rec.seed))) {
      rec.success = true;
      rec.system_size = static_cast<int>(fs->size());
      rec.system = std::move(*fs);
    }
    isolated_total += rec.isolated;
    (rec.success ? st.successes : st.failures) += 1;
    st.trials.push_back(rec);
  }
  st.success_rate = static_cast<double>(st.successes) / cfg.trials;
  st.mean_isolated = static_cast<double>(isolated_total) / cfg.trials;
  st.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return st;
}

double supercritical_p(int n) {
  const double ln = std::log(static_cast<double>(n));
  return clamp_probability((2.0 * ln + 6.0 * std::log(ln)) / n);
}

double subcritical_p(int n) {
  const double ln = std::log(static_cast<double>(n));
  return clamp_probability((ln - 3.0 * std::log(ln)) / n);
}

}  // namespace pathsep
