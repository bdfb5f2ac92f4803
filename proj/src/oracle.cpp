#include "pathsep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "pathsep/error.hpp"
#include "pathsep/isomorphism.hpp"

namespace pathsep {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

class Search {
 public:
  Search(std::vector<Mask> cand, int items, const OracleOptions& opt)
      : cand_(std::move(cand)), items_(items), words_((cand_.size() + 63) / 64), opt_(opt), start_(Clock::now()) {
    splitters_.assign(static_cast<std::size_t>(items_ * items_) * words_, 0);
    for (int a = 0; a < items_; ++a) {
      for (int b = a + 1; b < items_; ++b) {
        Mask* row = pair_row(a, b);
        for (std::size_t c = 0; c < cand_.size(); ++c) {
          if (((cand_[c] >> a) ^ (cand_[c] >> b)) & 1u) row[c / 64] |= Mask{1} << (c % 64);
        }
      }
    }
  }

  std::optional<std::vector<int>> run(int k) {
    std::vector<Mask> classes;
    const Mask all = items_ == 64 ? ~Mask{0} : (Mask{1} << items_) - 1;
    if (std::popcount(all) >= 2) classes.push_back(all);
    std::vector<Mask> excluded(words_, 0);
    chosen_.clear();
    if (dfs(classes, k, excluded)) return chosen_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Mask* pair_row(int a, int b) { return &splitters_[(static_cast<std::size_t>(a) * items_ + b) * words_]; }

  static std::vector<Mask> refine(const std::vector<Mask>& classes, Mask c) {
    std::vector<Mask> out;
    for (Mask cl : classes) {
      const Mask in = cl & c;
      const Mask out_part = cl & ~c;
      if (std::popcount(in) >= 2) out.push_back(in);
      if (std::popcount(out_part) >= 2) out.push_back(out_part);
    }
    return out;
  }

  void tick() {
    ++nodes_;
    if (opt_.budget.count() > 0 && (nodes_ & 1023u) == 0 &&
        Clock::now() - start_ > opt_.budget) {
      throw Error(ErrorCode::Timeout, "oracle budget of " + std::to_string(opt_.budget.count()) + " ms exhausted after " +
                                          std::to_string(nodes_) + " nodes");
    }
  }

  bool dfs(const std::vector<Mask>& classes, int left, std::vector<Mask>& excluded) {
    if (classes.empty()) return true;
    if (left == 0) return false;
    for (Mask cl : classes) {
      if (left < 63 && std::popcount(cl) > (1 << std::min(left, 30))) return false;
    }
    tick();

    // Unresolved pair with the fewest allowed splitters.
    int best_a = -1;
    int best_b = -1;
    int best_count = 1 << 30;
    for (Mask cl : classes) {
      for (Mask x = cl; x; x &= x - 1) {
        const int a = std::countr_zero(x);
        for (Mask y = x & (x - 1); y; y &= y - 1) {
          const int b = std::countr_zero(y);
          const Mask* row = pair_row(a, b);
          int count = 0;
          for (std::size_t w = 0; w < words_; ++w) count += std::popcount(row[w] & ~excluded[w]);
          if (count < best_count) {
            best_count = count;
            best_a = a;
            best_b = b;
          }
        }
      }
    }
    if (best_count == 0) return false;

    std::vector<std::pair<long, int>> order;
    const Mask* row = pair_row(best_a, best_b);
    for (std::size_t c = 0; c < cand_.size(); ++c) {
      const Mask bit = Mask{1} << (c % 64);
      if (!(row[c / 64] & bit) || (excluded[c / 64] & bit)) continue;
      long score = 0;
      for (Mask cl : classes) {
        score += static_cast<long>(std::popcount(cl & cand_[c])) * std::popcount(cl & ~cand_[c]);
      }
      order.emplace_back(-score, static_cast<int>(c));
    }
    std::sort(order.begin(), order.end());

    std::vector<Mask> local = excluded;
    for (auto [neg, c] : order) {
      (void)neg;
      chosen_.push_back(c);
      local[static_cast<std::size_t>(c) / 64] |= Mask{1} << (c % 64);
      if (dfs(refine(classes, cand_[c]), left - 1, local)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Mask> cand_;
  int items_;
  std::size_t words_;
  OracleOptions opt_;
  Clock::time_point start_;
  std::vector<Mask> splitters_;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
};

bool default_trivial(const TargetSet& ts, const OracleOptions& opt) {
  return opt.include_trivial.value_or(ts.has_vertices());
}

}  // namespace

std::vector<Path> enumerate_paths(const Tree& t, bool include_trivial, int max_order) {
  const int n = t.order();
  if (n > max_order) {
    throw Error(ErrorCode::TooLarge, "tree of order " + std::to_string(n) + " exceeds the cap of " + std::to_string(max_order));
  }
  std::vector<Path> out;
  if (include_trivial) {
    for (Vertex v = 0; v < n; ++v) out.push_back(Path({v}));
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.push_back(unique_path(t, u, v));
  }
  return out;
}

std::vector<Path> enumerate_graph_paths(const Graph& g, bool include_trivial, int max_order) {
  const int n = g.order();
  if (n > max_order) {
    throw Error(ErrorCode::TooLarge, "graph of order " + std::to_string(n) + " exceeds the cap of " + std::to_string(max_order));
  }
  std::vector<Path> all;
  std::vector<Vertex> stack;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  auto extend = [&](auto&& self, Vertex x) -> void {
    for (Vertex y : g.neighbors(x)) {
      if (on[y]) continue;
      stack.push_back(y);
      on[y] = 1;
      if (stack.front() < y) all.push_back(Path(stack));
      self(self, y);
      on[y] = 0;
      stack.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    stack = {s};
    on[s] = 1;
    extend(extend, s);
    on[s] = 0;
  }
  std::sort(all.begin(), all.end(), [](const Path& a, const Path& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.vertices < b.vertices;
  });
  std::vector<Path> out;
  if (include_trivial) {
    for (Vertex v = 0; v < n; ++v) out.push_back(Path({v}));
  }
  const auto& edges = g.edges();
  std::set<std::pair<Mask, Mask>> seen;
  for (const Path& p : all) {
    Mask vm = 0;
    Mask em = 0;
    for (Vertex v : p.vertices) vm |= Mask{1} << v;
    for (Edge e : p.edges()) {
      const auto idx = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
      em |= Mask{1} << (idx % 64);
    }
    if (seen.insert({vm, em}).second) out.push_back(p);
  }
  return out;
}

OracleResult min_separating(const Graph& host, const std::vector<Path>& candidates, const TargetSet& ts,
                            const OracleOptions& opt) {
  const int targets = static_cast<int>(ts.size());
  const int items = targets + (opt.require_cover ? 1 : 0);
  if (items > 64) throw Error(ErrorCode::TooLarge, "more than 64 target elements");

  // Identical incidence masks are interchangeable; keep the first of each.
  std::vector<Mask> masks;
  std::vector<int> origin;
  std::map<Mask, int> first;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Mask m = 0;
    for (int i = 0; i < targets; ++i) {
      if (contains(candidates[c], ts.elements[i])) m |= Mask{1} << i;
    }
    if (m == 0 || !first.emplace(m, static_cast<int>(c)).second) continue;
    masks.push_back(m);
    origin.push_back(static_cast<int>(c));
  }

  Search search(masks, items, opt);
  OracleResult res;
  if (!search.run(static_cast<int>(masks.size()))) {
    throw Error(ErrorCode::PreconditionViolated, "no family of candidate paths separates the targets");
  }
  int k = 0;
  while ((1LL << k) < items) ++k;
  for (;; ++k) {
    if (auto picked = search.run(k)) {
      res.size = k;
      for (int c : *picked) res.system.paths.push_back(candidates[origin[c]]);
      std::sort(res.system.paths.begin(), res.system.paths.end());
      break;
    }
  }
  (void)host;
  res.nodes_expanded = search.nodes();
  res.elapsed_ms = search.elapsed_ms();
  return res;
}

OracleResult min_separating(const Tree& t, const TargetSet& ts, const OracleOptions& opt) {
  return min_separating(t, enumerate_paths(t, default_trivial(ts, opt), opt.max_order), ts, opt);
}

OracleResult min_separating_graph(const Graph& g, const TargetSet& ts, const OracleOptions& opt) {
  return min_separating(g, enumerate_graph_paths(g, default_trivial(ts, opt), std::min(opt.max_order, 9)), ts, opt);
}

bool exists_family_of_size(const Graph& host, const std::vector<Path>& candidates, const TargetSet& ts, int k,
                           bool require_cover) {
  const int c = static_cast<int>(candidates.size());
  if (k < 0 || k > c) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    PathSystem fs;
    for (int i : idx) fs.paths.push_back(candidates[i]);
    if (separates(host, fs, ts).ok() && (!require_cover || covers(host, fs, ts).ok())) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == c - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Tree> enumerate_trees(int n) {
  if (n < 2 || n > 10) throw Error(ErrorCode::TooLarge, "tree enumeration supports 2 <= n <= 10");
  std::vector<Tree> level{Tree::from_label_edges({{0, 1}})};
  for (int m = 3; m <= n; ++m) {
    std::vector<Tree> next;
    std::set<std::string> seen;
    for (const Tree& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        Tree grown = add_leaf(t, v).first;
        if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace pathsep
