#include "masa/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace masa {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SubgroupGraph SubgroupGraph::build(const std::vector<Word>& generators, int rank) {
  for (const auto& g : generators)
    if (g.rank() != rank) throw std::invalid_argument("rank mismatch");

  // Bouquet of loops at the basepoint, one petal per generator.
  struct Edge {
    int from, gen, to;  // gen > 0
  };
  std::vector<Edge> edges;
  int vertices = 1;
  for (const auto& w : generators) {
    int at = 0;
    const auto& ls = w.letters();
    for (size_t i = 0; i < ls.size(); ++i) {
      int to = (i + 1 == ls.size()) ? 0 : vertices++;
      if (ls[i] > 0)
        edges.push_back({at, ls[i], to});
      else
        edges.push_back({to, -ls[i], at});
      at = to;
    }
  }

  // Fold: identify targets of clashing equally-labeled edges until stable.
  Dsu dsu(vertices);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out, in;
    for (const auto& e : edges) {
      int u = dsu.find(e.from), v = dsu.find(e.to);
      auto [it_o, fresh_o] = out.try_emplace({u, e.gen}, v);
      if (!fresh_o && dsu.find(it_o->second) != v) {
        dsu.unite(it_o->second, v);
        changed = true;
        break;
      }
      auto [it_i, fresh_i] = in.try_emplace({v, e.gen}, u);
      if (!fresh_i && dsu.find(it_i->second) != u) {
        dsu.unite(it_i->second, u);
        changed = true;
        break;
      }
    }
  }

  // Compact to live roots, basepoint first.
  std::map<int, int> id;
  id[dsu.find(0)] = 0;
  for (int v = 0; v < vertices; ++v) {
    int r = dsu.find(v);
    if (!id.count(r)) id.emplace(r, static_cast<int>(id.size()));
  }
  SubgroupGraph g(rank);
  g.next_.assign(id.size(), std::vector<int>(2 * rank, -1));
  for (const auto& e : edges) {
    int u = id[dsu.find(e.from)], v = id[dsu.find(e.to)];
    g.next_[u][g.slot(e.gen)] = v;
    g.next_[v][g.slot(-e.gen)] = u;
  }

  // Trim hair: non-basepoint vertices of degree <= 1.
  bool trimmed = true;
  std::vector<bool> dead(g.next_.size(), false);
  while (trimmed) {
    trimmed = false;
    for (size_t v = 1; v < g.next_.size(); ++v) {
      if (dead[v]) continue;
      int degree = 0;
      for (int t : g.next_[v])
        if (t >= 0 && !dead[t]) ++degree;
      if (degree <= 1) {
        dead[v] = true;
        trimmed = true;
      }
    }
  }
  std::vector<int> remap(g.next_.size(), -1);
  int live = 0;
  for (size_t v = 0; v < g.next_.size(); ++v)
    if (!dead[v]) remap[v] = live++;
  std::vector<std::vector<int>> compacted(live);
  for (size_t v = 0; v < g.next_.size(); ++v) {
    if (dead[v]) continue;
    auto row = g.next_[v];
    for (int& t : row)
      if (t >= 0 && dead[t]) t = -1; else if (t >= 0) t = remap[t];
    compacted[remap[v]] = std::move(row);
  }
  g.next_ = std::move(compacted);
  return g;
}

bool SubgroupGraph::contains(const Word& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("rank mismatch");
  int at = 0;
  for (int l : w.letters()) {
    at = next_[at][slot(l)];
    if (at < 0) return false;
  }
  return at == 0;
}

std::optional<long> SubgroupGraph::index() const {
  for (const auto& row : next_)
    for (int t : row)
      if (t < 0) return std::nullopt;
  return static_cast<long>(next_.size());
}

std::vector<Word> subgroup_ball(const SubgroupGraph& g, int rank, int radius) {
  std::vector<Word> result;
  for (const auto& w : enumerate_ball(rank, radius))
    if (g.contains(w)) result.push_back(w);
  return result;
}

std::vector<MalnormalViolation> malnormal_violations_serial(
    const SubgroupGraph& g, int rank, int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  auto xs = enumerate_ball(rank, radius);
  auto gs = subgroup_ball(g, rank, 2 * radius);
  std::vector<MalnormalViolation> out;
  for (const auto& x : xs) {
    if (g.contains(x)) continue;
    for (const auto& h : gs) {
      if (h.is_identity()) continue;
      Word c = conjugate(h, x);
      if (g.contains(c)) out.push_back({x, h, c});
    }
  }
  return out;
}

std::vector<MalnormalViolation> malnormal_violations(const SubgroupGraph& g,
                                                     int rank, int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  auto xs = enumerate_ball(rank, radius);
  auto gs = subgroup_ball(g, rank, 2 * radius);
  std::vector<std::vector<MalnormalViolation>> partial(xs.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < xs.size(); ++i) {
    const Word& x = xs[i];
    if (g.contains(x)) continue;
    for (const auto& h : gs) {
      if (h.is_identity()) continue;
      Word c = conjugate(h, x);
      if (g.contains(c)) partial[i].push_back({x, h, c});
    }
  }
  std::vector<MalnormalViolation> out;
  for (auto& p : partial)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Word> normalizer_scan(const Word& a, int p, int radius) {
  if (a.is_identity()) throw std::invalid_argument("identity element");
  int rank = a.rank();
  auto graph_a = SubgroupGraph::build({a}, rank);
  Word ap = power(a, p);
  auto graph_ap = SubgroupGraph::build({ap}, rank);
  std::vector<Word> out;
  for (const auto& x : enumerate_ball(rank, radius)) {
    if (graph_a.contains(x)) continue;
    if (graph_ap.contains(conjugate(ap, x)) &&
        graph_ap.contains(conjugate(ap, invert(x))))
      out.push_back(x);
  }
  return out;
}

}  // namespace masa
