#include "specchrom/exact.hpp"

#include <algorithm>
#include <numeric>

namespace specchrom {

namespace {

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

int count_colors(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

// Greedy clique grown from every start vertex; returns the largest.
std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> best;
  for (int start : degree_order(g)) {
    std::vector<int> clique{start};
    std::vector<int> cand = g.neighbors(start);
    while (!cand.empty()) {
      // highest degree inside the candidate set, then lowest index
      int pick = cand.front();
      int pick_deg = -1;
      for (int v : cand) {
        int d = 0;
        for (int w : cand) d += g.adjacent(v, w);
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      clique.push_back(pick);
      std::vector<int> next;
      for (int v : cand)
        if (v != pick && g.adjacent(v, pick)) next.push_back(v);
      cand = std::move(next);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

class Dsatur {
public:
  Dsatur(const Graph& g, std::uint64_t budget)
      : g_(g), n_(static_cast<std::size_t>(g.n())), budget_(budget), colors_(n_, 0), sat_(n_, 0) {}

  // Plain DSATUR greedy pass (no backtracking) for an upper bound.
  std::vector<int> greedy() {
    reset(static_cast<int>(n_) + 1);
    for (std::size_t k = 0; k < n_; ++k) {
      const int v = select();
      int c = 1;
      while (count(v, c) != 0) ++c;
      assign(v, c);
    }
    return colors_;
  }

  ChromaticResult solve() {
    ChromaticResult r;
    if (n_ == 0) {
      r.exact = 0;
      return r;
    }
    const auto clique = greedy_clique(g_);
    r.lower = static_cast<int>(clique.size());

    Coloring ldf = greedy_coloring(g_);
    std::vector<int> ds = greedy();
    best_colors_ = ldf.colors;
    best_ = ldf.colors_used;
    if (count_colors(ds) < best_) {
      best_colors_ = ds;
      best_ = count_colors(ds);
    }
    lower_ = r.lower;

    if (best_ > lower_) {
      reset(best_);
      int used = 0;
      for (int v : clique) assign(v, ++used);
      search(static_cast<int>(clique.size()), used);
    }
    r.nodes = nodes_;
    r.upper = best_;
    r.best = Coloring{best_colors_, best_};
    if (!aborted_) {
      r.exact = best_;
      r.lower = best_;
    }
    return r;
  }

private:
  void reset(int max_color) {
    width_ = static_cast<std::size_t>(max_color) + 2;
    counts_.assign(n_ * width_, 0);
    std::fill(colors_.begin(), colors_.end(), 0);
    std::fill(sat_.begin(), sat_.end(), 0);
  }

  int& count(int v, int c) { return counts_[static_cast<std::size_t>(v) * width_ + static_cast<std::size_t>(c)]; }

  void assign(int v, int c) {
    colors_[static_cast<std::size_t>(v)] = c;
    for (int w : g_.neighbors(v))
      if (count(w, c)++ == 0) ++sat_[static_cast<std::size_t>(w)];
  }

  void unassign(int v) {
    const int c = colors_[static_cast<std::size_t>(v)];
    colors_[static_cast<std::size_t>(v)] = 0;
    for (int w : g_.neighbors(v))
      if (--count(w, c) == 0) --sat_[static_cast<std::size_t>(w)];
  }

  // Highest saturation, then highest degree, then lowest index.
  int select() const {
    int pick = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (colors_[i] != 0) continue;
      const int v = static_cast<int>(i);
      if (pick < 0) {
        pick = v;
        continue;
      }
      const auto sv = sat_[i], sp = sat_[static_cast<std::size_t>(pick)];
      if (sv > sp || (sv == sp && g_.degree(v) > g_.degree(pick))) pick = v;
    }
    return pick;
  }

  void search(int colored, int used) {
    if (aborted_ || best_ == lower_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (static_cast<std::size_t>(colored) == n_) {
      best_ = used;
      best_colors_ = colors_;
      return;
    }
    const int v = select();
    const int limit = std::min(used + 1, best_ - 1);
    for (int c = 1; c <= limit; ++c) {
      if (count(v, c) != 0) continue;
      assign(v, c);
      search(colored + 1, std::max(used, c));
      unassign(v);
      if (aborted_ || best_ == lower_ || c >= best_ - 1) break;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  int best_ = 0;
  int lower_ = 0;
  std::vector<int> best_colors_;
  std::vector<int> colors_;
  std::vector<int> sat_;
  std::vector<int> counts_;
  std::size_t width_ = 0;
};

class CliqueSearch {
public:
  CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  CliqueResult solve() {
    CliqueResult r;
    best_ = greedy_clique(g_);
    std::vector<int> order = degree_order(g_);
    std::vector<int> current;
    expand(current, order);
    r.witness = best_;
    r.lower = static_cast<int>(best_.size());
    r.upper = aborted_ ? g_.n() : r.lower;
    if (!aborted_) r.exact = r.lower;
    r.nodes = nodes_;
    return r;
  }

private:
  // Greedy sequential coloring of `p`; returns the vertices reordered by
  // color class with the running color number as the bound for each prefix.
  void color_sort(const std::vector<int>& p, std::vector<int>& order, std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    std::vector<int> rest = p;
    int color = 0;
    while (!rest.empty()) {
      ++color;
      std::vector<int> cls, left;
      for (int v : rest) {
        const bool clash = std::any_of(cls.begin(), cls.end(), [&](int w) { return g_.adjacent(v, w); });
        (clash ? left : cls).push_back(v);
      }
      for (int v : cls) {
        order.push_back(v);
        bound.push_back(color);
      }
      rest = std::move(left);
    }
  }

  void expand(std::vector<int>& current, std::vector<int> p) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<int> order, bound;
    color_sort(p, order, bound);
    while (!order.empty()) {
      if (current.size() + static_cast<std::size_t>(bound.back()) <= best_.size()) return;
      const int v = order.back();
      std::vector<int> next;
      for (int w : order)
        if (w != v && g_.adjacent(v, w)) next.push_back(w);
      current.push_back(v);
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      if (aborted_) return;
      order.pop_back();
      bound.pop_back();
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> best_;
};

}  // namespace

Coloring greedy_coloring(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  Coloring out;
  out.colors.assign(n, 0);
  std::vector<char> taken;
  for (int v : degree_order(g)) {
    taken.assign(n + 2, 0);
    for (int w : g.neighbors(v)) taken[static_cast<std::size_t>(out.colors[static_cast<std::size_t>(w)])] = 1;
    int c = 1;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    out.colors[static_cast<std::size_t>(v)] = c;
    out.colors_used = std::max(out.colors_used, c);
  }
  return out;
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget) {
  return Dsatur(g, node_budget).solve();
}

CliqueResult max_clique(const Graph& g, std::uint64_t node_budget) {
  if (g.n() == 0) return CliqueResult{0, 0, 0, {}, 0};
  return CliqueSearch(g, node_budget).solve();
}

CliqueResult independence_number(const Graph& g, std::uint64_t node_budget) {
  return max_clique(g.complement(), node_budget);
}

bool is_proper(const Graph& g, const std::vector<int>& colors, int c) {
  if (colors.size() != static_cast<std::size_t>(g.n())) return false;
  for (int x : colors)
    if (x < 1 || x > c) return false;
  return !monochromatic_edge(g, colors).has_value();
}

}  // namespace specchrom
