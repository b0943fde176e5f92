#include "specchrom/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <numeric>

#include "specchrom/errors.hpp"
#include "specchrom/rng.hpp"

namespace specchrom::gen {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// All k-subsets of {1..p} in lexicographic order.
std::vector<std::vector<int>> subsets(int p, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == p - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

}  // namespace

Graph empty(int n) {
  require(n >= 1, "empty graph needs n >= 1");
  return Graph::from_edge_list(n, {}, "empty(" + std::to_string(n) + ")");
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Pairs e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e, "complete(" + std::to_string(n) + ")");
}

Graph complete_multipartite(const std::vector<int>& parts) {
  require(!parts.empty(), "complete multipartite graph needs at least one part");
  std::vector<int> part_of;
  std::string name = "complete_multipartite(";
  for (std::size_t b = 0; b < parts.size(); ++b) {
    require(parts[b] >= 1, "part sizes must be positive");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[b]), static_cast<int>(b));
    name += (b ? "," : "") + std::to_string(parts[b]);
  }
  const int n = static_cast<int>(part_of.size());
  Pairs e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) e.emplace_back(i + 1, j + 1);
  return Graph::from_edge_list(n, e, name + ")");
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Pairs e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return Graph::from_edge_list(n, e, "cycle(" + std::to_string(n) + ")");
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  Pairs e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e, "path(" + std::to_string(n) + ")");
}

Graph star(int n) {
  require(n >= 1, "star needs n >= 1");
  Pairs e;
  for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
  return Graph::from_edge_list(n, e, "star(" + std::to_string(n) + ")");
}

Graph kneser(int p, int k) {
  require(k >= 1, "kneser needs k >= 1");
  require(p >= 2 * k, "kneser needs p >= 2k");
  require(p <= 20, "kneser p too large for desk scale");
  const auto sets = subsets(p, k);
  const int n = static_cast<int>(sets.size());
  Pairs e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (disjoint(sets[static_cast<std::size_t>(i)], sets[static_cast<std::size_t>(j)])) e.emplace_back(i + 1, j + 1);
  return Graph::from_edge_list(n, e, "kneser(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

Graph petersen() { return kneser(5, 2).renamed("petersen"); }

Graph hadamard(int N) {
  require(N >= 2 && N % 2 == 0, "hadamard needs an even N >= 2");
  require(N <= 16, "hadamard N too large");
  const unsigned count = 1u << N;
  Pairs e;
  for (unsigned x = 0; x < count; ++x)
    for (unsigned y = x + 1; y < count; ++y)
      if (std::popcount(x ^ y) == N / 2) e.emplace_back(static_cast<int>(x) + 1, static_cast<int>(y) + 1);
  return Graph::from_edge_list(static_cast<int>(count), e, "hadamard(" + std::to_string(N) + ")");
}

Graph barbell(int k) { return barbell_path(k, 0).renamed("barbell(" + std::to_string(k) + ")"); }

Graph barbell_path(int k, int inner) {
  require(k >= 2, "barbell needs k >= 2");
  require(inner >= 0, "barbell bridge length must be non-negative");
  const int n = 2 * k + inner;
  Pairs e;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      e.emplace_back(i, j);
      e.emplace_back(k + inner + i, k + inner + j);
    }
  // chain k -> k+1 -> ... -> k+inner -> k+inner+1
  for (int v = k; v <= k + inner; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, e,
                               "barbell_path(" + std::to_string(k) + "," + std::to_string(inner) + ")");
}

Graph hypercube(int d) {
  require(d >= 1 && d <= 16, "hypercube needs 1 <= d <= 16");
  const unsigned count = 1u << d;
  Pairs e;
  for (unsigned x = 0; x < count; ++x)
    for (int b = 0; b < d; ++b) {
      const unsigned y = x ^ (1u << b);
      if (x < y) e.emplace_back(static_cast<int>(x) + 1, static_cast<int>(y) + 1);
    }
  return Graph::from_edge_list(static_cast<int>(count), e, "hypercube(" + std::to_string(d) + ")");
}

Graph coxeter() {
  static constexpr std::array<std::array<int, 3>, 7> fano{
      {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}}};
  std::vector<std::vector<int>> triples;
  for (auto& t : subsets(7, 3)) {
    const bool line = std::any_of(fano.begin(), fano.end(), [&](const auto& f) {
      return std::equal(f.begin(), f.end(), t.begin());
    });
    if (!line) triples.push_back(t);
  }
  const int n = static_cast<int>(triples.size());
  Pairs e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (disjoint(triples[static_cast<std::size_t>(i)], triples[static_cast<std::size_t>(j)])) e.emplace_back(i + 1, j + 1);
  return Graph::from_edge_list(n, e, "coxeter");
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "gnp needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "gnp needs p in [0,1]");
  Rng rng(seed);
  Pairs e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.uniform01() < p) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e,
                               "gnp(" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(seed) + ")");
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T number(std::string_view token, std::string_view spec) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty())
    throw InputError("bad number '" + std::string(token) + "' in family spec '" + std::string(spec) + "'");
  return value;
}

}  // namespace

Graph from_spec(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view family = parts.front();
  const std::size_t args = parts.size() - 1;
  auto arity = [&](std::size_t want) {
    if (args != want)
      throw InputError("family '" + std::string(family) + "' takes " + std::to_string(want) + " argument(s)");
  };
  auto int_arg = [&](std::size_t i) { return number<int>(parts[i], spec); };

  if (family == "petersen") return arity(0), petersen();
  if (family == "coxeter") return arity(0), coxeter();
  if (family == "empty") return arity(1), empty(int_arg(1));
  if (family == "complete") return arity(1), complete(int_arg(1));
  if (family == "cycle") return arity(1), cycle(int_arg(1));
  if (family == "path") return arity(1), path(int_arg(1));
  if (family == "star") return arity(1), star(int_arg(1));
  if (family == "hadamard") return arity(1), hadamard(int_arg(1));
  if (family == "barbell") return arity(1), barbell(int_arg(1));
  if (family == "hypercube") return arity(1), hypercube(int_arg(1));
  if (family == "kneser") return arity(2), kneser(int_arg(1), int_arg(2));
  if (family == "barbell_path") return arity(2), barbell_path(int_arg(1), int_arg(2));
  if (family == "complete_bipartite") return arity(2), complete_multipartite({int_arg(1), int_arg(2)});
  if (family == "complete_multipartite" || family == "multipartite") {
    arity(1);
    std::vector<int> sizes;
    for (auto tok : split(parts[1], ',')) sizes.push_back(number<int>(tok, spec));
    return complete_multipartite(sizes);
  }
  if (family == "gnp") {
    arity(3);
    return gnp(int_arg(1), number<double>(parts[2], spec), number<std::uint64_t>(parts[3], spec));
  }
  throw InputError("unknown graph family '" + std::string(family) + "'\n" + family_help());
}

std::string family_help() {
  return "families: petersen | coxeter | empty:N | complete:N | cycle:N | path:N | star:N |\n"
         "  hadamard:N | barbell:K | barbell_path:K:L | hypercube:D | kneser:P:K |\n"
         "  complete_bipartite:A:B | complete_multipartite:R1,R2,... | gnp:N:P:SEED";
}

}  // namespace specchrom::gen
