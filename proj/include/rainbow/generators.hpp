#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Seeded engine for everything random in the library. std::mt19937_64 is
/// fully specified by the standard; the distributions are not, so bounded
/// draws go through uniform_below instead of <random> distributions.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; identical on every platform.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

/// SplitMix64 step, used to derive independent per-trial seeds from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> complete_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

}  // namespace detail

/// Round-robin (circle method) 1-factorization of K_n: vertex n-1 is fixed and
/// round r pairs (r, n-1) with (r+k, r-k) mod (n-1). Edges are emitted in
/// lexicographic (u, v) order.
inline ColouredGraph gen_one_factorization(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("one-factorization needs an even n >= 2, got " + std::to_string(n));
  const int rounds = n - 1;
  std::vector<std::vector<Colour>> round_of(static_cast<std::size_t>(n), std::vector<Colour>(static_cast<std::size_t>(n), -1));
  auto set = [&](int a, int b, int r) {
    round_of[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = r;
    round_of[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = r;
  };
  for (int r = 0; r < rounds; ++r) {
    set(r, n - 1, r);
    for (int k = 1; k < n / 2; ++k) set((r + k) % rounds, (r - k + rounds) % rounds, r);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : detail::complete_pairs(n)) edges.push_back({u, v, round_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]});
  return ColouredGraph(n, std::move(edges));
}

/// Proper colouring of K_n: edges visited in seed-shuffled order, each given
/// the least colour free at both endpoints (at most 2n-3 colours).
inline ColouredGraph gen_random_proper(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random-proper needs n >= 1");
  auto pairs = detail::complete_pairs(n);
  std::vector<int> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  Rng rng(seed);
  shuffle(order, rng);

  const auto width = static_cast<std::size_t>(2 * n);
  std::vector<char> used(static_cast<std::size_t>(n) * width, 0);
  std::vector<Colour> colour(pairs.size(), -1);
  for (int idx : order) {
    auto [u, v] = pairs[static_cast<std::size_t>(idx)];
    Colour c = 0;
    while (used[static_cast<std::size_t>(u) * width + static_cast<std::size_t>(c)] ||
           used[static_cast<std::size_t>(v) * width + static_cast<std::size_t>(c)]) {
      ++c;
    }
    used[static_cast<std::size_t>(u) * width + static_cast<std::size_t>(c)] = 1;
    used[static_cast<std::size_t>(v) * width + static_cast<std::size_t>(c)] = 1;
    colour[static_cast<std::size_t>(idx)] = c;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) edges.push_back({pairs[i].first, pairs[i].second, colour[i]});
  return ColouredGraph(n, std::move(edges));
}

/// K_n with every edge its own colour.
inline ColouredGraph gen_rainbow(int n) {
  if (n < 1) throw std::invalid_argument("rainbow needs n >= 1");
  std::vector<Edge> edges;
  Colour c = 0;
  for (auto [u, v] : detail::complete_pairs(n)) edges.push_back({u, v, c++});
  return ColouredGraph(n, std::move(edges));
}

/// Random spanning subgraph of gen_random_proper(n, seed): each edge kept with
/// probability keep_num/keep_den. Still properly coloured, usually not complete.
inline ColouredGraph gen_random_proper_subgraph(int n, std::uint64_t seed, std::uint64_t keep_num, std::uint64_t keep_den) {
  const ColouredGraph full = gen_random_proper(n, seed);
  Rng rng(derive_seed(seed, 1));
  std::vector<Edge> kept;
  for (const Edge& e : full.edges()) {
    if (uniform_below(rng, keep_den) < keep_num) kept.push_back(e);
  }
  return ColouredGraph(n, std::move(kept));
}

}  // namespace rainbow
