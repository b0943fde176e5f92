#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "specchrom/graph.hpp"

namespace specchrom::gen {

Graph empty(int n);
Graph complete(int n);
/// Complete multipartite graph with the given part sizes; parts are laid out
/// on consecutive labels.
Graph complete_multipartite(const std::vector<int>& parts);
Graph cycle(int n);
Graph path(int n);
/// Star on n vertices: center 1 joined to leaves 2..n.
Graph star(int n);
/// Kneser graph KG(p,k): k-subsets of {1..p} in lexicographic order, joined
/// when disjoint. Requires k >= 1 and p >= 2k.
Graph kneser(int p, int k);
Graph petersen();
/// Hadamard graph on {0,1}^N: vertex label v encodes the bit string of v-1
/// (bit s is coordinate s+1). Edges join strings at Hamming distance N/2.
/// Requires N even and 2 <= N <= 16.
Graph hadamard(int N);
/// Two disjoint copies of K_k (labels 1..k and k+1..2k) plus the bridge edge
/// (k, k+1).
Graph barbell(int k);
/// Barbell variant with a bridge path of `inner` extra vertices between the
/// two cliques.
Graph barbell_path(int k, int inner);
Graph hypercube(int d);
/// Coxeter graph: the 28 triples of {1..7} that are not lines of the Fano
/// plane {124,235,346,457,561,672,713}, joined when disjoint.
Graph coxeter();
/// Erdos-Renyi G(n,p). Pairs (i,j), i<j, are visited in lexicographic order;
/// each consumes one Rng::uniform01() draw and is kept when the draw is < p.
Graph gnp(int n, double p, std::uint64_t seed);

/// Builds a graph from a textual family spec such as "petersen",
/// "complete:4", "kneser:5:2", "complete_multipartite:2,3,4",
/// "hadamard:4", "barbell:8", "gnp:20:0.9:7". Throws InputError on an
/// unknown family or bad parameters.
Graph from_spec(std::string_view spec);

/// Human-readable list of accepted family specs.
std::string family_help();

}  // namespace specchrom::gen
