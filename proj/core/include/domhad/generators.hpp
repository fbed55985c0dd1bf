#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "domhad/graph.hpp"

namespace domhad::gen {

/// Pinned engine: std::mt19937_64 is fully specified by the standard, and the
/// helpers below derive uniforms from raw 64-bit outputs, so streams are
/// reproducible across platforms.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
/// Uniform integer in [0, bound) by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph petersen();
/// Vertices (b1, b2, b3, b, b') = 0..4.
Graph banner();
/// The 7-vertex graph T: pentagon b1..b5 = 0..4, b = 5 adjacent to b1, b3, b4, b5,
/// and the pendant b' = 6 on b.
Graph t_graph();
/// Branch vertices 0..n-1, then one subdivision vertex per pair {i<j} in lexicographic order.
Graph one_subdivision_complete(int n);
Graph two_k2();
/// Complement of C_n (n >= 5); 2K2-free with chi > omega for odd n.
Graph antihole(int n);
/// Pentagon 0..4 plus five cliques Y_0..Y_4 of size m (Y_i = 5 + i*m ...): Y_i
/// misses only cycle vertex i, is complete to Y_{i+-2}, and meets Y_{i+1} in a
/// complete bipartite graph minus a perfect matching (a_k !~ b_k).
Graph pentagon_blowup(int m);
/// Pentagon v1..v5 = 0..4 and x, y, z, u, w = 5..9 with x ~ v1, v3; {y, z, u, w} a K4;
/// y ~ x, v3, v5; z ~ v2, v3, v5; u ~ v1, v2, v4; w ~ x, v1, v4. 2K2-free, chi = omega = 4.
Graph pentagon_k4_core();

/// Named family lookup used by the CLI: cycle, path, complete, complete-multipartite,
/// petersen, banner, t-graph, one-subdivision-complete, two-k2, antihole,
/// pentagon-blowup, pentagon-k4-core.
/// Throws ArgumentError on an unknown name or bad parameters.
Graph family(const std::string& name, const std::vector<int>& params);
std::vector<std::string> family_names();

/// Each pair {u<v} (u-major order) is an edge iff a uniform draw falls below p.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// G(n, p) followed by repair: while an induced 2K2 {ab, cd} exists, add one of
/// the four cross edges ac, ad, bc, bd chosen by the same stream. Terminates
/// because every step adds an edge and complete graphs are 2K2-free.
Graph random_2k2_free(int n, double p, std::uint64_t seed);

/// 2K2-free graph on 5..n_max vertices (n_max >= 10) from one seed. The start
/// graph is, with probabilities 2/5, 1/5, 1/5, 1/5: G(n, p) with p in [0.05, 0.55];
/// a perturbed pentagon blow-up with extra joined and independent vertices; the
/// pentagon K4 core plus random vertices; an antihole plus random vertices. The
/// start is then repaired as in random_2k2_free.
Graph random_structured_2k2_free(std::uint64_t seed, int n_max = 30);

/// Repair an arbitrary start graph into a 2K2-free graph with the rule above.
Graph repair_to_2k2_free(Graph g, Rng& rng);

}  // namespace domhad::gen
