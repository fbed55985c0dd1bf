#pragma once

#include <string>
#include <vector>

#include "domhad/graph.hpp"

// Brute-force reference implementations. They read a graph only through
// order() and adjacent() and share no search code with the library.
namespace oracle {

using Sets = std::vector<std::vector<int>>;

bool proper_coloring(const domhad::Graph& g, const std::vector<int>& color, int k);

/// Smallest k admitting a proper coloring, by plain backtracking in vertex order.
int chromatic(const domhad::Graph& g);

/// Largest clique by subset enumeration (n <= 24).
int clique(const domhad::Graph& g);
int independence(const domhad::Graph& g);

/// Union-find over the edges inside s.
bool connected(const domhad::Graph& g, const std::vector<int>& s);

bool dominating_model(const domhad::Graph& g, const Sets& sets);
bool ordinary_model(const domhad::Graph& g, const Sets& sets);

/// Tries every assignment of vertices to {unused, T1..Tt}.
bool has_dominating_kt(const domhad::Graph& g, int t);
bool has_kt_minor(const domhad::Graph& g, int t);
int dominating_hadwiger(const domhad::Graph& g);

/// All 4-subsets.
bool two_k2_free(const domhad::Graph& g);

/// Hammer-Simeone degree-sequence test.
bool split_by_degrees(const domhad::Graph& g);

/// Short-form graph6 decoder written straight from the format description (n < 63).
domhad::Graph decode_graph6(const std::string& s);

/// Lines of tests/data/graphs_upto8.g6 with at most max_n vertices.
std::vector<std::string> small_graph_corpus(int max_n);

}  // namespace oracle
