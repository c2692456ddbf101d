#pragma once

// Crystal operators on T_D: the bracketing rule and the sl_2-string oracle.

#include "qschur/tmodule.hpp"

#include <optional>
#include <vector>

namespace qschur {

/// Partition of the (finite, literal) position set p^{-1}({i, i+1}) into
/// unpaired positions J and pairs K_s = {k < l} with p(k) = i, p(l) = i + 1.
struct BracketingPartition {
  int residue = 0;
  std::vector<int> J;
  std::vector<std::pair<int, int>> pairs; // sorted by the smaller element
  friend bool operator==(const BracketingPartition&, const BracketingPartition&) = default;
};

/// Bracket matching with p(k) = i as an opening and p(k) = i + 1 as a
/// closing bracket. Requires n >= 2 (for n = 1 the literal preimages of
/// i and i + 1 collide modulo D).
BracketingPartition bracket(const FlagSymbol& p, int i);

/// Number of unpaired i + 1 (resp. i) values: the string data of p.
int crystal_epsilon(const FlagSymbol& p, int i);
int crystal_phi(const FlagSymbol& p, int i);

std::optional<FlagSymbol> kashiwara_f(const FlagSymbol& p, int i);
std::optional<FlagSymbol> kashiwara_e(const FlagSymbol& p, int i);

/// Same operators from the sl_2-string decomposition of [p] over K,
/// followed by reduction modulo v L_D.
std::optional<FlagSymbol> kashiwara_oracle(const FlagSymbol& p, int i, Chevalley which);

/// p_l for l = 0 .. #J: the chain through p with J's first l positions
/// carrying i + 1 and the remaining ones i (pairs unchanged).
std::vector<FlagSymbol> crystal_chain(const FlagSymbol& p, int i);

/// <p> = sum over (A, B) of v^{n_A} (-v)^{#B} [p_{A,B}].
ModuleVector angle_vector(const FlagSymbol& p, int i);

struct CrystalEdge {
  FlagSymbol from;
  FlagSymbol to;
  int residue = 0;
  bool leaves_window = false;
  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
  int n = 0;
  int rank = 0;
  int lo = 0;
  int hi = 0;
  std::vector<FlagSymbol> vertices;
  std::vector<CrystalEdge> edges; // sorted
  friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;
};

/// Vertices: symbols with every window value in [lo, hi] (optionally of one
/// weight). Edges b -> f~_i(b); targets outside the window are kept and
/// marked. OpenMP-parallel over vertices.
CrystalGraph crystal_graph(int n, int rank, int lo, int hi, const std::optional<std::vector<int>>& weight = {});
/// Serial reference for crystal_graph.
CrystalGraph crystal_graph_serial(int n, int rank, int lo, int hi,
                                  const std::optional<std::vector<int>>& weight = {});

} // namespace qschur
