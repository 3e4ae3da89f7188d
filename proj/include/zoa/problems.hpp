#pragma once

#include <variant>

#include "zoa/fpt.hpp"

namespace zoa {

// The eight concrete vertex-deletion problems plus the native constraint
// format. Vertices are 0-based; graphs may contain parallel edges and
// self-loops (the encoders normalize them away).

struct NulcProblem {
  struct E {
    Vertex u, v;
    std::vector<Value> perm;  // image of each symbol, u -> v
  };
  int n = 0;
  int sigma = 0;
  std::vector<E> edges;
  int k = 0;
};

struct TwoFanProblem {
  struct F {
    Vertex u, v;
    Value a, b;  // (phi(u)=a) or (phi(v)=b)
  };
  std::vector<int> domains;
  std::vector<F> fans;
  int k = 0;
};

struct ColoredEdge {
  Vertex u, v;
  int color;
};

// Delete vertices so the rest admits an orientation in which every vertex's
// incoming edges share one color.
struct MonoOrientProblem {
  int n = 0;
  int num_colors = 0;
  std::vector<ColoredEdge> edges;
  int k = 0;
};

// Delete vertices so every remaining cycle is monochromatic.
struct NonMonoProblem {
  int n = 0;
  int num_colors = 0;
  std::vector<ColoredEdge> edges;
  int k = 0;
};

struct SubsetEdge {
  Vertex u, v;
  bool in_s;
};

// Delete vertices so that contracting the remaining non-S edges leaves a
// pseudoforest (every component has at most as many edges as vertices).
struct SubsetPseudoforestProblem {
  int n = 0;
  std::vector<SubsetEdge> edges;
  int k = 0;
};

// Delete vertices so no remaining cycle uses an S-edge.
struct SubsetFvsProblem {
  int n = 0;
  std::vector<SubsetEdge> edges;
  int k = 0;
};

// Delete at most k non-terminals so the terminals end up in pairwise
// different components.
struct MultiwayCutProblem {
  int n = 0;
  std::vector<Vertex> terminals;
  std::vector<std::pair<Vertex, Vertex>> edges;
  int k = 0;
};

// Delete vertices so the group-labeled graph has a consistent labeling
// (equivalently: no cycle with a non-identity label product).
struct GroupFvsProblem {
  struct E {
    Vertex u, v;
    int64_t label;  // label of the u -> v direction
  };
  int n = 0;
  GroupPtr group;
  std::vector<E> edges;
  int k = 0;
};

// Native format: an arbitrary constraint instance with a partial assignment.
struct GenericProblem {
  Instance inst;
  int k = 0;
};

using ProblemInstance =
    std::variant<NulcProblem, TwoFanProblem, MonoOrientProblem, SubsetPseudoforestProblem,
                 MultiwayCutProblem, GroupFvsProblem, SubsetFvsProblem, NonMonoProblem,
                 GenericProblem>;

// Result of translating a problem into a constraint instance.
struct Encoded {
  Instance inst;
  OraclePtr oracle;
  Strategy strategy = Strategy::Auto;
  // Per encoded vertex: the original vertex this vertex reports as when it
  // appears in a witness (subdivision vertices report an endpoint of their
  // edge, terminal copies their attachment point).
  std::vector<Vertex> origin;
  std::vector<char> artificial;  // not an original vertex
  // Set when the answer is "no" for every budget (adjacent terminals).
  bool trivially_no = false;
};

// Builds the constraint instance, the problem's oracle, and its branching
// strategy. Throws InputError on malformed problems (bad ids, non-bijective
// permutations, duplicate terminals, k < 0).
Encoded encode(const ProblemInstance& p);

// Maps a witness on the encoded instance back to original vertices and
// verifies it against the problem's own predicate (connectivity, cycle,
// orientation, or assignment check). Throws InternalError on a witness that
// fails verification.
std::vector<Vertex> decode_witness(const ProblemInstance& p, const Encoded& enc,
                                   const std::vector<Vertex>& witness);

// The problem's predicate: is the problem satisfied once the given original
// vertices are deleted? Polynomial structural checkers, independent of the
// cover/packing engine.
bool problem_satisfied(const ProblemInstance& p, const std::vector<Vertex>& deleted);

// Budget of the problem (the k field of the active alternative).
int problem_budget(const ProblemInstance& p);
void set_problem_budget(ProblemInstance& p, int k);

// End-to-end solve: encode, run the deletion solver, decode the witness.
SolveResult solve_problem(const ProblemInstance& p, int k);

// A full satisfying assignment of an instance with no deletions, or nullopt.
// Propagates from the assigned vertices, then repeatedly applies one level of
// branching trials to the unassigned remainder; polynomial time. Requires
// tracked ground truth.
std::optional<std::vector<Value>> satisfying_assignment(const Instance& inst,
                                                        Strategy s = Strategy::Auto);

}  // namespace zoa
