#pragma once

#include "zoa/farthest.hpp"

namespace zoa {

// A sub-instance of the solver's input: a compacted copy plus the mapping
// from its vertex ids back to the input's vertex ids.
struct Residual {
  Instance inst;
  std::vector<Vertex> orig;
};

Residual make_residual(const Instance& inst);

// Removes one vertex together with its constraints.
Residual residual_delete(const Residual& r, Vertex u);

// Fixes an assigned vertex: removes it, moves the already-contradicted
// assigned neighbors into out_conflicted (input-instance ids; these must be
// deleted and charged), and promotes propagated neighbors into the assigned
// set with the implied values and oracle states.
Residual residual_fix(const Residual& r, const Oracle& o, Vertex u,
                      std::vector<Vertex>& out_conflicted);

// Extends the assignment with u := a (same vertex numbering).
Residual residual_assign(const Residual& r, Vertex u, Value a);

// Branching strategies for residuals with an empty assigned set.
enum class Strategy {
  Auto,     // group domain -> identity pin; two-fan present -> its pair; else enumerate
  Generic,  // enumerate the domain of the lowest-index vertex
  TwoFan,   // pinned pair of the lowest-index two-fan constraint
  Group,    // pin the group identity at the lowest-index vertex
};

struct BranchOption {
  Vertex v;
  Value a;
};
// Candidate assignments such that any deletion set survives at least one of
// them. Requires a non-empty vertex set; Generic requires a finite domain and
// TwoFan a present two-fan constraint (falls back to Generic otherwise).
std::vector<BranchOption> branching_set(const Instance& inst, Strategy s);

// Round-robin unit propagation from a single assigned source over an
// edge-free packing; detects whether the implied component is conflicting.
class UnitProp {
public:
  enum Status { Running, Clean, Conflict };

  UnitProp(const Instance& inst, const Oracle& o, Vertex src);
  // Performs one relaxation step (one directed edge, or one queue advance).
  Status step();
  Status status() const { return status_; }
  int64_t steps() const { return steps_; }
  // The implicated vertex set (valid once Clean).
  const std::vector<Vertex>& visited() const { return queue_; }

private:
  const Instance* inst_;
  const Oracle* o_;
  std::vector<char> seen_;
  std::vector<OState> tail_;
  std::vector<DirEdge> via_;
  std::vector<Vertex> queue_;
  size_t qhead_ = 0, ei_ = 0;
  int64_t steps_ = 0;
  Status status_ = Running;
};

struct SolveStats {
  int64_t nodes = 0;        // recursion nodes entered
  int64_t unit_rounds = 0;  // parallel unit-propagation rounds
  int max_branch = 1;       // largest branching set used
};

struct SolveResult {
  bool yes = false;
  std::vector<Vertex> witness;  // deletion set on the input instance (if yes)
  SolveStats stats;
};

// Decides whether at most k vertices can be deleted so that the remaining
// constraints are satisfiable by an extension of the partial assignment, and
// returns such a set when the answer is yes. Requires tracked ground truth.
SolveResult solve_deletion(const Instance& inst, const Oracle& o, int k,
                           Strategy strategy = Strategy::Auto);

}  // namespace zoa
