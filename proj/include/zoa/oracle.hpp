#pragma once

#include <memory>
#include <span>

#include "zoa/instance.hpp"

namespace zoa {

// Oracle states are cheaply copyable 64-bit tokens; kAllState marks a
// non-implicational continuation.
using OState = int64_t;
constexpr OState kAllState = -1;

// Incremental-test oracle: init/append simulate unit propagation; test decides
// conflict, valid only for single-branching pairs.
class Oracle {
public:
  virtual ~Oracle() = default;

  OState init(const Instance& inst, Vertex s) const { stats_.init++; return do_init(inst, s); }
  OState append(const Instance& inst, OState st, DirEdge d) const { stats_.append++; return do_append(inst, st, d); }
  bool test(OState a, OState b) const { stats_.test++; return do_test(a, b); }

  struct Stats {
    int64_t init = 0, append = 0, test = 0;
    int64_t total() const { return init + append + test; }
  };
  Stats& stats() const { return stats_; }

protected:
  virtual OState do_init(const Instance&, Vertex) const = 0;
  virtual OState do_append(const Instance&, OState, DirEdge) const = 0;
  virtual bool do_test(OState, OState) const = 0;

private:
  mutable Stats stats_;
};

using OraclePtr = std::shared_ptr<const Oracle>;

// A* of a walk: init at s(W), append each edge; kAllState when not
// implicational.
OState astar(const Instance& inst, const Oracle& o, std::span<const Vertex> w);

// U = union of domains; states are implied values; test is inequality.
// Valid for all pairs, not only single-branching ones.
class NaiveOracle final : public Oracle {
protected:
  OState do_init(const Instance& inst, Vertex s) const override;
  OState do_append(const Instance& inst, OState st, DirEdge d) const override;
  bool do_test(OState a, OState b) const override { return a != b; }
};

// Last S-edge oracle; constant time. Valid for instances whose conflicts are
// exactly "the induced simple cycle meets S".
class SubsetFvsOracle final : public Oracle {
protected:
  OState do_init(const Instance& inst, Vertex s) const override;
  OState do_append(const Instance& inst, OState st, DirEdge d) const override;
  bool do_test(OState a, OState b) const override { return a != b; }
};

// Longest-monochromatic-suffix oracle; constant time. num_colors fixes the
// state encoding.
class NonMonoOracle final : public Oracle {
public:
  explicit NonMonoOracle(int64_t num_colors) : colors_(num_colors) {}

protected:
  OState do_init(const Instance& inst, Vertex s) const override;
  OState do_append(const Instance& inst, OState st, DirEdge d) const override;
  bool do_test(OState a, OState b) const override;

private:
  static constexpr OState kEps = 0;
  static constexpr OState kStar = 1;
  OState enc(int64_t vertex_label, int64_t color) const { return 2 + vertex_label * colors_ + color; }
  int64_t colors_;
};

}  // namespace zoa
