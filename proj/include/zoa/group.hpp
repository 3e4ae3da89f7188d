#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace zoa {

// Group elements are interned 64-bit ids; equality of ids is equality of
// elements. Implementations may intern lazily (set-based groups).
class Group {
public:
  virtual ~Group() = default;
  virtual int64_t identity() const = 0;
  virtual int64_t op(int64_t a, int64_t b) const = 0;
  virtual int64_t inverse(int64_t a) const = 0;
  // Cost declared for statistics; 1 for O(1) groups.
  virtual int64_t op_cost() const { return 1; }
};

// Z_q under addition; elements are 0..q-1.
class CyclicGroup final : public Group {
public:
  explicit CyclicGroup(int64_t q) : q_(q) {}
  int64_t identity() const override { return 0; }
  int64_t op(int64_t a, int64_t b) const override { return (a + b) % q_; }
  int64_t inverse(int64_t a) const override { return (q_ - a) % q_; }
  int64_t order() const { return q_; }

private:
  int64_t q_;
};

// XOR-subset group over a universe of at most 63 items; elements are bitmasks.
class XorMaskGroup final : public Group {
public:
  int64_t identity() const override { return 0; }
  int64_t op(int64_t a, int64_t b) const override { return a ^ b; }
  int64_t inverse(int64_t a) const override { return a; }
};

// XOR-subset group over arbitrary universes; elements are interned sorted sets.
class XorSetGroup final : public Group {
public:
  XorSetGroup() { intern({}); }
  int64_t identity() const override { return 0; }
  int64_t op(int64_t a, int64_t b) const override;
  int64_t inverse(int64_t a) const override { return a; }
  int64_t op_cost() const override { return 8; }

  // Interns a sorted duplicate-free set and returns its element id.
  int64_t intern(std::vector<int64_t> set);
  const std::vector<int64_t>& set_of(int64_t id) const { return sets_[static_cast<size_t>(id)]; }

private:
  std::vector<std::vector<int64_t>> sets_;
  std::map<std::vector<int64_t>, int64_t> index_;
};

// Finite group given by an explicit multiplication table table[a][b] = a*b.
// The constructor locates the identity and inverses and rejects tables that
// are not groups (non-square, out-of-range entries, missing identity or
// inverses).
class TableGroup final : public Group {
public:
  explicit TableGroup(std::vector<std::vector<int64_t>> table);
  int64_t identity() const override { return id_; }
  int64_t op(int64_t a, int64_t b) const override {
    return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  int64_t inverse(int64_t a) const override { return inv_[static_cast<size_t>(a)]; }
  int64_t order() const { return static_cast<int64_t>(table_.size()); }

private:
  std::vector<std::vector<int64_t>> table_;
  std::vector<int64_t> inv_;
  int64_t id_ = 0;
};

using GroupPtr = std::shared_ptr<Group>;

}  // namespace zoa
