#include "zoa/group.hpp"

#include <algorithm>

#include "zoa/instance.hpp"

namespace zoa {

int64_t XorSetGroup::op(int64_t a, int64_t b) const {
  const auto& sa = sets_[static_cast<size_t>(a)];
  const auto& sb = sets_[static_cast<size_t>(b)];
  std::vector<int64_t> out;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return const_cast<XorSetGroup*>(this)->intern(std::move(out));
}

int64_t XorSetGroup::intern(std::vector<int64_t> set) {
  auto it = index_.find(set);
  if (it != index_.end()) return it->second;
  int64_t id = static_cast<int64_t>(sets_.size());
  index_.emplace(set, id);
  sets_.push_back(std::move(set));
  return id;
}

TableGroup::TableGroup(std::vector<std::vector<int64_t>> table) : table_(std::move(table)) {
  int64_t q = static_cast<int64_t>(table_.size());
  if (q == 0) throw InputError("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int64_t>(row.size()) != q) throw InputError("group table is not square");
    for (int64_t x : row)
      if (x < 0 || x >= q) throw InputError("group table entry out of range");
  }
  id_ = -1;
  for (int64_t e = 0; e < q; e++) {
    bool ok = true;
    for (int64_t x = 0; x < q; x++)
      if (op(e, x) != x || op(x, e) != x) ok = false;
    if (ok) {
      id_ = e;
      break;
    }
  }
  if (id_ < 0) throw InputError("group table has no identity");
  inv_.assign(static_cast<size_t>(q), -1);
  for (int64_t a = 0; a < q; a++) {
    for (int64_t b = 0; b < q; b++)
      if (op(a, b) == id_ && op(b, a) == id_) inv_[static_cast<size_t>(a)] = b;
    if (inv_[static_cast<size_t>(a)] < 0) throw InputError("group table element has no inverse");
  }
  for (int64_t a = 0; a < q && a < 8; a++)
    for (int64_t b = 0; b < q && b < 8; b++)
      for (int64_t c = 0; c < q && c < 8; c++)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw InputError("group table is not associative");
}

}  // namespace zoa
