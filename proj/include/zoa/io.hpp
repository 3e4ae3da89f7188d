#pragma once

#include <iosfwd>
#include <string>

#include "zoa/problems.hpp"

namespace zoa {

// Line-oriented instance format, `#` comments, 1-based vertex ids:
//   p mwc n m      then `t v` per terminal and `e u v` per edge
//   p sfvs n m     / p spd n m:   `e u v s` with s in {0,1}
//   p nmct n m     / p mod n m:   `e u v color` (0-based colors)
//   p gfvs n m zq q:              `e u v g` with g in [0,q)
//   p gfvs n m table <file>:      group table file: order q, then q rows of q
//                                 products; labels in [0,q)
//   p nulc n m sigma:             `e u v p_0 ... p_{sigma-1}` (0-based symbols)
//   p tfd n:                      `d v size` lines, then `fan u v a b`
//   p zoa n:                      `d v size`, `perm u v i_0 ... i_{d-1}`,
//                                 `fan u v a b`, `a v value`
// Parse errors raise InputError naming the offending line.

// base_dir resolves a relative `table <file>` reference.
ProblemInstance parse_problem(std::istream& in, const std::string& base_dir = "");
ProblemInstance load_problem(const std::string& path);

// Canonical text; parse(dump(p)) reproduces p. Throws InputError for
// problems the format cannot express (non-cyclic group handles, group-edge
// native instances).
std::string dump_problem(const ProblemInstance& p);

// Whitespace-separated 1-based vertex ids, `#` comments.
std::vector<Vertex> parse_witness(std::istream& in);
std::string dump_witness(const std::vector<Vertex>& w);

}  // namespace zoa
