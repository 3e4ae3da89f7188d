#include "zoa.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "zoa/farthest.hpp"
#include "zoa/generate.hpp"
#include "zoa/io.hpp"

struct zoa_problem {
  zoa::ProblemInstance p;
};
struct zoa_result {
  zoa::SolveResult r;
  std::string stats;
};

namespace {

using namespace zoa;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

// Runs f() under the standard error mapping; returns ZOA_OK or an error code.
template <class F>
int guarded(char** err, F&& f) {
  try {
    f();
    return ZOA_OK;
  } catch (const InputError& e) {
    set_err(err, e.what());
    return ZOA_ERR_INPUT;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return ZOA_ERR_INTERNAL;
  }
}

Strategy pick_strategy(const char* strategy, Strategy encoded) {
  if (!strategy || !*strategy || std::strcmp(strategy, "auto") == 0) return encoded;
  if (std::strcmp(strategy, "generic") == 0) return Strategy::Generic;
  throw InputError(std::string("unknown strategy: ") + strategy);
}

zoa_result* run_solve(const ProblemInstance& pi, int k, const char* strategy) {
  Encoded enc = encode(pi);
  SolveResult r;
  if (!enc.trivially_no) {
    r = solve_deletion(enc.inst, *enc.oracle, k, pick_strategy(strategy, enc.strategy));
    if (r.yes) r.witness = decode_witness(pi, enc, r.witness);
  }
  std::ostringstream ss;
  ss << "nodes=" << r.stats.nodes << "\nunit_rounds=" << r.stats.unit_rounds
     << "\nmax_branch=" << r.stats.max_branch << "\noracle_calls=" << enc.oracle->stats().total()
     << "\n";
  auto* out = new zoa_result{std::move(r), ss.str()};
  return out;
}

}  // namespace

extern "C" {

zoa_problem* zoa_problem_parse(const char* text, char** err) {
  zoa_problem* out = nullptr;
  guarded(err, [&] {
    std::istringstream in(text ? text : "");
    out = new zoa_problem{parse_problem(in)};
  });
  return out;
}

zoa_problem* zoa_problem_load(const char* path, char** err) {
  zoa_problem* out = nullptr;
  guarded(err, [&] {
    if (!path) throw InputError("missing path");
    out = new zoa_problem{load_problem(path)};
  });
  return out;
}

zoa_problem* zoa_problem_generate(const char* family, uint64_t seed, int size, int extra, int k,
                                  char** err) {
  zoa_problem* out = nullptr;
  guarded(err, [&] {
    if (!family) throw InputError("missing family");
    GenOptions opt;
    opt.size = size;
    opt.extra = extra;
    opt.k = k;
    out = new zoa_problem{generate(family, seed, opt)};
  });
  return out;
}

void zoa_problem_free(zoa_problem* p) { delete p; }

char* zoa_problem_dump(const zoa_problem* p, char** err) {
  char* out = nullptr;
  guarded(err, [&] {
    if (!p) throw InputError("null problem");
    out = dup_string(dump_problem(p->p));
  });
  return out;
}

int zoa_problem_budget(const zoa_problem* p) { return p ? problem_budget(p->p) : 0; }

const char* zoa_generator_families(void) {
  static std::string joined = [] {
    std::string s;
    for (const std::string& f : generator_families()) {
      if (!s.empty()) s += ' ';
      s += f;
    }
    return s;
  }();
  return joined.c_str();
}

int zoa_solve(const zoa_problem* p, int k, const char* strategy, zoa_result** out, char** err) {
  return guarded(err, [&] {
    if (!p || !out) throw InputError("null argument");
    *out = run_solve(p->p, k, strategy);
  });
}

int zoa_solve_min(const zoa_problem* p, int max_k, const char* strategy, zoa_result** out,
                  char** err) {
  return guarded(err, [&] {
    if (!p || !out) throw InputError("null argument");
    if (max_k < 0) throw InputError("max_k must be nonnegative");
    // Doubling probe for the first yes, then binary refinement.
    zoa_result* probe = run_solve(p->p, 0, strategy);
    if (probe->r.yes) {
      *out = probe;
      return;
    }
    delete probe;
    int lo = 0;  // highest known no
    int hi = 1;
    zoa_result* hit = nullptr;
    while (hi <= max_k) {
      zoa_result* r = run_solve(p->p, hi, strategy);
      if (r->r.yes) {
        hit = r;
        break;
      }
      delete r;
      lo = hi;
      hi *= 2;
    }
    if (!hit) {  // no within budget; report the max_k attempt as a no-result
      *out = run_solve(p->p, max_k, strategy);
      return;
    }
    int yes_k = hi;
    while (yes_k - lo > 1) {
      int mid = lo + (yes_k - lo) / 2;
      zoa_result* r = run_solve(p->p, mid, strategy);
      if (r->r.yes) {
        delete hit;
        hit = r;
        yes_k = mid;
      } else {
        delete r;
        lo = mid;
      }
    }
    *out = hit;
  });
}

void zoa_result_free(zoa_result* r) { delete r; }

int zoa_result_yes(const zoa_result* r) { return r && r->r.yes ? 1 : 0; }

int zoa_result_witness_len(const zoa_result* r) {
  return r ? static_cast<int>(r->r.witness.size()) : 0;
}

int32_t zoa_result_witness(const zoa_result* r, int i) {
  if (!r || i < 0 || static_cast<size_t>(i) >= r->r.witness.size()) return -1;
  return r->r.witness[static_cast<size_t>(i)];
}

char* zoa_result_stats(const zoa_result* r) { return r ? dup_string(r->stats) : nullptr; }

int zoa_certify(const zoa_problem* p, const int32_t* witness, int len, char** err) {
  int valid = 0;
  int rc = guarded(err, [&] {
    if (!p || (len > 0 && !witness)) throw InputError("null argument");
    std::vector<Vertex> w(witness, witness + (len > 0 ? len : 0));
    valid = problem_satisfied(p->p, w) ? 1 : 0;
  });
  return rc == ZOA_OK ? valid : -rc;
}

char* zoa_certificate(const zoa_problem* p, int cap_k, char** err) {
  char* out = nullptr;
  guarded(err, [&] {
    if (!p) throw InputError("null problem");
    Encoded enc = encode(p->p);
    std::ostringstream os;
    if (enc.trivially_no) {
      os << "lb inf\n";
    } else {
      FarthestResult f = farthest_cover(enc.inst, *enc.oracle, cap_k >= 0 ? 2 * cap_k : -1);
      if (!f.within_cap) {
        os << "lb " << f.y.size2() << "/2\n";
      } else {
        int total2 = 0;
        for (int w2 : f.x2) total2 += w2;
        os << "value " << total2 << "/2\n";
        for (size_t v = 0; v < f.x2.size(); v++)
          if (f.x2[v] > 0) os << "cover " << v + 1 << ' ' << f.x2[v] << "/2\n";
      }
      os << dump_packing(f.y);
    }
    out = dup_string(os.str());
  });
  return out;
}

void zoa_string_free(char* s) { std::free(s); }

}  // extern "C"
