// Command-line front end for the zoa solver. Talks to the engine exclusively
// through the C interface in zoa.h.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zoa.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct StringFree {
  void operator()(char* s) const { zoa_string_free(s); }
};
using CStr = std::unique_ptr<char, StringFree>;

struct ProblemFree {
  void operator()(zoa_problem* p) const { zoa_problem_free(p); }
};
using Problem = std::unique_ptr<zoa_problem, ProblemFree>;

struct ResultFree {
  void operator()(zoa_result* r) const { zoa_result_free(r); }
};
using Result = std::unique_ptr<zoa_result, ResultFree>;

[[noreturn]] void die(const char* err) {
  std::cerr << "error: " << (err ? err : "unknown failure") << "\n";
  std::exit(kExitError);
}

Problem load(const std::string& path) {
  char* err = nullptr;
  Problem p(zoa_problem_load(path.c_str(), &err));
  if (!p) {
    CStr owned(err);
    die(owned.get());
  }
  return p;
}

Result solve(const zoa_problem* p, int k, const std::string& strategy, bool find_min) {
  char* err = nullptr;
  zoa_result* raw = nullptr;
  int rc = find_min ? zoa_solve_min(p, k, strategy.c_str(), &raw, &err)
                    : zoa_solve(p, k, strategy.c_str(), &raw, &err);
  if (rc != ZOA_OK) {
    CStr owned(err);
    die(owned.get());
  }
  return Result(raw);
}

void print_result(const zoa_result* r, bool witness, bool stats) {
  bool yes = zoa_result_yes(r) != 0;
  std::cout << "answer " << (yes ? "yes" : "no") << "\n";
  if (yes && witness) {
    std::cout << "witness:";
    for (int i = 0; i < zoa_result_witness_len(r); i++)
      std::cout << ' ' << zoa_result_witness(r, i) + 1;
    std::cout << "\n";
  }
  if (stats) {
    CStr s(zoa_result_stats(const_cast<zoa_result*>(r)));
    std::istringstream in(s.get() ? s.get() : "");
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) std::cout << "stats " << line << "\n";
  }
}

void print_certificate(const zoa_problem* p, int cap_k) {
  char* err = nullptr;
  CStr cert(zoa_certificate(p, cap_k, &err));
  if (!cert) {
    CStr owned(err);
    die(owned.get());
  }
  std::cout << cert.get();
}

int cmd_solve(const std::string& file, int k, bool witness, bool certificate,
              const std::string& strategy, bool find_min, bool stats) {
  Problem p = load(file);
  Result r = solve(p.get(), k, strategy, find_min);
  print_result(r.get(), witness, stats);
  bool yes = zoa_result_yes(r.get()) != 0;
  if (certificate) print_certificate(p.get(), yes ? -1 : k);
  return yes ? kExitYes : kExitNo;
}

int cmd_certify(const std::string& file, const std::string& witness_file) {
  Problem p = load(file);
  std::ifstream in(witness_file);
  if (!in) die(("cannot open witness file: " + witness_file).c_str());
  std::vector<int32_t> w;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    long long v;
    while (ss >> v) {
      if (v < 1) die("witness ids are 1-based");
      w.push_back(static_cast<int32_t>(v - 1));
    }
  }
  char* err = nullptr;
  int rc = zoa_certify(p.get(), w.data(), static_cast<int>(w.size()), &err);
  if (rc < 0) {
    CStr owned(err);
    die(owned.get());
  }
  if (rc == 1) {
    std::cout << "witness ok\n";
    return kExitYes;
  }
  std::cerr << "violation: deleting the witness does not satisfy the problem\n";
  return kExitError;
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      die(("bad size list entry: " + item).c_str());
    }
  }
  if (out.empty()) die("empty size list");
  return out;
}

int cmd_bench(const std::string& family, const std::string& sizes_csv, int k, int seeds,
              uint64_t seed_base, int extra) {
  for (int size : parse_sizes(sizes_csv)) {
    for (int s = 0; s < seeds; s++) {
      char* err = nullptr;
      Problem p(zoa_problem_generate(family.c_str(), seed_base + static_cast<uint64_t>(s), size,
                                     extra, k, &err));
      if (!p) {
        CStr owned(err);
        die(owned.get());
      }
      auto t0 = std::chrono::steady_clock::now();
      Result r = solve(p.get(), k, "auto", false);
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      CStr st(zoa_result_stats(r.get()));
      std::string oracle_calls = "?";
      std::istringstream in(st.get() ? st.get() : "");
      std::string line;
      while (std::getline(in, line))
        if (line.rfind("oracle_calls=", 0) == 0) oracle_calls = line.substr(13);
      std::printf("bench family=%s size=%d seed=%llu ms=%.3f answer=%s oracle_calls=%s\n",
                  family.c_str(), size,
                  static_cast<unsigned long long>(seed_base + static_cast<uint64_t>(s)), ms,
                  zoa_result_yes(r.get()) ? "yes" : "no", oracle_calls.c_str());
    }
  }
  return kExitYes;
}

int cmd_fuzz(const std::string& family, int seeds, int size, int k, uint64_t seed_base,
             const std::string& corpus) {
  int yes_count = 0;
  for (int s = 0; s < seeds; s++) {
    uint64_t seed = seed_base + static_cast<uint64_t>(s);
    char* err = nullptr;
    Problem p(zoa_problem_generate(family.c_str(), seed, size, -1, k, &err));
    if (!p) {
      CStr owned(err);
      die(owned.get());
    }
    if (!corpus.empty()) {
      std::filesystem::path dir = std::filesystem::path(corpus) / family;
      std::filesystem::create_directories(dir);
      CStr text(zoa_problem_dump(p.get(), &err));
      if (!text) {
        CStr owned(err);
        die(owned.get());
      }
      std::ofstream out(dir / (std::to_string(seed) + ".inst"));
      out << text.get();
    }
    Result r = solve(p.get(), k, "auto", false);
    Result r2 = solve(p.get(), k + 1, "auto", false);
    if (zoa_result_yes(r.get()) && !zoa_result_yes(r2.get()))
      die("monotonicity violation: yes at k but no at k+1");
    if (zoa_result_yes(r.get())) {
      yes_count++;
      std::vector<int32_t> w;
      for (int i = 0; i < zoa_result_witness_len(r.get()); i++)
        w.push_back(zoa_result_witness(r.get(), i));
      int rc = zoa_certify(p.get(), w.data(), static_cast<int>(w.size()), &err);
      if (rc < 0) {
        CStr owned(err);
        die(owned.get());
      }
      if (rc != 1) die("witness failed certification");
      if (static_cast<int>(w.size()) > k) die("witness larger than the budget");
    }
  }
  std::cout << "fuzz family=" << family << " seeds=" << seeds << " yes=" << yes_count
            << " no=" << seeds - yes_count << " ok\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-deletion solver for 0/1/all constraint problems"};
  app.require_subcommand(1);

  std::string file, witness_file, strategy = "auto", family = "zoa", sizes = "1000";
  std::string corpus;
  int k = 0, seeds = 10, size = 10, extra = -1;
  uint64_t seed_base = 0;
  bool witness = false, certificate = false, find_min = false, stats = false;

  CLI::App* sc_solve = app.add_subcommand("solve", "Decide a deletion instance");
  sc_solve->add_option("file", file, "instance file")->required();
  sc_solve->add_option("-k", k, "deletion budget")->required();
  sc_solve->add_flag("--witness", witness, "print a deletion set on yes");
  sc_solve->add_flag("--certificate", certificate, "print the cover/packing certificate");
  sc_solve->add_option("--strategy", strategy, "branching strategy: auto|generic")
      ->check(CLI::IsMember({"auto", "generic"}));
  sc_solve->add_flag("--find-min", find_min, "treat -k as a maximum and find the smallest budget");
  sc_solve->add_flag("--stats", stats, "print solver statistics");

  CLI::App* sc_certify = app.add_subcommand("certify", "Check a witness file");
  sc_certify->add_option("file", file, "instance file")->required();
  sc_certify->add_option("witness", witness_file, "witness file (1-based ids)")->required();

  CLI::App* sc_bench = app.add_subcommand("bench", "Time generated instances");
  sc_bench->add_option("--family", family, "generator family")->required();
  sc_bench->add_option("--sizes", sizes, "comma-separated size list")->required();
  sc_bench->add_option("-k", k, "deletion budget");
  sc_bench->add_option("--seeds", seeds, "seeds per size");
  sc_bench->add_option("--seed", seed_base, "base seed");
  sc_bench->add_option("--extra", extra, "extra edges beyond a spanning tree (-1 default)");

  CLI::App* sc_fuzz = app.add_subcommand("fuzz", "Solve and self-check generated instances");
  sc_fuzz->add_option("--family", family, "generator family")->required();
  sc_fuzz->add_option("--seeds", seeds, "number of seeds");
  sc_fuzz->add_option("--size", size, "instance size");
  sc_fuzz->add_option("-k", k, "deletion budget");
  sc_fuzz->add_option("--seed", seed_base, "base seed");
  sc_fuzz->add_option("--corpus", corpus, "write instances under <dir>/<family>/<seed>.inst");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sc_solve->parsed()) return cmd_solve(file, k, witness, certificate, strategy, find_min, stats);
    if (sc_certify->parsed()) return cmd_certify(file, witness_file);
    if (sc_bench->parsed()) return cmd_bench(family, sizes, k, seeds, seed_base, extra);
    if (sc_fuzz->parsed()) return cmd_fuzz(family, seeds, size, k, seed_base, corpus);
  } catch (const std::exception& e) {
    die(e.what());
  }
  return kExitError;
}
