// Acceptance suite: one line per criterion, PASS/PARTIAL/FAIL.
// Environment:
//   POLYMAT_CLI        path to the CLI binary (criterion 9)
//   POLYMAT_DATA       directory with frozen regression files
//   POLYMAT_L5_BUDGET  seconds for the n=5 enumeration (default 900)

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "polymat/cone.hpp"
#include "polymat/io.hpp"
#include "polymat/polytope.hpp"
#include "polymat/reduce.hpp"
#include "polymat/setfn.hpp"
#include "polymat/source.hpp"
#include "support/gen.hpp"

using namespace polymat;

namespace {

struct Outcome {
  enum Kind { Pass, Partial, Fail } kind = Fail;
  std::string detail;
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? v : fallback;
}

// Frozen regression values established by this artifact's own oracle-checked
// runs (the full enumeration is reproducible; counts guard against drift).
constexpr std::size_t kRayCount3 = 8;
constexpr std::size_t kRayCount4 = 41;
constexpr std::size_t kRayCount5 = 117983;

bool ray_ratio_at_least(const Ray& e, long num) {
  if (e.values[1] == 0) return false;
  for (int b = 0; b < e.n(); ++b)
    if (e.values[elem_bit(b)] >= num * e.values[1]) return true;
  return false;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Timer t3;
  const Rat l3 = lambda(3, {.threads = 2});
  const double s3 = t3.secs();
  Timer t4;
  const EnumResult r4 = enumerate_rays(4, {.threads = 2, .verify = true});
  const Rat l4 = lambda_from_rays(r4.rays, 0);
  const double s4 = t4.secs();

  std::ostringstream d;
  d << "lambda(3) = " << to_string(l3) << " in " << s3 << "s, lambda(4) = "
    << to_string(l4) << " in " << s4 << "s (" << r4.rays.size() << " rays)";
  if (l3 == 1 && l4 == 2 && r4.rays.size() == kRayCount4 && s3 < 1.0 &&
      s4 < 60.0)
    return {Outcome::Pass, d.str()};
  return {Outcome::Fail, d.str()};
}

Outcome criterion2() {
  EnumOptions opt;
  opt.threads = 2;
  opt.budget_seconds = std::stod(env_or("POLYMAT_L5_BUDGET", "900"));
  Timer t;
  const EnumResult res = enumerate_rays(5, opt);
  const double secs = t.secs();

  if (res.complete) {
    const Rat l5 = lambda_from_rays(res.rays, 0);
    std::ostringstream d;
    d << "full enumeration: " << res.rays.size() << " rays in " << secs
      << "s, lambda(5) = " << to_string(l5);
    if (l5 == 4 && res.rays.size() == kRayCount5)
      return {Outcome::Pass, d.str()};
    return {Outcome::Fail, d.str()};
  }

  // Budget exceeded: exhibit the lower bound from a verified found ray.
  for (const Ray& e : res.rays)
    if (ray_ratio_at_least(e, 4))
      return {Outcome::Partial,
              "budget " + std::to_string(opt.budget_seconds) +
                  "s exceeded; a verified partial-run ray exhibits "
                  "lambda(5) >= 4"};

  // Fall back to the frozen witness from a completed run of this toolkit.
  const std::string path =
      env_or("POLYMAT_DATA", "tests/data") + "/lambda5_witness.txt";
  std::ifstream in(path);
  if (in) {
    const io::RayFile rf = io::read_rays(in);
    if (rf.n == 5 && rf.rays.size() == 1) {
      const SetFunction f = rf.rays[0].to_setfn();
      if (is_polymatroid(f) && is_extremal(f) &&
          ray_ratio_at_least(rf.rays[0], 4))
        return {Outcome::Partial,
                "budget exceeded; frozen witness ray re-verified: extremal "
                "polymatroid with ratio 4, so lambda(5) >= 4"};
    }
  }
  return {Outcome::Fail, "budget exceeded and no ratio-4 witness available"};
}

Outcome criterion3() {
  for (int k : {2, 3}) {
    Timer t;
    const SetFunction f = build_polymatroid(ConstructionParams{k});
    AxiomScanOptions full;
    full.mode = AxiomScanOptions::Mode::Full;
    const AxiomReport rep = check_axioms(f, full);
    const ConditionsReport cond = verify_conditions(ConstructionParams{k});
    const bool ok = rep.ok() && !rep.sampled && cond.cond_i && cond.cond_ii &&
                    cond.f_of_x == (1L << k) - 1 &&
                    cond.c_ratio >= rat((1L << k) - 1, k);
    if (!ok)
      return {Outcome::Fail, "k = " + std::to_string(k) + " failed a check"};
    if (t.secs() > 60.0)
      return {Outcome::Fail, "k = " + std::to_string(k) + " exceeded runtime"};
  }
  return {Outcome::Pass,
          "k = 2, 3: full scans pass, conditions hold, f(X) and the ratio "
          "bound are exact"};
}

Outcome criterion4() {
  Timer t;
  const ConstructionParams p{4};
  const ConditionsReport cond = verify_conditions(p);
  const LinearSource src = build_source(p);
  AxiomScanOptions opt;
  opt.mode = AxiomScanOptions::Mode::Sampled;
  opt.sample_budget = 100000;
  opt.seed = 2024;
  const AxiomReport rep =
      scan_axioms(src.ground, [&](Mask A) { return rank_value(src, A); }, opt);
  const double secs = t.secs();

  std::ostringstream d;
  d << "n = 21 lazy oracle: conditions "
    << ((cond.cond_i && cond.cond_ii) ? "hold" : "FAIL") << ", f(X) = "
    << cond.f_of_x << ", sampled B2 rows = " << rep.rows_checked << ", "
    << secs << "s";
  if (cond.cond_i && cond.cond_ii && cond.f_of_x == 15 && rep.ok() &&
      rep.rows_checked >= 100000 && secs < 300.0)
    return {Outcome::Pass, d.str()};
  return {Outcome::Fail, d.str()};
}

Outcome criterion5() {
  const LinearSource src = build_source(ConstructionParams{2});
  for (Mask A = 0; A <= src.ground.full(); ++A)
    if (brute_entropy(src, A) != rank_value(src, A))
      return {Outcome::Fail,
              "mismatch at subset mask " + std::to_string(A)};
  return {Outcome::Pass,
          "brute_entropy = rank_value on all 128 subsets at k = 2"};
}

Outcome criterion6() {
  // Every extreme ray with positive anchor value is a-reduced.
  for (int n : {3, 4}) {
    const EnumResult res = enumerate_rays(n, {.threads = 2});
    if (!res.complete) return {Outcome::Fail, "enumeration incomplete"};
    for (const Ray& e : res.rays) {
      if (e.values[1] == 0) continue;
      const SetFunction f = e.to_setfn();
      const Decomposition d = reduce(f, 0);
      if (!(d.h == SetFunction::zero(f.ground())))
        return {Outcome::Fail,
                "a ray of n = " + std::to_string(n) + " was not a-reduced"};
    }
  }

  // The two worked n = 2 decompositions, exactly.
  GroundSet g(2);
  {
    QVec v(4);
    v << 0, 1, 2, 2;
    const Decomposition d = reduce(SetFunction(g, v), 0);
    QVec ge(4), he(4);
    ge << 0, 1, 1, 1;
    he << 0, 0, 1, 1;
    if (!(d.g == SetFunction(g, ge) && d.h == SetFunction(g, he)))
      return {Outcome::Fail, "worked example (1,2,2) mismatch"};
  }
  {
    const Decomposition d = reduce(modular(g, {rat(1), rat(1)}), 0);
    if (!(d.g == modular(g, {rat(1), rat(0)}) &&
          d.h == modular(g, {rat(0), rat(1)})))
      return {Outcome::Fail, "worked example modular(1,1) mismatch"};
  }
  return {Outcome::Pass,
          "all anchored rays of n = 3, 4 return h = 0; worked n = 2 pairs "
          "are exact"};
}

Outcome criterion7() {
  testgen::Rng rng(20240102);
  const EnumResult rays4 = enumerate_rays(4, {.threads = 2});
  int done = 0;
  while (done < 100) {
    SetFunction f = [&]() -> SetFunction {
      switch (done % 3) {
        case 0:
          return testgen::random_conic(GroundSet(4), rays4.rays, rng);
        case 1: {
          const int n = 3 + static_cast<int>(rng() % 3);
          return rank_function(
              testgen::random_source(GroundSet(n), 6, rng));
        }
        default: {
          const int n = 3 + static_cast<int>(rng() % 3);
          return testgen::random_polymatroid(GroundSet(n), rng);
        }
      }
    }();
    const int n = f.n();
    const int a = static_cast<int>(rng() % n);
    if (f(elem_bit(a)) == 0) continue;

    const Decomposition d = reduce(f, a);
    const Decomposition dd = reduce(d.g, a);
    if (!(dd.h == SetFunction::zero(f.ground())))
      return {Outcome::Fail, "reduce . reduce left a nonzero h"};

    const Rat fa = f(elem_bit(a));
    const Rat ga = d.g(elem_bit(a));
    bool heredity = true;
    for_each_submask(f.full() ^ elem_bit(a), [&](Mask A) {
      const Rat cf = cond(f, elem_bit(a), A);
      if (cf == 0 && cond(d.g, elem_bit(a), A) != 0) heredity = false;
      if (cf == fa && cond(d.g, elem_bit(a), A) != ga) heredity = false;
    });
    if (!heredity) return {Outcome::Fail, "sandwich heredity violated"};
    ++done;
  }
  return {Outcome::Pass,
          "100 fuzzed polymatroids (n <= 5): idempotence and tight-value "
          "heredity hold"};
}

Outcome criterion8() {
  // lambda(n) < 2^(2^n - 1)
  for (int n : {3, 4}) {
    const Rat l = lambda(n, {.threads = 2});
    if (!(l < Rat(hadamard_bound(n).proved)))
      return {Outcome::Fail, "lambda bound failed at n = " + std::to_string(n)};
  }

  testgen::Rng rng(77);
  std::vector<SetFunction> corpus;
  corpus.push_back(testgen::uniform_matroid(GroundSet(3), 1));
  corpus.push_back(build_polymatroid(ConstructionParams{2}));
  for (int t = 0; t < 25; ++t)
    corpus.push_back(testgen::random_polymatroid(
        GroundSet(2 + static_cast<int>(rng() % 3)), rng));

  for (const SetFunction& f : corpus) {
    for (int a = 0; a < f.n(); ++a) {
      if (f(elem_bit(a)) == 0) continue;
      if (elongation(f, a) != c_ratio(f, a))
        return {Outcome::Fail, "elongation != c_ratio"};
    }
    std::vector<int> perm(f.n());
    for (int i = 0; i < f.n(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (!contains(f, greedy_vertex(f, perm)))
      return {Outcome::Fail, "greedy vertex escaped the base polytope"};
  }

  // Exhaustive adjacent-transposition sweep for n <= 4.
  for (int n = 2; n <= 4; ++n) {
    GroundSet g(n);
    for (const SetFunction& f :
         {testgen::uniform_matroid(g, std::max(1, n - 1)),
          testgen::random_polymatroid(g, rng)}) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      do {
        const QVec base = greedy_vertex(f, perm);
        if (!contains(f, base))
          return {Outcome::Fail, "greedy vertex escaped the base polytope"};
        for (int s = 0; s + 1 < n; ++s) {
          std::vector<int> swapped = perm;
          std::swap(swapped[s], swapped[s + 1]);
          const QVec other = greedy_vertex(f, swapped);
          const int i = perm[s], j = perm[s + 1];
          for (int e = 0; e < n; ++e)
            if (e != i && e != j && base[e] != other[e])
              return {Outcome::Fail, "transposition delta off e_i - e_j"};
          if (base[i] - other[i] != other[j] - base[j])
            return {Outcome::Fail, "transposition delta not antisymmetric"};
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return {Outcome::Pass,
          "lambda < 2^(2^n - 1); elongation = c_ratio; greedy vertices "
          "contained; transposition deltas parallel to e_i - e_j"};
}

Outcome criterion9() {
  const std::string cli = env_or("POLYMAT_CLI", "");
  if (cli.empty())
    return {Outcome::Fail, "POLYMAT_CLI not set; cannot exec the binary"};
  auto capture = [&](const std::string& args) {
    std::string out;
    FILE* pipe = popen((cli + " " + args).c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
      out.append(buf, got);
    pclose(pipe);
    return out;
  };
  const std::string t1 = capture("rays --n 4 --threads 1");
  const std::string t4 = capture("rays --n 4 --threads 4");
  const std::string t8 = capture("rays --n 4 --threads 8");
  if (t1.empty()) return {Outcome::Fail, "no output from the CLI"};
  if (t1 == t4 && t1 == t8)
    return {Outcome::Pass,
            "rays --n 4 output byte-identical across --threads 1, 4, 8"};
  return {Outcome::Fail, "outputs differ across thread counts"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> crit = {
      {"1: lambda(3) = 1 and lambda(4) = 2, exact", criterion1},
      {"2: lambda(5) = 4 (stretch, budgeted)", criterion2},
      {"3: construction k = 2, 3 fully verified", criterion3},
      {"4: construction k = 4 via the lazy oracle", criterion4},
      {"5: entropy oracle equals rank at k = 2", criterion5},
      {"6: anchored extreme rays are a-reduced; worked pairs exact",
       criterion6},
      {"7: idempotence and heredity on 100 fuzzed inputs", criterion7},
      {"8: cross-module consistency", criterion8},
      {"9: byte-identical rays across thread counts", criterion9},
  };

  int failures = 0;
  for (const auto& [name, fn] : crit) {
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {Outcome::Fail, std::string("exception: ") + e.what()};
    }
    const char* tag = out.kind == Outcome::Pass      ? "PASS"
                      : out.kind == Outcome::Partial ? "PARTIAL"
                                                     : "FAIL";
    if (out.kind == Outcome::Fail) ++failures;
    std::cout << "[" << tag << "] criterion " << name;
    if (!out.detail.empty()) std::cout << " -- " << out.detail;
    std::cout << std::endl;
  }
  if (failures) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria satisfied" << std::endl;
  return 0;
}
