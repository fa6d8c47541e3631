// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.
//
// usage: atomfact_acceptance <path-to-atomfact-cli> <fixture-dir>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/oracles.hpp"
#include "atomfact/extract.hpp"
#include "atomfact/generate.hpp"
#include "atomfact/higman.hpp"
#include "atomfact/pencil_factor.hpp"
#include "atomfact/trivialize.hpp"
#include "atomfact/unifactor.hpp"
#include "atomfact_cli/json_io.hpp"

namespace fs = std::filesystem;
using namespace atomfact;

namespace {

// Envelope constant for criterion 6, frozen after the first green run.
constexpr double kEnvelopeConstant = 1.0;

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

const GenLimits kSuiteLimits{5, 4, 8, 1, 4};
constexpr std::uint64_t kSuiteSeed0 = 1000;

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

UPoly random_poly(std::mt19937_64& rng, int maxdeg, long bound) {
  const int deg = static_cast<int>(uniform(rng, -1, maxdeg));
  std::vector<Rat> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(uniform(rng, -bound, bound));
  return UPoly(std::move(c));
}

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int maxdeg, long bound) {
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_poly(rng, maxdeg, bound);
  return m;
}

PolyMatrix product(const std::vector<PolyMatrix>& ms) {
  PolyMatrix p = ms.at(0);
  for (std::size_t i = 1; i < ms.size(); ++i) p = p * ms[i];
  return p;
}

UPoly normalized(const UPoly& f) { return primitive_part(f).primitive; }

std::vector<UPoly> factor_multiset(const UPoly& f) {
  std::vector<UPoly> out;
  for (const auto& fp : factor_rational(f).factors)
    for (unsigned k = 0; k < fp.multiplicity; ++k) out.push_back(fp.factor);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool det_irreducible_checked(const UPoly& d) {
  if (d.degree() < 1) return false;
  if (d.degree() <= 4) return oracle::irreducible(d);
  return is_irreducible(d);
}

bool upper_unitriangular(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(i == j ? m(i, j).is_one() : m(i, j).is_zero())) return false;
  return true;
}

bool lower_unitriangular(const PolyMatrix& m) { return upper_unitriangular(m.transpose()); }

// Criterion 1 and 6 share the same generated suite.
struct SuiteRun {
  Outcome round_trip;
  Outcome envelope;
  double seconds = 0;
  double worst_ratio = 0;
};

SuiteRun run_suite() {
  SuiteRun run;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t k = 0; k < 100; ++k) {
    const GeneratedInstance g = generate(kSuiteSeed0 + k, kSuiteLimits);
    const std::string tag = "seed " + std::to_string(g.seed) + ": ";
    Telemetry tel(false);
    AtomFactorization f;
    try {
      f = factor_matrix(g.M, FactorOptions{&tel});
    } catch (const std::exception& e) {
      run.round_trip.fail(tag + e.what());
      continue;
    }
    if (product(f.atoms) != g.M) run.round_trip.fail(tag + "product differs from input");
    if (f.atoms.size() != oracle::omega(det(g.M))) run.round_trip.fail(tag + "atom count differs from omega(det M)");
    for (const auto& a : f.atoms)
      if (!det_irreducible_checked(det(a))) run.round_trip.fail(tag + "atom with reducible determinant");

    const double b = static_cast<double>(std::max<std::uint64_t>(1, encoding_size(g.M)));
    const double ratio = static_cast<double>(tel.overall_max()) / (b * b * b * b);
    run.worst_ratio = std::max(run.worst_ratio, ratio);
    if (ratio > kEnvelopeConstant)
      run.envelope.fail(tag + "max stage size " + std::to_string(tel.overall_max()) + " exceeds envelope");
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (run.seconds >= 120) run.round_trip.fail("suite took " + std::to_string(run.seconds) + " s");
  return run;
}

Outcome criterion_higman() {
  Outcome out;
  std::mt19937_64 rng(2002);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 4));
    const PolyMatrix m = random_matrix(rng, d, d, 5, 9);
    const HigmanOutcome h = linearize(m);
    std::size_t ell = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) ell += static_cast<std::size_t>(std::max(m(i, j).degree() - 1, 0));
    const std::string tag = "matrix " + std::to_string(t) + ": ";
    if (h.padding != ell) out.fail(tag + "padding mismatch");
    if (h.P * h.L.to_poly() * h.Q != direct_sum(m, PolyMatrix::identity(ell))) out.fail(tag + "P L Q != M (+) I");
    if (h.L.to_poly().max_degree() > 1) out.fail(tag + "L not linear");
    if (!upper_unitriangular(h.P) || !lower_unitriangular(h.Q)) out.fail(tag + "P or Q not unitriangular");
  }
  return out;
}

Outcome criterion_trivialization() {
  Outcome out;
  std::mt19937_64 rng(3003);
  int made = 0;
  int linear = 0;
  while (made < 100) {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 4));
    const std::size_t n = static_cast<std::size_t>(uniform(rng, r + 1, 6));
    // Half linear, half of higher degree; rank deficiency from a low-rank product.
    const int deg = made % 2 == 0 ? 1 : 2;
    PolyMatrix c = random_matrix(rng, r, n, deg, 4);
    if (made % 3 == 0 && r > 1) c = random_matrix(rng, r, 1, 0, 3) * random_matrix(rng, 1, n, deg, 4);
    const PolyMatrix u = oracle::kernel_basis(c);
    if (u.cols() == 0) continue;
    const std::string tag = "relation " + std::to_string(made) + ": ";
    if (!(c * u).is_zero()) {
      out.fail(tag + "oracle kernel basis does not annihilate");
      ++made;
      continue;
    }
    try {
      if (!is_trivialization(c, u, trivialize_general(c, u))) out.fail(tag + "general route fails the contract");
      if (c.max_degree() <= 1) {
        ++linear;
        if (!is_trivialization(c, u, trivialize_linear(c, u))) out.fail(tag + "linear route fails the contract");
      }
    } catch (const std::exception& e) {
      out.fail(tag + e.what());
    }
    ++made;
  }
  if (linear == 0) out.fail("no linear relations exercised");
  return out;
}

UPoly random_irreducible(std::mt19937_64& rng, int deg) {
  for (;;) {
    std::vector<Rat> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(uniform(rng, -5, 5));
    c.emplace_back(1);
    UPoly f(std::move(c));
    if (is_irreducible(f)) return f;
  }
}

// Pencils whose components feed criterion 5.
std::vector<PencilFactorization> g_pencils;

Outcome criterion_pencil() {
  Outcome out;
  std::mt19937_64 rng(4004);
  for (int t = 0; t < 50; ++t) {
    UPoly chi(1);
    unsigned expected = 0;
    int budget = static_cast<int>(uniform(rng, 1, 8));
    while (budget > 0) {
      const int k = static_cast<int>(uniform(rng, 1, std::min(3, budget)));
      const UPoly f = random_irreducible(rng, k);
      const int dmax = budget / k;
      const int di = static_cast<int>(uniform(rng, 1, std::min(3, dmax)));
      chi = chi * pow(f, static_cast<unsigned>(di));
      expected += static_cast<unsigned>(di);
      budget -= k * di;
    }
    const RatMatrix a = companion(chi);
    const std::size_t n = a.rows();
    const Pencil l(a, Rat(-1) * RatMatrix::identity(n));
    const std::string tag = "chi " + chi.str() + ": ";
    try {
      PencilFactorization pf = factor_pencil(l);
      if (pf.atoms.size() != expected) out.fail(tag + "atom count " + std::to_string(pf.atoms.size()));
      std::vector<UPoly> dets;
      for (const auto& at : pf.atoms) dets.push_back(normalized(det(at)));
      std::sort(dets.begin(), dets.end(), canonical_less);
      if (dets != factor_multiset(chi)) out.fail(tag + "atom determinants differ from factorization of chi");
      if (product(pf.atoms) * pf.right_unit != l.to_poly()) out.fail(tag + "product differs from pencil");
      g_pencils.push_back(std::move(pf));
    } catch (const std::exception& e) {
      out.fail(tag + e.what());
    }
  }
  // Also linearizations from the generated suite, which exercise monic reduction.
  for (std::uint64_t k = 0; k < 20; ++k) {
    const GeneratedInstance g = generate(kSuiteSeed0 + k, kSuiteLimits);
    try {
      g_pencils.push_back(factor_pencil(linearize(g.M).L));
    } catch (const std::exception& e) {
      out.fail("seed " + std::to_string(g.seed) + ": " + e.what());
    }
  }
  return out;
}

Outcome criterion_good_basis() {
  Outcome out;
  std::size_t seen = 0;
  for (const auto& pf : g_pencils) {
    for (const auto& cs : pf.components) {
      ++seen;
      const PrimaryComponent& c = cs.component;
      const std::size_t k = static_cast<std::size_t>(c.f.degree());
      const std::size_t dim = c.basis.size();
      const std::string tag = "component f=" + c.f.str() + ": ";
      // Tower U_j = ker f(B)^j.
      std::size_t prev = 0;
      std::size_t accumulated = 0;
      for (unsigned j = 1; j <= c.e; ++j) {
        const std::size_t dj = kernel_basis(eval_at(pow(c.f, j), c.block)).size();
        if (dj <= prev) out.fail(tag + "tower not strictly increasing");
        prev = dj;
        const auto it = std::find_if(cs.layers.begin(), cs.layers.end(), [&](const LayerBasis& lb) { return lb.layer == j; });
        if (it != cs.layers.end()) {
          if (it->nu % k != 0) out.fail(tag + "nu not divisible by deg f");
          std::size_t vecs = 0;
          for (const auto& set : it->cyclic_sets) {
            if (set.size() != k) out.fail(tag + "cyclic set of wrong size");
            vecs += set.size();
          }
          accumulated += vecs;
        }
      }
      if (prev != dim) out.fail(tag + "top of tower is not the component");
      if (accumulated != dim) out.fail(tag + "good basis does not span the component");
      const RatMatrix cf = companion(c.f);
      for (std::size_t off = 0; off + k <= dim; off += k)
        if (cs.representation.block(off, off, k, k) != cf) out.fail(tag + "diagonal block differs from companion(f)");
    }
  }
  if (seen == 0) out.fail("no components inspected");
  return out;
}

int run_cli(const std::string& cli, const std::vector<std::string>& args, const fs::path& out) {
  std::string cmd = "\"" + cli + "\"";
  for (const auto& a : args) cmd += " \"" + a + "\"";
  cmd += " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_cli(const std::string& cli, const fs::path& fixtures) {
  Outcome out;
  const fs::path tmp = fs::temp_directory_path() / ("atomfact_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  const fs::path sink = tmp / "out.json";

  const std::vector<std::pair<std::string, int>> cases{
      {"x2m1.json", 0}, {"malformed.json", 1}, {"nonsquare.json", 1}, {"singular.json", 2}, {"unit.json", 3}};
  for (const auto& [file, code] : cases) {
    const int got = run_cli(cli, {"factor", "-i", (fixtures / file).string()}, sink);
    if (got != code) out.fail(file + " exited " + std::to_string(got) + ", expected " + std::to_string(code));
  }
  if (run_cli(cli, {"factor", "-i", (fixtures / "missing.json").string()}, sink) != 1)
    out.fail("missing file not reported as input error");

  for (std::uint64_t k = 0; k < 100; ++k) {
    const std::string seed = std::to_string(kSuiteSeed0 + k);
    const fs::path gen = tmp / "gen.json";
    const fs::path fac = tmp / "fac.json";
    if (run_cli(cli, {"gen", "--seed", seed}, gen) != 0) {
      out.fail("gen failed for seed " + seed);
      continue;
    }
    if (run_cli(cli, {"factor", "-i", gen.string(), "-o", fac.string()}, sink) != 0) {
      out.fail("factor failed for seed " + seed);
      continue;
    }
    if (run_cli(cli, {"verify", "-i", fac.string()}, sink) != 0) out.fail("verify failed for seed " + seed);
  }
  fs::remove_all(tmp);
  return out;
}

void report(int id, const std::string& name, const Outcome& o, const std::string& extra, int& failures) {
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name;
  if (!extra.empty()) std::cout << " (" << extra << ")";
  if (!o.pass) std::cout << ": " << o.note;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <atomfact-cli> <fixture-dir>\n";
    return 2;
  }
  int failures = 0;
  const SuiteRun suite = run_suite();
  std::ostringstream timing;
  timing.precision(3);
  timing << suite.seconds << " s";
  report(1, "round-trip factorization of 100 generated instances", suite.round_trip, timing.str(), failures);
  report(2, "Higman identity on 200 random matrices", criterion_higman(), "", failures);
  report(3, "trivialization contract on 100 kernel relations", criterion_trivialization(), "", failures);
  report(4, "pencil factorization of 50 companion matrices", criterion_pencil(), "", failures);
  report(5, "good basis structure of every primary component", criterion_good_basis(), "", failures);
  std::ostringstream env;
  env << "worst size/b(M)^4 = " << suite.worst_ratio << ", c = " << kEnvelopeConstant;
  report(6, "encoding size envelope", suite.envelope, env.str(), failures);
  report(7, "CLI exit codes and factor/verify pipeline", criterion_cli(argv[1], argv[2]), "", failures);
  return failures == 0 ? 0 : 1;
}
