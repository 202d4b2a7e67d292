// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "symcoupling/algebra.hpp"
#include "symcoupling/askey.hpp"
#include "symcoupling/cache.hpp"
#include "symcoupling/cli.hpp"
#include "symcoupling/families.hpp"
#include "symcoupling/volume.hpp"

using namespace symcoupling;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %2d: %s -- %s [%.1fs]\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::vector<SixJArgs> random_admissible(std::mt19937& rng, int count, int max_twice) {
  std::uniform_int_distribution<int> u(0, max_twice);
  std::vector<SixJArgs> out;
  while (static_cast<int>(out.size()) < count) {
    const SixJArgs a = SixJArgs::from_twice({u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)});
    if (a.admissible()) out.push_back(a);
  }
  return out;
}

Outcome sixj_exactness() {
  const auto all = oracle::admissible_sixj(8);
  int bad = 0;
  for (const auto& a : all)
    if (!(wigner_6j(a) == oracle::sixj(a))) ++bad;
  return {bad == 0, std::to_string(all.size()) + " admissible arrays, " + std::to_string(bad) + " mismatches"};
}

Outcome symmetry() {
  std::mt19937 rng(144);
  int bad = 0, full = 0;
  std::size_t largest = 0;
  for (const auto& a : random_admissible(rng, 1000, 10)) {
    const auto orbit = symmetry_orbit(a);
    largest = std::max(largest, orbit.size());
    if (orbit.size() == 144) ++full;
    if (144 % orbit.size() != 0) ++bad;
    const ExactRadical v = wigner_6j(a);
    for (const auto& o : orbit)
      if (!(wigner_6j(o) == v)) ++bad;
  }
  return {bad == 0, "1000 orbits, " + std::to_string(full) + " of size 144, largest " + std::to_string(largest) +
                        ", " + std::to_string(bad) + " violations"};
}

Outcome family_I() {
  const auto quads = canonical_quadrilaterals(8);
  int bad = 0, entries = 0;
  for (const auto& q : quads) {
    const auto r = check_duality_I(q);
    entries += r.entries_checked;
    if (!r.passed) ++bad;
  }
  return {bad == 0, std::to_string(quads.size()) + " quadrilaterals, " + std::to_string(entries) +
                        " exact sums, " + std::to_string(bad) + " failures"};
}

Outcome spectrum_properties() {
  const auto quads = canonical_quadrilaterals(10);
  double pairing = 0, residual = 0, regge = 0;
  int zero_mode_bad = 0;
  for (const auto& q : quads) {
    const VolumeSpectrum s = spectrum(build_matrix(q));
    const std::size_t n = s.eigenvalues.size();
    bool has_zero = false;
    for (std::size_t k = 0; k < n; ++k) {
      pairing = std::max(pairing, std::fabs(s.eigenvalues[k] + s.eigenvalues[n - 1 - k]));
      has_zero = has_zero || std::fabs(s.eigenvalues[k]) < 1e-10;
    }
    if (has_zero != (n % 2 == 1)) ++zero_mode_bad;
    residual = std::max(residual, s.residual);
    const VolumeSpectrum r = spectrum(build_matrix(regge_conjugate(q)));
    for (std::size_t k = 0; k < n; ++k) regge = std::max(regge, std::fabs(s.eigenvalues[k] - r.eigenvalues[k]));
  }
  const bool ok = pairing < 1e-10 && residual < 1e-10 && regge < 1e-10 && zero_mode_bad == 0;
  return {ok, std::to_string(quads.size()) + " quadrilaterals; pairing " + sci(pairing) + ", residual " +
                  sci(residual) + ", Regge " + sci(regge) + ", zero-mode violations " + std::to_string(zero_mode_bad)};
}

Outcome oracle_spectrum() {
  const auto quads = canonical_quadrilaterals(6);
  double worst = 0;
  for (const auto& q : quads) {
    const auto o = oracle::commutator_eigenvalues(q);
    const auto s = spectrum(build_matrix(q));
    // The commutator over -4i carries four times the Heron normalization.
    for (std::size_t k = 0; k < o.size(); ++k) worst = std::max(worst, std::fabs(o[k] / 4 - s.eigenvalues[k]));
  }
  const auto half = spectrum(build_matrix(Quadrilateral::from_twice(1, 1, 1, 1)));
  const double target = std::sqrt(3.0) / 16;
  const double half_dev = std::max(std::fabs(half.eigenvalues[0] - target), std::fabs(half.eigenvalues[1] + target));
  return {worst < 1e-10 && half_dev < 1e-15, std::to_string(quads.size()) + " quadrilaterals, max deviation " +
                                                 sci(worst) + "; (1/2)^4 -> +-" + sci(half.eigenvalues[0])};
}

Outcome algebra_closure() {
  const auto quads = canonical_quadrilaterals(8);
  double rel = 0, swap = 0;
  int deficient = 0;
  for (const auto& q : quads) {
    const GeneratorTriple g = realize(q);
    const StructureConstants c = fit_structure_constants(g);
    const StructureConstants d = fit_structure_constants(duality_map(g));
    if (c.rank_deficient) ++deficient;
    if (c.scale > 0) rel = std::max(rel, c.residual / c.scale);
    const double pairs[][2] = {{c.A1, d.A2}, {c.A2, d.A1}, {c.C1, d.C2}, {c.C2, d.C1},
                               {c.D, d.D},   {c.G1, d.G2}, {c.G2, d.G1}};
    for (const auto& p : pairs) swap = std::max(swap, std::fabs(p[0] - p[1]) / std::max(1.0, std::fabs(p[0])));
  }
  return {rel < 1e-8 && swap < 1e-8, std::to_string(quads.size()) + " quadrilaterals (" + std::to_string(deficient) +
                                         " rank-deficient); residual/scale " + sci(rel) + ", duality swap " + sci(swap)};
}

Outcome duality_and_triangular() {
  const auto quads = canonical_quadrilaterals(8);
  double duality = 0, triangular = 0;
  int bad = 0;
  for (const auto& q : quads)
    for (Representation rep : {Representation::sym, Representation::antisym}) {
      for (FamilyPair pair : {FamilyPair::II, FamilyPair::III}) {
        const auto r = check_duality_II_III(pair, q, rep);
        duality = std::max({duality, r.orthogonality_deviation / r.dimension, r.completeness_deviation / r.dimension});
        if (!r.passed) ++bad;
      }
      const auto t = check_triangular(q, rep);
      triangular = std::max(triangular, t.deviation);
      if (t.deviation >= 1e-11) ++bad;
    }
  return {bad == 0, std::to_string(quads.size()) + " quadrilaterals x 2 representations; duality/dim " + sci(duality) +
                        ", triangular " + sci(triangular)};
}

Outcome racah_identity() {
  std::mt19937 rng(500);
  double worst = 0;
  for (const auto& a : random_admissible(rng, 500, 10)) {
    const RacahForm f = racah_from_6j(a);
    if (!f.admissible) return {false, "dictionary rejected " + a.str()};
    worst = std::max(worst, std::fabs(f.value - wigner_6j(a).to_double()));
  }
  double ortho = 0;
  bool unit = true;
  std::uniform_real_distribution<double> u(-0.9, 3.0);
  for (int i = 0; i < 30; ++i) {
    const int N = 1 + i % 9;
    const double p1 = u(rng), p2 = u(rng), p3 = u(rng);
    const HypergeomParams fams[] = {HypergeomParams::hahn(p1, p2, N), HypergeomParams::dual_hahn(p1, p2, N),
                                    HypergeomParams::racah(-N - 1, p2, p3, p1, N)};
    for (const auto& p : fams) {
      ortho = std::max(ortho, orthogonality_defect(p));
      for (int x = 0; x <= N; ++x) unit = unit && eval_poly(p, 0, x) == 1.0;
    }
  }
  return {worst < 1e-12 && ortho < 1e-10 && unit, "500 symbols, max |R - 6j| " + sci(worst) +
                                                      "; orthogonality defect " + sci(ortho) +
                                                      (unit ? "; p_0 == 1" : "; p_0 != 1")};
}

Outcome limits() {
  const std::vector<int> scales{1, 2, 4, 8};
  const GeneralizedSymbol base{HalfInt::from_twice(2), HalfInt::from_twice(3), HalfInt::from_twice(5),
                               HalfInt::from_twice(4)};
  const ConvergenceReport reps[] = {limit_scan_IIA(base, scales), limit_scan_IIIB(base, scales),
                                    threej_limit_of_6j(SixJArgs::from_twice({2, 2, 2, 4, 4, 4}), scales)};
  bool ok = true;
  std::string detail;
  for (const auto& r : reps) {
    ok = ok && r.converged(0.75) && r.target_residual < 1e-12;
    detail += r.kind + " ratio " + sci(r.final_ratio) + (r.monotone ? " monotone" : " NOT monotone") +
              " target " + sci(r.target_residual) + "; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome cli_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "symcoupling-acceptance-cache";
  std::filesystem::remove_all(dir);
  const std::vector<std::vector<std::string>> commands{
      {"sixj", "1", "1", "1", "1", "1", "1"},
      {"threej", "1", "1", "0", "1", "-1", "0"},
      {"alpha", "1", "3/2", "5/2", "2"},
      {"spectrum", "1/2", "1/2", "1/2", "1/2", "--vectors"},
      {"spectrum", "3/2", "2", "3", "5/2", "--rep", "antisym", "--vectors"},
      {"overlap", "1", "3/2", "5/2", "2"},
      {"regge", "1", "3/2", "3/2", "2"},
      {"check", "families", "--max-2j", "4", "--jobs", "4"},
      {"check", "algebra", "--max-2j", "4", "--jobs", "4"},
      {"check", "triangular", "--max-2j", "4"},
      {"check", "limits"},
      {"plotdata", "eigenfunctions", "1/2", "1/2", "1/2", "1/2"},
      {"plotdata", "alpha-profile", "1", "3/2", "5/2", "2"},
      {"plotdata", "convergence", "IIA"},
  };
  int runs = 0, bad = 0;
  for (const auto& cmd : commands)
    for (const char* fmt : {"json", "csv"}) {
      std::vector<std::string> args{"--format", fmt, "--cache-dir", dir.string()};
      args.insert(args.end(), cmd.begin(), cmd.end());
      std::ostringstream a, b, e;
      const int ca = cli::run(args, a, e), cb = cli::run(args, b, e);
      ++runs;
      if (ca != 0 || cb != 0 || a.str() != b.str()) ++bad;
    }

  SpectrumCache cache(dir, cli::tool_version());
  const Quadrilateral q = Quadrilateral::from_twice(3, 4, 6, 5);
  const VolumeSpectrum direct = spectrum(build_matrix(canonicalize(q).quad, Representation::antisym));
  cache.store(direct);
  const auto loaded = cache.load(canonicalize(q).quad, Representation::antisym);
  const bool round_trip = loaded && loaded->eigenvalues.size() == direct.eigenvalues.size() &&
                          std::memcmp(loaded->eigenvalues.data(), direct.eigenvalues.data(),
                                      direct.eigenvalues.size() * sizeof(double)) == 0 &&
                          loaded->psi == direct.psi && loaded->real_vectors == direct.real_vectors;
  std::filesystem::remove_all(dir);
  return {bad == 0 && round_trip, std::to_string(runs) + " command/format pairs run twice, " + std::to_string(bad) +
                                      " differences; cache round trip " + (round_trip ? "bit-exact" : "LOSSY")};
}

}  // namespace

int main() {
  criterion(1, "6j exactness vs Clebsch-Gordan contraction oracle (2j <= 8)", sixj_exactness);
  criterion(2, "classical and Regge symmetry orbits", symmetry);
  criterion(3, "family-I orthogonality in exact arithmetic (2j <= 8)", family_I);
  criterion(4, "volume spectrum properties (2j <= 10)", spectrum_properties);
  criterion(5, "spectrum vs dense commutator oracle (2j <= 6)", oracle_spectrum);
  criterion(6, "quadratic-algebra closure and duality (2j <= 8)", algebra_closure);
  criterion(7, "families II-III duality and triangular relation (2j <= 8)", duality_and_triangular);
  criterion(8, "Racah identity and polynomial orthogonality", racah_identity);
  criterion(9, "limit scans at scales 1,2,4,8", limits);
  criterion(10, "CLI determinism and cache round trip", cli_determinism);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
