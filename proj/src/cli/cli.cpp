#include "symcoupling/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "symcoupling/algebra.hpp"
#include "symcoupling/angmom.hpp"
#include "symcoupling/askey.hpp"
#include "symcoupling/cache.hpp"
#include "symcoupling/errors.hpp"
#include "symcoupling/families.hpp"
#include "symcoupling/serialize.hpp"
#include "symcoupling/volume.hpp"

#ifndef SYMCOUPLING_VERSION
#define SYMCOUPLING_VERSION "0.0.0"
#endif

namespace symcoupling::cli {

namespace {

/// Malformed command-line input that CLI11 itself cannot see (bad spin tokens).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string format = "pretty";
  double tol = 1e-12;
  std::string rep = "sym";
  int max_2j = 6;
  std::string cache_dir;
  bool no_cache = false;
  int jobs = 1;
  std::vector<int> scales{1, 2, 4, 8};
  std::vector<std::string> base;
  bool vectors = false;
  std::vector<std::string> tokens;
  std::string suite;
  std::string kind;
};

HalfInt parse_spin(const std::string& token) {
  try {
    return HalfInt::parse(token);
  } catch (const DomainError&) {
    throw UsageError("cannot parse '" + token + "' as a half-integer (use e.g. 3/2 or 1.5)");
  }
}

std::vector<HalfInt> parse_spins(const std::vector<std::string>& tokens) {
  std::vector<HalfInt> out;
  for (const auto& t : tokens) out.push_back(parse_spin(t));
  return out;
}

Quadrilateral parse_quad(const std::vector<std::string>& tokens, std::size_t offset = 0) {
  if (tokens.size() < offset + 4) throw UsageError("expected four spins a b c d");
  const auto s = parse_spins({tokens.begin() + static_cast<long>(offset), tokens.begin() + static_cast<long>(offset + 4)});
  for (const auto& h : s)
    if (!h.nonnegative()) throw DomainError("spin labels must be non-negative");
  return {s[0], s[1], s[2], s[3]};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string human(double v) { return format_shortest(v); }

// Evaluates fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, int jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

class Commands {
 public:
  Commands(const RunConfig& cfg, std::ostream& out)
      : cfg_(cfg), out_(out), cache_(cache_dir(cfg), tool_version()) {}

  int sixj() {
    if (cfg_.tokens.size() != 6) throw UsageError("sixj expects six spins");
    const auto s = parse_spins(cfg_.tokens);
    const SixJArgs args{{s[0], s[1], s[2], s[3], s[4], s[5]}};
    const ExactRadical v = wigner_6j(args);
    std::string note;
    for (const auto& t : args.triads())
      if (!triangle_ok(t[0], t[1], t[2]))
        note = "triad violated: (" + t[0].str() + " " + t[1].str() + " " + t[2].str() + ")";
    return emit_value("sixj", args.str(), v, note);
  }

  int threej() {
    if (cfg_.tokens.size() != 6) throw UsageError("threej expects j1 j2 j3 m1 m2 m3");
    const auto s = parse_spins(cfg_.tokens);
    const ExactRadical v = wigner_3j(s[0], s[1], s[2], s[3], s[4], s[5]);
    std::string note;
    if (!triangle_ok(s[0], s[1], s[2])) note = "triad violated";
    else if ((s[3] + s[4] + s[5]).twice() != 0) note = "m1 + m2 + m3 != 0";
    const std::string sym = "(" + s[0].str() + " " + s[1].str() + " " + s[2].str() + " / " + s[3].str() + " " +
                            s[4].str() + " " + s[5].str() + ")";
    return emit_value("threej", sym, v, note);
  }

  int alpha_cmd() {
    const Quadrilateral q = parse_quad(cfg_.tokens);
    q.require_valid();
    std::vector<HalfInt> ells;
    if (cfg_.tokens.size() == 5) {
      ells.push_back(parse_spin(cfg_.tokens[4]));
    } else if (cfg_.tokens.size() == 4) {
      const SpinLattice l = q.ell_lattice();
      for (int p = 1; p < l.size(); ++p) ells.push_back(l.at(p));
    } else {
      throw UsageError("alpha expects a b c d [ell]");
    }
    Json rows = Json::array();
    for (const HalfInt& ell : ells) {
      Json r{{"ell", ell.str()}};
      r.update(to_json(alpha(ell, q)));
      rows.push_back(r);
    }
    if (cfg_.format == "json") {
      write_json(out_, Json{{"command", "alpha"}, {"quadrilateral", to_json(q)}, {"alpha", rows}});
    } else if (cfg_.format == "csv") {
      out_ << "ell,exact,simplified,value\n";
      for (const auto& r : rows)
        out_ << r["ell"].get<std::string>() << "," << csv_escape(r["exact"].get<std::string>()) << ","
             << csv_escape(r["simplified"].get<std::string>()) << "," << format_double(r["value"].get<double>())
             << "\n";
    } else {
      out_ << "alpha for " << q.str() << "\n";
      for (const auto& r : rows)
        out_ << "  ell=" << r["ell"].get<std::string>() << "  " << r["simplified"].get<std::string>() << "  ("
             << human(r["value"].get<double>()) << ")\n";
    }
    return kOk;
  }

  int spectrum_cmd() {
    if (cfg_.tokens.size() != 4) throw UsageError("spectrum expects a b c d");
    const Quadrilateral q = parse_quad(cfg_.tokens);
    const CanonicalForm cf = canonicalize(q);
    const Representation rep = parse_representation(cfg_.rep);
    const VolumeSpectrum s = cfg_.no_cache ? spectrum(build_matrix(cf.quad, rep), cfg_.tol)
                                           : cache_.get_or_compute(cf.quad, rep, cfg_.tol);
    if (cfg_.format == "json") {
      Json j{{"command", "spectrum"},
             {"input", to_json(q)},
             {"canonical", to_json(cf.quad)},
             {"transform", {{"permutation", cf.permutation}, {"regge", cf.regge}}},
             {"spectrum", to_json(s, tool_version())}};
      if (!cfg_.vectors) j["spectrum"].erase("eigenvectors");
      write_json(out_, j);
    } else if (cfg_.format == "csv") {
      out_ << "k,lambda";
      if (cfg_.vectors)
        for (const HalfInt& l : s.lattice.values()) out_ << ",re_psi_" << l.str() << ",im_psi_" << l.str();
      out_ << "\n";
      for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        out_ << k << "," << format_double(s.eigenvalues[k]);
        if (cfg_.vectors)
          for (Eigen::Index p = 0; p < s.psi.rows(); ++p)
            out_ << "," << format_double(s.psi(p, static_cast<Eigen::Index>(k)).real()) << ","
                 << format_double(s.psi(p, static_cast<Eigen::Index>(k)).imag());
        out_ << "\n";
      }
    } else {
      out_ << "volume spectrum of " << cf.quad.str();
      if (!cf.quad.same_labels(q)) out_ << " (canonical form of " << q.str() << ")";
      out_ << ", " << to_string(rep) << " representation, dimension " << s.eigenvalues.size() << "\n";
      for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        out_ << "  lambda_" << k << " = " << human(s.eigenvalues[k]);
        if (cfg_.vectors) {
          out_ << "  psi =";
          for (Eigen::Index p = 0; p < s.psi.rows(); ++p) {
            const auto z = s.psi(p, static_cast<Eigen::Index>(k));
            out_ << " " << human(z.real());
            if (z.imag() != 0.0) out_ << (z.imag() < 0 ? "-" : "+") << human(std::fabs(z.imag())) << "i";
          }
        }
        out_ << "\n";
      }
      out_ << "  residual " << human(s.residual) << "\n";
    }
    return kOk;
  }

  int overlap() {
    const Quadrilateral q = parse_quad(cfg_.tokens);
    q.require_valid();
    std::vector<std::pair<HalfInt, HalfInt>> entries;
    if (cfg_.tokens.size() == 6) {
      entries.emplace_back(parse_spin(cfg_.tokens[4]), parse_spin(cfg_.tokens[5]));
    } else if (cfg_.tokens.size() == 4) {
      for (const HalfInt& t : q.ell_tilde_lattice().values())
        for (const HalfInt& l : q.ell_lattice().values()) entries.emplace_back(l, t);
    } else {
      throw UsageError("overlap expects a b c d [ell ell~]");
    }
    Json rows = Json::array();
    for (const auto& [l, t] : entries) {
      Json r{{"ell", l.str()}, {"ell_tilde", t.str()}};
      r.update(to_json(overlap_coefficient(l, t, q)));
      rows.push_back(r);
    }
    if (cfg_.format == "json") {
      write_json(out_, Json{{"command", "overlap"}, {"quadrilateral", to_json(q)}, {"overlaps", rows}});
    } else if (cfg_.format == "csv") {
      out_ << "ell,ell_tilde,exact,simplified,value\n";
      for (const auto& r : rows)
        out_ << r["ell"].get<std::string>() << "," << r["ell_tilde"].get<std::string>() << ","
             << csv_escape(r["exact"].get<std::string>()) << "," << csv_escape(r["simplified"].get<std::string>())
             << "," << format_double(r["value"].get<double>()) << "\n";
    } else {
      out_ << "<ell~|ell> for " << q.str() << "\n";
      for (const auto& r : rows)
        out_ << "  <" << r["ell_tilde"].get<std::string>() << "|" << r["ell"].get<std::string>()
             << "> = " << r["simplified"].get<std::string>() << "  (" << human(r["value"].get<double>()) << ")\n";
    }
    return kOk;
  }

  int regge() {
    if (cfg_.tokens.size() != 4) throw UsageError("regge expects a b c d");
    const Quadrilateral q = parse_quad(cfg_.tokens);
    const Quadrilateral r = regge_conjugate(q);
    const bool valid = q.is_valid();
    Json j{{"command", "regge"},
           {"input", to_json(q)},
           {"conjugate", to_json(r)},
           {"self_conjugate", r.same_labels(q)},
           {"valid", valid}};
    std::optional<CanonicalForm> cf;
    if (valid) {
      cf = canonicalize(q);
      j["canonical"] = to_json(cf->quad);
      j["transform"] = {{"permutation", cf->permutation}, {"regge", cf->regge}};
    }
    if (cfg_.format == "json") {
      write_json(out_, j);
    } else if (cfg_.format == "csv") {
      out_ << "input,conjugate,canonical\n"
           << csv_escape(q.str()) << "," << csv_escape(r.str()) << "," << csv_escape(cf ? cf->quad.str() : "")
           << "\n";
    } else {
      out_ << q.str() << " -> " << r.str() << (r.same_labels(q) ? "  (self-conjugate)" : "") << "\n";
      if (cf) out_ << "canonical form " << cf->quad.str() << (cf->regge ? " via Regge conjugate" : "") << "\n";
    }
    return kOk;
  }

  int check() {
    if (cfg_.max_2j < 1) throw UsageError("--max-2j must be at least 1");
    Json report;
    if (cfg_.suite == "families") report = check_families();
    else if (cfg_.suite == "algebra") report = check_algebra();
    else if (cfg_.suite == "triangular") report = check_triangular_suite();
    else report = check_limits();
    const bool passed = report["passed"].get<bool>();
    if (cfg_.format == "json") {
      write_json(out_, report);
    } else if (cfg_.format == "csv") {
      out_ << "case,passed\n";
      for (const auto& c : report["cases"]) out_ << csv_escape(c["case"].get<std::string>()) << "," << c["passed"].get<bool>() << "\n";
    } else {
      int failed = 0;
      for (const auto& c : report["cases"])
        if (!c["passed"].get<bool>()) {
          ++failed;
          out_ << "  FAIL " << c["case"].get<std::string>() << "\n";
        }
      out_ << "check " << cfg_.suite << ": " << report["cases"].size() << " cases, "
           << (passed ? "all passed" : std::to_string(failed) + " failed") << "\n";
      for (auto it = report["summary"].begin(); it != report["summary"].end(); ++it) {
        out_ << "  " << it.key() << ": ";
        if (it.value().is_number_float()) out_ << human(it.value().get<double>());
        else out_ << it.value().dump();
        out_ << "\n";
      }
    }
    return passed ? kOk : kCheckFailed;
  }

  int plotdata() {
    if (cfg_.kind == "eigenfunctions") {
      const Quadrilateral q = parse_quad(cfg_.tokens);
      const Representation rep = parse_representation(cfg_.rep);
      const VolumeSpectrum s = spectrum(build_matrix(q, rep), cfg_.tol);
      const bool complex = rep == Representation::antisym;
      out_ << "# eigenfunctions quadrilateral=" << q.str() << " rep=" << to_string(rep) << " lambda=";
      for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) out_ << (k ? ";" : "") << format_double(s.eigenvalues[k]);
      out_ << "\nell";
      for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        if (complex) out_ << ",re_psi_k" << k << ",im_psi_k" << k;
        else out_ << ",psi_k" << k;
      }
      out_ << "\n";
      for (int p = 0; p < s.lattice.size(); ++p) {
        out_ << s.lattice.at(p).value();
        for (Eigen::Index k = 0; k < s.psi.cols(); ++k) {
          out_ << "," << format_double(s.psi(p, k).real());
          if (complex) out_ << "," << format_double(s.psi(p, k).imag());
        }
        out_ << "\n";
      }
    } else if (cfg_.kind == "alpha-profile") {
      const Quadrilateral q = parse_quad(cfg_.tokens);
      const VolumeMatrix m = build_matrix(q);
      out_ << "# alpha-profile quadrilateral=" << q.str() << " (alpha couples ell to ell-1)\nell,alpha\n";
      for (int p = 1; p < m.dimension(); ++p)
        out_ << m.lattice.at(p).value() << "," << format_double(m.alpha[static_cast<std::size_t>(p - 1)]) << "\n";
    } else {
      const std::string which = cfg_.tokens.empty() ? "IIA" : cfg_.tokens[0];
      const ConvergenceReport r = run_scan(which, cfg_.base);
      out_ << "# convergence kind=" << r.kind << " base=" << r.base << " decay_exponent=" << format_double(r.decay_exponent)
           << "\n";
      for (const auto& p : r.points)
        if (p.skipped) out_ << "# skipped scale " << p.scale << ": " << p.note << "\n";
      out_ << "scale,J,error\n";
      for (const auto& p : r.points)
        if (!p.skipped) out_ << p.scale << "," << format_double(p.J) << "," << format_double(p.error) << "\n";
    }
    return kOk;
  }

 private:
  static std::filesystem::path cache_dir(const RunConfig& cfg) {
    if (cfg.no_cache) return {};
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    return default_cache_dir();
  }

  int emit_value(const std::string& command, const std::string& symbol, const ExactRadical& v,
                 const std::string& note) {
    if (cfg_.format == "json") {
      Json j{{"command", command}, {"symbol", symbol}};
      j.update(to_json(v));
      if (!note.empty()) j["note"] = note;
      write_json(out_, j);
    } else if (cfg_.format == "csv") {
      out_ << "symbol,exact,simplified,value,note\n"
           << csv_escape(symbol) << "," << csv_escape(v.str()) << "," << csv_escape(v.simplified_str()) << ","
           << format_double(v.to_double()) << "," << csv_escape(note) << "\n";
    } else {
      out_ << symbol << " = " << v.simplified_str() << " = " << v.str() << "  (" << human(v.to_double()) << ")";
      if (!note.empty()) out_ << "  [" << note << "]";
      out_ << "\n";
    }
    return kOk;
  }

  Json sweep(const std::string& suite, const std::function<Json(const Quadrilateral&)>& one, Json summary) {
    const auto quads = canonical_quadrilaterals(cfg_.max_2j);
    const auto cases = parallel_map<Json>(quads.size(), cfg_.jobs, [&](std::size_t i) { return one(quads[i]); });
    bool passed = true;
    for (const auto& c : cases) passed = passed && c["passed"].get<bool>();
    return Json{{"suite", suite},
                {"max_2j", cfg_.max_2j},
                {"tool_version", tool_version()},
                {"passed", passed},
                {"summary", std::move(summary)},
                {"cases", cases}};
  }

  Json check_families() {
    Json report = sweep("families", [](const Quadrilateral& q) {
      Json c{{"case", q.str()}, {"quadrilateral", to_json(q)}};
      const ExactDualityReport d1 = check_duality_I(q);
      bool ok = d1.passed;
      c["duality_I"] = to_json(d1);
      Json duality = Json::array(), recs = Json::array();
      for (Representation rep : {Representation::sym, Representation::antisym}) {
        for (FamilyPair pair : {FamilyPair::II, FamilyPair::III}) {
          const DualityReport r = check_duality_II_III(pair, q, rep);
          ok = ok && r.passed;
          duality.push_back(to_json(r));
        }
        const RecurrenceReport rr = check_recurrences(spectrum(build_matrix(q, rep)));
        ok = ok && rr.eigen_residual < 1e-10 && rr.dual_residual < 1e-9 && rr.dual_orthogonality < 1e-9;
        recs.push_back(to_json(rr));
      }
      c["duality_II_III"] = duality;
      c["recurrences"] = recs;
      c["passed"] = ok;
      return c;
    }, Json::object());
    // Completeness signs per representation across the sweep.
    std::map<std::string, std::set<int>> signs;
    for (const auto& c : report["cases"])
      for (const auto& d : c["duality_II_III"])
        signs[d["representation"].get<std::string>() + "/" + d["pair"].get<std::string>()].insert(
            d["completeness_sign"].get<int>());
    for (const auto& [key, set] : signs) report["summary"]["completeness_signs " + key] = std::vector<int>(set.begin(), set.end());
    return report;
  }

  Json check_algebra() {
    Json report = sweep("algebra", [](const Quadrilateral& q) {
      Json c{{"case", q.str()}, {"quadrilateral", to_json(q)}};
      const GeneratorTriple g = realize(q);
      const StructureConstants sc = fit_structure_constants(g);
      const StructureConstants sd = fit_structure_constants(duality_map(g));
      const double swap = std::max({std::fabs(sc.A1 - sd.A2), std::fabs(sc.A2 - sd.A1), std::fabs(sc.C1 - sd.C2),
                                    std::fabs(sc.C2 - sd.C1), std::fabs(sc.D - sd.D), std::fabs(sc.G1 - sd.G2),
                                    std::fabs(sc.G2 - sd.G1)});
      bool ok = sc.residual < 1e-8 * std::max(sc.scale, 1e-300) || sc.scale == 0.0;
      ok = ok && swap < 1e-8;
      c["constants"] = to_json(sc);
      c["dual_constants"] = to_json(sd);
      c["swap_deviation"] = swap;
      try {
        const auto k2 = tridiagonal_data(g, TridiagonalView::K2_in_K1_basis);
        const auto k1 = tridiagonal_data(g, TridiagonalView::K1_in_K2_basis);
        const auto k3 = tridiagonal_data(g, TridiagonalView::K3_in_K1_basis);
        c["leakage"] = std::max({k1.leakage, k2.leakage, k3.leakage});
        c["k3_pattern_deviation"] = k3.pattern_deviation;
        ok = ok && k3.pattern_deviation < 1e-12;
      } catch (const StructuralError& e) {
        c["structural_error"] = e.what();
        ok = false;
      }
      c["passed"] = ok;
      return c;
    }, Json::object());
    double worst = 0.0;
    for (const auto& c : report["cases"]) {
      const double s = c["constants"]["scale"].get<double>();
      if (s > 0.0) worst = std::max(worst, c["constants"]["residual"].get<double>() / s);
    }
    report["summary"]["max_relative_residual"] = worst;
    return report;
  }

  Json check_triangular_suite() {
    Json report = sweep("triangular", [](const Quadrilateral& q) {
      Json c{{"case", q.str()}, {"quadrilateral", to_json(q)}};
      Json reps = Json::array();
      bool ok = true;
      for (Representation rep : {Representation::sym, Representation::antisym}) {
        const TriangularReport r = check_triangular(q, rep);
        ok = ok && r.passed;
        reps.push_back(to_json(r));
      }
      c["reports"] = reps;
      c["passed"] = ok;
      return c;
    }, Json::object());
    double worst = 0.0;
    std::set<int> signs;
    for (const auto& c : report["cases"])
      for (const auto& r : c["reports"]) {
        worst = std::max(worst, r["deviation"].get<double>());
        signs.insert(r["sign"].get<int>());
      }
    report["summary"]["max_deviation"] = worst;
    report["summary"]["signs"] = std::vector<int>(signs.begin(), signs.end());
    return report;
  }

  ConvergenceReport run_scan(const std::string& which, const std::vector<std::string>& base_tokens) {
    if (which == "IIA" || which == "IIIB") {
      GeneralizedSymbol g{HalfInt::from_int(1), HalfInt::from_twice(3), HalfInt::from_twice(5), HalfInt::from_int(2)};
      if (!base_tokens.empty()) {
        const Quadrilateral q = parse_quad(base_tokens);
        g = {q.a, q.b, q.c, q.d};
      }
      return which == "IIA" ? limit_scan_IIA(g, cfg_.scales) : limit_scan_IIIB(g, cfg_.scales);
    }
    if (which == "threej") {
      SixJArgs a = SixJArgs::from_twice({2, 2, 2, 4, 4, 4});
      if (!base_tokens.empty()) {
        if (base_tokens.size() != 6) throw UsageError("threej base expects six spins");
        const auto s = parse_spins(base_tokens);
        a = SixJArgs{{s[0], s[1], s[2], s[3], s[4], s[5]}};
      }
      return threej_limit_of_6j(a, cfg_.scales);
    }
    throw UsageError("unknown limit kind '" + which + "' (expected IIA, IIIB or threej)");
  }

  Json check_limits() {
    struct Scan {
      std::string kind;
      std::vector<std::string> base;
      bool degenerate;
    };
    std::vector<Scan> scans;
    if (!cfg_.base.empty()) {
      const std::string kind = cfg_.tokens.empty() ? "IIA" : cfg_.tokens[0];
      scans.push_back({kind, cfg_.base, false});
    } else {
      scans = {{"IIA", {}, false}, {"IIIB", {}, false}, {"threej", {}, false},
               // j1 = 0 pins the lattice to a single point: every scale is skipped.
               {"IIA", {"0", "1", "1", "1"}, true}, {"IIIB", {"0", "1", "1", "1"}, true}};
    }
    Json cases = Json::array();
    bool passed = true;
    for (const auto& s : scans) {
      const ConvergenceReport r = run_scan(s.kind, s.base);
      bool all_skipped = std::all_of(r.points.begin(), r.points.end(), [](const ScalePoint& p) { return p.skipped; });
      const bool ok = all_skipped ? true : (r.converged() && r.target_residual < 1e-12);
      Json c = to_json(r);
      c["case"] = s.kind + " " + r.base;
      c["all_skipped"] = all_skipped;
      c["passed"] = ok;
      passed = passed && ok;
      cases.push_back(c);
    }
    return Json{{"suite", "limits"},
                {"tool_version", tool_version()},
                {"passed", passed},
                {"summary", Json{{"ratio_bound", 0.75}}},
                {"cases", cases}};
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  SpectrumCache cache_;
};

}  // namespace

std::string tool_version() { return SYMCOUPLING_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact SU(2) recoupling coefficients, volume-operator spectra and their polynomial families",
               "symcoup"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version());
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--tol", cfg.tol, "Relative solver tolerance")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Spectrum cache directory (default $SYMCOUPLING_CACHE_DIR)");
  app.add_flag("--no-cache", cfg.no_cache, "Neither read nor write the spectrum cache");
  app.add_option("--jobs", cfg.jobs, "Worker threads for check sweeps")->check(CLI::Range(1, 256));

  auto spins = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("spins", cfg.tokens, what)->required();
  };
  auto rep_option = [&](CLI::App* sub) {
    sub->add_option("--rep", cfg.rep, "Representation of the volume operator")
        ->check(CLI::IsMember({"sym", "antisym"}));
  };

  auto* sixj = app.add_subcommand("sixj", "Wigner 6j symbol {j1 j2 j3 / j4 j5 j6}");
  spins(sixj, "j1 j2 j3 j4 j5 j6");
  auto* threej = app.add_subcommand("threej", "Wigner 3j symbol (j1 j2 j3 / m1 m2 m3)");
  spins(threej, "j1 j2 j3 m1 m2 m3");
  auto* alpha_sub = app.add_subcommand("alpha", "Heron matrix elements alpha_ell of the volume operator");
  spins(alpha_sub, "a b c d [ell]");
  auto* spectrum_sub = app.add_subcommand("spectrum", "Volume-operator eigenvalues (and eigenvectors)");
  spins(spectrum_sub, "a b c d");
  rep_option(spectrum_sub);
  spectrum_sub->add_flag("--vectors", cfg.vectors, "Include eigenvectors");
  auto* ov = app.add_subcommand("overlap", "Recoupling coefficients <ell~|ell>");
  spins(ov, "a b c d [ell ell~]");
  auto* rg = app.add_subcommand("regge", "Regge conjugate and canonical form of a quadrilateral");
  spins(rg, "a b c d");
  auto* chk = app.add_subcommand("check", "Verification sweeps over canonical quadrilaterals");
  chk->add_option("suite", cfg.suite)->required()->check(CLI::IsMember({"families", "algebra", "triangular", "limits"}));
  chk->add_option("kind", cfg.tokens, "Limit kind for --base (IIA, IIIB, threej)");
  chk->add_option("--max-2j", cfg.max_2j, "Largest twice-spin in the sweep");
  chk->add_option("--scales", cfg.scales, "Scales for limit scans")->delimiter(',');
  chk->add_option("--base", cfg.base, "Base symbol for limit scans")->delimiter(',');
  rep_option(chk);
  auto* plot = app.add_subcommand("plotdata", "CSV data for plots");
  plot->add_option("kind", cfg.kind)->required()->check(CLI::IsMember({"eigenfunctions", "alpha-profile", "convergence"}));
  plot->add_option("args", cfg.tokens, "a b c d, or the limit kind for convergence");
  plot->add_option("--scales", cfg.scales, "Scales for convergence data")->delimiter(',');
  plot->add_option("--base", cfg.base, "Base symbol for convergence data")->delimiter(',');
  rep_option(plot);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Commands cmd(cfg, out);
    if (*sixj) return cmd.sixj();
    if (*threej) return cmd.threej();
    if (*alpha_sub) return cmd.alpha_cmd();
    if (*spectrum_sub) return cmd.spectrum_cmd();
    if (*ov) return cmd.overlap();
    if (*rg) return cmd.regge();
    if (*chk) return cmd.check();
    if (*plot) return cmd.plotdata();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << "\n";
    return kNumeric;
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace symcoupling::cli
