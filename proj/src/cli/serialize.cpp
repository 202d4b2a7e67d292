#include "symcoupling/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "symcoupling/errors.hpp"

namespace symcoupling {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string format_shortest(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v == 0.0 ? 0.0 : v);
  return std::string(buf, end);
}

namespace {

void write_value(std::ostream& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(it.key()).dump() << ": ";
        write_value(out, it.value(), depth + 1);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool scalars = true;
      for (const auto& e : j)
        if (e.is_structured()) scalars = false;
      if (scalars) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          write_value(out, j[i], depth + 1);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write_value(out, j[i], depth + 1);
      }
      out << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out << (std::isfinite(v) ? format_double(v) : "null");
      return;
    }
    default: out << j.dump(); return;
  }
}

Json lattice_json(const SpinLattice& l) { return Json{{"lo", l.lo.str()}, {"hi", l.hi.str()}, {"size", l.size()}}; }

}  // namespace

void write_json(std::ostream& out, const Json& j) {
  write_value(out, j, 0);
  out << "\n";
}

std::string dump_json(const Json& j) {
  std::ostringstream s;
  write_json(s, j);
  return s.str();
}

Json to_json(const HalfInt& h) { return h.str(); }

Json to_json(const Quadrilateral& q) {
  return Json{{"labels", {q.a.str(), q.b.str(), q.c.str(), q.d.str()}},
              {"twice", {q.a.twice(), q.b.twice(), q.c.twice(), q.d.twice()}}};
}

Json to_json(const ExactRadical& r) {
  return Json{{"exact", r.str()}, {"simplified", r.simplified_str()}, {"value", r.to_double()}};
}

Json to_json(const VolumeSpectrum& s, const std::string& tool_version) {
  const Eigen::Index n = s.psi.rows();
  Json real = Json::array(), imag = Json::array(), vectors = Json::array();
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index k = 0; k < n; ++k) {
      real.push_back(s.psi(p, k).real());
      imag.push_back(s.psi(p, k).imag());
      vectors.push_back(s.real_vectors(p, k));
    }
  return Json{{"schema", kSpectrumSchema},
              {"tool_version", tool_version},
              {"quadrilateral", to_json(s.quad)},
              {"representation", std::string(to_string(s.rep))},
              {"lattice", lattice_json(s.lattice)},
              {"alpha", s.alpha},
              {"eigenvalues", s.eigenvalues},
              {"eigenvectors", {{"rows", n}, {"cols", n}, {"layout", "row-major, rows ell, cols k"},
                                {"real", real}, {"imag", imag}, {"real_form", vectors}}},
              {"residual", s.residual}};
}

VolumeSpectrum spectrum_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", "") != kSpectrumSchema) throw DomainError("not a spectrum record");
  VolumeSpectrum s;
  const auto t = j.at("quadrilateral").at("twice").get<std::vector<int>>();
  if (t.size() != 4) throw DomainError("spectrum record: bad quadrilateral");
  s.quad = Quadrilateral::from_twice(t[0], t[1], t[2], t[3]);
  s.rep = parse_representation(j.at("representation").get<std::string>());
  s.lattice = s.quad.ell_lattice();
  s.alpha = j.at("alpha").get<std::vector<double>>();
  s.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  const auto& ev = j.at("eigenvectors");
  const int n = ev.at("rows").get<int>();
  if (n != s.lattice.size() || static_cast<int>(s.eigenvalues.size()) != n)
    throw DomainError("spectrum record: dimension mismatch");
  const auto re = ev.at("real").get<std::vector<double>>();
  const auto im = ev.at("imag").get<std::vector<double>>();
  const auto rf = ev.at("real_form").get<std::vector<double>>();
  s.psi.resize(n, n);
  s.real_vectors.resize(n, n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k) {
      const std::size_t i = static_cast<std::size_t>(p * n + k);
      s.psi(p, k) = {re.at(i), im.at(i)};
      s.real_vectors(p, k) = rf.at(i);
    }
  s.residual = j.at("residual").get<double>();
  return s;
}

Json to_json(const StructureConstants& c) {
  Json j{{"A1", c.A1}, {"A2", c.A2}, {"C1", c.C1}, {"C2", c.C2}, {"D", c.D}, {"G1", c.G1}, {"G2", c.G2},
         {"R", 0.0},   {"residual", c.residual}, {"scale", c.scale}, {"rank", c.rank},
         {"rank_deficient", c.rank_deficient}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const ExactDualityReport& r) {
  return Json{{"quadrilateral", to_json(r.quad)},
              {"passed", r.passed},
              {"entries_checked", r.entries_checked},
              {"failures", r.failures}};
}

Json to_json(const DualityReport& r) {
  return Json{{"quadrilateral", to_json(r.quad)},
              {"pair", r.pair == FamilyPair::II ? "II" : "III"},
              {"representation", std::string(to_string(r.rep))},
              {"dimension", r.dimension},
              {"orthogonality_deviation", r.orthogonality_deviation},
              {"completeness_sign", r.completeness_sign},
              {"completeness_deviation", r.completeness_deviation},
              {"conjugation_required", r.conjugation_required},
              {"tolerance", r.tolerance},
              {"passed", r.passed}};
}

Json to_json(const TriangularReport& r) {
  return Json{{"quadrilateral", to_json(r.quad)},
              {"representation", std::string(to_string(r.rep))},
              {"sign", r.sign},
              {"deviation", r.deviation},
              {"passed", r.passed}};
}

Json to_json(const RecurrenceReport& r) {
  return Json{{"quadrilateral", to_json(r.quad)},
              {"representation", std::string(to_string(r.rep))},
              {"eigen_residual", r.eigen_residual},
              {"dual_residual", r.dual_residual},
              {"dual_orthogonality", r.dual_orthogonality}};
}

Json to_json(const ConvergenceReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json e{{"scale", p.scale}, {"J", p.J}, {"skipped", p.skipped}};
    if (p.skipped)
      e["note"] = p.note;
    else
      e["error"] = p.error;
    pts.push_back(e);
  }
  std::vector<int> scales;
  for (const auto& p : r.points) scales.push_back(p.scale);
  return Json{{"kind", r.kind},
              {"base", r.base},
              {"scales", scales},
              {"points", pts},
              {"decay_exponent", r.decay_exponent},
              {"final_ratio", r.final_ratio},
              {"monotone", r.monotone},
              {"converged", r.converged()},
              {"target_residual", r.target_residual},
              {"normalization", r.normalization}};
}

}  // namespace symcoupling
