#include "symcoupling/askey.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "symcoupling/errors.hpp"
#include "symcoupling/families.hpp"
#include "symcoupling/volume.hpp"

namespace symcoupling {

namespace {

using Real = long double;

// Terminating pFq at unit argument; stops at the first vanishing numerator.
Real hypergeometric_unit(const std::vector<double>& num, const std::vector<double>& den, int max_terms) {
  Real sum = 1.0L, comp = 0.0L, term = 1.0L;
  for (int k = 0; k < max_terms; ++k) {
    Real ratio = 1.0L / static_cast<Real>(k + 1);
    bool terminated = false;
    for (double a : num) {
      const Real f = static_cast<Real>(a) + k;
      if (f == 0.0L) terminated = true;
      ratio *= f;
    }
    if (terminated) break;
    for (double b : den) {
      const Real f = static_cast<Real>(b) + k;
      if (f == 0.0L) throw DomainError("hypergeometric sum hits a vanishing denominator parameter");
      ratio /= f;
    }
    term *= ratio;
    // Neumaier compensated summation.
    const Real t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

Real pochhammer(Real a, int k) {
  Real p = 1.0L;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

Real factorial_real(int n) { return pochhammer(1.0L, n); }

void require_lattice(const HypergeomParams& p, int n, int x) {
  if (n < 0 || n > p.N) throw DomainError("eval_poly: degree out of range 0.." + std::to_string(p.N));
  if (x < 0 || x > p.N) throw DomainError("eval_poly: lattice point out of range 0.." + std::to_string(p.N));
}

}  // namespace

HypergeomParams HypergeomParams::racah(double alpha, double beta, double gamma, double delta, int N) {
  if (N < 0) throw DomainError("Racah: N must be non-negative");
  const double target = -static_cast<double>(N);
  const auto hits = [target](double v) { return std::fabs(v - target) < 1e-12; };
  if (!hits(alpha + 1) && !hits(beta + delta + 1) && !hits(gamma + 1))
    throw DomainError("Racah: one of alpha+1, beta+delta+1, gamma+1 must equal -N");
  return {PolyFamily::racah, alpha, beta, gamma, delta, N};
}

HypergeomParams HypergeomParams::hahn(double alpha, double beta, int N) {
  if (N < 0) throw DomainError("Hahn: N must be non-negative");
  if (!(alpha > -1.0 && beta > -1.0)) throw DomainError("Hahn: need alpha, beta > -1");
  return {PolyFamily::hahn, alpha, beta, 0.0, 0.0, N};
}

HypergeomParams HypergeomParams::dual_hahn(double gamma, double delta, int N) {
  if (N < 0) throw DomainError("dual Hahn: N must be non-negative");
  if (!(gamma > -1.0 && delta > -1.0)) throw DomainError("dual Hahn: need gamma, delta > -1");
  return {PolyFamily::dual_hahn, 0.0, 0.0, gamma, delta, N};
}

double HypergeomParams::lattice(int x) const {
  if (family == PolyFamily::hahn) return x;
  return static_cast<double>(x) * (x + gamma + delta + 1.0);
}

std::string HypergeomParams::str() const {
  std::ostringstream s;
  switch (family) {
    case PolyFamily::racah:
      s << "Racah(alpha=" << alpha << ", beta=" << beta << ", gamma=" << gamma << ", delta=" << delta << ", N=" << N
        << ")";
      break;
    case PolyFamily::hahn: s << "Hahn(alpha=" << alpha << ", beta=" << beta << ", N=" << N << ")"; break;
    case PolyFamily::dual_hahn: s << "DualHahn(gamma=" << gamma << ", delta=" << delta << ", N=" << N << ")"; break;
  }
  return s.str();
}

double eval_poly(const HypergeomParams& p, int n, int x) {
  require_lattice(p, n, x);
  const double nn = n, xx = x, N = p.N;
  switch (p.family) {
    case PolyFamily::racah:
      return static_cast<double>(hypergeometric_unit({-nn, nn + p.alpha + p.beta + 1, -xx, xx + p.gamma + p.delta + 1},
                                                     {p.alpha + 1, p.beta + p.delta + 1, p.gamma + 1}, p.N + 1));
    case PolyFamily::hahn:
      return static_cast<double>(
          hypergeometric_unit({-nn, nn + p.alpha + p.beta + 1, -xx}, {p.alpha + 1, -N}, p.N + 1));
    case PolyFamily::dual_hahn:
      return static_cast<double>(
          hypergeometric_unit({-nn, -xx, xx + p.gamma + p.delta + 1}, {p.gamma + 1, -N}, p.N + 1));
  }
  return 0.0;
}

double weight(const HypergeomParams& p, int x) {
  if (x < 0 || x > p.N) throw DomainError("weight: lattice point out of range");
  const Real a = p.alpha, b = p.beta, g = p.gamma, d = p.delta;
  switch (p.family) {
    case PolyFamily::racah: {
      const Real num = pochhammer(a + 1, x) * pochhammer(b + d + 1, x) * pochhammer(g + 1, x) *
                       pochhammer(g + d + 1, x) * (g + d + 1 + 2 * x);
      const Real den = pochhammer(-a + g + d + 1, x) * pochhammer(-b + g + 1, x) * pochhammer(d + 1, x) *
                       factorial_real(x) * (g + d + 1);
      return static_cast<double>(num / den);
    }
    case PolyFamily::hahn:
      return static_cast<double>(pochhammer(a + 1, x) / factorial_real(x) * pochhammer(b + 1, p.N - x) /
                                 factorial_real(p.N - x));
    case PolyFamily::dual_hahn: {
      const Real sign = (x % 2 == 0) ? 1.0L : -1.0L;
      const Real num = (2 * x + g + d + 1) * pochhammer(g + 1, x) * pochhammer(-static_cast<Real>(p.N), x) *
                       factorial_real(p.N);
      const Real den = sign * pochhammer(x + g + d + 1, p.N + 1) * pochhammer(d + 1, x) * factorial_real(x);
      return static_cast<double>(num / den);
    }
  }
  return 0.0;
}

Recurrence recurrence(const HypergeomParams& p, int n) {
  const double a = p.alpha, b = p.beta, g = p.gamma, d = p.delta, N = p.N, k = n;
  Recurrence r;
  switch (p.family) {
    case PolyFamily::racah:
      r.A = (k + a + 1) * (k + b + d + 1) * (k + g + 1) * (k + a + b + 1) / ((2 * k + a + b + 1) * (2 * k + a + b + 2));
      r.C = n == 0 ? 0.0 : k * (k + a + b - g) * (k + a - d) * (k + b) / ((2 * k + a + b) * (2 * k + a + b + 1));
      break;
    case PolyFamily::hahn:
      r.A = (k + a + b + 1) * (k + a + 1) * (N - k) / ((2 * k + a + b + 1) * (2 * k + a + b + 2));
      r.C = n == 0 ? 0.0 : k * (k + a + b + N + 1) * (k + b) / ((2 * k + a + b) * (2 * k + a + b + 1));
      break;
    case PolyFamily::dual_hahn:
      r.A = (k + g + 1) * (k - N);
      r.C = k * (k - d - N - 1);
      break;
  }
  return r;
}

double orthogonality_defect(const HypergeomParams& p) {
  const int N = p.N;
  std::vector<std::vector<double>> v(static_cast<std::size_t>(N + 1), std::vector<double>(static_cast<std::size_t>(N + 1)));
  std::vector<double> w(static_cast<std::size_t>(N + 1));
  for (int x = 0; x <= N; ++x) {
    w[static_cast<std::size_t>(x)] = weight(p, x);
    for (int n = 0; n <= N; ++n) v[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)] = eval_poly(p, n, x);
  }
  double worst = 0.0;
  for (int n = 0; n <= N; ++n)
    for (int m = n + 1; m <= N; ++m) {
      Real sum = 0.0L, mag = 0.0L;
      for (int x = 0; x <= N; ++x) {
        const Real t = static_cast<Real>(w[static_cast<std::size_t>(x)]) * v[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)] *
                       v[static_cast<std::size_t>(m)][static_cast<std::size_t>(x)];
        sum += t;
        mag += std::fabs(t);
      }
      if (mag > 0.0L) worst = std::max(worst, static_cast<double>(std::fabs(sum) / mag));
    }
  return worst;
}

double recurrence_defect(const HypergeomParams& p) {
  double worst = 0.0;
  for (int x = 0; x <= p.N; ++x) {
    double t = p.lattice(x);
    if (p.family == PolyFamily::hahn) t = -t;
    for (int n = 0; n < p.N; ++n) {
      const Recurrence r = recurrence(p, n);
      const double pn = eval_poly(p, n, x);
      const double next = eval_poly(p, n + 1, x);
      const double prev = n > 0 ? eval_poly(p, n - 1, x) : 0.0;
      const double lhs = t * pn;
      const double rhs = r.A * next - (r.A + r.C) * pn + r.C * prev;
      const double mag = std::fabs(t * pn) + std::fabs(r.A * next) + std::fabs((r.A + r.C) * pn) + std::fabs(r.C * prev);
      if (mag > 0.0) worst = std::max(worst, std::fabs(lhs - rhs) / mag);
    }
  }
  return worst;
}

RacahForm racah_from_6j(const SixJArgs& args) {
  RacahForm f;
  if (!args.admissible()) return f;
  f.admissible = true;
  const auto& j = args.j;
  // Triad sums alpha_i and column-pair sums beta_j of the Racah formula, all integers.
  const auto tri = args.triads();
  std::array<int, 4> al{};
  for (int i = 0; i < 4; ++i) al[static_cast<std::size_t>(i)] = (tri[static_cast<std::size_t>(i)][0] + tri[static_cast<std::size_t>(i)][1] + tri[static_cast<std::size_t>(i)][2]).as_int();
  std::array<int, 3> be = {(j[0] + j[1] + j[3] + j[4]).as_int(), (j[1] + j[2] + j[4] + j[5]).as_int(),
                           (j[2] + j[0] + j[5] + j[3]).as_int()};
  std::sort(al.begin(), al.end(), std::greater<>());
  std::sort(be.begin(), be.end());
  const int t1 = be[0];

  // 6j = prod(Delta) * T(t1) * 4F3(alpha_i - t1; -t1-1, beta'-t1+1, beta''-t1+1; 1).
  BigRational delta_sq = 1;
  for (const auto& t : tri) {
    const int s = (t[0] + t[1] + t[2]).as_int();
    delta_sq *= BigRational(factorial((t[0] + t[1] - t[2]).as_int()) * factorial((t[0] - t[1] + t[2]).as_int()) *
                                factorial((-t[0] + t[1] + t[2]).as_int()),
                            factorial(s + 1));
  }
  delta_sq.canonicalize();
  BigInt den = 1;
  for (int a : al) den *= factorial(t1 - a);
  for (int b : be) den *= factorial(b - t1);
  BigRational T(factorial(t1 + 1), den);
  T.canonicalize();
  if (t1 % 2 != 0) T = -T;
  f.proportionality = ExactRadical::rational_times_sqrt(T, delta_sq);

  // -n = alpha1 - t1, n+alpha+beta+1 = alpha4 - t1, -x = alpha2 - t1, x+gamma+delta+1 = alpha3 - t1,
  // alpha+1 = -(t1+1), gamma+1 = beta' - t1 + 1, beta+delta+1 = beta'' - t1 + 1.
  f.n = t1 - al[0];
  f.x = t1 - al[1];
  const int N = t1 + 1;
  const double alpha = -N - 1;
  const double beta = al[3] + al[0] - t1 + 1;
  const double gamma = be[1] - t1;
  const double delta = al[2] + al[1] - t1 - be[1] - 1;
  f.params = HypergeomParams::racah(alpha, beta, gamma, delta, N);
  f.polynomial = eval_poly(f.params, f.n, f.x);
  f.value = f.proportionality.to_double() * f.polynomial;
  return f;
}

std::string GeneralizedSymbol::str() const {
  return "{" + j1.str() + " " + j2.str() + " . / " + J3.str() + " " + J4.str() + " .}";
}

GeneralizedSymbol scaled(const GeneralizedSymbol& base, int scale) {
  const int B = std::max(1, (std::max(base.J3.twice(), base.J4.twice()) + 1) / 2);
  const HalfInt shift = HalfInt::from_int((scale - 1) * B);
  return {base.j1, base.j2, base.J3 + shift, base.J4 + shift};
}

namespace {

void finish(ConvergenceReport& r) {
  std::vector<const ScalePoint*> kept;
  for (const auto& p : r.points)
    if (!p.skipped) kept.push_back(&p);
  r.monotone = kept.size() >= 2;
  for (std::size_t i = 1; i + 1 < kept.size(); ++i)
    if (kept[i + 1]->error > kept[i]->error * (1.0 + 1e-12) + 1e-300) r.monotone = false;
  if (kept.size() >= 2) {
    const double prev = kept[kept.size() - 2]->error;
    r.final_ratio = prev > 0.0 ? kept.back()->error / prev : 0.0;
  } else {
    r.final_ratio = std::numeric_limits<double>::quiet_NaN();
  }
  // Least-squares slope of log(error) against log(scale).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto* p : kept) {
    if (p->error <= 0.0) continue;
    const double lx = std::log(static_cast<double>(p->scale)), ly = std::log(p->error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  const double denom = m * sxx - sx * sx;
  r.decay_exponent = (m >= 2 && denom != 0.0) ? -(m * sxy - sx * sy) / denom : 0.0;
}

// Largest component deviation between two eigenvector tables, per column up to sign.
double table_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const double plus = (a.col(k) - b.col(k)).cwiseAbs().maxCoeff();
    const double minus = (a.col(k) + b.col(k)).cwiseAbs().maxCoeff();
    worst = std::max(worst, std::min(plus, minus));
  }
  return worst;
}

// Eigenvectors (descending eigenvalue, first component positive) of the real
// tridiagonal with couplings +off; also returns the recursion residual relative to max |off|.
Eigen::MatrixXd real_tridiagonal_vectors(const SpinLattice& lattice, const std::vector<double>& off,
                                         double* residual) {
  VolumeMatrix m;
  m.lattice = lattice;
  m.alpha = off;
  m.rep = Representation::sym;
  const VolumeSpectrum s = spectrum(m);
  if (residual) *residual = s.residual / std::max(m.max_alpha(), 1e-300);
  return s.real_vectors;
}

bool skip_point(ScalePoint& pt, const Quadrilateral& q, const SpinLattice& lattice, const SpinLattice& limit) {
  if (!q.is_valid()) {
    pt.skipped = true;
    pt.note = "scaled quadrilateral " + q.str() + " has no admissible coupling";
  } else if (lattice.lo != limit.lo || lattice.hi != limit.hi) {
    pt.skipped = true;
    pt.note = "lattice [" + lattice.lo.str() + ", " + lattice.hi.str() + "] not yet the limiting lattice [" +
              limit.lo.str() + ", " + limit.hi.str() + "]";
  } else if (lattice.size() < 2) {
    pt.skipped = true;
    pt.note = "single-point lattice";
  }
  return pt.skipped;
}

}  // namespace

ConvergenceReport limit_scan_IIA(const GeneralizedSymbol& base, const std::vector<int>& scales) {
  ConvergenceReport r;
  r.kind = "IIA";
  r.base = base.str();
  r.normalization = "alpha / (J + 1/2), J = (J3 + J4)/2; eigenvectors are scale-free";
  const HalfInt m = base.J3 - base.J4;
  const SpinLattice limit{std::max(abs(base.j1 - base.j2), abs(m)), base.j1 + base.j2};

  std::vector<double> target_off;
  for (int p = 1; p < limit.size(); ++p) {
    const HalfInt ell = limit.at(p);
    const HalfInt half = HalfInt::from_twice(1);
    const double F = heron_area(ell, base.j1 + half, base.j2 + half).to_double();
    const double l = ell.value(), mm = m.value();
    target_off.push_back(F * std::sqrt(l * l - mm * mm) / (2.0 * std::sqrt(4.0 * l * l - 1.0)));
  }
  Eigen::MatrixXd target;
  const bool have_target = limit.size() >= 2 && same_parity(base.j1 + base.j2, base.J3 + base.J4);
  if (have_target) target = real_tridiagonal_vectors(limit, target_off, &r.target_residual);

  for (int s : scales) {
    ScalePoint pt;
    pt.scale = s;
    const GeneralizedSymbol g = scaled(base, s);
    pt.J = 0.5 * (g.J3.value() + g.J4.value());
    const Quadrilateral q = g.quad();
    if (!have_target) {
      pt.skipped = true;
      pt.note = "limiting lattice has fewer than two points";
    } else if (!skip_point(pt, q, q.ell_lattice(), limit)) {
      const VolumeSpectrum sp = spectrum(build_matrix(q, Representation::sym));
      pt.error = table_deviation(sp.real_vectors, target);
    }
    r.points.push_back(pt);
  }
  finish(r);
  return r;
}

ConvergenceReport limit_scan_IIIB(const GeneralizedSymbol& base, const std::vector<int>& scales) {
  ConvergenceReport r;
  r.kind = "IIIB";
  r.base = base.str();
  r.normalization = "alpha~ / (J + 1/2), J = (J3 + J4)/2; eigenvectors in x = ell~ - J4 are scale-free";
  const HalfInt m = base.J3 - base.J4;
  // x1 = ell~ - J4 in [-j1, j1], x2 = x1 - m in [-j2, j2].
  const HalfInt xlo = std::max(-base.j1, m - base.j2), xhi = std::min(base.j1, m + base.j2);
  const SpinLattice xlimit{xlo, xhi};

  std::vector<double> target_off;
  for (int p = 1; p < xlimit.size(); ++p) {
    const double x1 = xlimit.at(p).value(), x2 = x1 - m.value();
    const double j1 = base.j1.value(), j2 = base.j2.value();
    target_off.push_back(0.125 * std::sqrt((j1 + 1 - x1) * (j1 + x1) * (j2 + 1 - x2) * (j2 + x2)));
  }
  Eigen::MatrixXd target;
  const bool have_target = xlimit.size() >= 2 && same_parity(base.j1 + base.j2, base.J3 + base.J4);
  if (have_target) target = real_tridiagonal_vectors(xlimit, target_off, &r.target_residual);

  for (int s : scales) {
    ScalePoint pt;
    pt.scale = s;
    const GeneralizedSymbol g = scaled(base, s);
    pt.J = 0.5 * (g.J3.value() + g.J4.value());
    const Quadrilateral q = g.quad();
    if (!have_target) {
      pt.skipped = true;
      pt.note = "limiting lattice has fewer than two points";
      r.points.push_back(pt);
      continue;
    }
    SpinLattice shifted = q.is_valid() ? q.ell_tilde_lattice() : SpinLattice{HalfInt::from_twice(1), {}};
    SpinLattice xl{shifted.lo - g.J4, shifted.hi - g.J4};
    if (!skip_point(pt, q, xl, xlimit)) {
      // <ell~|k> in the antisymmetric representation. In the ell~ basis the operator
      // has the conjugate pattern, so components carry i^p; (-i)^p removes it.
      const OverlapTable t = family_table(Family::IIIA, q, Representation::antisym);
      const Eigen::Index n = t.values.rows();
      Eigen::MatrixXd real(n, n);
      for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::VectorXcd col(n);
        for (Eigen::Index p = 0; p < n; ++p) col(p) = basis_phase(Representation::antisym, static_cast<int>(p)) * t.values(p, k);
        Eigen::Index big = 0;
        col.cwiseAbs().maxCoeff(&big);
        const std::complex<double> phase = col(big) / std::abs(col(big));
        col /= phase;
        real.col(k) = col.real();
        if (col.imag().cwiseAbs().maxCoeff() > 1e-9)
          throw StructuralError("limit_scan_IIIB: ell~-basis eigenvector is not real after phase removal");
        if (real(0, k) < 0.0) real.col(k) = -real.col(k);
      }
      pt.error = table_deviation(real, target);
    }
    r.points.push_back(pt);
  }
  finish(r);
  return r;
}

ConvergenceReport threej_limit_of_6j(const SixJArgs& args, const std::vector<int>& scales) {
  ConvergenceReport r;
  r.kind = "threej";
  r.base = args.str();
  r.normalization = "sqrt(2R+1) {a b c / d e f}, R = (d+e+f)/3, against (-1)^(d+e+f) (a b c / f-e, d-f, e-d)";
  const HalfInt a = args.top(0), b = args.top(1), c = args.top(2);
  const HalfInt d = args.bottom(0), e = args.bottom(1), f = args.bottom(2);
  const int B = std::max(1, (std::max({d.twice(), e.twice(), f.twice()}) + 1) / 2);
  const HalfInt m1 = f - e, m2 = d - f, m3 = e - d;
  const bool projections_ok = abs(m1) <= a && abs(m2) <= b && abs(m3) <= c && same_parity(a, m1) &&
                              same_parity(b, m2) && same_parity(c, m3);
  const double threej = projections_ok ? wigner_3j(a, b, c, m1, m2, m3).to_double() : 0.0;

  for (int s : scales) {
    ScalePoint pt;
    pt.scale = s;
    const HalfInt shift = HalfInt::from_int((s - 1) * B);
    const SixJArgs big{{a, b, c, d + shift, e + shift, f + shift}};
    const double R = (big.bottom(0).value() + big.bottom(1).value() + big.bottom(2).value()) / 3.0;
    pt.J = R;
    const double lhs = std::sqrt(2.0 * R + 1.0) * wigner_6j(big).to_double();
    const HalfInt phase_arg = big.bottom(0) + big.bottom(1) + big.bottom(2);
    const double rhs = phase_arg.is_integer() ? parity_sign(phase_arg) * threej : 0.0;
    pt.error = std::fabs(lhs - rhs);
    r.points.push_back(pt);
  }
  finish(r);
  return r;
}

}  // namespace symcoupling
