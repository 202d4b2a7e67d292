#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "symcoupling/kernels.hpp"
#include "symcoupling/tridiag.hpp"

using namespace symcoupling;

namespace {

std::vector<const kernels::KernelTable*> simd_tables() {
  std::vector<const kernels::KernelTable*> t;
  if (const auto* k = kernels::avx2_kernels()) t.push_back(k);
  if (const auto* k = kernels::neon_kernels()) t.push_back(k);
  return t;
}

struct Problem {
  std::vector<double> diag, off, offsq;
};

Problem random_problem(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Problem p;
  for (std::size_t i = 0; i < n; ++i) p.diag.push_back(u(rng) * (rng() % 3 == 0 ? 0.0 : 1.0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    p.off.push_back(u(rng));
    p.offsq.push_back(p.off.back() * p.off.back());
  }
  return p;
}

}  // namespace

TEST_CASE("scalar Sturm counts are correct on a known spectrum") {
  // diag 0, off 1: eigenvalues 2 cos(k pi / (n+1)).
  const std::vector<double> diag(4, 0.0), offsq(3, 1.0);
  const std::vector<double> shifts{-2.0, -1.0, 0.0, 1.0, 2.0};
  std::vector<int> counts(shifts.size());
  kernels::scalar_kernels().sturm_counts(diag, offsq, 1e-300, shifts, counts);
  CHECK(counts == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("SIMD kernels are bitwise identical to the scalar reference") {
  const auto tables = simd_tables();
  MESSAGE("active kernel table: " << kernels::active().name << ", SIMD variants tested: " << tables.size());
  std::mt19937_64 rng(2024);
  for (const auto* simd : tables) {
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 17u}) {
      const Problem p = random_problem(rng, n);
      for (std::size_t ns : {1u, 3u, 4u, 7u, 16u}) {
        std::vector<double> shifts(ns);
        for (auto& s : shifts) s = std::uniform_real_distribution<double>(-3, 3)(rng);
        if (ns > 2) shifts[1] = p.diag[0];  // exact zero pivot path
        std::vector<int> a(ns), b(ns);
        kernels::scalar_kernels().sturm_counts(p.diag, p.offsq, 1e-300, shifts, a);
        simd->sturm_counts(p.diag, p.offsq, 1e-300, shifts, b);
        CHECK(a == b);

        std::vector<double> lower(n), upper(n), vec(n * ns), ra(n * ns), rb(n * ns);
        for (std::size_t i = 1; i < n; ++i) lower[i] = p.off[i - 1];
        for (std::size_t i = 0; i + 1 < n; ++i) upper[i] = p.off[i];
        for (auto& v : vec) v = std::uniform_real_distribution<double>(-1, 1)(rng);
        kernels::scalar_kernels().tridiag_residual(p.diag, lower, upper, shifts, vec, ra);
        simd->tridiag_residual(p.diag, lower, upper, shifts, vec, rb);
        CHECK(std::memcmp(ra.data(), rb.data(), ra.size() * sizeof(double)) == 0);
      }
      const auto ea = tridiagonal_eigen(p.diag, p.off, 1e-12, kernels::scalar_kernels());
      const auto eb = tridiagonal_eigen(p.diag, p.off, 1e-12, *simd);
      CHECK(ea.values == eb.values);
      CHECK(ea.vectors == eb.vectors);
    }
  }
}

TEST_CASE("tridiagonal eigensolver") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 6u, 30u}) {
    const Problem p = random_problem(rng, n);
    const auto e = tridiagonal_eigen(p.diag, p.off, 1e-12);
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) T(static_cast<long>(i), static_cast<long>(i)) = p.diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
      T(static_cast<long>(i), static_cast<long>(i + 1)) = T(static_cast<long>(i + 1), static_cast<long>(i)) = p.off[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(T);
    for (std::size_t k = 0; k < n; ++k) CHECK(e.values[k] == doctest::Approx(ref.eigenvalues()[static_cast<long>(k)]).epsilon(1e-12));
    CHECK((e.vectors.transpose() * e.vectors - Eigen::MatrixXd::Identity(static_cast<long>(n), static_cast<long>(n))).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(e.residual < 1e-13);
    CHECK(tridiagonal_residual(p.diag, p.off, e.values, e.vectors) == e.residual);
  }
  // Degenerate clusters: decoupled identical blocks.
  const std::vector<double> diag{1, 1, 1, 1}, off{0.5, 0.0, 0.5};
  const auto e = tridiagonal_eigen(diag, off, 1e-12);
  CHECK((e.vectors.transpose() * e.vectors - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}
