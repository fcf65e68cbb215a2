#ifndef WIGNER_VERIFY_HPP
#define WIGNER_VERIFY_HPP

#include <array>
#include <iomanip>
#include <ostream>

#include "wigner/catalog.hpp"
#include "wigner/wigner.hpp"

namespace wigner {

struct ReportRow {
  std::string group;
  std::string identity;
  std::string tag;  // paper equation family the identity transcribes
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<ReportRow> rows;

  void add(std::string group, std::string identity, std::string tag,
           double residual, double tolerance) {
    rows.push_back({std::move(group), std::move(identity), std::move(tag),
                    residual, tolerance, residual <= tolerance});
  }
  void add_flag(std::string group, std::string identity, std::string tag,
                bool ok) {
    rows.push_back(
        {std::move(group), std::move(identity), std::move(tag),
         ok ? 0.0 : 1.0, 0.0, ok});
  }
  bool all_passed() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& r : rows)
      if (!r.pass) ++n;
    return n;
  }
};

inline void print_report(const VerificationReport& rep, std::ostream& out) {
  size_t wg = 5, wi = 8;
  for (const auto& r : rep.rows) {
    wg = std::max(wg, r.group.size());
    wi = std::max(wi, r.identity.size());
  }
  out << std::left << std::setw(static_cast<int>(wg) + 2) << "group"
      << std::setw(static_cast<int>(wi) + 2) << "identity" << std::setw(10)
      << "tag" << std::setw(12) << "residual" << std::setw(10) << "tol"
      << "status\n";
  for (const auto& r : rep.rows) {
    out << std::left << std::setw(static_cast<int>(wg) + 2) << r.group
        << std::setw(static_cast<int>(wi) + 2) << r.identity << std::setw(10)
        << r.tag << std::setw(12) << std::scientific << std::setprecision(2)
        << r.residual << std::setw(10) << r.tolerance
        << (r.pass ? "pass" : "FAIL") << '\n';
  }
  out << std::defaultfloat;
  out << rep.rows.size() << " identities, " << rep.failures() << " failures\n";
}

/// Fixed generic 9-component state used as the regression witness for the
/// C9 vs C3xC3 distinctness check.
inline StateVector witness_state_9() {
  StateVector psi(9);
  for (int k = 0; k < 9; ++k)
    psi(k) = cplx(std::cos(0.7 * (k + 1)), std::sin(1.3 * (k + 1) * (k + 1)));
  psi.normalize();
  return psi;
}

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 100;       // random states per group for the property suites
  int full_covariance_states = 3;  // states given the all-g' covariance sweep
  double tol_abelian = 1e-12;
  double tol_nonabelian = 1e-9;
};

namespace detail {

inline double hermiticity_residual(const WignerTensor& W) {
  double worst = 0.0;
  for (const auto& per_g : W.data)
    for (const auto& M : per_g)
      worst = std::max(worst, (M - M.adjoint()).cwiseAbs().maxCoeff());
  return worst;
}

// Eq 4.5 complex-conjugation symmetry of the redundant distribution.
inline double extended_hermiticity_residual(const ExtendedWignerTensor& w) {
  double worst = 0.0;
  for (int g = 0; g < w.order; ++g)
    for (size_t j = 0; j < w.data[g].size(); ++j) {
      const int d = w.dims[j];
      for (int m = 0; m < d; ++m)
        for (int np = 0; np < d; ++np)
          for (int mp = 0; mp < d; ++mp)
            for (int n = 0; n < d; ++n)
              worst = std::max(
                  worst,
                  std::abs(std::conj(w.at(g, static_cast<int>(j), m, np, mp,
                                          n)) -
                           w.at(g, static_cast<int>(j), mp, n, m, np)));
    }
  return worst;
}

}  // namespace detail

/// Runs every identity of the toolkit on one group and appends the rows.
inline void verify_group(const std::string& name, const GroupTable& G,
                         VerificationReport& rep, const SuiteOptions& opt) {
  const int N = G.order();
  const bool abelian = G.is_abelian();
  const double tol = abelian ? opt.tol_abelian : opt.tol_nonabelian;

  // ---- group core --------------------------------------------------------
  {
    auto classes = conjugacy_classes(G);
    int total = 0;
    bool divides = true;
    for (const auto& c : classes) {
      total += static_cast<int>(c.size());
      if (N % static_cast<int>(c.size()) != 0) divides = false;
    }
    rep.add_flag(name, "class equation", "group",
                 total == N && divides && classes[0] == std::vector<int>{0});
  }
  if (N % 2 == 1) {
    SqrtReport sq = verify_sqrt_properties(G);
    rep.add_flag(name, "sqrt uniqueness/bijection", "3.1-3.3",
                 sq.uniqueness);
    rep.add_flag(name, "sqrt identities", "3.2",
                 sq.inverse_rule && sq.commutes && sq.inverse_product &&
                     sq.conjugation);
    rep.add_flag(name, "change of variables", "3.4",
                 sq.change_of_var_left && sq.change_of_var_right);
  }

  // ---- representation engine --------------------------------------------
  IrrepSet S = compute_irreps(G);
  MomentumBasis B = momentum_basis(S);
  {
    IrrepResiduals ir = verify_irreps(S);
    rep.add(name, "irrep composition", "2.6a", ir.composition, tol);
    rep.add(name, "irrep unitarity", "2.6b", ir.unitarity, tol);
    rep.add(name, "irrep orthogonality", "2.6c", ir.orthogonality, tol);
    rep.add(name, "irrep completeness", "2.6d", ir.completeness, tol);
    rep.add_flag(name, "sum of squared dims", "2.6e", ir.dims_square_sum);
    if (abelian) {
      bool all_one = true;
      for (int j = 0; j < S.num_irreps(); ++j)
        if (S.dim(j) != 1) all_one = false;
      rep.add_flag(name, "abelian irreps 1-dim", "2.6", all_one);
    }
    Matrix gram = B.vectors.adjoint() * B.vectors;
    rep.add(name, "momentum basis orthonormal", "2.8",
            (gram - Matrix::Identity(N, N)).cwiseAbs().maxCoeff(), tol);
    rep.add(name, "reduced L/R actions", "2.9", verify_reduced_actions(S, B),
            tol);
  }
  {
    RegularActions A = regular_actions(G);
    double worst = 0.0;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        worst = std::max(worst, (A.L[a] * A.L[b] - A.L[G.mul(a, b)])
                                    .cwiseAbs()
                                    .maxCoeff());
        worst = std::max(worst, (A.R[a] * A.R[b] - A.R[G.mul(a, b)])
                                    .cwiseAbs()
                                    .maxCoeff());
        worst = std::max(
            worst, (A.L[a] * A.R[b] - A.R[b] * A.L[a]).cwiseAbs().maxCoeff());
      }
    rep.add(name, "regular actions", "2.3-2.4", worst, 0.0);
  }
  if (N % 2 == 0) return;  // Wigner layer requires odd order

  // ---- Wigner property suites -------------------------------------------
  double herm_I = 0, herm_II = 0, pos_marg = 0, mom_marg = 0, parseval = 0;
  double cov_I = 0, cov_II = 0, abelian_coincide = 0, conj_42 = 0;
  for (int t = 0; t < opt.trials; ++t) {
    StateVector psi = random_state(N, opt.seed * 1000003ULL + t);
    WignerTensor W = wigner_I(psi, S);
    WignerTensor Wp = wigner_II(psi, S);
    herm_I = std::max(herm_I, detail::hermiticity_residual(W));
    herm_II = std::max(herm_II, detail::hermiticity_residual(Wp));
    Vector mom = momentum_wavefunction(psi, B);
    parseval = std::max(parseval, std::abs(mom.squaredNorm() - 1.0));
    {
      auto marg = marginal_position(W, S);
      auto margp = marginal_position(Wp, S);
      for (int g = 0; g < N; ++g) {
        pos_marg = std::max(pos_marg, std::abs(marg[g] - std::norm(psi(g))));
        pos_marg =
            std::max(pos_marg, std::abs(margp[g] - std::norm(psi(g))));
      }
    }
    {
      auto mI = marginal_momentum(W, S);
      auto mII = marginal_momentum(Wp, S);
      for (int j = 0; j < S.num_irreps(); ++j) {
        const int d = S.dim(j);
        for (int m = 0; m < d; ++m)
          for (int mp = 0; mp < d; ++mp) {
            cplx wantI = 0.0, wantII = 0.0;
            for (int n = 0; n < d; ++n)
              wantI += std::conj(mom(B.index(j, m, n))) *
                       mom(B.index(j, mp, n));
            for (int n = 0; n < d; ++n)
              wantII += mom(B.index(j, n, m)) *
                        std::conj(mom(B.index(j, n, mp)));
            mom_marg = std::max(mom_marg, std::abs(mI[j](m, mp) - wantI));
            mom_marg = std::max(mom_marg, std::abs(mII[j](m, mp) - wantII));
          }
      }
    }
    if (abelian) abelian_coincide = std::max(abelian_coincide, W.diff_max(Wp));
    // Eq 4.2: W'(g; j) = D^j(g^-1) W(g; j) D^j(g)
    for (int g = 0; g < N; ++g)
      for (int j = 0; j < S.num_irreps(); ++j)
        conj_42 = std::max(
            conj_42, (Wp.at(g, j) -
                      S.D(j, G.inv(g)) * W.at(g, j) * S.D(j, g))
                         .cwiseAbs()
                         .maxCoeff());
    if (t < opt.full_covariance_states) {
      for (int gp = 0; gp < N; ++gp) {
        cov_I = std::max(cov_I,
                         covariance_check(psi, S, gp, Variant::I).max());
        cov_II = std::max(cov_II,
                          covariance_check(psi, S, gp, Variant::II).max());
      }
    } else {
      int gp = static_cast<int>(t % N);
      cov_I =
          std::max(cov_I, covariance_check(psi, S, gp, Variant::I).max());
      cov_II =
          std::max(cov_II, covariance_check(psi, S, gp, Variant::II).max());
    }
  }
  rep.add(name, "Wigner I hermiticity", "3.7a", herm_I, tol);
  rep.add(name, "Wigner II hermiticity", "3.10a", herm_II, tol);
  rep.add(name, "covariance I", "3.7b", cov_I, tol);
  rep.add(name, "covariance II", "3.10b", cov_II, tol);
  rep.add(name, "position marginal", "3.7c/3.10c", pos_marg, tol);
  rep.add(name, "momentum marginal", "3.7c/3.10c", mom_marg, tol);
  rep.add(name, "momentum Parseval", "2.11", parseval, opt.tol_abelian);
  rep.add(name, "W'-W conjugation", "4.2", conj_42, tol);
  if (abelian)
    rep.add(name, "abelian W = W'", "3.9", abelian_coincide, tol);

  {
    double trac = 0.0;
    for (int t = 0; t < opt.trials; ++t) {
      StateVector phi = random_state(N, opt.seed * 2000003ULL + t);
      StateVector psi = random_state(N, opt.seed * 3000017ULL + t);
      WignerTensor Wphi = wigner_I(phi, S), Wpsi = wigner_I(psi, S);
      double got = traciality(Wphi, Wpsi, S);
      trac = std::max(trac, std::abs(got - std::norm(phi.dot(psi))));
      WignerTensor Wphi2 = wigner_II(phi, S), Wpsi2 = wigner_II(psi, S);
      double got2 = traciality(Wphi2, Wpsi2, S);
      trac = std::max(trac, std::abs(got2 - std::norm(phi.dot(psi))));
    }
    rep.add(name, "traciality", "3.7d/3.10d", trac, tol);
  }

  // density-operator path: rank-one consistency and the maximally mixed case
  {
    StateVector psi = random_state(N, opt.seed * 5000011ULL);
    WignerTensor Wpure = wigner_I(psi, S);
    WignerTensor Wrho = wigner_I(pure_density(psi), S);
    rep.add(name, "pure vs rank-one density", "3.6", Wpure.diff_max(Wrho),
            opt.tol_abelian);
    WignerTensor Wmix =
        wigner_I(DensityOperator(Matrix::Identity(N, N) / N), S);
    double worst = 0.0;
    for (int g = 0; g < N; ++g)
      for (int j = 0; j < S.num_irreps(); ++j)
        worst = std::max(
            worst, (Wmix.at(g, j) -
                    Matrix::Identity(S.dim(j), S.dim(j)) / N)
                       .cwiseAbs()
                       .maxCoeff());
    rep.add(name, "maximally mixed density", "3.6", worst, opt.tol_abelian);
  }

  // ---- phase point operators --------------------------------------------
  {
    StateVector psi = random_state(N, opt.seed * 7000003ULL);
    WignerTensor W = wigner_I(psi, S);
    double expect = 0.0, trace = 0.0;
    for (int g = 0; g < N; ++g)
      for (int j = 0; j < S.num_irreps(); ++j) {
        const int d = S.dim(j);
        for (int m = 0; m < d; ++m)
          for (int mp = 0; mp < d; ++mp) {
            Matrix op = phase_point_operator(S, g, j, m, mp);
            expect = std::max(
                expect, std::abs((psi.adjoint() * op * psi)(0, 0) -
                                 W.at(g, j)(m, mp)));
            cplx want = (m == mp) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            trace = std::max(trace, std::abs(op.trace() - want));
            Matrix dag = phase_point_operator(S, g, j, mp, m);
            trace = std::max(trace,
                             (op.adjoint() - dag).cwiseAbs().maxCoeff());
          }
      }
    rep.add(name, "phase point expectation", "3.11", expect, tol);
    rep.add(name, "phase point adjoint/trace", "3.13a/3.13d", trace, tol);
    rep.add(name, "phase point sum rules", "3.13b/3.13c",
            phase_point_sums(S, B).max(), tol);
  }
  {
    // Eq 3.13e over all pairs, walking the N nonzeros of the left operator
    std::vector<Matrix> ops;
    std::vector<std::array<int, 3>> labels;  // (j, m, n) per flat index
    ops.reserve(static_cast<size_t>(N) * N);
    for (int g = 0; g < N; ++g)
      for (int j = 0; j < S.num_irreps(); ++j) {
        const int d = S.dim(j);
        for (int m = 0; m < d; ++m)
          for (int n = 0; n < d; ++n) {
            ops.push_back(phase_point_operator(S, g, j, m, n));
            labels.push_back({j, m, n});
          }
      }
    double worst = 0.0;
    for (int g = 0; g < N; ++g)
      for (int k = 0; k < N; ++k) {
        const Matrix& A = ops[static_cast<size_t>(g) * N + k];
        auto [j, m, n] = labels[static_cast<size_t>(g) * N + k];
        for (int g2 = 0; g2 < N; ++g2)
          for (int k2 = 0; k2 < N; ++k2) {
            const Matrix& Bop = ops[static_cast<size_t>(g2) * N + k2];
            auto [j2, m2, n2] = labels[static_cast<size_t>(g2) * N + k2];
            cplx tr = 0.0;
            for (int gp = 0; gp < N; ++gp) {
              int r = G.mul(gp, g), c = G.mul(G.inv(gp), g);
              tr += A(r, c) * std::conj(Bop(r, c));
            }
            cplx want = (g == g2 && j == j2 && m == m2 && n == n2)
                            ? cplx(static_cast<double>(N) / S.dim(j), 0.0)
                            : cplx(0.0, 0.0);
            worst = std::max(worst, std::abs(tr - want));
          }
      }
    rep.add(name, "phase point orthogonality", "3.13e", worst, tol);
  }
  {
    double dyad = 0.0;
    for (int g = 0; g < N; ++g)
      for (int gp = 0; gp < N; ++gp) {
        Matrix got = reconstruct_dyad(S, g, gp);
        Matrix want = Matrix::Zero(N, N);
        want(G.mul(gp, g), G.mul(G.inv(gp), g)) = 1.0;
        dyad = std::max(dyad, (got - want).cwiseAbs().maxCoeff());
      }
    rep.add(name, "dyad reconstruction", "3.12", dyad, tol);
    Matrix inv_op = phase_point_operator(S, 0, 0, 0, 0);
    double worst = 0.0;
    for (int g = 0; g < N; ++g) {
      Vector got = inv_op * position_eigenstate(N, g);
      worst = std::max(
          worst,
          (got - position_eigenstate(N, G.inv(g))).cwiseAbs().maxCoeff());
    }
    worst = std::max(worst, (inv_op * inv_op - Matrix::Identity(N, N))
                                .cwiseAbs()
                                .maxCoeff());
    rep.add(name, "inversion at the origin", "3.14", worst, 0.0);
  }

  // ---- extended distribution --------------------------------------------
  {
    double forms = 0, herm = 0, traces = 0, mom45 = 0, pos45 = 0, recon = 0;
    int ext_trials = std::min(opt.trials, 5);
    for (int t = 0; t < ext_trials; ++t) {
      StateVector psi = random_state(N, opt.seed * 11000027ULL + t);
      ExtendedWignerTensor w = extended_wigner(psi, S);
      forms = std::max(forms, w.diff_max(extended_wigner_alt(psi, S)));
      herm = std::max(herm, detail::extended_hermiticity_residual(w));
      WignerTensor W = wigner_I(psi, S);
      WignerTensor Wp = wigner_II(psi, S);
      traces = std::max(traces, extended_trace_to_I(w, S).diff_max(W));
      traces = std::max(traces, extended_trace_to_II(w, S).diff_max(Wp));
      Vector mom = momentum_wavefunction(psi, B);
      for (int j = 0; j < S.num_irreps(); ++j) {
        const int d = S.dim(j);
        for (int m = 0; m < d; ++m)
          for (int np = 0; np < d; ++np)
            for (int mp = 0; mp < d; ++mp)
              for (int n = 0; n < d; ++n) {
                cplx s = 0.0;
                for (int g = 0; g < N; ++g) s += w.at(g, j, m, np, mp, n);
                s *= static_cast<double>(d) / N;
                cplx want = mom(B.index(j, mp, n)) *
                            std::conj(mom(B.index(j, m, np)));
                mom45 = std::max(mom45, std::abs(s - want));
              }
      }
      for (int g = 0; g < N; ++g) {
        cplx s = 0.0;
        for (int j = 0; j < S.num_irreps(); ++j) {
          const int d = S.dim(j);
          for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n)
              s += static_cast<double>(d) * w.at(g, j, m, n, m, n);
        }
        pos45 = std::max(pos45,
                         std::abs(s / static_cast<double>(N) -
                                  cplx(std::norm(psi(g)), 0.0)));
      }
      recon = std::max(recon, reconstruct_extended(W, S).diff_max(w));
    }
    rep.add(name, "extended two forms", "4.3", forms, tol);
    rep.add(name, "extended conjugation", "4.5", herm, tol);
    rep.add(name, "extended partial traces", "4.4", traces, tol);
    rep.add(name, "extended momentum identity", "4.5", mom45, tol);
    rep.add(name, "extended position identity", "4.5", pos45, tol);
    rep.add(name, "extended reconstruction", "4.6", recon, tol);
  }
}

/// Relabel-aware Eq 3.18 check: the catalog cyclic groups already have
/// g^n at index n and irrep j with D^j(g^n) = exp(2 pi i j n / N), so the
/// fast path must agree entrywise with the general variant-I path.
inline double wigner_cyclic_match(const GroupTable& G, const IrrepSet& S,
                                  const StateVector& psi) {
  const int N = G.order();
  WignerTensor W = wigner_I(psi, S);
  double worst = 0.0;
  for (int n = 0; n < N; ++n)
    for (int j = 0; j < S.num_irreps(); ++j) {
      // identify the exponent of this irrep from D^j(g) at the generator
      cplx z = S.D(j, 1)(0, 0);
      int expnt = static_cast<int>(std::lround(
          std::arg(z) * N / (2.0 * std::numbers::pi)));
      expnt = ((expnt % N) + N) % N;
      cplx fast = wigner_cyclic_fast(psi, N, expnt, n);
      worst = std::max(worst, std::abs(fast - W.at(n, j)(0, 0)));
    }
  return worst;
}

/// Cross-group rows: even-order rejection, C15 vs C3xC5 isomorphism,
/// C9 vs C3xC3 distinctness with the frozen witness state.
inline void verify_global(VerificationReport& rep, const SuiteOptions& opt) {
  for (int n : {2, 4, 6}) {
    GroupTable G = build_group(GroupSpec::Cyclic(n));
    IrrepSet S = compute_irreps(G);
    StateVector psi = random_state(n, opt.seed);
    bool all_throw = true;
    auto expect_throw = [&](auto&& fn) {
      try {
        fn();
        all_throw = false;
      } catch (const EvenOrderGroup&) {
      }
    };
    expect_throw([&] { G.sqrt_of(0); });
    expect_throw([&] { verify_sqrt_properties(G); });
    expect_throw([&] { wigner_I(psi, S); });
    expect_throw([&] { wigner_II(psi, S); });
    expect_throw([&] { wigner_I(pure_density(psi), S); });
    expect_throw([&] { phase_point_operator(S, 0, 0, 0, 0); });
    expect_throw([&] { extended_wigner(psi, S); });
    expect_throw([&] { reconstruct_dyad(S, 0, 0); });
    expect_throw([&] { wigner_cyclic_fast(psi, n, 0, 0); });
    rep.add_flag("C" + std::to_string(n), "even order rejected", "3.1",
                 all_throw);
  }
  {
    GroupTable P = build_group(GroupSpec::DirectProduct(
        GroupSpec::Cyclic(3), GroupSpec::Cyclic(5)));
    auto iso = cyclic_isomorphism(P);
    bool ok = iso.has_value();
    if (ok) {
      GroupTable C = build_group(GroupSpec::Cyclic(15));
      for (int a = 0; a < 15 && ok; ++a)
        for (int b = 0; b < 15; ++b)
          if ((*iso)[C.mul(a, b)] != P.mul((*iso)[a], (*iso)[b])) {
            ok = false;
            break;
          }
    }
    rep.add_flag("C3xC5", "isomorphic to C15", "group", ok);
    GroupTable Q = build_group(GroupSpec::DirectProduct(
        GroupSpec::Cyclic(3), GroupSpec::Cyclic(3)));
    rep.add_flag("C3xC3", "not isomorphic to C9", "group",
                 !cyclic_isomorphism(Q).has_value());
  }
  {
    StateVector psi = witness_state_9();
    IrrepSet S9 = compute_irreps(build_group(GroupSpec::Cyclic(9)));
    IrrepSet S33 = compute_irreps(build_group(GroupSpec::DirectProduct(
        GroupSpec::Cyclic(3), GroupSpec::Cyclic(3))));
    WignerTensor W9 = wigner_I(psi, S9);
    WignerTensor W33 = wigner_I(psi, S33);
    double diff = 0.0;
    for (int g = 0; g < 9; ++g)
      for (int j = 0; j < 9; ++j)
        diff += std::norm(W9.at(g, j)(0, 0) - W33.at(g, j)(0, 0));
    diff = std::sqrt(diff);
    rep.add_flag("C9/C3xC3", "distinct Wigner tensors", "3.15",
                 diff > 1e-3);
  }
  for (const char* cyc : {"C3", "C5", "C7", "C9", "C15"}) {
    GroupTable G = build_group(catalog_find(cyc)->spec);
    IrrepSet S = compute_irreps(G);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t)
      worst = std::max(worst, wigner_cyclic_match(
                                  G, S, random_state(G.order(),
                                                     opt.seed * 13ULL + t)));
    rep.add(cyc, "cyclic fast path", "3.18", worst, opt.tol_abelian);
  }
}

/// The full identity suite over the whole catalog.
inline VerificationReport verify_all(const SuiteOptions& opt) {
  VerificationReport rep;
  for (const auto& entry : catalog())
    verify_group(entry.name, build_group(entry.spec), rep, opt);
  verify_global(rep, opt);
  return rep;
}

}  // namespace wigner

#endif
