#ifndef WIGNER_WIGNER_HPP
#define WIGNER_WIGNER_HPP

#include <numbers>

#include "wigner/state.hpp"

namespace wigner {

enum class Variant { I, II };

inline const char* variant_name(Variant v) {
  return v == Variant::I ? "I" : "II";
}

/// Matrix-valued Wigner distribution on the (g; j) phase-space array.
/// Variant I holds W(g; j m m'), variant II holds W'(g; j n n').
struct WignerTensor {
  Variant variant = Variant::I;
  int order = 0;
  std::vector<std::vector<Matrix>> data;  // data[g][j], dim_j x dim_j

  const Matrix& at(int g, int j) const { return data[g][j]; }

  double diff_max(const WignerTensor& other) const {
    double worst = 0.0;
    for (int g = 0; g < order; ++g)
      for (size_t j = 0; j < data[g].size(); ++j)
        worst = std::max(
            worst, (data[g][j] - other.data[g][j]).cwiseAbs().maxCoeff());
    return worst;
  }
};

/// 4-index redundant distribution w(g; j m n' m' n) per (g, j).
struct ExtendedWignerTensor {
  int order = 0;
  std::vector<int> dims;
  std::vector<std::vector<std::vector<cplx>>> data;  // [g][j][flat]

  cplx& at(int g, int j, int m, int np, int mp, int n) {
    const int d = dims[j];
    return data[g][j][((m * d + np) * d + mp) * d + n];
  }
  cplx at(int g, int j, int m, int np, int mp, int n) const {
    const int d = dims[j];
    return data[g][j][((m * d + np) * d + mp) * d + n];
  }

  double diff_max(const ExtendedWignerTensor& other) const {
    double worst = 0.0;
    for (int g = 0; g < order; ++g)
      for (size_t j = 0; j < data[g].size(); ++j)
        for (size_t k = 0; k < data[g][j].size(); ++k)
          worst = std::max(worst,
                           std::abs(data[g][j][k] - other.data[g][j][k]));
    return worst;
  }
};

namespace detail {

inline void require_odd(const GroupTable& G, const char* what) {
  if (!G.has_sqrt())
    throw EvenOrderGroup(std::string(what) +
                         " is undefined for even group order " +
                         std::to_string(G.order()));
}

inline WignerTensor empty_tensor(const IrrepSet& S, Variant v) {
  WignerTensor W;
  W.variant = v;
  W.order = S.order();
  W.data.assign(W.order, {});
  for (int g = 0; g < W.order; ++g)
    for (int j = 0; j < S.num_irreps(); ++j)
      W.data[g].push_back(Matrix::Zero(S.dim(j), S.dim(j)));
  return W;
}

}  // namespace detail

/// W_psi(g; j m m') = Sum_g' psi(g'^-1 g) D^j_mm'(g'^2) psi(g' g)*
inline WignerTensor wigner_I(const StateVector& psi, const IrrepSet& S) {
  detail::require_odd(S.group, "Wigner distribution I");
  const GroupTable& G = S.group;
  const int N = G.order();
  WignerTensor W = detail::empty_tensor(S, Variant::I);
  for (int g = 0; g < N; ++g)
    for (int gp = 0; gp < N; ++gp) {
      cplx c = psi(G.mul(G.inv(gp), g)) * std::conj(psi(G.mul(gp, g)));
      int sq = G.mul(gp, gp);
      for (int j = 0; j < S.num_irreps(); ++j) W.data[g][j] += c * S.D(j, sq);
    }
  return W;
}

/// Density-operator form: <g'^-1 g|rho|g' g> replaces the dyad.
inline WignerTensor wigner_I(const DensityOperator& rho, const IrrepSet& S) {
  detail::require_odd(S.group, "Wigner distribution I");
  const GroupTable& G = S.group;
  const int N = G.order();
  WignerTensor W = detail::empty_tensor(S, Variant::I);
  for (int g = 0; g < N; ++g)
    for (int gp = 0; gp < N; ++gp) {
      cplx c = rho(G.mul(G.inv(gp), g), G.mul(gp, g));
      int sq = G.mul(gp, gp);
      for (int j = 0; j < S.num_irreps(); ++j) W.data[g][j] += c * S.D(j, sq);
    }
  return W;
}

/// W'_psi(g; j n n') = Sum_g' psi(g g'^-1) D^j_nn'(g'^2) psi(g g')*
inline WignerTensor wigner_II(const StateVector& psi, const IrrepSet& S) {
  detail::require_odd(S.group, "Wigner distribution II");
  const GroupTable& G = S.group;
  const int N = G.order();
  WignerTensor W = detail::empty_tensor(S, Variant::II);
  for (int g = 0; g < N; ++g)
    for (int gp = 0; gp < N; ++gp) {
      cplx c = psi(G.mul(g, G.inv(gp))) * std::conj(psi(G.mul(g, gp)));
      int sq = G.mul(gp, gp);
      for (int j = 0; j < S.num_irreps(); ++j) W.data[g][j] += c * S.D(j, sq);
    }
  return W;
}

/// (1/N) Sum_jm N_j W(g; jmm): the position marginal |psi(g)|^2.
inline std::vector<double> marginal_position(const WignerTensor& W,
                                             const IrrepSet& S) {
  std::vector<double> out(W.order, 0.0);
  for (int g = 0; g < W.order; ++g) {
    cplx s = 0.0;
    for (int j = 0; j < S.num_irreps(); ++j)
      s += static_cast<double>(S.dim(j)) * W.at(g, j).trace();
    out[g] = (s / static_cast<double>(W.order)).real();
  }
  return out;
}

/// Per-irrep momentum marginal (N_j/N) Sum_g W(g; j) as a dim_j x dim_j
/// matrix. Variant I rows/columns are (m, m'); variant II are (n, n').
inline std::vector<Matrix> marginal_momentum(const WignerTensor& W,
                                             const IrrepSet& S) {
  std::vector<Matrix> out;
  for (int j = 0; j < S.num_irreps(); ++j) {
    Matrix M = Matrix::Zero(S.dim(j), S.dim(j));
    for (int g = 0; g < W.order; ++g) M += W.at(g, j);
    out.push_back(M * (static_cast<double>(S.dim(j)) / W.order));
  }
  return out;
}

/// (1/N) Sum_g Sum_jmm' N_j W_phi(g; jm'm) W_psi(g; jmm') = |<phi|psi>|^2
inline double traciality(const WignerTensor& Wphi, const WignerTensor& Wpsi,
                         const IrrepSet& S) {
  if (Wphi.variant != Wpsi.variant || Wphi.order != Wpsi.order)
    throw VariantMismatch("traciality requires matching variants and groups");
  cplx s = 0.0;
  for (int g = 0; g < Wphi.order; ++g)
    for (int j = 0; j < S.num_irreps(); ++j)
      s += static_cast<double>(S.dim(j)) *
           (Wphi.at(g, j) * Wpsi.at(g, j)).trace();
  return (s / static_cast<double>(Wphi.order)).real();
}

/// Left/right covariance residuals for one translation g'.
struct CovarianceReport {
  double left = 0.0;
  double right = 0.0;
  double max() const { return std::max(left, right); }
};

/// Checks the transformation laws of W (variant I) or W' (variant II) under
/// psi -> L_g' psi and psi -> R_g' psi against the directly transformed
/// state.
inline CovarianceReport covariance_check(const StateVector& psi,
                                         const IrrepSet& S, int gp,
                                         Variant variant) {
  detail::require_odd(S.group, "Wigner covariance");
  const GroupTable& G = S.group;
  const int N = G.order();
  StateVector left(N), right(N);
  // (L_g' psi)(g) = psi(g'^-1 g), (R_g' psi)(g) = psi(g g')
  for (int g = 0; g < N; ++g) {
    left(g) = psi(G.mul(G.inv(gp), g));
    right(g) = psi(G.mul(g, gp));
  }
  CovarianceReport rep;
  if (variant == Variant::I) {
    WignerTensor W = wigner_I(psi, S);
    WignerTensor Wl = wigner_I(left, S);
    WignerTensor Wr = wigner_I(right, S);
    for (int g = 0; g < N; ++g)
      for (int j = 0; j < S.num_irreps(); ++j) {
        Matrix expect =
            S.D(j, gp) * W.at(G.mul(G.inv(gp), g), j) * S.D(j, G.inv(gp));
        rep.left = std::max(rep.left,
                            (Wl.at(g, j) - expect).cwiseAbs().maxCoeff());
        rep.right = std::max(
            rep.right,
            (Wr.at(g, j) - W.at(G.mul(g, gp), j)).cwiseAbs().maxCoeff());
      }
  } else {
    WignerTensor W = wigner_II(psi, S);
    WignerTensor Wl = wigner_II(left, S);
    WignerTensor Wr = wigner_II(right, S);
    for (int g = 0; g < N; ++g)
      for (int j = 0; j < S.num_irreps(); ++j) {
        rep.left = std::max(
            rep.left,
            (Wl.at(g, j) - W.at(G.mul(G.inv(gp), g), j)).cwiseAbs().maxCoeff());
        Matrix expect =
            S.D(j, gp) * W.at(G.mul(g, gp), j) * S.D(j, G.inv(gp));
        rep.right = std::max(rep.right,
                             (Wr.at(g, j) - expect).cwiseAbs().maxCoeff());
      }
  }
  return rep;
}

/// Hat-W(g; jmm') = Sum_g' |g' g> D^j_mm'(g'^2) <g'^-1 g|
inline Matrix phase_point_operator(const IrrepSet& S, int g, int j, int m,
                                   int mp) {
  detail::require_odd(S.group, "phase point operator");
  const GroupTable& G = S.group;
  const int N = G.order();
  Matrix W = Matrix::Zero(N, N);
  for (int gp = 0; gp < N; ++gp)
    W(G.mul(gp, g), G.mul(G.inv(gp), g)) += S.D(j, G.mul(gp, gp))(m, mp);
  return W;
}

/// Residuals of the phase-point sum rules: the g-sum reproducing
/// Sum_n |jmn><jm'n|, and the (j, m)-sum reproducing |g><g|.
struct PhasePointSums {
  double momentum_sum = 0.0;
  double position_sum = 0.0;
  double max() const { return std::max(momentum_sum, position_sum); }
};

inline PhasePointSums phase_point_sums(const IrrepSet& S,
                                       const MomentumBasis& B) {
  detail::require_odd(S.group, "phase point sum rules");
  const int N = S.order();
  PhasePointSums rep;
  for (int j = 0; j < S.num_irreps(); ++j) {
    const int d = S.dim(j);
    for (int m = 0; m < d; ++m)
      for (int mp = 0; mp < d; ++mp) {
        Matrix acc = Matrix::Zero(N, N);
        for (int g = 0; g < N; ++g)
          acc += phase_point_operator(S, g, j, m, mp);
        acc *= static_cast<double>(d) / N;
        Matrix want = Matrix::Zero(N, N);
        for (int n = 0; n < d; ++n)
          want += B.vectors.col(B.index(j, m, n)) *
                  B.vectors.col(B.index(j, mp, n)).adjoint();
        rep.momentum_sum =
            std::max(rep.momentum_sum, (acc - want).cwiseAbs().maxCoeff());
      }
  }
  for (int g = 0; g < N; ++g) {
    Matrix acc = Matrix::Zero(N, N);
    for (int j = 0; j < S.num_irreps(); ++j) {
      const int d = S.dim(j);
      for (int m = 0; m < d; ++m)
        acc += (static_cast<double>(d) / N) *
               phase_point_operator(S, g, j, m, m);
    }
    Matrix want = Matrix::Zero(N, N);
    want(g, g) = 1.0;
    rep.position_sum =
        std::max(rep.position_sum, (acc - want).cwiseAbs().maxCoeff());
  }
  return rep;
}

/// |g' g><g'^-1 g| = Sum_jmm' (N_j/N) D^j_mm'(g'^2)* Hat-W(g; jmm')
inline Matrix reconstruct_dyad(const IrrepSet& S, int g, int gp) {
  detail::require_odd(S.group, "dyad reconstruction");
  const GroupTable& G = S.group;
  const int N = G.order();
  int sq = G.mul(gp, gp);
  Matrix out = Matrix::Zero(N, N);
  for (int j = 0; j < S.num_irreps(); ++j) {
    const int d = S.dim(j);
    for (int m = 0; m < d; ++m)
      for (int mp = 0; mp < d; ++mp)
        out += (static_cast<double>(d) / N) *
               std::conj(S.D(j, sq)(m, mp)) *
               phase_point_operator(S, g, j, m, mp);
  }
  return out;
}

/// Odd-cyclic fast path: W_psi(g^n; j) =
/// Sum_n' psi(g^(n-n')) e^(2 pi i j 2n'/N) psi(g^(n+n'))*
inline cplx wigner_cyclic_fast(const StateVector& psi, int N, int j, int n) {
  if (N % 2 == 0)
    throw EvenOrderGroup("cyclic fast path requires odd N");
  cplx s = 0.0;
  for (int np = 0; np < N; ++np) {
    double ang = 2.0 * std::numbers::pi * j * (2.0 * np) / N;
    s += psi((n - np % N + N) % N) * std::polar(1.0, ang) *
         std::conj(psi((n + np) % N));
  }
  return s;
}

/// First displayed form of the redundant distribution:
/// w(g; j m n' m' n) = Sum_g' psi(g'^-1 g) D^j_mn'(g' g) D^j_nm'(g^-1 g')
/// psi(g' g)*
inline ExtendedWignerTensor extended_wigner(const StateVector& psi,
                                            const IrrepSet& S) {
  detail::require_odd(S.group, "extended Wigner distribution");
  const GroupTable& G = S.group;
  const int N = G.order();
  ExtendedWignerTensor w;
  w.order = N;
  for (int j = 0; j < S.num_irreps(); ++j) w.dims.push_back(S.dim(j));
  w.data.assign(N, {});
  for (int g = 0; g < N; ++g)
    for (int j = 0; j < S.num_irreps(); ++j) {
      const int d = S.dim(j);
      w.data[g].emplace_back(static_cast<size_t>(d) * d * d * d, cplx(0, 0));
    }
  for (int g = 0; g < N; ++g)
    for (int gp = 0; gp < N; ++gp) {
      cplx c = psi(G.mul(G.inv(gp), g)) * std::conj(psi(G.mul(gp, g)));
      int a = G.mul(gp, g), b = G.mul(G.inv(g), gp);
      for (int j = 0; j < S.num_irreps(); ++j) {
        const int d = S.dim(j);
        const Matrix& Da = S.D(j, a);
        const Matrix& Db = S.D(j, b);
        for (int m = 0; m < d; ++m)
          for (int np = 0; np < d; ++np)
            for (int mp = 0; mp < d; ++mp)
              for (int n = 0; n < d; ++n)
                w.at(g, j, m, np, mp, n) += c * Da(m, np) * Db(n, mp);
      }
    }
  return w;
}

/// Second displayed form, obtained by the substitution g' -> g g'^-1:
/// w(g; j m n' m' n) = Sum_g' psi(g g'^-1) D^j_mn'(g g') D^j_nm'(g' g^-1)
/// psi(g g')*
inline ExtendedWignerTensor extended_wigner_alt(const StateVector& psi,
                                                const IrrepSet& S) {
  detail::require_odd(S.group, "extended Wigner distribution");
  const GroupTable& G = S.group;
  const int N = G.order();
  ExtendedWignerTensor w;
  w.order = N;
  for (int j = 0; j < S.num_irreps(); ++j) w.dims.push_back(S.dim(j));
  w.data.assign(N, {});
  for (int g = 0; g < N; ++g)
    for (int j = 0; j < S.num_irreps(); ++j) {
      const int d = S.dim(j);
      w.data[g].emplace_back(static_cast<size_t>(d) * d * d * d, cplx(0, 0));
    }
  for (int g = 0; g < N; ++g)
    for (int gp = 0; gp < N; ++gp) {
      cplx c = psi(G.mul(g, G.inv(gp))) * std::conj(psi(G.mul(g, gp)));
      int a = G.mul(g, gp), b = G.mul(gp, G.inv(g));
      for (int j = 0; j < S.num_irreps(); ++j) {
        const int d = S.dim(j);
        const Matrix& Da = S.D(j, a);
        const Matrix& Db = S.D(j, b);
        for (int m = 0; m < d; ++m)
          for (int np = 0; np < d; ++np)
            for (int mp = 0; mp < d; ++mp)
              for (int n = 0; n < d; ++n)
                w.at(g, j, m, np, mp, n) += c * Da(m, np) * Db(n, mp);
      }
    }
  return w;
}

/// Partial trace over n: W(g; jmm') = Sum_n w(g; jmn m'n).
inline WignerTensor extended_trace_to_I(const ExtendedWignerTensor& w,
                                        const IrrepSet& S) {
  WignerTensor W = detail::empty_tensor(S, Variant::I);
  for (int g = 0; g < w.order; ++g)
    for (int j = 0; j < S.num_irreps(); ++j) {
      const int d = S.dim(j);
      for (int m = 0; m < d; ++m)
        for (int mp = 0; mp < d; ++mp) {
          cplx s = 0.0;
          for (int n = 0; n < d; ++n) s += w.at(g, j, m, n, mp, n);
          W.data[g][j](m, mp) = s;
        }
    }
  return W;
}

/// Partial trace over m: W'(g; jnn') = Sum_m w(g; jmn' mn).
inline WignerTensor extended_trace_to_II(const ExtendedWignerTensor& w,
                                         const IrrepSet& S) {
  WignerTensor W = detail::empty_tensor(S, Variant::II);
  for (int g = 0; g < w.order; ++g)
    for (int j = 0; j < S.num_irreps(); ++j) {
      const int d = S.dim(j);
      for (int n = 0; n < d; ++n)
        for (int np = 0; np < d; ++np) {
          cplx s = 0.0;
          for (int m = 0; m < d; ++m) s += w.at(g, j, m, np, m, n);
          W.data[g][j](n, np) = s;
        }
    }
  return W;
}

/// Rebuild the redundant distribution from the variant-I tensor alone,
/// demonstrating overcompleteness: the dyad factor is resynthesized from
/// W via the phase-point expansion before being recombined with the two
/// irrep factors.
inline ExtendedWignerTensor reconstruct_extended(const WignerTensor& W,
                                                 const IrrepSet& S) {
  if (W.variant != Variant::I)
    throw VariantMismatch("reconstruction starts from a variant-I tensor");
  detail::require_odd(S.group, "extended reconstruction");
  const GroupTable& G = S.group;
  const int N = G.order();
  ExtendedWignerTensor w;
  w.order = N;
  for (int j = 0; j < S.num_irreps(); ++j) w.dims.push_back(S.dim(j));
  w.data.assign(N, {});
  for (int g = 0; g < N; ++g)
    for (int j = 0; j < S.num_irreps(); ++j) {
      const int d = S.dim(j);
      w.data[g].emplace_back(static_cast<size_t>(d) * d * d * d, cplx(0, 0));
    }
  for (int g = 0; g < N; ++g) {
    // Sum_j''m''n'' (N_j''/N) D^j''_m''n''(g'^2)* W(g; j''m''n'')
    std::vector<cplx> coeff(N, cplx(0, 0));
    for (int gp = 0; gp < N; ++gp) {
      int sq = G.mul(gp, gp);
      cplx s = 0.0;
      for (int jpp = 0; jpp < S.num_irreps(); ++jpp) {
        const int d = S.dim(jpp);
        s += (static_cast<double>(d) / N) *
             (S.D(jpp, sq).conjugate().array() * W.at(g, jpp).array()).sum();
      }
      coeff[gp] = s;
    }
    for (int gp = 0; gp < N; ++gp) {
      int a = G.mul(gp, g), b = G.mul(G.inv(g), gp);
      for (int j = 0; j < S.num_irreps(); ++j) {
        const int d = S.dim(j);
        const Matrix& Da = S.D(j, a);
        const Matrix& Db = S.D(j, b);
        for (int m = 0; m < d; ++m)
          for (int np = 0; np < d; ++np)
            for (int mp = 0; mp < d; ++mp)
              for (int n = 0; n < d; ++n)
                w.at(g, j, m, np, mp, n) += coeff[gp] * Da(m, np) * Db(n, mp);
      }
    }
  }
  return w;
}

}  // namespace wigner

#endif
