#ifndef WIGNER_IRREPS_HPP
#define WIGNER_IRREPS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "wigner/error.hpp"
#include "wigner/group.hpp"

namespace wigner {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Characters of all irreducible representations, one row per irrep.
/// Row 0 is the trivial character; the rest are sorted by (dimension,
/// lexicographic character values by class index).
struct CharacterTable {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;          // element index -> class index
  std::vector<std::vector<cplx>> chars;  // chars[row][class]
  std::vector<int> dims;              // chars[row][0].real() rounded

  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_irreps() const { return static_cast<int>(chars.size()); }
};

struct Irrep {
  int dim = 1;
  std::vector<Matrix> mats;  // one unitary dim x dim matrix per element
  const Matrix& at(int g) const { return mats[g]; }
};

/// The complete family of inequivalent unitary irreps of a group, with
/// irrep 0 the trivial representation. Immutable once built.
struct IrrepSet {
  GroupTable group;
  std::vector<Irrep> irreps;

  int order() const { return group.order(); }
  int num_irreps() const { return static_cast<int>(irreps.size()); }
  int dim(int j) const { return irreps[j].dim; }
  const Matrix& D(int j, int g) const { return irreps[j].mats[g]; }

  /// Total momentum-label count, Sum_j dim_j^2; equals the group order.
  int label_count() const {
    int s = 0;
    for (auto& ir : irreps) s += ir.dim * ir.dim;
    return s;
  }
};

/// Orthonormal dual basis |jmn>, one N-component column per label, with
/// <g|jmn> = sqrt(dim_j / N) D^j_mn(g).
struct MomentumBasis {
  struct Label {
    int j, m, n;
  };
  Matrix vectors;             // N x N, one column per label
  std::vector<Label> labels;  // column index -> (j, m, n)
  std::vector<int> offset;    // irrep j -> first column index

  int index(int j, int m, int n) const {
    return offset[j] + m * dim[j] + n;
  }
  std::vector<int> dim;  // per-irrep dimension, mirrored for convenience
};

namespace detail {

inline cplx snap_root_of_unity(cplx z, int order) {
  double mag = std::abs(z);
  if (std::abs(mag - 1.0) > 1e-6) return z;
  double ang = std::arg(z);
  double step = 2.0 * std::numbers::pi / order;
  long k = std::lround(ang / step);
  cplx snapped = std::polar(1.0, step * static_cast<double>(k));
  return std::abs(snapped - z) < 1e-6 ? snapped : z;
}

// deterministic lexicographic order on character rows
inline bool char_row_less(const std::vector<cplx>& a,
                          const std::vector<cplx>& b) {
  auto key = [](cplx z) {
    auto r = std::lround(z.real() * 1e6), i = std::lround(z.imag() * 1e6);
    return std::pair<long, long>(r, i);
  };
  for (size_t i = 0; i < a.size(); ++i) {
    auto ka = key(a[i]), kb = key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

}  // namespace detail

/// Burnside-Dixon style character computation: the class-sum multiplication
/// matrices commute, so the eigenvectors of a generic real combination are
/// their common eigenvectors; each one carries the class constants
/// |C_i| chi(C_i) / chi(e) of one irrep.
inline CharacterTable character_table(const GroupTable& G) {
  CharacterTable T;
  T.classes = conjugacy_classes(G);
  const int N = G.order();
  const int r = T.num_classes();
  T.class_of.assign(N, -1);
  for (int c = 0; c < r; ++c)
    for (int g : T.classes[c]) T.class_of[g] = c;

  // a[i][s][t] = #{(x,y) in C_i x C_s : x y = rep_t}
  std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < r; ++s)
      for (int x : T.classes[i])
        for (int y : T.classes[s]) {
          int t = T.class_of[G.mul(x, y)];
          if (G.mul(x, y) == T.classes[t][0]) M[i](s, t) += 1.0;
        }

  std::vector<std::vector<cplx>> omega_rows;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(0x5eedULL + attempt);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) C += U(rng) * M[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C.cast<cplx>());
    if (es.info() != Eigen::Success) continue;
    // distinct eigenvalues <=> the eigenvectors are the common ones
    bool separated = true;
    for (int a = 0; a < r && separated; ++a)
      for (int b = a + 1; b < r; ++b)
        if (std::abs(es.eigenvalues()(a) - es.eigenvalues()(b)) < 1e-8) {
          separated = false;
          break;
        }
    if (!separated) continue;
    omega_rows.assign(r, std::vector<cplx>(r));
    bool ok = true;
    for (int k = 0; k < r && ok; ++k) {
      Vector v = es.eigenvectors().col(k);
      if (std::abs(v(0)) < 1e-10) {  // identity-class component must be 1
        ok = false;
        break;
      }
      v /= v(0);
      // refine class constants against each M_i at the dominant component
      int p = 0;
      for (int i = 1; i < r; ++i)
        if (std::abs(v(i)) > std::abs(v(p))) p = i;
      for (int i = 0; i < r; ++i) {
        cplx w = (M[i].cast<cplx>() * v)(p) / v(p);
        omega_rows[k][i] = w;
      }
    }
    if (ok) break;
    omega_rows.clear();
  }
  if (omega_rows.empty())
    throw DegenerateEigenproblem(
        "class-sum matrices could not be jointly diagonalized");

  struct Row {
    int dim;
    std::vector<cplx> chi;
  };
  std::vector<Row> rows;
  for (auto& om : omega_rows) {
    double s = 0.0;
    for (int i = 0; i < r; ++i)
      s += std::norm(om[i]) / static_cast<double>(T.classes[i].size());
    int d = static_cast<int>(std::lround(std::sqrt(N / s)));
    if (d <= 0) throw DegenerateEigenproblem("nonpositive irrep dimension");
    Row row;
    row.dim = d;
    row.chi.resize(r);
    for (int i = 0; i < r; ++i)
      row.chi[i] = om[i] * static_cast<double>(d) /
                   static_cast<double>(T.classes[i].size());
    // clean tiny numerical dust so sorting is stable
    for (auto& z : row.chi) {
      if (std::abs(z.real()) < 1e-10) z.real(0.0);
      if (std::abs(z.imag()) < 1e-10) z.imag(0.0);
    }
    rows.push_back(std::move(row));
  }
  {
    long long sq = 0;
    for (auto& row : rows) sq += 1LL * row.dim * row.dim;
    if (sq != N)
      throw DegenerateEigenproblem("sum of squared dimensions mismatch");
  }
  auto is_trivial = [&](const Row& row) {
    if (row.dim != 1) return false;
    for (auto& z : row.chi)
      if (std::abs(z - cplx(1.0, 0.0)) > 1e-8) return false;
    return true;
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.dim != b.dim) return a.dim < b.dim;
    return detail::char_row_less(a.chi, b.chi);
  });
  for (auto& row : rows) {
    T.chars.push_back(std::move(row.chi));
    T.dims.push_back(row.dim);
  }
  return T;
}

/// Left and right regular permutation actions: L_g'|g> = |g'g>,
/// R_g'|g> = |g g'^-1>.
struct RegularActions {
  std::vector<Matrix> L, R;
};

inline RegularActions regular_actions(const GroupTable& G) {
  const int N = G.order();
  RegularActions A;
  A.L.assign(N, Matrix::Zero(N, N));
  A.R.assign(N, Matrix::Zero(N, N));
  for (int gp = 0; gp < N; ++gp)
    for (int g = 0; g < N; ++g) {
      A.L[gp](G.mul(gp, g), g) = 1.0;
      A.R[gp](G.mul(g, G.inv(gp)), g) = 1.0;
    }
  return A;
}

namespace detail {

// One irreducible copy inside the isotypic component of the right regular
// representation: compress a random Hermitian combination of left
// translations (they span the commutant) by the central projector; each
// eigenvalue cluster of size dim_j spans one irreducible subspace.
inline std::vector<Matrix> extract_block(const GroupTable& G,
                                         const RegularActions& A,
                                         const std::vector<cplx>& chi,
                                         const std::vector<int>& class_of,
                                         int dim, int jlabel) {
  const int N = G.order();
  Matrix P = Matrix::Zero(N, N);
  for (int g = 0; g < N; ++g)
    P += std::conj(chi[class_of[g]]) * A.R[g];
  P *= static_cast<double>(dim) / static_cast<double>(N);

  for (int attempt = 0; attempt < 32; ++attempt) {
    std::mt19937_64 rng(0xb10cULL * (jlabel + 1) + attempt);
    std::normal_distribution<double> nd(0.0, 1.0);
    Matrix H = Matrix::Zero(N, N);
    for (int g = 0; g < N; ++g) {
      cplx c(nd(rng), nd(rng));
      H += c * A.L[g] + std::conj(c) * A.L[G.inv(g)];
    }
    Matrix B = P * H * P;
    Eigen::SelfAdjointEigenSolver<Matrix> es((B + B.adjoint()) / 2.0);
    const auto& ev = es.eigenvalues();
    // cluster eigenvalues; accept a well-separated cluster of size dim
    int i = 0;
    int pick = -1;
    double best = 0.0;
    while (i < N) {
      int k = i;
      while (k + 1 < N && std::abs(ev(k + 1) - ev(i)) < 1e-7) ++k;
      int sz = k - i + 1;
      if (sz == dim && std::abs(ev(i)) > 1e-6 && std::abs(ev(i)) > best) {
        best = std::abs(ev(i));
        pick = i;
      }
      i = k + 1;
    }
    if (pick < 0) continue;
    Matrix Q = es.eigenvectors().middleCols(pick, dim);
    std::vector<Matrix> D(N);
    for (int g = 0; g < N; ++g) D[g] = Q.adjoint() * A.R[g] * Q;
    // character self-test: the block must carry irrep j
    bool ok = true;
    for (int g = 0; g < N && ok; ++g)
      if (std::abs(D[g].trace() - chi[class_of[g]]) > 1e-7) ok = false;
    double schur = 0.0;
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) {
        cplx s = 0.0;
        for (int g = 0; g < N; ++g) s += D[g](m, n) * std::conj(D[g](m, n));
        schur = std::max(schur,
                         std::abs(s - cplx(static_cast<double>(N) / dim, 0)));
      }
    if (!ok || schur > 1e-7) continue;
    return D;
  }
  throw ReducibleBlock("failed to extract an irreducible block for irrep " +
                       std::to_string(jlabel));
}

// Gram-average unitarization: make (1/N) Sum_g D(g)^dag D(g) the identity.
inline void unitarize(std::vector<Matrix>& D, int N) {
  const int d = static_cast<int>(D[0].rows());
  Matrix S = Matrix::Zero(d, d);
  for (auto& m : D) S += m.adjoint() * m;
  S /= static_cast<double>(N);
  Eigen::SelfAdjointEigenSolver<Matrix> es(S);
  Matrix half = es.operatorSqrt();
  Matrix halfinv = es.operatorInverseSqrt();
  for (auto& m : D) m = half * m * halfinv;
}

// Deterministic intra-irrep basis: diagonalize D at the first element whose
// image has well-separated eigenvalues, sort by phase, and pin each
// eigenvector's overall phase at its largest component.
inline void fix_basis(std::vector<Matrix>& D) {
  const int d = static_cast<int>(D[0].rows());
  if (d == 1) return;
  const int N = static_cast<int>(D.size());
  for (int g = 1; g < N; ++g) {
    Eigen::ComplexEigenSolver<Matrix> es(D[g]);
    bool distinct = true;
    for (int a = 0; a < d && distinct; ++a)
      for (int b = a + 1; b < d; ++b)
        if (std::abs(es.eigenvalues()(a) - es.eigenvalues()(b)) < 1e-6) {
          distinct = false;
          break;
        }
    if (!distinct) continue;
    std::vector<int> ord(d);
    std::iota(ord.begin(), ord.end(), 0);
    auto phase = [&](int k) {
      double a = std::arg(es.eigenvalues()(k));
      return a < -1e-12 ? a + 2.0 * std::numbers::pi : a;
    };
    std::sort(ord.begin(), ord.end(),
              [&](int a, int b) { return phase(a) < phase(b); });
    Matrix U(d, d);
    for (int k = 0; k < d; ++k) {
      Vector v = es.eigenvectors().col(ord[k]);
      v.normalize();
      int p = 0;
      for (int i = 1; i < d; ++i)
        if (std::abs(v(i)) > std::abs(v(p)) + 1e-12) p = i;
      v *= std::polar(1.0, -std::arg(v(p)));
      U.col(k) = v;
    }
    // eigenvectors of a unitary are orthogonal at distinct eigenvalues;
    // re-orthonormalize to kill roundoff
    Eigen::HouseholderQR<Matrix> qr(U);
    Matrix Uq = qr.householderQ() * Matrix::Identity(d, d);
    Matrix Rm = Uq.adjoint() * U;
    for (int k = 0; k < d; ++k)
      if (Rm(k, k).real() < 0) Uq.col(k) *= -1.0;
    for (auto& m : D) m = Uq.adjoint() * m * Uq;
    return;
  }
  // fallback: keep the extraction basis (already orthonormal)
}

}  // namespace detail

/// Explicit unitary irrep matrices for every irrep of G. One-dimensional
/// irreps come straight from the character values snapped to exact roots of
/// unity; higher-dimensional ones are carved out of the right regular
/// representation.
inline IrrepSet compute_irreps(const GroupTable& G) {
  CharacterTable T = character_table(G);
  const int N = G.order();
  IrrepSet S;
  S.group = G;

  RegularActions A;
  bool need_regular = false;
  for (int d : T.dims)
    if (d > 1) need_regular = true;
  if (need_regular) A = regular_actions(G);

  for (int j = 0; j < T.num_irreps(); ++j) {
    Irrep ir;
    ir.dim = T.dims[j];
    ir.mats.resize(N);
    if (ir.dim == 1) {
      for (int g = 0; g < N; ++g) {
        cplx z = detail::snap_root_of_unity(T.chars[j][T.class_of[g]],
                                            G.element_order(g));
        ir.mats[g] = Matrix::Constant(1, 1, z);
      }
    } else {
      ir.mats =
          detail::extract_block(G, A, T.chars[j], T.class_of, ir.dim, j);
      detail::unitarize(ir.mats, N);
      detail::fix_basis(ir.mats);
      ir.mats[0] = Matrix::Identity(ir.dim, ir.dim);
    }
    S.irreps.push_back(std::move(ir));
  }
  return S;
}

inline MomentumBasis momentum_basis(const IrrepSet& S) {
  const int N = S.order();
  MomentumBasis B;
  B.vectors = Matrix::Zero(N, N);
  int col = 0;
  for (int j = 0; j < S.num_irreps(); ++j) {
    B.offset.push_back(col);
    const int d = S.dim(j);
    B.dim.push_back(d);
    double w = std::sqrt(static_cast<double>(d) / N);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        for (int g = 0; g < N; ++g) B.vectors(g, col) = w * S.D(j, g)(m, n);
        B.labels.push_back({j, m, n});
        ++col;
      }
  }
  return B;
}

/// Residuals of the standard irrep identity suite.
struct IrrepResiduals {
  double composition = 0;    // D(g')D(g) = D(g'g)
  double unitarity = 0;      // D(g) D(g)^dag = 1
  double orthogonality = 0;  // Sum_g D^j_mn D^j'_m'n'* = (N/N_j) deltas
  double completeness = 0;   // Sum_jmn N_j D^j_mn(g) D^j_mn(g')* = N delta
  double identity_at_e = 0;  // D(e) = 1
  bool dims_square_sum = false;  // Sum N_j^2 = N exactly
  double max() const {
    return std::max({composition, unitarity, orthogonality, completeness,
                     identity_at_e});
  }
};

inline IrrepResiduals verify_irreps(const IrrepSet& S) {
  const int N = S.order();
  IrrepResiduals R;
  R.dims_square_sum = (S.label_count() == N);
  for (int j = 0; j < S.num_irreps(); ++j) {
    const int d = S.dim(j);
    R.identity_at_e = std::max(
        R.identity_at_e,
        (S.D(j, 0) - Matrix::Identity(d, d)).cwiseAbs().maxCoeff());
    for (int g = 0; g < N; ++g) {
      R.unitarity = std::max(
          R.unitarity, (S.D(j, g) * S.D(j, g).adjoint() -
                        Matrix::Identity(d, d))
                           .cwiseAbs()
                           .maxCoeff());
      for (int gp = 0; gp < N; ++gp)
        R.composition =
            std::max(R.composition, (S.D(j, gp) * S.D(j, g) -
                                     S.D(j, S.group.mul(gp, g)))
                                        .cwiseAbs()
                                        .maxCoeff());
    }
  }
  for (int j = 0; j < S.num_irreps(); ++j)
    for (int jp = j; jp < S.num_irreps(); ++jp) {
      const int d = S.dim(j), dp = S.dim(jp);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
          for (int mp = 0; mp < dp; ++mp)
            for (int np = 0; np < dp; ++np) {
              cplx s = 0.0;
              for (int g = 0; g < N; ++g)
                s += S.D(j, g)(m, n) * std::conj(S.D(jp, g)(mp, np));
              cplx want = (j == jp && m == mp && n == np)
                              ? cplx(static_cast<double>(N) / d, 0.0)
                              : cplx(0.0, 0.0);
              R.orthogonality = std::max(R.orthogonality, std::abs(s - want));
            }
    }
  for (int g = 0; g < N; ++g)
    for (int gp = 0; gp < N; ++gp) {
      cplx s = 0.0;
      for (int j = 0; j < S.num_irreps(); ++j) {
        const int d = S.dim(j);
        s += static_cast<double>(d) *
             (S.D(j, g).array() * S.D(j, gp).array().conjugate()).sum();
      }
      cplx want = (g == gp) ? cplx(static_cast<double>(N), 0.0) : cplx(0, 0);
      R.completeness = std::max(R.completeness, std::abs(s - want));
    }
  return R;
}

/// Max residual of the completely reduced left/right actions on |jmn>.
inline double verify_reduced_actions(const IrrepSet& S,
                                     const MomentumBasis& B) {
  const int N = S.order();
  RegularActions A = regular_actions(S.group);
  double worst = 0.0;
  for (int g = 0; g < N; ++g)
    for (int j = 0; j < S.num_irreps(); ++j) {
      const int d = S.dim(j);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          Vector lhsL = A.L[g] * B.vectors.col(B.index(j, m, n));
          Vector rhsL = Vector::Zero(N);
          for (int mp = 0; mp < d; ++mp)
            rhsL += S.D(j, S.group.inv(g))(m, mp) *
                    B.vectors.col(B.index(j, mp, n));
          worst = std::max(worst, (lhsL - rhsL).cwiseAbs().maxCoeff());
          Vector lhsR = A.R[g] * B.vectors.col(B.index(j, m, n));
          Vector rhsR = Vector::Zero(N);
          for (int np = 0; np < d; ++np)
            rhsR += S.D(j, g)(np, n) * B.vectors.col(B.index(j, m, np));
          worst = std::max(worst, (lhsR - rhsR).cwiseAbs().maxCoeff());
        }
    }
  return worst;
}

}  // namespace wigner

#endif
