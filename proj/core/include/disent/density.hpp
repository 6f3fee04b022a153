#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>

#include "disent/errors.hpp"

namespace disent {

using Complex = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;

/// Numerical tolerances for density-matrix validation.
struct Tolerances {
  double herm = 1e-10;
  double trace = 1e-10;
  double psd = 1e-9;
};

/// Whether the dominant coherence of a two-qubit matrix sits on the
/// anti-diagonal corner (Phi, |ee>±|gg> like) or the inner block
/// (Psi, |eg>±|ge> like). Separable when neither dominates positively.
enum class MatrixType { Phi, Psi, Separable };

/// Validated 4x4 two-qubit density matrix in the standard basis
/// |ee>, |eg>, |ge>, |gg>. Hermitian, unit trace, positive semidefinite
/// within the tolerances used at construction.
class DensityMatrix4 {
 public:
  /// Validates and wraps `m`. Throws DensityError naming the violated
  /// invariant and the magnitude of the violation.
  static DensityMatrix4 make(const Mat4& m, const Tolerances& tol = {});

  /// Wraps without validation. For internal use on outputs that are
  /// physical by construction; callers own the proof.
  static DensityMatrix4 unchecked(const Mat4& m) { return DensityMatrix4(m); }

  const Mat4& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit DensityMatrix4(const Mat4& m) : m_(m) {}
  Mat4 m_;
};

/// X-form component: diagonal plus anti-diagonal coherences.
struct XState {
  double d11 = 0, d22 = 0, d33 = 0, d44 = 0;
  Complex c14{0, 0};
  Complex c23{0, 0};
};

/// O-form component: the remaining off-diagonal entries (and conjugates).
struct OState {
  Complex c12{0, 0};
  Complex c13{0, 0};
  Complex c24{0, 0};
  Complex c34{0, 0};
};

/// Validates `m` and returns it as a density matrix. Throws DensityError.
DensityMatrix4 make_density(const Mat4& m, const Tolerances& tol = {});

/// Checks the X-state invariants: nonnegative diagonal, unit trace, and
/// positivity of the two 2x2 blocks. Throws DensityError.
void validate_x_state(const XState& x, const Tolerances& tol = {});

/// Splits rho into its X-form and O-form components. Exact, element-by-element.
std::pair<XState, OState> decompose(const DensityMatrix4& rho);

/// Reassembles X + O into a density matrix, re-validating the result.
DensityMatrix4 recompose(const XState& x, const OState& o,
                         const Tolerances& tol = {});

/// Embeds an X state as a full 4x4 matrix (zero O part). No validation.
Mat4 embed(const XState& x);

/// Extracts the X component of a raw matrix. No validation.
XState x_part(const Mat4& m);

/// Extracts the O component of a raw matrix. No validation.
OState o_part(const Mat4& m);

/// Random density matrix of the given rank from the Ginibre ensemble:
/// G G^dag / tr(G G^dag) with G a 4 x rank complex Gaussian matrix.
/// Deterministic for a fixed seed.
DensityMatrix4 random_density(std::uint64_t seed, int rank = 4);

/// Random valid X state with Q_Phi >= Q_Psi (Phi) or Q_Psi > Q_Phi (Psi),
/// by rejection over random diagonals and phase-random coherences scaled
/// by uniform factors.
XState random_x_state(std::uint64_t seed, MatrixType kind);

/// Werner state: d11 = d44 = (1+w)/4, d22 = d33 = (1-w)/4, c14 = w/2.
/// Requires w in [0, 1].
XState werner_state(double w);

}  // namespace disent
