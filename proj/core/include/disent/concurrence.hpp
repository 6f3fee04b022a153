#pragma once

#include <array>

#include "disent/channels.hpp"
#include "disent/density.hpp"

namespace disent {

/// Convenience products of X-state diagonal entries:
/// x_ij = sqrt(d_ii d_jj), y_ij = d_ii + d_jj.
struct XDerived {
  double x14, x23, y14, y23;
};

XDerived x_derived(const XState& x);

/// Q_Phi = 2(|c14| - sqrt(d22 d33)). May be negative.
double q_phi(const XState& x);

/// Q_Psi = 2(|c23| - sqrt(d11 d44)). May be negative.
double q_psi(const XState& x);

/// Concurrence of an X state: max{Q_Phi, Q_Psi, 0}.
double concurrence_x(const XState& x);

/// Wootters concurrence of a general two-qubit density matrix via the
/// spin-flip eigenvalue construction, clamped to [0, 1].
double wootters(const DensityMatrix4& rho);

/// Unclamped lambda_1 - lambda_2 - lambda_3 - lambda_4. Negative for
/// separable states; used by the onset-time search to avoid the clamp.
double wootters_signed(const DensityMatrix4& rho);

/// The sorted (descending) spin-flip eigenvalue roots lambda_i.
std::array<double, 4> wootters_lambdas(const DensityMatrix4& rho);

/// Phi / Psi / Separable per the dominant positive Q; ties (Q_Phi == Q_Psi > 0)
/// classify as Phi.
MatrixType classify(const XState& x);

/// Q_Phi of the evolved state, in channel-specific closed form. Equals
/// q_phi(evolve_x(x, spec)).
double q_phi_t(const XState& x, const ChannelSpec& spec);

/// Q_Psi counterpart of q_phi_t.
double q_psi_t(const XState& x, const ChannelSpec& spec);

/// Amplitude-damping decay term d11 (d11 p_a p_b + d22 p_a + d33 p_b).
/// Monotone non-decreasing in p_a and p_b.
double delta(const XState& x, double p_a, double p_b);

}  // namespace disent
