#pragma once

#include <utility>
#include <vector>

#include "disent/density.hpp"

namespace disent {

enum class ChannelKind { AmplitudeDamping, PhaseDamping, Depolarizing };

/// One decoherence channel acting on both qubits (same kind, independent
/// strengths). For the depolarizing channel p_a, p_b are the rescaled
/// probabilities in [0, 1]; see spec_at for the schedule convention.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::AmplitudeDamping;
  double p_a = 0;
  double p_b = 0;
};

/// Exponential dissipation schedule p_k(t) = 1 - exp(-gamma_k t).
struct DecaySchedule {
  double gamma_a = 1;
  double gamma_b = 1;
};

/// Diagonal-mixing and coherence-scaling coefficients of the two-qubit
/// depolarizing map, as functions of (p_a, p_b).
/// f0 scales the X coherences, f1..f4 mix the diagonal, f5..f8 mix the
/// O-form coherences. f1+f2+f3+f4 = 1 (trace preservation).
struct DepolCoeffs {
  double f0, f1, f2, f3, f4, f5, f6, f7, f8;
};

/// Throws DomainError unless 0 <= p_a, p_b <= 1.
void validate_spec(const ChannelSpec& spec);

/// Single-qubit Kraus operators for the channel at strength p.
/// Two operators for amplitude/phase damping, four for depolarizing.
/// Satisfies completeness: sum K^dag K = identity.
std::vector<Mat2> kraus_ops(ChannelKind kind, double p);

/// Generic joint-Kraus evolution: sum over all tensor products
/// (K_m^A x K_n^B) rho (.)^dag. Output is validated.
DensityMatrix4 apply_joint(const DensityMatrix4& rho, const ChannelSpec& spec);

/// Closed-form X-state update for the channel. Linear in the entries, so
/// it is also usable on unnormalized X values.
XState evolve_x(const XState& x, const ChannelSpec& spec);

/// Closed-form O-state update for the channel.
OState evolve_o(const OState& o, const ChannelSpec& spec);

DepolCoeffs depol_coeffs(double p_a, double p_b);

/// Raw excitation-transfer probabilities at time t >= 0 under the schedule.
/// For the depolarizing channel the raw value must be rescaled by 3/4
/// before entering a ChannelSpec (spec_at does this).
std::pair<double, double> p_of_t(const DecaySchedule& sched, double t);

/// ChannelSpec for the channel at time t, applying the depolarizing
/// rescaling p = 3/4 * (1 - exp(-gamma t)) so that t -> infinity reaches
/// the maximally mixed fixed point.
ChannelSpec spec_at(ChannelKind kind, const DecaySchedule& sched, double t);

}  // namespace disent
