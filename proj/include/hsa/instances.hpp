#pragma once

#include <array>
#include <map>

#include "hsa/bicross.hpp"

namespace hsa {

inline constexpr std::uint64_t kDefaultSeed = 0x5ca1ab1e;

using Mat2s = std::array<std::array<Scalar, 2>, 2>;

/// sigma[0] is the identity, sigma[1..3] the Pauli matrices (upper index);
/// sigma_bar[i] = -sigma[i]; spatial indexes are lowered with the metric.
struct SpinorConventions {
  std::array<Mat2s, 4> sigma;
  std::array<Mat2s, 4> sigma_bar;
  Mat2s epsilon;  // antisymmetric, epsilon[0][1] = +1
  std::array<int, 4> metric;  // +1, -1, -1, -1
};

SpinorConventions spinor_conventions();

/// Lorentz generators acting on commuting momenta; trivial coaction.
BicrossData make_classical_poincare();

/// z0..z3 (even) and th1, th2 (odd) with the deformed commutators carrying
/// kappa_inv tails; primitive coproduct.
HopfStructure make_chiral_superspace(const Scalar& kappa_inv);
HopfStructure make_chiral_superspace();

/// A, Ab (2x2 unimodular, commuting, even) and tb1, tb2 (odd); matrix
/// coproduct on A, Ab; inverses realized as adjugates.
HopfStructure make_super_lorentz();

/// vector representation: L[mu][nu] = 1/2 tr(sigma_bar^mu A sigma_nu Adag),
/// a 4x4 matrix of degree-(1,1) polynomials over the super-Lorentz algebra
std::array<std::array<Element, 4>, 4> lorentz_vector_rep(
    const SpinorConventions& conv, const std::shared_ptr<const Presentation>& lorentz);

/// Transcription switches for the deformed action/coaction tables.  The
/// compatibility checker is the ground truth that fixes the shipped values;
/// the defaults are the resolved set.
struct KappaVariants {
  bool tt_zi_dagger_left = true;    // tb <| z_i uses (Adag A) (false: A Adag)
  bool tt_zi_inverse = true;        // tb <| z_i subtracts the inverse matrix
  bool tt_z0_dagger_left = true;    // tb <| z_0 matrix base
  bool tt_z0_inverse = false;       // tb <| z_0 uses the inverse matrix
  bool tt_th_dagger_left = false;   // tb <| th uses (A Adag) when false
  bool tt_th_transposed = false;
  int tt_zi_sign = +1;
  int tt_z0_sign = +1;
  int tt_th_sign = +1;

  int sign_a_zi = +1;               // overall sign of the A <| z_i line
  bool lam_a_zi_transposed = false; // L(i,k) read as L[k][i]
  bool a_zi_sigma_left = false;     // lambda term (sigma_k A) instead of (A sigma_k)
  bool a_zi_bare_left = true;       // bare term (sigma^i A) instead of (A sigma^i)
  int sign_ab_zi = +1;
  bool lam_ab_zi_transposed = false;
  bool ab_zi_sigma_left = true;
  bool ab_zi_bare_left = false;
  int sign_a_z0 = +1;
  bool lam_a_z0_row = true;         // true: L[k][0], false: L[0][k]
  bool a_z0_sigma_left = false;
  int sign_ab_z0 = +1;
  bool lam_ab_z0_row = true;
  bool ab_z0_sigma_left = true;

  bool co_lambda_transposed = false;  // beta(z_mu) first term L[nu][mu] when set
  bool co_lambda_metric = false;      // metric-conjugated: eta L eta
  bool co_sigma_lower = false;        // sigma index height in the odd term
  int co_theta_sign = -1;             // sign of the i * (adj(A) sigma tb) (x) th term
};

BicrossData make_kappa_action_coaction_variant(const Scalar& kappa_inv,
                                               const KappaVariants& v);
BicrossData make_kappa_action_coaction(const Scalar& kappa_inv);
BicrossData make_kappa_action_coaction();

/// even restriction: drops th, tb and the odd coaction term
BicrossData make_kappa_bosonic(const Scalar& kappa_inv);

struct InstanceBundle {
  BicrossData data;
  BuiltBicross built;
  CheckReport report;
  std::map<std::string, std::string> conventions;
};

/// runs every bicross check suite, builds the combined structure and runs
/// the built-structure checks; throws Error(CompatibilityFailed) if the
/// preconditions fail
InstanceBundle build_kappa_poincare_supergroup(int degree = 2, int samples = 10,
                                               std::uint64_t seed = kDefaultSeed);

/// reconstructs the translation-basis generators inside the built algebra
/// and compares every (anti)commutator, coproduct and antipode against the
/// reference relations; mismatches are reported as explicit differences
CheckReport change_basis_check(const InstanceBundle& bundle);

}  // namespace hsa
