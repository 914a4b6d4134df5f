// Single-photon polarization algebra over the {H, V} basis and the circular
// basis L = (H - iV)/sqrt(2), R = (H + iV)/sqrt(2), plus the two-photon
// entangled pair (HH + VV)/sqrt(2) and its Born-rule projection.
//
// All types are immutable values and all operations are pure; randomness
// enters only as an explicit uniform draw.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace cpmech {

using Complex = std::complex<double>;
using Jones = Eigen::Vector2cd;           // amplitudes over {H, V}
using CpAmplitudes = Eigen::Vector2cd;    // amplitudes over {L, R}
using PairAmplitudes = Eigen::Vector4cd;  // amplitudes over a product basis

// Tolerance for all state algebra: far below any physical effect modeled.
inline constexpr double kStateTol = 1e-12;

// Change of basis {H, V} -> {L, R}. Row k holds <k|H>, <k|V>, so
// (a_L, a_R) = matrix * (a_H, a_V).
template <typename Scalar = double>
Eigen::Matrix2<std::complex<Scalar>> cp_basis_matrix() {
  using C = std::complex<Scalar>;
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  Eigen::Matrix2<C> u;
  u << C(s, 0), C(0, s),   // <L| = (  <H| + i <V| ) / sqrt(2)
      C(s, 0), C(0, -s);   // <R| = (  <H| - i <V| ) / sqrt(2)
  return u;
}

// Two-photon change of basis {HH, HV, VH, VV} -> {LL, LR, RL, RR}.
template <typename Scalar = double>
Eigen::Matrix4<std::complex<Scalar>> cp_pair_basis_matrix() {
  const auto u = cp_basis_matrix<Scalar>();
  Eigen::Matrix4<std::complex<Scalar>> uu;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      uu.template block<2, 2>(2 * i, 2 * j) = u(i, j) * u;
  return uu;
}

// Raw basis transforms for amplitude expressions; no validation.
template <typename Derived>
Eigen::Vector2<typename Derived::Scalar> cp_from_lp(
    const Eigen::MatrixBase<Derived>& lp) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return cp_basis_matrix<Real>() * lp;
}

template <typename Derived>
Eigen::Vector2<typename Derived::Scalar> lp_from_cp(
    const Eigen::MatrixBase<Derived>& cp) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return cp_basis_matrix<Real>().adjoint() * cp;
}

// Rotate the global phase so the first component above `tol` in magnitude is
// real and non-negative. Makes state equality testable.
Jones phase_canonical(const Jones& amplitudes, double tol = kStateTol);

enum class CpOutcome { LeftCircular, RightCircular };

// A pure single-photon polarization state: a normalized Jones vector.
class PolarizationState {
 public:
  explicit PolarizationState(const Jones& amplitudes);
  PolarizationState(Complex amp_h, Complex amp_v);

  static PolarizationState horizontal();
  static PolarizationState vertical();
  static PolarizationState left_circular();   // (H - iV)/sqrt(2)
  static PolarizationState right_circular();  // (H + iV)/sqrt(2)
  static PolarizationState circular(CpOutcome handedness);

  const Jones& jones() const { return amps_; }
  Complex amp_h() const { return amps_[0]; }
  Complex amp_v() const { return amps_[1]; }

  // Equality up to global phase, component-wise within tol.
  bool approx_equals(const PolarizationState& other,
                     double tol = kStateTol) const;

 private:
  Jones amps_;
};

// Two-photon state over the product basis {HH, HV, VH, VV}; must be
// normalized within kStateTol.
class BellPair {
 public:
  explicit BellPair(const PairAmplitudes& coefficients);

  // (HH + VV)/sqrt(2); equals (LR + RL)/sqrt(2) in the circular basis.
  static BellPair canonical();
  static BellPair product(const PolarizationState& first,
                          const PolarizationState& second);

  const PairAmplitudes& coefficients() const { return coeffs_; }

 private:
  PairAmplitudes coeffs_;
};

// (a_L, a_R) with state = a_L * L + a_R * R.
CpAmplitudes lp_to_cp(const PolarizationState& state);

// Inverse of lp_to_cp; rejects non-normalized amplitude pairs.
PolarizationState cp_to_lp(const CpAmplitudes& cp);
PolarizationState cp_to_lp(Complex a_l, Complex a_r);

// Pair amplitudes over {LL, LR, RL, RR}.
PairAmplitudes decompose_bell_in_cp(const BellPair& pair);

struct ProjectionResult {
  CpOutcome alice;
  PolarizationState bob;  // partner state after the collapse
};

// Born-rule projection of photon 1 onto the circular basis. A uniform draw
// in [0, 1) selects LeftCircular when draw < P(L), so a recorded draw
// replays deterministically. The returned partner state is the normalized
// conditional state of photon 2.
ProjectionResult project_alice_cp(const BellPair& pair, double draw);

}  // namespace cpmech
