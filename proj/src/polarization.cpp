#include "cpmech/polarization.hpp"

namespace cpmech {

namespace {

void require_normalized(double squared_norm, const char* what) {
  if (std::abs(squared_norm - 1.0) > kStateTol)
    throw std::invalid_argument(std::string(what) + ": amplitudes not normalized");
}

}  // namespace

Jones phase_canonical(const Jones& amplitudes, double tol) {
  const Complex pivot =
      (std::abs(amplitudes[0]) > tol) ? amplitudes[0] : amplitudes[1];
  const double mag = std::abs(pivot);
  if (mag == 0.0) return amplitudes;
  return amplitudes * (std::conj(pivot) / mag);
}

PolarizationState::PolarizationState(const Jones& amplitudes)
    : amps_(amplitudes) {
  require_normalized(amps_.squaredNorm(), "PolarizationState");
}

PolarizationState::PolarizationState(Complex amp_h, Complex amp_v)
    : PolarizationState(Jones(amp_h, amp_v)) {}

PolarizationState PolarizationState::horizontal() {
  return PolarizationState(Jones(1.0, 0.0));
}

PolarizationState PolarizationState::vertical() {
  return PolarizationState(Jones(0.0, 1.0));
}

PolarizationState PolarizationState::left_circular() {
  const double s = 1.0 / std::sqrt(2.0);
  return PolarizationState(Jones(Complex(s, 0.0), Complex(0.0, -s)));
}

PolarizationState PolarizationState::right_circular() {
  const double s = 1.0 / std::sqrt(2.0);
  return PolarizationState(Jones(Complex(s, 0.0), Complex(0.0, s)));
}

PolarizationState PolarizationState::circular(CpOutcome handedness) {
  return handedness == CpOutcome::LeftCircular ? left_circular()
                                               : right_circular();
}

bool PolarizationState::approx_equals(const PolarizationState& other,
                                      double tol) const {
  const Jones a = phase_canonical(amps_, tol);
  const Jones b = phase_canonical(other.amps_, tol);
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

BellPair::BellPair(const PairAmplitudes& coefficients) : coeffs_(coefficients) {
  require_normalized(coeffs_.squaredNorm(), "BellPair");
}

BellPair BellPair::canonical() {
  const double s = 1.0 / std::sqrt(2.0);
  PairAmplitudes c;
  c << Complex(s, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(s, 0.0);
  return BellPair(c);
}

BellPair BellPair::product(const PolarizationState& first,
                           const PolarizationState& second) {
  const Jones& a = first.jones();
  const Jones& b = second.jones();
  PairAmplitudes c;
  c << a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1];
  return BellPair(c);
}

CpAmplitudes lp_to_cp(const PolarizationState& state) {
  return cp_from_lp(state.jones());
}

PolarizationState cp_to_lp(const CpAmplitudes& cp) {
  require_normalized(cp.squaredNorm(), "cp_to_lp");
  return PolarizationState(lp_from_cp(cp));
}

PolarizationState cp_to_lp(Complex a_l, Complex a_r) {
  return cp_to_lp(CpAmplitudes(a_l, a_r));
}

PairAmplitudes decompose_bell_in_cp(const BellPair& pair) {
  return cp_pair_basis_matrix<double>() * pair.coefficients();
}

ProjectionResult project_alice_cp(const BellPair& pair, double draw) {
  if (!(draw >= 0.0 && draw < 1.0))
    throw std::invalid_argument("project_alice_cp: draw must lie in [0, 1)");

  const PairAmplitudes cp = decompose_bell_in_cp(pair);
  const double p_left = std::norm(cp[0]) + std::norm(cp[1]);

  bool left = draw < p_left;
  // A draw can land in the rounding slack of a numerically certain outcome;
  // route it to the branch that actually carries probability.
  if (left && p_left <= kStateTol) left = false;
  if (!left && 1.0 - p_left <= kStateTol) left = true;

  CpAmplitudes bob_cp = left ? CpAmplitudes(cp[0], cp[1])
                             : CpAmplitudes(cp[2], cp[3]);
  const double p = left ? p_left : 1.0 - p_left;
  if (p <= 0.0)
    throw std::domain_error("project_alice_cp: degenerate pair state");
  bob_cp /= std::sqrt(p);

  return ProjectionResult{
      left ? CpOutcome::LeftCircular : CpOutcome::RightCircular,
      cp_to_lp(bob_cp)};
}

}  // namespace cpmech
