#include "cpmech/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace cpmech {

namespace {

// Largest count that doubles hold exactly.
constexpr double kExactCountLimit = 9007199254740992.0;  // 2^53

}  // namespace

void AmplifierSpec::validate() const {
  if (!(gain >= 1.0))
    throw std::invalid_argument("AmplifierSpec: gain must be >= 1");
}

WavePlateSpec WavePlateSpec::half_wave(double wavelength_m,
                                       double birefringence,
                                       double mass_density_kg_m3,
                                       double radius_m) {
  if (!(wavelength_m > 0.0))
    throw std::invalid_argument("WavePlateSpec: wavelength_m must be > 0");
  WavePlateSpec plate;
  plate.mass_density_kg_m3 = mass_density_kg_m3;
  plate.thickness_m = wavelength_m / (2.0 * birefringence);
  plate.radius_m = radius_m;
  plate.birefringence = birefringence;
  plate.validate();
  return plate;
}

void WavePlateSpec::validate() const {
  if (!(mass_density_kg_m3 > 0.0))
    throw std::invalid_argument("WavePlateSpec: mass_density_kg_m3 must be > 0");
  if (!(thickness_m > 0.0))
    throw std::invalid_argument("WavePlateSpec: thickness_m must be > 0");
  if (!(radius_m > 0.0))
    throw std::invalid_argument("WavePlateSpec: radius_m must be > 0");
  if (!(birefringence > 0.0))
    throw std::invalid_argument("WavePlateSpec: birefringence must be > 0");
}

double moment_of_inertia(const WavePlateSpec& plate) {
  plate.validate();
  const double r2 = plate.radius_m * plate.radius_m;
  return (kPi / 2.0) * plate.mass_density_kg_m3 * plate.thickness_m * r2 * r2;
}

AmplifiedCounts amplify_counts(double left, double right,
                               const AmplifierSpec& amp) {
  amp.validate();
  if (left < 0.0 || right < 0.0)
    throw std::invalid_argument("amplify_counts: counts must be >= 0");
  AmplifiedCounts out;
  out.left = amp.gain * left;
  out.right = amp.gain * right;
  if (out.left > kExactCountLimit || out.right > kExactCountLimit)
    throw std::overflow_error(
        "amplify_counts: amplified count exceeds exact double range");
  return out;
}

AmplifiedCounts amplify(const WindowCounts& counts, const AmplifierSpec& amp) {
  // Partner handedness is inverted relative to the analyzer record.
  return amplify_counts(static_cast<double>(counts.alice_right),
                        static_cast<double>(counts.alice_left), amp);
}

BatchResult apply_photon_batch(const MechanicalDetectorState& state,
                               double left_count, double right_count,
                               const WavePlateSpec& plate) {
  if (left_count < 0.0 || right_count < 0.0)
    throw std::invalid_argument("apply_photon_batch: counts must be >= 0");

  const double kick = 2.0 * kHbar * (left_count - right_count);  // plate 1
  BatchResult out;
  out.state = state;
  out.state.plate1_angular_momentum += kick;
  out.state.plate2_angular_momentum -= kick;
  // delta(l2 - l1) over the batch.
  out.delta_omega_rad_s = -2.0 * kick / moment_of_inertia(plate);
  return out;
}

MechanicalDetectorState coast(const MechanicalDetectorState& state,
                              double dt_s, const WavePlateSpec& plate) {
  if (dt_s < 0.0) throw std::invalid_argument("coast: dt_s must be >= 0");
  const double inertia = moment_of_inertia(plate);
  MechanicalDetectorState out = state;
  out.plate1_angle_rad += state.plate1_angular_momentum / inertia * dt_s;
  out.plate2_angle_rad += state.plate2_angular_momentum / inertia * dt_s;
  return out;
}

double closed_form_delta_omega(const SourceSpec& source,
                               const AmplifierSpec& amp,
                               const WavePlateSpec& plate, double window_s) {
  source.validate();
  if (!(window_s > 0.0))
    throw std::invalid_argument("closed_form_delta_omega: window_s must be > 0");
  const double rms_imbalance = std::sqrt(window_s * source.pair_rate_hz);
  const AmplifiedCounts counts = amplify_counts(0.0, rms_imbalance, amp);
  return apply_photon_batch(MechanicalDetectorState{}, counts.left,
                            counts.right, plate)
      .delta_omega_rad_s;
}

double spin_angular_momentum(const PolarizationState& photon) {
  const CpAmplitudes cp = lp_to_cp(photon);
  return kHbar * (std::norm(cp[0]) - std::norm(cp[1]));
}

MechanicalDetectorState apply_photon(const MechanicalDetectorState& state,
                                     const PolarizationState& photon) {
  const double kick = 2.0 * spin_angular_momentum(photon);
  MechanicalDetectorState out = state;
  out.plate1_angular_momentum += kick;
  out.plate2_angular_momentum -= kick;
  return out;
}

PhotonLedger frequency_shift_ledger(CpOutcome handedness, double energy_in_j,
                                    double plate1_omega_rad_s,
                                    double plate2_omega_rad_s) {
  const double sign = handedness == CpOutcome::LeftCircular ? 1.0 : -1.0;
  // Pass 1 kicks plate 1 by +2*hbar*sign, pass 2 kicks plate 2 by the
  // opposite; the photon pays (or gains) the first-order work each time.
  const double shift1 = -2.0 * kHbar * sign * plate1_omega_rad_s;
  const double shift2 = +2.0 * kHbar * sign * plate2_omega_rad_s;
  PhotonLedger ledger;
  ledger.handedness = handedness;
  ledger.energy_in_j = energy_in_j;
  ledger.energy_out_j = energy_in_j + shift1 + shift2;
  ledger.exit_handedness = handedness;
  return ledger;
}

}  // namespace cpmech
