// Optical amplifier and the two-plate mechanical detector.
//
// Sign conventions, fixed once and propagated everywhere:
//   - a left-circular photon kicks plate 1 by +2*hbar and plate 2 by
//     -2*hbar; a right-circular photon does the reverse;
//   - the detector output is the relative change delta_l = l2 - l1, i.e.
//     +4*hbar per right-circular photon at the detector input.
// The beam entering the detector carries the partner photons, whose
// handedness is opposite the analyzer-side record, so a left-heavy analyzer
// window produces a positive delta_l and the ideal cross-station
// correlation is +1.

#pragma once

#include "cpmech/constants.hpp"
#include "cpmech/polarization.hpp"
#include "cpmech/source.hpp"

namespace cpmech {

struct AmplifierSpec {
  double gain = 1.0;  // power gain G >= 1
  void validate() const;
};

// Birefringent disk plate.
struct WavePlateSpec {
  double mass_density_kg_m3 = 0.0;  // rho
  double thickness_m = 0.0;         // D
  double radius_m = 0.0;            // r
  double birefringence = 0.0;       // delta n

  // Zero-order half-wave plate: thickness = wavelength / (2 * birefringence).
  static WavePlateSpec half_wave(double wavelength_m, double birefringence,
                                 double mass_density_kg_m3, double radius_m);
  void validate() const;
};

// (pi/2) * rho * D * r^4, kg*m^2.
double moment_of_inertia(const WavePlateSpec& plate);

// Photon counts entering the mechanical detector after ideal noiseless
// amplification (exactly gain copies per input photon, same CP state;
// spontaneous-emission noise is out of scope). Held as doubles, exact while
// below 2^53.
struct AmplifiedCounts {
  double left = 0.0;
  double right = 0.0;
  double delta() const { return left - right; }
};

// Raw amplification of detector-side counts.
AmplifiedCounts amplify_counts(double left, double right,
                               const AmplifierSpec& amp);

// Detector-side amplified counts for an analyzer window record: the pair
// state makes the partner handedness the opposite of the analyzer outcome,
// so left and right swap.
AmplifiedCounts amplify(const WindowCounts& counts, const AmplifierSpec& amp);

// Two freely rotating half-wave plates in a row. Momenta are in J*s.
struct MechanicalDetectorState {
  double plate1_angular_momentum = 0.0;
  double plate2_angular_momentum = 0.0;
  double plate1_angle_rad = 0.0;
  double plate2_angle_rad = 0.0;

  // The detector output delta_l = l2 - l1.
  double relative_angular_momentum() const {
    return plate2_angular_momentum - plate1_angular_momentum;
  }

  bool operator==(const MechanicalDetectorState&) const = default;
};

struct BatchResult {
  MechanicalDetectorState state;
  double delta_omega_rad_s = 0.0;  // change of the relative angular velocity
};

// Impart the net angular-momentum kicks of a photon batch. Counts are the
// left/right tallies at the detector input.
BatchResult apply_photon_batch(const MechanicalDetectorState& state,
                               double left_count, double right_count,
                               const WavePlateSpec& plate);

// Free rigid-body rotation for dt seconds: angles advance, momenta unchanged.
MechanicalDetectorState coast(const MechanicalDetectorState& state,
                              double dt_s, const WavePlateSpec& plate);

// Relative angular-velocity change for the RMS window imbalance
// sqrt(window * pair_rate), amplified by the gain:
//   delta_omega = 4*hbar*G*sqrt(t*N) / I_m = (8*hbar*G / (pi*rho*D*r^4)) * dN.
// Positive, i.e. quoted for a left-heavy analyzer record. Evaluated through
// apply_photon_batch so the closed form and the batch route agree exactly.
double closed_form_delta_omega(const SourceSpec& source,
                               const AmplifierSpec& amp,
                               const WavePlateSpec& plate, double window_s);

// Expectation of the photon spin along the beam: hbar * (P(L) - P(R)).
// Zero for any linear polarization.
double spin_angular_momentum(const PolarizationState& photon);

// Mean mechanical kick of one photon in an arbitrary pure state; a photon
// declared H or V leaves the plates untouched.
MechanicalDetectorState apply_photon(const MechanicalDetectorState& state,
                                     const PolarizationState& photon);

// Energy bookkeeping for one photon through both plates.
struct PhotonLedger {
  CpOutcome handedness;
  double energy_in_j = 0.0;
  double energy_out_j = 0.0;
  CpOutcome exit_handedness;  // always equals handedness
};

// Per-pass photon energy change is minus the plate's rotational-energy gain
// to first order in the kick, Omega * delta_l, with Omega taken before the
// kick. The CP state is preserved through both plates; only the wavelength
// shifts (blue or red depending on the signs).
PhotonLedger frequency_shift_ledger(CpOutcome handedness, double energy_in_j,
                                    double plate1_omega_rad_s,
                                    double plate2_omega_rad_s);

}  // namespace cpmech
