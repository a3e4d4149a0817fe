// Copyright 2026 The qtransduce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTD_ANALYTICS_THEORY_H_
#define QTD_ANALYTICS_THEORY_H_

#include "qtd/hardware/fock_detector.h"
#include "qtd/strategies/experiment_config.h"

namespace qtd {

// Closed-form link metrics. Every function throws std::invalid_argument when
// an efficiency leaves [0, 1], a length is negative, or the attenuation
// length is not positive.

/// eta_up_s * eta_down_d * exp(-l / L0).
double dqt_success_probability(double eta_up_source, double eta_down_dest, double length_km,
                               double attenuation_length_km);

/// Single-click probability with photon-number-resolving detectors:
/// 2 (q - q^2) exp(-l / 2 L0), with q = eta_up * eta_d.
double eqt_click_probability_pnrd(double eta_up, double eta_d, double length_km,
                                  double attenuation_length_km);

/// Click probability with threshold detectors: (2q - q^2) exp(-l / 2 L0).
double eqt_click_probability_spd(double eta_up, double eta_d, double length_km,
                                 double attenuation_length_km);

double eqt_click_probability(DetectorKind kind, double eta_up, double eta_d, double length_km,
                             double attenuation_length_km);

/// Probability that a period ends with a genuine herald (one conversion,
/// photon survives its arm, and is detected):
/// 2 eta (1 - eta) eta_d exp(-l / 2 L0). Equals the PNRD click probability
/// when eta_d = 1.
double eqt_epr_distribution_probability(double eta_up, double eta_d, double length_km,
                                        double attenuation_length_km);

/// Share of SPD clicks that herald real entanglement, ideal detectors:
/// (2 eta - 2 eta^2) / (2 eta - eta^2). Rejects eta_up == 0.
double spd_true_herald_fraction(double eta_up);

struct TheoryPoint {
    ExperimentConfig inputs;
    double value = 0.0;
};

/// DQT success probability or EQT click probability for a configuration.
TheoryPoint theory_for(const ExperimentConfig &config);

}  // namespace qtd

#endif  // QTD_ANALYTICS_THEORY_H_
