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

#include "qtd/analytics/theory.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtd {

namespace {

void require_probability(const char *name, double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

void require_link(double length_km, double attenuation_length_km) {
    if (!(length_km >= 0.0)) {
        throw std::invalid_argument("fiber length must be >= 0");
    }
    if (!(attenuation_length_km > 0.0)) {
        throw std::invalid_argument("attenuation length must be > 0");
    }
}

/// Detector-weighted single-arm efficiency.
double weighted(double eta_up, double eta_d, double length_km, double attenuation_length_km) {
    require_probability("eta_up", eta_up);
    require_probability("eta_d", eta_d);
    require_link(length_km, attenuation_length_km);
    return eta_up * eta_d;
}

double half_link_decay(double length_km, double attenuation_length_km) {
    return std::exp(-length_km / (2.0 * attenuation_length_km));
}

}  // namespace

double dqt_success_probability(double eta_up_source, double eta_down_dest, double length_km,
                               double attenuation_length_km) {
    require_probability("eta_up_source", eta_up_source);
    require_probability("eta_down_dest", eta_down_dest);
    require_link(length_km, attenuation_length_km);
    return eta_up_source * eta_down_dest * std::exp(-length_km / attenuation_length_km);
}

double eqt_click_probability_pnrd(double eta_up, double eta_d, double length_km,
                                  double attenuation_length_km) {
    double q = weighted(eta_up, eta_d, length_km, attenuation_length_km);
    return 2.0 * (q - q * q) * half_link_decay(length_km, attenuation_length_km);
}

double eqt_click_probability_spd(double eta_up, double eta_d, double length_km,
                                 double attenuation_length_km) {
    double q = weighted(eta_up, eta_d, length_km, attenuation_length_km);
    return (2.0 * q - q * q) * half_link_decay(length_km, attenuation_length_km);
}

double eqt_click_probability(DetectorKind kind, double eta_up, double eta_d, double length_km,
                             double attenuation_length_km) {
    return kind == DetectorKind::kPnrd
               ? eqt_click_probability_pnrd(eta_up, eta_d, length_km, attenuation_length_km)
               : eqt_click_probability_spd(eta_up, eta_d, length_km, attenuation_length_km);
}

double eqt_epr_distribution_probability(double eta_up, double eta_d, double length_km,
                                        double attenuation_length_km) {
    weighted(eta_up, eta_d, length_km, attenuation_length_km);
    return 2.0 * eta_up * (1.0 - eta_up) * eta_d *
           half_link_decay(length_km, attenuation_length_km);
}

double spd_true_herald_fraction(double eta_up) {
    require_probability("eta_up", eta_up);
    if (eta_up == 0.0) {
        throw std::invalid_argument("true-herald fraction is undefined at eta_up = 0");
    }
    return (2.0 * eta_up - 2.0 * eta_up * eta_up) / (2.0 * eta_up - eta_up * eta_up);
}

TheoryPoint theory_for(const ExperimentConfig &c) {
    TheoryPoint point{c, 0.0};
    if (c.strategy == Strategy::kDqt) {
        point.value = dqt_success_probability(c.eta_up_source, c.eta_down_dest,
                                              c.fiber_length_km, c.attenuation_length_km);
    } else {
        point.value = eqt_click_probability(c.detector_kind, c.eta_up, c.eta_d,
                                            c.fiber_length_km, c.attenuation_length_km);
    }
    return point;
}

}  // namespace qtd
