#ifndef STOKES_COLLECTIVE_HPP
#define STOKES_COLLECTIVE_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "stokes/model.hpp"

namespace stokes {

struct WeightProfile {
    std::vector<double> thetas;   // radians
    std::vector<double> weights;  // in [0,1]
    std::optional<double> fwhm_marker;  // radians, absent in the flat regime
};

// Weight of the symmetric collective state in the state heralded by a Stokes
// detection along dir:
//
//   W(k) = |Int_V S dV|^2 / (V * Int_V |S|^2 dV)
//
// The atom number cancels identically; W is a Cauchy-Schwarz-bounded overlap
// in [0,1]. Shares the separable 1-D quadrature of the emission module.
double symmetric_weight(const ExperimentModel& model, const StokesDirection& dir,
                        int nodes_per_axis = 256);

WeightProfile weight_scan(const ExperimentModel& model, double phi, double theta_max,
                          int n_points, int nodes_per_axis = 256);

// CSV: "theta_deg,symmetric_weight", same numeric format as emission.
void write_csv(const WeightProfile& profile, std::ostream& out);

}  // namespace stokes

#endif
