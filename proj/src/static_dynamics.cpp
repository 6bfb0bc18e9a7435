#include "cqo/static_dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace cqo {

ConditionalFrame static_frame(const SystemParams& p, ControlState s) {
    p.validate();
    const double eps_eff = p.eps_b + 2.0 * control_sign(s) * p.coupling;
    if (eps_eff == 0.0 && p.delta_b == 0.0) {
        throw std::invalid_argument("static_frame: undefined mixing angle");
    }
    // atan2 rather than atan of the ratio, so negative effective bias keeps
    // the eigenvector continuous across eps_eff = 0.
    return {std::atan2(p.delta_b, eps_eff), std::hypot(eps_eff, p.delta_b)};
}

double static_occupation(const SystemParams& p, ControlState s,
                         const InitialAmplitudes& init, double t) {
    init.validate();
    const ConditionalFrame f = static_frame(p, s);
    const double mixed = init.a * std::sin(f.eta) + init.b * std::cos(f.eta);
    const double osc = std::sin(0.5 * f.omega * t);
    const double prob =
        init.a * init.a + (init.b * init.b - mixed * mixed) * osc * osc;
    return std::clamp(prob, 0.0, 1.0);
}

StaticCnotPoint static_cnot_point(double delta_b) {
    if (!(delta_b > 0.0) || !std::isfinite(delta_b)) {
        throw std::invalid_argument("static_cnot_point: delta_b must be > 0");
    }
    const double j = 0.25 * std::sqrt(3.0) * delta_b;
    return {j, 2.0 * j};
}

} // namespace cqo
