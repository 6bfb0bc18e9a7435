#include "cqo/rwa.hpp"

#include <algorithm>
#include <cmath>

namespace cqo {

RwaContext rwa_context(const SystemParams& p, const Drive& d) {
    p.validate();
    d.validate();
    const double omega0 = std::hypot(p.eps_b, p.delta_b);
    if (omega0 == 0.0) {
        throw std::invalid_argument("rwa_context: qubit B splitting is zero");
    }
    RwaContext ctx;
    ctx.omega0_b = omega0;
    ctx.eta0_b = std::atan2(p.delta_b, p.eps_b);
    ctx.shift = 2.0 * p.coupling * p.eps_b / omega0;
    ctx.drive_strength = p.delta_b * d.v_b / (2.0 * omega0);
    return ctx;
}

ops::Matrix2 effective_hamiltonian(const SystemParams& p, const Drive& d,
                                   ControlState s) {
    const RwaContext ctx = rwa_context(p, d);
    const double sign = control_sign(s);
    const double z = 0.5 * (ctx.omega0_b + sign * ctx.shift - d.omega);
    const double c = 0.5 * sign * p.eps_a;
    const double x = 0.5 * ctx.drive_strength;
    ops::Matrix2 h;
    h << z + c, x,
         x, -z + c;
    return h;
}

namespace {

double detuning(const RwaContext& ctx, const Drive& d, ControlState s) {
    return d.omega - ctx.omega0_b - control_sign(s) * ctx.shift;
}

} // namespace

ConditionalFrame driven_frame(const SystemParams& p, const Drive& d,
                              ControlState s) {
    const RwaContext ctx = rwa_context(p, d);
    const double det = detuning(ctx, d, s);
    const double omega = std::hypot(det, ctx.drive_strength);
    if (omega == 0.0) {
        throw std::invalid_argument("driven_frame: degenerate frame");
    }
    return {std::atan2(ctx.drive_strength, det), omega};
}

double transition_probability(const SystemParams& p, const Drive& d,
                              ControlState s, double t) {
    const ConditionalFrame f = driven_frame(p, d, s);
    const double amp = std::sin(f.eta);
    const double osc = std::sin(0.5 * f.omega * t);
    return std::clamp(amp * amp * osc * osc, 0.0, 1.0);
}

double non_rabi_angle(const SystemParams& p, const Drive& d) {
    p.validate();
    d.validate();
    const double num = p.delta_b * d.v_b;
    const double den = 8.0 * p.coupling * p.eps_b;
    if (num == 0.0 && den == 0.0) {
        throw std::invalid_argument("non_rabi_angle: undefined amplitude angle");
    }
    return std::atan2(num, den);
}

ResonantFrequencies resonant_frequencies(const SystemParams& p) {
    const RwaContext ctx = rwa_context(p, Drive{});
    return {ctx.omega0_b + ctx.shift, ctx.omega0_b - ctx.shift};
}

OscillationPair resonant_pair(const SystemParams& p, double v_b,
                              ResonanceBranch branch) {
    const ResonantFrequencies res = resonant_frequencies(p);
    Drive d;
    d.v_b = v_b;
    d.omega = branch == ResonanceBranch::Plus ? res.plus_branch : res.minus_branch;
    const ControlState on = resonant_state(branch);
    return {driven_frame(p, d, on), driven_frame(p, d, other(on)), branch};
}

RegimeReport regime_check(const SystemParams& p, const Drive& d,
                          double threshold) {
    const RwaContext ctx = rwa_context(p, d);
    if (p.eps_a == 0.0 || d.v_b == 0.0) {
        throw std::invalid_argument("regime_check: zero denominator");
    }
    RegimeReport r;
    r.drive_shift_ratio = std::abs(p.eps_b * d.v_b) / (ctx.omega0_b * ctx.omega0_b);
    r.control_drive_ratio = std::abs(d.v_a / p.eps_a);
    r.coupling_drive_ratio = std::abs(2.0 * p.coupling / d.v_b);
    r.threshold = threshold;
    r.in_regime = r.drive_shift_ratio < threshold &&
                  r.control_drive_ratio < threshold &&
                  r.coupling_drive_ratio < threshold;
    return r;
}

} // namespace cqo
