#include "cqo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cqo/hamiltonian.hpp"

namespace cqo {

namespace {

using ops::Complex;

// Dormand-Prince 5(4) with FSAL. The step controller measures the embedded
// error per unit step so that long integrations keep the norm drift far
// below the monitoring bound.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33,
                 kA63 = 46732.0 / 5247, kA64 = 49.0 / 176,
                 kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;

double rotation_angle(const SystemParams& p) {
    if (p.eps_b == 0.0 && p.delta_b == 0.0) return 0.0;
    return std::atan2(p.delta_b, p.eps_b);
}

Eigen::Matrix2cd rotation(double eta) {
    const double c = std::cos(0.5 * eta), s = std::sin(0.5 * eta);
    Eigen::Matrix2cd u;
    u << c, -s,
         s, c;
    return u;
}

double fastest_period(const SystemParams& p, const Drive& d) {
    const double two_pi = 2.0 * M_PI;
    double period = std::numeric_limits<double>::infinity();
    if (d.omega > 0.0 && (d.v_a != 0.0 || d.v_b != 0.0)) {
        period = std::min(period, two_pi / d.omega);
    }
    const double omega0 = std::hypot(p.eps_b, p.delta_b);
    if (omega0 > 0.0) period = std::min(period, two_pi / omega0);
    return period;
}

// H(t) = h0 + cos(omega t) h1, dimension fixed at compile time.
template <int N>
struct HarmonicHamiltonian {
    Eigen::Matrix<Complex, N, N> h0;
    Eigen::Matrix<Complex, N, N> h1;
    double omega{0.0};

    Eigen::Matrix<Complex, N, 1> rhs(double t,
                                     const Eigen::Matrix<Complex, N, 1>& y) const {
        const Complex mi(0.0, -1.0);
        if (omega == 0.0) return mi * (h0 * y);
        return mi * (h0 * y + std::cos(omega * t) * (h1 * y));
    }
};

template <int N>
double error_norm(const Eigen::Matrix<Complex, N, 1>& err,
                  const Eigen::Matrix<Complex, N, 1>& y0,
                  const Eigen::Matrix<Complex, N, 1>& y1, double abs_tol,
                  double rel_tol) {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        const double scale =
            abs_tol + rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double e = std::abs(err[i]) / scale;
        acc += e * e;
    }
    return std::sqrt(acc / N);
}

template <int N>
EvolutionTrace integrate(const HarmonicHamiltonian<N>& ham,
                         const SystemParams& p, double period_hint,
                         const Eigen::Matrix<Complex, N, 1>& psi0,
                         double t_final, const IntegrationConfig& cfg) {
    using Vec = Eigen::Matrix<Complex, N, 1>;
    cfg.validate();
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
        throw std::invalid_argument("evolve: t_final must be finite and >= 0");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("evolve: psi0 must be normalized");
    }

    const double eta0 = rotation_angle(p);
    const Eigen::Matrix2cd u_rot = rotation(eta0);

    EvolutionTrace trace;
    auto record = [&](double t, const Vec& y) {
        trace.times.push_back(t);
        trace.states.push_back(y);
        Eigen::VectorXd lab(N), rot(N);
        for (int i = 0; i < N; ++i) lab[i] = std::norm(y[i]);
        for (int blk = 0; blk < N; blk += 2) {
            const Eigen::Vector2cd r = u_rot * y.template segment<2>(blk);
            rot[blk] = std::norm(r[0]);
            rot[blk + 1] = std::norm(r[1]);
        }
        trace.lab_populations.push_back(lab);
        trace.rotated_populations.push_back(rot);
    };

    record(0.0, psi0);
    if (t_final == 0.0) return trace;

    const double max_step_bound = cfg.max_step_fraction * period_hint;
    const double max_step =
        std::min(std::isfinite(max_step_bound) ? max_step_bound : t_final, t_final);

    Vec y = psi0;
    Vec k1 = ham.rhs(0.0, y), k2, k3, k4, k5, k6, k7;
    double t = 0.0;
    double h = max_step;

    const int grid = cfg.grid_points;
    for (int g = 1; g < grid; ++g) {
        const double target = t_final * static_cast<double>(g) / (grid - 1);
        while (t < target) {
            const double remaining = target - t;
            const double h_try = std::min({h, max_step, remaining});
            if (h_try < 1e-14 * std::max(1.0, std::abs(t))) {
                throw std::runtime_error(
                    "evolve: step size collapse at t = " + std::to_string(t));
            }

            k2 = ham.rhs(t + kC2 * h_try, y + h_try * (kA21 * k1));
            k3 = ham.rhs(t + kC3 * h_try, y + h_try * (kA31 * k1 + kA32 * k2));
            k4 = ham.rhs(t + kC4 * h_try,
                         y + h_try * (kA41 * k1 + kA42 * k2 + kA43 * k3));
            k5 = ham.rhs(t + kC5 * h_try, y + h_try * (kA51 * k1 + kA52 * k2 +
                                                       kA53 * k3 + kA54 * k4));
            k6 = ham.rhs(t + h_try, y + h_try * (kA61 * k1 + kA62 * k2 + kA63 * k3 +
                                                 kA64 * k4 + kA65 * k5));
            const Vec y_new = y + h_try * (kB1 * k1 + kB3 * k3 + kB4 * k4 +
                                           kB5 * k5 + kB6 * k6);
            k7 = ham.rhs(t + h_try, y_new);
            const Vec err = h_try * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 +
                                     kE6 * k6 + kE7 * k7);

            const double scaled =
                error_norm<N>(err, y, y_new, cfg.abs_tol, cfg.rel_tol);
            const double ratio = scaled / h_try;  // error per unit step
            if (ratio <= 1.0) {
                t = (h_try == remaining) ? target : t + h_try;
                y = y_new;
                k1 = k7;  // FSAL
                ++trace.accepted_steps;
                const double drift = std::abs(y.norm() - 1.0);
                trace.norm_drift = std::max(trace.norm_drift, drift);
                if (drift > cfg.max_norm_drift) {
                    throw std::runtime_error(
                        "evolve: norm drift " + std::to_string(drift) +
                        " exceeded bound at t = " + std::to_string(t));
                }
                const double grow =
                    ratio > 0.0 ? 0.9 * std::pow(ratio, -0.25) : 5.0;
                h = h_try * std::clamp(grow, 1.0, 5.0);
            } else {
                ++trace.rejected_steps;
                h = h_try * std::clamp(0.9 * std::pow(ratio, -0.25), 0.2, 0.9);
            }
        }
        record(target, y);
    }
    return trace;
}

} // namespace

EvolutionTrace evolve(const SystemParams& p, const Drive& d,
                      const ops::Vector4& psi0, double t_final,
                      const IntegrationConfig& cfg) {
    p.validate();
    d.validate();
    HarmonicHamiltonian<4> ham;
    ham.h0 = full_hamiltonian(p, Drive{}, 0.0);
    ham.h1 = 0.5 * d.v_a * ops::kron(ops::sigma_z(), ops::sigma_0()) +
             0.5 * d.v_b * ops::kron(ops::sigma_0(), ops::sigma_z());
    ham.omega = (d.v_a != 0.0 || d.v_b != 0.0) ? d.omega : 0.0;
    return integrate<4>(ham, p, fastest_period(p, d), psi0, t_final, cfg);
}

EvolutionTrace evolve_conditional(const SystemParams& p, const Drive& d,
                                  ControlState s, const ops::Vector2& psi0,
                                  double t_final, const IntegrationConfig& cfg) {
    p.validate();
    d.validate();
    HarmonicHamiltonian<2> ham;
    ham.h0 = conditional_hamiltonian(p, Drive{}, s, 0.0);
    ham.h1 = 0.5 * d.v_b * ops::sigma_z() +
             0.5 * control_sign(s) * d.v_a * ops::sigma_0();
    ham.omega = (d.v_a != 0.0 || d.v_b != 0.0) ? d.omega : 0.0;
    return integrate<2>(ham, p, fastest_period(p, d), psi0, t_final, cfg);
}

ops::Vector4 prepare_input(const SystemParams& p, ControlState s,
                           int rotated_index) {
    if (rotated_index != 0 && rotated_index != 1) {
        throw std::invalid_argument("prepare_input: rotated_index must be 0 or 1");
    }
    const Eigen::Matrix2cd u = rotation(rotation_angle(p));
    const Eigen::Vector2cd lab = u.adjoint() * Eigen::Vector2cd::Unit(rotated_index);
    ops::Vector4 psi = ops::Vector4::Zero();
    psi.segment<2>(s == ControlState::Up ? 0 : 2) = lab;
    return psi;
}

ProbabilityTable oracle_table(const SystemParams& p, const Drive& d, double t,
                              const IntegrationConfig& cfg) {
    if (p.delta_a != 0.0) {
        throw std::invalid_argument(
            "oracle_table: conditional table undefined for delta_a != 0");
    }
    ProbabilityTable table;
    table.at_time = t;
    const ControlState states[2] = {ControlState::Up, ControlState::Down};
    for (int row = 0; row < 4; ++row) {
        const ops::Vector4 psi0 = prepare_input(p, states[row / 2], row % 2);
        const EvolutionTrace trace = evolve(p, d, psi0, t, cfg);
        table.values.row(row) = trace.rotated_populations.back().transpose();
    }
    return table;
}

double oracle_transition(const SystemParams& p, const Drive& d, ControlState s,
                         double t, const IntegrationConfig& cfg) {
    if (p.delta_a != 0.0) {
        throw std::invalid_argument(
            "oracle_transition: conditional semantics require delta_a = 0");
    }
    const EvolutionTrace trace = evolve(p, d, prepare_input(p, s, 0), t, cfg);
    const int block = s == ControlState::Up ? 0 : 2;
    const auto& rot = trace.rotated_populations.back();
    const double block_norm = rot[block] + rot[block + 1];
    return block_norm > 0.0 ? rot[block + 1] / block_norm : 0.0;
}

SpectroscopyResult spectroscopy(const SystemParams& p, const Drive& drive_template,
                                double omega_min, double omega_max, int points,
                                const IntegrationConfig& cfg) {
    p.validate();
    drive_template.validate();
    if (p.delta_a != 0.0) {
        throw std::invalid_argument(
            "spectroscopy: conditional semantics require delta_a = 0");
    }
    if (!std::isfinite(omega_min) || !std::isfinite(omega_max) ||
        !(omega_min > 0.0) || !(omega_min < omega_max)) {
        throw std::invalid_argument("spectroscopy: need 0 < omega_min < omega_max");
    }
    if (points < 3) {
        throw std::invalid_argument("spectroscopy: need at least 3 sweep points");
    }
    const RwaContext ctx = rwa_context(p, drive_template);
    if (ctx.drive_strength == 0.0) {
        throw std::invalid_argument("spectroscopy: drive template has no Rabi drive");
    }
    const double rabi_period = 2.0 * M_PI / std::abs(ctx.drive_strength);

    // Both conditional blocks evolve independently for delta_a = 0, so one
    // integration from an equal-weight two-block state covers both branches.
    ops::Vector4 psi0 = (prepare_input(p, ControlState::Up, 0) +
                         prepare_input(p, ControlState::Down, 0)) /
                        std::sqrt(2.0);

    IntegrationConfig sweep_cfg = cfg;
    sweep_cfg.grid_points = 257;

    SpectroscopyResult result;
    result.omegas.resize(points);
    result.response.resize(points);
    for (int i = 0; i < points; ++i) {
        const double omega =
            omega_min + (omega_max - omega_min) * i / (points - 1.0);
        Drive d = drive_template;
        d.omega = omega;
        const EvolutionTrace trace = evolve(p, d, psi0, rabi_period, sweep_cfg);
        double best = 0.0;
        for (const auto& rot : trace.rotated_populations) {
            const double up = rot[1] / (rot[0] + rot[1]);
            const double down = rot[3] / (rot[2] + rot[3]);
            best = std::max({best, up, down});
        }
        result.omegas[i] = omega;
        result.response[i] = best;
    }

    for (int i = 1; i + 1 < points; ++i) {
        const double rm = result.response[i - 1], r0 = result.response[i],
                     rp = result.response[i + 1];
        if (r0 > rm && r0 >= rp) {
            const double denom = rm - 2.0 * r0 + rp;
            double shift = 0.0;
            if (denom < 0.0) shift = std::clamp(0.5 * (rm - rp) / denom, -0.5, 0.5);
            const double domega = (omega_max - omega_min) / (points - 1.0);
            result.peak_omegas.push_back(result.omegas[i] + shift * domega);
            result.peak_heights.push_back(r0);
        }
    }
    return result;
}

} // namespace cqo
