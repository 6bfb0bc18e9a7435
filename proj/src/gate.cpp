#include "cqo/gate.hpp"

#include <cmath>

namespace cqo {

bool ProbabilityTable::rows_normalized(double tol) const {
    for (int r = 0; r < 4; ++r) {
        if (std::abs(values.row(r).sum() - 1.0) > tol) return false;
        for (int c = 0; c < 4; ++c) {
            if (values(r, c) < -tol || values(r, c) > 1.0 + tol) return false;
        }
    }
    return true;
}

bool ProbabilityTable::block_diagonal(double tol) const {
    return values.block<2, 2>(0, 2).cwiseAbs().maxCoeff() <= tol &&
           values.block<2, 2>(2, 0).cwiseAbs().maxCoeff() <= tol;
}

Eigen::Matrix4d GateTarget::table() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    const double s2 = std::pow(std::sin(0.5 * theta), 2);
    const double c2 = 1.0 - s2;
    switch (kind) {
        case Kind::CnotPlus:
            m.block<2, 2>(0, 0) << 0, 1, 1, 0;
            break;
        case Kind::CnotMinus:
            m.block<2, 2>(2, 2) << 0, 1, 1, 0;
            break;
        case Kind::CuPlus:
            m.block<2, 2>(0, 0) << c2, s2, s2, c2;
            break;
        case Kind::CuMinus:
            m.block<2, 2>(2, 2) << c2, s2, s2, c2;
            break;
    }
    return m;
}

namespace {

Eigen::Matrix2d conditional_block(double flip_probability) {
    Eigen::Matrix2d b;
    b << 1.0 - flip_probability, flip_probability,
         flip_probability, 1.0 - flip_probability;
    return b;
}

} // namespace

ProbabilityTable probability_table_rwa(const SystemParams& p, const Drive& d,
                                       double t) {
    ProbabilityTable table;
    table.at_time = t;
    table.values.setZero();
    table.values.block<2, 2>(0, 0) =
        conditional_block(transition_probability(p, d, ControlState::Up, t));
    table.values.block<2, 2>(2, 2) =
        conditional_block(transition_probability(p, d, ControlState::Down, t));
    return table;
}

FidelityReport fidelity(const ProbabilityTable& table, const GateTarget& target) {
    const double f = 0.25 * (table.values * target.table()).trace();
    return {f, 1.0 - f, table.at_time};
}

double matching_ratio(const MatchingIndices& idx) {
    idx.validate();
    return 2.0 * (idx.n + idx.l - 1) / (2.0 * idx.l - 1.0);
}

double vb_cnot(const SystemParams& p, const MatchingIndices& idx) {
    p.validate();
    idx.validate();
    if (p.delta_b == 0.0) {
        throw std::invalid_argument("vb_cnot: delta_b must be nonzero");
    }
    const double n = idx.n, l = idx.l;
    const double factor = (2.0 * l - 1.0) /
                          std::sqrt((2.0 * n - 1.0) * (2.0 * n + 4.0 * l - 3.0));
    return factor * 8.0 * p.coupling * p.eps_b / p.delta_b;
}

CnotFrequencies cnot_frequencies(const SystemParams& p,
                                 const MatchingIndices& idx) {
    idx.validate();
    const double omega0 = std::hypot(p.eps_b, p.delta_b);
    if (omega0 == 0.0) {
        throw std::invalid_argument("cnot_frequencies: qubit B splitting is zero");
    }
    const double n = idx.n, l = idx.l;
    const double root = std::sqrt((2.0 * n - 1.0) * (2.0 * n + 4.0 * l - 3.0));
    const double base = 4.0 * p.coupling * p.eps_b / omega0;
    return {(2.0 * l - 1.0) / root * base, 2.0 * (n + l - 1.0) / root * base};
}

std::vector<double> operation_times(double omega_r, int l, int count) {
    if (!(omega_r > 0.0)) {
        throw std::invalid_argument("operation_times: omega_r must be > 0");
    }
    if (l < 1) {
        throw std::invalid_argument("operation_times: l must be >= 1");
    }
    const double period = 2.0 * M_PI / omega_r;
    std::vector<double> times;
    times.reserve(std::max(count, 0));
    for (int k = l; k < l + count; ++k) {
        times.push_back((k - 0.5) * period);
    }
    return times;
}

double cu_suppression(const MatchingIndices& idx) {
    idx.validate();
    const double ratio = (2.0 * idx.l - 1.0) / (idx.n + idx.l - 1.0);
    return 0.25 * ratio * ratio;
}

CuTruthTable cu_truth_table(const SystemParams& p, const Drive& d,
                            ResonanceBranch branch, double t,
                            double suppression_threshold) {
    const OscillationPair pair = resonant_pair(p, d.v_b, branch);
    const double amp = std::pow(std::sin(pair.non_rabi.eta), 2);

    CuTruthTable out;
    out.non_rabi_amplitude = amp;
    out.within_suppression = amp < suppression_threshold;
    out.table.at_time = t;
    out.table.values.setZero();

    const double flip = std::pow(std::sin(0.5 * pair.rabi.omega * t), 2);
    const int active = branch == ResonanceBranch::Plus ? 0 : 2;
    const int idle = 2 - active;
    out.table.values.block<2, 2>(active, active) = conditional_block(flip);
    out.table.values.block<2, 2>(idle, idle).setIdentity();
    return out;
}

} // namespace cqo
