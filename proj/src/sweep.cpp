#include "cqo/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cqo {

SyncResult find_sync(const SystemParams& p, const MatchingIndices& idx,
                     Backend backend, ResonanceBranch branch,
                     const IntegrationConfig& cfg) {
    idx.validate();
    if (p.delta_b == 0.0 || p.coupling == 0.0 || p.eps_b == 0.0) {
        throw std::invalid_argument(
            "find_sync: synchronization needs nonzero delta_b, eps_b and coupling");
    }

    SyncResult result;
    result.indices = idx;
    result.branch = branch;
    result.v_b = vb_cnot(p, idx);
    const CnotFrequencies freqs = cnot_frequencies(p, idx);
    result.omega_r = freqs.rabi;
    result.omega_nr = freqs.non_rabi;
    result.t_op = operation_times(std::abs(freqs.rabi), idx.l, 1).front();

    const ResonantFrequencies res = resonant_frequencies(p);
    result.omega =
        branch == ResonanceBranch::Plus ? res.plus_branch : res.minus_branch;

    Drive d;
    d.v_b = result.v_b;
    d.omega = result.omega;

    const GateTarget target = branch == ResonanceBranch::Plus
                                  ? GateTarget::cnot_plus()
                                  : GateTarget::cnot_minus();
    result.fidelity_rwa =
        fidelity(probability_table_rwa(p, d, result.t_op), target).fidelity;
    if (backend == Backend::NumericOracle) {
        result.fidelity_oracle =
            fidelity(oracle_table(p, d, result.t_op, cfg), target).fidelity;
    }
    result.regime = regime_check(p, d);
    return result;
}

double solve_vb_numeric(const SystemParams& p, const MatchingIndices& idx,
                        double v_upper) {
    idx.validate();
    if (p.delta_b == 0.0 || p.coupling == 0.0 || p.eps_b == 0.0) {
        throw std::invalid_argument("solve_vb_numeric: degenerate parameters");
    }
    const double ratio = matching_ratio(idx);
    auto mismatch = [&](double v_b) {
        const OscillationPair pair = resonant_pair(p, v_b, ResonanceBranch::Plus);
        return pair.non_rabi.omega - ratio * pair.rabi.omega;
    };

    double hi = v_upper > 0.0
                    ? v_upper
                    : 10.0 * std::abs(8.0 * p.coupling * p.eps_b / p.delta_b);
    if (!(mismatch(hi) < 0.0)) {
        throw std::invalid_argument("solve_vb_numeric: no sign change in bracket");
    }
    // mismatch(0+) = (ratio? no: ) 2|shift| > 0, so the root is bracketed.
    double lo = 0.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mismatch(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void SweepSpec::validate() const {
    static const std::set<std::string> known = {"v_b", "omega",  "t",
                                                "j",   "eps_b", "delta_b"};
    if (axes.empty()) {
        throw std::invalid_argument("SweepSpec: at least one axis required");
    }
    std::set<std::string> seen;
    for (const auto& axis : axes) {
        if (!known.count(axis.name)) {
            throw std::invalid_argument("SweepSpec: unknown axis '" + axis.name + "'");
        }
        if (!seen.insert(axis.name).second) {
            throw std::invalid_argument("SweepSpec: duplicate axis '" + axis.name + "'");
        }
        if (axis.points < 1) {
            throw std::invalid_argument("SweepSpec: axis points must be >= 1");
        }
        if (axis.points > 1 && !(axis.min < axis.max)) {
            throw std::invalid_argument("SweepSpec: axis needs min < max");
        }
        if (axis.log_scale && !(axis.min > 0.0)) {
            throw std::invalid_argument("SweepSpec: log axis needs min > 0");
        }
    }
}

namespace {

double axis_value(const SweepAxis& axis, int i) {
    if (axis.points == 1) return axis.min;
    const double f = static_cast<double>(i) / (axis.points - 1);
    if (axis.log_scale) {
        return axis.min * std::pow(axis.max / axis.min, f);
    }
    return axis.min + (axis.max - axis.min) * f;
}

struct EvalPoint {
    SystemParams p;
    Drive d;
    double t;
};

void apply_axis(EvalPoint& pt, const std::string& name, double value) {
    if (name == "v_b") pt.d.v_b = value;
    else if (name == "omega") pt.d.omega = value;
    else if (name == "t") pt.t = value;
    else if (name == "j") pt.p.coupling = value;
    else if (name == "eps_b") pt.p.eps_b = value;
    else if (name == "delta_b") pt.p.delta_b = value;
}

double evaluate(const EvalPoint& pt, const SweepSpec& spec) {
    const SweepObjective& obj = spec.objective;
    if (obj.kind == SweepObjective::Kind::Fidelity) {
        const ProbabilityTable table =
            spec.backend == Backend::RwaClosedForm
                ? probability_table_rwa(pt.p, pt.d, pt.t)
                : oracle_table(pt.p, pt.d, pt.t, spec.integration);
        return fidelity(table, obj.target).fidelity;
    }
    if (spec.backend == Backend::RwaClosedForm) {
        return transition_probability(pt.p, pt.d, obj.control, pt.t);
    }
    return oracle_transition(pt.p, pt.d, obj.control, pt.t, spec.integration);
}

} // namespace

SweepGrid sweep(const SystemParams& p, const Drive& drive_template,
                const SweepSpec& spec) {
    p.validate();
    drive_template.validate();
    spec.validate();

    std::size_t total = 1;
    for (const auto& axis : spec.axes) total *= static_cast<std::size_t>(axis.points);

    SweepGrid grid;
    grid.axes = spec.axes;
    grid.coordinates.reserve(total);
    grid.values.reserve(total);

    std::vector<int> index(spec.axes.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        EvalPoint pt{p, drive_template, spec.base_time};
        std::vector<double> coords(spec.axes.size());
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            coords[a] = axis_value(spec.axes[a], index[a]);
            apply_axis(pt, spec.axes[a].name, coords[a]);
        }
        grid.coordinates.push_back(std::move(coords));
        try {
            grid.values.push_back(evaluate(pt, spec));
        } catch (const std::exception&) {
            grid.values.push_back(std::nullopt);
        }
        // row-major increment, last axis fastest
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            if (++index[a] < spec.axes[a].points) break;
            index[a] = 0;
        }
    }
    return grid;
}

BestPoint best_operation_point(const SweepGrid& grid,
                               const std::optional<SweepWindow>& window) {
    if (grid.values.empty()) {
        throw std::invalid_argument("best_operation_point: empty grid");
    }
    auto axis_index = [&](const std::string& name) -> int {
        for (std::size_t a = 0; a < grid.axes.size(); ++a) {
            if (grid.axes[a].name == name) return static_cast<int>(a);
        }
        return -1;
    };
    const int window_axis = window ? axis_index(window->axis) : -1;
    if (window && window_axis < 0) {
        throw std::invalid_argument("best_operation_point: window axis '" +
                                    window->axis + "' not in grid");
    }
    const int t_axis = axis_index("t");
    const int vb_axis = axis_index("v_b");

    auto tie_key = [&](std::size_t i) {
        const double t = t_axis >= 0 ? grid.coordinates[i][t_axis] : 0.0;
        const double vb = vb_axis >= 0 ? grid.coordinates[i][vb_axis] : 0.0;
        return std::pair<double, double>(t, vb);
    };

    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        if (!grid.values[i]) continue;
        if (window) {
            const double x = grid.coordinates[i][window_axis];
            if (x < window->min || x > window->max) continue;
        }
        if (!best || *grid.values[i] > *grid.values[*best] ||
            (*grid.values[i] == *grid.values[*best] && tie_key(i) < tie_key(*best))) {
            best = i;
        }
    }
    if (!best) {
        throw std::runtime_error("best_operation_point: no evaluated points in window");
    }
    return {grid.coordinates[*best], *grid.values[*best], *best};
}

} // namespace cqo
