#include "lhtl/sweep/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace lhtl::sweep {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double fixed_value(const FixedParams& p, SweepAxis which) {
    switch (which) {
    case SweepAxis::Temperature: return p.temperature;
    case SweepAxis::Omega: return p.omega;
    case SweepAxis::PhotonN: return static_cast<double>(p.n);
    case SweepAxis::Dj2: return p.dj2;
    }
    return 0.0;
}

void set_value(FixedParams& p, SweepAxis which, double v) {
    switch (which) {
    case SweepAxis::Temperature: p.temperature = v; break;
    case SweepAxis::Omega: p.omega = v; break;
    case SweepAxis::PhotonN: p.n = static_cast<int>(std::llround(v)); break;
    case SweepAxis::Dj2: p.dj2 = v; break;
    }
}

void validate(const SweepSpec& s) {
    if (!(s.from < s.to))
        throw std::domain_error("sweep spec: from must be < to");
    if (s.points < 2)
        throw std::domain_error("sweep spec: points must be >= 2");
    if (s.axis == s.series_param)
        throw std::domain_error("sweep spec: series parameter must differ from the axis");
    if (s.scale == AxisScale::Log && !(s.from > 0.0))
        throw std::domain_error("sweep spec: log scale requires from > 0");
}

std::vector<double> axis_values(const SweepSpec& s) {
    std::vector<double> vals(s.points);
    if (s.scale == AxisScale::Linear) {
        const double step = (s.to - s.from) / (s.points - 1);
        for (int i = 0; i < s.points; ++i)
            vals[i] = s.from + step * i;
    } else {
        const double lf = std::log(s.from);
        const double step = (std::log(s.to) - lf) / (s.points - 1);
        for (int i = 0; i < s.points; ++i)
            vals[i] = std::exp(lf + step * i);
    }
    vals.front() = s.from;
    vals.back() = s.to;
    if (s.axis == SweepAxis::PhotonN)
        for (double& v : vals)
            v = static_cast<double>(std::llround(v)); // integer-stepped axis
    return vals;
}

std::vector<double> evaluate_row(const FixedParams& p, double axis_v, double series_v) {
    try {
        const thermal::ThermalFockSpec spec{p.n, p.n, p.temperature, p.omega};
        const nri::CellContext ctx{p.z0, p.z_char, p.omega, std::nullopt};
        const nri::NriResult r = p.method == nri::NriMethod::Eq11
                                     ? nri::nri_eq11(p.dj2, spec, ctx, p.units)
                                     : nri::nri_chain(p.dj2, spec, ctx, p.units);
        const double bracket = nri::fluctuation_bracket(p.n, r.n0);
        std::vector<double> row{axis_v, series_v, r.x, r.n0, r.n_r, bracket, 1.0};
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (!std::isfinite(row[i]))
                row.back() = 0.0;
        return row;
    } catch (const std::domain_error&) {
        return {axis_v, series_v, kNan, kNan, kNan, kNan, 0.0};
    }
}

std::vector<std::string> make_meta_lines(const SweepSpec& s) {
    std::vector<std::string> lines;
    if (!s.name.empty())
        lines.push_back("name=" + s.name);
    lines.push_back(
        std::string("units=") + (s.fixed.units.kind == UnitKind::Si ? "si" : "natural") +
        " method=" + (s.fixed.method == nri::NriMethod::Eq11 ? "eq11" : "chain") +
        " theta-convention=" +
        (s.fixed.convention == thermal::ThetaConvention::Paper ? "paper" : "standard") +
        " freq-convention=" +
        (s.fixed.freq_convention == FrequencyConvention::Angular ? "angular" : "cyclic"));
    lines.push_back("axis=" + axis_name(s.axis) + " from=" + fmt_g(s.from) +
                    " to=" + fmt_g(s.to) + " points=" + std::to_string(s.points) +
                    " scale=" + (s.scale == AxisScale::Linear ? "linear" : "log"));
    std::string series_line = "series " + axis_name(s.series_param) + "=";
    if (s.series.empty()) {
        series_line += fmt_g(fixed_value(s.fixed, s.series_param));
    } else {
        for (std::size_t i = 0; i < s.series.size(); ++i)
            series_line += (i ? "," : "") + fmt_g(s.series[i]);
    }
    lines.push_back(series_line);

    std::string fixed_line = "fixed";
    for (SweepAxis w : {SweepAxis::Temperature, SweepAxis::Omega, SweepAxis::PhotonN,
                        SweepAxis::Dj2}) {
        if (w == s.axis || w == s.series_param)
            continue;
        fixed_line += " " + axis_name(w) + "=" + fmt_g(fixed_value(s.fixed, w));
    }
    fixed_line += " z0=" + fmt_g(s.fixed.z0) + " zl=" + fmt_g(s.fixed.z_char);
    lines.push_back(fixed_line);

    for (const std::string& n : s.notes)
        lines.push_back("note: " + n);
    return lines;
}

} // namespace

std::string axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::Temperature: return "temperature";
    case SweepAxis::Omega: return "omega";
    case SweepAxis::PhotonN: return "n";
    case SweepAxis::Dj2: return "dj2";
    }
    return "?";
}

std::vector<SweepSpec> figure_preset(FigurePreset which) {
    const double omega_2ghz = to_angular({2e9, FrequencyConvention::Cyclic});

    FixedParams base;
    base.units = UnitSystem::si();
    base.freq_convention = FrequencyConvention::Cyclic;
    base.omega = omega_2ghz;
    base.z0 = 1e-3;
    base.z_char = 50.0;
    base.method = nri::NriMethod::Eq11;
    base.convention = thermal::ThetaConvention::Paper;

    std::vector<SweepSpec> specs;
    switch (which) {
    case FigurePreset::Fig2: {
        base.n = 10;
        base.temperature = 0.1;
        for (double dj2 : {50.0, 100.0, 200.0, 400.0, 600.0}) {
            SweepSpec s;
            s.axis = SweepAxis::Temperature;
            s.from = 0.1;
            s.to = 400.0;
            s.points = 120;
            s.fixed = base;
            s.fixed.dj2 = dj2;
            s.series_param = SweepAxis::Dj2;
            s.series = {dj2};
            s.name = "fig2";
            s.notes = {"omega-input-hz=2e+09 (cyclic)"};
            specs.push_back(std::move(s));
        }
        break;
    }
    case FigurePreset::Fig3: {
        base.n = 50;
        base.dj2 = 100.0;
        for (double t : {10.0, 50.0, 100.0, 200.0}) {
            SweepSpec s;
            s.axis = SweepAxis::Omega;
            s.from = to_angular({3e7, FrequencyConvention::Cyclic});
            s.to = to_angular({3e9, FrequencyConvention::Cyclic});
            s.points = 100;
            s.fixed = base;
            s.fixed.temperature = t;
            s.series_param = SweepAxis::Temperature;
            s.series = {t};
            s.name = "fig3";
            s.notes = {"axis-input-hz=3e+07..3e+09 (cyclic)"};
            specs.push_back(std::move(s));
        }
        break;
    }
    case FigurePreset::Fig4: {
        base.n = 0;
        base.dj2 = 100.0;
        for (double t : {0.1, 0.5, 1.0, 2.0}) {
            SweepSpec s;
            s.axis = SweepAxis::PhotonN;
            s.from = 0.0;
            s.to = 100.0;
            s.points = 101;
            s.fixed = base;
            s.fixed.temperature = t;
            s.series_param = SweepAxis::Temperature;
            s.series = {t};
            s.name = "fig4";
            s.notes = {"omega-input-hz=2e+09 (cyclic)"};
            specs.push_back(std::move(s));
        }
        break;
    }
    }
    return specs;
}

SweepTable run_sweep(const SweepSpec& spec) {
    validate(spec);
    SweepTable t;
    t.columns = {axis_name(spec.axis), axis_name(spec.series_param),
                 "x",   "n0",          "n_r",
                 "bracket", "ok"};
    t.meta = spec;
    t.meta_lines = make_meta_lines(spec);

    const std::vector<double> series =
        spec.series.empty() ? std::vector<double>{fixed_value(spec.fixed, spec.series_param)}
                            : spec.series;
    const std::vector<double> axis_vals = axis_values(spec);

    t.rows.reserve(series.size() * axis_vals.size());
    for (double sv : series) {
        for (double av : axis_vals) {
            FixedParams p = spec.fixed;
            set_value(p, spec.series_param, sv);
            set_value(p, spec.axis, av);
            t.rows.push_back(evaluate_row(p, av, sv));
        }
    }
    return t;
}

SweepTable merge_tables(const std::vector<SweepTable>& tables) {
    if (tables.empty())
        throw std::domain_error("merge_tables: nothing to merge");
    SweepTable out = tables.front();
    for (std::size_t i = 1; i < tables.size(); ++i) {
        if (tables[i].columns != out.columns)
            throw std::domain_error("merge_tables: column mismatch");
        out.rows.insert(out.rows.end(), tables[i].rows.begin(), tables[i].rows.end());
        out.meta.series.insert(out.meta.series.end(), tables[i].meta.series.begin(),
                               tables[i].meta.series.end());
    }
    out.meta_lines = make_meta_lines(out.meta);
    return out;
}

} // namespace lhtl::sweep
