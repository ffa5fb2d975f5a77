#pragma once

#include "lhtl/fluctuation_nri.hpp"
#include "lhtl/thermal_state.hpp"
#include "lhtl/units.hpp"

#include <string>
#include <vector>

namespace lhtl::sweep {

enum class SweepAxis { Temperature, Omega, PhotonN, Dj2 };
enum class AxisScale { Linear, Log };

std::string axis_name(SweepAxis axis);

/// Full parameter record a sweep point is evaluated from; the axis and the
/// series parameter overwrite their slots per point. omega is rad/s — any
/// cyclic input has already been converted at ingestion, and
/// freq_convention only records which convention that was.
struct FixedParams {
    UnitSystem units = UnitSystem::si();
    double omega = 1.0; // rad/s
    double temperature = 1.0;
    int n = 0;
    double dj2 = 1.0;
    double z0 = 1.0;
    double z_char = 1.0;
    nri::NriMethod method = nri::NriMethod::Eq11;
    thermal::ThetaConvention convention = thermal::ThetaConvention::Paper;
    FrequencyConvention freq_convention = FrequencyConvention::Angular;
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::Temperature;
    double from = 0.0;
    double to = 0.0;
    int points = 2;
    AxisScale scale = AxisScale::Linear;
    FixedParams fixed;
    SweepAxis series_param = SweepAxis::Dj2; // must differ from axis
    std::vector<double> series;              // empty: single series at the fixed value
    std::string name;                        // used for output file naming
    std::vector<std::string> notes;          // extra metadata comment lines
};

/// Columns: axis, series, x, n0, n_r, bracket, ok. Row order is series-outer,
/// axis-inner; points that fail domain checks become NaN rows with ok = 0.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    SweepSpec meta;
    std::vector<std::string> meta_lines; // emitted as "# ..." comments
};

enum class FigurePreset { Fig2, Fig3, Fig4 };

/// Preset sweep families behind the temperature / frequency / photon-number
/// studies: one spec per series value, sharing the fixed record.
std::vector<SweepSpec> figure_preset(FigurePreset which);

SweepTable run_sweep(const SweepSpec& spec);

/// Concatenates tables with identical columns into one multi-series table.
SweepTable merge_tables(const std::vector<SweepTable>& tables);

} // namespace lhtl::sweep
