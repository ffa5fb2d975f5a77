#pragma once

#include "lhtl/sweep/sweep.hpp"

#include <string>

namespace lhtl::sweep {

struct SvgStyle {
    int width = 800;
    int height = 520;
    int margin_left = 80;
    int margin_right = 24;
    int margin_top = 24;
    int margin_bottom = 56;
};

/// One polyline per series, axes with min/max labels, the n_r column on the
/// vertical axis. Non-finite rows are skipped and leave a gap. Deterministic
/// text output (SVG 1.1 subset: polyline, line, text, rect).
std::string render_svg(const SweepTable& table, const SvgStyle& style = {});

} // namespace lhtl::sweep
