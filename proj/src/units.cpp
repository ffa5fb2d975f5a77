#include "lhtl/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lhtl {

const UnitSystem& UnitSystem::si() {
    static const UnitSystem u{UnitKind::Si, 1.054571817e-34, 1.380649e-23};
    return u;
}

const UnitSystem& UnitSystem::natural() {
    static const UnitSystem u{UnitKind::Natural, 1.0, 1.0};
    return u;
}

double to_angular(const FrequencySpec& f) {
    if (std::isnan(f.value) || f.value < 0.0)
        throw std::domain_error("to_angular: frequency value must be >= 0");
    if (f.convention == FrequencyConvention::Angular)
        return f.value;
    return 2.0 * std::numbers::pi * f.value;
}

} // namespace lhtl
