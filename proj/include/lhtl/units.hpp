#pragma once

namespace lhtl {

enum class UnitKind { Si, Natural };

/// Physical constants of the active unit system.
///
/// Si carries the CODATA-2018 exact values; Natural sets hbar = k_B = 1 so
/// the energy ratio hbar*omega/(k_B*T) reduces to omega/T.
struct UnitSystem {
    UnitKind kind = UnitKind::Si;
    double hbar = 1.054571817e-34;     // J*s
    double k_boltzmann = 1.380649e-23; // J/K

    static const UnitSystem& si();
    static const UnitSystem& natural();
};

enum class FrequencyConvention { Angular, Cyclic };

/// A frequency value together with the convention it is expressed in.
/// The 2*pi conversion happens exactly once, at ingestion (to_angular).
struct FrequencySpec {
    double value = 0.0;
    FrequencyConvention convention = FrequencyConvention::Angular;
};

/// Value of `f` in rad/s. Throws std::domain_error for negative input.
double to_angular(const FrequencySpec& f);

} // namespace lhtl
