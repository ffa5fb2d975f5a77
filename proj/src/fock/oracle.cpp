#include "lhtl/fock/oracle.hpp"

#include "lhtl/errors.hpp"
#include "lhtl/fluctuation_nri.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace lhtl::fock {

namespace {

constexpr double kTiny = 1e-300;

// out = theta_eff * (a+ (x) a+ - a (x) a) in, truncated at dim.
void apply_generator(double theta_eff, int dim, const StateVector& in, StateVector& out) {
    out.assign(in.size(), cplx{});
    for (int na = 0; na < dim; ++na) {
        for (int nt = 0; nt < dim; ++nt) {
            cplx acc{};
            if (na >= 1 && nt >= 1)
                acc += std::sqrt(static_cast<double>(na) * nt) * in[(na - 1) * dim + (nt - 1)];
            if (na + 1 < dim && nt + 1 < dim)
                acc -= std::sqrt(static_cast<double>(na + 1) * (nt + 1)) *
                       in[(na + 1) * dim + (nt + 1)];
            out[static_cast<std::size_t>(na) * dim + nt] = theta_eff * acc;
        }
    }
}

double norm_sq(const StateVector& v) {
    double s = 0.0;
    for (const cplx& c : v)
        s += std::norm(c);
    return s;
}

int infer_dim(const StateVector& state) {
    const int dim = static_cast<int>(std::lround(std::sqrt(static_cast<double>(state.size()))));
    if (dim < 2 || static_cast<std::size_t>(dim) * dim != state.size())
        throw std::domain_error("state length is not a two-mode square dimension");
    return dim;
}

// w = j |state> for j = c (a e^{i phase} + a+ e^{-i phase}), physical mode only.
StateVector apply_current(const StateVector& state, int dim, double c, double phase) {
    const cplx lower_coeff = std::polar(c, phase);  // on a
    const cplx raise_coeff = std::polar(c, -phase); // on a+
    StateVector w(state.size(), cplx{});
    for (int na = 0; na < dim; ++na) {
        for (int nt = 0; nt < dim; ++nt) {
            cplx acc{};
            if (na + 1 < dim)
                acc += lower_coeff * std::sqrt(static_cast<double>(na + 1)) *
                       state[(na + 1) * dim + nt];
            if (na >= 1)
                acc += raise_coeff * std::sqrt(static_cast<double>(na)) *
                       state[(na - 1) * dim + nt];
            w[static_cast<std::size_t>(na) * dim + nt] = acc;
        }
    }
    return w;
}

void check_c_sq(double c_sq) {
    if (!(std::isfinite(c_sq) && c_sq > 0.0))
        throw std::domain_error("current oracle: c_sq must be finite and > 0");
}

} // namespace

StateVector thermal_fock_state(int n, int n_tilde, double theta, int dim, bool flip_sign) {
    if (dim < 2)
        throw std::domain_error("thermal_fock_state: dim must be >= 2");
    if (n < 0 || n_tilde < 0 || n >= dim || n_tilde >= dim)
        throw std::domain_error("thermal_fock_state: occupation outside the truncated space");
    if (!(std::isfinite(theta) && theta >= 0.0))
        throw std::domain_error("thermal_fock_state: theta must be finite and >= 0");

    StateVector v(static_cast<std::size_t>(dim) * dim, cplx{});
    v[static_cast<std::size_t>(n) * dim + n_tilde] = 1.0;
    if (theta == 0.0)
        return v;

    // One-norm bound theta*(2 dim - 3); scale the series argument below 1.
    const double norm_bound = theta * (2.0 * dim - 3.0);
    int squarings = 0;
    if (norm_bound > 1.0)
        squarings = static_cast<int>(std::ceil(std::log2(norm_bound)));
    if (squarings > 40)
        throw convergence_error("thermal_fock_state: theta too large to scale");
    const double theta_eff = (flip_sign ? -theta : theta) * std::ldexp(1.0, -squarings);
    const long reps = 1L << squarings;

    StateVector term(v.size()), next(v.size()), acc(v.size());
    for (long rep = 0; rep < reps; ++rep) {
        term = v;
        acc = v;
        for (int k = 1; k <= 64; ++k) {
            apply_generator(theta_eff, dim, term, next);
            const double inv_k = 1.0 / k;
            double term_sq = 0.0;
            for (std::size_t i = 0; i < term.size(); ++i) {
                term[i] = next[i] * inv_k;
                acc[i] += term[i];
                term_sq += std::norm(term[i]);
            }
            if (term_sq <= 1e-34 * norm_sq(acc))
                break;
        }
        v = acc;
    }
    return v;
}

double leakage(const StateVector& state, int dim) {
    if (dim < 2 || static_cast<std::size_t>(dim) * dim != state.size())
        throw std::domain_error("leakage: state length must equal dim^2");
    double weight = 0.0;
    for (int na = 0; na < dim; ++na)
        for (int nt = 0; nt < dim; ++nt)
            if (na == dim - 1 || nt == dim - 1)
                weight += std::norm(state[static_cast<std::size_t>(na) * dim + nt]);
    return weight;
}

double current_variance_oracle(const StateVector& state, double c_sq, double phase) {
    check_c_sq(c_sq);
    const int dim = infer_dim(state);
    const StateVector w = apply_current(state, dim, std::sqrt(c_sq), phase);
    double mean = 0.0; // <j> is real for the Hermitian current
    for (std::size_t i = 0; i < state.size(); ++i)
        mean += (std::conj(state[i]) * w[i]).real();
    return norm_sq(w) - mean * mean;
}

double current_mean_oracle(const StateVector& state, double c_sq, double phase) {
    check_c_sq(c_sq);
    const int dim = infer_dim(state);
    const StateVector w = apply_current(state, dim, std::sqrt(c_sq), phase);
    double mean = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i)
        mean += (std::conj(state[i]) * w[i]).real();
    return mean;
}

OracleReport oracle_report_from_theta(int n, int n_tilde, double theta,
                                      thermal::ThetaConvention convention,
                                      double leak_tol, int dim_cap) {
    if (n < 0 || n_tilde < 0)
        throw std::domain_error("oracle: occupations must be >= 0");
    if (!(std::isfinite(theta) && theta >= 0.0))
        throw std::domain_error("oracle: theta must be finite and >= 0");
    if (!(leak_tol > 0.0))
        throw std::domain_error("oracle: leak_tol must be > 0");

    int dim = std::max(n, n_tilde) + 16;
    StateVector state;
    double leak = 0.0;
    for (;;) {
        if (dim > dim_cap)
            throw convergence_error("oracle: leakage tolerance unreachable within dim cap");
        state = thermal_fock_state(n, n_tilde, theta, dim);
        leak = leakage(state, dim);
        if (leak < leak_tol)
            break;
        dim += 8;
    }

    OracleReport rep;
    rep.variance_oracle = current_variance_oracle(state, 1.0, 0.0);
    rep.leakage = leak;
    rep.convention = convention;
    rep.theta = theta;
    rep.dim_used = dim;

    const double tau = std::sinh(theta);
    const double mu = std::cosh(theta);
    rep.n0 = convention == thermal::ThetaConvention::Paper ? tau : tau * tau;
    rep.bracket_paper = nri::fluctuation_bracket(n, rep.n0);
    rep.bracket_bogoliubov_analytic =
        2.0 * (mu * mu * n + tau * tau * (n_tilde + 1.0)) + 1.0;
    rep.rel_diff_vs_paper = std::abs(rep.variance_oracle - rep.bracket_paper) /
                            std::max(std::abs(rep.bracket_paper), kTiny);
    rep.rel_diff_vs_analytic =
        std::abs(rep.variance_oracle - rep.bracket_bogoliubov_analytic) /
        std::max(std::abs(rep.bracket_bogoliubov_analytic), kTiny);
    return rep;
}

OracleReport oracle_vs_paper(const thermal::ThermalFockSpec& spec,
                             thermal::ThetaConvention convention,
                             const UnitSystem& units, double leak_tol, int dim_cap) {
    const double x = thermal::energy_ratio(spec.omega, spec.temperature, units);
    const double n0 = thermal::thermal_photon_number(x);
    const thermal::BogoliubovParams bogo = thermal::theta_from_n0(n0, convention);
    return oracle_report_from_theta(spec.n, spec.n_tilde, bogo.theta, convention,
                                    leak_tol, dim_cap);
}

std::string to_debug_json(const StateVector& state, int dim) {
    if (static_cast<std::size_t>(dim) * dim != state.size())
        throw std::domain_error("to_debug_json: state length must equal dim^2");
    nlohmann::json entries = nlohmann::json::array();
    for (const cplx& v : state)
        entries.push_back({v.real(), v.imag()});
    nlohmann::json j{{"dim", dim}, {"total_dim", dim * dim}, {"entries", entries}};
    return j.dump();
}

} // namespace lhtl::fock
