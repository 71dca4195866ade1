#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planarlab/flow.hpp"
#include "planarlab/linops.hpp"
#include "planarlab/polyalg.hpp"

namespace planarlab {

// Finite Fourier sum sum_k (c_k cos k.theta + s_k sin k.theta) with exact
// coefficients; no stored zero pairs.
class TrigPoly {
  public:
    TrigPoly() = default;

    static TrigPoly constant(const Rat& c);

    void add_harmonic(int k, const Rat& cos_coeff, const Rat& sin_coeff);

    bool is_zero() const { return harmonics_.empty(); }
    const std::map<int, std::pair<Rat, Rat>>& harmonics() const { return harmonics_; }

    TrigPoly& operator+=(const TrigPoly& o);
    friend TrigPoly operator*(const Rat& c, const TrigPoly& t);

    // Exact product with cos(theta) / sin(theta) via product-to-sum.
    TrigPoly times_cos() const;
    TrigPoly times_sin() const;

    double evaluate(double theta) const;

    // First nonzero coefficient in the order c_0, c_1, s_1, c_2, s_2, ...
    Rat leading_coefficient() const;

    bool operator==(const TrigPoly& o) const { return harmonics_ == o.harmonics_; }

  private:
    std::map<int, std::pair<Rat, Rat>> harmonics_;  // k -> (cos, sin); s_0 always 0
};

std::string format_trig(const TrigPoly& t);

// Exact polar form dr/dtheta = sum_k A_k(theta) r^k / sum_k B_k(theta) r^k,
// obtained from x = r cos, y = r sin: A carries x P + y Q and B carries
// (x Q - y P)/r, with the common power of r cancelled and the sign normalized
// so the leading coefficient of the lowest nonzero B_k is positive.
struct PolarForm {
    std::vector<TrigPoly> numerator;    // A_k, index = power of r
    std::vector<TrigPoly> denominator;  // B_k
    VectorField2 source;

    // Set when the lowest-order denominator coefficient changes sign or
    // vanishes in theta (the section fails to be transversal near r -> 0+).
    bool non_transversal = false;
    std::vector<double> denominator_zero_angles;  // in [0, 2pi)

    double numerator_at(double r, double theta) const;
    double denominator_at(double r, double theta) const;
    double slope(double r, double theta) const;  // dr/dtheta
};

PolarForm polar_reduce(const VectorField2& x);

// One turn of the scalar polar ODE dr/dtheta, with theta advancing 2pi in the
// direction given by the sign of theta-dot; used as the cross-check against
// the Cartesian return map.
double polar_return(const PolarForm& form, double r0, int theta_dot_sign,
                    const IntegratorConfig& cfg = {});

struct ReturnMapResult {
    double radius = 0.0;
    double time = 0.0;
    std::array<double, 2> point{};
};

// First return to the ray at angle alpha: integrates from
// (r0 cos alpha, r0 sin alpha) until the accumulated polar angle reaches
// +-2pi (sign fixed by theta-dot at the start).  Throws NonTransversalError
// when theta-dot vanishes or flips en route, plus flow errors.
ReturnMapResult return_map_detail(const VectorField2& x, double r0, double alpha = 0.0,
                                  const IntegratorConfig& cfg = {});
double return_map(const VectorField2& x, double r0, double alpha = 0.0,
                  const IntegratorConfig& cfg = {});

enum class Stability { kStable, kUnstable, kNonHyperbolic };

struct CycleInfo {
    double section_angle = 0.0;
    double radius = 0.0;      // fixed point r* of the return map
    double period = 0.0;
    double multiplier = 0.0;  // exp of the divergence integral over one period
    Stability stability = Stability::kNonHyperbolic;
    std::vector<std::array<double, 2>> samples;  // 256 points along the cycle
    double residual = 0.0;                       // |return_map(r*) - r*|
};

struct CenterBand {
    double r_lo = 0.0, r_hi = 0.0;
};

struct GridFailure {
    double radius = 0.0;
    std::string error;
};

struct CycleScan {
    std::vector<CycleInfo> cycles;       // ordered by radius
    std::vector<CenterBand> center_bands;
    std::vector<GridFailure> failures;   // per-grid-point integrator errors
};

inline constexpr int kScanGridPoints = 200;

// Scans the return displacement d(r) = return_map(r) - r on a uniform grid,
// brackets sign changes, bisects to 1e-10 and polishes, then builds the cycle
// record.  Runs of >= 3 consecutive grid points with |d| < 1e-9 are reported
// as center bands.  Outward finite-time escape at a grid point counts as
// positive displacement for bracketing purposes.
CycleScan find_cycles(const VectorField2& x, double r_min, double r_max,
                      const IntegratorConfig& cfg = {}, bool parallel = false,
                      double alpha = 0.0);

// exp of the divergence integral along the cycle over one period.
double multiplier(const VectorField2& x, const CycleInfo& cycle,
                  const IntegratorConfig& cfg = {});

// Tangency defect of Y along a cycle of X: max over the sampled points of
// |det(X, Y)| / (|X| |Y|), skipping points where either norm is below 1e-14.
double invariance_defect(const VectorField2& x, const CycleInfo& cycle_of_x,
                         const VectorField2& y);

}  // namespace planarlab
