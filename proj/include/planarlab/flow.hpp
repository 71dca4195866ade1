#pragma once

#include <array>
#include <functional>
#include <vector>

#include "planarlab/errors.hpp"
#include "planarlab/polyalg.hpp"

namespace planarlab {

struct IntegratorConfig {
    double rtol = 1e-10;
    double atol = 1e-12;
    double initial_step = 0.0;  // 0 = choose automatically
    double max_step = 0.0;      // 0 = unbounded
    long max_steps = 10'000'000;
};

inline constexpr double kBlowupThreshold = 1e12;

// Polynomial compiled for fast double evaluation.
class PolyEval {
  public:
    PolyEval() = default;
    explicit PolyEval(const Poly2& p);
    double operator()(double x, double y) const;

  private:
    struct Term {
        int i, j;
        double c;
    };
    std::vector<Term> terms_;
};

namespace detail {

// One accepted Dormand-Prince 5(4) step with the stage values needed for the
// quartic dense-output interpolant.
struct StepRecord {
    double t0 = 0, h = 0;
    std::vector<double> y0, y1;
    std::array<std::vector<double>, 7> k;
};

void dense_eval(const StepRecord& s, double t, std::vector<double>& out);

using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dy)>;

enum class StepAction { kContinue, kStop };
using StepCallback = std::function<StepAction(const StepRecord&)>;

// Drives the integration from t0 until t_end (or until the callback stops it).
// Throws BlowupError / StepLimitError.
void integrate_adaptive(const OdeRhs& f, double t0, std::vector<double> y0, double t_end,
                        const IntegratorConfig& cfg, const StepCallback& on_step);

}  // namespace detail

// Numerical trajectory of a planar field with dense output.
class Trajectory {
  public:
    const std::vector<double>& times() const { return times_; }
    const std::vector<std::array<double, 2>>& states() const { return states_; }
    double t_end() const { return times_.empty() ? 0.0 : times_.back(); }

    // State at any time inside the integrated span.
    std::array<double, 2> state_at(double t) const;

  private:
    friend Trajectory integrate(const VectorField2&, std::array<double, 2>, double,
                                const IntegratorConfig&);
    std::vector<double> times_;
    std::vector<std::array<double, 2>> states_;
    std::vector<detail::StepRecord> segments_;
};

Trajectory integrate(const VectorField2& x, std::array<double, 2> start, double duration,
                     const IntegratorConfig& cfg = {});

// Scalar event functions from a fixed catalog.  `direction` is the sign of
// the crossing: +1 for negative-to-positive, -1 for the reverse, 0 for either.
struct EventSpec {
    enum class Kind { kPolarAngle, kCoordinate, kPolyZero };

    Kind kind = Kind::kCoordinate;
    double target = 0.0;  // polar-angle progress target (signed radians)
    int coordinate = 1;   // 0 = x, 1 = y
    double value = 0.0;   // coordinate crossing level
    Poly2 poly;           // zero set for kPolyZero
    int direction = 0;

    static EventSpec polar_angle_progress(double target, int direction = 0);
    static EventSpec coordinate_crossing(int coordinate, double value, int direction = 0);
    static EventSpec poly_zero(Poly2 g, int direction = 0);
};

struct EventResult {
    std::array<double, 2> point{};
    double time = 0.0;
};

// Integrates until the event function crosses zero in the requested
// direction; the crossing time is bracketed on dense output to 1e-12.
// Throws NoEventError if no crossing occurs before t_max.
EventResult flow_to_event(const VectorField2& x, std::array<double, 2> start,
                          const EventSpec& event, const IntegratorConfig& cfg = {},
                          double t_max = 1e3);

// Integral of g along the trajectory over [0, duration], carried as an
// augmented state under the same error control.
double quadrature_along(const VectorField2& x, std::array<double, 2> start, const Poly2& g,
                        double duration, const IntegratorConfig& cfg = {});

}  // namespace planarlab
