#include "planarlab/flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace planarlab {

PolyEval::PolyEval(const Poly2& p) {
    terms_.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) terms_.push_back({m.e[0], m.e[1], rat_to_double(c)});
}

double PolyEval::operator()(double x, double y) const {
    double acc = 0.0;
    for (const Term& t : terms_) {
        double v = t.c;
        for (int k = 0; k < t.i; ++k) v *= x;
        for (int k = 0; k < t.j; ++k) v *= y;
        acc += v;
    }
    return acc;
}

namespace detail {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
// b (5th order) equals the a7 row; e holds b - bhat for the embedded estimate.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// Quartic dense-output weights.
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

double rms_scaled(const std::vector<double>& v, const std::vector<double>& scale) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double q = v[i] / scale[i];
        acc += q * q;
    }
    return std::sqrt(acc / static_cast<double>(v.size()));
}

double initial_step_guess(const OdeRhs& f, double t0, const std::vector<double>& y0,
                          const std::vector<double>& f0, const IntegratorConfig& cfg,
                          double span) {
    const std::size_t n = y0.size();
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) scale[i] = cfg.atol + cfg.rtol * std::abs(y0[i]);
    const double dy0 = rms_scaled(y0, scale);
    const double dy1 = rms_scaled(f0, scale);
    double h0 = (dy0 < 1e-5 || dy1 < 1e-5) ? 1e-6 : 0.01 * dy0 / dy1;
    h0 = std::min(h0, span);

    std::vector<double> y1(n), f1(n), df(n);
    for (std::size_t i = 0; i < n; ++i) y1[i] = y0[i] + h0 * f0[i];
    f(t0 + h0, y1, f1);
    for (std::size_t i = 0; i < n; ++i) df[i] = f1[i] - f0[i];
    const double d2 = rms_scaled(df, scale) / h0;

    double h1;
    const double dmax = std::max(dy1, d2);
    if (dmax <= 1e-15)
        h1 = std::max(1e-6, h0 * 1e-3);
    else
        h1 = std::pow(0.01 / dmax, 0.2);
    return std::min({100.0 * h0, h1, span});
}

}  // namespace

void dense_eval(const StepRecord& s, double t, std::vector<double>& out) {
    const std::size_t n = s.y0.size();
    out.resize(n);
    const double th = (t - s.t0) / s.h;
    const double th1 = 1.0 - th;
    for (std::size_t i = 0; i < n; ++i) {
        const double ydiff = s.y1[i] - s.y0[i];
        const double r3 = s.h * s.k[0][i] - ydiff;
        const double r4 = ydiff - s.h * s.k[6][i] - r3;
        const double r5 = s.h * (d1 * s.k[0][i] + d3 * s.k[2][i] + d4 * s.k[3][i] +
                                 d5 * s.k[4][i] + d6 * s.k[5][i] + d7 * s.k[6][i]);
        out[i] = s.y0[i] + th * (ydiff + th1 * (r3 + th * (r4 + th1 * r5)));
    }
}

void integrate_adaptive(const OdeRhs& f, double t0, std::vector<double> y0, double t_end,
                        const IntegratorConfig& cfg, const StepCallback& on_step) {
    if (!(cfg.rtol > 0) || !(cfg.atol > 0))
        throw std::invalid_argument("integrator tolerances must be positive");
    if (!(t_end > t0)) throw std::invalid_argument("integration span must be positive");
    for (double v : y0)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite initial state");

    const std::size_t n = y0.size();
    const double span = t_end - t0;
    const double hmax = cfg.max_step > 0 ? cfg.max_step : span;

    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    std::vector<double> ytmp(n), y1(n), err(n), scale(n);

    double t = t0;
    f(t, y0, k1);
    double h = cfg.initial_step > 0 ? std::min(cfg.initial_step, hmax)
                                    : initial_step_guess(f, t, y0, k1, cfg, hmax);

    // PI step-size controller.
    constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
    double facold = 1e-4;
    long accepted = 0;

    bool last = false;
    while (!last) {
        if (t + h >= t_end) {
            h = t_end - t;
            last = true;
        }
        if (!(h > std::abs(t) * 1e-16) || !(h > 0)) {
            // Step size underflow.  If the state is already huge this is a
            // finite-time escape too steep for the norm threshold to catch
            // (the state outruns the resolvable time axis); report it as such.
            double ymax = 0.0;
            for (double v : y0) ymax = std::max(ymax, std::abs(v));
            if (ymax > 1e6) throw BlowupError(t);
            throw StepLimitError();
        }

        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y0[i] + h * a21 * k1[i];
        f(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y0[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y0[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y0[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] =
                y0[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(t + h, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            y1[i] =
                y0[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        f(t + h, y1, k7);

        for (std::size_t i = 0; i < n; ++i) {
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
            scale[i] = cfg.atol + cfg.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        }
        const double errnorm = rms_scaled(err, scale);

        const double fac11 = std::pow(std::max(errnorm, 1e-32), expo1);
        if (errnorm <= 1.0) {
            for (std::size_t i = 0; i < n; ++i)
                if (!std::isfinite(y1[i]) || std::abs(y1[i]) > kBlowupThreshold)
                    throw BlowupError(t + h);

            StepRecord rec;
            rec.t0 = t;
            rec.h = h;
            rec.y0 = y0;
            rec.y1 = y1;
            rec.k = {k1, k2, k3, k4, k5, k6, k7};
            if (on_step(rec) == StepAction::kStop) return;

            if (++accepted > cfg.max_steps) throw StepLimitError();
            facold = std::max(errnorm, 1e-4);
            t += h;
            y0 = y1;
            k1 = k7;  // FSAL

            double fac = fac11 / std::pow(facold, beta);
            fac = std::max(0.1, std::min(5.0, fac / safe));
            h = std::min(h / fac, hmax);
        } else {
            last = false;
            h = h / std::min(5.0, fac11 / safe);
        }
    }
}

}  // namespace detail

namespace {

detail::OdeRhs planar_rhs(const VectorField2& x) {
    PolyEval p(x.p), q(x.q);
    return [p, q](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = p(y[0], y[1]);
        dy[1] = q(y[0], y[1]);
    };
}

// Planar system augmented with accumulated polar angle about the origin.
detail::OdeRhs polar_augmented_rhs(const VectorField2& x) {
    PolyEval p(x.p), q(x.q);
    return [p, q](double, const std::vector<double>& y, std::vector<double>& dy) {
        const double dx = p(y[0], y[1]);
        const double dyv = q(y[0], y[1]);
        dy[0] = dx;
        dy[1] = dyv;
        dy[2] = (y[0] * dyv - y[1] * dx) / (y[0] * y[0] + y[1] * y[1]);
    };
}

}  // namespace

std::array<double, 2> Trajectory::state_at(double t) const {
    if (segments_.empty()) throw std::logic_error("empty trajectory");
    const double t_first = segments_.front().t0;
    const double t_last = segments_.back().t0 + segments_.back().h;
    const double eps = 1e-12 * std::max(1.0, std::abs(t_last));
    if (t < t_first - eps || t > t_last + eps)
        throw std::out_of_range("time outside the integrated span");
    t = std::clamp(t, t_first, t_last);

    auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                               [](double v, const detail::StepRecord& s) { return v < s.t0; });
    const detail::StepRecord& seg = it == segments_.begin() ? *it : *(it - 1);
    std::vector<double> out;
    detail::dense_eval(seg, t, out);
    return {out[0], out[1]};
}

Trajectory integrate(const VectorField2& x, std::array<double, 2> start, double duration,
                     const IntegratorConfig& cfg) {
    if (!(duration > 0)) throw std::invalid_argument("duration must be positive");
    Trajectory traj;
    traj.times_.push_back(0.0);
    traj.states_.push_back(start);
    detail::integrate_adaptive(planar_rhs(x), 0.0, {start[0], start[1]}, duration, cfg,
                               [&](const detail::StepRecord& s) {
                                   traj.times_.push_back(s.t0 + s.h);
                                   traj.states_.push_back({s.y1[0], s.y1[1]});
                                   traj.segments_.push_back(s);
                                   return detail::StepAction::kContinue;
                               });
    return traj;
}

EventSpec EventSpec::polar_angle_progress(double target, int direction) {
    EventSpec e;
    e.kind = Kind::kPolarAngle;
    e.target = target;
    e.direction = direction;
    return e;
}

EventSpec EventSpec::coordinate_crossing(int coordinate, double value, int direction) {
    EventSpec e;
    e.kind = Kind::kCoordinate;
    e.coordinate = coordinate;
    e.value = value;
    e.direction = direction;
    return e;
}

EventSpec EventSpec::poly_zero(Poly2 g, int direction) {
    EventSpec e;
    e.kind = Kind::kPolyZero;
    e.poly = std::move(g);
    e.direction = direction;
    return e;
}

EventResult flow_to_event(const VectorField2& x, std::array<double, 2> start,
                          const EventSpec& event, const IntegratorConfig& cfg, double t_max) {
    const bool augmented = event.kind == EventSpec::Kind::kPolarAngle;
    detail::OdeRhs rhs = augmented ? polar_augmented_rhs(x) : planar_rhs(x);
    std::vector<double> y0 = augmented ? std::vector<double>{start[0], start[1], 0.0}
                                       : std::vector<double>{start[0], start[1]};

    PolyEval gev(event.kind == EventSpec::Kind::kPolyZero ? event.poly : Poly2());
    auto value = [&](const std::vector<double>& y) -> double {
        switch (event.kind) {
            case EventSpec::Kind::kPolarAngle:
                return y[2] - event.target;
            case EventSpec::Kind::kCoordinate:
                return y[event.coordinate] - event.value;
            case EventSpec::Kind::kPolyZero:
                return gev(y[0], y[1]);
        }
        return 0.0;
    };

    auto matches = [&](double ea, double eb) {
        if (!(ea * eb < 0)) return false;
        if (event.direction > 0) return ea < 0;
        if (event.direction < 0) return ea > 0;
        return true;
    };

    bool found = false;
    EventResult result;
    std::vector<double> ybuf;

    try {
        detail::integrate_adaptive(
        rhs, 0.0, y0, t_max, cfg, [&](const detail::StepRecord& s) {
            // Scan the step on a dense sub-grid to catch non-monotone event
            // functions, then bisect the first matching bracket.
            constexpr int kSub = 8;
            double ta = s.t0, ea = value(s.y0);
            for (int m = 1; m <= kSub; ++m) {
                const double tb = s.t0 + s.h * m / kSub;
                if (m == kSub)
                    ybuf = s.y1;
                else
                    detail::dense_eval(s, tb, ybuf);
                const double eb = value(ybuf);
                if (matches(ea, eb)) {
                    double lo = ta, hi = tb;
                    double elo = ea;
                    while (hi - lo > 1e-12) {
                        const double mid = 0.5 * (lo + hi);
                        detail::dense_eval(s, mid, ybuf);
                        const double em = value(ybuf);
                        if (elo * em <= 0) {
                            hi = mid;
                        } else {
                            lo = mid;
                            elo = em;
                        }
                    }
                    // Land on the post-crossing side of the bracket.
                    detail::dense_eval(s, hi, ybuf);
                    result.point = {ybuf[0], ybuf[1]};
                    result.time = hi;
                    found = true;
                    return detail::StepAction::kStop;
                }
                ta = tb;
                ea = eb;
            }
            return detail::StepAction::kContinue;
        });
    } catch (const BlowupError&) {
        // Finite-time escape without a crossing exhausts the maximal
        // trajectory, so the event provably never occurs.
        throw NoEventError();
    }

    if (!found) throw NoEventError();
    return result;
}

double quadrature_along(const VectorField2& x, std::array<double, 2> start, const Poly2& g,
                        double duration, const IntegratorConfig& cfg) {
    if (!(duration > 0)) throw std::invalid_argument("duration must be positive");
    PolyEval p(x.p), q(x.q), ge(g);
    detail::OdeRhs rhs = [p, q, ge](double, const std::vector<double>& y,
                                    std::vector<double>& dy) {
        dy[0] = p(y[0], y[1]);
        dy[1] = q(y[0], y[1]);
        dy[2] = ge(y[0], y[1]);
    };
    double integral = 0.0;
    detail::integrate_adaptive(rhs, 0.0, {start[0], start[1], 0.0}, duration, cfg,
                               [&](const detail::StepRecord& s) {
                                   integral = s.y1[2];
                                   return detail::StepAction::kContinue;
                               });
    return integral;
}

}  // namespace planarlab
