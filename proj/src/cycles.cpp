#include "planarlab/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <optional>
#include <thread>

namespace planarlab {

// ---------------------------------------------------------------------------
// TrigPoly

TrigPoly TrigPoly::constant(const Rat& c) {
    TrigPoly t;
    t.add_harmonic(0, c, Rat(0));
    return t;
}

void TrigPoly::add_harmonic(int k, const Rat& cos_coeff, const Rat& sin_coeff) {
    if (cos_coeff == 0 && sin_coeff == 0) return;
    auto [it, inserted] = harmonics_.emplace(k, std::make_pair(cos_coeff, sin_coeff));
    if (!inserted) {
        it->second.first += cos_coeff;
        it->second.second += sin_coeff;
        if (it->second.first == 0 && it->second.second == 0) harmonics_.erase(it);
    }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [k, cs] : o.harmonics_) add_harmonic(k, cs.first, cs.second);
    return *this;
}

TrigPoly operator*(const Rat& c, const TrigPoly& t) {
    TrigPoly r;
    for (const auto& [k, cs] : t.harmonics_) r.add_harmonic(k, c * cs.first, c * cs.second);
    return r;
}

TrigPoly TrigPoly::times_cos() const {
    // cos k.t cos t = (cos(k-1)t + cos(k+1)t)/2;  sin k.t cos t = (sin(k+1)t + sin(k-1)t)/2
    TrigPoly r;
    const Rat half(1, 2);
    for (const auto& [k, cs] : harmonics_) {
        const Rat& c = cs.first;
        const Rat& s = cs.second;
        r.add_harmonic(k + 1, half * c, half * s);
        if (k >= 1) {
            // cos(k-1), sin(k-1); sin 0 vanishes
            r.add_harmonic(k - 1, half * c, k == 1 ? Rat(0) : half * s);
        } else {
            r.add_harmonic(1, half * c, Rat(0));  // cos(-1) = cos(1)
        }
    }
    return r;
}

TrigPoly TrigPoly::times_sin() const {
    // cos k.t sin t = (sin(k+1)t - sin(k-1)t)/2;  sin k.t sin t = (cos(k-1)t - cos(k+1)t)/2
    TrigPoly r;
    const Rat half(1, 2);
    for (const auto& [k, cs] : harmonics_) {
        const Rat& c = cs.first;
        const Rat& s = cs.second;
        r.add_harmonic(k + 1, -half * s, half * c);
        if (k >= 1) {
            r.add_harmonic(k - 1, half * s, k == 1 ? Rat(0) : -half * c);
        } else {
            r.add_harmonic(1, Rat(0), half * c);  // -sin(-1) = sin(1)
        }
    }
    return r;
}

double TrigPoly::evaluate(double theta) const {
    double acc = 0.0;
    for (const auto& [k, cs] : harmonics_)
        acc += rat_to_double(cs.first) * std::cos(k * theta) +
               rat_to_double(cs.second) * std::sin(k * theta);
    return acc;
}

Rat TrigPoly::leading_coefficient() const {
    for (const auto& [k, cs] : harmonics_) {
        if (cs.first != 0) return cs.first;
        if (cs.second != 0) return cs.second;
    }
    return Rat(0);
}

std::string format_trig(const TrigPoly& t) {
    if (t.is_zero()) return "0";
    std::string out;
    auto append = [&](const Rat& c, const std::string& basis) {
        if (c == 0) return;
        const bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const Rat a = neg ? Rat(-c) : c;
        if (basis.empty())
            out += rat_to_string(a);
        else if (a == 1)
            out += basis;
        else
            out += rat_to_string(a) + "*" + basis;
    };
    for (const auto& [k, cs] : t.harmonics()) {
        if (k == 0) {
            append(cs.first, "");
            continue;
        }
        const std::string arg = k == 1 ? "t" : std::to_string(k) + "*t";
        append(cs.first, "cos(" + arg + ")");
        append(cs.second, "sin(" + arg + ")");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polar reduction

namespace {

// x^i y^j -> r^{i+j} cos^i sin^j, linearized into harmonics; accumulated per
// power of r.
std::vector<TrigPoly> substitute_polar(const Poly2& p, int max_degree) {
    std::vector<TrigPoly> out(std::size_t(max_degree) + 1);
    for (const auto& [m, c] : p.terms()) {
        TrigPoly t = TrigPoly::constant(c);
        for (int k = 0; k < m.e[0]; ++k) t = t.times_cos();
        for (int k = 0; k < m.e[1]; ++k) t = t.times_sin();
        out[std::size_t(m.degree())] += t;
    }
    return out;
}

double eval_series(const std::vector<TrigPoly>& coeffs, double r, double theta) {
    double acc = 0.0, rk = 1.0;
    for (const TrigPoly& c : coeffs) {
        if (!c.is_zero()) acc += c.evaluate(theta) * rk;
        rk *= r;
    }
    return acc;
}

}  // namespace

double PolarForm::numerator_at(double r, double theta) const {
    return eval_series(numerator, r, theta);
}

double PolarForm::denominator_at(double r, double theta) const {
    return eval_series(denominator, r, theta);
}

double PolarForm::slope(double r, double theta) const {
    return numerator_at(r, theta) / denominator_at(r, theta);
}

PolarForm polar_reduce(const VectorField2& x) {
    PolarForm form;
    form.source = x;

    const Poly2 px = Poly2::variable(kVarX), py = Poly2::variable(kVarY);
    const Poly2 radial = px * x.p + py * x.q;      // x P + y Q
    const Poly2 angular = px * x.q - py * x.p;     // x Q - y P

    const int d = std::max(0, x.degree());
    form.numerator = substitute_polar(radial, d + 2);
    std::vector<TrigPoly> ang = substitute_polar(angular, d + 2);

    // Every term of xQ - yP carries at least one power of r; theta-dot is
    // (xQ - yP)/r^2, so the denominator of dr/dtheta is (xQ - yP)/r.
    form.denominator.assign(ang.begin() + 1, ang.end());

    // Cancel the common power of r.
    auto min_power = [](const std::vector<TrigPoly>& v) {
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) return static_cast<int>(k);
        return -1;
    };
    const int mn = min_power(form.numerator), md = min_power(form.denominator);
    if (mn >= 0 && md >= 0) {
        const int shift = std::min(mn, md);
        form.numerator.erase(form.numerator.begin(), form.numerator.begin() + shift);
        form.denominator.erase(form.denominator.begin(), form.denominator.begin() + shift);
    }
    while (!form.numerator.empty() && form.numerator.back().is_zero()) form.numerator.pop_back();
    while (!form.denominator.empty() && form.denominator.back().is_zero())
        form.denominator.pop_back();

    // Sign normalization: leading coefficient of the lowest nonzero B_k
    // positive.
    const int lead = min_power(form.denominator);
    if (lead >= 0 && form.denominator[lead].leading_coefficient() < 0) {
        for (TrigPoly& t : form.numerator) t = Rat(-1) * t;
        for (TrigPoly& t : form.denominator) t = Rat(-1) * t;
    }

    // Transversality near the origin: the sign of theta-dot as r -> 0+ is
    // carried by the lowest denominator coefficient; sample it for sign
    // changes and locate its zeros.
    if (lead >= 0) {
        const TrigPoly& b = form.denominator[lead];
        constexpr int kSamples = 2048;
        const double step = 2.0 * M_PI / kSamples;
        double prev = b.evaluate(0.0);
        for (int i = 1; i <= kSamples; ++i) {
            const double theta = i * step;
            const double cur = b.evaluate(theta);
            if (std::abs(cur) < 1e-12) form.non_transversal = true;
            if (prev * cur < 0) {
                form.non_transversal = true;
                double lo = theta - step, hi = theta;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (b.evaluate(lo) * b.evaluate(mid) <= 0 ? hi : lo) = mid;
                }
                form.denominator_zero_angles.push_back(0.5 * (lo + hi));
            }
            prev = cur;
        }
        if (std::abs(prev) < 1e-12 && form.denominator_zero_angles.empty())
            form.non_transversal = true;
    } else {
        form.non_transversal = true;  // theta-dot identically zero
    }
    return form;
}

double polar_return(const PolarForm& form, double r0, int theta_dot_sign,
                    const IntegratorConfig& cfg) {
    const double sigma = theta_dot_sign < 0 ? -1.0 : 1.0;
    double r_end = r0;
    detail::integrate_adaptive(
        [&](double tau, const std::vector<double>& y, std::vector<double>& dy) {
            dy[0] = sigma * form.slope(y[0], sigma * tau);
        },
        0.0, {r0}, 2.0 * M_PI, cfg, [&](const detail::StepRecord& s) {
            r_end = s.y1[0];
            return detail::StepAction::kContinue;
        });
    return r_end;
}

// ---------------------------------------------------------------------------
// Return map

ReturnMapResult return_map_detail(const VectorField2& x, double r0, double alpha,
                                  const IntegratorConfig& cfg) {
    if (!(r0 > 0)) throw std::invalid_argument("section radius must be positive");
    PolyEval p(x.p), q(x.q);
    auto theta_dot = [&](double px_, double py_) {
        return (px_ * q(px_, py_) - py_ * p(px_, py_)) / (px_ * px_ + py_ * py_);
    };

    const std::array<double, 2> start{r0 * std::cos(alpha), r0 * std::sin(alpha)};
    const double td0 = theta_dot(start[0], start[1]);
    if (std::abs(td0) < 1e-12)
        throw NonTransversalError("theta-dot vanishes at the section start point");
    const double sgn = td0 > 0 ? 1.0 : -1.0;
    const double target = sgn * 2.0 * M_PI;

    detail::OdeRhs rhs = [&](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = p(y[0], y[1]);
        dy[1] = q(y[0], y[1]);
        dy[2] = theta_dot(y[0], y[1]);
    };

    std::optional<ReturnMapResult> result;
    std::vector<double> ybuf;
    // Generous horizon: the angle event, not the clock, terminates the run.
    const double t_max = 1e6;

    detail::integrate_adaptive(rhs, 0.0, {start[0], start[1], 0.0}, t_max, cfg,
                               [&](const detail::StepRecord& s) {
        constexpr int kSub = 8;
        double ea = s.y0[2] - target;
        for (int m = 1; m <= kSub; ++m) {
            const double tb = s.t0 + s.h * m / kSub;
            if (m == kSub)
                ybuf = s.y1;
            else
                detail::dense_eval(s, tb, ybuf);
            if (theta_dot(ybuf[0], ybuf[1]) * sgn <= 0)
                throw NonTransversalError("theta-dot changed sign along the return trajectory");
            const double eb = ybuf[2] - target;
            if (ea * eb < 0) {
                double lo = tb - s.h / kSub, hi = tb;
                double elo = ea;
                while (hi - lo > 1e-12) {
                    const double mid = 0.5 * (lo + hi);
                    detail::dense_eval(s, mid, ybuf);
                    const double em = ybuf[2] - target;
                    if (elo * em <= 0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        elo = em;
                    }
                }
                detail::dense_eval(s, hi, ybuf);
                ReturnMapResult r;
                r.point = {ybuf[0], ybuf[1]};
                r.radius = std::hypot(ybuf[0], ybuf[1]);
                r.time = hi;
                result = r;
                return detail::StepAction::kStop;
            }
            ea = eb;
        }
        return detail::StepAction::kContinue;
    });

    if (!result) throw NoEventError();
    return *result;
}

double return_map(const VectorField2& x, double r0, double alpha, const IntegratorConfig& cfg) {
    return return_map_detail(x, r0, alpha, cfg).radius;
}

// ---------------------------------------------------------------------------
// Cycle scan

namespace {

constexpr double kBandTolerance = 1e-9;

struct GridValue {
    enum class Status { kOk, kEscape, kFailed };
    Status status = Status::kFailed;
    double displacement = 0.0;
    std::string error;
};

GridValue eval_displacement(const VectorField2& x, double r, double alpha,
                            const IntegratorConfig& cfg) {
    GridValue v;
    try {
        v.displacement = return_map(x, r, alpha, cfg) - r;
        v.status = GridValue::Status::kOk;
    } catch (const BlowupError& e) {
        // Finite-time escape: the trajectory left every bounded annulus, so
        // the displacement is treated as positive for bracketing.
        v.status = GridValue::Status::kEscape;
        v.error = e.name();
    } catch (const NumericError& e) {
        v.status = GridValue::Status::kFailed;
        v.error = e.name();
    }
    return v;
}

int displacement_sign(const GridValue& v) {
    if (v.status == GridValue::Status::kEscape) return 1;
    return v.displacement > 0 ? 1 : (v.displacement < 0 ? -1 : 0);
}

IntegratorConfig tightened(const IntegratorConfig& cfg) {
    IntegratorConfig t = cfg;
    t.rtol = std::min(cfg.rtol, 1e-12);
    t.atol = std::min(cfg.atol, 1e-13);
    return t;
}

std::optional<CycleInfo> refine_bracket(const VectorField2& x, double a, double b, int sign_a,
                                        double alpha, const IntegratorConfig& cfg) {
    const IntegratorConfig tight = tightened(cfg);

    std::optional<std::pair<double, ReturnMapResult>> best;  // smallest |d| seen
    auto probe = [&](double r) -> std::optional<int> {
        try {
            ReturnMapResult res = return_map_detail(x, r, alpha, tight);
            const double d = res.radius - r;
            if (!best || std::abs(d) < std::abs(best->second.radius - best->first))
                best = {r, res};
            return d > 0 ? 1 : (d < 0 ? -1 : 0);
        } catch (const BlowupError&) {
            return 1;  // outward escape
        } catch (const NumericError&) {
            return std::nullopt;
        }
    };

    // Bisection to 1e-10, then polish toward machine precision so that the
    // residual certificate can be met even for strongly hyperbolic cycles.
    for (int it = 0; it < 120 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const auto sm = probe(mid);
        if (!sm) return std::nullopt;
        if (*sm == 0) break;
        if (*sm == sign_a)
            a = mid;
        else
            b = mid;
    }
    if (!best) return std::nullopt;

    CycleInfo info;
    info.section_angle = alpha;
    info.radius = best->first;
    info.period = best->second.time;
    info.residual = std::abs(best->second.radius - best->first);

    const std::array<double, 2> start{info.radius * std::cos(alpha),
                                      info.radius * std::sin(alpha)};
    info.multiplier = std::exp(quadrature_along(x, start, divergence(x), info.period, tight));
    if (info.multiplier < 1.0 - 1e-6)
        info.stability = Stability::kStable;
    else if (info.multiplier > 1.0 + 1e-6)
        info.stability = Stability::kUnstable;
    else
        info.stability = Stability::kNonHyperbolic;

    // Sample along whichever time direction makes the cycle attracting, so
    // the sample points do not drift off it by a factor of the multiplier.
    const VectorField2 sample_field =
        info.multiplier > 1.0 ? Rat(-1) * x : x;
    const Trajectory traj = integrate(sample_field, start, info.period, tight);
    constexpr int kSamples = 256;
    info.samples.reserve(kSamples);
    for (int k = 0; k < kSamples; ++k)
        info.samples.push_back(traj.state_at(info.period * k / kSamples));
    return info;
}

}  // namespace

CycleScan find_cycles(const VectorField2& x, double r_min, double r_max,
                      const IntegratorConfig& cfg, bool parallel, double alpha) {
    if (!(r_min > 0) || !(r_max > r_min))
        throw std::invalid_argument("need 0 < r_min < r_max");

    const int n = kScanGridPoints;
    std::vector<double> radii(n);
    for (int i = 0; i < n; ++i) radii[i] = r_min + (r_max - r_min) * i / (n - 1);

    std::vector<GridValue> grid(n);
    if (parallel) {
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::future<void>> jobs;
        std::atomic<int> next{0};
        for (unsigned w = 0; w < workers; ++w)
            jobs.push_back(std::async(std::launch::async, [&] {
                for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                    grid[i] = eval_displacement(x, radii[i], alpha, cfg);
            }));
        for (auto& j : jobs) j.get();
    } else {
        for (int i = 0; i < n; ++i) grid[i] = eval_displacement(x, radii[i], alpha, cfg);
    }

    CycleScan scan;
    for (int i = 0; i < n; ++i)
        if (grid[i].status == GridValue::Status::kFailed ||
            grid[i].status == GridValue::Status::kEscape)
            scan.failures.push_back({radii[i], grid[i].error});

    // Center bands: >= 3 consecutive near-zero displacements.
    std::vector<bool> in_band(n, false);
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && grid[j].status == GridValue::Status::kOk &&
               std::abs(grid[j].displacement) < kBandTolerance)
            ++j;
        if (j - i >= 3) {
            scan.center_bands.push_back({radii[i], radii[j - 1]});
            for (int k = i; k < j; ++k) in_band[k] = true;
        }
        i = std::max(j, i + 1);
    }

    // Bracket strict sign changes outside the bands and refine each.
    for (int i = 0; i + 1 < n; ++i) {
        if (in_band[i] || in_band[i + 1]) continue;
        const GridValue &ga = grid[i], &gb = grid[i + 1];
        if (ga.status == GridValue::Status::kFailed || gb.status == GridValue::Status::kFailed)
            continue;
        if (ga.status == GridValue::Status::kOk &&
            std::abs(ga.displacement) < kBandTolerance)
            continue;
        if (gb.status == GridValue::Status::kOk &&
            std::abs(gb.displacement) < kBandTolerance)
            continue;
        const int sa = displacement_sign(ga), sb = displacement_sign(gb);
        if (sa == 0 || sb == 0 || sa == sb) continue;
        if (ga.status == GridValue::Status::kEscape && gb.status == GridValue::Status::kEscape)
            continue;
        if (auto info = refine_bracket(x, radii[i], radii[i + 1], sa, alpha, cfg))
            scan.cycles.push_back(std::move(*info));
    }

    std::sort(scan.cycles.begin(), scan.cycles.end(),
              [](const CycleInfo& a, const CycleInfo& b) { return a.radius < b.radius; });
    return scan;
}

double multiplier(const VectorField2& x, const CycleInfo& cycle, const IntegratorConfig& cfg) {
    const std::array<double, 2> start{cycle.radius * std::cos(cycle.section_angle),
                                      cycle.radius * std::sin(cycle.section_angle)};
    return std::exp(quadrature_along(x, start, divergence(x), cycle.period, cfg));
}

double invariance_defect(const VectorField2& x, const CycleInfo& cycle_of_x,
                         const VectorField2& y) {
    PolyEval px(x.p), qx(x.q), py(y.p), qy(y.q);
    double worst = 0.0;
    bool any = false;
    for (const auto& s : cycle_of_x.samples) {
        const double ax = px(s[0], s[1]), ay = qx(s[0], s[1]);
        const double bx = py(s[0], s[1]), by = qy(s[0], s[1]);
        const double na = std::hypot(ax, ay), nb = std::hypot(bx, by);
        if (na < 1e-14 || nb < 1e-14) continue;
        any = true;
        worst = std::max(worst, std::abs(ax * by - ay * bx) / (na * nb));
    }
    if (!any) throw DegenerateSamplesError();
    return worst;
}

}  // namespace planarlab
