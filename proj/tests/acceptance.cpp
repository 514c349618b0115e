// Acceptance suite: end-to-end checks of the library's numerical contracts,
// one printed line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "halfline/clothoid.hpp"
#include "halfline/closed_forms.hpp"
#include "halfline/errors.hpp"
#include "halfline/gamma.hpp"
#include "halfline/polar.hpp"
#include "halfline/quadrature.hpp"

using namespace halfline;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

const std::vector<double> kGridN = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0};
const std::vector<double> kGridP = {0.5, 1.0, 2.0};
const std::vector<double> kGridQ = {0.0, 0.5, 1.0, 3.0};

int failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail = "") {
    std::printf("criterion %2d: %s  %s%s%s\n", criterion,
                pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double closed_form(const IntegralSpec& spec) {
    return spec.oscillator == Oscillator::Cosine
               ? damped_cosine_integral(spec)
               : damped_sine_integral(spec);
}

// 1. gamma hits the integer factorials to 1e-14 relative and sqrt(pi) at
//    the half-integer to 1e-12, in under a millisecond.
void criterion_gamma() {
    // (n-1)! for n = 1..20; every value below 2^63 is an exact literal
    const unsigned long long factorials[20] = {
        1ull,
        1ull,
        2ull,
        6ull,
        24ull,
        120ull,
        720ull,
        5040ull,
        40320ull,
        362880ull,
        3628800ull,
        39916800ull,
        479001600ull,
        6227020800ull,
        87178291200ull,
        1307674368000ull,
        20922789888000ull,
        355687428096000ull,
        6402373705728000ull,
        121645100408832000ull,
    };
    volatile double sink = halfline::gamma(10.0);  // warm up
    (void)sink;

    const auto start = std::chrono::steady_clock::now();
    bool values_ok = true;
    for (int n = 1; n <= 20; ++n) {
        const double want = static_cast<double>(factorials[n - 1]);
        if (std::fabs(halfline::gamma(n) - want) > 1e-14 * want) values_ok = false;
    }
    const bool half_ok = std::fabs(halfline::gamma(0.5) - kSqrtPi) <= 1e-12;
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    report(1, values_ok && half_ok && elapsed < 1e-3,
           "gamma factorials (n=1..20, 1e-14 rel) and gamma(1/2) (1e-12)",
           "elapsed " + short_num(elapsed * 1e3) + " ms");
}

// 2. Closed forms agree with the decaying-integral oracle over the full
//    parameter grid at tol 1e-9, within max(1e-8, 1e-8 |closed|), in <10 s.
void criterion_grid() {
    const auto start = std::chrono::steady_clock::now();
    int checked = 0;
    int agreed = 0;
    for (double n : kGridN) {
        for (double p : kGridP) {
            for (double q : kGridQ) {
                for (auto osc : {Oscillator::Cosine, Oscillator::Sine}) {
                    const IntegralSpec spec{n, p, q, osc};
                    if (!in_domain(spec)) continue;
                    ++checked;
                    const double closed = closed_form(spec);
                    const auto oracle = integrate_decaying(spec, 1e-9);
                    const double allowed =
                        std::max(1e-8, 1e-8 * std::fabs(closed));
                    if (std::fabs(oracle.value - closed) <= allowed) ++agreed;
                }
            }
        }
    }
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    report(2, checked == 168 && agreed == checked && elapsed < 10.0,
           "oscillatory-integral grid vs oracle (168 cases, tol 1e-9)",
           std::to_string(agreed) + "/" + std::to_string(checked) +
               " agreed in " + short_num(elapsed) + " s");
}

// 3. The undamped order-1/2 integrals reproduce sqrt(pi/2) to 1e-8.
void criterion_undamped_half_order() {
    const double want = std::sqrt(kPi / 2.0);
    const auto cosine = integrate_oscillatory_alternating(
        {0.5, 0.0, 1.0, Oscillator::Cosine}, 1e-8);
    const auto sine = integrate_oscillatory_alternating(
        {0.5, 0.0, 1.0, Oscillator::Sine}, 1e-8);
    const bool ok = std::fabs(cosine.value - want) <= 1e-8 &&
                    std::fabs(sine.value - want) <= 1e-8;
    report(3, ok, "undamped order-1/2 integrals equal sqrt(pi/2) (1e-8)",
           "cos err " + short_num(std::fabs(cosine.value - want)) +
               ", sin err " + short_num(std::fabs(sine.value - want)));
}

// 4. The undamped log-sine integral reproduces pi/2 to 1e-6 using at most
//    200 half-period segments plus acceleration.
void criterion_log_sine_limit() {
    const auto r = integrate_log_sine(0.0, 1.0, 1e-6);
    const bool ok =
        std::fabs(r.value - kPi / 2) <= 1e-6 && r.segments <= 200;
    report(4, ok, "sin(x)/x integral equals pi/2 (1e-6, <= 200 segments)",
           "err " + short_num(std::fabs(r.value - kPi / 2)) + ", " +
               std::to_string(r.segments) + " segments");
}

// 5. Damped log-sine oracle matches arctan(q/p) to 1e-8 over the grid.
void criterion_log_sine_grid() {
    bool ok = true;
    for (double p : {0.25, 1.0, 4.0}) {
        for (double q : {0.5, 1.0, 2.0}) {
            const auto r = integrate_log_sine(p, q, 1e-9);
            if (std::fabs(r.value - std::atan2(q, p)) > 1e-8) ok = false;
        }
    }
    report(5, ok, "log-sine oracle equals arctan(q/p) on 3x3 grid (1e-8)");
}

// 6. cos^2 + sin^2 closed forms recover (Gamma(n)/f^n)^2 to 1e-12 relative
//    over 1000 random in-domain specs.
void criterion_pythagorean() {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> n_dist(1e-3, 5.0);
    std::uniform_real_distribution<double> p_dist(1e-3, 10.0);
    std::uniform_real_distribution<double> q_dist(0.0, 10.0);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        const IntegralSpec spec{n_dist(rng), p_dist(rng), q_dist(rng),
                                Oscillator::Cosine};
        const double c = damped_cosine_integral(spec);
        const double s = damped_sine_integral(spec);
        const double f = to_polar(spec.p, spec.q).modulus;
        const double radius =
            std::exp(log_gamma(spec.n) - spec.n * std::log(f));
        if (std::fabs(c * c + s * s - radius * radius) >
            1e-12 * radius * radius) {
            ok = false;
        }
    }
    report(6, ok,
           "cos^2 + sin^2 = (Gamma(n)/f^n)^2 over 1000 random specs "
           "(1e-12 rel)");
}

// 7. Scaling law: I(n, lambda p, lambda q) lambda^n = I(n, p, q) to 1e-12
//    (relative to the family scale Gamma(n)/f^n) over the criterion-2 grid.
void criterion_scaling() {
    bool ok = true;
    for (double n : kGridN) {
        for (double p : kGridP) {
            for (double q : kGridQ) {
                for (auto osc : {Oscillator::Cosine, Oscillator::Sine}) {
                    const IntegralSpec base{n, p, q, osc};
                    if (!in_domain(base)) continue;
                    const double base_value = closed_form(base);
                    const double f = to_polar(p, q).modulus;
                    const double radius =
                        std::exp(log_gamma(n) - n * std::log(f));
                    for (double lambda : {0.5, 2.0, 10.0}) {
                        const IntegralSpec scaled{n, lambda * p, lambda * q,
                                                  osc};
                        const double lhs =
                            closed_form(scaled) * std::pow(lambda, n);
                        if (std::fabs(lhs - base_value) > 1e-12 * radius) {
                            ok = false;
                        }
                    }
                }
            }
        }
    }
    report(7, ok, "scaling law over the grid, lambda in {0.5, 2, 10} "
                  "(1e-12 rel)");
}

// 8. The rational power integral closed form matches its oracle for
//    (m, n) in {(1,2), (1,4), (2,4)} to 1e-8.
void criterion_beta() {
    bool ok = true;
    std::string detail;
    for (const BetaSpec spec : {BetaSpec{1.0, 2.0}, BetaSpec{1.0, 4.0},
                                BetaSpec{2.0, 4.0}}) {
        const double closed = beta_reciprocal(spec);
        const auto oracle = integrate_beta(spec, 1e-9);
        const double err = std::fabs(oracle.value - closed);
        if (err > 1e-8) ok = false;
        if (!detail.empty()) detail += ", ";
        detail += "err " + short_num(err);
    }
    const bool pi_half_ok =
        std::fabs(beta_reciprocal({1.0, 2.0}) - kPi / 2) <= 1e-15;
    report(8, ok && pi_half_ok,
           "rational power integrals match the oracle (1e-8)", detail);
}

// 9. The sampled spiral ends within 0.05 c of the pole at phi = 200 pi, and
//    the half-turn distances d(k) decrease strictly for k = 1..50.
void criterion_clothoid() {
    bool ok = true;
    std::string detail;
    for (double c : {1.0, 2.0}) {
        const ClothoidParams params{c};
        const auto pole_pt = pole(params);
        const auto points = sample_polyline(params, 200.0 * kPi, 201);
        const double end_distance = std::hypot(
            points.back().x - pole_pt.x, points.back().y - pole_pt.y);
        if (end_distance > 0.05 * c) ok = false;
        if (c == 1.0) detail = "end distance " + short_num(end_distance);

        double prev = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 50; ++k) {
            const auto pt = point_at(params, k * kPi);
            const double d =
                std::hypot(pt.x - pole_pt.x, pt.y - pole_pt.y);
            if (d >= prev) ok = false;
            prev = d;
        }
    }
    report(9, ok,
           "spiral endpoint near pole (0.05 c at phi = 200 pi) and "
           "monotone half-turn distances",
           detail);
}

// 10. The order-1/2 sine value at (0, 1) is the square root of the log-sine
//     value there, to 1e-13 relative.
void criterion_square_root_relation() {
    const double sine_value = fresnel_general(0.0, 1.0).sine_value;
    const double angle = log_sine_integral(0.0, 1.0);
    const bool ok =
        std::fabs(sine_value * sine_value - angle) <= 1e-13 * angle;
    report(10, ok,
           "order-1/2 sine value squared equals the log-sine value "
           "(1e-13 rel)");
}

}  // namespace

int main() {
    criterion_gamma();
    criterion_grid();
    criterion_undamped_half_order();
    criterion_log_sine_limit();
    criterion_log_sine_grid();
    criterion_pythagorean();
    criterion_scaling();
    criterion_beta();
    criterion_clothoid();
    criterion_square_root_relation();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
