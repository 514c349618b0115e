#include "halfline/quadrature.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace halfline {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxDepth = 52;

// Gauss(7)/Kronrod(15) nodes and weights on [-1, 1]. Kronrod abscissae
// xgk[1], xgk[3], xgk[5], xgk[7] are the Gauss-7 nodes with weights wg.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double kronrod = 0.0;
    double err = 0.0;     // |K15 - G7|
    double resabs = 0.0;  // K15 applied to |f|
};

Panel gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kronrod += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    Panel p;
    p.kronrod = kronrod * h;
    p.err = std::fabs((kronrod - gauss) * h);
    p.resabs = resabs * h;
    return p;
}

struct AdaptiveState {
    const Integrand* f = nullptr;
    std::int64_t max_evals = kDefaultEvalBudget;
    std::int64_t evals = 0;
    std::int64_t segments = 0;
    double value = 0.0;
    double err = 0.0;
    bool budget_hit = false;
};

void accept(AdaptiveState& s, const Panel& p) {
    s.value += p.kronrod;
    s.err += p.err;
    ++s.segments;
}

// Depth-first bisection, left to right, so accumulation order is a fixed
// function of the inputs.
void refine(AdaptiveState& s, double a, double b, double tol, int depth) {
    const Panel p = gk15(*s.f, a, b);
    s.evals += 15;
    if (!std::isfinite(p.kronrod)) {
        throw DomainError(
            "adaptive_segment: integrand produced a non-finite value on [" +
            std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    const double floor = 100.0 * kEps * p.resabs;  // rounding level of the panel
    if (p.err <= tol || p.err <= floor || depth >= kMaxDepth ||
        (b - a) <= kEps * (std::fabs(a) + std::fabs(b))) {
        accept(s, p);
        return;
    }
    if (s.evals + 30 > s.max_evals) {
        s.budget_hit = true;
        accept(s, p);
        return;
    }
    const double mid = 0.5 * (a + b);
    refine(s, a, mid, 0.5 * tol, depth + 1);
    refine(s, mid, b, 0.5 * tol, depth + 1);
}

QuadratureResult run_adaptive(const Integrand& f, double a, double b,
                              double tol, std::int64_t max_evals) {
    AdaptiveState s;
    s.f = &f;
    s.max_evals = max_evals;
    refine(s, a, b, tol, 0);
    QuadratureResult result{s.value, s.err, s.evals, s.segments};
    if (s.budget_hit && s.err > tol) {
        throw BudgetExceededError(
            "adaptive_segment: evaluation budget of " +
                std::to_string(max_evals) +
                " exhausted before reaching tolerance " + std::to_string(tol),
            result);
    }
    return result;
}

void require_tolerance(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be a positive finite number");
    }
}

double oscillator_value(Oscillator osc, double arg) {
    return osc == Oscillator::Cosine ? std::cos(arg) : std::sin(arg);
}

// Upper bound for the dropped tail int_X^inf x^(n-1) e^(-p x) dx, valid once
// p X >= max(2 n, 5).
double decay_tail_bound(double n, double p, double x_cut) {
    const double safety = n <= 1.0 ? 1.0 : 2.0;
    return safety * std::pow(x_cut, n - 1.0) * std::exp(-p * x_cut) / p;
}

double truncation_point(double n, double p, double tol) {
    double x = std::max({std::log(1.0 / tol), 2.0 * n, 20.0}) / p;
    while (decay_tail_bound(n, p, x) > 0.5 * tol) x *= 1.25;
    return x;
}

// Accumulates sub-integrals; if one of them exhausts the budget, rethrows
// with the combined best estimate instead of the partial one.
struct Accumulator {
    QuadratureResult total;

    void add(const QuadratureResult& r) {
        total.value += r.value;
        total.abs_error_estimate += r.abs_error_estimate;
        total.function_evals += r.function_evals;
        total.segments += r.segments;
    }

    template <typename Fn>
    void run(Fn&& piece, const char* what) {
        try {
            add(piece());
        } catch (const BudgetExceededError& e) {
            add(e.best_result());
            throw BudgetExceededError(std::string(what) + ": " + e.what(),
                                      total);
        }
    }
};

// Term-by-term Euler transformation of an alternating series, following the
// classical workspace formulation. `increment_estimate` receives the size of
// the last two increments, a practical proxy for the remaining error.
double accelerate(const std::vector<double>& terms,
                  double* increment_estimate) {
    std::vector<double> wksp(terms.size());
    double sum = 0.5 * (wksp[0] = terms[0]);
    std::size_t nterm = 1;
    double inc_last = sum;
    double inc_prev = 0.0;
    for (std::size_t j = 1; j < terms.size(); ++j) {
        double tmp = wksp[0];
        wksp[0] = terms[j];
        for (std::size_t k = 0; k + 1 < nterm; ++k) {
            const double next = wksp[k + 1];
            wksp[k + 1] = 0.5 * (wksp[k] + tmp);
            tmp = next;
        }
        wksp[nterm] = 0.5 * (wksp[nterm - 1] + tmp);
        double increment;
        if (std::fabs(wksp[nterm]) <= std::fabs(wksp[nterm - 1])) {
            increment = 0.5 * wksp[nterm];
            ++nterm;
        } else {
            increment = wksp[nterm];
        }
        sum += increment;
        inc_prev = inc_last;
        inc_last = increment;
    }
    if (increment_estimate != nullptr) {
        *increment_estimate = std::fabs(inc_last) + std::fabs(inc_prev);
    }
    return sum;
}

}  // namespace

namespace detail {

QuadratureResult sum_alternating_segments(
    const std::function<QuadratureResult(double, double, double)>& segment,
    double half_period, double tol) {
    constexpr int kMaxTerms = 200;
    const double seg_tol = tol / 1000.0;
    const double stop_below = 0.1 * tol;

    SeriesTail tail;
    QuadratureResult out;
    for (int k = 0; k < kMaxTerms; ++k) {
        QuadratureResult r;
        try {
            r = segment(k * half_period, (k + 1) * half_period, seg_tol);
        } catch (const BudgetExceededError& e) {
            out.value += e.best_result().value;
            out.abs_error_estimate += e.best_result().abs_error_estimate;
            out.function_evals += e.best_result().function_evals;
            throw BudgetExceededError(
                std::string("half-period segment ") + std::to_string(k) + ": " +
                    e.what(),
                out);
        }
        out.function_evals += r.function_evals;
        out.abs_error_estimate += r.abs_error_estimate;
        ++out.segments;

        const double term = r.value;
        if (tail.terms.size() >= 3 && std::fabs(term) >= stop_below &&
            term * tail.terms.back() > 0.0) {
            throw OracleInconsistencyError(
                "half-period series stopped alternating at segment " +
                std::to_string(k) + "; the alternating-series premise does "
                "not hold for this integrand");
        }
        tail.terms.push_back(term);
        if (tail.terms.size() >= 3 && std::fabs(term) < stop_below) break;
    }
    double increment_estimate = 0.0;
    out.value = accelerate(tail.terms, &increment_estimate);
    out.abs_error_estimate +=
        increment_estimate + 4.0 * kEps * std::fabs(out.value);
    return out;
}

}  // namespace detail

QuadratureResult adaptive_segment(const Integrand& f, double a, double b,
                                  double tol, std::int64_t max_evals) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw DomainError("adaptive_segment: need finite bounds with a < b");
    }
    require_tolerance(tol);
    if (max_evals < 15) {
        throw DomainError("adaptive_segment: budget must allow at least one "
                          "panel (15 evaluations)");
    }
    return run_adaptive(f, a, b, tol, max_evals);
}

QuadratureResult integrate_decaying(const IntegralSpec& spec, double tol) {
    validate(spec);
    require_tolerance(tol);
    if (!(spec.p > 0.0)) {
        throw DomainError(
            "integrate_decaying: requires p > 0; use "
            "integrate_oscillatory_alternating for p = 0");
    }
    const double n = spec.n;
    const double p = spec.p;
    const double q = spec.q;
    const Oscillator osc = spec.oscillator;
    const auto plain = [=](double x) {
        return std::pow(x, n - 1.0) * std::exp(-p * x) *
               oscillator_value(osc, q * x);
    };

    const double x_cut = truncation_point(n, p, tol);
    Accumulator acc;
    if (n < 1.0) {
        // Exact-weight substitution x = u^(1/n) on the unit-side piece, plain
        // integrand on the rest.
        const double split = std::min(1.0, x_cut);
        const double inv_n = 1.0 / n;
        const auto flattened = [=](double u) {
            const double x = std::pow(u, inv_n);
            return std::exp(-p * x) * oscillator_value(osc, q * x);
        };
        acc.run(
            [&] {
                QuadratureResult r = adaptive_segment(
                    flattened, 0.0, std::pow(split, n), 0.25 * tol * n);
                r.value *= inv_n;
                r.abs_error_estimate *= inv_n;
                return r;
            },
            "integrate_decaying (singular piece)");
        if (x_cut > split) {
            acc.run([&] { return adaptive_segment(plain, split, x_cut,
                                                  0.25 * tol); },
                    "integrate_decaying (tail piece)");
        }
    } else {
        acc.run([&] { return adaptive_segment(plain, 0.0, x_cut, 0.5 * tol); },
                "integrate_decaying");
    }
    acc.total.abs_error_estimate += decay_tail_bound(n, p, x_cut);
    return acc.total;
}

QuadratureResult integrate_oscillatory_alternating(const IntegralSpec& spec,
                                                   double tol) {
    validate(spec);
    require_tolerance(tol);
    if (spec.p != 0.0) {
        throw DomainError(
            "integrate_oscillatory_alternating: requires p = 0; use "
            "integrate_decaying for p > 0");
    }
    const double n = spec.n;       // validate() guarantees 0 < n < 1 here
    const double q = spec.q;       // and q > 0
    const Oscillator osc = spec.oscillator;
    const double h = kPi / q;
    const double inv_n = 1.0 / n;
    const auto plain = [=](double x) {
        return std::pow(x, n - 1.0) * oscillator_value(osc, q * x);
    };
    const auto flattened = [=](double u) {
        return oscillator_value(osc, q * std::pow(u, inv_n));
    };
    const auto segment = [&](double a, double b, double seg_tol) {
        if (a == 0.0) {
            QuadratureResult r = adaptive_segment(flattened, 0.0,
                                                  std::pow(b, n), seg_tol * n);
            r.value *= inv_n;
            r.abs_error_estimate *= inv_n;
            return r;
        }
        return adaptive_segment(plain, a, b, seg_tol);
    };
    return detail::sum_alternating_segments(segment, h, tol);
}

QuadratureResult integrate_log_sine(double p, double q, double tol) {
    if (!std::isfinite(p) || !std::isfinite(q)) {
        throw DomainError("integrate_log_sine: p and q must be finite");
    }
    if (!(q > 0.0)) {
        throw DomainError("integrate_log_sine: q must be positive, got q = " +
                          std::to_string(q));
    }
    if (p < 0.0) {
        throw DomainError("integrate_log_sine: negative decay rate p = " +
                          std::to_string(p));
    }
    require_tolerance(tol);
    const auto sinc_kernel = [=](double x) {
        if (x == 0.0) return q;
        return std::exp(-p * x) * std::sin(q * x) / x;
    };
    if (p > 0.0) {
        double x_cut = std::max(std::log(1.0 / tol), 20.0) / p;
        const auto tail_bound = [&](double x) {
            return std::exp(-p * x) / (p * x);
        };
        while (tail_bound(x_cut) > 0.5 * tol) x_cut *= 1.25;
        Accumulator acc;
        acc.run([&] { return adaptive_segment(sinc_kernel, 0.0, x_cut,
                                              0.5 * tol); },
                "integrate_log_sine");
        acc.total.abs_error_estimate += tail_bound(x_cut);
        return acc.total;
    }
    const double h = kPi / q;
    const auto segment = [&](double a, double b, double seg_tol) {
        return adaptive_segment(sinc_kernel, a, b, seg_tol);
    };
    return detail::sum_alternating_segments(segment, h, tol);
}

QuadratureResult integrate_beta(const BetaSpec& spec, double tol) {
    if (!std::isfinite(spec.m) || !std::isfinite(spec.n_exp) ||
        spec.m <= 0.0 || spec.m >= spec.n_exp) {
        throw DomainError(
            "integrate_beta: need 0 < m < n for convergence, got m = " +
            std::to_string(spec.m) + ", n = " + std::to_string(spec.n_exp));
    }
    require_tolerance(tol);
    const double n = spec.n_exp;
    // Folding x -> 1/x maps [1, inf) onto (0, 1]:
    //   int_0^inf x^(m-1)/(1+x^n) = int_0^1 (x^(m-1) + x^(n-m-1))/(1+x^n).
    const auto power_piece = [&](double expnt) {
        const auto rational = [n](double x) {
            return 1.0 / (1.0 + std::pow(x, n));
        };
        if (expnt < 0.0) {
            // x = u^(1/(a+1)) turns the weight x^a into a constant.
            const double stretch = 1.0 / (expnt + 1.0);
            QuadratureResult r = adaptive_segment(
                [=](double u) { return rational(std::pow(u, stretch)); }, 0.0,
                1.0, 0.25 * tol / stretch);
            r.value *= stretch;
            r.abs_error_estimate *= stretch;
            return r;
        }
        return adaptive_segment(
            [=](double x) { return std::pow(x, expnt) * rational(x); }, 0.0,
            1.0, 0.25 * tol);
    };
    Accumulator acc;
    acc.run([&] { return power_piece(spec.m - 1.0); }, "integrate_beta");
    acc.run([&] { return power_piece(n - spec.m - 1.0); }, "integrate_beta");
    return acc.total;
}

double euler_transform(const SeriesTail& tail) {
    if (tail.terms.size() < 3) {
        throw DomainError(
            "euler_transform: need at least 3 terms, got " +
            std::to_string(tail.terms.size()));
    }
    return accelerate(tail.terms, nullptr);
}

}  // namespace halfline
