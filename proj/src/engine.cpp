#include "lt/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "lt/constants.hpp"

namespace lt::engine {

namespace {

// ratio of the unit-coefficient envelope integral to rho^p in the tail:
// s^2 / ((s+1)(s+2)), which is n^2 / ((n+2)(n+4)) when s = n/2
double unit_tail_ratio(double s) { return s * s / ((s + 1.0) * (s + 2.0)); }

double tail_limit(double K, double s, int n) {
    return std::pow(K, -2.0 / n) * unit_tail_ratio(s);
}

int thread_count() {
    if (const char* env = std::getenv("LTB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

struct GoldenResult {
    double x;
    double fx;
};

// golden-section minimization on [a, b]; assumes approximate unimodality,
// always returns an evaluated point
template <class F>
GoldenResult golden_min(F f, double a, double b, double tol) {
    const double invphi = 0.6180339887498948482;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

}  // namespace

double I_of_rho(const CountingFunction& counting, double rho) {
    if (rho <= 0) throw std::invalid_argument("I_of_rho: rho must be positive");
    using Form = CountingFunction::Form;
    const double s = counting.exponent;
    const double K = counting.scale;

    switch (counting.form) {
        case Form::Envelope:
            // K * I_1(rho/K) with I_1(r) = r^{(s+1)/s} s^2/((s+1)(s+2))
            return std::pow(K, -1.0 / s) * std::pow(rho, (s + 1.0) / s) * unit_tail_ratio(s);
        case Form::PaperC: {
            const double T = counting.threshold;
            const double rho0 = rho / K;
            if (rho0 <= std::pow(T, s)) return T * rho;  // integrand vanishes past T
            double i1 = std::pow(rho0, (s + 1.0) / s) * unit_tail_ratio(s) +
                        4.0 * std::sqrt(rho0) * std::pow(T, 0.5 * s + 1.0) / (s + 2.0) -
                        std::pow(T, s + 1.0) / (s + 1.0);
            return K * i1;
        }
        case Form::ExactStep: {
            const Spectrum& sp = *counting.spectrum;
            double total = 0.0;
            double prev_edge = 0.0;
            double level_value = 0.0;  // counting value on the current interval
            const double sqrt_rho = std::sqrt(rho);
            for (std::size_t i = 0; i <= sp.levels.size(); ++i) {
                if (level_value >= rho) return total;
                double edge = i < sp.levels.size() ? sp.levels[i].eigenvalue : sp.cutoff;
                double diff = sqrt_rho - std::sqrt(level_value);
                total += (edge - prev_edge) * diff * diff;
                prev_edge = edge;
                if (i < sp.levels.size()) level_value = counting.scale * sp.cumulative[i];
            }
            if (level_value >= rho) return total;
            throw std::out_of_range(
                "I_of_rho: integrand still positive at the spectrum cutoff; "
                "increase the cutoff or lower rho");
        }
    }
    throw std::logic_error("I_of_rho: bad form");
}

double I_of_rho_quadrature(const CountingFunction& counting, double rho, int panels) {
    if (rho <= 0) throw std::invalid_argument("I_of_rho_quadrature: rho must be positive");
    using Form = CountingFunction::Form;

    // breakpoints of C up to E*, the first E where C reaches rho
    std::vector<double> edges{0.0};
    if (counting.form == Form::ExactStep) {
        const Spectrum& sp = *counting.spectrum;
        bool reached = false;
        for (std::size_t i = 0; i < sp.levels.size(); ++i) {
            edges.push_back(sp.levels[i].eigenvalue);
            if (counting.scale * sp.cumulative[i] >= rho) {
                reached = true;
                break;
            }
        }
        if (!reached) {
            if (counting.scale * sp.cumulative.back() >= rho)
                edges.push_back(sp.cutoff);
            else
                throw std::out_of_range("I_of_rho_quadrature: spectrum cutoff too small");
        }
    } else {
        const double s = counting.exponent;
        const double T = counting.form == Form::PaperC ? counting.threshold : 0.0;
        double estar = std::pow(rho / counting.scale, 1.0 / s);
        if (counting.form == Form::PaperC && estar <= T) estar = T;
        if (T > 0.0 && T < estar) edges.push_back(T);
        edges.push_back(estar);
    }

    // 16-point Gauss-Legendre panel rule
    static const double gx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                 0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double gw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                 0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};

    const double total_len = edges.back();
    double acc = 0.0;
    for (std::size_t piece = 0; piece + 1 < edges.size(); ++piece) {
        double a = edges[piece], b = edges[piece + 1];
        if (b <= a) continue;
        int np = std::max(1, static_cast<int>(std::ceil(panels * (b - a) / total_len)));
        double h = (b - a) / np;
        for (int pnl = 0; pnl < np; ++pnl) {
            double mid = a + (pnl + 0.5) * h;
            double half = 0.5 * h;
            for (int k = 0; k < 8; ++k) {
                for (double sign : {-1.0, 1.0}) {
                    double e = mid + sign * half * gx[k];
                    double diff = std::sqrt(rho) - std::sqrt(counting_value(counting, e));
                    if (diff > 0) acc += gw[k] * half * diff * diff;
                }
            }
        }
    }
    return acc;
}

std::pair<double, double> K_scaling_reduction(const CountingFunction& counting, double rho) {
    if (counting.form == CountingFunction::Form::ExactStep)
        throw std::invalid_argument("K_scaling_reduction: needs an envelope-type counting function");
    return {rho / counting.scale, counting.scale};
}

DerivedBound envelope_closed_form(int n, double K) {
    if (n < 2 || K <= 0) throw std::invalid_argument("envelope_closed_form: n >= 2, K > 0");
    DerivedBound b;
    b.infimum_of_ratio =
        (2.0 / n) * std::pow(K, -2.0 / n) * (n * n * n) / (2.0 * (n + 2.0) * (n + 4.0));
    b.constant = 1.0 / b.infimum_of_ratio;
    b.argmin_rho = 0.0;
    b.argmin_at_infinity = true;  // the unrestricted ratio is constant; limit value reported
    b.method = Method::ClosedForm;
    b.est_error = 0.0;
    return b;
}

double tau_rho(const Spectrum& spectrum, double rho, TauConvention convention) {
    if (rho <= 0) throw std::invalid_argument("tau_rho: rho must be positive");
    if (convention == TauConvention::ZeroBelowLambda1 && rho < spectrum.lambda1()) return 0.0;
    for (std::size_t i = 0; i < spectrum.levels.size(); ++i)
        if (spectrum.cumulative[i] >= rho) return spectrum.levels[i].eigenvalue;
    throw std::out_of_range("tau_rho: spectrum cutoff too small to reach rho");
}

DerivedBound infimum_ratio(const EngineProblem& problem) {
    using Form = CountingFunction::Form;
    const CountingFunction& c = problem.counting;
    const int n = problem.dim;
    if (n < 2) throw std::invalid_argument("infimum_ratio: dim must be >= 2");
    const double p = problem.exponent();

    const bool has_tail_form = c.form != Form::ExactStep;
    if (has_tail_form && std::abs(c.exponent - 0.5 * n) > 1e-9)
        throw std::invalid_argument("infimum_ratio: counting exponent must equal dim/2");

    // natural rho scale: the counting value just past its first jump
    double s0;
    switch (c.form) {
        case Form::ExactStep: s0 = c.scale * c.spectrum->cumulative.front(); break;
        case Form::PaperC:
            s0 = c.threshold > 0 ? c.scale * std::pow(c.threshold, c.exponent) : c.scale;
            break;
        default: s0 = c.scale; break;
    }

    double lo = s0 * problem.grid.min_factor;
    double hi = s0 * problem.grid.max_factor;
    if (c.form == Form::ExactStep) {
        // keep the integrand away from the truncated region
        double allowed = c.scale * c.spectrum->cumulative.back() / 4.0;
        hi = std::min(hi, allowed);
        if (hi <= lo)
            throw InconclusiveError("infimum_ratio: spectrum cutoff too small for the rho grid");
    }

    const int N = std::max(problem.grid.points, 8);
    std::vector<double> rho(N), ratio(N);
    const double log_lo = std::log(lo), log_hi = std::log(hi);
    for (int i = 0; i < N; ++i)
        rho[i] = std::exp(log_lo + (log_hi - log_lo) * i / (N - 1));

    auto eval = [&](double r) { return I_of_rho(c, r) / std::pow(r, p); };

    int workers = std::min(thread_count(), N);
    if (workers <= 1) {
        for (int i = 0; i < N; ++i) ratio[i] = eval(rho[i]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int i = w; i < N; i += workers) ratio[i] = eval(rho[i]);
            });
        for (auto& t : pool) t.join();
    }

    int imin = 0;
    for (int i = 1; i < N; ++i)
        if (ratio[i] < ratio[imin]) imin = i;

    double rmax = *std::max_element(ratio.begin(), ratio.end());
    bool flat = rmax - ratio[imin] <= 1e-12 * std::abs(ratio[imin]);

    DerivedBound out;
    out.grid_min = lo;
    out.grid_max = hi;
    out.grid_points = N;
    out.method = has_tail_form ? Method::ClosedForm : Method::Quadrature;

    double c_num, rho_num;
    if (flat) {
        c_num = ratio[imin];
        rho_num = s0;
    } else if (imin > 0 && imin < N - 1) {
        auto g = golden_min([&](double x) { return eval(std::exp(x)); },
                            std::log(rho[imin - 1]), std::log(rho[imin + 1]), 1e-10);
        c_num = std::min(g.fx, ratio[imin]);
        rho_num = g.fx <= ratio[imin] ? std::exp(g.x) : rho[imin];
    } else if (imin == N - 1) {
        c_num = ratio[imin];
        rho_num = rho[imin];
    } else {
        if (!has_tail_form)
            throw InconclusiveError("infimum_ratio: minimum not bracketed at the grid minimum");
        c_num = ratio[0];
        rho_num = rho[0];
    }

    if (has_tail_form) {
        double tail = tail_limit(c.scale, c.exponent, n);
        if (tail <= c_num) {
            out.infimum_of_ratio = tail;
            out.argmin_at_infinity = !flat;
            out.argmin_rho = flat ? rho_num : hi;
            out.est_error = 0.0;
        } else {
            out.infimum_of_ratio = c_num;
            out.argmin_rho = rho_num;
            out.est_error = 1e-10 * c_num;
        }
    } else {
        out.infimum_of_ratio = c_num;
        out.argmin_rho = rho_num;
        out.argmin_at_infinity = (imin == N - 1);
        double gap = 0.0;
        if (problem.tail_reference && *problem.tail_reference < c_num)
            gap = c_num - *problem.tail_reference;
        out.est_error = gap + 1e-10 * c_num;
    }
    out.constant = 1.0 / out.infimum_of_ratio;
    return out;
}

DerivedBound derive_constant(const ManifoldId& manifold, DeriveMode mode, double cutoff) {
    const int n = manifold.dim();
    EngineProblem problem;
    problem.dim = n;

    const constants::EnvelopeBound env = constants::density_envelope(manifold);
    const double env_tail = tail_limit(env.K, env.exponent, n);

    if (mode == DeriveMode::PaperEnvelope) {
        problem.counting =
            CountingFunction::paper_c(env.threshold, env.exponent, n, env.K);
    } else {
        auto spectrum = std::make_shared<const Spectrum>(build_spectrum(manifold, cutoff));
        problem.counting =
            CountingFunction::exact_step(std::move(spectrum), 1.0 / manifold.volume());
        problem.tail_reference = env_tail;
    }
    return infimum_ratio(problem);
}

}  // namespace lt::engine
