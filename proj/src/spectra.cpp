#include "lt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lt::spectra {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require_sphere_args(int m, int n, int n_min) {
    if (m < 2) throw std::invalid_argument("sphere: ambient dimension m must be >= 2");
    if (n < n_min)
        throw std::invalid_argument("sphere: level n out of range (got " + std::to_string(n) + ")");
}

double sphere_surface_area(int m) {
    // 2 pi^{m/2} / Gamma(m/2) via log-gamma
    return 2.0 * std::exp(0.5 * m * std::log(kPi) - std::lgamma(0.5 * m));
}

}  // namespace

ManifoldId ManifoldId::sphere(int m, Measure mu) {
    if (m < 2) throw std::invalid_argument("ManifoldId: sphere requires ambient m >= 2");
    return ManifoldId{ManifoldKind::Sphere, m, mu};
}

ManifoldId ManifoldId::su2(Measure mu) { return ManifoldId{ManifoldKind::SU2, 4, mu}; }

ManifoldId ManifoldId::so3(Measure mu) { return ManifoldId{ManifoldKind::SO3, 0, mu}; }

int ManifoldId::dim() const {
    switch (kind) {
        case ManifoldKind::Sphere: return ambient - 1;
        case ManifoldKind::SU2: return 3;
        case ManifoldKind::SO3: return 3;
    }
    throw std::logic_error("ManifoldId: bad kind");
}

double ManifoldId::volume() const {
    if (measure == Measure::Normalized) return 1.0;
    switch (kind) {
        case ManifoldKind::Sphere: return sphere_surface_area(ambient);
        case ManifoldKind::SU2: return 2.0 * kPi * kPi;
        case ManifoldKind::SO3: return kPi * kPi;
    }
    throw std::logic_error("ManifoldId: bad kind");
}

std::string ManifoldId::name() const {
    switch (kind) {
        case ManifoldKind::Sphere: return "sphere:" + std::to_string(ambient);
        case ManifoldKind::SU2: return "su2";
        case ManifoldKind::SO3: return "so3";
    }
    throw std::logic_error("ManifoldId: bad kind");
}

bool ManifoldId::same_geometry(const ManifoldId& other) const {
    auto key = [](const ManifoldId& id) {
        // SU(2) and Sphere(4) share the same spectrum and metric
        if (id.kind == ManifoldKind::SO3) return -1;
        if (id.kind == ManifoldKind::SU2) return 4;
        return id.ambient;
    };
    return key(*this) == key(other);
}

double sphere_eigenvalue(int m, int n) {
    require_sphere_args(m, n, 0);
    return static_cast<double>(n) * (n + m - 2);
}

BigUint sphere_multiplicity_exact(int m, int n) {
    require_sphere_args(m, n, 1);
    // (2n+m-2) (n+m-3)! / ((m-2)! n!) = (2n+m-2) C(n+m-3, m-2) / n,
    // dividing as we multiply so every intermediate stays an integer.
    BigUint r{1};
    for (int j = 1; j <= m - 2; ++j) {
        r *= static_cast<std::uint32_t>(n + j - 1);
        r.div_exact(static_cast<std::uint32_t>(j));
    }
    r *= static_cast<std::uint32_t>(2 * n + m - 2);
    r.div_exact(static_cast<std::uint32_t>(n));
    return r;
}

double sphere_multiplicity(int m, int n) { return sphere_multiplicity_exact(m, n).to_double(); }

BigUint sphere_cumulative_count_exact(int m, int n) {
    require_sphere_args(m, n, 1);
    // m (m+2n-1) (m+n-2)! / (m! n!) - 1  via  (m+2n-1) * C(m+n-2, n) / ... :
    // (m+n-2)!/(m! n!) * m = C(m+n-2, m-1) * (m-1)! m / (m! ...)  -- simplest is
    // C(m+n-2, n) = (m+n-2)! / (n! (m-2)!), then divide by (m-1) and multiply the rest:
    //   m (m+2n-1) (m+n-2)! / (m! n!) = (m+2n-1) C(m+n-2, n) / (m-1).
    BigUint r{1};
    for (int j = 1; j <= n; ++j) {
        r *= static_cast<std::uint32_t>(m - 2 + j);
        r.div_exact(static_cast<std::uint32_t>(j));
    }
    r *= static_cast<std::uint32_t>(m + 2 * n - 1);
    r.div_exact(static_cast<std::uint32_t>(m - 1));
    r -= BigUint{1};
    return r;
}

double sphere_cumulative_count(int m, int n) {
    return sphere_cumulative_count_exact(m, n).to_double();
}

BigUint so3_cumulative_count_exact(int n) {
    if (n < 1) throw std::invalid_argument("so3_cumulative_count: n must be >= 1");
    BigUint r{static_cast<std::uint64_t>(n)};
    BigUint t1{static_cast<std::uint64_t>(n)};
    t1 *= static_cast<std::uint32_t>(n);
    t1 *= static_cast<std::uint32_t>(n);
    t1 *= 4u;  // 4 n^3
    BigUint t2{static_cast<std::uint64_t>(n)};
    t2 *= static_cast<std::uint32_t>(n);
    t2 *= 12u;  // 12 n^2
    r *= 11u;   // 11 n
    r += t1;
    r += t2;
    r.div_exact(3u);
    return r;
}

double so3_cumulative_count(int n) { return so3_cumulative_count_exact(n).to_double(); }

Spectrum build_spectrum(const ManifoldId& manifold, double cutoff) {
    Spectrum s;
    s.manifold = manifold;
    s.cutoff = cutoff;
    s.dim = manifold.dim();
    s.volume = manifold.volume();

    if (manifold.kind == ManifoldKind::SO3) {
        for (int l = 1;; ++l) {
            double lambda = static_cast<double>(l) * (l + 1);
            if (lambda > cutoff) break;
            double mult = static_cast<double>(2 * l + 1) * (2 * l + 1);
            s.levels.push_back({l, lambda, mult});
        }
    } else {
        int m = (manifold.kind == ManifoldKind::SU2) ? 4 : manifold.ambient;
        for (int n = 1;; ++n) {
            double lambda = sphere_eigenvalue(m, n);
            if (lambda > cutoff) break;
            s.levels.push_back({n, lambda, sphere_multiplicity(m, n)});
        }
    }

    if (s.levels.empty())
        throw std::invalid_argument("build_spectrum: cutoff " + std::to_string(cutoff) +
                                    " lies below the first nonzero eigenvalue");

    s.cumulative.resize(s.levels.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
        acc += s.levels[i].multiplicity;
        s.cumulative[i] = acc;
    }
    return s;
}

CountingFunction CountingFunction::exact_step(std::shared_ptr<const Spectrum> s, double scale) {
    if (!s) throw std::invalid_argument("CountingFunction: null spectrum");
    CountingFunction c;
    c.form = Form::ExactStep;
    c.spectrum = std::move(s);
    c.scale = scale;
    c.domain_dim = c.spectrum->dim;
    return c;
}

CountingFunction CountingFunction::envelope(double K, double exponent, int domain_dim) {
    if (K <= 0 || exponent <= 0)
        throw std::invalid_argument("CountingFunction: envelope needs K, exponent > 0");
    CountingFunction c;
    c.form = Form::Envelope;
    c.scale = K;
    c.exponent = exponent;
    c.domain_dim = domain_dim;
    return c;
}

CountingFunction CountingFunction::paper_c(double threshold, double exponent, int domain_dim,
                                           double scale) {
    if (threshold < 0 || exponent <= 0 || scale <= 0)
        throw std::invalid_argument("CountingFunction: bad PaperC parameters");
    CountingFunction c;
    c.form = Form::PaperC;
    c.scale = scale;
    c.exponent = exponent;
    c.threshold = threshold;
    c.domain_dim = domain_dim;
    return c;
}

double counting_value(const CountingFunction& c, double E) {
    if (E < 0) throw std::invalid_argument("counting_value: E must be >= 0");
    switch (c.form) {
        case CountingFunction::Form::Envelope:
            return c.scale * std::pow(E, c.exponent);
        case CountingFunction::Form::PaperC:
            return E <= c.threshold ? 0.0 : c.scale * std::pow(E, c.exponent);
        case CountingFunction::Form::ExactStep: {
            const Spectrum& s = *c.spectrum;
            if (E > s.cutoff)
                throw std::out_of_range("counting_value: E exceeds the spectrum cutoff");
            // strict inequality: count eigenvalues < E
            auto it = std::lower_bound(
                s.levels.begin(), s.levels.end(), E,
                [](const EigenLevel& lv, double e) { return lv.eigenvalue < e; });
            if (it == s.levels.begin()) return 0.0;
            return c.scale * s.cumulative[static_cast<std::size_t>(it - s.levels.begin()) - 1];
        }
    }
    throw std::logic_error("counting_value: bad form");
}

}  // namespace lt::spectra
