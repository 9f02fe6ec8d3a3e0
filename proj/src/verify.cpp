#include "lt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lt/dense.hpp"
#include "lt/engine.hpp"
#include "lt/quadrature.hpp"
#include "lt/rng.hpp"

namespace lt::verify {

namespace {

using harmonics::SO3Point;
using harmonics::SpherePoint;
using spectra::ManifoldKind;

int ambient_of(const ManifoldId& id) {
    return id.kind == ManifoldKind::SU2 ? 4 : id.ambient;
}

bool is_so3(const ManifoldId& id) { return id.kind == ManifoldKind::SO3; }

// normalization factor putting the reference basis into L^2(measure)
double mode_norm_factor(const ManifoldId& id) {
    if (is_so3(id)) {
        // sqrt(2l+1) D^l_ij is orthonormal for the normalized Haar measure
        return id.measure == Measure::Normalized ? 1.0
                                                 : 1.0 / std::sqrt(id.volume());
    }
    // sphere bases are orthonormal for the surface (geometric) measure
    if (id.measure == Measure::Normalized)
        return std::sqrt(ManifoldId::sphere(ambient_of(id)).volume());
    return 1.0;
}

int level_dimension(const ManifoldId& id, int level) {
    if (is_so3(id)) return (2 * level + 1) * (2 * level + 1);
    return static_cast<int>(spectra::sphere_multiplicity(ambient_of(id), level));
}

double level_eigenvalue(const ManifoldId& id, int level) {
    if (is_so3(id)) return static_cast<double>(level) * (level + 1);
    return spectra::sphere_eigenvalue(ambient_of(id), level);
}

bool has_explicit_basis(const ManifoldId& id) {
    return is_so3(id) || ambient_of(id) == 3 || ambient_of(id) == 4;
}

// explicit orthonormal basis modes of one level (S^2, S^3, SO(3))
std::vector<BasisMode> explicit_level_modes(const ManifoldId& id, int level) {
    const double nf = mode_norm_factor(id);
    const double lambda = level_eigenvalue(id, level);
    std::vector<BasisMode> modes;
    if (is_so3(id)) {
        const int d = 2 * level + 1;
        const double amp = nf * std::sqrt(static_cast<double>(d));
        for (int i = -level; i <= level; ++i)
            for (int j = -level; j <= level; ++j) {
                BasisMode mode;
                mode.level = level;
                mode.eigenvalue = lambda;
                mode.so3_eval = [level, i, j, amp](const SO3Point& g) {
                    return amp * harmonics::wigner_D(level, i, j, g);
                };
                modes.push_back(std::move(mode));
            }
        return modes;
    }
    const int m = ambient_of(id);
    const int dim = level_dimension(id, level);
    for (int idx = 1; idx <= dim; ++idx) {
        BasisMode mode;
        mode.level = level;
        mode.eigenvalue = lambda;
        if (m == 3)
            mode.sphere_eval = [level, idx, nf](const SpherePoint& p) {
                return cd{nf * harmonics::sphere_basis_S2(level, idx, p), 0.0};
            };
        else
            mode.sphere_eval = [level, idx, nf](const SpherePoint& p) {
                return cd{nf * harmonics::sphere_basis_S3(level, idx, p), 0.0};
            };
        modes.push_back(std::move(mode));
    }
    return modes;
}

// orthonormal frame inside one eigenspace of S^{m-1}, m >= 5: zonal
// functions at random poles, Gram-orthonormalized via Cholesky
std::vector<BasisMode> zonal_frame_modes(const ManifoldId& id, int level, int count,
                                         std::uint64_t seed) {
    const int m = ambient_of(id);
    const double lambda = level_eigenvalue(id, level);
    const double nf = mode_norm_factor(id);
    const int d = level_dimension(id, level);
    if (count > d)
        throw std::invalid_argument("zonal frame: requested more functions than the eigenspace");

    for (std::uint64_t salt = 0; salt < 6; ++salt) {
        std::vector<SpherePoint> poles(count);
        for (int i = 0; i < count; ++i) {
            poles[i].x.resize(m);
            double norm2 = 0.0;
            for (int k = 0; k < m; ++k) {
                double g = rng::gaussian(seed, 400 + 10 * salt + static_cast<std::uint64_t>(level),
                                         static_cast<std::uint64_t>(i) * m + k);
                poles[i].x[k] = g;
                norm2 += g * g;
            }
            double inv = 1.0 / std::sqrt(norm2);
            for (int k = 0; k < m; ++k) poles[i].x[k] *= inv;
        }
        std::vector<double> gram(static_cast<std::size_t>(count) * count);
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j)
                gram[i * count + j] = harmonics::zonal_kernel(m, level, poles[i], poles[j]);
        try {
            auto L = dense::cholesky_lower(gram, count, 1e-8);
            auto Linv = dense::invert_lower(L, count);
            std::vector<BasisMode> modes;
            for (int i = 0; i < count; ++i) {
                std::vector<double> row(Linv.begin() + i * count,
                                        Linv.begin() + i * count + count);
                BasisMode mode;
                mode.level = level;
                mode.eigenvalue = lambda;
                mode.sphere_eval = [m, level, nf, poles, row](const SpherePoint& p) {
                    double v = 0.0;
                    for (std::size_t k = 0; k < row.size(); ++k)
                        if (row[k] != 0.0) v += row[k] * harmonics::zonal_kernel(m, level, p, poles[k]);
                    return cd{nf * v, 0.0};
                };
                modes.push_back(std::move(mode));
            }
            return modes;
        } catch (const std::runtime_error&) {
            // nearly dependent poles; redraw with a different salt
        }
    }
    throw std::runtime_error("zonal frame: could not draw well-separated poles");
}

std::vector<std::vector<cd>> identity_coeffs(std::size_t n) {
    std::vector<std::vector<cd>> c(n, std::vector<cd>(n, cd{0.0, 0.0}));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = cd{1.0, 0.0};
    return c;
}

int default_quad_degree(const TrialFamily& family) {
    int max_level = 1;
    for (const auto& mode : family.modes) max_level = std::max(max_level, mode.level);
    return std::max(32, 4 * max_level + 8);
}

}  // namespace

double TrialFamily::gradient_energy() const {
    std::vector<double> eigs(modes.size());
    for (std::size_t k = 0; k < modes.size(); ++k) eigs[k] = modes[k].eigenvalue;
    return harmonics::gradient_energy(eigs, coeffs);
}

double TrialFamily::gram_deviation() const {
    double worst = 0.0;
    for (std::size_t a = 0; a < coeffs.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            cd dot{0.0, 0.0};
            for (std::size_t k = 0; k < coeffs[a].size(); ++k)
                dot += coeffs[a][k] * std::conj(coeffs[b][k]);
            double target = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot - cd{target, 0.0}));
        }
    return worst;
}

double TrialFamily::rho(const SpherePoint& p) const {
    std::vector<cd> mv(modes.size());
    for (std::size_t k = 0; k < modes.size(); ++k) mv[k] = modes[k].sphere_eval(p);
    double acc = 0.0;
    for (const auto& row : coeffs) {
        cd s{0.0, 0.0};
        for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * mv[k];
        acc += std::norm(s);
    }
    return acc;
}

double TrialFamily::rho(const SO3Point& p) const {
    std::vector<cd> mv(modes.size());
    for (std::size_t k = 0; k < modes.size(); ++k) mv[k] = modes[k].so3_eval(p);
    double acc = 0.0;
    for (const auto& row : coeffs) {
        cd s{0.0, 0.0};
        for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * mv[k];
        acc += std::norm(s);
    }
    return acc;
}

TrialFamily full_shell_family(const ManifoldId& manifold, int n_max) {
    if (n_max < 1) throw std::invalid_argument("full_shell_family: n_max must be >= 1");
    TrialFamily family;
    family.manifold = manifold;
    family.kind = FamilyKind::FullShells;
    family.descriptor = manifold.name() + "/shells:1.." + std::to_string(n_max);

    const bool explicit_basis = has_explicit_basis(manifold);
    double total = 0.0;
    for (int level = 1; level <= n_max; ++level) {
        total += level_dimension(manifold, level);
        if (explicit_basis) {
            auto level_modes = explicit_level_modes(manifold, level);
            for (auto& mode : level_modes) family.modes.push_back(std::move(mode));
        } else {
            // eigenvalue bookkeeping only; rho is constant so no evaluator needed
            int d = level_dimension(manifold, level);
            for (int k = 0; k < d; ++k)
                family.modes.push_back({level, level_eigenvalue(manifold, level), nullptr, nullptr});
        }
    }
    family.coeffs = identity_coeffs(static_cast<std::size_t>(total));
    family.pointwise_evaluable = explicit_basis;
    family.rho_constant = true;
    family.rho_value = total / manifold.volume();
    return family;
}

TrialFamily single_harmonic_family(const ManifoldId& manifold, int level, int index) {
    if (level < 1) throw std::invalid_argument("single_harmonic_family: level must be >= 1");
    TrialFamily family;
    family.manifold = manifold;
    family.kind = FamilyKind::SingleHarmonic;
    family.descriptor =
        manifold.name() + "/single:" + std::to_string(level) + ":" + std::to_string(index);

    if (has_explicit_basis(manifold)) {
        auto level_modes = explicit_level_modes(manifold, level);
        if (index < 1 || index > static_cast<int>(level_modes.size()))
            throw std::invalid_argument("single_harmonic_family: index out of range");
        family.modes.push_back(std::move(level_modes[static_cast<std::size_t>(index - 1)]));
    } else {
        // normalized zonal function; the index seeds the pole draw
        family.modes = zonal_frame_modes(manifold, level, 1,
                                         0x5eedf00dull + static_cast<std::uint64_t>(index));
    }
    family.coeffs = {{cd{1.0, 0.0}}};
    family.pointwise_evaluable = true;
    family.rho_constant = false;
    return family;
}

TrialFamily random_mixture_family(const ManifoldId& manifold,
                                  const std::vector<int>& span_levels, int size,
                                  std::uint64_t seed) {
    if (span_levels.empty())
        throw std::invalid_argument("random_mixture_family: empty level span");
    if (size < 1) throw std::invalid_argument("random_mixture_family: size must be >= 1");

    TrialFamily family;
    family.manifold = manifold;
    family.kind = FamilyKind::RandomMixture;
    std::ostringstream name;
    name << manifold.name() << "/mix:size" << size << ":levels";
    for (int l : span_levels) name << ":" << l;
    name << ":seed" << seed;
    family.descriptor = name.str();

    bool complete_span = true;
    if (has_explicit_basis(manifold)) {
        for (int level : span_levels) {
            auto level_modes = explicit_level_modes(manifold, level);
            for (auto& mode : level_modes) family.modes.push_back(std::move(mode));
        }
    } else {
        for (int level : span_levels) {
            int d = level_dimension(manifold, level);
            int f = std::min(d, size);
            if (f < d) complete_span = false;
            auto frame = zonal_frame_modes(manifold, level, f, seed);
            for (auto& mode : frame) family.modes.push_back(std::move(mode));
        }
    }
    const int total = static_cast<int>(family.modes.size());
    if (size > total)
        throw std::invalid_argument("random_mixture_family: size exceeds the spanned dimension");

    auto mix = dense::random_unitary(total, seed, 7, /*real_only=*/!is_so3(manifold));
    family.coeffs.resize(static_cast<std::size_t>(size));
    for (int r = 0; r < size; ++r)
        family.coeffs[static_cast<std::size_t>(r)] =
            std::vector<cd>(mix.begin() + r * total, mix.begin() + (r + 1) * total);

    family.pointwise_evaluable = true;
    family.rho_constant = (size == total) && complete_span;
    if (family.rho_constant) family.rho_value = total / manifold.volume();
    return family;
}

double lhs_closed_form(const TrialFamily& family) {
    if (!family.rho_constant)
        throw std::invalid_argument("lhs_closed_form: rho is not constant for this family");
    const double p = (family.manifold.dim() + 2.0) / family.manifold.dim();
    return family.manifold.volume() * std::pow(family.rho_value, p);
}

double lhs_quadrature(const TrialFamily& family, int degree) {
    if (!family.pointwise_evaluable)
        throw std::invalid_argument("lhs_quadrature: family has no pointwise evaluators");
    const double p = (family.manifold.dim() + 2.0) / family.manifold.dim();
    if (degree <= 0) degree = default_quad_degree(family);
    auto rule = quadrature::build_rule(family.manifold, degree);
    if (is_so3(family.manifold))
        return quadrature::integrate(rule, std::function<double(const SO3Point&)>(
                                               [&](const SO3Point& g) {
                                                   return std::pow(family.rho(g), p);
                                               }));
    return quadrature::integrate(rule, std::function<double(const SpherePoint&)>(
                                           [&](const SpherePoint& x) {
                                               return std::pow(family.rho(x), p);
                                           }));
}

InequalityReport evaluate_inequality(const TrialFamily& family,
                                     const constants::ConstantReport& constant,
                                     const EvalOptions& opts) {
    if (family.size() == 0) throw std::invalid_argument("evaluate_inequality: empty family");
    if (!family.manifold.same_geometry(constant.manifold) ||
        family.manifold.measure != constant.measure)
        throw std::invalid_argument(
            "evaluate_inequality: family and constant disagree on manifold or measure");

    InequalityReport report;
    report.family = family.descriptor;
    report.constant_used = constant;
    report.rhs_energy = family.gradient_energy();

    const double p = (family.manifold.dim() + 2.0) / family.manifold.dim();
    if (family.rho_constant) {
        report.lhs = lhs_closed_form(family);
    } else if (has_explicit_basis(family.manifold)) {
        report.lhs = lhs_quadrature(family, opts.quad_degree);
    } else {
        auto mc = quadrature::monte_carlo_sphere(
            ambient_of(family.manifold), opts.mc_samples, opts.mc_seed,
            [&](const SpherePoint& x) { return std::pow(family.rho(x), p); });
        report.lhs = mc.value;
        report.mc_stderr = mc.stderr_est;
        if (mc.stderr_est > 0.01 * mc.value)
            throw std::runtime_error("evaluate_inequality: insufficient Monte Carlo samples (" +
                                     std::to_string(mc.stderr_est / mc.value) +
                                     " relative stderr)");
    }

    report.ratio = report.lhs / report.rhs_energy;
    report.empirical_lower_bound = report.ratio;
    double tolerance = constant.value * (1.0 + 1e-9) + 3.0 * report.mc_stderr / report.rhs_energy;
    report.certified = report.ratio <= tolerance;
    return report;
}

SweepResult sweep(const ManifoldId& manifold, const std::vector<TrialFamily>& families,
                  ConstantSource source, const EvalOptions& opts) {
    if (families.empty()) throw std::invalid_argument("sweep: empty family list");

    constants::ConstantReport constant;
    if (source == ConstantSource::Analytic) {
        constant = constants::constant_for(manifold);
    } else {
        auto bound = engine::derive_constant(manifold, engine::DeriveMode::ExactStep, 2.0e4);
        constant.manifold = manifold;
        constant.name = "k_stepcount:" + manifold.name();
        constant.value = bound.constant;
        constant.exact_form = "";
        constant.measure = manifold.measure;
        constant.source = constants::Source::NumericInfimum;
    }

    SweepResult result;
    result.all_certified = true;
    for (const auto& family : families) {
        auto report = evaluate_inequality(family, constant, opts);
        if (!report.certified) {
            std::ostringstream diag;
            diag << "sweep: family " << report.family << " violates the bound: ratio "
                 << report.ratio << " > constant " << constant.value
                 << " (lhs=" << report.lhs << ", rhs=" << report.rhs_energy
                 << ", mc_stderr=" << report.mc_stderr
                 << "); this would falsify the inequality or reveal a defect";
            throw std::runtime_error(diag.str());
        }
        if (report.ratio > result.max_ratio) {
            result.max_ratio = report.ratio;
            result.max_ratio_family = report.family;
        }
        result.reports.push_back(std::move(report));
    }
    return result;
}

std::vector<TrialFamily> default_families(const ManifoldId& manifold,
                                          const std::vector<std::uint64_t>& seeds) {
    std::vector<TrialFamily> families;
    for (int n = 1; n <= 3; ++n) families.push_back(full_shell_family(manifold, n));

    if (is_so3(manifold)) {
        families.push_back(single_harmonic_family(manifold, 1, 5));  // (i,j) = (0,0)
        families.push_back(single_harmonic_family(manifold, 2, 1));
        for (auto seed : seeds)
            families.push_back(random_mixture_family(manifold, {1}, 4, seed));
        return families;
    }

    const int m = ambient_of(manifold);
    if (m == 3 || m == 4) {
        families.push_back(single_harmonic_family(manifold, 1, m == 3 ? 2 : 1));
        families.push_back(single_harmonic_family(manifold, 2, 2));
        for (auto seed : seeds)
            families.push_back(random_mixture_family(manifold, {1, 2}, 3, seed));
    } else {
        families.push_back(single_harmonic_family(manifold, 1, 1));
        families.push_back(single_harmonic_family(manifold, 2, 1));
        for (auto seed : seeds)
            families.push_back(random_mixture_family(manifold, {1, 2}, 3, seed));
    }
    return families;
}

}  // namespace lt::verify
