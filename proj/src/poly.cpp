#include "drroots/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "drroots/rng.hpp"

namespace drroots {

namespace {

void require_valid(const RootForm& p) {
    if (p.roots.empty()) throw std::invalid_argument("RootForm: at least one root required");
    if (p.leading == Complex{0.0, 0.0})
        throw std::invalid_argument("RootForm: leading coefficient must be nonzero");
}

// Multiply out prod (z - w_i), times `lead`, ascending coefficients.
std::vector<Complex> expand_factors(const std::vector<Complex>& w, Complex lead) {
    std::vector<Complex> c{lead};
    c.reserve(w.size() + 1);
    for (const Complex& r : w) {
        c.push_back(c.back());
        for (std::size_t k = c.size() - 2; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return c;
}

} // namespace

CoeffForm roots_to_coeffs(const RootForm& p) {
    require_valid(p);
    return CoeffForm{expand_factors(p.roots, p.leading)};
}

Complex eval(const CoeffForm& p, Complex z) {
    if (p.coeffs.empty()) throw std::invalid_argument("CoeffForm: empty coefficient vector");
    Complex acc = p.coeffs.back();
    for (std::size_t k = p.coeffs.size() - 1; k-- > 0;) acc = acc * z + p.coeffs[k];
    return acc;
}

Complex eval(const RootForm& p, Complex z) {
    require_valid(p);
    Complex m = p.leading;
    int exponent = 0;
    constexpr double kHigh = 0x1.0p512;
    constexpr double kLow = 0x1.0p-512;
    for (const Complex& r : p.roots) {
        m *= (z - r);
        if (m == Complex{0.0, 0.0}) return m;
        const double mag = std::abs(m.real()) + std::abs(m.imag());
        if (mag > kHigh) {
            m = {std::ldexp(m.real(), -512), std::ldexp(m.imag(), -512)};
            exponent += 512;
        } else if (mag < kLow) {
            m = {std::ldexp(m.real(), 512), std::ldexp(m.imag(), 512)};
            exponent -= 512;
        }
    }
    return {std::ldexp(m.real(), exponent), std::ldexp(m.imag(), exponent)};
}

CoeffForm shifted_coeffs(const RootForm& p, Complex shift) {
    require_valid(p);
    std::vector<Complex> w(p.roots.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = p.roots[i] - shift;
    return CoeffForm{expand_factors(w, p.leading)};
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Complex derivative_at(const RootForm& p, Complex shift, int k) {
    require_valid(p);
    if (k < 0 || k > p.degree())
        throw std::invalid_argument("derivative_at: order k out of range");
    const CoeffForm q = shifted_coeffs(p, shift);
    return factorial(k) * q.coeffs[static_cast<std::size_t>(k)];
}

CoeffForm derivative(const CoeffForm& p) {
    if (p.coeffs.empty()) throw std::invalid_argument("CoeffForm: empty coefficient vector");
    if (p.coeffs.size() == 1) return CoeffForm{{Complex{0.0, 0.0}}};
    std::vector<Complex> d(p.coeffs.size() - 1);
    for (std::size_t k = 1; k < p.coeffs.size(); ++k)
        d[k - 1] = static_cast<double>(k) * p.coeffs[k];
    return CoeffForm{std::move(d)};
}

namespace {

struct WeightedRoots {
    std::vector<Complex> points;
    std::vector<int> mult;
};

WeightedRoots group_exact_duplicates(const std::vector<Complex>& roots) {
    WeightedRoots g;
    for (const Complex& z : roots) {
        bool found = false;
        for (std::size_t i = 0; i < g.points.size(); ++i) {
            if (g.points[i] == z) {
                ++g.mult[i];
                found = true;
                break;
            }
        }
        if (!found) {
            g.points.push_back(z);
            g.mult.push_back(1);
        }
    }
    return g;
}

double root_set_diameter(const std::vector<Complex>& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

// Midpoints of angle-adjacent distinct roots, slightly perturbed.
std::vector<Complex> initial_guesses(const WeightedRoots& g, double diameter) {
    const std::size_t q = g.points.size();
    Complex centroid{0.0, 0.0};
    for (const Complex& z : g.points) centroid += z;
    centroid /= static_cast<double>(q);

    std::vector<std::size_t> order(q);
    for (std::size_t i = 0; i < q; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::arg(g.points[a] - centroid) < std::arg(g.points[b] - centroid);
    });

    const double bump = 1e-3 * (diameter > 0.0 ? diameter : 1.0);
    std::vector<Complex> guesses;
    guesses.reserve(q - 1);
    for (std::size_t i = 0; i + 1 < q; ++i) {
        const Complex mid = 0.5 * (g.points[order[i]] + g.points[order[i + 1]]);
        const double angle = 2.0 * std::numbers::pi * std::numbers::phi * static_cast<double>(i);
        guesses.push_back(mid + bump * Complex{std::cos(angle), std::sin(angle)});
    }
    return guesses;
}

struct SecularSums {
    Complex s1{0.0, 0.0};
    Complex s2{0.0, 0.0};
};

SecularSums secular_sums(const WeightedRoots& g, Complex zeta) {
    SecularSums s;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        const Complex d = zeta - g.points[i];
        const Complex inv = Complex{1.0, 0.0} / d;
        const double m = static_cast<double>(g.mult[i]);
        s.s1 += m * inv;
        s.s2 += m * inv * inv;
    }
    return s;
}

double normalized_residual(const RootForm& p, Complex zeta) {
    const Complex dp = derivative_at(p, zeta, 1);
    const double scale =
        std::abs(p.leading) * std::pow(std::max(1.0, std::abs(zeta)), p.degree() - 1);
    return std::abs(dp) / scale;
}

// Newton refinement of an m-fold root of p' as the simple root of p^(m),
// with p^(m) and p^(m+1) evaluated through the shifted-factor expansion.
Complex refine_multiple(const RootForm& p, Complex x, int m) {
    for (int it = 0; it < 50; ++it) {
        const CoeffForm q = shifted_coeffs(p, x);
        const Complex num = q.coeffs[static_cast<std::size_t>(m)];
        const Complex den =
            static_cast<double>(m + 1) * q.coeffs[static_cast<std::size_t>(m + 1)];
        if (den == Complex{0.0, 0.0}) break;
        const Complex step = num / den;
        x -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

// Single-linkage clustering of `pts` at tolerance tau; returns cluster index
// per point.
std::vector<int> single_linkage(const std::vector<Complex>& pts, double tau) {
    const std::size_t n = pts.size();
    std::vector<int> cluster(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cluster[i] >= 0) continue;
        cluster[i] = next;
        std::vector<std::size_t> frontier{i};
        while (!frontier.empty()) {
            const std::size_t a = frontier.back();
            frontier.pop_back();
            for (std::size_t b = 0; b < n; ++b) {
                if (cluster[b] >= 0) continue;
                if (std::abs(pts[a] - pts[b]) <= tau) {
                    cluster[b] = next;
                    frontier.push_back(b);
                }
            }
        }
        ++next;
    }
    return cluster;
}

} // namespace

CriticalSet critical_points(const RootForm& p) {
    require_valid(p);
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("critical_points: degree must be at least 2");

    CriticalSet out;
    const WeightedRoots g = group_exact_duplicates(p.roots);
    for (std::size_t i = 0; i < g.points.size(); ++i)
        for (int c = 1; c < g.mult[i]; ++c) {
            out.zetas.push_back(g.points[i]);
            out.residuals.push_back(0.0);
        }

    const std::size_t q = g.points.size();
    std::vector<Complex> live;

    if (q >= 2) {
        const double diameter = root_set_diameter(g.points);
        const double scale = std::max(1.0, diameter);
        if (q == 2) {
            const double m1 = g.mult[0], m2 = g.mult[1];
            live.push_back((m1 * g.points[1] + m2 * g.points[0]) / (m1 + m2));
        } else {
            live = initial_guesses(g, diameter);
            std::vector<double> last_update(live.size(),
                                            std::numeric_limits<double>::infinity());
            SplitMix64 restart_rng(0x5EEDC0DE5EEDC0DEULL);
            const double eps = std::numeric_limits<double>::epsilon();

            for (int round = 0; round < 4; ++round) {
                double prev_worst = std::numeric_limits<double>::infinity();
                int stagnant = 0;
                for (int it = 0; it < 400; ++it) {
                    double worst = 0.0;
                    for (std::size_t j = 0; j < live.size(); ++j) {
                        Complex zeta = live[j];
                        for (std::size_t i = 0; i < q; ++i)
                            if (zeta == g.points[i]) zeta += Complex{1e-12 * scale, 0.0};
                        const SecularSums s = secular_sums(g, zeta);
                        const Complex denom_newton = s.s1 * s.s1 - s.s2;
                        if (denom_newton == Complex{0.0, 0.0}) continue;
                        const Complex newton = s.s1 / denom_newton;
                        Complex repulse{0.0, 0.0};
                        for (std::size_t l = 0; l < live.size(); ++l)
                            if (l != j && live[l] != zeta)
                                repulse += Complex{1.0, 0.0} / (zeta - live[l]);
                        for (std::size_t t = 0; t < out.zetas.size(); ++t)
                            if (out.zetas[t] != zeta)
                                repulse += Complex{1.0, 0.0} / (zeta - out.zetas[t]);
                        const Complex denom = Complex{1.0, 0.0} - newton * repulse;
                        const Complex w =
                            (denom == Complex{0.0, 0.0}) ? newton : newton / denom;
                        live[j] = zeta - w;
                        last_update[j] = std::abs(w);
                        worst = std::max(worst, last_update[j] /
                                                    std::max(1.0, std::abs(live[j])));
                    }
                    if (worst <= 40.0 * eps) break;
                    if (worst >= 0.9 * prev_worst) {
                        if (++stagnant >= 40) break;
                    } else {
                        stagnant = 0;
                    }
                    prev_worst = worst;
                }

                // Converged iterates are done; stalled ones either form a
                // cluster around a multiple root of p' or need a restart.
                std::vector<std::size_t> stalled;
                for (std::size_t j = 0; j < live.size(); ++j)
                    if (last_update[j] > 1e3 * eps * std::max(1.0, std::abs(live[j])))
                        stalled.push_back(j);
                if (stalled.empty()) break;

                double max_upd = 0.0;
                for (std::size_t j : stalled) max_upd = std::max(max_upd, last_update[j]);
                std::vector<Complex> pts;
                for (std::size_t j : stalled) pts.push_back(live[j]);
                const double tau =
                    std::min(std::max(100.0 * max_upd, 1e-10 * scale), 0.25 * scale);
                const std::vector<int> cl = single_linkage(pts, tau);
                const int nclusters = *std::max_element(cl.begin(), cl.end()) + 1;

                bool all_resolved = true;
                for (int c = 0; c < nclusters; ++c) {
                    std::vector<std::size_t> members;
                    for (std::size_t k = 0; k < pts.size(); ++k)
                        if (cl[k] == c) members.push_back(stalled[k]);
                    if (members.size() < 2) {
                        all_resolved = false;
                        continue;
                    }
                    Complex centroid{0.0, 0.0};
                    double radius = 0.0;
                    for (std::size_t j : members) centroid += live[j];
                    centroid /= static_cast<double>(members.size());
                    for (std::size_t j : members)
                        radius = std::max(radius, std::abs(live[j] - centroid));
                    const int m = static_cast<int>(members.size());
                    const Complex refined = refine_multiple(p, centroid, m);
                    const bool consistent = std::abs(refined - centroid) <= 2.0 * radius + tau;
                    if (consistent && normalized_residual(p, refined) <= kCriticalResidualTol) {
                        for (std::size_t j : members) {
                            live[j] = refined;
                            last_update[j] = 0.0;
                        }
                    } else {
                        all_resolved = false;
                    }
                }
                if (all_resolved) break;

                // Restart whatever is still stalled from random points in the
                // root hull (seeded, deterministic).
                bool restarted = false;
                for (std::size_t j = 0; j < live.size(); ++j) {
                    if (last_update[j] <= 1e3 * eps * std::max(1.0, std::abs(live[j])))
                        continue;
                    double wsum = 0.0;
                    Complex mix{0.0, 0.0};
                    for (std::size_t i = 0; i < q; ++i) {
                        const double wr = restart_rng.uniform01() + 1e-3;
                        mix += wr * g.points[i];
                        wsum += wr;
                    }
                    live[j] = mix / wsum;
                    last_update[j] = std::numeric_limits<double>::infinity();
                    restarted = true;
                }
                if (!restarted) break;
            }
        }
    }

    for (const Complex& zeta : live) {
        const double r = normalized_residual(p, zeta);
        if (!(r <= kCriticalResidualTol))
            throw IllConditionedError("critical_points: residual " + std::to_string(r) +
                                      " above tolerance");
        out.zetas.push_back(zeta);
        out.residuals.push_back(r);
    }

    std::vector<std::size_t> order(out.zetas.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (out.zetas[a].real() != out.zetas[b].real())
            return out.zetas[a].real() < out.zetas[b].real();
        return out.zetas[a].imag() < out.zetas[b].imag();
    });
    CriticalSet sorted;
    sorted.zetas.reserve(order.size());
    sorted.residuals.reserve(order.size());
    for (std::size_t i : order) {
        sorted.zetas.push_back(out.zetas[i]);
        sorted.residuals.push_back(out.residuals[i]);
    }
    return sorted;
}

} // namespace drroots
