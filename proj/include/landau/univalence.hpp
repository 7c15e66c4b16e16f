#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "landau/oracle_config.hpp"

namespace landau {

/// Numerical univalence radius: the sampled disk of radius `lo` showed no
/// failure, and a failure witness exists at radius <= `hi`.
struct UnivalenceBracket {
    double lo = 0.0;
    double hi = 0.0;
    Verdict verdict = Verdict::inconclusive;
    std::optional<Witness> witness;
    OracleConfig config;
};

namespace detail {

inline constexpr double kDegenerateJacobian = 1e-12;

struct PointSample {
    Complex z;
    Complex image;
    Complex dominant;  // h' when sense-preserving at 0, g' otherwise
    double jacobian;
};

inline PointSample sample_point(const HarmonicMap& f, Complex z, bool use_h) {
    const Complex dh = f.dh().horner(z);
    const Complex dg = f.dg().horner(z);
    const double a = std::abs(dh);
    const double b = std::abs(dg);
    return {z, f.eval_unchecked(z), use_h ? dh : dg, (a - b) * (a + b)};
}

/// Spatial hash over image points. Bucket side is chosen so that any pair
/// within the collision threshold lies in adjacent buckets.
class ImageHash {
public:
    explicit ImageHash(double bucket) : bucket_(bucket) {}

    void insert(std::size_t id, Complex w) { buckets_[key(cell(w.real()), cell(w.imag()))].push_back(id); }

    template <class Visit>
    bool any_near(Complex w, Visit&& visit) const {
        const auto cx = cell(w.real());
        const auto cy = cell(w.imag());
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = buckets_.find(key(cx + dx, cy + dy));
                if (it == buckets_.end()) {
                    continue;
                }
                for (auto id : it->second) {
                    if (visit(id)) {
                        return true;
                    }
                }
            }
        }
        return false;
    }

private:
    std::int64_t cell(double x) const {
        const double c = std::floor(x / bucket_);
        if (!(std::abs(c) < 4e18)) {
            throw domain_error("univalence search: image coordinate out of hashable range");
        }
        return static_cast<std::int64_t>(c);
    }

    static std::uint64_t key(std::int64_t x, std::int64_t y) {
        // splitmix-style mixing of the two cell coordinates
        std::uint64_t h = static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(y) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        return h;
    }

    double bucket_;
    // Keys are hashed coordinates; a (rare) key clash only adds candidates,
    // every candidate is verified exactly.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

/// Number of zeros of `d` inside |z| < r, from the winding of d(r e^{it})
/// around 0. Angular gaps where the argument jumps by more than pi/4 are
/// refined recursively. Returns nullopt if d vanishes at a sample.
inline std::optional<long> winding_number(const PowerSeries& d, double r, std::span<const Complex> ring,
                                          std::span<const double> angles) {
    auto increment = [&](auto&& self, double t0, double t1, Complex v0, Complex v1, int depth) -> std::optional<double> {
        const double delta = std::arg(v1 / v0);
        if (std::abs(delta) <= std::numbers::pi / 4 || depth >= 52) {
            return delta;
        }
        const double tm = 0.5 * (t0 + t1);
        const Complex vm = d.horner(std::polar(r, tm));
        if (vm == Complex{}) {
            return std::nullopt;
        }
        const auto left = self(self, t0, tm, v0, vm, depth + 1);
        if (!left) {
            return std::nullopt;
        }
        const auto right = self(self, tm, t1, vm, v1, depth + 1);
        if (!right) {
            return std::nullopt;
        }
        return *left + *right;
    };

    const std::size_t n = ring.size();
    for (const auto& v : ring) {
        if (v == Complex{}) {
            return std::nullopt;
        }
    }
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t next = (k + 1) % n;
        const double t1 = next == 0 ? 2.0 * std::numbers::pi : angles[next];
        const auto inc = increment(increment, angles[k], t1, ring[k], ring[next], 0);
        if (!inc) {
            return std::nullopt;
        }
        total += *inc;
    }
    return std::lround(total / (2.0 * std::numbers::pi));
}

}  // namespace detail

/// Brackets the univalence radius of a normalized harmonic map on the polar
/// grid of `cfg`. A radius counts as failed when the sampled disk contains
///   - an image collision |f(z1) - f(z2)| <= pair_tolerance |z1 - z2|,
///   - a grid point with |J_f| < 1e-12,
///   - a point where J_f changes sign relative to the origin, or
///   - a zero of the dominant analytic derivative (winding count > 0),
///     which forces J_f = 0 somewhere in the disk.
/// The first failing grid ring is refined by bisection on the radius.
inline UnivalenceBracket univalence_radius_search(const HarmonicMap& f, const OracleConfig& cfg) {
    cfg.validate();
    if (!f.normalized()) {
        throw admissibility_error("univalence_radius_search: requires f(0) = 0 (h(0) = g(0) = 0)");
    }
    const auto& grid = cfg.grid;
    const std::size_t A = static_cast<std::size_t>(grid.angular_steps);

    UnivalenceBracket out;
    out.config = cfg;

    const auto origin_dh = f.dh().horner(Complex{});
    const auto origin_dg = f.dg().horner(Complex{});
    const double j0 = std::norm(origin_dh) - std::norm(origin_dg);
    if (std::abs(j0) < detail::kDegenerateJacobian) {
        out.verdict = Verdict::violated;
        out.witness = Witness{"degenerate-jacobian", Complex{}, std::nullopt, std::nullopt, j0};
        return out;
    }
    const bool use_h = j0 > 0.0;
    const double orientation = use_h ? 1.0 : -1.0;
    const PowerSeries& dominant = use_h ? f.dh() : f.dg();

    std::vector<detail::PointSample> samples(grid.size());
    detail::parallel_for(samples.size(), [&](std::size_t i) {
        samples[i] = detail::sample_point(f, grid.point(i), use_h);
    });

    std::vector<double> angles(A);
    for (std::size_t k = 0; k < A; ++k) {
        angles[k] = grid.angle(static_cast<int>(k));
    }

    const double tol = cfg.pair_tolerance;
    detail::ImageHash hash(2.0 * tol * grid.max_radius);
    hash.insert(0, samples[0].image);

    auto collides = [&](const detail::PointSample& p, std::size_t& other, auto&& fetch) {
        return hash.any_near(p.image, [&](std::size_t id) {
            const auto& q = fetch(id);
            const double dz = std::abs(p.z - q.z);
            if (dz > 0.0 && std::abs(p.image - q.image) <= tol * dz) {
                other = id;
                return true;
            }
            return false;
        });
    };
    auto fetch_grid = [&](std::size_t id) -> const detail::PointSample& { return samples[id]; };

    // Checks one ring of points. Grid rings join the hash; bisection rings are
    // compared against the hash and against themselves only. The degenerate
    // Jacobian threshold is applied to grid points only: it is not a sharp
    // test and would bias the bisection.
    auto check_ring = [&](std::span<const detail::PointSample> ring, double radius, bool grid_ring,
                          std::size_t first_id) -> std::optional<Witness> {
        std::optional<Witness> found;
        detail::ImageHash local(2.0 * tol * grid.max_radius);
        for (std::size_t k = 0; k < ring.size() && !found; ++k) {
            const auto& p = ring[k];
            if (grid_ring && std::abs(p.jacobian) < detail::kDegenerateJacobian) {
                found = Witness{"degenerate-jacobian", p.z, std::nullopt, std::nullopt, p.jacobian};
                break;
            }
            if (p.jacobian * orientation <= 0.0) {
                found = Witness{"orientation-change", p.z, std::nullopt, std::nullopt, p.jacobian};
                break;
            }
            std::size_t other = 0;
            if (collides(p, other, fetch_grid)) {
                found = Witness{"image-collision", p.z, samples[other].z, std::nullopt,
                                std::abs(p.image - samples[other].image)};
                break;
            }
            if (!grid_ring) {
                const bool hit = local.any_near(p.image, [&](std::size_t id) {
                    const auto& q = ring[id];
                    const double dz = std::abs(p.z - q.z);
                    if (dz > 0.0 && std::abs(p.image - q.image) <= tol * dz) {
                        other = id;
                        return true;
                    }
                    return false;
                });
                if (hit) {
                    found = Witness{"image-collision", p.z, ring[other].z, std::nullopt,
                                    std::abs(p.image - ring[other].image)};
                    break;
                }
                local.insert(k, p.image);
            } else {
                hash.insert(first_id + k, p.image);
            }
        }
        if (found) {
            return found;
        }
        std::vector<Complex> values(ring.size());
        for (std::size_t k = 0; k < ring.size(); ++k) {
            values[k] = ring[k].dominant;
        }
        const auto winding = detail::winding_number(dominant, radius, values, angles);
        if (!winding || *winding != 0) {
            return Witness{"critical-point-inside", Complex{radius, 0.0}, std::nullopt,
                           winding ? std::optional<int>(static_cast<int>(*winding)) : std::nullopt, radius};
        }
        return std::nullopt;
    };

    int failing_ring = 0;
    std::optional<Witness> witness;
    for (int j = 1; j <= grid.radial_steps; ++j) {
        const std::size_t first = 1 + static_cast<std::size_t>(j - 1) * A;
        std::span<const detail::PointSample> ring(samples.data() + first, A);
        witness = check_ring(ring, grid.radius(j), true, first);
        if (witness) {
            failing_ring = j;
            break;
        }
    }

    if (!witness) {
        out.lo = out.hi = grid.max_radius;
        out.verdict = Verdict::inconclusive;
        return out;
    }

    double lo = grid.radius(failing_ring - 1);
    double hi = grid.radius(failing_ring);
    std::vector<detail::PointSample> ring(A);
    for (int step = 0; step < cfg.bisection_steps; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) {
            break;
        }
        for (std::size_t k = 0; k < A; ++k) {
            ring[k] = detail::sample_point(f, std::polar(mid, angles[k]), use_h);
        }
        if (auto w = check_ring(ring, mid, false, 0)) {
            hi = mid;
            witness = std::move(w);
        } else {
            lo = mid;
        }
    }

    out.lo = lo;
    out.hi = hi;
    out.verdict = Verdict::violated;
    out.witness = std::move(witness);
    return out;
}

/// Boundary-minimum estimate of the schlicht radius about f(0):
/// min_k |f(r e^{2 pi i k/m})|.
inline double schlicht_radius(const HarmonicMap& f, double r, int m = 1024) {
    detail::require(r > 0.0, "r > 0", "schlicht_radius");
    if (!(r < 1.0)) {
        throw domain_error("schlicht_radius: requires r < 1");
    }
    detail::require(m >= 64, "m >= 64", "schlicht_radius");
    std::vector<double> moduli(static_cast<std::size_t>(m));
    detail::parallel_for(moduli.size(), [&](std::size_t k) {
        moduli[k] = std::abs(f.eval_unchecked(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(k) / m)));
    });
    double best = moduli[0];
    for (double v : moduli) {
        best = std::min(best, v);
    }
    return best;
}

}  // namespace landau
