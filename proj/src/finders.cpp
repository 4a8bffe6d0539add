#include "sympb/finders.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sympb {

namespace {

const std::complex<double> kI(0.0, 1.0);

CVec random_unit(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec z(n);
    for (auto& c : z) c = {g(rng), g(rng)};
    return normalized(z);
}

double orbit_action_sphere(const WeightedSphere& table, const std::vector<CVec>& pts) {
    double s = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) s += table.omega(pts[i], pts[(i + 1) % pts.size()]);
    return s;
}

double orbit_action_body(const std::vector<CVec>& pts) {
    double s = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const CVec& u = pts[i];
        const CVec& v = pts[(i + 1) % pts.size()];
        for (size_t j = 0; j < u.size(); ++j) s += std::imag(std::conj(u[j]) * v[j]);
    }
    return s;
}

double residual_against_direction(const CVec& d, const CVec& r) {
    if (cnorm(d) < 1e-14) return 1.0;
    CVec rn = normalized(r);
    CVec ortho = d - dot(d, rn) * rn;
    return cnorm(ortho);
}

}  // namespace

double reflection_residual(const WeightedSphere& table, const std::vector<CVec>& pts) {
    const size_t k = pts.size();
    if (k == 2) {
        CVec s = pts[0] + pts[1];  // normals on the sphere are the points
        return cnorm(s);
    }
    double worst = 0.0;
    for (size_t i = 0; i < k; ++i) {
        CVec d = pts[(i + 1) % k] - pts[(i + k - 1) % k];
        worst = std::max(worst, residual_against_direction(d, table.R(pts[i])));
    }
    return worst;
}

double reflection_residual(const LevelSetBody& body, const std::vector<CVec>& pts) {
    const size_t k = pts.size();
    if (k == 2) return cnorm(body.normal(pts[0]) + body.normal(pts[1]));
    double worst = 0.0;
    for (size_t i = 0; i < k; ++i) {
        CVec d = pts[(i + 1) % k] - pts[(i + k - 1) % k];
        worst = std::max(worst, residual_against_direction(d, kI * body.grad(pts[i])));
    }
    return worst;
}

namespace {

// Best-response vertex update on the weighted sphere: the two points with
// R(z) parallel to the diagonal are +-normalize(-i a . d); take the sign
// that increases the action.
bool sphere_update(const WeightedSphere& table, const CVec& prev, const CVec& next, CVec& z) {
    CVec d = next - prev;
    if (cnorm(d) < 1e-13) return false;
    CVec m(d);
    const auto& a = table.weights();
    for (size_t j = 0; j < m.size(); ++j) m[j] *= std::complex<double>(0.0, -a[j]);
    m = normalized(m);
    double gain = table.omega(prev, m) - table.omega(next, m);
    z = (gain >= 0.0) ? m : -1.0 * m;
    return true;
}

bool body_update(const LevelSetBody& body, const CVec& prev, const CVec& next, CVec& z) {
    CVec d = next - prev;
    if (cnorm(d) < 1e-13) return false;
    CVec u = normalized(std::complex<double>(0.0, -1.0) * d);
    CVec cand1 = support_point(body, u);
    CVec cand2 = support_point(body, -1.0 * u);
    auto gain = [&](const CVec& c) {
        double s = 0.0;
        for (size_t j = 0; j < c.size(); ++j)
            s += std::imag(std::conj(prev[j]) * c[j]) + std::imag(std::conj(c[j]) * next[j]);
        return s;
    };
    z = (gain(cand1) >= gain(cand2)) ? cand1 : cand2;
    return true;
}

template <class Table, class Update>
PeriodicOrbit ascent_orbit(const Table& table, int n, int k, std::uint64_t seed, int starts,
                           Update update) {
    std::mt19937_64 rng(seed);
    PeriodicOrbit best;
    best.action = -1e300;
    for (int s = 0; s < starts; ++s) {
        std::vector<CVec> z(k);
        for (auto& p : z) p = random_unit(n, rng);
        if constexpr (std::is_base_of_v<LevelSetBody, Table>)
            for (auto& p : z) p = table.project(p);
        bool degenerate = false;
        double move = 1.0;
        for (int sweep = 0; sweep < 10000 && move > 1e-13; ++sweep) {
            move = 0.0;
            degenerate = false;
            for (int i = 0; i < k; ++i) {
                CVec zi = z[i];
                if (!update(z[(i + k - 1) % k], z[(i + 1) % k], zi)) {
                    degenerate = true;
                    break;
                }
                move = std::max(move, cnorm(zi - z[i]));
                z[i] = zi;
            }
            if (degenerate) break;
        }
        if (degenerate) continue;
        PeriodicOrbit orbit;
        orbit.points = z;
        orbit.residual = reflection_residual(table, z);
        if constexpr (std::is_base_of_v<LevelSetBody, Table>)
            orbit.action = orbit_action_body(z);
        else
            orbit.action = orbit_action_sphere(table, z);
        if (orbit.residual < 1e-8 && orbit.action > best.action) best = std::move(orbit);
    }
    if (best.points.empty())
        throw std::runtime_error("find_periodic: no non-degenerate orbit found");
    return best;
}

}  // namespace

PeriodicOrbit find_periodic(const WeightedSphere& table, int k, std::uint64_t seed, int starts) {
    if (k < 2) throw std::invalid_argument("find_periodic needs k >= 2");
    if (k == 2) {
        std::mt19937_64 rng(seed);
        PeriodicOrbit orbit;
        CVec z = random_unit(table.n(), rng);
        orbit.points = {z, -1.0 * z};
        orbit.residual = reflection_residual(table, orbit.points);
        orbit.action = 0.0;
        return orbit;
    }
    return ascent_orbit(table, table.n(), k, seed, starts,
                        [&](const CVec& p, const CVec& nx, CVec& z) {
                            return sphere_update(table, p, nx, z);
                        });
}

PeriodicOrbit find_periodic(const LevelSetBody& body, int k, std::uint64_t seed, int starts) {
    if (k < 2) throw std::invalid_argument("find_periodic needs k >= 2");
    if (k == 2) {
        std::mt19937_64 rng(seed);
        CVec z = body.project(random_unit(body.n(), rng));
        // Polish to an affine diameter: alternate the opposite-point map.
        CVec zs = opposite_point(body, z);
        for (int it = 0; it < 60; ++it) {
            z = opposite_point(body, zs);
            zs = opposite_point(body, z);
        }
        PeriodicOrbit orbit;
        orbit.points = {z, zs};
        orbit.residual = reflection_residual(body, orbit.points);
        orbit.action = 0.0;
        return orbit;
    }
    return ascent_orbit(body, body.n(), k, seed, starts,
                        [&](const CVec& p, const CVec& nx, CVec& z) {
                            return body_update(body, p, nx, z);
                        });
}

namespace {

// Canonical serialization of a 4-cycle under the dihedral action (cyclic
// shifts and reversal): the lexicographically smallest rounded coordinate
// string over the 8 relabelings.
std::vector<double> orbit_signature(const std::vector<CVec>& pts) {
    const size_t k = pts.size();
    auto serialize = [&](const std::vector<size_t>& order) {
        std::vector<double> flat;
        for (size_t idx : order)
            for (const auto& c : pts[idx]) {
                flat.push_back(std::round(c.real() * 1e6) / 1e6);
                flat.push_back(std::round(c.imag() * 1e6) / 1e6);
            }
        return flat;
    };
    std::vector<double> best;
    for (size_t shift = 0; shift < k; ++shift) {
        for (int rev = 0; rev < 2; ++rev) {
            std::vector<size_t> order(k);
            for (size_t i = 0; i < k; ++i)
                order[i] = rev ? (shift + k - i) % k : (shift + i) % k;
            auto cand = serialize(order);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

std::vector<PeriodicOrbit> find_4periodic_diameters(const LevelSetBody& body, int n_starts,
                                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PeriodicOrbit> found;
    std::vector<std::vector<double>> signatures;
    const int n = body.n();
    // Structured seeds inside symmetry subspaces (coordinate lines and
    // two-coordinate diagonals) pick up critical classes the global
    // maximization basins would miss; the rest are random.
    std::vector<std::pair<CVec, CVec>> seeds;
    for (int j = 0; j < n; ++j) {
        CVec e1(n, {0.0, 0.0}), e2(n, {0.0, 0.0});
        e1[j] = {1.0, 0.0};
        e2[j] = {0.0, 1.0};
        seeds.emplace_back(e1, e2);
    }
    for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l)
            for (double sgn : {1.0, -1.0}) {
                CVec e1(n, {0.0, 0.0}), e2(n, {0.0, 0.0});
                e1[j] = {M_SQRT1_2, 0.0};
                e1[l] = {sgn * M_SQRT1_2, 0.0};
                e2[j] = {0.0, M_SQRT1_2};
                e2[l] = {0.0, sgn * M_SQRT1_2};
                seeds.emplace_back(e1, e2);
            }
    for (int s = 0; s < n_starts; ++s) {
        CVec z1, z2;
        if (s < static_cast<int>(seeds.size())) {
            z1 = body.project(seeds[s].first);
            z2 = body.project(seeds[s].second);
        } else {
            z1 = body.project(random_unit(body.n(), rng));
            z2 = body.project(random_unit(body.n(), rng));
        }
        CVec z1s = opposite_point(body, z1);
        CVec z2s = opposite_point(body, z2);
        bool ok = true;
        for (int sweep = 0; sweep < 400; ++sweep) {
            CVec d2 = z2 - z2s;
            if (cnorm(d2) < 1e-12) {
                ok = false;
                break;
            }
            // z1 with characteristic direction parallel to d2, oriented to
            // keep omega(z1 - z1*, z2 - z2*) maximal.
            CVec u = normalized(std::complex<double>(0.0, -1.0) * d2);
            CVec cand = support_point(body, u);
            CVec cands = opposite_point(body, cand);
            double val = 0.0;
            for (size_t j = 0; j < cand.size(); ++j)
                val += std::imag(std::conj(cand[j] - cands[j]) * d2[j]);
            if (val < 0.0) std::swap(cand, cands);
            double move1 = cnorm(cand - z1);
            z1 = cand;
            z1s = cands;

            CVec d1 = z1 - z1s;
            if (cnorm(d1) < 1e-12) {
                ok = false;
                break;
            }
            CVec u2 = normalized(std::complex<double>(0.0, 1.0) * d1);
            CVec cnd = support_point(body, u2);
            CVec cnds = opposite_point(body, cnd);
            double val2 = 0.0;
            for (size_t j = 0; j < cnd.size(); ++j)
                val2 += std::imag(std::conj(d1[j]) * (cnd[j] - cnds[j]));
            if (val2 < 0.0) std::swap(cnd, cnds);
            double move2 = cnorm(cnd - z2);
            z2 = cnd;
            z2s = cnds;
            if (move1 < 1e-13 && move2 < 1e-13) break;
        }
        if (!ok) continue;
        PeriodicOrbit orbit;
        orbit.points = {z1, z2, z1s, z2s};
        orbit.residual = reflection_residual(body, orbit.points);
        orbit.action = orbit_action_body(orbit.points);
        if (orbit.residual >= 1e-8) continue;
        auto sig = orbit_signature(orbit.points);
        bool dup = false;
        for (const auto& s0 : signatures) {
            if (s0.size() != sig.size()) continue;
            double diff = 0.0;
            for (size_t i = 0; i < sig.size(); ++i) diff = std::max(diff, std::abs(s0[i] - sig[i]));
            if (diff < 1e-4) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            signatures.push_back(sig);
            found.push_back(std::move(orbit));
        }
    }
    return found;
}

}  // namespace sympb
