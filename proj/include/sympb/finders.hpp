#pragma once

#include <cstdint>

#include "sympb/levelset.hpp"
#include "sympb/sphere.hpp"

namespace sympb {

struct PeriodicOrbit {
    std::vector<CVec> points;
    double residual = 0.0;   // worst reflection residual over the vertices
    double action = 0.0;     // sum of omega over the closed chord cycle
};

// Worst deviation of z_{i+1} - z_{i-1} from the characteristic direction at
// z_i (norm of the orthogonal component). For 2-periodic orbits, the
// deviation of the endpoint normals from antipodality.
double reflection_residual(const WeightedSphere& table, const std::vector<CVec>& points);
double reflection_residual(const LevelSetBody& body, const std::vector<CVec>& points);

// Variational k-periodic orbit: maximizes F = sum omega(z_i, z_{i+1}) over
// inscribed k-gons by cyclic best-response updates (each vertex moves to
// the point whose characteristic direction is parallel to its neighbor
// diagonal); degenerate configurations restart. k = 2 returns a diameter
// pair via the opposite-point involution.
PeriodicOrbit find_periodic(const WeightedSphere& table, int k, std::uint64_t seed = 0,
                            int starts = 16);
PeriodicOrbit find_periodic(const LevelSetBody& body, int k, std::uint64_t seed = 0,
                            int starts = 16);

// 4-periodic orbits z1 z2 z1* z2* from critical points of the two-diameter
// functional omega(z1 - z1*, z2 - z2*), by alternating exact maximization;
// orbits deduplicated under the dihedral action using the coordinate
// magnitude signature.
std::vector<PeriodicOrbit> find_4periodic_diameters(const LevelSetBody& body, int n_starts,
                                                    std::uint64_t seed = 0);

}  // namespace sympb
