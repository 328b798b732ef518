#ifndef DRROOTS_DR_GEOMETRY_HPP
#define DRROOTS_DR_GEOMETRY_HPP

#include <span>
#include <vector>

#include "drroots/types.hpp"

namespace drroots {

/// A critical point zeta paired with its radius rho.  An infinite radius is
/// an explicit flag (only possible when p(zeta) itself is non-finite), never
/// the byproduct of floating overflow.
struct DrDisk {
    Complex center;
    double radius = 0.0;

    bool finite_radius() const { return std::isfinite(radius); }
};

struct Annulus {
    Complex center;
    double inner = 0.0;
    double outer = 0.0;
};

/// Quotient |z - zeta_j| / rho_j for the disk whose quotient is closest to 1.
struct IotaRecord {
    Complex root;
    int circle_index = 0;
    double quotient = 0.0;
};

/// rho = min over k = 2..n of |p(zeta) k! / p^(k)(zeta)|^(1/k), with k-terms
/// whose derivative vanishes treated as infinite.  Returns 0 when p(zeta) = 0.
/// `zeta` is expected to be a critical point of p; this is not checked.
double rho(const RootForm& p, Complex zeta);

/// Same min-formula applied to an already-shifted coefficient vector
/// q(z) = p(z + zeta) (ascending, length n+1); q[k] = p^(k)(zeta)/k!.
double rho_from_shifted(std::span<const Complex> shifted);

/// One disk per critical point, in CriticalSet order.
std::vector<DrDisk> dr_disks(const RootForm& p);

/// The record whose quotient minimizes |log quotient|.  A zero-radius disk
/// yields quotient +infinity, unless the root coincides with its center, in
/// which case the quotient is 1 by convention.
IotaRecord iota_for_root(Complex z, std::span<const DrDisk> disks);

std::vector<Annulus> annuli_from_disks(std::span<const DrDisk> disks, double iota1,
                                       double iota2);

/// For each root of p: does it lie in at least one annulus
/// [iota1 * rho_j, iota2 * rho_j] about zeta_j?  Requires 0 < iota1 <= 1 <= iota2.
std::vector<bool> containment_check(const RootForm& p, double iota1, double iota2);

} // namespace drroots

#endif
