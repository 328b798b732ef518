#ifndef DRROOTS_POLY_HPP
#define DRROOTS_POLY_HPP

#include "drroots/types.hpp"

namespace drroots {

/// Expand leading * prod (z - roots[i]) into the monomial basis.
/// Overflow is not trapped; it surfaces as non-finite coefficients
/// (see CoeffForm::finite).
CoeffForm roots_to_coeffs(const RootForm& p);

/// Horner evaluation.
Complex eval(const CoeffForm& p, Complex z);

/// Product-form evaluation with power-of-two renormalization so that
/// high-degree products neither overflow nor underflow mid-stream.
Complex eval(const RootForm& p, Complex z);

/// Coefficients of q(z) = p(z + shift), obtained by expanding the shifted
/// factors (z - (roots[i] - shift)).  This is the numerically stable route
/// to derivative values at `shift`; it never Taylor-shifts an existing
/// coefficient vector.
CoeffForm shifted_coeffs(const RootForm& p, Complex shift);

/// p^(k)(shift) = k! * [z^k] shifted_coeffs(p, shift), for 0 <= k <= n.
Complex derivative_at(const RootForm& p, Complex shift, int k);

/// Term-by-term derivative of a coefficient vector.
CoeffForm derivative(const CoeffForm& p);

double factorial(int k);

/// All n-1 roots of p', with multiplicity.  An m-fold root of p contributes
/// m-1 copies of itself, emitted exactly.  The remaining critical points are
/// found by simultaneous Aberth-style iteration on the secular equation
/// sum_i m_i/(zeta - u_i) = 0, with p'/p'' assembled from the power sums
/// s_m = sum (zeta - z_i)^(-m):  p'/p = s1,  p''/p = s1^2 - s2.
///
/// Iterates that stall on a common point (a multiple root of p', where the
/// secular sums cancel below double precision) are consolidated: a stalled
/// cluster of size m is refined by Newton on p^(m)/p^(m+1) evaluated through
/// shifted_coeffs, and the refined point is emitted m times.
///
/// Throws IllConditionedError when any residual stays above 1e-9 after
/// refinement; callers running random ensembles reject such trials.
CriticalSet critical_points(const RootForm& p);

/// Residual tolerance enforced by critical_points.
inline constexpr double kCriticalResidualTol = 1e-9;

} // namespace drroots

#endif
