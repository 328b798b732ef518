#ifndef DRROOTS_TYPES_HPP
#define DRROOTS_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace drroots {

using Complex = std::complex<double>;

/// Polynomial held as its roots plus a leading coefficient:
/// p(z) = leading * prod_i (z - roots[i]).  Repeated roots are allowed.
struct RootForm {
    std::vector<Complex> roots;
    Complex leading{1.0, 0.0};

    int degree() const { return static_cast<int>(roots.size()); }
};

/// Polynomial as a coefficient vector in the monomial basis,
/// ascending degree: coeffs[k] multiplies z^k.
struct CoeffForm {
    std::vector<Complex> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool finite() const {
        for (const Complex& c : coeffs)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }
};

/// Roots of p' with scale-normalized residuals |p'(zeta)| / (|leading| * max(1,|zeta|)^(n-1)).
struct CriticalSet {
    std::vector<Complex> zetas;
    std::vector<double> residuals;
};

class IllConditionedError : public std::runtime_error {
public:
    explicit IllConditionedError(const std::string& what) : std::runtime_error(what) {}
};

class DerivativeZeroError : public std::runtime_error {
public:
    explicit DerivativeZeroError(const std::string& what) : std::runtime_error(what) {}
};

class LevelIncompleteError : public std::runtime_error {
public:
    explicit LevelIncompleteError(const std::string& what) : std::runtime_error(what) {}
};

class BadRootError : public std::runtime_error {
public:
    explicit BadRootError(const std::string& what) : std::runtime_error(what) {}
};

class ReportSchemaError : public std::runtime_error {
public:
    explicit ReportSchemaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace drroots

#endif
