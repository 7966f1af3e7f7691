#pragma once

#include <functional>

#include "repfuse/grid.hpp"
#include "repfuse/heisenberg.hpp"

namespace repfuse {

// Band-limited translation g(x) = f(x + a) on a 1-D grid; exactly unitary.
GridFunction fractional_shift(const GridFunction& f, double a);

// rho_h(p,q,t) f(x) = e^{i(ht + qx)} f(x + hp) on a 1-D grid, n = 1.
// h = 0 is rejected: the Schrodinger family is parameterised by h != 0.
GridFunction apply_schrodinger(double h, const HnElementR& g, const GridFunction& f);

// (rho_h (x) rho_h2)(p,q,t) on a 2-D grid: phase e^{i((h+h2)t + q(x+y))},
// argument shifts (x + h p, y + h2 p).
GridFunction apply_tensor_schrodinger(double h, double h2, const HnElementR& g,
                                      const GridFunction& f);

// Quadrature matrix coefficient <rho_h(g) xi, eta>.
Complex matrix_coefficient(double h, const GridFunction& xi, const GridFunction& eta,
                           const HnElementR& g);

// Coefficient of the tensor product at elementary tensors: the pointwise
// product of the two factor coefficients.
Complex tensor_coefficient(double h, double h2, const GridFunction& xi1, const GridFunction& eta1,
                           const GridFunction& xi2, const GridFunction& eta2, const HnElementR& g);

// Closed form for the diagonal coefficient of the unit Gaussian
// gamma(x) = pi^{-1/4} e^{-x^2/2}:
//   <rho_h(p,q,t) gamma, gamma> = e^{iht} e^{-(hp)^2/4 - q^2/4 - i hp q / 2}.
Complex gaussian_coefficient_closed_form(double h, const HnElementR& g);

// Samples of the unit Gaussian and of modulated Gaussian wave packets.
GridFunction sample_gaussian(const GridSpec& spec);
GridFunction sample_wave_packet(const GridSpec& spec, double center, double momentum,
                                double width);
GridFunction sample_gaussian_2d(const GridSpec& spec);

struct CoefficientFunction {
    enum class Kind { Schrodinger, Tensor };
    Kind kind = Kind::Schrodinger;
    double h1 = 0.0;
    double h2 = 0.0;  // Tensor only; the quotient-regular case is h2 = -h1
    std::function<Complex(const HnElementR&)> eval;
};

CoefficientFunction make_coefficient(double h, GridFunction xi, GridFunction eta);
CoefficientFunction make_tensor_coefficient(double h, double h2, GridFunction xi1,
                                            GridFunction eta1, GridFunction xi2,
                                            GridFunction eta2);

// Minimum eigenvalue of the Hermitian Gram matrix [phi(s_i^{-1} s_j)]; for a
// diagonal coefficient this is nonnegative up to quadrature error.
double pd_gram_min_eig(const CoefficientFunction& phi, const std::vector<HnElementR>& sample);

// max_t |phi(0,0,t) - e^{iht} phi(0,0,0)|.
double central_character_residual(const CoefficientFunction& phi, double h,
                                  const std::vector<double>& t_samples);

// Unitary Fourier-Plancherel transform with continuum normalisation,
// kernel e^{sign * i omega x} / sqrt(2 pi); output lives on the conjugate
// grid.  plus(minus(f)) = f up to rounding.
GridFunction fourier_plancherel_minus(const GridFunction& f);
GridFunction fourier_plancherel_plus(const GridFunction& f);

struct RotationOptions {
    double guard_fraction = 0.10;     // boundary frame width per axis
    double energy_threshold = 1e-8;   // admissible boundary energy fraction
};

// W f(x,y) = f((x-y)/sqrt2, (x+y)/sqrt2) for direction +1 and its adjoint
// for direction -1, realised by the three-shear decomposition of the
// rotation by +-45 degrees; exactly unitary.  Throws std::invalid_argument
// when the guard-band energy exceeds the threshold (aliasing hazard).
GridFunction rotation_45(const GridFunction& f, int direction,
                         const RotationOptions& opts = {});

// Relative residual of the intertwining identity
//   W (rho_h (x) rho_{-h})(g) W*  =  (V+ (x) I) T(sqrt2 q, sqrt2 h p) (V- (x) I)
// evaluated on f; T is translation realised by per-axis band-limited shifts.
double intertwiner_residual(double h, const HnElementR& g, const GridFunction& f,
                            const RotationOptions& opts = {});

}  // namespace repfuse
