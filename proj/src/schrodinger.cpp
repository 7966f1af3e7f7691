#include "repfuse/schrodinger.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace repfuse {

namespace {

constexpr double kPi = std::numbers::pi;

void require_1d(const GridFunction& f) {
    validate_spec(f.spec);
    if (f.spec.dims != 1) throw std::invalid_argument("operation needs a 1-D grid");
    if (f.values.size() != f.spec.size()) throw std::invalid_argument("grid data size mismatch");
}

void require_2d(const GridFunction& f) {
    validate_spec(f.spec);
    if (f.spec.dims != 2) throw std::invalid_argument("operation needs a 2-D grid");
    if (f.values.size() != f.spec.size()) throw std::invalid_argument("grid data size mismatch");
}

void require_n1(const HnElementR& g) {
    if (g.dim() != 1) throw std::invalid_argument("numerical representations are built for n = 1");
}

// Applies a 1-D in-place transform to every axis-slice of a 2-D array.
template <class Op>
void for_each_slice(GridFunction& f, int axis, Op&& op) {
    int n = f.spec.points;
    std::vector<Complex> buf(static_cast<size_t>(n));
    if (axis == 1) {
        for (int ix = 0; ix < n; ++ix) {
            Complex* row = f.values.data() + static_cast<size_t>(ix) * n;
            op(row, ix);
        }
    } else {
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) buf[ix] = f.values[static_cast<size_t>(ix) * n + iy];
            op(buf.data(), iy);
            for (int ix = 0; ix < n; ++ix) f.values[static_cast<size_t>(ix) * n + iy] = buf[ix];
        }
    }
}

// Centered-frequency Fourier-Plancherel transform of one contiguous slice,
// position order to position order on the conjugate grid:
//   out_m = (dx/sqrt(2 pi)) (-1)^{N/2} (-1)^m DFT_sign[(-1)^j f_j]_m.
void plancherel_buffer(Complex* data, int n, double dx, int sign) {
    for (int j = 1; j < n; j += 2) data[j] = -data[j];
    fft_c2c(data, n, sign);
    double scale = dx / std::sqrt(2.0 * kPi);
    double global = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    for (int m = 0; m < n; ++m) {
        double s = (m % 2 == 0 ? 1.0 : -1.0) * global * scale;
        data[m] *= s;
    }
}

}  // namespace

GridFunction fractional_shift(const GridFunction& f, double a) {
    require_1d(f);
    GridFunction out = f;
    shift_buffer(out.values.data(), out.spec.points, out.spec.half_width, a);
    return out;
}

GridFunction apply_schrodinger(double h, const HnElementR& g, const GridFunction& f) {
    if (h == 0.0) throw std::invalid_argument("Schrodinger parameter h must be nonzero");
    require_1d(f);
    require_n1(g);
    GridFunction out = fractional_shift(f, h * g.p[0]);
    double q = g.q[0];
    double ht = h * g.t;
    for (int j = 0; j < out.spec.points; ++j)
        out.values[j] *= std::polar(1.0, ht + q * out.spec.coord(j));
    return out;
}

GridFunction apply_tensor_schrodinger(double h, double h2, const HnElementR& g,
                                      const GridFunction& f) {
    if (h == 0.0 || h2 == 0.0) throw std::invalid_argument("Schrodinger parameter h must be nonzero");
    require_2d(f);
    require_n1(g);
    GridFunction out = f;
    int n = out.spec.points;
    double L = out.spec.half_width;
    for_each_slice(out, 0, [&](Complex* buf, int) { shift_buffer(buf, n, L, h * g.p[0]); });
    for_each_slice(out, 1, [&](Complex* buf, int) { shift_buffer(buf, n, L, h2 * g.p[0]); });
    double q = g.q[0];
    double ht = (h + h2) * g.t;
    for (int ix = 0; ix < n; ++ix) {
        double x = out.spec.coord(ix);
        for (int iy = 0; iy < n; ++iy) {
            double y = out.spec.coord(iy);
            out.values[static_cast<size_t>(ix) * n + iy] *= std::polar(1.0, ht + q * (x + y));
        }
    }
    return out;
}

Complex matrix_coefficient(double h, const GridFunction& xi, const GridFunction& eta,
                           const HnElementR& g) {
    if (!(xi.spec == eta.spec)) throw std::invalid_argument("grid mismatch in matrix coefficient");
    return inner_product(apply_schrodinger(h, g, xi), eta);
}

Complex tensor_coefficient(double h, double h2, const GridFunction& xi1, const GridFunction& eta1,
                           const GridFunction& xi2, const GridFunction& eta2, const HnElementR& g) {
    return matrix_coefficient(h, xi1, eta1, g) * matrix_coefficient(h2, xi2, eta2, g);
}

Complex gaussian_coefficient_closed_form(double h, const HnElementR& g) {
    require_n1(g);
    double hp = h * g.p[0];
    double q = g.q[0];
    Complex exponent(-hp * hp / 4.0 - q * q / 4.0, h * g.t - hp * q / 2.0);
    return std::exp(exponent);
}

GridFunction sample_gaussian(const GridSpec& spec) {
    GridFunction f = GridFunction::zeros(spec);
    if (spec.dims != 1) throw std::invalid_argument("sample_gaussian builds 1-D vectors");
    double norm = std::pow(kPi, -0.25);
    for (int j = 0; j < spec.points; ++j) {
        double x = spec.coord(j);
        f.values[j] = norm * std::exp(-0.5 * x * x);
    }
    return f;
}

GridFunction sample_wave_packet(const GridSpec& spec, double center, double momentum,
                                double width) {
    GridFunction f = GridFunction::zeros(spec);
    if (spec.dims != 1) throw std::invalid_argument("sample_wave_packet builds 1-D vectors");
    for (int j = 0; j < spec.points; ++j) {
        double x = spec.coord(j);
        double u = (x - center) / width;
        f.values[j] = std::polar(std::exp(-0.5 * u * u), momentum * x);
    }
    scale_to_unit_norm(f);
    return f;
}

GridFunction sample_gaussian_2d(const GridSpec& spec) {
    GridFunction f = GridFunction::zeros(spec);
    if (spec.dims != 2) throw std::invalid_argument("sample_gaussian_2d builds 2-D vectors");
    int n = spec.points;
    double norm = std::pow(kPi, -0.5);
    for (int ix = 0; ix < n; ++ix) {
        double x = spec.coord(ix);
        for (int iy = 0; iy < n; ++iy) {
            double y = spec.coord(iy);
            f.values[static_cast<size_t>(ix) * n + iy] = norm * std::exp(-0.5 * (x * x + y * y));
        }
    }
    return f;
}

CoefficientFunction make_coefficient(double h, GridFunction xi, GridFunction eta) {
    if (h == 0.0) throw std::invalid_argument("Schrodinger parameter h must be nonzero");
    CoefficientFunction phi;
    phi.kind = CoefficientFunction::Kind::Schrodinger;
    phi.h1 = h;
    phi.eval = [h, xi = std::move(xi), eta = std::move(eta)](const HnElementR& g) {
        return matrix_coefficient(h, xi, eta, g);
    };
    return phi;
}

CoefficientFunction make_tensor_coefficient(double h, double h2, GridFunction xi1,
                                            GridFunction eta1, GridFunction xi2,
                                            GridFunction eta2) {
    CoefficientFunction phi;
    phi.kind = CoefficientFunction::Kind::Tensor;
    phi.h1 = h;
    phi.h2 = h2;
    phi.eval = [h, h2, xi1 = std::move(xi1), eta1 = std::move(eta1), xi2 = std::move(xi2),
                eta2 = std::move(eta2)](const HnElementR& g) {
        return tensor_coefficient(h, h2, xi1, eta1, xi2, eta2, g);
    };
    return phi;
}

double pd_gram_min_eig(const CoefficientFunction& phi, const std::vector<HnElementR>& sample) {
    if (sample.empty()) throw std::invalid_argument("positive-definiteness needs a nonempty sample");
    const int n = static_cast<int>(sample.size());
    Eigen::MatrixXcd gram(n, n);
    for (int i = 0; i < n; ++i) {
        HnElementR inv = hn_inverse(sample[i]);
        for (int j = 0; j < n; ++j) {
            gram(i, j) = phi.eval(hn_multiply(inv, sample[j]));
        }
    }
    Eigen::MatrixXcd herm = 0.5 * (gram + gram.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    return solver.eigenvalues().minCoeff();
}

double central_character_residual(const CoefficientFunction& phi, double h,
                                  const std::vector<double>& t_samples) {
    HnElementR e = hn_identity<double>(1);
    Complex at_identity = phi.eval(e);
    double residual = 0.0;
    for (double t : t_samples) {
        HnElementR z = e;
        z.t = t;
        residual = std::max(residual, std::abs(phi.eval(z) - std::polar(1.0, h * t) * at_identity));
    }
    return residual;
}

namespace {

GridFunction plancherel_1d(const GridFunction& f, int sign) {
    require_1d(f);
    GridFunction out = f;
    plancherel_buffer(out.values.data(), out.spec.points, out.spec.dx(), sign);
    out.spec = f.spec.conjugate();
    return out;
}

}  // namespace

GridFunction fourier_plancherel_minus(const GridFunction& f) { return plancherel_1d(f, -1); }
GridFunction fourier_plancherel_plus(const GridFunction& f) { return plancherel_1d(f, +1); }

namespace {

void check_guard_band(const GridFunction& f, const RotationOptions& opts) {
    int n = f.spec.points;
    int guard = std::max(1, static_cast<int>(std::ceil(opts.guard_fraction * n)));
    double boundary = 0.0, total = 0.0;
    for (int ix = 0; ix < n; ++ix) {
        bool bx = ix < guard || ix >= n - guard;
        for (int iy = 0; iy < n; ++iy) {
            bool by = iy < guard || iy >= n - guard;
            double e = std::norm(f.values[static_cast<size_t>(ix) * n + iy]);
            total += e;
            if (bx || by) boundary += e;
        }
    }
    if (total > 0.0 && boundary > opts.energy_threshold * total)
        throw std::invalid_argument(
            "guard-band energy exceeds the rotation admissibility threshold");
}

// g(x,y) = f(x + a*y, y): per-row band-limited x-shift by a*y.
void shear_x(GridFunction& f, double a) {
    int n = f.spec.points;
    double L = f.spec.half_width;
    for_each_slice(f, 0, [&](Complex* buf, int iy) {
        shift_buffer(buf, n, L, a * f.spec.coord(iy));
    });
}

// g(x,y) = f(x, y + b*x): per-column band-limited y-shift by b*x.
void shear_y(GridFunction& f, double b) {
    int n = f.spec.points;
    double L = f.spec.half_width;
    for_each_slice(f, 1, [&](Complex* buf, int ix) {
        shift_buffer(buf, n, L, b * f.spec.coord(ix));
    });
}

}  // namespace

GridFunction rotation_45(const GridFunction& f, int direction, const RotationOptions& opts) {
    require_2d(f);
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("rotation direction must be +-1");
    check_guard_band(f, opts);
    // f o R(theta) with R(theta) = Shx(-tan(theta/2)) Shy(sin theta) Shx(-tan(theta/2));
    // composing the coordinate maps left to right applies the x-shear,
    // the y-shear, then the x-shear again.
    double theta = direction * kPi / 4.0;
    double tx = -std::tan(theta / 2.0);
    double sy = std::sin(theta);
    GridFunction out = f;
    shear_x(out, tx);
    shear_y(out, sy);
    shear_x(out, tx);
    return out;
}

double intertwiner_residual(double h, const HnElementR& g, const GridFunction& f,
                            const RotationOptions& opts) {
    if (h == 0.0) throw std::invalid_argument("Schrodinger parameter h must be nonzero");
    require_2d(f);
    require_n1(g);
    double norm_f = grid_norm(f);
    if (norm_f == 0.0) throw std::invalid_argument("zero test vector");

    // Left side: W (rho_h (x) rho_{-h})(g) W* f.
    GridFunction lhs = rotation_45(f, -1, opts);
    lhs = apply_tensor_schrodinger(h, -h, g, lhs);
    lhs = rotation_45(lhs, +1, opts);

    // Right side: (V+ (x) I) T(sqrt2 q, sqrt2 h p) (V- (x) I) f, with T a
    // left translation: T(a,b) F(w,y) = F(w - a, y - b).
    double a = std::numbers::sqrt2 * g.q[0];
    double b = std::numbers::sqrt2 * h * g.p[0];
    GridFunction rhs = f;
    int n = rhs.spec.points;
    double dx = rhs.spec.dx();
    double conj_half_width = rhs.spec.conjugate().half_width;
    double conj_dx = rhs.spec.conjugate().dx();
    for_each_slice(rhs, 0, [&](Complex* buf, int) {
        plancherel_buffer(buf, n, dx, -1);
        shift_buffer(buf, n, conj_half_width, -a);
        plancherel_buffer(buf, n, conj_dx, +1);
    });
    for_each_slice(rhs, 1, [&](Complex* buf, int) {
        shift_buffer(buf, n, rhs.spec.half_width, -b);
    });

    double err2 = 0.0;
    for (size_t i = 0; i < f.values.size(); ++i) err2 += std::norm(lhs.values[i] - rhs.values[i]);
    double weight = f.spec.dx() * f.spec.dx();
    return std::sqrt(err2 * weight) / norm_f;
}

}  // namespace repfuse
