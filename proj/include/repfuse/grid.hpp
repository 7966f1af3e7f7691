#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace repfuse {

using Complex = std::complex<double>;

// Uniform periodic grid covering [-L, L) per axis with N samples, spacing
// dx = 2L/N.  Frequencies live on the lattice (pi/L) * Z with Nyquist
// half-width W = pi*N/(2L).
struct GridSpec {
    int points = 0;       // per axis, power of two >= 8
    double half_width = 0.0;
    int dims = 1;         // 1 or 2

    double dx() const { return 2.0 * half_width / points; }
    double domega() const;
    double coord(int index) const { return -half_width + index * dx(); }
    // Grid carrying the frequency samples of the transform of this grid.
    GridSpec conjugate() const;
    size_t size() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

void validate_spec(const GridSpec& spec);

// Complex samples in position order: index j at coord(j) for 1-D, index
// ix * N + iy at (coord(ix), coord(iy)) for 2-D.
struct GridFunction {
    GridSpec spec;
    std::vector<Complex> values;

    static GridFunction zeros(const GridSpec& spec);
};

// Quadrature inner product <f,g> = sum f conj(g) dx^dims and derived norm;
// compensated summation keeps the accumulation error independent of N.
Complex inner_product(const GridFunction& f, const GridFunction& g);
double grid_norm(const GridFunction& f);
void scale_to_unit_norm(GridFunction& f);

// In-place complex FFT, sign -1: sum_j x_j e^{-2 pi i jk/N}, sign +1 the
// conjugate kernel, unnormalised.  Thread-safe.
void fft_c2c(Complex* data, int n, int sign);

// Band-limited circular translation g(x) = f(x + a) through a frequency-
// domain phase ramp; exactly unitary, exact index rotation when a is an
// integer multiple of dx.
void shift_buffer(Complex* data, int n, double half_width, double a);

// Flat text serialisation with a small header; values round-trip exactly.
void save_gridfn(const GridFunction& f, std::ostream& out);
GridFunction load_gridfn(std::istream& in);
void save_gridfn_file(const GridFunction& f, const std::string& path);
GridFunction load_gridfn_file(const std::string& path);

}  // namespace repfuse
