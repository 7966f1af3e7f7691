#include "repfuse/heisenberg.hpp"

#include <cmath>

namespace repfuse {

std::complex<double> character_eval(const CharacterParams& c, const HnElementR& a) {
    if (c.xi.size() != a.dim() || c.eta.size() != a.dim())
        throw std::invalid_argument("character parameter dimension mismatch");
    double phase = 0.0;
    for (size_t i = 0; i < a.dim(); ++i) phase += a.p[i] * c.xi[i] + a.q[i] * c.eta[i];
    return std::polar(1.0, phase);
}

HaarBox default_haar_box(size_t n) {
    HaarBox box;
    box.half_widths.assign(2 * n + 1, 6.0);
    box.half_widths.back() = 12.0;  // the centre coordinate picks up p.q shear terms
    box.points.assign(2 * n + 1, 96);
    return box;
}

namespace {

// Midpoint lattice: x_j = -L + (j + 1/2) * (2L / N), j = 0..N-1.
double axis_coord(double half_width, int points, int index) {
    double step = 2.0 * half_width / points;
    return -half_width + (index + 0.5) * step;
}

}  // namespace

double haar_invariance_residual(const std::function<double(const HnElementR&)>& phi,
                                const HnElementR& shift, const HaarBox& box) {
    size_t axes = box.half_widths.size();
    if (axes != box.points.size() || axes < 3 || axes % 2 == 0)
        throw std::invalid_argument("box must cover 2n+1 axes");
    size_t n = (axes - 1) / 2;
    if (shift.dim() != n) throw std::invalid_argument("shift dimension does not match the box");

    double volume = 1.0;
    for (size_t ax = 0; ax < axes; ++ax) {
        if (box.points[ax] < 2 || box.half_widths[ax] <= 0.0)
            throw std::invalid_argument("degenerate box axis");
        volume *= 2.0 * box.half_widths[ax] / box.points[ax];
    }

    double sum_plain = 0.0, sum_shifted = 0.0;
    double max_plain = 0.0, max_shifted = 0.0, boundary_abs = 0.0;
    std::vector<int> index(axes, 0);
    HnElementR x = hn_identity<double>(n);
    for (;;) {
        bool boundary = false;
        for (size_t ax = 0; ax < axes; ++ax) {
            if (index[ax] == 0 || index[ax] == box.points[ax] - 1) boundary = true;
            double c = axis_coord(box.half_widths[ax], box.points[ax], index[ax]);
            if (ax < n)
                x.p[ax] = c;
            else if (ax < 2 * n)
                x.q[ax - n] = c;
            else
                x.t = c;
        }
        double v0 = phi(x);
        double v1 = phi(hn_multiply(shift, x));
        sum_plain += v0;
        sum_shifted += v1;
        max_plain = std::max(max_plain, std::abs(v0));
        max_shifted = std::max(max_shifted, std::abs(v1));
        if (boundary) boundary_abs = std::max({boundary_abs, std::abs(v0), std::abs(v1)});

        size_t ax = 0;
        while (ax < axes && ++index[ax] == box.points[ax]) index[ax++] = 0;
        if (ax == axes) break;
    }

    double max_abs = std::max(max_plain, max_shifted);
    if (max_abs > 0.0 && boundary_abs > 1e-12 * max_abs)
        throw std::invalid_argument("test function support reaches the grid boundary");
    if (max_plain > 0.0 && max_shifted == 0.0)
        throw std::invalid_argument("support of the translate misses the grid box");
    return std::abs(sum_shifted - sum_plain) * volume;
}

std::function<double(const HnElementR&)> haar_test_bump(std::vector<double> support_half_widths) {
    return [w = std::move(support_half_widths)](const HnElementR& x) {
        double value = 1.0;
        size_t n = x.dim();
        auto factor = [](double coord, double half) {
            double u = coord / half;
            double s = 1.0 - u * u;
            if (s <= 0.0) return 0.0;
            double s2 = s * s;
            return s2 * s2 * s2 * s;  // (1-u^2)^7, C^6 at the support edge
        };
        for (size_t i = 0; i < n; ++i) {
            value *= factor(x.p[i], w.at(i));
            value *= factor(x.q[i], w.at(n + i));
        }
        value *= factor(x.t, w.at(2 * n));
        return value;
    };
}

}  // namespace repfuse
