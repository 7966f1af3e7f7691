#include "repfuse/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace repfuse {

double GridSpec::domega() const { return std::numbers::pi / half_width; }

GridSpec GridSpec::conjugate() const {
    GridSpec out = *this;
    out.half_width = 0.5 * points * domega();
    return out;
}

size_t GridSpec::size() const {
    size_t n = static_cast<size_t>(points);
    return dims == 2 ? n * n : n;
}

void validate_spec(const GridSpec& spec) {
    if (spec.points < 8 || (spec.points & (spec.points - 1)) != 0)
        throw std::invalid_argument("grid size must be a power of two >= 8");
    if (!(spec.half_width > 0.0)) throw std::invalid_argument("grid half-width must be positive");
    if (spec.dims != 1 && spec.dims != 2) throw std::invalid_argument("grids are 1-D or 2-D");
}

GridFunction GridFunction::zeros(const GridSpec& spec) {
    validate_spec(spec);
    GridFunction f;
    f.spec = spec;
    f.values.assign(spec.size(), Complex(0.0, 0.0));
    return f;
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
    if (!(f.spec == g.spec)) throw std::invalid_argument("grid mismatch in inner product");
    // Kahan-compensated accumulation.
    Complex sum(0.0, 0.0), comp(0.0, 0.0);
    for (size_t i = 0; i < f.values.size(); ++i) {
        Complex term = f.values[i] * std::conj(g.values[i]) - comp;
        Complex next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    double weight = f.spec.dx();
    if (f.spec.dims == 2) weight *= weight;
    return sum * weight;
}

double grid_norm(const GridFunction& f) { return std::sqrt(std::abs(inner_product(f, f))); }

void scale_to_unit_norm(GridFunction& f) {
    double n = grid_norm(f);
    if (n == 0.0) throw std::invalid_argument("cannot normalise the zero function");
    for (Complex& v : f.values) v /= n;
}

void fft_c2c(Complex* data, int n, int sign) {
    static std::mutex planner_mutex;
    static std::map<std::pair<int, int>, fftw_plan> plans;
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        auto key = std::make_pair(n, sign);
        auto it = plans.find(key);
        if (it == plans.end()) {
            std::vector<Complex> scratch(static_cast<size_t>(n));
            auto* s = reinterpret_cast<fftw_complex*>(scratch.data());
            plan = fftw_plan_dft_1d(n, s, s, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
            plans.emplace(key, plan);
        } else {
            plan = it->second;
        }
    }
    auto* d = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, d, d);
}

void shift_buffer(Complex* data, int n, double half_width, double a) {
    if (a == 0.0) return;
    fft_c2c(data, n, -1);
    double base = std::numbers::pi / half_width;  // frequency spacing
    double inv_n = 1.0 / n;
    for (int k = 0; k < n; ++k) {
        int centered = k < n / 2 ? k : k - n;
        data[k] *= std::polar(inv_n, base * centered * a);
    }
    fft_c2c(data, n, +1);
}

void save_gridfn(const GridFunction& f, std::ostream& out) {
    out.precision(17);
    out << "repfuse-grid 1\n";
    out << f.spec.points << " " << f.spec.half_width << " " << f.spec.dims << "\n";
    for (const Complex& v : f.values) out << v.real() << " " << v.imag() << "\n";
}

GridFunction load_gridfn(std::istream& in) {
    std::string magic, version;
    in >> magic >> version;
    if (magic != "repfuse-grid" || version != "1")
        throw std::invalid_argument("not a grid-function stream");
    GridSpec spec;
    in >> spec.points >> spec.half_width >> spec.dims;
    if (!in) throw std::invalid_argument("truncated grid-function header");
    validate_spec(spec);
    GridFunction f = GridFunction::zeros(spec);
    for (Complex& v : f.values) {
        double re, im;
        in >> re >> im;
        if (!in) throw std::invalid_argument("truncated grid-function data");
        v = Complex(re, im);
    }
    return f;
}

void save_gridfn_file(const GridFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    save_gridfn(f, out);
}

GridFunction load_gridfn_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return load_gridfn(in);
}

}  // namespace repfuse
