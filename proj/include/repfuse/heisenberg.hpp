#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "repfuse/rational.hpp"

namespace repfuse {

// A point (p, q, t) of the polarized-form Heisenberg group.  Scalar is
// Rational for exact algebraic identities and double for numerics; exact
// elements compose to exact elements by construction.
template <class Scalar>
struct HnPoint {
    std::vector<Scalar> p, q;
    Scalar t{};

    size_t dim() const { return p.size(); }
};

using HnElementQ = HnPoint<Rational>;
using HnElementR = HnPoint<double>;

template <class Scalar>
HnPoint<Scalar> hn_identity(size_t n) {
    HnPoint<Scalar> e;
    e.p.assign(n, Scalar{});
    e.q.assign(n, Scalar{});
    e.t = Scalar{};
    return e;
}

// Group law (p,q,t)(p',q',t') = (p+p', q+q', t + p.q' + t').
template <class Scalar>
HnPoint<Scalar> hn_multiply(const HnPoint<Scalar>& a, const HnPoint<Scalar>& b) {
    if (a.dim() != b.dim() || a.p.size() != a.q.size() || b.p.size() != b.q.size())
        throw std::invalid_argument("Heisenberg elements of mismatched dimension");
    HnPoint<Scalar> out;
    out.p.resize(a.dim());
    out.q.resize(a.dim());
    Scalar cross{};
    for (size_t i = 0; i < a.dim(); ++i) {
        out.p[i] = a.p[i] + b.p[i];
        out.q[i] = a.q[i] + b.q[i];
        cross += a.p[i] * b.q[i];
    }
    out.t = a.t + cross + b.t;
    return out;
}

// (p,q,t)^{-1} = (-p, -q, -t + p.q).
template <class Scalar>
HnPoint<Scalar> hn_inverse(const HnPoint<Scalar>& a) {
    HnPoint<Scalar> out;
    out.p.resize(a.dim());
    out.q.resize(a.dim());
    Scalar cross{};
    for (size_t i = 0; i < a.dim(); ++i) {
        out.p[i] = -a.p[i];
        out.q[i] = -a.q[i];
        cross += a.p[i] * a.q[i];
    }
    out.t = -a.t + cross;
    return out;
}

// Projection onto the central quotient, constant on cosets of the centre.
template <class Scalar>
std::vector<Scalar> quotient_project(const HnPoint<Scalar>& a) {
    std::vector<Scalar> out = a.p;
    out.insert(out.end(), a.q.begin(), a.q.end());
    return out;
}

template <class Scalar>
bool hn_commutes(const HnPoint<Scalar>& a, const HnPoint<Scalar>& b) {
    auto ab = hn_multiply(a, b);
    auto ba = hn_multiply(b, a);
    return ab.p == ba.p && ab.q == ba.q && ab.t == ba.t;
}

struct CharacterParams {
    std::vector<double> xi, eta;
};

// chi_{xi,eta}(p,q,t) = exp(i(p.xi + q.eta)); unimodular by construction.
std::complex<double> character_eval(const CharacterParams& c, const HnElementR& a);

// Uniform box grid on R^{2n+1} for the invariance quadrature.  Axis order is
// (p_1..p_n, q_1..q_n, t); half_widths and points per axis.
struct HaarBox {
    std::vector<double> half_widths;
    std::vector<int> points;
};

HaarBox default_haar_box(size_t n);

// |sum phi(shift.x) - sum phi(x)| * cell volume for a compactly supported
// test function sampled on the box.  Throws std::invalid_argument when the
// support of phi or of its left translate reaches the boundary cell layer.
double haar_invariance_residual(const std::function<double(const HnElementR&)>& phi,
                                const HnElementR& shift, const HaarBox& box);

// Smooth compactly supported product bump used by the verification suites:
// prod_i (1 - (x_i/w_i)^2)^7 inside the support box, 0 outside.
std::function<double(const HnElementR&)> haar_test_bump(std::vector<double> support_half_widths);

}  // namespace repfuse
