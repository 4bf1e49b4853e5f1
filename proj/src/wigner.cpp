#include "epur/wigner.hpp"

#include "epur/hermite.hpp"
#include "epur/kernels.hpp"
#include "epur/quadrature.hpp"
#include "parallel.hpp"

#include <cmath>

namespace epur {

namespace {

constexpr double kNormGate = 1e-5;

int auto_gl_order(const Grid1D& xgrid, const Grid1D& pgrid, double hbar) {
    // The integrand oscillates up to `phase` radians across the half-range;
    // one node per radian plus margin keeps the rule in its superexponential
    // convergence regime everywhere on the grid.
    const double half_range = xgrid.hi - xgrid.lo;
    const double pmax = std::max(std::abs(pgrid.lo), std::abs(pgrid.hi));
    const double phase = pmax * half_range / hbar;
    int order = static_cast<int>(std::ceil(phase)) + 64;
    if (order % 2 == 1) ++order;
    return order;
}

struct StateView {
    const Eigen::MatrixXcd* rho = nullptr; // general Hermitian
    const Eigen::VectorXcd* psi = nullptr; // rank-1 fast path
    bool diagonal = false;
    int neff = 0;
    double hbar = 1.0;
};

WignerGrid evaluate(const StateView& sv, const Grid1D& xgrid,
                    const Grid1D& pgrid, int gl_order) {
    const double hbar = sv.hbar;
    if (gl_order <= 0) gl_order = auto_gl_order(xgrid, pgrid, hbar);
    if (gl_order % 2 == 1) ++gl_order;

    // Symmetric rule, positive-y half only: <x+y/2|rho|x-y/2> at -y is the
    // conjugate at +y, so W = 2 sum_q w_q [cos(py/hbar) Re g + sin(py/hbar) Im g].
    const GaussLegendre gl =
        GaussLegendre(gl_order).scaled(xgrid.hi - xgrid.lo);
    const int qh = gl_order / 2;
    std::vector<double> ynode(qh), yweight(qh);
    for (int q = 0; q < qh; ++q) {
        ynode[q] = gl.nodes[qh + q];
        yweight[q] = gl.weights[qh + q];
    }

    const int nx = xgrid.npts;
    const int np = pgrid.npts;
    const int dim = sv.neff + 1;
    const double prefactor = 1.0 / (M_PI * hbar); // 2 * (2 pi hbar)^-1

    // Phase tables, evaluated at |p| with the sign pushed onto the sine row
    // so mirrored p rows match bitwise on symmetric grids.
    std::vector<double> ctab(static_cast<std::size_t>(np) * qh);
    std::vector<double> stab(static_cast<std::size_t>(np) * qh);
    detail::parallel_for(np, [&](int j) {
        const double p = pgrid.point(j);
        const double ap = std::abs(p);
        const double sign = p < 0.0 ? -1.0 : 1.0;
        for (int q = 0; q < qh; ++q) {
            const double arg = ap * ynode[q] / hbar;
            const double w = prefactor * yweight[q];
            ctab[static_cast<std::size_t>(j) * qh + q] = w * std::cos(arg);
            stab[static_cast<std::size_t>(j) * qh + q] =
                sign * w * std::sin(arg);
        }
    });

    // Split the state into flat real blocks once.
    std::vector<double> rre, rim, dia, cre, cim;
    if (sv.psi) {
        cre.resize(dim);
        cim.resize(dim);
        for (int n = 0; n < dim; ++n) {
            cre[n] = (*sv.psi)(n).real();
            cim[n] = (*sv.psi)(n).imag();
        }
    } else if (sv.diagonal) {
        dia.resize(dim);
        for (int n = 0; n < dim; ++n) dia[n] = (*sv.rho)(n, n).real();
    } else {
        rre.resize(static_cast<std::size_t>(dim) * dim);
        rim.resize(static_cast<std::size_t>(dim) * dim);
        for (int m = 0; m < dim; ++m)
            for (int n = 0; n < dim; ++n) {
                rre[static_cast<std::size_t>(m) * dim + n] = (*sv.rho)(m, n).real();
                rim[static_cast<std::size_t>(m) * dim + n] = (*sv.rho)(m, n).imag();
            }
    }

    WignerGrid out{xgrid, pgrid,
                   std::vector<double>(static_cast<std::size_t>(nx) * np)};
    detail::parallel_for(nx, [&](int i) {
        const auto& k = kernels::active();
        const double x = xgrid.point(i);
        std::vector<double> u(dim), v(dim), scratch(dim);
        std::vector<double> gre(qh, 0.0), gim(qh, 0.0);
        for (int q = 0; q < qh; ++q) {
            hermite_point(x + 0.5 * ynode[q], sv.neff, hbar, u.data());
            hermite_point(x - 0.5 * ynode[q], sv.neff, hbar, v.data());
            if (sv.psi) {
                const double ar = k.dot(u.data(), cre.data(), dim);
                const double ai = k.dot(u.data(), cim.data(), dim);
                const double br = k.dot(v.data(), cre.data(), dim);
                const double bi = k.dot(v.data(), cim.data(), dim);
                // (u.c)(v.c)* = (ar + i ai)(br - i bi)
                gre[q] = ar * br + ai * bi;
                gim[q] = ai * br - ar * bi;
            } else if (sv.diagonal) {
                // u*v first: the product is mirror-symmetric bitwise, which
                // keeps W(x,p) = W(-x,-p) exact for Fock-diagonal states.
                for (int n = 0; n < dim; ++n) scratch[n] = u[n] * v[n];
                gre[q] = k.dot(dia.data(), scratch.data(), dim);
                gim[q] = 0.0;
            } else {
                gre[q] = k.bilinear(rre.data(), u.data(), v.data(), dim, dim);
                gim[q] = k.bilinear(rim.data(), u.data(), v.data(), dim, dim);
            }
        }
        double* row = out.values.data() + static_cast<std::size_t>(i) * np;
        for (int j = 0; j < np; ++j)
            row[j] = k.dot_dual(ctab.data() + static_cast<std::size_t>(j) * qh,
                                gre.data(),
                                stab.data() + static_cast<std::size_t>(j) * qh,
                                gim.data(), qh);
    });

    const double total = out.integral();
    if (std::abs(total - 1.0) > kNormGate)
        throw grid_error("wigner: double integral " + std::to_string(total) +
                             " differs from 1 beyond " + std::to_string(kNormGate) +
                             "; grid inadequate for this state",
                         xgrid.hi);
    for (double& w : out.values) w /= total;
    return out;
}

} // namespace

double WignerGrid::integral() const {
    const auto wx = xgrid.trapezoid_weights();
    const auto wp = pgrid.trapezoid_weights();
    double acc = 0.0;
    for (int i = 0; i < xgrid.npts; ++i) {
        const double* row = values.data() + static_cast<std::size_t>(i) * pgrid.npts;
        double rowacc = 0.0;
        for (int j = 0; j < pgrid.npts; ++j) rowacc += wp[j] * row[j];
        acc += wx[i] * rowacc;
    }
    return acc;
}

double WignerGrid::min_value() const {
    double m = values.empty() ? 0.0 : values[0];
    for (double v : values) m = std::min(m, v);
    return m;
}

std::vector<double> WignerGrid::marginalize_over_p() const {
    const auto wp = pgrid.trapezoid_weights();
    std::vector<double> out(xgrid.npts, 0.0);
    for (int i = 0; i < xgrid.npts; ++i) {
        const double* row = values.data() + static_cast<std::size_t>(i) * pgrid.npts;
        double acc = 0.0;
        for (int j = 0; j < pgrid.npts; ++j) acc += wp[j] * row[j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> WignerGrid::marginalize_over_x() const {
    const auto wx = xgrid.trapezoid_weights();
    std::vector<double> out(pgrid.npts, 0.0);
    for (int j = 0; j < pgrid.npts; ++j) {
        double acc = 0.0;
        for (int i = 0; i < xgrid.npts; ++i)
            acc += wx[i] * values[static_cast<std::size_t>(i) * pgrid.npts + j];
        out[j] = acc;
    }
    return out;
}

WignerGrid wigner(const FockDensity& rho, const Grid1D& xgrid,
                  const Grid1D& pgrid, int gl_order) {
    StateView sv;
    sv.rho = &rho.matrix;
    sv.neff = rho.top_occupied(0.0);
    sv.hbar = rho.hbar;
    double offdiag = 0.0;
    for (int m = 0; m <= sv.neff; ++m)
        for (int n = 0; n <= sv.neff; ++n)
            if (m != n) offdiag = std::max(offdiag, std::abs(rho.matrix(m, n)));
    sv.diagonal = (offdiag == 0.0);
    return evaluate(sv, xgrid, pgrid, gl_order);
}

WignerGrid wigner(const FockVector& psi, const Grid1D& xgrid,
                  const Grid1D& pgrid, int gl_order) {
    StateView sv;
    sv.psi = &psi.amplitudes;
    sv.neff = psi.top_occupied(0.0);
    sv.hbar = psi.hbar;
    return evaluate(sv, xgrid, pgrid, gl_order);
}

double min_wigner(const WignerGrid& w) { return w.min_value(); }

} // namespace epur
