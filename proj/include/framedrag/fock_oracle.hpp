#pragma once

// Discretized two-photon oracle for the HOM coincidence probability.
//
// The spectrum is sampled on M bins. Photon 1 enters port 1 with amplitude
// c_j in bin j, photon 2 enters port 2 with amplitude c_k exp(-i w_k dt).
// A 50:50 beamsplitter maps a1+ -> (a3+ + i a4+)/sqrt2 and
// a2+ -> (a4+ + i a3+)/sqrt2, so each input pair (j, k) expands into four
// creation-operator products. Coefficients are accumulated per normal-ordered
// output term and the coincidence probability is the squared norm of the
// a3+ a4+ sector. This is a test oracle: it never calls the closed forms.

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "framedrag/errors.hpp"
#include "framedrag/interference.hpp"

namespace framedrag::interference {

struct FockGrid {
    std::vector<double> omega;
    std::vector<double> weight;  // sums to 1
};

/// Midpoint discretization of a Wavepacket over w0 +- half_width_sigmas * sigma.
inline FockGrid discretize(const Wavepacket& packet, std::size_t bins, double half_width_sigmas = 8.0) {
    detail::require(bins >= 1 && bins <= 2048, "discretize: bins must be in [1, 2048]");
    FockGrid g;
    if (auto l = std::get_if<Wavepacket::Lines>(&packet.shape())) {
        g.omega = l->omega;
        g.weight = l->weight;
        return g;
    }
    const double w0 = packet.omega0();
    const double half = half_width_sigmas * packet.sigma();
    const double lo = std::max(0.0, w0 - half);
    const double step = (w0 + half - lo) / static_cast<double>(bins);
    double total = 0.0;
    for (std::size_t j = 0; j < bins; ++j) {
        const double w = lo + (static_cast<double>(j) + 0.5) * step;
        g.omega.push_back(w);
        g.weight.push_back(packet.density(w) * step);
        total += g.weight.back();
    }
    detail::require(total > 0.0, "discretize: spectrum has no weight on the grid");
    for (double& x : g.weight) x /= total;
    return g;
}

struct FockOutcome {
    double coincidence = 0.0;  // one photon in each output port
    double bunched = 0.0;      // both photons in the same port
};

inline FockOutcome fock_oracle_hom_detailed(std::span<const double> omega, std::span<const double> weight,
                                            double delta_t) {
    detail::require(omega.size() == weight.size() && !omega.empty() && omega.size() <= 2048,
                    "fock_oracle_hom: need 1..2048 bins with matching weights");
    using cplx = std::complex<double>;
    const std::size_t m = omega.size();
    const cplx i{0.0, 1.0};
    const double half = 0.5;  // (1/sqrt2)^2 from the two beamsplitter factors

    std::vector<cplx> amp1(m), amp2(m);
    for (std::size_t j = 0; j < m; ++j) {
        amp1[j] = std::sqrt(weight[j]);
        amp2[j] = std::sqrt(weight[j]) * std::polar(1.0, -omega[j] * delta_t);
    }

    // coinc[p*m + q]: coefficient of a3+(p) a4+(q).
    // same3 / same4: coefficients of a3+(p) a3+(q), a4+(p) a4+(q), stored
    // unsymmetrized and symmetrized when the norm is taken.
    std::vector<cplx> coinc(m * m), same3(m * m), same4(m * m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            const cplx c = half * amp1[j] * amp2[k];
            coinc[j * m + k] += c;          // a3+(j) a4+(k)
            same3[j * m + k] += i * c;      // i a3+(j) a3+(k)
            same4[j * m + k] += i * c;      // i a4+(j) a4+(k)
            coinc[k * m + j] += -c;         // -a4+(j) a3+(k) = -a3+(k) a4+(j)
        }
    }

    FockOutcome out;
    for (const cplx& c : coinc) out.coincidence += std::norm(c);
    // a+(p) a+(q)|0> has norm 1 for p != q; a+(p)^2 |0> has norm^2 2.
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = p; q < m; ++q) {
            if (p == q) {
                out.bunched += 2.0 * (std::norm(same3[p * m + p]) + std::norm(same4[p * m + p]));
            } else {
                out.bunched += std::norm(same3[p * m + q] + same3[q * m + p]);
                out.bunched += std::norm(same4[p * m + q] + same4[q * m + p]);
            }
        }
    }
    return out;
}

inline double fock_oracle_hom(std::span<const double> omega, std::span<const double> weight, double delta_t) {
    return fock_oracle_hom_detailed(omega, weight, delta_t).coincidence;
}

inline double fock_oracle_hom(const FockGrid& grid, double delta_t) {
    return fock_oracle_hom(grid.omega, grid.weight, delta_t);
}

} // namespace framedrag::interference
