// Coherence of an N-mode comb: the visibility collapses within 2L/(kN) of
// zero path difference but revives completely at every multiple of 2L/k.
// Prints the closed form against the spectral transform at a few delays.

#include <cstdio>

#include "fringelab/fringelab.hpp"

int main() {
    using namespace fringelab;

    const int n_modes = 5;
    const double cavity = 0.05;  // m
    const ModeComb comb = make_uniform_comb(speed_of_light / 660e-9, cavity, 1, n_modes);
    const PowerSpectrum lines = comb_spectrum(comb);

    const double revival = 2.0 * cavity;
    std::printf("N = %d modes, cavity %.0f mm: first zero at %.1f mm, revival every %.0f mm\n\n",
                n_modes, cavity * 1e3, revival / n_modes * 1e3, revival * 1e3);
    std::printf("%12s  %12s  %12s\n", "delta_l [m]", "closed form", "transform");
    for (double dl : {0.0, 0.02, 0.05, 0.08, 0.1, 0.25, 0.5}) {
        const double closed = comb_coherence_modulus(dl, n_modes, 1, cavity);
        const double transformed = std::abs(gamma_at_delay(lines, dl / speed_of_light));
        std::printf("%12.3f  %12.6f  %12.6f\n", dl, closed, transformed);
    }

    const VisibilityCurve curve = visibility_curve(CombSource{n_modes, 1, cavity}, 0.0, 0.25, 2001);
    write_curve_csv("comb_revivals.csv", curve);
    std::printf("\nwrote comb_revivals.csv\n");
    return 0;
}
