#include <cmath>

#include "doctest.h"
#include "qsplice/analytics.hpp"
#include "qsplice/bench.hpp"
#include "qsplice/sim.hpp"

using namespace qsplice;
using doctest::Approx;

TEST_SUITE("analytics") {

TEST_CASE("single-stage transition probabilities") {
    ResetChannel ch = ResetChannel::defaults();
    // Staying excited: misread 1->0 (no X), or correct read but failed X.
    CHECK(stay_excited_prob(ch) == Approx(0.0326 + (1 - 0.0326) * 0.0020).epsilon(1e-15));
    CHECK(stay_excited_prob(ch) == Approx(0.0345348).epsilon(1e-12));
    // Re-exciting a grounded qubit: misread 0->1 followed by a working X.
    CHECK(reexcite_prob(ch) == Approx(0.0326 * (1 - 0.0020)).epsilon(1e-15));
    CHECK(reexcite_prob(ch) == Approx(0.0325348).epsilon(1e-12));
}

TEST_CASE("residual after one stage equals the stay probability") {
    ResetChannel ch = ResetChannel::defaults(1);
    CHECK(residual_after_k(ch) == stay_excited_prob(ch));
}

TEST_CASE("residual decays toward the stationary point") {
    double r1 = residual_after_k(ResetChannel::defaults(1));
    double r2 = residual_after_k(ResetChannel::defaults(2));
    double r4 = residual_after_k(ResetChannel::defaults(4));
    CHECK(r2 == Approx(0.0326038696).epsilon(1e-12));
    CHECK(r4 == Approx(0.0326).epsilon(1e-8));
    CHECK(r1 > r2);
    CHECK(r2 > r4);

    double stationary = stationary_excitation(ResetChannel::defaults());
    CHECK(stationary == Approx(0.0326).epsilon(1e-12));
    CHECK(residual_after_k(ResetChannel::defaults(200)) == Approx(stationary).epsilon(1e-12));
}

TEST_CASE("the stationary point is a fixed point of the update") {
    ResetChannel ch = ResetChannel::defaults();
    double s = stationary_excitation(ch);
    double next = s * stay_excited_prob(ch) + (1 - s) * reexcite_prob(ch);
    CHECK(next == Approx(s).epsilon(1e-14));
}

TEST_CASE("effective fidelity complements the residual exactly") {
    ResetChannel ch = ResetChannel::defaults(1);
    double f = effective_reset_fidelity(ch);
    CHECK(f == Approx(0.9654652).epsilon(1e-12));
    CHECK(std::abs(f - 0.96547) < 0.0001);
    CHECK(f + residual_after_k(ch) == 1.0);
}

TEST_CASE("effective fidelity is defined for a single stage only") {
    CHECK_THROWS_AS(effective_reset_fidelity(ResetChannel::defaults(2)), std::invalid_argument);
}

TEST_CASE("noiseless channel resets perfectly") {
    ResetChannel ch;
    ch.eps_read_1to0 = 0.0;
    ch.eps_read_0to1 = 0.0;
    ch.eps_condx = 0.0;
    ch.k = 1;
    CHECK(residual_after_k(ch) == 0.0);
    CHECK(effective_reset_fidelity(ch) == 1.0);
}

TEST_CASE("monte carlo excitation matches the chain at k=1") {
    // 20k trajectories of the k=1 decay circuit; the post-shot state is
    // inspected directly so readout noise cannot mask the excitation.
    Circuit c = build_reset_test(1);
    NoiseModel noise = NoiseModel::defaults();
    const int trials = 20000;
    int excited = 0;
    for (int i = 0; i < trials; i++) {
        ShotRng rng(ShotRng::derive(2024, static_cast<uint64_t>(i)));
        StateVector sv(1);
        run_shot(c, noise, rng, &sv);
        if (sv.prob_one(0) > 0.5) excited++;
    }
    double mc = static_cast<double>(excited) / trials;
    double analytic = residual_after_k(ResetChannel::defaults(1));
    double sigma = std::sqrt(analytic * (1 - analytic) / trials);
    CHECK(std::abs(mc - analytic) < 4 * sigma);
}

}
