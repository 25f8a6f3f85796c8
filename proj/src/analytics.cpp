#include "qsplice/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace qsplice {

ResetChannel ResetChannel::defaults(uint32_t k) {
    ResetChannel ch;
    ch.k = k;
    return ch;
}

double stay_excited_prob(const ResetChannel& ch) {
    return ch.eps_read_1to0 + (1.0 - ch.eps_read_1to0) * ch.eps_condx;
}

double reexcite_prob(const ResetChannel& ch) {
    return ch.eps_read_0to1 * (1.0 - ch.eps_condx);
}

double residual_after_k(const ResetChannel& ch) {
    double p11 = stay_excited_prob(ch);
    double p01 = reexcite_prob(ch);
    double p = 1.0;
    for (uint32_t i = 0; i < ch.k; i++) {
        p = p * p11 + (1.0 - p) * p01;
    }
    return p;
}

double stationary_excitation(const ResetChannel& ch) {
    double p11 = stay_excited_prob(ch);
    double p01 = reexcite_prob(ch);
    double denom = p01 + (1.0 - p11);
    if (denom == 0.0) return 1.0;  // the chain never leaves |1>
    return p01 / denom;
}

double effective_reset_fidelity(const ResetChannel& ch) {
    if (ch.k != 1) {
        throw std::invalid_argument(
            "effective_reset_fidelity is a single-stage quantity; use residual_after_k for k != 1");
    }
    return 1.0 - residual_after_k(ch);
}

}  // namespace qsplice
