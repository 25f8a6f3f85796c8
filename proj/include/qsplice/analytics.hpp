#pragma once

#include <cstdint>

namespace qsplice {

// Closed-form model of one measure+conditional-X reset stage as a two-state
// Markov chain over the qubit's excitation.
struct ResetChannel {
    double eps_read_1to0 = 0.0326;
    double eps_read_0to1 = 0.0326;
    double eps_condx = 0.0020;
    uint32_t k = 1;

    static ResetChannel defaults(uint32_t k = 1);
};

// P(stay |1> after one stage | start |1>):
// misread 1->0 skips the CondX, otherwise the CondX must fail.
double stay_excited_prob(const ResetChannel& ch);

// P(move to |1> after one stage | start |0>):
// a 0->1 misread fires the CondX on a grounded qubit; CondX success re-excites.
double reexcite_prob(const ResetChannel& ch);

// Excitation probability after ch.k stages starting from |1>.
double residual_after_k(const ResetChannel& ch);

// Fixed point of the chain (the k -> infinity excitation).
double stationary_excitation(const ResetChannel& ch);

// Probability one reset stage grounds an excited qubit. Defined for k == 1
// only (throws std::invalid_argument otherwise) and computed as
// 1 - residual_after_k so that fidelity + residual == 1 exactly.
double effective_reset_fidelity(const ResetChannel& ch);

}  // namespace qsplice
