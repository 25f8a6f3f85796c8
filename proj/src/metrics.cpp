#include "qsplice/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace qsplice {

OutcomeDistribution normalize(const CountsTable& t) {
    uint64_t total = t.total();
    if (total == 0) {
        throw std::invalid_argument("normalize: empty counts table");
    }
    OutcomeDistribution d;
    for (const auto& [k, v] : t.counts) {
        d[k] = static_cast<double>(v) / static_cast<double>(total);
    }
    return d;
}

double tvd(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    double sum = 0.0;
    auto it_p = p.begin();
    auto it_q = q.begin();
    while (it_p != p.end() || it_q != q.end()) {
        if (it_q == q.end() || (it_p != p.end() && it_p->first < it_q->first)) {
            sum += std::fabs(it_p->second);
            ++it_p;
        } else if (it_p == p.end() || it_q->first < it_p->first) {
            sum += std::fabs(it_q->second);
            ++it_q;
        } else {
            sum += std::fabs(it_p->second - it_q->second);
            ++it_p;
            ++it_q;
        }
    }
    return 0.5 * sum;
}

}  // namespace qsplice
