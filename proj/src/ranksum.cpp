#include "scrumsim/ranksum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scrumsim {

double mann_whitney_p(const std::vector<double>& sample_a,
                      const std::vector<double>& sample_b) {
    const std::size_t n1 = sample_a.size();
    const std::size_t n2 = sample_b.size();
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("mann_whitney_p: empty sample");

    struct Observation {
        double value;
        int group;
    };
    std::vector<Observation> pooled;
    pooled.reserve(n1 + n2);
    for (double v : sample_a) pooled.push_back({v, 0});
    for (double v : sample_b) pooled.push_back({v, 1});
    std::sort(pooled.begin(), pooled.end(),
              [](const Observation& a, const Observation& b) { return a.value < b.value; });

    // Midranks for ties, accumulating the tie-correction term t^3 - t.
    const std::size_t total = pooled.size();
    double rank_sum_a = 0.0;
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < total) {
        std::size_t j = i;
        while (j + 1 < total && pooled[j + 1].value == pooled[i].value) ++j;
        const double count = static_cast<double>(j - i + 1);
        const double midrank = static_cast<double>(i + j) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            if (pooled[k].group == 0) rank_sum_a += midrank;
        }
        tie_term += count * count * count - count;
        i = j + 1;
    }

    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double dn = dn1 + dn2;
    const double u_stat = rank_sum_a - dn1 * (dn1 + 1.0) / 2.0;
    const double mean_u = dn1 * dn2 / 2.0;
    const double variance =
        dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (variance <= 0.0) return 1.0;  // all observations tied

    double numerator = u_stat - mean_u;
    if (numerator > 0.5) {
        numerator -= 0.5;
    } else if (numerator < -0.5) {
        numerator += 0.5;
    } else {
        numerator = 0.0;
    }
    const double z = numerator / std::sqrt(variance);
    const double p = std::erfc(std::fabs(z) / std::sqrt(2.0));
    return std::min(1.0, p);
}

}  // namespace scrumsim
