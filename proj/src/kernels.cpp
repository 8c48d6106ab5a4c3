#include "scrumsim/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace scrumsim {

const char* combination_mode_name(CombinationMode mode) {
    switch (mode) {
        case CombinationMode::Solo: return "Solo";
        case CombinationMode::Linear: return "Linear";
        case CombinationMode::NonLinear: return "NonLinear";
    }
    return "?";
}

double shared_competence(double sosd, double c) { return sosd * c; }

double combine_linear(double c_lead, const std::vector<Contributor>& members) {
    double total = c_lead;
    for (const Contributor& m : members) total += shared_competence(m.sosd, m.c);
    return total;
}

double combine_nonlinear(double c_lead, double sosd_lead,
                         const std::vector<Contributor>& members,
                         double exponent_cap, double contribution_cap) {
    const double p = std::clamp(shared_competence(sosd_lead, c_lead), 0.0, exponent_cap);
    double total = c_lead;
    for (const Contributor& m : members) {
        const double b = shared_competence(m.sosd, m.c);
        if (b > 0.0) total += std::min(std::pow(b, p), contribution_cap);
    }
    return total;
}

CombinationMode select_mode(bool sociable, bool curious,
                            SosdBand lead_band, bool lead_high_enquiry) {
    if (curious && lead_high_enquiry && lead_band == SosdBand::HighBand) {
        return CombinationMode::NonLinear;
    }
    if (sociable && lead_band != SosdBand::LowBand) {
        return CombinationMode::Linear;
    }
    return CombinationMode::Solo;
}

bool attempt(double combined_competence, double difficulty) {
    return combined_competence > difficulty;
}

double update_on_success(double c, double increase_rate) { return c * (1.0 + increase_rate); }

double update_on_failure(double c, double decrease_rate) { return c * (1.0 - decrease_rate); }

double update_attitude(double sosd, bool solved, double rate) {
    return solved ? sosd * (1.0 + rate) : sosd * (1.0 - rate);
}

}  // namespace scrumsim
