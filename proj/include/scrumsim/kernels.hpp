#pragma once

#include <vector>

#include "scrumsim/population.hpp"

namespace scrumsim {

enum class CombinationMode { Solo, Linear, NonLinear };

const char* combination_mode_name(CombinationMode mode);

// A team member's inputs to a combination: attitude and competence.
struct Contributor {
    double sosd = 0.0;
    double c = 0.0;
};

// What a member lends to the team.
double shared_competence(double sosd, double c);

// Lead competence plus the sum of members' shared competences.
double combine_linear(double c_lead, const std::vector<Contributor>& members);

// Lead competence plus, per member with a positive shared competence b,
// b raised to the lead's own shared competence p (clamped to
// [0, exponent_cap]); each term is capped at contribution_cap.
// Members with b <= 0 contribute nothing.
double combine_nonlinear(double c_lead, double sosd_lead,
                         const std::vector<Contributor>& members,
                         double exponent_cap, double contribution_cap);

// NonLinear needs the curious switch plus a high-band, high-enquiry lead;
// Linear needs the sociable switch plus a lead outside the low band;
// everything else is Solo.
CombinationMode select_mode(bool sociable, bool curious,
                            SosdBand lead_band, bool lead_high_enquiry);

// Strictly greater: a combined competence equal to the difficulty fails.
bool attempt(double combined_competence, double difficulty);

double update_on_success(double c, double increase_rate);  // c * (1 + rate)
double update_on_failure(double c, double decrease_rate);  // c * (1 - rate)

// Proportional attitude drift that preserves sign; sosd = 0 is a fixed point.
// The same rate pair as competence: increase_rate on success, decrease_rate
// on failure.
double update_attitude(double sosd, bool solved, double rate);

}  // namespace scrumsim
