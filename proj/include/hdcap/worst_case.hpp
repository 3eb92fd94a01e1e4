// Extremal diamond networks whose best single relay attains exactly a
// 1/(2 + 2 cos(2 pi/(n+2))) fraction of the network capacity, together with
// the two-state schedules that achieve the capacity on them.
//
// The even1 family is fully finite. The other three keep one link pair at a
// large finite parameter L standing in for the limiting construction; their
// ratio approaches the bound as L grows, which verify_tightness checks
// against the LP rather than assuming.
#pragma once

#include <string>

#include "hdcap/capacity.hpp"
#include "hdcap/network.hpp"

namespace hdcap {

enum class FamilyId { Even1, Even2, Odd1, Odd2 };

const char* to_string(FamilyId f);
FamilyId family_from_string(const std::string& name);  // "even1" | "even2" | "odd1" | "odd2"

DiamondNetwork worst_even_type1(int n);
DiamondNetwork worst_even_type2(int n, double L);
DiamondNetwork worst_odd_type1(int n, double L);
DiamondNetwork worst_odd_type2(int n, double L);

// Dispatch by family; L is ignored for even1.
DiamondNetwork worst_network(FamilyId family, int n, double L);

// The family's half/half two-state schedule.
Schedule canonical_schedule(FamilyId family, int n);

struct TightnessReport {
    int n = 0;
    FamilyId family = FamilyId::Even1;
    double L = 0.0;  // 0 when the family has no L parameter
    double c1 = 0.0;
    double cn = 0.0;
    double two_state_rate = 0.0;
    double upper_bound = 0.0;
    double bound_n = 0.0;
    double achieved_ratio = 0.0;
    double gap = 0.0;  // |achieved_ratio - bound_n|
    double tol = 0.0;
    bool pass = false;
};

TightnessReport verify_tightness(FamilyId family, int n, double L, double tol);

}  // namespace hdcap
