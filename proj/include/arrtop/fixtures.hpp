#pragma once

#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/io.hpp"

namespace arrtop::fixtures {

/// z, x, x-z, y, y-z, x-y-2z: two triple points on the common line z = 0.
Arrangement falk_A();
/// z, x, y, x+y-z, x-y, x+y-2z: two triple points on no common line.
Arrangement falk_A_prime();
/// The six lines xyz(x-y)(x-z)(y-z): a planar slice of the A_3 arrangement.
Arrangement braid();
/// The nine lines xyz(x^2-y^2)(x^2-z^2)(y^2-z^2): a planar slice of B_3.
Arrangement b3();
/// Twelve real lines carrying a reduced (3,4)-multinet that is not a net.
Arrangement reduced_multinet12();
/// x, y, x-y: three concurrent lines.
Arrangement pencil3();
/// x, y, z: three lines in general position.
Arrangement generic3();
/// x, y, z, x+y+z: four planes in general position.
Arrangement generic4();

/// The Hessian arrangement as incidence data: lines and points of AG(2,3).
ArrangementInput hessian_incidence();

std::vector<std::string> names();
/// Looks a fixture up by name; throws ValidationError on an unknown name.
ArrangementInput by_name(const std::string& name);

}  // namespace arrtop::fixtures
