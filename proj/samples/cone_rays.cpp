// Prints the effective, nef and movable cones of a few small spaces.
#include "conekit/conekit.hpp"

#include <iostream>

int main() {
    using namespace conekit;
    for (const auto& s : {SpaceSpec::collineations(3), SpaceSpec::collineations(2, 4), SpaceSpec::quadrics(4)}) {
        std::cout << s.name() << ", Picard rank " << picard_rank(s) << ", -K = " << to_string(anticanonical_class(s).coords)
                  << "\n";
        for (const char* name : {"eff", "nef", "mov"}) {
            std::cout << "  " << name << ":";
            for (const auto& r : extremal_rays(named_cone(s, name))) std::cout << " " << to_string(r.coords());
            std::cout << "\n";
        }
    }
}
