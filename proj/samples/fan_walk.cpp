// Locates a few divisor classes in the chamber fan of X(3) and walks across a wall.
#include "conekit/conekit.hpp"

#include <iostream>

int main() {
    using namespace conekit;
    const SpaceSpec s = SpaceSpec::collineations(3);
    const ChamberFan fan = sbl_merge(gkz_fan(s), s);
    std::cout << to_text(fan);

    for (const IntVector& d : {anticanonical_class(s).coords, int_vector({1, 1, 1}), int_vector({5, -3, -2})}) {
        try {
            const auto i = locate(fan, d);
            std::cout << to_string(d) << " lies in chamber " << i << " (" << fan.chambers[i].label << ")\n";
        } catch (const Error& e) {
            std::cout << to_string(d) << ": " << e.what() << "\n";
        }
    }

    const auto& w = fan.walls.front();
    std::cout << "crossing wall with normal " << to_string(w.normal.coords()) << ": " << fan.chambers[w.first].label
              << " -> " << fan.chambers[w.second].label << "\n";
}
