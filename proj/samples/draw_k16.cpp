// Draws K16, certifies it, and prints the grid size.
#include <iostream>

#include "racdraw/racdraw.hpp"

int main() {
    const racdraw::Drawing d = racdraw::draw_complete(16);
    const racdraw::CrossingReport report = racdraw::validate(d);
    const racdraw::DrawingStats s = racdraw::stats(d, report);

    std::cout << "K16: " << s.m << " edges, " << s.crossings << " crossings, "
              << (report.certified() ? "certified" : "NOT certified") << "\n"
              << "grid " << s.width << " x " << s.height << "\n";
    return report.certified() ? 0 : 1;
}
