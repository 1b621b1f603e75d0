#pragma once

#include "dp2/cover.hpp"

namespace dp2::golden {

/// One of the three bundled demo surfaces with its published rational map
/// (homogenized to component degrees 2d, 2d, 2d; 4d), the image curve
/// equation and the marked point.
struct DemoSurface {
    std::string name;
    DelPezzo2 surface;
    RationalMapToX rho;
    TernaryForm h;
    PlanePoint Q;
    int d;  // degree of the image curve
};

const DemoSurface& x1();
const DemoSurface& x2();
const DemoSurface& x3();
std::vector<const DemoSurface*> all();

/// F_9 presented with g^2 = g + 1.
FieldPtr f9();
FieldPtr f3();

}  // namespace dp2::golden
