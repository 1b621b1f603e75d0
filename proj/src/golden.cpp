#include "dp2/golden.hpp"

namespace dp2::golden {

FieldPtr f3() { return FieldDescriptor::prime(3); }
FieldPtr f9() { return FieldDescriptor::f9(); }

namespace {

BinaryForm sparse_binary(FieldPtr F, int degree,
                         const std::vector<std::pair<int, FieldElement>>& terms) {
    std::vector<FieldElement> c(static_cast<size_t>(degree + 1), F->zero());
    for (const auto& [i, v] : terms) c[static_cast<size_t>(i)] = v;
    return BinaryForm(F, degree, std::move(c));
}

BinaryForm sparse_binary_int(FieldPtr F, int degree,
                             const std::vector<std::pair<int, int64_t>>& terms) {
    std::vector<std::pair<int, FieldElement>> t;
    for (const auto& [i, v] : terms) t.emplace_back(i, F->from_int(v));
    return sparse_binary(F, degree, t);
}

DemoSurface make_x1() {
    FieldPtr F = f3();
    // -w^2 = (x^2+y^2)^2 + y^3 z - y z^3
    TernaryForm gp = TernaryForm::from_terms(
        F, 4,
        {{1, {4, 0, 0}}, {2, {2, 2, 0}}, {1, {0, 4, 0}}, {1, {0, 3, 1}}, {-1, {0, 1, 3}}});
    DelPezzo2 X = DelPezzo2::normal_form(F->from_int(-1), TernaryForm::zero(F, 2), gp);

    RationalMapToX rho;
    rho.field = F;
    rho.ext_degree = 1;
    // t^2(t^2-1), t^2(t^2-1)^2, t^8-t^2+1 at degree 8; t(t^2-1)(t^4+1)(t^8+1) at 16
    rho.rho[0] = sparse_binary_int(F, 8, {{4, 1}, {2, -1}});
    rho.rho[1] = sparse_binary_int(F, 8, {{6, 1}, {4, -2}, {2, 1}});
    rho.rho[2] = sparse_binary_int(F, 8, {{8, 1}, {2, -1}, {0, 1}});
    rho.rho[3] = sparse_binary_int(
        F, 16, {{15, 1}, {13, -1}, {11, 1}, {9, -1}, {7, 1}, {5, -1}, {3, 1}, {1, -1}});

    TernaryForm h = TernaryForm::from_terms(F, 4,
                                            {{1, {4, 0, 0}},
                                             {1, {1, 3, 0}},
                                             {1, {0, 4, 0}},
                                             {-1, {2, 1, 1}},
                                             {-1, {1, 2, 1}}});
    PlanePoint Q(F->from_int(0), F->from_int(0), F->from_int(1));
    return DemoSurface{"X1", X, rho, h, Q, 4};
}

DemoSurface make_x2() {
    FieldPtr F = f3();
    // -w^2 = x^4 + y^3 z - y z^3
    TernaryForm gp = TernaryForm::from_terms(
        F, 4, {{1, {4, 0, 0}}, {1, {0, 3, 1}}, {-1, {0, 1, 3}}});
    DelPezzo2 X = DelPezzo2::normal_form(F->from_int(-1), TernaryForm::zero(F, 2), gp);

    RationalMapToX rho;
    rho.field = F;
    rho.ext_degree = 1;
    // t(t^2+1)(t^4-1), -t^4, t^8+1 at degree 8; t^2(t^2+1)(t^10-1) at 16
    rho.rho[0] = sparse_binary_int(F, 8, {{7, 1}, {5, 1}, {3, -1}, {1, -1}});
    rho.rho[1] = sparse_binary_int(F, 8, {{4, -1}});
    rho.rho[2] = sparse_binary_int(F, 8, {{8, 1}, {0, 1}});
    rho.rho[3] = sparse_binary_int(F, 16, {{14, 1}, {12, 1}, {4, -1}, {2, -1}});

    TernaryForm h = TernaryForm::from_terms(F, 4,
                                            {{1, {4, 0, 0}},
                                             {-1, {2, 2, 0}},
                                             {-1, {0, 4, 0}},
                                             {1, {2, 1, 1}},
                                             {1, {0, 1, 3}}});
    PlanePoint Q(F->from_int(0), F->from_int(1), F->from_int(1));
    return DemoSurface{"X2", X, rho, h, Q, 4};
}

DemoSurface make_x3() {
    FieldPtr F = f9();
    FieldElement gamma = F->generator();
    FieldElement g2 = gamma * gamma;          // gamma + 1
    FieldElement g3 = g2 * gamma;             // 2 gamma + 1
    // gamma w^2 = x^4 + y^4 + z^4
    TernaryForm gp = TernaryForm::from_terms(
        F, 4, {{1, {4, 0, 0}}, {1, {0, 4, 0}}, {1, {0, 0, 4}}});
    DelPezzo2 X = DelPezzo2::normal_form(gamma, TernaryForm::zero(F, 2), gp);

    RationalMapToX rho;
    rho.field = F;
    rho.ext_degree = 1;
    FieldElement one = F->one();
    // (t^4+1)(t^2-g^3), (t^4-1)(t^2+g^3), (t^4+g^2)(t^2-g) at degree 6;
    // g^2 t (t^8-1)(t^2+g) at 12
    rho.rho[0] = sparse_binary(F, 6, {{6, one}, {4, -g3}, {2, one}, {0, -g3}});
    rho.rho[1] = sparse_binary(F, 6, {{6, one}, {4, g3}, {2, -one}, {0, -g3}});
    rho.rho[2] = sparse_binary(F, 6, {{6, one}, {4, -gamma}, {2, g2}, {0, -g3}});
    rho.rho[3] = sparse_binary(F, 12, {{11, g2}, {9, g3}, {3, -g2}, {1, -g3}});

    TernaryForm h(F, 3);
    h.set_coeff({2, 1, 0}, one);
    h.set_coeff({1, 2, 0}, one);
    h.set_coeff({2, 0, 1}, one);
    h.set_coeff({1, 1, 1}, -one);
    h.set_coeff({0, 2, 1}, one);
    h.set_coeff({1, 0, 2}, -one);
    h.set_coeff({0, 1, 2}, -one);
    h.set_coeff({0, 0, 3}, -one);
    PlanePoint Q(one, one, one);
    return DemoSurface{"X3", X, rho, h, Q, 3};
}

}  // namespace

const DemoSurface& x1() {
    static const DemoSurface* s = new DemoSurface(make_x1());
    return *s;
}

const DemoSurface& x2() {
    static const DemoSurface* s = new DemoSurface(make_x2());
    return *s;
}

const DemoSurface& x3() {
    static const DemoSurface* s = new DemoSurface(make_x3());
    return *s;
}

std::vector<const DemoSurface*> all() { return {&x1(), &x2(), &x3()}; }

}  // namespace dp2::golden
