#include "kappa/registry.hpp"

#include "kappa/points.hpp"

namespace kappa {

namespace {

QuadricSpace<Rational> build_d15() {
    const Index d = 15;
    Mat<Rational> q1 = Mat<Rational>::Zero(d, d), q2 = q1, q3 = q1;
    for (Index i = 0; i < d; ++i) {
        q1(i, i) = Rational(1);
        q2(i, i) = Rational(static_cast<long>(i + 1));
    }
    for (Index i = 1; i <= 7; ++i) {
        q3(i - 1, 14 - i) = Rational(1, 2);  // y_i * y_{15-i}
        q3(14 - i, i - 1) = Rational(1, 2);
    }
    return make_space<Rational>({q1, q2, q3});
}

QuadricSpace<Rational> build_j_doubleprime() {
    const Index d = 6;
    Mat<Rational> q1 = Mat<Rational>::Zero(d, d), q2 = q1, q3 = q1;
    const long coeff[6] = {1, 2, 3, 5, 7, 11};
    for (Index i = 0; i < d; ++i) {
        q1(i, i) = Rational(1);
        q2(i, i) = Rational(coeff[i]);
    }
    for (Index i = 0; i < 3; ++i) {  // y1 y6 + y2 y5 + y3 y4
        q3(i, 5 - i) = Rational(1, 2);
        q3(5 - i, i) = Rational(1, 2);
    }
    return make_space<Rational>({q1, q2, q3});
}

// Residual points (1,...,1), (1,1,0,...,0), (0,...,0,1,1) behind the
// standard frame: the explicit smoothable construction with kappa_1 = 2d+2.
QuadricSpace<Rational> build_special_points(Index d) {
    std::vector<Vec<Rational>> pts;
    pts.push_back(Vec<Rational>::Zero(d));
    for (Index i = 0; i < d; ++i) {
        Vec<Rational> e = Vec<Rational>::Zero(d);
        e(i) = Rational(1);
        pts.push_back(std::move(e));
    }
    Vec<Rational> r1(d), r2 = Vec<Rational>::Zero(d), r3 = Vec<Rational>::Zero(d);
    for (Index i = 0; i < d; ++i) r1(i) = Rational(1);
    r2(0) = Rational(1);
    r2(1) = Rational(1);
    r3(d - 2) = Rational(1);
    r3(d - 1) = Rational(1);
    pts.push_back(std::move(r1));
    pts.push_back(std::move(r2));
    pts.push_back(std::move(r3));
    return space_from_points(make_points(d, std::move(pts)), 3);
}

std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> reg;
    reg.push_back({"d15-nonsmoothable",
                   "d=15, e=3 nonsmoothable witness: sum y_i^2, sum i*y_i^2, sum_{i<=7} y_i y_{15-i}",
                   build_d15,
                   {15, 44, 15},
                   true});
    reg.push_back({"a7-J-doubleprime",
                   "d=6, e=3 space whose padding to d=7 sits in two Hilbert-scheme components",
                   build_j_doubleprime,
                   {6, 18, 6},
                   true});
    for (Index d = 4; d <= 8; ++d) {
        reg.push_back({"e3-special-points-" + std::to_string(d),
                       "smoothable construction from 1+d+3 points, d=" + std::to_string(d) +
                           ", kappa_1 = " + std::to_string(2 * d + 2),
                       [d]() { return build_special_points(d); },
                       {static_cast<long>(d), static_cast<long>(2 * d + 2), static_cast<long>(d)},
                       false});
    }
    return reg;
}

}  // namespace

const std::vector<RegistryEntry>& example_registry() {
    static const std::vector<RegistryEntry> reg = build_registry();
    return reg;
}

const RegistryEntry& find_example(const std::string& name) {
    for (const auto& entry : example_registry())
        if (entry.name == name) return entry;
    throw UnknownExample("no example named '" + name + "'");
}

}  // namespace kappa
