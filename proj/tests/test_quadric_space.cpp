#include <doctest.h>

#include "kappa/parser.hpp"
#include "kappa/points.hpp"
#include "kappa/registry.hpp"
#include "kappa/rng.hpp"
#include "kappa/serialize.hpp"

using namespace kappa;

TEST_CASE("parse_form conventions") {
    Mat<Rational> g = parse_form("y1^2", 2);
    CHECK(g(0, 0) == Rational(1));
    CHECK(g(0, 1) == Rational(0));
    CHECK(g(1, 1) == Rational(0));

    g = parse_form("y1*y2", 2);
    CHECK(g(0, 1) == Rational(1, 2));
    CHECK(g(1, 0) == Rational(1, 2));
    CHECK(g(0, 0) == Rational(0));

    // (y1+y2)^2 expanded maps to the rank-one matrix of all ones
    g = parse_form("y1^2+2*y1*y2+y2^2", 2);
    CHECK(g == Mat<Rational>(Mat<Rational>::Ones(2, 2)));

    g = parse_form(" - 3/2*y2^2 + y2*y1 ", 2);
    CHECK(g(1, 1) == Rational(-3, 2));
    CHECK(g(0, 1) == Rational(1, 2));

    CHECK(parse_form("y1*y1", 2) == parse_form("y1^2", 2));
    CHECK(parse_form("2*3*y1^2", 1)(0, 0) == Rational(6));
}

TEST_CASE("parse_form rejections") {
    CHECK_THROWS_AS(parse_form("5", 2), ParseError);          // constant term
    CHECK_THROWS_AS(parse_form("y1", 2), ParseError);         // linear term
    CHECK_THROWS_AS(parse_form("y1^3", 2), ParseError);       // degree 3
    CHECK_THROWS_AS(parse_form("y1^2*y2", 2), ParseError);    // degree 3
    CHECK_THROWS_AS(parse_form("y1*y2*y1", 2), ParseError);   // degree 3
    CHECK_THROWS_AS(parse_form("y3^2", 2), ParseError);       // index out of range
    CHECK_THROWS_AS(parse_form("y0^2", 2), ParseError);       // index out of range
    CHECK_THROWS_AS(parse_form("", 2), ParseError);
    CHECK_THROWS_AS(parse_form("y1^2 +", 2), ParseError);
    CHECK_THROWS_AS(parse_form("y1^2 * ", 2), ParseError);
    CHECK_THROWS_AS(parse_form("2y1^2", 2), ParseError);      // missing '*'
    CHECK_THROWS_AS(parse_form("x1^2", 2), ParseError);

    try {
        parse_form("y1^2 + y5^2", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset > 0);  // diagnostics point at the bad variable
    }
}

TEST_CASE("squares of linear forms parse to rank-one Gram matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const Index d = 3;
        Vec<Rational> a(d);
        std::string text;
        for (Index i = 0; i < d; ++i) a(i) = Rational(rng.int_in(1, 6));
        for (Index i = 0; i < d; ++i) {
            text += (text.empty() ? "" : "+") + (a(i) * a(i)).to_string() + "*y" + std::to_string(i + 1) + "^2";
            for (Index j = i + 1; j < d; ++j)
                text += "+" + (Rational(2) * a(i) * a(j)).to_string() + "*y" + std::to_string(i + 1) + "*y" +
                        std::to_string(j + 1);
        }
        Mat<Rational> g = parse_form(text, d);
        CHECK(g == Mat<Rational>(a * a.transpose()));
        CHECK(rank(g) == 1);
    }
}

TEST_CASE("make_space via the parser matches the built-in fixtures") {
    // the d = 15 example written out as polynomial text
    std::string q1, q2, q3;
    for (int i = 1; i <= 15; ++i) {
        q1 += (i > 1 ? "+" : "") + ("y" + std::to_string(i) + "^2");
        q2 += (i > 1 ? "+" : "") + std::to_string(i) + "*y" + std::to_string(i) + "^2";
    }
    for (int i = 1; i <= 7; ++i)
        q3 += (i > 1 ? "+" : "") + ("y" + std::to_string(i) + "*y" + std::to_string(15 - i));
    auto v = make_space<Rational>({parse_form(q1, 15), parse_form(q2, 15), parse_form(q3, 15)});
    CHECK(v.d == 15);
    CHECK(v.e() == 3);
    auto fixture = find_example("d15-nonsmoothable").build();
    for (int i = 0; i < 3; ++i) CHECK(v.basis[i] == fixture.basis[i]);

    auto vj = find_example("a7-J-doubleprime").build();
    CHECK(vj.d == 6);
    CHECK(vj.e() == 3);

    CHECK_THROWS_AS(make_space<Rational>({parse_form(q1, 15), parse_form(q1, 15)}), DependentBasis);
}

TEST_CASE("change_coordinates") {
    auto v = find_example("e3-special-points-4").build();

    auto same = change_coordinates(v, Mat<Rational>(Mat<Rational>::Identity(4, 4)));
    for (std::size_t i = 0; i < v.basis.size(); ++i) CHECK(same.basis[i] == v.basis[i]);

    // permutation acts on a diagonal space by permuting the diagonals
    Mat<Rational> diag = Mat<Rational>::Zero(4, 4);
    for (Index i = 0; i < 4; ++i) diag(i, i) = Rational(i + 1);
    Mat<Rational> perm = Mat<Rational>::Zero(4, 4);
    perm(0, 1) = perm(1, 0) = perm(2, 2) = perm(3, 3) = Rational(1);
    QuadricSpace<Rational> dv{4, {diag}};
    auto pv = change_coordinates(dv, perm);
    CHECK(pv.basis[0](0, 0) == Rational(2));
    CHECK(pv.basis[0](1, 1) == Rational(1));
    CHECK(pv.basis[0](3, 3) == Rational(4));

    Mat<Rational> sing = Mat<Rational>::Zero(4, 4);
    CHECK_THROWS_AS(change_coordinates(v, sing), SingularTransform);
}

TEST_CASE("change_basis") {
    auto v = find_example("e3-special-points-5").build();
    auto same = change_basis(v, Mat<Rational>(Mat<Rational>::Identity(3, 3)));
    for (std::size_t i = 0; i < v.basis.size(); ++i) CHECK(same.basis[i] == v.basis[i]);

    auto doubled = change_basis(v, Mat<Rational>(Mat<Rational>::Identity(3, 3) * Rational(2)));
    for (std::size_t i = 0; i < v.basis.size(); ++i)
        CHECK(doubled.basis[i] == Mat<Rational>(v.basis[i] * Rational(2)));
    // same span: the stacked coefficient matrices have equal row spaces
    CHECK(rref(coefficient_matrix(doubled)).matrix == rref(coefficient_matrix(v)).matrix);

    Mat<Rational> sing = Mat<Rational>::Zero(3, 3);
    sing(0, 0) = Rational(1);
    CHECK_THROWS_AS(change_basis(v, sing), SingularTransform);
}

TEST_CASE("normalize_points") {
    // already normalized: identity frame, residuals unchanged
    std::vector<Vec<Rational>> pts;
    pts.push_back(Vec<Rational>::Zero(2));
    Vec<Rational> e1(2), e2(2), r(2);
    e1 << Rational(1), Rational(0);
    e2 << Rational(0), Rational(1);
    r << Rational(3), Rational(5);
    pts.push_back(e1);
    pts.push_back(e2);
    pts.push_back(r);
    auto np = normalize_points(make_points<Rational>(2, pts), 1);
    CHECK(np.frame == Mat<Rational>(Mat<Rational>::Identity(2, 2)));
    CHECK(np.residual(0) == r);

    // frame (1,1),(2,1),(1,2): translate by -(1,1), frame matrix is identity
    std::vector<Vec<Rational>> sh;
    Vec<Rational> p0(2), p1(2), p2(2), q(2);
    p0 << Rational(1), Rational(1);
    p1 << Rational(2), Rational(1);
    p2 << Rational(1), Rational(2);
    q << Rational(4), Rational(7);
    sh = {p0, p1, p2, q};
    auto np2 = normalize_points(make_points<Rational>(2, sh), 1);
    Vec<Rational> expect(2);
    expect << Rational(3), Rational(6);
    CHECK(np2.residual(0) == expect);

    // collinear frame
    std::vector<Vec<Rational>> col;
    Vec<Rational> c0(2), c1(2), c2(2), c3(2);
    c0 << Rational(0), Rational(0);
    c1 << Rational(1), Rational(0);
    c2 << Rational(2), Rational(0);
    c3 << Rational(1), Rational(5);
    col = {c0, c1, c2, c3};
    CHECK_THROWS_AS(normalize_points(make_points<Rational>(2, col), 1), DegenerateFrame);

    CHECK_THROWS_AS(normalize_points(make_points<Rational>(2, pts), 2), LengthMismatch);
}

TEST_CASE("normalization round-trips through the affine map") {
    Rng rng(31);
    FieldOf<Rational> fq;
    for (int trial = 0; trial < 10; ++trial) {
        const Index d = 3, e = 2;
        std::vector<Vec<Rational>> pts;
        for (Index i = 0; i < 1 + d + e; ++i) pts.push_back(random_matrix(fq, d, 1, rng, 8));
        PointConfiguration<Rational> config;
        try {
            config = make_points<Rational>(d, pts);
        } catch (const FormatError&) {
            continue;  // coincident draw
        }
        NormalizedPoints<Rational> np;
        try {
            np = normalize_points(config, e);
        } catch (const DegenerateFrame&) {
            continue;
        }
        for (Index i = 0; i < config.n(); ++i) {
            Vec<Rational> back = np.frame * np.config.points[static_cast<std::size_t>(i)] + np.origin;
            CHECK(back == config.points[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("space_from_points structure") {
    Rng rng(37);
    FieldOf<Rational> fq;
    // q_j + a a^T is the diagonal matrix of the residual coordinates
    for (int trial = 0; trial < 8; ++trial) {
        Vec<Rational> a = random_matrix(fq, 5, 1, rng, 9);
        Mat<Rational> q = residual_quadric<Rational>(a);
        Mat<Rational> diag = Mat<Rational>(q + a * a.transpose());
        for (Index i = 0; i < 5; ++i)
            for (Index j = 0; j < 5; ++j) CHECK(diag(i, j) == (i == j ? a(i) : Rational(0)));
    }

    // a residual equal to a basis vector gives q = y_i^2 - y_i^2 = 0; built
    // through a hand-made normalized configuration since such a residual
    // coincides with a frame point and cannot arise from distinct raw points
    NormalizedPoints<Rational> np;
    np.config.d = 3;
    np.config.points = {};
    np.config.points.push_back(Vec<Rational>::Zero(3));
    for (Index i = 0; i < 3; ++i) {
        Vec<Rational> ei = Vec<Rational>::Zero(3);
        ei(i) = Rational(1);
        np.config.points.push_back(ei);
    }
    Vec<Rational> e1res = Vec<Rational>::Zero(3);
    e1res(0) = Rational(1);
    np.config.points.push_back(e1res);  // residual = e1 -> q = 0
    np.frame = Mat<Rational>::Identity(3, 3);
    np.origin = Vec<Rational>::Zero(3);
    CHECK_THROWS_AS(space_from_points(np), DependentBasis);
}

TEST_CASE("space document round trip") {
    auto v = find_example("d15-nonsmoothable").build();
    nlohmann::json doc = space_to_json(v, FieldSpec::rationals());
    auto parsed = read_space_document(doc);
    CHECK(parsed.field.is_q);
    CHECK(parsed.d == 15);
    FieldOf<Rational> fq;
    auto v2 = realize(parsed, fq);
    REQUIRE(v2.e() == v.e());
    for (std::size_t i = 0; i < v.basis.size(); ++i) CHECK(v2.basis[i] == v.basis[i]);
}

TEST_CASE("space documents over a prime field") {
    nlohmann::json doc = nlohmann::json::parse(R"({
        "field": "fp:7",
        "d": 2,
        "basis": [{"matrix": [["1/2", "0"], ["0", "1"]]}]
    })");
    auto parsed = read_space_document(doc);
    CHECK(!parsed.field.is_q);
    CHECK(parsed.field.p == 7);
    FieldOf<Fp> f7(7);
    auto v = realize(parsed, f7);
    CHECK(v.basis[0](0, 0) == Fp(4, 7));  // 1/2 = 4 mod 7

    // round trip through the fp serializer
    auto doc2 = space_to_json(v, parsed.field);
    auto v2 = realize(read_space_document(doc2), f7);
    CHECK(v2.basis[0] == v.basis[0]);

    // denominator vanishing mod p is a format error
    nlohmann::json bad = doc;
    bad["basis"][0]["matrix"][0][0] = "1/7";
    CHECK_THROWS_AS(realize(read_space_document(bad), f7), FormatError);
}

TEST_CASE("malformed space documents") {
    auto doc = nlohmann::json::parse(R"({
        "field": "Q",
        "d": 2,
        "basis": [{"matrix": [["0", "1"], ["0", "0"]]}]
    })");
    CHECK_THROWS_AS(read_space_document(doc), FormatError);  // not symmetric

    auto poly_doc = nlohmann::json::parse(R"({"field": "Q", "d": 2, "basis": [{"poly": "y1*y2"}]})");
    auto parsed = read_space_document(poly_doc);
    CHECK(parsed.gram[0](0, 1) == Rational(1, 2));

    CHECK_THROWS_AS(read_space_document(nlohmann::json::parse(R"({"field": "Q", "d": 2})")), FormatError);
    CHECK_THROWS_AS(
        read_space_document(nlohmann::json::parse(R"({"field": "fp:4", "d": 2, "basis": [{"poly": "y1^2"}]})")),
        BadField);
    CHECK_THROWS_AS(read_space_document_text("not json"), FormatError);
}

TEST_CASE("point documents") {
    std::stringstream csv("0,0\n1,0\n0,1\n# comment\n2/3, 5\n");
    auto doc = read_points_csv(csv);
    CHECK(doc.d == 2);
    CHECK(doc.points.size() == 4);
    CHECK(doc.points[3](0) == Rational(2, 3));

    std::stringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_points_csv(ragged), FormatError);

    auto jdoc = nlohmann::json::parse(
        R"({"field": "Q", "d": 2, "points": [["0","0"], ["1","0"], ["0","1"], ["1","1"]]})");
    auto parsed = read_points_json(jdoc);
    CHECK(parsed.points.size() == 4);

    FieldOf<Rational> fq;
    auto pc = realize_points(parsed, fq);
    CHECK(pc.n() == 4);

    // coincident points rejected
    nlohmann::json dup = jdoc;
    dup["points"][3] = nlohmann::json::parse(R"(["0","0"])");
    CHECK_THROWS_AS(realize_points(read_points_json(dup), fq), FormatError);
}
