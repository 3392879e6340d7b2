#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superdual/head.hpp"
#include "superdual/sgcm.hpp"

using namespace superdual;
using namespace superdual::cartan;

static Sgcm make(std::vector<std::string> ids, std::vector<Parity> par,
                 std::vector<std::vector<long>> e) {
    return Sgcm{std::move(ids), std::move(par), std::move(e)};
}

TEST_CASE("validate_sgcm on the exceptional matrices") {
    // G(3), first row odd isotropic.
    Sgcm g3 = make({"a", "b", "c"}, {Parity::Odd, Parity::Even, Parity::Even},
                   {{0, -1, 0}, {-1, 2, -3}, {0, -1, 2}});
    auto rep = validate_sgcm(g3);
    CHECK(rep.is_sgcm);
    CHECK_FALSE(rep.is_anisotropic);
    CHECK(rep.violations.empty());

    Sgcm one = make({"x"}, {Parity::Even}, {{2}});
    auto r1 = validate_sgcm(one);
    CHECK(r1.is_sgcm);
    CHECK(r1.is_anisotropic);

    // Positive off-diagonal with a_{ii}=2 breaks C2.
    Sgcm bad = make({"x", "y"}, {Parity::Even, Parity::Even}, {{2, 1}, {-1, 2}});
    auto r2 = validate_sgcm(bad);
    CHECK_FALSE(r2.is_sgcm);
    REQUIRE(r2.violations.size() == 1);
    CHECK(r2.violations[0].condition == "C2");
    CHECK(r2.violations[0].i == "x");
    CHECK(r2.violations[0].j == "y");
}

TEST_CASE("C3 and odd-row C2 parity") {
    Sgcm c3 = make({"x", "y"}, {Parity::Even, Parity::Even}, {{2, 0}, {-1, 2}});
    CHECK_FALSE(validate_sgcm(c3).is_sgcm);

    // Odd vertex with diagonal 2 needs even off-diagonal entries.
    Sgcm bullet = make({"x", "y"}, {Parity::Odd, Parity::Even}, {{2, -1}, {-1, 2}});
    auto r = validate_sgcm(bullet);
    CHECK_FALSE(r.is_sgcm);
    Sgcm bullet_ok = make({"x", "y"}, {Parity::Odd, Parity::Even}, {{2, -2}, {-1, 2}});
    CHECK(validate_sgcm(bullet_ok).is_sgcm);
    CHECK(validate_sgcm(bullet_ok).is_anisotropic);
}

TEST_CASE("symmetrizer") {
    Sgcm sym = make({"x", "y"}, {Parity::Even, Parity::Even}, {{2, -1}, {-1, 2}});
    auto d = symmetrizer(sym);
    REQUIRE(d.has_value());
    CHECK((*d)[0] == 1);
    CHECK((*d)[1] == 1);

    Sgcm b2 = make({"x", "y"}, {Parity::Even, Parity::Even}, {{2, -2}, {-1, 2}});
    auto db = symmetrizer(b2);
    REQUIRE(db.has_value());
    CHECK((*db)[0] == 1);
    CHECK((*db)[1] == 2);

    Sgcm chain = make({"x", "y", "z"}, {Parity::Even, Parity::Even, Parity::Even},
                      {{2, -1, 0}, {-2, 2, -1}, {0, -3, 2}});
    auto dc = symmetrizer(chain);
    REQUIRE(dc.has_value());
    CHECK((*dc)[0] == 1);
    CHECK((*dc)[1] == make_rat(1, 2));
    CHECK((*dc)[2] == make_rat(1, 6));

    // sg-type first edge (1,-1) has no positive symmetrizer.
    Sgcm asym = make({"x", "y"}, {Parity::Odd, Parity::Even}, {{0, 1}, {-1, 2}});
    CHECK_FALSE(symmetrizer(asym).has_value());
}

TEST_CASE("diagram round-trip") {
    Sgcm g3 = make({"a", "b", "c"}, {Parity::Odd, Parity::Even, Parity::Even},
                   {{0, -1, 0}, {-1, 2, -3}, {0, -1, 2}});
    auto d = DynkinDiagram::from_sgcm(g3);
    auto back = d.to_sgcm();
    CHECK(back.indices == g3.indices);
    CHECK(back.entries == g3.entries);
    auto d2 = DynkinDiagram::from_json(d.to_json());
    CHECK(d2.to_sgcm().entries == g3.entries);
}

TEST_CASE("presets match the printed matrices") {
    auto g3 = preset("G3").head_matrix();
    CHECK(g3.entries ==
          std::vector<std::vector<long>>{{0, -1, 0}, {-1, 2, -3}, {0, -1, 2}});
    CHECK(g3.parity[0] == Parity::Odd);
    CHECK(validate_sgcm(g3).is_sgcm);
    CHECK_FALSE(validate_sgcm(g3).is_anisotropic);

    auto f31 = preset("F31").head_matrix();
    CHECK(f31.entries == std::vector<std::vector<long>>{
                             {0, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    CHECK(validate_sgcm(f31).is_sgcm);

    auto d21 = preset("D21a(3)").head_matrix();
    CHECK(d21.entries ==
          std::vector<std::vector<long>>{{0, -1, -3}, {-1, 2, 0}, {-1, 0, 2}});
    CHECK(validate_sgcm(d21).is_sgcm);

    for (auto name : {"G3", "F31", "D21a(2)", "gl(2|1)", "gl(3|1)", "osp(5|2)", "osp(4|2)",
                      "osp(6|2)", "osp(2|4)", "osp(3|4)", "affineB", "affineD", "affineA"}) {
        auto h = preset(name);
        CHECK_MESSAGE(check_head_condition(h).is_sgcm, name);
        CHECK_MESSAGE(validate_sgcm(h.head_matrix()).is_sgcm, name);
    }
}

TEST_CASE("osp(2|2m) printed labels") {
    auto h = preset("osp(2|4)");
    // far edge (-1,-2), edge into the tail vertex (-1,-1)
    CHECK(h.base.at(0, 1) == -1);
    CHECK(h.base.at(1, 0) == -2);
    REQUIRE(h.tails[0].attachments.size() == 1);
    CHECK(h.tails[0].attachments[0].target == "h2");
    CHECK(h.tails[0].attachments[0].b == -1);
    CHECK(h.tails[0].attachments[0].c == -1);
}

TEST_CASE("merged diagrams") {
    auto h = preset("gl(2|1)");

    SUBCASE("sg rank -1 is the head itself") {
        auto d = build_merged_diagram(h, -2, Flavor::sg);
        CHECK(d.vertices.size() == 2);  // g-head vertex h1 + the tail vertex
        auto m = d.to_sgcm();
        auto hd = h.head_matrix();
        CHECK(m.submatrix(hd.indices).entries == hd.entries);
    }

    SUBCASE("g flavor rank 2 is a type-A chain") {
        auto d = build_merged_diagram(h, 4, Flavor::g);
        auto m = d.to_sgcm();
        CHECK(m.size() == 3);  // h1, beta_{-1}, beta_1
        CHECK(m.is_even());
        auto rep = validate_sgcm(m);
        CHECK(rep.is_sgcm);
        CHECK(rep.is_anisotropic);
        // every edge (-1,-1)
        for (auto& e : d.edges) {
            CHECK(e.label_ft == -1);
            CHECK(e.label_tf == -1);
        }
    }

    SUBCASE("dg tail labels alternate starting (1,1)") {
        auto d = build_merged_diagram(h, 3, Flavor::dg);  // alpha_{-1},1/2,1,3/2
        auto m = d.to_sgcm();
        auto id = [](int k) { return HeadSpec::tail_vertex_id(0, k); };
        CHECK(m.at(m.find(id(-2)), m.find(id(1))) == 1);
        CHECK(m.at(m.find(id(1)), m.find(id(-2))) == 1);
        CHECK(m.at(m.find(id(1)), m.find(id(2))) == -1);
        CHECK(m.at(m.find(id(2)), m.find(id(1))) == -1);
        CHECK(m.at(m.find(id(2)), m.find(id(3))) == 1);
        for (auto& v : d.vertices)
            if (v.id[0] == 't') {
                CHECK(v.parity == Parity::Odd);
                CHECK(v.diag == 0);
            }
    }

    SUBCASE("sg first label (1,-1)") {
        auto d = build_merged_diagram(h, 4, Flavor::sg);  // alpha_{-1}, b_{1/2}, b_{3/2}
        auto m = d.to_sgcm();
        auto id = [](int k) { return HeadSpec::tail_vertex_id(0, k); };
        CHECK(m.at(m.find(id(-2)), m.find(id(1))) == 1);
        CHECK(m.at(m.find(id(1)), m.find(id(-2))) == -1);
        CHECK(m.at(m.find(id(1)), m.find(id(3))) == -1);
        CHECK(validate_sgcm(m).is_sgcm);
    }
}

TEST_CASE("anisotropic head gives anisotropic g diagram when c <= 0") {
    for (auto name : {"G3", "F31", "gl(3|1)", "osp(5|2)", "osp(2|4)", "osp(3|4)"}) {
        auto h = preset(name);
        auto m = build_merged_diagram(h, 6, Flavor::g).to_sgcm();
        auto rep = validate_sgcm(m);
        CHECK_MESSAGE(rep.is_sgcm, name);
        bool c_ok = true;
        for (auto& t : h.tails)
            for (auto& a : t.attachments) c_ok = c_ok && a.c < 0;
        if (c_ok) CHECK_MESSAGE(rep.is_anisotropic, name);
    }
}

TEST_CASE("head symmetrizer extends to the g diagram") {
    for (auto name : {"G3", "F31", "D21a(3)", "gl(3|1)", "osp(2|4)"}) {
        auto h = preset(name);
        auto dh = symmetrizer(h.head_matrix());
        REQUIRE_MESSAGE(dh.has_value(), name);
        auto m = build_merged_diagram(h, 6, Flavor::g).to_sgcm();
        auto dg = symmetrizer(m);
        REQUIRE_MESSAGE(dg.has_value(), name);
        // tail entries all equal the attachment-vertex entry
        auto& d = *dg;
        Rat dtail = d[m.find(HeadSpec::tail_vertex_id(0, -2))];
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.indices[i][0] == 't') CHECK(d[i] == dtail);
    }
}

TEST_CASE("truncate_diagram") {
    auto h = preset("gl(2|1)");
    auto d = build_merged_diagram(h, 6, Flavor::sg);
    auto t = truncate_diagram(d, Flavor::sg, 6);
    CHECK(t.vertices.size() == d.vertices.size());

    auto tm1 = truncate_diagram(d, Flavor::sg, -2);
    CHECK(tm1.vertices.size() == 2);

    auto g = build_merged_diagram(h, 6, Flavor::g);
    auto g1 = truncate_diagram(g, Flavor::g, 2);
    CHECK(g1.vertices.size() == 2);  // head + beta_{-1}

    CHECK_THROWS_AS(truncate_diagram(g1, Flavor::g, 6), DomainError);
}

TEST_CASE("condition (A) rejects bad labels") {
    auto h = preset("gl(2|1)");
    h.tails[0].attachments[0].b = 1;  // positive into an even circle
    CHECK_FALSE(check_head_condition(h).is_sgcm);
    h.tails[0].attachments[0].b = 0;
    CHECK_FALSE(check_head_condition(h).is_sgcm);
    h.tails[0].attachments[0].b = -1;
    CHECK(check_head_condition(h).is_sgcm);
}

TEST_CASE("affine A head has two tails and validates") {
    auto h = preset("affineA");
    CHECK(h.tails.size() == 2);
    auto hd = h.head_matrix();
    CHECK(validate_sgcm(hd).is_sgcm);
    auto d = build_merged_diagram(h, {{0, 4}, {1, 2}}, Flavor::dg);
    CHECK(validate_sgcm(d.to_sgcm()).is_sgcm);
}
