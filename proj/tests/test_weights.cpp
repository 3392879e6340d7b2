#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "superdual/weight.hpp"

using namespace superdual;
using namespace superdual::weights;
using superdual::symfunc::Partition;
using cartan::Flavor;

TEST_CASE("eps and h duality") {
    // <eps_i, h_j> = delta_ij over a window of indices
    std::vector<int> idxs{-2, 1, 2, 3, 4, 5, 6, 7};
    for (int i : idxs)
        for (int j : idxs)
            CHECK(pair(eps(0, i), h_coroot(0, j)) == (i == j ? 1 : 0));
    // <omega_k, h_j> = 0 for head k
    for (int j : idxs) CHECK(pair(head_fw("g1"), h_coroot(0, j)) == 0);
    // cross-tail pairings vanish
    CHECK(pair(eps(0, 3), h_coroot(1, 3)) == 0);
}

TEST_CASE("printed eps expansions") {
    CHECK(eps(0, -2) == tail_fw(0, -2));                    // eps_{-1} = omega_{-1}
    CHECK(eps(0, 1) == tail_fw(0, -2) - tail_fw(0, 1));     // eps_{1/2} = -w_{1/2}+w_{-1}
    CHECK(eps(0, 3) == tail_fw(0, 2) - tail_fw(0, 3));      // eps_{3/2} = -(w_{3/2}-w_1)
    CHECK(h_coroot(0, 3) == make_rat(-1) * h_coroot(0, 2) + tail_coroot(0, 2));
}

TEST_CASE("omega pairings") {
    CHECK(pair(omega(), derivation(0)) == 1);
    CHECK(pair(omega(), derivation(1)) == 1);
    CHECK(pair(omega(), tail_coroot(0, -2)) == 0);
    CHECK(pair(omega(), head_coroot("g1")) == 0);
    CHECK(pair(tail_omega(1), derivation(0)) == 0);
    CHECK(pair(tail_omega(1), derivation(1)) == 1);
    // <omega_i, d> = -1 on tail fundamental weights, 0 on head ones
    CHECK(pair(tail_fw(0, 3), derivation(0)) == -1);
    CHECK(pair(head_fw("x"), derivation(0)) == 0);
}

TEST_CASE("varpi values and duality") {
    CHECK(varpi(0, -2) == eps(0, -2));
    CHECK(varpi(0, 1) == make_rat(-1) * eps(0, 1));
    CHECK(varpi(0, 2) == eps(0, 2) + eps(0, -2));
    CHECK(varpi(0, 4) == eps(0, 4) + eps(0, 2) + eps(0, -2));
    CHECK(varpi(0, 3) == make_rat(-1) * eps(0, 3) - eps(0, 1));

    // <varpi_i, beta_j^vee> = delta_ij against the raw reflected coroots:
    // beta_{-1}^vee = h_{-1}-h_1 and beta_j^vee = h_j - h_{j+1} on the
    // integer side, beta_r^vee = h_{r+1} - h_r on the half side (the odd
    // reflections produce those with diagonal -2 before normalization).
    auto beta_cor = [](int idx2) {
        if (idx2 == -2) return h_coroot(0, -2) - h_coroot(0, 2);
        if (idx2 % 2 == 0) return h_coroot(0, idx2) - h_coroot(0, idx2 + 2);
        return h_coroot(0, idx2 + 2) - h_coroot(0, idx2);
    };
    std::vector<int> g_idx{-2, 2, 4, 6};
    for (int i : g_idx)
        for (int j : g_idx)
            CHECK(pair(varpi(0, i), beta_cor(j)) == (i == j ? 1 : 0));
    std::vector<int> sg_idx{1, 3, 5};
    for (int i : sg_idx)
        for (int j : sg_idx)
            CHECK(pair(varpi(0, i), beta_cor(j)) == (i == j ? 1 : 0));
    // cross-family pairings vanish as well
    for (int i : g_idx)
        for (int j : sg_idx) {
            CHECK(pair(varpi(0, i), beta_cor(j)) == 0);
            CHECK(pair(varpi(0, j), beta_cor(i)) == 0);
        }
}

TEST_CASE("frobenius coordinates") {
    CHECK(frobenius_theta(Partition(std::vector<long>{})).empty());
    CHECK(frobenius_theta(Partition({1})) == std::vector<long>{1});
    CHECK(frobenius_theta(Partition({3, 1})) == std::vector<long>{2, 2});
    CHECK(frobenius_theta(Partition({2, 2})) == std::vector<long>{2, 1, 1});
}

static Weight p_weight(long kappa, long km1, const Partition& lam,
                       const std::vector<std::pair<std::string, long>>& head = {}) {
    Weight w = make_rat(kappa) * omega() + make_rat(km1) * eps(0, -2);
    for (auto& [id, c] : head) w += make_rat(c) * head_fw(id);
    for (std::size_t i = 0; i < lam.length(); ++i)
        w += make_rat(lam.part(i)) * eps(0, 2 * static_cast<int>(i) + 2);
    return w;
}

TEST_CASE("natural and theta maps") {
    Partition lam({3, 1});
    Weight w = p_weight(2, 5, lam, {{"g1", 7}});
    auto nat = natural_map(w);
    // conjugate (2,1,1) lands on eps_{1/2}, eps_{3/2}, eps_{5/2}
    CHECK(nat.eps_coeff(0, 1) == 2);
    CHECK(nat.eps_coeff(0, 3) == 1);
    CHECK(nat.eps_coeff(0, 5) == 1);
    CHECK(nat.eps_coeff(0, 2) == 0);
    CHECK(nat.eps_coeff(0, -2) == 5);
    CHECK(nat.head_coeff("g1") == 7);

    auto th = theta_map(w);
    CHECK(th.eps_coeff(0, 1) == 2);
    CHECK(th.eps_coeff(0, 2) == 2);
    CHECK(th.eps_coeff(0, 3) == 0);
    CHECK(th.eps_coeff(0, -2) == 5);

    // trivial tail: both maps fix the weight
    Weight flat = p_weight(1, 4, Partition(std::vector<long>{}), {{"g1", 2}});
    CHECK(natural_map(flat) == flat);
    CHECK(theta_map(flat) == flat);
}

TEST_CASE("maps agree with conjugation/Frobenius oracles on random partitions") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        // random partition of size <= 12
        std::vector<long> parts;
        long budget = 12;
        long maxp = 6;
        while (budget > 0) {
            std::uniform_int_distribution<long> dist(0, std::min(budget, maxp));
            long p = dist(rng);
            if (p == 0) break;
            parts.push_back(p);
            maxp = p;
            budget -= p;
        }
        std::sort(parts.rbegin(), parts.rend());
        Partition lam(parts);
        Weight w = p_weight(0, lam.part(0) + 1, lam);
        auto nat = natural_map(w);
        auto conj = lam.conjugate();
        for (std::size_t j = 0; j < conj.length(); ++j)
            CHECK(nat.eps_coeff(0, 2 * static_cast<int>(j) + 1) == conj.part(j));
        // theta and natural come from the same partition: reconstruct from theta
        auto th = theta_map(w);
        auto fr = frobenius_theta(lam);
        for (std::size_t k = 0; k < fr.size(); ++k)
            CHECK(th.eps_coeff(0, static_cast<int>(k) + 1) == fr[k]);
    }
}

TEST_CASE("dominance memberships") {
    cartan::Sgcm head{{"g1", "g2"},
                      {cartan::Parity::Even, cartan::Parity::Odd},
                      {{2, -2}, {-1, 2}}};
    Weight zero;
    CHECK(in_P_plus(zero, head, {"g1", "g2"}));
    CHECK(in_P_plusplus_G(zero, head));
    CHECK(in_P_plusplus_script(zero, head));

    // odd head vertex needs even kappa
    Weight w1 = head_fw("g2");
    CHECK_FALSE(in_P_plus(w1, head, {"g2"}));
    CHECK(in_P_plus(w1, head, {"g1"}));
    CHECK(in_P_plus(make_rat(2) * head_fw("g2"), head, {"g2"}));

    // eps coefficients (1,2) are not weakly decreasing
    Weight w2 = eps(0, 2) + make_rat(2) * eps(0, 4);
    CHECK_FALSE(in_P_plus(w2, head, {}));

    // P++ needs the -1 slot to dominate
    Weight w3 = p_weight(0, 0, Partition({1}));
    CHECK(in_P_plus(w3, head, {}));
    CHECK_FALSE(in_P_plusplus_G(w3, head));
    Weight w4 = p_weight(0, 1, Partition({1}));
    CHECK(in_P_plusplus_G(w4, head));

    // script variant: eps_{1/2} nonzero needs eps_{-1} nonzero
    Weight w5 = eps(0, 1);
    CHECK_FALSE(in_P_plusplus_script(w5, head));
    CHECK(in_P_plusplus_script(eps(0, -2) + eps(0, 1), head));
    CHECK(in_P_plusplus_script(make_rat(2) * eps(0, -2), head));
}

TEST_CASE("truncate_weight") {
    // support <= n+1/2 passes and omega is rewritten
    Weight w = make_rat(3) * omega() + eps(0, 2);
    auto t = truncate_weight(w, Flavor::g, 4, {0});
    REQUIRE(t.has_value());
    CHECK(t->coeff({SymKind::Omega, 0, 0, ""}) == 0);
    // g-flavor omega expansion: -eps_{-1}-eps_1-eps_2 at rank 2
    CHECK(t->eps_coeff(0, -2) == -3);
    CHECK(t->eps_coeff(0, 2) == 1 - 3);
    CHECK(t->eps_coeff(0, 4) == -3);

    // eps beyond the window kills the weight
    Weight bad = eps(0, 6);
    CHECK_FALSE(truncate_weight(bad, Flavor::g, 4, {0}).has_value());
    CHECK_FALSE(truncate_weight(eps(0, 3), Flavor::sg, -2, {0}).has_value());

    // omega at n=0-equivalent for dg rank -1: -eps_{-1}+eps_{1/2}
    auto tdg = truncate_weight(omega(), Flavor::dg, -2, {0});
    REQUIRE(tdg.has_value());
    CHECK(*tdg == eps(0, 1) - eps(0, -2));

    // sg rank 1: -eps_{-1}+eps_{1/2}+eps_{3/2}
    auto tsg = truncate_weight(omega(), Flavor::sg, 2, {0});
    REQUIRE(tsg.has_value());
    CHECK(*tsg == eps(0, 1) + eps(0, 3) - eps(0, -2));

    // sg rank -1 keeps the gl(1|1) slot eps_{1/2}
    CHECK(truncate_weight(eps(0, 1), Flavor::sg, -2, {0}).has_value());
    CHECK(eps_index_allowed(Flavor::sg, -2, 1));
    CHECK_FALSE(eps_index_allowed(Flavor::sg, -2, 3));
    CHECK(eps_index_allowed(Flavor::dg, 3, 4));
    CHECK_FALSE(eps_index_allowed(Flavor::dg, 3, 5));
}

TEST_CASE("weight json round-trip") {
    Weight w = make_rat(2) * omega() + make_rat(-3) * head_fw("g1") +
               make_rat(1, 2) * eps(1, 3) + tail_omega(0);
    auto back = Weight::from_json(w.to_json());
    CHECK(back == w);
    // tfw input symbols canonicalize into epsilons
    auto parsed = Weight::from_json(
        R"({"terms":[{"basis":"tfw","tail":0,"index":1,"coeff":"1"}]})");
    CHECK(parsed == eps(0, -2) - eps(0, 1));
}
