#include "stt/cocycle.hpp"
#include "stt/errors.hpp"
#include "stt/unitary_rep.hpp"

#include <doctest.h>

using namespace stt;

namespace {

CycMatrix sigma_x() {
    CycMatrix m(2, 2);
    m.at(0, 1) = Cyclotomic::one();
    m.at(1, 0) = Cyclotomic::one();
    return m;
}

CycMatrix sigma_z() {
    CycMatrix m(2, 2);
    m.at(0, 0) = Cyclotomic::one();
    m.at(1, 1) = -Cyclotomic::one();
    return m;
}

} // namespace

TEST_CASE("regular representation is genuine and unitary") {
    auto g = FiniteGroup::symmetric3();
    auto rho = UnitaryRep::regular(g);
    CHECK(rho.is_genuine());
    CHECK(rho.all_unitary());
    auto chi = character(rho);
    CHECK(chi[g.identity] == Cyclotomic::rational(Rat(g.order())));
    for (int s = 0; s < g.order(); ++s)
        if (s != g.identity) CHECK(chi[s].is_zero());
}

TEST_CASE("one_dim validates the homomorphism property") {
    auto g = FiniteGroup::cyclic(4);
    std::vector<Cyclotomic> good, bad;
    for (int k = 0; k < 4; ++k) good.push_back(Cyclotomic::root_of_unity(4, k));
    bad = good;
    bad[2] = Cyclotomic::one();
    CHECK(UnitaryRep::one_dim(g, good).is_genuine());
    CHECK_THROWS(UnitaryRep::one_dim(g, bad));
}

TEST_CASE("twisting undoes a coboundary multiplier") {
    auto g = FiniteGroup::dihedral(4);
    auto rho = UnitaryRep::regular(g);
    Splitting alpha = Splitting::trivial(g);
    for (int s = 0; s < g.order(); ++s)
        if (s != g.identity) alpha.alpha[s] = Cyclotomic::root_of_unity(8, s % 8);
    auto c = coboundary(alpha);

    // scale the genuine rep into a projective one with multiplier c
    UnitaryRep proj = rho;
    for (int s = 0; s < g.order(); ++s) proj.images[s] = rho.images[s].scaled(alpha.alpha[s]);
    CHECK_FALSE(proj.is_genuine());
    CHECK(proj.has_multiplier(c));

    auto fixed = twist_projective_rep(proj, c, alpha);
    CHECK(fixed.is_genuine());
    for (int s = 0; s < g.order(); ++s) CHECK(fixed.images[s] == rho.images[s]);

    // wrong splitting is refused
    Splitting wrong = Splitting::trivial(g);
    CHECK_THROWS_AS(twist_projective_rep(proj, coboundary(wrong), wrong), MultiplierMismatch);
}

TEST_CASE("matrix group closure of the Pauli pair") {
    auto h = MatrixGroup::closure({sigma_x(), sigma_z(), -CycMatrix::identity(2)});
    CHECK(h.elements.size() == 8);
    auto rho = h.inclusion_rep();
    CHECK(rho.is_genuine());
    CHECK(rho.all_unitary());
    CHECK(h.find(sigma_x() * sigma_z()) >= 0);
    CHECK(h.find(CycMatrix::scalar(2, Cyclotomic::root_of_unity(8, 1))) < 0);
}

TEST_CASE("eta_e descent is independent of the square-root choice") {
    // G = Z/2, theta(s) = sigma_x, epsilon trivial, sqrt choices +-1
    auto g = FiniteGroup::cyclic(2);
    auto h = MatrixGroup::closure({sigma_x(), -CycMatrix::identity(2)});
    REQUIRE(h.elements.size() == 4);

    UnitaryRep theta{g, 2, {CycMatrix::identity(2), sigma_x()}};
    auto eps = UnitaryRep::trivial(g);

    SUBCASE("odd e with the inclusion representation") {
        auto eta = h.inclusion_rep();
        for (auto s1 : {1, -1})
            for (auto s2 : {1, -1}) {
                std::vector<Cyclotomic> sqrt_choice{
                    Cyclotomic::rational(Rat(s1)), Cyclotomic::rational(Rat(s2))};
                auto rep = build_eta_e(theta, h, eta, eps, 1, sqrt_choice);
                CHECK(rep.is_genuine());
                CHECK(rep.images[1] == sigma_x());
            }
    }

    SUBCASE("even e with a sign character of H") {
        // eta kills -I and sends +-sigma_x to -1
        std::vector<Cyclotomic> vals(4, Cyclotomic::one());
        for (size_t i = 0; i < h.elements.size(); ++i)
            if (h.elements[i].equals_up_to_sign(sigma_x())) vals[i] = -Cyclotomic::one();
        auto eta = UnitaryRep::one_dim(h.group, vals);
        for (auto s1 : {1, -1}) {
            std::vector<Cyclotomic> sqrt_choice{Cyclotomic::one(),
                                                Cyclotomic::rational(Rat(s1))};
            auto rep = build_eta_e(theta, h, eta, eps, 2, sqrt_choice);
            CHECK(rep.is_genuine());
            CHECK(rep.images[1] == -CycMatrix::identity(1));
        }
    }

    SUBCASE("parity mismatch is rejected") {
        auto eta = h.inclusion_rep(); // eta(-I) = -I, parity odd
        std::vector<Cyclotomic> sqrt_choice{Cyclotomic::one(), Cyclotomic::one()};
        CHECK_THROWS_AS(build_eta_e(theta, h, eta, eps, 2, sqrt_choice), ParityViolation);
    }
}
