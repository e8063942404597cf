#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "morava/gtwo.hpp"

using namespace morava;

namespace {

uint64_t rng_state = 7;
uint64_t splitmix() {
    uint64_t z = (rng_state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

GElt random_g(FGL fgl, int prec) {
    for (;;) {
        WittApprox a(splitmix(), splitmix(), prec);
        WittApprox b(splitmix(), splitmix(), prec);
        if (!a.is_unit())
            continue;
        return GElt(EndoElt(a, b, fgl), int(splitmix() & 1));
    }
}

const FGL both[] = {FGL::Honda, FGL::Elliptic};

} // namespace

TEST_CASE("galois flag squares to the identity component") {
    for (FGL fgl : both) {
        int N = 8;
        GElt s = std_g(StdG::Sigma, fgl, N);
        CHECK(s * s == GElt::identity(fgl, N));
        // conjugation by (1,1) applied twice is the identity map
        for (int t = 0; t < 50; ++t) {
            GElt x = random_g(fgl, N);
            CHECK(x.conj_by(s).conj_by(s) == x);
        }
    }
}

TEST_CASE("group laws hold on random triples") {
    for (FGL fgl : both) {
        int N = 8;
        GElt id = GElt::identity(fgl, N);
        for (int t = 0; t < 1000; ++t) {
            GElt x = random_g(fgl, N), y = random_g(fgl, N), z = random_g(fgl, N);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * x.inv() == id);
            CHECK(x.inv() * x == id);
            CHECK((x * y).flag() == (x.flag() ^ y.flag()));
        }
    }
}

TEST_CASE("norm-one predicate is a subgroup predicate") {
    for (FGL fgl : both) {
        int N = 8;
        GElt alpha0 = GElt::from_unit(std_endo(StdEndo::Alpha, fgl, N));
        CHECK(alpha0.is_norm_one());
        GElt pi0 = std_g(StdG::Pi0, fgl, N);
        CHECK_FALSE(pi0.is_norm_one());
        CHECK(std_g(StdG::BracketJMinusK, fgl, N).is_norm_one());
        for (int t = 0; t < 300; ++t) {
            GElt x = random_g(fgl, N), y = random_g(fgl, N);
            if (x.is_norm_one() && y.is_norm_one()) {
                CHECK((x * y).is_norm_one());
                CHECK(x.inv().is_norm_one());
            }
        }
    }
}

TEST_CASE("odd-valuation factorization") {
    int N = 8;
    // j - k = alpha xi (Honda), xi (elliptic)
    EndoElt jmkH = std_endo(StdEndo::J, FGL::Honda, N) - std_endo(StdEndo::K, FGL::Honda, N);
    GElt gH = g_from_odd(jmkH);
    CHECK(gH.flag() == 1);
    CHECK(gH.unit() == std_endo(StdEndo::Alpha, FGL::Honda, N));

    EndoElt jmkE = std_endo(StdEndo::J, FGL::Elliptic, N) - std_endo(StdEndo::K, FGL::Elliptic, N);
    CHECK(g_from_odd(jmkE).unit() == EndoElt::one(FGL::Elliptic, N));

    CHECK_THROWS_AS(g_from_odd(std_endo(StdEndo::I, FGL::Honda, N)), not_odd_valuation);
}

TEST_CASE("bracket elements") {
    for (FGL fgl : both) {
        int N = 8;
        GElt b1pi = std_g(StdG::Bracket1PlusI, fgl, N);
        GElt i0 = GElt::from_unit(std_endo(StdEndo::I, fgl, N));
        GElt j0 = GElt::from_unit(std_endo(StdEndo::J, fgl, N));

        // [1+i]^2 = i for Honda, -i for elliptic
        CHECK(b1pi * b1pi == (fgl == FGL::Honda ? i0 : -i0));
        CHECK(g_order(b1pi) == 8);

        // [j-k] = j [1+i]
        GElt bjmk = std_g(StdG::BracketJMinusK, fgl, N);
        CHECK(bjmk == j0 * b1pi);

        // j (j-k) = -(1+i); the factorization halves a coordinate, so build
        // the operands one bit above N and compare reductions
        EndoElt jmk = std_endo(StdEndo::J, fgl, N + 1) - std_endo(StdEndo::K, fgl, N + 1);
        EndoElt one_pi = EndoElt::one(fgl, N + 1) + std_endo(StdEndo::I, fgl, N + 1);
        GElt j1 = GElt::from_unit(std_endo(StdEndo::J, fgl, N + 1));
        CHECK((j1 * g_from_odd(jmk)).reduced(N) == g_from_odd(-one_pi).reduced(N));

        // conjugation by [j-k] induces the Galois action on W
        GElt alpha0 = GElt::from_unit(std_endo(StdEndo::Alpha, fgl, N));
        CHECK(alpha0.conj_by(bjmk) ==
              GElt::from_unit(std_endo(StdEndo::Alpha, fgl, N).frobenius()));

        // and fixes i while swapping j and k, in the projective group
        GElt k0 = GElt::from_unit(std_endo(StdEndo::K, fgl, N));
        CHECK(proj_equal(i0.conj_by(bjmk), i0));
        CHECK(proj_equal(j0.conj_by(bjmk), k0));
        CHECK(proj_equal(k0.conj_by(bjmk), j0));
    }
}

TEST_CASE("orders and conjugation") {
    for (FGL fgl : both) {
        int N = 8;
        GElt om = GElt::from_unit(std_endo(StdEndo::Omega, fgl, N));
        GElt i0 = GElt::from_unit(std_endo(StdEndo::I, fgl, N));
        GElt j0 = GElt::from_unit(std_endo(StdEndo::J, fgl, N));
        CHECK(i0.conj_by(om) == j0);
        CHECK(g_order(-om) == 6);
        CHECK(g_order(om) == 3);
        CHECK(g_order(GElt::from_unit(std_endo(StdEndo::Alpha, fgl, N))) == std::nullopt);
        CHECK(proj_equal(i0, -i0));
        CHECK_FALSE(proj_equal(i0, j0));
    }
}

TEST_CASE("inverse of a flagged element") {
    int N = 8;
    FGL fgl = FGL::Honda;
    EndoElt alpha = std_endo(StdEndo::Alpha, fgl, N);
    GElt x(alpha, 1);
    // (alpha, 1)^{-1} = (-alpha, 1) since alpha sigma(alpha) = -1
    CHECK(x.inv() == GElt(-alpha, 1));
    CHECK(x * x.inv() == GElt::identity(fgl, N));

    GElt om(std_endo(StdEndo::Omega, fgl, N), 0);
    CHECK(om.inv() == GElt(std_endo(StdEndo::Omega, fgl, N) *
                               std_endo(StdEndo::Omega, fgl, N),
                           0));
}
