#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "morava/quotients.hpp"

using namespace morava;

namespace {
const FGL both[] = {FGL::Honda, FGL::Elliptic};

uint64_t rng_state = 11;
uint64_t splitmix() {
    uint64_t z = (rng_state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace

TEST_CASE("sizes") {
    CHECK(QuotientGroup::get(3, Variant::S2, FGL::Honda)->size() == 48);
    CHECK(QuotientGroup::get(5, Variant::S2, FGL::Honda)->size() == 768);
    CHECK(QuotientGroup::get(5, Variant::PG2, FGL::Honda)->size() == 768);
    CHECK(QuotientGroup::get(5, Variant::PS2, FGL::Honda)->size() == 384);
    CHECK(QuotientGroup::get(5, Variant::G2, FGL::Elliptic)->size() == 1536);
    CHECK(QuotientGroup::get(2, Variant::PS2, FGL::Honda)->size() == 12);
    CHECK_THROWS_AS(QuotientGroup::build(9, Variant::S2, FGL::Honda), cap_exceeded);
}

TEST_CASE("normal forms of the named elements") {
    for (FGL fgl : both) {
        auto q = QuotientGroup::get(3, Variant::S2, fgl);
        int N = q->internal_prec();

        DigitForm om = q->normal_form(GElt::from_unit(std_endo(StdEndo::Omega, fgl, N)));
        CHECK(om.omega_exp == 1);
        CHECK(om.digits == std::vector<uint8_t>{0, 0});

        // -1 = 1 + xi^2 (mod deeper): digits [0, 1]
        DigitForm m1 = q->normal_form(-GElt::identity(fgl, N));
        CHECK(m1.omega_exp == 0);
        CHECK(m1.digits == std::vector<uint8_t>{0, 1});

        // alpha = 1 + 2 omega (mod deeper): digits [0, zeta]
        DigitForm al = q->normal_form(GElt::from_unit(std_endo(StdEndo::Alpha, fgl, N)));
        CHECK(al.omega_exp == 0);
        CHECK(al.digits == std::vector<uint8_t>{0, 2});
    }
}

TEST_CASE("exhaustive round trip at small depth") {
    for (Variant v : {Variant::S2, Variant::PS2, Variant::G2, Variant::PG2}) {
        auto q = QuotientGroup::get(4, v, FGL::Honda);
        for (int x = 0; x < q->size(); ++x) {
            CHECK(q->id_of(q->rep(x)) == x);
            CHECK(q->id_of(q->form(x)) == x);
        }
        CHECK(q->build_checks().round_trip);
        CHECK(q->build_checks().det_coset_invariant);
        CHECK(q->build_checks().norm_one_subgroup);
    }
}

TEST_CASE("group structure on sampled triples") {
    auto q = QuotientGroup::get(4, Variant::PG2, FGL::Elliptic);
    int n = q->size();
    for (int t = 0; t < 2000; ++t) {
        int x = int(splitmix() % n), y = int(splitmix() % n), z = int(splitmix() % n);
        CHECK(q->mul(q->mul(x, y), z) == q->mul(x, q->mul(y, z)));
        CHECK(q->mul(x, q->inv(x)) == q->identity());
    }
    // phi is a homomorphism to Z/2
    for (int t = 0; t < 500; ++t) {
        int x = int(splitmix() % n), y = int(splitmix() % n);
        CHECK(q->phi(q->mul(x, y)) == (q->phi(x) ^ q->phi(y)));
    }
}

TEST_CASE("determinant residues and the norm-one set") {
    for (FGL fgl : both) {
        // d(2) = 1: everything passes mod 2
        auto q2 = QuotientGroup::get(2, Variant::S2, fgl);
        CHECK(q2->subgroup_image("NormOne").size() == size_t(q2->size()));

        auto q5 = QuotientGroup::get(5, Variant::S2, fgl);
        CHECK(q5->det_modulus_bits() == 3);
        CHECK(q5->is_norm_one(q5->std_id("alpha")));
        // det(pi) = 3 is visible mod 8, so pi leaves the norm-one set at M = 5
        CHECK_FALSE(q5->is_norm_one(q5->std_id("pi")));
        CHECK(q5->subgroup_image("NormOne").size() == 384);

        // at M = 4 the modulus is 4 and the test is vacuous
        auto q4 = QuotientGroup::get(4, Variant::S2, fgl);
        CHECK(q4->subgroup_image("NormOne").size() == size_t(q4->size()));
    }
}

TEST_CASE("filtration images and the K subgroup") {
    for (FGL fgl : both) {
        auto q = QuotientGroup::get(5, Variant::S2, fgl);
        CHECK(q->subgroup_image("F1").size() == 256); // 4^4
        CHECK(q->subgroup_image("F2").size() == 64);
        CHECK(q->subgroup_image("F3").size() == 16);

        const IdSet& K = q->subgroup_image("K");
        CHECK(K.size() == 32);
        // F_{2/2}-image = {1, -1} . K-image, and -1 is not in K
        int m1 = q->std_id("m1");
        CHECK_FALSE(K.contains(m1));
        const IdSet& F2 = q->subgroup_image("F2");
        std::vector<int> pmK;
        for (int x : K.ids) {
            pmK.push_back(x);
            pmK.push_back(q->mul(m1, x));
        }
        IdSet pm = IdSet::of(pmK, q->size());
        CHECK(pm.ids == F2.ids);

        // |K1| * 24 = |norm-one|
        const IdSet& K1 = q->subgroup_image("K1");
        CHECK(K1.size() * 24 == q->subgroup_image("NormOne").size());

        // the two K1 constructions agree
        CHECK(q->subgroup_image("K1_low").ids == K1.ids);
    }
}

TEST_CASE("K1 constructions agree across depths and variants") {
    for (int M : {3, 4, 5, 6}) {
        auto q = QuotientGroup::get(M, Variant::S2, FGL::Honda);
        CHECK(q->subgroup_image("K1_low").ids == q->subgroup_image("K1").ids);
    }
    auto qp = QuotientGroup::get(5, Variant::PS2, FGL::Honda);
    CHECK(qp->subgroup_image("K1_low").ids == qp->subgroup_image("K1").ids);
    auto qg = QuotientGroup::get(5, Variant::PG2, FGL::Elliptic);
    CHECK(qg->subgroup_image("K1_low").ids == qg->subgroup_image("K1").ids);
}

TEST_CASE("PK is normal in the projective variant, K is not normal with Galois") {
    auto qp = QuotientGroup::get(5, Variant::PG2, FGL::Honda);
    const IdSet& pk = qp->subgroup_image("K");
    bool normal = true;
    for (int g = 0; g < qp->size(); ++g)
        for (int x : pk.ids)
            if (!pk.contains(qp->conj(g, x)))
                normal = false;
    CHECK(normal);

    auto qg = QuotientGroup::get(5, Variant::G2, FGL::Honda);
    const IdSet& k = qg->subgroup_image("K");
    bool g_normal = true;
    for (int g = 0; g < qg->size() && g_normal; ++g)
        for (int x : k.ids)
            if (!k.contains(qg->conj(g, x))) {
                g_normal = false;
                break;
            }
    CHECK_FALSE(g_normal);
    // the failure is Galois: conjugating alpha by sigma gives -alpha^{-1},
    // and -1 is not in K
    CHECK_FALSE(k.contains(qg->sigma_conj(qg->std_id("alpha"))));
}

TEST_CASE("finite subgroup images") {
    for (FGL fgl : both) {
        auto q = QuotientGroup::get(5, Variant::PG2, fgl);
        CHECK(q->subgroup_image("G48").size() == 24);
        CHECK(q->subgroup_image("G12").size() == 6);
        auto qs = QuotientGroup::get(5, Variant::S2, fgl);
        CHECK(qs->subgroup_image("G48").size() == 24); // flag-0 part = G24
        CHECK(qs->subgroup_image("G24").size() == 24);
        CHECK(qs->subgroup_image("C6").size() == 6);

        // the norm-one subgroup decomposes as K1 . (G24-image)
        const IdSet& n1 = qs->subgroup_image("NormOne");
        const IdSet& k1 = qs->subgroup_image("K1");
        const IdSet& g24 = qs->subgroup_image("G24");
        std::vector<int> prod;
        for (int a : k1.ids)
            for (int b : g24.ids)
                prod.push_back(qs->mul(a, b));
        CHECK(IdSet::of(prod, qs->size()).ids == n1.ids);
    }
}

TEST_CASE("primed subgroups are conjugate images") {
    auto q = QuotientGroup::get(5, Variant::PG2, FGL::Honda);
    const IdSet& g48 = q->subgroup_image("G48");
    const IdSet& g48p = q->subgroup_image("G48p");
    CHECK(g48p.size() == g48.size());
    int pi = q->std_id("pi");
    std::vector<int> conj;
    for (int x : g48.ids)
        conj.push_back(q->conj(pi, x));
    CHECK(IdSet::of(conj, q->size()).ids == g48p.ids);
    // distinct at this depth
    CHECK(g48p.ids != g48.ids);
}

TEST_CASE("PK/PK1 quotient is generated by the image of alpha*pi") {
    // alpha*pi lies in F_{4/2} and maps to a generator of PK/PK1
    auto q = QuotientGroup::get(5, Variant::PS2, FGL::Honda);
    const IdSet& pk = q->subgroup_image("K");
    const IdSet& pk1 = q->subgroup_image("K1");
    CHECK(pk.size() == 2 * pk1.size());
    int ap = q->mul(q->std_id("alpha"), q->std_id("pi"));
    CHECK(pk.contains(ap));
    CHECK_FALSE(pk1.contains(ap));
    CHECK(q->subgroup_image("F4").contains(ap));
}

TEST_CASE("small generating sets") {
    auto q = QuotientGroup::get(5, Variant::PS2, FGL::Honda);
    const IdSet& k1 = q->subgroup_image("K1");
    auto gens = q->find_generators(k1);
    CHECK(gens.size() <= 6);
    CHECK(gens.size() >= 1);
}

TEST_CASE("variant errors") {
    auto q = QuotientGroup::get(3, Variant::S2, FGL::Honda);
    GElt flagged(EndoElt::one(FGL::Honda, q->internal_prec()), 1);
    CHECK_THROWS_AS(q->normal_form(flagged), variant_mismatch);
    CHECK_THROWS_AS(
        q->normal_form(GElt::identity(FGL::Honda, 3)), insufficient_precision);
    CHECK_THROWS_AS(q->subgroup_image("Z17"), unknown_name);
    CHECK(q->std_id("sigma") == -1);
}
