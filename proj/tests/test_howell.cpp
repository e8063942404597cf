#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "morava/howell.hpp"

#include <set>

using namespace morava;

namespace {

uint64_t rng_state = 3;
uint64_t splitmix() {
    uint64_t z = (rng_state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Exhaustive span of up to a few generators over Z/2^nbits: every
// coefficient combination, as a set of rows.
std::set<Row> span_enumerate(const std::vector<Row>& gens, int nbits) {
    uint32_t mod = 1u << nbits;
    uint32_t mask = mod - 1;
    std::set<Row> out;
    size_t combos = 1;
    for (size_t i = 0; i < gens.size(); ++i)
        combos *= mod;
    size_t ncols = gens.empty() ? 0 : gens[0].size();
    for (size_t c = 0; c < combos; ++c) {
        Row v(ncols, 0);
        size_t cc = c;
        for (const auto& g : gens) {
            uint32_t coef = cc % mod;
            cc /= mod;
            for (size_t i = 0; i < ncols; ++i)
                v[i] = (v[i] + coef * g[i]) & mask;
        }
        out.insert(v);
    }
    return out;
}

Row random_row(int ncols, int nbits) {
    Row r(ncols);
    for (auto& x : r)
        x = uint32_t(splitmix()) & ((1u << nbits) - 1);
    return r;
}

} // namespace

TEST_CASE("membership agrees with exhaustive span enumeration over (Z/4)^4") {
    int nbits = 2, ncols = 4;
    for (int instance = 0; instance < 50; ++instance) {
        int ngens = 1 + int(splitmix() % 3);
        std::vector<Row> gens;
        for (int i = 0; i < ngens; ++i)
            gens.push_back(random_row(ncols, nbits));

        HowellBasis basis(ncols, nbits);
        for (const auto& g : gens)
            basis.insert(g);
        basis.canonicalize();

        auto truth = span_enumerate(gens, nbits);
        // every vector of the ambient gets the same verdict
        Row v(ncols, 0);
        for (int c = 0; c < 256; ++c) {
            int cc = c;
            for (int i = 0; i < ncols; ++i) {
                v[i] = cc & 3;
                cc >>= 2;
            }
            CHECK(basis.contains(v) == (truth.count(v) > 0));
        }
    }
}

TEST_CASE("span membership at higher modulus, randomized") {
    int nbits = 5, ncols = 3;
    for (int instance = 0; instance < 20; ++instance) {
        std::vector<Row> gens = {random_row(ncols, nbits), random_row(ncols, nbits)};
        HowellBasis basis(ncols, nbits);
        for (const auto& g : gens)
            basis.insert(g);
        basis.canonicalize();
        auto truth = span_enumerate(gens, nbits);
        for (int t = 0; t < 200; ++t) {
            Row v = random_row(ncols, nbits);
            CHECK(basis.contains(v) == (truth.count(v) > 0));
        }
        // every member of the true span is contained
        int cnt = 0;
        for (const auto& m : truth) {
            CHECK(basis.contains(m));
            if (++cnt > 400)
                break;
        }
    }
}

TEST_CASE("canonical forms are unique per span") {
    int nbits = 4, ncols = 5;
    for (int instance = 0; instance < 30; ++instance) {
        std::vector<Row> gens = {random_row(ncols, nbits), random_row(ncols, nbits),
                                 random_row(ncols, nbits)};
        HowellBasis b1(ncols, nbits), b2(ncols, nbits);
        for (const auto& g : gens)
            b1.insert(g);
        // insert in another order, plus redundant combinations
        b2.insert(gens[2]);
        b2.insert(gens[0]);
        Row sum(ncols);
        for (int i = 0; i < ncols; ++i)
            sum[i] = (gens[0][i] + 3 * gens[1][i]) & b2.mask();
        b2.insert(sum);
        b2.insert(gens[1]);
        b1.canonicalize();
        b2.canonicalize();
        CHECK(b1.equal_span(b2));
        CHECK(b1.includes(b2));
        CHECK(b2.includes(b1));
    }
}

TEST_CASE("insert is idempotent") {
    int nbits = 3, ncols = 6;
    HowellBasis b(ncols, nbits);
    std::vector<Row> gens;
    for (int i = 0; i < 4; ++i)
        gens.push_back(random_row(ncols, nbits));
    for (const auto& g : gens)
        b.insert(g);
    b.canonicalize();
    HowellBasis c = b;
    for (const auto& r : b.rows())
        CHECK_FALSE(c.insert(r));
    c.canonicalize();
    CHECK(b.equal_span(c));
}

TEST_CASE("zero and full spans") {
    HowellBasis b(3, 2);
    CHECK(b.contains(Row{0, 0, 0}));
    CHECK_FALSE(b.contains(Row{0, 1, 0}));
    b.insert(Row{1, 0, 0});
    b.insert(Row{0, 1, 0});
    b.insert(Row{0, 0, 1});
    b.canonicalize();
    CHECK(b.row_count() == 3);
    CHECK(b.contains(Row{3, 2, 1}));

    // span of {2e} is the even vectors
    HowellBasis ev(2, 3);
    ev.insert(Row{2, 0});
    ev.insert(Row{0, 2});
    ev.canonicalize();
    CHECK(ev.contains(Row{6, 4}));
    CHECK_FALSE(ev.contains(Row{1, 0}));
}

TEST_CASE("annihilator rows are present") {
    // 2*x = 0 has the solution row 4 (mod 8) after inserting a pivot of
    // valuation 1: the annihilator 2^{3-1} * row must be in the span
    HowellBasis b(2, 3);
    b.insert(Row{2, 1});
    b.canonicalize();
    CHECK(b.contains(Row{(2 * 4) & 7, 4})); // 4 * (2,1) = (0,4)
    CHECK(b.contains(Row{0, 4}));
}

TEST_CASE("dimension mismatch") {
    HowellBasis b(3, 2);
    CHECK_THROWS_AS(b.insert(Row{1, 2}), std::invalid_argument);
}
