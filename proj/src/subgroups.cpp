#include "morava/subgroups.hpp"

#include <array>
#include <deque>

namespace morava {

namespace {

uint64_t mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

uint64_t raw_key(const GElt& g) {
    uint64_t h = 0x243f6a8885a308d3ull;
    h = mix(h, g.unit().a().a0());
    h = mix(h, g.unit().a().a1());
    h = mix(h, g.unit().b().a0());
    h = mix(h, g.unit().b().a1());
    h = mix(h, uint64_t(g.flag()));
    return h;
}

// encoding used to pick the canonical one of {g, -g}
bool coords_less(const GElt& x, const GElt& y) {
    auto tup = [](const GElt& g) {
        return std::array<uint64_t, 5>{g.unit().a().a0(), g.unit().a().a1(),
                                       g.unit().b().a0(), g.unit().b().a1(),
                                       uint64_t(g.flag())};
    };
    return tup(x) < tup(y);
}

} // namespace

GElt SubgroupTable::canonical(const GElt& g) const {
    if (!projective_)
        return g;
    GElt m = -g;
    return coords_less(g, m) ? g : m;
}

SubgroupTable SubgroupTable::closure(std::string name, const std::vector<GElt>& generators,
                                     bool projective, int cap) {
    if (generators.empty())
        throw std::invalid_argument("SubgroupTable::closure: no generators");
    SubgroupTable t;
    t.name_ = std::move(name);
    t.projective_ = projective;

    std::vector<GElt> gens = generators;
    for (const auto& g : generators)
        gens.push_back(g.inv());

    GElt id = GElt::identity(generators[0].fgl(), generators[0].prec());
    std::deque<GElt> work;
    auto push = [&](const GElt& g) {
        GElt c = t.canonical(g);
        uint64_t k = raw_key(c);
        if (t.index_.count(k))
            return;
        t.index_.emplace(k, int(t.elements_.size()));
        t.elements_.push_back(c);
        work.push_back(c);
        if (int(t.elements_.size()) > cap)
            throw cap_exceeded(
                "SubgroupTable::closure: size exceeded cap (precision collision or infinite group)");
    };
    push(id);
    for (const auto& g : generators)
        push(t.canonical(g));
    while (!work.empty()) {
        GElt x = work.front();
        work.pop_front();
        for (const auto& g : gens)
            push(x * g);
    }
    return t;
}

bool SubgroupTable::contains(const GElt& g) const {
    return index_.count(raw_key(canonical(g))) != 0;
}

bool SubgroupTable::contains_table(const SubgroupTable& h) const {
    if (h.projective() != projective_)
        return false;
    for (const auto& g : h.elements())
        if (!contains(g))
            return false;
    return true;
}

std::map<int, int> SubgroupTable::order_profile() const {
    std::map<int, int> profile;
    GElt id = GElt::identity(fgl(), prec());
    for (const auto& g : elements_) {
        GElt p = g;
        int n = 1;
        while (!(projective_ ? proj_equal(p, id) : p == id)) {
            p = p * g;
            ++n;
            if (n > int(size()) + 1)
                throw cap_exceeded("order_profile: order exceeds table size");
        }
        profile[n] += 1;
    }
    return profile;
}

std::vector<GElt> SubgroupTable::transversal(const SubgroupTable& h) const {
    if (h.projective() != projective_ || !contains_table(h))
        throw not_a_subgroup("transversal: second table is not a subgroup of the first");
    std::vector<GElt> reps;
    std::unordered_map<uint64_t, bool> seen;
    for (const auto& g : elements_) {
        if (seen.count(raw_key(g)))
            continue;
        reps.push_back(g);
        for (const auto& x : h.elements()) {
            seen.emplace(raw_key(canonical(g * x)), true);
            if (projective_)
                seen.emplace(raw_key(canonical(-(g * x))), true);
        }
    }
    if (reps.size() * h.size() != size())
        throw not_a_subgroup("transversal: cosets do not partition the table");
    return reps;
}

SubgroupTable std_subgroup(StdSubgroup name, FGL fgl, int prec, bool projective) {
    if (prec < 4)
        throw insufficient_precision("std_subgroup: precision must be at least 4");
    auto i = GElt::from_unit(std_endo(StdEndo::I, fgl, prec));
    auto j = GElt::from_unit(std_endo(StdEndo::J, fgl, prec));
    auto k = GElt::from_unit(std_endo(StdEndo::K, fgl, prec));
    auto om = GElt::from_unit(std_endo(StdEndo::Omega, fgl, prec));
    auto b1pi = std_g(StdG::Bracket1PlusI, fgl, prec);
    auto bjmk = std_g(StdG::BracketJMinusK, fgl, prec);
    auto pi0 = std_g(StdG::Pi0, fgl, prec);

    auto conj_all = [&](const SubgroupTable& t, const std::string& nm) {
        std::vector<GElt> gens;
        for (const auto& g : t.elements())
            gens.push_back(g.conj_by(pi0));
        return SubgroupTable::closure(nm, gens, projective);
    };

    switch (name) {
    case StdSubgroup::Q8:
        return SubgroupTable::closure("Q8", {i, j}, projective);
    case StdSubgroup::C6:
        return SubgroupTable::closure("C6", {-om}, projective);
    case StdSubgroup::C8:
        return SubgroupTable::closure("C8", {b1pi}, projective);
    case StdSubgroup::G24:
        return SubgroupTable::closure("G24", {i, j, k, om}, projective);
    case StdSubgroup::G12:
        return SubgroupTable::closure("G12", {-om, bjmk}, projective);
    case StdSubgroup::G48:
        // generator order makes the G12-transversal come out as {e, i, j, k}
        return SubgroupTable::closure("G48", {i, j, k, om, b1pi}, projective);
    case StdSubgroup::G24p:
        return conj_all(std_subgroup(StdSubgroup::G24, fgl, prec, projective), "G24p");
    case StdSubgroup::G48p:
        return conj_all(std_subgroup(StdSubgroup::G48, fgl, prec, projective), "G48p");
    }
    throw unknown_name("std_subgroup: unknown subgroup");
}

SubgroupTable std_subgroup(const std::string& name, FGL fgl, int prec, bool projective) {
    static const std::map<std::string, StdSubgroup> names = {
        {"Q8", StdSubgroup::Q8},     {"C6", StdSubgroup::C6},
        {"C8", StdSubgroup::C8},     {"G24", StdSubgroup::G24},
        {"G12", StdSubgroup::G12},   {"G48", StdSubgroup::G48},
        {"G24p", StdSubgroup::G24p}, {"G48p", StdSubgroup::G48p}};
    auto it = names.find(name);
    if (it == names.end())
        throw unknown_name("std_subgroup: unknown subgroup '" + name + "'");
    return std_subgroup(it->second, fgl, prec, projective);
}

} // namespace morava
