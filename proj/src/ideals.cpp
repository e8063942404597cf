#include "morava/ideals.hpp"

#include <algorithm>
#include <functional>

namespace morava {

RingAmbient::RingAmbient(QuotientPtr q, const std::string& subgroup, int nb)
    : Q(std::move(q)), subgroup_name(subgroup), nbits(nb) {
    const IdSet& s = Q->subgroup_image(subgroup);
    ids = s.ids;
    col_of.assign(Q->size(), -1);
    for (size_t i = 0; i < ids.size(); ++i)
        col_of[ids[i]] = 2 * int(i);
}

Row RingAmbient::to_row(const RingElt& x) const {
    if (x.Q() != Q)
        throw variant_mismatch("RingAmbient::to_row: wrong quotient");
    Row r(dim(), 0);
    uint32_t mask = (1u << nbits) - 1;
    for (const auto& [id, w] : x.coeffs()) {
        if (col_of[id] < 0)
            throw variant_mismatch("RingAmbient::to_row: support outside the ambient subgroup");
        r[col_of[id]] = uint32_t(w.a0()) & mask;
        r[col_of[id] + 1] = uint32_t(w.a1()) & mask;
    }
    return r;
}

RingElt RingAmbient::from_row(const Row& r, int prec) const {
    RingElt x(Q, prec);
    for (size_t i = 0; i < ids.size(); ++i)
        if (r[2 * i] || r[2 * i + 1])
            x.add_term(ids[i], WittApprox(r[2 * i], r[2 * i + 1], prec));
    return x;
}

Row ModuleAmbient::to_row(const ModuleElt& v) const {
    if (v.space() != space)
        throw variant_mismatch("ModuleAmbient::to_row: wrong coset space");
    Row r(dim(), 0);
    uint32_t mask = (1u << nbits) - 1;
    for (const auto& [c, w] : v.coeffs()) {
        r[2 * c] = uint32_t(w.a0()) & mask;
        r[2 * c + 1] = uint32_t(w.a1()) & mask;
    }
    return r;
}

ModuleElt ModuleAmbient::from_row(const Row& r, int prec) const {
    ModuleElt v(space, prec);
    for (int c = 0; c < space->num_cosets(); ++c)
        if (r[2 * c] || r[2 * c + 1])
            v.add_term(c, WittApprox(r[2 * c], r[2 * c + 1], prec));
    return v;
}

namespace {

using Transform = std::function<Row(const Row&)>;

// (a0, a1) -> zeta * (a0 + a1 zeta) = (-a1, a0 - a1)
inline void zeta_pair(uint32_t& a0, uint32_t& a1, uint32_t mask) {
    uint32_t n0 = (0 - a1) & mask;
    uint32_t n1 = (a0 - a1) & mask;
    a0 = n0;
    a1 = n1;
}

// (a0, a1) -> zeta^2 * (a0 + a1 zeta) = (a1 - a0, -a0)
inline void zeta2_pair(uint32_t& a0, uint32_t& a1, uint32_t mask) {
    uint32_t n0 = (a1 - a0) & mask;
    uint32_t n1 = (0 - a0) & mask;
    a0 = n0;
    a1 = n1;
}

// (a0, a1) -> frobenius = (a0 - a1, -a1)
inline void frob_pair(uint32_t& a0, uint32_t& a1, uint32_t mask) {
    a0 = (a0 - a1) & mask;
    a1 = (0 - a1) & mask;
}

Transform ring_lmul(const RingAmbient& amb, int g) {
    const auto& row = amb.Q->lmul_row(g);
    bool twist = amb.Q->phi(g) != 0;
    uint32_t mask = (1u << amb.nbits) - 1;
    return [&amb, &row, twist, mask](const Row& in) {
        Row out(in.size(), 0);
        for (size_t i = 0; i + 1 < in.size(); i += 2) {
            uint32_t a0 = in[i], a1 = in[i + 1];
            if (!a0 && !a1)
                continue;
            if (twist)
                frob_pair(a0, a1, mask);
            int tgt = amb.col_of[row[amb.ids[i / 2]]];
            out[tgt] = a0;
            out[tgt + 1] = a1;
        }
        return out;
    };
}

Transform ring_rmul(const RingAmbient& amb, int g) {
    const auto& row = amb.Q->rmul_row(g);
    return [&amb, &row](const Row& in) {
        Row out(in.size(), 0);
        for (size_t i = 0; i + 1 < in.size(); i += 2) {
            if (!in[i] && !in[i + 1])
                continue;
            int tgt = amb.col_of[row[amb.ids[i / 2]]];
            out[tgt] = in[i];
            out[tgt + 1] = in[i + 1];
        }
        return out;
    };
}

Transform ring_lzeta(const RingAmbient& amb) {
    uint32_t mask = (1u << amb.nbits) - 1;
    return [mask](const Row& in) {
        Row out = in;
        for (size_t i = 0; i + 1 < out.size(); i += 2)
            zeta_pair(out[i], out[i + 1], mask);
        return out;
    };
}

// right multiplication by the scalar zeta twists through the grading
Transform ring_rzeta(const RingAmbient& amb) {
    uint32_t mask = (1u << amb.nbits) - 1;
    std::vector<char> flags(amb.ids.size());
    for (size_t i = 0; i < amb.ids.size(); ++i)
        flags[i] = char(amb.Q->phi(amb.ids[i]));
    return [mask, flags](const Row& in) {
        Row out = in;
        for (size_t i = 0; i + 1 < out.size(); i += 2) {
            if (flags[i / 2])
                zeta2_pair(out[i], out[i + 1], mask);
            else
                zeta_pair(out[i], out[i + 1], mask);
        }
        return out;
    };
}

Transform module_act(const ModuleAmbient& amb, int g) {
    bool twist = amb.space->Q()->phi(g) != 0;
    uint32_t mask = (1u << amb.nbits) - 1;
    std::vector<int> target(amb.space->num_cosets());
    for (int c = 0; c < amb.space->num_cosets(); ++c)
        target[c] = amb.space->act(g, c);
    return [twist, mask, target](const Row& in) {
        Row out(in.size(), 0);
        for (size_t c = 0; c * 2 + 1 < in.size(); ++c) {
            uint32_t a0 = in[2 * c], a1 = in[2 * c + 1];
            if (!a0 && !a1)
                continue;
            if (twist)
                frob_pair(a0, a1, mask);
            out[2 * target[c]] = (out[2 * target[c]] + a0) & mask;
            out[2 * target[c] + 1] = (out[2 * target[c] + 1] + a1) & mask;
        }
        return out;
    };
}

Transform module_lzeta(const ModuleAmbient& amb) {
    uint32_t mask = (1u << amb.nbits) - 1;
    return [mask](const Row& in) {
        Row out = in;
        for (size_t i = 0; i + 1 < out.size(); i += 2)
            zeta_pair(out[i], out[i + 1], mask);
        return out;
    };
}

// Iterate inserting transformed basis rows until the span stabilizes.
void close_under(HowellBasis& basis, const std::vector<Transform>& ts) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Row> snapshot = basis.rows();
        for (const auto& r : snapshot)
            for (const auto& t : ts)
                changed |= basis.insert(t(r));
    }
}

std::vector<Transform> side_transforms(const RingAmbient& amb, const std::vector<int>& gens,
                                       Sides sides) {
    std::vector<Transform> ts;
    ts.push_back(ring_lzeta(amb));
    bool has_flags = false;
    for (int id : amb.ids)
        if (amb.Q->phi(id))
            has_flags = true;
    if (sides != Sides::Left) {
        for (int g : gens) {
            ts.push_back(ring_rmul(amb, g));
            ts.push_back(ring_rmul(amb, amb.Q->inv(g)));
        }
        if (has_flags)
            ts.push_back(ring_rzeta(amb));
    }
    if (sides != Sides::Right) {
        for (int g : gens) {
            ts.push_back(ring_lmul(amb, g));
            ts.push_back(ring_lmul(amb, amb.Q->inv(g)));
        }
    }
    return ts;
}

} // namespace

IdealContext::IdealContext(QuotientPtr q, int nbits) : q_(std::move(q)), nbits_(nbits) {
    if (!variant_projective(q_->variant()))
        throw variant_mismatch("IdealContext: expects a projective quotient variant");
    ring_ = RingAmbient(q_, "NormOne", nbits_);
    big_gens_ = q_->find_generators(q_->subgroup_image("NormOne"));
    sub_gens_ = q_->find_generators(q_->subgroup_image("NormOne0"));
}

IdealModel IdealContext::span(const std::vector<RingElt>& gens, Sides sides) const {
    IdealModel m(ring_);
    for (const auto& g : gens)
        m.basis.insert(ring_.to_row(g));
    close_under(m.basis, side_transforms(ring_, big_gens_, sides));
    m.basis.canonicalize();
    return m;
}

namespace {

// Augmentation-ideal basis of a subgroup image, inside an ambient: rows
// [s] - [e] together with their zeta multiples (closure adds those).
void insert_aug_rows(HowellBasis& basis, const RingAmbient& amb, const IdSet& sub, int prec) {
    RingElt e = RingElt::unit(amb.Q, prec);
    for (int s : sub.ids) {
        if (s == amb.Q->identity())
            continue;
        basis.insert(amb.to_row(RingElt::group(amb.Q, s, prec) - e));
    }
}

// span{ b ([g]-e) : b in basis } for g over the listed generators; the
// basis must already be closed under right multiplication by the subgroup.
HowellBasis aug_product_right(const HowellBasis& basis, const RingAmbient& amb,
                              const std::vector<int>& gens) {
    HowellBasis out(amb.dim(), amb.nbits);
    uint32_t mask = (1u << amb.nbits) - 1;
    for (int g : gens) {
        auto t = ring_rmul(amb, g);
        for (const auto& b : basis.rows()) {
            Row r = t(b);
            for (size_t i = 0; i < r.size(); ++i)
                r[i] = (r[i] - b[i]) & mask;
            out.insert(std::move(r));
        }
    }
    std::vector<Transform> ts = {ring_lzeta(amb)};
    for (int g : gens) {
        ts.push_back(ring_rmul(amb, g));
        ts.push_back(ring_rmul(amb, amb.Q->inv(g)));
    }
    close_under(out, ts);
    return out;
}

HowellBasis aug_product_left(const HowellBasis& basis, const RingAmbient& amb,
                             const std::vector<int>& gens) {
    HowellBasis out(amb.dim(), amb.nbits);
    uint32_t mask = (1u << amb.nbits) - 1;
    for (int g : gens) {
        auto t = ring_lmul(amb, g);
        for (const auto& b : basis.rows()) {
            Row r = t(b);
            for (size_t i = 0; i < r.size(); ++i)
                r[i] = (r[i] - b[i]) & mask;
            out.insert(std::move(r));
        }
    }
    std::vector<Transform> ts = {ring_lzeta(amb)};
    for (int g : gens) {
        ts.push_back(ring_lmul(amb, g));
        ts.push_back(ring_lmul(amb, amb.Q->inv(g)));
    }
    close_under(out, ts);
    return out;
}

HowellBasis one_sided_closure(HowellBasis basis, const RingAmbient& amb,
                              const std::vector<int>& gens, bool left) {
    std::vector<Transform> ts = {ring_lzeta(amb)};
    for (int g : gens) {
        ts.push_back(left ? ring_lmul(amb, g) : ring_rmul(amb, g));
        ts.push_back(left ? ring_lmul(amb, amb.Q->inv(g)) : ring_rmul(amb, amb.Q->inv(g)));
    }
    close_under(basis, ts);
    return basis;
}

// Pairwise products of two row families, as ring elements.
HowellBasis pairwise_product(const HowellBasis& a, const HowellBasis& b,
                             const RingAmbient& amb, int prec) {
    HowellBasis out(amb.dim(), amb.nbits);
    for (const auto& ra : a.rows()) {
        RingElt xa = amb.from_row(ra, prec);
        for (const auto& rb : b.rows())
            out.insert(amb.to_row(xa * amb.from_row(rb, prec)));
    }
    std::vector<Transform> ts = {ring_lzeta(amb)};
    close_under(out, ts);
    return out;
}

void insert_all(HowellBasis& dst, const HowellBasis& src) {
    for (const auto& r : src.rows())
        dst.insert(r);
}

void insert_scaled(HowellBasis& dst, const HowellBasis& src, uint32_t factor, uint32_t mask) {
    for (auto r : src.rows()) {
        for (auto& x : r)
            x = (x * factor) & mask;
        dst.insert(std::move(r));
    }
}

} // namespace

IdealModel IdealContext::compute(const std::string& name) const {
    int prec = nbits_;
    uint32_t mask = (1u << nbits_) - 1;
    RingElt two = RingElt::scalar(q_, WittApprox::from_int(2, prec));
    RingElt four = RingElt::scalar(q_, WittApprox::from_int(4, prec));
    RingElt eight = RingElt::scalar(q_, WittApprox::from_int(8, prec));

    if (name.rfind("Iaug:", 0) == 0) {
        IdealModel m(ring_);
        insert_aug_rows(m.basis, ring_, q_->subgroup_image(name.substr(5)), prec);
        close_under(m.basis, side_transforms(ring_, big_gens_, Sides::TwoSided));
        m.basis.canonicalize();
        return m;
    }

    // the augmentation ideal of the K1-subring, computed in its own ambient
    RingAmbient k_amb(q_, "K1", nbits_);
    HowellBasis p1(k_amb.dim(), k_amb.nbits);
    insert_aug_rows(p1, k_amb, q_->subgroup_image("K1"), prec);
    close_under(p1, {ring_lzeta(k_amb)});

    auto embed = [&](const HowellBasis& small, const RingAmbient& from) {
        HowellBasis out(ring_.dim(), nbits_);
        for (const auto& r : small.rows())
            out.insert(ring_.to_row(from.from_row(r, prec)));
        return out;
    };

    if (name == "I4K") {
        // (4, IPK1)
        IdealModel m(ring_);
        m.basis.insert(ring_.to_row(four));
        insert_all(m.basis, embed(p1, k_amb));
        close_under(m.basis, side_transforms(ring_, big_gens_, Sides::TwoSided));
        m.basis.canonicalize();
        return m;
    }

    if (name == "J") {
        // (2, IK1 . IS1, IS1 . IK1)
        HowellBasis p1_big = embed(p1, k_amb);
        HowellBasis p1_r = one_sided_closure(p1_big, ring_, sub_gens_, false);
        HowellBasis p1_l = one_sided_closure(p1_big, ring_, sub_gens_, true);
        IdealModel m(ring_);
        m.basis.insert(ring_.to_row(two));
        insert_all(m.basis, aug_product_right(p1_r, ring_, sub_gens_));
        insert_all(m.basis, aug_product_left(p1_l, ring_, sub_gens_));
        close_under(m.basis, side_transforms(ring_, big_gens_, Sides::TwoSided));
        m.basis.canonicalize();
        return m;
    }

    if (name == "I") {
        // (4, 2(IS1)^2, 2 IK1, (IK1)^2, IK1 (IS1)^2, (IS1)^2 IK1)
        HowellBasis p2 = pairwise_product(p1, p1, k_amb, prec);
        HowellBasis p1_big = embed(p1, k_amb);
        HowellBasis is1(ring_.dim(), nbits_);
        insert_aug_rows(is1, ring_, q_->subgroup_image("NormOne0"), prec);
        close_under(is1, {ring_lzeta(ring_)});
        HowellBasis q2 = aug_product_right(is1, ring_, sub_gens_);
        HowellBasis p1_r = one_sided_closure(p1_big, ring_, sub_gens_, false);
        HowellBasis p1q2 =
            aug_product_right(aug_product_right(p1_r, ring_, sub_gens_), ring_, sub_gens_);
        HowellBasis p1_l = one_sided_closure(p1_big, ring_, sub_gens_, true);
        HowellBasis q2p1 =
            aug_product_left(aug_product_left(p1_l, ring_, sub_gens_), ring_, sub_gens_);

        IdealModel m(ring_);
        m.basis.insert(ring_.to_row(four));
        insert_scaled(m.basis, q2, 2, mask);
        insert_scaled(m.basis, embed(p1, k_amb), 2, mask);
        insert_all(m.basis, embed(p2, k_amb));
        insert_all(m.basis, p1q2);
        insert_all(m.basis, q2p1);
        close_under(m.basis, side_transforms(ring_, big_gens_, Sides::TwoSided));
        m.basis.canonicalize();
        return m;
    }

    if (name == "Itheta") {
        // ((IPK1)^7, 2(IPK1)^3, 4 IPK1, 8)
        HowellBasis p2 = pairwise_product(p1, p1, k_amb, prec);
        HowellBasis p3 = pairwise_product(p2, p1, k_amb, prec);
        HowellBasis p6 = pairwise_product(p3, p3, k_amb, prec);
        HowellBasis p7 = pairwise_product(p6, p1, k_amb, prec);
        IdealModel m(ring_);
        m.basis.insert(ring_.to_row(eight));
        insert_scaled(m.basis, embed(p1, k_amb), 4, mask);
        insert_scaled(m.basis, embed(p3, k_amb), 2, mask);
        insert_all(m.basis, embed(p7, k_amb));
        close_under(m.basis, side_transforms(ring_, big_gens_, Sides::TwoSided));
        m.basis.canonicalize();
        return m;
    }

    throw unknown_name("IdealContext::standard: unknown ideal '" + name + "'");
}

const IdealModel& IdealContext::standard(const std::string& name) const {
    auto it = cache_.find(name);
    if (it != cache_.end())
        return it->second;
    return cache_.emplace(name, compute(name)).first->second;
}

ModuleModel IdealContext::module_image(const IdealModel& ideal, const CosetSpacePtr& s) const {
    ModuleModel m(ModuleAmbient(s, nbits_));
    ModuleElt base = ModuleElt::base_elt(s, nbits_);
    for (const auto& r : ideal.basis.rows())
        m.basis.insert(m.ambient.to_row(act(ideal.ambient.from_row(r, nbits_), base)));
    std::vector<Transform> ts = {module_lzeta(m.ambient)};
    for (int g : big_gens_) {
        ts.push_back(module_act(m.ambient, g));
        ts.push_back(module_act(m.ambient, q_->inv(g)));
    }
    close_under(m.basis, ts);
    m.basis.canonicalize();
    return m;
}

ModuleModel IdealContext::module_span(const std::vector<ModuleElt>& gens) const {
    if (gens.empty())
        throw std::invalid_argument("module_span: no generators");
    ModuleModel m(ModuleAmbient(gens[0].space(), nbits_));
    for (const auto& g : gens)
        m.basis.insert(m.ambient.to_row(g));
    std::vector<Transform> ts = {module_lzeta(m.ambient)};
    for (int g : big_gens_) {
        ts.push_back(module_act(m.ambient, g));
        ts.push_back(module_act(m.ambient, q_->inv(g)));
    }
    close_under(m.basis, ts);
    m.basis.canonicalize();
    return m;
}

ModuleModel IdealContext::augmentation_kernel(const CosetSpacePtr& s) const {
    ModuleModel m(ModuleAmbient(s, nbits_));
    ModuleElt base = ModuleElt::base_elt(s, nbits_);
    for (int c = 0; c < s->num_cosets(); ++c) {
        if (c == s->base())
            continue;
        ModuleElt d(s, nbits_);
        d.add_term(c, WittApprox::one(nbits_));
        m.basis.insert(m.ambient.to_row(d - base));
    }
    close_under(m.basis, {module_lzeta(m.ambient)});
    m.basis.canonicalize();
    return m;
}

} // namespace morava
