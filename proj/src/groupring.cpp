#include "morava/groupring.hpp"

#include <sstream>

namespace morava {

RingElt RingElt::group(QuotientPtr q, int id, int prec) {
    RingElt x(std::move(q), prec);
    x.add_term(id, WittApprox::one(prec));
    return x;
}

RingElt RingElt::scalar(QuotientPtr q, const WittApprox& w) {
    RingElt x(q, w.prec());
    x.add_term(q->identity(), w);
    return x;
}

RingElt RingElt::unit(QuotientPtr q, int prec) {
    return group(q, q->identity(), prec);
}

WittApprox RingElt::coeff(int id) const {
    auto it = c_.find(id);
    return it == c_.end() ? WittApprox::zero(prec_) : it->second;
}

void RingElt::add_term(int id, const WittApprox& w) {
    if (w.prec() != prec_)
        throw precision_mismatch("RingElt::add_term: coefficient precision mismatch");
    auto it = c_.find(id);
    if (it == c_.end()) {
        if (!w.is_zero())
            c_.emplace(id, w);
        return;
    }
    it->second = it->second + w;
    if (it->second.is_zero())
        c_.erase(it);
}

void RingElt::check_same(const RingElt& o) const {
    if (q_ != o.q_)
        throw variant_mismatch("RingElt: different quotient groups");
    if (prec_ != o.prec_)
        throw precision_mismatch("RingElt: coefficient precision mismatch");
}

RingElt RingElt::operator+(const RingElt& o) const {
    check_same(o);
    RingElt r = *this;
    for (const auto& [id, w] : o.c_)
        r.add_term(id, w);
    return r;
}

RingElt RingElt::operator-(const RingElt& o) const {
    check_same(o);
    RingElt r = *this;
    for (const auto& [id, w] : o.c_)
        r.add_term(id, -w);
    return r;
}

RingElt RingElt::operator-() const {
    RingElt r(q_, prec_);
    for (const auto& [id, w] : c_)
        r.c_.emplace(id, -w);
    return r;
}

RingElt RingElt::operator*(const RingElt& o) const {
    check_same(o);
    RingElt r(q_, prec_);
    for (const auto& [g1, w1] : c_) {
        const std::vector<int>& row = q_->lmul_row(g1);
        bool twist = q_->phi(g1) != 0;
        for (const auto& [g2, w2] : o.c_)
            r.add_term(row[g2], w1 * (twist ? w2.frobenius() : w2));
    }
    return r;
}

bool RingElt::operator==(const RingElt& o) const {
    return q_ == o.q_ && prec_ == o.prec_ && c_ == o.c_;
}

RingElt RingElt::scaled(const WittApprox& w) const {
    if (w.prec() != prec_)
        throw precision_mismatch("RingElt::scaled: precision mismatch");
    RingElt r(q_, prec_);
    for (const auto& [id, c] : c_) {
        WittApprox v = w * c;
        if (!v.is_zero())
            r.c_.emplace(id, v);
    }
    return r;
}

RingElt RingElt::conj_by(int gid) const {
    return RingElt::group(q_, gid, prec_) * (*this) *
           RingElt::group(q_, q_->inv(gid), prec_);
}

std::string RingElt::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, w] : c_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << w.str() << ")[" << q_->form(id).str() << "]";
    }
    if (first)
        os << "0";
    return os.str();
}

RingElt sigma_twist(const RingElt& x) {
    RingElt r(x.Q(), x.prec());
    for (const auto& [id, w] : x.coeffs())
        r.add_term(x.Q()->sigma_conj(id), w.frobenius());
    return r;
}

RingElt tr_sigma(const RingElt& x) {
    WittApprox zeta = WittApprox::zeta(x.prec());
    return -(x.scaled(zeta) + sigma_twist(x).scaled(zeta.frobenius()));
}

RingElt tr_c3(const RingElt& x) {
    int om = x.Q()->std_id("omega");
    RingElt c1 = x.conj_by(om);
    return x + c1 + c1.conj_by(om);
}

WittApprox augment(const RingElt& x) {
    WittApprox s = WittApprox::zero(x.prec());
    for (const auto& [id, w] : x.coeffs())
        s = s + w;
    return s;
}

RingElt flip(const RingElt& x) {
    RingElt r(x.Q(), x.prec());
    for (const auto& [id, w] : x.coeffs()) {
        bool twist = x.Q()->phi(id) != 0;
        r.add_term(x.Q()->inv(id), twist ? w.frobenius() : w);
    }
    return r;
}

CosetSpace::CosetSpace(QuotientPtr q, const std::string& subgroup_name,
                       const std::string& ambient_name)
    : q_(std::move(q)), sub_name_(subgroup_name), amb_name_(ambient_name) {
    const IdSet& H = q_->subgroup_image(sub_name_);
    const IdSet& A = q_->subgroup_image(amb_name_);
    for (int h : H.ids)
        if (!A.contains(h))
            throw not_a_subgroup("CosetSpace: subgroup not inside ambient");
    coset_of_.assign(q_->size(), -1);
    for (int a : A.ids) {
        if (coset_of_[a] >= 0)
            continue;
        int c = int(reps_.size());
        reps_.push_back(a);
        for (int h : H.ids)
            coset_of_[q_->rmul_row(h)[a]] = c;
    }
    base_ = coset_of_[q_->identity()];
}

int CosetSpace::coset_of(int gid) const {
    int c = coset_of_[gid];
    if (c < 0)
        throw std::invalid_argument("CosetSpace::coset_of: id outside the ambient subgroup");
    return c;
}

int CosetSpace::act(int gid, int c) const {
    return coset_of(q_->lmul_row(gid)[reps_[c]]);
}

ModuleElt ModuleElt::base_elt(CosetSpacePtr s, int prec) {
    ModuleElt v(s, prec);
    v.add_term(s->base(), WittApprox::one(prec));
    return v;
}

void ModuleElt::add_term(int coset, const WittApprox& w) {
    if (w.prec() != prec_)
        throw precision_mismatch("ModuleElt::add_term: coefficient precision mismatch");
    auto it = c_.find(coset);
    if (it == c_.end()) {
        if (!w.is_zero())
            c_.emplace(coset, w);
        return;
    }
    it->second = it->second + w;
    if (it->second.is_zero())
        c_.erase(it);
}

ModuleElt ModuleElt::operator+(const ModuleElt& o) const {
    if (s_ != o.s_ || prec_ != o.prec_)
        throw variant_mismatch("ModuleElt: mixed spaces or precisions");
    ModuleElt r = *this;
    for (const auto& [c, w] : o.c_)
        r.add_term(c, w);
    return r;
}

ModuleElt ModuleElt::operator-(const ModuleElt& o) const {
    if (s_ != o.s_ || prec_ != o.prec_)
        throw variant_mismatch("ModuleElt: mixed spaces or precisions");
    ModuleElt r = *this;
    for (const auto& [c, w] : o.c_)
        r.add_term(c, -w);
    return r;
}

bool ModuleElt::operator==(const ModuleElt& o) const {
    return s_ == o.s_ && prec_ == o.prec_ && c_ == o.c_;
}

ModuleElt act(const RingElt& x, const ModuleElt& v) {
    if (x.Q() != v.space()->Q())
        throw variant_mismatch("act: ring and module over different quotients");
    if (x.prec() != v.prec())
        throw precision_mismatch("act: precision mismatch");
    ModuleElt r(v.space(), v.prec());
    for (const auto& [g, wg] : x.coeffs()) {
        bool twist = x.Q()->phi(g) != 0;
        for (const auto& [c, wv] : v.coeffs())
            r.add_term(v.space()->act(g, c), wg * (twist ? wv.frobenius() : wv));
    }
    return r;
}

WittApprox augment(const ModuleElt& v) {
    WittApprox s = WittApprox::zero(v.prec());
    for (const auto& [c, w] : v.coeffs())
        s = s + w;
    return s;
}

RingElt ring_of(const ModuleElt& v, int prec) {
    RingElt r(v.space()->Q(), prec);
    for (const auto& [c, w] : v.coeffs())
        r.add_term(v.space()->rep(c), w);
    return r;
}

RingElt subgroup_sum(const CosetSpace& s, int prec) {
    RingElt r(s.Q(), prec);
    for (int h : s.subgroup().ids)
        r.add_term(h, WittApprox::one(prec));
    return r;
}

DualFunctional::DualFunctional(CosetSpacePtr s, int coset, int prec) : s_(std::move(s)) {
    right_factor_ = subgroup_sum(*s_, prec) *
                    RingElt::group(s_->Q(), s_->Q()->inv(s_->rep(coset)), prec);
}

RingElt DualFunctional::operator()(const ModuleElt& v) const {
    if (v.space()->Q() != s_->Q())
        throw variant_mismatch("DualFunctional: module over a different quotient");
    return ring_of(v, right_factor_.prec()) * right_factor_;
}

DualFunctional DualFunctional::acted_by(const RingElt& y) const {
    DualFunctional f = *this;
    f.right_factor_ = right_factor_ * flip(y);
    return f;
}

} // namespace morava
