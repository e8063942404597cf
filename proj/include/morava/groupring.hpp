#pragma once

#include <functional>
#include <map>
#include <memory>

#include "morava/quotients.hpp"

namespace morava {

/// Element of the Galois-twisted group ring of a finite quotient, with
/// sparse W/2^N coefficients. Scalars move past group elements through the
/// Galois grading: (w1 g1)(w2 g2) = (w1 w2^{g1}) g1g2.
class RingElt {
  public:
    RingElt() : prec_(1) {}
    RingElt(QuotientPtr q, int prec) : q_(std::move(q)), prec_(prec) {}

    static RingElt group(QuotientPtr q, int id, int prec);
    static RingElt scalar(QuotientPtr q, const WittApprox& w);
    static RingElt unit(QuotientPtr q, int prec);

    const QuotientPtr& Q() const { return q_; }
    int prec() const { return prec_; }
    const std::map<int, WittApprox>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    WittApprox coeff(int id) const;
    void add_term(int id, const WittApprox& w);

    RingElt operator+(const RingElt& o) const;
    RingElt operator-(const RingElt& o) const;
    RingElt operator-() const;
    RingElt operator*(const RingElt& o) const;
    bool operator==(const RingElt& o) const;
    bool operator!=(const RingElt& o) const { return !(*this == o); }

    RingElt scaled(const WittApprox& w) const; // left multiplication by w
    RingElt conj_by(int gid) const;            // g x g^{-1}

    std::string str() const;

  private:
    void check_same(const RingElt& o) const;
    QuotientPtr q_;
    int prec_;
    std::map<int, WittApprox> c_; // id -> coefficient; absent means zero
};

/// Frobenius twist: conjugation by the canonical Galois element, acting by
/// Frobenius on coefficients and by coordinatewise Frobenius on group ids.
RingElt sigma_twist(const RingElt& x);

/// tr_sigma(x) = -(zeta x + zeta^sigma x^sigma). Fixed points of sigma_twist
/// are fixed by tr_sigma; tr_sigma is idempotent.
RingElt tr_sigma(const RingElt& x);

/// tr_C3(x) = x + w x w^{-1} + w^2 x w^{-2} for w the third root of unity.
RingElt tr_c3(const RingElt& x);

/// Coefficient sum.
WittApprox augment(const RingElt& x);

/// The antipode-style flip sum w_g g -> w_g^{g} g^{-1}; satisfies
/// flip(xy) = flip(y) flip(x).
RingElt flip(const RingElt& x);

/// Left cosets of a finite subgroup image inside an ambient subgroup of a
/// quotient, with the left translation action. Representatives are minimal
/// ids, so coset indexing is deterministic.
class CosetSpace {
  public:
    CosetSpace(QuotientPtr q, const std::string& subgroup_name,
               const std::string& ambient_name);

    const QuotientPtr& Q() const { return q_; }
    const std::string& subgroup_name() const { return sub_name_; }
    const std::string& ambient_name() const { return amb_name_; }
    const IdSet& subgroup() const { return q_->subgroup_image(sub_name_); }
    const IdSet& ambient() const { return q_->subgroup_image(amb_name_); }

    int num_cosets() const { return int(reps_.size()); }
    int coset_of(int gid) const;
    int rep(int c) const { return reps_[c]; }
    int base() const { return base_; }
    /// Coset of g * rep(c); g must lie in the ambient subgroup.
    int act(int gid, int c) const;

  private:
    QuotientPtr q_;
    std::string sub_name_, amb_name_;
    std::vector<int> reps_;
    std::vector<int> coset_of_;
    int base_ = 0;
};

using CosetSpacePtr = std::shared_ptr<const CosetSpace>;

/// Element of the induced coset module W[[G/H]] with the twisted action
/// g (w [x]) = w^g [g x].
class ModuleElt {
  public:
    ModuleElt() : prec_(1) {}
    ModuleElt(CosetSpacePtr s, int prec) : s_(std::move(s)), prec_(prec) {}

    static ModuleElt base_elt(CosetSpacePtr s, int prec); // the generator e_p

    const CosetSpacePtr& space() const { return s_; }
    int prec() const { return prec_; }
    const std::map<int, WittApprox>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add_term(int coset, const WittApprox& w);
    ModuleElt operator+(const ModuleElt& o) const;
    ModuleElt operator-(const ModuleElt& o) const;
    bool operator==(const ModuleElt& o) const;
    bool operator!=(const ModuleElt& o) const { return !(*this == o); }

  private:
    CosetSpacePtr s_;
    int prec_;
    std::map<int, WittApprox> c_;
};

/// Twisted module action of a ring element.
ModuleElt act(const RingElt& x, const ModuleElt& v);
WittApprox augment(const ModuleElt& v);

/// A module element re-read as a ring element through the chosen coset
/// representatives.
RingElt ring_of(const ModuleElt& v, int prec);

/// Sum over the subgroup of a coset space, as a ring element.
RingElt subgroup_sum(const CosetSpace& s, int prec);

/// The dual-basis functional of a coset: [c]^*(v) = sum_g w_g g (sum_H h) c^{-1},
/// realized as right multiplication by a fixed ring element.
class DualFunctional {
  public:
    DualFunctional(CosetSpacePtr s, int coset, int prec);
    RingElt operator()(const ModuleElt& v) const;
    /// The left module action on functionals: (y f)(v) = f(v) flip(y).
    DualFunctional acted_by(const RingElt& y) const;

  private:
    CosetSpacePtr s_;
    RingElt right_factor_;
};

} // namespace morava
