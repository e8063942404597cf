#pragma once

#include "morava/ideals.hpp"

namespace morava {

struct CheckReport {
    std::string check_id;
    std::string status; // pass | fail | inconclusive
    FGL fgl = FGL::Honda;
    int depth = 0;
    int nbits = 0;
    std::string witness; // offending element on fail
    std::string detail;  // one-line description of what was verified

    bool passed() const { return status == "pass"; }
};

/// Shared state for the verification checks at one (fgl, depth, precision):
/// the projective quotients, the coset modules based at the identity, and
/// the ideal models.
class ResolutionContext {
  public:
    ResolutionContext(FGL fgl, int depth, int nbits);

    FGL fgl() const { return fgl_; }
    int depth() const { return depth_; }
    int nbits() const { return nbits_; }

    const QuotientPtr& plain() const { return qs_; }  // PS2 variant
    const QuotientPtr& galois() const { return qg_; } // PG2 variant

    const IdealContext& plain_ideals() const { return *ideals_s_; }
    const IdealContext& galois_ideals() const { return *ideals_g_; }

    /// Coset modules: head (cosets of the G48-image) and middle (G12-image).
    const CosetSpacePtr& head_plain() const { return d0_s_; }
    const CosetSpacePtr& middle_plain() const { return d1_s_; }
    const CosetSpacePtr& head_galois() const { return d0_g_; }
    const CosetSpacePtr& middle_galois() const { return d1_g_; }

    /// Ring element by standard name over either quotient.
    RingElt grp(const QuotientPtr& q, const std::string& name) const;

    RingElt delta1(const QuotientPtr& q) const;     // e - alpha
    RingElt delta3(const QuotientPtr& q) const;     // pi (e+i+j+k)(e-alpha^{-1}) pi^{-1}
    RingElt delta1_phi() const;                     // tr_sigma(delta1)
    RingElt delta3_phi() const;                     // pi (e+i+j+k) tr_sigma(e-alpha^{-1}) pi^{-1}
    RingElt theta(const QuotientPtr& q) const;      // explicit approximation
    RingElt theta_phi() const;                      // tr_sigma(theta)
    RingElt delta2(const QuotientPtr& q) const;     // explicit approximation
    RingElt delta2_phi() const;                     // tr_sigma(delta2)

    /// The closed form of the dualized head map applied to the middle
    /// generator: (e+i+j+k) tr_sigma(e - alpha^{-1}) e_1.
    ModuleElt dual_partial1() const;

  private:
    FGL fgl_;
    int depth_, nbits_;
    QuotientPtr qs_, qg_;
    std::unique_ptr<IdealContext> ideals_s_, ideals_g_;
    CosetSpacePtr d0_s_, d1_s_, d0_g_, d1_g_;
};

/// Run one named check. Ids: C1 constant identities; C2 finite-subgroup
/// battery; C3 commutation of the averaged head element with the G12-image;
/// C4 augmentation annihilates the head map; C5 head-kernel span equality;
/// C6 theta conditions; C7 composite vanishing and ideal inclusions;
/// C8 depth of delta1 + its twist; C9 dual-map identity; C10
/// well-definedness of the head map.
CheckReport run_check(const std::string& check_id, FGL fgl, int depth, int nbits);

enum class SuiteLevel { Fast, Full };

/// fast = C1-C4, C10 at (M=4, N=3); full = all checks at (M=5, N=4) plus the
/// ideal-free checks at (M=6, N=3). The MORAVA_MAX_DEPTH environment
/// variable lowers the depth cap.
std::vector<CheckReport> run_suite(SuiteLevel level, FGL fgl);

} // namespace morava
