#pragma once

#include <string>

#include "morava/witt.hpp"

namespace morava {

/// Formal group law tag. The endomorphism ring relations are
/// xi w = sigma(w) xi and xi^2 = 2 u, with u = +1 (Honda) or -1 (elliptic).
enum class FGL { Honda, Elliptic };

inline int fgl_unit(FGL fgl) { return fgl == FGL::Honda ? 1 : -1; }
inline const char* fgl_name(FGL fgl) { return fgl == FGL::Honda ? "honda" : "elliptic"; }

/// An element a + b*xi of the endomorphism ring of the chosen formal group
/// law, both coordinates at a shared precision.
class EndoElt {
  public:
    EndoElt() : fgl_(FGL::Honda) {}
    EndoElt(WittApprox a, WittApprox b, FGL fgl);

    static EndoElt from_witt(const WittApprox& a, FGL fgl) {
        return EndoElt(a, WittApprox::zero(a.prec()), fgl);
    }
    static EndoElt one(FGL fgl, int prec) {
        return from_witt(WittApprox::one(prec), fgl);
    }
    static EndoElt xi(FGL fgl, int prec) {
        return EndoElt(WittApprox::zero(prec), WittApprox::one(prec), fgl);
    }

    const WittApprox& a() const { return a_; }
    const WittApprox& b() const { return b_; }
    FGL fgl() const { return fgl_; }
    int prec() const { return a_.prec(); }

    bool operator==(const EndoElt& o) const {
        return fgl_ == o.fgl_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const EndoElt& o) const { return !(*this == o); }

    EndoElt operator+(const EndoElt& o) const;
    EndoElt operator-(const EndoElt& o) const;
    EndoElt operator-() const;
    EndoElt operator*(const EndoElt& o) const;

    /// det(a + b xi) = a sigma(a) - 2u b sigma(b); always a rational residue.
    WittApprox det() const;

    bool is_unit() const { return a_.is_unit(); }

    /// x^{-1} = det(x)^{-1} (sigma(a) - b xi).
    EndoElt inv() const;

    /// Coefficientwise Frobenius; this is conjugation by xi.
    EndoElt frobenius() const;

    EndoElt reduced(int new_prec) const {
        return EndoElt(a_.reduced(new_prec), b_.reduced(new_prec), fgl_);
    }

    std::string str() const;

  private:
    void check_same(const EndoElt& o) const;

    WittApprox a_, b_;
    FGL fgl_;
};

/// Largest i with x ≡ 1 mod xi^i: min(2 val2(a-1), 2 val2(b) + 1), capped at
/// 2N-1. exact=false when a residue saturates, so the level is a lower bound.
struct FiltLevel {
    int level;
    bool exact;
};
FiltLevel filtration_level(const EndoElt& x);

enum class StdEndo { I, J, K, Omega, Alpha, Pi, Eps, AlphaI, AlphaJ, AlphaK };

/// The standard elements: i = pi^{-1}(1 - eps xi), j = pi^{-1}(1 - omega^2 eps xi),
/// k = pi^{-1}(1 - omega eps xi) with eps = alpha (Honda) or 1 (elliptic);
/// alpha_tau = tau alpha tau^{-1} alpha^{-1}.
EndoElt std_endo(StdEndo name, FGL fgl, int prec);
EndoElt std_endo(const std::string& name, FGL fgl, int prec);

/// The isomorphism between the two unit groups: a + b xi_E -> a + b alpha xi_H.
EndoElt iso_elliptic_to_honda(const EndoElt& x);

} // namespace morava
