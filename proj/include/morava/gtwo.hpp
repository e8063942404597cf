#pragma once

#include <optional>
#include <string>

#include "morava/endo.hpp"

namespace morava {

/// An element u * xi^e of D2^x / <xi^2>, stored as a unit of the endomorphism
/// ring together with the Galois flag e. Multiplication is the semidirect
/// rule (u1, e1)(u2, e2) = (u1 sigma^{e1}(u2), e1 xor e2), since conjugation
/// by xi acts by Frobenius on coordinates and xi^2 is killed in the quotient.
class GElt {
  public:
    GElt() : flag_(0) {}
    GElt(EndoElt u, int flag);

    static GElt identity(FGL fgl, int prec) { return GElt(EndoElt::one(fgl, prec), 0); }
    static GElt from_unit(const EndoElt& u) { return GElt(u, 0); }

    const EndoElt& unit() const { return u_; }
    int flag() const { return flag_; }
    FGL fgl() const { return u_.fgl(); }
    int prec() const { return u_.prec(); }

    bool operator==(const GElt& o) const { return flag_ == o.flag_ && u_ == o.u_; }
    bool operator!=(const GElt& o) const { return !(*this == o); }

    GElt operator*(const GElt& o) const;
    GElt inv() const;
    GElt operator-() const { return GElt(-u_, flag_); }

    /// Whether det(u) ≡ ±1 at the carried precision.
    bool is_norm_one() const;

    GElt conj_by(const GElt& h) const { return h * (*this) * h.inv(); }

    GElt reduced(int new_prec) const { return GElt(u_.reduced(new_prec), flag_); }

    std::string str() const;

  private:
    EndoElt u_;
    int flag_;
};

/// Factor an endomorphism of odd xi-valuation as u * xi and return (u, 1).
/// Requires a ≡ 0 mod 2 and b a unit, i.e. val2(det) = 1 exactly.
GElt g_from_odd(const EndoElt& x);

/// Equality up to the central -1.
bool proj_equal(const GElt& x, const GElt& y);

/// Least n <= cap with x^n = identity at the carried precision.
std::optional<int> g_order(const GElt& x, int cap = 96);

enum class StdG { Bracket1PlusI, BracketJMinusK, Sigma, Pi0 };

/// [1+i], [j-k], the canonical Galois element (1,1), and (pi, 0).
GElt std_g(StdG name, FGL fgl, int prec);
GElt std_g(const std::string& name, FGL fgl, int prec);

} // namespace morava
