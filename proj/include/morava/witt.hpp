#pragma once

#include <cstdint>
#include <string>

#include "morava/errors.hpp"

namespace morava {

/// An element of W(F4)/2^N, written a0 + a1*zeta with zeta^2 = -1 - zeta.
///
/// Residues are stored masked to N bits. All binary operations demand equal
/// precision and throw precision_mismatch otherwise; there is no implicit
/// truncation.
class WittApprox {
  public:
    WittApprox() : a0_(0), a1_(0), prec_(1) {}
    WittApprox(uint64_t a0, uint64_t a1, int prec);

    static WittApprox from_int(int64_t n, int prec);
    static WittApprox zero(int prec) { return WittApprox(0, 0, prec); }
    static WittApprox one(int prec) { return WittApprox(1, 0, prec); }
    static WittApprox zeta(int prec) { return WittApprox(0, 1, prec); }

    uint64_t a0() const { return a0_; }
    uint64_t a1() const { return a1_; }
    int prec() const { return prec_; }
    uint64_t mask() const { return mask_for(prec_); }

    bool operator==(const WittApprox& o) const {
        return a0_ == o.a0_ && a1_ == o.a1_ && prec_ == o.prec_;
    }
    bool operator!=(const WittApprox& o) const { return !(*this == o); }

    WittApprox operator+(const WittApprox& o) const;
    WittApprox operator-(const WittApprox& o) const;
    WittApprox operator-() const;
    WittApprox operator*(const WittApprox& o) const;

    bool is_zero() const { return a0_ == 0 && a1_ == 0; }
    bool is_unit() const { return (norm_residue() & 1) != 0; }

    /// a0^2 - a0*a1 + a1^2 mod 2^N; this is the rational residue of x*sigma(x).
    uint64_t norm_residue() const;

    /// Galois conjugate: zeta -> zeta^2, i.e. (a0, a1) -> (a0 - a1, -a1).
    WittApprox frobenius() const;

    /// Multiplicative inverse (norm must be odd), computed as sigma(x)/norm(x).
    WittApprox inv() const;

    /// Truncate to a lower precision (new_prec <= prec).
    WittApprox reduced(int new_prec) const;

    std::string str() const;

    static uint64_t mask_for(int prec) {
        return prec >= 64 ? ~0ull : ((1ull << prec) - 1);
    }

  private:
    void check_same(const WittApprox& o) const {
        if (prec_ != o.prec_)
            throw precision_mismatch("WittApprox: operands carry different precision");
    }

    uint64_t a0_, a1_;
    int prec_;
};

/// min(val2(a0), val2(a1)); capped at N for the zero residue.
struct Val2 {
    int v;
    bool exact; // false when the residue is zero, so v is only a lower bound
};
Val2 val2(const WittApprox& x);

/// Inverse of an odd residue mod 2^prec.
uint64_t inv_odd(uint64_t a, int prec);

/// The 2-adic square root of t with root ≡ branch mod 8, at precision prec.
/// t is taken as a 2-adic integer (sign-extended), since the root mod 2^N
/// depends on t mod 2^{N+1}. Requires t ≡ 1 mod 8 and branch^2 ≡ t mod 8.
WittApprox hensel_sqrt(int64_t t, uint64_t branch, int prec);

enum class WittConstant { Zeta, Pi, SqrtM7, Alpha };

/// Named constants: zeta, pi = 1+2*zeta, sqrt(-7) ≡ 5 mod 8, alpha = (1-2*zeta)/sqrt(-7).
WittApprox witt_constant(WittConstant name, int prec);
WittApprox witt_constant(const std::string& name, int prec);

} // namespace morava
