#include "morava/witt.hpp"

#include <sstream>

namespace morava {

WittApprox::WittApprox(uint64_t a0, uint64_t a1, int prec) : prec_(prec) {
    if (prec < 1 || prec > 64)
        throw insufficient_precision("WittApprox: precision must be in [1, 64]");
    a0_ = a0 & mask();
    a1_ = a1 & mask();
}

WittApprox WittApprox::from_int(int64_t n, int prec) {
    return WittApprox(static_cast<uint64_t>(n), 0, prec);
}

WittApprox WittApprox::operator+(const WittApprox& o) const {
    check_same(o);
    return WittApprox(a0_ + o.a0_, a1_ + o.a1_, prec_);
}

WittApprox WittApprox::operator-(const WittApprox& o) const {
    check_same(o);
    return WittApprox(a0_ - o.a0_, a1_ - o.a1_, prec_);
}

WittApprox WittApprox::operator-() const {
    return WittApprox(0 - a0_, 0 - a1_, prec_);
}

WittApprox WittApprox::operator*(const WittApprox& o) const {
    check_same(o);
    // (a0 + a1 z)(b0 + b1 z), z^2 = -1 - z.
    uint64_t c0 = a0_ * o.a0_ - a1_ * o.a1_;
    uint64_t c1 = a0_ * o.a1_ + a1_ * o.a0_ - a1_ * o.a1_;
    return WittApprox(c0, c1, prec_);
}

uint64_t WittApprox::norm_residue() const {
    return (a0_ * a0_ - a0_ * a1_ + a1_ * a1_) & mask();
}

WittApprox WittApprox::frobenius() const {
    return WittApprox(a0_ - a1_, 0 - a1_, prec_);
}

uint64_t inv_odd(uint64_t a, int prec) {
    if ((a & 1) == 0)
        throw not_a_unit("inv_odd: even residue");
    uint64_t mask = WittApprox::mask_for(prec);
    a &= mask;
    uint64_t x = 1; // inverse mod 2
    for (int bits = 1; bits < prec; bits *= 2)
        x = (x * (2 - a * x)) & mask;
    return x & mask;
}

WittApprox WittApprox::inv() const {
    uint64_t n = norm_residue();
    if ((n & 1) == 0)
        throw not_a_unit("WittApprox::inv: norm is even");
    uint64_t ninv = inv_odd(n, prec_);
    WittApprox s = frobenius();
    return WittApprox(s.a0_ * ninv, s.a1_ * ninv, prec_);
}

WittApprox WittApprox::reduced(int new_prec) const {
    if (new_prec > prec_)
        throw precision_mismatch("WittApprox::reduced: cannot raise precision");
    return WittApprox(a0_, a1_, new_prec);
}

std::string WittApprox::str() const {
    std::ostringstream os;
    os << "0x" << std::hex << a0_;
    if (a1_ != 0)
        os << "+0x" << a1_ << "*z";
    os << std::dec << " mod 2^" << prec_;
    return os.str();
}

static int val2_residue(uint64_t r, int prec) {
    if (r == 0)
        return prec;
    int v = 0;
    while ((r & 1) == 0 && v < prec) {
        r >>= 1;
        ++v;
    }
    return v;
}

Val2 val2(const WittApprox& x) {
    int v0 = val2_residue(x.a0(), x.prec());
    int v1 = val2_residue(x.a1(), x.prec());
    int v = v0 < v1 ? v0 : v1;
    return Val2{v, !x.is_zero()};
}

WittApprox hensel_sqrt(int64_t t, uint64_t branch, int prec) {
    if ((uint64_t(t) & 7) != 1)
        throw no_square_root("hensel_sqrt: t is not 1 mod 8");
    // every odd square is 1 mod 8, so the branch only selects a root class if
    // it matches mod 16 as well
    if ((branch & 1) == 0 || ((branch * branch) & 15) != (uint64_t(t) & 15))
        throw bad_branch("hensel_sqrt: branch does not select a root class of t");

    // t is the canonical 2-adic lift of the input (sign extension gives its
    // residue at every precision), so the result is the reduction mod 2^prec
    // of the one 2-adic root congruent to branch mod 8. Newton loses a bit
    // per step to the division by 2, hence the guard bits.
    int work = prec + 8;
    using u128 = unsigned __int128;
    u128 wmask = (u128(1) << work) - 1;
    u128 tt = u128(__int128(t)) & wmask;

    auto inv128 = [&](u128 a) {
        u128 x = 1;
        for (int bits = 1; bits < work; bits *= 2)
            x = (x * (2 - a * x)) & wmask;
        return x & wmask;
    };
    u128 stop = (u128(1) << (prec + 1)) - 1;
    u128 s = branch & 7;
    // s <- s - (s^2 - t) * h with h an approximate inverse of 2s, realized as
    // a shift followed by multiplication with inv(s); quadratic convergence.
    for (int iter = 0; iter < 16 && ((s * s - tt) & stop) != 0; ++iter) {
        u128 f = (s * s - tt) & wmask;
        u128 d = ((f >> 1) * inv128(s)) & wmask;
        s = (s - d) & wmask;
    }
    uint64_t out = uint64_t(s) & WittApprox::mask_for(prec);
    return WittApprox(out, 0, prec);
}

WittApprox witt_constant(WittConstant name, int prec) {
    if (prec < 3)
        throw insufficient_precision("witt_constant: precision must be at least 3");
    switch (name) {
    case WittConstant::Zeta:
        return WittApprox::zeta(prec);
    case WittConstant::Pi:
        return WittApprox(1, 2, prec);
    case WittConstant::SqrtM7:
        return hensel_sqrt(-7, 5, prec);
    case WittConstant::Alpha: {
        WittApprox num(1, 0ull - 2, prec); // 1 - 2 zeta
        return num * witt_constant(WittConstant::SqrtM7, prec).inv();
    }
    }
    throw unknown_name("witt_constant: unknown constant");
}

WittApprox witt_constant(const std::string& name, int prec) {
    if (name == "zeta") return witt_constant(WittConstant::Zeta, prec);
    if (name == "pi") return witt_constant(WittConstant::Pi, prec);
    if (name == "sqrt_m7") return witt_constant(WittConstant::SqrtM7, prec);
    if (name == "alpha") return witt_constant(WittConstant::Alpha, prec);
    throw unknown_name("witt_constant: unknown constant '" + name + "'");
}

} // namespace morava
