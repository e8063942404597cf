#include "morava/gtwo.hpp"

#include <sstream>

namespace morava {

GElt::GElt(EndoElt u, int flag) : u_(u), flag_(flag & 1) {
    if (!u_.is_unit())
        throw not_a_unit("GElt: unit part is not a unit");
}

GElt GElt::operator*(const GElt& o) const {
    EndoElt rhs = flag_ ? o.u_.frobenius() : o.u_;
    return GElt(u_ * rhs, flag_ ^ o.flag_);
}

GElt GElt::inv() const {
    EndoElt ui = u_.inv();
    return GElt(flag_ ? ui.frobenius() : ui, flag_);
}

bool GElt::is_norm_one() const {
    WittApprox d = u_.det();
    return d == WittApprox::one(prec()) || d == -WittApprox::one(prec());
}

std::string GElt::str() const {
    std::ostringstream os;
    os << u_.str();
    if (flag_) os << " . xi";
    return os.str();
}

GElt g_from_odd(const EndoElt& x) {
    Val2 va = val2(x.a());
    if (va.v < 1 || !x.b().is_unit())
        throw not_odd_valuation("g_from_odd: element does not have xi-valuation 1");
    // x = u xi with u = b + (a / 2u_Gamma) xi.
    int N = x.prec();
    uint64_t mask = WittApprox::mask_for(N);
    uint64_t c0 = (x.a().a0() >> 1) & mask;
    uint64_t c1 = (x.a().a1() >> 1) & mask;
    // halving a residue known mod 2^N determines the quotient mod 2^{N-1};
    // the top bit is resolved by the canonical lift (even residue, bit copy).
    WittApprox half(c0, c1, N);
    WittApprox u_inv = WittApprox::from_int(fgl_unit(x.fgl()), N);
    return GElt(EndoElt(x.b(), half * u_inv, x.fgl()), 1);
}

bool proj_equal(const GElt& x, const GElt& y) {
    return x == y || x == -y;
}

std::optional<int> g_order(const GElt& x, int cap) {
    if (cap < 1)
        throw cap_exceeded("g_order: cap must be positive");
    GElt id = GElt::identity(x.fgl(), x.prec());
    GElt p = x;
    for (int n = 1; n <= cap; ++n) {
        if (p == id)
            return n;
        p = p * x;
    }
    return std::nullopt;
}

GElt std_g(StdG name, FGL fgl, int prec) {
    if (prec < 3)
        throw insufficient_precision("std_g: precision must be at least 3");
    // factorizations divide the a-coordinate by 2, so work one bit higher
    int wp = prec < 64 ? prec + 1 : 64;
    switch (name) {
    case StdG::Bracket1PlusI:
        return g_from_odd(EndoElt::one(fgl, wp) + std_endo(StdEndo::I, fgl, wp)).reduced(prec);
    case StdG::BracketJMinusK:
        return g_from_odd(std_endo(StdEndo::J, fgl, wp) - std_endo(StdEndo::K, fgl, wp)).reduced(prec);
    case StdG::Sigma:
        return GElt(EndoElt::one(fgl, prec), 1);
    case StdG::Pi0:
        return GElt(std_endo(StdEndo::Pi, fgl, prec), 0);
    }
    throw unknown_name("std_g: unknown element");
}

GElt std_g(const std::string& name, FGL fgl, int prec) {
    if (name == "bracket_1pi") return std_g(StdG::Bracket1PlusI, fgl, prec);
    if (name == "bracket_jmk") return std_g(StdG::BracketJMinusK, fgl, prec);
    if (name == "sigma") return std_g(StdG::Sigma, fgl, prec);
    if (name == "pi0") return std_g(StdG::Pi0, fgl, prec);
    throw unknown_name("std_g: unknown element '" + name + "'");
}

} // namespace morava
