#include "morava/endo.hpp"

#include <sstream>

namespace morava {

EndoElt::EndoElt(WittApprox a, WittApprox b, FGL fgl) : a_(a), b_(b), fgl_(fgl) {
    if (a_.prec() != b_.prec())
        throw precision_mismatch("EndoElt: coordinates carry different precision");
}

void EndoElt::check_same(const EndoElt& o) const {
    if (fgl_ != o.fgl_)
        throw tag_mismatch("EndoElt: mixed formal group law tags");
    if (prec() != o.prec())
        throw precision_mismatch("EndoElt: operands carry different precision");
}

EndoElt EndoElt::operator+(const EndoElt& o) const {
    check_same(o);
    return EndoElt(a_ + o.a_, b_ + o.b_, fgl_);
}

EndoElt EndoElt::operator-(const EndoElt& o) const {
    check_same(o);
    return EndoElt(a_ - o.a_, b_ - o.b_, fgl_);
}

EndoElt EndoElt::operator-() const { return EndoElt(-a_, -b_, fgl_); }

EndoElt EndoElt::operator*(const EndoElt& o) const {
    check_same(o);
    // (a1 + b1 xi)(a2 + b2 xi) = (a1 a2 + 2u b1 sigma(b2)) + (a1 b2 + b1 sigma(a2)) xi
    WittApprox two_u = WittApprox::from_int(2 * fgl_unit(fgl_), prec());
    WittApprox c0 = a_ * o.a_ + two_u * b_ * o.b_.frobenius();
    WittApprox c1 = a_ * o.b_ + b_ * o.a_.frobenius();
    return EndoElt(c0, c1, fgl_);
}

WittApprox EndoElt::det() const {
    WittApprox two_u = WittApprox::from_int(2 * fgl_unit(fgl_), prec());
    return a_ * a_.frobenius() - two_u * b_ * b_.frobenius();
}

EndoElt EndoElt::inv() const {
    WittApprox d = det();
    if ((d.a0() & 1) == 0)
        throw not_a_unit("EndoElt::inv: determinant is even");
    WittApprox dinv = d.inv();
    return EndoElt(dinv * a_.frobenius(), -(dinv * b_), fgl_);
}

EndoElt EndoElt::frobenius() const {
    return EndoElt(a_.frobenius(), b_.frobenius(), fgl_);
}

std::string EndoElt::str() const {
    std::ostringstream os;
    os << "(" << a_.str() << ") + (" << b_.str() << ")*xi[" << fgl_name(fgl_) << "]";
    return os.str();
}

FiltLevel filtration_level(const EndoElt& x) {
    if (!x.is_unit())
        throw not_a_unit("filtration_level: element is not a unit");
    int N = x.prec();
    Val2 va = val2(x.a() - WittApprox::one(N));
    Val2 vb = val2(x.b());
    int la = 2 * va.v;
    int lb = 2 * vb.v + 1;
    int cap = 2 * N - 1;
    int level = la < lb ? la : lb;
    bool exact = la < lb ? va.exact : vb.exact;
    if (level >= cap)
        return FiltLevel{cap, false};
    return FiltLevel{level, exact};
}

EndoElt std_endo(StdEndo name, FGL fgl, int prec) {
    if (prec < 3)
        throw insufficient_precision("std_endo: precision must be at least 3");
    auto W = [&](WittConstant c) { return witt_constant(c, prec); };
    switch (name) {
    case StdEndo::Omega:
        return EndoElt::from_witt(WittApprox::zeta(prec), fgl);
    case StdEndo::Alpha:
        return EndoElt::from_witt(W(WittConstant::Alpha), fgl);
    case StdEndo::Pi:
        return EndoElt::from_witt(W(WittConstant::Pi), fgl);
    case StdEndo::Eps: {
        WittApprox eps = fgl == FGL::Honda ? W(WittConstant::Alpha) : WittApprox::one(prec);
        return EndoElt::from_witt(eps, fgl);
    }
    case StdEndo::I:
    case StdEndo::J:
    case StdEndo::K: {
        WittApprox pi_inv = W(WittConstant::Pi).inv();
        WittApprox eps = fgl == FGL::Honda ? W(WittConstant::Alpha) : WittApprox::one(prec);
        WittApprox zeta = WittApprox::zeta(prec);
        WittApprox factor = eps;
        if (name == StdEndo::J) factor = zeta * zeta * eps;
        if (name == StdEndo::K) factor = zeta * eps;
        return EndoElt(pi_inv, -(pi_inv * factor), fgl);
    }
    case StdEndo::AlphaI:
    case StdEndo::AlphaJ:
    case StdEndo::AlphaK: {
        StdEndo tau_name = name == StdEndo::AlphaI  ? StdEndo::I
                           : name == StdEndo::AlphaJ ? StdEndo::J
                                                     : StdEndo::K;
        EndoElt tau = std_endo(tau_name, fgl, prec);
        EndoElt alpha = std_endo(StdEndo::Alpha, fgl, prec);
        return tau * alpha * tau.inv() * alpha.inv();
    }
    }
    throw unknown_name("std_endo: unknown element");
}

EndoElt std_endo(const std::string& name, FGL fgl, int prec) {
    if (name == "i") return std_endo(StdEndo::I, fgl, prec);
    if (name == "j") return std_endo(StdEndo::J, fgl, prec);
    if (name == "k") return std_endo(StdEndo::K, fgl, prec);
    if (name == "omega") return std_endo(StdEndo::Omega, fgl, prec);
    if (name == "alpha") return std_endo(StdEndo::Alpha, fgl, prec);
    if (name == "pi") return std_endo(StdEndo::Pi, fgl, prec);
    if (name == "eps") return std_endo(StdEndo::Eps, fgl, prec);
    if (name == "alpha_i") return std_endo(StdEndo::AlphaI, fgl, prec);
    if (name == "alpha_j") return std_endo(StdEndo::AlphaJ, fgl, prec);
    if (name == "alpha_k") return std_endo(StdEndo::AlphaK, fgl, prec);
    throw unknown_name("std_endo: unknown element '" + name + "'");
}

EndoElt iso_elliptic_to_honda(const EndoElt& x) {
    if (x.fgl() != FGL::Elliptic)
        throw tag_mismatch("iso_elliptic_to_honda: expects an elliptic-tag element");
    WittApprox alpha = witt_constant(WittConstant::Alpha, x.prec());
    return EndoElt(x.a(), x.b() * alpha, FGL::Honda);
}

} // namespace morava
