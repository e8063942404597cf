#include "morava/quotients.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

namespace morava {

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::S2: return "S2";
    case Variant::PS2: return "PS2";
    case Variant::G2: return "G2";
    case Variant::PG2: return "PG2";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "S2") return Variant::S2;
    if (name == "PS2") return Variant::PS2;
    if (name == "G2") return Variant::G2;
    if (name == "PG2") return Variant::PG2;
    throw unknown_name("variant_from_name: '" + name + "'");
}

uint32_t DigitForm::key() const {
    uint32_t k = flag;
    k = (k << 2) | omega_exp;
    for (uint8_t d : digits)
        k = (k << 2) | d;
    return k | (uint32_t(digits.size()) << 24);
}

std::string DigitForm::str() const {
    std::ostringstream os;
    os << int(omega_exp) << ':';
    for (uint8_t d : digits)
        os << int(d);
    os << ':' << int(flag);
    return os.str();
}

DigitForm DigitForm::parse(const std::string& s) {
    DigitForm f;
    auto c1 = s.find(':');
    auto c2 = s.rfind(':');
    if (c1 == std::string::npos || c2 == c1)
        throw std::invalid_argument("DigitForm::parse: expected 'e:digits:f'");
    f.omega_exp = uint8_t(std::stoi(s.substr(0, c1)));
    f.flag = uint8_t(std::stoi(s.substr(c2 + 1)));
    for (size_t i = c1 + 1; i < c2; ++i) {
        if (s[i] < '0' || s[i] > '3')
            throw std::invalid_argument("DigitForm::parse: digit out of range");
        f.digits.push_back(uint8_t(s[i] - '0'));
    }
    return f;
}

IdSet IdSet::of(std::vector<int> ids, int universe) {
    IdSet s;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    s.ids = std::move(ids);
    s.mask.assign(universe, 0);
    for (int i : s.ids)
        s.mask[i] = 1;
    return s;
}

namespace {

// Teichmuller lifts of F4 = {0, 1, zeta, 1+zeta}: the roots {0, 1, zeta, zeta^2}.
WittApprox teich(uint8_t d, int prec) {
    switch (d & 3) {
    case 0: return WittApprox(0, 0, prec);
    case 1: return WittApprox(1, 0, prec);
    case 2: return WittApprox(0, 1, prec);
    default: return WittApprox(~0ull, ~0ull, prec); // -1 - zeta
    }
}

// 1 + T(d) xi^i as an endomorphism.
EndoElt level_factor(uint8_t d, int i, FGL fgl, int prec) {
    WittApprox t = teich(d, prec);
    int m = i / 2;
    int64_t two_u_m = 1;
    for (int s = 0; s < m; ++s)
        two_u_m *= 2 * fgl_unit(fgl);
    WittApprox scale = WittApprox::from_int(two_u_m, prec);
    if (i % 2 == 0)
        return EndoElt(WittApprox::one(prec) + t * scale, WittApprox::zero(prec), fgl);
    return EndoElt(WittApprox::one(prec), t * scale, fgl);
}

bool val_at_least(const WittApprox& x, int bound) {
    return val2(x).v >= bound;
}

struct RegistryKey {
    int depth;
    int variant;
    int fgl;
    bool operator<(const RegistryKey& o) const {
        return std::tie(depth, variant, fgl) < std::tie(o.depth, o.variant, o.fgl);
    }
};

uint64_t splitmix(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

GElt QuotientGroup::reconstruct(const DigitForm& f) const {
    WittApprox zeta = WittApprox::zeta(prec_);
    WittApprox w = WittApprox::one(prec_);
    for (int s = 0; s < f.omega_exp; ++s)
        w = w * zeta;
    EndoElt u = EndoElt::from_witt(w, fgl_);
    for (size_t i = 0; i < f.digits.size(); ++i)
        if (f.digits[i] != 0)
            u = u * level_factor(f.digits[i], int(i) + 1, fgl_, prec_);
    return GElt(u, f.flag);
}

DigitForm QuotientGroup::normal_form(const GElt& g) const {
    if (g.fgl() != fgl_)
        throw tag_mismatch("QuotientGroup::normal_form: wrong formal group law");
    if (g.prec() < prec_)
        throw insufficient_precision(
            "QuotientGroup::normal_form: element precision below quotient precision");
    if (g.flag() && !variant_galois(variant_))
        throw variant_mismatch("QuotientGroup::normal_form: flagged element in an S-variant");

    auto peel = [&](EndoElt u) {
        DigitForm f;
        f.digits.assign(depth_ - 1, 0);
        uint64_t r0 = u.a().a0() & 1, r1 = u.a().a1() & 1;
        f.omega_exp = r1 == 0 ? 0 : (r0 == 0 ? 1 : 2);
        if (f.omega_exp) {
            WittApprox zeta = WittApprox::zeta(prec_);
            WittApprox zinv = f.omega_exp == 1 ? zeta * zeta : zeta; // zeta^{-e}
            u = EndoElt::from_witt(zinv, fgl_) * u;
        }
        for (int i = 1; i < depth_; ++i) {
            int m = i / 2;
            uint64_t b0, b1;
            if (i % 2 == 0) {
                if (!val_at_least(u.a() - WittApprox::one(prec_), m) || !val_at_least(u.b(), m))
                    throw insufficient_precision("normal_form: element left the filtration");
                b0 = ((u.a().a0() - 1) >> m) & 1;
                b1 = (u.a().a1() >> m) & 1;
            } else {
                if (!val_at_least(u.a() - WittApprox::one(prec_), m + 1) ||
                    !val_at_least(u.b(), m))
                    throw insufficient_precision("normal_form: element left the filtration");
                b0 = (u.b().a0() >> m) & 1;
                b1 = (u.b().a1() >> m) & 1;
            }
            f.digits[i - 1] = uint8_t(b0 | (b1 << 1));
            if (f.digits[i - 1] != 0)
                u = level_factor(f.digits[i - 1], i, fgl_, prec_).inv() * u;
        }
        return f;
    };

    EndoElt u = g.unit().reduced(prec_);
    DigitForm f = peel(u);
    if (variant_projective(variant_) && depth_ >= 3 && (f.digits[1] & 1))
        f = peel(-u); // the sign representatives differ by 1 in the a2 digit
    f.flag = uint8_t(g.flag());
    return f;
}

int QuotientGroup::id_of(const DigitForm& f) const {
    auto it = key2id_.find(f.key());
    if (it == key2id_.end())
        throw std::invalid_argument("QuotientGroup::id_of: form not in this quotient");
    return it->second;
}

int QuotientGroup::id_of(const GElt& g) const { return id_of(normal_form(g)); }

int QuotientGroup::mul_uncached(int x, int y) const {
    return id_of(recon_[x] * recon_[y]);
}

int QuotientGroup::mul(int x, int y) const {
    if (!mul_table_.empty())
        return mul_table_[size_t(x) * forms_.size() + y];
    return rmul_row(y)[x];
}

const std::vector<int>& QuotientGroup::rmul_row(int g) const {
    auto it = rmul_cache_.find(g);
    if (it != rmul_cache_.end())
        return it->second;
    std::vector<int> row(forms_.size());
    if (!mul_table_.empty()) {
        for (int x = 0; x < size(); ++x)
            row[x] = mul_table_[size_t(x) * forms_.size() + g];
    } else {
        for (int x = 0; x < size(); ++x)
            row[x] = mul_uncached(x, g);
    }
    return rmul_cache_.emplace(g, std::move(row)).first->second;
}

const std::vector<int>& QuotientGroup::lmul_row(int g) const {
    auto it = lmul_cache_.find(g);
    if (it != lmul_cache_.end())
        return it->second;
    std::vector<int> row(forms_.size());
    if (!mul_table_.empty()) {
        for (int y = 0; y < size(); ++y)
            row[y] = mul_table_[size_t(g) * forms_.size() + y];
    } else {
        for (int y = 0; y < size(); ++y)
            row[y] = mul_uncached(g, y);
    }
    return lmul_cache_.emplace(g, std::move(row)).first->second;
}

bool QuotientGroup::is_norm_one(int x) const {
    uint32_t dmask = (1u << det_bits_) - 1;
    return det_[x] == 1 || det_[x] == dmask; // +1 or -1 mod 2^d
}

std::shared_ptr<const QuotientGroup> QuotientGroup::build(int depth, Variant v, FGL fgl,
                                                          uint64_t seed) {
    if (depth < 2 || depth > 8)
        throw cap_exceeded("QuotientGroup::build: depth must be in [2, 8]");
    auto qp = std::shared_ptr<QuotientGroup>(new QuotientGroup());
    QuotientGroup& q = *qp;
    q.depth_ = depth;
    q.variant_ = v;
    q.fgl_ = fgl;
    q.prec_ = std::max((depth + 1) / 2 + 2, 4);
    q.det_bits_ = (depth + 1) / 2;

    int nflags = variant_galois(v) ? 2 : 1;
    bool proj = variant_projective(v);
    std::vector<uint8_t> digits(depth - 1, 0);
    for (int flag = 0; flag < nflags; ++flag) {
        for (int e = 0; e < 3; ++e) {
            std::fill(digits.begin(), digits.end(), 0);
            for (;;) {
                if (!proj || depth < 3 || (digits[1] & 1) == 0) {
                    DigitForm f;
                    f.omega_exp = uint8_t(e);
                    f.flag = uint8_t(flag);
                    f.digits = digits;
                    q.key2id_.emplace(f.key(), int(q.forms_.size()));
                    q.forms_.push_back(std::move(f));
                }
                int pos = 0;
                while (pos < depth - 1 && digits[pos] == 3)
                    digits[pos++] = 0;
                if (pos == depth - 1)
                    break;
                digits[pos] += 1;
            }
        }
    }

    q.recon_.reserve(q.forms_.size());
    for (const auto& f : q.forms_)
        q.recon_.push_back(q.reconstruct(f));
    q.id_identity_ = q.id_of(GElt::identity(fgl, q.prec_));

    if (q.size() <= 1024) {
        q.mul_table_.resize(size_t(q.size()) * q.size());
        for (int x = 0; x < q.size(); ++x)
            for (int y = 0; y < q.size(); ++y)
                q.mul_table_[size_t(x) * q.size() + y] = q.mul_uncached(x, y);
    }

    q.inv_.resize(q.size());
    q.sigma_.resize(q.size());
    q.det_.resize(q.size());
    uint32_t dmask = (1u << q.det_bits_) - 1;
    for (int x = 0; x < q.size(); ++x) {
        q.inv_[x] = q.id_of(q.recon_[x].inv());
        q.sigma_[x] = q.id_of(GElt(q.recon_[x].unit().frobenius(), q.recon_[x].flag()));
        q.det_[x] = uint32_t(q.recon_[x].unit().det().a0()) & dmask;
    }

    auto put_endo = [&](const std::string& n, const EndoElt& x) {
        q.std_ids_[n] = q.id_of(GElt::from_unit(x));
    };
    int N = q.prec_;
    put_endo("e", EndoElt::one(fgl, N));
    put_endo("m1", -EndoElt::one(fgl, N));
    put_endo("alpha", std_endo(StdEndo::Alpha, fgl, N));
    put_endo("alpha_inv", std_endo(StdEndo::Alpha, fgl, N).inv());
    put_endo("alpha_sigma", std_endo(StdEndo::Alpha, fgl, N).frobenius());
    put_endo("alpha_i", std_endo(StdEndo::AlphaI, fgl, N));
    put_endo("alpha_j", std_endo(StdEndo::AlphaJ, fgl, N));
    put_endo("alpha_k", std_endo(StdEndo::AlphaK, fgl, N));
    put_endo("i", std_endo(StdEndo::I, fgl, N));
    put_endo("j", std_endo(StdEndo::J, fgl, N));
    put_endo("k", std_endo(StdEndo::K, fgl, N));
    put_endo("omega", std_endo(StdEndo::Omega, fgl, N));
    put_endo("pi", std_endo(StdEndo::Pi, fgl, N));
    if (variant_galois(v)) {
        q.std_ids_["sigma"] = q.id_of(std_g(StdG::Sigma, fgl, N));
        q.std_ids_["bracket_1pi"] = q.id_of(std_g(StdG::Bracket1PlusI, fgl, N));
        q.std_ids_["bracket_jmk"] = q.id_of(std_g(StdG::BracketJMinusK, fgl, N));
    }

    q.validate(seed);
    return qp;
}

int QuotientGroup::std_id(const std::string& name) const {
    auto it = std_ids_.find(name);
    return it == std_ids_.end() ? -1 : it->second;
}

IdSet QuotientGroup::bfs_closure(std::vector<int> gens) const {
    std::vector<int> with_inv = gens;
    for (int g : gens)
        with_inv.push_back(inv_[g]);
    std::sort(with_inv.begin(), with_inv.end());
    with_inv.erase(std::unique(with_inv.begin(), with_inv.end()), with_inv.end());
    std::vector<char> seen(size(), 0);
    std::deque<int> work;
    std::vector<int> out;
    auto push = [&](int x) {
        if (!seen[x]) {
            seen[x] = 1;
            out.push_back(x);
            work.push_back(x);
        }
    };
    push(id_identity_);
    for (int g : with_inv)
        push(g);
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        for (int g : with_inv)
            push(rmul_row(g)[x]);
    }
    return IdSet::of(std::move(out), size());
}

IdSet QuotientGroup::table_image(const SubgroupTable& t) const {
    std::vector<int> ids;
    for (const auto& g : t.elements()) {
        if (g.flag() && !variant_galois(variant_))
            continue;
        ids.push_back(id_of(g));
    }
    return IdSet::of(std::move(ids), size());
}

IdSet QuotientGroup::compute_image(const std::string& name) const {
    if (name == "All" || name == "All0" || name == "NormOne" || name == "NormOne0") {
        bool need_n1 = name.rfind("NormOne", 0) == 0;
        bool need_f0 = name.back() == '0';
        std::vector<int> ids;
        for (int x = 0; x < size(); ++x) {
            if (need_n1 && !is_norm_one(x))
                continue;
            if (need_f0 && phi(x) != 0)
                continue;
            ids.push_back(x);
        }
        return IdSet::of(std::move(ids), size());
    }
    if (name.size() >= 2 && name[0] == 'F' && isdigit(name[1])) {
        int i = std::stoi(name.substr(1));
        if (i < 1 || i > depth_)
            throw unknown_name("subgroup_image: filtration depth out of range: " + name);
        std::vector<int> ids;
        for (int x = 0; x < size(); ++x) {
            const DigitForm& f = forms_[x];
            if (f.omega_exp != 0 || f.flag != 0)
                continue;
            bool ok = true;
            for (int lvl = 1; lvl < i && lvl <= depth_ - 1; ++lvl)
                if (f.digits[lvl - 1] != 0)
                    ok = false;
            if (ok)
                ids.push_back(x);
        }
        return IdSet::of(std::move(ids), size());
    }
    if (name == "K" || name == "K1" || name == "K1_low") {
        std::vector<int> digit_gens;
        for (int lvl = 3; lvl <= depth_ - 1; ++lvl)
            for (uint8_t d = 1; d <= 3; ++d) {
                DigitForm f;
                f.digits.assign(depth_ - 1, 0);
                f.digits[lvl - 1] = d;
                digit_gens.push_back(id_of(f));
            }
        if (name == "K") {
            std::vector<int> gens = digit_gens;
            gens.push_back(std_id("alpha"));
            return bfs_closure(std::move(gens));
        }
        if (name == "K1") {
            const IdSet& k = subgroup_image("K");
            std::vector<int> ids;
            for (int x : k.ids)
                if (is_norm_one(x))
                    ids.push_back(x);
            return IdSet::of(std::move(ids), size());
        }
        std::vector<int> gens;
        for (int g : digit_gens)
            if (is_norm_one(g))
                gens.push_back(g);
        for (const char* n : {"alpha", "alpha_i", "alpha_j", "alpha_k"})
            gens.push_back(std_id(n));
        return bfs_closure(std::move(gens));
    }
    for (const char* n : {"Q8", "C6", "C8", "G24", "G12", "G48", "G24p", "G48p"}) {
        if (name == n)
            return table_image(std_subgroup(name, fgl_, prec_, variant_projective(variant_)));
    }
    throw unknown_name("subgroup_image: unknown name '" + name + "'");
}

const IdSet& QuotientGroup::subgroup_image(const std::string& name) const {
    auto it = image_cache_.find(name);
    if (it != image_cache_.end())
        return it->second;
    return image_cache_.emplace(name, compute_image(name)).first->second;
}

std::vector<int> QuotientGroup::find_generators(const IdSet& s) const {
    std::vector<int> gens;
    IdSet closed = IdSet::of({id_identity_}, size());
    for (int id : s.ids) {
        if (closed.contains(id))
            continue;
        gens.push_back(id);
        closed = bfs_closure(gens);
    }
    return gens;
}

void QuotientGroup::validate(uint64_t seed) {
    checks_.round_trip = true;
    for (int x = 0; x < size(); ++x)
        if (id_of(recon_[x]) != x)
            checks_.round_trip = false;

    uint64_t state = seed ^ 0x5bd1e995u;
    checks_.det_coset_invariant = true;
    int samples = std::min(size(), 256);
    int hi = (depth_ + 1) / 2, lo = depth_ / 2;
    uint32_t dmask = (1u << det_bits_) - 1;
    for (int t = 0; t < samples * 8; ++t) {
        int x = int(splitmix(state) % uint64_t(size()));
        WittApprox a(1 + (splitmix(state) << hi), splitmix(state) << hi, prec_);
        WittApprox b(splitmix(state) << lo, splitmix(state) << lo, prec_);
        GElt f(EndoElt(a, b, fgl_), 0);
        GElt prod = recon_[x] * f;
        if ((uint32_t(prod.unit().det().a0()) & dmask) != det_[x])
            checks_.det_coset_invariant = false;
        if (id_of(prod) != x)
            checks_.round_trip = false;
    }
    if (!checks_.det_coset_invariant)
        throw std::logic_error("QuotientGroup: det residue not constant on cosets");
    if (!checks_.round_trip)
        throw std::logic_error("QuotientGroup: normal form is not a coset invariant");

    const IdSet& n1 = subgroup_image("NormOne");
    checks_.norm_one_subgroup = true;
    if (size() <= 1024) {
        for (int x : n1.ids)
            for (int y : n1.ids)
                if (!n1.contains(mul(x, y)))
                    checks_.norm_one_subgroup = false;
    } else {
        for (int t = 0; t < 4096; ++t) {
            int x = n1.ids[splitmix(state) % n1.ids.size()];
            int y = n1.ids[splitmix(state) % n1.ids.size()];
            if (!n1.contains(mul(x, y)))
                checks_.norm_one_subgroup = false;
        }
    }
    for (int x : n1.ids)
        if (!n1.contains(inv_[x]))
            checks_.norm_one_subgroup = false;
    if (!checks_.norm_one_subgroup)
        throw std::logic_error("QuotientGroup: norm-one set is not a subgroup");
}

std::shared_ptr<const QuotientGroup> QuotientGroup::get(int depth, Variant v, FGL fgl) {
    static std::map<RegistryKey, std::shared_ptr<const QuotientGroup>> registry;
    RegistryKey k{depth, int(v), int(fgl)};
    auto it = registry.find(k);
    if (it != registry.end())
        return it->second;
    auto q = build(depth, v, fgl);
    registry.emplace(k, q);
    return q;
}

} // namespace morava
