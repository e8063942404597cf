#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "morava/gtwo.hpp"
#include "morava/subgroups.hpp"

namespace morava {

enum class Variant { S2, PS2, G2, PG2 };

inline bool variant_projective(Variant v) { return v == Variant::PS2 || v == Variant::PG2; }
inline bool variant_galois(Variant v) { return v == Variant::G2 || v == Variant::PG2; }
const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// Canonical digit string for an element of a finite quotient:
/// g = omega^e * prod_i (1 + T(a_i) xi^i) * (deeper), with a_i in F4 encoded
/// 0, 1, 2 = zeta, 3 = 1 + zeta, plus the Galois flag for G-variants.
struct DigitForm {
    uint8_t omega_exp = 0;
    uint8_t flag = 0;
    std::vector<uint8_t> digits; // a_1 .. a_{M-1}

    bool operator==(const DigitForm& o) const {
        return omega_exp == o.omega_exp && flag == o.flag && digits == o.digits;
    }
    uint32_t key() const;
    std::string str() const; // "e:d1d2...:f"
    static DigitForm parse(const std::string& s);
};

/// Sorted id subset of a quotient group with constant-time membership.
struct IdSet {
    std::vector<int> ids;
    std::vector<char> mask;

    static IdSet of(std::vector<int> ids, int universe);
    bool contains(int id) const { return id >= 0 && id < int(mask.size()) && mask[id]; }
    size_t size() const { return ids.size(); }
};

/// The finite quotient S2/F_{M/2} (or its projective / Galois-extended
/// variants) with digit normal forms. Immutable after build; the lazy
/// multiplication-row caches are not thread safe.
class QuotientGroup {
  public:
    static std::shared_ptr<const QuotientGroup> build(int depth, Variant v, FGL fgl,
                                                      uint64_t seed = 0xC0FFEEull);
    /// Process-wide registry keyed by (depth, variant, fgl).
    static std::shared_ptr<const QuotientGroup> get(int depth, Variant v, FGL fgl);

    int depth() const { return depth_; }
    Variant variant() const { return variant_; }
    FGL fgl() const { return fgl_; }
    int size() const { return int(forms_.size()); }
    int internal_prec() const { return prec_; }
    int det_modulus_bits() const { return det_bits_; }

    int identity() const { return id_identity_; }
    int mul(int x, int y) const;
    int inv(int x) const { return inv_[x]; }
    int conj(int g, int x) const { return rmul_row(inv_[g])[lmul_row(g)[x]]; }
    /// Conjugation by the canonical Galois element: Frobenius on coordinates.
    int sigma_conj(int x) const { return sigma_[x]; }
    int phi(int x) const { return forms_[x].flag; }
    uint32_t det_residue(int x) const { return det_[x]; }
    bool is_norm_one(int x) const;

    const DigitForm& form(int id) const { return forms_[id]; }
    const GElt& rep(int id) const { return recon_[id]; }

    DigitForm normal_form(const GElt& g) const;
    GElt reconstruct(const DigitForm& f) const;
    int id_of(const GElt& g) const;
    int id_of(const DigitForm& f) const;

    /// Named element id, or -1 when the element does not live in this
    /// variant (flagged elements in S-variants). Names: e, alpha, alpha_inv,
    /// alpha_sigma, alpha_i, alpha_j, alpha_k, i, j, k, omega, pi, sigma,
    /// bracket_1pi, bracket_jmk, m1 (the class of -1).
    int std_id(const std::string& name) const;

    /// Named subgroup images. Names: NormOne, NormOne0, F(1)..F(7), K, K1,
    /// K1_low, Q8, C6, C8, G24, G48, G12, G24p, G48p, PG-prefixed synonyms
    /// resolve to the same tables in projective variants, All, All0.
    const IdSet& subgroup_image(const std::string& name) const;

    /// Greedy small generating set of a subgroup id-set.
    std::vector<int> find_generators(const IdSet& s) const;

    /// y -> y * g (cached per g).
    const std::vector<int>& rmul_row(int g) const;
    /// y -> g * y (cached per g).
    const std::vector<int>& lmul_row(int g) const;

    struct BuildChecks {
        bool det_coset_invariant = false;
        bool norm_one_subgroup = false;
        bool round_trip = false;
    };
    const BuildChecks& build_checks() const { return checks_; }

  private:
    QuotientGroup() = default;
    int mul_uncached(int x, int y) const;
    IdSet compute_image(const std::string& name) const;
    IdSet table_image(const SubgroupTable& t) const;
    IdSet bfs_closure(std::vector<int> gens) const;
    void validate(uint64_t seed);

    int depth_ = 0;
    Variant variant_ = Variant::S2;
    FGL fgl_ = FGL::Honda;
    int prec_ = 0;
    int det_bits_ = 0;
    int id_identity_ = 0;

    std::vector<DigitForm> forms_;
    std::vector<GElt> recon_;
    std::unordered_map<uint32_t, int> key2id_;
    std::vector<int> inv_;
    std::vector<int> sigma_;
    std::vector<uint32_t> det_;
    std::vector<int> mul_table_; // full table when size^2 is affordable
    mutable std::unordered_map<int, std::vector<int>> rmul_cache_;
    mutable std::unordered_map<int, std::vector<int>> lmul_cache_;
    mutable std::map<std::string, IdSet> image_cache_;
    std::map<std::string, int> std_ids_;
    BuildChecks checks_;
};

using QuotientPtr = std::shared_ptr<const QuotientGroup>;

} // namespace morava
