#pragma once

#include "morava/groupring.hpp"
#include "morava/howell.hpp"

namespace morava {

/// Column layout for the ring over a subgroup image: two residue columns
/// (coefficients of 1 and zeta) per group id, in sorted id order.
struct RingAmbient {
    QuotientPtr Q;
    std::string subgroup_name;
    int nbits = 2;
    std::vector<int> ids;
    std::vector<int> col_of; // id -> column pair base, -1 outside

    RingAmbient() = default;
    RingAmbient(QuotientPtr q, const std::string& subgroup, int nbits);
    int dim() const { return 2 * int(ids.size()); }
    Row to_row(const RingElt& x) const;
    RingElt from_row(const Row& r, int prec) const;
};

/// Column layout for a coset module: two residue columns per coset.
struct ModuleAmbient {
    CosetSpacePtr space;
    int nbits = 2;

    ModuleAmbient() = default;
    ModuleAmbient(CosetSpacePtr s, int nb) : space(std::move(s)), nbits(nb) {}
    int dim() const { return 2 * space->num_cosets(); }
    Row to_row(const ModuleElt& v) const;
    ModuleElt from_row(const Row& r, int prec) const;
};

struct IdealModel {
    RingAmbient ambient;
    HowellBasis basis;

    IdealModel(RingAmbient amb) : ambient(std::move(amb)), basis(ambient.dim(), ambient.nbits) {}
    bool contains(const RingElt& x) const { return basis.contains(ambient.to_row(x)); }
    bool includes(const IdealModel& o) const { return basis.includes(o.basis); }
};

struct ModuleModel {
    ModuleAmbient ambient;
    HowellBasis basis;

    ModuleModel(ModuleAmbient amb) : ambient(std::move(amb)), basis(ambient.dim(), ambient.nbits) {}
    bool contains(const ModuleElt& v) const { return basis.contains(ambient.to_row(v)); }
};

enum class Sides { Left, Right, TwoSided };

/// Builds and caches the standard ideal models over the norm-one subgroup
/// ring of a projective quotient variant. Augmentation-ideal pieces of the
/// unflagged subgroups (the K1- and S1-images) are computed in their small
/// subrings first and then closed in the ambient twisted ring.
class IdealContext {
  public:
    IdealContext(QuotientPtr q, int nbits);

    const QuotientPtr& Q() const { return q_; }
    int nbits() const { return nbits_; }
    const RingAmbient& ring_ambient() const { return ring_; }

    /// Named models: "J", "I", "Itheta", "I4K", "Iaug:<subgroup>".
    const IdealModel& standard(const std::string& name) const;

    /// Smallest submodule containing the generators closed under the
    /// requested multiplications.
    IdealModel span(const std::vector<RingElt>& gens, Sides sides) const;

    /// Span of {x . base : x in the ideal} closed under the module action.
    ModuleModel module_image(const IdealModel& ideal, const CosetSpacePtr& s) const;

    /// Left-module span of explicit generators.
    ModuleModel module_span(const std::vector<ModuleElt>& gens) const;

    /// ker(augmentation) of the coset module, from the difference basis.
    ModuleModel augmentation_kernel(const CosetSpacePtr& s) const;

  private:
    IdealModel compute(const std::string& name) const;

    QuotientPtr q_;
    int nbits_;
    RingAmbient ring_;
    std::vector<int> big_gens_; // generators of the ambient subgroup
    std::vector<int> sub_gens_; // generators of its unflagged part
    mutable std::map<std::string, IdealModel> cache_;
};

} // namespace morava
