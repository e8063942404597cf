#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "morava/gtwo.hpp"

namespace morava {

/// A finite subgroup held as an explicit element list, closed under
/// multiplication and inverse at the working precision. Elements are stored
/// in breadth-first closure order seeded by the generator list, which makes
/// transversal representatives reproducible. When `projective` is set,
/// elements are identified with their negatives and stored by the canonical
/// representative.
class SubgroupTable {
  public:
    static SubgroupTable closure(std::string name, const std::vector<GElt>& generators,
                                 bool projective, int cap = 512);

    const std::string& name() const { return name_; }
    bool projective() const { return projective_; }
    FGL fgl() const { return elements_.at(0).fgl(); }
    int prec() const { return elements_.at(0).prec(); }
    size_t size() const { return elements_.size(); }
    const std::vector<GElt>& elements() const { return elements_; }

    bool contains(const GElt& g) const;
    bool contains_table(const SubgroupTable& h) const;

    /// Canonical representative: for projective tables, the lexicographically
    /// smaller of g and -g by coordinate encoding.
    GElt canonical(const GElt& g) const;

    /// Multiset of element orders (order -> count); for projective tables the
    /// orders are those of the images modulo the center.
    std::map<int, int> order_profile() const;

    /// Left-coset representatives of h in this table, first-occurrence order.
    /// |this| = |h| * |transversal|.
    std::vector<GElt> transversal(const SubgroupTable& h) const;

  private:
    SubgroupTable() = default;

    std::string name_;
    bool projective_ = false;
    std::vector<GElt> elements_;
    std::unordered_map<uint64_t, int> index_;
};

enum class StdSubgroup { Q8, C6, C8, G24, G12, G48, G24p, G48p };

/// The standard finite subgroups; primed versions conjugate by (pi, 0).
/// The G48' reading follows the G24' = pi G24 pi^{-1} pattern.
SubgroupTable std_subgroup(StdSubgroup name, FGL fgl, int prec, bool projective = false);
SubgroupTable std_subgroup(const std::string& name, FGL fgl, int prec, bool projective = false);

} // namespace morava
