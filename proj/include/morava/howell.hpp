#pragma once

#include <cstdint>
#include <vector>

#include "morava/errors.hpp"

namespace morava {

using Row = std::vector<uint32_t>;

/// Row basis in Howell normal form for a submodule of (Z/2^N)^D.
/// Pivots are normalized to pure powers of two, entries above a pivot are
/// reduced modulo the pivot, and annihilator shifts of every pivot row are
/// in the span, so membership is decided by greedy reduction. The canonical
/// form is unique per span, so equal spans compare equal.
class HowellBasis {
  public:
    HowellBasis(int ncols, int nbits);

    int ncols() const { return ncols_; }
    int nbits() const { return nbits_; }
    uint32_t mask() const { return mask_; }

    /// Greedy reduction against the basis, in place. True iff row ends at 0.
    bool reduce(Row& row) const;
    bool contains(Row row) const;

    /// Insert a row, maintaining Howell form. True iff the span grew.
    bool insert(Row row);

    /// Reduce entries above pivots; after this the row list is canonical.
    void canonicalize();

    size_t row_count() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }

    /// Does this span contain every row of other?
    bool includes(const HowellBasis& other) const;

    /// Canonical-form equality; both sides must be canonicalized.
    bool equal_span(const HowellBasis& other) const;

  private:
    void check_cols(const Row& row) const;

    int ncols_, nbits_;
    uint32_t mask_;
    std::vector<Row> rows_;         // ordered by pivot column
    std::vector<int> col_to_row_;   // pivot column -> row index, -1 if none
    std::vector<int> pivot_val_;    // per row: valuation of the pivot
};

int val2_u32(uint32_t x, int nbits);
uint32_t inv_odd_u32(uint32_t a, int nbits);

} // namespace morava
