#include "morava/howell.hpp"

#include <algorithm>
#include <deque>

namespace morava {

int val2_u32(uint32_t x, int nbits) {
    if (x == 0)
        return nbits;
    int v = 0;
    while ((x & 1) == 0 && v < nbits) {
        x >>= 1;
        ++v;
    }
    return v;
}

uint32_t inv_odd_u32(uint32_t a, int nbits) {
    uint32_t mask = nbits >= 32 ? ~0u : ((1u << nbits) - 1);
    uint32_t x = 1;
    for (int bits = 1; bits < nbits; bits *= 2)
        x = (x * (2 - a * x)) & mask;
    return x & mask;
}

HowellBasis::HowellBasis(int ncols, int nbits) : ncols_(ncols), nbits_(nbits) {
    if (nbits < 1 || nbits > 31)
        throw std::invalid_argument("HowellBasis: nbits must be in [1, 31]");
    mask_ = (1u << nbits) - 1;
    col_to_row_.assign(ncols, -1);
}

void HowellBasis::check_cols(const Row& row) const {
    if (int(row.size()) != ncols_)
        throw std::invalid_argument("HowellBasis: ambient dimension mismatch");
}

namespace {

void subtract_scaled(Row& row, const Row& pivot, uint32_t m, uint32_t mask) {
    size_t n = row.size();
    for (size_t i = 0; i < n; ++i)
        row[i] = (row[i] - m * pivot[i]) & mask;
}

int leading_col(const Row& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i])
            return int(i);
    return -1;
}

} // namespace

bool HowellBasis::reduce(Row& row) const {
    check_cols(row);
    for (int j = 0; j < ncols_; ++j) {
        row[j] &= mask_;
        if (row[j] == 0)
            continue;
        int r = col_to_row_[j];
        if (r < 0)
            return false;
        int v = val2_u32(row[j], nbits_);
        if (v < pivot_val_[r])
            return false;
        subtract_scaled(row, rows_[r], row[j] >> pivot_val_[r], mask_);
    }
    return true;
}

bool HowellBasis::contains(Row row) const { return reduce(row); }

bool HowellBasis::insert(Row row) {
    check_cols(row);
    bool grew = false;
    std::deque<Row> queue;
    queue.push_back(std::move(row));
    while (!queue.empty()) {
        Row cur = std::move(queue.front());
        queue.pop_front();
        for (auto& x : cur)
            x &= mask_;
        int j = 0;
        while (j < ncols_) {
            if (cur[j] == 0) {
                ++j;
                continue;
            }
            int r = col_to_row_[j];
            int v = val2_u32(cur[j], nbits_);
            if (r >= 0 && pivot_val_[r] <= v) {
                subtract_scaled(cur, rows_[r], cur[j] >> pivot_val_[r], mask_);
                ++j;
                continue;
            }
            // normalize the leading entry to a pure power of two
            uint32_t unit = cur[j] >> v;
            uint32_t uinv = inv_odd_u32(unit, nbits_);
            for (auto& x : cur)
                x = (x * uinv) & mask_;
            if (r >= 0) {
                // new row becomes the pivot; old pivot row is re-inserted
                std::swap(cur, rows_[r]);
                std::swap(v, pivot_val_[r]);
                queue.push_back(std::move(cur));
                grew = true;
                if (pivot_val_[r] > 0) {
                    Row ann = rows_[r];
                    uint32_t shift = 1u << (nbits_ - pivot_val_[r]);
                    for (auto& x : ann)
                        x = (x * shift) & mask_;
                    queue.push_back(std::move(ann));
                }
                break;
            }
            // install new pivot
            int idx = 0;
            while (idx < int(rows_.size()) && leading_col(rows_[idx]) < j)
                ++idx;
            rows_.insert(rows_.begin() + idx, cur);
            pivot_val_.insert(pivot_val_.begin() + idx, v);
            for (int c = 0; c < ncols_; ++c)
                if (col_to_row_[c] >= idx)
                    col_to_row_[c] += 1;
            col_to_row_[j] = idx;
            grew = true;
            if (v > 0) {
                Row ann = cur;
                uint32_t shift = 1u << (nbits_ - v);
                for (auto& x : ann)
                    x = (x * shift) & mask_;
                queue.push_back(std::move(ann));
            }
            break;
        }
    }
    return grew;
}

void HowellBasis::canonicalize() {
    for (size_t r = 0; r < rows_.size(); ++r) {
        int j = leading_col(rows_[r]);
        int v = pivot_val_[r];
        for (size_t s = 0; s < rows_.size(); ++s) {
            if (s == r || rows_[s][j] == 0)
                continue;
            uint32_t q = rows_[s][j] >> v;
            if (q)
                subtract_scaled(rows_[s], rows_[r], q, mask_);
        }
    }
}

bool HowellBasis::includes(const HowellBasis& other) const {
    if (other.ncols_ != ncols_ || other.nbits_ != nbits_)
        return false;
    for (const auto& r : other.rows_)
        if (!contains(r))
            return false;
    return true;
}

bool HowellBasis::equal_span(const HowellBasis& other) const {
    return ncols_ == other.ncols_ && nbits_ == other.nbits_ && rows_ == other.rows_;
}

} // namespace morava
