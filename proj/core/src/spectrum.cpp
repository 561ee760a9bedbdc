#include "tilepot/spectrum.hpp"

#include <algorithm>

namespace tilepot {

namespace {

// Integer net-arm matrix: one row per bond type (natural order), one
// column per tile. Shared by the matrix builder and usage enumeration.
std::vector<std::vector<long long>> net_matrix(const Pot& pot) {
    const auto& types = pot.bond_types();
    std::vector<std::vector<long long>> z(
        types.size(), std::vector<long long>(pot.tile_count(), 0));
    for (std::size_t j = 0; j < pot.tile_count(); ++j) {
        for (const auto& [label, count] : pot.tiles()[j].arms()) {
            auto row = static_cast<std::size_t>(
                std::find(types.begin(), types.end(), label.bond_type) -
                types.begin());
            z[row][j] += label.hatted ? -count : count;
        }
    }
    return z;
}

} // namespace

ConstructionMatrix construction_matrix(const Pot& pot) {
    ConstructionMatrix m;
    m.bond_types = pot.bond_types();
    auto z = net_matrix(pot);
    const std::size_t p = pot.tile_count();
    for (const auto& row : z) {
        std::vector<Rational> r(p + 1, 0);
        for (std::size_t j = 0; j < p; ++j)
            r[j] = static_cast<long>(row[j]);
        m.rows.push_back(std::move(r));
    }
    std::vector<Rational> ones(p + 1, 1);
    m.rows.push_back(std::move(ones));
    return m;
}

Spectrum solve_spectrum(const ConstructionMatrix& matrix) {
    // Gauss-Jordan over exact rationals with deterministic pivoting:
    // leftmost nonzero column, smallest untouched row index.
    auto rows = matrix.rows;
    const std::size_t p = matrix.tile_count();
    const std::size_t ncols = p + 1;

    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot_col(ncols, false);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < p && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        Rational inv = rows[pivot_row][col];
        for (auto& x : rows[pivot_row]) x /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            Rational factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] -= factor * rows[pivot_row][c];
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++pivot_row;
    }

    Spectrum s;
    // Inconsistency: a zero row with nonzero augmented entry.
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][p] != 0) {
            s.empty = true;
            return s;
        }
    }

    s.particular.assign(p, 0);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        s.particular[pivot_col_of_row[r]] = rows[r][p];

    for (std::size_t col = 0; col < p; ++col) {
        if (is_pivot_col[col]) continue;
        std::vector<Rational> v(p, 0);
        v[col] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = -rows[r][col];
        s.basis.push_back(std::move(v));
        s.free_columns.push_back(col);
    }
    return s;
}

namespace {

// Depth-first enumeration of nonnegative integer solutions to
// Z * counts = 0 with sum(counts) = n, in lexicographic order, with
// interval pruning per bond type on the achievable remaining range.
void enumerate_usages(const std::vector<std::vector<long long>>& z,
                      long long n,
                      std::size_t j,
                      long long remaining,
                      std::vector<long long>& counts,
                      std::vector<long long>& partial,
                      const std::vector<std::vector<long long>>& max_pos,
                      const std::vector<std::vector<long long>>& min_neg,
                      std::vector<UsageVector>& out,
                      bool first_only) {
    const std::size_t rows = z.size();
    if (first_only && !out.empty()) return;
    if (j == counts.size()) {
        if (remaining != 0) return;
        for (std::size_t i = 0; i < rows; ++i)
            if (partial[i] != 0) return;
        out.push_back(UsageVector{counts, n});
        return;
    }
    for (long long c = 0; c <= remaining; ++c) {
        counts[j] = c;
        for (std::size_t i = 0; i < rows; ++i) partial[i] += c * z[i][j];
        long long rest = remaining - c;
        bool ok = true;
        for (std::size_t i = 0; i < rows; ++i) {
            // Future tiles can add at most rest * best positive coeff and
            // at least rest * worst negative coeff of this bond type.
            long long hi = partial[i] + rest * max_pos[i][j + 1];
            long long lo = partial[i] + rest * min_neg[i][j + 1];
            if (lo > 0 || hi < 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            enumerate_usages(z, n, j + 1, rest, counts, partial, max_pos,
                             min_neg, out, first_only);
        for (std::size_t i = 0; i < rows; ++i) partial[i] -= c * z[i][j];
        if (first_only && !out.empty()) {
            counts[j] = 0;
            return;
        }
    }
    counts[j] = 0;
}

std::vector<UsageVector> usages(const Pot& pot, long long n, bool first_only) {
    auto z = net_matrix(pot);
    const std::size_t p = pot.tile_count();
    const std::size_t rows = z.size();
    // Suffix extrema of coefficients, for pruning.
    std::vector<std::vector<long long>> max_pos(rows, std::vector<long long>(p + 1, 0));
    std::vector<std::vector<long long>> min_neg(rows, std::vector<long long>(p + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = p; j-- > 0;) {
            max_pos[i][j] = std::max(max_pos[i][j + 1], std::max(0LL, z[i][j]));
            min_neg[i][j] = std::min(min_neg[i][j + 1], std::min(0LL, z[i][j]));
        }
    }
    std::vector<long long> counts(p, 0), partial(rows, 0);
    std::vector<UsageVector> out;
    enumerate_usages(z, n, 0, n, counts, partial, max_pos, min_neg, out,
                     first_only);
    return out;
}

} // namespace

std::vector<UsageVector> usage_vectors_of_order(const Pot& pot, long long n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    return usages(pot, n, false);
}

std::optional<UsageVector> min_usage_order(const Pot& pot, long long cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    for (long long n = 1; n <= cap; ++n) {
        auto found = usages(pot, n, true);
        if (!found.empty()) return found.front();
    }
    return std::nullopt;
}

} // namespace tilepot
