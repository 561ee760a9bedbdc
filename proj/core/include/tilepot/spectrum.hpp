#pragma once

// Exact rational construction matrix of a pot, its parametric solution
// set (the spectrum), and minimum-usage-order computation via bounded
// integer enumeration. All arithmetic in this module is exact rational
// (GMP); floating point is deliberately absent.

#include "tilepot/pot.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace tilepot {

using Rational = mpq_class;

// (B+1) x (p+1) augmented matrix: row i < B holds the net un-hatted
// minus hatted arm count of bond type i on each tile, last row all ones,
// augmented column (0, ..., 0, 1). Rows follow natural bond-type order,
// columns follow pot tile order.
struct ConstructionMatrix {
    std::vector<std::string> bond_types; // row labels, natural order
    std::vector<std::vector<Rational>> rows; // includes sum row + aug col

    std::size_t tile_count() const {
        return rows.empty() ? 0 : rows.front().size() - 1;
    }
};

ConstructionMatrix construction_matrix(const Pot& pot);

// Parametric solution set {particular + sum c_k * basis[k]}; a solution
// is admissible when all components are rationals in [0,1] summing to 1
// (the particular already sums to 1 and each basis vector sums to 0).
// empty == true means the linear system is inconsistent: the pot
// realizes nothing.
struct Spectrum {
    bool empty = false;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> free_columns; // column index per basis vector
};

Spectrum solve_spectrum(const ConstructionMatrix& matrix);

// Nonnegative integer tile counts with zero net arm count per bond type.
struct UsageVector {
    std::vector<long long> counts;
    long long order = 0;
};

// All usage vectors of exactly order n, in lexicographic count order.
std::vector<UsageVector> usage_vectors_of_order(const Pot& pot, long long n);

// Smallest order N <= cap admitting a usage vector, with the
// lexicographically smallest vector at that order.
std::optional<UsageVector> min_usage_order(const Pot& pot, long long cap);

} // namespace tilepot
