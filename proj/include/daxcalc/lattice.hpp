#pragma once

// Column-style Hermite normal form of an integer lattice and reduction of
// integer vectors to the coset box it defines.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace daxcalc {

using IntVector = std::vector<mpz_class>;

/// Echelon basis of a lattice in Z^rows. Column k has its first nonzero
/// entry, positive, at pivot_rows[k]; pivot rows strictly increase; every
/// other column's entry in a pivot row lies in [0, pivot) for earlier columns.
struct HermiteBasis {
    std::size_t rows = 0;
    std::vector<IntVector> columns;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const { return columns.size(); }
};

/// HNF of the lattice spanned by `generators` (each of length `rows`).
HermiteBasis column_hermite_form(std::vector<IntVector> generators, std::size_t rows);

/// Reduces `v` modulo the lattice so that each pivot-row coordinate lies in
/// [0, pivot). The result is the same for every member of a coset.
IntVector reduce_mod_lattice(IntVector v, const HermiteBasis& basis);

} // namespace daxcalc
