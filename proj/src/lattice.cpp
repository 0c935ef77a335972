#include "daxcalc/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace daxcalc {

namespace {

// a <- a - q*b, entrywise.
void axpy_sub(IntVector& a, const mpz_class& q, const IntVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= q * b[i];
}

mpz_class floor_div(const mpz_class& n, const mpz_class& d)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

} // namespace

HermiteBasis column_hermite_form(std::vector<IntVector> cols, std::size_t rows)
{
    for (const IntVector& c : cols)
        if (c.size() != rows)
            throw std::invalid_argument("generator length does not match lattice dimension");

    HermiteBasis out;
    out.rows = rows;
    std::size_t piv = 0;
    for (std::size_t r = 0; r < rows && piv < cols.size(); ++r) {
        std::size_t first = piv;
        while (first < cols.size() && cols[first][r] == 0)
            ++first;
        if (first == cols.size())
            continue;
        std::swap(cols[piv], cols[first]);

        // Unimodular 2x2 column operations fold every gcd into column piv.
        for (std::size_t j = piv + 1; j < cols.size(); ++j) {
            if (cols[j][r] == 0)
                continue;
            mpz_class a = cols[piv][r], b = cols[j][r], g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const mpz_class a_g = a / g, b_g = b / g;
            IntVector new_piv(rows), new_j(rows);
            for (std::size_t i = 0; i < rows; ++i) {
                new_piv[i] = s * cols[piv][i] + t * cols[j][i];
                new_j[i] = a_g * cols[j][i] - b_g * cols[piv][i];
            }
            cols[piv] = std::move(new_piv);
            cols[j] = std::move(new_j);
        }
        if (cols[piv][r] < 0)
            for (mpz_class& e : cols[piv])
                e = -e;
        for (std::size_t k = 0; k < piv; ++k) {
            mpz_class q = floor_div(cols[k][r], cols[piv][r]);
            if (q != 0)
                axpy_sub(cols[k], q, cols[piv]);
        }
        out.pivot_rows.push_back(r);
        ++piv;
    }
    cols.resize(piv);
    out.columns = std::move(cols);
    return out;
}

IntVector reduce_mod_lattice(IntVector v, const HermiteBasis& basis)
{
    if (v.size() != basis.rows)
        throw std::invalid_argument("vector length does not match lattice dimension");
    for (std::size_t k = 0; k < basis.rank(); ++k) {
        const std::size_t r = basis.pivot_rows[k];
        mpz_class q = floor_div(v[r], basis.columns[k][r]);
        if (q != 0)
            axpy_sub(v, q, basis.columns[k]);
    }
    return v;
}

} // namespace daxcalc
