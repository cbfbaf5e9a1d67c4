#ifndef CORRHOM_GF2_HH
#define CORRHOM_GF2_HH

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace corrhom
{
    // u |-> coeff_a*u_a + coeff_b*u_b + constant over GF(2), where
    // (u_a, u_b) are the two bit coordinates of a 4-element labeled set.
    struct AffineForm
    {
        int coeff_a = 0;
        int coeff_b = 0;
        int constant = 0;

        int eval(int pos) const
        {
            return (coeff_a * ((pos >> 1) & 1) + coeff_b * (pos & 1) + constant) & 1;
        }

        bool operator==(const AffineForm &) const = default;
    };

    // Fits an affine form matching the given value at every bit position
    // 0..3; throws InternalError when the values are not affine.
    AffineForm fit_affine(const std::array<int, 4> & value_at_pos);

    // The form evaluating to 0 on the part containing position 00 and 1 on
    // the other part, for a partition of {00,01,10,11} into two pairs.
    // Every such partition is a coset pair, so the fit always exists.
    AffineForm partition_to_affine(const std::array<int, 2> & part_with_00,
        const std::array<int, 2> & other_part);

    // Rows of bit coefficients with a right-hand side, over numVars
    // variables. For the edge encodings every row touches the bits of at
    // most two input vertices.
    struct LinearSystem
    {
        int num_vars = 0;
        std::vector<std::vector<std::uint64_t>> rows;
        std::vector<int> rhs;

        void add_row(const std::vector<int> & vars_on, int rhs_bit);
        bool row_gets(int row, int var) const
        {
            return (rows[row][var >> 6] >> (var & 63)) & 1;
        }
    };

    struct Gf2Solution
    {
        bool satisfiable = false;
        std::vector<int> assignment;   // free variables pinned to 0
        int rank = 0;
        // 2^(num_vars - rank) when satisfiable, saturating at cap
        std::int64_t count(std::int64_t cap) const;
        int num_vars = 0;
    };

    // Gaussian elimination; deterministic (first available pivot column).
    Gf2Solution solve_linear_gf2(const LinearSystem & system);
}

#endif
