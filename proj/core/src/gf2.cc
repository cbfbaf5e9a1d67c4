#include <corrhom/gf2.hh>
#include <corrhom/errors.hh>

namespace corrhom
{
    AffineForm fit_affine(const std::array<int, 4> & value_at_pos)
    {
        AffineForm f;
        f.constant = value_at_pos[0] & 1;            // position 00
        f.coeff_b = (value_at_pos[1] ^ f.constant) & 1;
        f.coeff_a = (value_at_pos[2] ^ f.constant) & 1;
        if (f.eval(3) != (value_at_pos[3] & 1))
            throw InternalError("four-point fit is not affine; labels are corrupt");
        return f;
    }

    AffineForm partition_to_affine(const std::array<int, 2> & part_with_00,
        const std::array<int, 2> & other_part)
    {
        std::array<int, 4> seen{0, 0, 0, 0};
        std::array<int, 4> value{};
        for (int pos : part_with_00) {
            value[pos] = 0;
            ++seen[pos];
        }
        for (int pos : other_part) {
            value[pos] = 1;
            ++seen[pos];
        }
        if (seen != std::array<int, 4>{1, 1, 1, 1} || value[0] != 0)
            throw InternalError("not a two-pair partition with 00 in the first part");
        AffineForm f = fit_affine(value);
        if (f.coeff_a == 0 && f.coeff_b == 0)
            throw InternalError("partition fit degenerated to a constant");
        return f;
    }

    void LinearSystem::add_row(const std::vector<int> & vars_on, int rhs_bit)
    {
        std::vector<std::uint64_t> row((num_vars + 63) / 64, 0);
        for (int v : vars_on)
            row[v >> 6] ^= std::uint64_t{1} << (v & 63);
        rows.push_back(std::move(row));
        rhs.push_back(rhs_bit & 1);
    }

    std::int64_t Gf2Solution::count(std::int64_t cap) const
    {
        if (! satisfiable)
            return 0;
        int free_vars = num_vars - rank;
        std::int64_t c = 1;
        for (int i = 0; i < free_vars; ++i) {
            c *= 2;
            if (c >= cap)
                return cap;
        }
        return c < cap ? c : cap;
    }

    Gf2Solution solve_linear_gf2(const LinearSystem & system)
    {
        Gf2Solution sol;
        sol.num_vars = system.num_vars;

        int words = (system.num_vars + 63) / 64;
        std::vector<std::vector<std::uint64_t>> m = system.rows;
        std::vector<int> b = system.rhs;
        for (auto & row : m)
            row.resize(words, 0);

        std::vector<int> pivot_of_row;
        int r = 0;
        for (int col = 0; col < system.num_vars && r < static_cast<int>(m.size()); ++col) {
            int sel = -1;
            for (int i = r; i < static_cast<int>(m.size()); ++i)
                if ((m[i][col >> 6] >> (col & 63)) & 1) {
                    sel = i;
                    break;
                }
            if (sel < 0)
                continue;
            std::swap(m[r], m[sel]);
            std::swap(b[r], b[sel]);
            for (int i = 0; i < static_cast<int>(m.size()); ++i) {
                if (i == r)
                    continue;
                if ((m[i][col >> 6] >> (col & 63)) & 1) {
                    for (int w = 0; w < words; ++w)
                        m[i][w] ^= m[r][w];
                    b[i] ^= b[r];
                }
            }
            pivot_of_row.push_back(col);
            ++r;
        }

        for (int i = r; i < static_cast<int>(m.size()); ++i) {
            bool zero = true;
            for (int w = 0; w < words; ++w)
                if (m[i][w]) {
                    zero = false;
                    break;
                }
            if (zero && b[i])
                return sol;   // 0 = 1
        }

        sol.satisfiable = true;
        sol.rank = r;
        sol.assignment.assign(system.num_vars, 0);
        for (int i = 0; i < r; ++i)
            sol.assignment[pivot_of_row[i]] = b[i];
        return sol;
    }
}
