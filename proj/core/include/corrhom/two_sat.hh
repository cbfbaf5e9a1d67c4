#ifndef CORRHOM_TWO_SAT_HH
#define CORRHOM_TWO_SAT_HH

#include <optional>
#include <vector>

namespace corrhom
{
    // Width <= 2 clauses over boolean variables, solved through the
    // implication graph's strongly connected components. Deterministic.
    struct TwoSat
    {
        explicit TwoSat(int num_vars);

        static int pos(int var) { return 2 * var; }
        static int neg(int var) { return 2 * var + 1; }

        void add_clause(int lit_a, int lit_b);
        void add_unit(int lit) { add_clause(lit, lit); }

        // A satisfying assignment, or nullopt when unsatisfiable.
        std::optional<std::vector<char>> solve() const;

      private:
        int num_vars_;
        std::vector<std::vector<int>> implications_;
    };
}

#endif
