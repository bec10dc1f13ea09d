#include <modp/reference_tables.hpp>

namespace modp {

const std::vector<ReferenceCell> & reference_mod3_table()
{
    static const std::vector<ReferenceCell> cells{
        {3, 2, 0, 2},
        {3, 2, 1, 1},
        {3, 2, 2, 0},
        {3, 3, 0, 3},
        {3, 3, 1, 2},
        {3, 3, 2, 1},
        {3, 3, 3, 0},
        {3, 4, 0, 4},
        {3, 4, 1, 2},
        {3, 4, 2, 1},
        {3, 4, 3, 1},
        {3, 4, 4, 0},
        {3, 5, 0, 5},
        {3, 5, 1, 3},
        {3, 5, 2, 2},
        {3, 5, 3, 1},
        {3, 5, 4, 1},
        {3, 5, 5, 0},
        {3, 6, 0, 6},
        {3, 6, 1, 4},
        {3, 6, 2, 3},
        {3, 6, 3, 2},
        {3, 6, 4, 1},
        {3, 6, 5, 1},
        {3, 6, 6, 0},
        {3, 7, 0, 7},
        {3, 7, 1, 5},
        {3, 7, 2, 4},
        {3, 7, 3, 3},
        {3, 7, 4, 2},
        {3, 7, 5, 1},
        {3, 7, 6, 1},
        {3, 7, 7, 0},
        {3, 8, 0, 8},
        {3, 8, 1, 6},
        {3, 8, 2, 5},
        {3, 8, 3, 4},
        {3, 8, 4, 3},
        {3, 8, 5, 1},
        {3, 8, 6, 1},
        {3, 8, 7, 1},
        {3, 8, 8, 0},
        {3, 9, 0, 9},
        {3, 9, 1, 7},
        {3, 9, 2, 6},
        {3, 9, 3, 5},
        {3, 9, 4, 4},
        {3, 9, 5, 2},
        {3, 9, 6, 1},
        {3, 9, 7, 1},
        {3, 9, 8, 1},
        {3, 9, 9, 0},
        {3, 10, 0, 10},
        {3, 10, 1, 8},
        {3, 10, 8, 1},
        {3, 10, 9, 1},
        {3, 10, 10, 0},
    };
    return cells;
}

const std::vector<ReferenceCell> & reference_small_prime_table()
{
    static const std::vector<ReferenceCell> cells{
        {2, 2, 1, 1},
        {3, 2, 1, 1},
        {5, 2, 1, 1},
        {7, 2, 1, 1},
        {2, 2, 2, 0},
        {3, 2, 2, 0},
        {5, 2, 2, 0},
        {7, 2, 2, 0},
        {2, 3, 1, 1},
        {3, 3, 1, 2},
        {5, 3, 1, 2},
        {7, 3, 1, 2},
        {2, 3, 2, 1},
        {3, 3, 2, 1},
        {5, 3, 2, 1},
        {7, 3, 2, 1},
        {2, 3, 3, 0},
        {3, 3, 3, 0},
        {5, 3, 3, 0},
        {7, 3, 3, 0},
        {2, 4, 1, 2},
        {3, 4, 1, 2},
        {5, 4, 1, 3},
        {7, 4, 1, 3},
        {2, 4, 2, 1},
        {3, 4, 2, 1},
        {5, 4, 2, 2},
        {7, 4, 2, 2},
        {2, 4, 3, 1},
        {3, 4, 3, 1},
        {5, 4, 3, 1},
        {7, 4, 3, 1},
        {2, 4, 4, 0},
        {3, 4, 4, 0},
        {5, 4, 4, 0},
        {7, 4, 4, 0},
        {2, 5, 1, 3},
        {3, 5, 1, 3},
        {5, 5, 1, 4},
        {7, 5, 1, 4},
        {2, 5, 2, 2},
        {3, 5, 2, 2},
        {5, 5, 2, 3},
        {7, 5, 2, 3},
        {2, 5, 3, 1},
        {3, 5, 3, 1},
        {5, 5, 3, 2},
        {7, 5, 3, 2},
        {2, 5, 4, 1},
        {3, 5, 4, 1},
        {5, 5, 4, 1},
        {7, 5, 4, 1},
        {2, 5, 5, 0},
        {3, 5, 5, 0},
        {5, 5, 5, 0},
        {7, 5, 5, 0},
        {2, 6, 1, 4},
        {3, 6, 1, 4},
        {5, 6, 1, 5},
        {7, 6, 1, 5},
        {2, 6, 2, 3},
        {3, 6, 2, 3},
        {5, 6, 2, 4},
        {7, 6, 2, 4},
        {2, 6, 3, 1},
        {3, 6, 3, 2},
        {5, 6, 3, 2},
        {7, 6, 3, 3},
        {2, 6, 4, 1},
        {3, 6, 4, 1},
        {5, 6, 4, 1},
        {7, 6, 4, 2},
        {2, 6, 5, 1},
        {3, 6, 5, 1},
        {5, 6, 5, 1},
        {7, 6, 5, 1},
        {2, 6, 6, 0},
        {3, 6, 6, 0},
        {5, 6, 6, 0},
        {7, 6, 6, 0},
        {2, 7, 1, 4},
        {3, 7, 1, 5},
        {5, 7, 1, 5},
        {7, 7, 1, 6},
        {2, 7, 2, 4},
        {3, 7, 2, 4},
        {5, 7, 2, 4},
        {7, 7, 2, 5},
        {2, 7, 3, 2},
        {3, 7, 3, 3},
        {5, 7, 3, 3},
        {7, 7, 3, 4},
        {2, 7, 4, 1},
        {3, 7, 4, 2},
        {5, 7, 4, 2},
        {7, 7, 4, 3},
        {2, 7, 5, 1},
        {3, 7, 5, 1},
        {5, 7, 5, 1},
        {7, 7, 5, 2},
        {2, 7, 6, 1},
        {3, 7, 6, 1},
        {5, 7, 6, 1},
        {7, 7, 6, 1},
        {2, 7, 7, 0},
        {3, 7, 7, 0},
        {5, 7, 7, 0},
        {7, 7, 7, 0},
        {2, 8, 1, 5},
        {3, 8, 1, 6},
        {5, 8, 1, 6},
        {7, 8, 1, 6},
        {2, 8, 2, 4},
        {3, 8, 2, 5},
        {5, 8, 2, 5},
        {2, 8, 3, 2},
        {3, 8, 3, 4},
        {5, 8, 3, 4},
        {2, 8, 4, 2},
        {3, 8, 4, 3},
        {5, 8, 4, 3},
        {2, 8, 5, 1},
        {3, 8, 5, 1},
        {5, 8, 5, 2},
        {2, 8, 6, 1},
        {3, 8, 6, 1},
        {5, 8, 6, 1},
        {7, 8, 6, 1},
        {2, 8, 7, 1},
        {3, 8, 7, 1},
        {5, 8, 7, 1},
        {7, 8, 7, 1},
        {2, 8, 8, 0},
        {3, 8, 8, 0},
        {5, 8, 8, 0},
        {7, 8, 8, 0},
        {2, 9, 1, 6},
        {3, 9, 1, 7},
        {5, 9, 1, 7},
        {7, 9, 1, 7},
        {2, 9, 2, 5},
        {3, 9, 2, 6},
        {2, 9, 3, 3},
        {3, 9, 3, 5},
        {2, 9, 4, 2},
        {3, 9, 4, 4},
        {2, 9, 5, 1},
        {3, 9, 5, 2},
        {2, 9, 6, 1},
        {3, 9, 6, 1},
        {2, 9, 7, 1},
        {3, 9, 7, 1},
        {5, 9, 7, 1},
        {7, 9, 7, 1},
        {2, 9, 8, 1},
        {3, 9, 8, 1},
        {5, 9, 8, 1},
        {7, 9, 8, 1},
        {2, 9, 9, 0},
        {3, 9, 9, 0},
        {5, 9, 9, 0},
        {7, 9, 9, 0},
    };
    return cells;
}

std::optional<int> reference_value(const std::vector<ReferenceCell> & table, int p, int m, int k)
{
    for (const auto & c : table)
        if (c.p == p && c.m == m && c.k == k)
            return c.value;
    return std::nullopt;
}

const std::vector<UniversalClaim> & reference_universal_claims()
{
    static const std::vector<UniversalClaim> claims{
        {2, 4, 3, 10, false, true},
        {2, 4, 5, 11, false, true},
        {2, 4, 7, 11, false, true},
        {3, 3, 2, 21, false, true},
        // Rests on a vertex-degree comparison that does not by itself rule
        // out non-adjacent neighbours sharing an image.
        {3, 4, 2, 73, true, false},
    };
    return claims;
}

} // namespace modp
