#include "ftables.hpp"

namespace catwb::detail {

namespace {

// {k, l, num, den, factors}: coefficient of x^k y^l is num/den times the product of the
// factors, each factor a polynomial in m with ascending integer coefficients.
const std::vector<TableEntry> h3 = {
    {0, 0, 1, 1, {}},
    {0, 1, 3, 1, {}},
    {0, 2, 3, 1, {}},
    {0, 3, 1, 1, {}},
    {1, 0, 15, 1, {{0, 1}}},
    {1, 1, 10, 1, {{0, 1}}},
    {1, 2, 3, 1, {{0, 1}}},
    {2, 0, 5, 1, {{0, 1}, {2, 5}}},
    {2, 1, 1, 1, {{0, 1}, {2, 5}}},
    {3, 0, 1, 3, {{0, 1}, {2, 5}, {4, 5}}},
};

const std::vector<TableEntry> h4 = {
    {0, 0, 1, 1, {}},
    {0, 1, 4, 1, {}},
    {0, 2, 6, 1, {}},
    {0, 3, 4, 1, {}},
    {0, 4, 1, 1, {}},
    {1, 0, 60, 1, {{0, 1}}},
    {1, 1, 31, 1, {{0, 1}}},
    {1, 2, 17, 1, {{0, 1}}},
    {1, 3, 4, 1, {{0, 1}}},
    {2, 0, 1, 2, {{0, 1}, {149, 465}}},
    {2, 1, 1, 1, {{0, 1}, {14, 45}}},
    {2, 2, 1, 2, {{0, 1}, {5, 17}}},
    {3, 0, 15, 1, {{0, 1}, {1, 3}, {3, 5}}},
    {3, 1, 1, 1, {{0, 1}, {1, 3}, {3, 5}}},
    {4, 0, 1, 4, {{0, 1}, {1, 3}, {3, 5}, {14, 15}}},
};

const std::vector<TableEntry> f4 = {
    {0, 0, 1, 1, {}},
    {0, 1, 4, 1, {}},
    {0, 2, 6, 1, {}},
    {0, 3, 4, 1, {}},
    {0, 4, 1, 1, {}},
    {1, 0, 24, 1, {{0, 1}}},
    {1, 1, 26, 1, {{0, 1}}},
    {1, 2, 16, 1, {{0, 1}}},
    {1, 3, 4, 1, {{0, 1}}},
    {2, 0, 1, 1, {{0, 1}, {23, 78}}},
    {2, 1, 2, 1, {{0, 1}, {5, 18}}},
    {2, 2, 2, 1, {{0, 1}, {1, 4}}},
    {3, 0, 12, 1, {{0, 1}, {1, 2}, {1, 3}}},
    {3, 1, 2, 1, {{0, 1}, {1, 2}, {1, 3}}},
    {4, 0, 1, 2, {{0, 1}, {1, 2}, {1, 3}, {5, 6}}},
};

const std::vector<TableEntry> e6 = {
    {0, 0, 1, 1, {}},
    {0, 1, 6, 1, {}},
    {0, 2, 15, 1, {}},
    {0, 3, 20, 1, {}},
    {0, 4, 15, 1, {}},
    {0, 5, 6, 1, {}},
    {0, 6, 1, 1, {}},
    {1, 0, 36, 1, {{0, 1}}},
    {1, 1, 84, 1, {{0, 1}}},
    {1, 2, 111, 1, {{0, 1}}},
    {1, 3, 85, 1, {{0, 1}}},
    {1, 4, 35, 1, {{0, 1}}},
    {1, 5, 6, 1, {{0, 1}}},
    {2, 0, 12, 1, {{0, 1}, {4, 21}}},
    {2, 1, 3, 1, {{0, 1}, {19, 108}}},
    {2, 2, 1, 1, {{0, 1}, {39, 242}}},
    {2, 3, 5, 1, {{0, 1}, {3, 20}}},
    {2, 4, 5, 2, {{0, 1}, {1, 7}}},
    {3, 0, 9, 1, {{0, 1}, {1, 4}, {5, 18}}},
    {3, 1, 1, 1, {{0, 1}, {1, 4}, {31, 120}}},
    {3, 2, 1, 1, {{0, 1}, {1, 4}, {11, 48}}},
    {3, 3, 5, 3, {{0, 1}, {1, 4}, {1, 5}}},
    {4, 0, 2, 1, {{0, 1}, {1, 3}, {1, 4}, {13, 30}}},
    {4, 1, 2, 1, {{0, 1}, {1, 3}, {1, 4}, {5, 12}}},
    {4, 2, 1, 2, {{0, 1}, {1, 3}, {1, 4}, {3, 8}}},
    {5, 0, 6, 5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {7, 12}}},
    {5, 1, 1, 5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {7, 12}}},
    {6, 0, 1, 30, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {5, 6}, {7, 12}}},
};

const std::vector<TableEntry> e7 = {
    {0, 0, 1, 1, {}},
    {0, 1, 7, 1, {}},
    {0, 2, 21, 1, {}},
    {0, 3, 35, 1, {}},
    {0, 4, 35, 1, {}},
    {0, 5, 21, 1, {}},
    {0, 6, 7, 1, {}},
    {0, 7, 1, 1, {}},
    {1, 0, 63, 1, {{0, 1}}},
    {1, 1, 147, 1, {{0, 1}}},
    {1, 2, 231, 1, {{0, 1}}},
    {1, 3, 231, 1, {{0, 1}}},
    {1, 4, 141, 1, {{0, 1}}},
    {1, 5, 48, 1, {{0, 1}}},
    {1, 6, 7, 1, {{0, 1}}},
    {2, 0, 21, 2, {{0, 1}, {11, 63}}},
    {2, 1, 21, 2, {{0, 1}, {13, 81}}},
    {2, 2, 21, 2, {{0, 1}, {11, 75}}},
    {2, 3, 3, 2, {{0, 1}, {43, 315}}},
    {2, 4, 3, 1, {{0, 1}, {7, 54}}},
    {2, 5, 3, 1, {{0, 1}, {1, 8}}},
    {3, 0, 21, 2, {{0, 1}, {2, 9}, {7, 27}}},
    {3, 1, 21, 2, {{0, 1}, {2, 9}, {5, 21}}},
    {3, 2, 3, 2, {{0, 1}, {2, 9}, {17, 81}}},
    {3, 3, 3, 2, {{0, 1}, {2, 9}, {5, 27}}},
    {3, 4, 1, 1, {{0, 1}, {1, 6}, {2, 9}}},
    {4, 0, 21, 8, {{0, 1}, {1, 3}, {2, 9}, {23, 63}}},
    {4, 1, 3, 8, {{0, 1}, {1, 3}, {2, 9}, {71, 207}}},
    {4, 2, 3, 8, {{0, 1}, {1, 3}, {2, 9}, {19, 63}}},
    {4, 3, 1, 8, {{0, 1}, {1, 3}, {2, 9}, {7, 27}}},
    {5, 0, 3, 40, {{0, 1}, {1, 3}, {2, 9}, {4, 9}, {103, 207}}},
    {5, 1, 3, 20, {{0, 1}, {1, 3}, {2, 9}, {4, 9}, {13, 27}}},
    {5, 2, 3, 40, {{0, 1}, {1, 3}, {3, 7}, {2, 9}, {4, 9}}},
    {6, 0, 9, 40, {{0, 1}, {1, 3}, {2, 3}, {2, 9}, {4, 9}, {5, 9}}},
    {6, 1, 1, 40, {{0, 1}, {1, 3}, {2, 3}, {2, 9}, {4, 9}, {5, 9}}},
    {7, 0, 1, 280, {{0, 1}, {1, 3}, {2, 3}, {2, 9}, {4, 9}, {5, 9}, {8, 9}}},
};

const std::vector<TableEntry> e8 = {
    {0, 0, 1, 1, {}},
    {0, 1, 8, 1, {}},
    {0, 2, 28, 1, {}},
    {0, 3, 56, 1, {}},
    {0, 4, 70, 1, {}},
    {0, 5, 56, 1, {}},
    {0, 6, 28, 1, {}},
    {0, 7, 8, 1, {}},
    {0, 8, 1, 1, {}},
    {1, 0, 120, 1, {{0, 1}}},
    {1, 1, 245, 1, {{0, 1}}},
    {1, 2, 435, 1, {{0, 1}}},
    {1, 3, 532, 1, {{0, 1}}},
    {1, 4, 428, 1, {{0, 1}}},
    {1, 5, 217, 1, {{0, 1}}},
    {1, 6, 63, 1, {{0, 1}}},
    {1, 7, 8, 1, {{0, 1}}},
    {2, 0, 35, 2, {{0, 1}, {17, 105}}},
    {2, 1, 75, 1, {{0, 1}, {4, 27}}},
    {2, 2, 1, 2, {{0, 1}, {579, 4295}}},
    {2, 3, 4, 1, {{0, 1}, {52, 415}}},
    {2, 4, 1, 2, {{0, 1}, {199, 1675}}},
    {2, 5, 7, 1, {{0, 1}, {4, 35}}},
    {2, 6, 7, 2, {{0, 1}, {1, 9}}},
    {3, 0, 45, 1, {{0, 1}, {1, 5}, {11, 45}}},
    {3, 1, 1, 1, {{0, 1}, {1, 5}, {307, 1380}}},
    {3, 2, 1, 1, {{0, 1}, {1, 5}, {178, 915}}},
    {3, 3, 1, 3, {{0, 1}, {1, 5}, {226, 1315}}},
    {3, 4, 1, 3, {{0, 1}, {1, 5}, {59, 380}}},
    {3, 5, 7, 3, {{0, 1}, {1, 5}, {1, 7}}},
    {4, 0, 1, 2, {{0, 1}, {1, 5}, {1084, 6675, 10350}}},
    {4, 1, 1, 1, {{0, 1}, {1, 5}, {218, 1395, 2250}}},
    {4, 2, 1, 4, {{0, 1}, {1, 5}, {308, 2125, 3675}}},
    {4, 3, 1, 1, {{0, 1}, {1, 5}, {3, 10}, {6, 25}}},
    {4, 4, 1, 6, {{0, 1}, {1, 5}, {3, 10}, {4, 19}}},
    {5, 0, 15, 1, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {13, 30}}},
    {5, 1, 25, 8, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {16, 39}}},
    {5, 2, 5, 8, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {16, 45}}},
    {5, 3, 1, 3, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {3, 10}}},
    {6, 0, 5, 48, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {8, 15}, {107, 195}}},
    {6, 1, 5, 24, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {8, 15}, {8, 15}}},
    {6, 2, 1, 48, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {7, 15}, {8, 15}}},
    {7, 0, 5, 56, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {3, 5}, {8, 15}, {11, 15}}},
    {7, 1, 1, 168, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {3, 5}, {8, 15}, {11, 15}}},
    {8, 0, 1, 1344, {{0, 1}, {1, 3}, {1, 5}, {2, 5}, {3, 5}, {8, 15}, {11, 15}, {14, 15}}},
};

} // namespace

const std::vector<TableEntry>* exceptional_table(Family f, int n)
{
    switch (f) {
    case Family::H: return n == 3 ? &h3 : n == 4 ? &h4 : nullptr;
    case Family::F: return n == 4 ? &f4 : nullptr;
    case Family::E: return n == 6 ? &e6 : n == 7 ? &e7 : n == 8 ? &e8 : nullptr;
    default: return nullptr;
    }
}

} // namespace catwb::detail
