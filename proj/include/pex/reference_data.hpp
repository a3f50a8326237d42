#pragma once

#include <span>
#include <string>
#include <vector>

#include "pex/perm_array.hpp"
#include "pex/pa_io.hpp"

// Reference datasets bundled for regression comparison: previously published
// lower-bound tables for M(n,d), the handful of MOLS counts the bounds
// machinery needs, and the published construction inputs that the
// integration suite reproduces. Every dataset carries a source tag; a lint
// test keeps that invariant.
namespace pex::ref {

struct RefBoundND {
    int n, d;
    long long prev, bound;
};

// d is implied by the table: n-1 for the single-extension tables, n-2 for
// the two-step table.
struct RefBoundN1 {
    int n;
    long long prev, bound;
};

struct ConjectureRow {
    int n, d;
    long long computed, conjectured;
};

struct MolsCountEntry {
    int n;
    int n_lower;
    const char* note;
};

struct DatasetInfo {
    const char* name;
    const char* source;
};

inline constexpr DatasetInfo kDatasets[] = {
    {"nd_bounds", "reference-tables/lower-bounds-nd"},
    {"n2_bounds", "reference-tables/lower-bounds-n-minus-2"},
    {"n1_bounds_lt300", "reference-tables/lower-bounds-n-minus-1-a"},
    {"n1_bounds_300_600", "reference-tables/lower-bounds-n-minus-1-b"},
    {"conjecture_exceptions", "reference-tables/conjecture-exceptions"},
    {"mols_counts", "reference-tables/mols-handbook-subset"},
    {"seq37_stage1", "reference-constructions/affine-37-two-step/stage1"},
    {"seq37_stage2", "reference-constructions/affine-37-two-step/stage2"},
    {"parallel9_blocks", "reference-constructions/nine-symbol-parallel-blocks"},
    {"pgl37_coset_reps", "reference-constructions/pgl2-37-coset-representatives"},
    {"parallel2_38_classes", "reference-constructions/pgl2-37-two-symbol-classes"},
};

// ---- published lower bounds, M(n,d) with d < n-1 ----
inline constexpr RefBoundND kNdRows[] = {
    {18, 13, 24480, 29376},
    {24, 19, 24288, 36432},
    {26, 20, 202800, 234000},
    {26, 21, 31200, 46800},
    {28, 22, 235872, 275184},
    {30, 24, 170520, 292320},
    {30, 26, 24360, 58968},
    {32, 25, 372992, 1309440},
    {33, 27, 97440, 327360},
    {34, 27, 2127840, 2455200},
    {34, 32, 192, 945},
    {38, 30, 1265400, 6529464},
    {38, 32, 202464, 303696},
    {39, 37, 255, 1301},
    {40, 34, 68880, 287437},
    {42, 34, 888729, 5028240},
    {42, 35, 206640, 1928640},
    {42, 36, 206640, 413280},
    {43, 37, 176988, 369948},
    {44, 37, 413280, 1986600},
    {44, 38, 68880, 397198},
    {45, 39, 103776, 413280},
    {45, 43, 270, 1726},
    {46, 39, 103776, 551040},
    {48, 42, 207552, 415104},
    {49, 42, 207552, 1452864},
    {49, 43, 207552, 415062},
    {50, 42, 207552, 5056800},
    {50, 43, 207552, 2116800},
    {50, 44, 103776, 470400},
    {51, 44, 235200, 687903},
    {51, 45, 235200, 470347},
    {51, 49, 392, 2308},
    {52, 46, 148824, 470397},
    {53, 47, 148824, 470400},
    {54, 46, 8036496, 8334144},
    {54, 47, 1339416, 2381184},
    {54, 48, 297648, 446472},
    {55, 48, 297648, 1488240},
    {55, 49, 297648, 446472},
    {55, 53, 423, 2461},
    {56, 50, 205320, 446472},
    {61, 54, 410640, 1181794},
    {62, 54, 821280, 8622960},
    {62, 55, 821280, 1361520},
    {63, 61, 1514, 3306},
    {66, 64, 576, 4029},
    {68, 60, 821280, 8720184},
    {68, 61, 524160, 1503480},
    {68, 62, 524160, 601392},
    {69, 62, 601392, 1500426},
    {69, 67, 594, 3965},
    {70, 63, 524160, 1503462},
    {72, 64, 888729, 6083280},
    {72, 65, 357840, 1431360},
    {75, 73, 667, 4747},
    {85, 83, 812, 6116},
    {91, 89, 902, 6709},
    {99, 97, 1017, 8206},
    {105, 103, 1119, 9239},
    {111, 109, 1187, 9990},
    {115, 113, 1277, 11142},
    {123, 121, 1452, 13996},
    {133, 131, 1554, 11604},
    {141, 139, 1723, 13522},
    {153, 151, 1923, 16118},
    {159, 157, 2051, 16666},
    {165, 163, 2185, 17632},
    {171, 169, 2354, 27330},
    {175, 173, 2354, 19792},
    {183, 181, 2533, 21994},
    {195, 193, 2758, 25022},
    {201, 199, 2867, 25427},
    {213, 211, 3170, 30288},
    {225, 223, 3421, 32728},
    {231, 229, 3548, 33779},
    {235, 233, 3625, 35001},
    {245, 243, 3475, 43717},
    {253, 251, 4075, 40094},
    {259, 257, 4222, 43268},
    {265, 263, 4342, 44733},
    {273, 271, 4548, 46268},
    {279, 277, 4701, 49243},
    {285, 283, 4868, 51571},
    {291, 289, 5202, 80385},
    {295, 293, 5088, 54572},
    {309, 307, 5539, 60715},
    {315, 313, 5634, 60952},
    {319, 317, 5793, 67379},
    {333, 331, 6091, 70696},
    {339, 337, 6280, 69485},
    {345, 343, 5205, 89272},
    {351, 349, 6642, 76195},
    {355, 353, 6746, 77215},
    {363, 361, 7220, 125709},
    {369, 367, 7108, 83418},
    {375, 373, 7298, 87434},
    {385, 383, 7428, 90213},
    {391, 389, 7690, 90991},
    {411, 409, 8240, 104098},
    {514, 512, 11264, 197859},
    {531, 529, 12696, 271043},
};

// ---- published lower bounds, M(n,n-2) ----
inline constexpr RefBoundN1 kN2Rows[] = {
    {34, 192, 945},
    {39, 255, 1301},
    {45, 270, 1726},
    {51, 392, 2308},
    {55, 423, 2461},
    {63, 1514, 3306},
    {66, 576, 4029},
    {69, 594, 3965},
    {75, 667, 4747},
    {85, 812, 6116},
    {91, 902, 6709},
    {99, 1017, 8206},
    {105, 1119, 9239},
    {111, 1187, 9990},
    {115, 1277, 11142},
    {123, 1452, 13996},
    {133, 1554, 11604},
    {141, 1723, 13522},
    {153, 1923, 16118},
    {159, 2051, 16666},
    {165, 2185, 17632},
    {171, 2354, 27330},
    {175, 2354, 19792},
    {183, 2533, 21994},
    {195, 2758, 25022},
    {201, 2867, 25427},
    {213, 3170, 30288},
    {225, 3421, 32728},
    {231, 3548, 33779},
    {235, 3625, 35001},
    {245, 3475, 43717},
    {253, 4075, 40094},
    {259, 4222, 43268},
    {265, 4342, 44733},
    {273, 4548, 46268},
    {279, 4701, 49243},
    {285, 4868, 51571},
    {291, 5202, 80385},
    {295, 5088, 54572},
    {309, 5539, 60715},
    {315, 5634, 60952},
    {319, 5793, 67379},
    {333, 6091, 70696},
    {339, 6280, 69485},
    {345, 5205, 89272},
    {351, 6642, 76195},
    {355, 6746, 77215},
    {363, 7220, 125709},
    {369, 7108, 83418},
    {375, 7298, 87434},
    {385, 7428, 90213},
    {391, 7690, 90991},
    {411, 8240, 104098},
    {514, 11264, 197859},
    {531, 12696, 271043},
};

// ---- published lower bounds, M(n,n-1), n < 300 ----
inline constexpr RefBoundN1 kN1aRows[] = {
    {26, 133, 150},
    {28, 140, 144},
    {30, 170, 173},
    {33, 183, 192},
    {34, 136, 165},
    {38, 254, 255},
    {42, 282, 286},
    {44, 296, 307},
    {46, 184, 270},
    {50, 300, 392},
    {51, 255, 300},
    {54, 408, 423},
    {58, 361, 399},
    {60, 481, 493},
    {62, 478, 519},
    {65, 455, 576},
    {66, 380, 455},
    {68, 568, 594},
    {72, 588, 637},
    {74, 620, 667},
    {76, 456, 525},
    {80, 720, 755},
    {82, 656, 810},
    {84, 776, 812},
    {90, 866, 902},
    {92, 552, 637},
    {98, 956, 1017},
    {102, 1030, 1101},
    {104, 1070, 1119},
    {106, 636, 735},
    {108, 1090, 1175},
    {110, 1130, 1199},
    {114, 1192, 1277},
    {116, 696, 805},
    {118, 708, 936},
    {122, 732, 1452},
    {126, 756, 1221},
    {129, 903, 1472},
    {130, 780, 903},
    {132, 1508, 1572},
    {134, 804, 931},
    {138, 1614, 1696},
    {140, 1640, 1726},
    {142, 852, 987},
    {145, 1015, 1429},
    {146, 876, 1015},
    {148, 888, 1029},
    {150, 1818, 1905},
    {152, 1832, 1946},
    {155, 1085, 1232},
    {156, 936, 1085},
    {158, 1922, 2052},
    {159, 954, 1106},
    {161, 1377, 1440},
    {162, 972, 1127},
    {164, 2042, 2185},
    {166, 1153, 1155},
    {168, 2070, 2267},
    {170, 1020, 2366},
    {172, 1032, 1368},
    {174, 2316, 2358},
    {177, 1593, 2214},
    {178, 1068, 1593},
    {180, 2404, 2500},
    {182, 1092, 2533},
    {186, 1619, 1665},
    {188, 1128, 1870},
    {190, 1140, 1512},
    {192, 2638, 2767},
    {194, 2680, 2803},
    {196, 1176, 1365},
    {198, 2786, 2870},
    {200, 2842, 2867},
    {202, 1212, 1407},
    {204, 1224, 1421},
    {206, 1236, 1640},
    {209, 2299, 2912},
    {210, 2100, 2299},
    {212, 3026, 3172},
    {214, 1284, 1491},
    {218, 1308, 1736},
    {220, 1320, 2190},
    {222, 1332, 2652},
    {224, 3260, 3475},
    {225, 1800, 2902},
    {226, 1356, 1800},
    {228, 3380, 3482},
    {230, 3512, 3567},
    {234, 3602, 3673},
    {236, 1416, 1645},
    {238, 1428, 1659},
    {240, 3656, 3803},
    {242, 3716, 3864},
    {244, 1464, 3483},
    {246, 1476, 1715},
    {248, 1736, 2964},
    {250, 1500, 1743},
    {252, 3932, 4075},
    {254, 2286, 3027},
    {255, 1785, 2286},
    {258, 4066, 4222},
    {260, 1560, 3108},
    {264, 4228, 4351},
    {266, 1862, 2120},
    {268, 1876, 2670},
    {270, 4318, 4521},
    {272, 4408, 4575},
    {274, 1644, 3873},
    {276, 2760, 3575},
    {278, 4574, 4767},
    {280, 1960, 2511},
    {282, 4684, 4863},
    {284, 4706, 4916},
    {286, 1716, 3420},
    {290, 1740, 5202},
    {294, 5068, 5088},
};

// ---- published lower bounds, M(n,n-1), 300 <= n <= 600 ----
inline constexpr RefBoundN1 kN1bRows[] = {
    {300, 2100, 3588},
    {306, 1836, 4575},
    {308, 5360, 5524},
    {312, 5436, 5660},
    {314, 2198, 5723},
    {316, 2212, 3150},
    {318, 2226, 5793},
    {322, 1932, 4815},
    {324, 2592, 5168},
    {326, 1956, 3900},
    {330, 1980, 2961},
    {332, 2324, 6105},
    {334, 2338, 2664},
    {335, 2010, 2338},
    {338, 2028, 6349},
    {340, 2040, 2373},
    {344, 2408, 6076},
    {346, 2076, 2415},
    {348, 2088, 6658},
    {350, 2800, 6714},
    {354, 2124, 6746},
    {356, 2492, 3195},
    {358, 2148, 3213},
    {360, 2520, 6965},
    {362, 2172, 7220},
    {366, 2196, 2555},
    {368, 5520, 7108},
    {370, 2952, 5535},
    {372, 2604, 5565},
    {374, 2618, 7381},
    {376, 2632, 5625},
    {378, 4524, 4901},
    {380, 2660, 7556},
    {382, 2674, 4572},
    {384, 5760, 7692},
    {386, 2702, 5775},
    {388, 3096, 5805},
    {390, 2730, 7897},
    {392, 2744, 6256},
    {398, 2786, 7940},
    {402, 2814, 8020},
    {404, 4836, 6045},
    {405, 3240, 4444},
    {406, 2842, 3240},
    {408, 4070, 6105},
    {410, 2870, 8389},
    {412, 3296, 5343},
    {414, 4140, 4956},
    {415, 3735, 4140},
    {417, 6255, 7481},
    {418, 2926, 6255},
    {420, 2940, 8744},
    {422, 2954, 8822},
    {424, 3384, 6345},
    {426, 2556, 6800},
    {430, 2580, 3003},
    {432, 6480, 9051},
    {434, 2608, 9093},
    {436, 2616, 6525},
    {438, 3066, 7866},
    {440, 3159, 9219},
    {442, 3528, 6615},
    {444, 3108, 9069},
    {446, 3122, 5785},
    {450, 3220, 9429},
    {452, 4510, 6765},
    {456, 3192, 6825},
    {458, 3206, 9644},
    {460, 3220, 7334},
    {462, 3234, 10061},
    {464, 6960, 10162},
    {466, 3262, 6975},
    {468, 3744, 10253},
    {470, 3290, 3752},
    {472, 3304, 7065},
    {474, 4740, 7095},
    {476, 3332, 8550},
    {478, 3816, 7155},
    {480, 7200, 10538},
    {482, 5772, 7215},
    {484, 3872, 7245},
    {485, 3395, 3872},
    {486, 2916, 3395},
    {488, 3416, 10714},
    {490, 2940, 7335},
    {492, 2952, 10802},
    {494, 2964, 7888},
    {498, 2988, 7455},
    {500, 3500, 11373},
    {504, 3527, 11416},
    {506, 3036, 7575},
    {508, 3556, 7605},
    {510, 3060, 11661},
    {513, 9234, 11264},
    {516, 4128, 7725},
    {518, 5170, 6204},
    {520, 4160, 7785},
    {522, 5220, 11983},
    {524, 6288, 12029},
    {526, 4208, 7875},
    {528, 7920, 8432},
    {530, 3710, 12696},
    {532, 4256, 7965},
    {534, 3738, 6396},
    {536, 4288, 8025},
    {538, 5380, 8055},
    {540, 6480, 8085},
    {542, 3794, 12443},
    {545, 8704, 9792},
    {548, 3836, 12581},
    {550, 3850, 4392},
    {552, 5220, 9918},
    {558, 3906, 13329},
    {561, 3927, 8400},
    {564, 3948, 13500},
    {566, 3396, 3955},
    {570, 3420, 13654},
    {572, 4004, 13699},
    {576, 4608, 12650},
    {578, 4046, 13848},
    {582, 4074, 4648},
    {584, 4088, 5830},
    {586, 4102, 4680},
    {588, 4116, 14088},
    {590, 10030, 10602},
    {591, 4137, 10030},
    {594, 4752, 14232},
    {596, 4172, 8925},
    {600, 8400, 14828},
};

// ---- the four published cases where the computed M(n,n-1) bound falls
// short of (n-1)*min(floor(sqrt(n-1)), N(n-1)) ----
inline constexpr ConjectureRow kConjectureExceptions[] = {
    {145, 144, 1429, 1440},
    {177, 176, 2214, 2288},
    {225, 224, 2902, 2912},
    {254, 253, 3027, 3036},
};

// ---- MOLS-count lower bounds for non-prime-power orders used by tests and
// the bound checker; prime-power orders are computed as q-1, never stored ----
inline constexpr MolsCountEntry kMolsCounts[] = {
    {117, 8, "handbook value used by the 118-symbol product construction"},
    {144, 10, "handbook value behind the conjectured 1440 bound at n=145"},
    {176, 13, "handbook value behind the conjectured 2288 bound at n=177"},
    {224, 13, "handbook value behind the conjectured 2912 bound at n=225"},
    {253, 12, "handbook value behind the conjectured 3036 bound at n=254"},
};

inline std::span<const RefBoundND> nd_bounds() { return kNdRows; }
inline std::span<const RefBoundN1> n2_bounds() { return kN2Rows; }
inline std::span<const RefBoundN1> n1_bounds_lt300() { return kN1aRows; }
inline std::span<const RefBoundN1> n1_bounds_300_600() { return kN1bRows; }
inline std::span<const ConjectureRow> conjecture_exceptions() { return kConjectureExceptions; }
inline std::span<const MolsCountEntry> mols_counts() { return kMolsCounts; }

// ---- construction fixtures ----

/// One inner system of the published two-step extension of the affine group
/// on 37 symbols: coset multipliers with aligned position classes ({37}
/// marks the append-only coset). Symbol classes are shared across systems.
struct Stage1System {
    std::vector<int> multipliers;
    std::vector<std::vector<int>> positions;
};

inline const std::vector<Stage1System>& seq37_stage1() {
    static const std::vector<Stage1System> systems = {
        {{1, 2, 3, 4, 5, 6, 7},
         {{4, 11, 18, 25, 31, 34},
          {5, 8, 10, 13, 16, 19, 21},
          {14, 20, 22, 24, 28, 30},
          {9, 12, 15, 26, 29, 32},
          {6, 7, 17, 23, 27, 33},
          {0, 1, 2, 3, 35, 36},
          {37}}},
        {{8, 9, 10, 11, 12, 13, 14},
         {{1, 12, 23, 25, 36},
          {0, 11, 13, 22, 24, 35},
          {8, 9, 10, 17, 18, 26, 27},
          {4, 5, 6, 7, 19, 20, 28},
          {14, 15, 16, 32, 33, 34},
          {2, 3, 21, 29, 30, 31},
          {37}}},
        {{15, 16, 17, 18, 19, 20, 21},
         {{2, 3, 4, 6, 15, 27},
          {12, 13, 14, 16, 17, 18, 22},
          {0, 21, 25, 28, 29, 33},
          {7, 8, 19, 20, 31, 32},
          {10, 11, 23, 24, 35, 36},
          {1, 5, 9, 26, 30, 34},
          {37}}},
        {{22, 23, 24, 25, 26, 27, 28},
         {{2, 3, 5, 9, 21, 33},
          {4, 8, 11, 22, 23, 34},
          {7, 16, 17, 25, 26, 35},
          {12, 13, 14, 30, 31, 32},
          {1, 6, 10, 15, 24, 29},
          {0, 18, 19, 20, 27, 28, 36},
          {37}}},
        {{29, 30, 31, 32, 33, 34, 35},
         {{2, 5, 13, 18, 26, 29},
          {12, 19, 21, 27, 34, 36},
          {6, 7, 8, 9, 10, 11},
          {4, 14, 15, 25, 31, 35},
          {0, 3, 16, 17, 20, 23, 33},
          {1, 22, 24, 28, 30, 32},
          {37}}},
        {{36}, {{37}}},
    };
    return systems;
}

/// Symbol classes shared by the stage-1 systems, aligned with the six
/// consuming cosets of each system; the append coset takes the {37} marker.
inline const std::vector<std::vector<int>>& seq37_symbol_classes() {
    static const std::vector<std::vector<int>> q = {
        {0, 1, 2, 3, 4, 5, 6},       {7, 8, 9, 10, 11, 12},      {13, 14, 15, 16, 17, 18},
        {19, 20, 21, 22, 23, 24},    {25, 26, 27, 28, 29, 30},   {31, 32, 33, 34, 35, 36},
    };
    return q;
}

/// Outer position/symbol classes for the second extension step, on Z_38.
/// {38} marks the append-only block (the fifth extended array).
inline const std::vector<std::vector<int>>& seq37_outer_positions() {
    static const std::vector<std::vector<int>> p = {
        {4, 11, 18, 25, 31, 34},
        {5, 8, 10, 13, 16, 19, 21},
        {14, 20, 22, 24, 28, 30},
        {9, 12, 15, 26, 29, 32},
        {38},
        {0, 1, 2, 3, 6, 7, 17, 23, 27, 33, 35, 36, 37},
    };
    return p;
}

inline const std::vector<std::vector<int>>& seq37_outer_symbols() {
    static const std::vector<std::vector<int>> q = {
        {0, 1, 2, 3, 4, 5, 6},
        {7, 8, 9, 10, 11, 12},
        {13, 14, 15, 16, 17, 18},
        {19, 20, 21, 22, 23, 24},
        {38},
        {25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37},
    };
    return q;
}

/// The published six 9-row blocks for rudimentary parallel extension
/// (r = 3, d = 9): each block is sharply transitive, the union has
/// distance 6.
inline std::vector<PermutationArray> parallel9_blocks() {
    static const char* const kBlocks[] = {
        "0 1 2 3 4 5 6 7 8\n1 5 8 4 6 0 3 2 7\n2 8 6 1 5 7 0 4 3\n3 4 1 7 2 6 8 0 5\n4 6 5 2 8 3 7 1 0\n5 0 7 6 3 1 4 8 2\n6 3 0 8 7 4 2 5 1\n7 2 4 0 1 8 5 3 6\n8 7 3 5 0 2 1 6 4",
        "1 3 6 7 5 8 2 4 0\n5 4 3 2 0 7 8 6 1\n8 1 0 4 7 3 6 5 2\n4 7 8 0 6 5 1 2 3\n6 2 7 1 3 0 5 8 4\n0 6 4 8 1 2 7 3 5\n3 8 2 5 4 1 0 7 6\n2 0 5 3 8 6 4 1 7\n7 5 1 6 2 4 3 0 8",
        "3 5 7 2 6 0 8 4 1\n4 0 2 8 3 1 7 6 5\n1 7 4 6 0 2 3 5 8\n7 6 0 1 8 3 5 2 4\n2 3 1 5 7 4 0 8 6\n6 1 8 7 4 5 2 3 0\n8 4 5 0 2 6 1 7 3\n0 8 3 4 5 7 6 1 2\n5 2 6 3 1 8 4 0 7",
        "4 2 7 8 0 1 3 5 6\n6 8 2 7 1 5 4 0 3\n5 6 4 3 2 8 1 7 0\n2 1 0 5 3 4 7 6 8\n8 5 1 0 4 6 2 3 7\n3 7 8 2 5 0 6 1 4\n7 0 5 1 6 3 8 4 2\n1 4 3 6 7 2 0 8 5\n0 3 6 4 8 7 5 2 1",
        "3 5 7 8 4 6 0 1 2\n4 0 2 7 6 3 1 5 8\n1 7 4 3 5 0 2 8 6\n7 6 0 5 2 8 3 4 1\n2 3 1 0 8 7 4 6 5\n6 1 8 2 3 4 5 0 7\n8 4 5 1 7 2 6 3 0\n0 8 3 6 1 5 7 2 4\n5 2 6 4 0 1 8 7 3",
        "0 4 2 5 6 1 7 3 8\n1 6 8 0 3 5 2 4 7\n2 5 6 7 0 8 4 1 3\n3 2 1 6 8 4 0 7 5\n4 8 5 3 7 6 1 2 0\n5 3 7 1 4 0 8 6 2\n6 7 0 4 2 3 5 8 1\n7 1 4 8 5 2 3 0 6\n8 0 3 2 1 7 6 5 4",
    };
    std::vector<PermutationArray> out;
    for (const char* b : kBlocks) out.push_back(pa_from_string(b, "<parallel9 block>").pa);
    return out;
}

/// Published representatives of five cosets of PGL(2,37) at pairwise coset
/// distance >= 34 (and >= 34 from the group itself).
inline std::vector<Permutation> pgl37_coset_reps() {
    static const int kReps[5][38] = {
        {27, 12, 30, 25, 15, 37, 35, 22, 29, 36, 10, 1, 13, 33, 24, 3, 28, 16, 26, 8, 19, 17, 23, 0, 11, 34, 20, 5, 31, 6, 21, 14, 18, 32, 7, 9, 2, 4},
        {16, 22, 35, 6, 4, 30, 37, 26, 23, 11, 0, 20, 18, 24, 8, 7, 15, 13, 1, 29, 36, 27, 17, 33, 3, 9, 10, 14, 32, 25, 12, 19, 28, 21, 2, 31, 5, 34},
        {12, 26, 21, 32, 37, 24, 2, 9, 23, 27, 0, 30, 18, 16, 20, 11, 6, 34, 33, 29, 15, 22, 5, 10, 17, 4, 35, 13, 28, 1, 14, 25, 7, 36, 19, 3, 31, 8},
        {17, 28, 22, 37, 26, 9, 8, 12, 18, 4, 32, 33, 31, 5, 2, 1, 34, 29, 0, 3, 21, 6, 10, 16, 23, 36, 20, 15, 14, 35, 11, 30, 19, 24, 25, 7, 13, 27},
        {9, 30, 12, 6, 36, 13, 31, 11, 1, 17, 27, 26, 5, 24, 14, 35, 25, 10, 23, 7, 34, 18, 20, 2, 16, 0, 8, 19, 29, 15, 37, 33, 4, 21, 22, 32, 28, 3},
    };
    std::vector<Permutation> out;
    for (const auto& row : kReps) {
        std::vector<Symbol> v(row, row + 38);
        out.push_back(Permutation(std::move(v)));
    }
    return out;
}

/// Base position classes (X) and symbol classes (Y) of Z_38 for the
/// two-symbol parallel extension of PGL(2,37) with five cosets; the second
/// position/symbol partitions are their one-step rotations.
inline const std::vector<std::vector<int>>& parallel2_38_position_classes() {
    static const std::vector<std::vector<int>> x = {
        {0, 4, 8, 13, 19, 22, 26, 30, 35},
        {1, 5, 9, 15, 18, 23, 27, 31, 34},
        {2, 6, 10, 12, 16, 21, 24, 28, 33, 37},
        {3, 7, 11, 14, 17, 20, 25, 29, 32, 36},
    };
    return x;
}

inline const std::vector<std::vector<int>>& parallel2_38_symbol_classes() {
    static const std::vector<std::vector<int>> y = {
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
        {10, 11, 12, 13, 14, 15, 16, 17, 18, 19},
        {20, 21, 22, 23, 24, 25, 26, 27, 28},
        {29, 30, 31, 32, 33, 34, 35, 36, 37},
    };
    return y;
}

}  // namespace pex::ref
