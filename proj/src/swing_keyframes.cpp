#include "swingcmp/synth.hpp"

namespace swingcmp {
namespace {

// Hand-authored golf swing keyframes, schema joint order. Mirrored in
// tests/fixtures/swing_keyframes.json.
constexpr SwingKeyframe kKeyframes[] = {
  {"address",
   {{{0.0, 0.95, 0.0},
     {-0.12, 0.95, 0.0},
     {-0.17, 0.515, 0.09},
     {-0.22, 0.08, 0.0},
     {0.12, 0.95, 0.0},
     {0.17, 0.515, 0.09},
     {0.22, 0.08, 0.0},
     {0.0, 1.1366, 0.1166},
     {0.0, 1.3316, 0.2385},
     {0.0, 1.4164, 0.2915},
     {0.0, 1.5524, 0.3747},
     {0.18, 1.3316, 0.2385},
     {0.105, 1.0159, 0.3782},
     {0.03, 0.7802, 0.4579},
     {-0.18, 1.3316, 0.2385},
     {-0.105, 0.9709, 0.3982},
     {-0.03, 0.7302, 0.4579}}},
   {{{0.0, 0.7602, 0.4579}, {0.0, 0.0056, 0.9484}}}},
  {"toe_up",
   {{{-0.01, 0.95, 0.0},
     {-0.1282, 0.95, 0.0208},
     {-0.1741, 0.515, 0.1004},
     {-0.22, 0.08, 0.0},
     {0.1082, 0.95, -0.0208},
     {0.1641, 0.515, 0.0796},
     {0.22, 0.08, 0.0},
     {0.0483, 1.1366, 0.101},
     {0.1092, 1.3316, 0.2065},
     {0.1357, 1.4164, 0.2524},
     {0.1357, 1.5524, 0.3356},
     {0.2651, 1.3316, 0.1165},
     {-0.0741, 1.092, 0.2677},
     {-0.4134, 0.9324, 0.3589},
     {-0.0467, 1.3316, 0.2965},
     {-0.26, 1.047, 0.3777},
     {-0.4734, 0.8824, 0.3589}}},
   {{{-0.4434, 0.9124, 0.3589}, {-1.2891, 0.6543, 0.5267}}}},
  {"mid_backswing",
   {{{-0.02, 0.95, 0.0},
     {-0.1288, 0.95, 0.0507},
     {-0.1744, 0.515, 0.1154},
     {-0.22, 0.08, 0.0},
     {0.0888, 0.95, -0.0507},
     {0.1544, 0.515, 0.0646},
     {0.22, 0.08, 0.0},
     {0.081, 1.1366, 0.0583},
     {0.1865, 1.3316, 0.1192},
     {0.2324, 1.4164, 0.1457},
     {0.2324, 1.5524, 0.2289},
     {0.2765, 1.3316, -0.0367},
     {-0.1606, 1.2985, 0.0569},
     {-0.5976, 1.3453, 0.0906},
     {0.0965, 1.3316, 0.2751},
     {-0.2806, 1.2535, 0.2328},
     {-0.6576, 1.2953, 0.0906}}},
   {{{-0.6276, 1.3253, 0.0906}, {-0.9355, 2.0344, -0.3704}}}},
  {"top",
   {{{-0.03, 0.95, 0.0},
     {-0.1149, 0.95, 0.0849},
     {-0.1674, 0.515, 0.1324},
     {-0.22, 0.08, 0.0},
     {0.0549, 0.95, -0.0849},
     {0.1374, 0.515, 0.0476},
     {0.22, 0.08, 0.0},
     {0.0866, 1.1366, 0.0},
     {0.2085, 1.3316, 0.0},
     {0.2615, 1.4164, 0.0},
     {0.2615, 1.5524, 0.0832},
     {0.2085, 1.3316, -0.18},
     {-0.0193, 1.5114, -0.1531},
     {-0.247, 1.7711, -0.1862},
     {0.2085, 1.3316, 0.18},
     {-0.0493, 1.4664, 0.0469},
     {-0.307, 1.7211, -0.1862}}},
   {{{-0.277, 1.7511, -0.1862}, {0.5687, 2.0092, -0.354}}}},
  {"mid_downswing",
   {{{0.02, 0.95, 0.0},
     {-0.0995, 0.95, 0.0105},
     {-0.1598, 0.515, 0.0952},
     {-0.22, 0.08, 0.0},
     {0.1395, 0.95, -0.0105},
     {0.1798, 0.515, 0.0848},
     {0.22, 0.08, 0.0},
     {0.1024, 1.1366, 0.0824},
     {0.1886, 1.3316, 0.1686},
     {0.2261, 1.4164, 0.2061},
     {0.2261, 1.5524, 0.2893},
     {0.3159, 1.3316, 0.0413},
     {-0.1273, 1.3209, 0.0813},
     {-0.5706, 1.3903, 0.0613},
     {0.0613, 1.3316, 0.2959},
     {-0.2846, 1.2759, 0.2286},
     {-0.6306, 1.3403, 0.0613}}},
   {{{-0.6006, 1.3703, 0.0613}, {-0.4443, 2.1134, -0.4217}}}},
  {"impact",
   {{{0.05, 0.95, 0.0},
     {-0.0483, 0.95, -0.0688},
     {-0.1341, 0.525, 0.0556},
     {-0.22, 0.1, 0.0},
     {0.1483, 0.95, 0.0688},
     {0.1841, 0.515, 0.1244},
     {0.22, 0.08, 0.0},
     {0.0198, 1.1366, 0.1126},
     {-0.0117, 1.3316, 0.2303},
     {-0.0254, 1.4164, 0.2815},
     {-0.0254, 1.5524, 0.3647},
     {0.1621, 1.3316, 0.2769},
     {0.1356, 1.0169, 0.3968},
     {0.109, 0.7821, 0.4566},
     {-0.1856, 1.3316, 0.1838},
     {-0.0683, 0.9719, 0.3702},
     {0.049, 0.7321, 0.4566}}},
   {{{0.079, 0.7621, 0.4566}, {0.1575, 0.0104, 0.9452}}}},
  {"mid_follow_through",
   {{{0.08, 0.95, 0.0},
     {0.02, 0.95, -0.1039},
     {-0.1, 0.545, 0.038},
     {-0.22, 0.14, 0.0},
     {0.14, 0.95, 0.1039},
     {0.18, 0.515, 0.142},
     {0.22, 0.08, 0.0},
     {-0.0296, 1.1366, 0.0399},
     {-0.1441, 1.3316, 0.0816},
     {-0.1939, 1.4164, 0.0997},
     {-0.1939, 1.5524, 0.1829},
     {-0.0825, 1.3316, 0.2507},
     {0.3026, 1.2985, 0.2006},
     {0.6876, 1.3453, 0.0906},
     {-0.2056, 1.3316, -0.0876},
     {0.211, 1.2535, 0.0515},
     {0.6276, 1.2953, 0.0906}}},
   {{{0.6576, 1.3253, 0.0906}, {1.1739, 1.9434, -0.3112}}}},
  {"finish",
   {{{0.1, 0.95, 0.0},
     {0.0895, 0.95, -0.1195},
     {-0.0652, 0.565, 0.0302},
     {-0.22, 0.18, 0.0},
     {0.1105, 0.95, 0.1195},
     {0.1652, 0.515, 0.1498},
     {0.22, 0.08, 0.0},
     {-0.0126, 1.1366, -0.0302},
     {-0.1303, 1.3316, -0.0617},
     {-0.1815, 1.4164, -0.0754},
     {-0.1815, 1.5524, 0.0078},
     {-0.1769, 1.3316, 0.1121},
     {0.0318, 1.5269, -0.0171},
     {0.2405, 1.8021, -0.2064},
     {-0.0838, 1.3316, -0.2356},
     {0.0484, 1.4819, -0.171},
     {0.1805, 1.7521, -0.2064}}},
   {{{0.2105, 1.7821, -0.2064}, {-0.6861, 1.8479, -0.2491}}}},
  {"finish_hold",
   {{{0.1, 0.95, 0.0},
     {0.0895, 0.95, -0.1195},
     {-0.0652, 0.565, 0.0302},
     {-0.22, 0.18, 0.0},
     {0.1105, 0.95, 0.1195},
     {0.1652, 0.515, 0.1498},
     {0.22, 0.08, 0.0},
     {-0.0148, 1.1366, -0.0202},
     {-0.1348, 1.3316, -0.0414},
     {-0.187, 1.4164, -0.0506},
     {-0.187, 1.5524, 0.0326},
     {-0.1661, 1.3316, 0.1359},
     {0.063, 1.5201, -0.0008},
     {0.2921, 1.7885, -0.1975},
     {-0.1036, 1.3316, -0.2187},
     {0.0642, 1.4751, -0.1581},
     {0.2321, 1.7385, -0.1975}}},
   {{{0.2621, 1.7685, -0.1975}, {-0.6345, 1.8343, -0.2403}}}},};

}  // namespace

std::span<const SwingKeyframe> swing_keyframes() { return kKeyframes; }

}  // namespace swingcmp
