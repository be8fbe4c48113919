// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// Bundled b-files. Each sequence was regenerated from its defining
// recurrence or generating function and cross-checked against published
// values before being frozen here.

#include "edsforge/oeis.hpp"

#include <array>
#include <utility>

namespace edsforge {

namespace {

constexpr std::string_view kA000045 = R"bfile(# Fibonacci numbers
0 0
1 1
2 1
3 2
4 3
5 5
6 8
7 13
8 21
9 34
10 55
11 89
12 144
13 233
14 377
15 610
16 987
17 1597
18 2584
19 4181
20 6765
21 10946
22 17711
23 28657
24 46368
25 75025
26 121393
27 196418
28 317811
29 514229
30 832040
31 1346269
32 2178309
33 3524578
34 5702887
35 9227465
36 14930352
37 24157817
38 39088169
39 63245986
)bfile";

constexpr std::string_view kA000108 = R"bfile(# Catalan numbers
0 1
1 1
2 2
3 5
4 14
5 42
6 132
7 429
8 1430
9 4862
10 16796
11 58786
12 208012
13 742900
14 2674440
15 9694845
16 35357670
17 129644790
18 477638700
19 1767263190
20 6564120420
21 24466267020
22 91482563640
23 343059613650
24 1289904147324
25 4861946401452
26 18367353072152
27 69533550916004
28 263747951750360
29 1002242216651368
)bfile";

constexpr std::string_view kA000129 = R"bfile(# Pell numbers
0 0
1 1
2 2
3 5
4 12
5 29
6 70
7 169
8 408
9 985
10 2378
11 5741
12 13860
13 33461
14 80782
15 195025
16 470832
17 1136689
18 2744210
19 6625109
20 15994428
21 38613965
22 93222358
23 225058681
24 543339720
25 1311738121
26 3166815962
27 7645370045
28 18457556052
29 44560482149
30 107578520350
31 259717522849
32 627013566048
33 1513744654945
34 3654502875938
)bfile";

constexpr std::string_view kA006720 = R"bfile(# Somos-4 sequence with s=t=1
0 1
1 1
2 1
3 1
4 2
5 3
6 7
7 23
8 59
9 314
10 1529
11 8209
12 83313
13 620297
14 7869898
15 126742987
16 1687054711
17 47301104551
18 1123424582771
19 32606721084786
20 1662315215971057
21 61958046554226593
22 4257998884448335457
23 334806306946199122193
24 23385756731869683322514
25 3416372868727801226636179
26 397068399296019032727466599
27 62595441409640805744780870839
28 15886280085653574502219650145963
29 2993270782370572835241882188306602
)bfile";

constexpr std::string_view kA006769 = R"bfile(# Elliptic divisibility sequence for y^2+y = x^3-x
0 0
1 1
2 1
3 -1
4 1
5 2
6 -1
7 -3
8 -5
9 7
10 -4
11 -23
12 29
13 59
14 129
15 -314
16 -65
17 1529
18 -3689
19 -8209
20 -16264
21 83313
22 113689
23 -620297
24 2382785
25 7869898
26 7001471
27 -126742987
28 -398035821
29 1687054711
30 -7911171596
31 -47301104551
32 43244638645
33 1123424582771
34 6480598259201
)bfile";

constexpr std::string_view kA025262 = R"bfile(# a(n+1) equals A056010(n)
1 1
2 1
3 3
4 8
5 23
6 68
7 207
8 644
9 2040
10 6558
11 21343
12 70186
13 232864
14 778550
15 2620459
16 8872074
17 30195288
18 103246502
19 354508628
20 1221846856
21 4225644866
22 14659644348
23 51002664023
24 177909901566
25 622093882290
26 2180123564130
27 7656055966092
28 26937963993300
29 94951843056498
30 335250824137452
)bfile";

constexpr std::string_view kA056010 = R"bfile(# Expansion of (1-2x-sqrt(1-4x+4x^3))/(2x^2)
0 1
1 1
2 3
3 8
4 23
5 68
6 207
7 644
8 2040
9 6558
10 21343
11 70186
12 232864
13 778550
14 2620459
15 8872074
16 30195288
17 103246502
18 354508628
19 1221846856
20 4225644866
21 14659644348
22 51002664023
23 177909901566
24 622093882290
25 2180123564130
26 7656055966092
27 26937963993300
28 94951843056498
29 335250824137452
)bfile";

constexpr std::string_view kA157003 = R"bfile(# Expansion of 2/(1+sqrt(1-4x+4x^3))
0 1
1 1
2 2
3 4
4 10
5 27
6 78
7 234
8 722
9 2274
10 7280
11 23617
12 77466
13 256481
14 856016
15 2876940
16 9728090
17 33072228
18 112974592
19 387580856
20 1334821448
21 4613225722
22 15994465796
23 55615889745
24 193904367362
25 677709772035
26 2374027931492
27 8333765738127
28 29311991924792
29 103285608794625
)bfile";

constexpr std::string_view kA178072 = R"bfile(# Expansion of 2/(1+2x+x^2+sqrt(1-4x+6x^2+x^4))
0 1
1 0
2 -1
3 -1
4 -1
5 -1
6 1
7 8
8 23
9 45
10 55
11 -14
12 -317
13 -1095
14 -2459
15 -3574
16 -681
17 16124
18 64605
19 159483
20 260869
21 134374
22 -906919
23 -4228769
24 -11317061
25 -20327731
26 -15742753
27 52640154
28 293447719
29 847451759
)bfile";

constexpr std::string_view kA178078 = R"bfile(# Sequence with Hankel transform 1,1,2,1,-3,-7,-8,-25,...
0 1
1 -2
2 5
3 -19
4 108
5 -754
6 5682
7 -44071
8 346267
9 -2739074
10 21750035
11 -173091393
12 1379201082
13 -10996455005
14 87696623675
15 -699373702953
16 5576480868194
17 -44451586618554
18 354206845538408
19 -2821273800080192
20 22461260474328054
21 -178734931176224739
22 1421540974078553153
23 -11299874145140934311
24 89772345127016319092
25 -712782649843385360811
26 5655984224515540047531
27 -44852493393573775207725
28 355453547688316219266778
29 -2815056380936349054994658
)bfile";

constexpr std::string_view kA178079 = R"bfile(# Somos-4 sequence with s=1, t=-1
0 1
1 1
2 1
3 2
4 1
5 -3
6 -7
7 -8
8 -25
9 -37
10 47
11 318
12 559
13 2023
14 7039
15 -496
16 -90431
17 -314775
18 -1139599
19 -8007614
20 -13512079
21 154788437
22 1247862041
23 5097732072
24 56844671623
25 290379801907
26 -1403230649825
27 -32188159859842
28 -199066111517153
29 -2606042022105777
)bfile";

constexpr std::array<std::pair<std::string_view, std::string_view>, 11>
    kBundled = {{
        {"A000045", kA000045},
        {"A000108", kA000108},
        {"A000129", kA000129},
        {"A006720", kA006720},
        {"A006769", kA006769},
        {"A025262", kA025262},
        {"A056010", kA056010},
        {"A157003", kA157003},
        {"A178072", kA178072},
        {"A178078", kA178078},
        {"A178079", kA178079},
}};

}  // namespace

std::optional<std::string_view> bundled_bfile(const std::string& id) {
  for (const auto& [key, text] : kBundled) {
    if (key == id) return text;
  }
  return std::nullopt;
}

std::vector<std::string> bundled_ids() {
  std::vector<std::string> ids;
  ids.reserve(kBundled.size());
  for (const auto& [key, text] : kBundled) ids.emplace_back(key);
  return ids;
}

}  // namespace edsforge
