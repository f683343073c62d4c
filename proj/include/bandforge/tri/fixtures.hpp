#pragma once

// Generated from fixtures/appendix_a.tri and fixtures/appendix_b.tri.
// tests/tri_test.cpp checks that the two copies agree.

#include <optional>
#include <string_view>

namespace bandforge::tri {

// Closed manifold: one cusp filled along (1, 0).
inline constexpr std::string_view kAppendixA = R"tri(positive_NewExDoubleBranchedCover.tri
geometric_solution  10.01776364
oriented_manifold
CS_unknown

1 0
    torus   1.000000000000   0.000000000000

12
   9    7    1    2 
 0132 2031 3120 2031
   0    0    0    0 
  0 -5  0  5  0  0  0  0  0  2  0 -2  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  2  0 -2  0  0  0  0  0 -1  0  1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.331423656275   0.162341774025

   1    1    0    2 
 1302 2031 3120 2103
   0    0    0    0 
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.611725379702   1.298376024362

   4    0    3    1 
 3120 1302 0132 2103
   0    0    0    0 
  0  0  0  0  0  0  0  0  5 -5  0  0 -2  2  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0 -2  2  0  0  1 -1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  1.154660522176   0.243438802519

   5    5    6    2 
 2103 2031 1302 0132
   0    0    0    0 
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.742391711448   0.375569853796

  10   11    5    2 
 2103 3201 0132 3120
   0    0    0    0 
  0 -2  0  2  0  0  0  0  5  0  0 -5  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  1  0 -1  0  0  0  0 -2  0  0  2  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.051561272573   0.817211848975

   3    9    3    4 
 1302 0213 2103 0132
   0    0    0    0 
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.382109605694   0.517704352071

   3    9    7   10 
 2031 2103 0132 2310
   0    0    0    0 
  0  0  3 -3  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0 -1  1  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.133267651768   0.492450754011

   0    7    7    6 
 1302 3201 2310 0132
   0    0    0    0 
  0 -2  5 -3  0  0  0  0  5 -5  0  0 -2  0  2  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  1 -2  1  0  0  0  0 -2  2  0  0  1  0 -1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.844929135477   0.621869387892

  10    8    9    8 
 3120 1302 0132 2031
   0    0    0    0 
  0  0  0  0  0  0  0  0  3  0  0 -3 -3  3  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0 -1  0  0  1  1 -1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.595097294342   0.379538531701

   0    6    5    8 
 0132 2103 0213 0132
   0    0    0    0 
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.727494149013   0.583230666597

   6   11    4    8 
 3201 3012 2103 3120
   0    0    0    0 
  0  2 -5  3  0  0  0  0  3  0  0 -3  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -1  2 -1  0  0  0  0 -1  0  0  1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.458810332791   0.923439146059

  10   11    4   11 
 1230 1302 2310 2031
   0    0    0    0 
  0  0  0  0  0  0  0  0  0  0  0  0 -2  0  2  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  1  0 -1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.272534538068   1.292584061520

)tri";

// Seven-cusp manifold with six filled cusps and one complete cusp.
inline constexpr std::string_view kAppendixB = R"tri(NewExSD.tri
geometric_solution  17.66121174
oriented_manifold
CS_unknown

7 0
    torus   3.000000000000   2.000000000000
    torus  -1.000000000000   2.000000000000
    torus   3.000000000000   2.000000000000
    torus  -3.000000000000   2.000000000000
    torus  -2.000000000000   1.000000000000
    torus   3.000000000000   1.000000000000
    torus   0.000000000000   0.000000000000

26
   7   21    2   11 
 0213 1230 1023 1302
   6    5    4    6 
  0  0  0  0 -1  0  0  1 -1  1  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -1  0  1  2  0 -1 -1  2 -1  0 -1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.884879310226   0.265427114601

   3   10    2   11 
 3120 2031 0132 3201
   5    6    4    3 
  0  0  0  0  0  0  0  0  1 -1  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0 -2  1  0  1 -1  1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.497167764715   0.363563051665

   4    8    0    1 
 2103 3201 1023 0132
   5    6    3    6 
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -1  1  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.542052384313   0.059208103396

   7    6    4    1 
 2310 3012 0132 3120
   3    6    4    2 
  0  1 -1  0  0  0  0  0  1  0  0 -1 -1  1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -1  0  1  0  0  0  0 -2  0  0  2 -1  0  1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
 -0.070819701580   1.180960190947

  25   14    2    3 
 1230 2031 2103 0132
   3    6    2    6 
  0 -1  0  1  0  0  0  0  0  0  0  0 -1  1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  1  0 -1  2 -2  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.268574212755   0.558073733867

   7   13    6   10 
 3120 2103 0132 0321
   1    4    5    2 
  0  1 -1  0  0  0  0  0  1 -1  0  0  1 -1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -1  0  1  0  0  0  0 -2  2  0  0  1 -1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.801565759577   1.236693248028

   3    9   18    5 
 1230 0321 2310 0132
   1    4    2    3 
  0 -1  0  1  0  0  0  0 -1  1  0  0 -1  1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  1 -1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.219495828522   0.185291470447

   0    8    3    5 
 0213 2031 3201 3120
   2    4    5    6 
  0  0  1 -1  1  0 -1  0  1  0  0 -1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  1 -1 -2  0  2  0 -2  0  0  2  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.194061167227   0.325653160933

   7    9    2   25 
 1302 1023 2310 1230
   3    6    2    5 
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.581448542272   1.027635963213

   8   22   10    6 
 1023 0321 0132 0321
   1    3    2    5 
  0  0 -1  1  0  0  1 -1  0  1  0 -1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0 -1  1  0  0  0  0  1 -1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.486425164049   0.469383911691

   1    5   23    9 
 1302 0321 0132 0132
   1    3    5    4 
  0  0 -1  1  0  0  1 -1  0  0  0  0  1  0 -1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -1  1  0 -1  0  0  1  0  0  0  0 -1  0  1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.759277382544   0.097656419356

  12    1    0   21 
 3120 2310 2031 3201
   4    6    6    5 
  0  0  0  0 -1  0  0  1  0  0  0  0  1  0 -1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -1  1  0  2  0 -1 -1  0  0  0  0 -1  0  1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.331450766575   0.575698967017

  17   22   13   11 
 0213 1230 0132 3120
   5    6    6    1 
  0  0  1 -1  0  0 -1  1  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  1 -2  1  0  0  2 -2  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  1.334152709472   0.488916258280

  14    5   22   12 
 2103 2103 1302 0132
   5    6    1    2 
  0  1  0 -1 -1  0  0  1  1 -1  0  0  0  1 -1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -2  0  2  2  0  0 -2 -1  1  0  0 -1  1  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  1.025382558674   0.625437377058

   4   24   13   17 
 1302 0213 2103 3201
   1    6    3    2 
  0  1 -1  0 -1  0  1  0  1 -1  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -1  1  0  2  0 -2  0  0  0  0  0 -1  0  1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.946553997150   0.629290531878

  17   25   16   19 
 3120 0321 0132 0132
   6    6    6    3 
  0  1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -2  2  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.640296809522   1.555614203505

  18   23   21   15 
 2103 3012 2103 0132
   6    6    3    4 
  0  0 -1  1  0  0  0  0  0  0  0  0  0  1 -1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  2 -2  0  0  0  0  0  0  0  0  0 -1  1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.703090123573   1.169878685435

  12   14   18   15 
 0213 2310 0132 3120
   3    6    6    1 
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
 -0.826217803228   0.562814000061

  23    6   16   17 
 1302 3201 2103 0132
   3    6    1    4 
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
 -0.064157902186   1.804989001852

  20   20   15   20 
 1023 0321 0132 3120
   6    6    0    6 
  0  0  0  0  0  0  0  0  1  0  0 -1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  1  0 -1 -1  0  0  1 -2 -1  0  3  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  3.193562318461   1.179181974013

  19   19   21   19 
 3120 1023 0132 0321
   6    6    0    6 
  0  0  0  0  0  0  0  0  1 -1  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  1  0 -1 -1  0  1  0 -3  2  0  1  1  0 -1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.109741669235   4.696396284359

  16   11    0   20 
 2103 2310 3012 0132
   6    6    6    4 
  0  0  0  0  0  0  0  0  1 -1  0  0  1  0 -1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  1 -1 -2  1  0  1 -1  0  1  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.640923677127   0.198559042034

  13   24   12    9 
 2031 0132 3012 0321
   1    5    2    6 
  0  0  0  0  0  0  0  0  1  0  0 -1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0 -1  1  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.386084754186   0.276324002673

  16   18   24   10 
 1230 2031 0132 0132
   1    3    4    6 
  0  0 -1  1  0  0  1 -1 -1  0  0  1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  1 -1  0  0  0  0  1  0  0 -1  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.756429983407   0.089394885530

  25   22   14   23 
 2103 0132 0213 0132
   1    3    6    2 
  0  0 -1  1  0  0  1 -1  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  1 -1  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.610960236830   0.149161807351

   8    4   24   15 
 3012 3012 2103 0321
   6    3    6    2 
  0  1  0 -1  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0 -2  0  2  0  0  0  0  0  0  0  0  0  0  0  0
  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
  0.057309227057   0.494708252137

)tri";

/// Embedded fixture by name ("A" or "B", case-insensitive).
inline std::optional<std::string_view> embedded_fixture(std::string_view name) {
  if (name == "A" || name == "a") return kAppendixA;
  if (name == "B" || name == "b") return kAppendixB;
  return std::nullopt;
}

}  // namespace bandforge::tri
