#include "catalog_data.hpp"

namespace rbd::data {

// Galaxy design: columns, rows, then the galaxies of d1..d6.
const char* const kGammaRC8 =
    "# gamma-rc-8\n"
    "1 7 13 19 25 31\n"
    "2 8 14 20 26 32\n"
    "3 9 15 21 27 33\n"
    "4 10 16 22 28 34\n"
    "5 11 17 23 29 35\n"
    "6 12 18 24 30 36\n"
    "\n"
    "1 2 3 4 5 6\n"
    "7 8 9 10 11 12\n"
    "13 14 15 16 17 18\n"
    "19 20 21 22 23 24\n"
    "25 26 27 28 29 30\n"
    "31 32 33 34 35 36\n"
    "\n"
    "1 8 18 21 28 35\n"
    "2 7 16 24 29 33\n"
    "6 10 13 23 27 32\n"
    "3 12 17 19 26 34\n"
    "4 11 15 20 25 36\n"
    "5 9 14 22 30 31\n"
    "\n"
    "2 7 15 23 30 34\n"
    "1 8 17 22 27 36\n"
    "3 11 14 24 28 31\n"
    "5 10 18 20 25 33\n"
    "6 9 16 19 26 35\n"
    "4 12 13 21 29 32\n"
    "\n"
    "3 10 14 19 29 36\n"
    "4 9 18 23 26 31\n"
    "2 12 15 22 25 35\n"
    "1 11 16 21 30 32\n"
    "5 8 13 24 27 34\n"
    "6 7 17 20 28 33\n"
    "\n"
    "4 9 17 24 25 32\n"
    "3 10 13 20 30 35\n"
    "5 7 16 21 26 36\n"
    "6 8 15 22 29 31\n"
    "1 12 14 23 28 33\n"
    "2 11 18 19 27 34\n"
    "\n"
    "5 12 16 20 27 31\n"
    "6 11 14 21 25 34\n"
    "4 8 17 19 30 33\n"
    "2 9 13 23 28 36\n"
    "3 7 18 22 29 32\n"
    "1 10 15 24 26 35\n"
    "\n"
    "6 11 13 22 26 33\n"
    "5 12 15 19 28 32\n"
    "1 9 18 20 29 34\n"
    "4 7 14 24 27 35\n"
    "2 10 17 21 30 31\n"
    "3 8 16 23 25 36\n";

// Eight-replicate design found by simulated annealing; no automorphisms.
const char* const kTheta8 =
    "# theta-8\n"
    "2 29 18 33 6 17\n"
    "24 9 25 7 27 11\n"
    "13 34 1 14 12 8\n"
    "20 15 16 28 3 4\n"
    "19 36 30 23 26 10\n"
    "22 31 32 5 21 35\n"
    "\n"
    "32 24 30 17 22 28\n"
    "33 11 35 18 26 14\n"
    "4 29 8 27 10 3\n"
    "5 16 36 1 25 7\n"
    "6 20 21 23 13 9\n"
    "12 2 31 19 34 15\n"
    "\n"
    "11 15 4 12 21 30\n"
    "31 10 9 26 33 16\n"
    "5 22 34 3 7 18\n"
    "25 20 24 14 19 17\n"
    "35 8 1 29 23 28\n"
    "13 27 2 36 6 32\n"
    "\n"
    "30 15 35 13 33 7\n"
    "11 2 20 5 23 3\n"
    "25 10 6 22 1 12\n"
    "31 24 14 4 29 36\n"
    "19 32 18 8 28 9\n"
    "16 34 21 26 27 17\n"
    "\n"
    "2 4 26 1 9 22\n"
    "8 23 31 7 17 11\n"
    "12 28 5 27 19 33\n"
    "6 30 14 32 16 3\n"
    "35 34 10 13 20 24\n"
    "21 36 15 29 25 18\n"
    "\n"
    "14 5 30 29 9 34\n"
    "20 21 8 36 22 33\n"
    "35 7 6 27 19 4\n"
    "31 26 28 25 13 3\n"
    "15 1 32 10 11 17\n"
    "12 16 2 23 24 18\n"
    "\n"
    "21 28 2 10 14 7\n"
    "27 30 1 20 18 31\n"
    "35 3 36 17 9 12\n"
    "15 24 8 5 6 26\n"
    "23 25 4 32 33 34\n"
    "13 11 16 22 29 19\n"
    "\n"
    "29 32 12 20 26 7\n"
    "13 17 5 4 18 10\n"
    "19 33 24 21 3 1\n"
    "2 35 8 25 30 16\n"
    "22 23 27 9 14 15\n"
    "36 11 34 31 28 6\n";

// Columns, rows, then the six Latin squares L1..L6.
const char* const kDeltaRC8 =
    "# delta-rc-8\n"
    "1 7 13 19 25 31\n"
    "2 8 14 20 26 32\n"
    "3 9 15 21 27 33\n"
    "4 10 16 22 28 34\n"
    "5 11 17 23 29 35\n"
    "6 12 18 24 30 36\n"
    "\n"
    "1 2 3 4 5 6\n"
    "7 8 9 10 11 12\n"
    "13 14 15 16 17 18\n"
    "19 20 21 22 23 24\n"
    "25 26 27 28 29 30\n"
    "31 32 33 34 35 36\n"
    "\n"
    "1 8 15 22 29 36\n"
    "2 7 16 24 27 35\n"
    "3 12 13 23 26 34\n"
    "4 11 14 19 30 33\n"
    "5 10 18 21 25 32\n"
    "6 9 17 20 28 31\n"
    "\n"
    "1 9 14 24 29 34\n"
    "2 11 13 21 28 36\n"
    "3 7 17 22 30 32\n"
    "4 8 18 23 27 31\n"
    "5 12 16 20 25 33\n"
    "6 10 15 19 26 35\n"
    "\n"
    "1 9 16 23 30 32\n"
    "2 10 13 24 29 33\n"
    "3 8 18 19 28 35\n"
    "4 7 17 21 26 36\n"
    "5 12 14 22 27 31\n"
    "6 11 15 20 25 34\n"
    "\n"
    "1 10 17 20 27 36\n"
    "2 9 18 22 25 35\n"
    "3 11 16 24 26 31\n"
    "4 12 15 19 29 32\n"
    "5 8 13 21 30 34\n"
    "6 7 14 23 28 33\n"
    "\n"
    "1 11 18 22 26 33\n"
    "2 12 17 19 27 34\n"
    "3 10 14 23 25 36\n"
    "4 9 13 20 30 35\n"
    "5 7 15 24 28 32\n"
    "6 8 16 21 29 31\n"
    "\n"
    "1 12 14 21 28 35\n"
    "2 10 15 23 30 31\n"
    "3 7 18 20 29 34\n"
    "4 8 17 24 25 33\n"
    "5 9 16 19 26 36\n"
    "6 11 13 22 27 32\n";

}  // namespace rbd::data
