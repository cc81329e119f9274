#pragma once

#include <string>
#include <vector>

#include "platdist/braid.hpp"
#include "platdist/curve.hpp"

namespace platdist {

class plat_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A 2m-plat: width m, height parameter n, and n-1 rows of twist
// coefficients.  Row i (1-based) holds m-1 coefficients when i is odd and m
// when i is even.  Odd rows twist the puncture pairs (2j, 2j+1), even rows
// the pairs (2j-1, 2j); positive coefficients are right-handed half twists.
struct PlatPresentation {
  int m = 0;
  int n = 0;
  std::vector<std::vector<int>> rows;

  int row_width(int i) const { return (i % 2 == 1) ? m - 1 : m; }
  int coefficient(int i, int j) const { return rows[i - 1][j - 1]; }
  // Puncture pair twisted by box (i, j): (first, first+1).
  int pair_start(int i, int j) const { return (i % 2 == 1) ? 2 * j : 2 * j - 1; }

  bool operator==(const PlatPresentation&) const = default;
};

PlatPresentation parse_plat(const std::string& text);
std::string serialize_plat(const PlatPresentation& p);
std::string plat_to_json(const PlatPresentation& p);
PlatPresentation plat_from_json(const std::string& text);

void validate(const PlatPresentation& p);

bool is_row_highly_twisted(const PlatPresentation& p, int i);
bool is_highly_twisted(const PlatPresentation& p);

// ceil(n / (2(m-2))); requires m >= 3 and a highly twisted plat.
int bridge_distance_formula(const PlatPresentation& p);

// True iff n > 4m(m-2), which pushes the distance past 2m and makes the
// bridge sphere the unique minimal one.
bool uniqueness_threshold(const PlatPresentation& p);

// The underlying braid word: rows bottom to top, coefficients left to
// right, |a| letters sigma_k^{sign a} with k = 2j on odd rows and 2j-1 on
// even rows.
BraidWord plat_to_braid(const PlatPresentation& p);

// Word realizing the downward projection of curves from plane P_from to
// plane P_to (1 <= to <= from <= n): the sub-braid for rows to..from-1,
// inverted and reversed.  Applying it to a curve in P_from coordinates
// yields the same curve in P_to coordinates.
BraidWord projection_word(const PlatPresentation& p, int from_row, int to_row);

// The round loop around one twisted pair in the plane P_i, in that plane's
// own coordinates.  Odd i encloses {2j, 2j+1} (j in 1..m-1); even i,
// including the synthetic rows 0 and n for n even, encloses {2j-1, 2j}
// (j in 1..m).
CurveDiagram canonical_loop(const PlatPresentation& p, int i, int j);

// Round curve around punctures {first, ..., last} on the 2m-punctured
// sphere (helper used by canonical_loop and the tests).
CurveDiagram round_curve(int punctures, int first, int last);

}  // namespace platdist
