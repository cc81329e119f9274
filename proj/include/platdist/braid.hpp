#pragma once

#include <string>
#include <vector>

#include "platdist/curve.hpp"

namespace platdist {

// A word in the Artin generators of the braid group on `strand_count`
// strands.  Letter k > 0 is sigma_k, letter -k is its inverse.
struct BraidWord {
  int strand_count = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  BraidWord inverse() const;
  BraidWord concat(const BraidWord& tail) const;
  // Cancel adjacent sigma_k sigma_k^{-1} pairs.
  BraidWord free_reduce() const;

  bool operator==(const BraidWord&) const = default;
};

std::string braid_to_string(const BraidWord& w);

// Image of the curve under the half twist sigma_k^{sign} swapping punctures
// k and k+1.  Positive twists turn the disk around the pair
// counterclockwise.  The result is reduced.
CurveDiagram apply_generator(const CurveDiagram& c, int k, int sign);

// Left-to-right application of the word's letters.
CurveDiagram apply_braid(const CurveDiagram& c, const BraidWord& w);

}  // namespace platdist
