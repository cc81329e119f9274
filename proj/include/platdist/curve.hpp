#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace platdist {

class curve_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An isotopy class of a simple closed curve on the sphere with punctures at
// x = 1..2m on a horizontal axis.  The axis closes up through infinity, so
// the region left of puncture 1 and the region right of puncture 2m form a
// single gap.  Gap g (1 <= g <= 2m) lies between punctures g and g+1; gap 2m
// is the one through infinity.
//
// Crossings with the axis are listed in circular order starting just right
// of puncture 1, so gap() is non-decreasing.  Within the infinity gap the
// order runs x > 2m first, then x < 1.  upper(i) = j when crossings i and j
// are joined by an arc above the axis, lower() likewise below.  Both
// matchings are fixed-point-free involutions, non-crossing in the circular
// order, and together they trace out a single closed curve.
//
// A reduced diagram has no bigon with the axis; reduced diagrams are taken
// as canonical forms, so equality of diagrams is equality of isotopy
// classes.
class CurveDiagram {
 public:
  CurveDiagram() = default;

  static CurveDiagram make(int punctures, std::vector<int> gap,
                           std::vector<int> upper, std::vector<int> lower);
  static CurveDiagram empty_diagram(int punctures);

  int punctures() const { return punctures_; }
  int size() const { return static_cast<int>(gap_.size()); }
  bool is_empty() const { return gap_.empty(); }
  int gap(int i) const { return gap_[i]; }
  int upper(int i) const { return upper_[i]; }
  int lower(int i) const { return lower_[i]; }
  const std::vector<int>& gaps() const { return gap_; }
  const std::vector<int>& uppers() const { return upper_; }
  const std::vector<int>& lowers() const { return lower_; }

  // [first, last) indices of the crossings lying in gap g.
  std::pair<int, int> gap_range(int g) const;
  int gap_count(int g) const {
    auto [a, b] = gap_range(g);
    return b - a;
  }

  bool reduced() const { return reduced_; }

  // Side of each puncture relative to the curve: side 0 is the one touching
  // the region just right of puncture 1.  Size 2m.
  std::vector<int> puncture_sides() const;

  bool operator==(const CurveDiagram& o) const = default;

  std::string brief() const;  // short debug string

 private:
  int punctures_ = 0;
  std::vector<int> gap_;
  std::vector<int> upper_;
  std::vector<int> lower_;
  bool reduced_ = false;

  friend CurveDiagram reduce(CurveDiagram c);
  friend CurveDiagram remove_bigon(const CurveDiagram& c, int i);
};

// Indices i such that crossings (i, i+1) bound a bigon with the axis:
// adjacent, same gap, and matched above or below.
std::vector<int> axis_bigons(const CurveDiagram& c);

// Remove the bigon at (i, i+1); precondition: i is listed by axis_bigons.
CurveDiagram remove_bigon(const CurveDiagram& c, int i);

// Remove bigons until none remain (leftmost first; the result does not
// depend on the order, which the tests exercise).
CurveDiagram reduce(CurveDiagram c);

// True iff each complementary side of the curve holds at least two
// punctures.  Empty diagrams are inessential.
bool is_essential(const CurveDiagram& c);

std::size_t hash_value(const CurveDiagram& c);

struct CurveDiagramHash {
  std::size_t operator()(const CurveDiagram& c) const { return hash_value(c); }
};

// JSON text form; gaps use the 0..2m convention with 0 and 2m naming the
// two halves of the infinity gap.  Parsing accepts either half and
// normalizes.
std::string curve_to_json(const CurveDiagram& c);
CurveDiagram curve_from_json(const std::string& text);

}  // namespace platdist
