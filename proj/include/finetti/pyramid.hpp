#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finetti/triangle.hpp"

namespace finetti {

struct CubeCoord {
  int i = 1, j = 1, k = 1;  // row, column, height; all >= 1

  friend bool operator==(const CubeCoord& a, const CubeCoord& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator<(const CubeCoord& a, const CubeCoord& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  }
};

// Two-color pyramid of cubes over a family's full admissible domain: the
// tower at (i,j) runs up to the family maximum's entry, with color 1 (white,
// present) below color 0 (gray, absent). Absent cubes are stored explicitly;
// the affine maps below track them.
class TwoColorPyramid {
 public:
  TwoColorPyramid(TriangleFamily family, int index);

  TriangleFamily family() const { return family_; }
  int index() const { return index_; }
  int row_count() const { return family_rows(family_, index_); }
  int tower_height(int i, int j) const { return max_entry(family_, index_, i, j); }
  int cube_count() const { return static_cast<int>(color_.size()); }

  bool in_domain(int i, int j, int k) const {
    return i >= 1 && i <= row_count() && j >= 1 && j <= i && k >= 1 && k <= tower_height(i, j);
  }
  bool in_domain(const CubeCoord& c) const { return in_domain(c.i, c.j, c.k); }
  int color(int i, int j, int k) const { return color_[cell(i, j, k)]; }
  int color(const CubeCoord& c) const { return color(c.i, c.j, c.k); }
  void set_color(int i, int j, int k, int c) { color_[cell(i, j, k)] = static_cast<uint8_t>(c); }
  void set_color(const CubeCoord& c, int value) { set_color(c.i, c.j, c.k, value); }

  // Gravity within every tower: white cubes occupy the lowest positions.
  bool obeys_gravity() const;

  friend bool operator==(const TwoColorPyramid& a, const TwoColorPyramid& b) {
    return a.family_ == b.family_ && a.index_ == b.index_ && a.color_ == b.color_;
  }
  friend bool operator!=(const TwoColorPyramid& a, const TwoColorPyramid& b) { return !(a == b); }

 private:
  int cell(int i, int j, int k) const;  // throws DomainError outside the domain

  TriangleFamily family_;
  int index_;
  std::vector<int> tower_offset_;  // per (i,j), row-major over the triangle cells
  std::vector<uint8_t> color_;
};

// Tower (i,j) gets t(i,j) white cubes below max-t(i,j) gray ones.
TwoColorPyramid to_pyramid(const Triangle& t);

// Tower white-counts back into a triangle. GravityError when a tower has
// white above gray; ValidationError when the counts fail the family axioms.
Triangle from_pyramid(const TwoColorPyramid& p);

// The bare affine relocations; the pyramid maps below pair them with a color
// flip.
CubeCoord psi_cube(const CubeCoord& c, int n);          // (n-k, n-j, i-j+1)
CubeCoord psi_cube_inverse(const CubeCoord& c, int n);  // (n-j+k-1, n-j, n-i)
CubeCoord phi_cube(const CubeCoord& c, int n);          // (n-i, k, j); self-inverse

// Color-flip plus psi_cube: zeroed column-monotone pyramids onto the
// strict-row family of the same index.
TwoColorPyramid psi(const TwoColorPyramid& p);
TwoColorPyramid psi_inverse(const TwoColorPyramid& p);

// Color-flip plus phi_cube; an involution on ogog pyramids.
TwoColorPyramid phi(const TwoColorPyramid& p);

// Triangle-level conduits through the pyramid model.
Triangle psi_triangle(const Triangle& omagog);
Triangle psi_inverse_triangle(const Triangle& kagog);
Triangle phi_triangle(const Triangle& ogog);

// One ASCII grid per height layer, bottom layer first, '#' white, '.' gray,
// spaces outside the domain. Layers are separated by blank lines.
std::string render_layers(const TwoColorPyramid& p);

}  // namespace finetti
