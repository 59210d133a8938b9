#include "finetti/pyramid.hpp"

#include "finetti/errors.hpp"

namespace finetti {

TwoColorPyramid::TwoColorPyramid(TriangleFamily family, int index)
    : family_(family), index_(index) {
  if (index < 1) throw InvalidArgument("pyramid index must be >= 1");
  const int r = row_count();
  int total = 0;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= i; ++j) {
      tower_offset_.push_back(total);
      total += tower_height(i, j);
    }
  color_.assign(total, 0);
}

int TwoColorPyramid::cell(int i, int j, int k) const {
  if (!in_domain(i, j, k))
    throw DomainError("cube (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ") outside the " + family_name(family_) +
                      " domain of index " + std::to_string(index_));
  const int tower = (i - 1) * i / 2 + (j - 1);
  return tower_offset_[tower] + (k - 1);
}

bool TwoColorPyramid::obeys_gravity() const {
  for (int i = 1; i <= row_count(); ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k < tower_height(i, j); ++k)
        if (color(i, j, k + 1) > color(i, j, k)) return false;
  return true;
}

TwoColorPyramid to_pyramid(const Triangle& t) {
  require_valid(t);
  TwoColorPyramid p(t.family, t.index);
  for (int i = 1; i <= p.row_count(); ++i)
    for (int j = 1; j <= i; ++j) {
      const int whites = t.at(i, j);
      for (int k = 1; k <= p.tower_height(i, j); ++k) p.set_color(i, j, k, k <= whites ? 1 : 0);
    }
  return p;
}

Triangle from_pyramid(const TwoColorPyramid& p) {
  if (!p.obeys_gravity()) throw GravityError("tower has a white cube above a gray one");
  Triangle t;
  t.family = p.family();
  t.index = p.index();
  t.rows.resize(p.row_count());
  for (int i = 1; i <= p.row_count(); ++i) {
    t.rows[i - 1].resize(i);
    for (int j = 1; j <= i; ++j) {
      int whites = 0;
      for (int k = 1; k <= p.tower_height(i, j); ++k) whites += p.color(i, j, k);
      t.rows[i - 1][j - 1] = whites;
    }
  }
  require_valid(t);
  return t;
}

CubeCoord psi_cube(const CubeCoord& c, int n) { return {n - c.k, n - c.j, c.i - c.j + 1}; }

CubeCoord psi_cube_inverse(const CubeCoord& c, int n) {
  return {n - c.j + c.k - 1, n - c.j, n - c.i};
}

CubeCoord phi_cube(const CubeCoord& c, int n) { return {n - c.i, c.k, c.j}; }

namespace {

// color-flip plus a cube relocation over the full domain
TwoColorPyramid relocate_flipped(const TwoColorPyramid& p, TriangleFamily out_family,
                                 CubeCoord (*map)(const CubeCoord&, int)) {
  const int n = p.index();
  TwoColorPyramid out(out_family, n);
  for (int i = 1; i <= p.row_count(); ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= p.tower_height(i, j); ++k)
        out.set_color(map(CubeCoord{i, j, k}, n), 1 - p.color(i, j, k));
  return out;
}

}  // namespace

TwoColorPyramid psi(const TwoColorPyramid& p) {
  if (p.family() != TriangleFamily::omagog)
    throw InvalidArgument("psi expects an omagog pyramid");
  return relocate_flipped(p, TriangleFamily::kagog, psi_cube);
}

TwoColorPyramid psi_inverse(const TwoColorPyramid& p) {
  if (p.family() != TriangleFamily::kagog)
    throw InvalidArgument("psi_inverse expects a kagog pyramid");
  return relocate_flipped(p, TriangleFamily::omagog, psi_cube_inverse);
}

TwoColorPyramid phi(const TwoColorPyramid& p) {
  if (p.family() != TriangleFamily::ogog) throw InvalidArgument("phi expects an ogog pyramid");
  return relocate_flipped(p, TriangleFamily::ogog, phi_cube);
}

Triangle psi_triangle(const Triangle& omagog) { return from_pyramid(psi(to_pyramid(omagog))); }

Triangle psi_inverse_triangle(const Triangle& kagog) {
  return from_pyramid(psi_inverse(to_pyramid(kagog)));
}

Triangle phi_triangle(const Triangle& ogog) { return from_pyramid(phi(to_pyramid(ogog))); }

std::string render_layers(const TwoColorPyramid& p) {
  std::string out;
  int max_height = 0;
  for (int i = 1; i <= p.row_count(); ++i)
    for (int j = 1; j <= i; ++j) max_height = std::max(max_height, p.tower_height(i, j));
  for (int k = 1; k <= max_height; ++k) {
    if (k > 1) out += '\n';
    for (int i = 1; i <= p.row_count(); ++i) {
      std::string line;
      bool any = false;
      for (int j = 1; j <= i; ++j) {
        if (p.in_domain(i, j, k)) {
          line += p.color(i, j, k) ? '#' : '.';
          any = true;
        } else {
          line += ' ';
        }
      }
      if (!any) continue;
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
  }
  return out;
}

}  // namespace finetti
