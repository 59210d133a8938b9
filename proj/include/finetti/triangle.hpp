#pragma once

#include <functional>
#include <string>
#include <vector>

namespace finetti {

enum class TriangleFamily { kagog, magog, omagog, gog, ogog };

const char* family_name(TriangleFamily f);
TriangleFamily family_from_name(const std::string& name);  // throws InvalidArgument

// Row count of a triangle of the given family and index: the zeroed families
// (kagog, omagog, ogog) drop one forced row, the full ones keep all of them.
int family_rows(TriangleFamily f, int index);

// Left-justified triangular integer array tagged with its family. Row i
// (1-based) has exactly i entries; the family axioms are machine-checkable
// via validate().
struct Triangle {
  TriangleFamily family = TriangleFamily::kagog;
  int index = 1;
  std::vector<std::vector<int>> rows;

  int at(int i, int j) const { return rows[i - 1][j - 1]; }  // 1-based
  friend bool operator==(const Triangle& a, const Triangle& b) {
    return a.family == b.family && a.index == b.index && a.rows == b.rows;
  }
  friend bool operator!=(const Triangle& a, const Triangle& b) { return !(a == b); }
  friend bool operator<(const Triangle& a, const Triangle& b) { return a.rows < b.rows; }
};

struct ValidationReport {
  bool ok = true;
  std::string axiom;  // e.g. "K4"
  int row = 0, col = 0;

  std::string message() const;
};

// First-violation report against the triangle's family axioms. Throws
// ShapeError when the row lengths are not 1,2,...  (index mismatch included).
ValidationReport validate(const Triangle& t);

// Convenience wrapper: throws ValidationError when validate() reports a
// violation.
void require_valid(const Triangle& t);

// All valid triangles of the family, each exactly once, in ascending
// lexicographic order of the flattened rows. The visitor returns false to
// stop early.
void enumerate_family(TriangleFamily f, int n, const std::function<bool(const Triangle&)>& visit);
std::vector<Triangle> collect_family(TriangleFamily f, int n);

// Componentwise extremes of the family under the entrywise order.
Triangle min_triangle(TriangleFamily f, int n);
Triangle max_triangle(TriangleFamily f, int n);

// Entry bound of the family maximum at (i,j); also the tower height of the
// cube-pyramid model.
int max_entry(TriangleFamily f, int n, int i, int j);

// Subtract the forced minimum and drop the forced cells:
// column 1 of a magog triangle is all ones, so o(i,j) = m(i+1,j+1) - 1.
Triangle magog_to_omagog(const Triangle& m);
Triangle omagog_to_magog(const Triangle& o);

// The last row of a gog triangle is forced to 1..n, so o(i,j) = g(i,j) - j
// over the first n-1 rows.
Triangle gog_to_ogog(const Triangle& g);
Triangle ogog_to_gog(const Triangle& o);

std::string render_flat(const Triangle& t);

}  // namespace finetti
