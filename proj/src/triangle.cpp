#include "finetti/triangle.hpp"

#include <algorithm>

#include "finetti/errors.hpp"

namespace finetti {

const char* family_name(TriangleFamily f) {
  switch (f) {
    case TriangleFamily::kagog: return "kagog";
    case TriangleFamily::magog: return "magog";
    case TriangleFamily::omagog: return "omagog";
    case TriangleFamily::gog: return "gog";
    case TriangleFamily::ogog: return "ogog";
  }
  return "?";
}

TriangleFamily family_from_name(const std::string& name) {
  if (name == "kagog") return TriangleFamily::kagog;
  if (name == "magog") return TriangleFamily::magog;
  if (name == "omagog") return TriangleFamily::omagog;
  if (name == "gog") return TriangleFamily::gog;
  if (name == "ogog") return TriangleFamily::ogog;
  throw InvalidArgument("unknown triangle family: " + name);
}

int family_rows(TriangleFamily f, int index) {
  switch (f) {
    case TriangleFamily::magog:
    case TriangleFamily::gog: return index;
    default: return index - 1;
  }
}

int max_entry(TriangleFamily f, int n, int i, int j) {
  switch (f) {
    case TriangleFamily::kagog:
    case TriangleFamily::magog:
    case TriangleFamily::omagog: return j;
    case TriangleFamily::gog: return n - i + j;
    case TriangleFamily::ogog: return n - i;
  }
  return 0;
}

std::string ValidationReport::message() const {
  if (ok) return "ok";
  return "violates " + axiom + " at (" + std::to_string(row) + "," + std::to_string(col) + ")";
}

namespace {

ValidationReport fail(const char* axiom, int i, int j) {
  return ValidationReport{false, axiom, i, j};
}

}  // namespace

ValidationReport validate(const Triangle& t) {
  const int n = t.index;
  if (n < 1) throw ShapeError("triangle index must be >= 1");
  const int r = family_rows(t.family, n);
  if (static_cast<int>(t.rows.size()) != r)
    throw ShapeError("triangle of index " + std::to_string(n) + " needs " + std::to_string(r) +
                     " rows, got " + std::to_string(t.rows.size()));
  for (int i = 1; i <= r; ++i)
    if (static_cast<int>(t.rows[i - 1].size()) != i)
      throw ShapeError("row " + std::to_string(i) + " must have " + std::to_string(i) +
                       " entries");

  // Scan row-major, each cell checked against its upper and left neighbours,
  // so the first report names the cell whose entry breaks the axiom.
  auto v = [&](int i, int j) { return t.at(i, j); };
  switch (t.family) {
    case TriangleFamily::kagog:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= i; ++j) {
          if (v(i, j) < 0 || v(i, j) > j) return fail("K2", i, j);
          if (i > 1 && j <= i - 1 && v(i, j) > v(i - 1, j)) return fail("K3", i, j);
          if (j > 1 && v(i, j - 1) > 0 && v(i, j) <= v(i, j - 1)) return fail("K4", i, j);
        }
      break;
    case TriangleFamily::magog:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= i; ++j) {
          if (v(i, j) < 1 || v(i, j) > j) return fail("M2", i, j);
          if (i > 1 && j <= i - 1 && v(i, j) < v(i - 1, j)) return fail("M3", i, j);
          if (j > 1 && v(i, j) < v(i, j - 1)) return fail("M4", i, j);
        }
      break;
    case TriangleFamily::omagog:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= i; ++j) {
          if (v(i, j) < 0 || v(i, j) > j) return fail("OM2", i, j);
          if (i > 1 && j <= i - 1 && v(i, j) < v(i - 1, j)) return fail("OM3", i, j);
          if (j > 1 && v(i, j) < v(i, j - 1)) return fail("OM4", i, j);
        }
      break;
    case TriangleFamily::gog:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= i; ++j) {
          if (v(i, j) < 1 || v(i, j) > n - i + j) return fail("G2", i, j);
          if (j > 1 && v(i, j) <= v(i, j - 1)) return fail("G3", i, j);
          if (i > 1 && j <= i - 1 && v(i, j) > v(i - 1, j)) return fail("G4", i, j);
          if (i > 1 && j > 1 && v(i, j) < v(i - 1, j - 1)) return fail("G5", i, j);
        }
      break;
    case TriangleFamily::ogog:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= i; ++j) {
          if (v(i, j) < 0 || v(i, j) > n - i) return fail("OG2", i, j);
          if (j > 1 && v(i, j) < v(i, j - 1)) return fail("OG3", i, j);
          if (i > 1 && j <= i - 1 && v(i, j) > v(i - 1, j)) return fail("OG4", i, j);
          if (i > 1 && j > 1 && v(i, j) < v(i - 1, j - 1) - 1) return fail("OG5", i, j);
        }
      break;
  }
  return ValidationReport{};
}

void require_valid(const Triangle& t) {
  const auto rep = validate(t);
  if (!rep.ok)
    throw ValidationError(std::string(family_name(t.family)) + " triangle " + rep.message());
}

namespace {

// Candidate range for cell (i,j) given the already-filled cells above and to
// the left; DFS over these ranges visits exactly the valid triangles in
// ascending lexicographic order.
struct CellBounds {
  int lo, hi;
};

CellBounds bounds_for(const Triangle& t, int i, int j) {
  const int n = t.index;
  const auto& rows = t.rows;
  switch (t.family) {
    case TriangleFamily::kagog: {
      int lo = 0, hi = j;
      if (i > 1 && j <= i - 1) hi = std::min(hi, rows[i - 2][j - 1]);  // columns weakly decrease
      if (j > 1 && rows[i - 1][j - 2] > 0) lo = rows[i - 1][j - 2] + 1;
      return {lo, hi};
    }
    case TriangleFamily::magog: {
      int lo = 1;
      if (i > 1 && j <= i - 1) lo = std::max(lo, rows[i - 2][j - 1]);
      if (j > 1) lo = std::max(lo, rows[i - 1][j - 2]);
      return {lo, j};
    }
    case TriangleFamily::omagog: {
      int lo = 0;
      if (i > 1 && j <= i - 1) lo = std::max(lo, rows[i - 2][j - 1]);
      if (j > 1) lo = std::max(lo, rows[i - 1][j - 2]);
      return {lo, j};
    }
    case TriangleFamily::gog: {
      int lo = 1, hi = n - i + j;
      if (j > 1) lo = std::max(lo, rows[i - 1][j - 2] + 1);          // strict rows
      if (i > 1 && j > 1) lo = std::max(lo, rows[i - 2][j - 2]);     // diagonals rise
      if (i > 1 && j <= i - 1) hi = std::min(hi, rows[i - 2][j - 1]);  // columns fall
      return {lo, hi};
    }
    case TriangleFamily::ogog: {
      int lo = 0, hi = n - i;
      if (j > 1) lo = std::max(lo, rows[i - 1][j - 2]);
      if (i > 1 && j > 1) lo = std::max(lo, rows[i - 2][j - 2] - 1);  // diagonal drop <= 1
      if (i > 1 && j <= i - 1) hi = std::min(hi, rows[i - 2][j - 1]);
      return {lo, hi};
    }
  }
  return {0, -1};
}

bool fill_from(Triangle& t, int i, int j, int total_rows,
               const std::function<bool(const Triangle&)>& visit) {
  if (i > total_rows) return visit(t);
  const int ni = j == i ? i + 1 : i;
  const int nj = j == i ? 1 : j + 1;
  const auto b = bounds_for(t, i, j);
  for (int v = b.lo; v <= b.hi; ++v) {
    t.rows[i - 1][j - 1] = v;
    if (!fill_from(t, ni, nj, total_rows, visit)) return false;
  }
  return true;
}

}  // namespace

void enumerate_family(TriangleFamily f, int n, const std::function<bool(const Triangle&)>& visit) {
  if (n < 1) throw InvalidArgument("enumerate_family: n must be >= 1");
  const int r = family_rows(f, n);
  Triangle t;
  t.family = f;
  t.index = n;
  t.rows.resize(r);
  for (int i = 1; i <= r; ++i) t.rows[i - 1].assign(i, 0);
  if (r == 0) {
    visit(t);  // the unique empty triangle
    return;
  }
  fill_from(t, 1, 1, r, visit);
}

std::vector<Triangle> collect_family(TriangleFamily f, int n) {
  std::vector<Triangle> out;
  enumerate_family(f, n, [&](const Triangle& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

namespace {

Triangle extreme_triangle(TriangleFamily f, int n, bool maximum) {
  const int r = family_rows(f, n);
  Triangle t;
  t.family = f;
  t.index = n;
  t.rows.resize(r);
  for (int i = 1; i <= r; ++i) {
    t.rows[i - 1].resize(i);
    for (int j = 1; j <= i; ++j) {
      int v;
      if (maximum) {
        v = max_entry(f, n, i, j);
      } else {
        switch (f) {
          case TriangleFamily::magog: v = 1; break;
          case TriangleFamily::gog: v = j; break;
          default: v = 0; break;
        }
      }
      t.rows[i - 1][j - 1] = v;
    }
  }
  return t;
}

}  // namespace

Triangle min_triangle(TriangleFamily f, int n) { return extreme_triangle(f, n, false); }
Triangle max_triangle(TriangleFamily f, int n) { return extreme_triangle(f, n, true); }

Triangle magog_to_omagog(const Triangle& m) {
  if (m.family != TriangleFamily::magog) throw InvalidArgument("magog_to_omagog: not a magog");
  require_valid(m);
  const int n = m.index;
  if (n < 2) throw InvalidArgument("magog_to_omagog: index must be >= 2");
  Triangle o;
  o.family = TriangleFamily::omagog;
  o.index = n;
  o.rows.resize(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    o.rows[i - 1].resize(i);
    for (int j = 1; j <= i; ++j) o.rows[i - 1][j - 1] = m.at(i + 1, j + 1) - 1;
  }
  require_valid(o);
  return o;
}

Triangle omagog_to_magog(const Triangle& o) {
  if (o.family != TriangleFamily::omagog) throw InvalidArgument("omagog_to_magog: not an omagog");
  require_valid(o);
  const int n = o.index;
  Triangle m;
  m.family = TriangleFamily::magog;
  m.index = n;
  m.rows.resize(n);
  for (int i = 1; i <= n; ++i) {
    m.rows[i - 1].resize(i);
    m.rows[i - 1][0] = 1;
    for (int j = 2; j <= i; ++j) m.rows[i - 1][j - 1] = o.at(i - 1, j - 1) + 1;
  }
  require_valid(m);
  return m;
}

Triangle gog_to_ogog(const Triangle& g) {
  if (g.family != TriangleFamily::gog) throw InvalidArgument("gog_to_ogog: not a gog");
  require_valid(g);
  const int n = g.index;
  if (n < 2) throw InvalidArgument("gog_to_ogog: index must be >= 2");
  Triangle o;
  o.family = TriangleFamily::ogog;
  o.index = n;
  o.rows.resize(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    o.rows[i - 1].resize(i);
    for (int j = 1; j <= i; ++j) o.rows[i - 1][j - 1] = g.at(i, j) - j;
  }
  require_valid(o);
  return o;
}

Triangle ogog_to_gog(const Triangle& o) {
  if (o.family != TriangleFamily::ogog) throw InvalidArgument("ogog_to_gog: not an ogog");
  require_valid(o);
  const int n = o.index;
  Triangle g;
  g.family = TriangleFamily::gog;
  g.index = n;
  g.rows.resize(n);
  for (int i = 1; i <= n - 1; ++i) {
    g.rows[i - 1].resize(i);
    for (int j = 1; j <= i; ++j) g.rows[i - 1][j - 1] = o.at(i, j) + j;
  }
  g.rows[n - 1].resize(n);
  for (int j = 1; j <= n; ++j) g.rows[n - 1][j - 1] = j;
  require_valid(g);
  return g;
}

std::string render_flat(const Triangle& t) {
  std::string out;
  for (const auto& row : t.rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace finetti
