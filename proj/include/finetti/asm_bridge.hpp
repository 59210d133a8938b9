#pragma once

#include <functional>
#include <vector>

#include "finetti/triangle.hpp"

namespace finetti {

// n x n matrix over {-1,0,1}: rows and columns sum to 1 and their nonzero
// entries alternate in sign.
struct AsmMatrix {
  int n = 1;
  std::vector<std::vector<int>> rows;

  int at(int i, int j) const { return rows[i - 1][j - 1]; }  // 1-based
  friend bool operator==(const AsmMatrix& a, const AsmMatrix& b) {
    return a.n == b.n && a.rows == b.rows;
  }
  friend bool operator!=(const AsmMatrix& a, const AsmMatrix& b) { return !(a == b); }
  friend bool operator<(const AsmMatrix& a, const AsmMatrix& b) { return a.rows < b.rows; }
};

// Throws ShapeError when the matrix is not square.
bool validate_asm(const AsmMatrix& a);

// Row i of the output lists the positions of the ones in the sum of the
// first i rows; the partial sums of a valid input are 0-1 vectors with
// exactly i ones.
Triangle asm_to_gog(const AsmMatrix& a);

// Indicator differences of consecutive rows; two-sided inverse of
// asm_to_gog.
AsmMatrix gog_to_asm(const Triangle& g);

AsmMatrix row_reverse(const AsmMatrix& a);

// Conjugation of the pyramid color-flip through the zeroed form: an
// involution on the strict-row triangle family.
Triangle gog_involution(const Triangle& g);

// asm_to_gog(row_reverse(a)) == gog_involution(asm_to_gog(a)) over every
// matrix of size n. Guarded at n <= 6.
bool verify_row_reversal_correspondence(int n, bool unguarded = false);

// Image of the strict-row triangle enumeration; guarded at n <= 7.
void enumerate_asm(int n, const std::function<bool(const AsmMatrix&)>& visit,
                   bool unguarded = false);
std::vector<AsmMatrix> collect_asm(int n, bool unguarded = false);

std::string render_asm(const AsmMatrix& a);

}  // namespace finetti
