// Decision procedure with certificates for equations
// alpha x^2 + beta y^2 + gamma z^2 = delta xyz over positive integers.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pinwheel/numeric.hpp"

namespace pinwheel::dioph {

using Solution = std::array<Int, 3>;

struct Equation {
  Int alpha, beta, gamma, delta;

  // Requires alpha <= beta <= gamma, pairwise coprime, and alpha*beta*gamma | delta.
  Equation(Int a, Int b, Int g, Int d);

  bool is_solution(const Solution& s) const;
  Int coeff(int slot) const;  // slot 1..3
};

// One scanned search box of the fundamental-solution search, kept for the
// emptiness certificate.
struct SearchBox {
  int max_term_slot;    // which variable carries the largest term
  int min_slot;         // which of the other two is scanned as the minimum
  Int min_bound;        // bound on that variable
  Int examined;         // candidate (n, m) pairs examined in this box
};

struct Certificate {
  bool solvable = false;
  std::optional<Solution> witness;          // a fundamental solution when solvable
  std::vector<Solution> fundamentals;       // all fundamental solutions found
  std::vector<SearchBox> boxes;             // exhausted boxes when not solvable
  Int candidates_examined = 0;
};

// Replaces the slot variable (1..3) by the other root of its quadratic.
// Requires sol to be a positive solution; the result is again one.
Solution vieta_jump(const Equation& eq, const Solution& sol, int slot);

// True when no jump strictly decreases x + y + z.
bool is_fundamental(const Equation& eq, const Solution& sol);

// Exhaustive scan of the finite fundamental-solution box.
Certificate find_fundamental_solutions(const Equation& eq);

std::pair<bool, Certificate> has_positive_solution(const Equation& eq);

// Jump path from sol to a fundamental solution; each step strictly
// decreases the coordinate sum. The initial point is included.
std::vector<Solution> descend(const Equation& eq, const Solution& sol);

struct TableEntry {
  std::array<Int, 4> eq;  // (alpha, beta, gamma, delta)
  bool solvable;
  std::optional<Solution> witness;
};

struct TableReport {
  std::vector<TableEntry> scanned;     // all admissible tuples in range
  std::vector<std::array<Int, 4>> solvable;
  bool matches_expected = false;       // solvable set == the six known tuples
};

// Scans all admissible (alpha, beta, gamma, delta) with gamma <= 6 and
// delta <= 3*alpha*beta*gamma.
TableReport verify_rosenberger_table();

}  // namespace pinwheel::dioph
