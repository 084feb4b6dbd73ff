#include "pinwheel/diophantine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pinwheel::dioph {

Equation::Equation(Int a, Int b, Int g, Int d)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)), delta(std::move(d)) {
  if (alpha < 1 || delta < 1) throw std::invalid_argument("Equation: coefficients must be positive");
  if (!(alpha <= beta && beta <= gamma))
    throw std::invalid_argument("Equation: need alpha <= beta <= gamma");
  if (gcd(alpha, beta) != 1 || gcd(alpha, gamma) != 1 || gcd(beta, gamma) != 1)
    throw std::invalid_argument("Equation: coefficients must be pairwise coprime");
  if (delta % (alpha * beta * gamma) != 0)
    throw std::invalid_argument("Equation: alpha*beta*gamma must divide delta");
}

bool Equation::is_solution(const Solution& s) const {
  if (s[0] < 1 || s[1] < 1 || s[2] < 1) return false;
  return alpha * s[0] * s[0] + beta * s[1] * s[1] + gamma * s[2] * s[2] ==
         delta * s[0] * s[1] * s[2];
}

Int Equation::coeff(int slot) const {
  switch (slot) {
    case 1: return alpha;
    case 2: return beta;
    case 3: return gamma;
  }
  throw std::out_of_range("Equation::coeff: slot must be 1..3");
}

Solution vieta_jump(const Equation& eq, const Solution& sol, int slot) {
  if (slot < 1 || slot > 3) throw std::out_of_range("vieta_jump: slot must be 1..3");
  if (!eq.is_solution(sol)) throw std::invalid_argument("vieta_jump: not a positive solution");
  // x + x' = delta*y*z/coeff; the quotient is integral since coeff | delta.
  Int others = sol[slot % 3] * sol[(slot + 1) % 3];
  Solution out = sol;
  out[slot - 1] = eq.delta * others / eq.coeff(slot) - sol[slot - 1];
  return out;
}

bool is_fundamental(const Equation& eq, const Solution& sol) {
  Int sum = sol[0] + sol[1] + sol[2];
  for (int slot = 1; slot <= 3; ++slot) {
    Solution j = vieta_jump(eq, sol, slot);
    if (j[0] + j[1] + j[2] < sum) return false;
  }
  return true;
}

namespace {

// Positive integer roots of c2*t^2 + c1*t + c0 = 0.
std::vector<Int> quadratic_roots(const Int& c2, const Int& c1, const Int& c0) {
  std::vector<Int> roots;
  Int disc = c1 * c1 - 4 * c2 * c0;
  if (disc < 0 || !is_perfect_square(disc)) return roots;
  Int w = isqrt(disc);
  for (int sign : {-1, 1}) {
    Int num = -c1 + sign * w;
    if (num <= 0) continue;
    if (num % (2 * c2) != 0) continue;
    Int t = num / (2 * c2);
    if (roots.empty() || roots.back() != t) roots.push_back(t);
  }
  return roots;
}

// floor(sqrt(p/q)) for positive rationals.
Int floor_sqrt_ratio(const Int& p, const Int& q) {
  // largest n with n^2 * q <= p
  Int n = isqrt(p / q) + 2;
  while (n * n * q > p) --n;
  return n;
}

}  // namespace

// At a fundamental solution every jump is non-decreasing, which pins down a
// finite box. With the max term at slot s (coefficient g) and the other two
// variables n <= m (coefficients cn, cm):
//   delta*x*y*z <= 3*g*s^2        (max term)
//   cn*n^2 + cm*m^2 >= g*s^2      (s-jump non-decreasing)
// combine to n^2 <= 9*g*(cn+cm)/delta^2, and the m-jump gives
//   m^2 <= cn*delta^2*n^4 / (A*cm)  with  A = delta^2*n^2 - 4*g*cm > 0
// (A <= 0 admits no solution with that n at all). The remaining variable is
// a root of its quadratic, so the whole box is finite and scanned exactly.
Certificate find_fundamental_solutions(const Equation& eq) {
  Certificate cert;
  std::set<Solution> found;
  const Int d2 = eq.delta * eq.delta;
  for (int s = 1; s <= 3; ++s) {          // slot carrying the max term
    Int g = eq.coeff(s);
    // the two remaining slots
    std::array<int, 2> others{};
    int k = 0;
    for (int t = 1; t <= 3; ++t)
      if (t != s) others[k++] = t;
    for (int which = 0; which < 2; ++which) {  // which of them is the minimum
      int ns = others[which], ms = others[1 - which];
      Int cn = eq.coeff(ns), cm = eq.coeff(ms);
      Int nmax = floor_sqrt_ratio(9 * g * (cn + cm), d2);
      SearchBox box{s, ns, nmax, 0};
      for (Int n = 1; n <= nmax; ++n) {
        Int A = d2 * n * n - 4 * g * cm;
        if (A <= 0) continue;
        Int mmax = floor_sqrt_ratio(cn * d2 * n * n * n * n, A * cm);
        for (Int m = n; m <= mmax; ++m) {
          box.examined += 1;
          // g*t^2 - delta*n*m*t + (cn*n^2 + cm*m^2) = 0
          for (const Int& t : quadratic_roots(g, -eq.delta * n * m, cn * n * n + cm * m * m)) {
            Solution sol;
            sol[s - 1] = t;
            sol[ns - 1] = n;
            sol[ms - 1] = m;
            if (eq.is_solution(sol) && is_fundamental(eq, sol)) found.insert(sol);
          }
        }
      }
      cert.candidates_examined += box.examined;
      cert.boxes.push_back(box);
    }
  }
  cert.fundamentals.assign(found.begin(), found.end());
  cert.solvable = !cert.fundamentals.empty();
  if (cert.solvable) cert.witness = cert.fundamentals.front();
  return cert;
}

std::pair<bool, Certificate> has_positive_solution(const Equation& eq) {
  Certificate cert = find_fundamental_solutions(eq);
  return {cert.solvable, cert};
}

std::vector<Solution> descend(const Equation& eq, const Solution& sol) {
  if (!eq.is_solution(sol)) throw std::invalid_argument("descend: not a positive solution");
  std::vector<Solution> path{sol};
  Solution cur = sol;
  while (!is_fundamental(eq, cur)) {
    Int sum = cur[0] + cur[1] + cur[2];
    Solution best = cur;
    Int best_sum = sum;
    for (int slot = 1; slot <= 3; ++slot) {
      Solution j = vieta_jump(eq, cur, slot);
      Int js = j[0] + j[1] + j[2];
      if (js < best_sum) {
        best = j;
        best_sum = js;
      }
    }
    cur = best;
    path.push_back(cur);
  }
  return path;
}

TableReport verify_rosenberger_table() {
  TableReport report;
  static const std::array<std::array<long, 4>, 6> kExpected{{
      {1, 1, 1, 1}, {1, 1, 1, 3}, {1, 1, 2, 2}, {1, 1, 2, 4}, {1, 2, 3, 6}, {1, 1, 5, 5}}};
  for (long a = 1; a <= 6; ++a)
    for (long b = a; b <= 6; ++b)
      for (long g = b; g <= 6; ++g) {
        if (gcd(Int(a), Int(b)) != 1 || gcd(Int(a), Int(g)) != 1 || gcd(Int(b), Int(g)) != 1)
          continue;
        Int abg = Int(a) * b * g;
        for (long mult = 1; mult <= 3; ++mult) {
          Equation eq(a, b, g, abg * mult);
          auto [solvable, cert] = has_positive_solution(eq);
          TableEntry entry;
          entry.eq = {eq.alpha, eq.beta, eq.gamma, eq.delta};
          entry.solvable = solvable;
          entry.witness = cert.witness;
          if (solvable) report.solvable.push_back(entry.eq);
          report.scanned.push_back(std::move(entry));
        }
      }
  std::vector<std::array<Int, 4>> expected;
  for (const auto& e : kExpected) expected.push_back({Int(e[0]), Int(e[1]), Int(e[2]), Int(e[3])});
  std::sort(expected.begin(), expected.end());
  auto got = report.solvable;
  std::sort(got.begin(), got.end());
  report.matches_expected = got == expected;
  return report;
}

}  // namespace pinwheel::dioph
