// Exact local invariants of parametrized holomorphic curve germs
// (z^Q, sum a_i z^{R_i}): gcd sequences, the local adjunction contribution,
// intersection multiplicities over roots of unity, and the orbifold
// contributions K_z, k_z, k_{[z,z']} at a cyclic quotient point.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pinwheel/numeric.hpp"
#include "pinwheel/topology.hpp"

namespace pinwheel::germ {

// A coefficient r * zeta_n^k with r a nonzero rational and zeta_n the
// primitive n-th root of unity. Stored in a canonical form so that equality
// of the represented complex numbers is a field-by-field comparison:
// n = 1, or gcd(k, n) = 1 with 1 <= k < n and (n odd or k < n/2);
// half-turns are folded into the sign of r.
struct Cyc {
  Rat r;
  Int n;
  Int k;

  Cyc(Rat r_, Int n_ = 1, Int k_ = 0);

  Cyc times_root(const Int& j, const Int& m) const;  // multiply by zeta_m^j
  Cyc negated() const;
  bool is_rational() const { return n == 1; }

  bool operator==(const Cyc& o) const { return r == o.r && n == o.n && k == o.k; }
  bool operator!=(const Cyc& o) const { return !(*this == o); }
};

// Parametrized branch (z^Q, sum coeff_i z^{R_i}) with strictly increasing
// exponents and nonzero coefficients. The exponent list may be empty
// (an axis branch) and is finite by construction.
struct Branch {
  Int Q;
  std::vector<std::pair<Int, Cyc>> terms;  // (R_i, coefficient)

  Branch(Int Q_, std::vector<std::pair<Int, Cyc>> terms_);

  // Shorthand (z^Q, z^{R1} + z^{R2} + ...) with unit coefficients.
  static Branch unit(Int Q_, const std::vector<Int>& exponents);

  std::vector<Int> exponents() const;
  bool somewhere_injective() const;  // gcd(Q, all R_i) = 1
};

struct GcdSequence {
  std::vector<Int> g;  // g_2, ..., g_{M+1}
  int M;               // least index with g_{M+1} = 1
};

// g_j = gcd(Q, R_1, ..., R_{j-1}). Requires R strictly increasing with
// R_1 > Q and overall gcd 1.
GcdSequence gcd_sequence(const Int& Q, const std::vector<Int>& Rs);

// Local adjunction contribution (= 2 delta = Milnor number of the branch):
// K = (Q - g_2)(R_1 - 1) + (g_2 - g_3)(R_2 - 1) + ... + (g_M - 1)(R_M - 1).
Int local_adjunction_K(const Int& Q, const std::vector<Int>& Rs);

// Local intersection multiplicity of two distinct branches with the same Q:
// sum over zeta^Q = 1 of the vanishing order of h_0(zeta z) - h_1(z).
// Throws when the branches coincide up to a domain rotation.
Int branch_intersection(const Branch& b0, const Branch& b1);

// Incidence of a curve germ at a 1/p^2 (1, pq-1) orbifold point. Either a
// full branch is given, or only the leading exponent pair (Q, R1); in the
// latter case K_z is the Corollary-gcd equality value (requires
// gcd(Q, R1) = 1) unless an explicit override is supplied.
struct Incidence {
  Int p, q;   // target point type
  Int d;      // isotropy order of the domain point, divides p^2
  Int Q, R1;  // leading exponents
  std::optional<Branch> branch;
  std::optional<Int> K_override;  // diagnostic: bypasses the germ computation

  Incidence(Int p_, Int q_, Int d_, Int Q_, Int R1_);
  Incidence(Int p_, Int q_, Int d_, Branch br);

  Int lift_count() const { return p * p / d; }
};

// (Q mod d, R1 mod d); throws when either weight vanishes with d > 1.
std::pair<Int, Int> equivariance_weights(const Int& Q, const Int& R1, const Int& d);

// +1 / -1 when R1 = Q(pq - 1) resp. R1 = Q(-pq - 1) mod d; +1 wins when
// both congruences hold.
std::optional<int> exceptional_asymptotics_sign(const Int& p, const Int& q, const Int& d,
                                                const Int& Q, const Int& R1);

// The p^2/d lifts of the branch under coset representatives of the
// stabiliser in mu_{p^2} acting with weights (1, pq-1), reparametrized back
// to leading form. Requires a full branch.
std::vector<Branch> conjugate_branches(const Incidence& inc);

struct KzValue {
  Int K;   // 2*N_0 + sum of pairwise lift intersections
  Rat k;   // K / (2d)
};

KzValue K_z(const Incidence& inc);

// Direct evaluation (1/p^2) (sum_a delta_a + 1/2 sum_{a != b} nu_{ab});
// agrees with K_z(inc).k. Kept as an independent cross-check route.
Rat k_z_direct(const Incidence& inc);

// (1/p^2) * sum over all lift pairs of the two incidences at the same point.
Rat k_pair(const Incidence& a, const Incidence& b);

// Independent oracle for local_adjunction_K on small branches with rational
// coefficients: implicitizes the branch by eliminating the parameter and
// measures dim of the Jacobian local algebra by linear algebra on truncated
// monomials. Requires Q <= 3 and max exponent <= 9.
Int milnor_number_oracle(const Branch& b);

}  // namespace pinwheel::germ
