// Topological invariants of the rational balls B_{p,q} and their lens-space
// boundaries: Reeb stabiliser arithmetic, homology orders, Chern residues,
// divisibility checks and the Fibonacci branch data.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinwheel/numeric.hpp"

namespace pinwheel::topology {

struct PinwheelType {
  Int p, q;

  // Requires p >= 2, 0 < q < p, gcd(p, q) = 1.
  PinwheelType(Int p_, Int q_);

  // The q ~ p - q symmetry; canonical form has q <= p/2.
  PinwheelType normalized() const;
};

struct TopologyProfile {
  Int h1_boundary_order;    // p^2
  Int h1_ball_order;        // p
  Int h2_cohom_ball_order;  // p
  Int chern_residue;        // q mod p, primitive
  std::string restriction_map = "reduction mod p";
};

enum class StabiliserCase { OneMod4, ZeroMod4, TwoMod4, Degenerate };

struct ReebStabiliser {
  Int g;                 // gcd(p^2, pq - 2), or p^2 when pq - 2 = 0
  StabiliserCase tag;
};

std::string to_string(StabiliserCase c);

ReebStabiliser reeb_stabiliser(const PinwheelType& t);

TopologyProfile topology_profile(const PinwheelType& t);

// True iff B_{p,q} can embed in a manifold whose first Chern class is
// divisible by d, i.e. gcd(p, d) = 1.
bool chern_divisibility_check(const Int& p, const Int& d);

// Divisor forced on a class avoiding part of the singular set:
// Delta^2 / prod of p_i^2 over the points the class meets.
Int required_boundary_divisor(const std::vector<Int>& all_p,
                              const std::vector<std::size_t>& met_indices);

struct FibonacciBranch {
  Int lucas;     // L with L^2 = 5p^2 - 4
  Rat d_ratio;   // (3p - L) / (2p)
};

// Non-empty exactly when 5p^2 - 4 is a perfect square, i.e. when p is an
// odd-indexed Fibonacci number. p = 1 is allowed and yields (1, 1).
std::optional<FibonacciBranch> fibonacci_branch(const Int& p);

// Odd-indexed Fibonacci numbers F_1, F_3, F_5, ... up to the bound,
// generated by the recursion (test oracle for fibonacci_branch).
std::vector<Int> odd_index_fibonacci_upto(const Int& bound);

}  // namespace pinwheel::topology
