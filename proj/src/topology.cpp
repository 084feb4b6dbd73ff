#include "pinwheel/topology.hpp"

#include <stdexcept>

namespace pinwheel::topology {

PinwheelType::PinwheelType(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p < 2) throw std::invalid_argument("PinwheelType: p must be >= 2");
  if (q <= 0 || q >= p) throw std::invalid_argument("PinwheelType: need 0 < q < p");
  if (gcd(p, q) != 1) throw std::invalid_argument("PinwheelType: gcd(p, q) must be 1");
}

PinwheelType PinwheelType::normalized() const {
  return 2 * q <= p ? *this : PinwheelType(p, p - q);
}

std::string to_string(StabiliserCase c) {
  switch (c) {
    case StabiliserCase::OneMod4: return "p=1,3 mod 4";
    case StabiliserCase::ZeroMod4: return "p=0 mod 4";
    case StabiliserCase::TwoMod4: return "p=2 mod 4";
    case StabiliserCase::Degenerate: return "special";
  }
  return "?";
}

ReebStabiliser reeb_stabiliser(const PinwheelType& t) {
  Int n = t.p * t.q - 2;
  if (n == 0) return {t.p * t.p, StabiliserCase::Degenerate};
  Int g = gcd(t.p * t.p, n);
  Int m = mod_reduce(t.p, 4);
  StabiliserCase tag = m == 0   ? StabiliserCase::ZeroMod4
                       : m == 2 ? StabiliserCase::TwoMod4
                                : StabiliserCase::OneMod4;
  // Sanity: for coprime (p, q) the value is pinned by p mod 4.
  Int expected = m == 0 ? 2 : m == 2 ? 4 : 1;
  if (g != expected) throw std::logic_error("reeb_stabiliser: case table mismatch");
  return {g, tag};
}

TopologyProfile topology_profile(const PinwheelType& t) {
  TopologyProfile prof;
  prof.h1_boundary_order = t.p * t.p;
  prof.h1_ball_order = t.p;
  prof.h2_cohom_ball_order = t.p;
  prof.chern_residue = mod_reduce(t.q, t.p);
  return prof;
}

bool chern_divisibility_check(const Int& p, const Int& d) {
  if (p < 1 || d < 1) throw std::invalid_argument("chern_divisibility_check: need p, d >= 1");
  return gcd(p, d) == 1;
}

Int required_boundary_divisor(const std::vector<Int>& all_p,
                              const std::vector<std::size_t>& met_indices) {
  Int delta = 1;
  for (const Int& p : all_p) delta *= p;
  Int met_sq = 1;
  for (std::size_t i : met_indices) {
    if (i >= all_p.size()) throw std::out_of_range("required_boundary_divisor: bad index");
    met_sq *= all_p[i] * all_p[i];
  }
  Int d2 = delta * delta;
  if (d2 % met_sq != 0) throw std::logic_error("required_boundary_divisor: duplicate index");
  return d2 / met_sq;
}

std::optional<FibonacciBranch> fibonacci_branch(const Int& p) {
  if (p < 1) throw std::invalid_argument("fibonacci_branch: p must be positive");
  Int disc = 5 * p * p - 4;
  if (!is_perfect_square(disc)) return std::nullopt;
  Int lucas = isqrt(disc);
  return FibonacciBranch{lucas, make_rat(3 * p - lucas, 2 * p)};
}

std::vector<Int> odd_index_fibonacci_upto(const Int& bound) {
  std::vector<Int> out;
  Int a = 1, b = 1;  // (F_1, F_2)
  while (a <= bound) {
    out.push_back(a);
    // (F_n, F_{n+1}) -> (F_{n+2}, F_{n+3})
    Int na = a + b;
    b = a + 2 * b;
    a = na;
  }
  return out;
}

}  // namespace pinwheel::topology
