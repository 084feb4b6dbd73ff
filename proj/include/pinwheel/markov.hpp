// Exact arithmetic of Markov triples: recognition, mutation, tree
// enumeration, characteristic residues and partner lookup.
#pragma once

#include <optional>
#include <vector>

#include "pinwheel/numeric.hpp"

namespace pinwheel::markov {

// Sorted positive solution of a^2 + b^2 + c^2 = 3abc.
struct Triple {
  Int a, b, c;

  // Validates the equation and sorts the entries; throws otherwise.
  Triple(Int x, Int y, Int z);

  Int max_entry() const { return c; }
  bool contains(const Int& p) const { return p == a || p == b || p == c; }

  bool operator==(const Triple& o) const { return a == o.a && b == o.b && c == o.c; }
  // Lexicographic by (c, b, a), the canonical enumeration order.
  bool operator<(const Triple& o) const;
};

// The +/- pair of characteristic residues of a triple entry p >= 2,
// each satisfying r^2 = -9 mod p; empty for p = 1.
struct ResidueSet {
  Int p;
  std::vector<Int> residues;  // sorted ascending, closed under r -> p - r
};

bool is_markov_triple(const Int& a, const Int& b, const Int& c);

// Vieta move on the 1-based slot of the sorted triple: the chosen entry x
// is replaced by 3yz - x where y, z are the other two. Result resorted.
Triple mutate(const Triple& t, int slot);

// All triples with max entry <= bound, found by breadth-first traversal of
// the mutation tree from (1,1,1); output sorted lexicographically by (c,b,a).
std::vector<Triple> enumerate_triples(const Int& max_entry);

bool is_markov_number(const Int& p);

// Residues {+3*pj/pk, -3*pj/pk} mod entry, where pj, pk are the other two
// entries of t. Throws if entry does not occur in t.
ResidueSet characteristic_residues(const Triple& t, const Int& entry);

// Representative min(r, p-r) of a residue pair.
Int canonical_residue(const Int& p, const Int& r);

// The unique triple (a, b, p) with a, b < p whose residue set at p contains
// q, if any exists; requires gcd(p, q) = 1.
std::optional<Triple> markov_partner(const Int& p, const Int& q);

}  // namespace pinwheel::markov
