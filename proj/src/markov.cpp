#include "pinwheel/markov.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace pinwheel::markov {

Triple::Triple(Int x, Int y, Int z) : a(std::move(x)), b(std::move(y)), c(std::move(z)) {
  if (a < b) std::swap(a, b);
  if (a < c) std::swap(a, c);
  if (b < c) std::swap(b, c);
  std::swap(a, c);  // now a <= b <= c
  if (a < 1) throw std::invalid_argument("Triple: entries must be positive");
  if (a * a + b * b + c * c != 3 * a * b * c)
    throw std::invalid_argument("Triple: Markov equation fails");
}

bool Triple::operator<(const Triple& o) const {
  if (c != o.c) return c < o.c;
  if (b != o.b) return b < o.b;
  return a < o.a;
}

bool is_markov_triple(const Int& a, const Int& b, const Int& c) {
  if (a < 1 || b < 1 || c < 1) return false;
  return a * a + b * b + c * c == 3 * a * b * c;
}

Triple mutate(const Triple& t, int slot) {
  if (slot < 1 || slot > 3) throw std::out_of_range("mutate: slot must be 1..3");
  Int x = slot == 1 ? t.a : slot == 2 ? t.b : t.c;
  Int y = slot == 1 ? t.b : t.a;
  Int z = slot == 3 ? t.b : t.c;
  return Triple(y, z, 3 * y * z - x);
}

std::vector<Triple> enumerate_triples(const Int& max_entry) {
  if (max_entry < 1) throw std::invalid_argument("enumerate_triples: bound must be >= 1");
  std::set<Triple> seen;
  std::deque<Triple> queue;
  Triple root(1, 1, 1);
  if (root.max_entry() <= max_entry) {
    seen.insert(root);
    queue.push_back(root);
  }
  while (!queue.empty()) {
    Triple t = queue.front();
    queue.pop_front();
    for (int slot = 1; slot <= 3; ++slot) {
      Triple next = mutate(t, slot);
      if (next.max_entry() > max_entry) continue;  // children only grow further
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<Triple>(seen.begin(), seen.end());
}

bool is_markov_number(const Int& p) {
  if (p < 1) return false;
  // Any Markov number occurs as the max entry of some triple: descending the
  // tree removes p exactly when p is the largest slot.
  for (const Triple& t : enumerate_triples(p))
    if (t.contains(p)) return true;
  return false;
}

ResidueSet characteristic_residues(const Triple& t, const Int& entry) {
  if (!t.contains(entry)) throw std::invalid_argument("characteristic_residues: entry not in triple");
  ResidueSet out;
  out.p = entry;
  if (entry == 1) return out;
  // The two remaining entries. Duplicates >= 2 cannot occur (pairwise coprime).
  Int u, v;
  if (entry == t.a) {
    u = t.b;
    v = t.c;
  } else if (entry == t.b) {
    u = t.a;
    v = t.c;
  } else {
    u = t.a;
    v = t.b;
  }
  Int r = mod_reduce(3 * u * mod_inverse(v, entry), entry);
  Int s = mod_reduce(entry - r, entry);
  out.residues.push_back(r);
  if (s != r) out.residues.push_back(s);
  std::sort(out.residues.begin(), out.residues.end());
  return out;
}

Int canonical_residue(const Int& p, const Int& r) {
  Int rr = mod_reduce(r, p);
  return std::min(rr, p - rr);
}

std::optional<Triple> markov_partner(const Int& p, const Int& q) {
  if (p < 2 || q < 1 || q >= p) throw std::invalid_argument("markov_partner: need 1 <= q < p, p >= 2");
  if (gcd(p, q) != 1) throw std::invalid_argument("markov_partner: gcd(p, q) must be 1");
  // a, b < p forces p to be the max entry, so enumeration up to p suffices.
  for (const Triple& t : enumerate_triples(p)) {
    if (t.c != p || t.b == p) continue;
    ResidueSet rs = characteristic_residues(t, p);
    for (const Int& r : rs.residues)
      if (r == q) return t;
  }
  return std::nullopt;
}

}  // namespace pinwheel::markov
