#pragma once

// Structure of G as an HNN extension of P = <a, b, c> (s2 letters) with the
// stable letter t acting trivially on the edge group H = <ac, bc>.

#include <cstddef>
#include <string>
#include <vector>

#include "cayley/genset.hpp"

namespace cayley {

// Membership in H = <ac, bc>. In normal form H is exactly the first free
// factor, so this is "right component is empty".
bool in_edge_group(const GroupElement& x);

// The homomorphism G -> Z with a, b -> 1, c -> -1, t -> 0. Its kernel contains
// H. Equals minus the exponent sum of letter 3 in the right component.
int edge_group_character(const GroupElement& x);

// The retraction G -> P killing t: drops every +-4 letter and re-reduces.
GroupElement kill_stable_letter(const GroupElement& x);

// Canonical tag of the coset xP (the sheet containing x): the right
// component with its maximal trailing run of +-3 letters removed. Only tag
// equality is meaningful.
struct SheetTag {
  FreeWord word;
  friend bool operator==(const SheetTag&, const SheetTag&) = default;
};
SheetTag sheet_tag(const GroupElement& x);

// Indices j such that the j-th edge of the path start -> start*w changes
// sheet. Requires the s2 marking (UnsupportedError otherwise).
std::vector<std::size_t> sheet_crossings(const GenSet& gs, const GroupElement& start, const GenWord& w);

// A word over the generators ac (0) and bc (1) of H.
struct EdgeGroupLetter {
  int generator = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const EdgeGroupLetter&, const EdgeGroupLetter&) = default;
};
using EdgeGroupWord = std::vector<EdgeGroupLetter>;

// Rewrites w over a, b (s2 letters, inverses allowed) as the product of
// (ac)^{+-1}, (bc)^{+-1} obtained letter by letter. The result evaluates to
// eval(w) * c^{exponent sum of w}. Throws InputError if w uses c or t.
EdgeGroupWord express_in_edge_group(const GenWord& w);

GroupElement eval_edge_group_word(const EdgeGroupWord& w);

// "(ac)(bc)^{-1}"
std::string to_string(const EdgeGroupWord& w);

}  // namespace cayley
