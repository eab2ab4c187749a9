#include "cayley/hnn.hpp"

#include <cstdlib>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

bool in_edge_group(const GroupElement& x) { return x.right().empty(); }

int edge_group_character(const GroupElement& x) { return -exponent_sum(x.right(), 3); }

GroupElement kill_stable_letter(const GroupElement& x) {
  std::vector<int> kept;
  for (Letter l : x.right().letters())
    if (std::abs(l) != 4) kept.push_back(l);
  return GroupElement(x.left(), FreeWord::reduce(kept));
}

SheetTag sheet_tag(const GroupElement& x) {
  auto letters = x.right().letters();
  std::size_t end = letters.size();
  while (end > 0 && std::abs(letters[end - 1]) == 3) --end;
  std::vector<int> prefix(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(end));
  return SheetTag{FreeWord::reduce(prefix)};
}

std::vector<std::size_t> sheet_crossings(const GenSet& gs, const GroupElement& start, const GenWord& w) {
  if (!gs.is_hnn()) throw UnsupportedError("sheets are defined only for the s2 marking, not " + gs.name());
  std::vector<std::size_t> out;
  GroupElement cur = start;
  SheetTag tag = sheet_tag(cur);
  for (std::size_t j = 0; j < w.size(); ++j) {
    cur = cur * gs.edge(w[j]);
    SheetTag next = sheet_tag(cur);
    if (!(next == tag)) out.push_back(j);
    tag = std::move(next);
  }
  return out;
}

EdgeGroupWord express_in_edge_group(const GenWord& w) {
  EdgeGroupWord out;
  out.reserve(w.size());
  for (auto e : w.edges()) {
    int gen = e / 2;
    if (gen > 1) throw InputError("edge-group rewriting takes words over a, b and their inverses only");
    out.push_back({gen, (e & 1) ? -1 : 1});
  }
  return out;
}

GroupElement eval_edge_group_word(const EdgeGroupWord& w) {
  const GenSet s2 = GenSet::hnn();
  const GroupElement c = s2.generator(2);
  GroupElement g;
  for (const auto& l : w) {
    GroupElement base = s2.generator(l.generator) * c;
    g = g * (l.exponent > 0 ? base : base.inverse());
  }
  return g;
}

std::string to_string(const EdgeGroupWord& w) {
  std::string s;
  for (const auto& l : w) {
    s += l.generator == 0 ? "(ac)" : "(bc)";
    if (l.exponent < 0) s += "^{-1}";
  }
  return s;
}

}  // namespace cayley
