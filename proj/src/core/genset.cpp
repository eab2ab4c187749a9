#include "cayley/genset.hpp"

#include <algorithm>
#include <cctype>

#include "cayley/error.hpp"

namespace cayley {

GenSet::GenSet(std::string name, std::array<char, kGenerators> labels, std::array<GroupElement, kGenerators> gens)
    : name_(std::move(name)), labels_(labels) {
  for (int i = 0; i < kGenerators; ++i) {
    auto& g = gens[static_cast<std::size_t>(i)];
    if (g.is_identity()) throw InputError("generator " + std::string(1, labels[i]) + " is the identity");
    edges_[static_cast<std::size_t>(2 * i)] = g;
    edges_[static_cast<std::size_t>(2 * i + 1)] = g.inverse();
  }
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (edges_[i] == edges_[j])
        throw InputError("directed generators " + std::string(1, edge_label(static_cast<int>(i))) + " and " +
                         std::string(1, edge_label(static_cast<int>(j))) + " coincide");
}

GenSet GenSet::standard() {
  return GenSet("s1", {'a', 'b', 'c', 'd'},
                {GroupElement(FreeWord::reduce({1}), {}), GroupElement(FreeWord::reduce({2}), {}),
                 GroupElement({}, FreeWord::reduce({3})), GroupElement({}, FreeWord::reduce({4}))});
}

GenSet GenSet::hnn() {
  return GenSet("s2", {'a', 'b', 'c', 't'},
                {GroupElement(FreeWord::reduce({1}), FreeWord::reduce({-3})),
                 GroupElement(FreeWord::reduce({2}), FreeWord::reduce({-3})), GroupElement({}, FreeWord::reduce({3})),
                 GroupElement({}, FreeWord::reduce({4}))});
}

GenSet GenSet::custom(std::span<const std::string> s1_words) {
  if (s1_words.size() != kGenerators) throw InputError("a custom generating set needs exactly 4 words");
  const GenSet s1 = standard();
  std::array<GroupElement, kGenerators> gens;
  std::string name = "custom:";
  for (std::size_t i = 0; i < s1_words.size(); ++i) {
    gens[i] = eval_word(s1, GenWord::parse(s1, s1_words[i]));
    if (i) name += ',';
    name += s1_words[i];
  }
  return GenSet(std::move(name), {'a', 'b', 'c', 'd'}, gens);
}

GenSet GenSet::parse(std::string_view selector) {
  if (selector == "s1") return standard();
  if (selector == "s2") return hnn();
  constexpr std::string_view prefix = "custom:";
  if (selector.substr(0, prefix.size()) == prefix) {
    std::vector<std::string> words;
    std::string_view rest = selector.substr(prefix.size());
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = rest.find(',', pos);
      words.emplace_back(rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return custom(words);
  }
  throw InputError("unknown generating set '" + std::string(selector) + "' (expected s1, s2 or custom:w1,w2,w3,w4)");
}

char GenSet::edge_label(int e) const {
  char c = labels_[static_cast<std::size_t>(e / 2)];
  return (e & 1) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
}

std::optional<int> GenSet::edge_for(char label) const {
  for (int e = 0; e < kEdges; ++e)
    if (edge_label(e) == label) return e;
  return std::nullopt;
}

GenWord::GenWord(std::vector<std::uint8_t> edges) : edges_(std::move(edges)) {
  for (auto e : edges_)
    if (e >= GenSet::kEdges) throw InputError("edge index out of range");
}

GenWord GenWord::parse(const GenSet& gs, std::string_view text) {
  std::vector<std::uint8_t> edges;
  edges.reserve(text.size());
  for (char ch : text) {
    auto e = gs.edge_for(ch);
    if (!e) throw InputError("unknown token '" + std::string(1, ch) + "' for generating set " + gs.name());
    edges.push_back(static_cast<std::uint8_t>(*e));
  }
  return GenWord(std::move(edges));
}

std::string GenWord::str(const GenSet& gs) const {
  std::string s;
  s.reserve(edges_.size());
  for (auto e : edges_) s += gs.edge_label(e);
  return s;
}

GenWord GenWord::inverse() const {
  std::vector<std::uint8_t> out(edges_.rbegin(), edges_.rend());
  for (auto& e : out) e = static_cast<std::uint8_t>(GenSet::inverse_edge(e));
  return GenWord(std::move(out));
}

GenWord& GenWord::operator+=(const GenWord& other) {
  edges_.insert(edges_.end(), other.edges_.begin(), other.edges_.end());
  return *this;
}

GroupElement eval_word(const GenSet& gs, const GenWord& w) {
  GroupElement g;
  for (auto e : w.edges()) g = g * gs.edge(e);
  return g;
}

GroupElement eval_word(const GenSet& gs, std::string_view text) { return eval_word(gs, GenWord::parse(gs, text)); }

std::vector<GroupElement> path_vertices(const GenSet& gs, const GroupElement& start, const GenWord& w) {
  std::vector<GroupElement> out;
  out.reserve(w.size() + 1);
  out.push_back(start);
  for (auto e : w.edges()) out.push_back(out.back() * gs.edge(e));
  return out;
}

int exponent_sum(const GenWord& w, int generator) {
  int sum = 0;
  for (auto e : w.edges())
    if (e / 2 == generator) sum += (e & 1) ? -1 : 1;
  return sum;
}

int exponent_sum(const GenSet& gs, const GenWord& w, char label) {
  for (int i = 0; i < GenSet::kGenerators; ++i)
    if (gs.label(i) == label) return exponent_sum(w, i);
  throw InputError("unknown generator label '" + std::string(1, label) + "'");
}

}  // namespace cayley
