#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/group_element.hpp"

namespace cayley {

// A marking of G by four generators. Directed edge e = 2*i is generator i and
// e = 2*i + 1 is its inverse, so e ^ 1 is always the reverse edge.
class GenSet {
 public:
  static constexpr int kGenerators = 4;
  static constexpr int kEdges = 8;

  // s1: a, b, c, d mapped to the four free letters.
  static GenSet standard();
  // s2: a -> (1|-3), b -> (2|-3), c -> (|3), t -> (|4). The letters x, y, d of
  // the Tietze chain are a, b, t here.
  static GenSet hnn();
  // Four words over the s1 alphabet, labelled a, b, c, d.
  static GenSet custom(std::span<const std::string> s1_words);
  // "s1" | "s2" | "custom:<w1>,<w2>,<w3>,<w4>"
  static GenSet parse(std::string_view selector);

  const std::string& name() const { return name_; }
  char label(int generator) const { return labels_[static_cast<std::size_t>(generator)]; }
  const GroupElement& generator(int i) const { return edges_[static_cast<std::size_t>(2 * i)]; }
  const GroupElement& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  // Lowercase for a generator, uppercase for its inverse.
  char edge_label(int e) const;
  std::optional<int> edge_for(char label) const;

  static constexpr int inverse_edge(int e) { return e ^ 1; }

  // Same generator images in the same order, regardless of name.
  bool same_marking(const GenSet& other) const { return edges_ == other.edges_; }
  bool is_hnn() const { return same_marking(hnn()); }

 private:
  GenSet(std::string name, std::array<char, kGenerators> labels, std::array<GroupElement, kGenerators> gens);

  std::string name_;
  std::array<char, kGenerators> labels_{};
  std::array<GroupElement, kEdges> edges_;
};

// A word over the directed edge labels of one GenSet.
class GenWord {
 public:
  GenWord() = default;
  explicit GenWord(std::vector<std::uint8_t> edges);

  // Lowercase = generator, uppercase = inverse, no whitespace.
  static GenWord parse(const GenSet& gs, std::string_view text);
  std::string str(const GenSet& gs) const;

  std::span<const std::uint8_t> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return edges_[i]; }

  GenWord inverse() const;
  GenWord& operator+=(const GenWord& other);
  friend GenWord operator+(GenWord x, const GenWord& y) { return x += y; }
  friend bool operator==(const GenWord&, const GenWord&) = default;

 private:
  std::vector<std::uint8_t> edges_;
};

GroupElement eval_word(const GenSet& gs, const GenWord& w);
// Convenience: parse then evaluate.
GroupElement eval_word(const GenSet& gs, std::string_view text);

// Vertices start, start*w_1, ..., start*w; size() + 1 entries.
std::vector<GroupElement> path_vertices(const GenSet& gs, const GroupElement& start, const GenWord& w);

// Signed count of generator `generator` (0..3) in w.
int exponent_sum(const GenWord& w, int generator);
// Same, addressed by the generator's label in gs.
int exponent_sum(const GenSet& gs, const GenWord& w, char label);

}  // namespace cayley
