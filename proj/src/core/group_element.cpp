#include "cayley/group_element.hpp"

#include <charconv>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

GroupElement::GroupElement(FreeWord left, FreeWord right) : left_(std::move(left)), right_(std::move(right)) {
  if (left_.factor() == Factor::right) throw InputError("left component uses second-factor letters");
  if (right_.factor() == Factor::left) throw InputError("right component uses first-factor letters");
}

namespace {

FreeWord parse_component(std::string_view text, std::string_view whole) {
  std::vector<int> letters;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || (tok[0] == '+'))
      throw InputError("malformed key '" + std::string(whole) + "'");
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  FreeWord w = FreeWord::reduce(letters);
  if (w.size() != letters.size()) throw InputError("key '" + std::string(whole) + "' is not freely reduced");
  return w;
}

}  // namespace

GroupElement GroupElement::from_key(std::string_view key) {
  std::size_t bar = key.find('|');
  if (bar == std::string_view::npos || key.find('|', bar + 1) != std::string_view::npos)
    throw InputError("malformed key '" + std::string(key) + "'");
  FreeWord left = parse_component(key.substr(0, bar), key);
  FreeWord right = parse_component(key.substr(bar + 1), key);
  return GroupElement(std::move(left), std::move(right));
}

std::string GroupElement::key() const { return left_.str() + '|' + right_.str(); }

bool key_less(const GroupElement& x, const GroupElement& y) { return x.key() < y.key(); }

}  // namespace cayley
