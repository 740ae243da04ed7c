#include "freg/sampling.hpp"

#include <algorithm>

namespace freg {

  namespace {
    template <class T>
    T const& pick(std::vector<T> const& v, Rng& rng) {
      if (v.empty()) {
        throw DomainError("cannot sample from an empty set");
      }
      return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    }
  }  // namespace

  Landscape random_hill(Letter g, Direction dir, Rng& rng) {
    std::vector<Letter> letters{g};
    std::vector<Anchor> anchors;
    while (!letters.back().is_one()) {
      Letter const h = letters.back();
      Side const   s = std::bernoulli_distribution(0.5)(rng) ? Side::left
                                                             : Side::right;
      anchors.push_back(h.entry_anchor(s));
      letters.push_back(h.entry(s));
    }
    std::reverse(letters.begin(), letters.end());
    std::reverse(anchors.begin(), anchors.end());
    Landscape up = Landscape::from_parts(std::move(letters), std::move(anchors));
    return dir == Direction::up ? up : reverse(up);
  }

  Element random_in_dclass(Letter g, Rng& rng) {
    return Element::from_mountain(join(random_hill(g, Direction::up, rng),
                                       random_hill(g, Direction::down, rng)));
  }

  Letter random_letter(int height, Rng& rng) {
    if (height == 0) {
      return Letter::one();
    }
    return pick(enumerate_level(height, LevelClass::All), rng);
  }

  Element random_element(int max_height, Rng& rng) {
    int const h = std::uniform_int_distribution<int>(0, max_height)(rng);
    return random_in_dclass(random_letter(h, rng), rng);
  }

  Word random_word(std::size_t max_len, std::vector<Token> const& alphabet,
                   Rng& rng) {
    std::size_t const n
        = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_len))(rng);
    Word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(pick(alphabet, rng));
    }
    return w;
  }

}  // namespace freg
