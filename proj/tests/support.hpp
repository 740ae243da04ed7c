// Shared helpers and brute-force oracles for the test suites.

#ifndef FREG_TESTS_SUPPORT_HPP_
#define FREG_TESTS_SUPPORT_HPP_

#include <set>
#include <string>
#include <vector>

#include "freg/algebra.hpp"
#include "freg/fi2.hpp"
#include "freg/sampling.hpp"

namespace freg::test {

  inline Landscape land(std::string const& text) {
    return Landscape::from_word(parse_word(text));
  }

  inline Element elem(std::string const& text) {
    return Element::of(parse_word(text));
  }

  inline std::string str(Landscape const& u) {
    return format_word(u.to_word(), FormatMode::alias);
  }

  inline std::string str(Element const& u) {
    return format_element(u, FormatMode::alias);
  }

  inline std::string str(Word const& w) {
    return format_word(w, FormatMode::alias);
  }

  inline Letter letter(std::string const& text) {
    return parse_letter(text);
  }

  inline Word concat(std::vector<Word> const& parts) {
    Word out;
    for (auto const& p : parts) {
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }

  inline Word tok(Letter g) {
    return Word{Token(g)};
  }

  // g^r·m·g^l = g^r g^{ra} m (g^{la})' g^l, for m = g or g^c.
  inline Word dotted(Letter g, Letter m) {
    return Word{Token(g.right()), g.right_anchor(), Token(m),
                involute(g.left_anchor()), Token(g.left())};
  }

  // Generator membership straight from the class E / class D conditions,
  // written without the library's side resolution.
  inline bool oracle_valid(Letter l, Anchor la, Letter c, Anchor ra, Letter r) {
    if (l.height() != r.height() || l.is_one()) {
      return false;
    }
    int const i = l.height() + 1;
    auto fits = [i](Anchor a) {
      return a == Anchor::one || a == (i % 2 == 0 ? Anchor::x : Anchor::xprime);
    };
    if (!fits(la) || !fits(ra)) {
      return false;
    }
    if (i == 2) {
      if (!l.is_base() || l != r || !c.is_one()) {
        return false;
      }
      return la != ra;
    }
    if (l == r) {
      if (l.cls() != TupleClass::E || c != l.left() || c != l.right()) {
        return false;
      }
      return la != ra;
    }
    auto in_wing = [](Letter w, Letter c, Anchor a) {
      return (w.left() == c && involute(w.left_anchor()) == a)
             || (w.right() == c && involute(w.right_anchor()) == a);
    };
    return in_wing(l, c, la) && in_wing(r, c, ra);
  }

  // Every tuple of height i, found by trying every combination of entries.
  inline std::vector<Letter> oracle_level(int i) {
    std::vector<Letter> out;
    if (i == 1) {
      out.push_back(base_tuple());
      return out;
    }
    auto const wings  = enumerate_level(i - 1, LevelClass::All);
    auto const middle = i == 2 ? std::vector<Letter>{Letter::one()}
                               : enumerate_level(i - 2, LevelClass::All);
    Anchor const as[] = {Anchor::one, Anchor::x, Anchor::xprime};
    for (Letter l : wings) {
      for (Letter r : wings) {
        for (Letter c : middle) {
          for (Anchor la : as) {
            for (Anchor ra : as) {
              if (oracle_valid(l, la, c, ra, r)) {
                out.push_back(make_tuple(l, la, c, ra, r));
              }
            }
          }
        }
      }
    }
    return out;
  }

  // One uplift step written directly from the rule.
  inline Landscape oracle_uplift(Landscape const& u, std::size_t i) {
    auto letters = u.letters();
    auto anchors = u.anchors();
    Letter const prev = letters[i - 1], next = letters[i + 1];
    Anchor const ai = anchors[i - 1], an = anchors[i];
    if (prev == next && ai == involute(an)) {
      letters.erase(letters.begin() + static_cast<long>(i),
                    letters.begin() + static_cast<long>(i) + 2);
      anchors.erase(anchors.begin() + static_cast<long>(i) - 1,
                    anchors.begin() + static_cast<long>(i) + 1);
    } else {
      letters[i] = make_tuple(next, involute(an), letters[i], ai, prev);
    }
    return Landscape::from_parts(std::move(letters), std::move(anchors));
  }

  inline std::vector<std::size_t> oracle_rivers(Landscape const& u) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
      int const h = u.letter(i).height();
      if (u.letter(i - 1).height() == h + 1 && u.letter(i + 1).height() == h + 1) {
        out.push_back(i);
      }
    }
    return out;
  }

  // Rightmost-first normalization with the oracle step.
  inline Landscape oracle_beta2(Landscape u) {
    for (;;) {
      auto const rs = oracle_rivers(u);
      if (rs.empty()) {
        return u;
      }
      u = oracle_uplift(u, rs.back());
    }
  }

  // Every river-free landscape reachable by some uplift order.
  inline std::set<std::string> oracle_all_normal_forms(Landscape const& u) {
    std::set<std::string> seen, normal;
    std::vector<Landscape> stack{u};
    while (!stack.empty()) {
      Landscape v = stack.back();
      stack.pop_back();
      if (!seen.insert(str(v)).second) {
        continue;
      }
      auto const rs = oracle_rivers(v);
      if (rs.empty()) {
        normal.insert(str(v));
      }
      for (std::size_t i : rs) {
        stack.push_back(oracle_uplift(v, i));
      }
    }
    return normal;
  }

  inline std::vector<Element> all_elements_up_to(int h) {
    std::vector<Element> out{Element()};
    for (int i = 1; i <= h; ++i) {
      for (Letter g : enumerate_level(i, LevelClass::All)) {
        auto d = dclass(g);
        out.insert(out.end(), d.begin(), d.end());
      }
    }
    return out;
  }

  inline std::vector<Token> small_alphabet() {
    std::vector<Token> out{Anchor::one, Anchor::x, Anchor::xprime};
    for (int i = 1; i <= 2; ++i) {
      for (Letter g : enumerate_level(i, LevelClass::All)) {
        out.emplace_back(g);
      }
    }
    return out;
  }

}  // namespace freg::test

#endif  // FREG_TESTS_SUPPORT_HPP_
