#include "freg/algebra.hpp"

#include <algorithm>

namespace freg {

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  Element Element::of(Word const& w) {
    return Element(beta(w));
  }

  Element Element::from_mountain(Landscape m) {
    if (!is_mountain(m)) {
      throw DomainError("not a mountain");
    }
    return Element(std::move(m));
  }

  Letter Element::peak() const {
    return freg::left_hill(m_).last();
  }

  Landscape Element::left_hill() const {
    return freg::left_hill(m_);
  }

  Landscape Element::right_hill() const {
    return freg::right_hill(m_);
  }

  bool element_less(Element const& a, Element const& b) {
    auto const& x = a.mountain();
    auto const& y = b.mountain();
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0 && x.anchor(i) != y.anchor(i)) {
        return x.anchor(i) < y.anchor(i);
      }
      if (x.letter(i) != y.letter(i)) {
        return structural_less(x.letter(i), y.letter(i));
      }
    }
    return false;
  }

  std::string format_element(Element const& u, FormatMode mode) {
    return format_word(u.to_word(), mode);
  }

  Element product(Element const& u, Element const& v) {
    return Element::from_mountain(beta2(join(u.mountain(), v.mountain())));
  }

  bool equal(Word const& w1, Word const& w2) {
    return beta(w1) == beta(w2);
  }

  Element canonical_inverse(Element const& u) {
    return Element::from_mountain(beta2(reverse(u.mountain())));
  }

  bool is_gorge(Landscape const& w) {
    if (!is_canyon(w)) {
      return false;
    }
    return beta2(w) == Landscape::single(w.first());
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents and inverses
  ////////////////////////////////////////////////////////////////////////

  bool is_idempotent_by_product(Element const& u) {
    return product(u, u) == u;
  }

  bool is_idempotent_by_gorge(Element const& u) {
    return is_gorge(join(u.right_hill(), u.left_hill()));
  }

  bool is_idempotent(Element const& u) {
    bool const a = is_idempotent_by_gorge(u);
    if (a != is_idempotent_by_product(u)) {
      throw InternalError("idempotency: gorge and product methods disagree");
    }
    return a;
  }

  bool is_inverse_pair_by_product(Element const& u, Element const& v) {
    return product(product(u, v), u) == u && product(product(v, u), v) == v;
  }

  bool is_inverse_pair_by_gorge(Element const& u, Element const& v) {
    if (u.peak() != v.peak()) {
      return false;
    }
    return is_gorge(join(u.right_hill(), v.left_hill()))
           && is_gorge(join(v.right_hill(), u.left_hill()));
  }

  bool is_inverse_pair(Element const& u, Element const& v) {
    bool const a = is_inverse_pair_by_gorge(u, v);
    if (a != is_inverse_pair_by_product(u, v)) {
      throw InternalError("inverse pair: gorge and product methods disagree");
    }
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Natural order
  ////////////////////////////////////////////////////////////////////////

  bool natural_leq_by_gorge(Element const& v, Element const& u) {
    if (v == u) {
      return true;
    }
    Landscape const lu = u.left_hill();
    Landscape const ru = u.right_hill();
    Landscape const lv = v.left_hill();
    Landscape const rv = v.right_hill();
    if (lu.size() >= lv.size() || ru.size() >= rv.size() || !is_prefix(lu, lv)
        || !is_suffix(ru, rv)) {
      return false;
    }
    // u2 a2 κ(u) a1 u1
    Landscape const canyon
        = join(sub(rv, 0, rv.size() - ru.size()), sub(lv, lu.size() - 1, lv.size() - 1));
    return is_gorge(canyon);
  }

  bool natural_leq_by_oracle(Element const& v, Element const& u) {
    bool left = false;
    for (Element const& e : rclass(v)) {
      if (is_idempotent_by_product(e) && product(e, u) == v) {
        left = true;
        break;
      }
    }
    if (!left) {
      return false;
    }
    for (Element const& f : lclass(v)) {
      if (is_idempotent_by_product(f) && product(u, f) == v) {
        return true;
      }
    }
    return false;
  }

  bool natural_leq(Element const& v, Element const& u) {
    bool const a = natural_leq_by_gorge(v, u);
    if (a != natural_leq_by_oracle(v, u)) {
      throw InternalError("natural order: gorge and oracle methods disagree");
    }
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(Green g) noexcept {
    switch (g) {
      case Green::R:
        return "R";
      case Green::L:
        return "L";
      case Green::J:
        return "J";
      case Green::H:
        return "H";
      default:
        return "D";
    }
  }

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::equivalent:
        return "equivalent";
      case Verdict::strictly_below:
        return "strictly-below";
      case Verdict::strictly_above:
        return "strictly-above";
      default:
        return "incomparable";
    }
  }

  bool green_leq(Element const& u, Element const& v, Green rel) {
    switch (rel) {
      case Green::R:
        return is_prefix(v.left_hill(), u.left_hill());
      case Green::L:
        return is_suffix(v.right_hill(), u.right_hill());
      case Green::H:
        return green_leq(u, v, Green::R) && green_leq(u, v, Green::L);
      default:
        return preceq(v.peak(), u.peak());
    }
  }

  Verdict green_compare(Element const& u, Element const& v, Green rel) {
    bool const uv = green_leq(u, v, rel);
    bool const vu = green_leq(v, u, rel);
    if (uv && vu) {
      return Verdict::equivalent;
    }
    if (uv) {
      return Verdict::strictly_below;
    }
    if (vu) {
      return Verdict::strictly_above;
    }
    return Verdict::incomparable;
  }

  bool covers(Element const& u, Element const& v, Green rel) {
    switch (rel) {
      case Green::R: {
        Landscape const lu = u.left_hill();
        Landscape const lv = v.left_hill();
        return lu.size() == lv.size() + 1 && is_prefix(lv, lu);
      }
      case Green::L: {
        Landscape const ru = u.right_hill();
        Landscape const rv = v.right_hill();
        return ru.size() == rv.size() + 1 && is_suffix(rv, ru);
      }
      case Green::J: {
        Letter const k = u.peak();
        return k.is_tuple() && (v.peak() == k.left() || v.peak() == k.right());
      }
      default:
        throw DomainError("covers: relation must be R, L or J");
    }
  }

  std::optional<Element> r_witness(Element const& u, Element const& v) {
    Landscape const lv = v.left_hill();
    if (!is_prefix(lv, u.mountain())
        || !is_prefix(lv, u.left_hill())) {
      return std::nullopt;
    }
    Landscape const u1 = sub(u.mountain(), lv.size() - 1, u.mountain().size() - 1);
    return Element::from_mountain(join(reverse(v.right_hill()), u1));
  }

  std::optional<Element> l_witness(Element const& u, Element const& v) {
    Landscape const rv = v.right_hill();
    if (!is_suffix(rv, u.right_hill())) {
      return std::nullopt;
    }
    Landscape const& m  = u.mountain();
    Landscape const  u1 = sub(m, 0, m.size() - rv.size());
    return Element::from_mountain(join(u1, reverse(v.left_hill())));
  }

  ////////////////////////////////////////////////////////////////////////
  // D-classes and sandwich sets
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element> dclass(Letter g) {
    if (g.is_one()) {
      return {Element()};
    }
    check_height_cap(g.height(), "dclass");
    if (2 * g.height() >= 63
        || (std::size_t(1) << (2 * g.height())) > limits().max_level_size) {
      throw CapExceeded("dclass: 4^" + std::to_string(g.height())
                        + " elements exceed the enumeration budget");
    }
    auto const           ups   = enumerate_hills(g, Direction::up);
    auto const           downs = enumerate_hills(g, Direction::down);
    std::vector<Element> out;
    out.reserve(ups.size() * downs.size());
    for (auto const& l : ups) {
      for (auto const& r : downs) {
        out.push_back(Element::from_mountain(join(l, r)));
      }
    }
    return out;
  }

  std::vector<Element> rclass(Element const& u) {
    if (u.is_identity()) {
      return {u};
    }
    Landscape const      l = u.left_hill();
    std::vector<Element> out;
    for (auto const& r : enumerate_hills(u.peak(), Direction::down)) {
      out.push_back(Element::from_mountain(join(l, r)));
    }
    return out;
  }

  std::vector<Element> lclass(Element const& u) {
    if (u.is_identity()) {
      return {u};
    }
    Landscape const      r = u.right_hill();
    std::vector<Element> out;
    for (auto const& l : enumerate_hills(u.peak(), Direction::up)) {
      out.push_back(Element::from_mountain(join(l, r)));
    }
    return out;
  }

  std::vector<Element> sandwich(Element const& e, Element const& f) {
    if (!is_idempotent_by_product(e) || !is_idempotent_by_product(f)) {
      throw DomainError("sandwich: arguments must be idempotents");
    }
    Element const        ef = product(e, f);
    std::vector<Element> out;
    for (Element const& g : dclass(ef.peak())) {
      if (product(f, g) == g && product(g, e) == g
          && product(product(e, g), f) == ef && is_idempotent_by_product(g)) {
        out.push_back(g);
      }
    }
    std::sort(out.begin(), out.end(), element_less);
    return out;
  }

}  // namespace freg
