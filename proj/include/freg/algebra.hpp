// The semigroup of canonical mountains: products, Green's relations,
// idempotents, inverses, the natural order and sandwich sets.

#ifndef FREG_ALGEBRA_HPP_
#define FREG_ALGEBRA_HPP_

#include <optional>
#include <vector>

#include "freg/rewrite.hpp"

namespace freg {

  //! An element, held as its canonical mountain.  The default element is
  //! the identity "1".
  class Element {
   public:
    Element() = default;

    //! [w] for any word w.
    static Element of(Word const& w);
    //! Throws DomainError unless m is a mountain.
    static Element from_mountain(Landscape m);

    Landscape const& mountain() const noexcept {
      return m_;
    }
    Letter peak() const;
    Landscape left_hill() const;
    Landscape right_hill() const;
    bool      is_identity() const noexcept {
      return m_.size() == 1;
    }

    Word to_word() const {
      return m_.to_word();
    }

    friend bool operator==(Element const& a, Element const& b) {
      return a.m_ == b.m_;
    }

   private:
    explicit Element(Landscape m) : m_(std::move(m)) {}
    Landscape m_;
  };

  //! Deterministic total order, independent of interning order.
  bool element_less(Element const& a, Element const& b);

  std::string format_element(Element const& u, FormatMode mode);

  //! β(u * v).
  Element product(Element const& u, Element const& v);

  //! β(w1) = β(w2).
  bool equal(Word const& w1, Word const& w2);

  //! [reverse(u)].
  Element canonical_inverse(Element const& u);

  //! A canyon w with β₂(w) = σ(w).  A single letter counts as a gorge.
  bool is_gorge(Landscape const& w);

  ////////////////////////////////////////////////////////////////////////
  // Idempotents, inverses, natural order
  ////////////////////////////////////////////////////////////////////////

  bool is_idempotent_by_product(Element const& u);
  bool is_idempotent_by_gorge(Element const& u);
  //! Both methods; InternalError if they disagree.
  bool is_idempotent(Element const& u);

  bool is_inverse_pair_by_product(Element const& u, Element const& v);
  bool is_inverse_pair_by_gorge(Element const& u, Element const& v);
  bool is_inverse_pair(Element const& u, Element const& v);

  //! v ≤ u via the gorge criterion on the hill decompositions.
  bool natural_leq_by_gorge(Element const& v, Element const& u);
  //! v ≤ u via idempotents e R v, f L v with v = e⊙u = u⊙f.
  bool natural_leq_by_oracle(Element const& v, Element const& u);
  bool natural_leq(Element const& v, Element const& u);

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  enum class Green : std::uint8_t { R, L, J, H, D };

  enum class Verdict : std::uint8_t {
    equivalent,
    strictly_below,  // u < v
    strictly_above,  // v < u
    incomparable,
  };

  std::string_view to_string(Green g) noexcept;
  std::string_view to_string(Verdict v) noexcept;

  //! u ≤ v in the preorder of rel.  H is R ∧ L; D coincides with J.
  bool green_leq(Element const& u, Element const& v, Green rel);

  Verdict green_compare(Element const& u, Element const& v, Green rel);

  //! v covers u: u < v with nothing strictly between.  rel is R, L or J.
  bool covers(Element const& u, Element const& v, Green rel);

  //! When λ_l(v) is a prefix of λ_l(u), the mountain w with v ⊙ w = u.
  std::optional<Element> r_witness(Element const& u, Element const& v);
  //! When λ_r(v) is a suffix of λ_r(u), the mountain w with w ⊙ v = u.
  std::optional<Element> l_witness(Element const& u, Element const& v);

  ////////////////////////////////////////////////////////////////////////
  // D-classes and sandwich sets
  ////////////////////////////////////////////////////////////////////////

  //! The D-class of [g]: λ_l * λ_r over uphills × downhills of g, uphill
  //! major.  4^height(g) elements.
  std::vector<Element> dclass(Letter g);

  //! The R-class (same left hill) and L-class (same right hill) of u.
  std::vector<Element> rclass(Element const& u);
  std::vector<Element> lclass(Element const& u);

  //! S(e, f) for idempotents e, f, sorted by element_less.  Throws
  //! DomainError if e or f is not idempotent.
  std::vector<Element> sandwich(Element const& e, Element const& f);

}  // namespace freg

#endif  // FREG_ALGEBRA_HPP_
