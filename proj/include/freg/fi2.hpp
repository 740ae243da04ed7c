// The two-idempotent world: triples, i-mountains and their product, and
// the embedding into the 5-tuple semigroup through the sub-model M°.

#ifndef FREG_FI2_HPP_
#define FREG_FI2_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freg/algebra.hpp"

namespace freg {

  struct ITripleNode;

  //! 1, e, f or an interned triple (l, c, r).  Default is 1.
  class ILetter {
   public:
    constexpr ILetter() noexcept = default;

    static constexpr ILetter one() noexcept {
      return ILetter();
    }
    static ILetter e();
    static ILetter f();

    bool is_one() const noexcept {
      return node_ == nullptr;
    }
    int height() const noexcept;

    // Entries.  e and f are (1,e,1) and (1,f,1); their middles are the
    // symbols themselves, so middle() requires height >= 2.
    ILetter left() const;
    ILetter middle() const;
    ILetter right() const;

    ITripleNode const* node() const noexcept {
      return node_;
    }

    friend bool operator==(ILetter, ILetter) = default;

   private:
    explicit constexpr ILetter(ITripleNode const* n) noexcept : node_(n) {}
    ITripleNode const* node_ = nullptr;
    friend class ITripleTable;
  };

  struct ILetterHash {
    std::size_t operator()(ILetter h) const noexcept {
      return std::hash<void const*>()(h.node());
    }
  };

  struct ITripleNode {
    ILetter l;
    ILetter c;
    ILetter r;
    int     height;
    char    symbol;  // 'e' or 'f' at height 1, 0 otherwise
  };

  //! (l, c, r) if it is a triple of height >= 2, otherwise DomainError.
  ILetter make_itriple(ILetter l, ILetter c, ILetter r);

  //! Lexicographic on (l, c, r) with 1 < e < f and letters ranked by
  //! (height, index in level).  Level 1 is [e, f].
  std::vector<ILetter> enumerate_ilevel(int i);

  //! 1-based index of h in its level.
  std::size_t ilevel_index(ILetter h);

  //! `1`, `e`, `f`, `h{i.k}` or `(item,item,item)`.
  std::string format_iletter(ILetter h, FormatMode mode);
  ILetter     parse_iletter(std::string_view text);

  ////////////////////////////////////////////////////////////////////////
  // i-landscapes and i-mountains
  ////////////////////////////////////////////////////////////////////////

  using IWord = std::vector<ILetter>;

  //! Whitespace separated i-letters.
  IWord       parse_iword(std::string_view text);
  std::string format_iword(IWord const& w, FormatMode mode);

  //! Adjacent letters always have one as the left or right entry of the
  //! other.
  bool is_ilandscape(IWord const& w);
  //! Starts and ends at 1 and has no i-rivers.
  bool is_imountain(IWord const& w);

  std::vector<std::size_t> irivers(IWord const& w);

  //! One i-uplift at river i.
  IWord iuplift(IWord const& w, std::size_t i);

  //! Uplifts i-rivers (leftmost first) until none is left.
  IWord inormalize(IWord w);

  //! Junction merge followed by normalization.  Both must be i-mountains.
  IWord iproduct(IWord const& u, IWord const& v);

  //! All i-uphills from 1 to h (or i-downhills from h to 1).
  std::vector<IWord> enumerate_ihills(ILetter h, Direction dir);

  ////////////////////////////////////////////////////////////////////////
  // The embedding
  ////////////////////////////////////////////////////////////////////////

  bool in_Gcirc(Letter g);

  //! Tuples of G° of height i, in the order of enumerate_ilevel (through ψ)
  //! for i >= 2.
  std::vector<Letter> enumerate_gcirc(int i);

  //! Mountain ranges satisfying both membership conditions.  The trivial
  //! mountain "1" is accepted.
  bool in_Mcirc(Landscape const& u);

  //! Requires g in G°, height >= 2.
  ILetter phi_letter(Letter g);
  //! Requires height(h) >= 2.
  Letter psi_letter(ILetter h);

  //! Requires u in M°.
  IWord phi_mountain(Landscape const& u);
  //! Requires an i-landscape starting and ending at 1.
  Landscape psi_mountain(IWord const& v);

  //! [g] or [x' g x], whichever lies in the embedded copy.  Requires g in
  //! G° with height >= 2.
  Element gbar(Letter g);

  struct EmbeddingReport {
    bool        pass = true;
    std::size_t exhaustive_mountains = 0;
    std::size_t sampled_pairs = 0;
    std::vector<std::string> failures;
  };

  //! Exhaustive bijection check on M° up to min(max_height, 4), then
  //! `samples` random M° pairs up to max_height for the homomorphism and
  //! closure properties.
  EmbeddingReport check_embedding(int max_height, std::size_t samples,
                                  std::uint64_t seed);

  //! Every M° mountain with peak of height exactly i.
  std::vector<Landscape> enumerate_mcirc(int i);

}  // namespace freg

#endif  // FREG_FI2_HPP_
