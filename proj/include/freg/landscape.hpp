// Words over the alphabet A ∪ G⁵, landscapes and their shapes.

#ifndef FREG_LANDSCAPE_HPP_
#define FREG_LANDSCAPE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "freg/alphabet.hpp"

namespace freg {

  ////////////////////////////////////////////////////////////////////////
  // Tokens and words
  ////////////////////////////////////////////////////////////////////////

  //! One symbol of a word: an anchor or a 5-tuple.  The letter 1 and the
  //! anchor 1 are the same token.
  class Token {
   public:
    Token(Anchor a) noexcept : v_(a) {}  // NOLINT(implicit)
    Token(Letter g) noexcept             // NOLINT(implicit)
        : v_(g.is_one() ? Var(Anchor::one) : Var(g)) {}

    bool is_anchor() const noexcept {
      return std::holds_alternative<Anchor>(v_);
    }
    bool is_tuple() const noexcept {
      return !is_anchor();
    }
    //! True for 1 and for tuples, the tokens that may stand as letters.
    bool is_letter() const noexcept {
      return is_tuple() || std::get<Anchor>(v_) == Anchor::one;
    }

    //! Requires is_anchor().
    Anchor anchor() const;
    //! Requires is_letter().
    Letter letter() const;

    friend bool operator==(Token const&, Token const&) = default;

   private:
    using Var = std::variant<Anchor, Letter>;
    Var v_;
  };

  using Word = std::vector<Token>;

  //! Whitespace separated tokens.  Throws ParseError (or InvalidTupleError).
  Word parse_word(std::string_view text);

  std::string format_token(Token const& t, FormatMode mode);
  std::string format_word(Word const& w, FormatMode mode);

  ////////////////////////////////////////////////////////////////////////
  // Landscapes
  ////////////////////////////////////////////////////////////////////////

  //! First token position at which a word stops being a landscape.
  struct NotLandscape {
    std::size_t position;
    std::string reason;
  };

  //! g₀ a₁ g₁ … aₙ gₙ with every triplet anchored.  Immutable.
  class Landscape {
   public:
    //! The trivial landscape "1".
    Landscape() : letters_{Letter::one()} {}

    static std::variant<Landscape, NotLandscape> check(Word const& w);
    //! Throws DomainError when w is not a landscape.
    static Landscape from_word(Word const& w);
    //! Throws DomainError when a triplet is not anchored.
    static Landscape from_parts(std::vector<Letter> letters,
                                std::vector<Anchor> anchors);
    static Landscape single(Letter g);

    std::vector<Letter> const& letters() const noexcept {
      return letters_;
    }
    std::vector<Anchor> const& anchors() const noexcept {
      return anchors_;
    }
    Letter letter(std::size_t i) const {
      return letters_.at(i);
    }
    //! a_i sits between letters i-1 and i, so anchor(0) is invalid.
    Anchor anchor(std::size_t i) const {
      return anchors_.at(i - 1);
    }

    //! Number of letters, n+1.
    std::size_t size() const noexcept {
      return letters_.size();
    }
    std::size_t token_count() const noexcept {
      return 2 * letters_.size() - 1;
    }
    Letter first() const noexcept {
      return letters_.front();
    }
    Letter last() const noexcept {
      return letters_.back();
    }

    //! Letter indices of rivers and ridges, ascending.
    std::vector<std::size_t> const& rivers() const noexcept {
      return rivers_;
    }
    std::vector<std::size_t> const& ridges() const noexcept {
      return ridges_;
    }
    int height() const noexcept {
      return height_;
    }

    Word to_word() const;

    friend bool operator==(Landscape const& a, Landscape const& b) {
      return a.letters_ == b.letters_ && a.anchors_ == b.anchors_;
    }

   private:
    Landscape(std::vector<Letter> letters, std::vector<Anchor> anchors);

    std::vector<Letter>      letters_;
    std::vector<Anchor>      anchors_;
    std::vector<std::size_t> rivers_;
    std::vector<std::size_t> ridges_;
    int                      height_ = 0;
  };

  //! (g, a, h) is anchored: g is a wing of h read left to right, or h is a
  //! wing of g read right to left.
  bool left_anchored(Letter g, Anchor a, Letter h);
  bool right_anchored(Letter g, Anchor a, Letter h);
  bool anchored(Letter g, Anchor a, Letter h);

  struct LandscapeInfo {
    std::vector<std::size_t> rivers;
    std::vector<std::size_t> ridges;
    //! Ridges of maximal ridge height.
    std::vector<std::size_t> peaks;
    int                      height = 0;
    bool uphill         = false;
    bool downhill       = false;
    bool hill           = false;
    bool valley         = false;
    bool canyon         = false;
    bool mountain_range = false;
    bool mountain       = false;
  };

  LandscapeInfo classify(Landscape const& u);
  std::variant<NotLandscape, LandscapeInfo> analyze(Word const& w);

  bool is_uphill(Landscape const& u);
  bool is_downhill(Landscape const& u);
  bool is_valley(Landscape const& u);
  bool is_canyon(Landscape const& u);
  bool is_mountain_range(Landscape const& u);
  bool is_mountain(Landscape const& u);

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  //! u * v, merging the shared junction letter.  Throws DomainError if
  //! last(u) != first(v).
  Landscape join(Landscape const& u, Landscape const& v);

  //! Letters reversed, anchors reversed and involuted.
  Landscape reverse(Landscape const& u);

  //! Maximal uphill prefix and maximal downhill suffix.
  Landscape left_hill(Landscape const& u);
  Landscape right_hill(Landscape const& u);

  //! Letters first..last inclusive.
  Landscape sub(Landscape const& u, std::size_t first, std::size_t last);

  struct Hills {
    Landscape left;
    Landscape right;
  };

  //! λ_l and λ_r of a mountain.  Throws DomainError for other inputs.
  Hills hills_of(Landscape const& mountain);

  //! κ(u): the top letter of a mountain (1 for the trivial mountain).
  Letter peak(Landscape const& mountain);

  //! Is `prefix` a prefix (resp. `suffix` a suffix) of u, as landscapes.
  bool is_prefix(Landscape const& prefix, Landscape const& u);
  bool is_suffix(Landscape const& suffix, Landscape const& u);

  enum class Direction : std::uint8_t { up, down };

  //! All uphills from 1 to g (or downhills from g to 1).  There are
  //! 2^height(g) of them.  Throws CapExceeded past the limits.
  std::vector<Landscape> enumerate_hills(Letter g, Direction dir);

  //! gL = (la)' l la and gR = (ra)' r ra.  Requires height >= 2.
  struct WingTriplets {
    Word left;
    Word right;
  };
  WingTriplets wing_triplets(Letter g);

}  // namespace freg

#endif  // FREG_LANDSCAPE_HPP_
