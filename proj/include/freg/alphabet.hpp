// Anchors, 5-tuple generators and the interned generator alphabet.
//
// Every 5-tuple is hash-consed into a process-wide table, so two letters are
// equal iff they refer to the same node.  Nodes are immutable once interned
// and live for the life of the process.

#ifndef FREG_ALPHABET_HPP_
#define FREG_ALPHABET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace freg {

  ////////////////////////////////////////////////////////////////////////
  // Errors
  ////////////////////////////////////////////////////////////////////////

  struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  //! A height cap or enumeration budget would be exceeded.
  struct CapExceeded : Error {
    using Error::Error;
  };

  //! A precondition on an argument's domain does not hold.
  struct DomainError : Error {
    using Error::Error;
  };

  //! Text input that does not follow the word or tuple grammar.
  struct ParseError : Error {
    ParseError(std::string msg, std::size_t pos)
        : Error(std::move(msg)), position(pos) {}
    std::size_t position;
  };

  //! An internal consistency check failed.  Never expected in correct code.
  struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
  };

  ////////////////////////////////////////////////////////////////////////
  // Limits
  ////////////////////////////////////////////////////////////////////////

  //! Global guards for the exponential constructions.
  struct Limits {
    //! Highest letter height any enumeration may reach.
    int max_height = 12;
    //! Largest single level (or hill / D-class list) that may be built.
    std::size_t max_level_size = 1'000'000;
  };

  Limits limits();
  void   set_limits(Limits const& l);

  //! Throws CapExceeded when `height` is above the configured cap.
  void check_height_cap(int height, char const* what);

  ////////////////////////////////////////////////////////////////////////
  // Anchors
  ////////////////////////////////////////////////////////////////////////

  enum class Anchor : std::uint8_t { one = 0, x = 1, xprime = 2 };

  constexpr Anchor involute(Anchor a) noexcept {
    switch (a) {
      case Anchor::x:
        return Anchor::xprime;
      case Anchor::xprime:
        return Anchor::x;
      default:
        return Anchor::one;
    }
  }

  std::string_view       to_string(Anchor a) noexcept;
  std::optional<Anchor>  anchor_from_string(std::string_view s) noexcept;

  //! Anchors that may label a tuple of the given height: {1,x} when even,
  //! {1,x'} when odd.
  constexpr bool anchor_fits_height(Anchor a, int height) noexcept {
    return a == Anchor::one
           || (height % 2 == 0 ? a == Anchor::x : a == Anchor::xprime);
  }

  ////////////////////////////////////////////////////////////////////////
  // Letters
  ////////////////////////////////////////////////////////////////////////

  enum class TupleClass : std::uint8_t { E = 0, D = 1 };

  //! Which entry of a wing tuple: its left entry or its right entry.
  enum class Side : std::uint8_t { left = 0, right = 1 };

  struct TupleNode;

  //! An element of G' = G^5 ∪ {1}.  The default-constructed letter is One.
  class Letter {
   public:
    constexpr Letter() noexcept = default;

    static constexpr Letter one() noexcept {
      return Letter();
    }

    bool is_one() const noexcept {
      return node_ == nullptr;
    }
    bool is_tuple() const noexcept {
      return node_ != nullptr;
    }
    //! True only for g_xx' = (1,1,x,x',1).
    bool is_base() const noexcept;

    int height() const noexcept;

    // The accessors below require a tuple; they throw DomainError on One.
    TupleClass cls() const;
    Letter     left() const;
    Letter     right() const;
    //! Requires height >= 2; the base tuple's middle is the anchor x.
    Letter     middle() const;
    Anchor     left_anchor() const;
    Anchor     right_anchor() const;
    Letter     entry(Side s) const;
    Anchor     entry_anchor(Side s) const;
    //! l_a: the side of the left wing holding the middle entry.
    Side       left_side() const;
    //! r_a: the side of the right wing holding the middle entry.
    Side       right_side() const;

    TupleNode const* node() const noexcept {
      return node_;
    }

    friend bool operator==(Letter, Letter) = default;

   private:
    explicit constexpr Letter(TupleNode const* n) noexcept : node_(n) {}
    TupleNode const* node_ = nullptr;
    friend class Alphabet;
  };

  struct LetterHash {
    std::size_t operator()(Letter g) const noexcept {
      return std::hash<void const*>()(g.node());
    }
  };

  //! Interned tuple storage.  Read through Letter.
  struct TupleNode {
    Letter     l;
    Anchor     la;
    Letter     c;  // One for both height 1 and height 2
    Anchor     ra;
    Letter     r;
    int        height;
    TupleClass cls;
    Side       l_side;
    Side       r_side;
  };

  //! Total order independent of interning order: by height, then class
  //! (E before D), then component-wise on (l, la, c, ra, r).
  bool structural_less(Letter a, Letter b);

  ////////////////////////////////////////////////////////////////////////
  // Construction and validation
  ////////////////////////////////////////////////////////////////////////

  //! Unvalidated 5-tuple.  The middle is either a letter or, for the base
  //! tuple only, the anchor x.
  struct RawTuple {
    Letter                        l;
    Anchor                        la;
    std::variant<Letter, Anchor>  c;
    Anchor                        ra;
    Letter                        r;
  };

  enum class InvalidReason : std::uint8_t {
    malformed_base,        // height-1 tuple other than (1,1,x,x',1)
    anchor_middle,         // anchor middle outside the base tuple
    height_mismatch,       // wing or middle heights inconsistent
    equal_wings_not_e,     // l = r but class E conditions fail
    anchor_parity,         // class E anchor pair not {1,x} / {1,x'}
    left_side_condition,   // (c, la) not anchored inside l
    right_side_condition,  // (c, ra) not anchored inside r
  };

  std::string_view to_string(InvalidReason r) noexcept;

  struct InvalidTuple {
    InvalidReason reason;
    std::string   detail;
  };

  //! A tuple literal that parses but is not a generator.
  struct InvalidTupleError : ParseError {
    InvalidTupleError(InvalidTuple why, std::size_t pos)
        : ParseError("invalid tuple at position " + std::to_string(pos) + ": "
                         + std::string(to_string(why.reason)),
                     pos),
          invalid(std::move(why)) {}
    InvalidTuple invalid;
  };

  //! Either the interned tuple or the reason it is not a generator.
  using TupleCheck = std::variant<Letter, InvalidTuple>;

  TupleCheck validate_tuple(RawTuple const& raw);

  //! As validate_tuple, but throws DomainError when invalid.
  Letter make_tuple(Letter l, Anchor la, Letter c, Anchor ra, Letter r);

  //! g_xx' = (1,1,x,x',1).
  Letter base_tuple();

  //! Sides (l_a, r_a) of the middle entry inside the two wings.
  struct WingSides {
    Side in_left;
    Side in_right;
  };

  //! Requires height >= 2.
  WingSides resolve_sides(Letter g);

  ////////////////////////////////////////////////////////////////////////
  // Levels
  ////////////////////////////////////////////////////////////////////////

  enum class LevelClass : std::uint8_t { E, D, All };

  //! Deterministically ordered tuples of height i.
  //!
  //! Class E follows the recursive child order from g_xx'; class D is
  //! lexicographic on (l, la, c, ra, r) with letters ranked by (height,
  //! class, index in level) and anchors 1 < x < x'.  All is E then D.
  std::vector<Letter> enumerate_level(int i, LevelClass cls);

  //! Number of tuples of height i and class E/D without interning them.
  std::size_t level_size(int i, TupleClass cls);

  //! 1-based index of g in enumerate_level(height(g), cls(g)).
  //! Builds the level on demand and may throw CapExceeded.
  std::size_t level_index(Letter g);

  ////////////////////////////////////////////////////////////////////////
  // Ground and ⪯
  ////////////////////////////////////////////////////////////////////////

  //! Letters recursively inside g, including g itself, in structural order.
  std::vector<Letter> ground(Letter g);

  //! h ⪯ g iff h lies in the ground of g.
  bool preceq(Letter h, Letter g);

  ////////////////////////////////////////////////////////////////////////
  // Named tuples and literals
  ////////////////////////////////////////////////////////////////////////

  namespace named {
    Letter gxx();
    Letter g2e1();
    Letter g2e2();
    Letter g3d1();
    Letter g3d2();
    Letter g3d3();
    Letter g3d4();
  }  // namespace named

  enum class FormatMode : std::uint8_t { alias, expanded };

  //! `1`, an alias or a tuple literal `(item,anchor,item,anchor,item)`.
  //!
  //! Alias mode prefers the convenience names, then `g{i.e.k}` /
  //! `g{i.d.k}`, then a literal over aliased entries when the level is too
  //! large to index.
  std::string format_letter(Letter g, FormatMode mode);

  //! Parses one item of the tuple grammar, starting at `pos` and advancing
  //! it.  `offset` shifts reported error positions.
  Letter parse_letter(std::string_view text, std::size_t& pos,
                      std::size_t offset = 0);

  //! Parses an entire string as one item.
  Letter parse_letter(std::string_view text);

}  // namespace freg

#endif  // FREG_ALPHABET_HPP_
