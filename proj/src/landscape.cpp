#include "freg/landscape.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace freg {

  Anchor Token::anchor() const {
    if (!is_anchor()) {
      throw DomainError("token is a tuple, not an anchor");
    }
    return std::get<Anchor>(v_);
  }

  Letter Token::letter() const {
    if (is_tuple()) {
      return std::get<Letter>(v_);
    }
    if (std::get<Anchor>(v_) == Anchor::one) {
      return Letter::one();
    }
    throw DomainError("anchor " + std::string(to_string(std::get<Anchor>(v_)))
                      + " is not a letter");
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text) {
    Word        w;
    std::size_t pos = 0;
    auto        space = [&](std::size_t i) {
      return std::isspace(static_cast<unsigned char>(text[i])) != 0;
    };
    while (true) {
      while (pos < text.size() && space(pos)) {
        ++pos;
      }
      if (pos >= text.size()) {
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && !space(end)) {
        ++end;
      }
      std::string_view const tok = text.substr(pos, end - pos);
      if (auto a = anchor_from_string(tok)) {
        w.emplace_back(*a);
      } else {
        std::size_t p = 0;
        Letter      g = parse_letter(tok, p, pos);
        if (p != tok.size()) {
          throw ParseError("unexpected `" + std::string(1, tok[p])
                               + "` at position " + std::to_string(pos + p),
                           pos + p);
        }
        w.emplace_back(g);
      }
      pos = end;
    }
    if (w.empty()) {
      throw ParseError("empty word", 0);
    }
    return w;
  }

  std::string format_token(Token const& t, FormatMode mode) {
    if (t.is_anchor()) {
      return std::string(to_string(t.anchor()));
    }
    return format_letter(t.letter(), mode);
  }

  std::string format_word(Word const& w, FormatMode mode) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += format_token(w[i], mode);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Anchoring
  ////////////////////////////////////////////////////////////////////////

  bool left_anchored(Letter g, Anchor a, Letter h) {
    if (!h.is_tuple()) {
      return false;
    }
    return (g == h.left() && a == h.left_anchor())
           || (g == h.right() && a == h.right_anchor());
  }

  bool right_anchored(Letter g, Anchor a, Letter h) {
    if (!g.is_tuple()) {
      return false;
    }
    return (h == g.left() && a == involute(g.left_anchor()))
           || (h == g.right() && a == involute(g.right_anchor()));
  }

  bool anchored(Letter g, Anchor a, Letter h) {
    return left_anchored(g, a, h) || right_anchored(g, a, h);
  }

  ////////////////////////////////////////////////////////////////////////
  // Landscape
  ////////////////////////////////////////////////////////////////////////

  Landscape::Landscape(std::vector<Letter> letters, std::vector<Anchor> anchors)
      : letters_(std::move(letters)), anchors_(std::move(anchors)) {
    for (Letter g : letters_) {
      height_ = std::max(height_, g.height());
    }
    for (std::size_t i = 1; i + 1 < letters_.size(); ++i) {
      int const h  = letters_[i].height();
      int const hl = letters_[i - 1].height();
      int const hr = letters_[i + 1].height();
      if (hl == h + 1 && hr == h + 1) {
        rivers_.push_back(i);
      } else if (hl == h - 1 && hr == h - 1) {
        ridges_.push_back(i);
      }
    }
  }

  std::variant<Landscape, NotLandscape> Landscape::check(Word const& w) {
    if (w.empty()) {
      return NotLandscape{0, "empty word"};
    }
    std::vector<Letter> letters;
    std::vector<Anchor> anchors;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i % 2 == 0) {
        if (!w[i].is_letter()) {
          return NotLandscape{i, "expected a letter, found an anchor"};
        }
        letters.push_back(w[i].letter());
      } else {
        if (!w[i].is_anchor()) {
          return NotLandscape{i, "expected an anchor, found a tuple"};
        }
        anchors.push_back(w[i].anchor());
      }
      if (i % 2 == 0 && i > 0
          && !anchored(letters[letters.size() - 2], anchors.back(),
                       letters.back())) {
        return NotLandscape{i - 2, "triplet is not anchored"};
      }
    }
    if (w.size() % 2 == 0) {
      return NotLandscape{w.size() - 1, "word ends with an anchor"};
    }
    return Landscape(std::move(letters), std::move(anchors));
  }

  Landscape Landscape::from_word(Word const& w) {
    auto res = check(w);
    if (auto const* bad = std::get_if<NotLandscape>(&res)) {
      throw DomainError("not a landscape at token " + std::to_string(bad->position)
                        + ": " + bad->reason);
    }
    return std::get<Landscape>(std::move(res));
  }

  Landscape Landscape::from_parts(std::vector<Letter> letters,
                                  std::vector<Anchor> anchors) {
    if (letters.empty() || anchors.size() + 1 != letters.size()) {
      throw DomainError("landscape needs one anchor between consecutive letters");
    }
    for (std::size_t i = 1; i < letters.size(); ++i) {
      if (!anchored(letters[i - 1], anchors[i - 1], letters[i])) {
        throw DomainError("triplet at token " + std::to_string(2 * i - 2)
                          + " is not anchored");
      }
    }
    return Landscape(std::move(letters), std::move(anchors));
  }

  Landscape Landscape::single(Letter g) {
    return Landscape({g}, {});
  }

  Word Landscape::to_word() const {
    Word w;
    w.reserve(token_count());
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i > 0) {
        w.emplace_back(anchors_[i - 1]);
      }
      w.emplace_back(letters_[i]);
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Shapes
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Length of the maximal strictly monotone run starting at letter 0.
    std::size_t run_from_start(Landscape const& u, int step) {
      std::size_t k = 0;
      while (k + 1 < u.size()
             && u.letter(k + 1).height() == u.letter(k).height() + step) {
        ++k;
      }
      return k;
    }

    std::size_t run_to_end(Landscape const& u, int step) {
      std::size_t k = u.size() - 1;
      while (k > 0 && u.letter(k - 1).height() == u.letter(k).height() - step) {
        --k;
      }
      return k;
    }
  }  // namespace

  bool is_uphill(Landscape const& u) {
    return run_from_start(u, 1) == u.size() - 1;
  }

  bool is_downhill(Landscape const& u) {
    return run_from_start(u, -1) == u.size() - 1;
  }

  bool is_valley(Landscape const& u) {
    return u.ridges().empty() && u.rivers().size() <= 1
           && run_from_start(u, -1) >= run_to_end(u, 1);
  }

  bool is_canyon(Landscape const& u) {
    return is_valley(u) && u.first() == u.last();
  }

  bool is_mountain_range(Landscape const& u) {
    return u.first().is_one() && u.last().is_one();
  }

  bool is_mountain(Landscape const& u) {
    return is_mountain_range(u) && u.rivers().empty();
  }

  LandscapeInfo classify(Landscape const& u) {
    LandscapeInfo info;
    info.rivers = u.rivers();
    info.ridges = u.ridges();
    info.height = u.height();
    int top     = -1;
    for (std::size_t i : u.ridges()) {
      top = std::max(top, u.letter(i).height());
    }
    for (std::size_t i : u.ridges()) {
      if (u.letter(i).height() == top) {
        info.peaks.push_back(i);
      }
    }
    info.uphill         = is_uphill(u);
    info.downhill       = is_downhill(u);
    info.hill           = info.uphill || info.downhill;
    info.valley         = is_valley(u);
    info.canyon         = info.valley && u.first() == u.last();
    info.mountain_range = is_mountain_range(u);
    info.mountain       = info.mountain_range && u.rivers().empty();
    return info;
  }

  std::variant<NotLandscape, LandscapeInfo> analyze(Word const& w) {
    auto res = Landscape::check(w);
    if (auto const* bad = std::get_if<NotLandscape>(&res)) {
      return *bad;
    }
    return classify(std::get<Landscape>(res));
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  Landscape join(Landscape const& u, Landscape const& v) {
    if (u.last() != v.first()) {
      throw DomainError("join: last letter of the left factor differs from "
                        "the first letter of the right factor");
    }
    std::vector<Letter> letters = u.letters();
    std::vector<Anchor> anchors = u.anchors();
    letters.insert(letters.end(), v.letters().begin() + 1, v.letters().end());
    anchors.insert(anchors.end(), v.anchors().begin(), v.anchors().end());
    return Landscape::from_parts(std::move(letters), std::move(anchors));
  }

  Landscape reverse(Landscape const& u) {
    std::vector<Letter> letters(u.letters().rbegin(), u.letters().rend());
    std::vector<Anchor> anchors;
    anchors.reserve(u.anchors().size());
    for (auto it = u.anchors().rbegin(); it != u.anchors().rend(); ++it) {
      anchors.push_back(involute(*it));
    }
    return Landscape::from_parts(std::move(letters), std::move(anchors));
  }

  Landscape sub(Landscape const& u, std::size_t first, std::size_t last) {
    if (first > last || last >= u.size()) {
      throw DomainError("sub: bad letter range");
    }
    std::vector<Letter> letters(u.letters().begin() + long(first),
                                u.letters().begin() + long(last) + 1);
    std::vector<Anchor> anchors(u.anchors().begin() + long(first),
                                u.anchors().begin() + long(last));
    return Landscape::from_parts(std::move(letters), std::move(anchors));
  }

  Landscape left_hill(Landscape const& u) {
    return sub(u, 0, run_from_start(u, 1));
  }

  Landscape right_hill(Landscape const& u) {
    return sub(u, run_to_end(u, -1), u.size() - 1);
  }

  Hills hills_of(Landscape const& mountain) {
    if (!is_mountain(mountain)) {
      throw DomainError("hills_of: not a mountain");
    }
    Landscape l = left_hill(mountain);
    Landscape r = right_hill(mountain);
    if (l.size() + r.size() != mountain.size() + 1) {
      throw InternalError("mountain does not split into two hills");
    }
    return Hills{std::move(l), std::move(r)};
  }

  Letter peak(Landscape const& mountain) {
    if (!is_mountain(mountain)) {
      throw DomainError("peak: not a mountain");
    }
    return left_hill(mountain).last();
  }

  bool is_prefix(Landscape const& prefix, Landscape const& u) {
    if (prefix.size() > u.size()) {
      return false;
    }
    return std::equal(prefix.letters().begin(), prefix.letters().end(),
                      u.letters().begin())
           && std::equal(prefix.anchors().begin(), prefix.anchors().end(),
                         u.anchors().begin());
  }

  bool is_suffix(Landscape const& suffix, Landscape const& u) {
    if (suffix.size() > u.size()) {
      return false;
    }
    return std::equal(suffix.letters().rbegin(), suffix.letters().rend(),
                      u.letters().rbegin())
           && std::equal(suffix.anchors().rbegin(), suffix.anchors().rend(),
                         u.anchors().rbegin());
  }

  namespace {
    // The two (predecessor, anchor) slots of an uphill ending at g, in
    // enumeration order.
    std::array<std::pair<Letter, Anchor>, 2> slots(Letter g) {
      std::pair<Letter, Anchor> const l{g.left(), g.left_anchor()};
      std::pair<Letter, Anchor> const r{g.right(), g.right_anchor()};
      if (g.cls() == TupleClass::E && g.right_anchor() == Anchor::one) {
        return {r, l};
      }
      return {l, r};
    }

    void uphills(Letter g, std::vector<Letter>& letters,
                 std::vector<Anchor>& anchors, std::vector<Landscape>& out) {
      // letters/anchors hold the tail above g, top first
      if (g.is_one()) {
        std::vector<Letter> ls{Letter::one()};
        ls.insert(ls.end(), letters.rbegin(), letters.rend());
        std::vector<Anchor> as(anchors.rbegin(), anchors.rend());
        out.push_back(Landscape::from_parts(std::move(ls), std::move(as)));
        return;
      }
      letters.push_back(g);
      for (auto const& [p, a] : slots(g)) {
        anchors.push_back(a);
        uphills(p, letters, anchors, out);
        anchors.pop_back();
      }
      letters.pop_back();
    }
  }  // namespace

  std::vector<Landscape> enumerate_hills(Letter g, Direction dir) {
    if (g.is_one()) {
      return {Landscape()};
    }
    check_height_cap(g.height(), "enumerate_hills");
    if (g.height() >= 63
        || (std::size_t(1) << g.height()) > limits().max_level_size) {
      throw CapExceeded("enumerate_hills: 2^" + std::to_string(g.height())
                        + " hills exceed the enumeration budget");
    }
    std::vector<Landscape> out;
    out.reserve(std::size_t(1) << g.height());
    std::vector<Letter> letters;
    std::vector<Anchor> anchors;
    uphills(g, letters, anchors, out);
    if (dir == Direction::down) {
      for (auto& h : out) {
        h = reverse(h);
      }
    }
    return out;
  }

  WingTriplets wing_triplets(Letter g) {
    if (g.height() < 2) {
      throw DomainError("wing_triplets: requires height >= 2");
    }
    return WingTriplets{
        Word{involute(g.left_anchor()), g.left(), g.left_anchor()},
        Word{involute(g.right_anchor()), g.right(), g.right_anchor()}};
  }

}  // namespace freg
