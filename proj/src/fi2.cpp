#include "freg/fi2.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "freg/sampling.hpp"

namespace freg {

  ////////////////////////////////////////////////////////////////////////
  // Triples
  ////////////////////////////////////////////////////////////////////////

  class ITripleTable {
   public:
    static ITripleTable& instance() {
      static ITripleTable t;
      return t;
    }

    ILetter symbol(char s) {
      return ILetter(s == 'e' ? &e_ : &f_);
    }

    ILetter intern(ILetter l, ILetter c, ILetter r) {
      Key const       key{l.node(), c.node(), r.node()};
      std::lock_guard lock(mtx_);
      if (auto it = table_.find(key); it != table_.end()) {
        return ILetter(it->second);
      }
      nodes_.push_back(ITripleNode{l, c, r, l.height() + 1, 0});
      table_.emplace(key, &nodes_.back());
      return ILetter(&nodes_.back());
    }

    std::vector<ILetter> level(int i) {
      std::lock_guard lock(mtx_);
      return build(i);
    }

    std::size_t index(ILetter h) {
      std::lock_guard lock(mtx_);
      build(h.height());
      return rank_.at(h.node()) + 1;
    }

   private:
    using Key = std::tuple<ITripleNode const*, ITripleNode const*, ITripleNode const*>;
    using Rank = std::pair<int, std::size_t>;

    Rank rank(ILetter h) const {
      return h.is_one() ? Rank{0, 0} : Rank{h.height(), rank_.at(h.node())};
    }

    // Called with mtx_ held; interns without re-locking.
    ILetter intern_locked(ILetter l, ILetter c, ILetter r) {
      Key const key{l.node(), c.node(), r.node()};
      if (auto it = table_.find(key); it != table_.end()) {
        return ILetter(it->second);
      }
      nodes_.push_back(ITripleNode{l, c, r, l.height() + 1, 0});
      table_.emplace(key, &nodes_.back());
      return ILetter(&nodes_.back());
    }

    std::vector<ILetter> const& build(int i) {
      if (i < 1) {
        throw DomainError("i-level index must be positive");
      }
      check_height_cap(i, "enumerate_ilevel");
      if (levels_.empty()) {
        levels_.push_back({ILetter(&e_), ILetter(&f_)});
        rank_[&e_] = 0;
        rank_[&f_] = 1;
      }
      while (int(levels_.size()) < i) {
        int const k = int(levels_.size()) + 1;
        // wings of level k-1 grouped by each of their side entries
        std::map<Rank, std::vector<ILetter>> by_entry;
        std::map<Rank, ILetter>              entry_of;
        for (ILetter w : levels_.back()) {
          for (ILetter s : {w.left(), w.right()}) {
            auto& v = by_entry[rank(s)];
            if (std::find(v.begin(), v.end(), w) == v.end()) {
              v.push_back(w);
            }
            entry_of[rank(s)] = s;
          }
        }
        std::size_t total = 0;
        for (auto const& [c, ws] : by_entry) {
          total += ws.size() * (ws.size() - 1);
        }
        if (total > limits().max_level_size) {
          throw CapExceeded("enumerate_ilevel: level " + std::to_string(k)
                            + " has " + std::to_string(total)
                            + " triples, above the level size budget");
        }
        std::vector<std::tuple<Rank, Rank, Rank, ILetter, ILetter, ILetter>> rows;
        for (auto const& [c, ws] : by_entry) {
          for (ILetter l : ws) {
            for (ILetter r : ws) {
              if (l != r) {
                rows.emplace_back(rank(l), c, rank(r), l, entry_of[c], r);
              }
            }
          }
        }
        std::sort(rows.begin(), rows.end(), [](auto const& a, auto const& b) {
          return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a))
                 < std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
        });
        std::vector<ILetter> out;
        for (auto const& row : rows) {
          out.push_back(intern_locked(std::get<3>(row), std::get<4>(row),
                                      std::get<5>(row)));
        }
        for (std::size_t j = 0; j < out.size(); ++j) {
          rank_[out[j].node()] = j;
        }
        levels_.push_back(std::move(out));
      }
      return levels_[std::size_t(i) - 1];
    }

    struct KeyHash {
      std::size_t operator()(Key const& k) const noexcept {
        auto h = std::hash<void const*>();
        return h(std::get<0>(k)) * 31 * 31 + h(std::get<1>(k)) * 31
               + h(std::get<2>(k));
      }
    };

    ITripleNode e_{ILetter(), ILetter(), ILetter(), 1, 'e'};
    ITripleNode f_{ILetter(), ILetter(), ILetter(), 1, 'f'};

    std::mutex                                             mtx_;
    std::deque<ITripleNode>                                nodes_;
    std::unordered_map<Key, ITripleNode const*, KeyHash>   table_;
    std::vector<std::vector<ILetter>>                      levels_;
    std::unordered_map<ITripleNode const*, std::size_t>    rank_;
  };

  ILetter ILetter::e() {
    return ITripleTable::instance().symbol('e');
  }

  ILetter ILetter::f() {
    return ITripleTable::instance().symbol('f');
  }

  int ILetter::height() const noexcept {
    return node_ == nullptr ? 0 : node_->height;
  }

  ILetter ILetter::left() const {
    if (node_ == nullptr) {
      throw DomainError("the letter 1 has no entries");
    }
    return node_->l;
  }

  ILetter ILetter::right() const {
    if (node_ == nullptr) {
      throw DomainError("the letter 1 has no entries");
    }
    return node_->r;
  }

  ILetter ILetter::middle() const {
    if (height() < 2) {
      throw DomainError("middle entry requires height >= 2");
    }
    return node_->c;
  }

  ILetter make_itriple(ILetter l, ILetter c, ILetter r) {
    if (l.is_one() || l.height() != r.height()) {
      throw DomainError("triple wings must have equal positive height");
    }
    if (c.height() != l.height() - 1) {
      throw DomainError("triple middle has the wrong height");
    }
    if (l == r) {
      throw DomainError("triple wings must differ");
    }
    auto has = [&c](ILetter w) { return w.left() == c || w.right() == c; };
    if (!has(l) || !has(r)) {
      throw DomainError("triple middle must be an entry of both wings");
    }
    return ITripleTable::instance().intern(l, c, r);
  }

  std::vector<ILetter> enumerate_ilevel(int i) {
    return ITripleTable::instance().level(i);
  }

  std::size_t ilevel_index(ILetter h) {
    if (h.is_one()) {
      throw DomainError("the letter 1 is not in any i-level");
    }
    return ITripleTable::instance().index(h);
  }

  ////////////////////////////////////////////////////////////////////////
  // i-word grammar
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void format_iinto(std::string& out, ILetter h, FormatMode mode) {
      if (h.is_one()) {
        out += '1';
        return;
      }
      if (h.height() == 1) {
        out += h.node()->symbol;
        return;
      }
      if (mode == FormatMode::alias && h.height() <= limits().max_height) {
        try {
          out += "h{" + std::to_string(h.height()) + "."
                 + std::to_string(ilevel_index(h)) + "}";
          return;
        } catch (CapExceeded const&) {
          // fall through to the literal
        }
      }
      out += '(';
      format_iinto(out, h.left(), mode);
      out += ',';
      format_iinto(out, h.middle(), mode);
      out += ',';
      format_iinto(out, h.right(), mode);
      out += ')';
    }

    class IParser {
     public:
      IParser(std::string_view text, std::size_t offset)
          : text_(text), offset_(offset) {}

      ILetter whole() {
        ILetter h = item();
        if (pos_ != text_.size()) {
          fail("trailing characters");
        }
        return h;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_ + offset_),
                         pos_ + offset_);
      }

      void expect(char ch) {
        if (pos_ >= text_.size() || text_[pos_] != ch) {
          fail(std::string("expected `") + ch + "`");
        }
        ++pos_;
      }

      ILetter item() {
        if (pos_ >= text_.size()) {
          fail("expected an i-letter");
        }
        char const ch = text_[pos_];
        if (ch == '1' || ch == 'e' || ch == 'f') {
          ++pos_;
          return ch == '1' ? ILetter::one()
                           : (ch == 'e' ? ILetter::e() : ILetter::f());
        }
        if (ch == '(') {
          std::size_t const start = pos_;
          ++pos_;
          ILetter l = item();
          expect(',');
          ILetter c = item();
          expect(',');
          ILetter r = item();
          expect(')');
          try {
            return make_itriple(l, c, r);
          } catch (DomainError const& e) {
            throw ParseError(std::string("invalid triple at position ")
                                 + std::to_string(start + offset_) + ": "
                                 + e.what(),
                             start + offset_);
          }
        }
        if (ch == 'h' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '{') {
          std::size_t const start = pos_;
          auto const        close = text_.find('}', pos_);
          if (close == std::string_view::npos) {
            fail("unterminated alias");
          }
          std::string const body(text_.substr(pos_ + 2, close - pos_ - 2));
          pos_              = close + 1;
          auto const dot    = body.find('.');
          auto const digits = [](std::string const& s) {
            return !s.empty() && s.size() < 10
                   && std::all_of(s.begin(), s.end(),
                                  [](char c) { return c >= '0' && c <= '9'; });
          };
          if (dot == std::string::npos || !digits(body.substr(0, dot))
              || !digits(body.substr(dot + 1))) {
            pos_ = start;
            fail("malformed alias");
          }
          int const         i = std::stoi(body.substr(0, dot));
          std::size_t const k = std::stoul(body.substr(dot + 1));
          if (i < 1) {
            pos_ = start;
            fail("alias height must be positive");
          }
          auto const level = enumerate_ilevel(i);
          if (k < 1 || k > level.size()) {
            pos_ = start;
            fail("alias index out of range");
          }
          return level[k - 1];
        }
        fail("expected `1`, `e`, `f`, an alias or a triple");
      }

      std::string_view text_;
      std::size_t      offset_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  std::string format_iletter(ILetter h, FormatMode mode) {
    std::string out;
    format_iinto(out, h, mode);
    return out;
  }

  ILetter parse_iletter(std::string_view text) {
    return IParser(text, 0).whole();
  }

  IWord parse_iword(std::string_view text) {
    IWord       w;
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
      w.push_back(IParser(text.substr(pos, end - pos), pos).whole());
      pos = end;
    }
    if (w.empty()) {
      throw ParseError("empty word", 0);
    }
    return w;
  }

  std::string format_iword(IWord const& w, FormatMode mode) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      format_iinto(out, w[i], mode);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // i-landscapes
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_wing_of(ILetter g, ILetter h) {
      return !h.is_one() && (h.left() == g || h.right() == g);
    }
  }  // namespace

  bool is_ilandscape(IWord const& w) {
    if (w.empty()) {
      return false;
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (!is_wing_of(w[i - 1], w[i]) && !is_wing_of(w[i], w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> irivers(IWord const& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
      int const h = w[i].height();
      if (w[i - 1].height() == h + 1 && w[i + 1].height() == h + 1) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool is_imountain(IWord const& w) {
    return is_ilandscape(w) && w.front().is_one() && w.back().is_one()
           && irivers(w).empty();
  }

  IWord iuplift(IWord const& w, std::size_t i) {
    auto const rv = irivers(w);
    if (!std::binary_search(rv.begin(), rv.end(), i)) {
      throw DomainError("iuplift: position " + std::to_string(i)
                        + " is not an i-river");
    }
    IWord out = w;
    if (w[i - 1] == w[i + 1]) {
      out.erase(out.begin() + long(i), out.begin() + long(i) + 2);
    } else {
      out[i] = make_itriple(w[i + 1], w[i], w[i - 1]);
    }
    return out;
  }

  IWord inormalize(IWord w) {
    std::size_t const ceiling = 4 * w.size() * w.size();
    std::size_t       steps   = 0;
    for (auto rv = irivers(w); !rv.empty(); rv = irivers(w)) {
      if (++steps > ceiling) {
        throw InternalError("inormalize: step ceiling exceeded");
      }
      w = iuplift(w, rv.front());
    }
    return w;
  }

  IWord iproduct(IWord const& u, IWord const& v) {
    if (!is_imountain(u) || !is_imountain(v)) {
      throw DomainError("iproduct: arguments must be i-mountains");
    }
    IWord w = u;
    w.insert(w.end(), v.begin() + 1, v.end());
    return inormalize(std::move(w));
  }

  std::vector<IWord> enumerate_ihills(ILetter h, Direction dir) {
    if (h.is_one()) {
      return {IWord{ILetter::one()}};
    }
    check_height_cap(h.height(), "enumerate_ihills");
    std::vector<IWord> out;
    std::vector<ILetter> wings{h.left()};
    if (h.right() != h.left()) {
      wings.push_back(h.right());
    }
    for (ILetter w : wings) {
      for (IWord p : enumerate_ihills(w, Direction::up)) {
        p.push_back(h);
        out.push_back(std::move(p));
      }
    }
    if (out.size() > limits().max_level_size) {
      throw CapExceeded("enumerate_ihills: enumeration budget exceeded");
    }
    if (dir == Direction::down) {
      for (auto& p : out) {
        std::reverse(p.begin(), p.end());
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // G° and M°
  ////////////////////////////////////////////////////////////////////////

  bool in_Gcirc(Letter g) {
    switch (g.height()) {
      case 0:
        return false;
      case 1:
      case 2:
        return true;
      case 3:
        return g == named::g3d1() || g == named::g3d2() || g == named::g3d3()
               || g == named::g3d4();
      default:
        return g.cls() == TupleClass::D && in_Gcirc(g.left())
               && in_Gcirc(g.right());
    }
  }

  std::vector<Letter> enumerate_gcirc(int i) {
    if (i == 1) {
      return {base_tuple()};
    }
    std::vector<Letter> out;
    for (ILetter h : enumerate_ilevel(i)) {
      out.push_back(psi_letter(h));
    }
    return out;
  }

  bool in_Mcirc(Landscape const& u) {
    if (!is_mountain_range(u)) {
      return false;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      Letter const g = u.letter(i);
      if (!g.is_one() && !in_Gcirc(g)) {
        return false;
      }
      if (g.height() == 1 && u.anchor(i + 1) != involute(u.anchor(i))) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // φ and ψ
  ////////////////////////////////////////////////////////////////////////

  ILetter phi_letter(Letter g) {
    if (g.height() < 2 || !in_Gcirc(g)) {
      throw DomainError("phi: letter is not in G° or has height < 2");
    }
    if (g.height() == 2) {
      auto const h2 = enumerate_ilevel(2);
      return g == named::g2e1() ? h2[0] : h2[1];
    }
    ILetter const c = g.height() == 3
                          ? (g.left_anchor() == Anchor::one ? ILetter::e()
                                                            : ILetter::f())
                          : phi_letter(g.middle());
    return make_itriple(phi_letter(g.left()), c, phi_letter(g.right()));
  }

  Letter psi_letter(ILetter h) {
    if (h.height() < 2) {
      throw DomainError("psi: requires a triple of height >= 2");
    }
    if (h.height() == 2) {
      return h == enumerate_ilevel(2)[0] ? named::g2e1() : named::g2e2();
    }
    Letter const l = psi_letter(h.left());
    Letter const r = psi_letter(h.right());
    if (h.height() == 3) {
      Anchor const a = h.middle() == ILetter::e() ? Anchor::one : Anchor::xprime;
      return make_tuple(l, a, base_tuple(), a, r);
    }
    Letter const c = psi_letter(h.middle());
    auto anchor_in = [&c](Letter w) {
      for (Side s : {Side::left, Side::right}) {
        if (w.entry(s) == c) {
          return involute(w.entry_anchor(s));
        }
      }
      throw InternalError("psi: middle entry is not an entry of a wing");
    };
    return make_tuple(l, anchor_in(l), c, anchor_in(r), r);
  }

  IWord phi_mountain(Landscape const& u) {
    if (!in_Mcirc(u)) {
      throw DomainError("phi: mountain range is not in M°");
    }
    IWord out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      Letter const g = u.letter(i);
      if (g.is_one()) {
        out.push_back(ILetter::one());
      } else if (g.height() == 1) {
        Anchor const a = u.anchor(i);
        if (a == Anchor::one) {
          out.push_back(ILetter::e());
        } else if (a == Anchor::xprime) {
          out.push_back(ILetter::f());
        } else {
          throw DomainError("phi: g_xx' flanked by x and x'");
        }
      } else {
        out.push_back(phi_letter(g));
      }
    }
    return out;
  }

  Landscape psi_mountain(IWord const& v) {
    if (!is_ilandscape(v) || !v.front().is_one() || !v.back().is_one()) {
      throw DomainError("psi: not an i-mountain range");
    }
    std::vector<Letter>                letters;
    std::vector<std::optional<Anchor>> anchors(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      ILetter const h = v[i];
      if (h.height() == 1) {
        letters.push_back(base_tuple());
        bool const e = h == ILetter::e();
        if (i > 0) {
          anchors[i - 1] = e ? Anchor::one : Anchor::xprime;
        }
        if (i + 1 < v.size()) {
          anchors[i] = e ? Anchor::one : Anchor::x;
        }
      } else {
        letters.push_back(h.is_one() ? Letter::one() : psi_letter(h));
      }
    }
    std::vector<Anchor> out;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      if (anchors[i]) {
        out.push_back(*anchors[i]);
        continue;
      }
      std::optional<Anchor> found;
      for (Anchor a : {Anchor::one, Anchor::x, Anchor::xprime}) {
        if (anchored(letters[i], a, letters[i + 1])) {
          if (found) {
            throw InternalError("psi: anchor between letters is not unique");
          }
          found = a;
        }
      }
      if (!found) {
        throw InternalError("psi: no anchor joins adjacent letters");
      }
      out.push_back(*found);
    }
    return Landscape::from_parts(std::move(letters), std::move(out));
  }

  Element gbar(Letter g) {
    if (g.height() < 2 || !in_Gcirc(g)) {
      throw DomainError("gbar: requires g in G° with height >= 2");
    }
    if (g.height() % 2 == 0) {
      return Element::of(Word{g});
    }
    Letter h = g;
    while (h.height() > 3) {
      h = h.middle();
    }
    if (h == named::g3d1() || h == named::g3d3()) {
      return Element::of(Word{g});
    }
    return Element::of(Word{Anchor::xprime, g, Anchor::x});
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  std::vector<Landscape> enumerate_mcirc(int i) {
    std::vector<Landscape> out;
    for (Letter g : enumerate_gcirc(i)) {
      for (Element const& u : dclass(g)) {
        if (in_Mcirc(u.mountain())) {
          out.push_back(u.mountain());
        }
      }
    }
    return out;
  }

  namespace {
    Landscape random_mcirc(int max_height, Rng& rng) {
      int const h = std::uniform_int_distribution<int>(1, max_height)(rng);
      auto const gs = enumerate_gcirc(h);
      Letter const g
          = gs[std::uniform_int_distribution<std::size_t>(0, gs.size() - 1)(rng)];
      for (;;) {
        Element u = random_in_dclass(g, rng);
        if (in_Mcirc(u.mountain())) {
          return u.mountain();
        }
      }
    }
  }  // namespace

  EmbeddingReport check_embedding(int max_height, std::size_t samples,
                                  std::uint64_t seed) {
    EmbeddingReport rep;
    auto fail = [&rep](std::string msg) {
      rep.pass = false;
      if (rep.failures.size() < 20) {
        rep.failures.push_back(std::move(msg));
      }
    };
    auto show = [](Landscape const& u) {
      return format_word(u.to_word(), FormatMode::alias);
    };

    for (int i = 1; i <= std::min(max_height, 4); ++i) {
      std::vector<Landscape> ms = enumerate_mcirc(i);
      std::size_t            imountains = 0;
      for (ILetter h : enumerate_ilevel(i)) {
        imountains += enumerate_ihills(h, Direction::up).size()
                      * enumerate_ihills(h, Direction::down).size();
      }
      if (ms.size() != imountains) {
        fail("height " + std::to_string(i) + ": " + std::to_string(ms.size())
             + " M° mountains but " + std::to_string(imountains)
             + " i-mountains");
      }
      for (Landscape const& u : ms) {
        IWord const v = phi_mountain(u);
        if (!is_imountain(v)) {
          fail("image is not an i-mountain: " + show(u));
        } else if (!(psi_mountain(v) == u)) {
          fail("psi(phi(u)) != u for " + show(u));
        }
        ++rep.exhaustive_mountains;
      }
    }

    Rng rng(seed);
    for (std::size_t k = 0; k < samples && max_height >= 1; ++k) {
      Landscape const u = random_mcirc(max_height, rng);
      Landscape const v = random_mcirc(max_height, rng);
      Landscape const w = beta2(join(u, v));
      ++rep.sampled_pairs;
      if (!in_Mcirc(w)) {
        fail("M° not closed: " + show(u) + " * " + show(v));
        continue;
      }
      if (phi_mountain(w) != iproduct(phi_mountain(u), phi_mountain(v))) {
        fail("not a homomorphism: " + show(u) + " * " + show(v));
      }
    }
    return rep;
  }

}  // namespace freg
