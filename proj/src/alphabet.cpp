#include "freg/alphabet.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace freg {

  ////////////////////////////////////////////////////////////////////////
  // Limits
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::atomic<int>         g_max_height{Limits{}.max_height};
    std::atomic<std::size_t> g_max_level_size{Limits{}.max_level_size};
  }  // namespace

  Limits limits() {
    return Limits{g_max_height.load(), g_max_level_size.load()};
  }

  void set_limits(Limits const& l) {
    if (l.max_height < 1) {
      throw DomainError("max_height must be positive");
    }
    g_max_height.store(l.max_height);
    g_max_level_size.store(l.max_level_size);
  }

  void check_height_cap(int height, char const* what) {
    int const cap = g_max_height.load();
    if (height > cap) {
      std::ostringstream os;
      os << what << ": height " << height << " exceeds the cap " << cap;
      throw CapExceeded(os.str());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Anchors
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(Anchor a) noexcept {
    switch (a) {
      case Anchor::x:
        return "x";
      case Anchor::xprime:
        return "x'";
      default:
        return "1";
    }
  }

  std::optional<Anchor> anchor_from_string(std::string_view s) noexcept {
    if (s == "1") {
      return Anchor::one;
    }
    if (s == "x") {
      return Anchor::x;
    }
    if (s == "x'") {
      return Anchor::xprime;
    }
    return std::nullopt;
  }

  std::string_view to_string(InvalidReason r) noexcept {
    switch (r) {
      case InvalidReason::malformed_base:
        return "malformed base tuple";
      case InvalidReason::anchor_middle:
        return "anchor middle entry outside the base tuple";
      case InvalidReason::height_mismatch:
        return "height mismatch";
      case InvalidReason::equal_wings_not_e:
        return "equal wings but class E conditions fail";
      case InvalidReason::anchor_parity:
        return "class E anchor pair has wrong parity";
      case InvalidReason::left_side_condition:
        return "left anchor is not anchored inside the left wing";
      case InvalidReason::right_side_condition:
        return "right anchor is not anchored inside the right wing";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Letter accessors
  ////////////////////////////////////////////////////////////////////////

  namespace {
    TupleNode const& require_tuple(TupleNode const* n, char const* what) {
      if (n == nullptr) {
        throw DomainError(std::string(what) + ": the letter 1 has no entries");
      }
      return *n;
    }
  }  // namespace

  bool Letter::is_base() const noexcept {
    return node_ != nullptr && node_->height == 1;
  }

  int Letter::height() const noexcept {
    return node_ == nullptr ? 0 : node_->height;
  }

  TupleClass Letter::cls() const {
    return require_tuple(node_, "cls").cls;
  }

  Letter Letter::left() const {
    return require_tuple(node_, "left").l;
  }

  Letter Letter::right() const {
    return require_tuple(node_, "right").r;
  }

  Letter Letter::middle() const {
    auto const& n = require_tuple(node_, "middle");
    if (n.height < 2) {
      throw DomainError("middle: g_xx' has no middle letter");
    }
    return n.c;
  }

  Anchor Letter::left_anchor() const {
    return require_tuple(node_, "left_anchor").la;
  }

  Anchor Letter::right_anchor() const {
    return require_tuple(node_, "right_anchor").ra;
  }

  Letter Letter::entry(Side s) const {
    auto const& n = require_tuple(node_, "entry");
    return s == Side::left ? n.l : n.r;
  }

  Anchor Letter::entry_anchor(Side s) const {
    auto const& n = require_tuple(node_, "entry_anchor");
    return s == Side::left ? n.la : n.ra;
  }

  Side Letter::left_side() const {
    auto const& n = require_tuple(node_, "left_side");
    if (n.height < 2) {
      throw DomainError("left_side: requires height >= 2");
    }
    return n.l_side;
  }

  Side Letter::right_side() const {
    auto const& n = require_tuple(node_, "right_side");
    if (n.height < 2) {
      throw DomainError("right_side: requires height >= 2");
    }
    return n.r_side;
  }

  namespace {
    int structural_cmp(Letter a, Letter b) {
      if (a == b) {
        return 0;
      }
      if (a.height() != b.height()) {
        return a.height() < b.height() ? -1 : 1;
      }
      // equal positive heights from here on
      auto const& x = *a.node();
      auto const& y = *b.node();
      if (x.cls != y.cls) {
        return x.cls < y.cls ? -1 : 1;
      }
      if (int c = structural_cmp(x.l, y.l); c != 0) {
        return c;
      }
      if (x.la != y.la) {
        return x.la < y.la ? -1 : 1;
      }
      if (int c = structural_cmp(x.c, y.c); c != 0) {
        return c;
      }
      if (x.ra != y.ra) {
        return x.ra < y.ra ? -1 : 1;
      }
      return structural_cmp(x.r, y.r);
    }
  }  // namespace

  bool structural_less(Letter a, Letter b) {
    return structural_cmp(a, b) < 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Interning
  ////////////////////////////////////////////////////////////////////////

  class Alphabet {
   public:
    static Alphabet& instance() {
      static Alphabet a;
      return a;
    }

    Letter intern(Letter l, Anchor la, Letter c, Anchor ra, Letter r,
                  int height, TupleClass cls, Side l_side, Side r_side) {
      Key const       key{l.node(), la, c.node(), ra, r.node()};
      std::lock_guard lock(mtx_);
      auto            it = table_.find(key);
      if (it != table_.end()) {
        return Letter(it->second);
      }
      nodes_.push_back(
          TupleNode{l, la, c, ra, r, height, cls, l_side, r_side});
      TupleNode const* n = &nodes_.back();
      table_.emplace(key, n);
      return Letter(n);
    }

   private:
    using Key = std::
        tuple<TupleNode const*, Anchor, TupleNode const*, Anchor, TupleNode const*>;

    struct KeyHash {
      std::size_t operator()(Key const& k) const noexcept {
        auto        h   = std::hash<void const*>();
        std::size_t out = h(std::get<0>(k));
        auto        mix = [&out](std::size_t v) {
          out ^= v + 0x9e3779b97f4a7c15ULL + (out << 6) + (out >> 2);
        };
        mix(static_cast<std::size_t>(std::get<1>(k)));
        mix(h(std::get<2>(k)));
        mix(static_cast<std::size_t>(std::get<3>(k)));
        mix(h(std::get<4>(k)));
        return out;
      }
    };

    std::mutex                                           mtx_;
    std::deque<TupleNode>                                nodes_;
    std::unordered_map<Key, TupleNode const*, KeyHash>   table_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    InvalidTuple invalid(InvalidReason r, std::string detail) {
      return InvalidTuple{r, std::move(detail)};
    }

    // The side s of `wing` with wing^s = c and (wing^{sa})' = a.
    std::optional<Side> anchored_side(Letter wing, Letter c, Anchor a) {
      for (Side s : {Side::left, Side::right}) {
        if (wing.entry(s) == c && involute(wing.entry_anchor(s)) == a) {
          return s;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  TupleCheck validate_tuple(RawTuple const& raw) {
    auto const& [l, la, cv, ra, r] = raw;

    if (std::holds_alternative<Anchor>(cv)) {
      Anchor const mid = std::get<Anchor>(cv);
      if (!l.is_one() || !r.is_one()) {
        return invalid(InvalidReason::anchor_middle,
                       "only (1,1,x,x',1) has an anchor as middle entry");
      }
      if (la != Anchor::one || mid != Anchor::x || ra != Anchor::xprime) {
        return invalid(InvalidReason::malformed_base,
                       "the height-1 tuple must be (1,1,x,x',1)");
      }
      return Alphabet::instance().intern(l, la, Letter::one(), ra, r, 1,
                                         TupleClass::E, Side::left,
                                         Side::right);
    }

    Letter const c = std::get<Letter>(cv);
    if (l.is_one() && r.is_one()) {
      return invalid(InvalidReason::malformed_base,
                     "the height-1 tuple must be (1,1,x,x',1)");
    }
    if (l.height() != r.height() || l.is_one() || r.is_one()) {
      return invalid(InvalidReason::height_mismatch,
                     "left and right entries must have equal height");
    }
    int const h = l.height() + 1;
    if (h == 2 ? !c.is_one() : c.height() != h - 2) {
      return invalid(InvalidReason::height_mismatch,
                     "middle entry must have height " + std::to_string(h - 2));
    }

    if (l == r) {
      if (c != l.left() || c != l.right()) {
        return invalid(InvalidReason::equal_wings_not_e,
                       "middle entry must equal both entries of the wing");
      }
      if (la == ra || !anchor_fits_height(la, h)
          || !anchor_fits_height(ra, h)) {
        return invalid(InvalidReason::anchor_parity,
                       h % 2 == 0 ? "anchors must be {1,x}"
                                  : "anchors must be {1,x'}");
      }
      auto ls = anchored_side(l, c, la);
      auto rs = anchored_side(r, c, ra);
      if (!ls || !rs) {
        throw InternalError("class E tuple without anchored sides");
      }
      return Alphabet::instance().intern(l, la, c, ra, r, h, TupleClass::E,
                                         *ls, *rs);
    }

    auto ls = anchored_side(l, c, la);
    if (!ls) {
      return invalid(InvalidReason::left_side_condition,
                     "(c, la) must be (l^s, (l^{sa})') for a side s of l");
    }
    auto rs = anchored_side(r, c, ra);
    if (!rs) {
      return invalid(InvalidReason::right_side_condition,
                     "(c, ra) must be (r^t, (r^{ta})') for a side t of r");
    }
    return Alphabet::instance().intern(l, la, c, ra, r, h, TupleClass::D, *ls,
                                       *rs);
  }

  Letter make_tuple(Letter l, Anchor la, Letter c, Anchor ra, Letter r) {
    auto res = validate_tuple(RawTuple{l, la, c, ra, r});
    if (auto const* bad = std::get_if<InvalidTuple>(&res)) {
      throw DomainError("invalid tuple: " + std::string(to_string(bad->reason))
                        + " (" + bad->detail + ")");
    }
    return std::get<Letter>(res);
  }

  Letter base_tuple() {
    static Letter const g = std::get<Letter>(validate_tuple(
        RawTuple{Letter::one(), Anchor::one, Anchor::x, Anchor::xprime,
                 Letter::one()}));
    return g;
  }

  WingSides resolve_sides(Letter g) {
    return WingSides{g.left_side(), g.right_side()};
  }

  namespace named {
    Letter gxx() {
      return base_tuple();
    }
    Letter g2e1() {
      static Letter const g = make_tuple(gxx(), Anchor::one, Letter::one(),
                                         Anchor::x, gxx());
      return g;
    }
    Letter g2e2() {
      static Letter const g = make_tuple(gxx(), Anchor::x, Letter::one(),
                                         Anchor::one, gxx());
      return g;
    }
    Letter g3d1() {
      static Letter const g
          = make_tuple(g2e1(), Anchor::one, gxx(), Anchor::one, g2e2());
      return g;
    }
    Letter g3d2() {
      static Letter const g
          = make_tuple(g2e1(), Anchor::xprime, gxx(), Anchor::xprime, g2e2());
      return g;
    }
    Letter g3d3() {
      static Letter const g
          = make_tuple(g2e2(), Anchor::one, gxx(), Anchor::one, g2e1());
      return g;
    }
    Letter g3d4() {
      static Letter const g
          = make_tuple(g2e2(), Anchor::xprime, gxx(), Anchor::xprime, g2e1());
      return g;
    }
  }  // namespace named

  ////////////////////////////////////////////////////////////////////////
  // Levels
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class LevelCache {
     public:
      static LevelCache& instance() {
        static LevelCache c;
        return c;
      }

      std::vector<Letter> level(int i, TupleClass cls) {
        std::lock_guard lock(mtx_);
        return cls == TupleClass::E ? build_e(i) : build_d(i);
      }

      std::size_t size(int i, TupleClass cls) {
        std::lock_guard lock(mtx_);
        if (cls == TupleClass::E) {
          return i >= 1 ? std::size_t(1) << (i - 1) : 0;
        }
        return count_d(i);
      }

      std::size_t index(Letter g) {
        std::lock_guard lock(mtx_);
        if (g.cls() == TupleClass::E) {
          build_e(g.height());
        } else {
          build_d(g.height());
        }
        return rank_.at(g.node()) + 1;
      }

     private:
      using Group = std::vector<std::pair<Letter, Anchor>>;

      std::vector<Letter> const& build_e(int i) {
        if (i < 1) {
          throw DomainError("level index must be positive");
        }
        check_height_cap(i, "enumerate_level");
        if (std::size_t(i) > e_.size()) {
          if (e_.empty()) {
            e_.push_back({base_tuple()});
            rank_[base_tuple().node()] = 0;
          }
          while (int(e_.size()) < i) {
            std::vector<Letter> next;
            next.reserve(e_.back().size() * 2);
            for (Letter g : e_.back()) {
              Anchor const a = involute(g.left_anchor());
              Anchor const b = involute(g.right_anchor());
              next.push_back(make_tuple(g, a, g.left(), b, g));
              next.push_back(make_tuple(g, b, g.left(), a, g));
            }
            for (std::size_t k = 0; k < next.size(); ++k) {
              rank_[next[k].node()] = k;
            }
            e_.push_back(std::move(next));
          }
        }
        return e_[i - 1];
      }

      // Rank of a letter for the lexicographic D order; only called on
      // letters whose levels are already built.
      std::tuple<int, int, std::size_t> key(Letter g) const {
        if (g.is_one()) {
          return {0, 0, 0};
        }
        return {g.height(), static_cast<int>(g.cls()), rank_.at(g.node())};
      }

      std::map<TupleNode const*, Group> groups(int i) {
        // wings of level i-1 grouped by the entry they expose as a middle
        std::map<TupleNode const*, Group> out;
        auto add = [&out](Letter w) {
          for (Side s : {Side::left, Side::right}) {
            out[w.entry(s).node()].emplace_back(
                w, involute(w.entry_anchor(s)));
          }
        };
        for (Letter w : build_e(i - 1)) {
          add(w);
        }
        for (Letter w : build_d(i - 1)) {
          add(w);
        }
        return out;
      }

      std::size_t count_d(int i) {
        if (i < 1) {
          throw DomainError("level index must be positive");
        }
        if (i <= 2) {
          return 0;
        }
        if (auto it = d_count_.find(i); it != d_count_.end()) {
          return it->second;
        }
        check_height_cap(i, "enumerate_level");
        std::size_t total = 0;
        for (auto const& [c, grp] : groups(i)) {
          std::unordered_map<TupleNode const*, std::size_t> same;
          for (auto const& [w, a] : grp) {
            ++same[w.node()];
          }
          total += grp.size() * grp.size();
          for (auto const& [w, m] : same) {
            total -= m * m;
          }
        }
        d_count_[i] = total;
        return total;
      }

      std::vector<Letter> const& build_d(int i) {
        if (i < 1) {
          throw DomainError("level index must be positive");
        }
        if (i <= 2) {
          static std::vector<Letter> const empty;
          return empty;
        }
        if (auto it = d_.find(i); it != d_.end()) {
          return it->second;
        }
        std::size_t const n = count_d(i);
        if (n > limits().max_level_size) {
          throw CapExceeded("enumerate_level: level " + std::to_string(i)
                            + " class D has " + std::to_string(n)
                            + " tuples, above the level size budget");
        }
        using Row = std::tuple<std::tuple<int, int, std::size_t>, Anchor,
                               std::tuple<int, int, std::size_t>, Anchor,
                               std::tuple<int, int, std::size_t>>;
        std::vector<std::pair<Row, std::array<Letter, 3>>> rows;
        std::vector<std::pair<Anchor, Anchor>>             anchors;
        rows.reserve(n);
        for (auto const& [cnode, grp] : groups(i)) {
          Letter const c = grp.front().first.entry(
              grp.front().first.entry(Side::left).node() == cnode ? Side::left
                                                                   : Side::right);
          for (auto const& [l, la] : grp) {
            for (auto const& [r, ra] : grp) {
              if (l == r) {
                continue;
              }
              rows.push_back({Row{key(l), la, key(c), ra, key(r)}, {l, c, r}});
            }
          }
        }
        std::sort(rows.begin(), rows.end(),
                  [](auto const& a, auto const& b) { return a.first < b.first; });
        std::vector<Letter> out;
        out.reserve(rows.size());
        for (auto const& [row, lcr] : rows) {
          out.push_back(make_tuple(lcr[0], std::get<1>(row), lcr[1],
                                   std::get<3>(row), lcr[2]));
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
          rank_[out[k].node()] = k;
        }
        return d_.emplace(i, std::move(out)).first->second;
      }

      std::mutex                                         mtx_;
      std::vector<std::vector<Letter>>                   e_;
      std::map<int, std::vector<Letter>>                 d_;
      std::map<int, std::size_t>                         d_count_;
      std::unordered_map<TupleNode const*, std::size_t>  rank_;
    };

  }  // namespace

  std::vector<Letter> enumerate_level(int i, LevelClass cls) {
    auto& cache = LevelCache::instance();
    switch (cls) {
      case LevelClass::E:
        return cache.level(i, TupleClass::E);
      case LevelClass::D:
        return cache.level(i, TupleClass::D);
      default: {
        auto out = cache.level(i, TupleClass::E);
        auto d   = cache.level(i, TupleClass::D);
        out.insert(out.end(), d.begin(), d.end());
        return out;
      }
    }
  }

  std::size_t level_size(int i, TupleClass cls) {
    return LevelCache::instance().size(i, cls);
  }

  std::size_t level_index(Letter g) {
    if (g.is_one()) {
      throw DomainError("level_index: the letter 1 is not in any level");
    }
    return LevelCache::instance().index(g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Ground
  ////////////////////////////////////////////////////////////////////////

  std::vector<Letter> ground(Letter g) {
    std::unordered_set<Letter, LetterHash> seen;
    std::vector<Letter>                    stack{g};
    while (!stack.empty()) {
      Letter h = stack.back();
      stack.pop_back();
      if (!seen.insert(h).second) {
        continue;
      }
      if (h.is_tuple()) {
        stack.push_back(h.left());
        stack.push_back(h.right());
      }
    }
    std::vector<Letter> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), structural_less);
    return out;
  }

  bool preceq(Letter h, Letter g) {
    std::unordered_set<Letter, LetterHash> seen;
    std::vector<Letter>                    stack{g};
    while (!stack.empty()) {
      Letter k = stack.back();
      stack.pop_back();
      if (k == h) {
        return true;
      }
      if (k.height() <= h.height() || !seen.insert(k).second) {
        continue;
      }
      stack.push_back(k.left());
      stack.push_back(k.right());
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::optional<std::string_view> convenience_name(Letter g) {
      static std::array<std::pair<Letter, std::string_view>, 7> const names{{
          {named::gxx(), "gxx'"},
          {named::g2e1(), "g2e1"},
          {named::g2e2(), "g2e2"},
          {named::g3d1(), "g3d1"},
          {named::g3d2(), "g3d2"},
          {named::g3d3(), "g3d3"},
          {named::g3d4(), "g3d4"},
      }};
      for (auto const& [h, name] : names) {
        if (h == g) {
          return name;
        }
      }
      return std::nullopt;
    }

    bool indexable(Letter g) {
      if (g.height() > limits().max_height) {
        return false;
      }
      try {
        return level_size(g.height(), g.cls()) <= limits().max_level_size;
      } catch (CapExceeded const&) {
        return false;
      }
    }

    void format_into(std::string& out, Letter g, FormatMode mode) {
      if (g.is_one()) {
        out += '1';
        return;
      }
      if (mode == FormatMode::alias) {
        if (auto name = convenience_name(g)) {
          out += *name;
          return;
        }
        if (indexable(g)) {
          out += "g{" + std::to_string(g.height())
                 + (g.cls() == TupleClass::E ? ".e." : ".d.")
                 + std::to_string(level_index(g)) + "}";
          return;
        }
      }
      auto const& n = *g.node();
      out += '(';
      format_into(out, n.l, mode);
      out += ',';
      out += to_string(n.la);
      out += ',';
      if (g.is_base()) {
        out += 'x';
      } else {
        format_into(out, n.c, mode);
      }
      out += ',';
      out += to_string(n.ra);
      out += ',';
      format_into(out, n.r, mode);
      out += ')';
    }
  }  // namespace

  std::string format_letter(Letter g, FormatMode mode) {
    std::string out;
    format_into(out, g, mode);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_item_delimiter(char ch) {
      return ch == ',' || ch == ')' || ch == ' ' || ch == '\t'
             || ch == '\n' || ch == '\r';
    }

    class ItemParser {
     public:
      ItemParser(std::string_view text, std::size_t& pos, std::size_t offset)
          : text_(text), pos_(pos), offset_(offset) {}

      Letter item() {
        if (pos_ >= text_.size()) {
          fail("expected a letter", pos_);
        }
        char const ch = text_[pos_];
        if (ch == '(') {
          return literal();
        }
        if (ch == 'g') {
          return alias();
        }
        if (ch == '1'
            && (pos_ + 1 == text_.size() || is_item_delimiter(text_[pos_ + 1]))) {
          ++pos_;
          return Letter::one();
        }
        fail("expected `1`, an alias or a tuple literal", pos_);
      }

     private:
      [[noreturn]] void fail(std::string const& msg, std::size_t at) const {
        throw ParseError(msg + " at position " + std::to_string(at + offset_),
                         at + offset_);
      }

      void expect(char ch) {
        if (pos_ >= text_.size() || text_[pos_] != ch) {
          fail(std::string("expected `") + ch + "`", pos_);
        }
        ++pos_;
      }

      Anchor anchor() {
        if (pos_ < text_.size() && text_[pos_] == '1') {
          ++pos_;
          return Anchor::one;
        }
        if (pos_ < text_.size() && text_[pos_] == 'x') {
          ++pos_;
          if (pos_ < text_.size() && text_[pos_] == '\'') {
            ++pos_;
            return Anchor::xprime;
          }
          return Anchor::x;
        }
        fail("expected an anchor `1`, `x` or `x'`", pos_);
      }

      Letter literal() {
        std::size_t const start = pos_;
        expect('(');
        Letter l = item();
        expect(',');
        Anchor la = anchor();
        expect(',');
        std::variant<Letter, Anchor> c;
        if (pos_ < text_.size() && text_[pos_] == 'x') {
          c = anchor();
        } else {
          c = item();
        }
        expect(',');
        Anchor ra = anchor();
        expect(',');
        Letter r = item();
        expect(')');
        auto res = validate_tuple(RawTuple{l, la, c, ra, r});
        if (auto const* bad = std::get_if<InvalidTuple>(&res)) {
          throw InvalidTupleError(*bad, start + offset_);
        }
        return std::get<Letter>(res);
      }

      Letter alias() {
        std::size_t const start = pos_;
        while (pos_ < text_.size() && !is_item_delimiter(text_[pos_])) {
          ++pos_;
        }
        std::string_view const name = text_.substr(start, pos_ - start);
        if (name == "gxx'") {
          return named::gxx();
        }
        if (name == "g2e1") {
          return named::g2e1();
        }
        if (name == "g2e2") {
          return named::g2e2();
        }
        if (name == "g3d1") {
          return named::g3d1();
        }
        if (name == "g3d2") {
          return named::g3d2();
        }
        if (name == "g3d3") {
          return named::g3d3();
        }
        if (name == "g3d4") {
          return named::g3d4();
        }
        // g{i.e.k} or g{i.d.k}
        if (name.size() >= 7 && name.substr(0, 2) == "g{" && name.back() == '}') {
          std::string_view body = name.substr(2, name.size() - 3);
          auto const       d1   = body.find('.');
          auto const       d2   = body.rfind('.');
          if (d1 != std::string_view::npos && d2 == d1 + 2) {
            char const  cls = body[d1 + 1];
            auto const  i   = parse_positive(body.substr(0, d1), start);
            auto const  k   = parse_positive(body.substr(d2 + 1), start);
            if (cls == 'e' || cls == 'd') {
              auto level = enumerate_level(
                  int(i), cls == 'e' ? LevelClass::E : LevelClass::D);
              if (k > level.size()) {
                fail("alias index out of range: " + std::string(name), start);
              }
              return level[k - 1];
            }
          }
        }
        fail("unknown alias `" + std::string(name) + "`", start);
      }

      std::size_t parse_positive(std::string_view s, std::size_t at) const {
        if (s.empty() || s.size() > 9) {
          fail("malformed alias index", at);
        }
        std::size_t v = 0;
        for (char ch : s) {
          if (ch < '0' || ch > '9') {
            fail("malformed alias index", at);
          }
          v = v * 10 + std::size_t(ch - '0');
        }
        if (v == 0) {
          fail("alias indices are 1-based", at);
        }
        return v;
      }

      std::string_view text_;
      std::size_t&     pos_;
      std::size_t      offset_;
    };
  }  // namespace

  Letter parse_letter(std::string_view text, std::size_t& pos,
                      std::size_t offset) {
    return ItemParser(text, pos, offset).item();
  }

  Letter parse_letter(std::string_view text) {
    std::size_t pos = 0;
    Letter      g   = parse_letter(text, pos);
    if (pos != text.size()) {
      throw ParseError("trailing characters at position " + std::to_string(pos),
                       pos);
    }
    return g;
  }

}  // namespace freg
