#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "support.hpp"

using namespace freg;
using namespace freg::test;

TEST_CASE("anchor involution") {
  CHECK(involute(Anchor::x) == Anchor::xprime);
  CHECK(involute(Anchor::xprime) == Anchor::x);
  CHECK(involute(Anchor::one) == Anchor::one);
  for (Anchor a : {Anchor::one, Anchor::x, Anchor::xprime}) {
    CHECK(involute(involute(a)) == a);
  }
}

TEST_CASE("validate_tuple examples") {
  SUBCASE("base tuple") {
    auto r = validate_tuple({Letter::one(), Anchor::one, Anchor::x, Anchor::xprime,
                             Letter::one()});
    REQUIRE(std::holds_alternative<Letter>(r));
    Letter g = std::get<Letter>(r);
    CHECK(g == named::gxx());
    CHECK(g.height() == 1);
    CHECK(g.cls() == TupleClass::E);
  }
  SUBCASE("class E of height 3") {
    auto r = validate_tuple({named::g2e1(), Anchor::one, named::gxx(), Anchor::xprime,
                             named::g2e1()});
    REQUIRE(std::holds_alternative<Letter>(r));
    CHECK(std::get<Letter>(r).cls() == TupleClass::E);
    CHECK(std::get<Letter>(r).height() == 3);
  }
  SUBCASE("left anchor x not anchored in g2e1") {
    auto r = validate_tuple({named::g2e1(), Anchor::x, named::gxx(), Anchor::one,
                             named::g2e2()});
    REQUIRE(std::holds_alternative<InvalidTuple>(r));
    CHECK(!oracle_valid(named::g2e1(), Anchor::x, named::gxx(), Anchor::one,
                        named::g2e2()));
  }
  SUBCASE("malformed base") {
    auto r = validate_tuple({Letter::one(), Anchor::one, Anchor::x, Anchor::x,
                             Letter::one()});
    REQUIRE(std::holds_alternative<InvalidTuple>(r));
    CHECK(std::get<InvalidTuple>(r).reason == InvalidReason::malformed_base);
  }
  SUBCASE("anchor middle above height 1") {
    auto r = validate_tuple({named::gxx(), Anchor::one, Anchor::x, Anchor::x,
                             named::gxx()});
    REQUIRE(std::holds_alternative<InvalidTuple>(r));
    CHECK(std::get<InvalidTuple>(r).reason == InvalidReason::anchor_middle);
  }
  SUBCASE("height mismatch") {
    auto r = validate_tuple({named::g2e1(), Anchor::one, named::gxx(), Anchor::one,
                             named::gxx()});
    REQUIRE(std::holds_alternative<InvalidTuple>(r));
    CHECK(std::get<InvalidTuple>(r).reason == InvalidReason::height_mismatch);
  }
  SUBCASE("class E anchor parity") {
    auto r = validate_tuple({named::gxx(), Anchor::one, Letter::one(), Anchor::xprime,
                             named::gxx()});
    REQUIRE(std::holds_alternative<InvalidTuple>(r));
  }
  SUBCASE("class E repeated anchor") {
    auto r = validate_tuple({named::gxx(), Anchor::x, Letter::one(), Anchor::x,
                             named::gxx()});
    REQUIRE(std::holds_alternative<InvalidTuple>(r));
  }
  SUBCASE("make_tuple throws on invalid") {
    CHECK_THROWS_AS(make_tuple(named::gxx(), Anchor::x, Letter::one(), Anchor::x,
                               named::gxx()),
                    DomainError);
  }
}

TEST_CASE("named tuples match their literals") {
  CHECK(named::g2e1() == make_tuple(named::gxx(), Anchor::one, Letter::one(),
                                    Anchor::x, named::gxx()));
  CHECK(named::g2e2() == make_tuple(named::gxx(), Anchor::x, Letter::one(),
                                    Anchor::one, named::gxx()));
  CHECK(named::g3d1() == letter("(g2e1,1,gxx',1,g2e2)"));
  CHECK(named::g3d2() == letter("(g2e1,x',gxx',x',g2e2)"));
  CHECK(named::g3d3() == letter("(g2e2,1,gxx',1,g2e1)"));
  CHECK(named::g3d4() == letter("(g2e2,x',gxx',x',g2e1)"));
  for (Letter g : {named::g3d1(), named::g3d2(), named::g3d3(), named::g3d4()}) {
    CHECK(g.cls() == TupleClass::D);
  }
}

TEST_CASE("height") {
  CHECK(Letter::one().height() == 0);
  CHECK(named::gxx().height() == 1);
  CHECK(named::g3d1().height() == 3);
}

TEST_CASE("resolve_sides examples") {
  auto s = resolve_sides(named::g2e1());
  CHECK(s.in_left == Side::left);
  CHECK(s.in_right == Side::right);
  s = resolve_sides(named::g2e2());
  CHECK(s.in_left == Side::right);
  CHECK(s.in_right == Side::left);
  s = resolve_sides(named::g3d2());
  CHECK(s.in_left == Side::right);
  CHECK(s.in_right == Side::left);
  CHECK_THROWS_AS(resolve_sides(named::gxx()), DomainError);
}

TEST_CASE("wing triplets") {
  auto w = wing_triplets(named::g2e1());
  CHECK(str(w.left) == "1 gxx' 1");
  CHECK(str(w.right) == "x' gxx' x");
  w = wing_triplets(named::g2e2());
  CHECK(str(w.left) == "x' gxx' x");
  CHECK(str(w.right) == "1 gxx' 1");
  w = wing_triplets(named::g3d1());
  CHECK(str(w.left) == "1 g2e1 1");
  CHECK(str(w.right) == "1 g2e2 1");
  CHECK_THROWS_AS(wing_triplets(named::gxx()), DomainError);
}

TEST_CASE("level enumeration") {
  auto e2 = enumerate_level(2, LevelClass::E);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == named::g2e1());
  CHECK(e2[1] == named::g2e2());
  CHECK(enumerate_level(3, LevelClass::D).size() == 8);
  CHECK(enumerate_level(1, LevelClass::D).empty());
  CHECK(enumerate_level(2, LevelClass::D).empty());
  CHECK(enumerate_level(1, LevelClass::E) == std::vector<Letter>{named::gxx()});

  SUBCASE("class E doubles") {
    for (int i = 1; i <= 7; ++i) {
      CHECK(enumerate_level(i, LevelClass::E).size() == (std::size_t{1} << (i - 1)));
    }
  }
  SUBCASE("matches the brute-force oracle up to height 4") {
    for (int i = 1; i <= 4; ++i) {
      auto got  = enumerate_level(i, LevelClass::All);
      auto want = oracle_level(i);
      std::set<void const*> a, b;
      for (Letter g : got) {
        a.insert(g.node());
      }
      for (Letter g : want) {
        b.insert(g.node());
      }
      CHECK(a == b);
      CHECK(got.size() == want.size());
    }
    CHECK(enumerate_level(4, LevelClass::D).size() == 256);
  }
  SUBCASE("deterministic and interned") {
    CHECK(enumerate_level(4, LevelClass::All) == enumerate_level(4, LevelClass::All));
  }
  SUBCASE("indices are 1-based positions") {
    auto lv = enumerate_level(3, LevelClass::D);
    for (std::size_t k = 0; k < lv.size(); ++k) {
      CHECK(level_index(lv[k]) == k + 1);
    }
  }
  SUBCASE("D order is lexicographic") {
    auto rank = [](Letter g) {
      return std::tuple(g.height(), g.is_one() ? 0 : static_cast<int>(g.cls()),
                        g.is_one() ? 0 : level_index(g));
    };
    auto key = [&](Letter g) {
      return std::tuple(rank(g.left()), g.left_anchor(), rank(g.middle()),
                        g.right_anchor(), rank(g.right()));
    };
    for (int i = 3; i <= 5; ++i) {
      auto lv = enumerate_level(i, LevelClass::D);
      for (std::size_t k = 1; k < lv.size(); ++k) {
        CHECK(key(lv[k - 1]) < key(lv[k]));
      }
    }
  }
  SUBCASE("height cap") {
    Limits const saved = limits();
    Limits       l     = saved;
    l.max_height       = 3;
    set_limits(l);
    CHECK_THROWS_AS(enumerate_level(4, LevelClass::E), CapExceeded);
    set_limits(saved);
  }
  SUBCASE("level budget") {
    Limits const saved = limits();
    Limits       l     = saved;
    l.max_level_size   = 100;
    set_limits(l);
    CHECK_THROWS_AS(enumerate_level(6, LevelClass::D), CapExceeded);
    set_limits(saved);
  }
}

TEST_CASE("enumerated tuples satisfy the structural invariants") {
  for (int i = 1; i <= 5; ++i) {
    for (Letter g : enumerate_level(i, LevelClass::All)) {
      CHECK(g.height() == i);
      Anchor const odd_even = i % 2 == 0 ? Anchor::x : Anchor::xprime;
      for (Anchor a : {g.left_anchor(), g.right_anchor()}) {
        CHECK((a == Anchor::one || a == odd_even));
      }
      if (i == 1) {
        continue;
      }
      CHECK(g.left().height() == i - 1);
      CHECK(g.right().height() == i - 1);
      CHECK(g.middle().height() == i - 2);
      CHECK(oracle_valid(g.left(), g.left_anchor(), g.middle(), g.right_anchor(),
                         g.right()));
      auto const s = resolve_sides(g);
      CHECK(g.left().entry(s.in_left) == g.middle());
      CHECK(g.left().entry_anchor(s.in_left) == involute(g.left_anchor()));
      CHECK(g.right().entry(s.in_right) == g.middle());
      CHECK(g.right().entry_anchor(s.in_right) == involute(g.right_anchor()));
      if (g.cls() == TupleClass::E) {
        CHECK(g.left() == g.right());
      } else {
        CHECK(g.left() != g.right());
      }
    }
  }
}

TEST_CASE("resolve_sides identity through height 6") {
  for (Letter g : enumerate_level(6, LevelClass::E)) {
    auto const s = resolve_sides(g);
    CHECK(g.left().entry_anchor(s.in_left) == involute(g.left_anchor()));
    CHECK(g.right().entry_anchor(s.in_right) == involute(g.right_anchor()));
  }
}

TEST_CASE("structural order") {
  auto lv = enumerate_level(4, LevelClass::All);
  for (Letter a : lv) {
    CHECK(!structural_less(a, a));
  }
  for (std::size_t k = 1; k < lv.size(); ++k) {
    CHECK(structural_less(lv[k - 1], lv[k]) != structural_less(lv[k], lv[k - 1]));
  }
  CHECK(structural_less(named::gxx(), named::g2e1()));
}

TEST_CASE("ground and preceq") {
  auto g1 = ground(Letter::one());
  CHECK(g1 == std::vector<Letter>{Letter::one()});
  auto gx = ground(named::gxx());
  CHECK(gx.size() == 2);
  auto gd = ground(named::g3d2());
  std::set<void const*> want{Letter::one().node(), named::gxx().node(),
                             named::g2e1().node(), named::g2e2().node(),
                             named::g3d2().node()};
  std::set<void const*> got;
  for (Letter g : gd) {
    got.insert(g.node());
  }
  CHECK(got == want);
  CHECK(preceq(named::gxx(), named::g3d2()));
  CHECK(preceq(named::g3d2(), named::g3d2()));
  CHECK(!preceq(named::g3d1(), named::g3d2()));

  SUBCASE("partial order and size bound") {
    std::vector<Letter> all{Letter::one()};
    for (int i = 1; i <= 4; ++i) {
      auto lv = enumerate_level(i, LevelClass::All);
      all.insert(all.end(), lv.begin(), lv.end());
    }
    for (Letter g : all) {
      CHECK(ground(g).size() <= (std::size_t{1} << (g.height() + 1)) - 1);
      for (Letter h : ground(g)) {
        for (Letter k : ground(h)) {
          CHECK(preceq(k, g));
        }
      }
    }
    Rng rng(11);
    for (int t = 0; t < 2000; ++t) {
      auto pick = [&] {
        return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      };
      Letter a = pick(), b = pick(), c = pick();
      if (preceq(a, b) && preceq(b, a)) {
        CHECK(a == b);
      }
      if (preceq(a, b) && preceq(b, c)) {
        CHECK(preceq(a, c));
      }
    }
  }
}

TEST_CASE("letter formatting and parsing") {
  CHECK(format_letter(named::gxx(), FormatMode::alias) == "gxx'");
  CHECK(format_letter(named::gxx(), FormatMode::expanded) == "(1,1,x,x',1)");
  CHECK(format_letter(named::g3d2(), FormatMode::alias) == "g3d2");
  CHECK(letter("(1,1,x,x',1)") == named::gxx());
  CHECK(letter("g{2.e.2}") == named::g2e2());
  CHECK(letter("1").is_one());
  CHECK_THROWS_AS(letter("g{2.e.3}"), ParseError);
  CHECK_THROWS_AS(letter("gbogus"), ParseError);
  CHECK_THROWS_AS(letter("(1,1,x,x,1)"), InvalidTupleError);
  CHECK_THROWS_AS(letter("(1,1,x,x',1"), ParseError);

  for (int i = 1; i <= 4; ++i) {
    for (Letter g : enumerate_level(i, LevelClass::All)) {
      CHECK(letter(format_letter(g, FormatMode::alias)) == g);
      CHECK(letter(format_letter(g, FormatMode::expanded)) == g);
    }
  }
}
