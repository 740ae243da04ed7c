#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace freg;
using namespace freg::test;

TEST_CASE("parse_word") {
  CHECK(parse_word("x x' x").size() == 3);
  auto w = parse_word("(1,1,x,x',1)");
  REQUIRE(w.size() == 1);
  CHECK(w[0].letter() == named::gxx());
  CHECK_THROWS_AS(parse_word("(1,1,x,x,1)"), InvalidTupleError);
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("   "), ParseError);
  CHECK_THROWS_AS(parse_word("x y"), ParseError);
  CHECK_THROWS_AS(parse_word("g{9.e.1000}"), Error);
  try {
    parse_word("x (1,1,x,x,1)");
    FAIL("expected an error");
  } catch (InvalidTupleError const& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("format_word") {
  CHECK(format_word(Word{Token(named::gxx())}, FormatMode::alias) == "gxx'");
  CHECK(format_word(Word{Token(named::gxx())}, FormatMode::expanded) == "(1,1,x,x',1)");
  CHECK(format_word(Word{Anchor::one, Anchor::xprime}, FormatMode::alias) == "1 x'");
  CHECK(format_word(Word{Token(named::g2e1())}, FormatMode::expanded)
        == "((1,1,x,x',1),1,1,x,(1,1,x,x',1))");
}

TEST_CASE("format and parse round trip on random words") {
  Rng               rng(5);
  std::vector<Token> alphabet{Anchor::one, Anchor::x, Anchor::xprime};
  for (int i = 1; i <= 4; ++i) {
    for (Letter g : enumerate_level(i, LevelClass::All)) {
      alphabet.emplace_back(g);
    }
  }
  for (int k = 0; k < 300; ++k) {
    Word w = random_word(10, alphabet, rng);
    CHECK(parse_word(format_word(w, FormatMode::alias)) == w);
    CHECK(parse_word(format_word(w, FormatMode::expanded)) == w);
  }
}

TEST_CASE("analyze examples") {
  SUBCASE("mountain") {
    auto r = analyze(parse_word("1 1 gxx' x 1"));
    REQUIRE(std::holds_alternative<LandscapeInfo>(r));
    auto const& info = std::get<LandscapeInfo>(r);
    CHECK(info.mountain);
    CHECK(info.mountain_range);
    CHECK(info.rivers.empty());
    CHECK(info.peaks == std::vector<std::size_t>{1});
    CHECK(info.height == 1);
  }
  SUBCASE("canyon") {
    auto r = analyze(parse_word("gxx' 1 1 1 gxx'"));
    REQUIRE(std::holds_alternative<LandscapeInfo>(r));
    auto const& info = std::get<LandscapeInfo>(r);
    CHECK(info.canyon);
    CHECK(info.valley);
    CHECK(!info.mountain_range);
    CHECK(info.rivers == std::vector<std::size_t>{1});
  }
  SUBCASE("not a landscape") {
    auto r = analyze(parse_word("x x"));
    REQUIRE(std::holds_alternative<NotLandscape>(r));
    CHECK(std::get<NotLandscape>(r).position == 0);
  }
  SUBCASE("unanchored triplet") {
    auto r = analyze(parse_word("1 x gxx' 1 1"));
    REQUIRE(std::holds_alternative<NotLandscape>(r));
    CHECK(std::get<NotLandscape>(r).position == 0);
  }
  SUBCASE("even token count") {
    CHECK(std::holds_alternative<NotLandscape>(analyze(parse_word("1 1"))));
  }
  SUBCASE("hills") {
    auto up = std::get<LandscapeInfo>(analyze(parse_word("1 1 gxx' 1 g2e1")));
    CHECK(up.uphill);
    CHECK(up.hill);
    CHECK(!up.downhill);
    auto down = std::get<LandscapeInfo>(analyze(parse_word("g2e1 x' gxx' x 1")));
    CHECK(down.downhill);
    CHECK(!down.uphill);
  }
}

TEST_CASE("anchoring predicates") {
  // gxx' = (1,1,x,x',1): 1 1 gxx' is left anchored, gxx' x 1 right anchored.
  CHECK(left_anchored(Letter::one(), Anchor::one, named::gxx()));
  CHECK(left_anchored(Letter::one(), Anchor::xprime, named::gxx()));
  CHECK(!left_anchored(Letter::one(), Anchor::x, named::gxx()));
  CHECK(right_anchored(named::gxx(), Anchor::one, Letter::one()));
  CHECK(right_anchored(named::gxx(), Anchor::x, Letter::one()));
  CHECK(!right_anchored(named::gxx(), Anchor::xprime, Letter::one()));
}

TEST_CASE("join") {
  CHECK(str(join(land("1 1 gxx' x 1"), land("1 x' gxx' 1 1")))
        == "1 1 gxx' x 1 x' gxx' 1 1");
  CHECK(str(join(land("1"), land("1"))) == "1");
  CHECK(str(join(land("gxx' 1 1"), land("1 1 gxx'"))) == "gxx' 1 1 1 gxx'");
  CHECK_THROWS_AS(join(land("1"), land("gxx' 1 1")), DomainError);
}

TEST_CASE("reverse") {
  CHECK(str(reverse(land("1 1 gxx' x 1"))) == "1 x' gxx' 1 1");
  CHECK(str(reverse(land("1"))) == "1");
  CHECK(str(reverse(land("gxx' 1 1"))) == "1 1 gxx'");
  for (Element const& u : all_elements_up_to(3)) {
    Landscape const m = u.mountain();
    CHECK(reverse(reverse(m)) == m);
    CHECK(is_mountain(reverse(m)));
  }
  for (Landscape const& h : enumerate_hills(named::g3d2(), Direction::up)) {
    CHECK(is_downhill(reverse(h)));
  }
}

TEST_CASE("hills_of") {
  auto h = hills_of(land("1 1 gxx' x 1"));
  CHECK(str(h.left) == "1 1 gxx'");
  CHECK(str(h.right) == "gxx' x 1");
  h = hills_of(land("1"));
  CHECK(str(h.left) == "1");
  CHECK(str(h.right) == "1");
  h = hills_of(beta1_letter(Token(named::g3d2())));
  CHECK(str(h.left) == "1 1 gxx' x g2e1 x' g3d2");
  CHECK_THROWS_AS(hills_of(land("gxx' 1 1 1 gxx'")), DomainError);
}

TEST_CASE("enumerate_hills") {
  auto up = enumerate_hills(named::gxx(), Direction::up);
  REQUIRE(up.size() == 2);
  CHECK(str(up[0]) == "1 1 gxx'");
  CHECK(str(up[1]) == "1 x' gxx'");
  CHECK(enumerate_hills(named::g2e1(), Direction::down).size() == 4);
  for (Letter g : enumerate_level(3, LevelClass::All)) {
    CHECK(enumerate_hills(g, Direction::up).size() == 8);
  }

  SUBCASE("counts, endpoints and distinctness through height 5") {
    Rng rng(17);
    for (int i = 1; i <= 5; ++i) {
      auto lv = enumerate_level(i, LevelClass::All);
      for (int t = 0; t < 10; ++t) {
        Letter g = lv[std::uniform_int_distribution<std::size_t>(0, lv.size() - 1)(rng)];
        for (Direction d : {Direction::up, Direction::down}) {
          auto hs = enumerate_hills(g, d);
          CHECK(hs.size() == (std::size_t{1} << i));
          std::set<std::string> distinct;
          for (auto const& h : hs) {
            distinct.insert(str(h));
            CHECK(std::holds_alternative<LandscapeInfo>(analyze(h.to_word())));
            if (d == Direction::up) {
              CHECK(is_uphill(h));
              CHECK(h.first().is_one());
              CHECK(h.last() == g);
            } else {
              CHECK(is_downhill(h));
              CHECK(h.first() == g);
              CHECK(h.last().is_one());
            }
          }
          CHECK(distinct.size() == hs.size());
        }
      }
    }
  }
}

TEST_CASE("mountain invariants") {
  for (Element const& u : all_elements_up_to(3)) {
    Landscape const m = u.mountain();
    CHECK(m.token_count() % 4 == 1);
    auto h = hills_of(m);
    CHECK(join(h.left, h.right) == m);
    CHECK(is_prefix(h.left, m));
    CHECK(is_suffix(h.right, m));
  }
}

TEST_CASE("from_parts validates anchoring") {
  CHECK_THROWS_AS(Landscape::from_parts({Letter::one(), named::gxx()}, {Anchor::x}),
                  DomainError);
  CHECK_NOTHROW(Landscape::from_parts({Letter::one(), named::gxx()}, {Anchor::one}));
}
