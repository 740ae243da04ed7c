#include <doctest.h>

#include "support.hpp"

using namespace freg;
using namespace freg::test;

TEST_CASE("beta1_letter") {
  CHECK(str(beta1_letter(Anchor::one)) == "1");
  CHECK(str(beta1_letter(Anchor::x)) == "1 1 gxx' x 1");
  CHECK(str(beta1_letter(Anchor::xprime)) == "1 x' gxx' 1 1");
  CHECK(str(beta1_letter(named::gxx())) == "1 1 gxx' 1 1");
  CHECK(str(beta1_letter(named::g2e1())) == "1 1 gxx' 1 g2e1 x' gxx' x 1");
  CHECK(str(beta1_letter(named::g3d2()))
        == "1 1 gxx' x g2e1 x' g3d2 x g2e2 x' gxx' 1 1");

  SUBCASE("mountain with the letter as peak") {
    for (int i = 1; i <= 5; ++i) {
      auto lv = enumerate_level(i, LevelClass::All);
      for (std::size_t k = 0; k < lv.size(); k += 1 + lv.size() / 40) {
        Landscape const m = beta1_letter(lv[k]);
        CHECK(is_mountain(m));
        CHECK(peak(m) == lv[k]);
      }
    }
  }
}

TEST_CASE("beta1") {
  CHECK(str(beta1(parse_word("x x'"))) == "1 1 gxx' x 1 x' gxx' 1 1");
  CHECK(str(beta1(parse_word("1 1"))) == "1");
  CHECK(str(beta1(parse_word("x' x"))) == "1 x' gxx' 1 1 1 gxx' x 1");
  CHECK(is_mountain_range(beta1(parse_word("x g2e1 x' g3d4"))));
}

TEST_CASE("uplift") {
  SUBCASE("deletion") {
    auto s = uplift(land("1 1 gxx' x 1 x' gxx' 1 1"), 2);
    CHECK(std::holds_alternative<Deleted>(s.outcome));
    CHECK(str(s.output) == "1 1 gxx' 1 1");
  }
  SUBCASE("insertion") {
    auto s = uplift(land("1 x' gxx' x 1 1 gxx' 1 1"), 2);
    REQUIRE(std::holds_alternative<Inserted>(s.outcome));
    CHECK(std::get<Inserted>(s.outcome).tuple == named::g2e1());
    CHECK(str(s.output) == "1 x' gxx' x g2e1 1 gxx' 1 1");
  }
  SUBCASE("canyon deletion") {
    auto s = uplift(land("gxx' 1 1 1 gxx'"), 1);
    CHECK(std::holds_alternative<Deleted>(s.outcome));
    CHECK(str(s.output) == "gxx'");
  }
  SUBCASE("not a river") {
    CHECK_THROWS_AS(uplift(land("1 1 gxx' x 1"), 1), DomainError);
    CHECK_THROWS_AS(uplift(land("1 1 gxx' x 1"), 0), DomainError);
  }
  SUBCASE("agrees with the direct rule and keeps the step contracts") {
    Rng  rng(23);
    auto alphabet = small_alphabet();
    for (int k = 0; k < 300; ++k) {
      Landscape u = beta1(random_word(6, alphabet, rng));
      while (!u.rivers().empty()) {
        auto const& rs = u.rivers();
        std::size_t i  = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
        auto const  s  = uplift(u, i);
        CHECK(s.output == oracle_uplift(u, i));
        CHECK(RiverVector::of(s.output) < RiverVector::of(u));
        if (std::holds_alternative<Deleted>(s.outcome)) {
          CHECK(s.output.token_count() + 4 == u.token_count());
          Anchor const a = u.anchor(i), b = u.anchor(i + 1);
          bool const   pair_ok = (a == Anchor::one && b == Anchor::one)
                               || (a == Anchor::x && b == Anchor::xprime)
                               || (a == Anchor::xprime && b == Anchor::x);
          CHECK(pair_ok);
        } else {
          CHECK(s.output.token_count() == u.token_count());
          CHECK(s.output.anchors() == u.anchors());
        }
        u = s.output;
      }
    }
  }
}

TEST_CASE("river vector order") {
  RiverVector a{{1, 0}}, b{{0, 5}}, c{{1}};
  CHECK(b < a);
  CHECK(!(a < b));
  CHECK(a == c);
  CHECK(!(a < c));
}

TEST_CASE("beta2") {
  CHECK(str(beta2(land("gxx' 1 1 1 gxx'"))) == "gxx'");
  Landscape const m = land("1 x' gxx' x g2e1 1 gxx' 1 1");
  CHECK(beta2(m) == m);
  Landscape const u = beta1(parse_word("x' x x x'"));
  Landscape const ref = beta2(u, Strategy::leftmost());
  for (std::uint64_t s = 0; s < 50; ++s) {
    CHECK(beta2(u, Strategy::random(s)) == ref);
  }
  CHECK(beta2(u, Strategy::lowest_first()) == ref);
}

TEST_CASE("beta2 agrees with every uplift order on small words") {
  Rng  rng(29);
  auto alphabet = small_alphabet();
  for (int k = 0; k < 60; ++k) {
    Word const      w  = random_word(4, alphabet, rng);
    Landscape const u  = beta1(w);
    auto const      nf = oracle_all_normal_forms(u);
    REQUIRE(nf.size() == 1);
    CHECK(str(beta2(u)) == *nf.begin());
    CHECK(beta2(u) == oracle_beta2(u));
  }
}

TEST_CASE("beta2 observer sees decreasing river vectors") {
  Beta2Options opts;
  opts.strategy          = Strategy::random(4);
  opts.check_termination = true;
  std::size_t steps      = 0;
  opts.observer          = [&](Landscape const& before, UpliftStep const& s) {
    CHECK(RiverVector::of(s.output) < RiverVector::of(before));
    ++steps;
  };
  auto r = beta2_run(beta1(parse_word("x x g2e2 x' x' g3d1")), opts);
  CHECK(r.steps == steps);
  CHECK(r.normal.rivers().empty());
}

TEST_CASE("beta") {
  CHECK(str(beta(parse_word("x x' x"))) == "1 1 gxx' x 1");
  CHECK(str(beta(parse_word("1 1 1"))) == "1");
  CHECK(str(beta(parse_word("x x"))) == "1 1 gxx' x g2e1 1 gxx' x 1");

  Rng  rng(31);
  auto alphabet = small_alphabet();
  for (int k = 0; k < 200; ++k) {
    Word const      w = random_word(8, alphabet, rng);
    Landscape const m = beta(w);
    CHECK(is_mountain(m));
    CHECK(beta(m.to_word()) == m);
  }
}

TEST_CASE("normalization height bound") {
  Rng  rng(37);
  auto alphabet = small_alphabet();
  for (int k = 0; k < 200; ++k) {
    Landscape const u = beta1(random_word(8, alphabet, rng));
    std::size_t const n = (u.token_count() - 1) / 2;
    CHECK(beta2(u).height() <= u.height() + static_cast<int>(n / 2));
  }
}

TEST_CASE("relation soundness for heights 2 to 5") {
  for (int i = 2; i <= 5; ++i) {
    auto lv = enumerate_level(i, LevelClass::All);
    for (std::size_t k = 0; k < lv.size(); k += 1 + lv.size() / 60) {
      Letter const g  = lv[k];
      auto const   wt = wing_triplets(g);
      Landscape const bg = beta(tok(g));
      CHECK(beta(concat({tok(g.middle()), wt.left, tok(g)})) == bg);
      CHECK(beta(concat({tok(g), wt.right, tok(g.middle())})) == bg);
      CHECK(beta(dotted(g, g))
            == beta(dotted(g, g.middle())));
    }
  }
}

TEST_CASE("check_confluence") {
  auto r = check_confluence(parse_word("x x' x x'"), 100, 7);
  CHECK(r.pass);
  CHECK(r.trials == 100);
  CHECK(!r.divergence);
  r = check_confluence(parse_word("x"), 10, 0);
  CHECK(r.pass);
  CHECK(r.max_steps == 0);
  Rng rng(41);
  std::vector<Token> alphabet{Anchor::one, Anchor::x, Anchor::xprime,
                              Token(named::gxx())};
  for (int k = 0; k < 100; ++k) {
    auto rep = check_confluence(random_word(8, alphabet, rng), 20, rng());
    CHECK(rep.pass);
    CHECK(rep.decrease_failures == 0);
  }
}
