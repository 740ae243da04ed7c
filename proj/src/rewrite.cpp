#include "freg/rewrite.hpp"

#include <algorithm>
#include <random>

namespace freg {

  ////////////////////////////////////////////////////////////////////////
  // β₁
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Landscape tuple_mountain(Letter g) {
      Letter const gxx = base_tuple();
      Letter const one = Letter::one();
      if (g == gxx) {
        return Landscape::from_parts({one, gxx, one},
                                     {Anchor::one, Anchor::one});
      }
      // left hill, built top down and reversed at the end
      std::vector<Letter> ll{g};
      std::vector<Anchor> la;
      // right hill, built top down
      std::vector<Letter> rl{g};
      std::vector<Anchor> ra;
      Letter              h = g;
      for (int k = 0; k < g.height() / 2; ++k) {
        // h.c (h.la)' h.l h.la h
        la.push_back(h.left_anchor());
        ll.push_back(h.left());
        la.push_back(involute(h.left_anchor()));
        ll.push_back(h.middle());
        // h (h.ra)' h.r h.ra h.c
        ra.push_back(involute(h.right_anchor()));
        rl.push_back(h.right());
        ra.push_back(h.right_anchor());
        rl.push_back(h.middle());
        h = h.middle();
      }
      if (g.height() % 2 == 1) {
        // the chain stops at g_xx'
        la.push_back(Anchor::one);
        ll.push_back(one);
        ra.push_back(Anchor::one);
        rl.push_back(one);
      }
      std::reverse(ll.begin(), ll.end());
      std::reverse(la.begin(), la.end());
      ll.insert(ll.end(), rl.begin() + 1, rl.end());
      la.insert(la.end(), ra.begin(), ra.end());
      return Landscape::from_parts(std::move(ll), std::move(la));
    }
  }  // namespace

  Landscape beta1_letter(Token const& t) {
    Letter const gxx = base_tuple();
    Letter const one = Letter::one();
    if (t.is_tuple()) {
      return tuple_mountain(t.letter());
    }
    switch (t.anchor()) {
      case Anchor::x:
        return Landscape::from_parts({one, gxx, one}, {Anchor::one, Anchor::x});
      case Anchor::xprime:
        return Landscape::from_parts({one, gxx, one},
                                     {Anchor::xprime, Anchor::one});
      default:
        return Landscape();
    }
  }

  Landscape beta1(Word const& w) {
    if (w.empty()) {
      throw DomainError("beta1: empty word");
    }
    std::vector<Letter> letters{Letter::one()};
    std::vector<Anchor> anchors;
    for (Token const& t : w) {
      Landscape const m = beta1_letter(t);
      letters.insert(letters.end(), m.letters().begin() + 1, m.letters().end());
      anchors.insert(anchors.end(), m.anchors().begin(), m.anchors().end());
    }
    return Landscape::from_parts(std::move(letters), std::move(anchors));
  }

  ////////////////////////////////////////////////////////////////////////
  // Uplifting
  ////////////////////////////////////////////////////////////////////////

  UpliftStep uplift(Landscape const& u, std::size_t i) {
    auto const& rv = u.rivers();
    if (!std::binary_search(rv.begin(), rv.end(), i)) {
      throw DomainError("uplift: letter " + std::to_string(i)
                        + " is not a river");
    }
    Letter const gl = u.letter(i - 1);
    Letter const g  = u.letter(i);
    Letter const gr = u.letter(i + 1);
    Anchor const a  = u.anchor(i);
    Anchor const b  = u.anchor(i + 1);

    std::vector<Letter> letters = u.letters();
    std::vector<Anchor> anchors = u.anchors();
    if (gl == gr && a == involute(b)) {
      // drop a_i g_i a_{i+1} g_{i+1}
      letters.erase(letters.begin() + long(i), letters.begin() + long(i) + 2);
      anchors.erase(anchors.begin() + long(i) - 1, anchors.begin() + long(i) + 1);
      return UpliftStep{i, Deleted{},
                        Landscape::from_parts(std::move(letters),
                                              std::move(anchors))};
    }
    auto res = validate_tuple(RawTuple{gr, involute(b), g, a, gl});
    if (auto const* bad = std::get_if<InvalidTuple>(&res)) {
      throw InternalError("uplift produced an invalid tuple: "
                          + std::string(to_string(bad->reason)));
    }
    Letter const h = std::get<Letter>(res);
    letters[i]     = h;
    return UpliftStep{
        i, Inserted{h},
        Landscape::from_parts(std::move(letters), std::move(anchors))};
  }

  RiverVector RiverVector::of(Landscape const& u) {
    RiverVector v;
    for (std::size_t i : u.rivers()) {
      auto const h = std::size_t(u.letter(i).height());
      if (v.counts.size() <= h) {
        v.counts.resize(h + 1, 0);
      }
      ++v.counts[h];
    }
    return v;
  }

  namespace {
    int compare(RiverVector const& a, RiverVector const& b) {
      std::size_t const n = std::max(a.counts.size(), b.counts.size());
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t const x = k < a.counts.size() ? a.counts[k] : 0;
        std::size_t const y = k < b.counts.size() ? b.counts[k] : 0;
        if (x != y) {
          return x < y ? -1 : 1;
        }
      }
      return 0;
    }
  }  // namespace

  bool operator<(RiverVector const& a, RiverVector const& b) {
    return compare(a, b) < 0;
  }

  bool operator==(RiverVector const& a, RiverVector const& b) {
    return compare(a, b) == 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // β₂
  ////////////////////////////////////////////////////////////////////////

  Beta2Result beta2_run(Landscape const& u, Beta2Options const& opts) {
    std::mt19937_64   rng(opts.strategy.seed);
    std::size_t const ceiling = u.token_count() * u.token_count();
    Beta2Result       res{u, 0};
    while (!res.normal.rivers().empty()) {
      if (res.steps >= ceiling) {
        throw InternalError("beta2: step ceiling exceeded");
      }
      auto const& rv = res.normal.rivers();
      std::size_t i  = rv.front();
      switch (opts.strategy.kind) {
        case Strategy::Kind::leftmost:
          break;
        case Strategy::Kind::lowest_first:
          for (std::size_t j : rv) {
            if (res.normal.letter(j).height() < res.normal.letter(i).height()) {
              i = j;
            }
          }
          break;
        case Strategy::Kind::random:
          i = rv[std::uniform_int_distribution<std::size_t>(0, rv.size() - 1)(rng)];
          break;
      }
      UpliftStep step = uplift(res.normal, i);
      if (opts.check_termination
          && !(RiverVector::of(step.output) < RiverVector::of(res.normal))) {
        throw InternalError("beta2: river vector did not decrease");
      }
      if (opts.observer) {
        opts.observer(res.normal, step);
      }
      res.normal = std::move(step.output);
      ++res.steps;
    }
    return res;
  }

  Landscape beta2(Landscape const& u, Strategy s) {
    return beta2_run(u, Beta2Options{s, false, {}}).normal;
  }

  Landscape beta(Word const& w) {
    return beta2(beta1(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // Confluence
  ////////////////////////////////////////////////////////////////////////

  ConfluenceReport check_confluence(Word const& w, std::size_t trials,
                                    std::uint64_t seed) {
    Landscape const  start = beta1(w);
    ConfluenceReport rep;
    rep.trials = trials;

    auto run = [&](Strategy s) {
      Beta2Options opts{s, false, {}};
      bool         decreasing = true;
      opts.observer = [&decreasing](Landscape const& before, UpliftStep const& st) {
        if (!(RiverVector::of(st.output) < RiverVector::of(before))) {
          decreasing = false;
        }
      };
      auto r = beta2_run(start, opts);
      if (!decreasing) {
        ++rep.decrease_failures;
        rep.pass = false;
      }
      return r;
    };

    auto ref      = run(Strategy::leftmost());
    rep.reference = ref.normal;
    rep.min_steps = rep.max_steps = ref.steps;

    std::mt19937_64 seeds(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      std::uint64_t const s = seeds();
      auto                r = run(Strategy::random(s));
      rep.min_steps         = std::min(rep.min_steps, r.steps);
      rep.max_steps         = std::max(rep.max_steps, r.steps);
      if (!(r.normal == rep.reference)) {
        rep.pass = false;
        if (!rep.divergence) {
          rep.divergence.emplace(s, r.normal);
        }
      }
    }
    return rep;
  }

}  // namespace freg
