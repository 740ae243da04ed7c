// β₁ expansion, uplifting of rivers and the β₂ normal form.

#ifndef FREG_REWRITE_HPP_
#define FREG_REWRITE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "freg/landscape.hpp"

namespace freg {

  //! The mountain β₁(t) of a single token.
  Landscape beta1_letter(Token const& t);

  //! β₁(h₀) * … * β₁(h_k), a mountain range.
  Landscape beta1(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Uplifting
  ////////////////////////////////////////////////////////////////////////

  struct Inserted {
    Letter tuple;
  };
  struct Deleted {};

  struct UpliftStep {
    std::size_t                      river;  // letter index in the input
    std::variant<Inserted, Deleted>  outcome;
    Landscape                        output;
  };

  //! Uplifts the river at letter index i.  Throws DomainError if it is not
  //! a river.
  UpliftStep uplift(Landscape const& u, std::size_t i);

  //! Rivers counted by height, lowest height first.
  struct RiverVector {
    std::vector<std::size_t> counts;

    static RiverVector of(Landscape const& u);

    //! Lexicographic, shorter vectors padded with zeros.
    friend bool operator<(RiverVector const& a, RiverVector const& b);
    friend bool operator==(RiverVector const& a, RiverVector const& b);
  };

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  struct Strategy {
    enum class Kind : std::uint8_t { leftmost, lowest_first, random };
    Kind          kind = Kind::lowest_first;
    std::uint64_t seed = 0;

    static Strategy leftmost() {
      return {Kind::leftmost, 0};
    }
    static Strategy lowest_first() {
      return {Kind::lowest_first, 0};
    }
    static Strategy random(std::uint64_t seed) {
      return {Kind::random, seed};
    }
  };

  struct Beta2Options {
    Strategy strategy;
    //! Assert that the river vector strictly decreases at every step.
    bool check_termination = false;
    //! Called after every step.
    std::function<void(Landscape const& before, UpliftStep const&)> observer;
  };

  struct Beta2Result {
    Landscape   normal;
    std::size_t steps = 0;
  };

  //! Uplifts rivers until none is left.  A run longer than |u|² steps is an
  //! InternalError.
  Beta2Result beta2_run(Landscape const& u, Beta2Options const& opts);
  Landscape   beta2(Landscape const& u, Strategy s = {});

  //! β₂(β₁(w)), the canonical mountain of w.
  Landscape beta(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Confluence harness
  ////////////////////////////////////////////////////////////////////////

  struct ConfluenceReport {
    bool        pass = true;
    std::size_t trials = 0;
    std::size_t min_steps = 0;
    std::size_t max_steps = 0;
    //! Trials in which the river vector failed to decrease.
    std::size_t decrease_failures = 0;
    Landscape   reference;
    //! First normal form differing from the reference, with its seed.
    std::optional<std::pair<std::uint64_t, Landscape>> divergence;
  };

  //! Normalizes β₁(w) with the leftmost strategy and with `trials` random
  //! strategies derived from `seed`, and compares the results.
  ConfluenceReport check_confluence(Word const& w, std::size_t trials,
                                    std::uint64_t seed);

}  // namespace freg

#endif  // FREG_REWRITE_HPP_
