// Random words, hills and mountains for property checks.

#ifndef FREG_SAMPLING_HPP_
#define FREG_SAMPLING_HPP_

#include <random>
#include <vector>

#include "freg/algebra.hpp"

namespace freg {

  using Rng = std::mt19937_64;

  //! A uniformly random uphill from 1 to g (downhill from g to 1).
  Landscape random_hill(Letter g, Direction dir, Rng& rng);

  //! random uphill * random downhill, uniform over the D-class of [g].
  Element random_in_dclass(Letter g, Rng& rng);

  //! Uniform over enumerate_level(height, All).
  Letter random_letter(int height, Rng& rng);

  //! Uniform height in [0, max_height], then random_in_dclass.
  Element random_element(int max_height, Rng& rng);

  //! Length uniform in [1, max_len], tokens uniform from `alphabet`.
  Word random_word(std::size_t max_len, std::vector<Token> const& alphabet,
                   Rng& rng);

}  // namespace freg

#endif  // FREG_SAMPLING_HPP_
