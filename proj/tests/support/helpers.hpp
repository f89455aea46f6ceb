#pragma once

#include <chrono>
#include <cstdint>
#include <random>

#include "eventify/eventify.hpp"

namespace eventify::support {

/// Structural equality of deterministic devices up to state names.
bool isomorphic(const Device& a, const Device& b);

/// Each symbol kept with probability one half.
SymbolSet random_subset(std::mt19937_64& rng, const SymbolSet& from);

/// Independent reimplementation of the difference relation used to cross
/// check relation_image: every difference encoding of `source`.
std::set<Word> delta_images(const Variator& variator, const Word& source);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace eventify::support
