#pragma once

#include "stdform/core.hpp"

#include <cstddef>
#include <mutex>
#include <optional>

namespace stdform {

struct FactorOptions {
    // Factor enumeration grows iterates of the seed until the factor set
    // stops changing and survives a closure check; these caps bound that loop.
    int max_iterations = 60;
    std::size_t max_prefix_length = std::size_t{1} << 22;
};

// The one-sided infinite fixed point of a morphism prolongable on `seed`
// (the image of seed starts with seed and has length >= 2), optionally passed
// through a letter-to-letter coding. Prefixes are generated lazily and
// cached; prefix() is safe to call from several threads.
class MorphicSequence {
  public:
    MorphicSequence(Morphism m, Letter seed);
    MorphicSequence(Morphism m, Letter seed, LetterMap coding);

    MorphicSequence(const MorphicSequence& other);
    MorphicSequence& operator=(const MorphicSequence&) = delete;

    const Morphism& morphism() const { return m_; }
    Letter seed() const { return seed_; }
    const std::optional<LetterMap>& coding() const { return coding_; }

    Word prefix(std::size_t n) const;

  private:
    Morphism m_;
    Letter seed_;
    std::optional<LetterMap> coding_;

    mutable std::mutex mu_;
    mutable Word buf_;           // uncoded prefix of the fixed point
    mutable std::size_t next_;   // first buffer index whose image is not yet appended
};

// Letters the morphism is prolongable on, ascending. May be empty.
std::vector<Letter> fixed_point_seeds(const Morphism& m);

// k-fold application of m to w; k = 0 returns w.
Word iterate(const Morphism& m, const Word& w, int k);

// All length-n factors (subwords) of the sequence, ordered by first
// occurrence. The enumeration iterates the seed until the factor set is
// stable from one iterate to the next and additionally closed under the
// morphism (every factor of the image of every factor is already present),
// which certifies that no factor appears only later in the sequence.
std::vector<Word> factors(const MorphicSequence& s, int n, FactorOptions opt = {});

// complexity(s, n_max)[k-1] = number of distinct length-k factors.
std::vector<std::size_t> complexity(const MorphicSequence& s, int n_max, FactorOptions opt = {});

}  // namespace stdform
