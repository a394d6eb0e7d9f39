#pragma once

#include "stdform/core.hpp"
#include "stdform/generate.hpp"

#include <map>

namespace stdform {

// The dictionary between block letters and the length-n factors they stand
// for; letter k is the k-th factor in order of first occurrence.
class BlockCoding {
  public:
    BlockCoding(int source_alphabet, int block_length, std::vector<Word> blocks);

    int source_alphabet() const { return source_alphabet_; }
    int block_length() const { return block_length_; }
    int alphabet_size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Word>& blocks() const { return blocks_; }
    const Word& block_of(Letter k) const;
    Letter letter_of(const Word& block) const;

    bool operator==(const BlockCoding&) const = default;

  private:
    int source_alphabet_;
    int block_length_;
    std::vector<Word> blocks_;
    std::map<Word, Letter> index_;
};

struct NBlockMorphism {
    Morphism morphism;
    BlockCoding coding;
};

// The n-block recoding of the fixed point of m: block letters stand for the
// length-n factors, and the image of a block b1..bn is the first |m(b1)|
// sliding windows of m(b1..bn), encoded back into block letters. For n = 1
// this returns m itself with the identity coding.
NBlockMorphism block_morphism(const Morphism& m, Letter seed, int n, FactorOptions opt = {});

// Decode a word of block letters back to source letters (first letter of
// each block); inverse of the sliding-window encoding on sequences.
Word decode_blocks(const Word& w, const BlockCoding& coding);

// When every image starts with the same letter b, drop that b and append it:
// the rotated morphism generates the shifted language.
Morphism rotate(const Morphism& m);

struct MergeResult {
    Morphism morphism;
    LetterMap quotient;  // original letter -> merged letter
};

// Identify letters with equal images, repeatedly, until all images are
// distinct; merged letters are numbered by first occurrence.
MergeResult merge_equal_images(const Morphism& m);

// Letterwise image of a word under a letter-to-letter map. The result is
// returned as plain integers because maps may target 0-based alphabets.
std::vector<int> project(const Word& w, const LetterMap& f);

// One "<letter> <block>" line per block letter.
std::string format_block_coding(const BlockCoding& coding);
BlockCoding parse_block_coding(const std::string& text);

}  // namespace stdform
