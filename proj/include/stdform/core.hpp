#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stdform {

// Letters are 1-based: an alphabet of size r is {1, ..., r}.
using Letter = int;
using Word = std::vector<Letter>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error in one of the text formats. `position` is a 0-based character
// offset into the offending input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;
};

struct DomainError : Error {
    using Error::Error;
};

// A word or map uses letters outside the alphabet it is combined with.
struct AlphabetMismatchError : Error {
    using Error::Error;
};

// A configured limit was exceeded; the message names the limit and the knob
// that raises it.
struct CapacityError : Error {
    using Error::Error;
};

struct NotRotatableError : Error {
    using Error::Error;
};

struct IncompleteAlphabetError : Error {
    using Error::Error;
};

// A substitution: every letter of {1..r} has a non-empty image word over the
// same alphabet. Images are validated once at construction.
class Morphism {
  public:
    Morphism(int alphabet_size, std::vector<Word> images);

    int alphabet_size() const { return r_; }
    const Word& image(Letter a) const;
    const std::vector<Word>& images() const { return images_; }
    // Extension to words: the concatenation of the letters' images.
    Word operator()(const Word& w) const;
    bool uniform() const;
    std::vector<int> image_lengths() const;

    bool operator==(const Morphism&) const = default;

  private:
    int r_;
    std::vector<Word> images_;
};

// A bijection of {1..n} onto itself.
class Relabeling {
  public:
    // table[i-1] is the image of letter i; must be a permutation of 1..n.
    explicit Relabeling(std::vector<Letter> table);
    static Relabeling identity(int n);

    int size() const { return static_cast<int>(table_.size()); }
    Letter operator()(Letter a) const;
    Relabeling inverse() const;
    bool is_identity() const;
    const std::vector<Letter>& table() const { return table_; }

    bool operator==(const Relabeling&) const = default;

  private:
    std::vector<Letter> table_;
};

// A total, not necessarily injective map from {1..r} to non-negative
// integers. Values of 0 are legal so that exports to 0-based archives can be
// expressed; into_alphabet() tells whether all values are valid letters.
class LetterMap {
  public:
    // values[a-1] is the image of letter a.
    explicit LetterMap(std::vector<int> values);
    static LetterMap identity(int r);

    int domain_size() const { return static_cast<int>(values_.size()); }
    int operator()(Letter a) const;
    bool into_alphabet() const;
    int max_value() const;
    const std::vector<int>& values() const { return values_; }

    bool operator==(const LetterMap&) const = default;

  private:
    std::vector<int> values_;
};

Morphism compose(const Morphism& outer, const Morphism& inner);
Morphism power(const Morphism& m, int k);  // k >= 1

Word relabel(const Word& w, const Relabeling& p);

// The conjugate morphism a -> p_inverse(m(p(a))). Relabels both the rule
// heads and the image letters, so the result acts on the same alphabet.
Morphism permuted_version(const Morphism& m, const Relabeling& p);

// compose(p, q) maps a to p(q(a)); permuted_version(permuted_version(m, p), q)
// equals permuted_version(m, compose(p, q)).
Relabeling compose(const Relabeling& p, const Relabeling& q);

// Morphism text format.
//
//   rules:    "1->12,2->11"          letters as contiguous digits (r <= 9)
//   dotted:   "r=12,1->3.12.7,..."   image letters separated by dots (r >= 10)
//
// Rules are separated by commas and/or whitespace; an optional "r=<n>" prefix
// declares the alphabet size, which otherwise is the largest letter
// mentioned. Images are read dotted when the text declares or mentions a
// letter above 9 or contains a dot; otherwise every digit is one letter.
Morphism parse_morphism(const std::string& text);
std::string format_morphism(const Morphism& m);

// Like parse_morphism, but tolerates alphabets that do not start at 1 (for
// example archives written over {0,1,2}); all letters are shifted by
// 1 - min_letter. Returns the shift that was applied.
struct RebasedMorphism {
    Morphism morphism;
    int shift;
};
RebasedMorphism parse_morphism_rebased(const std::string& text);

// One word in the image convention above: "121" or "3.12.7" (dotted when any
// letter exceeds 9 or when a dot is present).
std::string format_word_letters(const Word& w, int alphabet_size);
Word parse_word_letters(const std::string& text);

// "1->2,2->1" style, comma-separated pairs covering 1..r.
std::string format_letter_map(const LetterMap& f);
LetterMap parse_letter_map(const std::string& text);
std::string format_relabeling(const Relabeling& p);

}  // namespace stdform
