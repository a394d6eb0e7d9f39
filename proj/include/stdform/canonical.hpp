#pragma once

#include "stdform/core.hpp"

namespace stdform {

struct StandardizeOptions {
    // Standardizing searches all r! relabelings (with pruning); this cap keeps
    // accidental huge alphabets from hanging the caller.
    int max_alphabet = 8;
};

struct MorphismStandardization {
    Morphism standard;
    Relabeling witness;  // permuted_version(input, witness) == standard
    std::string key;     // format_morphism(standard)
};

// The standard form of a morphism: among all conjugates by relabelings, the
// one whose images concatenated in letter order compare smallest; ties go to
// the lexicographically smallest image-length vector. The result is unique,
// and when several relabelings reach it the witness is the smallest one, so
// standardizing a standard form yields the identity witness.
MorphismStandardization standardize_morphism(const Morphism& m, StandardizeOptions opt = {});

struct SequenceStandardization {
    Word standard;
    Relabeling witness;  // relabel(input, witness) == standard
};

// The standard form of a (prefix of a) sequence: the lexicographically least
// relabeling, reached by numbering letters in order of first occurrence.
// Every letter of 1..max(w) must occur in w.
SequenceStandardization standardize_sequence(const Word& w);

bool equivalent_morphisms(const Morphism& a, const Morphism& b, StandardizeOptions opt = {});
bool equivalent_sequences(const Word& a, const Word& b);

}  // namespace stdform
