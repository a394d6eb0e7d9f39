#include "stdform/canonical.hpp"

#include <algorithm>
#include <optional>

namespace stdform {

namespace {

// State for the relabeling search. Candidates are built by deciding, new
// position by new position, which original letter lands there. While a
// candidate is partial we can still compare its concatenation against the
// best complete one: raw letters whose new name is already fixed compare
// directly, and the comparison stops at the first letter whose new name is
// still open. Pruning on "already larger" is sound because the first strict
// difference decides lexicographic order no matter how the rest is filled in.
struct Search {
    const Morphism& m;
    int r;
    std::vector<Letter> chosen;     // chosen[k] = original letter at new position k+1
    std::vector<int> new_name;      // original letter -> new letter, 0 while open
    std::vector<bool> used;         // original letter already placed
    Word raw;                       // concatenated images of chosen originals

    std::optional<Word> best_word;
    std::vector<int> best_lengths;
    std::vector<Letter> best_perm;

    explicit Search(const Morphism& mm)
        : m(mm),
          r(mm.alphabet_size()),
          new_name(static_cast<std::size_t>(mm.alphabet_size()) + 1, 0),
          used(static_cast<std::size_t>(mm.alphabet_size()) + 1, false) {}

    // true when every completion of the current partial candidate compares
    // greater than the best word found so far.
    bool already_larger() const {
        if (!best_word) return false;
        const Word& best = *best_word;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const int c = new_name[raw[i]];
            if (c == 0) return false;
            if (c != best[i]) return c > best[i];
        }
        return false;
    }

    void visit_leaf() {
        Word w;
        w.reserve(raw.size());
        for (Letter a : raw) w.push_back(new_name[a]);
        std::vector<int> lengths;
        lengths.reserve(r);
        for (Letter a : chosen) lengths.push_back(static_cast<int>(m.image(a).size()));
        if (!best_word || w < *best_word ||
            (w == *best_word && lengths < best_lengths)) {
            best_word = std::move(w);
            best_lengths = std::move(lengths);
            best_perm = chosen;
        }
    }

    void descend() {
        if (static_cast<int>(chosen.size()) == r) {
            visit_leaf();
            return;
        }
        const int pos = static_cast<int>(chosen.size()) + 1;
        for (Letter a = 1; a <= r; ++a) {
            if (used[a]) continue;
            used[a] = true;
            new_name[a] = pos;
            chosen.push_back(a);
            const Word& im = m.image(a);
            raw.insert(raw.end(), im.begin(), im.end());
            if (!already_larger()) descend();
            raw.resize(raw.size() - im.size());
            chosen.pop_back();
            new_name[a] = 0;
            used[a] = false;
        }
    }
};

}  // namespace

MorphismStandardization standardize_morphism(const Morphism& m, StandardizeOptions opt) {
    if (m.alphabet_size() > opt.max_alphabet)
        throw CapacityError("alphabet size " + std::to_string(m.alphabet_size()) +
                            " exceeds the standardization cap of " +
                            std::to_string(opt.max_alphabet) +
                            "; raise StandardizeOptions::max_alphabet to allow it");
    Search search(m);
    search.descend();
    Relabeling witness{std::move(search.best_perm)};
    Morphism standard = permuted_version(m, witness);
    std::string key = format_morphism(standard);
    return MorphismStandardization{std::move(standard), std::move(witness), std::move(key)};
}

SequenceStandardization standardize_sequence(const Word& w) {
    int r = 0;
    for (Letter a : w) {
        if (a < 1) throw DomainError("sequence letters must be >= 1, found " + std::to_string(a));
        r = std::max(r, a);
    }
    std::vector<Letter> name(static_cast<std::size_t>(r) + 1, 0);
    int next = 0;
    for (Letter a : w)
        if (name[a] == 0) name[a] = ++next;
    if (next != r) {
        std::string missing;
        int gaps = 0;
        for (Letter a = 1; a <= r; ++a) {
            if (name[a] != 0) continue;
            missing += (missing.empty() ? "" : ", ") + std::to_string(a);
            ++gaps;
        }
        throw IncompleteAlphabetError(std::string(gaps == 1 ? "letter " : "letters ") + missing +
                                      (gaps == 1 ? " never occurs" : " never occur") +
                                      " in the prefix (r=" + std::to_string(r) +
                                      " was inferred from the largest letter)");
    }
    std::vector<Letter> table(name.begin() + 1, name.end());
    Relabeling witness{std::move(table)};
    return SequenceStandardization{relabel(w, witness), std::move(witness)};
}

bool equivalent_morphisms(const Morphism& a, const Morphism& b, StandardizeOptions opt) {
    if (a.alphabet_size() != b.alphabet_size()) return false;
    return standardize_morphism(a, opt).standard == standardize_morphism(b, opt).standard;
}

bool equivalent_sequences(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    return standardize_sequence(a).standard == standardize_sequence(b).standard;
}

}  // namespace stdform
