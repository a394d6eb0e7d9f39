#include "stdform/generate.hpp"

#include <algorithm>
#include <set>

namespace stdform {

namespace {

void check_prolongable(const Morphism& m, Letter seed) {
    const Word& im = m.image(seed);  // also range-checks seed
    if (im[0] != seed || im.size() < 2)
        throw DomainError("morphism is not prolongable on " + std::to_string(seed) +
                          ": its image must start with " + std::to_string(seed) +
                          " and have length >= 2");
}

LetterMap checked_coding(LetterMap coding, const Morphism& m) {
    if (coding.domain_size() != m.alphabet_size())
        throw AlphabetMismatchError("coding covers " + std::to_string(coding.domain_size()) +
                                    " letters but the morphism has " +
                                    std::to_string(m.alphabet_size()));
    if (!coding.into_alphabet())
        throw DomainError("a sequence coding must map into letters >= 1");
    return coding;
}

}  // namespace

MorphicSequence::MorphicSequence(Morphism m, Letter seed)
    : m_(std::move(m)), seed_(seed), next_(1) {
    check_prolongable(m_, seed_);
}

MorphicSequence::MorphicSequence(Morphism m, Letter seed, LetterMap coding)
    : m_(std::move(m)), seed_(seed), coding_(checked_coding(std::move(coding), m_)), next_(1) {
    check_prolongable(m_, seed_);
}

MorphicSequence::MorphicSequence(const MorphicSequence& other)
    : m_(other.m_), seed_(other.seed_), coding_(other.coding_), next_(1) {}

Word MorphicSequence::prefix(std::size_t n) const {
    Word out;
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (buf_.empty()) buf_ = m_.image(seed_);
        // buf_ is always a prefix of the fixed point: the fixed point is the
        // image of itself, buf_ starts as the image of its first letter, and
        // each step appends the image of the next letter. next_ stays behind
        // the end because every image is non-empty.
        while (buf_.size() < n) {
            const Word& im = m_.image(buf_[next_]);
            buf_.insert(buf_.end(), im.begin(), im.end());
            ++next_;
        }
        out.assign(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(n));
    }
    if (coding_)
        for (Letter& a : out) a = (*coding_)(a);
    return out;
}

std::vector<Letter> fixed_point_seeds(const Morphism& m) {
    std::vector<Letter> seeds;
    for (Letter a = 1; a <= m.alphabet_size(); ++a) {
        const Word& im = m.image(a);
        if (im[0] == a && im.size() >= 2) seeds.push_back(a);
    }
    return seeds;
}

Word iterate(const Morphism& m, const Word& w, int k) {
    if (k < 0) throw DomainError("iterate wants k >= 0, got " + std::to_string(k));
    Word out = w;
    for (int i = 0; i < k; ++i) out = m(out);
    return out;
}

namespace {

std::set<Word> factor_set(const Word& w, int n) {
    std::set<Word> out;
    if (static_cast<std::size_t>(n) > w.size()) return out;
    for (std::size_t i = 0; i + n <= w.size(); ++i)
        out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i),
                        w.begin() + static_cast<std::ptrdiff_t>(i + n)));
    return out;
}

bool closed_under(const Morphism& m, const std::set<Word>& fs, int n) {
    for (const Word& b : fs) {
        const Word image = m(b);
        for (std::size_t i = 0; i + n <= image.size(); ++i) {
            Word window(image.begin() + static_cast<std::ptrdiff_t>(i),
                        image.begin() + static_cast<std::ptrdiff_t>(i + n));
            if (!fs.count(window)) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Word> factors(const MorphicSequence& s, int n, FactorOptions opt) {
    if (n < 1) throw DomainError("factor length must be >= 1, got " + std::to_string(n));
    const Morphism& m = s.morphism();

    Word w{s.seed()};
    std::optional<std::set<Word>> prev;
    bool certified = false;
    for (int iter = 0; iter <= opt.max_iterations; ++iter) {
        if (w.size() > opt.max_prefix_length)
            throw CapacityError("factor search prefix exceeded " +
                                std::to_string(opt.max_prefix_length) +
                                " letters; raise FactorOptions::max_prefix_length");
        std::set<Word> cur = factor_set(w, n);
        if (prev && !cur.empty() && cur == *prev && closed_under(m, cur, n)) {
            certified = true;
            break;
        }
        prev = std::move(cur);
        w = m(w);
    }
    if (!certified)
        throw CapacityError("factor set did not stabilize within " +
                            std::to_string(opt.max_iterations) +
                            " iterations; raise FactorOptions::max_iterations");

    // First-occurrence order in the certified prefix, which is a prefix of
    // the fixed point itself. With a coding, distinct raw factors may fall
    // together; scanning the coded prefix handles that.
    Word scan = w;
    if (s.coding())
        for (Letter& a : scan) a = (*s.coding())(a);
    std::vector<Word> ordered;
    std::set<Word> seen;
    for (std::size_t i = 0; i + n <= scan.size(); ++i) {
        Word window(scan.begin() + static_cast<std::ptrdiff_t>(i),
                    scan.begin() + static_cast<std::ptrdiff_t>(i + n));
        if (seen.insert(window).second) ordered.push_back(std::move(window));
    }
    return ordered;
}

std::vector<std::size_t> complexity(const MorphicSequence& s, int n_max, FactorOptions opt) {
    if (n_max < 1) throw DomainError("complexity wants n_max >= 1, got " + std::to_string(n_max));
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.push_back(factors(s, n, opt).size());
    return out;
}

}  // namespace stdform
