#include "stdform/transform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stdform {

BlockCoding::BlockCoding(int source_alphabet, int block_length, std::vector<Word> blocks)
    : source_alphabet_(source_alphabet), block_length_(block_length), blocks_(std::move(blocks)) {
    if (source_alphabet_ < 1) throw DomainError("block coding needs a source alphabet");
    if (block_length_ < 1) throw DomainError("block length must be >= 1");
    if (blocks_.empty()) throw DomainError("block coding needs at least one block");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const Word& b = blocks_[i];
        if (static_cast<int>(b.size()) != block_length_)
            throw DomainError("block " + std::to_string(i + 1) + " has length " +
                              std::to_string(b.size()) + ", expected " +
                              std::to_string(block_length_));
        for (Letter c : b)
            if (c < 1 || c > source_alphabet_)
                throw AlphabetMismatchError("block letter " + std::to_string(c) +
                                            " outside the source alphabet 1.." +
                                            std::to_string(source_alphabet_));
        if (!index_.emplace(b, static_cast<Letter>(i + 1)).second)
            throw DomainError("duplicate block at position " + std::to_string(i + 1));
    }
}

const Word& BlockCoding::block_of(Letter k) const {
    if (k < 1 || k > alphabet_size())
        throw AlphabetMismatchError("block letter " + std::to_string(k) + " outside 1.." +
                                    std::to_string(alphabet_size()));
    return blocks_[k - 1];
}

Letter BlockCoding::letter_of(const Word& block) const {
    auto it = index_.find(block);
    if (it == index_.end())
        throw DomainError("word " + format_word_letters(block, source_alphabet_) +
                          " is not a block of this coding");
    return it->second;
}

NBlockMorphism block_morphism(const Morphism& m, Letter seed, int n, FactorOptions opt) {
    if (n < 1) throw DomainError("block length must be >= 1, got " + std::to_string(n));
    if (n == 1) {
        std::vector<Word> singletons;
        for (Letter a = 1; a <= m.alphabet_size(); ++a) singletons.push_back(Word{a});
        return NBlockMorphism{m, BlockCoding(m.alphabet_size(), 1, std::move(singletons))};
    }
    MorphicSequence s(m, seed);
    std::vector<Word> blocks = factors(s, n, opt);
    BlockCoding coding(m.alphabet_size(), n, std::move(blocks));

    std::vector<Word> images;
    images.reserve(coding.alphabet_size());
    for (Letter k = 1; k <= coding.alphabet_size(); ++k) {
        const Word& b = coding.block_of(k);
        const Word u = m(b);
        const std::size_t windows = m.image(b[0]).size();
        // u has at least windows + n - 1 letters because the remaining n - 1
        // block letters contribute at least one letter each.
        Word image;
        image.reserve(windows);
        for (std::size_t i = 0; i < windows; ++i)
            image.push_back(coding.letter_of(Word(u.begin() + static_cast<std::ptrdiff_t>(i),
                                                  u.begin() + static_cast<std::ptrdiff_t>(i + n))));
        images.push_back(std::move(image));
    }
    return NBlockMorphism{Morphism(coding.alphabet_size(), std::move(images)), std::move(coding)};
}

Word decode_blocks(const Word& w, const BlockCoding& coding) {
    Word out;
    out.reserve(w.size());
    for (Letter k : w) out.push_back(coding.block_of(k)[0]);
    return out;
}

Morphism rotate(const Morphism& m) {
    const Letter b = m.image(1)[0];
    std::string offenders;
    for (Letter a = 1; a <= m.alphabet_size(); ++a)
        if (m.image(a)[0] != b)
            offenders += (offenders.empty() ? "" : ", ") + std::to_string(a) + "->" +
                         std::to_string(m.image(a)[0]);
    if (!offenders.empty())
        throw NotRotatableError("images do not all begin with the same letter (letter 1 begins "
                                "with " +
                                std::to_string(b) + "; " + offenders + ")");
    std::vector<Word> images;
    images.reserve(m.alphabet_size());
    for (Letter a = 1; a <= m.alphabet_size(); ++a) {
        Word im(m.image(a).begin() + 1, m.image(a).end());
        im.push_back(b);
        images.push_back(std::move(im));
    }
    return Morphism(m.alphabet_size(), std::move(images));
}

MergeResult merge_equal_images(const Morphism& m) {
    Morphism cur = m;
    std::vector<int> overall(static_cast<std::size_t>(m.alphabet_size()));
    for (int a = 1; a <= m.alphabet_size(); ++a) overall[a - 1] = a;

    for (;;) {
        std::map<Word, Letter> cls;
        std::vector<Letter> name(static_cast<std::size_t>(cur.alphabet_size()) + 1, 0);
        std::vector<Letter> reps;
        for (Letter a = 1; a <= cur.alphabet_size(); ++a) {
            auto [it, fresh] = cls.emplace(cur.image(a), static_cast<Letter>(reps.size()) + 1);
            if (fresh) reps.push_back(a);
            name[a] = it->second;
        }
        if (static_cast<int>(reps.size()) == cur.alphabet_size())
            return MergeResult{std::move(cur), LetterMap(std::move(overall))};

        std::vector<Word> images;
        images.reserve(reps.size());
        for (Letter rep : reps) {
            Word im;
            im.reserve(cur.image(rep).size());
            for (Letter c : cur.image(rep)) im.push_back(name[c]);
            images.push_back(std::move(im));
        }
        for (int& v : overall) v = name[v];
        cur = Morphism(static_cast<int>(reps.size()), std::move(images));
    }
}

std::vector<int> project(const Word& w, const LetterMap& f) {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(f(a));
    return out;
}

std::string format_block_coding(const BlockCoding& coding) {
    std::string out;
    for (Letter k = 1; k <= coding.alphabet_size(); ++k) {
        out += std::to_string(k);
        out += ' ';
        out += format_word_letters(coding.block_of(k), coding.source_alphabet());
        out += '\n';
    }
    return out;
}

BlockCoding parse_block_coding(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<Letter, Word>> entries;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_pos = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) continue;
        std::size_t j = i;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        if (j == i || j == line.size() || !std::isspace(static_cast<unsigned char>(line[j])))
            throw ParseError("expected '<letter> <block>'", line_pos + i);
        const Letter k = std::stoi(line.substr(i, j - i));
        entries.emplace_back(k, parse_word_letters(line.substr(j + 1)));
    }
    if (entries.empty()) throw ParseError("no coding lines found", 0);

    const int count = static_cast<int>(entries.size());
    std::vector<Word> blocks(entries.size());
    std::vector<bool> have(entries.size(), false);
    int source_alphabet = 1;
    for (auto& [k, block] : entries) {
        if (k < 1 || k > count)
            throw ParseError("block letters must cover 1.." + std::to_string(count), 0);
        if (have[k - 1]) throw ParseError("duplicate block letter " + std::to_string(k), 0);
        have[k - 1] = true;
        for (Letter c : block) source_alphabet = std::max(source_alphabet, c);
        blocks[k - 1] = std::move(block);
    }
    const int block_length = static_cast<int>(blocks[0].size());
    return BlockCoding(source_alphabet, block_length, std::move(blocks));
}

}  // namespace stdform
