#include "stdform/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <utility>

namespace stdform {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}

Morphism::Morphism(int alphabet_size, std::vector<Word> images)
    : r_(alphabet_size), images_(std::move(images)) {
    if (r_ < 1)
        throw DomainError("alphabet size must be at least 1, got " + std::to_string(r_));
    if (static_cast<int>(images_.size()) != r_)
        throw DomainError("expected " + std::to_string(r_) + " images, got " +
                          std::to_string(images_.size()));
    for (int a = 1; a <= r_; ++a) {
        const Word& im = images_[a - 1];
        if (im.empty())
            throw DomainError("image of letter " + std::to_string(a) +
                              " is empty; erasing morphisms are not supported");
        for (Letter c : im)
            if (c < 1 || c > r_)
                throw AlphabetMismatchError("image of letter " + std::to_string(a) +
                                            " uses letter " + std::to_string(c) +
                                            " outside the alphabet 1.." + std::to_string(r_));
    }
}

const Word& Morphism::image(Letter a) const {
    if (a < 1 || a > r_)
        throw AlphabetMismatchError("letter " + std::to_string(a) +
                                    " outside the alphabet 1.." + std::to_string(r_));
    return images_[a - 1];
}

bool Morphism::uniform() const {
    for (const Word& im : images_)
        if (im.size() != images_[0].size()) return false;
    return true;
}

std::vector<int> Morphism::image_lengths() const {
    std::vector<int> lens;
    lens.reserve(images_.size());
    for (const Word& im : images_) lens.push_back(static_cast<int>(im.size()));
    return lens;
}

Relabeling::Relabeling(std::vector<Letter> table) : table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    std::vector<bool> seen(n, false);
    for (Letter v : table_) {
        if (v < 1 || v > n)
            throw DomainError("relabeling value " + std::to_string(v) +
                              " outside 1.." + std::to_string(n));
        if (seen[v - 1])
            throw DomainError("relabeling maps two letters to " + std::to_string(v));
        seen[v - 1] = true;
    }
}

Relabeling Relabeling::identity(int n) {
    std::vector<Letter> t(n);
    std::iota(t.begin(), t.end(), 1);
    return Relabeling(std::move(t));
}

Letter Relabeling::operator()(Letter a) const {
    if (a < 1 || a > size())
        throw AlphabetMismatchError("letter " + std::to_string(a) +
                                    " outside the relabeling domain 1.." + std::to_string(size()));
    return table_[a - 1];
}

Relabeling Relabeling::inverse() const {
    std::vector<Letter> inv(table_.size());
    for (int a = 1; a <= size(); ++a) inv[table_[a - 1] - 1] = a;
    return Relabeling(std::move(inv));
}

bool Relabeling::is_identity() const {
    for (int a = 1; a <= size(); ++a)
        if (table_[a - 1] != a) return false;
    return true;
}

LetterMap::LetterMap(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("a letter map needs a non-empty domain");
    for (int v : values_)
        if (v < 0) throw DomainError("letter map value " + std::to_string(v) + " is negative");
}

LetterMap LetterMap::identity(int r) {
    std::vector<int> v(r);
    std::iota(v.begin(), v.end(), 1);
    return LetterMap(std::move(v));
}

int LetterMap::operator()(Letter a) const {
    if (a < 1 || a > domain_size())
        throw AlphabetMismatchError("letter " + std::to_string(a) +
                                    " outside the map domain 1.." + std::to_string(domain_size()));
    return values_[a - 1];
}

bool LetterMap::into_alphabet() const {
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v >= 1; });
}

int LetterMap::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

Word Morphism::operator()(const Word& w) const {
    std::size_t total = 0;
    for (Letter a : w) total += image(a).size();
    Word out;
    out.reserve(total);
    for (Letter a : w) {
        const Word& im = image(a);
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (outer.alphabet_size() != inner.alphabet_size())
        throw AlphabetMismatchError("cannot compose morphisms on alphabets of size " +
                                    std::to_string(outer.alphabet_size()) + " and " +
                                    std::to_string(inner.alphabet_size()));
    std::vector<Word> images;
    images.reserve(inner.alphabet_size());
    for (int a = 1; a <= inner.alphabet_size(); ++a)
        images.push_back(outer(inner.image(a)));
    return Morphism(inner.alphabet_size(), std::move(images));
}

Morphism power(const Morphism& m, int k) {
    if (k < 1) throw DomainError("morphism power wants an exponent >= 1, got " + std::to_string(k));
    Morphism result = m;
    for (int i = 1; i < k; ++i) result = compose(m, result);
    return result;
}

Word relabel(const Word& w, const Relabeling& p) {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(p(a));
    return out;
}

Morphism permuted_version(const Morphism& m, const Relabeling& p) {
    if (p.size() != m.alphabet_size())
        throw AlphabetMismatchError("relabeling acts on " + std::to_string(p.size()) +
                                    " letters but the morphism has " +
                                    std::to_string(m.alphabet_size()));
    const Relabeling inv = p.inverse();
    std::vector<Word> images;
    images.reserve(m.alphabet_size());
    for (int a = 1; a <= m.alphabet_size(); ++a)
        images.push_back(relabel(m.image(p(a)), inv));
    return Morphism(m.alphabet_size(), std::move(images));
}

Relabeling compose(const Relabeling& p, const Relabeling& q) {
    if (p.size() != q.size())
        throw AlphabetMismatchError("cannot compose relabelings of sizes " +
                                    std::to_string(p.size()) + " and " + std::to_string(q.size()));
    std::vector<Letter> t(p.size());
    for (int a = 1; a <= p.size(); ++a) t[a - 1] = p(q(a));
    return Relabeling(std::move(t));
}

namespace {

constexpr int kMaxLetterValue = 1000000;

bool is_separator(char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    void skip_separators() {
        while (pos < s.size() && is_separator(s[pos])) ++pos;
    }
    bool eof() const { return pos >= s.size(); }

    int read_int(const char* what) {
        std::size_t start = pos;
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > kMaxLetterValue) throw ParseError("number too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError(std::string("expected ") + what, pos);
        return static_cast<int>(v);
    }

    void expect_arrow() {
        if (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == '>') {
            pos += 2;
            return;
        }
        throw ParseError("expected '->'", pos);
    }
};

struct RawRule {
    int head;
    std::size_t head_pos;
    std::string image;
    std::size_t image_pos;
};

struct RawMorphismText {
    int declared_r = -1;
    std::vector<RawRule> rules;
};

RawMorphismText scan_morphism(const std::string& text) {
    RawMorphismText raw;
    Scanner sc{text};
    sc.skip_separators();
    if (!sc.eof() && text[sc.pos] == 'r') {
        ++sc.pos;
        sc.skip_separators();
        if (sc.eof() || text[sc.pos] != '=') throw ParseError("expected '=' after 'r'", sc.pos);
        ++sc.pos;
        sc.skip_separators();
        raw.declared_r = sc.read_int("an alphabet size");
        if (raw.declared_r < 1) throw ParseError("declared alphabet size must be >= 1", sc.pos);
        sc.skip_separators();
    }
    while (!sc.eof()) {
        RawRule rule;
        rule.head_pos = sc.pos;
        rule.head = sc.read_int("a letter");
        sc.skip_separators();
        sc.expect_arrow();
        sc.skip_separators();
        rule.image_pos = sc.pos;
        while (sc.pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[sc.pos])) || text[sc.pos] == '.'))
            ++sc.pos;
        rule.image = text.substr(rule.image_pos, sc.pos - rule.image_pos);
        if (rule.image.empty()) throw ParseError("expected an image word", sc.pos);
        raw.rules.push_back(std::move(rule));
        sc.skip_separators();
    }
    if (raw.rules.empty()) throw ParseError("no rules found", text.size());
    return raw;
}

std::vector<int> parse_image_token(const std::string& tok, std::size_t tok_pos, bool dotted) {
    std::vector<int> letters;
    if (dotted) {
        std::size_t i = 0;
        while (i <= tok.size()) {
            std::size_t dot = tok.find('.', i);
            if (dot == std::string::npos) dot = tok.size();
            if (dot == i) throw ParseError("empty letter between dots", tok_pos + i);
            long long v = 0;
            for (std::size_t j = i; j < dot; ++j) {
                v = v * 10 + (tok[j] - '0');
                if (v > kMaxLetterValue) throw ParseError("letter too large", tok_pos + i);
            }
            letters.push_back(static_cast<int>(v));
            if (dot == tok.size()) break;
            i = dot + 1;
            if (i == tok.size()) throw ParseError("trailing dot in image", tok_pos + dot);
        }
    } else {
        for (std::size_t i = 0; i < tok.size(); ++i) {
            if (tok[i] == '.') throw ParseError("unexpected dot in image", tok_pos + i);
            letters.push_back(tok[i] - '0');
        }
    }
    return letters;
}

struct ParsedRules {
    int declared_r;  // -1 when absent, in original labels
    std::vector<std::pair<int, std::vector<int>>> rules;
    std::vector<std::size_t> head_positions;
};

ParsedRules parse_rules(const std::string& text) {
    RawMorphismText raw = scan_morphism(text);
    bool dotted = raw.declared_r >= 10;
    for (const RawRule& r : raw.rules) {
        if (r.head >= 10 || r.image.find('.') != std::string::npos) dotted = true;
    }
    ParsedRules out;
    out.declared_r = raw.declared_r;
    for (const RawRule& r : raw.rules) {
        out.rules.emplace_back(r.head, parse_image_token(r.image, r.image_pos, dotted));
        out.head_positions.push_back(r.head_pos);
    }
    return out;
}

Morphism assemble_morphism(const ParsedRules& parsed, int shift, const std::string& text) {
    int max_letter = 0;
    for (const auto& [head, image] : parsed.rules) {
        max_letter = std::max(max_letter, head + shift);
        for (int c : image) max_letter = std::max(max_letter, c + shift);
    }
    int r = max_letter;
    if (parsed.declared_r >= 0) {
        const int declared = parsed.declared_r + shift;
        if (max_letter > declared)
            throw ParseError("letter " + std::to_string(max_letter - shift) +
                                 " out of declared range r=" + std::to_string(parsed.declared_r),
                             0);
        r = declared;
    }
    std::vector<Word> images(r);
    std::vector<bool> have(r, false);
    for (std::size_t i = 0; i < parsed.rules.size(); ++i) {
        const int head = parsed.rules[i].first + shift;
        if (have[head - 1])
            throw ParseError("duplicate rule for letter " + std::to_string(parsed.rules[i].first),
                             parsed.head_positions[i]);
        have[head - 1] = true;
        Word im;
        im.reserve(parsed.rules[i].second.size());
        for (int c : parsed.rules[i].second) im.push_back(c + shift);
        images[head - 1] = std::move(im);
    }
    for (int a = 1; a <= r; ++a)
        if (!have[a - 1])
            throw ParseError("missing image for letter " + std::to_string(a - shift), text.size());
    return Morphism(r, std::move(images));
}

}  // namespace

Morphism parse_morphism(const std::string& text) {
    ParsedRules parsed = parse_rules(text);
    for (std::size_t i = 0; i < parsed.rules.size(); ++i) {
        if (parsed.rules[i].first < 1)
            throw ParseError("letter 0 is out of range; letters are 1-based",
                             parsed.head_positions[i]);
        for (int c : parsed.rules[i].second)
            if (c < 1)
                throw ParseError("letter 0 is out of range; letters are 1-based",
                                 parsed.head_positions[i]);
    }
    return assemble_morphism(parsed, 0, text);
}

RebasedMorphism parse_morphism_rebased(const std::string& text) {
    ParsedRules parsed = parse_rules(text);
    int min_letter = std::numeric_limits<int>::max();
    for (const auto& [head, image] : parsed.rules) {
        min_letter = std::min(min_letter, head);
        for (int c : image) min_letter = std::min(min_letter, c);
    }
    const int shift = 1 - min_letter;
    return RebasedMorphism{assemble_morphism(parsed, shift, text), shift};
}

std::string format_word_letters(const Word& w, int alphabet_size) {
    std::string out;
    if (alphabet_size >= 10) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += '.';
            out += std::to_string(w[i]);
        }
    } else {
        for (Letter a : w) {
            if (a < 1 || a > 9)
                throw AlphabetMismatchError("letter " + std::to_string(a) +
                                            " cannot be written as a single digit");
            out += static_cast<char>('0' + a);
        }
    }
    return out;
}

Word parse_word_letters(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    const std::string tok = text.substr(begin, end - begin);
    if (tok.empty()) throw ParseError("expected a word", begin);
    for (std::size_t i = 0; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])) && tok[i] != '.')
            throw ParseError("unexpected character in word", begin + i);
    const bool dotted = tok.find('.') != std::string::npos;
    std::vector<int> letters = parse_image_token(tok, begin, dotted);
    Word w;
    w.reserve(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] < 1) throw ParseError("letter 0 is out of range; letters are 1-based", begin);
        w.push_back(letters[i]);
    }
    return w;
}

std::string format_morphism(const Morphism& m) {
    const int r = m.alphabet_size();
    std::string out;
    if (r >= 10) out += "r=" + std::to_string(r) + ",";
    for (int a = 1; a <= r; ++a) {
        if (a > 1) out += ',';
        out += std::to_string(a);
        out += "->";
        out += format_word_letters(m.image(a), r);
    }
    return out;
}

namespace {

std::string format_pairs(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(i + 1);
        out += "->";
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string format_letter_map(const LetterMap& f) { return format_pairs(f.values()); }

std::string format_relabeling(const Relabeling& p) { return format_pairs(p.table()); }

LetterMap parse_letter_map(const std::string& text) {
    Scanner sc{text};
    std::vector<std::pair<int, int>> pairs;
    sc.skip_separators();
    if (sc.eof()) throw ParseError("no pairs found", text.size());
    while (!sc.eof()) {
        std::size_t head_pos = sc.pos;
        int key = sc.read_int("a letter");
        if (key < 1) throw ParseError("letter 0 is out of range; letters are 1-based", head_pos);
        sc.skip_separators();
        sc.expect_arrow();
        sc.skip_separators();
        int value = sc.read_int("a value");
        pairs.emplace_back(key, value);
        sc.skip_separators();
    }
    int r = 0;
    for (const auto& [k, v] : pairs) r = std::max(r, k);
    std::vector<int> values(r, -1);
    for (const auto& [k, v] : pairs) {
        if (values[k - 1] != -1)
            throw ParseError("duplicate pair for letter " + std::to_string(k), text.size());
        values[k - 1] = v;
    }
    for (int a = 1; a <= r; ++a)
        if (values[a - 1] == -1)
            throw ParseError("missing pair for letter " + std::to_string(a), text.size());
    return LetterMap(std::move(values));
}

}  // namespace stdform
