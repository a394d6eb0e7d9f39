#include "stdform/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "httplib.h"

namespace stdform {

namespace {

bool parse_ll(const std::string& s, std::size_t& i, long long& out) {
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    std::size_t digits_at = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits_at) return false;
    out = std::stoll(s.substr(i, j - i));
    i = j;
    return true;
}

}  // namespace

SequenceRecord parse_bfile_text(const std::string& text, const std::string& provenance) {
    SequenceRecord record;
    record.provenance = provenance;
    std::size_t pos = 0;
    long long line_no = 0;
    bool have_offset = false;
    long long expected = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        const std::size_t line_pos = pos;
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;

        long long index = 0;
        long long value = 0;
        if (!parse_ll(line, i, index))
            throw ParseError("line " + std::to_string(line_no) + ": expected an index", line_pos);
        if (i == line.size() || !std::isspace(static_cast<unsigned char>(line[i])))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'index value'",
                             line_pos);
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (!parse_ll(line, i, value))
            throw ParseError("line " + std::to_string(line_no) + ": expected a value", line_pos);
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i != line.size())
            throw ParseError("line " + std::to_string(line_no) + ": trailing characters",
                             line_pos);

        if (!have_offset) {
            record.offset = index;
            expected = index;
            have_offset = true;
        }
        if (index != expected)
            throw ParseError("line " + std::to_string(line_no) + ": expected index " +
                                 std::to_string(expected) + ", got " + std::to_string(index),
                             line_pos);
        record.terms.push_back(value);
        ++expected;
    }
    if (record.terms.empty()) throw ParseError("no data lines found", 0);
    return record;
}

SequenceRecord read_bfile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile_text(buf.str(), path);
}

std::string format_bfile(const SequenceRecord& record) {
    std::string out;
    for (std::size_t i = 0; i < record.terms.size(); ++i) {
        out += std::to_string(record.offset + static_cast<long long>(i));
        out += ' ';
        out += std::to_string(record.terms[i]);
        out += '\n';
    }
    return out;
}

void write_bfile(const SequenceRecord& record, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out << format_bfile(record);
        if (!out) throw Error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot rename " + tmp + " to " + path);
    }
}

ImportedWord import_as_word(const SequenceRecord& record, int max_alphabet) {
    if (record.terms.empty()) throw DomainError("cannot import an empty sequence");
    const auto [lo_it, hi_it] = std::minmax_element(record.terms.begin(), record.terms.end());
    const long long lo = *lo_it;
    const long long hi = *hi_it;
    if (hi - lo + 1 > max_alphabet)
        throw DomainError("value spread " + std::to_string(hi - lo + 1) +
                          " is too wide for an alphabet of at most " +
                          std::to_string(max_alphabet) + " letters");
    ImportedWord imported;
    imported.shift = static_cast<int>(1 - lo);
    imported.word.reserve(record.terms.size());
    for (long long t : record.terms)
        imported.word.push_back(static_cast<Letter>(t + imported.shift));
    return imported;
}

std::string normalize_oeis_id(const std::string& id) {
    std::size_t i = 0;
    if (i < id.size() && (id[i] == 'A' || id[i] == 'a')) ++i;
    if (i == id.size()) throw DomainError("not a sequence id: '" + id + "'");
    for (std::size_t j = i; j < id.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(id[j])))
            throw DomainError("not a sequence id: '" + id + "'");
    std::string digits = id.substr(i);
    if (digits.size() > 9) throw DomainError("not a sequence id: '" + id + "'");
    while (digits.size() < 6) digits.insert(digits.begin(), '0');
    return "A" + digits;
}

std::string default_cache_dir() {
    if (const char* dir = std::getenv("STDFORM_CACHE_DIR"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::string(xdg) + "/stdform";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/stdform";
    return ".stdform-cache";
}

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    std::size_t at = 0;
    while ((at = s.find(from, at)) != std::string::npos) {
        s.replace(at, from.size(), to);
        at += to.size();
    }
    return s;
}

std::string http_get(const std::string& url) {
    std::string scheme, rest;
    if (url.rfind("https://", 0) == 0) {
        scheme = "https";
        rest = url.substr(8);
    } else if (url.rfind("http://", 0) == 0) {
        scheme = "http";
        rest = url.substr(7);
    } else {
        throw Error("unsupported url: " + url);
    }
    const std::size_t slash = rest.find('/');
    const std::string host = rest.substr(0, slash);
    const std::string path = slash == std::string::npos ? "/" : rest.substr(slash);
#ifndef STDFORM_HAVE_OPENSSL
    if (scheme == "https")
        throw Error("built without TLS support; cannot fetch " + url);
#endif
    httplib::Client client(scheme + "://" + host);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) throw Error("fetch failed for " + url + ": " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw Error("fetch failed for " + url + ": HTTP " + std::to_string(res->status));
    return res->body;
}

}  // namespace

SequenceRecord fetch_oeis(const std::string& id, const FetchOptions& options) {
    const std::string norm = normalize_oeis_id(id);
    const std::string digits = norm.substr(1);
    const std::string cache_dir =
        options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
    const std::string cache_path = cache_dir + "/b" + digits + ".txt";

    if (std::filesystem::exists(cache_path)) {
        SequenceRecord record = read_bfile(cache_path);
        record.id = norm;
        return record;
    }
    if (!options.allow_network)
        throw Error(norm + " is not cached under " + cache_dir +
                    " and network access is disabled (pass --network to allow it)");

    std::string url = replace_all(options.url_template, "{id}", norm);
    url = replace_all(url, "{digits}", digits);
    const std::string body = http_get(url);
    SequenceRecord record = parse_bfile_text(body, url);
    record.id = norm;

    std::filesystem::create_directories(cache_dir);
    const std::string tmp = cache_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out << body;
    }
    if (std::rename(tmp.c_str(), cache_path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot rename " + tmp + " to " + cache_path);
    }
    return record;
}

namespace {

// Run fn(i) for i in 0..count-1 on up to jobs threads. Each result lands in
// its own slot, so the outcome is independent of scheduling.
void for_each_index(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs < 2 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int n = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

DedupResult collect_groups(const std::vector<std::string>& labels,
                           const std::vector<std::string>& keys,
                           const std::vector<std::string>& errors) {
    DedupResult result;
    std::map<std::string, std::vector<std::string>> by_key;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!errors[i].empty())
            result.failures.push_back({labels[i], errors[i]});
        else
            by_key[keys[i]].push_back(labels[i]);
    }
    for (auto& [key, members] : by_key) result.groups.push_back({key, std::move(members)});
    return result;
}

}  // namespace

DedupResult dedup_morphisms(const std::vector<std::pair<std::string, std::string>>& labeled_texts,
                            const StandardizeOptions& options, int jobs) {
    std::vector<std::string> labels(labeled_texts.size());
    std::vector<std::string> keys(labeled_texts.size());
    std::vector<std::string> errors(labeled_texts.size());
    for (std::size_t i = 0; i < labeled_texts.size(); ++i) labels[i] = labeled_texts[i].first;
    for_each_index(labeled_texts.size(), jobs, [&](std::size_t i) {
        try {
            const Morphism m = parse_morphism(labeled_texts[i].second);
            keys[i] = standardize_morphism(m, options).key;
        } catch (const Error& e) {
            errors[i] = e.what();
        }
    });
    return collect_groups(labels, keys, errors);
}

DedupResult dedup_sequences(const std::vector<std::pair<std::string, SequenceRecord>>& labeled,
                            std::size_t compare_length, int jobs) {
    std::vector<std::string> labels(labeled.size());
    std::vector<std::string> keys(labeled.size());
    std::vector<std::string> errors(labeled.size());
    for (std::size_t i = 0; i < labeled.size(); ++i) labels[i] = labeled[i].first;
    for_each_index(labeled.size(), jobs, [&](std::size_t i) {
        const auto& terms = labeled[i].second.terms;
        if (terms.empty()) {
            errors[i] = "empty sequence";
            return;
        }
        const std::size_t n = std::min(compare_length, terms.size());
        // First-occurrence renaming applied directly to the raw values, so
        // archives with gappy or negative value sets still compare.
        std::map<long long, int> seen;
        std::string key;
        for (std::size_t j = 0; j < n; ++j) {
            const auto [it, fresh] = seen.emplace(terms[j], static_cast<int>(seen.size()) + 1);
            (void)fresh;
            if (j) key += ',';
            key += std::to_string(it->second);
        }
        keys[i] = key;
    });
    return collect_groups(labels, keys, errors);
}

}  // namespace stdform
