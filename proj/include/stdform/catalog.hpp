#pragma once

// Reading and writing integer-sequence archive files in the two-column
// "index value" b-file format, turning archived sequences and substitution
// rules into library objects, and grouping a batch of either by standard
// form to expose duplicates.

#include <optional>
#include <string>
#include <vector>

#include "stdform/canonical.hpp"
#include "stdform/core.hpp"

namespace stdform {

struct SequenceRecord {
    std::optional<std::string> id;  // catalog id such as "A010060", if known
    long long offset = 0;           // index of the first stored term
    std::vector<long long> terms;
    std::string provenance;         // file path or URL the record came from
};

// Parse b-file text: one "index value" pair per line, '#' comments and
// blank lines ignored, indices consecutive. CR-LF line ends are accepted.
SequenceRecord parse_bfile_text(const std::string& text, const std::string& provenance = "");

SequenceRecord read_bfile(const std::string& path);

// Canonical rendering: data lines only, single space, trailing newline.
std::string format_bfile(const SequenceRecord& record);

// Write via a temporary file and rename, so readers never see a torn file.
void write_bfile(const SequenceRecord& record, const std::string& path);

struct ImportedWord {
    Word word;   // terms shifted to the 1-based alphabet
    int shift;   // word[i] = terms[i] + shift
};

// Reinterpret the terms as letters by shifting the minimum term to 1.
// Rejects records whose value spread is too wide to be an alphabet.
ImportedWord import_as_word(const SequenceRecord& record, int max_alphabet = 4096);

// "A123" -> "A000123"; throws DomainError for anything else.
std::string normalize_oeis_id(const std::string& id);

struct FetchOptions {
    bool allow_network = false;
    std::string cache_dir;  // empty: $STDFORM_CACHE_DIR, else XDG cache
    std::string url_template = "https://oeis.org/{id}/b{digits}.txt";
};

// Resolve an id to a b-file, preferring the local cache. Network misses
// are fetched only when allow_network is set, then cached.
SequenceRecord fetch_oeis(const std::string& id, const FetchOptions& options = {});

std::string default_cache_dir();

struct DedupGroup {
    std::string key;                  // shared standard form
    std::vector<std::string> labels;  // members, in input order
};

struct DedupFailure {
    std::string label;
    std::string reason;
};

struct DedupResult {
    std::vector<DedupGroup> groups;   // sorted by key
    std::vector<DedupFailure> failures;
};

// Group rule sets by the standard form of the parsed substitution. Inputs
// that fail to parse or standardize are reported, not fatal. jobs > 1
// standardizes items concurrently; the result does not depend on jobs.
DedupResult dedup_morphisms(const std::vector<std::pair<std::string, std::string>>& labeled_texts,
                            const StandardizeOptions& options = {}, int jobs = 1);

// Group sequences by the standard form of an imported prefix. Prefixes are
// truncated to compare_length before relabeling, and letters are renamed in
// first-occurrence order without requiring a gap-free alphabet. This is a
// prefix heuristic: equal keys mean the truncated prefixes standardize
// identically, not that the full sequences are equal.
DedupResult dedup_sequences(const std::vector<std::pair<std::string, SequenceRecord>>& labeled,
                            std::size_t compare_length = 256, int jobs = 1);

}  // namespace stdform
