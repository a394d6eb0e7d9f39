// Command-line front end. Every subcommand accumulates its entire output
// into one string and writes it in a single shot, so output bytes are a
// pure function of the inputs.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stdform/canonical.hpp"
#include "stdform/catalog.hpp"
#include "stdform/core.hpp"
#include "stdform/generate.hpp"
#include "stdform/golden.hpp"
#include "stdform/transform.hpp"

namespace {

using namespace stdform;

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// File arguments accept "-" for standard input.
std::string read_text_source(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return read_all(in);
}

std::string strip(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Morphism morphism_arg(const std::string& arg) {
    if (arg == "-") return parse_morphism(strip(read_all(std::cin)));
    return parse_morphism(arg);
}

std::vector<long long> parse_term_list(const std::string& text) {
    std::vector<long long> terms;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() &&
               (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
            ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        if (text[j] == '-' || text[j] == '+') ++j;
        std::size_t digits_at = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == digits_at) throw ParseError("expected an integer", i);
        terms.push_back(std::stoll(text.substr(i, j - i)));
        i = j;
    }
    if (terms.empty()) throw DomainError("no terms given");
    return terms;
}

// Shared sequence-input flags: exactly one of --terms, --terms-file, --bfile.
struct SequenceInput {
    std::string terms;
    std::string terms_file;
    std::string bfile;

    void attach(CLI::App* sub) {
        auto* grp = sub->add_option_group("input", "sequence source");
        grp->add_option("--terms", terms, "terms inline, comma- or space-separated");
        grp->add_option("--terms-file", terms_file,
                        "file of comma- or space-separated terms ('-' for stdin)");
        grp->add_option("--bfile", bfile, "two-column 'index value' archive file ('-' for stdin)");
        grp->require_option(1);
    }

    SequenceRecord record() const {
        if (!bfile.empty()) {
            if (bfile == "-") return parse_bfile_text(read_all(std::cin), "stdin");
            return read_bfile(bfile);
        }
        SequenceRecord rec;
        rec.offset = 0;
        rec.terms = parse_term_list(!terms.empty() ? terms : read_text_source(terms_file));
        return rec;
    }

    // Terms shifted to 1-based letters (no-op when they already are).
    ImportedWord word() const { return import_as_word(record()); }
};

template <typename Range>
std::string join_csv(const Range& values) {
    std::string out;
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out;
}

// text: comma-joined single line; csv: "index,value" lines; bfile: "index value" lines.
template <typename Range>
std::string format_terms(const Range& values, const std::string& format, long long offset) {
    if (format == "text") return join_csv(values) + "\n";
    std::string out;
    long long index = offset;
    for (const auto& v : values) {
        out += std::to_string(index) + (format == "csv" ? "," : " ") + std::to_string(v) + "\n";
        ++index;
    }
    return out;
}

void add_format_option(CLI::App* sub, std::string& format, long long* offset = nullptr) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "bfile"}))
        ->capture_default_str();
    if (offset)
        sub->add_option("--offset", *offset, "first index for csv/bfile output")
            ->capture_default_str();
}

std::string describe_groups(const DedupResult& result) {
    std::string out;
    for (const auto& group : result.groups) {
        out += "group " + group.key + "\n";
        for (const auto& label : group.labels) out += "  " + label + "\n";
    }
    return out;
}

void warn_failures(const DedupResult& result) {
    for (const auto& failure : result.failures)
        std::cerr << "warning: " << failure.label << ": " << failure.reason << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard forms, orbits and exact checks for substitutions"};
    app.require_subcommand(1);
    std::string out;

    // standardize-morphism
    std::string sm_text;
    bool sm_witness = false;
    StandardizeOptions sm_opt;
    auto* sm = app.add_subcommand("standardize-morphism",
                                  "print the standard form of a substitution");
    sm->add_option("morphism", sm_text, "rules like \"1->22,2->21\" ('-' for stdin)")->required();
    sm->add_flag("--witness", sm_witness, "also print the relabeling that reaches it");
    sm->add_option("--max-alphabet", sm_opt.max_alphabet,
                   "refuse alphabets larger than this (search is factorial)")
        ->capture_default_str();
    sm->callback([&] {
        const auto std_form = standardize_morphism(morphism_arg(sm_text), sm_opt);
        out += std_form.key + "\n";
        if (sm_witness) out += "witness " + format_relabeling(std_form.witness) + "\n";
    });

    // standardize-sequence
    SequenceInput ss_input;
    bool ss_witness = false;
    auto* ss = app.add_subcommand("standardize-sequence",
                                  "print the standard form of a finite sequence");
    ss_input.attach(ss);
    ss->add_flag("--witness", ss_witness, "also print the relabeling that reaches it");
    ss->callback([&] {
        const auto std_form = standardize_sequence(ss_input.word().word);
        out += join_csv(std_form.standard) + "\n";
        if (ss_witness) out += "witness " + format_relabeling(std_form.witness) + "\n";
    });

    // fixed-points
    std::string fp_text;
    long long fp_n = 32;
    auto* fp = app.add_subcommand(
        "fixed-points", "list every fixed point of a substitution and its standard form");
    fp->add_option("morphism", fp_text, "rules ('-' for stdin)")->required();
    fp->add_option("-n,--length", fp_n, "prefix length to print")->capture_default_str();
    fp->callback([&] {
        const Morphism m = morphism_arg(fp_text);
        for (Letter seed : fixed_point_seeds(m)) {
            MorphicSequence s(m, seed);
            const Word prefix = s.prefix(static_cast<std::size_t>(fp_n));
            out += "seed " + std::to_string(seed) + ": " + join_csv(prefix) + "\n";
            out += "standard: " + join_csv(standardize_sequence(prefix).standard) + "\n";
        }
    });

    // orbit
    std::string orbit_text;
    int orbit_seed = 1;
    long long orbit_n = 0;
    std::string orbit_map;
    std::string orbit_format = "text";
    long long orbit_offset = 0;
    auto* orbit = app.add_subcommand("orbit", "print a prefix of the fixed point from a seed");
    orbit->add_option("morphism", orbit_text, "rules ('-' for stdin)")->required();
    orbit->add_option("--seed", orbit_seed, "prolongable starting letter")->capture_default_str();
    orbit->add_option("-n,--length", orbit_n, "prefix length")->required();
    orbit->add_option("--map", orbit_map, "letter map like \"1->0,2->1\" applied to the prefix");
    add_format_option(orbit, orbit_format, &orbit_offset);
    orbit->callback([&] {
        MorphicSequence s(morphism_arg(orbit_text), orbit_seed);
        const Word prefix = s.prefix(static_cast<std::size_t>(orbit_n));
        if (orbit_map.empty()) {
            out += format_terms(prefix, orbit_format, orbit_offset);
        } else {
            const auto mapped = project(prefix, parse_letter_map(orbit_map));
            out += format_terms(mapped, orbit_format, orbit_offset);
        }
    });

    // block
    std::string block_text;
    int block_seed = 1;
    int block_n = 2;
    auto* block = app.add_subcommand(
        "block", "compute the induced substitution on length-N factors, with its coding");
    block->add_option("morphism", block_text, "rules ('-' for stdin)")->required();
    block->add_option("--seed", block_seed, "prolongable starting letter")->capture_default_str();
    block->add_option("-N,--block-length", block_n, "factor length")->required();
    block->callback([&] {
        const auto result = block_morphism(morphism_arg(block_text), block_seed, block_n);
        out += format_morphism(result.morphism) + "\n";
        out += format_block_coding(result.coding);
    });

    // rotate
    std::string rot_text;
    int rot_times = 1;
    auto* rot = app.add_subcommand("rotate",
                                   "move the shared leading letter of every image to its end");
    rot->add_option("morphism", rot_text, "rules ('-' for stdin)")->required();
    rot->add_option("--times", rot_times, "number of rotations")->capture_default_str();
    rot->callback([&] {
        Morphism m = morphism_arg(rot_text);
        for (int i = 0; i < rot_times; ++i) m = rotate(m);
        out += format_morphism(m) + "\n";
    });

    // merge
    std::string merge_text;
    auto* merge = app.add_subcommand("merge", "identify letters that share an image");
    merge->add_option("morphism", merge_text, "rules ('-' for stdin)")->required();
    merge->callback([&] {
        const MergeResult result = merge_equal_images(morphism_arg(merge_text));
        out += format_morphism(result.morphism) + "\n";
        out += "quotient " + format_letter_map(result.quotient) + "\n";
    });

    // project
    SequenceInput proj_input;
    std::string proj_map;
    std::string proj_format = "text";
    long long proj_offset = 0;
    auto* proj = app.add_subcommand("project", "apply a letter map to a sequence");
    proj_input.attach(proj);
    proj->add_option("--map", proj_map, "letter map like \"1->0,2->1\"")->required();
    add_format_option(proj, proj_format, &proj_offset);
    proj->callback([&] {
        const auto mapped = project(proj_input.word().word, parse_letter_map(proj_map));
        out += format_terms(mapped, proj_format, proj_offset);
    });

    // complexity
    std::string cx_text;
    int cx_seed = 1;
    int cx_max = 10;
    auto* cx = app.add_subcommand("complexity",
                                  "count distinct length-n factors for n = 1..max");
    cx->add_option("morphism", cx_text, "rules ('-' for stdin)")->required();
    cx->add_option("--seed", cx_seed, "prolongable starting letter")->capture_default_str();
    cx->add_option("--max", cx_max, "largest factor length")->capture_default_str();
    cx->callback([&] {
        MorphicSequence s(morphism_arg(cx_text), cx_seed);
        out += join_csv(complexity(s, cx_max)) + "\n";
    });

    // golden
    auto* golden = app.add_subcommand("golden", "golden-mean Beatty sequences and identities");
    golden->require_subcommand(1);
    struct GoldenSeq {
        const char* name;
        const char* help;
        long long start;
        BigInt (*term)(const BigInt&);
    };
    static const GoldenSeq golden_seqs[] = {
        {"a", "a(n) = floor(n*Phi), n >= 1", 1, [](const BigInt& n) { return beatty_a(n); }},
        {"g", "g(k) = floor(Phi*floor(k/Phi)), k >= 0", 0,
         [](const BigInt& k) { return g_seq(k); }},
        {"inc", "g(n) - g(n-1), n >= 1", 1,
         [](const BigInt& n) { return BigInt(increment_g(n)); }},
        {"e", "e(n) = floor((n+1)/Phi), n >= 0", 0, [](const BigInt& n) { return e_seq(n); }},
    };
    static long long gs_n = 0;
    static std::string gs_format;
    gs_format = "text";
    for (const auto& seq : golden_seqs) {
        auto* sub = golden->add_subcommand(seq.name, seq.help);
        sub->add_option("-n,--count", gs_n, "how many terms")->required();
        add_format_option(sub, gs_format);
        const auto* entry = &seq;
        sub->callback([&out, entry] {
            if (gs_n < 1) throw DomainError("need a positive term count");
            std::vector<long long> values;
            values.reserve(static_cast<std::size_t>(gs_n));
            for (long long i = 0; i < gs_n; ++i) {
                const BigInt v = entry->term(BigInt(static_cast<long>(entry->start + i)));
                values.push_back(v.get_si());
            }
            out += format_terms(values, gs_format, entry->start);
        });
    }
    long long verify_n_max = 1000000;
    int verify_jobs = 1;
    auto* verify = golden->add_subcommand("verify",
                                          "check the five floor identities exhaustively");
    verify->add_option("--n-max", verify_n_max, "verify for all n in 1..n-max")
        ->capture_default_str();
    verify->add_option("--jobs", verify_jobs, "worker threads")->capture_default_str();
    static int verify_exit = 0;
    verify->callback([&] {
        const VerifyReport report = verify_identities(verify_n_max, verify_jobs);
        out += format_report(report);
        verify_exit = report.all_hold ? 0 : 1;
    });

    // dedup
    auto* dedup = app.add_subcommand("dedup", "group inputs sharing a standard form");
    dedup->require_subcommand(1);
    std::vector<std::string> dm_files;
    StandardizeOptions dm_opt;
    int dedup_jobs = 1;
    auto* dm = dedup->add_subcommand("morphisms",
                                     "group rule files by standard form (one rule set per line)");
    dm->add_option("files", dm_files, "rule files ('-' for stdin)")->required();
    dm->add_option("--max-alphabet", dm_opt.max_alphabet,
                   "refuse alphabets larger than this")
        ->capture_default_str();
    dm->add_option("--jobs", dedup_jobs, "worker threads")->capture_default_str();
    dm->callback([&] {
        std::vector<std::pair<std::string, std::string>> items;
        for (const auto& file : dm_files) {
            std::istringstream lines(read_text_source(file));
            std::string line;
            long long line_no = 0;
            while (std::getline(lines, line)) {
                ++line_no;
                const std::string text = strip(line);
                if (text.empty() || text[0] == '#') continue;
                items.emplace_back(file + ":" + std::to_string(line_no), text);
            }
        }
        const DedupResult result = dedup_morphisms(items, dm_opt, dedup_jobs);
        out += describe_groups(result);
        warn_failures(result);
    });
    std::vector<std::string> ds_files;
    std::size_t ds_compare = 256;
    auto* ds = dedup->add_subcommand("sequences", "group archive files by standardized prefix");
    ds->add_option("files", ds_files, "two-column archive files")->required();
    ds->add_option("--compare-length", ds_compare, "prefix length compared")
        ->capture_default_str();
    ds->add_option("--jobs", dedup_jobs, "worker threads")->capture_default_str();
    ds->callback([&] {
        std::vector<std::pair<std::string, SequenceRecord>> items;
        for (const auto& file : ds_files) items.emplace_back(file, read_bfile(file));
        const DedupResult result = dedup_sequences(items, ds_compare, dedup_jobs);
        out += "# groups share the first " + std::to_string(ds_compare) +
               " terms up to relabeling; this is a prefix heuristic, not a proof of equality\n";
        out += describe_groups(result);
        warn_failures(result);
    });

    // oeis fetch
    auto* oeis = app.add_subcommand("oeis", "sequence archive access");
    oeis->require_subcommand(1);
    std::string fetch_id;
    FetchOptions fetch_opt;
    bool fetch_network = false;
    bool fetch_no_network = false;
    auto* fetch = oeis->add_subcommand("fetch", "print a sequence archive as canonical b-file");
    fetch->add_option("id", fetch_id, "sequence id, e.g. A010060")->required();
    fetch->add_flag("--network", fetch_network, "allow a network fetch on cache miss");
    fetch->add_flag("--no-network", fetch_no_network, "forbid network access (default)");
    fetch->add_option("--cache-dir", fetch_opt.cache_dir,
                      "cache directory (default $STDFORM_CACHE_DIR or the user cache dir)");
    fetch->add_option("--url-template", fetch_opt.url_template,
                      "fetch URL with {id} and {digits} placeholders")
        ->capture_default_str();
    fetch->callback([&] {
        fetch_opt.allow_network = fetch_network && !fetch_no_network;
        out += format_bfile(fetch_oeis(fetch_id, fetch_opt));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const stdform::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::fwrite(out.data(), 1, out.size(), stdout);
    return verify_exit;
}
