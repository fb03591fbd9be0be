#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixfree/fixfree.hpp"

namespace fixfree::cli {

namespace {

// Bad flags, unreadable files and input that does not fit the command.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A domain failure whose message has already been printed.
struct DomainFailure {};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_bytes(const Context& ctx, const std::string& path, bool binary) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>());
    }
    std::ifstream f(path, binary ? std::ios::binary : std::ios::in);
    if (!f) throw UsageError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string read_text(const Context& ctx, const std::string& path) {
    return read_bytes(ctx, path, false);
}

void write_bytes(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!f) throw UsageError("failed writing '" + path + "'");
}

// --out FILE when given, otherwise standard output.
void emit(const Context& ctx, const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        ctx.out << data;
    } else {
        write_bytes(out_path, data);
    }
}

// Flag, then FIXFREE_MAX_LEN, then the library default.
unsigned resolve_max_length(std::optional<unsigned> flag) {
    unsigned value = kDefaultMaxLength;
    if (flag) {
        value = *flag;
    } else if (const char* env = std::getenv("FIXFREE_MAX_LEN"); env && *env) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (*end != '\0' || v == 0 || v > kMaxStorableLength) {
            throw UsageError(std::string("FIXFREE_MAX_LEN must be an integer in [1, ") +
                             std::to_string(kMaxStorableLength) + "], got '" + env + "'");
        }
        value = static_cast<unsigned>(v);
    }
    if (value == 0 || value > kMaxStorableLength) {
        throw UsageError("--max-len must lie in [1, " + std::to_string(kMaxStorableLength) + "]");
    }
    return value;
}

void domain_failure(const Context& ctx, const std::string& kind, const std::string& message) {
    ctx.err << "error: " << kind << ": " << message << '\n';
    throw DomainFailure{};
}

CodeTable load_table(const Context& ctx, const std::string& path) {
    auto entries = parse_code_table(read_text(ctx, path));
    try {
        return CodeTable(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw UsageError("code table '" + path + "' rejected: " + e.what());
    }
}

std::vector<CodeTableEntry> auto_named(const Code& code) {
    std::vector<CodeTableEntry> entries;
    entries.reserve(code.size());
    std::size_t i = 0;
    for (const Word& w : code) entries.push_back({"w" + std::to_string(++i), w});
    return entries;
}

std::string commented(const std::string& block) {
    std::string out;
    std::istringstream lines(block);
    for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
    return out;
}

Distribution load_distribution(const Context& ctx, const std::string& path) {
    auto parsed = parse_distribution(read_text(ctx, path));
    std::vector<std::string> symbols;
    std::vector<double> probs;
    for (auto& [s, p] : parsed) {
        symbols.push_back(std::move(s));
        probs.push_back(p);
    }
    return Distribution(std::move(symbols), std::move(probs));
}

struct ConstructArgs {
    std::string lengths;
    std::string out;
    bool trace = false;
    std::optional<unsigned> max_len;
};

int cmd_construct(const Context& ctx, const ConstructArgs& a) {
    const LengthVector v = parse_length_vector(read_text(ctx, a.lengths));
    ConstructOptions options;
    options.max_length = resolve_max_length(a.max_len);
    try {
        const ConstructionResult r = construct(v, options);
        if (a.trace) ctx.err << r.trace.to_text();
        emit(ctx, a.out, format_code_table(auto_named(r.code)));
    } catch (const ConditionNotMet& e) {
        domain_failure(ctx, "condition-not-met",
                       "Kraft sum S = " + e.kraft().to_string() + " (k1 = " + std::to_string(e.k1()) +
                           ", k2 = " + std::to_string(e.k2()) +
                           ") meets neither threshold: S <= 3/4 with k1 = 1 or (k1 = 0, k2 = 2); "
                           "S <= 5/8 with k1 = 0, k2 <= 1. The condition is sufficient, not "
                           "necessary; 'fixfree oracle' decides small instances exactly");
    }
    return kSuccess;
}

struct DesignArgs {
    std::string dist;
    std::string out;
    bool kv = false;
    std::optional<unsigned> max_len;
};

int cmd_design(const Context& ctx, const DesignArgs& a) {
    const Distribution d = load_distribution(ctx, a.dist);
    const Design design = design_code(d, resolve_max_length(a.max_len));
    std::string report = design.report.to_text();
    if (a.kv) report += design.report.to_key_values();
    const std::string table = format_code_table(design.table.entries());
    if (a.out.empty()) {
        ctx.out << table << commented(report);
    } else {
        write_bytes(a.out, table);
        ctx.out << report;
    }
    return kSuccess;
}

int cmd_verify(const Context& ctx, const std::string& code_path) {
    const auto entries = parse_code_table(read_text(ctx, code_path));
    std::vector<Word> words;
    for (const auto& e : entries) words.push_back(e.word);
    const VerifyResult r = verify_fixfree(words);
    if (!r) {
        ctx.out << "fix-free: no\n";
        domain_failure(ctx, "not-fix-free", r.witness->to_string());
    }
    ctx.out << "fix-free: yes\n";
    return kSuccess;
}

struct OracleArgs {
    std::string lengths;
    std::uint64_t max_nodes = SearchBudget{}.max_nodes;
    unsigned max_len = SearchBudget{}.max_length;
};

int cmd_oracle(const Context& ctx, const OracleArgs& a) {
    const LengthVector v = parse_length_vector(read_text(ctx, a.lengths));
    const SearchBudget budget{a.max_nodes, a.max_len};
    const SearchResult r = exists_fixfree(v, budget);
    switch (r.status) {
        case SearchStatus::Exists:
            ctx.out << "# fix-free code exists (" << r.nodes << " nodes)\n"
                    << format_code_table(auto_named(*r.code));
            return kSuccess;
        case SearchStatus::NotExists:
            ctx.out << "no fix-free code exists\n";
            domain_failure(ctx, "not-exists",
                           "exhaustive search found no fix-free code with lengths " +
                               v.to_string() + " (" + std::to_string(r.nodes) + " nodes)");
            break;
        case SearchStatus::Inconclusive:
            domain_failure(ctx, "inconclusive",
                           "search budget of " + std::to_string(a.max_nodes) +
                               " nodes exhausted; raise --max-nodes");
            break;
    }
    return kDomainFailure;
}

struct EncodeArgs {
    std::string code;
    std::string in;
    std::string out;
};

int cmd_encode(const Context& ctx, const EncodeArgs& a) {
    const CodeTable table = load_table(ctx, a.code);
    const auto msg = parse_message(read_text(ctx, a.in));
    try {
        const BitStream bits = encode(table, msg);
        const auto bytes = serialize(bits);
        write_bytes(a.out, std::string(bytes.begin(), bytes.end()));
    } catch (const UnknownSymbol& e) {
        domain_failure(ctx, "unknown-symbol", e.what());
    }
    return kSuccess;
}

struct DecodeArgs {
    std::string code;
    std::string in;
    std::string out;
    std::string direction = "forward";
};

int cmd_decode(const Context& ctx, const DecodeArgs& a) {
    const CodeTable table = load_table(ctx, a.code);
    const std::string raw = read_bytes(ctx, a.in, true);
    const BitStream bits = parse_bitstream(
        std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
    try {
        const auto msg = a.direction == "backward" ? decode_backward(table, bits)
                                                   : decode_forward(table, bits);
        emit(ctx, a.out, format_message(msg));
    } catch (const DecodeError& e) {
        domain_failure(ctx, "decode", e.what());
    }
    return kSuccess;
}

struct AnalyzeArgs {
    std::string dist;
    std::string code;
};

int cmd_analyze(const Context& ctx, const AnalyzeArgs& a) {
    const Distribution d = load_distribution(ctx, a.dist);
    const auto entries = parse_code_table(read_text(ctx, a.code));
    std::unordered_map<std::string, Word> by_symbol;
    std::vector<Word> words;
    for (const auto& e : entries) {
        by_symbol.emplace(e.symbol, e.word);
        words.push_back(e.word);
    }
    std::vector<unsigned> lengths;
    std::vector<std::uint64_t> counts;
    for (const auto& s : d.symbols()) {
        const auto it = by_symbol.find(s);
        if (it == by_symbol.end()) throw UsageError("symbol '" + s + "' has no codeword in the table");
        lengths.push_back(it->second.length());
    }
    for (const Word& w : words) {
        if (counts.size() < w.length()) counts.resize(w.length(), 0);
        ++counts[w.length() - 1];
    }

    DesignReport r;
    r.lengths = lengths;
    r.kraft = kraft_sum(LengthVector(std::move(counts)));
    r.avg_length = avg_length(lengths, d);
    r.entropy = entropy(d);
    r.redundancy = redundancy(r);
    r.bound = redundancy_bound();
    r.input_sum = d.input_sum();
    ctx.out << r.to_text() << "fix-free    " << (verify_fixfree(words) ? "yes" : "no") << '\n';
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    const Context ctx{in, out, err};
    CLI::App app{"Construct, design, verify and use binary fix-free codes", "fixfree"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct_cmd = app.add_subcommand("construct", "Build a fix-free code from a length vector");
    construct_cmd->add_option("--lengths", construct_args.lengths, "Length-vector file (k1 ... kn)")->required();
    construct_cmd->add_option("--out", construct_args.out, "Write the code table here instead of stdout");
    construct_cmd->add_flag("--trace", construct_args.trace, "Print one line per construction step to stderr");
    construct_cmd->add_option("--max-len", construct_args.max_len, "Maximum codeword length");

    DesignArgs design_args;
    auto* design_cmd = app.add_subcommand("design", "Design a fix-free code for a source distribution");
    design_cmd->add_option("--dist", design_args.dist, "Distribution file (symbol<TAB>probability)")->required();
    design_cmd->add_option("--out", design_args.out, "Write the code table here; the report goes to stdout");
    design_cmd->add_flag("--kv", design_args.kv, "Append a key=value report block");
    design_cmd->add_option("--max-len", design_args.max_len, "Maximum codeword length");

    std::string verify_code;
    auto* verify_cmd = app.add_subcommand("verify", "Check that a code table is fix-free");
    verify_cmd->add_option("--code", verify_code, "Code-table file")->required();

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "Decide existence of a fix-free code by exhaustive search");
    oracle_cmd->add_option("--lengths", oracle_args.lengths, "Length-vector file")->required();
    oracle_cmd->add_option("--max-nodes", oracle_args.max_nodes, "Search node budget")->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--max-len", oracle_args.max_len, "Search length cap")
        ->check(CLI::Range(1u, kMaxSearchLength));

    EncodeArgs encode_args;
    auto* encode_cmd = app.add_subcommand("encode", "Encode a message file into a bitstream file");
    encode_cmd->add_option("--code", encode_args.code, "Code-table file")->required();
    encode_cmd->add_option("--in", encode_args.in, "Message file")->required();
    encode_cmd->add_option("--out", encode_args.out, "Bitstream file")->required();

    DecodeArgs decode_args;
    auto* decode_cmd = app.add_subcommand("decode", "Decode a bitstream file from either end");
    decode_cmd->add_option("--code", decode_args.code, "Code-table file")->required();
    decode_cmd->add_option("--in", decode_args.in, "Bitstream file")->required();
    decode_cmd->add_option("--out", decode_args.out, "Write the message here instead of stdout");
    decode_cmd->add_option("--direction", decode_args.direction, "forward or backward")
        ->check(CLI::IsMember({"forward", "backward"}));

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Entropy, average length and redundancy of a code");
    analyze_cmd->add_option("--dist", analyze_args.dist, "Distribution file")->required();
    analyze_cmd->add_option("--code", analyze_args.code, "Code-table file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*construct_cmd) return cmd_construct(ctx, construct_args);
        if (*design_cmd) return cmd_design(ctx, design_args);
        if (*verify_cmd) return cmd_verify(ctx, verify_code);
        if (*oracle_cmd) return cmd_oracle(ctx, oracle_args);
        if (*encode_cmd) return cmd_encode(ctx, encode_args);
        if (*decode_cmd) return cmd_decode(ctx, decode_args);
        if (*analyze_cmd) return cmd_analyze(ctx, analyze_args);
    } catch (const DomainFailure&) {
        return kDomainFailure;
    } catch (const LengthCapExceeded& e) {
        err << "error: length-cap-exceeded: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const InternalCountingViolation& e) {
        err << "error: internal: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidDistribution& e) {
        err << "error: invalid-distribution: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace fixfree::cli
