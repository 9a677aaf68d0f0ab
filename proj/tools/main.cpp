// Command-line front end: every library operation with text I/O.
//
// Exit codes: 0 success, 1 witness verification failure, 2 input or usage
// error, 3 size limit exceeded.  Diagnostics go to stderr; results to stdout.

#include <CLI11.hpp>
#include <thompson/thompson.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace thompson;

std::string slurp(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// "-" means stdin, which can back at most one input per invocation.
std::string read_input(const std::string& path, bool& used_stdin) {
    if (path == "-") {
        if (used_stdin) fail(errc::parse_error, "stdin can supply only one input");
        used_stdin = true;
        return slurp(std::cin);
    }
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    return slurp(in);
}

FElement read_element(const std::string& path, bool& used_stdin) {
    return parse_element(read_input(path, used_stdin));
}

std::vector<std::string> read_lines(const std::string& path, bool& used_stdin) {
    std::istringstream in(read_input(path, used_stdin));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    return lines;
}

// Without an explicit arity, letters keep their alphabet positions and the
// arity is the smallest one that fits.
FreeWord parse_word_inferred(const std::string& text) {
    const FreeWord probe = parse_word(text, std::numeric_limits<int>::max());
    int arity = 1;
    for (const Letter& l : probe.letters()) arity = std::max(arity, l.index + 1);
    return FreeWord::from_letters(probe.letters(), arity);
}

void print_tuple(std::ostream& out, const std::vector<FElement>& tuple, int arity) {
    out << "tuple:\n";
    for (std::size_t g = 0; g < tuple.size(); ++g) {
        const FreeWord name = FreeWord::from_letters({{static_cast<int>(g), 1}}, arity);
        out << "generator " << to_string(name) << ":\n";
        for (const Breakpoint& b : tuple[g].breakpoints())
            out << "  " << to_string(b.x) << " " << to_string(b.y) << "\n";
    }
}

// Per-word summary for multi-word runs; the shared tuple is printed once.
void print_brief(std::ostream& out, const WitnessReport& r) {
    out << "word: " << to_string(r.word) << "\n";
    out << "beta:";
    for (const DyadicRational& b : r.beta) out << " " << to_string(b);
    out << "\n";
    out << "moved_from: " << to_string(r.moved_from) << "\n";
    out << "moved_to: " << to_string(r.moved_to) << "\n";
    out << "verified: " << (r.verified ? "true" : "false") << "\n";
}

int print_multi(const MultiWitness& result, int arity) {
    print_tuple(std::cout, result.tuple, arity);
    bool all_verified = true;
    for (const WitnessReport& r : result.reports) {
        std::cout << "\n";
        print_brief(std::cout, r);
        all_verified = all_verified && r.verified;
    }
    if (!all_verified) std::cerr << "error: some reports are not verified\n";
    return all_verified ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in Thompson's group F"};
    app.require_subcommand(1);

    auto* cmd_gen = app.add_subcommand("gen", "Print the standard generator x_i");
    int gen_index = 0;
    cmd_gen->add_option("index", gen_index, "Generator index i >= 0")->required();

    auto* cmd_eval = app.add_subcommand("eval", "Evaluate an element at a dyadic point");
    std::string eval_file, eval_point;
    cmd_eval->add_option("element", eval_file, "Element file, or - for stdin")->required();
    cmd_eval->add_option("point", eval_point, "Dyadic rational in [0,1]")->required();

    auto* cmd_compose = app.add_subcommand("compose", "Print f after g (right factor acts first)");
    std::string compose_f, compose_g;
    cmd_compose->add_option("f", compose_f)->required();
    cmd_compose->add_option("g", compose_g)->required();

    auto* cmd_inverse = app.add_subcommand("inverse", "Print the inverse element");
    std::string inverse_file;
    cmd_inverse->add_option("element", inverse_file)->required();

    auto* cmd_equal = app.add_subcommand("equal", "Compare two elements exactly");
    std::string equal_f, equal_g;
    cmd_equal->add_option("f", equal_f)->required();
    cmd_equal->add_option("g", equal_g)->required();

    auto* cmd_interp = app.add_subcommand(
        "interp", "Element mapping one dyadic partition onto another, point by point");
    std::string interp_source, interp_target;
    cmd_interp->add_option("source", interp_source, "Partition, e.g. \"0 1/2 1\"")->required();
    cmd_interp->add_option("target", interp_target, "Partition of the same size")->required();

    auto* cmd_word_eval =
        app.add_subcommand("word-eval", "Substitute elements for generators in a word");
    std::string word_eval_word;
    std::vector<std::string> word_eval_files;
    cmd_word_eval->add_option("word", word_eval_word)->required();
    cmd_word_eval->add_option("elements", word_eval_files, "One file per generator")
        ->required()
        ->expected(-1);

    auto* cmd_witness =
        app.add_subcommand("witness", "Tuple at which the given word does not vanish");
    std::string witness_word;
    int witness_arity = 0;
    cmd_witness->add_option("word", witness_word)->required();
    cmd_witness->add_option("--arity", witness_arity, "Number of generators (default: inferred)");

    auto* cmd_multi =
        app.add_subcommand("multi-witness", "One tuple witnessing every word in a file");
    std::string multi_file;
    int multi_arity = 0;
    cmd_multi->add_option("words-file", multi_file, "One word per line, or - for stdin")
        ->required();
    cmd_multi->add_option("--arity", multi_arity, "Number of generators")->required();

    auto* cmd_universal = app.add_subcommand(
        "universal-witness", "Tuple witnessing all reduced words below a length bound");
    int universal_arity = 0, universal_max_len = 0;
    std::string universal_dedup = "inversion-and-conjugacy";
    cmd_universal->add_option("--arity", universal_arity, "Number of generators")->required();
    cmd_universal->add_option("--max-len", universal_max_len, "Witness all lengths below this")
        ->required();
    cmd_universal
        ->add_option("--dedup", universal_dedup, "Word classes to keep one representative of")
        ->check(CLI::IsMember({"none", "inversion", "inversion-and-conjugacy"}));

    auto* cmd_combine = app.add_subcommand(
        "combine", "Single word vanishing exactly where every word in a file vanishes");
    std::string combine_file;
    std::size_t combine_limit = 1000000;
    cmd_combine->add_option("words-file", combine_file, "One word per line, or - for stdin")
        ->required();
    cmd_combine->add_option("--size-limit", combine_limit, "Maximum letters in the result");

    auto* cmd_embed =
        app.add_subcommand("embed", "Rewrite a word over n generators in two generators");
    std::string embed_word;
    int embed_arity = 0;
    cmd_embed->add_option("word", embed_word)->required();
    cmd_embed->add_option("--arity", embed_arity, "Number of generators")->required();

    auto* cmd_check =
        app.add_subcommand("check", "Membership verdict, abelianization, derived-subgroup flag");
    std::string check_file;
    cmd_check->add_option("element", check_file, "Breakpoint list, or - for stdin")->required();

    auto* cmd_render = app.add_subcommand("render", "Plot an element as an SVG graph");
    std::string render_file, render_out;
    cmd_render->add_option("element", render_file)->required();
    cmd_render->add_option("--out", render_out, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool used_stdin = false;
    try {
        if (cmd_gen->parsed()) {
            std::cout << to_text(standard_generator(gen_index));
        } else if (cmd_eval->parsed()) {
            const FElement f = read_element(eval_file, used_stdin);
            std::cout << to_string(evaluate(f, parse_dyadic(eval_point))) << "\n";
        } else if (cmd_compose->parsed()) {
            const FElement f = read_element(compose_f, used_stdin);
            const FElement g = read_element(compose_g, used_stdin);
            std::cout << to_text(compose(f, g));
        } else if (cmd_inverse->parsed()) {
            std::cout << to_text(inverse(read_element(inverse_file, used_stdin)));
        } else if (cmd_equal->parsed()) {
            const FElement f = read_element(equal_f, used_stdin);
            const FElement g = read_element(equal_g, used_stdin);
            std::cout << (f == g ? "true" : "false") << "\n";
        } else if (cmd_interp->parsed()) {
            const DyadicPartition source = parse_partition(interp_source);
            const DyadicPartition target = parse_partition(interp_target);
            std::cout << to_text(interpolate(source, target));
        } else if (cmd_word_eval->parsed()) {
            const int arity = static_cast<int>(word_eval_files.size());
            const FreeWord w = parse_word(word_eval_word, arity);
            std::vector<FElement> tuple;
            for (const std::string& path : word_eval_files)
                tuple.push_back(read_element(path, used_stdin));
            std::cout << to_text(evaluate_word(w, tuple));
        } else if (cmd_witness->parsed()) {
            const FreeWord w = witness_arity > 0 ? parse_word(witness_word, witness_arity)
                                                 : parse_word_inferred(witness_word);
            const WitnessReport report = witness_for_word(w);
            std::cout << to_text(report);
            if (!report.verified) std::cerr << "error: report is not verified\n";
            return report.verified ? 0 : 1;
        } else if (cmd_multi->parsed()) {
            std::vector<FreeWord> words;
            for (const std::string& line : read_lines(multi_file, used_stdin))
                words.push_back(parse_word(line, multi_arity));
            std::sort(words.begin(), words.end(), length_lex_less);
            return print_multi(multi_witness(words, multi_arity), multi_arity);
        } else if (cmd_universal->parsed()) {
            Dedup dedup = Dedup::inversion_and_conjugacy;
            if (universal_dedup == "none") dedup = Dedup::none;
            if (universal_dedup == "inversion") dedup = Dedup::inversion;
            return print_multi(universal_witness(universal_arity, universal_max_len, dedup),
                               universal_arity);
        } else if (cmd_combine->parsed()) {
            std::vector<FreeWord> words;
            for (const std::string& line : read_lines(combine_file, used_stdin))
                words.push_back(parse_word_inferred(line));
            std::cout << to_string(combine_identity(words, combine_limit)) << "\n";
        } else if (cmd_embed->parsed()) {
            const FreeWord w = parse_word(embed_word, embed_arity);
            std::cout << to_string(embed_two_vars(w)) << "\n";
        } else if (cmd_check->parsed()) {
            // Lexical errors are usage errors; membership failures are verdicts.
            std::istringstream in(read_input(check_file, used_stdin));
            std::vector<Breakpoint> points;
            std::string xs, ys;
            while (in >> xs) {
                if (!(in >> ys)) fail(errc::parse_error, "odd number of coordinates");
                points.push_back({parse_dyadic(xs), parse_dyadic(ys)});
            }
            try {
                const FElement f = FElement::from_breakpoints(points);
                const auto [a, b] = abelianization(f);
                std::cout << "member: true\n";
                std::cout << "abelianization: (" << a << ", " << b << ")\n";
                std::cout << "derived_subgroup: " << (in_derived_subgroup(f) ? "true" : "false")
                          << "\n";
            } catch (const error& e) {
                std::cout << "member: false\n";
                std::cout << "reason: " << e.what() << "\n";
            }
        } else if (cmd_render->parsed()) {
            const FElement f = read_element(render_file, used_stdin);
            std::ofstream out(render_out);
            if (!out) fail(errc::parse_error, "cannot write '" + render_out + "'");
            out << render_svg(f);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::size_limit_exceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
