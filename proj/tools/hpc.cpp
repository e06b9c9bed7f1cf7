// hpc: hairpin completion toolkit (decide, grammar, growth, enumerate, check).
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hairpin/grammar.hpp"
#include "hairpin/instance_io.hpp"
#include "hairpin/oracle.hpp"
#include "hairpin/report.hpp"

namespace {

using namespace hairpin;

constexpr int exit_input_error = 2;
constexpr int exit_check_failed = 3;

struct Flags {
    std::string path;
    int kappa = 0;  // 0 keeps the file's value
    std::size_t max_len = 8;
    double tolerance = 1e-6;
    bool no_fast_path = false;
    std::string orientation = "both";
};

std::size_t length_cap() {
    if (const char* env = std::getenv("HPC_MAX_LEN")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw InputError(std::string("HPC_MAX_LEN: not a length: ") + env);
        }
    }
    return default_length_cap;
}

DecideOptions decide_options(const Flags& f) {
    DecideOptions o;
    o.fast_path = !f.no_fast_path;
    if (f.orientation == "forward") o.orientation = OrientationMode::forward;
    else if (f.orientation == "mirrored") o.orientation = OrientationMode::mirrored;
    return o;
}

ParsedInstance load(const Flags& f) {
    ParsedInstance p = parse_instance(f.path);
    if (f.kappa != 0) {
        if (f.kappa < 1) throw InputError("--kappa must be at least 1");
        p.instance = make_instance(f.kappa, p.instance.dfa1, p.instance.dfa2);
    }
    return p;
}

void print(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int run_decide(const Flags& f) {
    const ParsedInstance p = load(f);
    Json doc = verdict_json(decide(p.instance, decide_options(f)), p.instance.alphabet);
    doc["input_notes"] = p.notes;
    print(doc);
    return 0;
}

int run_grammar(const Flags& f) {
    const ParsedInstance p = load(f);
    const LinearGrammar g = build_grammar(p.instance);
    std::cout << export_grammar(g);
    std::cout << "counts:";
    for (const auto& c : count_by_length(g, f.max_len)) std::cout << ' ' << c.get_str();
    std::cout << '\n';
    const RationalSeries s = grammar_generating_function(g);
    std::cout << "series: (" << to_string(s.numerator) << ") / (" << to_string(s.denominator) << ")\n";
    return 0;
}

int run_growth(const Flags& f) {
    const ParsedInstance p = load(f);
    const HairpinInstance& inst = p.instance;
    const RegularityVerdict v = decide(inst, decide_options(f));
    Json doc = growth_json(growth_report(inst, v, f.tolerance));
    doc["verdict"] = to_string(v.verdict);
    doc["series"] = Json{{"completion", series_json(grammar_generating_function(build_grammar(inst)))},
                         {"L1", series_json(generating_function(inst.dfa1))},
                         {"ovL2", series_json(generating_function(inst.dfa2))}};
    print(doc);
    return 0;
}

int run_enumerate(const Flags& f) {
    const ParsedInstance p = load(f);
    const std::size_t cap = length_cap();
    const LinearGrammar g = build_grammar(p.instance);
    for (const Word& w : enumerate_grammar(g, f.max_len, cap)) std::cout << p.instance.alphabet.format(w) << '\n';
    return 0;
}

int run_check(const Flags& f) {
    const ParsedInstance p = load(f);
    const std::size_t cap = length_cap();
    if (f.max_len > cap) throw LengthCapError(f.max_len, cap);
    const CrossCheckReport r = cross_validate(p.instance, f.max_len, decide_options(f));
    print(crosscheck_json(r));
    return r.passed() ? 0 : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hairpin completion of regular languages: regularity, grammar, growth"};
    app.require_subcommand(1);
    Flags flags;
    auto add_common = [&flags](CLI::App* sub) {
        sub->add_option("instance", flags.path, "instance JSON file")->required();
        sub->add_option("--kappa", flags.kappa, "override the primer length");
        sub->add_option("--max-len", flags.max_len, "length bound for enumeration and counts");
        sub->add_option("--tolerance", flags.tolerance, "tolerance for growth comparisons");
        sub->add_flag("--no-fast-path", flags.no_fast_path, "direct scans in tests 2 and 3");
        sub->add_option("--orientation", flags.orientation, "orientations to test")
            ->check(CLI::IsMember({"both", "forward", "mirrored"}));
    };
    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Flags&);
    };
    const Command commands[] = {
        {"decide", "decide regularity and print the verdict", run_decide},
        {"grammar", "print the linear grammar, length counts and series", run_grammar},
        {"growth", "print growth indicators and series", run_growth},
        {"enumerate", "list completion words up to --max-len", run_enumerate},
        {"check", "cross-validate oracle, grammar, decomposition and witness", run_check},
    };
    std::vector<std::pair<CLI::App*, int (*)(const Flags&)>> subs;
    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub);
        subs.emplace_back(sub, c.run);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }
    try {
        for (auto& [sub, run] : subs) {
            if (sub->parsed()) return run(flags);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
