#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "diffhier/automata.hpp"
#include "diffhier/cyclic.hpp"
#include "diffhier/hierarchy.hpp"
#include "diffhier/json_io.hpp"
#include "diffhier/regex.hpp"
#include "diffhier/render.hpp"
#include "diffhier/syntactic.hpp"

namespace dhier {

using namespace diffhier;

namespace {

struct Request {
    std::vector<std::string> regexes;
    std::string alphabet;
    std::vector<std::string> dfas;
    std::vector<std::string> chains;
    std::string lattice = "shuffle";
    std::size_t max_level = kDefaultMaxLevel;
    bool json = false;
    std::string batch;
    std::string chain_op;
    std::string subset;
};

// A path, "-" for stdin, or inline JSON.
std::string read_file(const std::string& path) {
    if (!path.empty() && path.front() == '{')
        return path;
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
    }
}

// Letters occurring in a regex, used when --alphabet is absent.
Alphabet inferred_alphabet(const std::string& regex) {
    std::string letters;
    for (char c : regex) {
        if (std::string_view("01+-*() \t\n").find(c) == std::string_view::npos &&
            letters.find(c) == std::string::npos)
            letters += c;
    }
    if (letters.empty())
        throw InvalidArgument("cannot infer an alphabet from '" + regex + "'; pass --alphabet");
    return Alphabet(letters);
}

Alphabet regex_alphabet(const Request& req, const std::string& regex, const std::optional<Alphabet>& fallback) {
    if (!req.alphabet.empty())
        return Alphabet(req.alphabet);
    if (fallback)
        return *fallback;
    return inferred_alphabet(regex);
}

std::vector<Dfa> languages(const Request& req, const std::optional<Alphabet>& fallback = std::nullopt) {
    std::vector<Dfa> out;
    for (const std::string& r : req.regexes)
        out.push_back(compile(r, regex_alphabet(req, r, fallback)));
    for (const std::string& path : req.dfas)
        out.push_back(dfa_from_json(read_json(path)));
    return out;
}

Dfa language(const Request& req, const std::optional<Alphabet>& fallback = std::nullopt) {
    std::vector<Dfa> all = languages(req, fallback);
    if (all.size() != 1)
        throw InvalidArgument("expected exactly one input language (--regex or --dfa)");
    return all.front();
}

void print_terms(std::ostream& out, const std::vector<Dfa>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i)
        out << "L" << i + 1 << " = " << describe(terms[i]) << '\n';
}

void print_chain(std::ostream& out, const Request& req, const DifferenceChain& chain) {
    if (req.json) {
        out << to_json(chain).dump(2) << '\n';
        return;
    }
    out << "chain of length " << chain.size();
    if (!chain.lattice_tag().empty())
        out << " over " << chain.lattice_tag();
    out << '\n';
    print_terms(out, chain.terms());
}

int cmd_compile(const Request& req, std::ostream& out) {
    out << to_json(language(req)).dump(2) << '\n';
    return kSuccess;
}

int cmd_monoid(const Request& req, std::ostream& out) {
    const Dfa l = language(req);
    const Stamp stamp = syntactic_stamp(l);
    const ElementSet image = syntactic_image(stamp, l);
    if (req.json) {
        out << monoid_to_json(stamp, &image).dump(2) << '\n';
        return kSuccess;
    }
    const Monoid& m = stamp.monoid();
    out << "syntactic monoid: " << m.size() << " elements\n\n" << render_table(m) << '\n' << render_eggbox(m);
    out << "image: {";
    auto members = image.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        out << (i ? ", " : "") << m.name(members[i]);
    out << "}\n";
    auto zero = m.zero();
    out << "zero: " << (zero ? m.name(*zero) : "none") << '\n';
    out << "J-depth: " << j_depth(m) << '\n';
    PredicateReport p = predicates(stamp, image);
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "shuffle ideal: " << yes(p.shuffle_ideal) << '\n'
        << "piecewise testable: " << yes(p.piecewise_testable) << '\n'
        << "idempotent and commutative: " << yes(p.idempotent_commutative) << '\n'
        << "x^ω <= 1: " << yes(p.copolg) << '\n'
        << "efe = e implies ef = e = fe: " << yes(p.bpolg) << '\n';
    return kSuccess;
}

int decision_code(const ApproximationReport& report) {
    return report.status == ApproximationStatus::MemberAtLevel ? kSuccess : kNegative;
}

std::string verdict(const ApproximationReport& report) {
    std::string s(to_string(report.status));
    if (report.status != ApproximationStatus::NotInBooleanClosure)
        s += " " + std::to_string(report.level);
    return s;
}

int cmd_approx(const Request& req, std::ostream& out) {
    const ApproximationReport report = decide_level(language(req), req.lattice, req.max_level);
    if (req.json) {
        out << to_json(report).dump(2) << '\n';
        return decision_code(report);
    }
    out << "lattice: " << req.lattice << '\n';
    print_terms(out, report.sequence.empty() ? report.chain.terms() : report.sequence);
    out << "status: " << verdict(report) << '\n';
    out << "iterations: " << report.iterations << '\n';
    if (!report.reading.empty())
        out << "reading: " << report.reading << '\n';
    if (!report.shortcut.empty())
        out << "shortcut: " << report.shortcut << " (search gave " << to_string(report.search_status) << ")\n";
    return decision_code(report);
}

int cmd_level(const Request& req, std::ostream& out) {
    const ApproximationReport report = decide_level(language(req), req.lattice, req.max_level);
    if (req.json) {
        Json j{{"status", std::string(to_string(report.status))}, {"level", report.level}};
        if (!report.shortcut.empty())
            j["shortcut"] = report.shortcut;
        out << j.dump(2) << '\n';
    } else {
        out << verdict(report) << '\n';
    }
    return decision_code(report);
}

std::vector<DifferenceChain> read_chains(const Request& req) {
    std::optional<Alphabet> alphabet;
    if (!req.alphabet.empty())
        alphabet = Alphabet(req.alphabet);
    std::vector<DifferenceChain> chains;
    for (const std::string& path : req.chains)
        chains.push_back(chain_from_json(read_json(path), alphabet));
    return chains;
}

int cmd_chain(const Request& req, std::ostream& out) {
    std::vector<DifferenceChain> chains = read_chains(req);
    auto expect = [&](std::size_t n) {
        if (chains.size() != n)
            throw InvalidArgument("chain " + req.chain_op + " expects " + std::to_string(n) + " --chain file(s)");
    };
    if (req.chain_op == "eval") {
        expect(1);
        const Dfa value = eval_chain(chains.front());
        if (req.regexes.empty() && req.dfas.empty()) {
            if (req.json)
                out << to_json(value).dump(2) << '\n';
            else
                out << describe(value) << '\n';
            return kSuccess;
        }
        const Dfa target = language(req, chains.front().alphabet());
        const std::optional<Word> diff = separating_word(value, target);
        if (req.json) {
            Json j{{"equivalent", !diff}};
            if (diff)
                j["separating_word"] = format_word(*diff);
            out << j.dump(2) << '\n';
        } else {
            out << (diff ? "not equivalent, separated by " + format_word(*diff) : std::string("equivalent")) << '\n';
        }
        return diff ? kNegative : kSuccess;
    }
    if (req.chain_op == "complement") {
        expect(1);
        print_chain(out, req, complement_chain(chains.front()));
    } else if (req.chain_op == "intersect") {
        expect(2);
        print_chain(out, req, intersect_chains(chains[0], chains[1]));
    } else if (req.chain_op == "union") {
        expect(2);
        print_chain(out, req, union_chains(chains[0], chains[1]));
    } else if (req.chain_op == "xor") {
        std::optional<Alphabet> fallback;
        if (!chains.empty())
            fallback = chains.front().alphabet();
        std::vector<Dfa> parts = languages(req, fallback);
        for (const DifferenceChain& c : chains)
            parts.push_back(eval_chain(c));
        print_chain(out, req, from_symmetric_difference(parts));
    } else {
        throw InvalidArgument("unknown chain operation '" + req.chain_op + "'");
    }
    return kSuccess;
}

std::vector<State> parse_subset(const std::string& text) {
    std::vector<State> states;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int q = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            states.push_back(q);
        } catch (const std::logic_error&) {
            throw InvalidArgument("bad state '" + item + "' in --subset");
        }
    }
    return states;
}

int cmd_stab(const Request& req, std::ostream& out) {
    const Dfa dfa = language(req);
    const Dfa stab = req.subset.empty() ? stab_automaton(dfa) : stab_subset(dfa, parse_subset(req.subset));
    if (req.json)
        out << to_json(stab).dump(2) << '\n';
    else
        out << "Stab" << (req.subset.empty() ? "" : "({" + req.subset + "})") << " = " << describe(stab) << '\n';
    return kSuccess;
}

int cmd_cyclic(const Request& req, std::ostream& out) {
    const Dfa l = language(req);
    const PropertyCheck cyclic = is_cyclic(l);
    if (!cyclic.holds) {
        if (req.json)
            out << Json{{"cyclic", false}, {"violation", to_json(cyclic)}}.dump(2) << '\n';
        else
            out << "not cyclic: " << cyclic.condition << " fails, " << cyclic.detail << '\n';
        return kNegative;
    }
    const CyclicLevelReport report = cyclic_level(l);
    const StronglyCyclicHull hull = least_strongly_cyclic(l);
    if (req.json) {
        Json j = to_json(report);
        j["least_strongly_cyclic"] = to_json(hull.language);
        if (hull.no_zero)
            j["no_zero"] = true;
        out << j.dump(2) << '\n';
        return kSuccess;
    }
    out << "cyclic: yes\n"
        << "strongly cyclic: " << (report.strongly_cyclic ? "yes" : "no") << '\n'
        << "ell: " << report.ell << '\n'
        << "witness chain: (";
    for (std::size_t i = 0; i < report.witness_names.size(); ++i)
        out << (i ? ", " : "") << report.witness_names[i];
    out << ")\n";
    print_terms(out, report.chain.terms());
    out << "least strongly cyclic superset: " << describe(hull.language);
    if (hull.no_zero)
        out << " (syntactic monoid has no zero)";
    out << '\n';
    return kSuccess;
}

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
    std::istringstream lines(read_file(path));
    std::vector<std::string> commands;
    for (std::string line; std::getline(lines, line);) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        commands.push_back(line);
    }
    struct Result {
        int code;
        std::string out, err;
    };
    std::vector<std::future<Result>> jobs;
    for (const std::string& command : commands) {
        jobs.push_back(std::async(std::launch::async, [command] {
            std::ostringstream o, e;
            int code = run_line(command, o, e);
            return Result{code, o.str(), e.str()};
        }));
    }
    int status = kSuccess;
    for (auto& job : jobs) {
        Result r = job.get();
        out << r.out;
        err << r.err;
        if (r.code == kError || (r.code == kNegative && status == kSuccess))
            status = r.code;
    }
    return status;
}

void add_input_options(CLI::App* cmd, Request& req) {
    cmd->add_option("--regex", req.regexes, "Regular expression (+ union, - difference, * star, 1 empty word, 0 empty set)");
    cmd->add_option("--alphabet", req.alphabet, "Alphabet letters, e.g. abc (default: letters of the regex)");
    cmd->add_option("--dfa", req.dfas, "Automaton in JSON: a file, - for stdin, or inline");
    cmd->add_flag("--json", req.json, "Machine-readable output");
}

template <typename Parse>
int dispatch(Parse&& parse, std::ostream& out, std::ostream& err) {
    Request req;
    CLI::App app("Difference hierarchies of regular languages", "dhier");
    app.require_subcommand(0, 1);
    app.add_option("--batch", req.batch, "Run one command per line of a file, concurrently; outputs keep input order");

    CLI::App* compile_cmd = app.add_subcommand("compile", "Compile a regex to a minimal automaton (JSON)");
    CLI::App* monoid_cmd = app.add_subcommand("monoid", "Syntactic monoid, order and predicates");
    CLI::App* approx_cmd = app.add_subcommand("approx", "Best approximation chain and level");
    CLI::App* level_cmd = app.add_subcommand("level", "Level only");
    CLI::App* chain_cmd = app.add_subcommand("chain", "Difference chain algebra");
    CLI::App* stab_cmd = app.add_subcommand("stab", "Stabiliser languages of an automaton");
    CLI::App* cyclic_cmd = app.add_subcommand("cyclic", "Level among strongly cyclic languages");
    for (CLI::App* cmd : {compile_cmd, monoid_cmd, approx_cmd, level_cmd, chain_cmd, stab_cmd, cyclic_cmd})
        add_input_options(cmd, req);
    for (CLI::App* cmd : {approx_cmd, level_cmd}) {
        cmd->add_option("--lattice", req.lattice,
                        "trivial, shuffle, alphabet-star, intersect:<a>,<b>, or co-<name> for complements");
        cmd->add_option("--max-level", req.max_level, "Largest level tried")->check(CLI::PositiveNumber);
    }
    chain_cmd->add_option("op", req.chain_op, "eval, complement, intersect, union or xor")
        ->required()
        ->check(CLI::IsMember({"eval", "complement", "intersect", "union", "xor"}));
    chain_cmd->add_option("--chain", req.chains, "Chain in JSON (file, - or inline); terms may be automata or regex strings");
    stab_cmd->add_option("--subset", req.subset, "Comma-separated states; default: all non-empty subsets");

    try {
        parse(app);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kError;
    }

    try {
        if (!req.batch.empty())
            return run_batch(req.batch, out, err);
        if (compile_cmd->parsed())
            return cmd_compile(req, out);
        if (monoid_cmd->parsed())
            return cmd_monoid(req, out);
        if (approx_cmd->parsed())
            return cmd_approx(req, out);
        if (level_cmd->parsed())
            return cmd_level(req, out);
        if (chain_cmd->parsed())
            return cmd_chain(req, out);
        if (stab_cmd->parsed())
            return cmd_stab(req, out);
        if (cyclic_cmd->parsed())
            return cmd_cyclic(req, out);
        out << app.help();
        return kError;
    } catch (const NotCyclic& e) {
        err << "dhier: " << e.what() << '\n';
        return kNegative;
    } catch (const std::exception& e) {
        err << "dhier: error: " << e.what() << '\n';
        return kError;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    return dispatch([&](CLI::App& app) { app.parse(reversed); }, out, err);
}

int run_line(const std::string& line, std::ostream& out, std::ostream& err) {
    return dispatch([&](CLI::App& app) { app.parse(line, false); }, out, err);
}

} // namespace dhier
