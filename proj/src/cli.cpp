#include "lss/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "lss/automaton.hpp"
#include "lss/bounds.hpp"
#include "lss/closure.hpp"
#include "lss/error.hpp"
#include "lss/oracle.hpp"
#include "lss/power.hpp"
#include "lss/weighted.hpp"
#include "lss/witness.hpp"

namespace lss::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Automaton load_automaton(const std::string& path) {
    try {
        return parse_automaton(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

std::vector<Automaton> load_all(const std::vector<std::string>& paths) {
    std::vector<Automaton> out;
    for (const auto& p : paths) {
        out.push_back(load_automaton(p));
    }
    return out;
}

int print_word(std::ostream& out, const Alphabet& alphabet, const std::optional<Word>& w) {
    if (!w) {
        out << "EMPTY\n";
        return kExitEmpty;
    }
    out << "len " << w->size() << '\n';
    out << "word";
    if (!w->empty()) {
        out << ' ' << format_word(alphabet, *w);
    }
    out << '\n';
    return kExitFound;
}

int print_lss(std::ostream& out, const Alphabet& alphabet, const LssResult& r) {
    return print_word(out, alphabet, r.found() ? std::optional<Word>(r.word) : std::nullopt);
}

int print_cycle(std::ostream& out, const std::optional<CycleWitness>& c) {
    if (!c) {
        out << "EMPTY\n";
        return kExitEmpty;
    }
    out << "len " << c->length() << '\n' << "walk";
    for (Vertex v : c->vertices) {
        out << ' ' << v;
    }
    out << '\n';
    return kExitFound;
}

int print_witness(std::ostream& out, const WitnessBundle& b) {
    for (std::size_t i = 0; i < b.machines.size(); ++i) {
        out << "# machine " << i + 1 << '\n' << serialize_automaton(b.machines[i]);
    }
    if (b.claimed_word) {
        out << "# claimed_word " << format_word(b.machines.front().alphabet(), *b.claimed_word) << '\n';
    }
    if (b.claimed_k) {
        out << "# claimed_k " << *b.claimed_k << '\n';
    }
    out << "# claimed_lss " << b.claimed_lss << '\n';
    return kExitFound;
}

int int_param(const std::vector<std::int64_t>& p, std::size_t i) {
    if (p[i] < 1 || p[i] > 1'000'000) {
        throw PreconditionError("witness parameters must be between 1 and 1000000");
    }
    return static_cast<int>(p[i]);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shortest strings of regular-language combinations", "lss"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string file;
    std::string file2;
    std::vector<std::string> files;
    std::optional<std::int64_t> cap;
    std::string name;
    std::vector<std::int64_t> params;
    std::size_t max_len = 0;
    std::optional<Vertex> anchor;
    std::vector<std::string> word_tokens;

    auto* lss_cmd = app.add_subcommand("lss", "Shortest accepted word");
    lss_cmd->add_option("file", file, "automaton file")->required();
    lss_cmd->callback([&] {
        action = [&] {
            const Automaton a = load_automaton(file);
            return print_lss(out, a.alphabet(), shortest_string(a));
        };
    });

    auto* comp_cmd = app.add_subcommand("complement-lss", "Shortest word rejected by the automaton");
    comp_cmd->add_option("file", file, "automaton file")->required();
    comp_cmd->callback([&] {
        action = [&] {
            const Automaton a = load_automaton(file);
            return print_lss(out, a.alphabet(), shortest_string(complement(determinize(a))));
        };
    });

    auto* inter_cmd = app.add_subcommand("intersect", "Shortest word in the intersection");
    inter_cmd->add_option("f1", file, "first automaton")->required();
    inter_cmd->add_option("f2", file2, "second automaton")->required();
    inter_cmd->callback([&] {
        action = [&] {
            const Automaton a = load_automaton(file);
            const Automaton b = load_automaton(file2);
            return print_lss(out, a.alphabet(), shortest_string(product_intersection(a, b)));
        };
    });

    auto* plus_cmd = app.add_subcommand("plus-intersect", "Shortest word in the intersection of positive closures");
    plus_cmd->add_option("f1", file, "first automaton")->required();
    plus_cmd->add_option("f2", file2, "second automaton")->required();
    plus_cmd->callback([&] {
        action = [&] {
            const Automaton a = load_automaton(file);
            const Automaton b = load_automaton(file2);
            return print_lss(out, a.alphabet(), plus_intersection_lss(a, b));
        };
    });

    auto* power_cmd = app.add_subcommand("power", "Shortest word with equal factor counts in every language");
    power_cmd->add_option("files", files, "two or more automata")->required()->expected(2, -1);
    power_cmd->add_option("--cap", cap, "length cap for three or more languages");
    power_cmd->callback([&] {
        action = [&] {
            const auto automata = load_all(files);
            const PowerVerdict v = decide_power_nonempty(automata, cap);
            switch (v.status) {
            case PowerStatus::Nonempty:
                return print_word(out, automata.front().alphabet(), v.witness->word);
            case PowerStatus::Empty:
                out << "EMPTY\n";
                return kExitEmpty;
            case PowerStatus::EmptyWithinCap:
                out << "EMPTY-WITHIN-CAP " << *v.cap << '\n';
                return kExitEmpty;
            }
            return kExitError;
        };
    });

    auto* grammar_cmd = app.add_subcommand("grammar", "Dump the counter grammar of two epsilon-free automata");
    grammar_cmd->add_option("f1", file, "first automaton")->required();
    grammar_cmd->add_option("f2", file2, "second automaton")->required();
    grammar_cmd->callback([&] {
        action = [&] {
            const Cfg g = power_grammar(load_automaton(file), load_automaton(file2));
            out << g.dump();
            return cfg_is_empty(g) ? kExitEmpty : kExitFound;
        };
    });

    auto* witness_cmd = app.add_subcommand("witness", "Print the machines of a tightness family");
    witness_cmd->add_option("family", name, "intersect, unary-intersect, plus, unary-plus, unary-finite")->required();
    witness_cmd->add_option("params", params, "m n (unary-finite takes n)")->required()->expected(1, 2);
    witness_cmd->callback([&] {
        action = [&] {
            const WitnessFamily f = parse_family(name);
            if (f == WitnessFamily::UnaryFinite) {
                if (params.size() != 1) {
                    throw PreconditionError("unary-finite takes one parameter n");
                }
                return print_witness(out, unary_finite_witness(int_param(params, 0)));
            }
            if (params.size() != 2) {
                throw PreconditionError(std::string(family_name(f)) + " takes two parameters m n");
            }
            const int m = int_param(params, 0);
            const int n = int_param(params, 1);
            switch (f) {
            case WitnessFamily::Intersect: return print_witness(out, intersect_witness(m, n));
            case WitnessFamily::UnaryIntersect: return print_witness(out, unary_intersect_witness(m, n));
            case WitnessFamily::Plus: return print_witness(out, plus_intersect_witness(m, n));
            case WitnessFamily::UnaryPlus: return print_witness(out, unary_plus_witness(m, n));
            case WitnessFamily::UnaryFinite: break;
            }
            return kExitError;
        };
    });

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a bound function");
    bounds_cmd->add_option("name", name, "F, G, Gprime, lemma, scalar, power")->required();
    bounds_cmd->add_option("params", params, "integer parameters")->required();
    bounds_cmd->callback([&] {
        action = [&] {
            out << compute_bound(parse_bound_kind(name), params).to_string() << '\n';
            return kExitFound;
        };
    });

    auto* cycle_cmd = app.add_subcommand("cycle", "Zero-weight closed walk in a weighted digraph");
    cycle_cmd->add_option("file", file, "digraph file")->required();
    cycle_cmd->add_option("--anchor", anchor, "vertex the walk must pass through");
    cycle_cmd->add_option("--max-len", max_len, "walk length budget")->required();
    cycle_cmd->callback([&] {
        action = [&] {
            const WeightedDigraph g = parse_digraph(read_file(file));
            return print_cycle(out, find_zero_cycle(g, anchor, max_len));
        };
    });

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
    oracle_cmd->require_subcommand(1);

    auto* o_enum = oracle_cmd->add_subcommand("enumerate", "Accepted words up to a length, one per line");
    o_enum->add_option("file", file, "automaton file")->required();
    o_enum->add_option("max_len", max_len, "length bound")->required();
    o_enum->callback([&] {
        action = [&] {
            const Automaton a = load_automaton(file);
            const auto words = oracle::enumerate_accepted(a, max_len);
            for (const Word& w : words) {
                out << "word";
                if (!w.empty()) {
                    out << ' ' << format_word(a.alphabet(), w);
                }
                out << '\n';
            }
            return words.empty() ? kExitEmpty : kExitFound;
        };
    });

    auto* o_lss = oracle_cmd->add_subcommand("lss", "Shortest accepted word by enumeration");
    o_lss->add_option("file", file, "automaton file")->required();
    o_lss->add_option("max_len", max_len, "length bound")->required();
    o_lss->callback([&] {
        action = [&] {
            const Automaton a = load_automaton(file);
            return print_word(out, a.alphabet(), oracle::brute_lss(a, max_len));
        };
    });

    auto* o_inter = oracle_cmd->add_subcommand("intersect", "Shortest word accepted by both automata by enumeration");
    o_inter->add_option("f1", file, "first automaton")->required();
    o_inter->add_option("f2", file2, "second automaton")->required();
    o_inter->add_option("max_len", max_len, "length bound")->required();
    o_inter->callback([&] {
        action = [&] {
            const Automaton a = load_automaton(file);
            const Automaton b = load_automaton(file2);
            for (const Word& w : oracle::enumerate_accepted(a, max_len)) {
                if (accepts(b, w)) {
                    return print_word(out, a.alphabet(), w);
                }
            }
            return print_word(out, a.alphabet(), std::nullopt);
        };
    });

    auto* o_power = oracle_cmd->add_subcommand("power", "Shortest balanced word by enumeration");
    o_power->add_option("max_len", max_len, "length bound")->required();
    o_power->add_option("files", files, "automata")->required()->expected(1, -1);
    o_power->callback([&] {
        action = [&] {
            const auto automata = load_all(files);
            return print_word(out, automata.front().alphabet(), oracle::brute_power_lss(automata, max_len));
        };
    });

    auto* o_kset = oracle_cmd->add_subcommand("k-set", "Factor counts k <= cap with the word in L^k");
    o_kset->add_option("file", file, "automaton file")->required();
    o_kset->add_option("cap", max_len, "largest k")->required();
    o_kset->add_option("word", word_tokens, "word tokens");
    o_kset->callback([&] {
        action = [&] {
            const Automaton a = load_automaton(file);
            std::string text;
            for (const auto& t : word_tokens) {
                text += t + ' ';
            }
            const auto ks = oracle::power_k_set(parse_word(a.alphabet(), text), a, max_len);
            out << "k";
            for (std::size_t k : ks) {
                out << ' ' << k;
            }
            out << '\n';
            return ks.empty() ? kExitEmpty : kExitFound;
        };
    });

    auto* o_cycle = oracle_cmd->add_subcommand("cycle", "Shortest anchored zero-weight walk by exhaustive DFS");
    o_cycle->add_option("file", file, "digraph file")->required();
    o_cycle->add_option("anchor", anchor, "anchor vertex")->required();
    o_cycle->add_option("max_len", max_len, "length bound")->required();
    o_cycle->callback([&] {
        action = [&] {
            const WeightedDigraph g = parse_digraph(read_file(file));
            return print_cycle(out, oracle::brute_zero_cycle(g, *anchor, max_len));
        };
    });

    if (!args.empty() && !args.front().starts_with('-') && app.get_subcommand_no_throw(args.front()) == nullptr) {
        err << "lss: unknown command '" << args.front() << "'\n";
        return kExitError;
    }
    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitFound;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitFound;
    } catch (const CLI::ParseError& e) {
        err << "lss: " << e.what() << '\n';
        return kExitError;
    }
    if (!action) {
        err << "lss: no command given\n";
        return kExitError;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        err << "lss: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace lss::cli
