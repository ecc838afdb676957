#include "linposet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linposet/io.hpp"
#include "linposet/levels.hpp"
#include "linposet/map_extend.hpp"
#include "linposet/oracle.hpp"

namespace linposet {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Poset load_poset(const std::string& path) { return parse_poset(read_file(path)); }

std::string class_text(const Poset& p, const std::vector<Index>& members) {
    std::string out = "[";
    for (std::size_t i = 0; i < members.size(); ++i) out += (i ? " " : "") + p.name(members[i]);
    return out + "]";
}

std::string chain_text(const Linearisation& lin) {
    std::string out;
    auto classes = lin.classes_ascending();
    for (std::size_t r = 0; r < classes.size(); ++r) out += (r ? " < " : "") + class_text(lin.source(), classes[r]);
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::MissingTuple:
        case ErrorKind::EmptyInput: return kExitParseError;
        default: return kExitDomainError;
    }
}

struct Options {
    bool json = false;
    bool oracle = false;
    bool dual = false;
    bool domain_dual = false;
    bool codomain_dual = false;
    std::string poset;
    std::string codomain;
    std::string mapping;
    std::string ranks;
    std::string scores;
    std::string mode = "over";
    std::size_t k = 1;
};

int cmd_check(const Options& o, std::ostream& out) {
    const Poset p = load_poset(o.poset);
    const bool linear = is_linear(p);
    const bool lattice = is_lattice(p);
    const std::size_t height = longest_chain_length(p);
    const bool graded = !p.empty() && satisfies_elcc(p);
    const bool equivalent = !p.empty() && linearisations_equivalent(p);
    if (o.json) {
        json j;
        j["elements"] = p.size();
        j["covers"] = p.cover_pairs().size();
        j["linear"] = linear;
        j["lattice"] = lattice;
        j["longest_chain"] = height;
        j["elcc"] = graded;
        j["equivalent"] = equivalent;
        out << j.dump() << "\n";
    } else {
        out << "elements: " << p.size() << "\n"
            << "covers: " << p.cover_pairs().size() << "\n"
            << "linear: " << yes_no(linear) << "\n"
            << "lattice: " << yes_no(lattice) << "\n"
            << "longest chain: " << height << "\n"
            << "elcc: " << yes_no(graded) << "\n"
            << "equivalent linearisations: " << yes_no(equivalent) << "\n";
    }
    return kExitOk;
}

int cmd_levels(const Options& o, std::ostream& out, std::ostream& err) {
    const Poset p = load_poset(o.poset);
    const Direction d = o.dual ? Direction::dual : Direction::primal;
    const Linearisation lin = compute_levels(p, d);
    if (o.json) {
        out << to_json(lin) << "\n";
    } else {
        out << chain_text(lin) << "\n";
    }
    if (o.oracle && !(oracle::brute_levels(p, d) == lin)) {
        err << "oracle disagrees with the level decomposition\n";
        return kExitDomainError;
    }
    return kExitOk;
}

int cmd_elcc(const Options& o, std::ostream& out) {
    const Poset p = load_poset(o.poset);
    const bool graded = satisfies_elcc(p);
    std::vector<std::size_t> lengths;
    oracle::ChainList chains;
    if (o.oracle) {
        chains = oracle::enumerate_maximal_chains(p);
        std::set<std::size_t> distinct;
        for (const auto& c : chains) distinct.insert(c.size());
        lengths.assign(distinct.rbegin(), distinct.rend());
    }
    if (o.json) {
        json j;
        j["elcc"] = graded;
        if (o.oracle) j["chain_lengths"] = lengths;
        out << j.dump() << "\n";
    } else {
        out << "elcc: " << (graded ? "true" : "false") << "\n";
        if (o.oracle) {
            for (const auto& c : chains) {
                for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " < " : "") << p.name(c[i]);
                out << "  (" << c.size() << ")\n";
            }
            out << "chain lengths:";
            for (auto n : lengths) out << " " << n;
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
    const Poset p = load_poset(o.poset);
    const bool eq = linearisations_equivalent(p);
    if (o.json) {
        out << json{{"equivalent", eq}}.dump() << "\n";
    } else {
        out << "equivalent: " << (eq ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_extend(const Options& o, std::ostream& out) {
    const Poset l = load_poset(o.poset);
    const Poset m = load_poset(o.codomain);
    const MappingTable f = parse_mapping(read_file(o.mapping), l, m);
    const Linearisation dlin = compute_levels(l, o.domain_dual ? Direction::dual : Direction::primal);
    const Linearisation clin = compute_levels(m, o.codomain_dual ? Direction::dual : Direction::primal);
    const ExtensionMode mode = o.mode == "under" ? ExtensionMode::under : ExtensionMode::over;
    const ClassMapping cm = extend(f, dlin, clin, mode);
    if (o.json) {
        out << to_json(cm) << "\n";
        return kExitOk;
    }
    const auto dclasses = dlin.classes_ascending();
    const auto cclasses = clin.classes_ascending();
    const std::size_t k = dlin.size();
    for (std::size_t code = 0; code < cm.table.size(); ++code) {
        auto ranks = decode_tuple(code, k, cm.arity);
        std::vector<Level> levels;
        out << (mode == ExtensionMode::over ? "over(" : "under(");
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            out << (i ? ", " : "") << class_text(l, dclasses[ranks[i]]);
            levels.push_back(dlin.level_of_rank(ranks[i]));
        }
        out << ") = " << class_text(m, cclasses[clin.rank_of_level(cm(levels))]) << "\n";
    }
    out << "monotone: " << yes_no(is_class_monotone(cm)) << "\n"
        << "antitone: " << yes_no(is_class_antitone(cm)) << "\n";
    return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const Poset l = load_poset(o.poset);
    const auto ranks = parse_ranks(read_file(o.ranks), l);
    const ImpossibilityWitness w = impossibility_witness(l, ranks);
    if (o.json) {
        out << to_json(w, ranks) << "\n";
        return kExitOk;
    }
    out << "case: " << to_string(w.kind) << "\n"
        << "pair: " << l.name(w.a) << " " << l.name(w.b) << "\n"
        << "map:";
    for (Index x = 0; x < l.size(); ++x) out << " " << l.name(x) << "->" << l.name(w.witness_map(x));
    out << "\nviolation: " << w.violation << "\n"
        << "verified: " << yes_no(w.verify(ranks)) << "\n";
    return kExitOk;
}

int cmd_rank(const Options& o, std::ostream& out) {
    const auto items = parse_scores(read_file(o.scores));
    const RankedGroups ranked = rank_top_k(items, o.k, o.dual ? Direction::dual : Direction::primal);
    if (o.json) {
        out << to_json(ranked) << "\n";
        return kExitOk;
    }
    for (std::size_t g = 0; g < ranked.groups.size(); ++g) {
        out << g + 1 << ". (class " << ranked.groups[g].class_rank << ")";
        for (const auto& item : ranked.groups[g].items) out << " " << item;
        out << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Level-based linearisation of finite posets", "linposet"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Validate a poset and report its basic properties");
    check->add_option("poset", o.poset, "Poset file")->required();

    auto* levels = app.add_subcommand("levels", "Print the level decomposition as a chain of classes");
    levels->add_option("poset", o.poset, "Poset file")->required();
    levels->add_flag("--dual", o.dual, "Strip minimal elements first");
    levels->add_flag("--oracle", o.oracle, "Cross-check against the brute-force definition");

    auto* elcc = app.add_subcommand("elcc", "Decide whether all maximal chains have equal length");
    elcc->add_option("poset", o.poset, "Poset file")->required();
    elcc->add_flag("--oracle", o.oracle, "Also enumerate maximal chains and report their lengths");

    auto* equiv = app.add_subcommand("equiv", "Decide whether primal and dual linearisations coincide");
    equiv->add_option("poset", o.poset, "Poset file")->required();

    auto* ext = app.add_subcommand("extend", "Extend a mapping table to the linearised classes");
    ext->add_option("domain", o.poset, "Domain poset file")->required();
    ext->add_option("codomain", o.codomain, "Codomain poset file")->required();
    ext->add_option("mapping", o.mapping, "Mapping file")->required();
    ext->add_option("--mode", o.mode, "over (max over classes) or under (min)")
        ->required()
        ->check(CLI::IsMember({"over", "under"}));
    ext->add_flag("--domain-dual", o.domain_dual, "Use the dual linearisation of the domain");
    ext->add_flag("--codomain-dual", o.codomain_dual, "Use the dual linearisation of the codomain");

    auto* witness = app.add_subcommand("witness", "Exhibit a monotone mapping a chain projection cannot extend");
    witness->add_option("poset", o.poset, "Lattice file")->required();
    witness->add_option("ranks", o.ranks, "Rank file: NAME RANK per line")->required();

    auto* rank = app.add_subcommand("rank", "Top-k ranking over interval scores");
    rank->add_option("scores", o.scores, "Scores file: ITEM LO HI per line")->required();
    rank->add_option("-k", o.k, "Number of items wanted")->required()->check(CLI::PositiveNumber);
    rank->add_flag("--dual", o.dual, "Use the dual linearisation");

    for (auto* sub : {check, levels, elcc, equiv, ext, witness, rank})
        sub->add_flag("--json", o.json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (levels->parsed()) return cmd_levels(o, out, err);
        if (elcc->parsed()) return cmd_elcc(o, out);
        if (equiv->parsed()) return cmd_equiv(o, out);
        if (ext->parsed()) return cmd_extend(o, out);
        if (witness->parsed()) return cmd_witness(o, out);
        if (rank->parsed()) return cmd_rank(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitParseError;
}

}  // namespace linposet
