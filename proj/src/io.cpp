#include "linposet/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace linposet {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxTableEntries = 1'000'000;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\f\v");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Calls `handle(line_number, content)` for every non-blank line with comments stripped.
template <class Handle>
void for_each_statement(std::string_view text, Handle handle) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) handle(line_no, line);
        start = end + 1;
    }
}

std::string name_token(std::string_view raw, std::size_t line) {
    if (!is_valid_element_name(raw))
        throw Error(ErrorKind::ParseError, "invalid element name '" + std::string(raw) + "'", line);
    return std::string(raw);
}

Index resolve(const Poset& p, std::string_view name, std::size_t line) {
    if (auto i = p.find(name)) return *i;
    throw Error(ErrorKind::UnknownElement, "'" + std::string(name) + "' is not an element", line);
}

}  // namespace

Decimal parse_decimal(std::string_view text, std::size_t line) {
    auto fail = [&] { throw Error(ErrorKind::ParseError, "not a decimal number: '" + std::string(text) + "'", line); };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    auto digits = [](std::string_view d) {
        return std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!digits(whole) || !digits(frac)) fail();

    // cpp_int treats a leading zero as an octal prefix.
    std::string all = std::string(whole) + std::string(frac);
    all.erase(0, std::min(all.find_first_not_of('0'), all.size()));
    boost::multiprecision::cpp_int numerator(all.empty() ? std::string("0") : all);
    boost::multiprecision::cpp_int denominator = boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                                                            static_cast<unsigned>(frac.size()));
    Decimal value(numerator, denominator);
    return negative ? Decimal(-value) : value;
}

Poset parse_poset(std::string_view text) {
    std::vector<std::string> elements;
    std::unordered_set<std::string> seen;
    std::unordered_set<std::string> declared;
    std::vector<NamePair> pairs;
    auto introduce = [&](const std::string& name) {
        if (seen.insert(name).second) elements.push_back(name);
    };

    for_each_statement(text, [&](std::size_t line, std::string_view stmt) {
        if (auto lt = stmt.find('<'); lt != std::string_view::npos) {
            if (stmt.find('<', lt + 1) != std::string_view::npos)
                throw Error(ErrorKind::ParseError, "expected exactly one '<'", line);
            auto lhs = tokens(stmt.substr(0, lt));
            auto rhs = tokens(stmt.substr(lt + 1));
            if (lhs.size() != 1 || rhs.size() != 1)
                throw Error(ErrorKind::ParseError, "expected 'NAME < NAME'", line);
            std::string x = name_token(lhs[0], line);
            std::string y = name_token(rhs[0], line);
            introduce(x);
            introduce(y);
            pairs.emplace_back(std::move(x), std::move(y));
            return;
        }
        auto words = tokens(stmt);
        if (words.size() != 2 || words[0] != "elem")
            throw Error(ErrorKind::ParseError, "expected 'elem NAME' or 'NAME < NAME'", line);
        std::string name = name_token(words[1], line);
        if (!declared.insert(name).second)
            throw Error(ErrorKind::DuplicateElement, "'" + name + "' declared twice", line);
        introduce(name);
    });
    return Poset::build(std::move(elements), pairs);
}

std::string render_poset(const Poset& p) {
    std::string out;
    for (const auto& name : p.names()) out += "elem " + name + "\n";
    for (const auto& [x, y] : p.cover_pairs()) out += p.name(x) + " < " + p.name(y) + "\n";
    return out;
}

MappingTable parse_mapping(std::string_view text, const Poset& domain, const Poset& codomain) {
    std::size_t arity = 0;
    std::vector<Index> outputs;
    std::vector<bool> filled;

    for_each_statement(text, [&](std::size_t line, std::string_view stmt) {
        auto words = tokens(stmt);
        if (arity == 0) {
            if (words.size() != 2 || words[0] != "arity")
                throw Error(ErrorKind::ParseError, "expected 'arity N' header", line);
            auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), arity);
            if (ec != std::errc{} || ptr != words[1].data() + words[1].size() || arity == 0)
                throw Error(ErrorKind::ParseError, "arity must be a positive integer", line);
            const std::size_t entries = tuple_count(domain.size(), arity, kMaxTableEntries);
            outputs.assign(entries, 0);
            filled.assign(entries, false);
            return;
        }
        if (words.size() != arity + 2 || words[arity] != "->")
            throw Error(ErrorKind::ParseError,
                        "expected " + std::to_string(arity) + " argument(s), '->' and a result", line);
        std::vector<Index> xs;
        for (std::size_t i = 0; i < arity; ++i) xs.push_back(resolve(domain, words[i], line));
        const Index y = resolve(codomain, words[arity + 1], line);
        const std::size_t code = encode_tuple(xs, domain.size());
        if (filled[code] && outputs[code] != y)
            throw Error(ErrorKind::ParseError, "conflicting rows for the same arguments", line);
        outputs[code] = y;
        filled[code] = true;
    });

    if (arity == 0) throw Error(ErrorKind::ParseError, "missing 'arity N' header", 1);
    for (std::size_t code = 0; code < filled.size(); ++code) {
        if (filled[code]) continue;
        std::string row;
        for (Index x : decode_tuple(code, domain.size(), arity)) row += domain.name(x) + " ";
        throw Error(ErrorKind::MissingTuple, "no row for '" + row + "->'");
    }
    return MappingTable(domain, codomain, arity, std::move(outputs));
}

std::vector<std::int64_t> parse_ranks(std::string_view text, const Poset& p) {
    std::vector<std::int64_t> ranks(p.size(), 0);
    std::vector<bool> given(p.size(), false);
    for_each_statement(text, [&](std::size_t line, std::string_view stmt) {
        auto words = tokens(stmt);
        if (words.size() != 2) throw Error(ErrorKind::ParseError, "expected 'NAME RANK'", line);
        const Index x = resolve(p, words[0], line);
        std::int64_t r = 0;
        auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), r);
        if (ec != std::errc{} || ptr != words[1].data() + words[1].size())
            throw Error(ErrorKind::ParseError, "rank must be an integer", line);
        if (given[x]) throw Error(ErrorKind::ParseError, "rank for '" + p.name(x) + "' given twice", line);
        ranks[x] = r;
        given[x] = true;
    });
    for (Index x = 0; x < p.size(); ++x)
        if (!given[x]) throw Error(ErrorKind::ParseError, "no rank for '" + p.name(x) + "'");
    return ranks;
}

std::vector<ScoredItem> parse_scores(std::string_view text) {
    std::vector<ScoredItem> items;
    std::unordered_set<std::string> names;
    for_each_statement(text, [&](std::size_t line, std::string_view stmt) {
        auto words = tokens(stmt);
        if (words.size() != 3) throw Error(ErrorKind::ParseError, "expected 'ITEM LO HI'", line);
        ScoredItem item{name_token(words[0], line), parse_decimal(words[1], line), parse_decimal(words[2], line)};
        if (item.lo > item.hi) throw Error(ErrorKind::ParseError, "interval with lo > hi", line);
        if (!names.insert(item.item).second)
            throw Error(ErrorKind::ParseError, "item '" + item.item + "' listed twice", line);
        items.push_back(std::move(item));
    });
    return items;
}

Poset dominance_poset(std::span<const ScoredItem> items, std::vector<Index>& interval_of) {
    std::map<std::pair<Decimal, Decimal>, Index> distinct;
    std::vector<const ScoredItem*> reps;
    interval_of.clear();
    for (const auto& item : items) {
        auto [it, fresh] = distinct.emplace(std::pair{item.lo, item.hi}, reps.size());
        if (fresh) reps.push_back(&item);
        interval_of.push_back(it->second);
    }
    std::vector<std::string> names;
    std::vector<IndexPair> pairs;
    for (Index i = 0; i < reps.size(); ++i) {
        names.push_back("[" + reps[i]->lo.str() + "," + reps[i]->hi.str() + "]");
        for (Index j = 0; j < reps.size(); ++j)
            if (i != j && reps[i]->lo <= reps[j]->lo && reps[i]->hi <= reps[j]->hi) pairs.emplace_back(i, j);
    }
    return Poset::from_indices(std::move(names), pairs);
}

RankedGroups rank_top_k(std::span<const ScoredItem> items, std::size_t k, Direction d) {
    if (items.empty()) throw Error(ErrorKind::EmptyInput, "no scored items");
    if (k == 0) throw Error(ErrorKind::ParseError, "k must be positive");
    std::vector<Index> interval_of;
    const Poset scores = dominance_poset(items, interval_of);
    const Linearisation lin = compute_levels(scores, d);

    std::vector<std::vector<std::string>> by_rank(lin.size());
    for (std::size_t i = 0; i < items.size(); ++i) by_rank[lin.rank(interval_of[i])].push_back(items[i].item);

    RankedGroups ranked{d, k, {}};
    std::size_t emitted = 0;
    for (std::size_t r = lin.size(); r-- > 0 && emitted < k;) {
        emitted += by_rank[r].size();
        ranked.groups.push_back({r, std::move(by_rank[r])});
    }
    return ranked;
}

namespace {

json class_names(const Linearisation& lin) {
    json classes = json::array();
    for (const auto& cls : lin.classes_ascending()) {
        json members = json::array();
        for (Index x : cls) members.push_back(lin.source().name(x));
        classes.push_back(std::move(members));
    }
    return classes;
}

}  // namespace

std::string to_json(const Linearisation& lin) {
    json out;
    out["direction"] = to_string(lin.direction());
    out["classes"] = class_names(lin);
    return out.dump();
}

std::string to_json(const ClassMapping& cm) {
    json out;
    out["mode"] = to_string(cm.mode);
    out["arity"] = cm.arity;
    out["domain"] = {{"direction", to_string(cm.domain.direction())}, {"classes", class_names(cm.domain)}};
    out["codomain"] = {{"direction", to_string(cm.codomain.direction())}, {"classes", class_names(cm.codomain)}};
    // Rows enumerate argument tuples in ascending class order, last argument fastest.
    json rows = json::array();
    const std::size_t k = cm.domain.size();
    for (std::size_t code = 0; code < cm.table.size(); ++code) {
        auto ranks = decode_tuple(code, k, cm.arity);
        std::vector<Level> levels;
        for (std::size_t r : ranks) levels.push_back(cm.domain.level_of_rank(r));
        rows.push_back({{"args", ranks}, {"value", cm.codomain.rank_of_level(cm(levels))}});
    }
    out["table"] = std::move(rows);
    out["monotone"] = is_class_monotone(cm);
    out["antitone"] = is_class_antitone(cm);
    return out.dump();
}

std::string to_json(const RankedGroups& ranked) {
    json out;
    out["direction"] = to_string(ranked.direction);
    out["k"] = ranked.k;
    json groups = json::array();
    for (const auto& g : ranked.groups) groups.push_back({{"class", g.class_rank}, {"items", g.items}});
    out["groups"] = std::move(groups);
    return out.dump();
}

std::string to_json(const ImpossibilityWitness& w, std::span<const std::int64_t> ranks) {
    const Poset& l = w.witness_map.domain();
    json out;
    out["case"] = to_string(w.kind);
    out["pair"] = {l.name(w.a), l.name(w.b)};
    json map = json::object();
    for (Index x = 0; x < l.size(); ++x) map[l.name(x)] = l.name(w.witness_map(x));
    out["map"] = std::move(map);
    out["violation"] = w.violation;
    out["verified"] = w.verify(ranks);
    return out.dump();
}

}  // namespace linposet
