#include "moncat/json_io.hpp"

#include <cctype>

#include "moncat/error.hpp"

namespace moncat {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what); }

int get_dim(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        bad(std::string("expected integer field \"") + key + "\"");
    int v = j[key].get<int>();
    if (v < 0) bad(std::string("field \"") + key + "\" must be nonnegative");
    return v;
}

const json& get_array(const json& j, const char* key, std::size_t size) {
    if (!j.contains(key) || !j[key].is_array())
        bad(std::string("expected array field \"") + key + "\"");
    if (j[key].size() != size)
        bad(std::string("field \"") + key + "\" has size " + std::to_string(j[key].size()) +
            ", expected " + std::to_string(size));
    return j[key];
}

} // namespace

json monotone_to_json(const MonotoneMap& f) {
    return json{{"m", f.m}, {"n", f.n}, {"table", f.table}};
}

MonotoneMap monotone_from_json(const json& j) {
    MonotoneMap f;
    f.m = get_dim(j, "m");
    f.n = get_dim(j, "n");
    for (const json& e : get_array(j, "table", static_cast<std::size_t>(f.m))) {
        if (!e.is_number_integer()) bad("table entries must be integers");
        f.table.push_back(e.get<int>());
    }
    f.validate();
    return f;
}

namespace {

template <typename Mat, typename Entry>
json matrix_to_json(const Mat& r) {
    json rows = json::array();
    for (int i = 0; i < r.m; ++i) {
        json row = json::array();
        for (int j = 0; j < r.n; ++j) row.push_back(static_cast<Entry>(r.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"m", r.m}, {"n", r.n}, {"rows", std::move(rows)}};
}

} // namespace

json multirel_to_json(const Multirelation& r) { return matrix_to_json<Multirelation, std::uint64_t>(r); }

Multirelation multirel_from_json(const json& j) {
    Multirelation r(get_dim(j, "m"), get_dim(j, "n"));
    const json& rows = get_array(j, "rows", static_cast<std::size_t>(r.m));
    for (int i = 0; i < r.m; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(r.n))
            bad("row " + std::to_string(i) + " must be an array of " + std::to_string(r.n));
        for (int k = 0; k < r.n; ++k) {
            const json& e = row[static_cast<std::size_t>(k)];
            if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0))
                bad("multirelation entries must be nonnegative integers");
            r.at(i, k) = e.get<std::uint64_t>();
        }
    }
    return r;
}

json rel_to_json(const Relation& r) { return matrix_to_json<Relation, int>(r); }

Relation rel_from_json(const json& j) {
    Relation r(get_dim(j, "m"), get_dim(j, "n"));
    const json& rows = get_array(j, "rows", static_cast<std::size_t>(r.m));
    for (int i = 0; i < r.m; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(r.n))
            bad("row " + std::to_string(i) + " must be an array of " + std::to_string(r.n));
        for (int k = 0; k < r.n; ++k) {
            const json& e = row[static_cast<std::size_t>(k)];
            if (!e.is_number_integer() || (e.get<std::int64_t>() != 0 && e.get<std::int64_t>() != 1))
                bad("relation entries must be 0 or 1");
            r.at(i, k) = static_cast<std::uint8_t>(e.get<int>());
        }
    }
    return r;
}

namespace {

json game_to_letters(const Game& g) {
    json out = json::array();
    for (std::int8_t p : g.pol) out.push_back(p < 0 ? "O" : "P");
    return out;
}

Game letters_to_game(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        bad(std::string("expected array field \"") + key + "\"");
    std::vector<std::int8_t> pols;
    for (const json& e : j[key]) {
        if (!e.is_string()) bad("boundary letters must be strings");
        std::string s = e.get<std::string>();
        if (s == "O") pols.push_back(-1);
        else if (s == "P") pols.push_back(1);
        else bad("boundary letter must be \"O\" or \"P\", found \"" + s + "\"");
    }
    return game_filiform(pols);
}

std::string move_name(int idx, int src_size) {
    return idx < src_size ? "L" + std::to_string(idx) : "R" + std::to_string(idx - src_size);
}

int parse_move(const json& e, int src_size, int tgt_size) {
    if (!e.is_string()) bad("link endpoints must be strings like \"L0\" or \"R1\"");
    std::string s = e.get<std::string>();
    if (s.size() < 2 || (s[0] != 'L' && s[0] != 'R'))
        bad("link endpoint \"" + s + "\" must start with L or R");
    int idx = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            bad("link endpoint \"" + s + "\" has a malformed index");
        idx = idx * 10 + (s[i] - '0');
    }
    const int limit = s[0] == 'L' ? src_size : tgt_size;
    if (idx >= limit) bad("link endpoint \"" + s + "\" is out of range");
    return s[0] == 'L' ? idx : src_size + idx;
}

} // namespace

json strategy_to_json(const Strategy& s) {
    json links = json::array();
    for (auto [i, j] : strategy_links(s))
        links.push_back(json::array({move_name(i, s.src.size()), move_name(j, s.src.size())}));
    return json{{"source", game_to_letters(s.src)},
                {"target", game_to_letters(s.tgt)},
                {"links", std::move(links)}};
}

Strategy strategy_from_json(const json& j) {
    Game src = letters_to_game(j, "source");
    Game tgt = letters_to_game(j, "target");
    if (!j.contains("links") || !j["links"].is_array()) bad("expected array field \"links\"");
    std::vector<std::pair<int, int>> pairs;
    for (const json& e : j["links"]) {
        if (!e.is_array() || e.size() != 2) bad("each link must be a [from, to] pair");
        int from = parse_move(e[0], src.size(), tgt.size());
        int to = parse_move(e[1], src.size(), tgt.size());
        pairs.emplace_back(from, to);
    }
    Strategy s = make_strategy(std::move(src), std::move(tgt), pairs);
    try {
        validate_strategy(s);
    } catch (const Error& err) {
        bad(std::string("invalid strategy: ") + err.what());
    }
    return s;
}

} // namespace moncat
