#include <pmramsey/errors.hh>
#include <pmramsey/io.hh>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

using namespace pmramsey;
using nlohmann::json;

namespace
{
    // Next integer token, skipping whitespace; fails loudly on anything else.
    auto next_int(std::istream &in, const char *what) -> long long
    {
        long long v;
        if (! (in >> v))
            throw InvalidInput(std::string("expected an integer for ") + what);
        return v;
    }

    void expect_end(std::istream &in, const char *what)
    {
        std::string rest;
        if (in >> rest)
            throw InvalidInput(std::string("trailing data after ") + what + ": " + rest);
    }

    template <typename F>
    auto guarded(const char *what, F &&f)
    {
        try {
            return f();
        }
        catch (const json::exception &e) {
            throw InvalidInput(std::string("bad ") + what + " JSON: " + e.what());
        }
    }
}

void pmramsey::write_coloring(std::ostream &out, const EdgeColoring &c)
{
    out << c.n() << ' ' << c.r() << '\n';
    for (int i = 0; i + 1 < c.n(); ++i) {
        for (int j = i + 1; j < c.n(); ++j)
            out << (j > i + 1 ? " " : "") << c.color(i, j);
        out << '\n';
    }
}

auto pmramsey::read_coloring(std::istream &in) -> EdgeColoring
{
    auto n = next_int(in, "n");
    auto r = next_int(in, "r");
    if (n < 1 || n > max_vertices || r < 1 || r > 64)
        throw InvalidInput("colouring header out of range");
    EdgeColoring c(static_cast<int>(n), static_cast<int>(r));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto col = next_int(in, "edge colour");
            if (col < 1 || col > r)
                throw InvalidInput("edge colour " + std::to_string(col) + " out of range");
            c.set_color(i, j, static_cast<int>(col));
        }
    expect_end(in, "colouring");
    return c;
}

void pmramsey::write_graph(std::ostream &out, const SimpleGraph &g)
{
    out << g.size() << '\n';
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v))
                out << u + 1 << ' ' << v + 1 << '\n';
}

auto pmramsey::read_graph(std::istream &in) -> SimpleGraph
{
    auto n = next_int(in, "n");
    if (n < 1 || n > max_vertices)
        throw InvalidInput("graph order out of range");
    SimpleGraph g(static_cast<int>(n));
    long long u;
    while (in >> u) {
        auto v = next_int(in, "edge end");
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw InvalidInput("bad edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (! in.eof())
        throw InvalidInput("unexpected token in graph file");
    return g;
}

auto pmramsey::cover_to_json(const BlockCover &c) -> json
{
    json blocks = json::array();
    for (auto b : c.blocks) {
        json members = json::array();
        for (int v : b.members())
            members.push_back(v + 1);
        blocks.push_back(std::move(members));
    }
    return {{"n", c.n}, {"capacities", c.capacities}, {"blocks", std::move(blocks)}};
}

auto pmramsey::cover_from_json(const json &j) -> BlockCover
{
    return guarded("cover", [&] {
        BlockCover c;
        c.n = j.at("n").get<int>();
        c.capacities = j.at("capacities").get<std::vector<int>>();
        if (c.n < 0 || c.n > max_vertices)
            throw InvalidInput("cover order out of range");
        for (auto &block : j.at("blocks")) {
            VertexSet s;
            for (auto &v : block) {
                int x = v.get<int>();
                if (x < 1 || x > c.n)
                    throw InvalidInput("cover vertex out of range");
                s.insert(x - 1);
            }
            c.blocks.push_back(s);
        }
        if (c.blocks.size() != c.capacities.size())
            throw InvalidInput("cover needs one capacity per block");
        return c;
    });
}

auto pmramsey::coloring_to_json(const EdgeColoring &c) -> json
{
    json rows = json::array();
    for (int i = 0; i + 1 < c.n(); ++i) {
        json row = json::array();
        for (int j = i + 1; j < c.n(); ++j)
            row.push_back(c.color(i, j));
        rows.push_back(std::move(row));
    }
    return {{"n", c.n()}, {"r", c.r()}, {"rows", std::move(rows)}};
}

auto pmramsey::coloring_from_json(const json &j) -> EdgeColoring
{
    return guarded("colouring", [&] {
        std::ostringstream text;
        text << j.at("n").get<int>() << ' ' << j.at("r").get<int>() << '\n';
        for (auto &row : j.at("rows"))
            for (auto &col : row)
                text << col.get<int>() << ' ';
        std::istringstream in(text.str());
        return read_coloring(in);
    });
}

auto pmramsey::parse_method(const std::string &s) -> Method
{
    for (auto m : {Method::exhaustive_search, Method::f3_reduction, Method::closed_form, Method::table})
        if (to_string(m) == s)
            return m;
    throw InvalidInput("unknown method " + s);
}

auto pmramsey::result_to_json(const RamseyResult &r) -> json
{
    json witness = nullptr;
    if (auto c = std::get_if<EdgeColoring>(&r.lower_witness))
        witness = {{"coloring", coloring_to_json(*c)}};
    else if (auto b = std::get_if<BlockCover>(&r.lower_witness))
        witness = {{"cover", cover_to_json(*b)}};
    return {
        {"targets", r.targets},
        {"value", r.value},
        {"method", to_string(r.method)},
        {"witness", std::move(witness)},
        {"stats", {{"nodes", r.stats.nodes}, {"millis", r.stats.millis}}},
    };
}

auto pmramsey::result_from_json(const json &j) -> RamseyResult
{
    return guarded("result", [&] {
        RamseyResult r;
        r.targets = j.at("targets").get<std::vector<int>>();
        r.value = j.at("value").get<int>();
        r.method = parse_method(j.at("method").get<std::string>());
        auto &w = j.at("witness");
        if (w.contains("coloring"))
            r.lower_witness = coloring_from_json(w.at("coloring"));
        else if (w.contains("cover"))
            r.lower_witness = cover_from_json(w.at("cover"));
        r.stats.nodes = j.at("stats").at("nodes").get<std::uint64_t>();
        r.stats.millis = j.at("stats").at("millis").get<std::int64_t>();
        return r;
    });
}
