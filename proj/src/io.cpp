#include "twwcol/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "twwcol/errors.hpp"

namespace twwcol::io {

namespace {

// Non-empty lines with `#` comments removed, paired with 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream &is) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(is, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        out.emplace_back(number, line);
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string &what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Reads exactly the given tokens from the line; nothing may follow.
template <typename... Ts>
void scan(std::size_t line, const std::string &text, Ts &...out) {
    std::istringstream ls(text);
    if (!(ls >> ... >> out))
        fail(line, "malformed line '" + text + "'");
    std::string rest;
    if (ls >> rest)
        fail(line, "unexpected trailing token '" + rest + "'");
}

VertexId to_internal(std::size_t line, long long id, std::size_t n) {
    if (id < 1 || static_cast<unsigned long long>(id) > n)
        fail(line, "vertex " + std::to_string(id) + " outside [1, " + std::to_string(n) + "]");
    return static_cast<VertexId>(id - 1);
}

}  // namespace

void write_trigraph(std::ostream &os, const Trigraph &g) {
    os << "tgf " << g.size() << ' ' << g.black_edges().size() << ' ' << g.red_edges().size() << '\n';
    for (const Edge &e : g.black_edges())
        os << "b " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (const Edge &e : g.red_edges())
        os << "r " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Trigraph read_trigraph(std::istream &is) {
    auto lines = content_lines(is);
    if (lines.empty())
        throw ParseError("empty trigraph file");
    std::string tag;
    std::size_t n = 0, nb = 0, nr = 0;
    scan(lines[0].first, lines[0].second, tag, n, nb, nr);
    if (tag != "tgf")
        fail(lines[0].first, "expected 'tgf' header");

    std::vector<Edge> black, red;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto &[number, text] = lines[k];
        long long u = 0, v = 0;
        scan(number, text, tag, u, v);
        Edge e(to_internal(number, u, n), to_internal(number, v, n));
        if (tag == "b")
            black.push_back(e);
        else if (tag == "r")
            red.push_back(e);
        else
            fail(number, "unknown edge tag '" + tag + "'");
    }
    if (black.size() != nb || red.size() != nr)
        throw ParseError("header announces " + std::to_string(nb) + " black and " + std::to_string(nr) +
                         " red edges, file has " + std::to_string(black.size()) + " and " +
                         std::to_string(red.size()));
    return Trigraph::make(n, black, red);
}

void write_sequence(std::ostream &os, const PartitionSequence &seq) {
    os << "seq " << seq.vertex_count() << ' ' << seq.steps().size() << '\n';
    for (const MergeStep &s : seq.steps())
        os << "m " << s.a + 1 << ' ' << s.b + 1 << '\n';
}

PartitionSequence read_sequence(std::istream &is) {
    auto lines = content_lines(is);
    if (lines.empty())
        throw ParseError("empty sequence file");
    std::string tag;
    std::size_t n = 0, count = 0;
    scan(lines[0].first, lines[0].second, tag, n, count);
    if (tag != "seq")
        fail(lines[0].first, "expected 'seq' header");
    std::vector<std::pair<VertexId, VertexId>> merges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto &[number, text] = lines[k];
        long long u = 0, v = 0;
        scan(number, text, tag, u, v);
        if (tag != "m")
            fail(number, "expected 'm u v'");
        merges.emplace_back(to_internal(number, u, n), to_internal(number, v, n));
    }
    if (merges.size() != count)
        throw ParseError("header announces " + std::to_string(count) + " steps, file has " +
                         std::to_string(merges.size()));
    return sequence_from_vertex_merges(n, merges);
}

void write_roles(std::ostream &os, const Trigraph &g) {
    for (VertexId v = 0; v < g.roles().size(); ++v)
        os << v + 1 << ' ' << g.roles()[v].to_string() << '\n';
}

std::vector<VertexRole> read_roles(std::istream &is, std::size_t n) {
    std::vector<VertexRole> roles(n);
    std::vector<bool> seen(n, false);
    for (const auto &[number, text] : content_lines(is)) {
        std::istringstream ls(text);
        long long id = 0;
        if (!(ls >> id))
            fail(number, "expected a vertex id");
        VertexId v = to_internal(number, id, n);
        std::string rest;
        std::getline(ls, rest);
        try {
            roles[v] = VertexRole::parse(rest);
        } catch (const RangeError &e) {
            fail(number, e.what());
        }
        if (seen[v])
            fail(number, "vertex " + std::to_string(id) + " listed twice");
        seen[v] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw ParseError("role file does not cover every vertex");
    return roles;
}

void write_coloring(std::ostream &os, const Coloring &col) {
    for (std::size_t v = 0; v < col.colors.size(); ++v)
        os << v + 1 << ' ' << col.colors[v] << '\n';
}

Coloring read_coloring(std::istream &is) {
    std::vector<std::pair<long long, int>> entries;
    long long top = 0;
    for (const auto &[number, text] : content_lines(is)) {
        long long v = 0;
        int c = 0;
        scan(number, text, v, c);
        if (v < 1)
            fail(number, "vertex ids are 1-based");
        if (c < 1)
            fail(number, "colors are 1-based");
        entries.emplace_back(v, c);
        top = std::max(top, v);
    }
    Coloring col{std::vector<int>(static_cast<std::size_t>(top), 0), 0};
    for (const auto &[v, c] : entries) {
        int &slot = col.colors[static_cast<std::size_t>(v - 1)];
        if (slot != 0)
            throw ParseError("vertex " + std::to_string(v) + " colored twice");
        slot = c;
        col.k = std::max(col.k, c);
    }
    return col;
}

void write_assignment(std::ostream &os, const Assignment &a) {
    for (int var = 1; var <= static_cast<int>(a.var_count()); ++var)
        os << var << ' ' << (a[var] ? 1 : 0) << '\n';
}

Assignment read_assignment(std::istream &is) {
    std::vector<std::pair<int, int>> entries;
    int top = 0;
    for (const auto &[number, text] : content_lines(is)) {
        int var = 0, value = 0;
        scan(number, text, var, value);
        if (var < 1 || (value != 0 && value != 1))
            fail(number, "expected '<var> 0|1'");
        entries.emplace_back(var, value);
        top = std::max(top, var);
    }
    std::vector<int> values(static_cast<std::size_t>(top), -1);
    for (const auto &[var, value] : entries) {
        if (values[static_cast<std::size_t>(var - 1)] != -1)
            throw ParseError("variable " + std::to_string(var) + " assigned twice");
        values[static_cast<std::size_t>(var - 1)] = value;
    }
    std::vector<bool> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == -1)
            throw ParseError("variable " + std::to_string(i + 1) + " is unassigned");
        out[i] = values[i] == 1;
    }
    return Assignment(std::move(out));
}

CnfFormula parse_dimacs_cnf(std::istream &is, Dialect dialect) {
    std::string line;
    std::size_t number = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Clause> clauses;
    std::vector<Literal> pending;
    std::size_t pending_line = 0;

    while (std::getline(is, line)) {
        ++number;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c')
            continue;
        if (first[0] == '%')
            break;
        if (first == "p") {
            if (have_header)
                fail(number, "second problem line");
            std::string format;
            if (!(ls >> format >> n >> m) || format != "cnf" || n < 0 || m < 0)
                fail(number, "expected 'p cnf <vars> <clauses>'");
            std::string rest;
            if (ls >> rest)
                fail(number, "unexpected trailing token '" + rest + "'");
            have_header = true;
            continue;
        }
        if (!have_header)
            fail(number, "clause before the 'p cnf' line");

        ls.clear();
        ls.seekg(0);
        std::string token;
        while (ls >> token) {
            long long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoll(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
            } catch (const std::exception &) {
                fail(number, "bad literal '" + token + "'");
            }
            if (lit == 0) {
                if (pending.size() != 3)
                    fail(number, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
                clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            long long var = lit < 0 ? -lit : lit;
            if (var > n)
                fail(number, "variable " + std::to_string(var) + " exceeds declared " + std::to_string(n));
            if (pending.empty())
                pending_line = number;
            pending.push_back({static_cast<int>(var), lit > 0});
        }
    }
    if (!have_header)
        throw ParseError("missing 'p cnf' line");
    if (!pending.empty())
        fail(pending_line, "clause not terminated by 0");
    if (clauses.size() != static_cast<std::size_t>(m))
        throw ParseError("header announces " + std::to_string(m) + " clauses, file has " +
                         std::to_string(clauses.size()));
    return CnfFormula::make(static_cast<int>(n), std::move(clauses), dialect);
}

void write_dimacs_cnf(std::ostream &os, const CnfFormula &f) {
    os << "p cnf " << f.var_count() << ' ' << f.clause_count() << '\n';
    for (const Clause &c : f.clauses()) {
        for (const Literal &lit : c)
            os << (lit.positive ? lit.var : -lit.var) << ' ';
        os << "0\n";
    }
}

namespace {

template <typename T, typename Writer>
std::string render(const T &value, Writer write) {
    std::ostringstream os;
    write(os, value);
    return os.str();
}

}  // namespace

std::string to_text(const Trigraph &g) { return render(g, write_trigraph); }
std::string to_text(const PartitionSequence &seq) { return render(seq, write_sequence); }
std::string to_text(const Coloring &col) { return render(col, write_coloring); }
std::string to_text(const Assignment &a) { return render(a, write_assignment); }
std::string to_dimacs(const CnfFormula &f) { return render(f, write_dimacs_cnf); }

CnfFormula parse_dimacs_cnf(const std::string &text, Dialect dialect) {
    std::istringstream is(text);
    return parse_dimacs_cnf(is, dialect);
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void dump(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << contents;
}

}  // namespace twwcol::io
