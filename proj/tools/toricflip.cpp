// toricflip: command-line front end for the library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricflip/errors.hpp"
#include "toricflip/fixtures.hpp"
#include "toricflip/flipgraph.hpp"
#include "toricflip/triangulation.hpp"
#include "toricflip/verify.hpp"

using namespace toricflip;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Failure = 1, InvalidInput = 2, Disconnected = 3, Mismatch = 4 };

struct Config {
    std::string matrix, ideal, start, weight, mode = "brute", dot, json_out, graph, example, report;
    std::size_t guard = 4096;
    unsigned workers = 1;
    std::uint64_t seed = 20240611;
    bool json = false, census = false, homogenize = false, all = false, list = false;
};

VariableNames names_for(std::size_t n) { return n <= 26 ? VariableNames::Letters : VariableNames::Indexed; }

GradingMatrix load_matrix(const Config& c, bool homogenize_rows = false) {
    auto m = read_matrix_file(c.matrix);
    return validate_grading(homogenize_rows ? homogenize(m) : m);
}

IntVector parse_weight(const std::string& text, std::size_t n) {
    IntVector w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            w.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "bad weight entry '" + item + "'");
        }
    }
    if (w.size() != n) throw Error(ErrorKind::BadLength, "weight has " + std::to_string(w.size()) + " entries, matrix has " + std::to_string(n) + " columns");
    return w;
}

std::string vec(ExponentView u) {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) s += (i ? " " : "") + std::to_string(u[i]);
    return s;
}

json generators_json(const MonomialIdeal& M) {
    json out = json::array();
    for (const auto& g : M.generators()) out.push_back(g);
    return out;
}

void print_ideal(std::ostream& os, const MonomialIdeal& M) {
    auto names = names_for(M.nvars());
    for (const auto& g : M.generators()) os << vec(g) << "    " << format_monomial(g, names) << '\n';
}

int cmd_graver(const Config& c) {
    auto A = load_matrix(c);
    auto G = graver_basis(A);
    auto names = names_for(A.n());
    for (const auto& f : G.elements)
        std::cout << vec(f.lead) << " | " << vec(f.trail) << "    " << format_binomial(f, names) << '\n';
    return Ok;
}

int cmd_toric_gb(const Config& c) {
    auto A = load_matrix(c);
    IntVector w = c.weight.empty() ? A.positive_weight() : parse_weight(c.weight, A.n());
    auto gb = buchberger(toric_ideal(A), TermOrder(w), A);
    auto names = names_for(A.n());
    for (const auto& f : gb.binomials)
        std::cout << vec(f.lead) << " | " << f.coeff.get_str() << " | " << vec(f.trail) << "    "
                  << format_binomial(f, names) << '\n';
    for (const auto& g : gb.monomials.generators())
        std::cout << vec(g) << " | 0 |    " << format_monomial(g, names) << '\n';
    return Ok;
}

int cmd_initial(const Config& c) {
    auto A = load_matrix(c);
    print_ideal(std::cout, initial_ideal(A, parse_weight(c.weight, A.n())));
    return Ok;
}

int cmd_check(const Config& c) {
    AGradedContext ctx(load_matrix(c));
    auto M = read_ideal_file(c.ideal, ctx.n());
    bool agraded = is_agraded(M, ctx);
    json out = {{"generators", generators_json(M)}, {"agraded", agraded}, {"weakly_agraded", is_weakly_agraded(M, ctx)}};
    if (agraded) {
        out["coherent"] = is_coherent(M, ctx).coherent;
        out["valency"] = neighbors(M, ctx).size();
    } else {
        out["coherent"] = false;
        out["valency"] = nullptr;
    }
    if (c.json) {
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << format_ideal(M, names_for(ctx.n())) << '\n';
        std::cout << "agraded " << out["agraded"] << "\nweakly_agraded " << out["weakly_agraded"] << "\ncoherent "
                  << out["coherent"] << "\nvalency " << out["valency"] << '\n';
    }
    return Ok;
}

int cmd_neighbors(const Config& c) {
    AGradedContext ctx(load_matrix(c));
    auto M = read_ideal_file(c.ideal, ctx.n());
    if (!is_agraded(M, ctx)) throw Error(ErrorKind::PreconditionViolated, "ideal is not A-graded");
    auto moves = neighbors(M, ctx);
    auto names = names_for(ctx.n());
    if (c.json) {
        json out = json::array();
        for (const auto& mv : moves)
            out.push_back({{"label", format_binomial(mv.binomial, names)}, {"generators", generators_json(mv.target)}});
        std::cout << out.dump(2) << '\n';
        return Ok;
    }
    for (const auto& mv : moves)
        std::cout << format_binomial(mv.binomial, names) << "    " << format_ideal(mv.target, names) << '\n';
    std::size_t corank = ctx.n() - ctx.A().d();
    std::cout << moves.size() << " flips" << (moves.size() < corank ? " (flip-deficient, corank " + std::to_string(corank) + ")" : "") << '\n';
    return Ok;
}

int cmd_coherent(const Config& c) {
    AGradedContext ctx(load_matrix(c));
    auto M = read_ideal_file(c.ideal, ctx.n());
    if (!is_agraded(M, ctx)) throw Error(ErrorKind::PreconditionViolated, "ideal is not A-graded");
    auto r = is_coherent(M, ctx);
    if (c.json) {
        json out = {{"coherent", r.coherent}};
        if (r.coherent) out["witness"] = integral_weight(r.witness);
        std::cout << out.dump(2) << '\n';
    } else if (r.coherent) {
        std::cout << "coherent, w = " << json(integral_weight(r.witness)).dump() << '\n';
    } else {
        std::cout << "not coherent\n";
    }
    return Ok;
}

int cmd_enumerate(const Config& c) {
    AGradedContext ctx(load_matrix(c));
    std::vector<MonomialIdeal> ideals;
    if (c.mode == "brute") {
        EnumerationOptions opt;
        opt.max_graver = c.guard;
        opt.workers = c.workers;
        ideals = brute_force_enumerate(ctx, opt);
    } else {
        ExploreOptions opt;
        opt.workers = c.workers;
        opt.coherence = false;
        if (ctx.graver().size() > c.guard)
            throw Error(ErrorKind::GuardExceeded, "Graver basis has " + std::to_string(ctx.graver().size()) + " elements");
        for (auto& v : explore(ctx, ctx.reference_ideal(), opt).vertices) ideals.push_back(std::move(v.ideal));
    }
    std::cout << ideals.size() << '\n';
    if (c.list)
        for (const auto& M : ideals) std::cout << format_ideal(M, names_for(ctx.n())) << '\n';
    return Ok;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IO, "cannot write " + path);
    out << text;
}

int cmd_flipgraph(const Config& c) {
    AGradedContext ctx(load_matrix(c));
    auto start = c.start.empty() ? ctx.reference_ideal() : read_ideal_file(c.start, ctx.n());
    ExploreOptions opt;
    opt.workers = c.workers;
    auto G = explore(ctx, start, opt);
    if (!c.dot.empty()) write_file(c.dot, export_dot(G));
    if (!c.json_out.empty()) write_file(c.json_out, export_json(G));
    std::optional<std::size_t> total;
    if (c.census) {
        EnumerationOptions eo;
        eo.max_graver = c.guard;
        eo.workers = c.workers;
        total = brute_force_enumerate(ctx, eo).size();
    }
    auto cs = census(G, ctx, total);
    std::cout << "vertices " << cs.vertices << "\nedges " << cs.edges << "\ncoherent " << cs.coherent
              << "\nvalency " << cs.min_valency << ".." << cs.max_valency << "\ncorank " << cs.corank
              << "\nflip_deficient " << cs.flip_deficient.size() << '\n';
    if (cs.total_ideals) {
        std::cout << "all_ideals " << *cs.total_ideals << "\nconnected " << (*cs.connected ? "yes" : "no") << '\n';
        if (!*cs.connected) return Disconnected;
    }
    return Ok;
}

// Orients a stored edge as a flip out of one endpoint.
std::optional<FlipMove> edge_move(const FlipGraph& G, const FlipEdge& e, const AGradedContext& ctx) {
    for (auto [s, t] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        auto r = flip(G.vertices[s].ideal, e.label, ctx);
        if (r.status == FlipStatus::Flipped && r.move->target == G.vertices[t].ideal) return r.move;
        Binomial rev = Binomial::pure(e.label.trail, e.label.lead);
        r = flip(G.vertices[s].ideal, rev, ctx);
        if (r.status == FlipStatus::Flipped && r.move->target == G.vertices[t].ideal) return r.move;
    }
    return std::nullopt;
}

int cmd_triangulations(const Config& c) {
    auto A = load_matrix(c, c.homogenize);
    AGradedContext ctx(A);
    if (!c.homogenize && homogenize(A.entries()).rows() != A.d())
        std::cerr << "note: no all-ones row in the row space; complexes triangulate the cone over the columns"
                     " (use --homogenize to append one)\n";
    FlipGraph G;
    if (c.graph.empty()) {
        ExploreOptions opt;
        opt.workers = c.workers;
        opt.coherence = false;
        G = explore(ctx, ctx.reference_ideal(), opt);
    } else {
        std::ifstream in(c.graph);
        if (!in) throw Error(ErrorKind::IO, "cannot read " + c.graph);
        std::stringstream ss;
        ss << in.rdbuf();
        G = import_json(ss.str());
        if (G.nvars != ctx.n()) throw Error(ErrorKind::BadLength, "graph and matrix disagree on the variable count");
        for (const auto& v : G.vertices)
            if (!is_agraded(v.ideal, ctx))
                throw Error(ErrorKind::PreconditionViolated, "graph vertex " + format_ideal(v.ideal, VariableNames::Indexed) +
                                                                 " is not A-graded for this matrix");
    }
    auto names = names_for(ctx.n());
    bool invalid = false;
    for (std::size_t i = 0; i < G.vertices.size(); ++i) {
        auto D = complex_of_radical(G.vertices[i].ideal);
        bool ok = is_triangulation(D, ctx.A());
        invalid = invalid || !ok;
        std::cout << i << ": " << D.to_string() << (ok ? "" : "  NOT A TRIANGULATION") << '\n';
    }
    std::map<EdgeVerdict, std::size_t> tally;
    std::cout << "\nedge verdicts\n";
    for (const auto& e : G.edges) {
        auto mv = edge_move(G, e, ctx);
        EdgeCheck r = mv ? check_flip_edge(*mv, ctx) : EdgeCheck{EdgeVerdict::Violation, "edge is not a flip"};
        ++tally[r.verdict];
        std::cout << e.u << " -- " << e.v << "  " << format_binomial(e.label, names) << "  " << to_string(r.verdict)
                  << (r.detail.empty() ? "" : "  " + r.detail) << '\n';
    }
    std::cout << "\nsame_radical " << tally[EdgeVerdict::SameRadical] << "\nbistellar " << tally[EdgeVerdict::Bistellar]
              << "\nviolation " << tally[EdgeVerdict::Violation] << '\n';
    return invalid || tally[EdgeVerdict::Violation] ? Failure : Ok;
}

int cmd_verify(const Config& c) {
    if (c.all == !c.example.empty()) throw Error(ErrorKind::PreconditionViolated, "give exactly one of --example and --all");
    std::vector<std::string> ids = c.all ? example_ids() : std::vector<std::string>{c.example};
    VerifyOptions opt{c.seed, c.workers};
    json reports = json::array();
    bool all_pass = true;
    for (const auto& id : ids) {
        auto r = verify_example(id, opt);
        all_pass = all_pass && r.pass;
        reports.push_back(r.to_json());
        std::cout << (r.pass ? "pass " : "FAIL ") << id << '\n';
        std::cerr << id << ": " << r.seconds << " s\n";
        if (!r.pass && c.report.empty()) std::cout << r.to_json().dump(2) << '\n';
    }
    if (!c.report.empty()) write_file(c.report, (c.all ? reports : reports[0]).dump(2) + "\n");
    return all_pass ? Ok : Mismatch;
}

int exit_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::FixtureMismatch: return Mismatch;
        case ErrorKind::IncompleteGraph:
        case ErrorKind::IncompleteInput: return Disconnected;
        default: return InvalidInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monomial A-graded ideals, flip graphs and triangulations"};
    app.require_subcommand(1);
    Config c;
    app.add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", c.seed, "seed for randomized scalars");

    auto matrix_cmd = [&](const std::string& name, const std::string& help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("--matrix,-m", c.matrix, "matrix file")->required();
        return s;
    };
    auto* graver = matrix_cmd("graver", "Graver basis, one \"u | v\" per line");
    auto* toric = matrix_cmd("toric-gb", "reduced Groebner basis of the toric ideal");
    toric->add_option("--weight,-w", c.weight, "comma separated weight (default: positive row-space weight)");
    auto* initial = matrix_cmd("initial", "initial ideal in_w of the toric ideal");
    initial->add_option("--weight,-w", c.weight, "comma separated weight")->required();
    auto* check = matrix_cmd("check", "A-gradedness, coherence and valency of an ideal");
    auto* nbrs = matrix_cmd("neighbors", "flips out of an A-graded ideal");
    auto* coherent = matrix_cmd("coherent", "coherence test with a witness weight");
    for (auto* s : {check, nbrs, coherent}) {
        s->add_option("--ideal,-i", c.ideal, "ideal file")->required();
        s->add_flag("--json", c.json, "JSON output");
    }
    auto* enumerate = matrix_cmd("enumerate", "count all monomial A-graded ideals");
    enumerate->add_option("--mode", c.mode, "brute or flip")->check(CLI::IsMember({"brute", "flip"}));
    enumerate->add_flag("--list", c.list, "print every ideal");
    auto* fg = matrix_cmd("flipgraph", "flip graph from a start ideal");
    fg->add_option("--start", c.start, "start ideal file (default: reference initial ideal)");
    fg->add_option("--dot", c.dot, "write DOT here");
    fg->add_option("--json", c.json_out, "write JSON here");
    fg->add_flag("--census", c.census, "count all ideals independently and test connectivity");
    for (auto* s : {enumerate, fg})
        s->add_option("--guard", c.guard, "largest Graver basis accepted")->check(CLI::PositiveNumber);
    auto* tri = matrix_cmd("triangulations", "complexes of radicals and edge verdicts");
    tri->add_option("--graph", c.graph, "flip graph JSON (default: explore)");
    tri->add_flag("--homogenize", c.homogenize, "append a row of ones first");
    auto* verify = app.add_subcommand("verify-paper", "reproduce the catalogued examples");
    verify->add_option("--example", c.example, "example id")->check(CLI::IsMember(example_ids()));
    verify->add_flag("--all", c.all, "every example");
    verify->add_option("--report", c.report, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : InvalidInput;
    }

    try {
        if (*graver) return cmd_graver(c);
        if (*toric) return cmd_toric_gb(c);
        if (*initial) return cmd_initial(c);
        if (*check) return cmd_check(c);
        if (*nbrs) return cmd_neighbors(c);
        if (*coherent) return cmd_coherent(c);
        if (*enumerate) return cmd_enumerate(c);
        if (*fg) return cmd_flipgraph(c);
        if (*tri) return cmd_triangulations(c);
        if (*verify) return cmd_verify(c);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Failure;
    }
    return Failure;
}
