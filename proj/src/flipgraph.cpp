#include "toricflip/flipgraph.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "toricflip/errors.hpp"

namespace toricflip {

std::optional<std::size_t> FlipGraph::find(const MonomialIdeal& M) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), M,
                               [](const FlipVertex& v, const MonomialIdeal& m) { return v.ideal < m; });
    if (it == vertices.end() || it->ideal != M) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

namespace {

bool label_less(const Binomial& a, const Binomial& b) {
    if (a.lead != b.lead) return a.lead < b.lead;
    return a.trail < b.trail;
}

// Runs fn(i) for i in [0, count) on up to `workers` threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto work = [&] {
        try {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

FlipGraph explore(const AGradedContext& ctx, const MonomialIdeal& start, const ExploreOptions& options) {
    if (!is_agraded(start, ctx)) throw Error(ErrorKind::PreconditionViolated, "start ideal is not A-graded");
    std::vector<MonomialIdeal> found{start};
    std::unordered_map<MonomialIdeal, std::size_t, MonomialIdealHash> index{{start, 0}};
    std::vector<std::vector<FlipMove>> moves(1);
    std::vector<std::size_t> frontier{0};

    while (!frontier.empty()) {
        std::vector<std::vector<FlipMove>> batch(frontier.size());
        parallel_for(frontier.size(), options.workers,
                     [&](std::size_t i) { batch[i] = neighbors(found[frontier[i]], ctx); });
        // Merge in frontier order so numbering does not depend on scheduling.
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (const auto& mv : batch[i]) {
                if (index.contains(mv.target)) continue;
                index.emplace(mv.target, found.size());
                next.push_back(found.size());
                found.push_back(mv.target);
                moves.emplace_back();
                if (options.max_vertices && found.size() > options.max_vertices)
                    throw Error(ErrorKind::GuardExceeded,
                                "flip graph exceeds " + std::to_string(options.max_vertices) + " vertices");
            }
            moves[frontier[i]] = std::move(batch[i]);
        }
        frontier = std::move(next);
    }

    // Final numbering by sorted canonical form.
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
    std::vector<std::size_t> rank(found.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

    FlipGraph G;
    G.nvars = ctx.n();
    G.vertices.resize(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        G.vertices[rank[i]].ideal = found[i];
        G.vertices[rank[i]].valency = moves[i].size();
    }
    G.start = rank[0];
    std::set<std::tuple<std::size_t, std::size_t, Exponent, Exponent>> seen;
    for (std::size_t i = 0; i < found.size(); ++i)
        for (const auto& mv : moves[i]) {
            std::size_t u = rank[i], v = rank[index.at(mv.target)];
            if (u > v) std::swap(u, v);
            Binomial label = canonical_pair(mv.binomial.lead, mv.binomial.trail);
            if (seen.emplace(u, v, label.lead, label.trail).second) G.edges.push_back(FlipEdge{u, v, std::move(label)});
        }
    std::sort(G.edges.begin(), G.edges.end(), [](const FlipEdge& a, const FlipEdge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return label_less(a.label, b.label);
    });
    if (options.coherence)
        parallel_for(G.vertices.size(), options.workers,
                     [&](std::size_t i) { G.vertices[i].coherent = is_coherent(G.vertices[i].ideal, ctx).coherent; });
    return G;
}

LabelClasses classify_labels(const FlipGraph& G, const AGradedContext& ctx,
                             std::optional<std::size_t> expected_vertices) {
    if (expected_vertices && *expected_vertices != G.vertices.size())
        throw Error(ErrorKind::IncompleteGraph, "graph has " + std::to_string(G.vertices.size()) +
                                                    " vertices, expected " + std::to_string(*expected_vertices));
    auto cmp = [](const Binomial& a, const Binomial& b) { return label_less(a, b); };
    std::set<Binomial, decltype(cmp)> flips(cmp), ugb(cmp), graver(cmp);
    for (const auto& e : G.edges) {
        flips.insert(e.label);
        if (G.vertices[e.u].coherent && G.vertices[e.v].coherent) ugb.insert(e.label);
    }
    for (const auto& g : ctx.graver().elements) graver.insert(g);
    for (const auto& f : flips)
        if (!graver.contains(f)) throw std::logic_error("flip label outside the Graver basis");
    LabelClasses out;
    out.ugb.assign(ugb.begin(), ugb.end());
    out.flips.assign(flips.begin(), flips.end());
    out.graver.assign(graver.begin(), graver.end());
    return out;
}

Census census(const FlipGraph& G, const AGradedContext& ctx, std::optional<std::size_t> total_ideals) {
    Census c;
    c.vertices = G.vertices.size();
    c.edges = G.edges.size();
    c.corank = ctx.n() - ctx.A().d();
    c.min_valency = G.vertices.empty() ? 0 : G.vertices.front().valency;
    for (std::size_t i = 0; i < G.vertices.size(); ++i) {
        const auto& v = G.vertices[i];
        if (v.coherent) ++c.coherent;
        c.max_valency = std::max(c.max_valency, v.valency);
        c.min_valency = std::min(c.min_valency, v.valency);
        if (v.valency < c.corank) c.flip_deficient.push_back(i);
    }
    c.total_ideals = total_ideals;
    // The graph is one BFS component; it is everything exactly when the counts agree.
    if (total_ideals) c.connected = *total_ideals == c.vertices;
    return c;
}

std::string export_dot(const FlipGraph& G) {
    std::ostringstream os;
    os << "graph flips {\n";
    for (std::size_t i = 0; i < G.vertices.size(); ++i) {
        const auto& v = G.vertices[i];
        os << "  " << i << " [label=\"" << format_ideal(v.ideal, VariableNames::Indexed) << "\"";
        if (v.coherent) os << ", style=filled, fillcolor=lightgrey";
        os << "];\n";
    }
    for (const auto& e : G.edges)
        os << "  " << e.u << " -- " << e.v << " [label=\"" << format_binomial(e.label, VariableNames::Indexed)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const FlipGraph& G) {
    using nlohmann::json;
    json doc;
    doc["nvars"] = G.nvars;
    doc["start"] = G.start;
    doc["vertices"] = json::array();
    for (std::size_t i = 0; i < G.vertices.size(); ++i) {
        const auto& v = G.vertices[i];
        doc["vertices"].push_back(
            {{"id", i}, {"generators", v.ideal.generators()}, {"coherent", v.coherent}, {"valency", v.valency}});
    }
    doc["edges"] = json::array();
    for (const auto& e : G.edges)
        doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"label", format_binomial(e.label, VariableNames::Indexed)}});
    return doc.dump(1) + "\n";
}

FlipGraph import_json(const std::string& text) {
    using nlohmann::json;
    FlipGraph G;
    try {
        json doc = json::parse(text);
        G.nvars = doc.at("nvars").get<std::size_t>();
        G.start = doc.at("start").get<std::size_t>();
        for (const auto& v : doc.at("vertices")) {
            if (v.at("id").get<std::size_t>() != G.vertices.size()) throw Error(ErrorKind::Parse, "vertex ids out of order");
            FlipVertex fv;
            fv.ideal = MonomialIdeal::minimalize(G.nvars, v.at("generators").get<std::vector<Exponent>>());
            fv.coherent = v.at("coherent").get<bool>();
            fv.valency = v.at("valency").get<std::size_t>();
            G.vertices.push_back(std::move(fv));
        }
        for (const auto& e : doc.at("edges")) {
            FlipEdge fe{e.at("u").get<std::size_t>(), e.at("v").get<std::size_t>(),
                        parse_binomial(e.at("label").get<std::string>(), G.nvars)};
            if (fe.u >= G.vertices.size() || fe.v >= G.vertices.size()) throw Error(ErrorKind::Parse, "edge endpoint out of range");
            G.edges.push_back(std::move(fe));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    return G;
}

}  // namespace toricflip
