#include "pathcut/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "pathcut/arborescence.hpp"
#include "pathcut/connectivity.hpp"
#include "pathcut/cones.hpp"
#include "pathcut/errors.hpp"
#include "pathcut/fraction.hpp"
#include "pathcut/maxcut.hpp"
#include "pathcut/orientation.hpp"
#include "pathcut/pathtrees.hpp"
#include "pathcut/rng.hpp"
#include "pathcut/verify.hpp"

namespace pathcut {

int PipelineConfig::derived_c() const {
    if (cone_c > 0) return cone_c;
    return std::max(3, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(l_desk)))));
}

int PipelineConfig::derived_b() const {
    if (cone_b > 0) return cone_b;
    double c = derived_c();
    return std::max(1, static_cast<int>(std::ceil(std::pow(c, 2.0 / 3.0))));
}

PipelineConfig PipelineConfig::from_json(const nlohmann::json& j) {
    PipelineConfig c;
    auto get = [&](const char* k, auto& field) {
        if (j.contains(k)) field = j.at(k).get<std::decay_t<decltype(field)>>();
    };
    get("ell", c.ell);
    get("seed", c.seed);
    get("l_desk", c.l_desk);
    get("cone_c", c.cone_c);
    get("cone_b", c.cone_b);
    get("eps_desk", c.eps_desk);
    get("resample_budget", c.resample_budget);
    get("orient_budget", c.orient_budget);
    get("cut_tries", c.cut_tries);
    get("stage_attempts", c.stage_attempts);
    get("tour_restarts", c.tour_restarts);
    get("min_degree", c.min_degree);
    get("strict_conf", c.strict_conf);
    get("strict_fraction_splits", c.strict_fraction_splits);
    get("strict_cones", c.strict_cones);
    get("allow_any_incident_path", c.allow_any_incident_path);
    get("double_odd_ell", c.double_odd_ell);
    get("l2l_min_degree", c.l2l_min_degree);
    get("split_min_degree", c.split_min_degree);
    require(c.ell >= 2, "config: ell >= 2");
    return c;
}

nlohmann::json PipelineConfig::to_json() const {
    return {{"ell", ell},
            {"seed", seed},
            {"l_desk", l_desk},
            {"cone_c", cone_c},
            {"cone_b", cone_b},
            {"eps_desk", eps_desk},
            {"resample_budget", resample_budget},
            {"orient_budget", orient_budget},
            {"cut_tries", cut_tries},
            {"stage_attempts", stage_attempts},
            {"tour_restarts", tour_restarts},
            {"min_degree", min_degree},
            {"strict_conf", strict_conf},
            {"strict_fraction_splits", strict_fraction_splits},
            {"strict_cones", strict_cones},
            {"allow_any_incident_path", allow_any_incident_path},
            {"double_odd_ell", double_odd_ell},
            {"l2l_min_degree", l2l_min_degree},
            {"split_min_degree", split_min_degree}};
}

namespace {

CoverParams cover_params_from(const PipelineConfig& cfg, int ell) {
    CoverParams cp;
    cp.ll1.dense.ell = ell;
    cp.ll1.dense.c = cfg.derived_c();
    cp.ll1.dense.b = cfg.derived_b();
    cp.ll1.dense.resample_budget = cfg.resample_budget;
    cp.ll1.dense.l_desk = 0;  // gates are applied by the pipeline itself
    cp.ll1.dense.eps = cfg.eps_desk;
    cp.ll1.dense.strict_cones = cfg.strict_cones;
    cp.ll1.split_min_degree = cfg.split_min_degree;
    cp.ll1.strict_split = cfg.strict_fraction_splits;
    cp.ll1.strict_conf = cfg.strict_conf;
    cp.ll1.allow_any_incident_path = cfg.allow_any_incident_path;
    cp.ll1.attempts = cfg.stage_attempts;
    cp.split_min_degree = cfg.split_min_degree;
    cp.strict_split = cfg.strict_fraction_splits;
    cp.strict_conf = cfg.strict_conf;
    cp.allow_any_incident_path = cfg.allow_any_incident_path;
    cp.attempts = cfg.stage_attempts;
    return cp;
}

// flattened slice helper over a rotated tour
struct FlatTour {
    std::vector<int> edges;
    std::vector<int> verts;  // verts.size() == edges.size() + 1
};

FlatTour flatten(const PathGraph& h, const Tour& t, int skip_path) {
    FlatTour f;
    for (const auto& step : t.steps) {
        if (step.path == skip_path) continue;
        const Path& p = h.path(step.path);
        if (f.verts.empty()) f.verts.push_back(step.forward ? p.front() : p.back());
        if (step.forward) {
            for (size_t i = 0; i < p.edges.size(); ++i) {
                f.edges.push_back(p.edges[i]);
                f.verts.push_back(p.verts[i + 1]);
            }
        } else {
            for (size_t i = p.edges.size(); i-- > 0;) {
                f.edges.push_back(p.edges[i]);
                f.verts.push_back(p.verts[i]);
            }
        }
    }
    return f;
}

}  // namespace

Decomposition cut_tour(const PathGraph& h, const Tour& tour, int ell, int dummy_path) {
    require(ell >= 1, "cut_tour: ell >= 1");
    for (const auto& step : tour.steps) {
        int len = h.path(step.path).length();
        require(len >= ell && len <= ell + 3, "cut_tour: tour path length outside [ell, ell+3]");
    }
    Tour rotated = tour;
    if (dummy_path >= 0) {
        int at = -1;
        for (int i = 0; i < static_cast<int>(rotated.steps.size()); ++i)
            if (rotated.steps[i].path == dummy_path) at = i;
        require(at >= 0, "cut_tour: dummy path not on the tour");
        std::rotate(rotated.steps.begin(), rotated.steps.begin() + at + 1, rotated.steps.end());
        // after rotation the dummy sits at the end; it is skipped while
        // flattening so the cut starts right after it
    }
    FlatTour flat = flatten(h, rotated, dummy_path);

    Decomposition out;
    out.ell = ell;
    int m = static_cast<int>(flat.edges.size());
    for (int from = 0; from < m; from += ell) {
        int len = std::min(ell, m - from);
        Path p;
        p.verts.assign(flat.verts.begin() + from, flat.verts.begin() + from + len + 1);
        p.edges.assign(flat.edges.begin() + from, flat.edges.begin() + from + len);
        check_internal(p.valid(h.host()), "cut_tour: slice is not a simple path");
        if (len == ell)
            out.paths.push_back(std::move(p));
        else
            out.leftover = std::move(p);
    }
    return out;
}

namespace {

// host extended with a virtual ell-path between two odd vertices; paths over
// the original host keep their ids
struct DummyHost {
    MultiGraph host;
    int dummy_path_first_edge = -1;
    Path dummy;
};

DummyHost make_dummy_host(const MultiGraph& g, int v1, int v2, int ell) {
    DummyHost dh;
    dh.host = g;
    Path p;
    p.verts.push_back(v1);
    int prev = v1;
    for (int i = 0; i < ell - 1; ++i) {
        int w = dh.host.add_vertex();
        p.edges.push_back(dh.host.add_edge(prev, w));
        p.verts.push_back(w);
        prev = w;
    }
    p.edges.push_back(dh.host.add_edge(prev, v2));
    p.verts.push_back(v2);
    dh.dummy_path_first_edge = p.edges.front();
    dh.dummy = p;
    return dh;
}

struct TourOutcome {
    Decomposition d;
    int repairs = 0;
    bool jackson = false;
};

// tour + cut with a dummy path when exactly two shadow-odd vertices remain
TourOutcome tour_and_cut(const MultiGraph& g, const std::vector<Path>& cover_paths, int ell,
                         const PipelineConfig& cfg, uint64_t seed) {
    std::vector<int> odd;
    {
        PathGraph probe(&g, cover_paths);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (probe.shadow_degree(v) % 2) odd.push_back(v);
    }
    check_internal(odd.size() == 0 || odd.size() == 2,
                   "pipeline: cover left " + std::to_string(odd.size()) + " odd vertices");
    TourOutcome out;
    if (odd.empty()) {
        PathGraph h(&g, cover_paths);
        TourResult tr = euler_tour_nonconflicting(h, seed, cfg.tour_restarts);
        out.repairs = tr.repairs;
        out.jackson = tr.jackson_holds;
        out.d = cut_tour(h, tr.tour, ell, -1);
        return out;
    }
    DummyHost dh = make_dummy_host(g, odd[0], odd[1], ell);
    std::vector<Path> with_dummy = cover_paths;
    with_dummy.push_back(dh.dummy);
    PathGraph h(&dh.host, with_dummy);
    TourResult tr = euler_tour_nonconflicting(h, seed, cfg.tour_restarts);
    out.repairs = tr.repairs;
    out.jackson = tr.jackson_holds;
    Decomposition cut = cut_tour(h, tr.tour, ell, static_cast<int>(with_dummy.size()) - 1);
    // slices reference only real edges; rebuild them against the real host
    for (Path& p : cut.paths)
        check_internal(p.valid(g), "pipeline: slice touches the dummy path");
    if (cut.leftover) check_internal(cut.leftover->valid(g), "pipeline: leftover touches dummy");
    out.d = std::move(cut);
    return out;
}

void final_verify(const MultiGraph& g, Decomposition& d, int ell) {
    VerificationReport rep = verify_decomposition(g, d.paths, d.leftover, ell);
    check_internal(rep.verdict, "pipeline: verifier rejected output: " + rep.summary());
    d.stages["verified"] = true;
}

// splits paths whose length is a multiple of ell into exact ell-slices
void slice_multiple(const Path& p, int ell, std::vector<Path>& out) {
    check_internal(p.length() % ell == 0, "pipeline: parity path length not a multiple of ell");
    for (int from = 0; from < p.length(); from += ell) {
        Path q;
        q.verts.assign(p.verts.begin() + from, p.verts.begin() + from + ell + 1);
        q.edges.assign(p.edges.begin() + from, p.edges.begin() + from + ell);
        out.push_back(std::move(q));
    }
}

}  // namespace

Decomposition decompose_eulerian4(const MultiGraph& g, const PipelineConfig& cfg) {
    require(cfg.ell >= 2, "decompose_eulerian4: ell >= 2");
    require(g.num_vertices() >= 2, "decompose_eulerian4: empty graph");
    for (int v = 0; v < g.num_vertices(); ++v)
        require(g.degree(v) % 2 == 0, "decompose_eulerian4: graph not eulerian");
    require(g.min_degree() >= cfg.min_degree, "decompose_eulerian4: min degree below threshold");
    int lambda = edge_connectivity(g);
    require(lambda >= 4, "decompose_eulerian4: edge connectivity " + std::to_string(lambda) +
                             " below 4");

    Decomposition out;
    out.ell = cfg.ell;
    out.seed = cfg.seed;
    out.stages["lambda"] = lambda;

    std::string last = "none";
    for (int attempt = 0; attempt < cfg.stage_attempts; ++attempt) {
        try {
            uint64_t s = mix_seed(cfg.seed, attempt, 0xE41ULL);
            auto ores = balanced_arc_strong(g, 2, cfg.orient_budget, mix_seed(s, 1));
            auto trees = pack_arborescences(g, ores.orientation, 0, 2);
            EdgeSet g1(g.num_edges());
            for (const auto& t : trees)
                for (int v = 0; v < g.num_vertices(); ++v)
                    if (v != t.root) g1.insert(t.enter_edge[v]);
            EdgeSet rest = g1.complement();
            out.stages["g1_edges"] = g1.size();

            CoverParams cp = cover_params_from(cfg, cfg.ell);
            CoverResult cover = cover_llp1(g, g1, rest, cfg.ell, cp, mix_seed(s, 2));
            out.stages["cover_conf"] = cover.stats.max_conf;
            out.stages["cover_conf_ok"] = cover.stats.conf_ok;

            TourOutcome to = tour_and_cut(g, cover.h.paths(), cfg.ell, cfg, mix_seed(s, 3));
            out.paths = std::move(to.d.paths);
            out.leftover = std::move(to.d.leftover);
            out.stages["tour_repairs"] = to.repairs;
            out.stages["jackson"] = to.jackson;
            out.stages["attempt"] = attempt;
            final_verify(g, out, cfg.ell);
            return out;
        } catch (const BudgetError& e) {
            last = e.what();
        }
    }
    throw BudgetError("decompose_eulerian4: all attempts failed; last: " + last);
}

EulerTourResult euler_tour_no_short_cycle(const MultiGraph& g, const PipelineConfig& cfg) {
    require(cfg.ell >= 2, "euler_tour_no_short_cycle: ell >= 2");
    for (int v = 0; v < g.num_vertices(); ++v)
        require(g.degree(v) % 2 == 0, "euler_tour_no_short_cycle: graph not eulerian");
    require(g.min_degree() >= cfg.min_degree, "euler_tour_no_short_cycle: degree below threshold");
    int lambda = edge_connectivity(g);
    require(lambda >= 4, "euler_tour_no_short_cycle: edge connectivity below 4");

    EulerTourResult res;
    res.stages["lambda"] = lambda;
    std::string last = "none";
    for (int attempt = 0; attempt < cfg.stage_attempts; ++attempt) {
        try {
            uint64_t s = mix_seed(cfg.seed, attempt, 0x731ULL);
            auto ores = balanced_arc_strong(g, 2, cfg.orient_budget, mix_seed(s, 1));
            auto trees = pack_arborescences(g, ores.orientation, 0, 2);
            EdgeSet g1(g.num_edges());
            for (const auto& t : trees)
                for (int v = 0; v < g.num_vertices(); ++v)
                    if (v != t.root) g1.insert(t.enter_edge[v]);
            CoverParams cp = cover_params_from(cfg, cfg.ell);
            CoverResult cover = cover_llp1(g, g1, g1.complement(), cfg.ell, cp, mix_seed(s, 2));
            PathGraph h(&g, cover.h.paths());
            TourResult tr = euler_tour_nonconflicting(h, mix_seed(s, 3), cfg.tour_restarts);
            res.edge_tour = tr.tour.edge_sequence(h);
            res.vertex_tour = tr.tour.vertex_sequence(h);
            // no closed subwalk of length <= ell: sliding window repeat scan
            int n = static_cast<int>(res.vertex_tour.size());
            std::vector<int> last_seen(g.num_vertices(), -1);
            for (int i = 0; i < n; ++i) {
                int v = res.vertex_tour[i];
                int prev = last_seen[v];
                int gap = prev < 0 ? -1 : i - prev;
                // the closing wrap is position n-1 == position 0 by identity
                if (gap > 0 && gap <= cfg.ell && !(i == n - 1 && prev == 0))
                    throw InternalError("euler_tour_no_short_cycle: closed subwalk of length " +
                                        std::to_string(gap));
                last_seen[v] = i;
            }
            res.stages["tour_repairs"] = tr.repairs;
            res.stages["attempt"] = attempt;
            return res;
        } catch (const BudgetError& e) {
            last = e.what();
        }
    }
    throw BudgetError("euler_tour_no_short_cycle: all attempts failed; last: " + last);
}

Decomposition decompose_24(const MultiGraph& g, const PipelineConfig& cfg) {
    require(cfg.ell >= 2, "decompose_24: ell >= 2");
    require(g.num_vertices() >= 2, "decompose_24: empty graph");
    require(g.min_degree() >= cfg.min_degree, "decompose_24: min degree below threshold");
    int lambda = edge_connectivity(g);
    require(lambda >= 24,
            "decompose_24: edge connectivity " + std::to_string(lambda) + " below 24");

    // the bipartite tree stages need even ell; the tail runs natively unless
    // the doubling mode is forced
    int tail_ell = cfg.double_odd_ell && cfg.ell % 2 == 1 ? 2 * cfg.ell : cfg.ell;
    int tree_ell = tail_ell % 2 == 0 ? tail_ell : 2 * tail_ell;

    Decomposition out;
    out.ell = cfg.ell;
    out.seed = cfg.seed;
    out.stages["lambda"] = lambda;

    std::string last = "none";
    for (int attempt = 0; attempt < cfg.stage_attempts; ++attempt) {
        try {
            uint64_t s = mix_seed(cfg.seed, attempt, 0xD24ULL);

            // (2) locally maximum cut with verified cross connectivity
            Cut cut;
            bool cut_ok = false;
            for (int t = 0; t < cfg.cut_tries && !cut_ok; ++t) {
                cut = locally_max_cut(g, mix_seed(s, 0xC, t));
                if (cut.cross_connectivity >= 12) cut_ok = true;
            }
            if (!cut_ok)
                throw BudgetError("decompose_24: no locally maximum cut with 12-edge-connected "
                                  "cross graph in " + std::to_string(cfg.cut_tries) + " tries");
            out.stages["cut_edges"] = static_cast<int>(cut.cross.size());
            out.stages["cut_lambda"] = cut.cross_connectivity;

            // (3) balanced 6-arc-strong orientation and arborescence packing
            std::vector<int> forigin;
            MultiGraph gf = induced_cross_graph(g, cut, &forigin);
            auto ores = balanced_arc_strong(gf, 6, cfg.orient_budget, mix_seed(s, 1));
            auto trees = pack_arborescences(gf, ores.orientation, 0, 6);
            auto tree_edges = [&](int a, int b) {
                EdgeSet set(g.num_edges());
                for (int t = a; t <= b; ++t)
                    for (int v = 0; v < gf.num_vertices(); ++v)
                        if (v != trees[t].root) set.insert(forigin[trees[t].enter_edge[v]]);
                return set;
            };
            EdgeSet g1 = tree_edges(0, 1), g2 = tree_edges(2, 3), g3 = tree_edges(4, 5);
            EdgeSet r = EdgeSet::all(g.num_edges());
            r -= g1;
            r -= g2;
            r -= g3;  // cross leftovers plus all of E minus F
            out.stages["orient_repairs"] = ores.repairs;

            // (4)-(6) parity fixing; the l2l trees run only when the cross
            // remainder can feed them
            std::vector<Path> parity_out;  // removed paths, already ell-sliced
            EdgeSet covered_by_parity(g.num_edges());
            EdgeSet r_cross = r;
            {
                EdgeSet f_edges(g.num_edges());
                for (int e : cut.cross) f_edges.insert(e);
                EdgeSet tmp = r_cross;
                for (int e : tmp.to_vector())
                    if (!f_edges.contains(e)) r_cross.erase(e);
            }
            auto rdeg = subset_degrees(g, r_cross);
            int r_min_deg = g.num_edges();
            for (int v = 0; v < g.num_vertices(); ++v) r_min_deg = std::min(r_min_deg, rdeg[v]);
            bool use_l2l = cfg.strict_fraction_splits || r_min_deg / 2 >= cfg.l2l_min_degree;
            out.stages["l2l_used"] = use_l2l;

            if (use_l2l) {
                // split the cross remainder between the two trees
                std::vector<int> roigin;
                MultiGraph rsub = subgraph(g, r_cross, &roigin);
                Fraction half = alpha_fraction(rsub, 1, 2, 2);
                EdgeSet r1(g.num_edges()), r2(g.num_edges());
                for (int j = 0; j < rsub.num_edges(); ++j)
                    (half.edges.contains(j) ? r1 : r2).insert(roigin[j]);
                L2LParams lp;
                lp.dense.c = cfg.derived_c();
                lp.dense.b = cfg.derived_b();
                lp.dense.resample_budget = cfg.resample_budget;
                lp.allow_any_incident_path = cfg.allow_any_incident_path;
                lp.attempts = cfg.stage_attempts;
                std::vector<uint8_t> side_a = cut.side;  // A = V1 (side 0)
                L2LResult t1 = bipartite_l2l_tree(g, g1, r1, side_a, tree_ell, lp, mix_seed(s, 2));
                std::vector<uint8_t> side_b = cut.side;
                for (auto& x : side_b) x ^= 1;  // A = V2
                L2LResult t2 = bipartite_l2l_tree(g, g2, r2, side_b, tree_ell, lp, mix_seed(s, 3));

                // everything the trees did not consume flows back into R
                r -= r_cross;
                r |= t1.leftover;
                r |= t2.leftover;
                // those leftovers include unused g1/g2 edges already

                // parity fix on V1 then V2
                auto fix_side = [&](L2LResult& tres, int side_val) {
                    EdgeSet rest_edges = g3;
                    EdgeSet other_tree(g.num_edges());
                    // degrees of G3 union (other tree's remaining edges) union R
                    // are what the removed paths must make even on this side
                    EdgeSet counted = g3;
                    counted |= r;
                    const L2LResult& other = side_val == 0 ? t2 : t1;
                    counted |= other.tree.graph.underlying_edges();
                    auto deg = subset_degrees(g, counted);
                    std::vector<int> x;
                    for (int v = 0; v < g.num_vertices(); ++v)
                        if (cut.side[v] == side_val && deg[v] % 2 &&
                            tres.tree.graph.shadow_degree(v) > 0)
                            x.push_back(v);
                    if (x.size() % 2) x.pop_back();
                    auto selected = parity_subtree(tres.tree, x);
                    std::vector<uint8_t> keep(tres.tree.graph.num_paths(), 1);
                    for (int p : selected) {
                        keep[p] = 0;
                        slice_multiple(tres.tree.graph.path(p), tail_ell, parity_out);
                        for (int e : tres.tree.graph.path(p).edges) covered_by_parity.insert(e);
                    }
                    // unremoved tree edges rejoin R
                    for (int p = 0; p < tres.tree.graph.num_paths(); ++p)
                        if (keep[p])
                            for (int e : tres.tree.graph.path(p).edges) r.insert(e);
                };
                fix_side(t1, 0);
                fix_side(t2, 1);
            } else {
                // desk route: the trees dissolve; parity must already be near
                r |= g1;
                r |= g2;
            }

            // ledger: output + g3 + r partitions E
            {
                EdgeSet check = covered_by_parity;
                check |= g3;
                check |= r;
                check_internal(check.size() == g.num_edges(),
                               "decompose_24: stage ledger does not cover E");
                int overlap = covered_by_parity.size() + g3.size() + r.size() - check.size();
                check_internal(overlap == 0, "decompose_24: stage ledger overlaps");
            }

            // (7) remaining graph parity must leave at most two odd vertices
            {
                EdgeSet remaining = g3;
                remaining |= r;
                auto deg = subset_degrees(g, remaining);
                int odd = 0;
                for (int v = 0; v < g.num_vertices(); ++v) odd += deg[v] % 2;
                if (odd > 2)
                    throw BudgetError("decompose_24: " + std::to_string(odd) +
                                      " odd vertices remain (thin instance without the tree "
                                      "route)");
            }

            CoverParams cp = cover_params_from(cfg, tail_ell);
            CoverResult cover = cover_llp1(g, g3, r, tail_ell, cp, mix_seed(s, 4));
            out.stages["cover_conf"] = cover.stats.max_conf;
            out.stages["cover_conf_ok"] = cover.stats.conf_ok;

            TourOutcome to = tour_and_cut(g, cover.h.paths(), tail_ell, cfg, mix_seed(s, 5));
            out.paths = std::move(to.d.paths);
            out.leftover = std::move(to.d.leftover);
            out.stages["tour_repairs"] = to.repairs;
            out.stages["jackson"] = to.jackson;

            // parity-removed paths are decomposition members; tail slices of
            // doubled runs are split down to the requested ell
            for (const Path& p : parity_out) out.paths.push_back(p);
            if (tail_ell != cfg.ell) {
                std::vector<Path> split;
                for (const Path& p : out.paths) slice_multiple(p, cfg.ell, split);
                std::optional<Path> leftover2;
                if (out.leftover) {
                    // a leftover of length <= 2*ell splits into one ell path
                    // plus a shorter leftover
                    const Path& lo = *out.leftover;
                    if (lo.length() > cfg.ell) {
                        Path head;
                        head.verts.assign(lo.verts.begin(), lo.verts.begin() + cfg.ell + 1);
                        head.edges.assign(lo.edges.begin(), lo.edges.begin() + cfg.ell);
                        split.push_back(std::move(head));
                        Path tail;
                        tail.verts.assign(lo.verts.begin() + cfg.ell, lo.verts.end());
                        tail.edges.assign(lo.edges.begin() + cfg.ell, lo.edges.end());
                        leftover2 = std::move(tail);
                    } else {
                        leftover2 = lo;
                    }
                }
                out.paths = std::move(split);
                out.leftover = std::move(leftover2);
            }
            out.stages["attempt"] = attempt;
            final_verify(g, out, cfg.ell);
            return out;
        } catch (const BudgetError& e) {
            last = e.what();
        }
    }
    throw BudgetError("decompose_24: all attempts failed; last: " + last);
}

nlohmann::json decomposition_report(const MultiGraph& g, const Decomposition& d, bool verified) {
    nlohmann::json j;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["ell"] = d.ell;
    j["seed"] = d.seed;
    nlohmann::json paths = nlohmann::json::array();
    for (const Path& p : d.paths) {
        nlohmann::json pv = nlohmann::json::array();
        for (int v : p.verts) pv.push_back(g.label(v));
        paths.push_back(pv);
    }
    j["paths"] = paths;
    if (d.leftover) {
        nlohmann::json pv = nlohmann::json::array();
        for (int v : d.leftover->verts) pv.push_back(g.label(v));
        j["leftover"] = pv;
    } else {
        j["leftover"] = nullptr;
    }
    j["stages"] = d.stages;
    j["verified"] = verified;
    return j;
}

std::string dot_export(const MultiGraph& g, const Decomposition& d) {
    static const char* palette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080"};
    std::string s = "graph decomposition {\n  node [shape=point];\n";
    int idx = 0;
    auto emit = [&](const Path& p, const char* color, const char* style) {
        for (size_t i = 0; i < p.edges.size(); ++i) {
            s += "  " + std::to_string(g.label(p.verts[i])) + " -- " +
                 std::to_string(g.label(p.verts[i + 1])) + " [color=\"" + color + "\"" + style +
                 "];\n";
        }
    };
    for (const Path& p : d.paths) emit(p, palette[idx++ % 10], "");
    if (d.leftover) emit(*d.leftover, "#000000", ", style=dashed");
    s += "}\n";
    return s;
}

}  // namespace pathcut
