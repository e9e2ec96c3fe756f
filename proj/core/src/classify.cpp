#include "eisq/classify.hpp"

#include "eisq/complex.hpp"
#include "eisq/independence.hpp"
#include "json_writer.hpp"

namespace eisq {

namespace {

void refuse_isolated(const Graph& g, const char* where) {
    if (g.has_isolated_vertex())
        throw precondition_error(std::string(where) + ": graph has an isolated vertex");
}

/// Every nontrivial connected component of every G_v is triangle-free and in
/// W2 (trivial components are single vertices).
bool local_components_tf_w2(const Graph& g, const Budget* budget) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        Subgraph gv = local_graph(g, VertexSet::of({v}));
        for (VertexSet comp : connected_components(gv.graph)) {
            if (comp.size() < 2) continue;
            Graph h = induced(gv.graph, comp).graph;
            if (!is_triangle_free(h)) return false;
            if (!is_w2(h, budget)) return false;
        }
    }
    return true;
}

bool buchsbaum_gallery_clause(const GalleryId& id) {
    switch (id.family) {
        case GalleryFamily::complete: return id.parameter >= 3;
        case GalleryFamily::cycle_complement: return id.parameter >= 6;
        case GalleryFamily::b: return id.parameter >= 4;
        case GalleryFamily::q9:
        case GalleryFamily::q12:
        case GalleryFamily::p10:
        case GalleryFamily::p12: return true;
        default: return false;
    }
}

bool gorenstein_gallery_clause(const GalleryId& id) {
    switch (id.family) {
        case GalleryFamily::cycle_complement: return id.parameter >= 6;
        case GalleryFamily::q9:
        case GalleryFamily::q12:
        case GalleryFamily::p10:
        case GalleryFamily::p12: return true;
        default: return false;
    }
}

bool exceptional_four_clause(const GalleryId& id) {
    switch (id.family) {
        case GalleryFamily::q9:
        case GalleryFamily::q12:
        case GalleryFamily::p10:
        case GalleryFamily::p12: return true;
        default: return false;
    }
}

std::string gallery_rule(const GalleryId& id) {
    std::string rule = std::string("isomorphic to ") + family_name(id.family);
    if (id.parameter > 0) rule += "(" + std::to_string(id.parameter) + ")";
    return rule;
}

// degree multiset of a spanning path: two endpoints of degree 1, rest 2
bool is_spanning_path(const Graph& h) {
    int n = h.vertex_count();
    if (n < 2) return n == 1;
    if (h.edge_count() != n - 1) return false;
    int ones = 0;
    for (int v = 0; v < n; ++v) {
        int d = h.degree(v);
        if (d == 1)
            ++ones;
        else if (d != 2)
            return false;
    }
    return ones == 2 && connected_components(h).size() == 1;
}

bool is_spanning_cycle(const Graph& h) {
    int n = h.vertex_count();
    if (n < 3 || h.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) != 2) return false;
    return connected_components(h).size() == 1;
}

}  // namespace

bool is_cm_square(const Graph& g, const Budget* budget) {
    refuse_isolated(g, "is_cm_square");
    return is_triangle_free(g) && is_w2(g, budget);
}

bool is_gcm_square(const Graph& g, const Budget* budget) {
    refuse_isolated(g, "is_gcm_square");
    return is_well_covered(g, budget) && local_components_tf_w2(g, budget);
}

bool is_buchsbaum_square(const Graph& g, const Budget* budget) {
    refuse_isolated(g, "is_buchsbaum_square");
    if (is_triangle_free(g) && is_w2(g, budget)) return true;
    auto id = match_gallery(g);
    return id && buchsbaum_gallery_clause(*id);
}

bool buchsbaum_square_oracle(const Graph& g, const PrimeField& field, const Budget* budget) {
    refuse_isolated(g, "buchsbaum_square_oracle");
    int alpha = independence_number(g);
    if (alpha <= 1) return true;
    if (alpha == 2) {
        // the 1-skeleton of the independence complex is the complement graph
        Graph skeleton = complement(g);
        if (g.vertex_count() < 4) return false;
        return is_spanning_cycle(skeleton) || is_spanning_path(skeleton);
    }
    return is_cm_complex(independence_complex(g, budget), field, budget) &&
           local_components_tf_w2(g, budget);
}

bool is_gorenstein_locally_tf(const Graph& g, const Budget* budget) {
    refuse_isolated(g, "is_gorenstein_locally_tf");
    if (!is_locally_triangle_free(g))
        throw precondition_error("is_gorenstein_locally_tf: graph is not locally triangle-free");
    if (is_triangle_free(g) && is_w2(g, budget)) return true;
    auto id = match_gallery(g);
    return id && gorenstein_gallery_clause(*id);
}

bool is_locally_tf_w2_classified(const Graph& g, const Budget* budget) {
    refuse_isolated(g, "is_locally_tf_w2_classified");
    if (independence_number(g) < 3)
        throw precondition_error("is_locally_tf_w2_classified: requires alpha >= 3");
    if (join_factors(g).size() != 1)
        throw precondition_error("is_locally_tf_w2_classified: graph is a join of proper subgraphs");
    if (is_triangle_free(g) && is_w2(g, budget)) return true;
    auto id = match_gallery(g);
    return id && exceptional_four_clause(*id);
}

ClassificationReport classify(const Graph& g, const ClassificationOptions& options) {
    refuse_isolated(g, "classify");
    const Budget* budget = options.budget;

    ClassificationReport r;
    r.graph6 = to_graph6(g);
    r.n = g.vertex_count();
    r.edges = g.edge_count();
    r.alpha = independence_number(g);
    r.well_covered = is_well_covered(g, budget);
    r.w2 = r.well_covered && is_w2(g, budget);
    r.triangle_free = is_triangle_free(g);
    r.locally_triangle_free = r.triangle_free || is_locally_triangle_free(g);
    r.join_factor_count = static_cast<int>(join_factors(g).size());
    r.gallery_match = match_gallery(g);

    r.cm_square = r.triangle_free && r.w2;
    r.cm_square_rule = !r.triangle_free ? "has a triangle"
                       : !r.w2          ? "triangle-free but not in W2"
                                        : "triangle-free and in W2";

    if (!r.well_covered) {
        r.gcm_square = false;
        r.gcm_square_rule = "not well-covered";
    } else if (!local_components_tf_w2(g, budget)) {
        r.gcm_square = false;
        r.gcm_square_rule = "some G_v has a nontrivial component that is not triangle-free in W2";
    } else {
        r.gcm_square = true;
        r.gcm_square_rule =
            "well-covered, and every nontrivial component of every G_v is triangle-free in W2";
    }

    if (r.cm_square) {
        r.buchsbaum_square = true;
        r.buchsbaum_square_rule = "triangle-free and in W2";
    } else if (r.gallery_match && buchsbaum_gallery_clause(*r.gallery_match)) {
        r.buchsbaum_square = true;
        r.buchsbaum_square_rule = gallery_rule(*r.gallery_match);
    } else {
        r.buchsbaum_square = false;
        r.buchsbaum_square_rule = "matches no clause of the classification";
    }

    if (r.locally_triangle_free) {
        if (r.cm_square) {
            r.gorenstein_locally_tf = true;
            r.gorenstein_rule = "triangle-free and in W2";
        } else if (r.gallery_match && gorenstein_gallery_clause(*r.gallery_match)) {
            r.gorenstein_locally_tf = true;
            r.gorenstein_rule = gallery_rule(*r.gallery_match);
        } else {
            r.gorenstein_locally_tf = false;
            r.gorenstein_rule = "matches no clause of the classification";
        }
    } else {
        r.gorenstein_rule = "not locally triangle-free: classification does not apply";
    }

    if (options.with_oracle) {
        PrimeField field(options.characteristic);
        r.oracle_characteristic = field.characteristic();
        r.oracle_buchsbaum = buchsbaum_square_oracle(g, field, budget);
        r.oracle_gorenstein = is_gorenstein_complex(independence_complex(g, budget), field, budget);
        r.agreement_buchsbaum = (*r.oracle_buchsbaum == r.buchsbaum_square);
        if (r.gorenstein_locally_tf)
            r.agreement_gorenstein = (*r.oracle_gorenstein == *r.gorenstein_locally_tf);
    }
    return r;
}

std::string to_json(const ClassificationReport& r) {
    detail::JsonObject obj;
    obj.field("graph6", r.graph6)
        .field("n", r.n)
        .field("edges", r.edges)
        .field("alpha", r.alpha)
        .field("well_covered", r.well_covered)
        .field("w2", r.w2)
        .field("triangle_free", r.triangle_free)
        .field("locally_triangle_free", r.locally_triangle_free)
        .field("join_factor_count", r.join_factor_count);

    if (r.gallery_match) {
        detail::JsonObject match;
        match.field("family", family_name(r.gallery_match->family));
        if (r.gallery_match->parameter > 0)
            match.field("parameter", r.gallery_match->parameter);
        else
            match.null_field("parameter");
        match.raw("witness", detail::json_int_array(r.gallery_match->witness));
        obj.raw("gallery_match", match.str());
    } else {
        obj.null_field("gallery_match");
    }

    obj.field("cm_square", r.cm_square)
        .field("cm_square_rule", r.cm_square_rule)
        .field("gcm_square", r.gcm_square)
        .field("gcm_square_rule", r.gcm_square_rule)
        .field("buchsbaum_square", r.buchsbaum_square)
        .field("buchsbaum_square_rule", r.buchsbaum_square_rule);

    if (r.gorenstein_locally_tf)
        obj.field("gorenstein_locally_tf", *r.gorenstein_locally_tf);
    else
        obj.null_field("gorenstein_locally_tf");
    obj.field("gorenstein_rule", r.gorenstein_rule);

    if (r.oracle_characteristic) {
        obj.field("oracle_characteristic", *r.oracle_characteristic);
        obj.field("oracle_buchsbaum", *r.oracle_buchsbaum);
        obj.field("oracle_gorenstein", *r.oracle_gorenstein);
        obj.field("agreement_buchsbaum", *r.agreement_buchsbaum);
        if (r.agreement_gorenstein)
            obj.field("agreement_gorenstein", *r.agreement_gorenstein);
        else
            obj.null_field("agreement_gorenstein");
    } else {
        obj.null_field("oracle_characteristic")
            .null_field("oracle_buchsbaum")
            .null_field("oracle_gorenstein")
            .null_field("agreement_buchsbaum")
            .null_field("agreement_gorenstein");
    }
    return obj.str();
}

}  // namespace eisq
