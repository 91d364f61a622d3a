#include "altermatic/report.hpp"

namespace altermatic {

Json to_json(const SignVector& x)
{
    return Json{{"word", x.to_word()}, {"reds", set_elements(x.reds)}, {"blues", set_elements(x.blues)}};
}

Json to_json(const Hypergraph& h, const Witness& w, const LinearOrder& sigma)
{
    const SignVector vertices = apply_order(w.context, sigma);
    return Json{
        {"origin", to_string(w.origin)},
        {"edge_a", {{"index", w.edge_a + 1}, {"vertices", set_elements(h.edge(w.edge_a))}}},
        {"edge_b", {{"index", w.edge_b + 1}, {"vertices", set_elements(h.edge(w.edge_b))}}},
        {"color", w.color},
        {"context_word", w.context.to_word()},
        {"context_vertices", to_json(vertices)},
    };
}

Json to_json(const AltReport& r)
{
    Json j{
        {"alt", r.alt_value},
        {"k", r.k},
        {"bound", r.bound},
        {"sigma", r.sigma.perm()},
        {"sigma_mode", to_string(r.sigma_mode)},
        {"orderings_evaluated", r.orderings_evaluated},
        {"witness_word", r.witness.to_word()},
        {"witness_vertices", to_json(apply_order(r.witness, r.sigma))},
    };
    j["exact_chi"] = r.exact_chi ? Json(*r.exact_chi) : Json(nullptr);
    return j;
}

Json to_json(const TheoremCheck& t)
{
    return Json{
        {"bound", t.bound},
        {"chi", t.chi},
        {"holds", t.holds},
        {"tight", t.tight},
        {"alt_report", to_json(t.report)},
        {"chi_coloring", t.chi_witness.assignment},
    };
}

Json to_json(const Hypergraph& h, const AuditResult& a, const LinearOrder& sigma)
{
    Json j{
        {"outcome", a.kind == AuditResult::Kind::witness ? "witness" : "proper_within_bound"},
        {"steps", a.steps},
        {"alt_sigma", a.alt_sigma_value},
        {"palette", a.palette},
        {"palette_bound", a.palette_bound},
        {"sigma", sigma.perm()},
        {"last_sequence", a.last.steps},
    };
    j["witness"] = a.witness ? to_json(h, *a.witness, sigma) : Json(nullptr);
    return j;
}

std::string describe(const Hypergraph& h, const Witness& w, const LinearOrder& sigma)
{
    return "edges #" + std::to_string(w.edge_a + 1) + " " + format_set(h.edge(w.edge_a)) + " and #" +
           std::to_string(w.edge_b + 1) + " " + format_set(h.edge(w.edge_b)) + " are disjoint and share color " +
           std::to_string(w.color) + " (found via " + to_string(w.origin) + " at word " + w.context.to_word() +
           ", vertices R=" + format_set(apply_order(w.context, sigma).reds) +
           " B=" + format_set(apply_order(w.context, sigma).blues) + ")";
}

} // namespace altermatic
