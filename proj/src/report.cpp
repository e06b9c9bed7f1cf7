#include "hairpin/report.hpp"

namespace hairpin {

namespace {

Json integer_json(const mpz_class& c) {
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();
}

Json quad_json(const Bridge& b) {
    return Json{{"p1", b.p1}, {"p2", b.p2}, {"q1", b.q1}, {"q2", b.q2}, {"level", b.level}};
}

}  // namespace

Json verdict_json(const RegularityVerdict& v, const InvolutiveAlphabet& sigma) {
    Json doc;
    doc["verdict"] = to_string(v.verdict);
    doc["fired"] = to_string(v.fired);
    doc["orientation"] = to_string(v.orientation);
    if (v.witness) {
        const Witness& w = *v.witness;
        Json wj = Json::object();
        wj["reason"] = w.reason;
        auto word = [&](const char* key, const std::optional<Word>& x) {
            if (x) wj[key] = sigma.format(*x);
        };
        auto state = [&](const char* key, const std::optional<State>& x) {
            if (x) wj[key] = *x;
        };
        if (w.scc_id) wj["scc"] = *w.scc_id;
        if (w.initial) wj["initial"] = quad_json(*w.initial);
        if (w.anchor) wj["anchor"] = quad_json(*w.anchor);
        word("v", w.v);
        word("x", w.x);
        word("y", w.y);
        word("y_prime", w.y_prime);
        word("z", w.z);
        if (w.letter) wj["letter"] = sigma.token(*w.letter);
        state("c1", w.c1);
        state("c2", w.c2);
        state("d1", w.d1);
        state("d2", w.d2);
        word("tail", w.tail);
        word("beta", w.beta);
        if (w.offending) wj["offending"] = quad_json(*w.offending);
        if (w.mark) wj["mark"] = *w.mark;
        if (w.finite_side) wj["finite_side"] = *w.finite_side;
        doc["witness"] = std::move(wj);
    } else {
        doc["witness"] = nullptr;
    }
    const DeciderStats& s = v.stats;
    doc["stats"] = Json{{"n1", s.n1},
                        {"n2", s.n2},
                        {"n12", s.n12},
                        {"state_bound", s.state_bound},
                        {"bridges", s.bridges},
                        {"arcs", s.arcs},
                        {"initial_bridges", s.initial_bridges},
                        {"final_bridges", s.final_bridges},
                        {"sccs", s.sccs},
                        {"test2_candidates", s.test2_candidates},
                        {"test3_candidates", s.test3_candidates},
                        {"condition5_disagreements", s.condition5_disagreements}};
    doc["notes"] = v.notes;
    return doc;
}

Json growth_class_json(const GrowthClass& g) {
    return Json{{"class", to_string(g.kind)},
                {"indicator", g.indicator},
                {"tolerance", g.tolerance},
                {"converged", g.converged}};
}

Json growth_json(const GrowthReport& r) {
    Json doc;
    doc["lambda"] = growth_class_json(r.lambda);
    doc["lambda_L1_restricted"] = growth_class_json(r.lambda_l1);
    doc["lambda_L2_restricted"] = growth_class_json(r.lambda_l2);
    doc["lambda_L1_raw"] = growth_class_json(r.raw_l1);
    doc["lambda_L2_raw"] = growth_class_json(r.raw_l2);
    doc["sigma"] = growth_class_json(r.sigma);
    doc["rho"] = growth_class_json(r.rho);
    doc["eta"] = growth_class_json(r.eta);
    doc["pair_languages"] = r.pair_languages;
    doc["bounds_ok"] = r.bounds_ok;
    doc["regular_equality_ok"] = r.regular_equality_ok ? Json(*r.regular_equality_ok) : Json(nullptr);
    doc["pair_maximum_ok"] = r.pair_maximum_ok;
    doc["tolerance"] = r.tolerance;
    return doc;
}

Json counts_json(const std::vector<mpz_class>& counts) {
    Json out = Json::array();
    for (const auto& c : counts) out.push_back(integer_json(c));
    return out;
}

Json series_json(const RationalSeries& s) {
    return Json{{"numerator", counts_json(s.numerator.coefficients())},
                {"denominator", counts_json(s.denominator.coefficients())}};
}

Json crosscheck_json(const CrossCheckReport& r) {
    Json doc;
    doc["max_len"] = r.max_len;
    doc["passed"] = r.passed();
    Json items = Json::array();
    for (const CheckItem& c : r.items) items.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["checks"] = std::move(items);
    return doc;
}

}  // namespace hairpin
