#include "udg/claims.hpp"

#include "udg/catalog.hpp"
#include "udg/error.hpp"
#include "udg/plane.hpp"
#include "udg/solver.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace udg {

using ordered_json = nlohmann::ordered_json;

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "VERIFIED";
    case Verdict::VerifiedSampled: return "VERIFIED_SAMPLED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::UndecidedAtDeskScale: return "UNDECIDED_AT_DESK_SCALE";
    }
    return "UNDECIDED_AT_DESK_SCALE";
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids{"C1", "C2", "C3", "C4", "C5", "C6"};
    return ids;
}

namespace {

constexpr std::string_view kRefutedAsArgued = "REFUTED-AS-ARGUED";

ordered_json colors_json(const Coloring& c) {
    auto arr = ordered_json::array();
    for (auto col : c.colors()) arr.push_back(col);
    return arr;
}

struct ChromaticEvidence {
    UdGraph graph;
    ChromaticResult result;
    bool witness_ok = false;
};

ChromaticEvidence chromatic_evidence(std::string_view name) {
    ChromaticEvidence ev{catalog_graph(name), {}, false};
    ev.result = chromatic_number(ev.graph);
    ev.witness_ok = verify_coloring(ev.graph, ev.result.witness);
    return ev;
}

ClaimVerdict lower_bound_claim() {
    ClaimVerdict c;
    c.id = "C1";
    c.statement = "chi(E^2) >= 4: the Moser spindle is a unit-distance graph with chromatic number 4";
    c.method = "exact construction in Q(sqrt(3), sqrt(11)); DSATUR branch and bound finds a "
               "4-coloring and exhausts all 3-colorings";
    auto ev = chromatic_evidence("moser");
    c.evidence.kind = "chromatic_number";
    c.evidence.ref = "moser";
    auto& num = c.evidence.numbers;
    num["vertices"] = ev.graph.vertex_count();
    num["edges"] = ev.graph.edge_count();
    num["chromatic_number"] = ev.result.chromatic_number;
    num["witness"] = colors_json(ev.result.witness);
    num["witness_verified"] = ev.witness_ok;
    bool infeasible = ev.result.below && !ev.result.below->colorable;
    num["infeasible_k"] = ev.result.chromatic_number - 1;
    num["infeasible_nodes"] = ev.result.below ? ev.result.below->nodes_explored : 0;
    c.verdict = (ev.result.chromatic_number == 4 && ev.witness_ok && infeasible)
                    ? Verdict::Verified
                    : Verdict::UndecidedAtDeskScale;
    return c;
}

ClaimVerdict upper_bound_claim(const ClaimsConfig& config) {
    ClaimVerdict c;
    c.id = "C2";
    c.statement = "chi(E^2) <= 7: a periodic 7-coloring of a regular hexagonal tiling with cell "
                  "diameter below 1 has no monochromatic unit pair";
    c.method = "validity window of the side length by exhaustive same-color cell scan; seeded "
               "sampling of unit-distance pairs in floating point";
    auto report = hex7_verify(config.hex_samples, config.seed);
    c.evidence.kind = "sampling_report";
    c.evidence.ref = "hex7";
    auto& num = c.evidence.numbers;
    num["samples"] = report.samples;
    num["seed"] = report.seed;
    num["failures"] = report.failures;
    num["regenerated"] = report.regenerated;
    num["side"] = report.side;
    num["coefficients"] = {report.alpha, report.beta};
    num["s_min"] = report.window.s_min;
    num["s_max"] = report.window.s_max;
    num["min_same_color_distance"] = report.min_same_color_distance;
    bool ok = report.failures == 0 && report.window.contains(report.side) && report.samples > 0;
    c.verdict = ok ? Verdict::VerifiedSampled : Verdict::UndecidedAtDeskScale;
    return c;
}

ClaimVerdict degree_lemma_claim() {
    ClaimVerdict c;
    c.id = "C3";
    c.statement = "every finite unit-distance graph has a vertex of degree at most 3";
    c.method = "exact double Minkowski sum of a unit triangle with pyth(1/2) and pyth(1/3); "
               "minimum degree and degeneracy of the resulting graph";
    auto g = catalog_graph("c3_mink2");
    auto report = degeneracy(g);
    c.evidence.kind = "counterexample";
    c.evidence.ref = "c3_mink2";
    auto& num = c.evidence.numbers;
    num["vertices"] = g.vertex_count();
    num["edges"] = g.edge_count();
    num["min_degree"] = report.min_degree;
    num["degeneracy"] = report.degeneracy;
    c.verdict = report.min_degree >= 4 ? Verdict::Refuted : Verdict::UndecidedAtDeskScale;
    return c;
}

ClaimVerdict base_case_claim() {
    ClaimVerdict c;
    c.id = "C4";
    c.statement = "every unit-distance graph with at most 10 vertices has chromatic number at most 4";
    c.method = "exact chromatic number of the named instances; the universal statement ranges "
               "over all realizable graphs on <= 10 vertices and is not enumerated";
    auto moser = chromatic_evidence("moser");
    auto golomb = chromatic_evidence("golomb");
    c.evidence.kind = "instances";
    c.evidence.ref = "moser,golomb";
    auto& num = c.evidence.numbers;
    num["moser_vertices"] = moser.graph.vertex_count();
    num["moser_chromatic_number"] = moser.result.chromatic_number;
    num["golomb_vertices"] = golomb.graph.vertex_count();
    num["golomb_edges"] = golomb.graph.edge_count();
    num["golomb_chromatic_number"] = golomb.result.chromatic_number;
    auto instance = [](const ChromaticEvidence& ev) {
        return ev.witness_ok && ev.result.chromatic_number <= 4 ? Verdict::Verified : Verdict::Refuted;
    };
    c.instances = {{"moser", instance(moser)}, {"golomb", instance(golomb)}};
    c.verdict = Verdict::UndecidedAtDeskScale;
    return c;
}

ClaimVerdict circle_fact_claim() {
    ClaimVerdict c;
    c.id = "C5";
    c.statement = "for two centers at distance in (0, 2) exactly two points lie at unit "
                  "distance from both";
    c.method = "exact unit_circle_pair on centers at squared distance 1, 2, 3 and Pythagorean "
               "directions; both outputs checked at exact unit distance and distinct";
    const EPoint origin{QNum(0), QNum(0)};
    std::vector<EPoint> partners{
        {QNum(1), QNum(0)},
        {QNum(Rat(1, 2)), sqrt_rational(3) * Rat(1, 2)},
        {QNum(1), QNum(1)},
        {QNum(Rat(3, 2)), sqrt_rational(3) * Rat(1, 2)},
        pyth_unit_vector(Rat(1, 2)).as_point(),
        pyth_unit_vector(Rat(2, 7)).as_point(),
        {QNum(Rat(6, 5)), QNum(Rat(2, 5))},
    };
    std::size_t exact = 0, distinct = 0;
    for (const auto& b : partners) {
        auto [p, q] = unit_circle_pair(origin, b);
        if (is_unit(p, origin) && is_unit(p, b) && is_unit(q, origin) && is_unit(q, b))
            ++exact;
        if (!(p == q))
            ++distinct;
    }
    auto patch = triangular_patch(1);
    c.evidence.kind = "circle_intersections";
    c.evidence.ref = "unit_circle_pair";
    auto& num = c.evidence.numbers;
    num["pairs_checked"] = partners.size();
    num["exact_unit_pairs"] = exact;
    num["distinct_pairs"] = distinct;
    num["tri_patch1_max_degree"] = patch.max_degree();
    c.annotation = "tri_patch1 has a degree-" + std::to_string(patch.max_degree()) +
                   " vertex: two intersection points per circle pair do not bound degrees";
    c.verdict = (exact == partners.size() && distinct == partners.size())
                    ? Verdict::Verified
                    : Verdict::Refuted;
    return c;
}

ClaimVerdict theorem_claim() {
    ClaimVerdict c;
    c.id = "C6";
    c.statement = "chi(E^2) = 4";
    c.method = "statement: finite evidence brackets chi(E^2) in [4, 7] only; argument: "
               "induction on vertex count via the degree lemma (C3)";
    auto lemma = degree_lemma_claim();
    c.evidence.kind = "dependency";
    c.evidence.ref = "C3";
    auto& num = c.evidence.numbers;
    num["lower_bound"] = 4;
    num["upper_bound"] = 7;
    num["lemma_counterexample_min_degree"] = lemma.evidence.numbers["min_degree"];
    c.verdict = Verdict::UndecidedAtDeskScale;
    if (lemma.verdict == Verdict::Refuted)
        c.proof_status = std::string(kRefutedAsArgued);
    return c;
}

std::vector<OutOfScopeClaim> out_of_scope_claims() {
    return {
        {"COR1", "Euclidean Ramsey value R(S2, 4) = 3",
         "depends on the theorem; parameterization undefined"},
        {"COR2", "polychromatic number chi_p(E^2) = 4",
         "depends on the theorem and an external lower bound"},
    };
}

} // namespace

ClaimVerdict evaluate_claim(std::string_view id, const ClaimsConfig& config) {
    if (id == "C1") return lower_bound_claim();
    if (id == "C2") return upper_bound_claim(config);
    if (id == "C3") return degree_lemma_claim();
    if (id == "C4") return base_case_claim();
    if (id == "C5") return circle_fact_claim();
    if (id == "C6") return theorem_claim();
    fail(Errc::UnknownClaim, "no claim with id '" + std::string(id) + "'");
}

std::vector<std::string> check_consistency(const std::vector<ClaimVerdict>& claims) {
    std::vector<std::string> failures;
    auto find = [&](std::string_view id) -> const ClaimVerdict* {
        for (const auto& c : claims)
            if (c.id == id)
                return &c;
        return nullptr;
    };

    if (const auto* c1 = find("C1"); c1 && c1->verdict == Verdict::Verified) {
        auto g = catalog_graph("moser");
        std::vector<Color> colors;
        for (const auto& v : c1->evidence.numbers.at("witness")) colors.push_back(v.get<Color>());
        if (!verify_coloring(g, Coloring(colors, 4)))
            failures.push_back("C1 witness is not a proper coloring of the Moser spindle");
        if (is_k_colorable(g, 3).colorable)
            failures.push_back("C1 verified but the Moser spindle is 3-colorable");
    }
    if (const auto* c3 = find("C3"); c3 && c3->verdict == Verdict::Refuted) {
        auto g = catalog_graph("c3_mink2");
        if (!(UdGraph::from_points(*g.points()) == g))
            failures.push_back("C3 counterexample fails geometry forcing");
        if (g.min_degree() < 4)
            failures.push_back("C3 counterexample has a vertex of degree <= 3");
        if (max_clique(g) > 3)
            failures.push_back("C3 counterexample contains K4");
    }
    if (const auto* c5 = find("C5"); c5 && triangular_patch(1).max_degree() != 6)
        failures.push_back("C5 annotation expects a degree-6 lattice vertex");
    if (const auto* c6 = find("C6")) {
        const auto* c3 = find("C3");
        bool lemma_refuted = c3 && c3->verdict == Verdict::Refuted;
        if (lemma_refuted != (c6->proof_status == kRefutedAsArgued) && c3)
            failures.push_back("C6 proof status disagrees with C3");
        if (c6->verdict != Verdict::UndecidedAtDeskScale)
            failures.push_back("C6 statement cannot be settled by finite computation");
    }
    const auto* c1 = find("C1");
    const auto* c2 = find("C2");
    if (c1 && c2 && c1->verdict == Verdict::Verified && c2->verdict == Verdict::VerifiedSampled &&
        !(c1->evidence.numbers.at("chromatic_number").get<int>() <= 7))
        failures.push_back("lower bound from C1 exceeds the upper bound from C2");
    return failures;
}

namespace {

ClaimsReport assemble(std::vector<ClaimVerdict> claims, const ClaimsConfig& config) {
    ClaimsReport report;
    report.seed = config.seed;
    report.claims = std::move(claims);
    report.out_of_scope = out_of_scope_claims();
    report.consistency_failures = check_consistency(report.claims);
    return report;
}

} // namespace

ClaimsReport evaluate_all(const ClaimsConfig& config) {
    std::vector<std::future<ClaimVerdict>> pending;
    for (const auto& id : claim_ids())
        pending.push_back(std::async(std::launch::async, [&config, id] { return evaluate_claim(id, config); }));
    std::vector<ClaimVerdict> claims;
    for (auto& f : pending) claims.push_back(f.get());
    return assemble(std::move(claims), config);
}

ClaimsReport evaluate_one(std::string_view id, const ClaimsConfig& config) {
    return assemble({evaluate_claim(id, config)}, config);
}

std::string ClaimsReport::to_json() const {
    ordered_json j;
    auto arr = ordered_json::array();
    for (const auto& c : claims) {
        ordered_json e;
        e["id"] = c.id;
        e["statement"] = c.statement;
        e["method"] = c.method;
        e["verdict"] = verdict_name(c.verdict);
        if (c.proof_status)
            e["proof_status"] = *c.proof_status;
        if (c.annotation)
            e["annotation"] = *c.annotation;
        if (!c.instances.empty()) {
            ordered_json inst;
            for (const auto& [name, v] : c.instances) inst[name] = verdict_name(v);
            e["instances"] = std::move(inst);
        }
        e["evidence"] = {{"kind", c.evidence.kind},
                         {"ref", c.evidence.ref},
                         {"numbers", c.evidence.numbers}};
        arr.push_back(std::move(e));
    }
    j["claims"] = std::move(arr);
    auto oos = ordered_json::array();
    for (const auto& o : out_of_scope)
        oos.push_back({{"id", o.id}, {"statement", o.statement}, {"verdict", "OUT_OF_SCOPE"},
                       {"reason", o.reason}});
    j["out_of_scope"] = std::move(oos);
    j["consistent"] = consistent();
    if (!consistent())
        j["consistency_failures"] = consistency_failures;
    j["note"] = "chi(E^2) = 4 is not established by these computations; the finite evidence "
                "only brackets chi(E^2) in [4, 7]";
    j["generated_by"] = "udg " + std::string(kVersion);
    j["seed_set"] = {seed};
    return j.dump(2) + "\n";
}

std::string ClaimsReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : claims) {
        out << c.id << "  " << verdict_name(c.verdict);
        if (c.proof_status)
            out << "  (proof: " << *c.proof_status << ")";
        out << "\n    statement: " << c.statement << "\n    method:    " << c.method
            << "\n    evidence:  " << c.evidence.kind << " " << c.evidence.ref << " "
            << c.evidence.numbers.dump() << "\n";
        for (const auto& [name, v] : c.instances)
            out << "    instance:  " << name << " " << verdict_name(v) << "\n";
        if (c.annotation)
            out << "    note:      " << *c.annotation << "\n";
    }
    for (const auto& o : out_of_scope)
        out << o.id << "  OUT_OF_SCOPE\n    statement: " << o.statement << "\n    reason:    "
            << o.reason << "\n";
    out << "consistent: " << (consistent() ? "yes" : "no") << "\n";
    for (const auto& f : consistency_failures) out << "  ! " << f << "\n";
    out << "seed: " << seed << "\n";
    return out.str();
}

} // namespace udg
