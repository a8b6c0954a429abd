#include "schurkit/report.hpp"

#include <sstream>

namespace schurkit {

namespace {

Json opt(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json orders(const std::vector<Subgroup>& series) {
    Json a = Json::array();
    for (const Subgroup& h : series) a.push_back(h.order());
    return a;
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string invariants_str(const std::vector<std::uint64_t>& inv) {
    if (inv.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? " x Z" : "Z") + std::to_string(inv[i]);
    return s;
}

template <class T>
std::string str(const std::optional<T>& v) {
    return v ? std::to_string(*v) : "";
}

// RFC 4180 quoting when needed
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

Json to_json(const StructureReport& s) {
    Json j;
    j["order"] = s.order;
    j["prime"] = opt(s.prime);
    j["exponent"] = s.exponent;
    j["nilpotency_class"] = opt(s.nilpotency_class);
    j["derived_length"] = s.derived_length;
    j["abelian"] = s.is_abelian();
    j["lower_central_orders"] = orders(s.lower_central);
    j["upper_central_orders"] = orders(s.upper_central);
    j["derived_series_orders"] = orders(s.derived_series);
    j["center_order"] = s.center.order();
    j["center_exponent"] = s.center_exponent;
    j["central_quotient_exponent"] = s.central_quotient_exponent;
    j["commutator_order"] = s.commutator.order();
    j["frattini_order"] = s.frattini ? Json(s.frattini->order()) : Json(nullptr);
    j["agemo_order"] = s.agemo ? Json(s.agemo->order()) : Json(nullptr);
    j["abelianization"] = s.abelianization;
    j["generator_rank"] = opt(s.generator_rank);
    j["properties"] = {
        {"metacyclic", to_string(s.metacyclic)},
        {"commutator_cyclic", to_string(s.commutator_cyclic)},
        {"frattini_abelian", to_string(s.frattini_abelian)},
        {"frattini_cyclic", to_string(s.frattini_cyclic)},
        {"frattini_powerful", to_string(s.frattini_powerful)},
        {"commutator_powerful", to_string(s.commutator_powerful)},
        {"gamma_p_plus_1_powerful", to_string(s.gamma_p_plus_1_powerful)},
        {"center_in_frattini", to_string(s.center_in_frattini)},
    };
    j["normal_search_complete"] = to_string(s.normal_search_complete);
    j["normal_subgroups"] = s.normal_subgroups.size();
    j["abelian_normal_orders"] = orders(s.abelian_normal);
    return j;
}

Json to_json(const CheckResult& c) {
    return {{"name", c.name}, {"passed", c.passed}, {"exhaustive", c.exhaustive}, {"cases", c.cases},
            {"detail", c.detail}};
}

Json to_json(const TensorSquareResult& r) {
    Json j;
    j["status"] = r.status;
    j["tier"] = to_string(r.tier);
    j["group_order"] = r.group_order;
    j["commutator_order"] = r.commutator_order;
    if (r.complete()) {
        j["cosets"] = r.cosets;
        j["nu_order"] = r.nu_order;
        j["tensor_order"] = opt(r.tensor_order);
        j["tensor_exponent"] = opt(r.tensor_exponent);
        j["nabla_order"] = opt(r.nabla_order);
        j["exterior_order"] = r.exterior_order;
        j["exterior_exponent"] = r.exterior_exponent;
        j["kappa_image_order"] = r.kappa_image_order;
        j["multiplier_order"] = r.multiplier_order;
        j["multiplier_exponent"] = r.multiplier_exponent;
        j["multiplier_invariants"] = r.multiplier_invariants;
    }
    j["enumeration"] = {{"defined", r.stats.defined},
                        {"max_live", r.stats.max_live},
                        {"coincidences", r.stats.coincidences},
                        {"lookaheads", r.stats.lookaheads},
                        {"rounds", r.rounds},
                        {"relators", r.relators},
                        {"added_relators", r.added_relators}};
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["label"] = r.label;
    j["rank"] = r.rank;
    j["class"] = r.nil_class;
    j["parametric"] = r.parametric;
    j["degree_bound"] = r.degree_bound;
    j["argument"] = r.argument;
    Json pts = Json::array();
    for (const auto& p : r.points) {
        Json q{{"n", p.n}, {"equal", p.equal}};
        if (p.first_mismatch) {
            q["first_mismatch"] = *p.first_mismatch;
            q["mismatch_label"] = p.mismatch_label;
        }
        pts.push_back(q);
    }
    j["points"] = pts;
    j["free_group_equal"] = opt(r.free_group_equal);
    j["all_equal"] = r.all_equal;
    j["certified"] = r.certified;
    return j;
}

Json to_json(const ConjectureVerdict& v) {
    return {{"c1", v.c1},
            {"c2", v.c2},
            {"c3", opt(v.c3)},
            {"group_exponent", v.group_exponent},
            {"multiplier_exponent", v.multiplier_exponent}};
}

Json to_json(const TheoremRecord& t) {
    Json j{{"id", t.id}, {"statement", t.statement}, {"hypotheses", to_string(t.hypotheses)},
           {"reason", t.reason},   {"bound", t.bound}};
    if (t.bound_holds) {
        j["lhs"] = t.lhs;
        j["rhs"] = t.rhs;
    }
    j["bound_holds"] = opt(t.bound_holds);
    j["review"] = t.review;
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

Json to_json(const ScanRow& row) {
    Json j;
    j["source"] = row.source;
    j["status"] = row.status;
    if (!row.error.empty()) j["error"] = row.error;
    if (!row.overlap_failures.empty()) j["overlap_failures"] = row.overlap_failures;
    if (row.status == "rejected") return j;
    j["order"] = row.order;
    j["prime"] = opt(row.prime);
    j["nilpotency_class"] = opt(row.nilpotency_class);
    j["derived_length"] = row.derived_length;
    j["e_group"] = row.e_group;
    j["e_center"] = row.e_center;
    j["e_central_quotient"] = row.e_central_quotient;
    j["e_tensor"] = opt(row.e_tensor);
    j["e_exterior"] = opt(row.e_exterior);
    j["e_multiplier"] = opt(row.e_multiplier);
    j["tensor_order"] = opt(row.tensor_order);
    j["exterior_order"] = opt(row.exterior_order);
    j["multiplier_order"] = opt(row.multiplier_order);
    j["multiplier_invariants"] = row.multiplier_invariants;
    j["classes"] = row.classes;
    j["verdict"] = row.verdict ? to_json(*row.verdict) : Json(nullptr);
    Json th = Json::array();
    for (const auto& t : row.theorems) th.push_back(to_json(t));
    j["theorems"] = th;
    Json ch = Json::array();
    for (const auto& c : row.checks) ch.push_back(to_json(c));
    j["checks"] = ch;
    j["enumeration"] = {{"tier", row.tier},
                        {"cosets", row.cosets},
                        {"defined", row.cosets_defined},
                        {"coincidences", row.coincidences},
                        {"lookaheads", row.lookaheads},
                        {"relator_rounds", row.relator_rounds}};
    j["red_alert"] = row.red_alert();
    return j;
}

Json to_json(const ScanReport& rep) {
    Json j;
    j["schema"] = scan_schema;
    j["seed"] = rep.seed;
    j["budget"] = rep.budget;
    j["summary"] = {{"rows", rep.rows.size()},
                    {"red_alerts", rep.red_alerts()},
                    {"check_failures", rep.check_failures()},
                    {"rejected", rep.rejected()},
                    {"budget_exceeded", rep.budget_exceeded()}};
    Json rows = Json::array();
    for (const auto& r : rep.rows) rows.push_back(to_json(r));
    j["rows"] = rows;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string structure_text(const StructureReport& s) {
    std::ostringstream o;
    o << "order               " << s.order << "\n";
    o << "prime               " << str(s.prime) << "\n";
    o << "exponent            " << s.exponent << "\n";
    o << "nilpotency class    " << (s.nilpotency_class ? std::to_string(*s.nilpotency_class) : "not nilpotent")
      << "\n";
    o << "derived length      " << s.derived_length << "\n";
    o << "|Z(G)|, e(Z(G))     " << s.center.order() << ", " << s.center_exponent << "\n";
    o << "e(G/Z(G))           " << s.central_quotient_exponent << "\n";
    o << "|G'|                " << s.commutator.order() << "\n";
    o << "G/G'                " << invariants_str(s.abelianization) << "\n";
    if (s.frattini) o << "|Frattini|          " << s.frattini->order() << "\n";
    if (s.generator_rank) o << "d(G)                " << *s.generator_rank << "\n";
    std::vector<std::uint64_t> lc, uc;
    for (const auto& h : s.lower_central) lc.push_back(h.order());
    for (const auto& h : s.upper_central) uc.push_back(h.order());
    o << "lower central       " << join(lc, " > ") << "\n";
    o << "upper central       " << join(uc, " < ") << "\n";
    o << "metacyclic          " << to_string(s.metacyclic) << "\n";
    o << "G' cyclic           " << to_string(s.commutator_cyclic) << "\n";
    o << "Frattini abelian    " << to_string(s.frattini_abelian) << "\n";
    o << "Frattini cyclic     " << to_string(s.frattini_cyclic) << "\n";
    o << "Frattini powerful   " << to_string(s.frattini_powerful) << "\n";
    o << "normal subgroups    " << s.normal_subgroups.size()
      << (s.normal_search_complete == Truth::yes ? "" : " (incomplete)") << "\n";
    return o.str();
}

std::string tensor_text(const TensorSquareResult& r) {
    std::ostringstream o;
    o << "status              " << r.status << " (" << to_string(r.tier) << " tier)\n";
    o << "|G|, |G'|           " << r.group_order << ", " << r.commutator_order << "\n";
    if (r.complete()) {
        if (r.tensor_order)
            o << "|G(x)G|, e          " << *r.tensor_order << ", " << *r.tensor_exponent << "\n";
        o << "|G^G|, e            " << r.exterior_order << ", " << r.exterior_exponent << "\n";
        o << "M(G)                " << invariants_str(r.multiplier_invariants) << " (order " << r.multiplier_order
          << ", exponent " << r.multiplier_exponent << ")\n";
        o << "cosets              " << r.cosets << "\n";
    }
    o << "defined cosets      " << r.stats.defined << "\n";
    for (const auto& c : r.checks)
        o << (c.passed ? "  ok   " : "  FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return o.str();
}

std::string scan_text(const ScanReport& rep) {
    std::ostringstream o;
    o << "seed " << rep.seed << ", budget " << rep.budget << ", " << rep.rows.size() << " rows\n";
    for (const auto& r : rep.rows) {
        o << r.source << ": " << r.status;
        if (r.status == "ok") {
            o << " |G|=" << r.order << " e(G)=" << r.e_group << " e(G^G)=" << str(r.e_exterior)
              << " M=" << invariants_str(r.multiplier_invariants);
            if (r.verdict)
                o << " c1=" << r.verdict->c1 << " c2=" << r.verdict->c2
                  << " c3=" << (r.verdict->c3 ? std::to_string(*r.verdict->c3) : "-");
        } else if (!r.error.empty()) {
            o << " (" << r.error << ")";
        }
        o << "\n";
        for (const auto& t : r.theorems)
            if (t.red_alert())
                o << "  RED ALERT " << t.id << ": " << t.lhs << " does not divide " << t.rhs << "\n";
            else if (t.review)
                o << "  review " << t.id << ": " << t.note << "\n";
        for (const auto& c : r.checks)
            if (!c.passed) o << "  check failed " << c.name << ": " << c.detail << "\n";
    }
    o << "red alerts " << rep.red_alerts() << ", check failures " << rep.check_failures() << ", rejected "
      << rep.rejected() << ", budget exceeded " << rep.budget_exceeded() << "\n";
    return o.str();
}

std::string scan_csv(const ScanReport& rep) {
    std::ostringstream o;
    o << "source,status,order,prime,class,derived_length,e_group,e_center,e_central_quotient,e_tensor,e_exterior,"
         "e_multiplier,multiplier_invariants,c1,c2,c3,theorems_applicable,theorems_failed,checks_failed,tier,cosets,"
         "seed\n";
    for (const auto& r : rep.rows) {
        int applicable = 0, failed = 0, checks_failed = 0;
        for (const auto& t : r.theorems) {
            applicable += t.hypotheses == Truth::yes;
            failed += t.red_alert();
        }
        for (const auto& c : r.checks) checks_failed += !c.passed;
        const bool ok = r.status == "ok";
        auto b = [](bool v) { return v ? "true" : "false"; };
        o << csv_field(r.source) << ',' << r.status << ',' << (r.status == "rejected" ? "" : std::to_string(r.order))
          << ',' << str(r.prime) << ',' << str(r.nilpotency_class) << ','
          << (ok ? std::to_string(r.derived_length) : "") << ',' << (ok ? std::to_string(r.e_group) : "") << ','
          << (ok ? std::to_string(r.e_center) : "") << ',' << (ok ? std::to_string(r.e_central_quotient) : "")
          << ',' << str(r.e_tensor) << ',' << str(r.e_exterior) << ',' << str(r.e_multiplier) << ','
          << join(r.multiplier_invariants, ";") << ',';
        if (r.verdict)
            o << b(r.verdict->c1) << ',' << b(r.verdict->c2) << ','
              << (r.verdict->c3 ? b(*r.verdict->c3) : "");
        else
            o << ",,";
        o << ',' << applicable << ',' << failed << ',' << checks_failed << ',' << r.tier << ','
          << (ok ? std::to_string(r.cosets) : "") << ',' << rep.seed << "\n";
    }
    return o.str();
}

}  // namespace schurkit
