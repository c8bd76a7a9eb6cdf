#include "seifert/report.hpp"

#include <sstream>

#include "seifert/classify.hpp"
#include "seifert/continued_fraction.hpp"
#include "seifert/errors.hpp"
#include "seifert/graded_ring.hpp"
#include "seifert/invariants.hpp"
#include "seifert/lattice.hpp"
#include "seifert/plumbing.hpp"

namespace seifert {

namespace {

Document int_json(const Int& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

Document rat_json(const Rational& r) {
    return r.str();
}

void compare_with_oracle(const CanonicalCycle& closed, const CanonicalCycle& oracle) {
    if (closed.k.size() != oracle.k.size())
        throw consistency_error("canonical cycle: closed form and oracle sizes differ");
    for (size_t i = 0; i < closed.k.size(); ++i)
        if (closed.k[i] != oracle.k[i])
            throw consistency_error("canonical cycle: closed form disagrees with oracle at " +
                                    closed.labels[i].str());
}

} // namespace

Document invariants_document(const StarGraph& sg, bool verify) {
    const SeifertInvariants inv = seifert_invariants(sg);
    const PlumbingGraph pg = expand(sg);
    const DiscriminantGroup disc = discriminant_group(pg);
    const Int order = k_order_numerical(sg);

    Document doc;
    doc["graph"] = emit_text(sg);
    doc["e"] = rat_json(inv.e);
    doc["chi"] = rat_json(inv.chi);
    doc["chi_over_e"] = rat_json(inv.beta);
    doc["alpha"] = rat_json(inv.alpha);
    doc["k_order"] = int_json(order);
    doc["discriminant_group"] = disc.str();
    doc["det_abs"] = int_json(disc.order);

    if (verify) {
        compare_with_oracle(canonical_cycle_closed_form(sg), canonical_cycle_oracle(pg));
        Rational det_expected = inv.e;
        for (const Arm& a : sg.arms)
            det_expected *= Rational(a.n);
        if (Rational(disc.order) != det_expected)
            throw consistency_error("invariants: |det M| differs from e * prod(n_i)");
        Document checks;
        checks["canonical_cycle_closed_form_vs_oracle"] = "ok";
        checks["det_equals_e_times_arm_orders"] = "ok";
        doc["verify"] = checks;
    }
    return doc;
}

Document canonical_cycle_document(const StarGraph& sg) {
    const CanonicalCycle closed = canonical_cycle_closed_form(sg);
    compare_with_oracle(closed, canonical_cycle_oracle(expand(sg)));

    Document coeffs;
    for (size_t i = 0; i < closed.k.size(); ++i)
        coeffs[closed.labels[i].str()] = rat_json(closed.k[i]);

    Document doc;
    doc["graph"] = emit_text(sg);
    doc["coefficients"] = coeffs;
    doc["k_order"] = int_json(closed.denominator_lcm());
    doc["verified_against_oracle"] = true;
    return doc;
}

Document classify_document(const StarGraph& sg) {
    const Classification c = classify(sg);

    Document doc;
    doc["graph"] = emit_text(sg);
    doc["class"] = to_string(c.cls);
    doc["chi"] = rat_json(c.chi);
    doc["alpha"] = rat_json(c.alpha);

    if (sg.genus == 0) {
        const QhdCaseReport qhd = qhd_cases(sg);
        doc["qhd_case"] = qhd.matched_case ? to_string(*qhd.matched_case) : "none";
        const QhdCertificate cert = qhd_certificate(sg);
        Document steps = Document::array();
        for (const CertificateStep& s : cert.steps) {
            Document step;
            step["claim"] = s.claim;
            step["value"] = s.value;
            step["holds"] = s.holds;
            steps.push_back(step);
        }
        Document cert_doc;
        cert_doc["steps"] = steps;
        cert_doc["overall"] = cert.overall;
        doc["certificate"] = cert_doc;
    }
    return doc;
}

Document poincare_document(const StarGraph& sg, long k_max) {
    require_valid(sg);
    const DemazureData dd = DemazureData::from_star(sg);
    const std::vector<Int> dims = poincare_series(dd, k_max);

    Document dims_doc = Document::array();
    for (const Int& v : dims)
        dims_doc.push_back(int_json(v));

    Document doc;
    doc["graph"] = emit_text(sg);
    doc["k_max"] = k_max;
    doc["dims"] = dims_doc;
    return doc;
}

Document gorenstein_document(const StarGraph& sg) {
    require_valid(sg);
    const DemazureData dd = DemazureData::from_star(sg);
    const QGorensteinOrder qg = q_gorenstein_order(dd);

    Document doc;
    doc["graph"] = emit_text(sg);
    if (sg.genus == 0) {
        const std::optional<Int> t = gorenstein_test(dd);
        doc["gorenstein"] = t.has_value();
        if (t)
            doc["t"] = int_json(*t);
    } else {
        doc["gorenstein"] = "not decided (requires Jacobian arithmetic; out of scope)";
    }
    doc["q_gorenstein_order"] = int_json(qg.s);
    doc["q_gorenstein_t"] = int_json(qg.t);
    doc["torsion_decided"] = qg.torsion_decided;
    return doc;
}

Document cf_document(const Int& n, const Int& q) {
    const HJExpansion exp = hj_expand(n, q);

    Document entries = Document::array();
    for (const Int& b : exp.entries)
        entries.push_back(int_json(b));

    Document doc;
    doc["n"] = int_json(n);
    doc["q"] = int_json(q);
    doc["entries"] = entries;
    return doc;
}

Document sweep_match_document(const SweepMatch& m) {
    Document doc;
    doc["graph"] = emit_text(m.graph);
    doc["e"] = rat_json(m.e);
    doc["chi"] = rat_json(m.chi);
    doc["chi_over_e"] = rat_json(m.chi / m.e);
    if (m.matched_case)
        doc["case"] = to_string(*m.matched_case);
    return doc;
}

Document sweep_document(const SweepBounds& b, SweepFilter f, const SweepResult& r) {
    Document matches = Document::array();
    for (const SweepMatch& m : r.matches)
        matches.push_back(sweep_match_document(m));

    Document doc;
    doc["filter"] = to_string(f);
    doc["t_min"] = b.t_min;
    doc["t_max"] = b.t_max;
    doc["d_max"] = b.d_max;
    doc["n_max"] = b.n_max;
    doc["enumerated"] = r.enumerated;
    doc["valid"] = r.valid;
    doc["matched"] = static_cast<unsigned long long>(r.matches.size());
    doc["matches"] = matches;
    return doc;
}

namespace {

std::string scalar_text(const Document& d) {
    if (d.is_string())
        return d.get<std::string>();
    if (d.is_null())
        return "none";
    return d.dump();
}

bool all_scalar(const Document& a) {
    for (const auto& el : a)
        if (!el.is_primitive())
            return false;
    return true;
}

std::string inline_array(const Document& a) {
    std::string s = "[";
    bool first = true;
    for (const auto& el : a) {
        if (!first)
            s += ",";
        first = false;
        s += scalar_text(el);
    }
    s += "]";
    return s;
}

void render(std::ostream& os, const Document& d, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (d.is_object()) {
        for (auto it = d.begin(); it != d.end(); ++it) {
            const Document& v = it.value();
            if (v.is_primitive()) {
                os << pad << it.key() << ": " << scalar_text(v) << "\n";
            } else if (v.is_array() && all_scalar(v)) {
                os << pad << it.key() << ": " << inline_array(v) << "\n";
            } else {
                os << pad << it.key() << ":\n";
                render(os, v, indent + 1);
            }
        }
        return;
    }
    if (d.is_array()) {
        for (const auto& el : d) {
            if (el.is_primitive()) {
                os << pad << "- " << scalar_text(el) << "\n";
                continue;
            }
            if (el.is_object() && !el.empty()) {
                bool first = true;
                for (auto it = el.begin(); it != el.end(); ++it) {
                    const Document& v = it.value();
                    const std::string lead = pad + (first ? "- " : "  ");
                    first = false;
                    if (v.is_primitive()) {
                        os << lead << it.key() << ": " << scalar_text(v) << "\n";
                    } else if (v.is_array() && all_scalar(v)) {
                        os << lead << it.key() << ": " << inline_array(v) << "\n";
                    } else {
                        os << lead << it.key() << ":\n";
                        render(os, v, indent + 2);
                    }
                }
                continue;
            }
            os << pad << "-\n";
            render(os, el, indent + 1);
        }
    }
}

} // namespace

std::string render_text(const Document& d) {
    std::ostringstream os;
    render(os, d, 0);
    return os.str();
}

std::string render_inline_array(const Document& a) {
    return inline_array(a);
}

} // namespace seifert
