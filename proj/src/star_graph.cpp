#include "seifert/star_graph.hpp"

#include <json.hpp>

#include <sstream>

namespace seifert {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string arm_str(const Arm& a) { return a.n.get_str() + "/" + a.q.get_str(); }

} // namespace

ValidationReport validate_star(const StarGraph& sg) {
    ValidationReport rep;

    if (sg.genus < 0)
        rep.issues.push_back({Severity::error, "genus must be nonnegative, got " + std::to_string(sg.genus)});

    bool arms_ok = true;
    for (size_t i = 0; i < sg.arms.size(); ++i) {
        const Arm& a = sg.arms[i];
        std::string where = "arm " + std::to_string(i + 1) + " (" + arm_str(a) + "): ";
        if (a.n < 2) {
            rep.issues.push_back({Severity::error, where + "n must be >= 2"});
            arms_ok = false;
        } else if (a.q <= 0 || a.q >= a.n) {
            rep.issues.push_back({Severity::error, where + "need 0 < q < n"});
            arms_ok = false;
        } else if (gcd(a.n, a.q) != 1) {
            rep.issues.push_back({Severity::error, where + "n and q must be coprime"});
            arms_ok = false;
        }
    }

    if (arms_ok) {
        Rational e = Rational(sg.d);
        for (const Arm& a : sg.arms) e -= Rational(a.q, a.n);
        rep.e = e;
        if (e <= 0)
            rep.issues.push_back({Severity::error,
                "e = " + e.str() + ": not negative definite (not a singularity graph)"});
    }

    if (sg.genus == 0 && sg.t() <= 2) {
        rep.cyclic_quotient_range = true;
        rep.issues.push_back({Severity::warning,
            "cyclic quotient range (g = 0, t <= 2): star formulas do not apply"});
    }

    return rep;
}

bool is_cyclic_quotient_range(const StarGraph& sg) {
    return sg.genus == 0 && sg.t() <= 2;
}

void require_arms(const StarGraph& sg) {
    if (sg.genus < 0)
        throw validation_error("invalid star graph: genus must be nonnegative, got " + std::to_string(sg.genus));
    for (size_t i = 0; i < sg.arms.size(); ++i) {
        const Arm& a = sg.arms[i];
        if (a.n < 2 || a.q <= 0 || a.q >= a.n || gcd(a.n, a.q) != 1)
            throw validation_error("invalid star graph: arm " + std::to_string(i + 1) +
                                   " (" + arm_str(a) + ") must have n >= 2, 0 < q < n, gcd(n, q) = 1");
    }
}

void require_valid(const StarGraph& sg) {
    ValidationReport rep = validate_star(sg);
    if (rep.has_error()) throw validation_error("invalid star graph: " + rep.first_error());
}

void require_star_domain(const StarGraph& sg) {
    require_valid(sg);
    if (is_cyclic_quotient_range(sg))
        throw validation_error("excluded: cyclic quotient range (g = 0, t <= 2): star formulas do not apply");
}

namespace {

Int parse_int(const std::string& s, const std::string& what) {
    // mpz_class accepts a leading '-' and decimal digits; anything else throws.
    if (s.empty()) throw validation_error("empty " + what);
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw validation_error("cannot parse " + what + ": '" + s + "'");
    }
}

long parse_genus_value(const Int& g) {
    if (g < 0) throw validation_error("genus must be nonnegative, got " + g.get_str());
    if (!g.fits_slong_p()) throw validation_error("genus out of range: " + g.get_str());
    return g.get_si();
}

StarGraph parse_star_text(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "star")
        throw validation_error("graph text must start with 'star', got '" + tok + "'");

    StarGraph sg;
    bool saw_g = false, saw_d = false, saw_arms = false;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw validation_error("expected key=value token, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "g") {
            if (saw_g) throw validation_error("duplicate g=");
            sg.genus = parse_genus_value(parse_int(val, "genus"));
            saw_g = true;
        } else if (key == "d") {
            if (saw_d) throw validation_error("duplicate d=");
            sg.d = parse_int(val, "d");
            saw_d = true;
        } else if (key == "arms") {
            if (saw_arms) throw validation_error("duplicate arms=");
            saw_arms = true;
            if (val.empty()) continue;
            std::istringstream list(val);
            std::string item;
            while (std::getline(list, item, ',')) {
                auto slash = item.find('/');
                if (slash == std::string::npos)
                    throw validation_error("arm must be n/q, got '" + item + "'");
                sg.arms.push_back({parse_int(item.substr(0, slash), "arm n"),
                                   parse_int(item.substr(slash + 1), "arm q")});
            }
        } else {
            throw validation_error("unknown key '" + key + "' in graph text");
        }
    }
    if (!saw_g || !saw_d)
        throw validation_error("graph text needs g= and d=");
    return sg;
}

Int json_int(const ordered_json& v, const std::string& what) {
    if (v.is_string()) return parse_int(v.get<std::string>(), what);
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
    throw validation_error(what + " must be an integer (number or decimal string)");
}

StarGraph parse_star_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw validation_error(std::string("bad JSON graph: ") + ex.what());
    }
    if (!j.is_object()) throw validation_error("JSON graph must be an object");

    for (const auto& item : j.items())
        if (item.key() != "genus" && item.key() != "d" && item.key() != "arms")
            throw validation_error("unknown key '" + item.key() + "' in JSON graph");
    if (!j.contains("genus") || !j.contains("d"))
        throw validation_error("JSON graph needs \"genus\" and \"d\"");

    StarGraph sg;
    sg.genus = parse_genus_value(json_int(j["genus"], "genus"));
    sg.d = json_int(j["d"], "d");
    if (j.contains("arms")) {
        if (!j["arms"].is_array()) throw validation_error("\"arms\" must be an array of [n, q] pairs");
        for (const auto& pair : j["arms"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw validation_error("each arm must be a [n, q] pair");
            sg.arms.push_back({json_int(pair[0], "arm n"), json_int(pair[1], "arm q")});
        }
    }
    return sg;
}

} // namespace

StarGraph parse_star(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw validation_error("empty graph description");
    if (text[first] == '{') return parse_star_json(text);
    return parse_star_text(text.substr(first));
}

std::string emit_text(const StarGraph& sg) {
    std::string out = "star g=" + std::to_string(sg.genus) + " d=" + sg.d.get_str() + " arms=";
    for (size_t i = 0; i < sg.arms.size(); ++i) {
        if (i) out += ',';
        out += arm_str(sg.arms[i]);
    }
    return out;
}

namespace {

// Emit integers as JSON numbers when they fit, decimal strings otherwise, so
// the round trip stays exact for arbitrary-precision values.
ordered_json json_of_int(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

} // namespace

std::string emit_json(const StarGraph& sg) {
    ordered_json j;
    j["genus"] = sg.genus;
    j["d"] = json_of_int(sg.d);
    j["arms"] = ordered_json::array();
    for (const Arm& a : sg.arms)
        j["arms"].push_back(ordered_json::array({json_of_int(a.n), json_of_int(a.q)}));
    return j.dump();
}

} // namespace seifert
