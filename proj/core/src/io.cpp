#include "hartoric/io.hpp"

#include <limits>
#include <set>
#include <utility>

#include <json.hpp>

namespace hartoric {

namespace {

using ojson = nlohmann::ordered_json;

ojson int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();  // too wide for a JSON number; decimal string instead
}

Int int_from_json(const ojson& j, const std::string& what) {
    try {
        if (j.is_number_integer()) return Int(j.get<long long>());
        if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " is not an integer");
    }
    throw std::invalid_argument(what + " must be an integer");
}

ojson int_vec_to_json(const std::vector<Int>& v) {
    ojson a = ojson::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

ojson parse_text(const std::string& text, const char* label) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string(label) + ": invalid JSON: " + e.what());
    }
}

void require_keys(const ojson& j, const std::set<std::string>& keys, const char* label) {
    if (!j.is_object()) throw std::invalid_argument(std::string(label) + " must be a JSON object");
    for (const std::string& k : keys)
        if (!j.contains(k))
            throw std::invalid_argument(std::string(label) + " is missing key '" + k + "'");
    for (const auto& item : j.items())
        if (keys.find(item.key()) == keys.end())
            throw std::invalid_argument(std::string(label) + " has unexpected key '" + item.key() +
                                        "'");
}

bool bool_from_json(const ojson& j, const std::string& what) {
    if (!j.is_boolean()) throw std::invalid_argument(what + " must be a boolean");
    return j.get<bool>();
}

}  // namespace

Fan fan_from_json(const std::string& text) {
    const ojson j = parse_text(text, "fan");
    require_keys(j, {"dim", "rays", "max_cones"}, "fan");

    const Int dim = int_from_json(j["dim"], "fan dim");
    if (dim < 1 || dim > 64) throw std::invalid_argument("fan dim must be between 1 and 64");

    if (!j["rays"].is_array()) throw std::invalid_argument("fan rays must be an array");
    std::vector<NVector> rays;
    for (const ojson& jr : j["rays"]) {
        if (!jr.is_array()) throw std::invalid_argument("each ray must be an array of integers");
        NVector u;
        for (const ojson& x : jr) u.c.push_back(int_from_json(x, "ray coordinate"));
        rays.push_back(std::move(u));
    }

    if (!j["max_cones"].is_array()) throw std::invalid_argument("fan max_cones must be an array");
    std::vector<Cone> cones;
    for (const ojson& jc : j["max_cones"]) {
        if (!jc.is_array())
            throw std::invalid_argument("each cone must be an array of ray indices");
        std::vector<int> idx;
        for (const ojson& x : jc) {
            const Int v = int_from_json(x, "cone ray index");
            if (v < 0 || v > std::numeric_limits<int>::max())
                throw std::invalid_argument("cone ray index out of range");
            idx.push_back(v.convert_to<int>());
        }
        cones.push_back(Cone(std::move(idx)));
    }
    return Fan::make(dim.convert_to<int>(), std::move(rays), std::move(cones));
}

std::string fan_to_json(const Fan& fan) {
    ojson j;
    j["dim"] = fan.dim;
    ojson rays = ojson::array();
    for (const NVector& u : fan.rays) rays.push_back(int_vec_to_json(u.c));
    j["rays"] = std::move(rays);
    ojson cones = ojson::array();
    for (const Cone& c : fan.max_cones) cones.push_back(c.rays);
    j["max_cones"] = std::move(cones);
    return j.dump(2);
}

std::string to_json(const ValidationReport& r) {
    ojson j;
    j["smooth"] = r.smooth;
    j["complete"] = r.complete;
    j["failures"] = r.failures;
    return j.dump(2);
}

std::string to_json(const NefCertificate& c) {
    ojson j;
    j["nef"] = c.nef;
    ojson fs = ojson::array();
    for (const MVector& m : c.functionals.m) fs.push_back(int_vec_to_json(m.c));
    j["functionals"] = std::move(fs);
    ojson vs = ojson::array();
    for (const auto& v : c.violations) {
        ojson o;
        o["cone"] = v.cone;
        o["ray"] = v.ray;
        vs.push_back(std::move(o));
    }
    j["violations"] = std::move(vs);
    return j.dump(2);
}

std::string to_json(const CohomologyTable& t) {
    ojson j;
    j["h"] = int_vec_to_json(t.h);
    ojson box;
    box["lo"] = int_vec_to_json(t.box.lo);
    box["hi"] = int_vec_to_json(t.box.hi);
    j["box"] = std::move(box);
    j["widened"] = t.widened;
    ojson chars = ojson::array();
    for (const CharacterContribution& c : t.characters) {
        ojson o;
        o["m"] = int_vec_to_json(c.m.c);
        o["h"] = int_vec_to_json(c.h);
        chars.push_back(std::move(o));
    }
    j["characters"] = std::move(chars);
    return j.dump(2);
}

std::string to_json(const HirzebruchEvaluation& e) {
    ojson j;
    j["r"] = int_to_json(e.r);
    j["l"] = int_vec_to_json({e.l[0], e.l[1], e.l[2], e.l[3]});
    j["closed_form_plus"] = e.closed_form_plus;
    j["closed_form_minus"] = e.closed_form_minus;
    j["factored_square"] = int_to_json(e.factored_square);
    j["factored_square_nonzero"] = e.factored_square_nonzero;
    j["generic_effective"] = e.generic_effective;
    j["generic_nef"] = e.generic_nef;
    j["generic_square"] = int_to_json(e.generic_square);
    j["discrepancies"] = e.discrepancies;
    return j.dump(2);
}

std::string to_json(const HartogsReport& r) {
    ojson j;
    j["divisor"] = int_vec_to_json(r.divisor);
    j["effective"] = r.effective;
    j["nef"] = r.nef;
    j["square_zero"] = r.square_zero;
    if (r.polytope_empty)
        j["polytope_dim"] = "empty";
    else
        j["polytope_dim"] = r.polytope_dim;
    j["decision"] = to_string(r.decision);
    j["basis"] = r.basis;
    j["caveats"] = r.caveats;
    return j.dump(2);
}

HartogsReport hartogs_report_from_json(const std::string& text) {
    const ojson j = parse_text(text, "report");
    require_keys(j,
                 {"divisor", "effective", "nef", "square_zero", "polytope_dim", "decision",
                  "basis", "caveats"},
                 "report");

    HartogsReport r;
    if (!j["divisor"].is_array())
        throw std::invalid_argument("report divisor must be an array of integers");
    for (const ojson& x : j["divisor"]) r.divisor.push_back(int_from_json(x, "divisor entry"));
    r.effective = bool_from_json(j["effective"], "report effective");
    r.nef = bool_from_json(j["nef"], "report nef");
    r.square_zero = bool_from_json(j["square_zero"], "report square_zero");

    const ojson& pd = j["polytope_dim"];
    if (pd.is_string() && pd.get<std::string>() == "empty") {
        r.polytope_empty = true;
        r.polytope_dim = -1;
    } else {
        const Int d = int_from_json(pd, "report polytope_dim");
        if (d < 0 || d > 64) throw std::invalid_argument("report polytope_dim out of range");
        r.polytope_empty = false;
        r.polytope_dim = d.convert_to<int>();
    }

    if (!j["decision"].is_string())
        throw std::invalid_argument("report decision must be a string");
    const std::string dec = j["decision"].get<std::string>();
    if (dec == "HARTOGS")
        r.decision = Decision::HARTOGS;
    else if (dec == "NO_HARTOGS")
        r.decision = Decision::NO_HARTOGS;
    else if (dec == "INAPPLICABLE")
        r.decision = Decision::INAPPLICABLE;
    else
        throw std::invalid_argument("unknown decision '" + dec + "'");

    if (!j["basis"].is_string()) throw std::invalid_argument("report basis must be a string");
    r.basis = j["basis"].get<std::string>();
    if (!j["caveats"].is_array())
        throw std::invalid_argument("report caveats must be an array of strings");
    for (const ojson& c : j["caveats"]) {
        if (!c.is_string()) throw std::invalid_argument("report caveats must be an array of strings");
        r.caveats.push_back(c.get<std::string>());
    }
    return r;
}

}  // namespace hartoric
