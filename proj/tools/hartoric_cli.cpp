// Command-line front end for the toric Hartogs-extension decision engine.
//
// Subcommands:
//   analyze    decide the extension property for a hypersurface complement
//   nef        nef certificate (per-cone functionals or violations)
//   intersect  intersection number of dim-many divisors
//   cohomology line-bundle cohomology table with per-character breakdown
//   hirzebruch closed-form evaluation on a Hirzebruch surface
//   fan-check  smoothness/completeness report for a fan
//
// Conventions: ray indices in files and --divisor lists are 0-based; the
// polynomial grammar names variables z1..zn (1-based).  Exit code 0 on
// success, 2 when the answer is the negative/inapplicable case (analyze →
// INAPPLICABLE, nef → not nef, fan-check → invalid fan), 1 on error.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"
#include "hartoric/hartogs.hpp"
#include "hartoric/intersection_ring.hpp"
#include "hartoric/io.hpp"
#include "hartoric/laurent.hpp"
#include "hartoric/numeric.hpp"
#include "hartoric/polytope.hpp"
#include "hartoric/sheaf_cohomology.hpp"

namespace {

using hartoric::Box;
using hartoric::FanPtr;
using hartoric::Int;
using hartoric::TDivisor;
using ojson = nlohmann::ordered_json;

// Accepts a builtin selector ("P2", "P3", ..., "P1xP1", "Hirzebruch:r") or a
// path to a JSON fan file.
FanPtr load_fan(const std::string& source) {
    try {
        return hartoric::share(hartoric::builtin_fan(source));
    } catch (const std::invalid_argument&) {
        // not a builtin; fall through to the file route
    }
    std::ifstream in(source);
    if (!in) {
        throw std::invalid_argument("fan '" + source +
                                    "' is neither a builtin selector nor a readable file");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return hartoric::share(hartoric::fan_from_json(text.str()));
}

Int int_from_string(const std::string& text, const std::string& what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " '" + text + "' is not an integer");
    }
}

std::vector<Int> parse_coeff_list(const std::string& csv, const FanPtr& fan) {
    std::vector<Int> coeffs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty entry in divisor coefficient list '" + csv + "'");
        coeffs.push_back(int_from_string(item.substr(a, b - a + 1), "divisor coefficient"));
    }
    if (coeffs.size() != fan->rays.size()) {
        throw std::invalid_argument("divisor has " + std::to_string(coeffs.size()) +
                                    " coefficients but the fan has " +
                                    std::to_string(fan->rays.size()) + " rays");
    }
    return coeffs;
}

// Box syntax: one "lo:hi" range per coordinate, comma-separated,
// e.g. "-5:5,-3:8" in dimension 2.
Box parse_box(const std::string& text, int n) {
    Box box;
    std::stringstream ss(text);
    std::string range;
    while (std::getline(ss, range, ',')) {
        const auto colon = range.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("box range '" + range + "' is missing ':'");
        box.lo.push_back(int_from_string(range.substr(0, colon), "box bound"));
        box.hi.push_back(int_from_string(range.substr(colon + 1), "box bound"));
        if (box.lo.back() > box.hi.back())
            throw std::invalid_argument("box range '" + range + "' has lo > hi");
    }
    if (static_cast<int>(box.lo.size()) != n) {
        throw std::invalid_argument("box has " + std::to_string(box.lo.size()) +
                                    " ranges but the fan dimension is " + std::to_string(n));
    }
    return box;
}

ojson int_to_ojson(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

void emit(const std::string& body) { std::cout << body << "\n"; }

std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s;
}

std::string format_m(const hartoric::MVector& m) {
    std::string s = "(";
    for (size_t i = 0; i < m.c.size(); ++i) {
        if (i) s += ", ";
        s += m.c[i].str();
    }
    return s + ")";
}

struct AnalyzeArgs {
    std::string fan_source;
    std::string poly;
    std::string divisor;
    bool json = false;
    int m_max = 0;
};

int run_analyze(const AnalyzeArgs& args) {
    if (args.poly.empty() == args.divisor.empty())
        throw std::invalid_argument("provide exactly one of --poly or --divisor");
    const FanPtr fan = load_fan(args.fan_source);
    const hartoric::GradedRing ring = hartoric::build_ring(fan);
    const TDivisor d =
        args.poly.empty()
            ? TDivisor::make(fan, parse_coeff_list(args.divisor, fan))
            : hartoric::divisor_at_infinity(fan, hartoric::parse_polynomial(args.poly, fan->dim));
    const hartoric::HartogsReport report = hartoric::decide_divisor(ring, d);

    // The vanishing check only applies on surfaces when the decision is
    // positive (its hypotheses are exactly the positive-decision conditions);
    // a violation would mean the cohomology engine is broken.
    std::optional<hartoric::VanishingReport> vanishing;
    if (args.m_max > 0 && fan->dim == 2 && report.decision == hartoric::Decision::HARTOGS) {
        vanishing = hartoric::verify_negative_multiple_vanishing(ring, d, args.m_max);
        if (!vanishing->all_vanish) {
            std::string detail;
            for (const auto& v : vanishing->violations) {
                detail += " h^" + std::to_string(v.p) + "(-" + std::to_string(v.m) +
                          "D) = " + v.value.str();
            }
            throw hartoric::internal_error("negative-multiple vanishing failed:" + detail);
        }
    }

    if (args.json) {
        if (args.m_max > 0) {
            ojson out;
            out["report"] = ojson::parse(hartoric::to_json(report));
            if (vanishing) {
                out["negative_vanishing"] = {{"m_max", vanishing->m_max},
                                             {"all_vanish", vanishing->all_vanish}};
            } else {
                out["negative_vanishing"] = nullptr;
            }
            emit(out.dump(2));
        } else {
            emit(hartoric::to_json(report));
        }
    } else {
        std::cout << "decision: " << hartoric::to_string(report.decision) << "\n";
        std::cout << "divisor at infinity: (" << join_ints(report.divisor) << ")\n";
        std::cout << "effective: " << (report.effective ? "yes" : "no")
                  << ", nef: " << (report.nef ? "yes" : "no") << ", self-intersection "
                  << (report.square_zero ? "zero" : "nonzero") << "\n";
        if (report.polytope_empty)
            std::cout << "section polytope: empty\n";
        else
            std::cout << "section polytope dimension: " << report.polytope_dim << "\n";
        std::cout << "basis: " << report.basis << "\n";
        for (const auto& c : report.caveats) std::cout << "caveat: " << c << "\n";
        if (args.m_max > 0) {
            if (vanishing)
                std::cout << "negative multiples -1D..-" << vanishing->m_max
                          << "D: h^0 = h^1 = 0 (verified)\n";
            else
                std::cout << "negative-multiple check skipped (needs a surface and a positive "
                             "decision)\n";
        }
    }
    return report.decision == hartoric::Decision::INAPPLICABLE ? 2 : 0;
}

int run_nef(const std::string& fan_source, const std::string& divisor, bool json) {
    const FanPtr fan = load_fan(fan_source);
    const TDivisor d = TDivisor::make(fan, parse_coeff_list(divisor, fan));
    const hartoric::NefCertificate cert = hartoric::nef_certificate(d);
    if (json) {
        emit(hartoric::to_json(cert));
    } else {
        std::cout << "nef: " << (cert.nef ? "yes" : "no") << "\n";
        for (size_t c = 0; c < cert.functionals.m.size(); ++c)
            std::cout << "cone " << c << ": m = " << format_m(cert.functionals.m[c]) << "\n";
        for (const auto& v : cert.violations)
            std::cout << "violation: cone " << v.cone << " functional fails on ray " << v.ray
                      << "\n";
    }
    return cert.nef ? 0 : 2;
}

int run_intersect(const std::string& fan_source, const std::string& divisors, bool json) {
    const FanPtr fan = load_fan(fan_source);
    std::vector<TDivisor> ds;
    std::stringstream ss(divisors);
    std::string item;
    while (std::getline(ss, item, ';'))
        ds.push_back(TDivisor::make(fan, parse_coeff_list(item, fan)));
    const hartoric::GradedRing ring = hartoric::build_ring(fan);
    const Int v = ring.intersection_number(ds);
    if (json) {
        ojson out;
        out["intersection"] = int_to_ojson(v);
        emit(out.dump(2));
    } else {
        emit(v.str());
    }
    return 0;
}

int run_cohomology(const std::string& fan_source, const std::string& divisor,
                   const std::string& box_text) {
    const FanPtr fan = load_fan(fan_source);
    const TDivisor d = TDivisor::make(fan, parse_coeff_list(divisor, fan));
    std::optional<Box> box;
    if (!box_text.empty()) box = parse_box(box_text, fan->dim);
    const hartoric::CohomologyTable t = hartoric::cohomology_table(d, box);
    emit(hartoric::to_json(t));
    return 0;
}

int run_hirzebruch(const std::string& r_text, const std::string& poly, bool json) {
    const Int r = int_from_string(r_text, "Hirzebruch parameter");
    const hartoric::LaurentSupport s = hartoric::parse_polynomial(poly, 2);
    const hartoric::HirzebruchEvaluation ev = hartoric::hirzebruch_closed_forms(r, s);
    if (json) {
        emit(hartoric::to_json(ev));
    } else {
        std::cout << "surface: Hirzebruch r = " << ev.r.str() << "\n";
        std::cout << "support-function values at the rays: (" << ev.l[0].str() << ", "
                  << ev.l[1].str() << ", " << ev.l[2].str() << ", " << ev.l[3].str() << ")\n";
        std::cout << "factored self-intersection: " << ev.factored_square.str() << "\n";
        std::cout << "closed form (plus variant): " << (ev.closed_form_plus ? "yes" : "no")
                  << ", (minus variant): " << (ev.closed_form_minus ? "yes" : "no") << "\n";
        std::cout << "divisor at infinity: effective " << (ev.generic_effective ? "yes" : "no")
                  << ", nef " << (ev.generic_nef ? "yes" : "no") << ", square "
                  << ev.generic_square.str() << "\n";
        for (const auto& note : ev.discrepancies) std::cout << "note: " << note << "\n";
    }
    return 0;
}

int run_fan_check(const std::string& fan_source, bool json) {
    const FanPtr fan = load_fan(fan_source);
    const hartoric::ValidationReport rep = hartoric::validate_fan(*fan);
    if (json) {
        emit(hartoric::to_json(rep));
    } else {
        std::cout << "smooth: " << (rep.smooth ? "yes" : "no") << "\n";
        std::cout << "complete: " << (rep.complete ? "yes" : "no") << "\n";
        for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
    }
    return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic toolkit for toric Hartogs-extension analysis.\n"
        "Fans: builtin selectors P2..P9, P1xP1, Hirzebruch:r, or a JSON file\n"
        "{\"dim\": n, \"rays\": [[..],..], \"max_cones\": [[..],..]} (0-based ray\n"
        "indices).  Polynomials use variables z1..zn (1-based)."};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    std::string fan_source, divisor, divisors, box_text, poly, r_text;
    bool json = false;

    auto* analyze =
        app.add_subcommand("analyze", "Decide the Hartogs extension property for the complement "
                                      "of a hypersurface closure");
    analyze->add_option("--fan", analyze_args.fan_source, "builtin selector or fan file")
        ->required();
    analyze->add_option("--poly", analyze_args.poly, "Laurent polynomial, e.g. \"1+z1+z2\"");
    analyze->add_option("--divisor", analyze_args.divisor,
                        "comma-separated divisor coefficients in ray order");
    analyze->add_flag("--json", analyze_args.json, "emit the report as JSON");
    analyze->add_option("--m-max", analyze_args.m_max,
                        "verify h^0 = h^1 = 0 for -mD, m = 1..m-max (surfaces, positive "
                        "decisions only)")
        ->check(CLI::PositiveNumber);

    auto* nef = app.add_subcommand("nef", "Nef certificate for a divisor");
    nef->add_option("--fan", fan_source, "builtin selector or fan file")->required();
    nef->add_option("--divisor", divisor, "comma-separated divisor coefficients")->required();
    nef->add_flag("--json", json, "emit the certificate as JSON");

    auto* intersect =
        app.add_subcommand("intersect", "Intersection number of dim-many divisors");
    intersect->add_option("--fan", fan_source, "builtin selector or fan file")->required();
    intersect
        ->add_option("--divisors", divisors,
                     "semicolon-separated divisors, each a comma-separated coefficient list")
        ->required();
    intersect->add_flag("--json", json, "emit {\"intersection\": value}");

    auto* cohomology =
        app.add_subcommand("cohomology", "Line-bundle cohomology table (always JSON)");
    cohomology->add_option("--fan", fan_source, "builtin selector or fan file")->required();
    cohomology->add_option("--divisor", divisor, "comma-separated divisor coefficients")
        ->required();
    cohomology->add_option("--box", box_text,
                           "character search box override, one lo:hi range per coordinate, "
                           "e.g. \"-5:5,-5:5\"");

    auto* hirzebruch = app.add_subcommand(
        "hirzebruch", "Closed-form evaluation of a polynomial on a Hirzebruch surface");
    hirzebruch->add_option("--r", r_text, "Hirzebruch parameter r >= 0")->required();
    hirzebruch->add_option("--poly", poly, "Laurent polynomial in z1, z2")->required();
    hirzebruch->add_flag("--json", json, "emit the evaluation as JSON");

    auto* fan_check = app.add_subcommand("fan-check", "Smoothness/completeness report");
    fan_check->add_option("--fan", fan_source, "builtin selector or fan file")->required();
    fan_check->add_flag("--json", json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_args);
        if (nef->parsed()) return run_nef(fan_source, divisor, json);
        if (intersect->parsed()) return run_intersect(fan_source, divisors, json);
        if (cohomology->parsed()) return run_cohomology(fan_source, divisor, box_text);
        if (hirzebruch->parsed()) return run_hirzebruch(r_text, poly, json);
        if (fan_check->parsed()) return run_fan_check(fan_source, json);
    } catch (const hartoric::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
