// Command-line frontend: invariants, twist, ribbon-check, d3, dichotomy.
// Reports are JSON on stdout, diagnostics on stderr. Exit codes: 0 success,
// 2 input error, 3 mathematical inapplicability.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "knotforge/annulus.hpp"
#include "knotforge/cache.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/io.hpp"
#include "knotforge/obstruction.hpp"
#include "knotforge/openbook.hpp"

namespace kf = knotforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMath = 3;

int cmd_invariants(const std::string& in, bool want_jones, bool want_alexander,
                   bool want_determinant, bool no_cache, bool verify_cache) {
    kf::PlanarDiagram d = kf::diagram_from_json(kf::read_json_file(in));
    if (!want_jones && !want_alexander && !want_determinant)
        want_jones = want_alexander = want_determinant = true;

    kf::InvariantCache cache = kf::InvariantCache::from_environment(!no_cache);
    kf::json canonical = kf::diagram_to_json(d.canonical());
    std::string key = kf::InvariantCache::key_for(canonical);
    kf::json full;
    auto hit = cache.lookup(key);
    if (hit) {
        full = *hit;
        if (verify_cache) {
            kf::json fresh = kf::invariant_report(d, true, true, true);
            if (fresh != full) {
                std::cerr << "cache verification failed for key " << key << "\n";
                return kExitMath;
            }
        }
    } else {
        full = kf::invariant_report(d, true, true, true);
        cache.store(key, full);
    }
    kf::json out{{"knot", full["knot"]}, {"writhe", full["writhe"]}};
    if (want_jones) out["jones"] = full["jones"];
    if (want_alexander) out["alexander"] = full["alexander"];
    if (want_determinant) out["determinant"] = full["determinant"];
    std::cout << kf::canonical_dump(out);
    return kExitOk;
}

int cmd_twist(const std::string& in, int n) {
    kf::AnnulusPresentation ap = kf::annulus_from_json(kf::read_json_file(in));
    kf::PlanarDiagram out = kf::annulus_twist(ap, n);
    if (!ap.diagram.name().empty())
        out.set_name("A^" + std::to_string(n) + "(" + ap.diagram.name() + ")");
    std::cout << kf::canonical_dump(kf::diagram_to_json(out));
    return kExitOk;
}

int cmd_ribbon_check(const std::string& k0_path, const std::string& k1_path,
                     const std::string& fibered0, const std::string& fibered1) {
    auto parse_fibered = [](const std::string& s) -> std::optional<kf::FiberednessSource> {
        if (s.empty()) return std::nullopt;
        if (s == "knot-table") return kf::FiberednessSource::KnotTable;
        if (s == "zero-surgery") return kf::FiberednessSource::ZeroSurgery;
        throw kf::input_error("fibered source must be knot-table or zero-surgery");
    };
    kf::json j0 = kf::read_json_file(k0_path);
    kf::json j1 = kf::read_json_file(k1_path);
    kf::PlanarDiagram d0 = kf::diagram_from_json(j0);
    kf::PlanarDiagram d1 = kf::diagram_from_json(j1);

    kf::KnotCertificate c0 = kf::make_certificate(
        d0, d0.name().empty() ? "K0" : d0.name(), parse_fibered(fibered0));
    kf::KnotCertificate c1 = kf::make_certificate(
        d1, d1.name().empty() ? "K1" : d1.name(), parse_fibered(fibered1));
    if (c0.jones != c1.jones) {
        c0.distinctness_evidence = kf::DistinctnessEvidence::JonesMismatch;
        c1.distinctness_evidence = kf::DistinctnessEvidence::JonesMismatch;
    }

    kf::Verdict miyazaki = kf::miyazaki_verdict(c0, c1);
    kf::KnotCertificate composite = c0;
    composite.name = c0.name + " # mirror(" + c1.name + ")";
    composite.alexander =
        kf::AlexanderPoly(kf::normalize(c0.alexander.poly() * c1.alexander.poly()));
    kf::Verdict fm = kf::fox_milnor_verdict(composite);

    kf::json out{{"composite", composite.name},
                 {"certificates", {kf::certificate_to_json(c0), kf::certificate_to_json(c1)}},
                 {"miyazaki", kf::verdict_to_json(miyazaki)},
                 {"fox_milnor", kf::verdict_to_json(fm)},
                 {"input_hashes",
                  {kf::sha256_hex(j0.dump()), kf::sha256_hex(j1.dump())}}};
    std::cout << kf::canonical_dump(out);
    return kExitOk;
}

int cmd_d3(int family_n, bool have_family, const std::string& in) {
    kf::Rational value;
    if (have_family) {
        value = kf::family_d3(family_n);
    } else {
        kf::SurgeryDescription desc = kf::surgery_from_json(kf::read_json_file(in));
        value = kf::d3(desc);
    }
    std::cout << value.to_string() << "\n";
    return kExitOk;
}

int cmd_dichotomy(int n, int m) {
    kf::DichotomyReport rep = kf::dichotomy_report(n, m);
    std::cout << kf::canonical_dump(kf::dichotomy_to_json(rep));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knotforge: annulus-twist knot families, exact invariants, and "
                 "slice-ribbon obstructions"};
    app.require_subcommand(1);

    auto* inv = app.add_subcommand("invariants", "compute invariants of a knot file");
    std::string inv_in;
    bool want_jones = false, want_alexander = false, want_determinant = false;
    bool no_cache = false, verify_cache = false;
    inv->add_option("--in", inv_in, "knot file (JSON)")->required();
    inv->add_flag("--jones", want_jones, "include the Jones polynomial");
    inv->add_flag("--alexander", want_alexander, "include the Alexander polynomial");
    inv->add_flag("--determinant", want_determinant, "include the determinant");
    inv->add_flag("--no-cache", no_cache, "bypass the invariant cache");
    inv->add_flag("--verify-cache", verify_cache, "recompute on cache hits and compare");

    auto* twist = app.add_subcommand("twist", "apply an n-fold annulus twist");
    std::string twist_in;
    int twist_n = 0;
    twist->add_option("--in", twist_in, "annulus presentation file (JSON)")->required();
    twist->add_option("--n", twist_n, "twist count (|n| <= 8)")->required();

    auto* ribbon = app.add_subcommand("ribbon-check", "ribbon obstructions for K0 # mirror(K1)");
    std::string rb_k0, rb_k1, rb_f0, rb_f1;
    ribbon->add_option("--k0", rb_k0, "first knot file")->required();
    ribbon->add_option("--k1", rb_k1, "second knot file")->required();
    ribbon->add_option("--fibered0", rb_f0, "fiberedness source for K0 (knot-table|zero-surgery)");
    ribbon->add_option("--fibered1", rb_f1, "fiberedness source for K1 (knot-table|zero-surgery)");

    auto* d3cmd = app.add_subcommand("d3", "d3 invariant of a contact surgery description");
    int d3_n = 0;
    std::string d3_in;
    auto* opt_family = d3cmd->add_option("--family-n", d3_n, "twist family member");
    auto* opt_in = d3cmd->add_option("--in", d3_in, "surgery file (JSON)");
    opt_family->excludes(opt_in);

    auto* dich = app.add_subcommand("dichotomy", "report for the pair (K_n, K_m)");
    int dich_n = 0, dich_m = 0;
    dich->add_option("n", dich_n, "first twist index")->required();
    dich->add_option("m", dich_m, "second twist index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (inv->parsed())
            return cmd_invariants(inv_in, want_jones, want_alexander, want_determinant,
                                  no_cache, verify_cache);
        if (twist->parsed()) return cmd_twist(twist_in, twist_n);
        if (ribbon->parsed()) return cmd_ribbon_check(rb_k0, rb_k1, rb_f0, rb_f1);
        if (d3cmd->parsed()) {
            if (!*opt_family && !*opt_in)
                throw kf::input_error("d3: need --family-n or --in");
            return cmd_d3(d3_n, static_cast<bool>(*opt_family), d3_in);
        }
        if (dich->parsed()) return cmd_dichotomy(dich_n, dich_m);
    } catch (const kf::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const kf::math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
