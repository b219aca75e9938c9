#pragma once

#include "hfk/builtin.hpp"
#include "hfk/cover.hpp"
#include "hfk/json_io.hpp"
#include "hfk/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace hfk::cli {

namespace detail {

inline std::string grading_text(const json& halves) {
    std::string s = "(";
    for (std::size_t i = 0; i < halves.size(); ++i) s += (i ? ", " : "") + halves[i].get<std::string>();
    return s + ")";
}

inline int cmd_validate(const std::string& file, bool as_json, std::ostream& out) {
    auto d = load_diagram(file);
    auto rep = validate(d);
    if (as_json) {
        json fails = json::array();
        for (auto& f : rep.failures) fails.push_back({{"rule", f.rule}, {"detail", f.detail}, {"cells", f.cells}});
        out << json{{"schema", kSchema}, {"diagram", d.name}, {"passed", rep.passed()}, {"failures", fails}}.dump(2) << "\n";
    } else {
        for (auto& f : rep.failures) out << f.rule << ": " << f.detail << "\n";
        out << d.name << ": " << (rep.passed() ? "valid" : std::to_string(rep.failures.size()) + " failure(s)") << "\n";
    }
    if (!rep.passed()) fail("InvalidDiagram", d.name + " failed " + rep.failures.front().rule);
    return 0;
}

inline int cmd_cover(const std::string& file, const std::string& z0, const std::string& w0, const std::string& output,
                     std::ostream& out) {
    auto ed = branched_double_cover(load_diagram(file), z0, w0);
    std::string text = dump_diagram(ed.cover);
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream f(output);
        if (!f) fail("FileNotFound", "cannot write " + output);
        f << text;
        out << "wrote " << output << " (" << ed.cover.num_points() << " intersections, " << ed.cover.num_regions()
            << " regions)\n";
    }
    return 0;
}

inline int cmd_homology(const std::string& file, const std::string& flavor, bool as_json, std::ostream& out) {
    auto d = load_diagram(file);
    auto fa = analyze_flavor(d, parse_flavor(flavor), std::nullopt);
    json j = homology_json(d, fa);
    if (as_json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << d.name << " (" << flavor << "): " << fa.complex.size() << " generators, " << fa.complex.disk_domains.size()
        << " disks, homology rank " << fa.homology.total << "\n";
    for (auto& g : j["groups"])
        out << "  A=" << grading_text(g["alexander"]) << " M=" << g["maslov_relative"].get<long long>()
            << " rank " << g["rank"].get<int>() << "\n";
    return 0;
}

inline int cmd_ss(const std::string& file, const std::string& flavor, int pages, bool as_json, std::ostream& out) {
    auto d = load_diagram(file);
    auto fa = analyze_flavor(d, parse_flavor(flavor), std::nullopt);
    auto tc = tate_complex(fa.complex, involution_map(d, fa.complex));
    auto res = tate_pages(tc, pages);
    json j = pages_json(tc, res, fa.pin.shift2);
    if (as_json) {
        out << json{{"schema", kSchema}, {"diagram", d.name}, {"flavor", flavor}, {"pages", j}}.dump(2) << "\n";
        return 0;
    }
    out << d.name << " (" << flavor << "): E_inf rank " << res.e_infinity << "\n";
    for (auto& p : j) {
        out << "  E" << p["r"].get<int>() << " rank " << p["total"].get<int>()
            << (p["stabilized"].get<bool>() ? " (stable)" : "") << "\n";
        for (auto& b : p["blocks"]) {
            if (!b["rank"].get<int>()) continue;
            out << "    A=" << grading_text(b["grading"]) << " rank " << b["rank"].get<int>();
            if (b["d_r_rank"].get<int>()) out << ", d_r rank " << b["d_r_rank"].get<int>();
            out << "\n";
        }
    }
    return 0;
}

inline int cmd_murasugi(const std::string& cover, const std::string& quotient, int lambda, int p, int r,
                        bool as_json, std::ostream& out) {
    PeriodicityConfig cfg;
    cfg.p = p;
    cfg.r = r;
    cfg.q = 1;
    for (int i = 0; i < r; ++i) cfg.q *= p;
    cfg.lambda = lambda;
    auto m = murasugi_check(parse_laurent(cover), parse_laurent(quotient), cfg);
    if (as_json) {
        json j = murasugi_json(m);
        j["schema"] = kSchema;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << (m.holds ? "holds" : "fails") << "\n";
    out << "  cover mod " << p << ": " << m.lhs.to_string() << "\n";
    out << "  (1+...+t^" << lambda - 1 << ")^" << cfg.q - 1 << " * quotient^" << cfg.q << " mod " << p << ": "
        << m.rhs.to_string() << "\n";
    if (m.holds) out << "  witness: t^" << half_to_string(static_cast<int>(m.witness_shift2)) << (m.sign < 0 ? ", sign -1" : "") << "\n";
    return 0;
}

inline void print_report(const PairAnalysis& a, std::ostream& out) {
    const auto& t = a.topology;
    out << "lambda = " << a.lambda << "\n";
    out << "Alexander polynomial: cover " << a.delta_cover.to_string() << ", quotient " << a.delta_quotient.to_string() << "\n";
    out << "Murasugi (p=2, q=2): " << (a.murasugi.holds ? "holds" : "fails") << "\n";
    out << "genus: cover " << t.genus_cover << ", quotient " << t.genus_quotient << "; Edmonds "
        << (t.edmonds_holds ? "holds" : "fails") << (t.edmonds_sharp ? ", sharp" : "") << "\n";
    out << "top-grading ranks: cover " << t.cover_top_rank << ", E_inf " << t.einf_top_rank << ", quotient "
        << t.quotient_top_rank << "\n";
    out << "fibred: cover " << (t.cover_fibred ? "yes" : "no") << ", quotient " << (t.quotient_fibred ? "yes" : "no");
    if (t.transfer_applies) out << "; transfer " << (t.transfer_confirmed ? "confirmed" : "contradicted");
    out << "\n";
    if (t.thurston_cover_k)
        out << "Thurston norm of the knot class: cover " << *t.thurston_cover_k << ", quotient " << *t.thurston_quotient_k
            << "\n";
    if (t.thurston_cover_u)
        out << "Thurston norm of the axis class: cover " << *t.thurston_cover_u << ", quotient " << *t.thurston_quotient_u
            << "\n";
    for (auto& s : t.inconsistencies) out << "inconsistency: " << s << "\n";
}

inline int cmd_report(const std::string& qfile, const std::string& cfile, bool as_json, std::ostream& out) {
    auto a = analyze_pair(load_diagram(qfile), load_diagram(cfile));
    if (as_json)
        out << full_report_json(a).dump(2) << "\n";
    else
        print_report(a, out);
    if (!a.topology.inconsistencies.empty()) fail("InvariantViolation", a.topology.inconsistencies.front());
    return 0;
}

inline int cmd_examples_list(std::ostream& out) {
    for (auto& f : builtin_families()) out << f << "\n";
    for (auto& n : builtin_names()) out << n << "\n";
    return 0;
}

inline int cmd_examples_run(const std::string& name, bool as_json, std::ostream& out) {
    auto families = builtin_families();
    if (std::find(families.begin(), families.end(), name) == families.end()) fail("UnknownExample", name);
    auto a = analyze_pair(builtin_diagram(name + "-quotient"), builtin_diagram(name + "-cover"));
    json summary = summary_json(name, a);
    std::vector<std::string> diffs;
    json_diff(json::parse(builtin_expected(name)), summary, "", diffs);
    if (as_json) {
        out << json{{"schema", kSchema}, {"summary", summary}, {"differences", diffs}}.dump(2) << "\n";
    } else {
        auto pages = [](const json& totals) {
            std::string s;
            for (std::size_t i = 0; i < totals.size(); ++i)
                s += (i ? " " : "") + std::string("E") + std::to_string(i + 1) + "=" + std::to_string(totals[i].get<int>());
            return s;
        };
        out << name << ": generators quotient " << summary["generators"]["quotient"].get<int>() << ", cover "
            << summary["generators"]["cover"].get<int>() << "\n";
        for (const char* f : {"link", "knot"})
            out << f << ": quotient rank " << summary[f]["quotient_rank"].get<int>() << "; cover "
                << pages(summary[f]["page_totals"]) << "; E_inf " << summary[f]["e_infinity"].get<int>() << "\n";
        print_report(a, out);
        for (auto& d : diffs) out << "mismatch " << d << "\n";
        out << (diffs.empty() ? "matches stored expectations" : "differs from stored expectations") << "\n";
    }
    if (!diffs.empty()) fail("ExpectationMismatch", name + ": " + diffs.front());
    return 0;
}

}  // namespace detail

// Runs one command line; returns the exit code (0 ok, 1 computation error, 2 usage error).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Knot Floer homology of doubly periodic knots and their quotients", "hfk"};
    app.require_subcommand(1);

    std::string file, file2, flavor = "link", z0, w0, output, cover_poly, quotient_poly, example;
    bool as_json = false;
    int pages = -1, lambda = 1, p = 2, r = 1;

    auto* validate_cmd = app.add_subcommand("validate", "check a diagram file");
    validate_cmd->add_option("file", file, "diagram JSON")->required();
    validate_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* cover_cmd = app.add_subcommand("cover", "branched double cover over z0 and w0");
    cover_cmd->add_option("file", file, "quotient diagram JSON")->required();
    cover_cmd->add_option("--z0", z0, "branch basepoint z0")->required();
    cover_cmd->add_option("--w0", w0, "branch basepoint w0")->required();
    cover_cmd->add_option("-o,--output", output, "write the cover here instead of stdout");

    auto* homology_cmd = app.add_subcommand("homology", "chain complex and homology");
    homology_cmd->add_option("file", file, "diagram JSON")->required();
    homology_cmd->add_option("--flavor", flavor, "link or knot")->check(CLI::IsMember({"link", "knot"}));
    homology_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* ss_cmd = app.add_subcommand("ss", "localization spectral sequence of a cover with involution");
    ss_cmd->add_option("file", file, "cover diagram JSON with involution")->required();
    ss_cmd->add_option("--flavor", flavor, "link or knot")->check(CLI::IsMember({"link", "knot"}));
    ss_cmd->add_option("--pages", pages, "number of pages (default: until stable)")->check(CLI::PositiveNumber);
    ss_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* murasugi_cmd = app.add_subcommand("murasugi", "check Murasugi's congruence for two polynomials");
    murasugi_cmd->add_option("--cover-poly", cover_poly, "Alexander polynomial of the periodic knot")->required();
    murasugi_cmd->add_option("--quotient-poly", quotient_poly, "Alexander polynomial of the quotient")->required();
    murasugi_cmd->add_option("--lambda", lambda, "linking number with the axis")->required();
    murasugi_cmd->add_option("--p", p, "prime")->required();
    murasugi_cmd->add_option("--r", r, "period is p^r")->required();
    murasugi_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* report_cmd = app.add_subcommand("report", "genus, Edmonds, fibredness and Murasugi for a quotient/cover pair");
    report_cmd->add_option("quotient", file, "quotient diagram JSON")->required();
    report_cmd->add_option("cover", file2, "cover diagram JSON with involution")->required();
    report_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* examples_cmd = app.add_subcommand("examples", "built-in examples");
    examples_cmd->require_subcommand(1);
    auto* list_cmd = examples_cmd->add_subcommand("list", "list built-in examples");
    auto* run_cmd = examples_cmd->add_subcommand("run", "run the pipeline on a family and compare with stored results");
    run_cmd->add_option("name", example, "unknot or trefoil")->required();
    run_cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*validate_cmd) return detail::cmd_validate(file, as_json, out);
        if (*cover_cmd) return detail::cmd_cover(file, z0, w0, output, out);
        if (*homology_cmd) return detail::cmd_homology(file, flavor, as_json, out);
        if (*ss_cmd) return detail::cmd_ss(file, flavor, pages, as_json, out);
        if (*murasugi_cmd) return detail::cmd_murasugi(cover_poly, quotient_poly, lambda, p, r, as_json, out);
        if (*report_cmd) return detail::cmd_report(file, file2, as_json, out);
        if (*list_cmd) return detail::cmd_examples_list(out);
        if (*run_cmd) return detail::cmd_examples_run(example, as_json, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace hfk::cli
