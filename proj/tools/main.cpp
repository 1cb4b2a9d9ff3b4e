#include "braidcone/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace braidcone;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GorensteinCertificate analyze_with(const Poset& p, const std::string& method) {
    if (method == "brute") return gorenstein_status(p);
    if (method == "blocks") return status_via_blocks(p);
    if (method == "fast") return decide_fast(p);
    // auto: bounded shortcut, then the iterative path when a bound
    // exists, then biconnected reduction over the exact oracle.
    auto [has_min, has_max] = p.bounds();
    if (has_min || has_max) return decide_fast(p);
    return status_via_blocks(p);
}

struct Options {
    std::string file = "-";
    std::string method = "auto";
    std::string format = "text";
    int jobs = 1;
    int max_n = 5;
    int steps = 1;
    bool dedup = false;
    bool timings = false;
    std::string annotate = "none";
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision engine for braid-cone toric varieties of finite posets"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--method", opt.method, "decision engine")
        ->check(CLI::IsMember({"auto", "brute", "fast", "blocks"}))
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->capture_default_str();

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "poset file ('-' for stdin)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full certificate");
    add_file(analyze);
    analyze->add_flag("--timings", opt.timings, "append wall-clock metadata");
    CLI::App* gorenstein = app.add_subcommand("gorenstein", "Gorenstein / Q-Gorenstein verdict");
    add_file(gorenstein);
    CLI::App* crepant = app.add_subcommand("crepant", "is the Weyl-chamber resolution crepant");
    add_file(crepant);
    CLI::App* rays_cmd = app.add_subcommand("rays", "ray generators of the cone and fan");
    add_file(rays_cmd);
    CLI::App* mobius = app.add_subcommand("mobius", "Moebius function of the poset with adjoined minimum");
    add_file(mobius);
    CLI::App* quotient = app.add_subcommand("quotient", "tree-relation quotients");
    add_file(quotient);
    quotient->add_option("--steps", opt.steps, "number of quotients to take")->capture_default_str();
    CLI::App* smooth = app.add_subcommand("smooth", "is the cone smooth");
    add_file(smooth);
    CLI::App* export_dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
    add_file(export_dot);
    export_dot->add_option("--annotate", opt.annotate, "node annotations")
        ->check(CLI::IsMember({"none", "labeling", "mobius"}))
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify-conjecture",
                                          "sweep all connected posets for Q-Gorenstein-only verdicts");
    verify->add_option("--max-n", opt.max_n, "largest poset size")->required();
    verify->add_flag("--dedup", opt.dedup, "one representative per isomorphism class");
    verify->add_flag("--timings", opt.timings, "include wall-clock metadata in the report");
    CLI::App* cross = app.add_subcommand("cross-validate",
                                         "sweep all connected posets comparing every decision route");
    cross->add_option("--max-n", opt.max_n, "largest poset size")->required();
    cross->add_flag("--dedup", opt.dedup, "one representative per isomorphism class");
    cross->add_flag("--timings", opt.timings, "include wall-clock metadata in the report");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    Format fmt = opt.format == "json" ? Format::Json : Format::Text;

    try {
        if (verify->parsed()) {
            std::cout << emit_report(verify_conjecture(opt.max_n, opt.jobs, opt.dedup), fmt,
                                     opt.timings);
            return 0;
        }
        if (cross->parsed()) {
            std::cout << emit_report(cross_validate(opt.max_n, opt.jobs, opt.dedup), fmt,
                                     opt.timings);
            return 0;
        }

        Poset p = parse_poset(read_input(opt.file));

        if (analyze->parsed() || gorenstein->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            GorensteinCertificate cert = analyze_with(p, opt.method);
            std::optional<double> secs;
            if (opt.timings)
                secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cout << emit_certificate(p, cert, fmt, secs);
        } else if (crepant->parsed()) {
            std::cout << emit_crepant(p, crepant_status(p), fmt);
        } else if (rays_cmd->parsed()) {
            std::cout << emit_rays(p, rays(p), fmt);
        } else if (mobius->parsed()) {
            std::cout << emit_mobius(p, mobius_hat(p), fmt);
        } else if (quotient->parsed()) {
            std::vector<QuotientPoset> steps;
            Poset cur = p;
            for (int i = 0; i < opt.steps; ++i) {
                steps.push_back(tree_quotient(cur));
                cur = steps.back().order;
            }
            std::cout << emit_quotients(p, steps, fmt);
        } else if (smooth->parsed()) {
            std::cout << emit_smooth(p, is_smooth(p), fmt);
        } else if (export_dot->parsed()) {
            std::optional<Labeling> l;
            if (opt.annotate == "labeling") {
                GorensteinCertificate cert = analyze_with(p, opt.method);
                if (!cert.labeling)
                    throw InputError("poset is not Q-Gorenstein; no labeling to annotate");
                l = cert.labeling;
            } else if (opt.annotate == "mobius") {
                Labeling ml;
                ml.phi = mobius_hat(p).mu;
                ml.r = 1;
                l = std::move(ml);
            }
            std::cout << export_hasse(p, l);
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ", column " << e.column << ")\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
