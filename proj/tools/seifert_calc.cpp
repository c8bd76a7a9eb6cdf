#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "seifert/errors.hpp"
#include "seifert/report.hpp"
#include "seifert/star_graph.hpp"
#include "seifert/sweep.hpp"

namespace {

using namespace seifert;

std::string read_graph_arg(const std::string& arg) {
    std::string s = arg;
    if (s.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        s = buf.str();
    }
    const char* ws = " \t\r\n";
    const size_t b = s.find_first_not_of(ws);
    if (b == std::string::npos)
        throw validation_error("no graph given (positional argument or stdin)");
    const size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw validation_error(std::string(what) + ": not an integer: " + s);
    }
}

// --t accepts a single arm count ("3") or an inclusive range ("3..5").
void parse_t_range(const std::string& s, SweepBounds& b) {
    const size_t dots = s.find("..");
    if (dots == std::string::npos) {
        const long t = parse_long(s, "--t");
        b.t_min = static_cast<int>(t);
        b.t_max = static_cast<int>(t);
        return;
    }
    b.t_min = static_cast<int>(parse_long(s.substr(0, dots), "--t"));
    b.t_max = static_cast<int>(parse_long(s.substr(dots + 2), "--t"));
}

Int parse_big(const std::string& s, const char* what) {
    try {
        return Int(s, 10);
    } catch (const std::exception&) {
        throw validation_error(std::string(what) + ": not an integer: " + s);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of weighted homogeneous surface singularities "
                 "given by star-shaped resolution graphs"};
    app.require_subcommand(1);

    bool json = false;
    bool verify = false;
    std::string graph_arg;
    long k_max = 0;
    std::string t_range_arg;
    long d_max = 0;
    long n_max = 0;
    std::string filter_arg;
    std::string cf_arg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "emit the result as JSON");
        sub->add_flag("--verify", verify, "force oracle cross-checks on");
        return sub;
    };
    auto add_graph_arg = [&](CLI::App* sub) {
        sub->add_option("graph", graph_arg,
                        "graph in text or JSON form (reads stdin when omitted)");
        return add_common(sub);
    };

    CLI::App* cmd_invariants = add_graph_arg(app.add_subcommand(
        "invariants", "e, chi, chi/e, alpha, order of K, discriminant group, |det|"));
    CLI::App* cmd_canonical = add_graph_arg(app.add_subcommand(
        "canonical-cycle", "K coefficient on every exceptional curve"));
    CLI::App* cmd_classify = add_graph_arg(app.add_subcommand(
        "classify", "log terminal / log canonical / neither, with certificate"));
    CLI::App* cmd_poincare = add_graph_arg(app.add_subcommand(
        "poincare", "dim A_k for k = 0..kmax (genus 0)"));
    cmd_poincare->add_option("--kmax", k_max, "largest degree")->required();
    CLI::App* cmd_gorenstein = add_graph_arg(app.add_subcommand(
        "gorenstein", "Gorenstein test and the graded order of K"));
    CLI::App* cmd_enumerate = add_common(app.add_subcommand(
        "enumerate", "sweep genus-0 graphs matching a filter"));
    cmd_enumerate->add_option("--t", t_range_arg, "arm count, single value or lo..hi")
        ->required();
    cmd_enumerate->add_option("--dmax", d_max, "largest central -C.C")->required();
    cmd_enumerate->add_option("--nmax", n_max, "largest arm order n")->required();
    cmd_enumerate
        ->add_option("--filter", filter_arg,
                     "qhd-cases | chi-e-lt-1 | alpha-gt-minus2 | log-canonical")
        ->required();
    CLI::App* cmd_cf = add_common(
        app.add_subcommand("cf", "Hirzebruch-Jung continued fraction of n/q"));
    cmd_cf->add_option("fraction", cf_arg, "n/q")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* env = std::getenv("SEIFERT_CALC_VERIFY"); env && std::string(env) == "1")
        verify = true;

    try {
        Document doc;
        bool bare_list = false;

        if (app.got_subcommand(cmd_invariants)) {
            doc = invariants_document(parse_star(read_graph_arg(graph_arg)), verify);
        } else if (app.got_subcommand(cmd_canonical)) {
            doc = canonical_cycle_document(parse_star(read_graph_arg(graph_arg)));
        } else if (app.got_subcommand(cmd_classify)) {
            doc = classify_document(parse_star(read_graph_arg(graph_arg)));
        } else if (app.got_subcommand(cmd_poincare)) {
            doc = poincare_document(parse_star(read_graph_arg(graph_arg)), k_max);
        } else if (app.got_subcommand(cmd_gorenstein)) {
            doc = gorenstein_document(parse_star(read_graph_arg(graph_arg)));
        } else if (app.got_subcommand(cmd_enumerate)) {
            SweepBounds bounds;
            parse_t_range(t_range_arg, bounds);
            bounds.d_max = d_max;
            bounds.n_max = n_max;
            const auto filter = sweep_filter_from_string(filter_arg);
            if (!filter)
                throw validation_error("enumerate: unknown filter: " + filter_arg);
            doc = sweep_document(bounds, *filter, sweep_graphs(bounds, *filter));
        } else if (app.got_subcommand(cmd_cf)) {
            const size_t slash = cf_arg.find('/');
            if (slash == std::string::npos || slash == 0 || slash + 1 == cf_arg.size())
                throw validation_error("cf: expected n/q, got: " + cf_arg);
            const Int n = parse_big(cf_arg.substr(0, slash), "cf");
            const Int q = parse_big(cf_arg.substr(slash + 1), "cf");
            doc = cf_document(n, q);
            bare_list = true;
        }

        if (json)
            std::cout << doc.dump(2) << "\n";
        else if (bare_list)
            std::cout << render_inline_array(doc["entries"]) << "\n";
        else
            std::cout << render_text(doc);
        return 0;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    }
}
