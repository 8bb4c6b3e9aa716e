// gonograph: exact chip-firing and Fibonacci-sumset computations on the
// command line. Exit codes: 0 success, 1 verification found a mathematical
// mismatch, 2 usage or capacity errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gono/additive_set.hpp"
#include "gono/divisor.hpp"
#include "gono/errors.hpp"
#include "gono/fibonacci.hpp"
#include "gono/jacobian.hpp"
#include "gono/laplacian.hpp"
#include "gono/multigraph.hpp"
#include "gono/smith.hpp"
#include "gono/verify.hpp"

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphArgs {
    std::string family;
    int n = -1;
    std::string graph_file;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
    cmd->add_option("--family", args.family, "graph family: strip or fan")
        ->check(CLI::IsMember({"strip", "fan"}));
    cmd->add_option("--n", args.n, "family size parameter");
    cmd->add_option("--graph", args.graph_file, "graph JSON file instead of a family");
}

gono::Multigraph resolve_graph(const GraphArgs& args) {
    if (!args.graph_file.empty()) {
        if (!args.family.empty() || args.n >= 0)
            throw usage_error("give either --graph or --family/--n, not both");
        return gono::read_graph_file(args.graph_file);
    }
    if (args.family.empty() || args.n < 0)
        throw usage_error("need --family and --n (or --graph FILE)");
    return args.family == "strip" ? gono::strip(args.n) : gono::fan(args.n);
}

std::string join_int128(const std::vector<gono::int128>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += gono::to_string(xs[i]);
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisor theory and additive combinatorics on graphs"};
    app.require_subcommand(1);
    int rc = 0;

    // gen
    GraphArgs gen_args;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a family graph as JSON");
    gen->add_option("--family", gen_args.family, "graph family: strip or fan")
        ->required()
        ->check(CLI::IsMember({"strip", "fan"}));
    gen->add_option("--n", gen_args.n, "family size parameter")->required();
    gen->add_option("--out", gen_out, "output file (default: stdout)");
    gen->callback([&] {
        gono::Multigraph g =
            gen_args.family == "strip" ? gono::strip(gen_args.n) : gono::fan(gen_args.n);
        std::string text = gono::write_graph_json(g);
        if (gen_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(gen_out, std::ios::binary);
            if (!out) throw usage_error("cannot open " + gen_out + " for writing");
            out << text;
        }
    });

    // kappa
    GraphArgs kappa_args;
    int kappa_i = -1, kappa_j = -1;
    CLI::App* kappa = app.add_subcommand(
        "kappa", "spanning tree count, or the two-forest split count for (i, j)");
    add_graph_options(kappa, kappa_args);
    CLI::Option* opt_i = kappa->add_option("--i", kappa_i, "first split vertex");
    CLI::Option* opt_j = kappa->add_option("--j", kappa_j, "second split vertex");
    opt_i->needs(opt_j);
    opt_j->needs(opt_i);
    kappa->callback([&] {
        gono::Multigraph g = resolve_graph(kappa_args);
        if (kappa_i < 0 && kappa_j < 0) {
            std::cout << gono::to_string(gono::spanning_tree_count(g)) << "\n";
        } else {
            std::cout << gono::to_string(gono::two_forest_count(g, kappa_i, kappa_j))
                      << "\n";
        }
    });

    // jacobian
    GraphArgs jac_args;
    CLI::App* jac =
        app.add_subcommand("jacobian", "invariant factors and the cyclic residue model");
    add_graph_options(jac, jac_args);
    jac->callback([&] {
        gono::Multigraph g = resolve_graph(jac_args);
        std::vector<gono::int128> inv = gono::smith_invariants(g);
        std::cout << "invariant factors: " << join_int128(inv) << "\n";
        std::cout << "order: " << gono::to_string(gono::spanning_tree_count(g)) << "\n";
        try {
            gono::CyclicJacobian model = gono::cyclic_model(g);
            std::cout << "cyclic model modulus: " << gono::to_string(model.modulus)
                      << "\n";
            std::cout << "generator images: " << join_int128(model.generator_images)
                      << "\n";
        } catch (const gono::precondition_error&) {
            std::cout << "cyclic model: unavailable ([v1 - v0] does not generate)\n";
        }
    });

    // reduce
    GraphArgs red_args;
    std::string red_divisor;
    int red_base = 0;
    CLI::App* red = app.add_subcommand("reduce", "reduce a divisor at a base vertex");
    add_graph_options(red, red_args);
    red->add_option("--divisor", red_divisor, "divisor as \"c@i,c@j,...\"")->required();
    red->add_option("--base", red_base, "base vertex q")->required();
    red->callback([&] {
        gono::Multigraph g = resolve_graph(red_args);
        gono::Divisor d = gono::Divisor::parse(red_divisor, g.vertex_count());
        gono::ReducedDivisor out = gono::q_reduce(g, d, red_base);
        std::cout << "reduced: " << out.divisor.to_string() << "\n";
        std::string firings;
        for (size_t v = 0; v < out.certificate.firings.size(); ++v) {
            if (v) firings += ',';
            firings += std::to_string(out.certificate.firings[v]);
        }
        std::cout << "firings: " << firings << "\n";
    });

    // rank
    GraphArgs rank_args;
    std::string rank_divisor;
    CLI::App* rnk = app.add_subcommand("rank", "Baker-Norine rank of a divisor");
    add_graph_options(rnk, rank_args);
    rnk->add_option("--divisor", rank_divisor, "divisor as \"c@i,c@j,...\"")->required();
    rnk->callback([&] {
        gono::Multigraph g = resolve_graph(rank_args);
        gono::Divisor d = gono::Divisor::parse(rank_divisor, g.vertex_count());
        std::cout << gono::rank(g, d) << "\n";
    });

    // gonality
    GraphArgs gon_args;
    std::string gon_method = "sumset";
    int gon_rank = 1;
    CLI::App* gon = app.add_subcommand("gonality", "smallest degree of a rank-r divisor");
    add_graph_options(gon, gon_args);
    gon->add_option("--method", gon_method, "sumset (residue search) or dhar (divisor search)")
        ->check(CLI::IsMember({"sumset", "dhar"}));
    gon->add_option("--rank", gon_rank, "target rank r (default 1)");
    gon->callback([&] {
        gono::Multigraph g = resolve_graph(gon_args);
        if (gon_rank < 1) throw usage_error("--rank must be at least 1");
        if (gon_method == "dhar") {
            gono::DharGonality out = gono::gonality_dhar(g, gon_rank);
            std::cout << "gonality: " << out.degree << "\n";
            std::cout << "witness divisor: " << out.witness.to_string() << "\n";
        } else {
            gono::AdditiveSet a = gono::additive_set(gono::cyclic_model(g));
            gono::SumsetGonality out = gono::gonality_sumset(a, gon_rank);
            std::cout << "gonality: " << out.degree << "\n";
            std::cout << "witness residue: " << out.witness << "\n";
        }
    });

    // sumset
    GraphArgs sum_args;
    int sum_m = 1;
    CLI::App* sum = app.add_subcommand(
        "sumset", "m-fold sumset of the graph's residue set, with Zeckendorf forms");
    add_graph_options(sum, sum_args);
    sum->add_option("--m", sum_m, "number of summands (default 1)");
    sum->callback([&] {
        gono::Multigraph g = resolve_graph(sum_args);
        if (sum_m < 1) throw usage_error("--m must be at least 1");
        gono::AdditiveSet a = gono::additive_set(gono::cyclic_model(g));
        gono::AdditiveSet ma = gono::iterated_sumset(a, sum_m);
        std::cout << "modulus: " << ma.modulus() << "\n";
        std::cout << "size: " << ma.size() << "\n";
        for (std::int64_t e : ma.elements())
            std::cout << e << " = " << gono::ZeckendorfForm::encode(e).to_string()
                      << "\n";
    });

    // verify
    std::string verify_check;
    int verify_n_max = -1;
    std::string verify_format = "text";
    CLI::App* ver =
        app.add_subcommand("verify", "run registered checks and report every instance");
    CLI::Option* opt_check =
        ver->add_option("--check", verify_check, "check id (default: all checks)");
    ver->add_option("--n-max", verify_n_max, "largest n to test, inclusive")
        ->needs(opt_check);
    ver->add_option("--format", verify_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    ver->callback([&] {
        std::vector<std::string> ids;
        if (verify_check.empty()) {
            ids = gono::verify::check_ids();
        } else {
            if (!gono::verify::is_registered(verify_check)) {
                std::string known;
                for (const std::string& id : gono::verify::check_ids())
                    known += "\n  " + id;
                throw usage_error("unknown check id \"" + verify_check +
                                  "\"; known ids:" + known);
            }
            ids.push_back(verify_check);
        }
        gono::verify::CheckParams params;
        params.n_max = verify_n_max;
        std::vector<gono::verify::VerificationReport> reports;
        for (const std::string& id : ids) {
            reports.push_back(gono::verify::run_check(id, params));
            std::cerr << "# " << id << ": " << reports.back().elapsed_seconds << "s\n";
        }
        if (verify_format == "json")
            std::cout << gono::verify::render_json(reports);
        else if (verify_format == "csv")
            std::cout << gono::verify::render_csv(reports);
        else
            std::cout << gono::verify::render_text(reports);
        for (const auto& rep : reports)
            if (rep.status == gono::verify::Status::fail) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const usage_error& e) {
        std::cerr << "gonograph: " << e.what() << "\n";
        return 2;
    } catch (const gono::error& e) {
        std::cerr << "gonograph: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gonograph: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
