#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewpf/connection.hpp"
#include "skewpf/enumerate.hpp"
#include "skewpf/errors.hpp"
#include "skewpf/io.hpp"
#include "skewpf/martin.hpp"
#include "skewpf/matchdir.hpp"
#include "skewpf/partition_fn.hpp"
#include "skewpf/rational_matrix.hpp"
#include "skewpf/skew_tensor.hpp"
#include "skewpf/verify.hpp"

using json = nlohmann::json;
using namespace skewpf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitTooLarge = 3;

struct RunConfig {
    unsigned long long bound = kDefaultBound;
    std::string output = "text";
    unsigned seed = 1;

    bool json_output() const { return output == "json"; }
};

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad index list '" + text + "'");
        }
    }
    if (out.empty()) throw ParseError("empty index list");
    return out;
}

SkewTensor load_model(int martin_ell, const std::string& tensor_file) {
    if (martin_ell > 0 && !tensor_file.empty()) {
        throw ParseError("choose either --martin or --tensor");
    }
    if (martin_ell > 0) return build_martin_model(martin_ell);
    if (!tensor_file.empty()) return parse_skew_tensor_file(tensor_file);
    throw ParseError("a model is required: --martin <ell> or --tensor <file>");
}

json report_json(const CheckReport& report) {
    return json{{"check", report.check},
                {"instances", report.instances},
                {"failures", report.failures},
                {"elapsed_ms", report.elapsed_ms}};
}

int emit_report(const CheckReport& report) {
    std::cout << report_json(report).dump(2) << '\n';
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int run_skew_eval(const RunConfig& cfg, const std::string& graph_arg, int martin_ell,
                  const std::string& tensor_file) {
    const Multigraph g = graph_from_name_or_file(graph_arg);
    const SkewTensor h = load_model(martin_ell, tensor_file);
    const Rat value = skew_partition(h, g, cfg.bound);
    if (cfg.json_output()) {
        std::cout << json{{"value", to_string(value)}}.dump(2) << '\n';
    } else {
        std::cout << to_string(value) << '\n';
    }
    return kExitOk;
}

int run_martin(const RunConfig& cfg, const std::string& graph_arg, bool want_poly,
               std::optional<long> at) {
    const Multigraph g = graph_from_name_or_file(graph_arg);
    if (want_poly == at.has_value()) {
        throw ParseError("choose exactly one of --poly or --at <x>");
    }
    if (want_poly) {
        const IntPolynomial j = circuit_partition_polynomial(g, cfg.bound);
        if (cfg.json_output()) {
            std::vector<std::string> coeffs;
            for (const Int& c : j.coeffs) coeffs.push_back(c.get_str());
            if (coeffs.empty()) coeffs.push_back("0");
            std::cout << json{{"coefficients", coeffs}}.dump(2) << '\n';
        } else {
            std::cout << j.to_string() << '\n';
        }
        return kExitOk;
    }

    // Evaluate by every applicable route; all applicable routes must agree.
    const long x = *at;
    std::vector<std::pair<std::string, Int>> routes;
    std::optional<TooLargeError> blocked;
    try {
        routes.emplace_back("transition_polynomial",
                            circuit_partition_polynomial(g, cfg.bound).eval(Int(x)));
    } catch (const TooLargeError& e) {
        blocked = e;  // the closed forms below may still apply
    }
    if (x >= 1) {
        routes.emplace_back("eulerian_subsets", eval_positive(g, static_cast<int>(x), cfg.bound));
    } else if (x < 0 && x % 2 == 0) {
        routes.emplace_back("two_regular_partitions",
                            eval_negative_even(g, static_cast<int>(-x / 2), cfg.bound));
    }
    if (routes.empty()) throw *blocked;
    bool agree = true;
    for (const auto& [name, value] : routes) agree = agree && value == routes.front().second;
    if (cfg.json_output() || !agree) {
        json out;
        out["value"] = routes.front().second.get_str();
        out["agree"] = agree;
        for (const auto& [name, value] : routes) out["routes"][name] = value.get_str();
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << routes.front().second.get_str() << '\n';
    }
    return agree ? kExitOk : kExitCheckFailed;
}

int run_verify(const RunConfig& cfg, const std::string& which, const std::string& graph_arg,
               int martin_ell, const std::string& tensor_file, const std::string& u_list,
               int ell, int m, int max_edges, long budget, bool fragments_mode) {
    if (which == "invariance") {
        const SkewTensor h = load_model(martin_ell, tensor_file);
        const Multigraph g = graph_from_name_or_file(graph_arg);
        return emit_report(check_invariance(h, g, budget, cfg.seed));
    }
    if (which == "relation") {
        if (!graph_arg.empty()) {
            const SkewTensor h = load_model(martin_ell, tensor_file);
            const Multigraph g = graph_from_name_or_file(graph_arg);
            return emit_report(check_relation_single(h, g, parse_index_list(u_list),
                                                     h.ell, cfg.bound));
        }
        const int use_ell = martin_ell > 0 ? martin_ell : ell;
        return emit_report(check_relation_family(use_ell, max_edges, cfg.bound));
    }
    if (which == "gram") {
        if (fragments_mode) return emit_report(check_gram_fragments(max_edges, ell, cfg.bound));
        return emit_report(check_gram_matchings(ell, m, cfg.bound));
    }
    if (which == "v0") return emit_report(check_v0(ell, m, cfg.bound));
    if (which == "signid") return emit_report(check_sign_identity(m, cfg.bound));
    if (which == "agree") return emit_report(check_agree(max_edges, 3, 2, cfg.bound));
    throw ParseError("unknown check '" + which + "'");
}

int run_rank(const RunConfig& cfg, const std::vector<std::string>& matching_args,
             const std::string& fragments_file, int martin_ell) {
    json out;
    RankCertificate cert;
    Int bound_value;
    if (!matching_args.empty()) {
        if (matching_args.size() != 2) throw ParseError("--matching needs <b> <k>");
        Int b;
        int k = 0;
        try {
            b = Int(matching_args[0]);
            k = std::stoi(matching_args[1]);
        } catch (const std::exception&) {
            throw ParseError("--matching needs integer arguments");
        }
        const RationalMatrix n = matching_matrix(b, k, cfg.bound);
        cert = exact_rank(n);
        Int abs_b = b >= 0 ? b : Int(-b);
        bound_value = int_pow(abs_b, 2ul * k);
        out["matrix"] = "matching";
        out["base"] = b.get_str();
        out["k"] = k;
        if (b == -2) {
            out["catalan"] = catalan_rank(k).get_str();
            out["rank_equals_catalan"] = Int(cert.rank) == catalan_rank(k);
        }
    } else if (!fragments_file.empty()) {
        const auto fragments = parse_fragments_file(fragments_file);
        const SkewTensor h = build_martin_model(martin_ell > 0 ? martin_ell : 1);
        const int ends = fragments.front().k();
        if (ends % 2 != 0) throw ParseError("fragments need an even number of open ends");
        GraphEvaluator f = [&](const Multigraph& glued) {
            return skew_partition(h, glued, cfg.bound);
        };
        cert = exact_rank(connection_submatrix(f, fragments));
        bound_value = int_pow(2 * h.ell, static_cast<unsigned long>(ends));
        out["matrix"] = "connection";
        out["fragments"] = fragments_file;
        out["open_ends"] = ends;
    } else {
        throw ParseError("rank needs --matching <b> <k> or --connection <file>");
    }
    out["rows"] = cert.rows;
    out["cols"] = cert.cols;
    out["rank"] = cert.rank;
    out["pivot_rows"] = cert.pivot_rows;
    out["pivot_cols"] = cert.pivot_cols;
    out["bound"] = bound_value.get_str();
    const bool within = Int(cert.rank) <= bound_value;
    out["within_bound"] = within;
    std::cout << out.dump(2) << '\n';
    return within ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact skew-partition functions, circuit partition polynomials and "
                 "connection-matrix rank certificates"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--bound", cfg.bound, "enumeration bound (number of states)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", cfg.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();

    // skew-eval
    auto* eval_cmd = app.add_subcommand("skew-eval", "evaluate the skew partition function");
    std::string eval_graph;
    int eval_martin = 0;
    std::string eval_tensor;
    eval_cmd->add_option("graph", eval_graph, "graph file or builtin name")->required();
    eval_cmd->add_option("--martin", eval_martin, "use the builtin model for this ell");
    eval_cmd->add_option("--tensor", eval_tensor, "skew tensor file");

    // martin
    auto* martin_cmd = app.add_subcommand("martin", "circuit partition polynomial");
    std::string martin_graph;
    bool martin_poly = false;
    std::optional<long> martin_at;
    long martin_at_value = 0;
    martin_cmd->add_option("graph", martin_graph, "graph file or builtin name")->required();
    martin_cmd->add_flag("--poly", martin_poly, "print coefficients low to high");
    auto* at_opt = martin_cmd->add_option("--at", martin_at_value, "evaluate at an integer");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string verify_which, verify_graph, verify_tensor, verify_u;
    int verify_martin = 0, verify_ell = 1, verify_m = 2, verify_max_edges = 4;
    long verify_budget = 20000;
    bool verify_fragments = false;
    verify_cmd->add_option("check", verify_which, "invariance|relation|gram|v0|signid|agree")
        ->required();
    verify_cmd->add_option("--graph", verify_graph, "graph file or builtin name");
    verify_cmd->add_option("--martin", verify_martin, "builtin model ell");
    verify_cmd->add_option("--tensor", verify_tensor, "skew tensor file");
    verify_cmd->add_option("--U", verify_u, "comma separated edge ids");
    verify_cmd->add_option("--ell", verify_ell, "model half-dimension");
    verify_cmd->add_option("--m", verify_m, "number of matching arcs");
    verify_cmd->add_option("--max-edges", verify_max_edges, "family size for sweeps");
    verify_cmd->add_option("--budget", verify_budget, "pair budget for invariance");
    verify_cmd->add_flag("--fragments", verify_fragments, "gram over fragment gluings");

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "exact rank certificates");
    std::vector<std::string> rank_matching;
    std::string rank_fragments;
    int rank_martin = 0;
    rank_cmd->add_option("--matching", rank_matching, "<b> <k>")->expected(2);
    rank_cmd->add_option("--connection", rank_fragments, "fragments file");
    rank_cmd->add_option("--martin", rank_martin, "builtin model ell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*eval_cmd) return run_skew_eval(cfg, eval_graph, eval_martin, eval_tensor);
        if (*martin_cmd) {
            if (at_opt->count() > 0) martin_at = martin_at_value;
            return run_martin(cfg, martin_graph, martin_poly, martin_at);
        }
        if (*verify_cmd) {
            return run_verify(cfg, verify_which, verify_graph, verify_martin, verify_tensor,
                              verify_u, verify_ell, verify_m, verify_max_edges, verify_budget,
                              verify_fragments);
        }
        if (*rank_cmd) return run_rank(cfg, rank_matching, rank_fragments, rank_martin);
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTooLarge;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
