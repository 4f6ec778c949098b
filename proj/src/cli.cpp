#include "ldlab/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "ldlab/bounds.hpp"
#include "ldlab/core/json_io.hpp"
#include "ldlab/errors.hpp"
#include "ldlab/hypergraph.hpp"
#include "ldlab/search.hpp"
#include "ldlab/verify.hpp"
#include "ldlab/witness.hpp"

namespace ldlab::cli {

namespace {

struct Outcome {
    Json result;
    int code = Ok;
};

struct Input {
    std::string path;
    std::string digest;
    Json json;
};

class Session {
  public:
    Input load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParameterError(path + ": cannot open file");
        std::stringstream buf;
        buf << in.rdbuf();
        Input out{path, sha256_hex(buf.str()), {}};
        try {
            out.json = Json::parse(buf.str());
        } catch (const Json::parse_error& e) {
            throw ParameterError(path + ": malformed JSON at byte " + std::to_string(e.byte));
        }
        inputs_.push_back(Json{{"path", path}, {"sha256", out.digest}});
        return out;
    }

    const Json& inputs() const { return inputs_; }

  private:
    Json inputs_ = Json::array();
};

template <typename T, typename F>
T parse_input(const Input& in, F&& f) {
    try {
        return f(in.json);
    } catch (const ParameterError& e) {
        throw ParameterError(in.path + ": " + e.what());
    }
}

Code load_code(Session& s, const std::string& path) {
    return parse_input<Code>(s.load(path), [](const Json& j) { return code_from_json(j); });
}

LinearCode load_linear(Session& s, const std::string& path) {
    return parse_input<LinearCode>(s.load(path), [](const Json& j) { return linear_code_from_json(j); });
}

Json param_value(const CLI::Option* opt) {
    std::string v;
    if (opt->get_expected_min() == 0) return opt->count() > 0;
    if (opt->count() > 0) {
        const auto& r = opt->results();
        for (std::size_t i = 0; i < r.size(); ++i) v += (i ? "," : "") + r[i];
    } else {
        v = opt->get_default_str();
    }
    if (v.empty()) return nullptr;
    if (v.find_first_not_of("0123456789") == std::string::npos && v.size() < 19) return std::stoll(v);
    return v;
}

Json collect_params(const CLI::App* sub) {
    Json p = Json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help") continue;
        p[opt->get_lnames()[0]] = param_value(opt);
    }
    return p;
}

Json witness_report(const CenterWitness& w) {
    Json j = witness_to_json(w);
    j["verified"] = witness_holds(w);
    return j;
}

Json witness_report(const BoxWitness& w) {
    Json j = witness_to_json(w);
    j["verified"] = witness_holds(w);
    return j;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"List-decoding and list-recovery toolkit", "ldlab"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    bool timing = false;
    app.add_option("--out", out_path, "Write the report to this file instead of stdout");
    app.add_flag("--timing", timing, "Record wall time in the manifest (breaks bit-identical reruns)");

    Session session;
    std::function<Outcome()> action;
    const CLI::App* chosen = nullptr;
    std::string chosen_name;
    std::optional<std::uint64_t> seed_used;
    auto bind = [&](CLI::App* sub, const std::string& name, std::function<Outcome()> f) {
        sub->callback([&, sub, name, f] {
            action = f;
            chosen = sub;
            chosen_name = name;
        });
    };

    // verify
    std::string code_path;
    std::size_t t = 0, L = 1, ell = 1, eps = 0;
    unsigned threads = 1;
    std::optional<std::uint64_t> budget;
    {
        auto* sub = app.add_subcommand("verify", "Decide list-decodability or list-recoverability of a code");
        sub->add_option("--code", code_path, "Code JSON (word list or linear generator)")->required();
        sub->add_option("--t", t, "Radius (number of errors)")->required();
        sub->add_option("--L", L, "List size")->required();
        sub->add_option("--ell", ell, "Input list size (1 = list decoding)");
        sub->add_option("--threads", threads, "Worker threads");
        sub->add_option("--budget", budget, "Node budget");
        bind(sub, "verify", [&] {
            VerifyOptions opts;
            opts.threads = threads;
            if (budget) opts.node_budget = *budget;
            const Input in = session.load(code_path);
            Certificate cert;
            bool holds = false;
            if (in.json.is_object() && in.json.contains("generator")) {
                const auto lc = parse_input<LinearCode>(in, [](const Json& j) { return linear_code_from_json(j); });
                cert = ell == 1 ? is_list_decodable(lc, t, L, opts) : is_list_recoverable(lc, t, ell, L, opts);
                holds = certificate_holds(lc.expand(), cert);
            } else {
                const auto c = parse_input<Code>(in, [](const Json& j) { return code_from_json(j); });
                cert = ell == 1 ? is_list_decodable(c, t, L, opts) : is_list_recoverable(c, t, ell, L, opts);
                holds = certificate_holds(c, cert);
            }
            Json r = certificate_to_json(cert);
            r["certificate_rechecked"] = holds;
            return Outcome{r, cert.passed() ? Ok : Refuted};
        });
    }

    // bounds
    std::uint32_t q = 2;
    std::size_t n = 1;
    std::string which = "all";
    {
        auto* sub = app.add_subcommand("bounds", "Evaluate size and distance bounds");
        sub->add_option("--q", q, "Alphabet size")->required();
        sub->add_option("--n", n, "Block length")->required();
        sub->add_option("--t", t, "Radius")->required();
        sub->add_option("--L", L, "List size")->required();
        sub->add_option("--ell", ell, "Input list size for list recovery");
        sub->add_option("--bound", which, "all, ld_singleton, ld_refined, ld_linear_dim, lr_singleton, distance_linear")
            ->check(CLI::IsMember({"all", "ld_singleton", "ld_refined", "ld_linear_dim", "lr_singleton",
                                   "distance_linear"}));
        bind(sub, "bounds", [&] {
            std::vector<std::pair<std::string, std::function<BoundReport()>>> table{
                {"ld_singleton", [&] { return bound_ld_singleton_report(q, n, t, L); }},
                {"ld_refined", [&] { return bound_ld_refined(q, n, t, L); }},
                {"ld_linear_dim", [&] { return bound_ld_linear_dim(q, n, t, L); }},
                {"lr_singleton", [&] { return bound_lr_singleton_report(q, n, t, ell, L); }},
                {"distance_linear", [&] { return distance_lb_linear_report(n, t, ell, L); }},
            };
            if (which != "all") {
                for (auto& [name, f] : table) {
                    if (name == which) return Outcome{bound_report_to_json(f())};
                }
            }
            Json r = Json::object();
            for (auto& [name, f] : table) {
                try {
                    r[name] = bound_report_to_json(f());
                } catch (const ParameterError& e) {
                    r[name] = Json{{"error", e.what()}};
                }
            }
            return Outcome{r};
        });
    }

    // attack
    std::string kind;
    {
        auto* sub = app.add_subcommand("attack", "Build an explicit refutation or extract a subcode");
        sub->add_option("--kind", kind, "cluster, linear, box, linear-distance, subcode, pair")
            ->required()
            ->check(CLI::IsMember({"cluster", "linear", "box", "linear-distance", "subcode", "pair"}));
        sub->add_option("--code", code_path, "Input words or linear code")->required();
        sub->add_option("--t", t, "Radius")->required();
        sub->add_option("--L", L, "List size");
        sub->add_option("--ell", ell, "Input list size");
        sub->add_option("--eps", eps, "Integer slack for subcode and pair");
        bind(sub, "attack", [&] {
            if (kind == "linear") return Outcome{witness_report(refute_linear(load_linear(session, code_path), t, L)), Refuted};
            if (kind == "linear-distance") {
                return Outcome{witness_report(refute_linear_distance(load_linear(session, code_path), t, ell, L)),
                               Refuted};
            }
            const Code c = load_code(session, code_path);
            if (kind == "cluster") return Outcome{witness_report(refute_center_from_cluster(c.words(), t, L)), Refuted};
            if (kind == "box") return Outcome{witness_report(refute_recovery_box(c.words(), t, ell)), Refuted};
            if (kind == "pair") {
                if (c.size() < 2) throw ParameterError("pair attack needs c1, c2 and the cluster words");
                std::vector<Word> cluster(c.words().begin() + 2, c.words().end());
                return Outcome{witness_report(pair_center(c[0], c[1], cluster, t, L, eps)), Refuted};
            }
            auto res = subcode_extract(c, t, L, eps);
            Json r{{"subcode", code_to_json(res.subcode)},
                   {"removed", res.removed},
                   {"m", res.m},
                   {"guaranteed_distance", res.guaranteed_distance},
                   {"bad_pairs", res.bad_pairs},
                   {"input_size", c.size()},
                   {"removed_fraction",
                    rational_to_json(Rational(static_cast<long long>(res.removed.size()),
                                              static_cast<long long>(std::max<std::size_t>(c.size(), 1))))},
                   {"removed_fraction_cap",
                    rational_to_json(Rational(BigInt(L) * binomial(c.n(), c.n() - res.m), c.q()))}};
            return Outcome{r};
        });
    }

    // hg
    std::string graph_path;
    std::size_t v = 0, e = 2;
    std::uint64_t seed = 1;
    double c_const = 0.5;
    bool from_code_flag = false;
    {
        auto* hg = app.add_subcommand("hg", "Partite hypergraphs and the sparse-to-code pipeline");
        hg->require_subcommand(1);
        auto* build = hg->add_subcommand("build", "Random (v,e)-sparse partite hypergraph");
        build->add_option("--n", n, "Parts")->required();
        build->add_option("--q", q, "Part size")->required();
        build->add_option("--v", v, "Vertex threshold")->required();
        build->add_option("--e", e, "Edge count")->required();
        build->add_option("--seed", seed, "Random seed");
        build->add_option("--c", c_const, "Density constant");
        bind(build, "hg build", [&] {
            seed_used = seed;
            auto r = random_sparse_hypergraph(n, q, v, e, seed, {.c = c_const});
            return Outcome{Json{{"graph", hypergraph_to_json(r.graph)},
                                {"p", r.p},
                                {"sampled", r.sampled},
                                {"deleted", r.deleted},
                                {"edges", r.graph.size()}}};
        });
        auto* certify = hg->add_subcommand("certify", "Check (v,e)-sparsity");
        certify->add_option("--graph", graph_path, "Hypergraph JSON")->required();
        certify->add_option("--v", v, "Vertex threshold")->required();
        certify->add_option("--e", e, "Edge count")->required();
        certify->add_option("--budget", budget, "Node budget");
        bind(certify, "hg certify", [&] {
            const auto h = parse_input<PartiteHypergraph>(session.load(graph_path),
                                                          [](const Json& j) { return hypergraph_from_json(j); });
            auto r = budget ? is_sparse(h, v, e, *budget) : is_sparse(h, v, e);
            Json j{{"sparse", r.sparse}, {"nodes", r.nodes}};
            if (!r.sparse) j["violating"] = r.violating;
            return Outcome{j, r.sparse ? Ok : Refuted};
        });
        auto* convert = hg->add_subcommand("convert", "Hypergraph to code (or back with --from-code)");
        convert->add_option("--input", graph_path, "Hypergraph or code JSON")->required();
        convert->add_flag("--from-code", from_code_flag, "Input is a code");
        convert->add_option("--t", t, "Radius for the guarantee tag");
        convert->add_option("--L", L, "List size for the guarantee tag");
        bind(convert, "hg convert", [&] {
            if (from_code_flag) {
                return Outcome{hypergraph_to_json(hypergraph_from_code(load_code(session, graph_path)))};
            }
            const auto h = parse_input<PartiteHypergraph>(session.load(graph_path),
                                                          [](const Json& j) { return hypergraph_from_json(j); });
            auto tagged = code_from_hypergraph(h, t, L);
            Json j{{"code", code_to_json(tagged.code)}, {"guaranteed", tagged.guaranteed.has_value()}};
            return Outcome{j};
        });
        auto* pipe = hg->add_subcommand("pipeline", "Sparse hypergraph to certified list-decodable code");
        pipe->add_option("--n", n, "Block length")->required();
        pipe->add_option("--q", q, "Alphabet size")->required();
        pipe->add_option("--t", t, "Radius")->required();
        pipe->add_option("--L", L, "List size")->required();
        pipe->add_option("--seed", seed, "Random seed");
        pipe->add_option("--c", c_const, "Density constant");
        bind(pipe, "hg pipeline", [&] {
            seed_used = seed;
            auto r = pipeline_sparse_to_code(n, q, t, L, seed, {.c = c_const});
            Json j{{"code", code_to_json(r.code)},
                   {"size", r.code.size()},
                   {"certificate", certificate_to_json(r.certificate)},
                   {"v", r.v},
                   {"e", r.e},
                   {"p", r.p},
                   {"benchmark", r.benchmark},
                   {"size_ratio", r.size_ratio},
                   {"log_factor_regime", r.log_factor_regime}};
            return Outcome{j, r.certificate.passed() ? Ok : Refuted};
        });
    }

    // search
    std::string mode = "exact";
    bool linear = false;
    {
        auto* sub = app.add_subcommand("search", "Maximum list-decodable code search");
        sub->add_option("--q", q, "Alphabet size")->required();
        sub->add_option("--n", n, "Block length")->required();
        sub->add_option("--t", t, "Radius")->required();
        sub->add_option("--L", L, "List size")->required();
        sub->add_option("--ell", ell, "Input list size (linear search only)");
        sub->add_option("--mode", mode, "exact or budgeted")->check(CLI::IsMember({"exact", "budgeted"}));
        sub->add_option("--budget", budget, "Node budget");
        sub->add_flag("--linear", linear, "Search linear codes by dimension");
        bind(sub, "search", [&] {
            if (linear) {
                auto r = budget ? max_linear_search(Field(q), n, t, L, ell, *budget) : max_linear_search(Field(q), n, t, L, ell);
                Json j{{"k", r.k}, {"codes_checked", r.codes_checked}};
                j["witness"] = r.witness ? linear_code_to_json(*r.witness) : Json(nullptr);
                return Outcome{j};
            }
            SearchOptions so;
            if (budget) so.node_budget = *budget;
            auto r = max_code_search(q, n, t, L, mode == "exact" ? SearchMode::Exact : SearchMode::Budgeted, so);
            return Outcome{search_result_to_json(r)};
        });
    }

    // separate
    std::vector<std::uint32_t> q_list;
    std::size_t pipeline_seeds = 8;
    {
        auto* sub = app.add_subcommand("separate", "Linear versus nonlinear maximum sizes");
        sub->add_option("--n", n, "Block length")->required();
        sub->add_option("--t", t, "Radius")->required();
        sub->add_option("--L", L, "List size")->required();
        sub->add_option("--q", q_list, "Comma-separated prime powers")->required()->delimiter(',');
        sub->add_option("--budget", budget, "Nonlinear node budget");
        sub->add_option("--seed", seed, "Pipeline seed");
        sub->add_option("--pipeline-seeds", pipeline_seeds, "Pipeline runs used as incumbents");
        bind(sub, "separate", [&] {
            seed_used = seed;
            SeparationOptions so;
            so.seed = seed;
            so.pipeline_seeds = pipeline_seeds;
            if (budget) so.node_budget = *budget;
            Json series = Json::array();
            for (const auto& r : separation_experiment(q_list, n, t, L, so)) series.push_back(separation_report_to_json(r));
            return Outcome{Json{{"reports", series}}};
        });
    }

    // rs-search
    std::size_t k = 1;
    {
        auto* sub = app.add_subcommand("rs-search", "Find a list-decodable Reed-Solomon evaluation set");
        sub->add_option("--q", q, "Field size")->required();
        sub->add_option("--n", n, "Length")->required();
        sub->add_option("--k", k, "Dimension")->required();
        sub->add_option("--t", t, "Radius")->required();
        sub->add_option("--L", L, "List size")->required();
        sub->add_option("--budget", budget, "Candidate budget");
        bind(sub, "rs-search", [&] {
            Field f(q);
            auto r = budget ? rs_ld_search(f, n, k, t, L, *budget) : rs_ld_search(f, n, k, t, L);
            Json j{{"status", rs_status_str(r.status)}, {"candidates", r.candidates}};
            j["alpha"] = r.status == RsSearchStatus::Found ? Json(r.alpha) : Json(nullptr);
            const int code = r.status == RsSearchStatus::Found ? Ok
                             : r.status == RsSearchStatus::NoneExists ? Refuted
                                                                      : Undecided;
            return Outcome{j, code};
        });
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return Usage;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = action();
    } catch (const BudgetExceeded& e) {
        err << "undecided: " << e.what() << "\n";
        return Undecided;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    Json manifest{{"subcommand", chosen_name},
                  {"params", collect_params(chosen)},
                  {"seed", seed_used ? Json(*seed_used) : Json(nullptr)},
                  {"tool_version", kToolVersion},
                  {"inputs", session.inputs()}};
    if (timing) manifest["wall_time_ms"] = ms;
    Json report{{"manifest", manifest}, {"result", outcome.result}, {"exit_code", outcome.code}};
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << out_path << "\n";
            return Usage;
        }
        f << text;
    }
    return outcome.code;
}

}  // namespace ldlab::cli
