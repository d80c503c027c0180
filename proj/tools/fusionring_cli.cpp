#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "fusion/identities.hpp"
#include "fusion/kac_walton.hpp"
#include "fusion/serialize.hpp"
#include "fusion/verlinde.hpp"
#include "fusion/vertex.hpp"

namespace {

using namespace fusion;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;

struct Options {
    int n = 3;
    int k = 1;
    std::string lambda;
    std::string mu;
    std::string nu;
    int d = 0;
    bool dump = false;
    std::string method = "bethe";
    std::string format = "text";
    unsigned jobs = 1;
    double tolerance = 0.0;  // 0 means defaults
};

Tolerances make_tolerances(const Options& opt) {
    Tolerances tol = default_tolerances();
    if (opt.tolerance > 0.0) {
        tol.verlinde_round = opt.tolerance;
        tol.spectral = opt.tolerance;
        tol.smatrix_cross = opt.tolerance;
    }
    return tol;
}

// accepts either a partition ("2,1", "0") or a weight ("[0,1,1]")
AffineWeight parse_weight_arg(const std::string& s, const FusionContext& ctx) {
    if (!s.empty() && s.front() == '[') {
        AffineWeight w = AffineWeight::parse(s);
        if (static_cast<int>(w.dynkin.size()) != ctx.n() || w.level() != ctx.k())
            throw std::invalid_argument("weight " + s + " is not at level k for this n");
        return w;
    }
    return partition_to_weight(Partition::parse(s), ctx);
}

std::string expansion_text(const FusionExpansion& e) {
    if (e.terms.empty()) return "  (empty)\n";
    std::string out;
    for (const auto& [shape, coeff] : e.terms)
        out += "  (" + shape.to_string() + "): " + coeff.to_string() + "\n";
    return out;
}

FusionExpansion fuse_by(const std::string& method, const Partition& lambda, const Partition& mu,
                        const FusionContext& ctx, const Tolerances& tol) {
    if (method == "bethe") return fuse_bethe(lambda, mu, ctx);
    if (method == "kac-walton") return fuse_kac_walton(lambda, mu, ctx);
    if (method == "verlinde") return fuse_verlinde(lambda, mu, ctx, tol);
    if (method == "plactic") return fuse_plactic(lambda, mu, ctx);
    throw std::invalid_argument("unknown method '" + method + "'");
}

int cmd_fuse(const Options& opt) {
    FusionContext ctx(opt.n, opt.k);
    Tolerances tol = make_tolerances(opt);
    Partition lambda = Partition::parse(opt.lambda);
    Partition mu = Partition::parse(opt.mu);

    if (opt.method != "all") {
        FusionExpansion e = fuse_by(opt.method, lambda, mu, ctx, tol);
        if (opt.format == "json") {
            std::cout << to_json(e).dump(2) << "\n";
        } else {
            std::cout << "(" << lambda.to_string() << ") * (" << mu.to_string() << ")  ["
                      << opt.method << ", n=" << opt.n << ", k=" << opt.k << "]\n"
                      << expansion_text(e);
        }
        return kExitOk;
    }

    const char* names[] = {"bethe", "kac-walton", "verlinde", "plactic"};
    FusionExpansion results[4];
    for (int i = 0; i < 4; ++i) results[i] = fuse_by(names[i], lambda, mu, ctx, tol);
    int agree = 1;
    for (int i = 1; i < 4; ++i)
        if (results[i] == results[0]) ++agree;
    bool all_agree = (agree == 4);

    if (opt.format == "json") {
        json j = to_json(results[0]);
        j["agreement"] = all_agree;
        j["methods"] = {names[0], names[1], names[2], names[3]};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "(" << lambda.to_string() << ") * (" << mu.to_string() << ")  [all, n="
                  << opt.n << ", k=" << opt.k << "]\n"
                  << expansion_text(results[0]) << (all_agree ? "AGREE" : "DISAGREE") << "("
                  << agree << "/4)\n";
    }
    return all_agree ? kExitOk : kExitDisagree;
}

int cmd_verify(const Options& opt) {
    FusionContext ctx(opt.n, opt.k);
    ValidationReport rep = cross_validate(ctx, make_tolerances(opt), opt.jobs);
    if (opt.format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        std::printf("verification n=%d k=%d\n", rep.n, rep.k);
        for (const auto& c : rep.checks) {
            std::printf("  %-28s %s", c.name.c_str(), c.pass ? "pass" : "FAIL");
            if (c.residual != 0.0) std::printf("  (residual %.3g)", c.residual);
            if (!c.detail.empty()) std::printf("  [%s]", c.detail.c_str());
            std::printf("\n");
        }
        std::printf("%s\n", rep.all_pass() ? "PASS" : "FAIL");
    }
    return rep.all_pass() ? kExitOk : kExitDisagree;
}

int cmd_smatrix(const Options& opt) {
    FusionContext ctx(opt.n, opt.k);
    ComplexMatrix s = s_matrix(ctx);
    if (opt.format == "json") {
        std::cout << to_json(s, ctx).dump(2) << "\n";
    } else {
        std::printf("modular S-matrix, n=%d k=%d, basis order:\n", opt.n, opt.k);
        for (int i = 0; i < ctx.basis_size(); ++i)
            std::printf("  %2d: %s ~ (%s)\n", i, ctx.weight(i).to_string().c_str(),
                        ctx.partition(i).to_string().c_str());
        for (int i = 0; i < s.n; ++i) {
            for (int j = 0; j < s.n; ++j)
                std::printf(" %+.6f%+.6fi", s.at(i, j).real(), s.at(i, j).imag());
            std::printf("\n");
        }
    }
    return kExitOk;
}

int cmd_paths(const Options& opt) {
    FusionContext ctx(opt.n, opt.k);
    AffineWeight mu = parse_weight_arg(opt.mu, ctx);
    AffineWeight nu = parse_weight_arg(opt.nu, ctx);

    if (opt.dump) {
        json out = json::array();
        for (const auto& cfg : enumerate_lattice_configs(mu, nu, ctx)) {
            if (cfg.seam_total() != opt.d) continue;
            out.push_back(to_json(cfg));
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    BigInt direct = count_paths(mu, nu, opt.d, ctx);

    Rational sum(0);
    Partition pmu = weight_to_partition(mu, ctx);
    Partition pnu = weight_to_partition(nu, ctx);
    for (int li = 0; li < ctx.basis_size(); ++li) {
        const Partition& lam = ctx.partition(li);
        int num = lam.weight() + pmu.weight() - pnu.weight();
        if (num % ctx.n() != 0) continue;
        if (num / ctx.n() + pnu.part(1) - pmu.part(1) != opt.d) continue;
        BigInt c = fuse_bethe(lam, pmu, ctx).coeff(pnu);
        if (c.is_zero()) continue;
        sum += Rational(c) * hook_content_product(lam, ctx.n());
    }
    std::string hook = sum.is_integer() ? sum.num().to_string() : sum.to_string();
    if (opt.format == "json") {
        json j{{"n", opt.n}, {"k", opt.k}, {"mu", mu.dynkin}, {"nu", nu.dynkin}, {"d", opt.d},
               {"config_count", direct.to_string()}, {"hook_content_sum", hook}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("|Gamma(d=%d)| = %s   hook-content sum = %s   %s\n", opt.d,
                    direct.to_string().c_str(), hook.c_str(),
                    direct.to_string() == hook ? "EQUAL" : "MISMATCH");
    }
    return direct.to_string() == hook ? kExitOk : kExitDisagree;
}

int cmd_table(const Options& opt) {
    FusionContext ctx(opt.n, opt.k);
    Tolerances tol = make_tolerances(opt);
    const int dim = ctx.basis_size();
    json jtables = json::array();
    for (int li = 0; li < dim; ++li) {
        const Partition& lambda = ctx.partition(li);
        if (opt.format != "json")
            std::printf("N_(%s):\n", lambda.to_string().c_str());
        json rows = json::array();
        for (int mi = 0; mi < dim; ++mi) {
            FusionExpansion e = fuse_by(opt.method == "all" ? "bethe" : opt.method, lambda,
                                        ctx.partition(mi), ctx, tol);
            json row = json::array();
            if (opt.format != "json") std::printf("  ");
            for (int ni = 0; ni < dim; ++ni) {
                BigInt c = e.coeff(ctx.partition(ni));
                if (opt.format == "json") row.push_back(c.to_long_long());
                else std::printf(" %s", c.to_string().c_str());
            }
            if (opt.format != "json") std::printf("\n");
            rows.push_back(row);
        }
        jtables.push_back({{"lambda", lambda.parts()}, {"matrix", rows}});
    }
    if (opt.format == "json")
        std::cout << json{{"n", opt.n}, {"k", opt.k}, {"tables", jtables}}.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"su(n) level-k WZNW fusion ring toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_nk = true) {
        if (needs_nk) {
            sub->add_option("--n", opt.n, "rank parameter (>= 2)")->required();
            sub->add_option("--k", opt.k, "level (>= 0)")->required();
        }
        sub->add_option("--format", opt.format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", opt.jobs, "parallelism degree");
        sub->add_option("--tolerance", opt.tolerance, "numeric tolerance override");
    };

    CLI::App* fuse = app.add_subcommand("fuse", "fusion product of two classes");
    add_common(fuse);
    fuse->add_option("--lambda", opt.lambda, "partition, e.g. 3,1 (0 for empty)")->required();
    fuse->add_option("--mu", opt.mu, "partition")->required();
    fuse->add_option("--method", opt.method, "bethe | kac-walton | verlinde | plactic | all")
        ->check(CLI::IsMember({"bethe", "kac-walton", "verlinde", "plactic", "all"}));

    CLI::App* verify = app.add_subcommand("verify", "run the full cross-validation suite");
    add_common(verify);

    CLI::App* smatrix = app.add_subcommand("smatrix", "print or export the modular S-matrix");
    add_common(smatrix);

    CLI::App* paths = app.add_subcommand("paths", "cylinder path count vs hook-content sum");
    add_common(paths);
    paths->add_option("--mu", opt.mu, "bottom boundary: weight [..] or partition")->required();
    paths->add_option("--nu", opt.nu, "top boundary: weight [..] or partition")->required();
    paths->add_option("--d", opt.d, "number of seam crossings")->required();
    paths->add_flag("--dump", opt.dump, "emit the matching configurations as JSON");

    CLI::App* table = app.add_subcommand("table", "print all fusion matrices");
    add_common(table);
    table->add_option("--method", opt.method, "bethe | kac-walton | verlinde | plactic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(fuse)) return cmd_fuse(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(smatrix)) return cmd_smatrix(opt);
        if (app.got_subcommand(paths)) return cmd_paths(opt);
        if (app.got_subcommand(table)) return cmd_table(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagree;
    }
    return kExitUsage;
}
