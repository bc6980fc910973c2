// supcone: exact computations in the sup-completion of C(K) / C^inf(K)
// over the dyadic Stone space model.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "supcone/axioms.hpp"
#include "supcone/errors.hpp"
#include "supcone/iso.hpp"
#include "supcone/supcomp.hpp"
#include "supcone/text.hpp"

namespace {

using namespace supcone;

std::string read_arg(const std::string& s) {
    if (s != "-") return s;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

ModelX to_model(const std::string& name) {
    if (name == "bounded") return ModelX::Bounded;
    if (name == "full") return ModelX::Full;
    throw CLI::ValidationError("--model", "expected 'bounded' or 'full'");
}

SupElement adopt(const std::string& text, ModelX model) {
    return SupElement::adopt(parse_treefn(read_arg(text)), model);
}

struct Options {
    std::string model = "full";
    bool witness = false;
    std::uint64_t seed = 1;
    long trials = 100;
    long depth = 6;
    std::string check;
    long trial = -1;
    std::string bound;
};

void print_report_line(const std::string& key, const std::string& value) {
    std::cout << key << ": " << value << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sup-completion calculator over the dyadic Stone model"};
    app.require_subcommand(1);
    Options opt;

    std::vector<std::string> args;
    auto add_fn_args = [&](CLI::App* cmd, int n, const char* name) {
        args.clear();
        cmd->add_option(name, args)->expected(n >= 0 ? n : -1)->required();
    };

    auto* eval = app.add_subcommand("eval", "evaluate a function at a cell or branch point");
    eval->add_option("args", args)->expected(2)->required();

    auto* add = app.add_subcommand("add", "sum of two functions");
    auto* meet = app.add_subcommand("meet", "pointwise minimum");
    auto* join = app.add_subcommand("join", "pointwise maximum");
    auto* product = app.add_subcommand("product", "positive-cone product");
    auto* riesz = app.add_subcommand("riesz", "decompose x <= u + v as y + z");
    auto* sup = app.add_subcommand("sup", "supremum of a finite family");
    auto* inf = app.add_subcommand("inf", "infimum of a finite family");
    auto* scalar = app.add_subcommand("scalar", "nonnegative scalar multiple");
    auto* member = app.add_subcommand("member", "cone membership with witness");
    auto* decompose = app.add_subcommand("decompose", "finite/infinite part split");
    auto* truncate = app.add_subcommand("truncate", "truncation certificate u = sup_n (ne /\\ u)");
    auto* inftest = app.add_subcommand("inftest", "lambda-sweep infinity test");
    auto* project = app.add_subcommand("project", "band projection onto a clopen set");
    auto* support = app.add_subcommand("support", "closure of the support");
    auto* transport = app.add_subcommand("transport", "re-encode between flat and tree forms");
    auto* axioms = app.add_subcommand("axioms", "run the seeded axiom suite");
    auto* parse_check = app.add_subcommand("parse-check", "parse and reprint canonically");

    for (CLI::App* cmd : {add, meet, join, product})
        cmd->add_option("args", args)->expected(2)->required();
    riesz->add_option("args", args)->expected(3)->required();
    for (CLI::App* cmd : {sup, inf})
        cmd->add_option("args", args)->expected(-1)->required();
    scalar->add_option("args", args)->expected(2)->required();
    for (CLI::App* cmd : {member, decompose, truncate, inftest, support, parse_check})
        cmd->add_option("args", args)->expected(1)->required();
    project->add_option("args", args)->expected(2)->required();
    transport->add_option("args", args)->expected(1)->required();

    for (CLI::App* cmd :
         {eval, add, meet, join, product, riesz, sup, inf, scalar, member, decompose,
          truncate, inftest, project, support, transport, axioms, parse_check}) {
        cmd->add_option("--model", opt.model, "ground lattice: bounded (C(K)) or full (C^inf(K))");
        cmd->add_flag("--witness", opt.witness, "print certificates");
        cmd->add_option("--seed", opt.seed, "suite seed");
        cmd->add_option("--trials", opt.trials, "suite trials per check");
        cmd->add_option("--depth", opt.depth, "depth budget");
    }
    axioms->add_option("--check", opt.check, "run a single named check");
    axioms->add_option("--trial", opt.trial, "replay a single trial index");
    inf->add_option("--bound", opt.bound, "explicit lower bound element");

    CLI11_PARSE(app, argc, argv);

    try {
        ModelX model = to_model(opt.model);

        if (*eval) {
            TreeFn u = parse_treefn(read_arg(args[0]));
            std::cout << eval_at(u, parse_point(read_arg(args[1]))).str() << "\n";
        } else if (*add || *meet || *join) {
            TreeFn a = parse_treefn(read_arg(args[0]));
            TreeFn b = parse_treefn(read_arg(args[1]));
            TreeFn r = *add ? fn_add(a, b) : *meet ? fn_meet(a, b) : fn_join(a, b);
            std::cout << print_fn(r) << "\n";
        } else if (*product) {
            SupElement r = pos_product(adopt(args[0], model), adopt(args[1], model));
            std::cout << print_fn(r.fn()) << "\n";
        } else if (*riesz) {
            auto [y, z] = riesz_decompose(adopt(args[0], model), adopt(args[1], model),
                                          adopt(args[2], model));
            print_report_line("y", print_fn(y.fn()));
            print_report_line("z", print_fn(z.fn()));
            if (opt.witness) {
                print_report_line("y_witness", print_fn(y.witness()));
                print_report_line("z_witness", print_fn(z.witness()));
            }
        } else if (*sup || *inf) {
            std::vector<SupElement> elems;
            for (const auto& a : args) elems.push_back(adopt(a, model));
            SupElement r = *sup ? cone_sup(elems)
                                : (opt.bound.empty()
                                       ? cone_inf(elems)
                                       : cone_inf(elems, adopt(opt.bound, model)));
            std::cout << print_fn(r.fn()) << "\n";
            if (opt.witness) print_report_line("witness", print_fn(r.witness()));
        } else if (*scalar) {
            Rational lambda = parse_rational(read_arg(args[0]));
            std::cout << print_fn(fn_scalar(lambda, parse_treefn(read_arg(args[1])))) << "\n";
        } else if (*member) {
            TreeFn u = parse_treefn(read_arg(args[0]));
            MemberCheck m = supcone::member(u, model);
            if (!m.witness) throw NotInCone(m.certificate);
            print_report_line("member", "true");
            if (opt.witness) print_report_line("witness", print_fn(*m.witness));
        } else if (*decompose) {
            Decomposition d = fin_inf_decompose(adopt(args[0], model));
            print_report_line("finite_part", print_fn(d.finite_part));
            print_report_line("infinite_part", print_fn(d.infinite_part));
            print_report_line("carrier", d.carrier.str());
        } else if (*truncate) {
            TruncationCert cert = truncation_check(adopt(args[0], model));
            for (const auto& datum : cert.data) {
                if (datum.diverges)
                    print_report_line("datum", point_str(datum.where) + " diverges");
                else
                    print_report_line("datum", point_str(datum.where) + " value " +
                                                   datum.value.str() + " stabilizes_at " +
                                                   std::to_string(datum.stabilizes_at));
            }
            print_report_line("checked_height", std::to_string(cert.checked_height));
            print_report_line("verified", cert.verified ? "true" : "false");
        } else if (*inftest) {
            InfinityTest t = infinity_test(adopt(args[0], model));
            print_report_line("v", print_fn(t.v));
            print_report_line("in_Xu", t.in_Xu ? "true" : "false");
            for (const auto& [lambda, v_lambda] : t.lambda_trace)
                print_report_line("lambda " + rational_str(lambda), print_fn(v_lambda));
        } else if (*project) {
            ClopenSet u_set = parse_clopen(read_arg(args[0]));
            std::cout << print_fn(band_project(u_set, parse_treefn(read_arg(args[1])))) << "\n";
        } else if (*support) {
            std::cout << support_closure(parse_treefn(read_arg(args[0]))).str() << "\n";
        } else if (*transport) {
            auto parsed = parse_any_fn(read_arg(args[0]));
            if (const FlatFn* flat = std::get_if<FlatFn>(&parsed))
                std::cout << print_fn(j_transport(*flat)) << "\n";
            else
                std::cout << print_fn(j_inverse(std::get<TreeFn>(parsed),
                                                static_cast<std::size_t>(opt.depth)))
                          << "\n";
        } else if (*axioms) {
            GenConfig cfg;
            cfg.seed = opt.seed;
            cfg.model = model;
            std::optional<long> only_trial;
            if (opt.trial >= 0) only_trial = opt.trial;
            SuiteReport report =
                run_suite(cfg, opt.trials, FaultInjection::None, opt.check, only_trial);
            std::cout << report.str();
            return report.all_passed() ? 0 : 1;
        } else if (*parse_check) {
            auto parsed = parse_any_fn(read_arg(args[0]));
            if (const FlatFn* flat = std::get_if<FlatFn>(&parsed))
                std::cout << print_fn(*flat) << "\n";
            else
                std::cout << print_fn(std::get<TreeFn>(parsed)) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
