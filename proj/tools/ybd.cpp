// ybd: exact-arithmetic toolkit for multiparameter quantum matrix
// symmetries, their first-order deformations, and classical limits.
//
// Exit codes: 0 = success / all checks pass, 1 = a mathematical check
// failed, 2 = usage or input error.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ybd/classical.hpp"
#include "ybd/deformations.hpp"
#include "ybd/esoteric.hpp"
#include "ybd/op_io.hpp"
#include "ybd/params.hpp"
#include "ybd/relations.hpp"
#include "ybd/scalar_io.hpp"
#include "ybd/standard_p.hpp"

namespace {

using namespace ybd;

ParamSet load_params(const std::string& path) { return params_from_json(load_json_file(path)); }

DeformationSpec load_spec(const std::string& path) {
    return defspec_from_json(load_json_file(path));
}

ClassicalParams load_cparams(const std::string& path) {
    return cparams_from_json(load_json_file(path));
}

void emit(const Json& j, const std::string& out_path, bool to_stdout = true) {
    if (to_stdout) std::cout << dump_line(j);
    if (!out_path.empty()) save_json_file(out_path, j);
}

int finish_check(const std::string& name, const CheckResult& r, const std::string& out_path) {
    std::cout << name << (r.pass ? ": PASS" : ": FAIL") << "\n";
    if (!out_path.empty()) save_json_file(out_path, r.report);
    return r.pass ? 0 : 1;
}

Cyc parse_scalar(const std::string& text, const std::string& what) {
    try {
        return cyc_from_text(text);
    } catch (const YbdError& e) {
        throw ParamError(what + ": " + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for multiparameter quantum matrix symmetries: builds the "
                 "standard two-leg operator, verifies the quadratic and braid identities, "
                 "enumerates first-order deformations, and extracts classical limits"};
    app.require_subcommand(1);
    static std::function<int()> run;

    // ---- params ----------------------------------------------------------
    auto* g_params = app.add_subcommand("params", "inspect, validate, or sample parameter sets");
    g_params->require_subcommand(1);
    {
        static std::string path;
        auto* c = g_params->add_subcommand("validate", "validate a parameter file (n, a, q values)");
        c->add_option("--params", path, "parameter JSON file")->required();
        c->callback([] {
            run = [] {
                load_params(path).validate();
                std::cout << "params: OK\n";
                return 0;
            };
        });
    }
    {
        static std::string path, out;
        auto* c = g_params->add_subcommand("show", "print a parameter file in canonical form");
        c->add_option("--params", path, "parameter JSON file")->required();
        c->add_option("--out", out, "write canonical JSON here as well");
        c->callback([] {
            run = [] {
                emit(params_to_json(load_params(path)), out);
                return 0;
            };
        });
    }
    {
        static int n = 3;
        static unsigned long seed = 0;
        static std::string out;
        auto* c = g_params->add_subcommand("sample", "sample a reproducible random parameter set");
        c->add_option("--n", n, "dimension (2..8)")->required();
        c->add_option("--seed", seed, "random seed (sampling is a pure function of it)")
            ->required();
        c->add_option("--out", out, "write the sampled parameters here as well");
        c->callback([] {
            run = [] {
                emit(params_to_json(sample_params(n, seed)), out);
                return 0;
            };
        });
    }

    // ---- build -----------------------------------------------------------
    auto* g_build = app.add_subcommand("build", "construct operators");
    g_build->require_subcommand(1);
    {
        static std::string path, out;
        auto* c = g_build->add_subcommand(
            "standard", "build the standard two-leg operator from parameters");
        c->add_option("--params", path, "parameter JSON file")->required();
        c->add_option("--out", out, "write the operator JSON here as well");
        c->callback([] {
            run = [] {
                emit(op_to_json(build_standard_P(load_params(path))), out);
                return 0;
            };
        });
    }
    {
        static int n = 2;
        static std::string qtext = "2", out, spec_path;
        static std::vector<std::string> mutext;
        auto* c = g_build->add_subcommand(
            "esoteric", "build the mixed-sector invertible solution on dimension 2n-1");
        c->add_option("--n", n, "half-parameter n (space dimension is 2n-1)");
        c->add_option("--q", qtext, "scalar q (a = q^2)");
        c->add_option("--mu", mutext, "n-1 coefficients mu_1..mu_{n-1}")->delimiter(',');
        c->add_option("--spec", spec_path, "JSON spec {n,q,mu} (overrides the flags)");
        c->add_option("--out", out, "write the operator JSON here as well");
        c->callback([] {
            run = [] {
                EsotericSpec s;
                if (!spec_path.empty()) {
                    s = eso_spec_from_json(load_json_file(spec_path));
                } else {
                    s.n = n;
                    s.q = parse_scalar(qtext, "--q");
                    s.mu.clear();
                    for (const auto& t : mutext) s.mu.push_back(parse_scalar(t, "--mu"));
                }
                emit(op_to_json(build_esoteric_R(s)), out);
                return 0;
            };
        });
    }

    // ---- check -----------------------------------------------------------
    auto* g_check = app.add_subcommand("check", "verify identities exactly");
    g_check->require_subcommand(1);
    {
        static std::string params_path, op_path, atext, out;
        auto* c = g_check->add_subcommand(
            "hecke", "check the quadratic identity (P - 1)(P + a) = 0");
        c->add_option("--params", params_path, "parameter JSON file (builds the standard operator)");
        c->add_option("--op", op_path, "operator JSON file (requires --a)");
        c->add_option("--a", atext, "eigenvalue scalar a for --op");
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                PairOp<Cyc> P;
                Cyc a;
                if (!op_path.empty()) {
                    if (atext.empty()) throw ParamError("check hecke --op requires --a");
                    P = op_from_json<Pr>(load_json_file(op_path));
                    a = parse_scalar(atext, "--a");
                } else if (!params_path.empty()) {
                    ParamSet p = load_params(params_path);
                    P = build_standard_P(p);
                    a = p.a;
                } else {
                    throw ParamError("check hecke needs --params or --op");
                }
                return finish_check("hecke", check_hecke(P, a), out);
            };
        });
    }
    {
        static std::string params_path, op_path, form = "braid", out;
        auto* c = g_check->add_subcommand(
            "braid", "check P12 P23 P12 = P23 P12 P23 (or R12 R13 R23 = R23 R13 R12)");
        c->add_option("--params", params_path, "parameter JSON file (builds the standard operator)");
        c->add_option("--op", op_path, "operator JSON file, checked as given");
        c->add_option("--form", form, "braid (adjacent-leg form) or qybe (three-leg R form)")
            ->check(CLI::IsMember({"braid", "qybe"}));
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                PairOp<Cyc> A;
                if (!op_path.empty()) {
                    A = op_from_json<Pr>(load_json_file(op_path));
                } else if (!params_path.empty()) {
                    A = build_standard_P(load_params(params_path));
                    if (form == "qybe") A = convert_p_r(A);
                } else {
                    throw ParamError("check braid needs --params or --op");
                }
                return finish_check(form, check_braid(A, form), out);
            };
        });
    }
    {
        static std::string params_path, op_path, atext, out;
        auto* c = g_check->add_subcommand(
            "theorem2",
            "check that the braid defect is annihilated by both (P12 - 1) and (P12 + a)");
        c->add_option("--params", params_path, "parameter JSON file (builds the standard operator)");
        c->add_option("--op", op_path, "operator JSON file (requires --a)");
        c->add_option("--a", atext, "eigenvalue scalar a for --op");
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                PairOp<Cyc> P;
                Cyc a;
                if (!op_path.empty()) {
                    if (atext.empty()) throw ParamError("check theorem2 --op requires --a");
                    P = op_from_json<Pr>(load_json_file(op_path));
                    a = parse_scalar(atext, "--a");
                } else if (!params_path.empty()) {
                    ParamSet p = load_params(params_path);
                    P = build_standard_P(p);
                    a = p.a;
                } else {
                    throw ParamError("check theorem2 needs --params or --op");
                }
                return finish_check("theorem2", check_theorem2(P, a), out);
            };
        });
    }
    {
        static std::string params_path, out;
        auto* c = g_check->add_subcommand(
            "sl", "check the determinant normalization (prod_i q^{ij})^2 a^{2j} = a^{n+1}");
        c->add_option("--params", params_path, "parameter JSON file")->required();
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] { return finish_check("sl", check_sl_condition(load_params(params_path)), out); };
        });
    }
    {
        static std::string op_path, cp_path, spec_path, out;
        auto* c = g_check->add_subcommand(
            "cybe", "check [r12,r13] + [r12,r23] + [r13,r23] = 0 for a classical r operator");
        c->add_option("--op", op_path, "r operator JSON file");
        c->add_option("--classical", cp_path, "classical parameter file (extracts r first)");
        c->add_option("--spec", spec_path, "optional deformation spec used during extraction");
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                PairOp<Cyc> r;
                if (!op_path.empty()) {
                    r = op_from_json<Pr>(load_json_file(op_path));
                } else if (!cp_path.empty()) {
                    std::optional<DeformationSpec> s;
                    if (!spec_path.empty()) s = load_spec(spec_path);
                    r = extract_classical_r(load_cparams(cp_path), s);
                } else {
                    throw ParamError("check cybe needs --op or --classical");
                }
                return finish_check("cybe", check_cybe(r), out);
            };
        });
    }
    {
        static std::string cp_path, spec_path, out;
        auto* c = g_check->add_subcommand(
            "bd", "check the linearized slope constraints of a principal deformation");
        c->add_option("--classical", cp_path, "classical parameter file")->required();
        c->add_option("--spec", spec_path, "deformation spec JSON file")->required();
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                return finish_check("bd", check_bd(load_cparams(cp_path), load_spec(spec_path)),
                                    out);
            };
        });
    }

    // ---- relations -------------------------------------------------------
    {
        static std::string params_path, op_path, atext, sector = "all", out;
        auto* c = app.add_subcommand(
            "relations", "extract the quadratic relations of the x / t / mixed sectors");
        c->add_option("--params", params_path, "parameter JSON file (builds the standard operator)");
        c->add_option("--op", op_path, "two-leg operator JSON file (requires --a)");
        c->add_option("--a", atext, "eigenvalue scalar a for --op");
        c->add_option("--sector", sector, "plane, antiplane, cross, or all")
            ->check(CLI::IsMember({"plane", "antiplane", "cross", "all"}));
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                PairOp<Cyc> P;
                Cyc a;
                if (!op_path.empty()) {
                    if (atext.empty()) throw ParamError("relations --op requires --a");
                    P = op_from_json<Pr>(load_json_file(op_path));
                    a = parse_scalar(atext, "--a");
                } else if (!params_path.empty()) {
                    ParamSet p = load_params(params_path);
                    P = build_standard_P(p);
                    a = p.a;
                } else {
                    throw ParamError("relations needs --params or --op");
                }
                Json rep = Json::object();
                auto render = [&](const char* name, const std::vector<Relation>& rels) {
                    Json arr = Json::array();
                    for (const auto& r : rels) {
                        std::string line = relation_text(r);
                        std::cout << line << "\n";
                        arr.push_back(line);
                    }
                    rep[name] = arr;
                };
                if (sector == "plane" || sector == "all") render("plane", plane_relations(P));
                if (sector == "antiplane" || sector == "all")
                    render("antiplane", antiplane_relations(P, a));
                if (sector == "cross" || sector == "all") render("cross", cross_relations(P, a));
                if (sector == "all") {
                    auto [dx, dt] = degree3_dims(P, a);
                    rep["degree3_dims"] = Json::array({dx, dt});
                }
                if (!out.empty()) save_json_file(out, rep);
                return 0;
            };
        });
    }

    // ---- deform ----------------------------------------------------------
    auto* g_deform = app.add_subcommand("deform", "first-order deformation directions");
    g_deform->require_subcommand(1);
    {
        static std::string params_path, spec_path, out;
        auto* c = g_deform->add_subcommand(
            "build", "build the two-entry elementary deformation direction P1");
        c->add_option("--params", params_path, "parameter JSON file")->required();
        c->add_option("--spec", spec_path, "deformation spec JSON file")->required();
        c->add_option("--out", out, "write the operator JSON here as well");
        c->callback([] {
            run = [] {
                emit(op_to_json(build_P1(load_params(params_path), load_spec(spec_path))), out);
                return 0;
            };
        });
    }
    {
        static std::string params_path, spec_path, out;
        auto* c = g_deform->add_subcommand(
            "check", "check the multiplicative parameter constraints of a deformation spec");
        c->add_option("--params", params_path, "parameter JSON file")->required();
        c->add_option("--spec", spec_path, "deformation spec JSON file")->required();
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                return finish_check(
                    "constraints", check_constraints(load_params(params_path), load_spec(spec_path)),
                    out);
            };
        });
    }
    {
        static int n = 4, pcase = 1, i = 2, j = 3, k = 0;
        static bool principal = false, exceptional = false;
        static std::string side = "upper", out;
        auto* c = g_deform->add_subcommand(
            "solve", "solve the parameter constraints into a monomial family");
        c->add_option("--n", n, "dimension")->required();
        c->add_flag("--principal", principal, "principal series (generic a)");
        c->add_flag("--exceptional", exceptional, "exceptional series (a^3 = 1)");
        c->add_option("--case", pcase, "principal case: 1 (k=i-1, l=j+1) or 2 (k=i+1, l=j-1)");
        c->add_option("--i", i, "pair index i")->required();
        c->add_option("--j", j, "principal pair index j");
        c->add_option("--k", k, "exceptional third index (i-1 or i+2)");
        c->add_option("--side", side, "exceptional side: upper or lower")
            ->check(CLI::IsMember({"upper", "lower"}));
        c->add_option("--out", out, "write the family JSON here as well");
        c->callback([] {
            run = [] {
                if (principal == exceptional)
                    throw ParamError("deform solve needs exactly one of --principal, --exceptional");
                DeformationSpec s;
                if (principal) {
                    s.variant = DeformationSpec::Variant::Principal;
                    s.pcase = pcase;
                    s.i = i;
                    s.j = j;
                } else {
                    s.variant = DeformationSpec::Variant::Exceptional;
                    s.side = side;
                    s.i = i;
                    s.k = k;
                }
                emit(family_to_json(solve_constraints(n, s)), out);
                return 0;
            };
        });
    }
    {
        static std::string params_path, out;
        auto* c = g_deform->add_subcommand(
            "first-order", "solve both linearized identities for all deformation directions");
        c->add_option("--params", params_path, "parameter JSON file")->required();
        c->add_option("--out", out, "write the structured report here");
        static bool want_reps = false;
        c->add_flag("--reps", want_reps, "include essential representatives in the report");
        c->callback([] {
            run = [] {
                ParamSet p = load_params(params_path);
                FirstOrderBasis fo = solve_first_order(p);
                std::cout << "essential dimension: " << fo.essential_dim << "\n";
                Json rep{{"raw_dim", fo.raw_dim},
                         {"dim", fo.dim},
                         {"trivial_dim", fo.trivial_dim},
                         {"essential_dim", fo.essential_dim},
                         {"note2", fo.note2}};
                if (want_reps) {
                    Json arr = Json::array();
                    for (const auto& v : essential_representatives(p, fo)) arr.push_back(op_to_json(v));
                    rep["essential_representatives"] = arr;
                }
                if (!out.empty()) save_json_file(out, rep);
                return 0;
            };
        });
    }
    {
        static std::string params_path, op_path, out;
        auto* c = g_deform->add_subcommand(
            "gauge-fix",
            "reduce a deformation direction to the representative supported on >= 3 indices");
        c->add_option("--params", params_path, "parameter JSON file")->required();
        c->add_option("--op", op_path, "deformation direction operator JSON")->required();
        c->add_option("--out", out, "write the operator JSON here as well");
        c->callback([] {
            run = [] {
                PairOp<Cyc> P1 = op_from_json<Pr>(load_json_file(op_path));
                emit(op_to_json(gauge_fix(load_params(params_path), P1)), out);
                return 0;
            };
        });
    }
    {
        static std::string params_path, op_path, out;
        auto* c = g_deform->add_subcommand(
            "obstruction", "solve for a second-order correction P2 extending a direction");
        c->add_option("--params", params_path, "parameter JSON file")->required();
        c->add_option("--op", op_path, "deformation direction operator JSON")->required();
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                PairOp<Cyc> P1 = op_from_json<Pr>(load_json_file(op_path));
                ObstructionResult r = second_order_obstruction(load_params(params_path), P1);
                std::cout << "obstruction: " << (r.solvable ? "SOLVABLE" : "UNSOLVABLE") << "\n";
                if (!out.empty()) save_json_file(out, r.report);
                return r.solvable ? 0 : 1;
            };
        });
    }

    // ---- classical -------------------------------------------------------
    auto* g_classical = app.add_subcommand("classical", "classical-limit operators");
    g_classical->require_subcommand(1);
    {
        static std::string cp_path, out;
        auto* c = g_classical->add_subcommand(
            "r0", "closed-form classical operator for given slopes");
        c->add_option("--classical", cp_path, "classical parameter file")->required();
        c->add_option("--out", out, "write the operator JSON here as well");
        c->callback([] {
            run = [] {
                emit(op_to_json(build_r0(load_cparams(cp_path))), out);
                return 0;
            };
        });
    }
    {
        static int n = 4;
        static std::string spec_path, out;
        auto* c = g_classical->add_subcommand(
            "delta-r", "first-order classical change produced by a principal deformation");
        c->add_option("--n", n, "dimension")->required();
        c->add_option("--spec", spec_path, "deformation spec JSON file")->required();
        c->add_option("--out", out, "write the operator JSON here as well");
        c->callback([] {
            run = [] {
                emit(op_to_json(build_delta_r(n, load_spec(spec_path))), out);
                return 0;
            };
        });
    }
    {
        static std::string cp_path, spec_path, out;
        auto* c = g_classical->add_subcommand(
            "extract", "extract r from the curve a = 1 + h, q = 1 + h p (order-h coefficient)");
        c->add_option("--classical", cp_path, "classical parameter file")->required();
        c->add_option("--spec", spec_path, "optional principal deformation spec JSON");
        c->add_option("--out", out, "write the operator JSON here as well");
        c->callback([] {
            run = [] {
                std::optional<DeformationSpec> s;
                if (!spec_path.empty()) s = load_spec(spec_path);
                emit(op_to_json(extract_classical_r(load_cparams(cp_path), s)), out);
                return 0;
            };
        });
    }

    // ---- esoteric --------------------------------------------------------
    auto* g_eso = app.add_subcommand("esoteric", "mixed-sector solutions on dimension 2n-1");
    g_eso->require_subcommand(1);
    {
        static int n = 2;
        static std::string qtext = "2", out, spec_path;
        static std::vector<std::string> mutext;
        auto* c = g_eso->add_subcommand(
            "check", "verify the braid and quadratic identities with a = q^2");
        c->add_option("--n", n, "half-parameter n (space dimension is 2n-1)");
        c->add_option("--q", qtext, "scalar q");
        c->add_option("--mu", mutext, "n-1 coefficients mu_1..mu_{n-1}")->delimiter(',');
        c->add_option("--spec", spec_path, "JSON spec {n,q,mu} (overrides the flags)");
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                EsotericSpec s;
                if (!spec_path.empty()) {
                    s = eso_spec_from_json(load_json_file(spec_path));
                } else {
                    s.n = n;
                    s.q = parse_scalar(qtext, "--q");
                    s.mu.clear();
                    for (const auto& t : mutext) s.mu.push_back(parse_scalar(t, "--mu"));
                }
                return finish_check("esoteric", check_esoteric(s), out);
            };
        });
    }
    {
        static int n = 2;
        static std::string qtext = "2", out, spec_path;
        static std::vector<std::string> mutext;
        auto* c = g_eso->add_subcommand(
            "relations", "verify the closed-form sector relations inside the relation ideal");
        c->add_option("--n", n, "half-parameter n (space dimension is 2n-1)");
        c->add_option("--q", qtext, "scalar q");
        c->add_option("--mu", mutext, "n-1 coefficients mu_1..mu_{n-1}")->delimiter(',');
        c->add_option("--spec", spec_path, "JSON spec {n,q,mu} (overrides the flags)");
        c->add_option("--out", out, "write the structured report here");
        c->callback([] {
            run = [] {
                EsotericSpec s;
                if (!spec_path.empty()) {
                    s = eso_spec_from_json(load_json_file(spec_path));
                } else {
                    s.n = n;
                    s.q = parse_scalar(qtext, "--q");
                    s.mu.clear();
                    for (const auto& t : mutext) s.mu.push_back(parse_scalar(t, "--mu"));
                }
                CheckResult r = esoteric_relations(s);
                for (const auto& item : r.report["relations"])
                    std::cout << item["relation"].get<std::string>() << ": "
                              << (item["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
                if (!out.empty()) save_json_file(out, r.report);
                return r.pass ? 0 : 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage message
        return 2;
    }

    if (!run) {
        std::cerr << "error: no subcommand selected\n";
        return 2;
    }
    try {
        return run();
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const ConstraintError& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return 1;
    } catch (const GaugeError& e) {
        std::cerr << "gauge error: " << e.what() << "\n";
        return 1;
    } catch (const YbdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
