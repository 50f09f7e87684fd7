/*
   Copyright 2026 The zktheta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// zktheta command line: parse code files, run the computations, verify the
// identities, emit deterministic JSON (machine interface) or text (courtesy).
//
// Exit codes: 0 success/verified, 1 verification failed, 2 input error,
// 3 resource cap exceeded.

#include <chrono>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zktheta/acceptance.hpp"
#include "zktheta/code_io.hpp"
#include "zktheta/cyclolattice.hpp"
#include "zktheta/json_io.hpp"
#include "zktheta/macwilliams.hpp"
#include "zktheta/theta.hpp"

namespace {

using namespace zktheta;

struct Options {
    std::string in_path;
    std::string out_path;
    std::string format = "json";
    long trunc = 400;
    long trunc60 = 60;  // default for the structural checks
    unsigned genus = 1;
    unsigned k = 2;
    unsigned j = 0;
    unsigned p = 3;
    unsigned blocks = 1;
    bool allow_non_self_orthogonal = false;
    std::vector<double> z_flat;
    std::size_t span_cap = kDefaultSpanCap;
    std::size_t tuple_cap = kDefaultTupleCap;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

std::vector<std::complex<double>> parse_points(const Options& opt) {
    if (opt.z_flat.empty()) return sample_points();
    if (opt.z_flat.size() % 2 != 0)
        throw input_error("--z expects pairs: --z <re> <im>");
    std::vector<std::complex<double>> pts;
    for (std::size_t i = 0; i < opt.z_flat.size(); i += 2)
        pts.emplace_back(opt.z_flat[i], opt.z_flat[i + 1]);
    return pts;
}

void write_output(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw input_error("cannot open output file: " + opt.out_path);
        out << payload;
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0).count();
}

int emit_report(const Options& opt, const std::string& identity, Json params,
                bool pass, Json evidence, double elapsed_ms) {
    Json rep = report_json(identity, std::move(params), pass ? "pass" : "fail",
                           std::move(evidence), elapsed_ms);
    if (opt.format == "text") {
        std::ostringstream t;
        t << (pass ? "PASS " : "FAIL ") << identity << " " << rep["evidence"].dump();
        write_output(opt, t.str());
    } else {
        write_output(opt, rep.dump(2));
    }
    return pass ? 0 : 1;
}

Code load_code(const Options& opt) {
    if (opt.in_path.empty()) throw input_error("--in <code file> is required");
    return parse_code_file(opt.in_path, opt.span_cap);
}

void add_common(CLI::App* cmd, Options& opt, bool with_in = true) {
    if (with_in) cmd->add_option("--in", opt.in_path, "input code file");
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
    cmd->add_option("--format", opt.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--span-cap", opt.span_cap, "codeword span cap (default 10^7)");
    cmd->add_option("--tuple-cap", opt.tuple_cap, "genus tuple cap (default 10^6)");
    cmd->add_option("--node-budget", opt.node_budget,
                    "lattice enumeration node budget (default 10^8)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes over Z_k, MacWilliams identities and theta series"};
    app.require_subcommand(1);
    Options opt;

    auto* cmd_info = app.add_subcommand("info", "classify a code");
    add_common(cmd_info, opt);

    auto* cmd_dual = app.add_subcommand("dual", "dual code by exhaustive scan");
    add_common(cmd_dual, opt);

    auto* cmd_cwe = app.add_subcommand("cwe", "complete weight enumerator");
    add_common(cmd_cwe, opt);

    auto* cmd_swe = app.add_subcommand("swe", "symmetrized weight enumerator");
    add_common(cmd_swe, opt);

    auto* cmd_gcwe = app.add_subcommand("genus-cwe", "genus-g weight enumerator");
    add_common(cmd_gcwe, opt);
    cmd_gcwe->add_option("--g", opt.genus, "genus (>= 1)")->required();

    auto* cmd_mw = app.add_subcommand("macwilliams",
                                      "MacWilliams transform of the genus-g enumerator");
    add_common(cmd_mw, opt);
    cmd_mw->add_option("--g", opt.genus, "genus (>= 1)");

    auto* cmd_theta = app.add_subcommand("theta", "Construction-A theta series");
    add_common(cmd_theta, opt);
    cmd_theta->add_option("--trunc", opt.trunc, "series truncation")->required();

    auto* cmd_aseries = app.add_subcommand("aseries", "progression theta series A_j");
    add_common(cmd_aseries, opt, false);
    cmd_aseries->add_option("--k", opt.k, "modulus")->required();
    cmd_aseries->add_option("--j", opt.j, "residue")->required();
    cmd_aseries->add_option("--trunc", opt.trunc, "series truncation")->required();

    auto* cmd_construct = app.add_subcommand("construct", "code constructions");
    auto* cmd_type2 = cmd_construct->add_subcommand(
        "type2", "type II code of length 8m over even Z_k");
    add_common(cmd_type2, opt, false);
    cmd_type2->add_option("--k", opt.k, "even modulus")->required();
    cmd_type2->add_option("--blocks", opt.blocks, "block count m")->required();
    cmd_construct->require_subcommand(1);

    auto* cmd_cyclo = app.add_subcommand("cyclo", "prime cyclotomic lattices");
    auto* cmd_cyclo_theta = cmd_cyclo->add_subcommand(
        "theta", "theta_j battery, or the lattice theta of a code with --in");
    add_common(cmd_cyclo_theta, opt);
    cmd_cyclo_theta->add_option("--p", opt.p, "odd prime")->required();
    cmd_cyclo_theta->add_option("--trunc", opt.trunc, "series truncation")->required();
    cmd_cyclo->require_subcommand(1);

    auto* cmd_verify = app.add_subcommand("verify", "verify one identity");
    cmd_verify->require_subcommand(1);
    auto* v_thm1 = cmd_verify->add_subcommand("thm1", "theta == composed A-series");
    auto* v_thm2 = cmd_verify->add_subcommand("thm2", "MacWilliams via theta series");
    auto* v_thm3 = cmd_verify->add_subcommand("thm3", "genus-g MacWilliams, exact");
    auto* v_thm4 = cmd_verify->add_subcommand("thm4", "cyclotomic lattice theta");
    auto* v_lemma1 = cmd_verify->add_subcommand("lemma1", "A-series S-transform");
    auto* v_prop1 = cmd_verify->add_subcommand("prop1", "code--lattice dictionary");
    auto* v_prop3 = cmd_verify->add_subcommand("prop3", "theta S functional equation");
    auto* v_tinv = cmd_verify->add_subcommand("tinv", "T-invariance of even theta");
    for (auto* v : {v_thm1, v_thm2, v_prop1, v_prop3, v_tinv}) add_common(v, opt);
    add_common(v_thm3, opt);
    add_common(v_thm4, opt);
    v_thm1->add_option("--trunc", opt.trunc, "series truncation (default 400)");
    v_thm2->add_option("--trunc", opt.trunc, "series truncation (default 400)");
    v_thm3->add_option("--g", opt.genus, "genus (default 1)");
    v_thm4->add_option("--p", opt.p, "odd prime")->required();
    v_thm4->add_option("--trunc", opt.trunc, "series truncation");
    v_thm4->add_flag("--allow-non-self-orthogonal", opt.allow_non_self_orthogonal,
                     "check the identity even when C is not self-orthogonal");
    add_common(v_lemma1, opt, false);
    v_lemma1->add_option("--k", opt.k, "modulus")->required();
    auto* lemma_j = v_lemma1->add_option("--j", opt.j, "residue (default: all)");
    v_lemma1->add_option("--trunc", opt.trunc, "series truncation");
    v_lemma1->add_option("--z", opt.z_flat, "sample point(s), pairs of re im");
    v_prop3->add_option("--trunc", opt.trunc, "series truncation");
    v_prop3->add_option("--z", opt.z_flat, "sample point(s), pairs of re im");
    v_tinv->add_option("--trunc", opt.trunc60, "series truncation (default 60)");
    v_prop1->add_option("--trunc", opt.trunc60,
                        "even-lattice check truncation (default 60)");

    auto* cmd_suite = app.add_subcommand("suite", "run the full verification suite");
    add_common(cmd_suite, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();

    try {
        if (*cmd_info) {
            Code c = load_code(opt);
            Json j = to_json(classify(c));
            j["k"] = c.k;
            j["n"] = c.n;
            if (opt.format == "text") {
                std::ostringstream t;
                auto rep = classify(c);
                t << "k=" << c.k << " n=" << c.n << " |C|=" << to_decimal(rep.cardinality)
                  << " self_orthogonal=" << rep.self_orthogonal
                  << " self_dual=" << rep.self_dual << " doubly_even="
                  << (rep.doubly_even ? (*rep.doubly_even ? "true" : "false") : "n/a");
                write_output(opt, t.str());
            } else {
                write_output(opt, j.dump(2));
            }
            return 0;
        }
        if (*cmd_dual) {
            Code c = load_code(opt);
            write_output(opt, emit_code_text(dual_code(c, opt.span_cap), opt.span_cap));
            return 0;
        }
        if (*cmd_cwe) {
            write_output(opt, to_json(cwe(load_code(opt))).dump(2));
            return 0;
        }
        if (*cmd_swe) {
            write_output(opt, to_json(symmetrize(cwe(load_code(opt)))).dump(2));
            return 0;
        }
        if (*cmd_gcwe) {
            write_output(opt,
                         to_json(genus_cwe(load_code(opt), opt.genus, opt.tuple_cap))
                             .dump(2));
            return 0;
        }
        if (*cmd_mw) {
            Code c = load_code(opt);
            auto w = genus_cwe(c, opt.genus, opt.tuple_cap);
            write_output(opt, to_json(macwilliams_transform(w, c.cardinality)).dump(2));
            return 0;
        }
        if (*cmd_theta) {
            Code c = load_code(opt);
            write_output(
                opt,
                to_json(theta_construction_a(c, opt.trunc, opt.node_budget)).dump(2));
            return 0;
        }
        if (*cmd_aseries) {
            write_output(opt, to_json(a_series(opt.k, opt.j, opt.trunc)).dump(2));
            return 0;
        }
        if (*cmd_type2) {
            write_output(opt, emit_code_text(type2_code(opt.k, opt.blocks, opt.span_cap),
                                             opt.span_cap));
            return 0;
        }
        if (*cmd_cyclo_theta) {
            if (opt.in_path.empty()) {
                Json j;
                j["p"] = opt.p;
                j["trunc"] = opt.trunc;
                Json arr = Json::array();
                for (auto& s : theta_battery(opt.p, opt.trunc, opt.node_budget))
                    arr.push_back(to_json(s));
                j["series"] = std::move(arr);
                write_output(opt, j.dump(2));
            } else {
                Code c = load_code(opt);
                write_output(
                    opt, to_json(theta_cyclolattice(opt.p, c, opt.trunc, opt.node_budget))
                             .dump(2));
            }
            return 0;
        }

        if (*v_thm1) {
            Code c = load_code(opt);
            auto r = verify_theorem1(c, opt.trunc, opt.node_budget);
            Json ev;
            ev["equal"] = r.equal;
            ev["first_mismatch_exponent"] =
                r.first_mismatch < 0 ? Json(nullptr) : Json(r.first_mismatch);
            return emit_report(opt, "theorem1",
                               Json{{"in", opt.in_path}, {"trunc", opt.trunc}}, r.equal,
                               ev, ms_since(t0));
        }
        if (*v_thm2) {
            Code c = load_code(opt);
            auto r = verify_theorem2(c, opt.trunc, opt.span_cap, opt.node_budget);
            Json ev;
            ev["equal"] = r.equal;
            ev["first_mismatch_exponent"] =
                r.first_mismatch < 0 ? Json(nullptr) : Json(r.first_mismatch);
            ev["self_dual"] = r.self_dual;
            ev["corollary1_holds"] = r.corollary1_holds;
            ev["corollary2_equal"] = r.corollary2_equal;
            return emit_report(opt, "theorem2",
                               Json{{"in", opt.in_path}, {"trunc", opt.trunc}},
                               r.equal && r.corollary2_equal, ev, ms_since(t0));
        }
        if (*v_thm3) {
            Code c = load_code(opt);
            auto r = verify_macwilliams(c, opt.genus, opt.span_cap, opt.tuple_cap);
            Json ev;
            ev["equal"] = r.equal;
            if (r.sym_equal) ev["symmetrized_equal"] = *r.sym_equal;
            ev["cardinality"] = to_decimal(r.cardinality);
            ev["dual_cardinality"] = to_decimal(r.dual_cardinality);
            bool pass = r.equal && r.sym_equal.value_or(true);
            return emit_report(opt, "theorem3",
                               Json{{"in", opt.in_path}, {"g", opt.genus}}, pass, ev,
                               ms_since(t0));
        }
        if (*v_thm4) {
            Code c = load_code(opt);
            auto r = verify_theorem4(opt.p, c, opt.trunc,
                                     !opt.allow_non_self_orthogonal, opt.node_budget);
            Json ev;
            ev["equal"] = r.equal;
            ev["self_orthogonal"] = r.self_orthogonal;
            ev["first_mismatch_exponent"] =
                r.first_mismatch < 0 ? Json(nullptr) : Json(r.first_mismatch);
            return emit_report(
                opt, "theorem4",
                Json{{"in", opt.in_path}, {"p", opt.p}, {"trunc", opt.trunc}}, r.equal,
                ev, ms_since(t0));
        }
        if (*v_lemma1) {
            auto pts = parse_points(opt);
            std::vector<unsigned> js;
            if (lemma_j->count())
                js.push_back(opt.j);
            else
                for (unsigned j = 0; j < opt.k; ++j) js.push_back(j);
            bool all = true;
            Json ev = Json::array();
            for (unsigned j : js)
                for (auto z : pts) {
                    auto r = check_lemma1(opt.k, j, z, opt.trunc);
                    all = all && r.pass;
                    Json e;
                    e["j"] = j;
                    e["z"] = json_complex(z);
                    e["residual"] = round12(r.residual);
                    e["tail_bound"] = round12(r.tail_bound);
                    ev.push_back(std::move(e));
                }
            return emit_report(opt, "lemma1",
                               Json{{"k", opt.k}, {"trunc", opt.trunc}}, all,
                               Json{{"checks", ev}}, ms_since(t0));
        }
        if (*v_prop1) {
            Code c = load_code(opt);
            auto r = verify_prop1(c, opt.trunc60, opt.node_budget);
            Json ev;
            ev["self_orthogonal"] = r.self_orthogonal;
            ev["integral_lattice"] = r.integral_lattice;
            ev["self_dual"] = r.self_dual;
            ev["unimodular_and_integral"] = r.unimodular_and_integral;
            if (r.doubly_even) ev["doubly_even"] = *r.doubly_even;
            if (r.even_lattice) ev["even_lattice"] = *r.even_lattice;
            ev["equivalences_hold"] = r.all_hold();
            return emit_report(opt, "proposition1", Json{{"in", opt.in_path}},
                               r.all_hold(), ev, ms_since(t0));
        }
        if (*v_prop3) {
            Code c = load_code(opt);
            auto pts = parse_points(opt);
            bool all = true;
            Json ev = Json::array();
            for (auto z : pts) {
                auto r = check_prop3(c, z, opt.trunc, opt.span_cap, opt.node_budget);
                all = all && r.pass;
                Json e;
                e["z"] = json_complex(z);
                e["residual"] = round12(r.residual);
                e["tail_bound"] = round12(r.tail_bound);
                ev.push_back(std::move(e));
            }
            return emit_report(opt, "proposition3",
                               Json{{"in", opt.in_path}, {"trunc", opt.trunc}}, all,
                               Json{{"checks", ev}}, ms_since(t0));
        }
        if (*v_tinv) {
            Code c = load_code(opt);
            auto r = check_T_invariance(c, opt.trunc60, opt.node_budget);
            Json ev;
            ev["pass"] = r.pass;
            ev["offending_exponent"] =
                r.offending_exponent < 0 ? Json(nullptr) : Json(r.offending_exponent);
            return emit_report(opt, "t_invariance", Json{{"in", opt.in_path}}, r.pass,
                               ev, ms_since(t0));
        }
        if (*cmd_suite) {
            if (opt.format == "text") {
                std::ostringstream progress;
                auto results = run_acceptance(&progress);
                bool all = true;
                for (const auto& r : results) all = all && r.pass;
                write_output(opt, progress.str());
                return all ? 0 : 1;
            }
            auto results = run_acceptance(nullptr);
            Json arr = Json::array();
            bool all = true;
            for (const auto& r : results) {
                all = all && r.pass;
                Json e;
                e["criterion"] = r.id;
                e["name"] = r.name;
                e["verdict"] = r.pass ? "pass" : "fail";
                e["detail"] = r.detail;
                e["elapsed_s"] = round12(r.seconds);
                arr.push_back(std::move(e));
            }
            write_output(opt, arr.dump(2));
            return all ? 0 : 1;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
