// Command-line front door for the matroid workbench. All data goes to stdout,
// diagnostics to stderr. Exit codes: 0 success / verdict pass, 1 usage or IO
// error, 2 verdict fail (e.g. an axiom violation), 3 theorem-falsification
// alarm (an injectivity or matching check failed where the theorems guarantee
// success, i.e. an implementation bug).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "matwork/json_io.hpp"

namespace {

using matwork::io::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdictFail = 2;
constexpr int kExitAlarm = 3;

json read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

matwork::Subset parse_flat_arg(const std::string& csv) {
    std::vector<int> elems;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) elems.push_back(std::stoi(tok));
    return matwork::Subset::of(elems);
}

matwork::OmegaWeights parse_weights(const std::string& csv, std::size_t atoms) {
    if (csv.empty()) return matwork::OmegaWeights::unit(atoms);
    std::vector<mpq_class> c;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        mpq_class q;
        if (q.set_str(tok, 10) != 0 || q.get_den() == 0)
            throw std::runtime_error("bad weight: " + tok);
        q.canonicalize();
        c.push_back(q);
    }
    return matwork::OmegaWeights::of(std::move(c));
}

matwork::FieldSpec parse_field_arg(const std::string& s) {
    if (s == "Q" || s.empty()) return matwork::FieldSpec::rationals();
    return matwork::FieldSpec::prime_field(std::stol(s));
}

json matroid_summary(const matwork::Matroid& m) {
    const char* kind = "explicit";
    switch (m.kind()) {
        case matwork::Matroid::Kind::Linear: kind = "linear"; break;
        case matwork::Matroid::Kind::Lines: kind = "lines"; break;
        case matwork::Matroid::Kind::Uniform: kind = "uniform"; break;
        case matwork::Matroid::Kind::Named: kind = "named"; break;
        case matwork::Matroid::Kind::Explicit: kind = "explicit"; break;
    }
    return json{{"n", m.n()},
                {"rank", m.rank_total()},
                {"kind", kind},
                {"whitney", m.flats().counts()}};
}

// Full theorem suite on one matroid: axioms, top-heavy, and every in-range
// (r, r') injectivity + matching pair, with the Hall-condition oracle as a
// cross-check on small instances.
int run_verify_all(const matwork::Matroid& m) {
    json out;
    auto axioms = m.check_axioms(m.n() <= 12 ? matwork::AxiomCheckMode::Exhaustive
                                             : matwork::AxiomCheckMode::Randomized);
    out["axioms_pass"] = axioms.pass();
    out["axiom_violations"] = axioms.violations;
    auto th = matwork::top_heavy_report(m);
    out["whitney"] = th.whitney;
    out["top_heavy_pass"] = th.pass();

    bool alarm = !th.pass();
    json checks = json::array();
    const int d = m.rank_total();
    for (int r = 0; r <= d; ++r)
        for (int rp = r; rp <= d; ++rp) {
            if (r + rp > d) continue;
            json entry{{"r", r}, {"r_prime", rp}};
            bool injective = matwork::verify_injectivity(m, r, rp);
            entry["injective"] = injective;
            bool complete = false;
            try {
                complete = matwork::extract_matching(m, r, rp).complete;
            } catch (const matwork::TheoremFalsifiedError&) {
                complete = false;
            }
            entry["matching_complete"] = complete;
            if (m.flats().of_rank(r).size() <= 12) {
                bool hall = matwork::brute_force_matching_exists(
                    matwork::ContainmentGraph::build(m, r, rp));
                entry["hall_oracle"] = hall;
                if (hall != complete) alarm = true;
            }
            if (!injective || !complete) alarm = true;
            checks.push_back(std::move(entry));
        }
    out["injectivity_and_matching"] = checks;
    out["alarm"] = alarm;
    emit(out);
    if (alarm) return kExitAlarm;
    return axioms.pass() ? kExitOk : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matwork: a computational matroid workbench"};
    app.require_subcommand(1);

    std::string input, format = "json", flat_csv, weights_csv, mode = "exhaustive", field_s = "Q";
    std::string name;
    int r = 0, r_prime = 0, trials = 1000, k = 2;
    bool exploratory = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input file (default: stdin)");
        cmd->add_option("--format", format, "json|csv|dot")
            ->check(CLI::IsMember({"json", "csv", "dot"}));
    };

    auto* matroid_cmd = app.add_subcommand("matroid", "matroid construction and reports");
    matroid_cmd->require_subcommand(1);
    for (const char* verb : {"info", "flats", "whitney", "check-axioms", "circuits"})
        add_input(matroid_cmd->add_subcommand(verb));
    for (const char* verb : {"restrict", "contract"}) {
        auto* c = matroid_cmd->add_subcommand(verb);
        add_input(c);
        c->add_option("--flat", flat_csv, "comma-separated members of the flat")->required();
    }
    matroid_cmd->get_subcommand("check-axioms")
        ->add_option("--mode", mode, "exhaustive|randomized")
        ->check(CLI::IsMember({"exhaustive", "randomized"}));
    matroid_cmd->get_subcommand("check-axioms")->add_option("--trials", trials);

    auto* mobius_cmd = app.add_subcommand("mobius", "graded Mobius algebra");
    mobius_cmd->require_subcommand(1);
    add_input(mobius_cmd->add_subcommand("dims"));
    {
        auto* c = mobius_cmd->add_subcommand("omega-matrix");
        add_input(c);
        c->add_option("--r", r)->required();
        c->add_option("--r-prime", r_prime)->required();
        c->add_option("--weights", weights_csv, "comma-separated positive rationals");
    }

    auto* matching_cmd = app.add_subcommand("matching", "theorem verification and matchings");
    matching_cmd->require_subcommand(1);
    for (const char* verb : {"verify", "extract"}) {
        auto* c = matching_cmd->add_subcommand(verb);
        add_input(c);
        c->add_option("--r", r)->required();
        c->add_option("--r-prime", r_prime)->required();
        c->add_flag("--exploratory", exploratory,
                    "allow r + r' > rank(M); verdicts labeled outside theorem");
    }
    matching_cmd->get_subcommand("verify")->add_option("--weights", weights_csv);
    add_input(matching_cmd->add_subcommand("topheavy"));

    auto* graded_cmd = app.add_subcommand("gradedalg", "monomial quotient algebras");
    graded_cmd->require_subcommand(1);
    for (const char* verb : {"dims", "hlp", "palindrome"})
        add_input(graded_cmd->add_subcommand(verb));

    auto* trop_cmd = app.add_subcommand("tropical", "max-plus evaluation and membership");
    trop_cmd->require_subcommand(1);
    for (const char* verb : {"member", "eval", "circuits"})
        add_input(trop_cmd->add_subcommand(verb));

    auto* cochain_cmd = app.add_subcommand("cochain", "cochain complexes on surfaces");
    cochain_cmd->require_subcommand(1);
    for (const char* verb : {"dims", "euler"}) {
        auto* c = cochain_cmd->add_subcommand(verb);
        add_input(c);
        c->add_option("--field", field_s, "Q or a prime p");
    }
    cochain_cmd->add_subcommand("torus-grid")->add_option("--k", k)->required();

    add_input(app.add_subcommand("verify-all", "full theorem suite on one matroid"));

    CLI11_PARSE(app, argc, argv);

    try {
        if (matroid_cmd->parsed()) {
            matwork::Matroid m = matwork::io::parse_matroid(read_input(input));
            if (matroid_cmd->get_subcommand("info")->parsed()) {
                emit(matroid_summary(m));
            } else if (matroid_cmd->get_subcommand("flats")->parsed()) {
                emit(matwork::io::lattice_to_json(m.flats()));
            } else if (matroid_cmd->get_subcommand("whitney")->parsed()) {
                if (format == "csv") {
                    std::cout << "r,count\n";
                    auto c = m.flats().counts();
                    for (std::size_t i = 0; i < c.size(); ++i)
                        std::cout << i << "," << c[i] << "\n";
                } else {
                    emit(json{{"whitney", m.flats().counts()}});
                }
            } else if (matroid_cmd->get_subcommand("check-axioms")->parsed()) {
                auto report = m.check_axioms(mode == "exhaustive"
                                                 ? matwork::AxiomCheckMode::Exhaustive
                                                 : matwork::AxiomCheckMode::Randomized,
                                             trials);
                emit(json{{"pass", report.pass()}, {"violations", report.violations}});
                return report.pass() ? kExitOk : kExitVerdictFail;
            } else if (matroid_cmd->get_subcommand("circuits")->parsed()) {
                json circuits = json::array();
                for (const auto& c : m.circuits()) circuits.push_back(c.members());
                emit(json{{"circuits", circuits}});
            } else {
                bool restrict = matroid_cmd->get_subcommand("restrict")->parsed();
                matwork::Flat f = m.closure(parse_flat_arg(flat_csv));
                if (f.members != parse_flat_arg(flat_csv))
                    throw matwork::NotAFlatError("--flat is not a flat of the matroid");
                matwork::Matroid derived = restrict ? m.restriction(f) : m.contraction(f);
                json out = matroid_summary(derived);
                out["flats"] = matwork::io::lattice_to_json(derived.flats());
                emit(out);
            }
        } else if (mobius_cmd->parsed()) {
            matwork::Matroid m = matwork::io::parse_matroid(read_input(input));
            auto a = matwork::MobiusAlgebra::build(m);
            if (mobius_cmd->get_subcommand("dims")->parsed()) {
                emit(json{{"dims", a.graded_dims()}});
            } else {
                auto w = parse_weights(weights_csv, a.lattice().of_rank(1).size());
                auto mat = a.omega_power_matrix(r, r_prime, w);
                emit(matwork::io::omega_matrix_dump(a, r, r_prime, mat));
            }
        } else if (matching_cmd->parsed()) {
            matwork::Matroid m = matwork::io::parse_matroid(read_input(input));
            if (matching_cmd->get_subcommand("verify")->parsed()) {
                auto w = parse_weights(weights_csv, m.flats().of_rank(1).size());
                bool outside = r + r_prime > m.rank_total();
                if (outside && !exploratory)
                    throw matwork::RangeViolationError(
                        "r + r' > rank(M); rerun with --exploratory");
                bool injective = matwork::verify_injectivity(m, r, r_prime, w, exploratory);
                emit(json{{"r", r},
                          {"r_prime", r_prime},
                          {"injective", injective},
                          {"outside_theorem", outside}});
                if (!injective && !outside && weights_csv.empty()) return kExitAlarm;
                return injective || outside ? kExitOk : kExitVerdictFail;
            }
            if (matching_cmd->get_subcommand("extract")->parsed()) {
                auto res = matwork::extract_matching(m, r, r_prime, exploratory);
                if (format == "dot")
                    std::cout << matwork::io::matching_to_dot(m, res);
                else
                    emit(matwork::io::matching_to_json(res));
                return kExitOk;
            }
            auto report = matwork::top_heavy_report(m);
            json comparisons = json::array();
            for (const auto& e : report.comparisons)
                comparisons.push_back(json{{"r", e.r},
                                           {"r_prime", e.r_prime},
                                           {"count_r", e.count_r},
                                           {"count_r_prime", e.count_r_prime},
                                           {"holds", e.holds}});
            emit(json{{"whitney", report.whitney},
                      {"comparisons", comparisons},
                      {"increasing_to_middle", report.increasing_to_middle},
                      {"pass", report.pass()}});
            return report.pass() ? kExitOk : kExitAlarm;
        } else if (graded_cmd->parsed()) {
            auto spec = matwork::io::parse_algebra_spec(read_input(input));
            if (graded_cmd->get_subcommand("dims")->parsed()) {
                auto dims = matwork::graded_dims(spec);
                if (format == "csv") {
                    std::cout << "k,dim\n";
                    for (std::size_t i = 0; i < dims.size(); ++i)
                        std::cout << i << "," << dims[i] << "\n";
                } else {
                    emit(json{{"topdeg", spec.topdeg()},
                              {"dims", dims},
                              {"palindrome", matwork::palindrome_check(spec)},
                              {"unimodal", matwork::unimodal_check(dims)}});
                }
            } else if (graded_cmd->get_subcommand("hlp")->parsed()) {
                auto report = matwork::hlp_check(spec);
                json levels = json::array();
                for (const auto& l : report.levels)
                    levels.push_back(json{{"i", l.i},
                                          {"dim_low", l.dim_low},
                                          {"dim_high", l.dim_high},
                                          {"isomorphism", l.isomorphism}});
                emit(json{{"levels", levels}, {"pass", report.pass()}});
                return report.pass() ? kExitOk : kExitVerdictFail;
            } else {
                bool pal = matwork::palindrome_check(spec);
                emit(json{{"palindrome", pal}});
                return pal ? kExitOk : kExitVerdictFail;
            }
        } else if (trop_cmd->parsed()) {
            json j = read_input(input);
            if (trop_cmd->get_subcommand("member")->parsed()) {
                auto m = matwork::io::parse_matroid(j.at("matroid"));
                auto xi = matwork::io::parse_trop_point(j.at("point"));
                bool is_member = matwork::member(matwork::tropical_linear_space(m), xi);
                emit(json{{"member", is_member}});
                return is_member ? kExitOk : kExitVerdictFail;
            }
            if (trop_cmd->get_subcommand("eval")->parsed()) {
                auto p = matwork::io::parse_trop_polynomial(j.at("polynomial"));
                auto xi = matwork::io::parse_trop_point(j.at("point"));
                auto res = matwork::trop_eval(p, xi);
                emit(json{{"value", matwork::io::trop_value_to_json(res.value)},
                          {"argmax_count", res.argmax_count},
                          {"vanishes", matwork::vanishes(p, xi)}});
                return kExitOk;
            }
            auto m = matwork::io::parse_matroid(j);
            auto t = matwork::tropical_linear_space(m);
            json circuits = json::array();
            for (const auto& c : t.circuits) circuits.push_back(c.members());
            emit(json{{"n", t.n}, {"circuits", circuits}});
        } else if (cochain_cmd->parsed()) {
            if (cochain_cmd->get_subcommand("torus-grid")->parsed()) {
                emit(matwork::io::complex_to_json(matwork::torus_grid(k)));
                return kExitOk;
            }
            auto x = matwork::io::parse_complex(read_input(input));
            if (cochain_cmd->get_subcommand("dims")->parsed()) {
                auto h = matwork::cohomology_dims(x, parse_field_arg(field_s));
                emit(json{{"h", h}, {"euler", x.euler_characteristic()}});
            } else {
                emit(json{{"V", x.vertex_count},
                          {"E", x.edge_count()},
                          {"F", x.face_count()},
                          {"chi", x.euler_characteristic()}});
            }
        } else if (app.get_subcommand("verify-all")->parsed()) {
            return run_verify_all(matwork::io::parse_matroid(read_input(input)));
        }
    } catch (const matwork::TheoremFalsifiedError& e) {
        std::cerr << "ALARM: " << e.what() << "\n";
        return kExitAlarm;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
