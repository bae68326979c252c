#include "ginv/cli.hpp"

#include <optional>

#include <CLI11.hpp>

#include "ginv/drazin.hpp"
#include "ginv/generate.hpp"
#include "ginv/json_io.hpp"
#include "ginv/spectral.hpp"
#include "ginv/suite.hpp"

namespace ginv {

namespace {

struct CommonFlags {
    std::string input;
    std::string out;
    std::string backend;  // "", "exact", or "f64"
    double tol = 1e-10;
    double rank_tol = 1e-9;

    Tolerance tolerance() const { return Tolerance{tol, rank_tol}; }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool needs_input) {
    CLI::Option* input = cmd->add_option("--input", f.input, "input JSON file");
    if (needs_input) input->required();
    cmd->add_option("--out", f.out, "write the JSON report here instead of stdout");
    cmd->add_option("--backend", f.backend, "computation backend")
        ->check(CLI::IsMember({"exact", "f64"}));
    cmd->add_option("--tol", f.tol, "equality tolerance (float backend)");
    cmd->add_option("--rank-tol", f.rank_tol, "relative rank tolerance (float backend)");
}

void emit(const Json& j, const CommonFlags& f, std::ostream& out) {
    if (f.out.empty()) {
        out << dump(j) << '\n';
    } else {
        save_file(f.out, j);
    }
}

Matrix<GaussianRational> as_exact(const AnyMatrix& m) {
    if (const auto* q = std::get_if<Matrix<GaussianRational>>(&m)) return *q;
    return lift_exact(std::get<Matrix<Complex>>(m));
}

Matrix<Complex> as_float(const AnyMatrix& m) {
    if (const auto* q = std::get_if<Matrix<Complex>>(&m)) return *q;
    return to_float(std::get<Matrix<GaussianRational>>(m));
}

ClineQuadruple<GaussianRational> as_exact(const AnyQuadruple& q) {
    if (const auto* e = std::get_if<ClineQuadruple<GaussianRational>>(&q)) return *e;
    const auto& f = std::get<ClineQuadruple<Complex>>(q);
    return {lift_exact(f.a), lift_exact(f.b), lift_exact(f.c), lift_exact(f.d), f.family};
}

ClineQuadruple<Complex> as_float(const AnyQuadruple& q) {
    if (const auto* f = std::get_if<ClineQuadruple<Complex>>(&q)) return *f;
    return to_float(std::get<ClineQuadruple<GaussianRational>>(q));
}

// Runs fn on the requested backend; `fallback` names the backend used when
// the flag is empty ("input" keeps the file's own).
template <typename Fn>
Json on_backend(const AnyMatrix& m, const CommonFlags& f, const std::string& fallback, Fn fn) {
    std::string backend = f.backend;
    if (backend.empty()) {
        backend = fallback == "input"
                      ? (std::holds_alternative<Matrix<GaussianRational>>(m) ? "exact" : "f64")
                      : fallback;
    }
    if (backend == "exact") return fn(as_exact(m));
    return fn(as_float(m));
}

template <typename Fn>
Json on_backend(const AnyQuadruple& q, const CommonFlags& f, const std::string& fallback, Fn fn) {
    std::string backend = f.backend;
    if (backend.empty()) {
        backend = fallback == "input"
                      ? (std::holds_alternative<ClineQuadruple<GaussianRational>>(q) ? "exact"
                                                                                     : "f64")
                      : fallback;
    }
    if (backend == "exact") return fn(as_exact(q));
    return fn(as_float(q));
}

Json demo_report(const Tolerance& tol) {
    const auto q = example_3_7();
    const auto ac = q.a * q.c;
    const auto bd = q.b * q.d;
    const auto acd_m = ac * q.d;
    const auto dbd_m = q.d * (q.b * q.d);
    const auto direct = drazin(bd, tol);
    const auto transferred = transfer_gdrazin(q, tol);
    return Json{{"quadruple", to_json(q)},
                {"conditions", to_json(check_conditions(q, tol))},
                {"acd", to_json(acd_m)},
                {"dbd", to_json(dbd_m)},
                {"acd_equals_dbd", acd_m == dbd_m},
                {"ac_index", drazin_index(ac, tol)},
                {"bd_index", drazin_index(bd, tol)},
                {"ac_nilpotent", pow(ac, ac.dim()).is_zero()},
                {"bd_nilpotent", pow(bd, bd.dim()).is_zero()},
                {"transfer", to_json(transferred)},
                {"direct", to_json(direct)},
                {"transfer_equals_direct", transferred.inverse == direct.inverse}};
}

template <typename T>
Json spectrum_quadruple_report(const ClineQuadruple<T>& q, const Tolerance& tol, bool* verdict) {
    const auto ac_spectrum = eigenvalues(q.a * q.c);
    Json checks = Json::array();
    bool all_hold = true;
    for (const Complex lambda : lambda_samples(ac_spectrum)) {
        const bool holds = invertibility_transfer(q, lambda, tol);
        all_hold = all_hold && holds;
        checks.push_back(Json{{"lambda", to_json(lambda)}, {"transfer_holds", holds}});
    }
    ClineQuadruple<Complex> fq = [&] {
        if constexpr (ScalarOps<T>::exact) {
            return to_float(q);
        } else {
            return q;
        }
    }();
    const bool spectra_equal = nonzero_spectrum_equal(fq, tol);
    *verdict = all_hold && spectra_equal;
    return Json{{"lambda_checks", std::move(checks)}, {"nonzero_spectrum_equal", spectra_equal}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized-inverse toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string family_flag;
    std::string demo_name;
    int gen_dim = 2;
    std::uint64_t gen_seed = 1;
    int suite_seeds = 50;
    std::vector<int> suite_dims = {2, 3, 4};

    CLI::App* cmd_drazin = app.add_subcommand("drazin", "Drazin inverse of a matrix");
    add_common(cmd_drazin, flags, true);
    CLI::App* cmd_group = app.add_subcommand("group", "group inverse of a matrix");
    add_common(cmd_group, flags, true);
    CLI::App* cmd_index = app.add_subcommand("index", "Drazin index of a matrix");
    add_common(cmd_index, flags, true);
    CLI::App* cmd_check = app.add_subcommand("check", "check a quadruple's hypothesis family");
    add_common(cmd_check, flags, true);
    cmd_check->add_option("--family", family_flag, "family to check instead of the declared one");
    CLI::App* cmd_transfer = app.add_subcommand("transfer", "Drazin inverse of bd from (ac)^D");
    add_common(cmd_transfer, flags, true);
    CLI::App* cmd_jacobson = app.add_subcommand("jacobson", "explicit inverse of I - bd");
    add_common(cmd_jacobson, flags, true);
    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalues / spectral transfer");
    add_common(cmd_spectrum, flags, true);
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a conditioned quadruple");
    add_common(cmd_gen, flags, false);
    cmd_gen->add_option("--family", family_flag, "condition family")->required();
    cmd_gen->add_option("--dim", gen_dim, "matrix dimension");
    cmd_gen->add_option("--seed", gen_seed, "generator seed");
    CLI::App* cmd_demo = app.add_subcommand("demo", "built-in demonstration instance");
    add_common(cmd_demo, flags, false);
    cmd_demo->add_option("name", demo_name, "demo name (example-3-7)")->required();
    CLI::App* cmd_suite = app.add_subcommand("suite", "run every library property");
    add_common(cmd_suite, flags, false);
    cmd_suite->add_option("--seeds", suite_seeds, "seeds per family and dimension");
    cmd_suite->add_option("--dims", suite_dims, "dimensions to cover")->delimiter(',');

    std::vector<const char*> argv;
    argv.push_back("ginv");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    const Tolerance tol = flags.tolerance();
    try {
        if (cmd_drazin->parsed()) {
            const AnyMatrix m = matrix_from_json(load_file(flags.input));
            Json j = on_backend(m, flags, "input",
                                [&](const auto& mat) { return to_json(drazin(mat, tol)); });
            emit(j, flags, out);
            return 0;
        }
        if (cmd_group->parsed()) {
            const AnyMatrix m = matrix_from_json(load_file(flags.input));
            Json j = on_backend(m, flags, "input", [&](const auto& mat) {
                return to_json(group_inverse(mat, tol).inverse);
            });
            emit(j, flags, out);
            return 0;
        }
        if (cmd_index->parsed()) {
            const AnyMatrix m = matrix_from_json(load_file(flags.input));
            Json j = on_backend(m, flags, "input", [&](const auto& mat) {
                return Json{{"index", drazin_index(mat, tol)}};
            });
            emit(j, flags, out);
            return 0;
        }
        if (cmd_check->parsed()) {
            AnyQuadruple q = quadruple_from_json(load_file(flags.input));
            if (!family_flag.empty()) {
                const ConditionFamily fam = family_from_name(family_flag);
                std::visit([fam](auto& quad) { quad.family = fam; }, q);
            }
            bool overall = false;
            Json j = on_backend(q, flags, "exact", [&](const auto& quad) {
                HypothesisReport rep = check_conditions(quad, tol);
                overall = rep.overall;
                return to_json(rep);
            });
            emit(j, flags, out);
            return overall ? 0 : 1;
        }
        if (cmd_transfer->parsed()) {
            const AnyQuadruple q = quadruple_from_json(load_file(flags.input));
            Json j = on_backend(q, flags, "exact", [&](const auto& quad) {
                const auto bounded = transfer_drazin_with_bound(quad, tol);
                Json r = to_json(bounded.result);
                r["index_ac"] = bounded.index_ac;
                r["index_bd"] = bounded.index_bd;
                r["bound_holds"] = bounded.bound_holds;
                r["slack"] = bounded.slack;
                return r;
            });
            emit(j, flags, out);
            return 0;
        }
        if (cmd_jacobson->parsed()) {
            const AnyQuadruple q = quadruple_from_json(load_file(flags.input));
            Json j = on_backend(q, flags, "exact",
                                [&](const auto& quad) { return to_json(jacobson_inverse(quad, tol)); });
            emit(j, flags, out);
            return 0;
        }
        if (cmd_spectrum->parsed()) {
            const Json input = load_file(flags.input);
            if (input.is_object() && input.contains("family")) {
                const AnyQuadruple q = quadruple_from_json(input);
                bool verdict = false;
                Json j = on_backend(q, flags, "f64", [&](const auto& quad) {
                    return spectrum_quadruple_report(quad, tol, &verdict);
                });
                emit(j, flags, out);
                return verdict ? 0 : 1;
            }
            const AnyMatrix m = matrix_from_json(input);
            Json values = Json::array();
            for (const Complex ev : std::holds_alternative<Matrix<GaussianRational>>(m)
                                        ? eigenvalues(std::get<Matrix<GaussianRational>>(m))
                                        : eigenvalues(std::get<Matrix<Complex>>(m))) {
                values.push_back(to_json(ev));
            }
            const auto note = drazin_spectrum_report(as_float(m));
            Json j{{"eigenvalues", std::move(values)},
                   {"drazin_spectrum", Json{{"values", Json::array()}, {"note", note.note}}}};
            emit(j, flags, out);
            return 0;
        }
        if (cmd_gen->parsed()) {
            GenSpec spec;
            spec.family = family_from_name(family_flag);
            spec.dim = gen_dim;
            spec.seed = gen_seed;
            emit(to_json(generate(spec)), flags, out);
            return 0;
        }
        if (cmd_demo->parsed()) {
            if (demo_name != "example-3-7") {
                err << "unknown demo: " << demo_name << '\n';
                return 2;
            }
            emit(demo_report(tol), flags, out);
            return 0;
        }
        if (cmd_suite->parsed()) {
            SuiteOptions opt;
            opt.seed_count = suite_seeds;
            opt.dims = suite_dims;
            const SuiteOutcome outcome = run_suite(opt);
            emit(outcome.report, flags, out);
            return outcome.all_pass ? 0 : 1;
        }
        err << "no subcommand selected\n";
        return 2;
    } catch (const SingularError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NoGroupInverse& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const HypothesisViolated& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const GenerationFailed& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ginv
