// Command-line front end: construction, testing, and certificate verification
// as reproducible batch commands with JSON reports.
//
// Exit codes: 0 = passed/inside/verified, 1 = falsified/outside/failed,
// 2 = usage or malformed input.

#include "hypercert/certificates.hpp"
#include "hypercert/constructions.hpp"
#include "hypercert/errors.hpp"
#include "hypercert/hyperbolic.hpp"
#include "hypercert/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>

using namespace hypercert;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Vector syntax: "e0".."eN" (standard basis), "I" (identity direction for a
// det-kind polynomial), or comma-separated rationals "1,1/2,-3".
QVec parse_vector(const std::string& text, size_t n, const PolyFile* ctx_file) {
    if (!text.empty() && text[0] == 'e' && text.size() > 1 &&
        text.find_first_not_of("0123456789", 1) == std::string::npos) {
        size_t idx = std::stoul(text.substr(1));
        if (idx >= n) throw parse_error("basis vector index out of range: " + text);
        QVec v(n, Q(0));
        v[idx] = 1;
        return v;
    }
    if (text == "I") {
        // Identity matrix as a vector: requires det_symmetric metadata.
        if (!ctx_file || ctx_file->kind != "det_symmetric")
            throw parse_error("vector 'I' requires a det-kind polynomial file");
        size_t d = ctx_file->params.at("d").get<size_t>();
        QVec v(n, Q(0));
        for (size_t i = 0; i < d; ++i) v[sym_index(i, i, d)] = 1;
        return v;
    }
    QVec v;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            v.push_back(parse_rational(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) v.push_back(parse_rational(cur));
    if (v.size() != n) throw parse_error("vector has wrong dimension");
    return v;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> cli_seed, Json& report) {
    if (cli_seed) {
        report["seed"] = *cli_seed;
        return *cli_seed;
    }
    if (const char* env = std::getenv("HYPERCERT_SEED")) {
        std::uint64_t s = std::stoull(env);
        report["seed"] = s;
        report["seed_source"] = "HYPERCERT_SEED";
        return s;
    }
    std::random_device rd;
    std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    report["seed"] = s;
    report["seed_source"] = "generated";
    return s;
}

PolyFile load_polyfile(const std::string& path, Json& report) {
    std::string bytes = read_file(path);
    char digest[32];
    std::snprintf(digest, sizeof digest, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    report["inputs"].push_back(Json{{"path", path}, {"digest", digest}});
    return polyfile_from_json(Json::parse(bytes));
}

void emit(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") std::cout << text;
    else write_file(out_path, text);
}

HyperbolicContext make_context(const PolyFile& f, const std::string& e_text) {
    QVec e;
    if (!e_text.empty()) e = parse_vector(e_text, f.poly.nvars(), &f);
    else if (f.e) e = *f.e;
    else throw parse_error("no direction: pass --e or use a file with an embedded e");
    return HyperbolicContext(f.poly, e);
}

int cmd_construct(const std::vector<std::string>& args, const std::string& out, bool normalized) {
    if (args.empty()) throw parse_error("construct: missing kind");
    const std::string& kind = args[0];
    PolyFile f;
    if (kind == "vamos") {
        f.poly = vamos_specialized();
        f.e = QVec{Q(0), Q(0), Q(1), Q(1)};
        f.var_names = {"x1", "x2", "x3", "x4"};
        f.kind = "vamos";
    } else if (kind == "det") {
        if (args.size() < 2) throw parse_error("construct det <d>");
        size_t d = std::stoul(args[1]);
        SpecialPoly sp = det_symmetric(d);
        f.poly = sp.ctx.p;
        f.e = sp.ctx.e;
        f.var_names = sp.var_names;
        f.kind = "det_symmetric";
        f.params = Json{{"d", d}};
    } else if (kind == "singular-cubic") {
        SpecialPoly sp = singular_cubic();
        f.poly = sp.ctx.p;
        f.e = sp.ctx.e;
        f.var_names = sp.var_names;
        f.kind = "singular_cubic";
    } else if (kind == "graph-cubic") {
        if (args.size() < 3) throw parse_error("construct graph-cubic <graph-file> <k>");
        Graph g = load_graph(args[1]);
        Q k = parse_rational(args[2]);
        LabeledCubic lc = graph_cubic(g, k, normalized);
        f.poly = lc.poly;
        QVec e0(lc.nvars(), Q(0));
        e0[0] = 1;
        f.e = e0;
        f.var_names = lc.var_names;
        f.kind = "graph_cubic";
        f.params = Json{{"k", rational_str(k)},
                        {"normalized", lc.normalized},
                        {"graph", graph_to_json(lc.graph)}};
    } else if (kind == "std-cubic") {
        if (args.size() < 2) throw parse_error("construct std-cubic <q.json>");
        Json scratch;
        scratch["inputs"] = Json::array();
        PolyFile qf = load_polyfile(args[1], scratch);
        f.poly = std_cubic(qf.poly);
        QVec e0(f.poly.nvars(), Q(0));
        e0[0] = 1;
        f.e = e0;
        f.kind = "std_cubic";
    } else {
        throw parse_error("construct: unknown kind " + kind);
    }
    emit(polyfile_to_json(f), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for hyperbolic polynomials and their certificates"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a polynomial family");
    std::vector<std::string> construct_args;
    std::string construct_out;
    bool construct_normalized = false;
    construct
        ->add_option("spec", construct_args,
                     "vamos | det <d> | singular-cubic | graph-cubic <file> <k> | std-cubic <q.json>")
        ->expected(-1);
    construct->add_option("-o,--out", construct_out, "output file (default stdout)");
    construct->add_flag("--normalized", construct_normalized, "normalized graph-cubic form");

    auto* check =
        app.add_subcommand("check", "hyperbolicity / membership / eigenvalues / interlacing");
    std::vector<std::string> check_args;
    std::string check_e, check_u, check_x, check_width = "1/1000000000", check_log, check_out;
    long check_trials = 200, check_samples = 100;
    int check_jobs = 1;
    check
        ->add_option("kind", check_args,
                     "hyperbolic <p.json> | member <p.json> | eigenvalues <p.json> | "
                     "interlace <p.json> <q.json>")
        ->expected(-1);
    check->add_option("--e", check_e, "direction of hyperbolicity");
    check->add_option("--u", check_u, "membership point");
    check->add_option("--x", check_x, "evaluation point");
    check->add_option("--width", check_width, "isolation width (rational)");
    check->add_option("--trials", check_trials, "randomized trials");
    check->add_option("--samples", check_samples, "interlacing samples");
    std::uint64_t seed_holder = 0;
    auto* seed_opt = check->add_option("--seed", seed_holder, "RNG seed");
    check->add_option("--jobs", check_jobs, "parallel trial workers");
    size_t complement_holder = 0;
    auto* comp_opt = check->add_option("--complement", complement_holder,
                                       "restrict samples to the complement {x_i = 0}");
    check->add_option("--log", check_log, "JSON-lines per-trial log file");
    check->add_option("-o,--out", check_out, "report file (default stdout)");

    auto* certify = app.add_subcommand("certify", "verify certificates");
    std::vector<std::string> certify_args;
    std::string certify_out;
    certify
        ->add_option("kind", certify_args,
                     "vamos-not-sos | icosa-not-sos | gram <file> | separation <file> | "
                     "sos-recovery <file>")
        ->expected(-1);
    certify->add_option("-o,--out", certify_out, "report file (default stdout)");

    auto* matrix = app.add_subcommand("matrix", "emit Bezoutian / Hermite / phi data");
    std::vector<std::string> matrix_args;
    std::string matrix_e, matrix_u, matrix_x, matrix_y, matrix_out, matrix_format = "json";
    bool matrix_symbolic = false;
    std::vector<std::string> matrix_at;
    matrix->add_option("kind", matrix_args, "bezout <p.json> | hermite <p.json> | phi <p.json>")
        ->expected(-1);
    matrix->add_option("--e", matrix_e, "direction of hyperbolicity");
    matrix->add_option("--u", matrix_u, "linear-argument direction");
    matrix->add_option("--x", matrix_x, "evaluation point");
    matrix->add_option("--y", matrix_y, "phi quadratic argument");
    matrix->add_flag("--symbolic", matrix_symbolic, "emit polynomial entries");
    matrix->add_option("--at", matrix_at, "substitutions i=value applied to symbolic entries");
    matrix->add_option("--format", matrix_format, "json | csv (numeric matrices only)");
    matrix->add_option("-o,--out", matrix_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    Timer timer;
    Json report;
    report["schema"] = kSchemaVersion;
    report["inputs"] = Json::array();

    try {
        if (construct->parsed())
            return cmd_construct(construct_args, construct_out, construct_normalized);

        if (check->parsed()) {
            if (check_args.empty()) throw parse_error("check: missing kind");
            const std::string kind = check_args[0];
            report["command"] = "check " + kind;
            if (kind == "hyperbolic") {
                if (check_args.size() < 2) throw parse_error("check hyperbolic <p.json>");
                PolyFile f = load_polyfile(check_args[1], report);
                HyperbolicContext ctx = make_context(f, check_e);
                std::uint64_t seed = resolve_seed(
                    seed_opt->count() ? std::optional<std::uint64_t>(seed_holder) : std::nullopt,
                    report);
                HyperbolicityOptions opts;
                opts.jobs = check_jobs;
                if (comp_opt->count()) opts.complement_index = complement_holder;
                opts.keep_records = !check_log.empty();
                auto rep = hyperbolicity_test(ctx, check_trials, seed, opts);
                report["trials"] = rep.trials;
                report["verdict"] = rep.passed ? "passed" : "falsified";
                report["witnesses"] = Json::array();
                if (!rep.passed) {
                    report["witnesses"].push_back(Json{{"trial", rep.witness_trial},
                                                       {"x", vector_to_json(*rep.witness)},
                                                       {"failure", rep.failure}});
                }
                if (!check_log.empty()) {
                    std::string lines;
                    for (const auto& r : rep.records) {
                        Json line{{"trial", r.index}, {"x", vector_to_json(r.x)}, {"ok", r.ok}};
                        if (!r.ok) line["failure"] = r.failure;
                        lines += line.dump() + "\n";
                    }
                    write_file(check_log, lines);
                    report["artifacts"] = Json::array({check_log});
                }
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, check_out);
                return rep.passed ? 0 : 1;
            }
            if (kind == "member") {
                if (check_args.size() < 2) throw parse_error("check member <p.json> --u <vec>");
                PolyFile f = load_polyfile(check_args[1], report);
                HyperbolicContext ctx = make_context(f, check_e);
                QVec u = parse_vector(check_u, ctx.nvars(), &f);
                auto res = cone_membership(ctx, u);
                report["verdict"] = membership_str(res.verdict);
                report["zero_multiplicity"] = res.zero_multiplicity;
                report["witnesses"] = Json::array();
                if (res.negative_witness) {
                    report["witnesses"].push_back(
                        Json{{"eigenvalue_interval",
                              Json::array({rational_str(res.negative_witness->lo),
                                           rational_str(res.negative_witness->hi)})}});
                }
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, check_out);
                return res.verdict == Membership::Outside ? 1 : 0;
            }
            if (kind == "eigenvalues") {
                if (check_args.size() < 2)
                    throw parse_error("check eigenvalues <p.json> --x <vec>");
                PolyFile f = load_polyfile(check_args[1], report);
                HyperbolicContext ctx = make_context(f, check_e);
                QVec x = parse_vector(check_x, ctx.nvars(), &f);
                auto iso = hyperbolic_eigenvalues(ctx, x, parse_rational(check_width));
                Json vals = Json::array();
                for (size_t i = iso.intervals.size(); i-- > 0;) {
                    const auto& iv = iso.intervals[i];
                    vals.push_back(Json{{"lo", rational_str(iv.lo)},
                                        {"hi", rational_str(iv.hi)},
                                        {"multiplicity", iv.multiplicity}});
                }
                report["verdict"] = "real_rooted";
                report["eigenvalues"] = vals;
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, check_out);
                return 0;
            }
            if (kind == "interlace") {
                if (check_args.size() < 3) throw parse_error("check interlace <p.json> <q.json>");
                PolyFile f = load_polyfile(check_args[1], report);
                PolyFile qf = load_polyfile(check_args[2], report);
                HyperbolicContext ctx = make_context(f, check_e);
                std::uint64_t seed = resolve_seed(
                    seed_opt->count() ? std::optional<std::uint64_t>(seed_holder) : std::nullopt,
                    report);
                auto res = check_interlaces(ctx, qf.poly, check_samples,
                                            parse_rational(check_width), seed);
                report["verdict"] = res.consistent ? "consistent" : "violation";
                report["samples"] = res.samples;
                report["witnesses"] = Json::array();
                if (!res.consistent)
                    report["witnesses"].push_back(
                        Json{{"x", vector_to_json(*res.violation_x)}, {"detail", res.detail}});
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, check_out);
                return res.consistent ? 0 : 1;
            }
            throw parse_error("check: unknown kind " + kind);
        }

        if (certify->parsed()) {
            if (certify_args.empty()) throw parse_error("certify: missing kind");
            const std::string kind = certify_args[0];
            report["command"] = "certify " + kind;
            if (kind == "vamos-not-sos") {
                VamosRun run = vamos_certificate();
                report["verdict"] =
                    run.result.verdict == SeparationVerdict::NotSos ? "not_sos" : "inconclusive";
                report["functional_value"] = rational_str(run.result.functional_value);
                report["margin"] = rational_str(run.result.margin);
                report["moment_matrix"] = qmatrix_to_json(run.result.moment);
                report["moment_psd"] = run.result.moment_psd.psd;
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, certify_out);
                return run.result.verdict == SeparationVerdict::NotSos ? 0 : 1;
            }
            if (kind == "icosa-not-sos") {
                ObstructionReport rep = icosahedral_obstruction();
                report["verdict"] = rep.confirmed ? "obstruction_confirmed" : "failed";
                if (!rep.confirmed) report["stage_failed"] = rep.stage_failed;
                report["complement_dimension"] = rep.complement_dim;
                report["restricted_psd"] = rep.psd.psd;
                report["trace"] = rational_str(rep.trace_value);
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, certify_out);
                return rep.confirmed ? 0 : 1;
            }
            if (kind == "gram") {
                if (certify_args.size() < 2) throw parse_error("certify gram <file>");
                Json j = Json::parse(read_file(certify_args[1]));
                GramCertificate cert = gram_certificate_from_json(j);
                auto res = verify_gram(cert);
                switch (res.verdict) {
                    case GramVerdict::ValidSos: report["verdict"] = "valid_sos"; break;
                    case GramVerdict::IdentityFail:
                        report["verdict"] = "identity_fail";
                        report["offending_monomial"] = res.offending_monomial;
                        break;
                    case GramVerdict::GramNotPsd:
                        report["verdict"] = "gram_not_psd";
                        report["witness"] = vector_to_json(res.psd.witness);
                        break;
                }
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, certify_out);
                return res.verdict == GramVerdict::ValidSos ? 0 : 1;
            }
            if (kind == "separation") {
                if (certify_args.size() < 2) throw parse_error("certify separation <file>");
                Json j = Json::parse(read_file(certify_args[1]));
                SeparationCertificate cert = separation_certificate_from_json(j);
                auto res = verify_separation(cert);
                report["verdict"] = res.verdict == SeparationVerdict::NotSos ? "not_sos"
                                    : res.verdict == SeparationVerdict::InconclusiveValue
                                        ? "inconclusive_value"
                                        : "inconclusive_psd";
                report["functional_value"] = rational_str(res.functional_value);
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, certify_out);
                return res.verdict == SeparationVerdict::NotSos ? 0 : 1;
            }
            if (kind == "sos-recovery") {
                if (certify_args.size() < 2) throw parse_error("certify sos-recovery <file>");
                Json j = Json::parse(read_file(certify_args[1]));
                QMatrix q = qmatrix_from_json(j.at("gram"));
                unsigned d = j.at("d").get<unsigned>(), m = j.at("m").get<unsigned>();
                auto res = sos_recovery_check(q, d, m);
                report["verdict"] =
                    res.verdict == RecoveryVerdict::IdentityHolds ? "identity_holds" : "mismatch";
                if (res.verdict == RecoveryVerdict::Mismatch)
                    report["offending_monomial"] = res.offending_monomial;
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, certify_out);
                return res.verdict == RecoveryVerdict::IdentityHolds ? 0 : 1;
            }
            throw parse_error("certify: unknown kind " + kind);
        }

        if (matrix->parsed()) {
            if (matrix_args.size() < 2) throw parse_error("matrix <kind> <p.json>");
            const std::string kind = matrix_args[0];
            report["command"] = "matrix " + kind;
            PolyFile f = load_polyfile(matrix_args[1], report);
            HyperbolicContext ctx = make_context(f, matrix_e);
            if (kind == "phi") {
                QVec x = parse_vector(matrix_x, ctx.nvars(), &f);
                QVec y = parse_vector(matrix_y, ctx.d, &f);
                if (!matrix_u.empty()) {
                    QVec u = parse_vector(matrix_u, ctx.nvars(), &f);
                    report["value"] = rational_str(phi_eval(ctx, x, y, u));
                } else {
                    report["functional"] = vector_to_json(phi_functional(ctx, x, y));
                }
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, matrix_out);
                return 0;
            }
            if (kind != "bezout" && kind != "hermite")
                throw parse_error("matrix: unknown kind " + kind);
            QVec u = parse_vector(matrix_u, ctx.nvars(), &f);
            if (matrix_symbolic || !matrix_at.empty()) {
                PolyMatrix pm = kind == "bezout" ? parameterized_bezoutian(ctx, u)
                                                 : parameterized_hermite(ctx, u);
                for (const std::string& sub : matrix_at) {
                    auto eq = sub.find('=');
                    if (eq == std::string::npos) throw parse_error("--at expects i=value");
                    size_t var = std::stoul(sub.substr(0, eq));
                    Q val = parse_rational(sub.substr(eq + 1));
                    std::vector<MvPoly> images;
                    for (size_t i = 0; i < ctx.nvars(); ++i) {
                        if (i == var) images.push_back(MvPoly::constant(ctx.nvars(), val));
                        else images.push_back(MvPoly::var(i, ctx.nvars()));
                    }
                    pm = pm.compose(images);
                }
                report["matrix"] = polymatrix_to_json(pm);
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, matrix_out);
                return 0;
            }
            QVec x = parse_vector(matrix_x, ctx.nvars(), &f);
            QMatrix qm = kind == "bezout" ? bezout_at(ctx, x, u) : hermite_at(ctx, x, u);
            if (matrix_format == "csv") {
                if (matrix_out.empty() || matrix_out == "-") std::cout << qmatrix_to_csv(qm);
                else write_file(matrix_out, qmatrix_to_csv(qm));
            } else {
                report["matrix"] = qmatrix_to_json(qm);
                report["timings"] = Json{{"total_ms", timer.ms()}};
                emit(report, matrix_out);
            }
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_hyperbolic_error& e) {
        Json err;
        err["schema"] = kSchemaVersion;
        err["verdict"] = "falsified";
        err["witnesses"] =
            Json::array({Json{{"x", vector_to_json(e.witness)}, {"failure", "non_real_roots"}}});
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
