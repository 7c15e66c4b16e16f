// landau: tables, radii, coefficient bounds, extremal maps and numerical
// verification for harmonic-map Landau-Bloch radii.
//
// Exit status: 0 success, 1 a verification check failed, 2 bad input
// (arguments, parameters outside a result's hypotheses, unreadable files).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "landau/landau.hpp"

using namespace landau;

namespace {

struct Globals {
    std::string out;
    std::uint64_t seed = 42;
    std::optional<double> tolerance;
};

struct ParamFlags {
    std::optional<double> K;
    std::optional<double> Kp;
    std::optional<double> Lambda;
    std::optional<double> lambda;
    std::optional<double> M;

    void attach(CLI::App* app) {
        app->add_option("--K", K, "distortion constant K >= 1");
        app->add_option("--Kp", Kp, "elliptic constant K' >= 0");
        app->add_option("--Lambda", Lambda, "bound Lambda");
        app->add_option("--lambda", lambda, "minimum-distortion bound lambda");
        app->add_option("--M", M, "modulus bound M");
    }

    ClassParams params() const {
        ClassParams p;
        p.K = K.value_or(1.0);
        p.Kp = Kp.value_or(0.0);
        p.LambdaBig = Lambda;
        p.lambdaSmall = lambda;
        p.M = M;
        return p;
    }

    double need(const std::optional<double>& v, const char* flag, const std::string& ctx) const {
        if (!v) {
            throw admissibility_error(ctx + ": requires " + flag);
        }
        return *v;
    }
};

std::string g10(double x) { return detail::fmt_g10(x); }

/// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw std::runtime_error("cannot open output file: " + path);
            }
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void finish() {
        os().flush();
        if (file_.is_open() && !file_) {
            throw std::runtime_error("write failed");
        }
    }

private:
    std::ofstream file_;
};

RadiusPair dispatch_radii(Theorem t, const ParamFlags& f) {
    const std::string ctx(to_string(t));
    const double K = f.K.value_or(1.0);
    const double Kp = f.Kp.value_or(0.0);
    auto L = [&] { return f.need(f.Lambda, "--Lambda", ctx); };
    auto M = [&] { return f.need(f.M, "--M", ctx); };
    switch (t) {
        case Theorem::landau: return landau_classical(M());
        case Theorem::thmA: return theorem_a_radii(L());
        case Theorem::thmB: {
            auto r = landau_classical(M());
            detail::require(*f.M > 1.0, "M > 1", ctx);
            r.source = Theorem::thmB;
            return r;
        }
        case Theorem::thmC: return prior_radii(PriorVariant::thmC, K, Kp, L());
        case Theorem::thmD: return prior_radii(PriorVariant::thmD, K, 0.0, L());
        case Theorem::thm1: return elliptic_radii(K, Kp, L());
        case Theorem::cor1: return quasiregular_radii(K, L());
        case Theorem::thm3: return elliptic_jacobian_radii(K, Kp, L());
        case Theorem::cor2: return quasiregular_jacobian_radii(K, L());
        case Theorem::thm6: return sp_lambda_radii(f.need(f.lambda, "--lambda", ctx));
        case Theorem::thm7: return quasiregular_bounded_radii(K, M());
        case Theorem::thm11: return sp_univalence_radius(SpVariant::thm11_boundedH, M());
        case Theorem::thm12: return sp_univalence_radius(SpVariant::thm12_boundedHprime, L());
        case Theorem::thm0: return sp_univalence_radius(SpVariant::thm0_sharp, M());
        case Theorem::thm10: return sp_univalence_radius(SpVariant::thm10_radial, L());
    }
    throw std::logic_error("unknown theorem");
}

void print_radius_row(std::ostream& os, const RadiusPair& r) {
    os << to_string(r.source) << ',' << g10(r.univalence_radius) << ','
       << (r.schlicht_radius ? g10(*r.schlicht_radius) : std::string("n/a")) << '\n';
}

OracleConfig oracle_config(const Globals& g, int radial, int angular, double max_radius, int bisection,
                           int samples) {
    OracleConfig cfg;
    cfg.grid = GridSpec{radial, angular, max_radius};
    cfg.bisection_steps = bisection;
    cfg.seed = g.seed;
    cfg.samples = samples;
    if (g.tolerance) {
        cfg.pair_tolerance = *g.tolerance;
    }
    cfg.validate();
    return cfg;
}

std::string witness_text(const std::optional<Witness>& w) {
    if (!w) {
        return ",,,";
    }
    std::string s = w->kind + ',';
    s += w->z1 ? g10(w->z1->real()) + ',' + g10(w->z1->imag()) : std::string(",");
    s += ',';
    s += w->index ? std::to_string(*w->index) : std::string();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau-Bloch radii for planar harmonic mappings: formulas, extremal maps, numerical checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Globals g;
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--seed", g.seed, "PRNG seed");
    app.add_option("--tolerance", g.tolerance, "image-collision tolerance for univalence searches");

    // table
    int which = 1;
    auto* table = app.add_subcommand("table", "reproduce comparison table 1 or 2 as CSV");
    table->add_option("which", which, "table number")->required()->check(CLI::IsMember({1, 2}));

    // radii
    std::string theorem_tag;
    ParamFlags radii_flags;
    auto* radii = app.add_subcommand("radii", "univalence and schlicht radii of one result");
    radii->add_option("theorem", theorem_tag, "result tag (landau, thmA..thmD, thm1, cor1, thm3, cor2, thm6, thm7, "
                                              "thm11, thm12, thm0, thm10)")
        ->required();
    radii_flags.attach(radii);

    // coeff-bound
    std::string bound_tag;
    int bound_n = 2;
    ParamFlags bound_flags;
    auto* coeff = app.add_subcommand("coeff-bound", "bound on |a_n| + |b_n|");
    coeff->add_option("variant", bound_tag, "thm2, cor5, cor3, cor4 or conjecture")->required();
    coeff->add_option("--n", bound_n, "coefficient index n >= 2");
    bound_flags.attach(coeff);

    // extremal
    std::string kind_tag;
    ParamFlags ext_flags;
    int ext_n = 2;
    int ext_N = 64;
    auto* extremal = app.add_subcommand("extremal", "write an extremal map as a mapping file");
    extremal->add_option("kind", kind_tag, "f0, f1, fn or Fn")->required();
    extremal->add_option("--n", ext_n, "index n >= 2 (fn, Fn)");
    extremal->add_option("--N", ext_N, "truncation degree");
    ext_flags.attach(extremal);

    // oracle
    std::string map_path;
    int radial = 64;
    int angular = 64;
    double max_radius = 0.9;
    int bisection = 40;
    int schlicht_m = 1024;
    auto* oracle = app.add_subcommand("oracle", "univalence bracket and schlicht estimate of a mapping file");
    oracle->add_option("map", map_path, "mapping file")->required();
    oracle->add_option("--radial-steps", radial, "grid radii");
    oracle->add_option("--angular-steps", angular, "grid angles");
    oracle->add_option("--max-radius", max_radius, "outermost grid radius");
    oracle->add_option("--bisection-steps", bisection, "bisection steps on the first failing ring");
    oracle->add_option("--schlicht-samples", schlicht_m, "boundary samples for the schlicht estimate");

    // verify
    std::string suite;
    std::string verify_theorem;
    ParamFlags verify_flags;
    int verify_samples = 10000;
    int verify_n = 2;
    auto* verify = app.add_subcommand("verify", "run a verification suite; CSV of per-check margins");
    verify
        ->add_option("suite", suite, "sharpness, tables, lemmas, hypotheses, conjecture, chains, reductions, "
                                     "oracle, parseval, roundtrip or all")
        ->required();
    verify->add_option("--theorem", verify_theorem, "sharpness: a single result tag");
    verify->add_option("--samples", verify_samples, "lemmas: points per lemma; conjecture: random maps");
    verify->add_option("--n", verify_n, "conjecture: coefficient index");
    verify_flags.attach(verify);

    // conjecture-scan
    ParamFlags scan_flags;
    int scan_n = 2;
    int scan_samples = 1000;
    int scan_radial = 16;
    int scan_angular = 32;
    auto* scan = app.add_subcommand("conjecture-scan", "random K-quasiregular maps against the coefficient bounds");
    scan->add_option("--n", scan_n, "coefficient index n >= 2");
    scan->add_option("--samples", scan_samples, "number of random maps");
    scan->add_option("--radial-steps", scan_radial, "class-check grid radii");
    scan->add_option("--angular-steps", scan_angular, "class-check grid angles");
    scan_flags.attach(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Sink sink(g.out);
        auto& os = sink.os();
        int status = 0;

        if (*table) {
            write_table_csv(os, compute_table(which));
        } else if (*radii) {
            const auto t = parse_theorem(theorem_tag);
            if (!t) {
                throw admissibility_error("radii: unknown theorem tag '" + theorem_tag + "'");
            }
            const auto r = dispatch_radii(*t, radii_flags);
            os << "source,univalence_radius,schlicht_radius\n";
            print_radius_row(os, r);
            const double K = radii_flags.K.value_or(1.0);
            if (*t == Theorem::thm1) {
                print_radius_row(os, prior_radii(PriorVariant::thmC, K, radii_flags.Kp.value_or(0.0),
                                                 *radii_flags.Lambda));
            } else if (*t == Theorem::cor2) {
                print_radius_row(os, prior_radii(PriorVariant::thmD, K, 0.0, *radii_flags.Lambda));
            }
        } else if (*coeff) {
            const auto v = parse_bound_variant(bound_tag);
            if (!v) {
                throw admissibility_error("coeff-bound: unknown variant '" + bound_tag + "'");
            }
            const std::string ctx = "coeff-bound " + bound_tag;
            const double K = bound_flags.K.value_or(1.0);
            const double Kp = bound_flags.Kp.value_or(0.0);
            const double L = bound_flags.need(bound_flags.Lambda, "--Lambda", ctx);
            const double b = coefficient_bound(*v, K, Kp, L, bound_n);
            os << "variant,n,bound,a1_b1_lo,a1_b1_hi\n";
            os << bound_tag << ',' << bound_n << ',' << g10(b);
            if (*v != BoundVariant::conjecture) {
                const auto [lo, hi] = first_coefficient_interval(*v, K, Kp);
                os << ',' << g10(lo) << ',' << g10(hi);
            } else {
                os << ",,";
            }
            os << '\n';
        } else if (*extremal) {
            const auto kind = parse_extremal_kind(kind_tag);
            if (!kind) {
                throw admissibility_error("extremal: unknown kind '" + kind_tag + "'");
            }
            const std::string ctx = "extremal " + kind_tag;
            ExtremalSpec spec;
            switch (*kind) {
                case ExtremalKind::f0: spec = ExtremalSpec::f0(ext_flags.need(ext_flags.M, "--M", ctx), ext_N); break;
                case ExtremalKind::f1:
                    spec = ExtremalSpec::f1(ext_flags.need(ext_flags.Lambda, "--Lambda", ctx), ext_N);
                    break;
                case ExtremalKind::fn:
                    spec = ExtremalSpec::fn(ext_flags.need(ext_flags.Lambda, "--Lambda", ctx), ext_n, ext_N);
                    break;
                case ExtremalKind::Fn_conjecture:
                    spec = ExtremalSpec::Fn(ext_flags.K.value_or(1.0), ext_flags.need(ext_flags.Lambda, "--Lambda", ctx),
                                            ext_n, ext_N);
                    break;
            }
            write_mapping(os, build_extremal(spec));
        } else if (*oracle) {
            const auto f = read_mapping_file(map_path);
            const auto cfg = oracle_config(g, radial, angular, max_radius, bisection, 0);
            const auto b = univalence_radius_search(f, cfg);
            const double r = b.lo > 0.0 ? b.lo : cfg.grid.radius(1);
            const double schlicht = schlicht_radius(f, r, schlicht_m);
            os << "lo,hi,verdict,witness,witness_re,witness_im,witness_index,schlicht_radius_at_lo\n";
            os << g10(b.lo) << ',' << g10(b.hi) << ',' << to_string(b.verdict) << ',' << witness_text(b.witness)
               << ',' << g10(schlicht) << '\n';
        } else if (*verify) {
            std::vector<SuiteResult> results;
            const auto cfg = oracle_config(g, 64, 64, 0.9, 40, verify_samples);
            auto want = [&](const char* name) { return suite == name || suite == "all"; };
            bool known = suite == "all";
            if (want("tables")) {
                results.push_back(verify_tables());
                known = true;
            }
            if (want("chains")) {
                results.push_back(verify_chains());
                known = true;
            }
            if (want("reductions")) {
                results.push_back(verify_reductions());
                known = true;
            }
            if (want("sharpness")) {
                if (!verify_theorem.empty()) {
                    const auto t = parse_theorem(verify_theorem);
                    if (!t) {
                        throw admissibility_error("verify sharpness: unknown theorem tag '" + verify_theorem + "'");
                    }
                    results.push_back(verify_sharpness(*t, verify_flags.params()));
                } else {
                    results.push_back(verify_sharpness());
                }
                known = true;
            }
            if (want("oracle")) {
                auto ocfg = acceptance_oracle_config();
                if (g.tolerance) {
                    ocfg.pair_tolerance = *g.tolerance;
                }
                results.push_back(verify_oracle(ocfg));
                known = true;
            }
            if (want("parseval")) {
                results.push_back(verify_parseval(g.seed));
                known = true;
            }
            if (want("roundtrip")) {
                results.push_back(verify_roundtrip(g.seed));
                known = true;
            }
            if (want("lemmas")) {
                results.push_back(verify_lemmas(verify_samples));
                known = true;
            }
            if (want("hypotheses")) {
                results.push_back(verify_hypotheses(cfg));
                known = true;
            }
            if (want("conjecture")) {
                auto scfg = cfg;
                scfg.grid = GridSpec{16, 32, 0.9};
                results.push_back(verify_conjecture(verify_flags.K.value_or(2.0), verify_flags.Lambda.value_or(2.0),
                                                    verify_n, scfg));
                known = true;
            }
            if (!known) {
                throw admissibility_error("verify: unknown suite '" + suite + "'");
            }
            write_checks_csv(os, results);
            int failures = 0;
            std::size_t total = 0;
            for (const auto& s : results) {
                failures += s.failures();
                total += s.checks.size();
                for (const auto& c : s.checks) {
                    if (!c.passed) {
                        std::cerr << "FAIL " << s.suite << ": " << c.name << " (value " << g10(c.value)
                                  << ", expected " << g10(c.expected) << ")\n";
                    }
                }
            }
            std::cerr << (failures == 0 ? "PASS" : "FAIL") << ": " << (total - failures) << "/" << total
                      << " checks passed\n";
            status = failures == 0 ? 0 : 1;
        } else if (*scan) {
            const std::string ctx = "conjecture-scan";
            const auto cfg = oracle_config(g, scan_radial, scan_angular, 0.9, 40, scan_samples);
            const auto rep = conjecture_scan(scan_flags.K.value_or(1.0),
                                             scan_flags.need(scan_flags.Lambda, "--Lambda", ctx), scan_n, cfg);
            os << "K,Lambda,n,samples,accepted,rejected,max_observed,argmax,conjectured_bound,proven_bound,"
                  "witness_value,above_conjectured,above_proven\n";
            os << g10(rep.K) << ',' << g10(rep.LambdaBig) << ',' << rep.n << ',' << rep.samples << ','
               << rep.accepted << ',' << rep.rejected << ',' << g10(rep.max_observed) << ',' << rep.argmax << ','
               << g10(rep.conjectured_bound) << ',' << g10(rep.proven_bound) << ',' << g10(rep.witness_value) << ','
               << rep.counterexamples.size() << ',' << rep.proven_violations.size() << '\n';
            for (const auto& c : rep.counterexamples) {
                std::cerr << "above conjectured bound: sample " << c.index << " value " << g10(c.value) << '\n';
            }
            status = rep.proven_violations.empty() ? 0 : 1;
        }
        sink.finish();
        return status;
    } catch (const parse_error& e) {
        std::cerr << "error: " << map_path << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
