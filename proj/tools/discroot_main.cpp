// discroot: series solutions of cubics in the discriminant, the quartic
// ramified factor, and the convergence-region census.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical refusal
// (divergent/boundary/degenerate input), 3 verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "discroot/census.hpp"
#include "discroot/disc_adic.hpp"
#include "discroot/identities.hpp"
#include "discroot/prime_field.hpp"
#include "discroot/quartic_factor.hpp"
#include "discroot/real_cubic.hpp"

namespace {

using namespace discroot;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- solve

int cmd_solve(double p, double q, bool have_pq, double c1, double c2, double c3, bool have_c,
              const std::string& method, double tol, long max_terms, const std::string& format) {
    if (have_pq == have_c) {
        std::cerr << "solve-cubic: give either --p/--q or --c1/--c2/--c3\n";
        return 1;
    }
    GeneralCubic<double> f = have_c ? GeneralCubic<double>{c1, c2, c3}
                                    : GeneralCubic<double>{0.0, p, q};
    SolveMethod m;
    if (method == "discriminant") m = SolveMethod::discriminant;
    else if (method == "trinomial") m = SolveMethod::trinomial;
    else if (method == "trig") m = SolveMethod::trig;
    else if (method == "oracle") m = SolveMethod::oracle;
    else if (method == "auto") m = SolveMethod::auto_pick;
    else {
        std::cerr << "solve-cubic: unknown method '" << method << "'\n";
        return 1;
    }

    std::vector<RootReport> reports = general_cubic_root(f, m, tol, max_terms);
    if (format == "json") {
        std::ostringstream os;
        os << "{\"cubic\":{\"c1\":" << fmt(f.c1) << ",\"c2\":" << fmt(f.c2)
           << ",\"c3\":" << fmt(f.c3) << "},\"reports\":[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) os << ",";
            os << reports[i].json();
        }
        os << "]}";
        std::cout << os.str() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << method_name(r.method) << ": value=";
            if (r.value && r.value->imag() == 0.0)
                std::cout << fmt(r.value->real());
            else if (r.value)
                std::cout << fmt(r.value->real()) << (r.value->imag() < 0 ? "-" : "+")
                          << fmt(std::abs(r.value->imag())) << "i";
            else
                std::cout << "none";
            std::cout << " terms=" << r.terms_used << " residual=" << fmt(r.residual)
                      << " sign=" << sign_name(r.sign) << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- expand

struct ExpandResult {
    std::string pi;
    std::vector<std::string> series_coeffs;
    std::vector<std::string> hensel_coeffs;
    std::vector<bool> equal; // per-level literal equality, engine=both
    bool congruent = false;
    bool both = false;
};

template <class K>
ExpandResult expand_with(const DiscAdicElement<K>* series, const DiscAdicElement<K>* hensel) {
    ExpandResult out;
    const DiscAdicElement<K>* any = series ? series : hensel;
    out.pi = any->pi().str();
    if (series)
        for (int k = 0; k <= series->order(); ++k)
            out.series_coeffs.push_back(series->coeff(k).str());
    if (hensel)
        for (int k = 0; k <= hensel->order(); ++k)
            out.hensel_coeffs.push_back(hensel->coeff(k).str());
    if (series && hensel) {
        out.both = true;
        for (int k = 0; k <= series->order(); ++k)
            out.equal.push_back(series->coeff(k) == hensel->coeff(k));
        out.congruent = series->congruent_to(*hensel);
    }
    return out;
}

int cmd_expand(int characteristic_in, int order, const std::string& form,
               const std::string& engine, const std::string& format) {
    const bool want_series = engine == "series" || engine == "both";
    const bool want_hensel = engine == "hensel" || engine == "both";
    if (!want_series && !want_hensel) {
        std::cerr << "expand-generic: unknown engine '" << engine << "'\n";
        return 1;
    }
    if (form != "depressed" && form != "general") {
        std::cerr << "expand-generic: unknown form '" << form << "'\n";
        return 1;
    }
    LiftConfig cfg{order, static_cast<unsigned>(characteristic_in)};
    ExpandResult result;

    if (characteristic_in == 0) {
        using F = RationalFunction<Rational>;
        if (form == "depressed") {
            auto vars = VarSet::make({"p", "q"});
            F p = F::variable(vars, 0, Rational(0));
            F q = F::variable(vars, 1, Rational(0));
            DepressedCubic<F> g{p, q};
            std::optional<DiscAdicElement<Rational>> series, hensel;
            if (want_series) series = discriminant_root_series(g, cfg);
            if (want_hensel) {
                F seed = from_integer_like(p, BigInt(3)) * q / p;
                auto pi = series ? series->pi_ptr()
                                 : std::make_shared<const MultiPoly<Rational>>(
                                       cubic_discriminant(g).num());
                hensel = hensel_lift_cubic(g.general(), seed, pi, cfg);
            }
            result = expand_with(series ? &*series : nullptr, hensel ? &*hensel : nullptr);
        } else {
            auto vars = VarSet::make({"c1", "c2", "c3"});
            GeneralCubic<F> f{F::variable(vars, 0, Rational(0)), F::variable(vars, 1, Rational(0)),
                              F::variable(vars, 2, Rational(0))};
            std::optional<DiscAdicElement<Rational>> series, hensel;
            if (want_series) series = general_discriminant_root_series(f, cfg);
            if (want_hensel) {
                auto dep = depress_cubic(f);
                F seed = dep.shift + from_integer_like(dep.g.p, BigInt(3)) * dep.g.q / dep.g.p;
                auto pi = series ? series->pi_ptr()
                                 : std::make_shared<const MultiPoly<Rational>>(
                                       cubic_discriminant(f).num());
                hensel = hensel_lift_cubic(f, seed, pi, cfg);
            }
            result = expand_with(series ? &*series : nullptr, hensel ? &*hensel : nullptr);
        }
    } else if (characteristic_in == 2) {
        using F = RationalFunction<PrimeFieldElement>;
        PrimeFieldElement z2(0, 2);
        std::optional<DiscAdicElement<PrimeFieldElement>> series, hensel;
        if (form == "depressed") {
            auto vars = VarSet::make({"p", "q"});
            DepressedCubic<F> g{F::variable(vars, 0, z2), F::variable(vars, 1, z2)};
            if (want_series) series = char2_root_series(g, cfg);
            if (want_hensel) {
                auto pi = series ? series->pi_ptr()
                                 : std::make_shared<const MultiPoly<PrimeFieldElement>>(g.q.num());
                hensel = hensel_lift_cubic(g.general(), g.q / g.p, pi, cfg);
            }
        } else {
            auto vars = VarSet::make({"c1", "c2", "c3"});
            GeneralCubic<F> f{F::variable(vars, 0, z2), F::variable(vars, 1, z2),
                              F::variable(vars, 2, z2)};
            auto dep = depress_cubic(f); // q of the depressed form is delta
            if (want_series) {
                auto base = char2_root_series(dep.g, cfg);
                auto shift = DiscAdicElement<PrimeFieldElement>::constant(base.pi_ptr(), dep.shift,
                                                                          base.order());
                series = base + shift;
                if (!verify_root(f, *series).passes(order))
                    throw verification_error("shifted characteristic-2 series is not a root");
            }
            if (want_hensel) {
                auto pi = series ? series->pi_ptr()
                                 : std::make_shared<const MultiPoly<PrimeFieldElement>>(
                                       dep.g.q.num());
                hensel = hensel_lift_cubic(f, dep.shift + dep.g.q / dep.g.p, pi, cfg);
            }
        }
        result = expand_with(series ? &*series : nullptr, hensel ? &*hensel : nullptr);
    } else if (characteristic_in == 3) {
        if (form == "depressed")
            throw refusal_error(
                "the depressed generic cubic over a characteristic-3 field has no root in the "
                "discriminant-adic completion: its residue cubic t^3 + q is rootless because "
                "-q is not a cube in F_3(q)");
        using F = RationalFunction<PrimeFieldElement>;
        PrimeFieldElement z3(0, 3);
        auto vars = VarSet::make({"c1", "c2", "c3"});
        GeneralCubic<F> f{F::variable(vars, 0, z3), F::variable(vars, 1, z3),
                          F::variable(vars, 2, z3)};
        std::optional<DiscAdicElement<PrimeFieldElement>> series, hensel;
        if (want_series) series = char3_root_series(f, cfg);
        if (want_hensel) {
            F seed = f.c2 / f.c1 - f.c1;
            auto pi = series ? series->pi_ptr()
                             : std::make_shared<const MultiPoly<PrimeFieldElement>>(
                                   cubic_discriminant(f).num());
            hensel = hensel_lift_cubic(f, seed, pi, cfg);
        }
        result = expand_with(series ? &*series : nullptr, hensel ? &*hensel : nullptr);
    } else {
        std::cerr << "expand-generic: --char must be 0, 2, or 3\n";
        return 1;
    }

    if (format == "json") {
        std::ostringstream os;
        os << "{\"char\":" << characteristic_in << ",\"form\":\"" << form << "\",\"order\":"
           << order << ",\"pi\":\"" << json_escape(result.pi) << "\"";
        auto emit_coeffs = [&](const char* key, const std::vector<std::string>& cs) {
            os << ",\"" << key << "\":[";
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (i) os << ",";
                os << "\"" << json_escape(cs[i]) << "\"";
            }
            os << "]";
        };
        if (!result.series_coeffs.empty()) emit_coeffs("series", result.series_coeffs);
        if (!result.hensel_coeffs.empty()) emit_coeffs("hensel", result.hensel_coeffs);
        if (result.both) {
            os << ",\"levels\":[";
            for (std::size_t i = 0; i < result.equal.size(); ++i) {
                if (i) os << ",";
                os << (result.equal[i] ? "true" : "false");
            }
            os << "],\"congruent\":" << (result.congruent ? "true" : "false");
        }
        os << "}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "pi = " << result.pi << "\n";
        for (std::size_t i = 0; i < result.series_coeffs.size(); ++i)
            std::cout << "series  pi^" << i << ": " << result.series_coeffs[i] << "\n";
        for (std::size_t i = 0; i < result.hensel_coeffs.size(); ++i)
            std::cout << "hensel  pi^" << i << ": " << result.hensel_coeffs[i] << "\n";
        if (result.both) {
            for (std::size_t i = 0; i < result.equal.size(); ++i)
                std::cout << "level " << i << ": "
                          << (result.equal[i] ? "identical" : "different representative") << "\n";
            std::cout << "congruent mod pi^" << (order + 1) << ": "
                      << (result.congruent ? "yes" : "NO") << "\n";
        }
    }
    if (result.both && !result.congruent) return 3;
    return 0;
}

// ---------------------------------------------------------------- factor

int cmd_factor_quartic(int order, const std::string& format) {
    using F = RationalFunction<Rational>;
    auto vars = VarSet::make({"c", "d", "e"});
    DepressedQuartic<F> g{F::variable(vars, 0, Rational(0)), F::variable(vars, 1, Rational(0)),
                          F::variable(vars, 2, Rational(0))};
    LiftConfig cfg{order, 0};
    RamifiedQuadratic<Rational> fac = ramified_factor(g, cfg);

    // the constructor verified divisibility and ramification; recompute
    // the witnesses for the report
    bool disc_r_ramified = fac.r_discriminant().valuation_lower_bound().at_least(1);
    bool disc_u_unit = !is_zero(fac.u_discriminant().coeff(0));

    auto coeff_strings = [&](const DiscAdicElement<Rational>& x) {
        std::vector<std::string> out;
        for (int k = 0; k <= x.order(); ++k) out.push_back(x.coeff(k).str());
        return out;
    };
    auto size_stats = [&](const DiscAdicElement<Rational>& x) {
        std::size_t terms = 0;
        int degree = 0;
        for (int k = 0; k <= x.order(); ++k) {
            terms += x.coeff(k).num().terms().size() + x.coeff(k).den().terms().size();
            degree = std::max({degree, x.coeff(k).num().degree(), x.coeff(k).den().degree()});
        }
        return std::pair<std::size_t, int>(terms, degree);
    };

    if (format == "json") {
        std::ostringstream os;
        os << "{\"order\":" << order << ",\"pi\":\"" << json_escape(fac.s.pi().str()) << "\"";
        auto emit = [&](const char* key, const DiscAdicElement<Rational>& x) {
            os << ",\"" << key << "\":[";
            auto cs = coeff_strings(x);
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (i) os << ",";
                os << "\"" << json_escape(cs[i]) << "\"";
            }
            os << "]";
            auto [terms, degree] = size_stats(x);
            os << ",\"" << key << "_size\":{\"terms\":" << terms << ",\"max_degree\":" << degree
               << "}";
        };
        emit("s", fac.s);
        emit("const_term", fac.const_term);
        emit("u0", fac.u0);
        os << ",\"divides\":true,\"disc_r_ramified\":" << (disc_r_ramified ? "true" : "false")
           << ",\"disc_u_unit\":" << (disc_u_unit ? "true" : "false") << "}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "r(t) = t^2 - s*t + r0 over pi = " << fac.s.pi().str() << "\n";
        std::cout << "s  = " << fac.s.str() << "\n";
        std::cout << "r0 = " << fac.const_term.str() << "\n";
        std::cout << "u(t) = t^2 + s*t + u0, u0 = " << fac.u0.str() << "\n";
        std::cout << "g = r*u mod pi^" << (order + 1) << ": yes\n";
        std::cout << "disc(r) ramified: " << (disc_r_ramified ? "yes" : "NO")
                  << ", disc(u) unit: " << (disc_u_unit ? "yes" : "NO") << "\n";
    }
    return (disc_r_ramified && disc_u_unit) ? 0 : 3;
}

// ---------------------------------------------------------------- census

int cmd_census(const std::string& mode, double h, long samples, std::uint64_t seed, int grid,
               bool curves, bool quartic, const std::string& format) {
    CensusConfig cfg;
    cfg.height_mode = mode == "max" ? HeightMode::max_height : HeightMode::naive_height;
    cfg.h = h;
    cfg.samples = samples;
    cfg.rng_seed = seed;

    if (grid > 0) {
        QuiltData quilt = quilt_data(cfg, grid);
        if (curves) {
            std::cout << "curve_id,p,q\n";
            for (const auto& c : quilt.curves)
                std::cout << c.curve_id << "," << fmt(c.p) << "," << fmt(c.q) << "\n";
        } else {
            std::cout << "p,q,label\n";
            for (const auto& row : quilt.rows)
                std::cout << fmt(row.p) << "," << fmt(row.q) << "," << region_name(row.label)
                          << "\n";
        }
        return 0;
    }

    if (quartic) {
        QuarticCensus qc = quartic_census_sample(cfg);
        std::ostringstream os;
        os << "{\"h\":" << fmt(cfg.h) << ",\"samples\":" << cfg.samples << ",\"seed\":"
           << cfg.rng_seed << ",\"excluded_small_d\":" << qc.excluded_small_d << ",\"per_scale\":[";
        for (int i = 0; i < 3; ++i) {
            const auto& entry = qc.per_scale[i];
            if (i) os << ",";
            os << "{\"m\":" << fmt(entry.scale_m) << ",\"tested\":" << entry.tested
               << ",\"convergent_positive\":" << entry.convergent_positive
               << ",\"fraction\":" << fmt(entry.fraction) << "}";
        }
        os << "]}";
        std::cout << os.str() << "\n";
        return 0;
    }

    RegionAreas areas = region_areas(cfg);
    if (format == "json") {
        std::ostringstream os;
        os << "{\"mode\":\"" << mode << "\",\"h\":" << fmt(cfg.h) << ",\"samples\":" << cfg.samples
           << ",\"seed\":" << cfg.rng_seed << ",\"regions\":[";
        for (int i = 0; i < 4; ++i) {
            const auto& r = areas.regions[i];
            if (i) os << ",";
            os << "{\"label\":\"" << region_name(r.label) << "\",\"analytic\":" << fmt(r.analytic)
               << ",\"mc\":" << fmt(r.mc) << ",\"stderr\":" << fmt(r.std_error)
               << ",\"hits\":" << r.hits << "}";
        }
        os << "],\"trinomial_convergence\":{\"analytic\":"
           << fmt(areas.regions[0].analytic + areas.regions[1].analytic)
           << ",\"mc\":" << fmt(areas.regions[0].mc + areas.regions[1].mc) << "}"
           << ",\"boundary_skipped\":" << areas.boundary_skipped << "}";
        std::cout << os.str() << "\n";
    } else {
        for (const auto& r : areas.regions)
            std::cout << region_name(r.label) << ": analytic=" << fmt(r.analytic)
                      << " mc=" << fmt(r.mc) << " stderr=" << fmt(r.std_error) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- identities

int cmd_verify_identities(bool all, const std::vector<std::string>& names, int order,
                          const std::string& ring, const std::string& format) {
    std::vector<IdentityReport> reports;
    if (all || names.empty()) {
        reports = verify_all_identities(order);
    } else {
        for (const auto& name : names)
            reports.push_back(verify_identity(IdentityId::parse(name), order, RingId::parse(ring)));
    }
    bool ok = true;
    if (format == "json") {
        std::ostringstream os;
        os << "{\"order\":" << order << ",\"identities\":[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            if (i) os << ",";
            os << "{\"identity\":\"" << json_escape(r.identity) << "\",\"ring\":\"" << r.ring
               << "\",\"ok\":" << (r.ok ? "true" : "false");
            if (!r.ok)
                os << ",\"first_mismatch\":" << r.first_mismatch << ",\"lhs\":\""
                   << json_escape(r.lhs_value) << "\",\"rhs\":\"" << json_escape(r.rhs_value)
                   << "\"";
            os << "}";
            ok = ok && r.ok;
        }
        os << "],\"all_ok\":" << (ok ? "true" : "false") << "}";
        std::cout << os.str() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.identity << " over " << r.ring << " through order " << r.order << ": "
                      << (r.ok ? "ok" : "FAIL") << "\n";
            if (!r.ok)
                std::cout << "  first mismatch at z^" << r.first_mismatch << ": " << r.lhs_value
                          << " vs " << r.rhs_value << "\n";
            ok = ok && r.ok;
        }
    }
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"series solutions of cubic polynomials in the discriminant"};
    app.require_subcommand(1);

    // solve-cubic
    auto* solve = app.add_subcommand("solve-cubic", "numeric root of a real cubic");
    double p = 0, q = 0, c1 = 0, c2 = 0, c3 = 0, tol = 1e-12;
    long max_terms = 1000000;
    std::string method = "auto", format = "json";
    auto* op = solve->add_option("--p", p, "depressed coefficient p");
    auto* oq = solve->add_option("--q", q, "depressed coefficient q");
    auto* oc1 = solve->add_option("--c1", c1, "t^2 coefficient");
    auto* oc2 = solve->add_option("--c2", c2, "t coefficient");
    auto* oc3 = solve->add_option("--c3", c3, "constant coefficient");
    solve->add_option("--method", method, "discriminant|trinomial|trig|oracle|auto");
    solve->add_option("--tol", tol, "series stopping tolerance");
    solve->add_option("--max-terms", max_terms, "series term budget");
    solve->add_option("--format", format, "json|text");

    // expand-generic
    auto* expand = app.add_subcommand("expand-generic", "symbolic pi-adic root expansion");
    int characteristic_in = 0, order = 4;
    std::string form = "depressed", engine = "series", eformat = "text";
    expand->add_option("--char", characteristic_in, "base characteristic: 0, 2, or 3");
    expand->add_option("--order", order, "truncation order N (mod pi^(N+1))");
    expand->add_option("--form", form, "depressed|general");
    expand->add_option("--engine", engine, "series|hensel|both");
    expand->add_option("--format", eformat, "json|text");

    // factor-quartic
    auto* factor = app.add_subcommand("factor-quartic", "ramified quadratic factor of t^4+ct^2+dt+e");
    int forder = 3;
    std::string fformat = "text";
    factor->add_option("--order", forder, "truncation order N");
    factor->add_option("--format", fformat, "json|text");

    // census
    auto* census = app.add_subcommand("census", "convergence-region census");
    census->set_help_flag("--help", "print help"); // frees -h for the spec'd --h
    std::string cmode = "naive", cformat = "json";
    double ch = 10.0;
    long csamples = 1000000;
    std::uint64_t cseed = 7;
    int grid = 0;
    bool curves = false, quartic = false;
    census->add_option("--mode", cmode, "naive|max height ordering");
    census->add_option("--h", ch, "height parameter");
    census->add_option("--samples", csamples, "Monte Carlo sample count");
    census->add_option("--seed", cseed, "RNG seed (recorded in output)");
    census->add_option("--grid", grid, "emit the quilt CSV on an NxN grid instead");
    census->add_flag("--curves", curves, "with --grid: emit the boundary-curve CSV");
    census->add_flag("--quartic", quartic, "run the quartic resolvent census");
    census->add_option("--format", cformat, "json|text");

    // verify-identities
    auto* verify = app.add_subcommand("verify-identities", "check the series identities");
    bool all = false;
    std::vector<std::string> names;
    int vorder = 50;
    std::string vring = "Q", vformat = "text";
    verify->add_flag("--all", all, "run the whole default suite");
    verify->add_option("--identity", names, "identity name, repeatable "
                                            "(disc_cubic_identity, trinomial_shift(n), "
                                            "power_law(n,r), char3_cubic, hypergeometric_match)");
    verify->add_option("--order", vorder, "check through this order");
    verify->add_option("--ring", vring, "Z|Q|F<p> for named identities");
    verify->add_option("--format", vformat, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed())
            return cmd_solve(p, q, op->count() || oq->count(), c1, c2, c3,
                             oc1->count() || oc2->count() || oc3->count(), method, tol, max_terms,
                             format);
        if (expand->parsed()) return cmd_expand(characteristic_in, order, form, engine, eformat);
        if (factor->parsed()) return cmd_factor_quartic(forder, fformat);
        if (census->parsed())
            return cmd_census(cmode, ch, csamples, cseed, grid, curves, quartic, cformat);
        if (verify->parsed()) return cmd_verify_identities(all, names, vorder, vring, vformat);
    } catch (const refusal_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const boundary_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const hensel_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
