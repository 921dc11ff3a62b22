#pragma once

// Command-line front end.  run() is separate from main() so tests can drive
// it with captured streams.
//
// Exit status: 0 when every requested check passed, 1 when a check failed,
// 2 for usage errors and violated hypotheses, 3 when the enumeration ceiling
// (EQHILB_MAX_BOXES) is exceeded.

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqhilb/eqhilb.hpp"

namespace eqhilb::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceLimit = 3 };

struct Params {
    std::string format = "text";
    std::string render = "none";
    int a = 1;
    int b = 1;
    int n = 1;
    int r = 0;
    int k = 1;
    int n_from = 1;
    int n_to = 1;
    int holdout = 0;  // 0: command default
    int period = 1;
    int degree = 1;
    bool reduce = false;
    bool inverse = false;
    std::string partition;
    std::string samples;
    int cell = 24;
    bool row0_top = false;
};

namespace detail {

inline SvgOptions svg_options(const Params& p) {
    SvgOptions o;
    o.cell = p.cell;
    o.row0_at_bottom = !p.row0_top;
    return o;
}

inline std::string csv_join(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) s += ',';
        const bool quote = cells[k].find(',') != std::string::npos;
        s += quote ? "\"" + cells[k] + "\"" : cells[k];
    }
    return s + "\n";
}

inline std::string bool_word(bool ok) { return ok ? "PASS" : "FAIL"; }

inline int cmd_enumerate(const Params& p, std::ostream& out) {
    const GroupParams g(p.a, p.b, p.n);
    const auto parts = enumerate_balanced(g, p.r, EnumerationLimits::from_environment());
    if (p.render == "svg") {
        out << render_svg_gallery(g, parts, svg_options(p));
        return kOk;
    }
    if (p.format == "json") {
        json arr = json::array();
        for (const auto& lam : parts)
            arr.push_back(json{{"partition", lam}, {"beta", betti_statistic(g, lam)}});
        out << json{{"group", g}, {"r", p.r}, {"count", parts.size()}, {"partitions", arr}}.dump(2)
            << "\n";
    } else if (p.format == "csv") {
        out << "partition,beta\n";
        for (const auto& lam : parts)
            out << csv_join({to_string(lam), std::to_string(betti_statistic(g, lam))});
    } else {
        out << "B^" << p.r << " for " << to_string(g) << ": " << parts.size() << " partitions\n";
        for (const auto& lam : parts) {
            out << to_string(lam) << "  beta=" << betti_statistic(g, lam) << "\n";
            if (p.render == "ascii") out << render_ascii_colored(g, lam) << "\n";
        }
    }
    return kOk;
}

inline int cmd_betti(const Params& p, std::ostream& out) {
    const GroupParams g(p.a, p.b, p.n);
    const Partition lam = parse_partition(p.partition);
    const int beta = betti_statistic(g, lam);
    const auto inv = invariant_arrows(g, lam);
    if (p.render == "svg") {
        out << render_svg(g, lam, inv, svg_options(p));
        return kOk;
    }
    if (p.format == "json") {
        out << json{{"group", g},
                    {"partition", lam},
                    {"r", *is_balanced(g, lam)},
                    {"beta", beta},
                    {"invariant_arrows", inv},
                    {"cotangent_weights", cotangent_weights(g, lam)}}
                   .dump(2)
            << "\n";
    } else if (p.format == "csv") {
        out << "kind,box_i,box_j,w1,w2\n";
        for (const auto& a : inv)
            out << csv_join({a.kind == ArrowKind::D ? "D" : "U", std::to_string(a.box.i),
                             std::to_string(a.box.j), std::to_string(a.w1()), std::to_string(a.w2())});
    } else {
        out << to_string(lam) << " in " << to_string(g) << ": beta=" << beta << "\n";
        for (const auto& a : inv)
            out << "  " << (a.kind == ArrowKind::D ? 'd' : 'u') << "(" << a.box.i << "," << a.box.j
                << ") weight (" << a.w1() << "," << a.w2() << ")\n";
        if (p.render == "ascii") out << render_ascii_colored(g, lam);
    }
    return kOk;
}

inline int cmd_poincare(const Params& p, std::ostream& out) {
    const GroupParams g(p.a, p.b, p.n);
    const LPolynomial cls = l_class(g, p.r, EnumerationLimits::from_environment());
    if (p.format == "json") {
        out << json{{"group", g},
                    {"r", p.r},
                    {"class", cls},
                    {"poincare", poincare_string(cls)},
                    {"betti", cls.betti_numbers()},
                    {"euler", cls.euler()}}
                   .dump(2)
            << "\n";
    } else if (p.format == "csv") {
        std::vector<std::string> head{"a", "b", "n", "r", "euler"};
        std::vector<std::string> row{std::to_string(p.a), std::to_string(p.b), std::to_string(p.n),
                                     std::to_string(p.r), std::to_string(cls.euler())};
        for (int k = 0; k <= 4 * p.r; ++k) {
            head.push_back("b_" + std::to_string(k));
            row.push_back(std::to_string(k % 2 == 0 ? cls.coeff(k / 2) : 0));
        }
        out << csv_join(head) << csv_join(row);
    } else {
        out << "[H] = " << to_string(cls) << "\n"
            << "P(z) = " << poincare_string(cls) << "\n"
            << "euler = " << cls.euler() << "\n";
    }
    return kOk;
}

inline int cmd_psi(const Params& p, std::ostream& out) {
    const GroupParams g(p.a, p.b, p.n);
    const Partition input = parse_partition(p.partition);
    Partition lam = input;
    Partition mu = input;
    if (p.inverse) {
        lam = psi_inverse(g, p.r, mu);
        if (psi_inverse_reference(g, p.r, mu, EnumerationLimits::from_environment()) != lam)
            throw InvariantViolation("fast and reference inverses disagree on " + to_string(mu));
    } else {
        mu = psi(g, p.r, lam);
    }
    const auto ctx = make_split(g, p.r, lam);
    const GroupParams shifted = ctx.g.with_order(ctx.g.n() + ctx.g.a() * ctx.g.b());
    const int beta_lam = betti_statistic(ctx.g, lam);
    const int beta_mu = betti_statistic(shifted, mu);
    if (p.render == "svg") {
        out << render_svg(shifted, mu, invariant_arrows(shifted, mu), svg_options(p));
        return kOk;
    }
    if (p.format == "json") {
        out << json{{"group", ctx.g},
                    {"shifted_group", shifted},
                    {"r", p.r},
                    {"anchor", ctx.anchor},
                    {"lambda", lam},
                    {"psi", mu},
                    {"beta", beta_lam},
                    {"beta_psi", beta_mu}}
                   .dump(2)
            << "\n";
    } else if (p.format == "csv") {
        out << "lambda,psi,beta,beta_psi\n"
            << csv_join({to_string(lam), to_string(mu), std::to_string(beta_lam), std::to_string(beta_mu)});
    } else {
        out << to_string(lam) << " -> " << to_string(mu) << "  (anchor (" << ctx.anchor.i << ","
            << ctx.anchor.j << "), beta " << beta_lam << " -> " << beta_mu << ")\n";
        if (p.render == "ascii")
            out << render_ascii_colored(ctx.g, lam) << "\n" << render_ascii_colored(shifted, mu);
    }
    return beta_lam == beta_mu ? kOk : kCheckFailed;
}

inline int cmd_verify_period(const Params& p, std::ostream& out) {
    const auto rep = verify_period(GroupParams(p.a, p.b, std::max(p.n_from, 1)), p.r, p.n_from,
                                   p.n_to, EnumerationLimits::from_environment());
    if (p.format == "json") {
        out << period_report_json(rep).dump(2) << "\n";
    } else if (p.format == "csv") {
        out << "n,n_shifted,class,class_shifted,classes_equal,bijective,beta_preserved,inverse_agrees\n";
        for (const auto& e : rep.entries)
            out << csv_join({std::to_string(e.n), std::to_string(e.n + rep.period),
                             to_string(e.class_at_n), to_string(e.class_at_shifted),
                             e.classes_equal ? "1" : "0", e.bijective ? "1" : "0",
                             e.beta_preserved ? "1" : "0", e.inverse_agrees ? "1" : "0"});
    } else {
        for (const auto& e : rep.entries) {
            out << "n=" << e.n << " vs n=" << e.n + rep.period << ": " << to_string(e.class_at_n)
                << " | " << to_string(e.class_at_shifted) << "  " << bool_word(e.passed()) << "\n";
            for (const auto& f : e.failures) out << "  " << f << "\n";
        }
        out << bool_word(rep.passed()) << "\n";
    }
    return rep.passed() ? kOk : kCheckFailed;
}

inline std::string poly_string(const RationalPoly& poly) {
    if (poly.empty()) return "unsampled";
    std::string s;
    for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k) {
        if (poly[k] == 0 && !(k == 0 && s.empty())) continue;
        if (!s.empty()) s += " + ";
        s += "(" + poly[k].str() + ")";
        if (k >= 1) s += "n";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

inline int report_fit(const Params& p, const QuasipolynomialFit& fit, const json& extra,
                      std::ostream& out) {
    if (p.format == "json") {
        out << extra.dump(2) << "\n";
    } else if (p.format == "csv") {
        out << "residue,samples,validated,observed_degree,valid_from,polynomial\n";
        for (const auto& c : fit.classes)
            out << csv_join({std::to_string(c.residue), std::to_string(c.samples),
                             c.validated ? "1" : "0", std::to_string(c.observed_degree),
                             std::to_string(c.valid_from),
                             poly_string(fit.qp.polys[static_cast<std::size_t>(c.residue)])});
    } else {
        for (const auto& c : fit.classes) {
            out << "n = " << c.residue << " mod " << fit.qp.period << ": "
                << poly_string(fit.qp.polys[static_cast<std::size_t>(c.residue)]) << "  from n="
                << c.valid_from << ", degree " << c.observed_degree << "  " << bool_word(c.validated)
                << "\n";
        }
        out << bool_word(fit.validated()) << "\n";
    }
    return fit.validated() ? kOk : kCheckFailed;
}

inline int cmd_verify_qpoly(const Params& p, std::ostream& out) {
    const auto rep = verify_quasipolynomial(p.a, p.b, p.r, p.n_from, p.n_to, p.reduce,
                                            p.holdout > 0 ? p.holdout : 2,
                                            EnumerationLimits::from_environment());
    return report_fit(p, rep.fit, quasipolynomial_report_json(rep), out);
}

inline std::vector<Sample> parse_samples(const std::string& text) {
    std::vector<Sample> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw PreconditionError(Hypothesis::InvalidArgument, "samples are n:count pairs");
        out.push_back({std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1))});
    }
    return out;
}

inline int cmd_fit_quasipoly(const Params& p, std::ostream& out) {
    const auto fit = fit_quasipolynomial(parse_samples(p.samples), p.period, p.degree,
                                         p.holdout > 0 ? p.holdout : 1);
    json classes = json::array();
    for (const auto& c : fit.classes)
        classes.push_back(json{{"residue", c.residue},
                               {"validated", c.validated},
                               {"observed_degree", c.observed_degree},
                               {"valid_from", c.valid_from},
                               {"held_out", c.held_out}});
    return report_fit(p, fit,
                      json{{"quasipolynomial", fit.qp}, {"classes", classes}, {"passed", fit.validated()}},
                      out);
}

inline int cmd_core_quotient(const Params& p, std::ostream& out) {
    const Partition lam = parse_partition(p.partition);
    const auto cq = runners(lam, p.n);
    const json j = core_quotient_json(lam, p.n, cq);
    const bool holds = j["size_identity"]["holds"].get<bool>();
    if (p.format == "json") {
        out << j.dump(2) << "\n";
    } else if (p.format == "csv") {
        out << "partition,n,core,quotient,frame,canonical_quotient,abacus\n"
            << csv_join({to_string(lam), std::to_string(p.n), to_string(cq.core),
                         to_string(cq.quotient), std::to_string(cq.frame),
                         to_string(canonical_quotient(cq)), to_abacus(lam).word_string()});
    } else {
        out << "abacus    " << to_string(to_abacus(lam)) << "\n"
            << "core      " << to_string(cq.core) << "\n"
            << "quotient  " << to_string(cq.quotient) << "  (frame " << cq.frame
            << ", canonical " << to_string(canonical_quotient(cq)) << ")\n"
            << "sizes     " << lam.size() << " = " << cq.core.size() << " + " << p.n << "*"
            << cq.quotient.total_size() << "\n";
        if (p.render == "ascii") out << render_ascii(lam);
    }
    return holds ? kOk : kCheckFailed;
}

inline int cmd_hj(const Params& p, std::ostream& out) {
    const auto terms = hj_expand(p.n, p.k);
    if (p.format == "json") {
        out << json{{"n", p.n}, {"k", p.k}, {"expansion", terms}, {"length", terms.size()}}.dump(2)
            << "\n";
    } else if (p.format == "csv") {
        std::string t;
        for (std::size_t x = 0; x < terms.size(); ++x) t += (x ? " " : "") + std::to_string(terms[x]);
        out << "n,k,length,expansion\n" << csv_join({std::to_string(p.n), std::to_string(p.k),
                                                     std::to_string(terms.size()), t});
    } else {
        out << p.n << "/" << p.k << " = [[";
        for (std::size_t x = 0; x < terms.size(); ++x) out << (x ? "," : "") << terms[x];
        out << "]]  length " << terms.size() << "\n";
    }
    return kOk;
}

inline int cmd_check_star(const Params& p, std::ostream& out) {
    if (!p.partition.empty()) {
        const bool ok = satisfies_star(parse_partition(p.partition), p.a, p.b);
        if (p.format == "json")
            out << json{{"partition", parse_partition(p.partition)}, {"a", p.a}, {"b", p.b},
                        {"satisfies_star", ok}}.dump(2) << "\n";
        else
            out << (ok ? "true" : "false") << "\n";
        return ok ? kOk : kCheckFailed;
    }
    const auto rep = check_rectangle_bijection(GroupParams(p.a, p.b, p.n), p.r,
                                               EnumerationLimits::from_environment());
    if (p.format == "json") {
        out << rectangle_report_json(rep).dump(2) << "\n";
    } else if (p.format == "csv") {
        out << "a,b,n,r,source_count,target_count,bijective\n"
            << csv_join({std::to_string(p.a), std::to_string(p.b), std::to_string(p.n),
                         std::to_string(p.r), std::to_string(rep.source_count),
                         std::to_string(rep.target_count), rep.bijective() ? "1" : "0"});
    } else {
        out << "|B^" << p.r << "_" << to_string(rep.g) << "| = " << rep.source_count
            << ", star-condition targets = " << rep.target_count << "  "
            << bool_word(rep.bijective()) << "\n";
    }
    return rep.bijective() ? kOk : kCheckFailed;
}

inline int cmd_normalize(const Params& p, std::ostream& out) {
    const GroupParams in(p.a, p.b, p.n);
    const GroupParams norm = normalize_group(in);
    if (p.format == "json")
        out << json{{"input", in}, {"normalized", norm}}.dump(2) << "\n";
    else if (p.format == "csv")
        out << "a,b,n,a_norm,b_norm,n_norm\n"
            << csv_join({std::to_string(in.a()), std::to_string(in.b()), std::to_string(in.n()),
                         std::to_string(norm.a()), std::to_string(norm.b()), std::to_string(norm.n())});
    else
        out << to_string(in) << " -> " << to_string(norm) << "\n";
    return kOk;
}

inline std::string hypothesis_name(Hypothesis h) {
    switch (h) {
        case Hypothesis::NotCoprimeWeights: return "coprimality";
        case Hypothesis::NonPositiveOrder: return "n >= 1";
        case Hypothesis::WrongSign: return "sign of a*b";
        case Hypothesis::ThresholdNotMet: return "n > r*a*b";
        case Hypothesis::Unbalanced: return "balanced partition";
        case Hypothesis::NotACore: return "n-core";
        case Hypothesis::InsufficientSamples: return "sample count";
        case Hypothesis::InvalidArgument: break;
    }
    return "argument";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of equivariant Hilbert schemes of points via balanced partitions",
                 "eqhilb"};
    app.require_subcommand(1);
    app.fallthrough();
    Params p;
    app.add_option("--format", p.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--render", p.render, "Diagram rendering")
        ->check(CLI::IsMember({"none", "ascii", "svg"}));
    app.add_option("--cell", p.cell, "SVG cell size in pixels")->check(CLI::PositiveNumber);
    app.add_flag("--row0-top", p.row0_top, "Draw row 0 at the top in SVG output");

    auto group = [&](CLI::App* sub) {
        sub->add_option("--a", p.a, "weight of x")->required();
        sub->add_option("--b", p.b, "weight of y")->required();
    };
    using Handler = std::function<int(const Params&, std::ostream&)>;
    std::vector<std::pair<CLI::App*, Handler>> handlers;

    auto* s = app.add_subcommand("enumerate", "List the balanced partitions of r*n with their Betti statistic");
    group(s);
    s->add_option("--n", p.n)->required();
    s->add_option("--r", p.r)->required();
    handlers.emplace_back(s, detail::cmd_enumerate);

    s = app.add_subcommand("betti", "Betti statistic and invariant arrows of one partition");
    group(s);
    s->add_option("--n", p.n)->required();
    s->add_option("--partition", p.partition)->required();
    handlers.emplace_back(s, detail::cmd_betti);

    s = app.add_subcommand("poincare", "Class in powers of L, Poincare polynomial and Euler characteristic");
    group(s);
    s->add_option("--n", p.n)->required();
    s->add_option("--r", p.r)->required();
    handlers.emplace_back(s, detail::cmd_poincare);

    s = app.add_subcommand("psi", "Apply the stabilization bijection (ab > 0, n > rab)");
    group(s);
    s->add_option("--n", p.n)->required();
    s->add_option("--r", p.r)->required();
    s->add_option("--partition", p.partition)->required();
    s->add_flag("--inverse", p.inverse, "Map from n+ab back to n");
    handlers.emplace_back(s, detail::cmd_psi);

    s = app.add_subcommand("verify-period", "Check periodicity of the class in n with period ab");
    group(s);
    s->add_option("--r", p.r)->required();
    s->add_option("--n-from", p.n_from)->required();
    s->add_option("--n-to", p.n_to)->required();
    handlers.emplace_back(s, detail::cmd_verify_period);

    s = app.add_subcommand("verify-qpoly", "Fit and validate a quasipolynomial count in n (ab < 0)");
    group(s);
    s->add_option("--r", p.r)->required();
    s->add_option("--n-from", p.n_from)->required();
    s->add_option("--n-to", p.n_to)->required();
    s->add_flag("--reduce", p.reduce, "Count orders not coprime to a, b via normalization");
    s->add_option("--holdout", p.holdout, "Held-out samples per residue class (default 2)");
    handlers.emplace_back(s, detail::cmd_verify_qpoly);

    s = app.add_subcommand("fit-quasipoly", "Fit a quasipolynomial to n:count samples");
    s->add_option("--samples", p.samples, "Comma-separated n:count pairs")->required();
    s->add_option("--period", p.period)->required();
    s->add_option("--degree", p.degree)->required();
    s->add_option("--holdout", p.holdout, "Held-out samples per residue class (default 1)");
    handlers.emplace_back(s, detail::cmd_fit_quasipoly);

    s = app.add_subcommand("core-quotient", "n-core and n-quotient of a partition");
    s->add_option("--n", p.n)->required();
    s->add_option("--partition", p.partition)->required();
    handlers.emplace_back(s, detail::cmd_core_quotient);

    s = app.add_subcommand("hj", "Hirzebruch-Jung continued fraction of n/k");
    s->add_option("--n", p.n)->required();
    s->add_option("--k", p.k)->required();
    handlers.emplace_back(s, detail::cmd_hj);

    s = app.add_subcommand("check-star", "Rectangle-map bijection check, or the star condition for --partition");
    group(s);
    s->add_option("--n", p.n);
    s->add_option("--r", p.r);
    s->add_option("--partition", p.partition);
    handlers.emplace_back(s, detail::cmd_check_star);

    s = app.add_subcommand("normalize", "Remove pseudoreflections from (a,b;n)");
    group(s);
    s->add_option("--n", p.n)->required();
    handlers.emplace_back(s, detail::cmd_normalize);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        for (auto& [sub, handler] : handlers)
            if (sub->parsed()) return handler(p, out);
    } catch (const PreconditionError& e) {
        err << "precondition violated (" << detail::hypothesis_name(e.hypothesis())
            << "): " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return kCheckFailed;
    }
    err << "no command given\n";
    return kUsage;
}

}  // namespace eqhilb::cli
