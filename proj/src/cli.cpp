#include "phg/cli.hpp"

#include "phg/errors.hpp"
#include "phg/hg_eval.hpp"
#include "phg/kz.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace phg {

namespace {

struct Common {
    std::int64_t p = 5;
    int prec = 6;
    std::string branch = "0";
    bool records = false;

    PrimeContext ctx() const { return PrimeContext::make(p, prec); }
    Branch br() const { return Branch{parse_rational(branch)}; }
    std::string provenance() const {
        return "p=" + std::to_string(p) + " prec=" + std::to_string(prec) + " branch=" + branch;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "prime");
    cmd->add_option("--prec", c.prec, "absolute precision N (work modulo p^N)");
    cmd->add_option("--branch", c.branch, "value of Log(p), rational n/d");
    cmd->add_flag("--records", c.records, "machine-readable line records");
}

std::string flags_str(const HypothesisFlags& f) {
    std::string s;
    for (const auto& [name, ok] : f.named()) {
        if (!s.empty())
            s += ",";
        s += name + ":" + (ok ? "1" : "0");
    }
    return s;
}

int run_eval(const Common& c, const std::string& a, const std::string& b, const std::string& g,
             const std::string& z, std::ostream& out) {
    PrimeContext ctx = c.ctx();
    HGParams params{parse_rational(a), parse_rational(b), parse_rational(g)};
    Rational zq = parse_rational(z);
    Disk disk = classify_disk(zq, ctx.p);
    std::string head = "eval " + c.provenance() + " a=" + a + " b=" + b + " c=" + g + " z=" + z +
                       " disk=" + disk_name(disk) + " flags=" + flags_str(params.flags(ctx.p));
    switch (disk) {
    case Disk::Zero: {
        PAdic v = hg_disk0_eval(params, zq, ctx);
        if (c.records)
            out << head << " value=" << v.render() << "\n";
        else
            out << "disk ]0[ series value:\n  " << v.render() << "\n";
        return kOk;
    }
    case Disk::One: {
        Disk1Eval ev = hg_disk1_eval(params, zq, c.br(), ctx);
        if (c.records) {
            out << head << " value=" << ev.value.render() << " addend1=" << ev.addend1.render()
                << " addend2=" << ev.addend2.render() << " r1=" << ev.r1.render()
                << " r2=" << ev.r2.render() << "\n";
        } else {
            out << "disk ]1[ connection value:\n  value   = " << ev.value.render()
                << "\n  addend1 = " << ev.addend1.render()
                << "\n  addend2 = " << ev.addend2.render() << "\n  r1      = " << ev.r1.render()
                << "\n  r2      = " << ev.r2.render() << "\n";
        }
        return kOk;
    }
    case Disk::Infinity: {
        DiskInftyBasis basis = hg_diskinfty_basis(params, zq, c.br(), ctx);
        if (c.records) {
            out << head << " basis1=" << basis.first.render()
                << " basis2=" << basis.second.render() << "\n";
        } else {
            out << "disk ]infinity[ basis pair (connection constants are fit separately;"
                   " see fit-constants):\n  basis1 = "
                << basis.first.render() << "\n  basis2 = " << basis.second.render() << "\n";
        }
        return kOk;
    }
    default:
        throw unsupported_disk_error(
            "z = " + z + " reduces to a root of unity other than 0, 1, infinity; evaluation "
            "there needs rigid-analytic input data outside this toolkit's scope");
    }
}

int run_gamma(const Common& c, const std::string& x, std::ostream& out) {
    PrimeContext ctx = c.ctx();
    PAdic v = morita_gamma(parse_rational(x), ctx);
    if (c.records)
        out << "gamma " << c.provenance() << " x=" << x << " value=" << v.render() << "\n";
    else
        out << "Gamma_p(" << x << ") = " << v.render() << "\n";
    return kOk;
}

int run_gauss(const Common& c, const std::string& a, const std::string& b, const std::string& g,
              std::ostream& out) {
    PrimeContext ctx = c.ctx();
    HGParams params{parse_rational(a), parse_rational(b), parse_rational(g)};
    GaussRhs rhs = gauss_rhs(params, ctx);
    if (c.records) {
        out << "gauss-rhs " << c.provenance() << " a=" << a << " b=" << b << " c=" << g
            << " flags=" << flags_str(params.flags(ctx.p))
            << " product=" << rhs.product.render()
            << " reciprocal=" << rhs.reciprocal.render() << "\n";
    } else {
        out << "limit product:\n  product    = " << rhs.product.render()
            << "\n  reciprocal = " << rhs.reciprocal.render() << "\n";
    }
    return kOk;
}

int run_radius(const Common& c, const std::string& a, const std::string& b, const std::string& g,
               std::int64_t nmax, std::ostream& out) {
    PrimeContext ctx = c.ctx();
    HGParams params{parse_rational(a), parse_rational(b), parse_rational(g)};
    RadiusReport rep = radius_report(params, ctx, nmax);
    if (c.records) {
        for (const auto& row : rep.rows) {
            out << "radius " << c.provenance() << " a=" << a << " b=" << b << " c=" << g
                << " n=" << row.n << " ord_dn=" << row.ord_coeff.str() << " l_n=" << row.l_n.str()
                << " L_n=" << row.L_n.str() << " m_n=" << row.m_n
                << " partial_S=" << to_string(row.partial_S)
                << " closed_matches=" << (row.closed_matches ? 1 : 0) << "\n";
        }
    } else {
        out << "# radius " << c.provenance() << " a=" << a << " b=" << b << " c=" << g
            << " S_exact_zero=" << (rep.s_zero_exact ? 1 : 0) << "\n";
        out << "n,ord term,l_n,L_n,m_n,partial S\n";
        for (const auto& row : rep.rows)
            out << row.n << "," << row.ord_coeff.str() << "," << row.l_n.str() << ","
                << row.L_n.str() << "," << row.m_n << "," << to_string(row.partial_S) << "\n";
    }
    return kOk;
}

int run_verify(const Common& c, const std::string& check, int wmax, int order,
               std::ostream& out) {
    SeriesCaps caps{wmax, order, wmax};
    auto report = [&](const std::string& name, const TruncSeries& residual) {
        bool ok = residual.is_zero();
        out << "verify " << c.provenance() << " check=" << name << " wmax=" << wmax
            << " order=" << order << " status=" << (ok ? "ok" : "NONZERO");
        if (!ok) {
            auto first = residual.first_nonzero();
            out << " first_monomial=" << first->first.str()
                << " coeff=" << to_string(first->second);
        }
        out << "\n";
        return ok;
    };
    bool all_ok = true;
    if (check == "oi") {
        OiCheck oi = oi_formula_check(caps);
        all_ok &= report("oi_kz_minus_series", oi.kz_minus_series);
        all_ok &= report("oi_series_minus_rhs", oi.series_minus_oi);
    } else if (check == "kz-ode") {
        auto residuals = kz_ode_residual(wmax, caps);
        for (const auto& [word, res] : residuals) {
            if (!res.is_zero())
                all_ok &= report("kz-ode[" + word.str() + "]", res);
        }
        if (all_ok)
            out << "verify " << c.provenance() << " check=kz-ode wmax=" << wmax
                << " order=" << order << " status=ok words=" << residuals.size() << "\n";
    } else if (check == "euler" || check == "kummer01") {
        for (auto& item : identity_checks(caps, /*include_v10=*/false)) {
            bool relevant = (check == "euler") ? (item.name == "euler")
                                               : item.name.starts_with("kummer01");
            if (relevant)
                all_ok &= report(item.name, item.residual);
        }
    } else if (check == "kummer10" || check == "kummerinf1") {
        std::string prefix = (check == "kummer10") ? "v10" : "vinf1";
        for (auto& item : identity_checks(caps, /*include_v10=*/true))
            if (item.name.starts_with(prefix))
                all_ok &= report(item.name, item.residual);
    } else if (check == "mpl-ode") {
        std::string mismatch;
        bool ok = mpl_methods_agree(wmax, caps, &mismatch);
        out << "verify " << c.provenance() << " check=mpl-ode wmax=" << wmax
            << " order=" << order << " status=" << (ok ? "ok" : ("MISMATCH " + mismatch)) << "\n";
        all_ok &= ok;
    } else {
        throw std::invalid_argument(
            "--check: unknown check (expected oi|kz-ode|euler|kummer01|kummer10|kummerinf1|mpl-ode)");
    }
    return all_ok ? kOk : kUsage;
}

int run_fit(const Common& c, const std::string& a, const std::string& b, const std::string& g,
            const std::string& points, std::ostream& out) {
    PrimeContext ctx = c.ctx();
    HGParams params{parse_rational(a), parse_rational(b), parse_rational(g)};
    std::vector<Rational> zs;
    if (points.empty()) {
        for (int i = 1; i <= 3; ++i)
            zs.push_back(1 + Rational(i) * ctx.p);
    } else {
        std::stringstream ss(points);
        std::string tok;
        while (std::getline(ss, tok, ','))
            zs.push_back(parse_rational(tok));
    }
    if (zs.size() < 3)
        throw std::invalid_argument("--points: need at least three sample points");

    std::vector<PAdic> lhs, b1, b2;
    Disk1Eval last{};
    for (const Rational& z : zs) {
        lhs.push_back(PAdic::from_rational(terminating_hg_value(params, z), ctx));
        Disk1Eval ev = hg_disk1_eval(params, z, c.br(), ctx);
        b1.push_back(ev.s1);
        b2.push_back(ev.s2);
        last = ev;
    }
    FitResult fit = fit_connection_constants(lhs, b1, b2);
    std::string head = "fit-constants " + c.provenance() + " a=" + a + " b=" + b + " c=" + g;
    if (c.records) {
        out << head << " c1=" << fit.c1.render() << " c2=" << fit.c2.render()
            << " r1=" << last.r1.render() << " r2=" << last.r2.render();
        for (std::size_t i = 0; i < fit.residuals.size(); ++i)
            out << " residual" << i + 2 << "=" << fit.residuals[i].render();
        out << "\n";
    } else {
        out << "fitted connection constants against the exact terminating value:\n";
        out << "  c1 = " << fit.c1.render() << "\n  c2 = " << fit.c2.render() << "\n";
        out << "  connection-machinery coefficients for comparison:\n";
        out << "  r1 = " << last.r1.render() << "\n  r2 = " << last.r2.render() << "\n";
        for (std::size_t i = 0; i < fit.residuals.size(); ++i)
            out << "  residual at point " << i + 3 << ": " << fit.residuals[i].render() << "\n";
    }
    return kOk;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact p-adic Gauss hypergeometric toolkit"};
    app.require_subcommand(1);

    Common c_eval, c_gamma, c_gauss, c_radius, c_verify, c_fit;
    std::string a, b, g, z, x, check = "oi", points;
    std::int64_t nmax = 100;
    int wmax = 4, order = 8;

    auto* eval = app.add_subcommand("eval", "evaluate on the residue disk selected by z");
    add_common(eval, c_eval);
    eval->add_option("--a", a)->required();
    eval->add_option("--b", b)->required();
    eval->add_option("--c", g)->required();
    eval->add_option("--z", z)->required();

    auto* gamma = app.add_subcommand("gamma", "Morita p-adic gamma via the factorial product");
    add_common(gamma, c_gamma);
    gamma->add_option("--x", x)->required();

    auto* gauss = app.add_subcommand("gauss-rhs", "limit-at-1 gamma product (both orientations)");
    add_common(gauss, c_gauss);
    gauss->add_option("--a", a)->required();
    gauss->add_option("--b", b)->required();
    gauss->add_option("--c", g)->required();

    auto* radius = app.add_subcommand("radius", "disk-0 coefficient-valuation report (CSV)");
    add_common(radius, c_radius);
    radius->add_option("--a", a)->required();
    radius->add_option("--b", b)->required();
    radius->add_option("--c", g)->required();
    radius->add_option("--nmax", nmax);

    auto* verify = app.add_subcommand("verify", "formal-engine identity checks");
    add_common(verify, c_verify);
    verify->add_option("--check", check)->required();
    verify->add_option("--wmax", wmax);
    verify->add_option("--order", order);

    auto* fit = app.add_subcommand("fit-constants",
                                   "fit connection constants of a terminating instance on ]1[");
    add_common(fit, c_fit);
    fit->add_option("--a", a)->required();
    fit->add_option("--b", b)->required();
    fit->add_option("--c", g)->required();
    fit->add_option("--points", points, "comma-separated rational sample points");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream err;
        int code = app.exit(e, err, err);
        out << err.str();
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (eval->parsed())
            return run_eval(c_eval, a, b, g, z, out);
        if (gamma->parsed())
            return run_gamma(c_gamma, x, out);
        if (gauss->parsed())
            return run_gauss(c_gauss, a, b, g, out);
        if (radius->parsed())
            return run_radius(c_radius, a, b, g, nmax, out);
        if (verify->parsed())
            return run_verify(c_verify, check, wmax, order, out);
        if (fit->parsed())
            return run_fit(c_fit, a, b, g, points, out);
    } catch (const hypothesis_error& e) {
        out << "error: " << e.what() << "\n";
        return kHypothesisViolation;
    } catch (const unsupported_disk_error& e) {
        out << "error: unsupported disk: " << e.what() << "\n";
        return kUnsupportedDisk;
    } catch (const precision_error& e) {
        out << "error: precision exhausted: " << e.what() << "\n";
        return kPrecisionExhausted;
    } catch (const std::invalid_argument& e) {
        out << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace phg
