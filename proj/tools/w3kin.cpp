/* command-line front end: exact tables and curves for the W3 spin spectrum */

#include <w3kin/checks.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace w3;

namespace {

struct OutputOpts {
    std::string format = "csv";
    std::string out;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o)
{
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "write to a file instead of stdout");
}

void emit(const OutputRecord& rec, const OutputOpts& o)
{
    std::string text = render(rec, o.format);
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw std::invalid_argument("cannot open output file: " + o.out);
    f << text;
}

KacCharge parse_quad(const std::string& s)
{
    std::vector<Rational> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
        parts.push_back(parse_rational(cur));
    if (parts.size() != 4)
        throw std::invalid_argument("expected four comma-separated indices: '" + s + "'");
    return {parts[0], parts[1], parts[2], parts[3]};
}

std::array<double, 3> parse_grid(const std::string& s)
{
    double lo, hi;
    int steps;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || !is.eof())
        throw std::invalid_argument("expected MIN:MAX:STEPS, got '" + s + "'");
    return {lo, hi, double(steps)};
}

ConstraintSpec load_spec(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("cannot read spec file: " + path);
    nlohmann::json j = nlohmann::json::parse(f);

    ConstraintSpec spec;
    std::string mode = j.value("mode", "self");
    if (mode == "self")
        spec.mode = FuseMode::self;
    else if (mode == "conjugate")
        spec.mode = FuseMode::conjugate;
    else
        throw std::invalid_argument("mode must be 'self' or 'conjugate'");

    if (j.contains("q_tilde")) {
        const auto& q = j["q_tilde"];
        spec.q_tilde = q.is_string() ? parse_rational(q.get<std::string>())
                                     : Rational(q.get<long>());
    }
    for (const auto& arr : j.at("rep_pairs")) {
        if (!arr.is_array() || arr.size() != 4)
            throw std::invalid_argument("each rep pair needs four weight coordinates");
        spec.rep_pairs.push_back({Weight{arr[0].get<long>(), arr[1].get<long>()},
                                  Weight{arr[2].get<long>(), arr[3].get<long>()}});
    }
    return spec;
}

std::string family_str(const SpinFamily& f)
{
    auto quad = [](const std::array<Rational, 4>& a) {
        KacCharge c{a[0], a[1], a[2], a[3]};
        return bracket_str(c);
    };
    std::string s = quad(f.point);
    for (size_t i = 0; i < f.dirs.size(); ++i)
        s += " + t" + std::to_string(i + 1) + "*" + quad(f.dirs[i]);
    return s;
}

int run_kac_table(long p, long pp, bool exact, const OutputOpts& o)
{
    RationalModel m(p, pp);
    OutputRecord rec;
    rec.columns = {"field", "q", "h", "w_b"};
    rec.exact = exact;
    for (const auto& f : kac_table(m))
        rec.add_row({bracket_str(f.canonical), long(z3_charge_of(f, m)),
                     h_in_model(f.canonical, m), w_b_in_model(f.canonical, m)});
    emit(rec, o);
    return 0;
}

int run_curves(const std::string& which, const std::string& grid_arg, const OutputOpts& o)
{
    std::array<double, 3> g{};
    if (!grid_arg.empty())
        g = parse_grid(grid_arg);
    else if (which == "virasoro")
        g = {0.5, std::sqrt(2.5), 41};
    else
        g = {0.72, 1.4, 35};
    auto grid = make_grid(g[0], g[1], int(g[2]));

    OutputRecord rec;
    if (which == "virasoro") {
        rec.columns = {"b", "c", "h_spin", "h_eps_potts", "h_eps_on", "h_12", "q_of_b", "n_of_b"};
        for (const auto& r : vir_curves(grid))
            rec.add_row({r.b, r.c, r.h_spin, r.h_eps_potts, r.h_eps_on, r.h_12, r.q_of_b,
                         r.n_of_b});
    } else if (which == "w3-psi") {
        rec.columns = {"b", "c", "h_sigma", "h_psi", "h_psi1", "h_sigma1", "h_sigma2"};
        for (const auto& r : curve_tables(grid))
            rec.add_row({r.b, r.c, r.h_sigma, r.h_psi, r.h_psi1, r.h_sigma1, r.h_sigma2});
    } else { // w3-eps
        rec.columns = {"b", "c", "h_sigma", "h_sigma1", "h_sigma2", "h_eps"};
        for (const auto& r : curve_tables(grid))
            rec.add_row({r.b, r.c, r.h_sigma, r.h_sigma1, r.h_sigma2, r.h_eps});
    }
    emit(rec, o);
    return 0;
}

int run_orbits(const std::string& which, long p, const OutputOpts& o)
{
    KacCharge c = which == "sigma"    ? fields::sigma()
                  : which == "sigma1" ? fields::sigma_prime()
                                      : fields::sigma_second();
    double b = std::sqrt(double(p) / (p + 1));
    OutputRecord rec;
    rec.columns = {"x", "y"};
    for (const auto& pt : orbit_points(c, b))
        rec.add_row({pt.x, pt.y});
    emit(rec, o);
    return 0;
}

int run_spin_search(const std::string& path, const OutputOpts& o)
{
    auto r = solve(load_spec(path));
    OutputRecord rec;
    rec.columns = {"kind", "dim", "field", "class", "h", "w"};
    for (const auto& p : r.points)
        rec.add_row({std::string("point"), 0L, bracket_str(p.charge), to_string(p.cls),
                     p.h.str(), p.w.str()});
    for (const auto& f : r.families)
        rec.add_row({std::string("family"), long(f.piece.dim()), family_str(f),
                     std::string(), std::string(), std::string()});
    emit(rec, o);
    return 0;
}

int run_fusion(const std::string& a, const std::string& b, const std::string& spectrum,
               const std::string& mode, long cutoff, std::vector<long> model,
               const OutputOpts& o)
{
    OutputRecord rec;
    if (!spectrum.empty()) {
        KacCharge alpha = parse_quad(spectrum);
        FuseMode fm = mode == "conjugate" ? FuseMode::conjugate : FuseMode::self;
        rec.columns = {"lam1", "lam2", "mu1", "mu2"};
        for (const auto& [lam, mu] : degenerate_spectrum(alpha, cutoff, fm))
            rec.add_row({to_long(lam.a1), to_long(lam.a2), to_long(mu.a1), to_long(mu.a2)});
    } else if (!model.empty()) {
        if (model.size() != 2)
            throw std::invalid_argument("--model needs two integers");
        RationalModel m(model[0], model[1]);
        auto f1 = make_field(parse_quad(a), m);
        auto f2 = make_field(parse_quad(b), m);
        rec.columns = {"field"};
        for (const auto& g : fuse_in_model(f1, f2, m))
            rec.add_row({bracket_str(g.canonical)});
    } else {
        rec.columns = {"field", "mult"};
        for (const auto& t : fuse_deg_deg(parse_quad(a), parse_quad(b)))
            rec.add_row({bracket_str(t.charge), t.mult});
    }
    emit(rec, o);
    return 0;
}

int run_potts(bool exact, const OutputOpts& o)
{
    OutputRecord rec;
    rec.columns = {"name", "field", "q", "h"};
    rec.exact = exact;
    for (const auto& f : potts_content())
        rec.add_row({std::string(f.name), bracket_str(f.field.canonical), long(f.q), f.h});
    emit(rec, o);
    return 0;
}

int run_check()
{
    auto results = run_check_suite();
    int bad = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[ok]   " : "[FAIL] ") << r.name;
        if (!r.detail.empty())
            std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        bad += !r.pass;
    }
    std::cout << (results.size() - bad) << "/" << results.size() << " checks passed\n";
    return bad == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact kinematics of the spin spectrum of W3 conformal field theory"};
    app.require_subcommand(1);

    /* kac-table */
    long p = 0, pp = 0;
    bool kt_exact = false;
    OutputOpts kt_out;
    auto* kt = app.add_subcommand("kac-table", "degenerate fields of the model M(p, p')");
    kt->add_option("p", p, "first coprime integer")->required()->check(CLI::Range(1L, 1000L));
    kt->add_option("pp", pp, "second coprime integer")->required()->check(CLI::Range(1L, 1000L));
    kt->add_flag("--exact", kt_exact, "print rationals instead of decimals");
    add_output_opts(kt, kt_out);

    /* curves */
    std::string curve_name, grid_arg;
    OutputOpts cv_out;
    auto* cv = app.add_subcommand("curves", "dimension curves as functions of the coupling");
    cv->add_option("name", curve_name, "w3-psi, w3-eps, or virasoro")
        ->required()
        ->check(CLI::IsMember({"w3-psi", "w3-eps", "virasoro"}));
    cv->add_option("--grid", grid_arg, "MIN:MAX:STEPS (inclusive)");
    add_output_opts(cv, cv_out);

    /* orbits */
    std::string orbit_name;
    long orbit_p = 4;
    OutputOpts ob_out;
    auto* ob = app.add_subcommand("orbits", "momentum orbits in the weight plane");
    ob->add_option("field", orbit_name, "sigma, sigma1, or sigma2")
        ->required()
        ->check(CLI::IsMember({"sigma", "sigma1", "sigma2"}));
    ob->add_option("--p", orbit_p, "coupling b^2 = p/(p+1)")->check(CLI::Range(1L, 100L));
    add_output_opts(ob, ob_out);

    /* spin-search */
    std::string spec_path;
    OutputOpts ss_out;
    auto* ss = app.add_subcommand("spin-search", "solve fusion constraints for spin fields");
    ss->add_option("spec", spec_path, "JSON constraint file")->required();
    add_output_opts(ss, ss_out);

    /* fusion */
    std::string fu_a, fu_b, fu_spectrum, fu_mode = "self";
    long fu_cutoff = 4;
    std::vector<long> fu_model;
    OutputOpts fu_out;
    auto* fu = app.add_subcommand("fusion", "fuse degenerate fields or list a spectrum");
    fu->add_option("a", fu_a, "first field, n1,n2,m1,m2");
    fu->add_option("b", fu_b, "second field, n1,n2,m1,m2");
    fu->add_option("--spectrum", fu_spectrum, "list degenerate pairs in the fusion of this field");
    fu->add_option("--mode", fu_mode, "self or conjugate")
        ->check(CLI::IsMember({"self", "conjugate"}));
    fu->add_option("--cutoff", fu_cutoff, "weight cutoff for --spectrum")
        ->check(CLI::Range(0L, 12L));
    fu->add_option("--model", fu_model, "truncate in the model M(p, p')")->expected(2);
    add_output_opts(fu, fu_out);

    /* potts */
    bool po_exact = false;
    OutputOpts po_out;
    auto* po = app.add_subcommand("potts", "named field content of the three-state Potts model");
    po->add_flag("--exact", po_exact, "print rationals instead of decimals");
    add_output_opts(po, po_out);

    /* check */
    app.add_subcommand("check", "run the full invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (kt->parsed())
            return run_kac_table(p, pp, kt_exact, kt_out);
        if (cv->parsed())
            return run_curves(curve_name, grid_arg, cv_out);
        if (ob->parsed())
            return run_orbits(orbit_name, orbit_p, ob_out);
        if (ss->parsed())
            return run_spin_search(spec_path, ss_out);
        if (fu->parsed()) {
            if (fu_spectrum.empty() && (fu_a.empty() || fu_b.empty()))
                throw std::invalid_argument("fusion needs two fields or --spectrum");
            return run_fusion(fu_a, fu_b, fu_spectrum, fu_mode, fu_cutoff, fu_model, fu_out);
        }
        if (po->parsed())
            return run_potts(po_exact, po_out);
        return run_check();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
