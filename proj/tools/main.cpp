#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paulikit/complementarity.hpp"
#include "paulikit/io.hpp"
#include "paulikit/measurement.hpp"
#include "paulikit/spectral.hpp"

namespace {

using namespace paulikit;

std::string fd(double v) { return io::format_double(v, 6); }

std::string fc(Cplx z) {
    std::string out = fd(z.real());
    out += z.imag() < 0 ? "-" : "+";
    out += fd(std::abs(z.imag())) + "i";
    return out;
}

std::string fdir(const BlochDirection& d) {
    return "(" + fd(d.x1()) + ", " + fd(d.x2()) + ", " + fd(d.x3()) + ")";
}

// Error messages must say which flag carried the offending value.
BlochDirection direction_flag(const std::string& flag, const std::string& text, bool normalize) {
    try {
        return io::parse_direction(text, normalize);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

void require_tol_flag(double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("--tol: must be a positive real");
    }
}

void print_matrix(std::ostream& os, const std::string& name, const Matrix2c& m) {
    os << name << " = [ " << fc(m.a) << "  " << fc(m.b) << " ]\n";
    os << std::string(name.size(), ' ') << "   [ " << fc(m.c) << "  " << fc(m.d) << " ]\n";
}

int run_check_pair(const std::string& a_text, const std::string& b_text, double tol,
                   bool normalize, bool json_out) {
    require_tol_flag(tol);
    const BlochDirection alpha = direction_flag("--a", a_text, normalize);
    const BlochDirection beta = direction_flag("--b", b_text, normalize);
    const ComplementarityReport r = check_pair_exhaustive(alpha, beta, tol);
    if (json_out) {
        std::cout << io::dump_json(io::pair_report_json(r)) << "\n";
    } else {
        std::cout << "alpha = " << fdir(r.alpha) << "\n";
        std::cout << "beta  = " << fdir(r.beta) << "\n";
        std::cout << "<alpha,beta> = " << fd(r.inner_product) << "   tol = " << fd(r.tol) << "\n\n";
        std::cout << "s1        s2        trace       target      deviation\n";
        for (const SubsetPairTrace& e : r.entries) {
            std::ostringstream row;
            row << e.s1.label() << std::string(10 - e.s1.label().size(), ' ')
                << e.s2.label() << std::string(10 - e.s2.label().size(), ' ');
            std::string t = fd(e.trace_value);
            row << t << std::string(t.size() < 12 ? 12 - t.size() : 2, ' ');
            t = fd(e.target);
            row << t << std::string(t.size() < 12 ? 12 - t.size() : 2, ' ') << fd(e.deviation);
            std::cout << row.str() << "\n";
        }
        std::cout << "\nmax deviation = " << fd(r.max_deviation) << "\n";
        std::cout << "verdict: " << (r.verdict ? "complementary" : "not complementary") << "\n";
    }
    return r.verdict ? 0 : 1;
}

int run_check_set(const std::string& vectors_path, const std::vector<std::string>& literals,
                  double tol, bool normalize, bool json_out) {
    require_tol_flag(tol);
    std::vector<BlochDirection> dirs;
    if (!vectors_path.empty()) {
        try {
            dirs = io::read_directions_file(vectors_path, normalize);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("--vectors: " + std::string(e.what()));
        }
    }
    for (const std::string& lit : literals) {
        dirs.push_back(direction_flag("--v", lit, normalize));
    }
    const SetReport r = check_set(dirs, tol);
    if (json_out) {
        std::cout << io::dump_json(io::set_report_json(r)) << "\n";
    } else {
        std::cout << "directions: " << r.directions.size() << "\n";
        for (std::size_t i = 0; i < r.directions.size(); ++i) {
            std::cout << "  [" << i << "] " << fdir(r.directions[i]) << "\n";
        }
        std::cout << "\ni   j   <a_i,a_j>    max_dev      pair\n";
        for (const SetPairEntry& p : r.pairs) {
            std::ostringstream row;
            row << p.i << "   " << p.j << "   ";
            std::string t = fd(p.report.inner_product);
            row << t << std::string(t.size() < 13 ? 13 - t.size() : 2, ' ');
            t = fd(p.report.max_deviation);
            row << t << std::string(t.size() < 13 ? 13 - t.size() : 2, ' ')
                << (p.report.verdict ? "ok" : "FAIL");
            std::cout << row.str() << "\n";
        }
        if (r.verdict) {
            std::cout << "\nverdict: complementary set\n";
        } else {
            const SetPairEntry& p = r.pairs[*r.first_failure];
            std::cout << "\nverdict: not complementary, first failure at pair (" << p.i << ", "
                      << p.j << ")\n";
        }
    }
    return r.verdict ? 0 : 1;
}

int run_pvm(const std::string& dir_text, bool normalize, bool json_out) {
    const BlochDirection dir = direction_flag("--dir", dir_text, normalize);
    if (json_out) {
        std::cout << io::dump_json(io::pvm_json(dir)) << "\n";
        return 0;
    }
    const SpectralMeasure m = pvm(dir);
    const CVec2 psi_plus = eigenvector(dir, +1);
    const CVec2 psi_minus = eigenvector(dir, -1);
    const Matrix2c& ep = m.e_plus.matrix();
    const Matrix2c& em = m.e_minus.matrix();
    std::cout << "direction = " << fdir(dir) << "\n\n";
    print_matrix(std::cout, "E({+1})", ep);
    print_matrix(std::cout, "E({-1})", em);
    std::cout << "psi_plus  = (" << fc(psi_plus.u) << ", " << fc(psi_plus.w) << ")\n";
    std::cout << "psi_minus = (" << fc(psi_minus.u) << ", " << fc(psi_minus.w) << ")\n\n";
    std::cout << "residuals:\n";
    std::cout << "  ||P - P*||   plus " << fd(max_abs_diff(ep, ep.adjoint())) << "  minus "
              << fd(max_abs_diff(em, em.adjoint())) << "\n";
    std::cout << "  ||P^2 - P||  plus " << fd(max_abs_diff(ep * ep, ep)) << "  minus "
              << fd(max_abs_diff(em * em, em)) << "\n";
    std::cout << "  ||E+ + E- - I|| = " << fd(max_abs_diff(ep + em, Matrix2c::identity()))
              << "\n";
    std::cout << "  ||E+ E-||       = " << fd(max_abs(ep * em)) << "\n";
    return 0;
}

int run_triple(const std::string& first_text, std::uint64_t seed, bool normalize, bool json_out) {
    std::optional<BlochDirection> first;
    if (!first_text.empty()) first = direction_flag("--first", first_text, normalize);
    const std::array<BlochDirection, 3> triple = orthonormal_triple(first, seed);
    if (json_out) {
        std::cout << io::dump_json(io::triple_json(seed, triple)) << "\n";
        return 0;
    }
    std::cout << "seed = " << seed << "\n";
    for (std::size_t i = 0; i < 3; ++i) {
        std::cout << "a" << i + 1 << " = " << fdir(triple[i]) << "\n";
    }
    double gram_residual = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            gram_residual = std::max(
                gram_residual, std::abs(triple[i].dot(triple[j]) - (i == j ? 1.0 : 0.0)));
        }
    }
    std::cout << "gram residual = " << fd(gram_residual) << "\n";
    return 0;
}

int run_simulate(const std::string& a_text, const std::string& b_text, std::uint64_t shots,
                 std::uint64_t seed, unsigned partitions, bool normalize, bool json_out) {
    const BlochDirection alpha = direction_flag("--a", a_text, normalize);
    const BlochDirection beta = direction_flag("--b", b_text, normalize);
    const JointHistogram h = simulate(alpha, beta, shots, seed, partitions);
    if (json_out) {
        std::cout << io::dump_json(io::simulate_json(alpha, beta, seed, h)) << "\n";
        return 0;
    }
    const ConditionalTable exact = exact_conditionals(alpha, beta);
    std::cout << "alpha = " << fdir(alpha) << "\n";
    std::cout << "beta  = " << fdir(beta) << "\n";
    std::cout << "shots = " << h.shots << "   seed = " << seed << "\n\n";
    std::cout << "counts (rows a, columns b):\n";
    std::cout << "        b=-1      b=+1\n";
    for (const int a : {-1, +1}) {
        std::cout << "a=" << (a > 0 ? "+1" : "-1") << "  ";
        for (const int b : {-1, +1}) {
            std::string c = std::to_string(h.count(a, b));
            std::cout << c << std::string(c.size() < 10 ? 10 - c.size() : 2, ' ');
        }
        std::cout << "\n";
    }
    bool have_empirical = true;
    ConditionalTable emp{};
    try {
        emp = empirical_conditionals(h);
    } catch (const std::invalid_argument&) {
        have_empirical = false;  // one first-outcome branch never fired
    }
    auto row = [](const std::string& label, const std::string& emp_text,
                  const std::string& exact_text) {
        std::cout << label << std::string(label.size() < 16 ? 16 - label.size() : 2, ' ')
                  << emp_text << std::string(emp_text.size() < 12 ? 12 - emp_text.size() : 2, ' ')
                  << exact_text << "\n";
    };
    row("", "empirical", "exact");
    for (const int a : {-1, +1}) {
        const std::string an = a > 0 ? "+1" : "-1";
        row("P(a=" + an + ")", have_empirical ? fd(emp.p_first(a)) : "n/a", fd(exact.p_first(a)));
    }
    for (const int a : {-1, +1}) {
        for (const int b : {-1, +1}) {
            const std::string an = a > 0 ? "+1" : "-1";
            const std::string bn = b > 0 ? "+1" : "-1";
            row("P(b=" + bn + "|a=" + an + ")",
                have_empirical && emp.p_first(a) > 0 ? fd(emp.p_cond(b, a)) : "n/a",
                fd(exact.p_cond(b, a)));
        }
    }
    return 0;
}

int run_sweep(int steps, double tol, const std::string& out_path) {
    require_tol_flag(tol);
    if (steps < 1) throw std::invalid_argument("--steps: must be >= 1");
    const std::vector<SweepRow> rows = sweep_rows(steps, tol);
    const std::string csv = io::sweep_csv(rows);
    if (out_path.empty()) {
        std::cout << csv;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file \"" + out_path + "\"");
    out << csv;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral measures and complementarity for two-level observables"};
    app.require_subcommand(1);

    std::string a_text, b_text, dir_text, first_text, vectors_path, out_path;
    std::vector<std::string> literals;
    double tol = kDefaultTol;
    bool normalize = false;
    bool json_out = false;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    unsigned partitions = 1;
    int steps = 180;

    auto* cp = app.add_subcommand("check-pair", "complementarity of two sharp directions");
    cp->add_option("--a", a_text, "first direction \"x,y,z\"")->required();
    cp->add_option("--b", b_text, "second direction \"x,y,z\"")->required();
    cp->add_option("--tol", tol, "deviation tolerance");
    cp->add_flag("--normalize", normalize, "rescale inputs to unit length");
    cp->add_flag("--json", json_out, "emit a JSON report");

    auto* cs = app.add_subcommand("check-set", "pairwise complementarity of a direction set");
    cs->add_option("--vectors", vectors_path, "file with one \"x,y,z\" per line");
    cs->add_option("--v", literals, "direction literal, repeatable");
    cs->add_option("--tol", tol, "deviation tolerance");
    cs->add_flag("--normalize", normalize, "rescale inputs to unit length");
    cs->add_flag("--json", json_out, "emit a JSON report");

    auto* pv = app.add_subcommand("pvm", "spectral projectors of a direction");
    pv->add_option("--dir", dir_text, "direction \"x,y,z\"")->required();
    pv->add_flag("--normalize", normalize, "rescale input to unit length");
    pv->add_flag("--json", json_out, "emit a JSON report");

    auto* tr = app.add_subcommand("triple", "orthonormal triple of directions");
    tr->add_option("--first", first_text, "fix the first direction \"x,y,z\"");
    tr->add_option("--seed", seed, "generator seed")->required();
    tr->add_flag("--normalize", normalize, "rescale --first to unit length");
    tr->add_flag("--json", json_out, "emit a JSON report");

    auto* si = app.add_subcommand("simulate", "sequential two-measurement sampling");
    si->add_option("--a", a_text, "first direction \"x,y,z\"")->required();
    si->add_option("--b", b_text, "second direction \"x,y,z\"")->required();
    si->add_option("--shots", shots, "number of repetitions")->required();
    si->add_option("--seed", seed, "generator seed")->required();
    si->add_option("--partitions", partitions, "parallel partitions (same counts as 1)");
    si->add_flag("--normalize", normalize, "rescale inputs to unit length");
    si->add_flag("--json", json_out, "emit a JSON report");

    auto* sw = app.add_subcommand("sweep", "deviation versus angle, CSV output");
    sw->add_option("--steps", steps, "grid steps over [0, pi]")->required();
    sw->add_option("--tol", tol, "deviation tolerance");
    sw->add_option("--out", out_path, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(cp)) return run_check_pair(a_text, b_text, tol, normalize, json_out);
        if (app.got_subcommand(cs))
            return run_check_set(vectors_path, literals, tol, normalize, json_out);
        if (app.got_subcommand(pv)) return run_pvm(dir_text, normalize, json_out);
        if (app.got_subcommand(tr)) return run_triple(first_text, seed, normalize, json_out);
        if (app.got_subcommand(si))
            return run_simulate(a_text, b_text, shots, seed, partitions, normalize, json_out);
        if (app.got_subcommand(sw)) return run_sweep(steps, tol, out_path);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
