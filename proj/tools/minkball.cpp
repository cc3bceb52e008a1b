// Command-line front end: critical determinants, critical lattices, packing
// densities, admissibility verification, determinant search, and dyadic
// towers for planar l_p balls.
//
// Exit codes: 0 success, 1 verification-negative, 2 usage error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minkball/critical.hpp"
#include "minkball/lattice.hpp"
#include "minkball/oracle.hpp"
#include "minkball/record.hpp"
#include "minkball/tower.hpp"

namespace {

using namespace minkball;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string vec_json(const Point2& v) {
    return "[" + format_double(v.x()) + "," + format_double(v.y()) + "]";
}

std::string coeff_json(const Eigen::Vector2i& c) {
    return "[" + std::to_string(c.x()) + "," + std::to_string(c.y()) + "]";
}

// temp file + rename so interrupted runs never leave partial tables
void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open " + tmp + " for writing");
        os << content;
        os.flush();
        if (!os) {
            std::remove(tmp.c_str());
            throw IoError("write failed for " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename " + tmp + " to " + path);
    }
}

std::string render_table(const std::vector<CriticalData>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << csv_header() << "\n";
        for (const CriticalData& d : rows) os << to_csv_row(d) << "\n";
    } else {
        os << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << to_json(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
        os << "]\n";
    }
    return os.str();
}

// "auto" follows the branch picked by critical_determinant
Lattice2 branch_lattice(Exponent p, const std::string& branch, std::string& resolved) {
    if (branch == "zero" ||
        (branch == "auto" && critical_determinant(p).branch == Branch::Sigma)) {
        resolved = "zero";
        return lambda0(p);
    }
    resolved = "one";
    return lambda1(p);
}

std::string report_json(double p, const std::string& branch, double shrink,
                        const AdmissibilityReport& rep) {
    std::ostringstream os;
    os << "{\"p\":" << format_double(p) << ",\"branch\":\"" << branch
       << "\",\"shrink\":" << format_double(shrink)
       << ",\"admissible\":" << (rep.admissible ? "true" : "false")
       << ",\"boundary_pairs\":" << rep.boundary_pairs
       << ",\"coeff_bound\":" << coeff_json(rep.coeff_bound)
       << ",\"tol\":" << format_double(rep.tol) << ",\"violations\":[";
    for (std::size_t i = 0; i < rep.violations.size(); ++i) {
        const Violation& v = rep.violations[i];
        os << (i ? "," : "") << "{\"coeffs\":" << coeff_json(v.coeffs)
           << ",\"point\":" << vec_json(v.point)
           << ",\"functional\":" << format_double(v.functional) << "}";
    }
    os << "]}";
    return os.str();
}

int run(CLI::App& app, int argc, char** argv) {
    double p_value = 2.0;
    std::string format = "json";
    const auto format_check = CLI::IsMember({"json", "csv"});

    auto* eval = app.add_subcommand("eval", "closed-form record for one exponent");
    eval->add_option("--p", p_value, "exponent p in [1, 64]")->required();
    eval->add_option("--format", format, "output format")->check(format_check);

    double t_min = 1.0, t_max = 3.0;
    int t_count = 101;
    std::string out_path;
    auto* table = app.add_subcommand("table", "records over a uniform grid of exponents");
    table->add_option("--min", t_min, "grid start")->required();
    table->add_option("--max", t_max, "grid end")->required();
    table->add_option("--count", t_count, "number of grid points")->required();
    table->add_option("--format", format, "output format")->check(format_check);
    table->add_option("--out", out_path,
                      "output file (written atomically); stdout if omitted");

    double tol = 1e-10;
    auto* p0cmd = app.add_subcommand("p0", "crossover exponent where the branches meet");
    p0cmd->add_option("--tol", tol, "bracket width tolerance (>= 1e-12)");

    std::string branch = "auto";
    const auto branch_check = CLI::IsMember({"auto", "zero", "one"});
    auto* lattice = app.add_subcommand("lattice", "critical lattice basis");
    lattice->add_option("--p", p_value, "exponent p in [1, 64]")->required();
    lattice->add_option("--branch", branch, "lattice branch")->check(branch_check);

    double verify_tol = 1e-9, shrink = 1.0;
    auto* verify = app.add_subcommand("verify", "admissibility and boundary-contact check");
    verify->add_option("--p", p_value, "exponent p in [1, 64]")->required();
    verify->add_option("--branch", branch, "lattice branch")->check(branch_check);
    verify->add_option("--tol", verify_tol, "boundary tolerance in [1e-12, 1e-6]");
    verify->add_option("--shrink", shrink, "scale the basis before checking (test aid)");

    int grid = 512, refine = 40;
    auto* search = app.add_subcommand("search", "minimal admissible determinant search");
    search->add_option("--p", p_value, "exponent p in [1, 64]")->required();
    search->add_option("--grid", grid, "t1 grid size (>= 64)");
    search->add_option("--refine", refine, "golden-section iterations (>= 20)");

    int levels = 4;
    std::string direction = "direct";
    auto* tower = app.add_subcommand("tower", "dyadic tower of domains and lattices");
    tower->add_option("--p", p_value, "exponent p in [1, 64]")->required();
    tower->add_option("--levels", levels, "highest level m (<= 16)");
    tower->add_option("--direction", direction, "tower direction")
        ->check(CLI::IsMember({"direct", "inverse"}));

    app.parse(argc, argv);

    if (eval->parsed()) {
        const CriticalData d = critical_determinant(Exponent(p_value));
        if (format == "csv")
            std::cout << csv_header() << "\n" << to_csv_row(d) << "\n";
        else
            std::cout << to_json(d) << "\n";
        return 0;
    }

    if (table->parsed()) {
        if (!(t_min >= 1.0 && t_min < t_max && t_max <= kMaxExponent))
            throw std::invalid_argument("table: requires 1 <= min < max <= 64");
        if (t_count < 2 || t_count > 100000)
            throw std::invalid_argument("table: count must lie in [2, 100000]");
        std::vector<CriticalData> rows;
        rows.reserve(t_count);
        for (int i = 0; i < t_count; ++i) {
            const double p = i == t_count - 1
                                 ? t_max
                                 : t_min + (i * (t_max - t_min)) / (t_count - 1);
            rows.push_back(critical_determinant(Exponent(p)));
        }
        const std::string body = render_table(rows, format);
        if (out_path.empty())
            std::cout << body;
        else
            write_atomic(out_path, body);
        return 0;
    }

    if (p0cmd->parsed()) {
        const PZero pz = p_zero(tol);
        std::cout << "{\"value\":" << format_double(pz.value)
                  << ",\"bracket_lo\":" << format_double(pz.bracket_lo)
                  << ",\"bracket_hi\":" << format_double(pz.bracket_hi)
                  << ",\"residual\":" << format_double(pz.residual) << "}\n";
        return 0;
    }

    if (lattice->parsed()) {
        std::string resolved;
        const Lattice2 lat = branch_lattice(Exponent(p_value), branch, resolved);
        std::cout << "{\"p\":" << format_double(p_value) << ",\"branch\":\"" << resolved
                  << "\",\"b1\":" << vec_json(lat.b1()) << ",\"b2\":" << vec_json(lat.b2())
                  << ",\"det\":" << format_double(lat.det()) << "}\n";
        return 0;
    }

    if (verify->parsed()) {
        if (!(shrink > 0.0)) throw std::invalid_argument("verify: shrink must be > 0");
        std::string resolved;
        Lattice2 lat = branch_lattice(Exponent(p_value), branch, resolved);
        if (shrink != 1.0) lat = Lattice2(shrink * lat.b1(), shrink * lat.b2());
        const AdmissibilityReport rep =
            admissibility(lat, DyadicDomain(Exponent(p_value)), verify_tol);
        std::cout << report_json(p_value, resolved, shrink, rep) << "\n";
        return rep.admissible ? 0 : 1;
    }

    if (search->parsed()) {
        const SearchResult sr = min_det_search(Exponent(p_value), grid, refine);
        std::cout << "{\"p\":" << format_double(sr.p) << ",\"grid_size\":" << sr.grid_size
                  << ",\"delta_hat\":" << format_double(sr.delta_hat)
                  << ",\"closed_form\":" << format_double(sr.closed_form)
                  << ",\"abs_gap\":" << format_double(sr.abs_gap)
                  << ",\"best\":{\"t1\":" << format_double(sr.best.t1)
                  << ",\"t2\":" << format_double(sr.best.t2)
                  << ",\"det\":" << format_double(sr.best.det)
                  << ",\"admissible\":" << (sr.best.admissible ? "true" : "false")
                  << ",\"b1\":" << vec_json(sr.best.lattice.b1())
                  << ",\"b2\":" << vec_json(sr.best.lattice.b2()) << "}}\n";
        return 0;
    }

    // tower
    const Direction dir = direction == "direct" ? Direction::Direct : Direction::Inverse;
    const TowerReport rep = build_tower(Exponent(p_value), levels, dir);
    std::ostringstream os;
    os << "{\"p\":" << format_double(rep.p) << ",\"direction\":\"" << to_string(rep.direction)
       << "\",\"limit_label\":\"" << json_escape(rep.limit_label)
       << "\",\"lattice_limit_label\":\"" << json_escape(rep.lattice_limit_label)
       << "\",\"levels\":[";
    for (std::size_t i = 0; i < rep.levels.size(); ++i) {
        const TowerLevel& lv = rep.levels[i];
        os << (i ? "," : "") << "{\"m\":" << lv.m << ",\"det\":" << format_double(lv.det)
           << ",\"volume\":" << format_double(lv.volume)
           << ",\"b1\":" << vec_json(lv.lattice.b1())
           << ",\"b2\":" << vec_json(lv.lattice.b2()) << "}";
    }
    os << "]}";
    std::cout << os.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical determinants and optimal lattice packings of planar l_p balls"};
    app.require_subcommand(1);
    try {
        return run(app, argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
