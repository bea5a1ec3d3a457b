#include "biobj/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "biobj/hypervolume.hpp"
#include "biobj/pareto.hpp"
#include "biobj/r2_discrete.hpp"
#include "biobj/r2_exact.hpp"
#include "biobj/reference.hpp"

namespace biobj {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_field(const std::string& field, double& out) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

FrontShape shape_from_name(const std::string& name) {
    if (name == "ideal-point") return FrontShape::IdealPoint;
    if (name == "nadir-point") return FrontShape::NadirPoint;
    if (name == "linear") return FrontShape::Linear;
    if (name == "dtlz1-linear") return FrontShape::Dtlz1Linear;
    if (name == "convex-quadratic") return FrontShape::ConvexQuadratic;
    if (name == "concave-circular") return FrontShape::ConcaveCircular;
    throw std::invalid_argument("unknown shape: " + name);
}

std::vector<ObjectiveVector> shift_all(const std::vector<ObjectiveVector>& pts,
                                       const ObjectiveVector& utopian) {
    std::vector<ObjectiveVector> shifted;
    shifted.reserve(pts.size());
    for (const auto& p : pts) shifted.push_back(shift_to_utopian(p, utopian));
    return shifted;
}

void emit_points_csv(std::ostream& os, const std::vector<ObjectiveVector>& pts, int precision) {
    os << "f1,f2\n";
    for (const auto& p : pts)
        os << format_value(p.f1, precision) << ',' << format_value(p.f2, precision) << '\n';
}

}  // namespace

std::vector<ObjectiveVector> parse_archive(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

    std::vector<ObjectiveVector> rows;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const std::string& raw = lines[i];
        if (trim(raw).empty()) throw ParseError(lineno, "blank row inside the archive");

        const auto comma = raw.find(',');
        if (comma == std::string::npos || raw.find(',', comma + 1) != std::string::npos)
            throw ParseError(lineno, "expected exactly two comma-separated fields");
        const std::string a = trim(raw.substr(0, comma));
        const std::string b = trim(raw.substr(comma + 1));

        double f1 = 0.0, f2 = 0.0;
        if (!parse_field(a, f1)) {
            if (i == 0) continue;  // non-numeric first field on row 1: header, skip
            throw ParseError(lineno, "unparsable number '" + a + "'");
        }
        if (!parse_field(b, f2)) throw ParseError(lineno, "unparsable number '" + b + "'");
        if (!std::isfinite(f1) || !std::isfinite(f2))
            throw ParseError(lineno, "non-finite value");
        rows.push_back({f1, f2});
    }
    if (rows.empty()) throw ParseError(1, "archive contains no data rows");
    return rows;
}

int run_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Bi-objective performance assessment: exact & discretized R2, 2-D hypervolume"};
    app.name("biobj");
    app.require_subcommand(1);

    std::vector<double> utopian{0.0, 0.0};
    std::vector<double> ref;
    std::size_t num_weights = 0;
    std::string shape_name;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> weight_counts;
    std::vector<std::size_t> sizes;
    double tol = 1e-8;
    int precision = 17;
    std::string output_path;
    std::string indicator;

    const auto add_common = [&](CLI::App* sub, bool with_precision) {
        sub->add_option("--output", output_path, "write results to this file instead of stdout");
        if (with_precision)
            sub->add_option("--precision", precision, "significant digits for printed numbers")
                ->check(CLI::Range(1, 17))
                ->capture_default_str();
    };

    CLI::App* cmd_filter = app.add_subcommand(
        "filter", "read a CSV archive on stdin, print its nondominated subset");
    CLI::Option* filter_utopian =
        cmd_filter->add_option("--utopian", utopian, "validate points against this utopian point")
            ->delimiter(',')
            ->expected(2);
    add_common(cmd_filter, true);

    CLI::App* cmd_compute = app.add_subcommand(
        "compute", "read a CSV archive on stdin, compute one indicator of its front");
    cmd_compute->add_option("indicator", indicator, "one of: r2-exact, r2-discrete, hv")
        ->required()
        ->check(CLI::IsMember({"r2-exact", "r2-discrete", "hv"}));
    cmd_compute->add_option("--utopian", utopian, "utopian point to shift by (default 0,0)")
        ->delimiter(',')
        ->expected(2);
    CLI::Option* opt_num_weights = cmd_compute->add_option(
        "--num-weights", num_weights, "uniform weight count for r2-discrete (>= 2)");
    CLI::Option* opt_ref =
        cmd_compute->add_option("--ref", ref, "reference point for hv, original coordinates")
            ->delimiter(',')
            ->expected(2);
    add_common(cmd_compute, true);

    CLI::App* cmd_convergence = app.add_subcommand(
        "convergence", "discrete-vs-exact R2 error table over weight counts");
    cmd_convergence->add_option("--weights", weight_counts, "weight counts, e.g. 10,100,1000")
        ->required()
        ->delimiter(',');
    cmd_convergence->add_option("--utopian", utopian, "utopian point to shift by (default 0,0)")
        ->delimiter(',')
        ->expected(2);
    add_common(cmd_convergence, true);

    CLI::App* cmd_generate =
        app.add_subcommand("generate", "emit a synthetic front or cloud as CSV");
    cmd_generate
        ->add_option("--shape", shape_name,
                     "ideal-point | nadir-point | linear | dtlz1-linear | convex-quadratic | "
                     "concave-circular | bisphere")
        ->required()
        ->check(CLI::IsMember({"ideal-point", "nadir-point", "linear", "dtlz1-linear",
                               "convex-quadratic", "concave-circular", "bisphere"}));
    cmd_generate->add_option("--n", n, "number of points")->required()->check(CLI::PositiveNumber);
    cmd_generate->add_option("--seed", seed, "RNG seed; 0 means even spacing for curve shapes");
    add_common(cmd_generate, true);

    CLI::App* cmd_check = app.add_subcommand(
        "check", "cross-check the closed form against the quadrature oracle on random clouds");
    cmd_check->add_option("--sizes", sizes, "cloud sizes to test, e.g. 10,100")
        ->required()
        ->delimiter(',');
    cmd_check->add_option("--seed", seed, "base RNG seed for the clouds");
    cmd_check->add_option("--tol", tol, "max allowed |closed form - quadrature|")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(cmd_check, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        std::ofstream ofs;
        std::ostream* sink = &out;
        if (!output_path.empty()) {
            ofs.open(output_path);
            if (!ofs) throw std::invalid_argument("cannot open output file: " + output_path);
            sink = &ofs;
        }
        const ObjectiveVector u{utopian[0], utopian[1]};

        if (*cmd_filter) {
            auto pts = parse_archive(in);
            if (filter_utopian->count() > 0)
                for (const auto& p : pts) (void)shift_to_utopian(p, u);  // bound check only
            const Front front = nondominated_filter(std::move(pts));
            emit_points_csv(*sink, front.points(), precision);
        } else if (*cmd_compute) {
            const Front front = nondominated_filter(shift_all(parse_archive(in), u));
            double value = 0.0;
            if (indicator == "r2-exact") {
                value = r2_exact(front);
            } else if (indicator == "r2-discrete") {
                if (opt_num_weights->count() == 0)
                    throw std::invalid_argument("--num-weights is required for r2-discrete");
                if (num_weights < 2)
                    throw std::invalid_argument("--num-weights must be at least 2");
                value = r2_discrete(front.points(), WeightSet::uniform(num_weights));
            } else {
                if (opt_ref->count() == 0) throw std::invalid_argument("--ref is required for hv");
                // hv is translation-invariant: the reference moves with the data.
                value = hv2d(front, {ref[0] - u.f1, ref[1] - u.f2});
            }
            *sink << "indicator,front_size,value\n"
                  << indicator << ',' << front.size() << ',' << format_value(value, precision)
                  << '\n';
        } else if (*cmd_convergence) {
            for (std::size_t c : weight_counts)
                if (c < 2) throw std::invalid_argument("--weights entries must be at least 2");
            const Front front = nondominated_filter(shift_all(parse_archive(in), u));
            const double exact = r2_exact(front);
            *sink << "num_weights,discrete,exact,abs_error\n";
            for (std::size_t c : weight_counts) {
                const double disc = r2_discrete(front.points(), WeightSet::uniform(c));
                *sink << c << ',' << format_value(disc, precision) << ','
                      << format_value(exact, precision) << ','
                      << format_value(std::abs(disc - exact), precision) << '\n';
            }
        } else if (*cmd_generate) {
            const auto pts = shape_name == "bisphere"
                                 ? generate_cloud(n, seed)
                                 : generate_front(shape_from_name(shape_name), n, seed);
            emit_points_csv(*sink, pts, precision);
        } else if (*cmd_check) {
            double max_dev = 0.0;
            bool all_ok = true;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                const Front front = nondominated_filter(generate_cloud(sizes[i], seed + i));
                const double exact = r2_exact(front);
                const QuadratureResult q = quadrature_r2(front.points(), tol);
                const double dev = std::abs(exact - q.value);
                const bool ok = q.converged && dev <= tol;
                max_dev = std::max(max_dev, dev);
                all_ok = all_ok && ok;
                *sink << "size " << sizes[i] << ": exact=" << format_value(exact, 17)
                      << " quadrature=" << format_value(q.value, 17)
                      << " deviation=" << format_value(dev, 3)
                      << (q.converged ? "" : " (quadrature did not converge)")
                      << (ok ? " PASS" : " FAIL") << '\n';
            }
            *sink << "max deviation " << format_value(max_dev, 3) << " (tol "
                  << format_value(tol, 3) << "): " << (all_ok ? "PASS" : "FAIL") << '\n';
            if (!all_ok) return kExitCheckFail;
        }
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitSuccess : kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace biobj
