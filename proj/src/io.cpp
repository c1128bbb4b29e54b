#include "paulikit/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace paulikit::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_component(std::string_view text, const char* axis) {
    const std::string_view t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw std::invalid_argument(std::string("could not parse ") + axis + " component \"" +
                                    std::string(text) + "\" as a decimal real");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(axis) + " component \"" + std::string(text) +
                                    "\" is not finite");
    }
    return value;
}

void dump_into(std::string& out, const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += json(key).dump();
                out += ':';
                dump_into(out, value);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ',';
                first = false;
                dump_into(out, value);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: {
            // Signed zero would reparse as the integer 0 and break the
            // canonical round trip, so both zeros render as "0".
            const double v = j.get<double>();
            out += v == 0.0 ? "0" : format_double(v, 17);
            break;
        }
        case json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case json::value_t::null:
            out += "null";
            break;
        default:
            out += j.dump();  // strings, with escaping
            break;
    }
}

json conditional_table_json(const ConditionalTable& t) {
    json cond;
    json marg;
    for (const int a : {-1, +1}) {
        marg[a > 0 ? "+" : "-"] = t.p_first(a);
        for (const int b : {-1, +1}) {
            const std::string key = std::string(a > 0 ? "+" : "-") + (b > 0 ? "+" : "-");
            cond[key] = t.p_cond(b, a);
        }
    }
    return json{{"marginal", marg}, {"conditional", cond}};
}

}  // namespace

std::string format_double(double v, int sig_digits) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, v);
    return buf;
}

std::string dump_json(const nlohmann::json& j) {
    std::string out;
    dump_into(out, j);
    return out;
}

Vec3 parse_vec3(std::string_view text) {
    const std::size_t first = text.find(',');
    const std::size_t second = first == std::string_view::npos ? first : text.find(',', first + 1);
    if (second == std::string_view::npos || text.find(',', second + 1) != std::string_view::npos) {
        throw std::invalid_argument("expected a direction \"x,y,z\" with exactly three components, "
                                    "got \"" + std::string(text) + "\"");
    }
    return {parse_component(text.substr(0, first), "x"),
            parse_component(text.substr(first + 1, second - first - 1), "y"),
            parse_component(text.substr(second + 1), "z")};
}

BlochDirection parse_direction(std::string_view text, bool normalize) {
    const Vec3 v = parse_vec3(text);
    return normalize ? BlochDirection::normalized(v) : BlochDirection::from_unit(v);
}

std::vector<BlochDirection> read_directions(std::istream& in, bool normalize) {
    std::vector<BlochDirection> dirs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        try {
            dirs.push_back(parse_direction(body, normalize));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return dirs;
}

std::vector<BlochDirection> read_directions_file(const std::string& path, bool normalize) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open vector file \"" + path + "\"");
    }
    return read_directions(in, normalize);
}

json direction_json(const BlochDirection& d) { return json::array({d.x1(), d.x2(), d.x3()}); }

json complex_json(Cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix2c& m) {
    return json::array({json::array({complex_json(m.a), complex_json(m.b)}),
                        json::array({complex_json(m.c), complex_json(m.d)})});
}

json subset_json(SpectralSubset s) {
    json out = json::array();
    if (s.contains_minus) out.push_back(-1);
    if (s.contains_plus) out.push_back(1);
    return out;
}

json pair_report_json(const ComplementarityReport& r) {
    json entries = json::array();
    for (const SubsetPairTrace& e : r.entries) {
        entries.push_back(json{{"s1", subset_json(e.s1)},
                               {"s2", subset_json(e.s2)},
                               {"trace", e.trace_value},
                               {"target", e.target},
                               {"deviation", e.deviation}});
    }
    return json{{"schema", kSchemaVersion},
                {"command", "check-pair"},
                {"alpha", direction_json(r.alpha)},
                {"beta", direction_json(r.beta)},
                {"tol", r.tol},
                {"inner_product", r.inner_product},
                {"max_deviation", r.max_deviation},
                {"verdict", r.verdict},
                {"entries", entries}};
}

json set_report_json(const SetReport& r) {
    json dirs = json::array();
    for (const BlochDirection& d : r.directions) dirs.push_back(direction_json(d));
    json pairs = json::array();
    for (const SetPairEntry& p : r.pairs) {
        pairs.push_back(json{{"i", p.i},
                             {"j", p.j},
                             {"inner_product", p.report.inner_product},
                             {"max_deviation", p.report.max_deviation},
                             {"verdict", p.report.verdict}});
    }
    json failure = nullptr;
    if (r.first_failure) {
        const SetPairEntry& p = r.pairs[*r.first_failure];
        failure = json{{"i", p.i}, {"j", p.j}};
    }
    return json{{"schema", kSchemaVersion},
                {"command", "check-set"},
                {"directions", dirs},
                {"tol", r.tol},
                {"verdict", r.verdict},
                {"first_failure", failure},
                {"pairs", pairs}};
}

json pvm_json(const BlochDirection& dir) {
    const SpectralMeasure m = pvm(dir);
    const CVec2 psi_plus = eigenvector(dir, +1);
    const CVec2 psi_minus = eigenvector(dir, -1);
    const Matrix2c& ep = m.e_plus.matrix();
    const Matrix2c& em = m.e_minus.matrix();
    const json residuals{
        {"hermitian_plus", max_abs_diff(ep, ep.adjoint())},
        {"idempotent_plus", max_abs_diff(ep * ep, ep)},
        {"hermitian_minus", max_abs_diff(em, em.adjoint())},
        {"idempotent_minus", max_abs_diff(em * em, em)},
        {"completeness", max_abs_diff(ep + em, Matrix2c::identity())},
        {"orthogonality", max_abs(ep * em)},
    };
    return json{{"schema", kSchemaVersion},
                {"command", "pvm"},
                {"direction", direction_json(dir)},
                {"e_plus", matrix_json(ep)},
                {"e_minus", matrix_json(em)},
                {"psi_plus", json::array({complex_json(psi_plus.u), complex_json(psi_plus.w)})},
                {"psi_minus", json::array({complex_json(psi_minus.u), complex_json(psi_minus.w)})},
                {"residuals", residuals}};
}

json triple_json(std::uint64_t seed, const std::array<BlochDirection, 3>& triple) {
    double gram_residual = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const double target = i == j ? 1.0 : 0.0;
            gram_residual = std::max(gram_residual,
                                     std::abs(triple[i].dot(triple[j]) - target));
        }
    }
    json dirs = json::array();
    for (const BlochDirection& d : triple) dirs.push_back(direction_json(d));
    return json{{"schema", kSchemaVersion},
                {"command", "triple"},
                {"seed", seed},
                {"directions", dirs},
                {"gram_residual", gram_residual}};
}

json simulate_json(const BlochDirection& alpha, const BlochDirection& beta, std::uint64_t seed,
                   const JointHistogram& h) {
    json counts;
    for (const int a : {-1, +1}) {
        for (const int b : {-1, +1}) {
            const std::string key = std::string(a > 0 ? "+" : "-") + (b > 0 ? "+" : "-");
            counts[key] = h.count(a, b);
        }
    }
    return json{{"schema", kSchemaVersion},
                {"command", "simulate"},
                {"alpha", direction_json(alpha)},
                {"beta", direction_json(beta)},
                {"shots", h.shots},
                {"seed", seed},
                {"counts", counts},
                {"empirical", conditional_table_json(empirical_conditionals(h))},
                {"exact", conditional_table_json(exact_conditionals(alpha, beta))}};
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "theta,inner_product,max_deviation\n";
    for (const SweepRow& r : rows) {
        out += format_double(r.theta, 17) + "," + format_double(r.inner_product, 17) + "," +
               format_double(r.max_deviation, 17) + "\n";
    }
    return out;
}

}  // namespace paulikit::io
