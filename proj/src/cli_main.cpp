// teich: command-line frontend for the trace-coordinate library.
//
// Every subcommand prints one document (json by default, csv or plot-data
// where the result is a table) to stdout or --output.  Output is
// deterministic for fixed flags, --jobs included; floating point numbers are
// printed with 15 significant digits.

#include "CLI11.hpp"
#include "json.hpp"

#include "fricke/fhs.hpp"
#include "fricke/flat.hpp"
#include "fricke/locus.hpp"
#include "fricke/markoff.hpp"
#include "fricke/spectrum.hpp"
#include "fricke/trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

using namespace fricke;

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// Serializer with a fixed numeric format; nlohmann's own dump would print
// shortest-round-trip doubles instead.
void dump_json(const ordered_json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<size_t>(depth), ' ');
    const std::string pad1(2 * static_cast<size_t>(depth + 1), ' ');
    switch (j.type()) {
    case ordered_json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad1 + ordered_json(key).dump() + ": ";
            dump_json(value, out, depth + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case ordered_json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_structured()) scalars = false;
        out += scalars ? "[" : "[\n";
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += scalars ? ", " : ",\n";
            first = false;
            if (!scalars) out += pad1;
            dump_json(v, out, depth + 1);
        }
        out += scalars ? "]" : "\n" + pad + "]";
        return;
    }
    case ordered_json::value_t::number_float: {
        double v = j.get<double>();
        out += std::isfinite(v) ? fmt(v) : "null";
        return;
    }
    default:
        out += j.dump();
        return;
    }
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct RunConfig {
    std::string format = "json";
    std::string output;
    int jobs = 1;
};

void add_format_options(CLI::App* cmd, const std::shared_ptr<RunConfig>& cfg,
                        bool with_jobs = false) {
    cmd->add_option("--format", cfg->format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plot-data"}))
        ->capture_default_str();
    cmd->add_option("--output", cfg->output, "write to this file instead of stdout");
    if (with_jobs)
        cmd->add_option("--jobs", cfg->jobs, "worker threads (env TEICH_JOBS)")
            ->envname("TEICH_JOBS")
            ->check(CLI::PositiveNumber);
}

void emit(const RunConfig& cfg, const ordered_json& doc,
          const std::optional<Table>& table) {
    std::string text;
    if (cfg.format == "json") {
        dump_json(doc, text, 0);
        text += "\n";
    } else {
        if (!table)
            throw std::domain_error("format '" + cfg.format +
                                    "' is not available for this subcommand");
        std::string sep = cfg.format == "csv" ? "," : " ";
        if (cfg.format == "plot-data") text += "# ";
        for (size_t i = 0; i < table->columns.size(); ++i)
            text += (i ? sep : "") + table->columns[i];
        text += "\n";
        for (const auto& row : table->rows) {
            for (size_t i = 0; i < row.size(); ++i) text += (i ? sep : "") + row[i];
            text += "\n";
        }
    }
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw std::domain_error("cannot open output file " + cfg.output);
    file << text;
}

Slope slope_arg(const std::string& text) {
    bool reduced = false;
    Slope s = parse_slope(text, &reduced);
    if (reduced)
        std::cerr << "warning: slope " << text << " is not primitive, reduced to "
                  << s.str() << "\n";
    return s;
}

std::vector<double> parse_doubles(const std::string& text, size_t n,
                                  const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        try {
            out.push_back(std::stod(item, &used));
        } catch (const std::exception&) {
            throw std::domain_error(std::string("malformed ") + what + ": " + text);
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw std::domain_error(std::string("malformed ") + what + ": " + text);
    }
    if (out.size() != n)
        throw std::domain_error(std::string(what) + " needs " + std::to_string(n) +
                                " comma-separated values: " + text);
    return out;
}

// Point options shared by the subcommands that evaluate at a marked
// structure: either --point x,y,z or a slice coordinate triple
// (--boundary, --leaf, --theta).
struct PointArgs {
    std::string triple;
    double boundary = 0, leaf = 0, theta = 0;
    bool has_leaf = false;

    FrickePoint resolve() const {
        FrickePoint pt;
        if (!triple.empty()) {
            auto v = parse_doubles(triple, 3, "point");
            pt = {v[0], v[1], v[2]};
        } else if (has_leaf) {
            pt = leaf_point(TeichSlice::from_boundary(boundary), leaf, theta);
        } else {
            throw std::domain_error("no point given: use --point or --leaf");
        }
        Validation v = validate(pt);
        if (!v.valid) throw std::domain_error("invalid point: " + v.diagnostic);
        return pt;
    }
};

void add_point_options(CLI::App* cmd, const std::shared_ptr<PointArgs>& args) {
    auto* triple = cmd->add_option("--point", args->triple, "trace triple x,y,z");
    auto* leaf = cmd->add_option_function<double>(
        "--leaf",
        [args](double v) {
            args->leaf = v;
            args->has_leaf = true;
        },
        "leaf coordinate: trace of (1,0) on the slice");
    cmd->add_option("--boundary", args->boundary, "boundary length of the slice")
        ->needs(leaf);
    cmd->add_option("--theta", args->theta, "leaf angle")->needs(leaf);
    leaf->excludes(triple);
}

ordered_json point_json(const FrickePoint& pt) {
    return {{"x", pt.x}, {"y", pt.y}, {"z", pt.z}};
}

ordered_json traces_json(const FhsTraces& t) {
    return {{"a", t.a},       {"b", t.b},       {"c", t.c},       {"d", t.d},
            {"x", t.x},       {"xbar", t.xbar}, {"y", t.y},       {"ybar", t.ybar},
            {"z", t.z},       {"zbar", t.zbar}};
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    try {
        q = mpq_class(text);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational: " + text);
    }
    if (q.get_den() == 0) throw std::domain_error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Subcommands.

void setup_spectrum(CLI::App& app) {
    auto* cmd = app.add_subcommand("spectrum",
                                   "simple length spectrum at a marked structure");
    auto point = std::make_shared<PointArgs>();
    auto cfg = std::make_shared<RunConfig>();
    auto max_trace = std::make_shared<double>(0);
    auto max_length = std::make_shared<double>(0);
    auto tol = std::make_shared<double>(1e-9);
    add_point_options(cmd, point);
    auto* mt = cmd->add_option("--max-trace", *max_trace, "enumerate up to this trace")
                   ->check(CLI::Range(2.0, 1e300));
    auto* ml = cmd->add_option("--max-length", *max_length, "enumerate up to this length")
                   ->check(CLI::PositiveNumber);
    mt->excludes(ml);
    cmd->add_option("--tol", *tol, "multiplicity class tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_options(cmd, cfg, true);
    cmd->callback([=] {
        if (!*max_trace && !*max_length)
            throw std::domain_error("give --max-trace or --max-length");
        FrickePoint pt = point->resolve();
        double l_max = *max_length ? *max_length : length_from_trace(*max_trace);
        auto entries = enumerate_simple(pt, l_max, cfg->jobs);
        auto classes = multiplicity_histogram(pt, l_max, *tol, cfg->jobs);
        ordered_json doc;
        doc["point"] = point_json(pt);
        doc["max_length"] = l_max;
        doc["count"] = entries.size();
        auto& ents = doc["entries"] = ordered_json::array();
        Table table{{"slope", "trace", "length"}, {}};
        for (const auto& e : entries) {
            ents.push_back({{"slope", e.slope.str()},
                            {"trace", e.trace},
                            {"length", e.length}});
            table.rows.push_back({e.slope.str(), fmt(e.trace), fmt(e.length)});
        }
        auto& cls = doc["classes"] = ordered_json::array();
        for (const auto& c : classes) {
            ordered_json members = ordered_json::array();
            for (const auto& s : c.members) members.push_back(s.str());
            cls.push_back({{"length", c.length},
                           {"trace", trace_from_length(c.length)},
                           {"count", c.members.size()},
                           {"members", members}});
        }
        emit(*cfg, doc, table);
    });
}

void setup_locus(CLI::App& app) {
    auto* cmd = app.add_subcommand("locus",
                                   "equal-length locus of two curves in a slice");
    auto cfg = std::make_shared<RunConfig>();
    struct Args {
        std::string alpha, beta;
        double boundary = 0;
        double grid_min = 0, grid_max = 0;
        int grid_count = 20;
        bool geometric = false;
        double tol = 1e-10, theta_cap = 64.0;
    };
    auto a = std::make_shared<Args>();
    cmd->add_option("--alpha", a->alpha, "first curve p/q")->required();
    cmd->add_option("--beta", a->beta, "second curve p/q")->required();
    cmd->add_option("--boundary", a->boundary, "boundary length of the slice")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--grid-min", a->grid_min, "first companion trace (> 2)")
        ->required();
    cmd->add_option("--grid-max", a->grid_max, "last companion trace (> 2)")
        ->required();
    cmd->add_option("--grid-count", a->grid_count, "number of leaves")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--geometric", a->geometric, "space the grid geometrically");
    cmd->add_option("--tol", a->tol, "length residual tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--theta-cap", a->theta_cap, "bracket expansion limit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_options(cmd, cfg, true);
    cmd->callback([=] {
        Slope alpha = slope_arg(a->alpha), beta = slope_arg(a->beta);
        std::vector<double> grid;
        int n = a->grid_count;
        for (int i = 0; i < n; ++i) {
            double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            grid.push_back(a->geometric
                               ? a->grid_min * std::pow(a->grid_max / a->grid_min, t)
                               : a->grid_min + (a->grid_max - a->grid_min) * t);
        }
        TeichSlice slice = TeichSlice::from_boundary(a->boundary);
        LocusPolyline line =
            trace_locus(slice, alpha, beta, grid, a->tol, cfg->jobs, a->theta_cap);
        ordered_json doc;
        doc["boundary"] = a->boundary;
        doc["alpha"] = alpha.str();
        doc["beta"] = beta.str();
        doc["gamma"] = line.gamma.str();
        doc["gamma2"] = line.gamma2.str();
        auto& pts = doc["points"] = ordered_json::array();
        Table table{{"x_of_gamma", "theta", "x", "y", "z"}, {}};
        for (const auto& p : line.points) {
            pts.push_back({{"x_of_gamma", p.x_of_gamma},
                           {"theta", p.theta},
                           {"x", p.point.x},
                           {"y", p.point.y},
                           {"z", p.point.z}});
            table.rows.push_back({fmt(p.x_of_gamma), fmt(p.theta), fmt(p.point.x),
                                  fmt(p.point.y), fmt(p.point.z)});
        }
        emit(*cfg, doc, table);
    });
}

ordered_json triple_json(const MarkoffTriple& t) {
    return ordered_json::array(
        {t.x.get_str(), t.y.get_str(), t.z.get_str()});
}

void setup_markoff(CLI::App& app) {
    auto* cmd = app.add_subcommand("markoff", "Markoff triple enumeration");
    cmd->require_subcommand(1);
    for (bool verify : {true, false}) {
        auto* sub = cmd->add_subcommand(verify ? "verify" : "list",
                                        verify ? "check that no two triples share a maximum"
                                               : "list triples up to a bound");
        auto cfg = std::make_shared<RunConfig>();
        auto max = std::make_shared<std::string>();
        auto norm = std::make_shared<std::string>("classical");
        sub->add_option("--max", *max, "largest maximum to enumerate")->required();
        sub->add_option("--normalization", *norm,
                        "classical (x^2+y^2+z^2=3xyz) or trace (=xyz)")
            ->check(CLI::IsMember({"classical", "trace"}))
            ->capture_default_str();
        add_format_options(sub, cfg);
        sub->callback([=] {
            mpz_class bound;
            try {
                bound = mpz_class(*max);
            } catch (const std::invalid_argument&) {
                throw std::domain_error("malformed integer: " + *max);
            }
            MarkoffForm form =
                *norm == "trace" ? MarkoffForm::trace : MarkoffForm::classical;
            auto triples = enumerate_triples(bound, form);
            ordered_json doc;
            doc["max"] = bound.get_str();
            doc["normalization"] = *norm;
            doc["count"] = triples.size();
            if (verify) {
                auto pairs = find_collisions(triples);
                doc["collisions"] = pairs.size();
                auto& arr = doc["pairs"] = ordered_json::array();
                for (const auto& [p, q] : pairs)
                    arr.push_back(
                        ordered_json::array({triple_json(p), triple_json(q)}));
                emit(*cfg, doc, std::nullopt);
            } else {
                auto& arr = doc["triples"] = ordered_json::array();
                Table table{{"x", "y", "z"}, {}};
                for (const auto& t : triples) {
                    arr.push_back(triple_json(t));
                    table.rows.push_back(
                        {t.x.get_str(), t.y.get_str(), t.z.get_str()});
                }
                emit(*cfg, doc, table);
            }
        });
    }
}

void setup_violations(CLI::App& app) {
    auto* cmd =
        app.add_subcommand("violations",
                           "equal-trace crossings between isometry orbits");
    cmd->require_subcommand(1);
    auto* sub = cmd->add_subcommand(
        "search", "scan the symmetric family for trace crossings");
    auto cfg = std::make_shared<RunConfig>();
    struct Args {
        double t_min = 3.0, t_max = 10.0;
        int cap = 12;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--t-min", a->t_min, "family parameter lower end")
        ->capture_default_str();
    sub->add_option("--t-max", a->t_max, "family parameter upper end")
        ->capture_default_str();
    sub->add_option("--complexity-cap", a->cap, "max |p|+|q| of scanned slopes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_options(sub, cfg);
    sub->callback([=] {
        auto findings = scan_equal_trace(a->cap, a->t_min, a->t_max);
        ordered_json doc;
        doc["t_min"] = a->t_min;
        doc["t_max"] = a->t_max;
        doc["complexity_cap"] = a->cap;
        doc["count"] = findings.size();
        auto& arr = doc["findings"] = ordered_json::array();
        Table table{{"s1", "s2", "t_star", "residual", "orbit_size"}, {}};
        for (const auto& f : findings) {
            ordered_json slopes = ordered_json::array();
            for (const auto& s : f.equal_trace_slopes) slopes.push_back(s.str());
            arr.push_back({{"s1", f.s1.str()},
                           {"s2", f.s2.str()},
                           {"t_star", f.t_star},
                           {"residual", f.residual},
                           {"equal_trace_slopes", slopes}});
            table.rows.push_back({f.s1.str(), f.s2.str(), fmt(f.t_star),
                                  fmt(f.residual),
                                  std::to_string(f.equal_trace_slopes.size())});
        }
        emit(*cfg, doc, table);
    });
}

void setup_twist(CLI::App& app) {
    auto* cmd = app.add_subcommand("twist", "Dehn twist length asymptotics");
    cmd->require_subcommand(1);
    auto* sub = cmd->add_subcommand(
        "ratio", "counting estimator for a length ratio");
    auto cfg = std::make_shared<RunConfig>();
    auto point = std::make_shared<PointArgs>();
    struct Args {
        std::string alpha, beta, alpha0, beta0;
        long long iters = 200;
    };
    auto a = std::make_shared<Args>();
    add_point_options(sub, point);
    sub->add_option("--alpha", a->alpha, "numerator curve p/q")->required();
    sub->add_option("--beta", a->beta, "denominator curve p/q")->required();
    sub->add_option("--alpha0", a->alpha0, "companion twisted about alpha")
        ->required();
    sub->add_option("--beta0", a->beta0, "companion twisted about beta")->required();
    sub->add_option("--iters", a->iters, "twist steps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_options(sub, cfg);
    sub->callback([=] {
        FrickePoint pt = point->resolve();
        Slope alpha = slope_arg(a->alpha), beta = slope_arg(a->beta);
        Slope alpha0 = slope_arg(a->alpha0), beta0 = slope_arg(a->beta0);
        RatioEstimate est = ratio_estimate(pt, alpha, beta, alpha0, beta0, a->iters);
        double l_alpha = length_from_log_trace(log_trace_of_slope(pt, alpha));
        double l_beta = length_from_log_trace(log_trace_of_slope(pt, beta));
        double target = l_alpha / l_beta;
        ordered_json doc;
        doc["point"] = point_json(pt);
        doc["alpha"] = alpha.str();
        doc["beta"] = beta.str();
        doc["alpha0"] = alpha0.str();
        doc["beta0"] = beta0.str();
        doc["steps"] = est.steps;
        doc["count"] = est.count;
        doc["value"] = est.value;
        doc["target"] = target;
        doc["error"] = std::abs(est.value - target);
        doc["bound"] = est.bound;
        doc["within_bound"] = std::abs(est.value - target) <= est.bound;
        emit(*cfg, doc, std::nullopt);
    });
}

void setup_order(CLI::App& app) {
    auto* cmd = app.add_subcommand("order", "length order comparisons");
    cmd->require_subcommand(1);
    auto* sub = cmd->add_subcommand(
        "reversal", "find a pair of curves whose length order flips");
    auto cfg = std::make_shared<RunConfig>();
    struct Args {
        std::string first, second;
        double max_trace = 64.0;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--first", a->first, "trace triple x,y,z")->required();
    sub->add_option("--second", a->second, "trace triple x,y,z")->required();
    sub->add_option("--max-trace", a->max_trace, "search cutoff")
        ->check(CLI::Range(2.0, 1e300))
        ->capture_default_str();
    add_format_options(sub, cfg);
    sub->callback([=] {
        auto v1 = parse_doubles(a->first, 3, "point");
        auto v2 = parse_doubles(a->second, 3, "point");
        FrickePoint first{v1[0], v1[1], v1[2]}, second{v2[0], v2[1], v2[2]};
        for (const auto* pt : {&first, &second}) {
            Validation v = validate(*pt);
            if (!v.valid) throw std::domain_error("invalid point: " + v.diagnostic);
        }
        auto rev = find_order_reversal(first, second,
                                       length_from_trace(a->max_trace));
        ordered_json doc;
        doc["first"] = point_json(first);
        doc["second"] = point_json(second);
        doc["max_trace"] = a->max_trace;
        doc["found"] = rev.has_value();
        if (rev) {
            doc["alpha"] = rev->alpha.str();
            doc["beta"] = rev->beta.str();
            doc["margin_first"] = rev->margin_first;
            doc["margin_second"] = rev->margin_second;
            doc["first_traces"] = {{"alpha", trace_of_slope(first, rev->alpha)},
                                   {"beta", trace_of_slope(first, rev->beta)}};
            doc["second_traces"] = {{"alpha", trace_of_slope(second, rev->alpha)},
                                    {"beta", trace_of_slope(second, rev->beta)}};
        }
        emit(*cfg, doc, std::nullopt);
    });
}

void setup_flat(CLI::App& app) {
    auto* cmd = app.add_subcommand("flat", "flat torus prototype");
    cmd->require_subcommand(1);

    auto* locus = cmd->add_subcommand("locus", "equal-length locus of two slopes");
    auto lcfg = std::make_shared<RunConfig>();
    auto s1 = std::make_shared<std::string>();
    auto s2 = std::make_shared<std::string>();
    locus->add_option("--s1", *s1, "first slope p/q")->required();
    locus->add_option("--s2", *s2, "second slope p/q")->required();
    add_format_options(locus, lcfg);
    locus->callback([=] {
        Slope a1 = slope_arg(*s1), a2 = slope_arg(*s2);
        PoincareGeodesic g = equal_locus_flat(a1, a2);
        ordered_json doc;
        doc["s1"] = a1.str();
        doc["s2"] = a2.str();
        doc["kind"] = g.kind == GeodesicKind::circle ? "circle" : "vertical";
        if (g.kind == GeodesicKind::circle) {
            doc["center"] = g.center;
            doc["radius"] = g.radius;
        } else {
            doc["foot"] = g.foot;
        }
        auto endpoint = [](const BoundaryPoint& e) {
            return e.at_infinity ? ordered_json() : ordered_json(e.approx);
        };
        doc["endpoints"] = ordered_json::array({endpoint(g.e1), endpoint(g.e2)});
        auto poly = [](const BoundaryPoint& e) {
            return ordered_json::array({e.a, e.b, e.c});
        };
        doc["endpoint_min_polys"] = ordered_json::array({poly(g.e1), poly(g.e2)});
        doc["equation"] = {{"A", g.A}, {"B", g.B}, {"C", g.C}};
        emit(*lcfg, doc, std::nullopt);
    });

    auto* reps = cmd->add_subcommand(
        "reps", "count coprime representations a^2+b^2 = N");
    auto rcfg = std::make_shared<RunConfig>();
    auto number = std::make_shared<std::string>();
    reps->add_option("--number", *number, "the integer N")->required();
    add_format_options(reps, rcfg);
    reps->callback([=] {
        mpz_class n;
        try {
            n = mpz_class(*number);
        } catch (const std::invalid_argument&) {
            throw std::domain_error("malformed integer: " + *number);
        }
        ordered_json doc;
        doc["number"] = n.get_str();
        doc["count"] = coprime_rep_count(n);
        emit(*rcfg, doc, std::nullopt);
    });

    auto* make = cmd->add_subcommand(
        "construct", "smallest-prime product with 2^(n-1) representations");
    auto mcfg = std::make_shared<RunConfig>();
    auto count = std::make_shared<int>(1);
    make->add_option("--count", *count, "number of prime factors")->required();
    add_format_options(make, mcfg);
    make->callback([=] {
        HighMultiplicity built = construct_high_multiplicity(*count);
        ordered_json doc;
        doc["n"] = *count;
        doc["number"] = built.N.get_str();
        doc["count"] = built.representations.size();
        auto& arr = doc["representations"] = ordered_json::array();
        Table table{{"a", "b"}, {}};
        for (const auto& [x, y] : built.representations) {
            arr.push_back(ordered_json::array({x.get_str(), y.get_str()}));
            table.rows.push_back({x.get_str(), y.get_str()});
        }
        emit(*mcfg, doc, table);
    });
}

void setup_fhs(CLI::App& app) {
    auto* cmd = app.add_subcommand("fhs", "four-holed sphere trace algebra");
    cmd->require_subcommand(1);

    auto* verify = cmd->add_subcommand(
        "verify", "residuals of the five trace identities");
    auto vcfg = std::make_shared<RunConfig>();
    auto inline_traces = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    auto* topt = verify->add_option(
        "--traces", *inline_traces, "a,b,c,d,x,xbar,y,ybar,z,zbar");
    verify->add_option("--file", *file, "json file with those ten fields")
        ->excludes(topt);
    add_format_options(verify, vcfg);
    verify->callback([=] {
        FhsTraces t;
        if (!inline_traces->empty()) {
            auto v = parse_doubles(*inline_traces, 10, "traces");
            t = {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
        } else if (!file->empty()) {
            std::ifstream in(*file);
            if (!in) throw std::domain_error("cannot read " + *file);
            ordered_json j = ordered_json::parse(in);
            auto get = [&j](const char* key) { return j.at(key).get<double>(); };
            t = {get("a"), get("b"), get("c"), get("d"), get("x"),
                 get("xbar"), get("y"), get("ybar"), get("z"), get("zbar")};
        } else {
            throw std::domain_error("give --traces or --file");
        }
        ConsistencyReport rep = check_consistency(t);
        ordered_json doc;
        doc["traces"] = traces_json(t);
        doc["residuals"] = rep.residuals;
        doc["worst"] = rep.worst;
        doc["geometric"] = geometric(t);
        emit(*vcfg, doc, std::nullopt);
    });

    auto* pair = cmd->add_subcommand(
        "counterexample", "non-isometric pair with equal interior data");
    auto pcfg = std::make_shared<RunConfig>();
    add_format_options(pair, pcfg);
    pair->callback([=] {
        auto [m1, m2] = counterexample_pair();
        auto inv = [](const FhsTraces& t) {
            Invariant4 f = boundary_invariants(t.a, t.b, t.c, t.d);
            return ordered_json{{"f1", f.f1}, {"f2", f.f2}, {"f3", f.f3}, {"f4", f.f4}};
        };
        ordered_json doc;
        doc["first"] = traces_json(m1);
        doc["second"] = traces_json(m2);
        doc["first_invariants"] = inv(m1);
        doc["second_invariants"] = inv(m2);
        doc["boundary_gap"] = std::abs(m1.a - m2.a);
        doc["worst_residual"] =
            std::max(check_consistency(m1).worst, check_consistency(m2).worst);
        emit(*pcfg, doc, std::nullopt);
    });

    auto* res = cmd->add_subcommand(
        "resultant", "exact resultants of the boundary-solution curves");
    auto rcfg = std::make_shared<RunConfig>();
    struct Args {
        std::string f1, f2, f3, f4;
        bool coefficients = false;
    };
    auto a = std::make_shared<Args>();
    res->add_option("--f1", a->f1, "rational invariant")->required();
    res->add_option("--f2", a->f2, "rational invariant")->required();
    res->add_option("--f3", a->f3, "rational invariant")->required();
    res->add_option("--f4", a->f4, "rational invariant")->required();
    res->add_flag("--coefficients", a->coefficients,
                  "include all exact coefficients");
    add_format_options(res, rcfg);
    res->callback([=] {
        Invariant4Q f{parse_rational(a->f1), parse_rational(a->f2),
                      parse_rational(a->f3), parse_rational(a->f4)};
        ResultantReport rep = resultant_check(f);
        ordered_json doc;
        doc["f"] = ordered_json::array({f.f1.get_str(), f.f2.get_str(),
                                        f.f3.get_str(), f.f4.get_str()});
        doc["degree_c"] = rep.degree_c;
        doc["degree_d"] = rep.degree_d;
        doc["lead_c"] = rep.lead_c.get_str();
        doc["lead_d"] = rep.lead_d.get_str();
        doc["expected_lead"] = rep.expected_lead.get_str();
        doc["ok"] = rep.ok;
        if (a->coefficients) {
            auto coeffs = [](const RatPoly& p) {
                ordered_json arr = ordered_json::array();
                for (const auto& q : p) arr.push_back(q.get_str());
                return arr;
            };
            doc["resultant_c"] = coeffs(rep.in_c);
            doc["resultant_d"] = coeffs(rep.in_d);
        }
        emit(*rcfg, doc, std::nullopt);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace-coordinate computations for one-holed tori, flat tori, "
                 "and four-holed spheres"};
    app.require_subcommand(1);
    setup_spectrum(app);
    setup_locus(app);
    setup_markoff(app);
    setup_violations(app);
    setup_twist(app);
    setup_order(app);
    setup_flat(app);
    setup_fhs(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
