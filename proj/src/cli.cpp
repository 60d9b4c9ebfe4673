#include "kmarkov/cli.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <CLI11.hpp>

#include "kmarkov/ideal_count.hpp"
#include "kmarkov/markov.hpp"
#include "kmarkov/monotonicity.hpp"
#include "kmarkov/report.hpp"
#include "kmarkov/verify.hpp"

namespace kmarkov::cli {

namespace {

BigInt parse_big(const std::string& s) {
    try {
        return BigInt(s, 10);
    } catch (const std::invalid_argument&) {
        throw invalid_input("not an integer: " + s);
    }
}

LatticePoint parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw invalid_input("points are written X,Y: " + s);
    return {parse_big(s.substr(0, comma)), parse_big(s.substr(comma + 1))};
}

// "NUM/DEN" or a plain integer; exact, no floating-point round trip
BigRat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    BigRat r;
    if (slash == std::string::npos) {
        r = BigRat(parse_big(s));
    } else {
        BigInt num = parse_big(s.substr(0, slash));
        BigInt den = parse_big(s.substr(slash + 1));
        if (den == 0) throw invalid_input("zero denominator: " + s);
        r = BigRat(num, den);
    }
    r.canonicalize();
    return r;
}

std::vector<unsigned> parse_k_list(const std::string& s) {
    std::vector<unsigned> ks;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) throw invalid_input("empty entry in k list");
        BigInt v = parse_big(item);
        if (v < 0 || !v.fits_uint_p()) throw invalid_input("k out of range: " + item);
        ks.push_back((unsigned)v.get_ui());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ks;
}

std::string fmt_double(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// log10 of a positive big integer without overflowing double
double big_log10(const BigInt& v) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log10(mant) + (double)exp2 * std::log10(2.0);
}

std::string rat_str(const BigRat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string point_str(const LatticePoint& p) { return p.x.get_str() + "," + p.y.get_str(); }

std::string frac_str(const FareyFraction& f) { return f.num.get_str() + "/" + f.den.get_str(); }

bool is_coprime(const LatticePoint& p) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.x.get_mpz_t(), p.y.get_mpz_t());
    return g == 1;
}

struct Options {
    std::string format = "plain";
    std::uint64_t seed = 0;

    OutputFormat output() const {
        if (format == "plain") return OutputFormat::Plain;
        if (format == "csv") return OutputFormat::Csv;
        if (format == "json") return OutputFormat::Json;
        throw invalid_input("unknown format: " + format);
    }
};

Report cmd_number(const std::string& point_arg, unsigned k) {
    LatticePoint p = parse_point(point_arg);
    if (p.x == 0 && p.y == 0) throw invalid_input("the zero point has no value");
    RelationWord w = relation_word(p - LatticePoint(0, 0), k);
    Report r;
    r.command = "number";
    r.add("k", std::to_string(k));
    r.add("p", p.x.get_str());
    r.add("q", p.y.get_str());
    r.add("coprime", is_coprime(p) ? "true" : "false");
    r.add("in_region", p.x >= p.y && p.y >= 0 ? "true" : "false");
    r.add("value", count_ideals_dp(w).get_str());
    r.add("element_count", std::to_string(w.element_count));
    r.add("shape", shape_to_string(word_to_shape(w)));
    return r;
}

Report cmd_shape(const std::string& point_arg, unsigned k) {
    LatticePoint p = parse_point(point_arg);
    if (p.x == 0 && p.y == 0) throw invalid_input("the zero point has no poset");
    RelationWord w = relation_word(p, k);
    Report r;
    r.command = "shape";
    r.add("k", std::to_string(k));
    r.add("p", p.x.get_str());
    r.add("q", p.y.get_str());
    r.add("element_count", std::to_string(w.element_count));
    r.add("shape", shape_to_string(word_to_shape(w)));
    r.add("word", word_to_string(w));
    return r;
}

Report cmd_distance(const std::string& from_arg, const std::string& to_arg, unsigned k) {
    LatticePoint a = parse_point(from_arg);
    LatticePoint b = parse_point(to_arg);
    Report r;
    r.command = "distance";
    r.add("k", std::to_string(k));
    r.add("from", point_str(a));
    r.add("to", point_str(b));
    r.add("value", distance(a, b, k).get_str());
    return r;
}

Report cmd_line(const std::string& slope_arg, const std::string& intercept_arg, unsigned k,
                const std::string& region_arg, const std::string& xmin, const std::string& xmax) {
    LineSpec line{parse_rational(slope_arg), parse_rational(intercept_arg)};
    LineRegion region;
    if (region_arg == "closed")
        region = LineRegion::Closed;
    else if (region_arg == "interior")
        region = LineRegion::Interior;
    else
        throw invalid_input("region must be closed or interior");
    std::optional<std::pair<BigInt, BigInt>> range;
    if (!xmin.empty() || !xmax.empty()) {
        if (xmin.empty() || xmax.empty()) throw invalid_input("--xmin and --xmax go together");
        range = std::make_pair(parse_big(xmin), parse_big(xmax));
    }
    MonotonicityReport rep = classify_line(line, k, region, range);
    Report r;
    r.command = "line";
    r.add("k", std::to_string(k));
    r.add("slope", rat_str(line.slope));
    r.add("intercept", rat_str(line.intercept));
    r.add("region", region_arg);
    r.add("n_points", std::to_string(rep.points.size()));
    r.add("empirical_class", to_string(rep.empirical));
    r.add("predicted_class", to_string(rep.predicted));
    r.add("anomaly", rep.anomaly ? "true" : "false");
    // digits and log10_value make the table directly plottable
    r.columns = {"x", "p", "q", "value", "ratio_cmp", "digits", "log10_value"};
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
        const char* cmp_str = "-";
        if (i > 0) cmp_str = rep.steps[i - 1] > 0 ? "<" : (rep.steps[i - 1] < 0 ? ">" : "=");
        std::string digits = std::to_string(rep.values[i].get_str().size());
        double log10v = rep.values[i] > 0 ? big_log10(rep.values[i]) : 0.0;
        r.rows.push_back({rep.points[i].x.get_str(), rep.points[i].x.get_str(), rep.points[i].y.get_str(),
                          rep.values[i].get_str(), cmp_str, digits, fmt_double(log10v, 4)});
    }
    return r;
}

Report cmd_thresholds(const std::string& ks_arg) {
    Report r;
    r.command = "thresholds";
    r.columns = {"k", "upper", "lower", "gray_width"};
    for (unsigned k : parse_k_list(ks_arg)) {
        ThresholdSet t = thresholds(k);
        r.rows.push_back({std::to_string(k), fmt_double(t.upper), fmt_double(t.lower),
                          fmt_double(t.upper - t.lower)});
    }
    r.add("rows", std::to_string(r.rows.size()));
    return r;
}

Report cmd_tree(unsigned k, unsigned depth) {
    Report r;
    r.command = "tree";
    r.add("k", std::to_string(k));
    r.add("depth", std::to_string(depth));
    r.columns = {"index", "label", "x", "y", "z"};
    std::size_t idx = 0;
    for (const MarkovTriple& t : vieta_tree(k, depth)) {
        r.rows.push_back({std::to_string(idx++), frac_str(t.label.mid), t.x.get_str(), t.y.get_str(),
                          t.z.get_str()});
    }
    return r;
}

Report cmd_wedge(const std::string& point_arg, std::optional<unsigned> k, const std::string& lo_arg,
                 const std::string& hi_arg, bool coprime, bool list) {
    LatticePoint p = parse_point(point_arg);
    double lo, hi;
    if (k) {
        ThresholdSet t = thresholds(*k);
        lo = t.lower;
        hi = t.upper;
    } else {
        if (lo_arg.empty() || hi_arg.empty())
            throw invalid_input("wedge needs either --k or both --slope-low and --slope-high");
        lo = parse_rational(lo_arg).get_d();
        hi = parse_rational(hi_arg).get_d();
    }
    WedgeOptions opts;
    opts.coprime_only = coprime;
    opts.collect_points = list;
    WedgeResult res = wedge_count(p.x, p.y, lo, hi, opts);
    Report r;
    r.command = "wedge";
    r.add("p", p.x.get_str());
    r.add("q", p.y.get_str());
    if (k) r.add("k", std::to_string(*k));
    r.add("slope_low", fmt_double(lo, 9));
    r.add("slope_high", fmt_double(hi, 9));
    r.add("coprime_only", coprime ? "true" : "false");
    r.add("count", std::to_string(res.count));
    if (list) {
        r.columns = {"p", "q"};
        for (const LatticePoint& pt : res.points) r.rows.push_back({pt.x.get_str(), pt.y.get_str()});
    }
    return r;
}

Report cmd_compare(const std::vector<std::string>& points, const std::string& ks_arg) {
    if (points.size() != 2) throw invalid_input("compare needs exactly two points");
    LatticePoint a = parse_point(points[0]);
    LatticePoint b = parse_point(points[1]);
    Report r;
    r.command = "compare";
    r.add("point_a", point_str(a));
    r.add("point_b", point_str(b));
    r.columns = {"k", "value_a", "relation", "value_b"};
    bool flipped = false;
    int first_sign = 0;
    for (const OrderComparison& oc : compare_orders(a, b, parse_k_list(ks_arg))) {
        const char* rel = oc.cmp < 0 ? "<" : (oc.cmp > 0 ? ">" : "=");
        if (first_sign == 0 && oc.cmp != 0) first_sign = oc.cmp;
        if (oc.cmp != 0 && first_sign != 0 && oc.cmp != first_sign) flipped = true;
        r.rows.push_back({std::to_string(oc.k), oc.value_a.get_str(), rel, oc.value_b.get_str()});
    }
    r.add("order_flips", flipped ? "true" : "false");
    return r;
}

Report cmd_verify(const std::string& suite, std::uint64_t seed, std::uint64_t cases) {
    verify::SuiteResult res = verify::run_suite(suite, seed, cases);
    Report r;
    r.command = "verify";
    r.add("suite", res.suite);
    r.add("seed", std::to_string(res.seed));
    r.add("cases", std::to_string(res.cases));
    r.add("failures", std::to_string(res.failures.size()));
    r.columns = {"failure"};
    for (const std::string& f : res.failures) r.rows.push_back({f});
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for generalized k-Markov numbers"};
    app.name("kmarkov");

    Options opts;
    app.add_option("--format", opts.format, "output format: plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--seed", opts.seed, "seed for the randomized suites");
    app.require_subcommand(1);

    unsigned k = 0, k2 = 0, k3 = 0, k_tree = 0;
    unsigned depth = 4;
    std::uint64_t cases = 200;
    std::string point, from, to, slope, intercept, region = "closed", xmin, xmax;
    std::string ks = "0", suite;
    std::string slope_low, slope_high;
    std::vector<std::string> cmp_points;
    bool coprime = false, list_points = false;
    bool wedge_k_set = false;
    unsigned wedge_k = 0;

    CLI::App* c_number = app.add_subcommand("number", "generalized k-Markov number of a point");
    c_number->add_option("--k", k, "equation parameter k")->required();
    c_number->add_option("--point", point, "lattice point P,Q")->required();

    CLI::App* c_shape = app.add_subcommand("shape", "fence poset word and shape of a point");
    c_shape->add_option("--k", k2, "equation parameter k")->required();
    c_shape->add_option("--point", point, "lattice point P,Q")->required();

    CLI::App* c_distance = app.add_subcommand("distance", "k-Markov distance between two points");
    c_distance->add_option("--k", k3, "equation parameter k")->required();
    c_distance->add_option("--from", from, "lattice point X,Y")->required();
    c_distance->add_option("--to", to, "lattice point X,Y")->required();

    CLI::App* c_line = app.add_subcommand("line", "values along a rational line, classified");
    unsigned k_line = 0;
    c_line->add_option("--k", k_line, "equation parameter k")->required();
    c_line->add_option("--slope", slope, "rational slope NUM/DEN")->required();
    c_line->add_option("--intercept", intercept, "rational intercept NUM/DEN")->required();
    c_line->add_option("--region", region, "closed (p>=q>=0) or interior (p>q>=1)");
    c_line->add_option("--xmin", xmin, "x range start (needed for nonnegative slopes)");
    c_line->add_option("--xmax", xmax, "x range end");

    CLI::App* c_thresholds = app.add_subcommand("thresholds", "slope thresholds U(k) and L(k)");
    c_thresholds->add_option("--ks", ks, "comma separated k values")->required();

    CLI::App* c_tree = app.add_subcommand("tree", "Vieta tree levels with Farey labels");
    c_tree->add_option("--k", k_tree, "equation parameter k")->required();
    c_tree->add_option("--depth", depth, "levels below the root");

    CLI::App* c_wedge = app.add_subcommand("wedge", "lattice points in a slope wedge at a point");
    c_wedge->add_option("--point", point, "wedge vertex P,Q")->required();
    CLI::Option* wk = c_wedge->add_option("--k", wedge_k, "use the gray zone (L(k), U(k))");
    c_wedge->add_option("--slope-low", slope_low, "lower slope bound, rational");
    c_wedge->add_option("--slope-high", slope_high, "upper slope bound, rational");
    c_wedge->add_flag("--coprime", coprime, "count only coprime points");
    c_wedge->add_flag("--list", list_points, "list the points as rows");

    CLI::App* c_compare = app.add_subcommand("compare", "order of two values across k");
    c_compare->add_option("--points", cmp_points, "two lattice points P,Q")->expected(2);
    c_compare->add_option("--k", ks, "comma separated k values");

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite, "one of: ptolemy, skein, circular, recurrence, monotone, oracle, tree")
        ->required();
    c_verify->add_option("--cases", cases, "randomized case budget");

    // global flags may trail the subcommand, e.g. `verify --suite x --seed 7`
    for (CLI::App* sub : app.get_subcommands(std::function<bool(CLI::App*)>{})) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("kmarkov");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
        wedge_k_set = wk->count() > 0;

        Report rep;
        if (c_number->parsed())
            rep = cmd_number(point, k);
        else if (c_shape->parsed())
            rep = cmd_shape(point, k2);
        else if (c_distance->parsed())
            rep = cmd_distance(from, to, k3);
        else if (c_line->parsed())
            rep = cmd_line(slope, intercept, k_line, region, xmin, xmax);
        else if (c_thresholds->parsed())
            rep = cmd_thresholds(ks);
        else if (c_tree->parsed())
            rep = cmd_tree(k_tree, depth);
        else if (c_wedge->parsed())
            rep = cmd_wedge(point, wedge_k_set ? std::optional<unsigned>(wedge_k) : std::nullopt,
                            slope_low, slope_high, coprime, list_points);
        else if (c_compare->parsed())
            rep = cmd_compare(cmp_points, ks);
        else if (c_verify->parsed())
            rep = cmd_verify(suite, opts.seed, cases);

        out << render(rep, opts.output());
        if (c_verify->parsed() && !rep.rows.empty()) return 1;
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const oracle_capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace kmarkov::cli
