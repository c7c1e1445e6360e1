// korthos: command-line front end for k-orthogonal censuses, CRT checks and code analysis.
//
// Exit codes: 0 success, 1 usage or budget error, 2 verification mismatch.

#include <korthos/json.hpp>
#include <korthos/korthos.hpp>

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace korthos;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_mismatch = 2;

struct Common {
    std::string format = "text";
    unsigned jobs = 1;
};

SearchOptions search_options(const Common& common) {
    SearchOptions o;
    o.jobs = common.jobs;
    if (const char* env = std::getenv("KORTHOS_BUDGET")) {
        const auto v = detail::parse_int(env);
        if (!v || *v <= 0) throw Error(ErrorCode::invalid_parameter, "KORTHOS_BUDGET must be a positive integer");
        o.node_budget = static_cast<std::uint64_t>(*v);
    }
    return o;
}

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json run_report(const std::string& command, const std::string& ring, json parameters, json results, const Timer& timer,
                std::uint64_t nodes) {
    return {{"command", command},
            {"ring", ring},
            {"parameters", std::move(parameters)},
            {"results", std::move(results)},
            {"elapsed_ms", timer.elapsed_ms()},
            {"counters", {{"nodes_visited", nodes}}}};
}

std::string side_symbol(Side s) {
    switch (s) {
        case Side::left: return "LO";
        case Side::right: return "RO";
        case Side::two_sided: return "O";
    }
    return "?";
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    if (s == "two" || s == "two_sided" || s == "two-sided") return Side::two_sided;
    throw Error(ErrorCode::parse_error, "side must be left, right or two");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_parameter, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::size_t> parse_rows(const std::string& spec) {
    std::vector<std::size_t> out;
    for (const auto part : detail::split_top(spec, ',')) {
        const auto v = detail::parse_int(part);
        if (!v || *v < 1) throw Error(ErrorCode::parse_error, "row numbers are 1-based positive integers");
        out.push_back(static_cast<std::size_t>(*v - 1));
    }
    return out;
}

// ---------------------------------------------------------------------------

int cmd_idempotents(const std::string& literal, const Common& common) {
    Timer timer;
    const Ring ring = parse_ring(literal);
    const auto set = idempotents(ring);
    if (common.format == "json") {
        json els = json::array();
        for (const auto e : set.elements) els.push_back(ring.render(e));
        std::cout << run_report("idempotents", ring.literal(), json::object(), {{"idempotents", els}}, timer, ring.order()).dump(2)
                  << "\n";
    } else if (common.format == "csv") {
        std::cout << "ring,idempotent\n";
        for (const auto e : set.elements) std::cout << ring.literal() << ",\"" << ring.render(e) << "\"\n";
    } else {
        std::cout << "idempotents of " << ring.literal() << ":";
        for (const auto e : set.elements) std::cout << ' ' << ring.render(e);
        std::cout << "\n";
    }
    return exit_ok;
}

struct CensusArgs {
    std::string ring;
    std::size_t n = 2;
    std::string k;
    std::string side = "left";
    std::string emit = "counts";
    bool naive = false;
    bool no_checks = false;
};

int cmd_census(const CensusArgs& args, const Common& common) {
    Timer timer;
    const Ring ring = parse_ring(args.ring);
    const Side side = parse_side(args.side);
    SearchOptions opts = search_options(common);
    opts.prune = !args.naive;
    opts.verify_structure = !args.no_checks;
    if (args.emit != "counts" && args.emit != "matrices") throw Error(ErrorCode::parse_error, "--emit is counts or matrices");
    const bool with_matrices = args.emit == "matrices";

    std::vector<Element> ks;
    if (args.k.empty()) ks = idempotents(ring).elements;
    else ks.push_back(ring.parse(args.k));

    std::vector<Census> results;
    std::uint64_t nodes = 0;
    for (const auto k : ks) {
        results.push_back(enumerate(ring, args.n, k, side, opts));
        nodes += results.back().nodes_visited;
    }

    if (common.format == "json") {
        json arr = json::array();
        for (const auto& c : results) arr.push_back(to_json(c, with_matrices));
        json params = {{"n", args.n}, {"side", args.side}, {"emit", args.emit}, {"naive", args.naive}};
        if (!args.k.empty()) params["k"] = args.k;
        std::cout << run_report("census", ring.literal(), params, {{"censuses", arr}}, timer, nodes).dump(2) << "\n";
    } else if (common.format == "csv") {
        if (with_matrices) {
            std::cout << "ring,n,k,side,matrix\n";
            for (const auto& c : results)
                for (const auto& m : c.elements)
                    std::cout << ring.literal() << ',' << c.n << ",\"" << ring.render(c.k) << "\"," << to_string(side) << ",\""
                              << format_matrix(m) << "\"\n";
        } else {
            std::cout << "ring,n,k,side,count,closure_verified,identity_present,is_group\n";
            for (const auto& c : results)
                std::cout << ring.literal() << ',' << c.n << ",\"" << ring.render(c.k) << "\"," << to_string(side) << ','
                          << c.count() << ',' << c.checks.closure_verified << ',' << c.checks.identity_present << ','
                          << c.checks.is_group << "\n";
        }
    } else {
        for (const auto& c : results) {
            std::cout << side_symbol(side) << "_" << c.n << "(" << ring.render(c.k) << ", " << ring.literal() << ") = " << c.count();
            if (opts.verify_structure)
                std::cout << "  [closed=" << c.checks.closure_verified << " identity=" << c.checks.identity_present
                          << " group=" << c.checks.is_group << "]";
            std::cout << "\n";
            if (with_matrices)
                for (const auto& m : c.elements) std::cout << "  " << format_matrix(m) << "\n";
        }
    }
    return exit_ok;
}

// Golden documents ----------------------------------------------------------

struct GoldenResult {
    std::string label;
    bool ok;
    std::string detail;
};

std::vector<Matrix> sorted_matrices(const Ring& ring, std::size_t n, const json& list) {
    std::vector<Matrix> out;
    for (const auto& text : list) {
        Matrix m = parse_matrix(ring, text.get<std::string>());
        if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::dimension_mismatch, "golden matrix has wrong shape");
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::vector<GoldenResult> check_counts(const json& doc, const SearchOptions& opts, std::uint64_t& nodes) {
    const Ring ring = parse_ring(doc.at("ring").get<std::string>());
    const auto n = doc.at("n").get<std::size_t>();
    SearchOptions quick = opts;
    quick.verify_structure = false;
    std::vector<GoldenResult> out;
    for (const auto& row : doc.at("rows")) {
        const Element k = ring.parse(row.at("k").get<std::string>());
        for (const auto& [key, side] : {std::pair{"left", Side::left}, {"right", Side::right}, {"two_sided", Side::two_sided}}) {
            if (!row.contains(key)) continue;
            const Census c = enumerate(ring, n, k, side, quick);
            nodes += c.nodes_visited;
            const auto want = row.at(key).get<std::size_t>();
            std::ostringstream label;
            label << "|" << side_symbol(side) << "_" << n << "(" << ring.render(k) << ", " << ring.literal() << ")|";
            out.push_back({label.str(), c.count() == want,
                           "expected " + std::to_string(want) + ", computed " + std::to_string(c.count())});
        }
    }
    return out;
}

std::vector<GoldenResult> check_sets(const json& doc, const SearchOptions& opts, std::uint64_t& nodes) {
    const Ring ring = parse_ring(doc.at("ring").get<std::string>());
    const auto n = doc.at("n").get<std::size_t>();
    const Element k = ring.parse(doc.at("k").get<std::string>());
    std::vector<GoldenResult> out;
    for (const auto& [key, side] : {std::pair{"left", Side::left}, {"right", Side::right}, {"two_sided", Side::two_sided}}) {
        if (!doc.contains(key)) continue;
        const Census c = enumerate(ring, n, k, side, opts);
        nodes += c.nodes_visited;
        const auto want = sorted_matrices(ring, n, doc.at(key));
        std::ostringstream label;
        label << side_symbol(side) << "_" << n << "(" << ring.render(k) << ", " << ring.literal() << ") set";
        out.push_back({label.str(), want == c.elements,
                       "expected " + std::to_string(want.size()) + " matrices, computed " + std::to_string(c.count())});
        if (doc.value("circulant", false) && side == Side::two_sided) {
            out.push_back({label.str() + " circulant", circulant_characterization_check(c), "circulant form a+b=k"});
        }
    }
    if (doc.contains("left") && doc.contains("right")) {
        SearchOptions quick = opts;
        quick.verify_structure = false;
        const Census l = enumerate(ring, n, k, Side::left, quick);
        const Census r = enumerate(ring, n, k, Side::right, quick);
        out.push_back({"transpose bijection LO -> RO", transpose_bijection_check(l, r), "A -> A^T"});
    }
    return out;
}

std::vector<GoldenResult> check_code(const json& doc) {
    const Ring ring = parse_ring(doc.at("ring").get<std::string>());
    std::optional<LinearCode> code;
    if (doc.contains("A")) {
        Matrix a = parse_matrix(ring, doc.at("A").get<std::string>());
        if (doc.contains("drop_rows")) {
            std::vector<std::size_t> drop;
            for (const auto& r : doc.at("drop_rows")) drop.push_back(r.get<std::size_t>() - 1);
            a = delete_rows(a, drop);
        }
        code = systematic_from_A(a);
    } else {
        code = code_from_generator(parse_matrix(ring, doc.at("generator").get<std::string>()));
    }
    const json got = to_json(duality_report(*code));
    std::vector<GoldenResult> out;
    const std::string name = doc.value("name", std::string("code"));
    for (const auto& [key, want] : doc.at("expect").items()) {
        const bool ok = got.contains(key) && got.at(key) == want;
        out.push_back({name + " " + key, ok, "expected " + want.dump() + ", computed " + (got.contains(key) ? got.at(key).dump() : "?")});
    }
    return out;
}

std::vector<GoldenResult> check_document(const json& doc, const SearchOptions& opts, std::uint64_t& nodes) {
    if (doc.contains("entries")) {
        std::vector<GoldenResult> all;
        for (const auto& entry : doc.at("entries")) {
            auto part = check_document(entry, opts, nodes);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    const std::string type = doc.value("type", std::string("counts"));
    if (type == "counts") return check_counts(doc, opts, nodes);
    if (type == "sets") return check_sets(doc, opts, nodes);
    if (type == "code") return check_code(doc);
    throw Error(ErrorCode::parse_error, "unknown golden document type '" + type + "'");
}

int report_golden(const std::string& command, const std::string& ring, const std::string& path,
                  const std::vector<GoldenResult>& results, const Common& common, const Timer& timer, std::uint64_t nodes) {
    bool all = true;
    for (const auto& r : results) all = all && r.ok;
    if (common.format == "json") {
        json arr = json::array();
        for (const auto& r : results) arr.push_back({{"check", r.label}, {"ok", r.ok}, {"detail", r.detail}});
        std::cout << run_report(command, ring, {{"golden", path}}, {{"checks", arr}, {"all_ok", all}}, timer, nodes).dump(2)
                  << "\n";
    } else {
        for (const auto& r : results) std::cout << (r.ok ? "PASS " : "FAIL ") << r.label << " (" << r.detail << ")\n";
        std::cout << (all ? "golden file matches: " : "MISMATCH against: ") << path << "\n";
    }
    return all ? exit_ok : exit_mismatch;
}

json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, path + ": " + e.what());
    }
}

int cmd_verify(const std::string& path, const Common& common) {
    Timer timer;
    std::uint64_t nodes = 0;
    const json doc = load_json(path);
    const auto results = check_document(doc, search_options(common), nodes);
    return report_golden("verify", doc.value("ring", std::string()), path, results, common, timer, nodes);
}

int cmd_tables(const std::string& literal, std::size_t n, const std::string& golden, const Common& common) {
    Timer timer;
    const Ring ring = parse_ring(literal);
    const SearchOptions opts = search_options(common);
    if (!golden.empty()) {
        json doc = load_json(golden);
        if (!(parse_ring(doc.at("ring").get<std::string>()) == ring) || doc.at("n").get<std::size_t>() != n)
            throw Error(ErrorCode::invalid_parameter, "golden file is for a different ring or degree");
        std::uint64_t nodes = 0;
        const auto results = check_document(doc, opts, nodes);
        return report_golden("tables", ring.literal(), golden, results, common, timer, nodes);
    }
    const auto rows = census_table(ring, n, opts);
    if (common.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(ring, r));
        std::cout << run_report("tables", ring.literal(), {{"n", n}}, {{"rows", arr}}, timer, 0).dump(2) << "\n";
    } else if (common.format == "csv") {
        std::cout << "k,left,right,two_sided,difference\n";
        for (const auto& r : rows)
            std::cout << '"' << ring.render(r.k) << "\"," << r.left << ',' << r.right << ',' << r.two_sided << ','
                      << r.difference() << "\n";
    } else {
        std::cout << "k | LO_" << n << " = RO_" << n << " | O_" << n << " | LO_" << n << " - O_" << n << "   over "
                  << ring.literal() << "\n";
        for (const auto& r : rows)
            std::cout << ring.render(r.k) << " | " << r.left << (r.left == r.right ? "" : " (RO " + std::to_string(r.right) + ")")
                      << " | " << r.two_sided << " | " << r.difference() << "\n";
    }
    return exit_ok;
}

int cmd_crt(const std::string& literal, std::size_t n, const std::string& k, const std::string& side_name, bool verify,
            const Common& common) {
    Timer timer;
    const Ring ring = parse_ring(literal);
    const auto rep = verify_semigroup_isomorphism(ring, n, ring.parse(k), parse_side(side_name), search_options(common));
    if (common.format == "text") {
        std::cout << side_symbol(rep.side) << "_" << n << "(" << k << ", " << ring.literal() << ") ~";
        for (std::size_t j = 0; j < rep.factors.size(); ++j)
            std::cout << (j ? " x " : " ") << side_symbol(rep.side) << "_" << n << "(" << rep.factors[j].render(rep.a[j]) << ", "
                      << rep.factors[j].literal() << ")[" << rep.factor_counts[j] << "]";
        std::cout << "\nproduct " << rep.product << " direct " << rep.direct_count << " bijection "
                  << (rep.bijection_ok ? "ok" : "FAILED") << "\n";
    } else {
        json params = {{"n", n}, {"k", k}, {"side", side_name}, {"verify", verify}};
        std::cout << run_report("crt", ring.literal(), params, to_json(rep), timer, rep.nodes_visited).dump(2) << "\n";
    }
    return verify && !rep.bijection_ok ? exit_mismatch : exit_ok;
}

struct CodeArgs {
    std::string ring;
    std::string a;
    std::string generator;
    std::string drop_rows;
    bool report = false;
};

int cmd_code(const CodeArgs& args, const Common& common) {
    Timer timer;
    const Ring ring = parse_ring(args.ring);
    if (args.a.empty() == args.generator.empty()) throw Error(ErrorCode::parse_error, "give exactly one of --A or --generator");
    Matrix m = args.a.empty() ? parse_matrix(ring, read_file(args.generator)) : parse_matrix(ring, args.a);
    if (!args.drop_rows.empty()) m = delete_rows(m, parse_rows(args.drop_rows));
    const LinearCode code = args.a.empty() ? code_from_generator(m) : systematic_from_A(m);

    json results = {{"generator", format_matrix(code.generator)},
                    {"length", code.length},
                    {"size", code.size()},
                    {"systematic", code.systematic}};
    if (!args.a.empty()) {
        results["row_antiorthogonal"] = row_anti_orthogonal_check(m);
        if (m.is_square()) {
            const auto f = anti_orthogonal_check(m);
            results["antiorthogonal"] = {{"left", f.left}, {"right", f.right}};
        }
    } else {
        results["row_self_orthogonal"] = row_self_orthogonal_check(m);
    }
    if (args.report) results["report"] = to_json(duality_report(code));

    if (common.format == "text" && !args.report) {
        std::cout << "code over " << ring.literal() << ": length " << code.length << ", " << code.size() << " codewords"
                  << (code.systematic ? ", leading-systematic" : "") << "\ngenerator " << format_matrix(code.generator) << "\n";
    } else {
        json params = {{"A", args.a}, {"generator", args.generator}, {"drop_rows", args.drop_rows}, {"report", args.report}};
        std::cout << run_report("code", ring.literal(), params, results, timer, code.size()).dump(2) << "\n";
    }
    return exit_ok;
}

int cmd_antiortho(const std::string& literal, std::size_t n, const Common& common) {
    Timer timer;
    const Ring ring = parse_ring(literal);
    const auto w = antiorthogonal_exists(ring, n, search_options(common));
    if (common.format == "json") {
        json results = {{"exists", w.has_value()}, {"witness", w ? json(format_matrix(*w)) : json(nullptr)}};
        std::cout << run_report("antiortho", ring.literal(), {{"n", n}}, results, timer, 0).dump(2) << "\n";
    } else if (w) {
        std::cout << "witness: " << format_matrix(*w) << "\n";
    } else {
        std::cout << "none found: no " << n << "x" << n << " antiorthogonal matrix over " << ring.literal() << "\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-orthogonal matrix semigroups over finite commutative rings, and their codes"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", common.jobs, "Search workers")->check(CLI::Range(1u, 256u));

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--jobs", common.jobs, "Search workers")->check(CLI::Range(1u, 256u));
    };

    std::string ring_literal;
    std::size_t n = 2;

    auto* idem = app.add_subcommand("idempotents", "List the idempotents of a ring");
    idem->add_option("--ring", ring_literal, "Ring literal, e.g. Z6 or \"GF(2)+vGF(2)[v2=v]\"")->required();
    add_common(idem);

    CensusArgs census;
    auto* cen = app.add_subcommand("census", "Enumerate LO_n(k,R), RO_n(k,R) or O_n(k,R)");
    cen->add_option("--ring", census.ring, "Ring literal")->required();
    cen->add_option("--n", census.n, "Matrix degree")->required()->check(CLI::Range(1, 8));
    cen->add_option("--k", census.k, "Scalar k (default: every idempotent)");
    cen->add_option("--side", census.side, "left, right or two")->check(CLI::IsMember({"left", "right", "two"}));
    cen->add_option("--emit", census.emit, "counts or matrices")->check(CLI::IsMember({"counts", "matrices"}));
    cen->add_flag("--naive", census.naive, "Sweep all |R|^(n^2) matrices instead of pruned search");
    cen->add_flag("--no-checks", census.no_checks, "Skip closure and group checks");
    add_common(cen);

    std::string golden;
    auto* tab = app.add_subcommand("tables", "Census table over all idempotent k");
    tab->add_option("--ring", ring_literal, "Ring literal")->required();
    tab->add_option("--n", n, "Matrix degree")->required()->check(CLI::Range(1, 8));
    tab->add_option("--golden", golden, "Golden JSON file to compare against");
    add_common(tab);

    std::string table_path;
    auto* ver = app.add_subcommand("verify", "Compare computed results with a golden JSON file");
    ver->add_option("--table", table_path, "Golden JSON file")->required();
    add_common(ver);

    std::string k_text, side_name = "left";
    bool crt_verify = false;
    auto* crt = app.add_subcommand("crt", "Check the CRT product decomposition of a census");
    crt->add_option("--ring", ring_literal, "Ring literal")->required();
    crt->add_option("--n", n, "Matrix degree")->required()->check(CLI::Range(1, 8));
    crt->add_option("--k", k_text, "Idempotent k")->required();
    crt->add_option("--side", side_name, "left, right or two")->check(CLI::IsMember({"left", "right", "two"}));
    crt->add_flag("--verify", crt_verify, "Exit 2 unless the component map is a bijection");
    add_common(crt);

    CodeArgs code;
    auto* cod = app.add_subcommand("code", "Build a linear code and report its duality properties");
    cod->add_option("--ring", code.ring, "Ring literal")->required();
    cod->add_option("--A", code.a, "Matrix A of the systematic generator [I : A], text format");
    cod->add_option("--generator", code.generator, "File holding a generator matrix in text format");
    cod->add_option("--drop-rows", code.drop_rows, "1-based rows to delete first, comma separated");
    cod->add_flag("--report", code.report, "Emit the duality report");
    add_common(cod);

    auto* anti = app.add_subcommand("antiortho", "Search for an n x n antiorthogonal matrix");
    anti->add_option("--ring", ring_literal, "Ring literal")->required();
    anti->add_option("--n", n, "Matrix degree")->required()->check(CLI::Range(1, 8));
    add_common(anti);

    // flag/format defaults that differ per subcommand
    bool format_given = false;
    try {
        app.parse(argc, argv);
        format_given = app.count("--format") > 0 || crt->count("--format") > 0 || cod->count("--format") > 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*idem) return cmd_idempotents(ring_literal, common);
        if (*cen) return cmd_census(census, common);
        if (*tab) return cmd_tables(ring_literal, n, golden, common);
        if (*ver) return cmd_verify(table_path, common);
        if (*crt) {
            if (!format_given) common.format = "json";
            return cmd_crt(ring_literal, n, k_text, side_name, crt_verify, common);
        }
        if (*cod) {
            if (!format_given && code.report) common.format = "json";
            return cmd_code(code, common);
        }
        if (*anti) return cmd_antiortho(ring_literal, n, common);
    } catch (const Error& e) {
        std::cerr << "korthos: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "korthos: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
