// walkmat: exact walk-matrix determinants of rooted products G o P_m, the
// Z/Chebyshev resultant identities behind them, and a verification sweep
// harness with JSONL/CSV reports.
//
// Exit codes: 0 success (counterexamples included, with a distinct message),
// 1 at least one FAIL verdict, 2 usage or parse errors.

#include "CLI11.hpp"

#include "walkmat/errors.hpp"
#include "walkmat/exact_matrix.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/poly.hpp"
#include "walkmat/rational.hpp"
#include "walkmat/verify.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace walkmat;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string pretty_rational(const Rational& r) {
    std::string s = to_string(r);
    if (r.get_den() != 1) {
        std::ostringstream os;
        os << s << " (~" << to_double(r) << ")";
        return os.str();
    }
    return s;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    auto range_pos = text.find("..");
    if (range_pos != std::string::npos) {
        int lo, hi;
        try {
            lo = std::stoi(text.substr(0, range_pos));
            hi = std::stoi(text.substr(range_pos + 2));
        } catch (const std::exception&) {
            throw UsageError("bad range '" + text + "' (want e.g. 2..5)");
        }
        if (lo > hi) throw UsageError("empty range '" + text + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("bad integer '" + tok + "' in '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError("empty integer list '" + text + "'");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(parse_rational(tok));
    if (out.empty()) throw UsageError("empty rational list '" + text + "'");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Graph files hold either an edge list ("n" then "i j" lines) or the compact
// form: "n" followed by one '0'/'1' character per pair of the upper triangle.
Graph load_graph_file(const std::string& path) {
    // Strip '#' comments up front so the format sniff below sees only payload.
    std::string text;
    {
        std::istringstream lines(read_file(path));
        std::string line;
        while (std::getline(lines, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            text += line;
            text += '\n';
        }
    }
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok)) throw FormatError(path + ": empty graph file");
    int n;
    try {
        n = std::stoi(tok);
    } catch (const std::exception&) {
        throw FormatError(path + ": first token must be the vertex count");
    }
    std::string rest, word;
    int words = 0;
    while (is >> word) {
        rest += word;
        ++words;
    }
    if (words == 1 && rest.find_first_not_of("01") == std::string::npos &&
        rest.size() == static_cast<std::size_t>(n) * (n - 1) / 2)
        return graph_from_triangle(n, rest);
    return parse_graph_text(text);
}

struct CorpusCli {
    std::vector<std::string> named;
    std::vector<std::string> files;
    std::vector<std::string> random_specs;
};

void add_corpus_options(CLI::App* cmd, CorpusCli& c) {
    cmd->add_option("--named", c.named, "named graphs (p2 p3 c4 k3 paw k13 asym6)");
    cmd->add_option("--graph", c.files, "graph files (edge list or 0/1 triangle)");
    cmd->add_option("--random", c.random_specs,
                    "random corpus spec n=<int>,p=<rat>[,count=<int>][,seed=<int>]");
}

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& spec) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("expected key=value, got '" + item + "'");
        kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return kv;
}

std::vector<CorpusEntry> parse_random_spec(const std::string& spec) {
    int n = -1, count = 1;
    Rational p(1, 2);
    std::uint64_t seed = 42;
    for (const auto& [key, value] : parse_kv(spec)) {
        if (key == "n")
            n = std::stoi(value);
        else if (key == "p")
            p = parse_rational(value);
        else if (key == "count")
            count = std::stoi(value);
        else if (key == "seed")
            seed = std::stoull(value);
        else
            throw UsageError("unknown key '" + key + "' in random spec");
    }
    if (n < 1) throw UsageError("random spec needs n=<positive int>");
    return random_corpus(count, seed, {n}, {p});
}

std::vector<CorpusEntry> build_corpus(const CorpusCli& c, bool default_named) {
    std::vector<CorpusEntry> corpus;
    for (const std::string& name : c.named) corpus.push_back({name, named_graph(name), 0});
    for (const std::string& path : c.files) corpus.push_back({path, load_graph_file(path), 0});
    for (const std::string& spec : c.random_specs) {
        auto part = parse_random_spec(spec);
        corpus.insert(corpus.end(), part.begin(), part.end());
    }
    if (corpus.empty() && default_named) corpus = named_corpus();
    return corpus;
}

void write_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                   std::ostream& os, bool timings) {
    if (format == "json") {
        for (const auto& r : reports) os << report_to_json(r, timings) << '\n';
    } else if (format == "csv") {
        os << report_csv_header() << '\n';
        for (const auto& r : reports) os << report_to_csv(r) << '\n';
    } else {
        for (const auto& r : reports) {
            os << to_string(r.id);
            if (!r.graph_hash.empty()) os << "  graph=" << r.graph_hash << " n=" << r.n;
            os << " m=" << r.m;
            if (!r.tau.empty()) os << " tau=" << r.tau;
            if (!r.param.empty()) os << " " << r.param;
            os << "  ->  " << to_string(r.verdict);
            if (r.sign != 0) os << " (sign " << (r.sign > 0 ? "+1" : "-1") << ")";
            if (r.verdict != Verdict::PASS) {
                if (!r.lhs.empty()) os << "\n    lhs = " << r.lhs << "\n    rhs = " << r.rhs;
                if (!r.error.empty()) os << "\n    error: " << r.error;
            }
            os << '\n';
        }
    }
}

int summarize(const std::vector<VerificationReport>& reports, std::ostream& os) {
    std::size_t pass = 0, fail = 0, skip = 0, cex = 0, err = 0;
    for (const auto& r : reports) {
        switch (r.verdict) {
        case Verdict::PASS: ++pass; break;
        case Verdict::FAIL: ++fail; break;
        case Verdict::SKIPPED_ZERO: ++skip; break;
        case Verdict::COUNTEREXAMPLE: ++cex; break;
        case Verdict::ERROR: ++err; break;
        }
    }
    os << reports.size() << " case(s): " << pass << " pass, " << fail << " fail, " << skip
       << " skipped-zero, " << cex << " counterexample(s), " << err << " error(s)\n";
    if (cex > 0)
        os << "COUNTEREXAMPLE payloads above are exact; they refute a conjectural identity "
              "as stated and deserve inspection.\n";
    return fail > 0 ? kExitFail : 0;
}

// ---------------------------------------------------------------- walkdet --

struct WalkdetArgs {
    CorpusCli corpus;
    std::string tau_text = "0";
    int m = 0; // 0 = no product requested
};

int run_walkdet(const WalkdetArgs& a) {
    std::vector<CorpusEntry> corpus = build_corpus(a.corpus, false);
    if (corpus.empty()) throw UsageError("walkdet needs a graph (--named/--graph/--random)");
    const Rational tau = parse_rational(a.tau_text);
    for (const CorpusEntry& e : corpus) {
        const Graph& g = e.graph;
        std::cout << "graph " << e.name << ": n=" << g.n() << ", " << g.edge_count()
                  << " edge(s), hash=" << graph_hash(g) << "\n";
        std::cout << "tau = " << pretty_rational(tau) << "\n";
        const ExactMatrix at = a_tau_matrix(g, tau);
        const Rational det_at = det_exact(at);
        const Rational det_w = det_exact(walk_matrix(at));
        std::cout << "det A_tau(G)  = " << pretty_rational(det_at) << "\n";
        std::cout << "det W_tau(G)  = " << pretty_rational(det_w) << "\n";
        if (a.m >= 1) {
            const int m = a.m;
            const Rational lhs = det_exact(walk_matrix(a_tau_matrix(rooted_product_path(g, m), tau)));
            const ExactMatrix middle =
                ExactMatrix::identity(g.n()) * (Rational(1) - tau * tau) + at * tau;
            const Rational det_mid = det_exact(middle);
            const Rational rhs = pow_rational(det_at, m / 2) *
                                 pow_rational(det_mid, (m - 1) / 2) * pow_rational(det_w, m);
            std::cout << "m = " << m << "\n";
            std::cout << "det W_tau(G o P_m) = " << pretty_rational(lhs) << "\n";
            std::cout << "rhs breakdown:\n";
            std::cout << "  det A_tau(G)^floor(m/2)               = "
                      << pretty_rational(pow_rational(det_at, m / 2)) << "\n";
            std::cout << "  det((1-tau^2)I+tau A_tau)^floor((m-1)/2) = "
                      << pretty_rational(pow_rational(det_mid, (m - 1) / 2)) << "\n";
            std::cout << "  det W_tau(G)^m                        = "
                      << pretty_rational(pow_rational(det_w, m)) << "\n";
            std::cout << "  |rhs| = " << pretty_rational(abs_rational(rhs)) << "\n";
            const bool match = abs_rational(lhs) == abs_rational(rhs);
            std::cout << "|lhs| = |rhs|: " << (match ? "yes" : "NO");
            if (match && !(rhs == 0))
                std::cout << " (sign " << (lhs == rhs ? "+1" : "-1") << ")";
            std::cout << "\n";
        }
    }
    return 0;
}

// ----------------------------------------------------- verify and sweep ----

struct VerifyArgs {
    CorpusCli corpus;
    std::vector<std::string> identity_names;
    std::string m_text;
    std::string tau_text;
    std::string t_text;
    std::string lambda_text;
    std::string format = "pretty";
    std::string out_path;
    int threads = 0;
    bool timings = false;
    // sweep-mode defaults
    bool sweep_mode = false;
    int random_count = 18;
    std::uint64_t seed = 42;
};

int run_verify(const VerifyArgs& a) {
    SweepOptions opt;
    for (const std::string& name : a.identity_names)
        opt.identities.push_back(identity_from_string(name));
    if (!a.m_text.empty()) opt.m_values = parse_int_list(a.m_text);
    if (!a.tau_text.empty()) opt.taus = parse_rational_list(a.tau_text);
    if (!a.t_text.empty()) opt.t_values = parse_rational_list(a.t_text);
    if (!a.lambda_text.empty()) opt.lambda_values = parse_rational_list(a.lambda_text);
    opt.threads = a.threads;
    opt.record_timing = a.timings;

    std::vector<CorpusEntry> corpus = build_corpus(a.corpus, a.sweep_mode ? false : true);
    if (a.sweep_mode && a.corpus.named.empty() && a.corpus.files.empty() &&
        a.corpus.random_specs.empty()) {
        corpus = named_corpus();
        auto rnd = random_corpus(a.random_count, a.seed, {4, 5, 6, 7},
                                 {Rational(1, 2), Rational(1, 3), Rational(3, 4)});
        corpus.insert(corpus.end(), rnd.begin(), rnd.end());
    }

    const std::vector<VerificationReport> reports = run_sweep(corpus, opt);

    if (!a.out_path.empty()) {
        std::ofstream out(a.out_path);
        if (!out) throw UsageError("cannot write file: " + a.out_path);
        write_reports(reports, a.format, out, a.timings);
    } else {
        write_reports(reports, a.format, std::cout, a.timings);
    }
    return summarize(reports, std::cout);
}

// -------------------------------------------------------------- resultant --

// Polynomial specs: raw text ("1 + -3*x + x^2"-style accepted by the library
// parser) or family terms joined by top-level '+':
//   Z:m=5,tau=1/2  U:n=7  W4:n=7  Zsum:m=5,tau=1/2  Wsum:m=5  Zsum-W4:m=5
// each optionally scaled: "3*W4:n=1", "1/2*U:n=2", or "t*W4:n=1" with --t.
UniPoly family_poly(const std::string& term, const std::optional<Rational>& t_value) {
    auto colon = term.find(':');
    if (colon == std::string::npos) throw UsageError("bad family term '" + term + "'");
    const std::string fam = term.substr(0, colon);
    int m = -1, n = -1;
    Rational tau(0);
    bool have_tau = false;
    for (const auto& [key, value] : parse_kv(term.substr(colon + 1))) {
        if (key == "m")
            m = std::stoi(value);
        else if (key == "n")
            n = std::stoi(value);
        else if (key == "tau") {
            tau = parse_rational(value);
            have_tau = true;
        } else if (key == "t") {
            (void)t_value;
            throw UsageError("pass t via --t, not inside the family spec");
        } else
            throw UsageError("unknown key '" + key + "' in '" + term + "'");
    }
    if (fam == "Z") {
        if (m < 0) throw UsageError("Z needs m=<k>");
        return z_poly(m, tau);
    }
    if (fam == "Zsum") {
        if (m < 1) throw UsageError("Zsum needs m>=1");
        return z_sum(m, tau);
    }
    if (fam == "U") {
        if (n < 0) throw UsageError("U needs n=<k>");
        if (have_tau) throw UsageError("U takes no tau");
        return chebyshev_u(n);
    }
    if (fam == "W4") {
        if (n < 0) throw UsageError("W4 needs n=<k>");
        if (have_tau) throw UsageError("W4 takes no tau");
        return chebyshev_w4(n);
    }
    if (fam == "Wsum" || fam == "Zsum-W4") {
        if (m < 1) throw UsageError(fam + " needs m>=1");
        return chebyshev_w4_sum(m);
    }
    throw UsageError("unknown polynomial family '" + fam + "'");
}

UniPoly parse_poly_spec(const std::string& spec, const std::optional<Rational>& t_value) {
    if (spec.find(':') == std::string::npos) {
        try {
            return poly_from_text(spec);
        } catch (const FormatError& e) {
            throw UsageError("cannot parse polynomial '" + spec + "': " + e.what());
        }
    }
    UniPoly acc;
    std::istringstream is(spec);
    std::string term;
    while (std::getline(is, term, '+')) {
        term.erase(0, term.find_first_not_of(" \t"));
        term.erase(term.find_last_not_of(" \t") + 1);
        if (term.empty()) throw UsageError("empty term in '" + spec + "'");
        Rational factor(1);
        auto star = term.find('*');
        if (star != std::string::npos && term.find(':') > star) {
            const std::string f = term.substr(0, star);
            if (f == "t") {
                if (!t_value) throw UsageError("spec uses t; pass a value with --t");
                factor = *t_value;
            } else {
                factor = parse_rational(f);
            }
            term = term.substr(star + 1);
        }
        acc = acc + family_poly(term, t_value) * factor;
    }
    return acc;
}

struct ResultantArgs {
    std::string f_spec;
    std::string g_spec;
    std::string t_text;
};

int run_resultant(const ResultantArgs& a) {
    std::optional<Rational> t;
    if (!a.t_text.empty()) t = parse_rational(a.t_text);
    const UniPoly f = parse_poly_spec(a.f_spec, t);
    const UniPoly g = parse_poly_spec(a.g_spec, t);
    if (f.is_zero() || g.is_zero()) throw UsageError("resultant of a zero polynomial is undefined");
    std::cout << "f = " << poly_to_text(f) << "\n";
    std::cout << "g = " << poly_to_text(g) << "\n";
    std::cout << "Res(f, g) = " << pretty_rational(sylvester_resultant(f, g)) << "\n";
    return 0;
}

// --------------------------------------------------------------- charpoly --

struct CharpolyArgs {
    CorpusCli corpus;
    std::string matrix_path;
    std::string tau_text = "0";
    int m = 0;
};

int run_charpoly(const CharpolyArgs& a) {
    if (!a.matrix_path.empty()) {
        const ExactMatrix mat = matrix_from_text(read_file(a.matrix_path));
        std::cout << poly_to_text(charpoly_exact(mat)) << "\n";
        return 0;
    }
    std::vector<CorpusEntry> corpus = build_corpus(a.corpus, false);
    if (corpus.empty())
        throw UsageError("charpoly needs a graph (--named/--graph/--random) or --matrix");
    const Rational tau = parse_rational(a.tau_text);
    for (const CorpusEntry& e : corpus) {
        Graph g = a.m >= 1 ? rooted_product_path(e.graph, a.m) : e.graph;
        std::cout << e.name;
        if (a.m >= 1) std::cout << " o P_" << a.m;
        std::cout << ", tau=" << to_string(tau) << ":\n  "
                  << poly_to_text(charpoly_exact(a_tau_matrix(g, tau))) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- report --

struct ReportArgs {
    std::string in_path;
    std::string format = "summary";
};

int run_report(const ReportArgs& a) {
    std::ifstream in(a.in_path);
    if (!in) throw UsageError("cannot open report file: " + a.in_path);
    std::vector<VerificationReport> reports;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            reports.push_back(report_from_json(line));
        } catch (const FormatError& e) {
            throw UsageError(a.in_path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (a.format == "csv") {
        write_reports(reports, "csv", std::cout, true);
    } else if (a.format == "pretty") {
        write_reports(reports, "pretty", std::cout, false);
    }
    return summarize(reports, std::cout);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact walk-matrix determinant identities for rooted products G o P_m"};
    app.require_subcommand(1);

    WalkdetArgs wd;
    CLI::App* walkdet = app.add_subcommand(
        "walkdet", "det A_tau, det W_tau, and the product-graph determinant breakdown");
    add_corpus_options(walkdet, wd.corpus);
    walkdet->add_option("--tau", wd.tau_text, "exact rational tau (\"p\" or \"p/q\")");
    walkdet->add_option("--m", wd.m, "path order for the rooted product");

    VerifyArgs vf;
    CLI::App* verify = app.add_subcommand("verify", "verify identities over a graph corpus");
    add_corpus_options(verify, vf.corpus);
    verify->add_option("--identity", vf.identity_names,
                       "identities to check (default: all); e.g. thm-wq conj conres lem44");
    verify->add_option("--m", vf.m_text, "m values: \"3\", \"2,4\", or \"2..5\"");
    verify->add_option("--tau", vf.tau_text, "comma-separated exact rationals");
    verify->add_option("--t", vf.t_text, "t values for LEM44");
    verify->add_option("--lambda", vf.lambda_text, "lambda values for COR34/COR35");
    verify->add_option("--format", vf.format, "pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    verify->add_option("--out", vf.out_path, "write reports to file instead of stdout");
    verify->add_option("--threads", vf.threads, "worker threads (0 = WALKMAT_THREADS/auto)");
    verify->add_flag("--timings", vf.timings, "record per-case elapsed_ms (breaks byte-identical output)");

    VerifyArgs sw;
    sw.sweep_mode = true;
    sw.format = "json";
    CLI::App* sweep = app.add_subcommand(
        "sweep", "full default verification sweep (named corpus + seeded random graphs)");
    add_corpus_options(sweep, sw.corpus);
    sweep->add_option("--identity", sw.identity_names, "identities to check (default: all)");
    sweep->add_option("--m", sw.m_text, "m values (default 2..5)");
    sweep->add_option("--tau", sw.tau_text, "tau values (default 0,1,1/2,2,-1,3/7)");
    sweep->add_option("--t", sw.t_text, "t values for LEM44");
    sweep->add_option("--lambda", sw.lambda_text, "lambda values for COR34/COR35");
    sweep->add_option("--count", sw.random_count, "random graphs to add (default 18)");
    sweep->add_option("--seed", sw.seed, "base seed for the random corpus (default 42)");
    sweep->add_option("--format", sw.format, "json|csv|pretty (default json)")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    sweep->add_option("--out", sw.out_path, "write reports to file instead of stdout");
    sweep->add_option("--threads", sw.threads, "worker threads (0 = WALKMAT_THREADS/auto)");
    sweep->add_flag("--timings", sw.timings, "record per-case elapsed_ms");

    ResultantArgs rs;
    CLI::App* resultant =
        app.add_subcommand("resultant", "exact Sylvester resultant of two polynomials");
    resultant->add_option("f", rs.f_spec, "first polynomial (text or family spec)")->required();
    resultant->add_option("g", rs.g_spec, "second polynomial")->required();
    resultant->add_option("--t", rs.t_text, "value substituted for t in family specs");

    CharpolyArgs cp;
    CLI::App* charpoly =
        app.add_subcommand("charpoly", "exact characteristic polynomial of A_tau");
    add_corpus_options(charpoly, cp.corpus);
    charpoly->add_option("--matrix", cp.matrix_path, "matrix file (rows of p/q entries)");
    charpoly->add_option("--tau", cp.tau_text, "exact rational tau");
    charpoly->add_option("--m", cp.m, "path order: charpoly of G o P_m instead of G");

    ReportArgs rp;
    CLI::App* report = app.add_subcommand("report", "summarize a JSONL report file");
    report->add_option("file", rp.in_path, "JSONL report file")->required();
    report->add_option("--format", rp.format, "summary|pretty|csv")
        ->check(CLI::IsMember({"summary", "pretty", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*walkdet) return run_walkdet(wd);
        if (*verify) return run_verify(vf);
        if (*sweep) return run_verify(sw);
        if (*resultant) return run_resultant(rs);
        if (*charpoly) return run_charpoly(cp);
        if (*report) return run_report(rp);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
