#include "doctest.h"

#include "walkmat/errors.hpp"
#include "walkmat/exact_matrix.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/poly.hpp"
#include "walkmat/verify.hpp"

#include <algorithm>
#include <set>

using namespace walkmat;

TEST_CASE("named corpus") {
    const std::vector<CorpusEntry> corpus = named_corpus();
    CHECK(corpus.size() == 7);
    std::set<std::string> names;
    for (const CorpusEntry& e : corpus) {
        names.insert(e.name);
        CHECK(e.seed == 0);
        CHECK(named_graph(e.name) == e.graph);
    }
    CHECK(names == std::set<std::string>{"p2", "p3", "c4", "k3", "paw", "k13", "asym6"});
    CHECK(named_graph("star") == named_graph("k13"));
    CHECK(named_graph("paw").n() == 4);
    CHECK(named_graph("paw").edge_count() == 4);
    CHECK(named_graph("asym6").n() == 6);
    CHECK_THROWS_AS(named_graph("petersen"), FormatError);

    CHECK(graph_hash(named_graph("paw")) == "be653c28580e8ae0");
    CHECK(graph_hash(named_graph("asym6")) == "4f6265b77a743f02");
}

TEST_CASE("random graphs are reproducible") {
    const Graph g = random_graph(6, Rational(1, 2), 42);
    CHECK(g == graph_from_edge_list(6, {{1, 2}, {1, 3}, {2, 6}, {4, 6}}));
    CHECK(graph_hash(g) == "084923a6350f3842");
    CHECK(random_graph(6, Rational(1, 2), 42) == g);
    CHECK(random_graph(6, Rational(1, 2), 43) != g);

    CHECK(random_graph(5, 0, 999).edge_count() == 0);
    CHECK(random_graph(5, 1, 999) == complete_graph(5));
    CHECK_THROWS_AS(random_graph(5, Rational(3, 2), 1), InvalidProbability);
    CHECK_THROWS_AS(random_graph(5, Rational(-1, 2), 1), InvalidProbability);

    const std::vector<CorpusEntry> corpus =
        random_corpus(10, 7, {4, 5}, {Rational(1, 2)});
    CHECK(corpus.size() == 10);
    const std::vector<CorpusEntry> again =
        random_corpus(10, 7, {4, 5}, {Rational(1, 2)});
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(corpus[i].graph == again[i].graph);
        CHECK(corpus[i].seed == again[i].seed);
        CHECK(corpus[i].seed != 0);
        CHECK(corpus[i].name == again[i].name);
    }
}

TEST_CASE("adjacency walk theorem verifier") {
    // P_3: det A = 0 and det W_A = 0, so both sides vanish.
    const VerificationReport zero = verify_thm_wa(named_graph("p3"), 2);
    CHECK(zero.verdict == Verdict::PASS);
    CHECK(zero.lhs == "0");
    CHECK(zero.rhs == "0");
    CHECK(zero.sign == 0);
    CHECK(zero.id == Identity::THM_WA);
    CHECK(zero.n == 3);
    CHECK(zero.m == 2);
    CHECK(zero.tau == "0");

    const VerificationReport live = verify_thm_wa(named_graph("asym6"), 3);
    CHECK(live.verdict == Verdict::PASS);
    CHECK(live.lhs == "-512");
    CHECK(live.rhs == "-512"); // signed product; here the sign law gives +1
    CHECK(live.sign == 1);
    CHECK(live.graph_hash == graph_hash(named_graph("asym6")));
}

TEST_CASE("signless walk theorem verifier") {
    // P_2: det W_Q = 0 forces the product side to zero.
    const VerificationReport r = verify_thm_wq(named_graph("p2"), 3);
    CHECK(r.verdict == Verdict::PASS);
    CHECK(r.rhs == "0");
    CHECK(r.lhs == "0");
    CHECK(r.tau == "1");

    const VerificationReport live = verify_thm_wq(named_graph("asym6"), 3);
    CHECK(live.verdict == Verdict::PASS);
    CHECK(live.sign != 0);

    // Direct restatement: |det W_Q(GoP_m)| = |det Q|^(m-1) |det W_Q(G)|^m.
    const Graph g = named_graph("paw");
    const ExactMatrix q = a_tau_matrix(g, 1);
    const Rational detq = det_exact(q);
    const Rational detw = det_exact(walk_matrix(q));
    const ExactMatrix big = a_tau_matrix(rooted_product_path(g, 4), 1);
    const Rational lhs = det_exact(walk_matrix(big));
    Rational rhs = detq * detq * detq;
    for (int i = 0; i < 4; ++i) rhs *= detw;
    CHECK(abs(lhs) == abs(rhs));
}

TEST_CASE("tau interpolation agrees with the endpoint theorems") {
    const Graph g = named_graph("asym6");
    for (int m = 2; m <= 4; ++m) {
        const VerificationReport c0 = verify_conjecture(g, m, 0);
        const VerificationReport a = verify_thm_wa(g, m);
        CHECK(c0.verdict == Verdict::PASS);
        CHECK(c0.lhs == a.lhs);
        CHECK(c0.rhs == a.rhs);

        const VerificationReport c1 = verify_conjecture(g, m, 1);
        const VerificationReport q = verify_thm_wq(g, m);
        CHECK(c1.verdict == Verdict::PASS);
        CHECK(c1.lhs == q.lhs);
        CHECK(c1.rhs == q.rhs);
    }

    const VerificationReport mid = verify_conjecture(named_graph("paw"), 4, Rational(1, 2));
    CHECK(mid.verdict == Verdict::PASS);
    CHECK(mid.id == Identity::CONJ_TAU);
    CHECK(mid.tau == "1/2");
}

TEST_CASE("resultant closed form verifier") {
    const VerificationReport r = verify_conres(5, Rational(3, 7));
    CHECK((r.verdict == Verdict::PASS || r.verdict == Verdict::COUNTEREXAMPLE));
    CHECK(r.verdict == Verdict::PASS);
    // Payloads are polynomial texts that parse back.
    const UniPoly lhs = poly_from_text(r.lhs);
    const UniPoly rhs = poly_from_text(r.rhs);
    CHECK(lhs == rhs);
    CHECK(lhs.degree() == 4);
    CHECK(r.m == 5);
    CHECK(r.n == 0);
    CHECK(r.graph_hash.empty());
}

TEST_CASE("numeric product walk determinant check") {
    const VerificationReport ok = verify_prop32(named_graph("asym6"), 3, 1);
    CHECK(ok.verdict == Verdict::PASS);

    // P_3 at tau = 1 has det W = 0: nothing to compare against.
    const VerificationReport skip = verify_prop32(named_graph("p3"), 2, 1);
    CHECK(skip.verdict == Verdict::SKIPPED_ZERO);
}

TEST_CASE("resultant corollaries and lemmas") {
    const VerificationReport c34 = verify_cor34(6, Rational(1, 2), Rational(5, 2));
    CHECK(c34.verdict == Verdict::PASS);

    const VerificationReport c35 = verify_cor35(4, Rational(1, 2), 0, Rational(5, 2));
    CHECK(c35.verdict == Verdict::PASS);
    CHECK(c35.param == "lambda1=0;lambda2=5/2");

    const VerificationReport l44 = verify_lem44(2, 3);
    CHECK(l44.verdict == Verdict::PASS);
    CHECK(l44.lhs == "-8"); // 2^2 (1-3) = -8
    const VerificationReport l44b = verify_lem44(5, Rational(7, 3));
    CHECK(l44b.verdict == Verdict::PASS);

    const VerificationReport p45 = verify_prop45(named_graph("c4"), 3);
    CHECK(p45.verdict == Verdict::PASS);

    const VerificationReport l21 = verify_lem21(7, Rational(-2, 9));
    CHECK(l21.verdict == Verdict::PASS);
    const VerificationReport l25 = verify_lem25(6, Rational(3, 7));
    CHECK(l25.verdict == Verdict::PASS);

    const VerificationReport l28 = verify_lem28_factor(named_graph("k3"), 3, Rational(1, 2));
    CHECK(l28.verdict == Verdict::PASS);

    const VerificationReport l29 = verify_lem29(named_graph("c4"), 3, 1);
    CHECK(l29.verdict == Verdict::PASS);
}

TEST_CASE("report JSON round trip") {
    VerificationReport r;
    r.id = Identity::COR35;
    r.graph_hash = "0123456789abcdef";
    r.n = 6;
    r.m = 4;
    r.tau = "3/7";
    r.seed = 12345678901234567ULL;
    r.param = "lambda1=0;lambda2=5/2";
    r.lhs = "25/16";
    r.rhs = "-25/16";
    r.sign = -1;
    r.verdict = Verdict::PASS;

    const std::string line = report_to_json(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(line.find("\"identity\":\"COR35\"") != std::string::npos);
    CHECK(line.find("\"sign\":\"-1\"") != std::string::npos);
    CHECK(line.find("elapsed_ms") == std::string::npos);

    const VerificationReport back = report_from_json(line);
    CHECK(back.id == r.id);
    CHECK(back.graph_hash == r.graph_hash);
    CHECK(back.n == r.n);
    CHECK(back.m == r.m);
    CHECK(back.tau == r.tau);
    CHECK(back.seed == r.seed);
    CHECK(back.param == r.param);
    CHECK(back.lhs == r.lhs);
    CHECK(back.rhs == r.rhs);
    CHECK(back.sign == r.sign);
    CHECK(back.verdict == r.verdict);

    r.elapsed_ms = 2.5;
    CHECK(report_to_json(r, true).find("\"elapsed_ms\":2.5") != std::string::npos);
    CHECK(report_to_json(r, false).find("elapsed_ms") == std::string::npos);

    CHECK_THROWS_AS(report_from_json("not json"), FormatError);
    CHECK_THROWS_AS(report_from_json("{\"identity\":\"NOPE\"}"), FormatError);
}

TEST_CASE("report CSV") {
    VerificationReport r;
    r.id = Identity::LEM44;
    r.m = 3;
    r.tau = "0";
    r.param = "t=1/2";
    r.lhs = "16";
    r.rhs = "16";
    r.sign = 1;
    r.verdict = Verdict::PASS;
    const std::string header = report_csv_header();
    CHECK(header.substr(0, 9) == "identity,");
    const std::string row = report_to_csv(r);
    CHECK(row.find("LEM44") != std::string::npos);
    CHECK(row.find("PASS") != std::string::npos);
    CHECK(std::count(header.begin(), header.end(), ',') ==
          std::count(row.begin(), row.end(), ','));

    // Fields containing commas or quotes get quoted and escaped.
    r.error = "bad, \"thing\"";
    const std::string noisy = report_to_csv(r);
    CHECK(noisy.find("\"bad, \"\"thing\"\"\"") != std::string::npos);
    CHECK(std::count(header.begin(), header.end(), ',') <=
          std::count(noisy.begin(), noisy.end(), ','));
}

TEST_CASE("identity and verdict tokens") {
    for (Identity id : all_identities()) CHECK(identity_from_string(to_string(id)) == id);
    for (Verdict v : {Verdict::PASS, Verdict::FAIL, Verdict::SKIPPED_ZERO,
                      Verdict::COUNTEREXAMPLE, Verdict::ERROR})
        CHECK(verdict_from_string(to_string(v)) == v);
    CHECK(identity_from_string("thm-wa") == Identity::THM_WA);
    CHECK(identity_from_string("conj") == Identity::CONJ_TAU);
    CHECK(identity_from_string("lem28") == Identity::LEM28_FACTOR);
    CHECK_THROWS_AS(identity_from_string("bogus"), FormatError);
    CHECK_THROWS_AS(verdict_from_string("bogus"), FormatError);
    CHECK(all_identities().size() == 13);
}

TEST_CASE("sweep determinism and shape") {
    CHECK(run_sweep({}, SweepOptions{}).empty());

    SweepOptions one;
    one.identities = {Identity::THM_WA};
    one.m_values = {2};
    const std::vector<VerificationReport> single =
        run_sweep({{"p3", named_graph("p3"), 0}}, one);
    REQUIRE(single.size() == 1);
    CHECK(single[0].id == Identity::THM_WA);
    CHECK(single[0].verdict == Verdict::PASS);

    SweepOptions opt;
    opt.identities = {Identity::THM_WA, Identity::THM_WQ, Identity::CONJ_TAU,
                      Identity::LEM44, Identity::COR34};
    opt.m_values = {2, 3};
    opt.taus = {Rational(0), Rational(1)};
    opt.t_values = {Rational(0), Rational(3)};
    opt.lambda_values = {Rational(1)};
    const std::vector<CorpusEntry> corpus = {{"p3", named_graph("p3"), 0},
                                             {"c4", named_graph("c4"), 0}};

    opt.threads = 1;
    const std::vector<VerificationReport> serial = run_sweep(corpus, opt);
    opt.threads = 4;
    const std::vector<VerificationReport> parallel = run_sweep(corpus, opt);

    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(report_to_json(serial[i]) == report_to_json(parallel[i]));

    // Generation order: identities in the order given, graphs in corpus order.
    CHECK(serial[0].id == Identity::THM_WA);
    const std::size_t wa_count = 4; // 2 graphs x 2 m
    CHECK(serial[wa_count - 1].id == Identity::THM_WA);
    CHECK(serial[wa_count].id == Identity::THM_WQ);
    for (const VerificationReport& r : serial) CHECK(r.verdict == Verdict::PASS);
}

TEST_CASE("sweep wraps case failures as ERROR verdicts") {
    SweepOptions opt;
    opt.identities = {Identity::CONRES};
    opt.m_values = {1}; // resultant_in_t rejects m < 2
    opt.taus = {Rational(0)};
    const std::vector<VerificationReport> reports =
        run_sweep({{"p2", named_graph("p2"), 0}}, opt);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].verdict == Verdict::ERROR);
    CHECK_FALSE(reports[0].error.empty());
}

TEST_CASE("oversized sweep cases degrade to ERROR reports") {
    SweepOptions opt;
    opt.identities = {Identity::THM_WA};
    opt.m_values = {40}; // 7 * 40 = 280 > the nm <= 64 sweep guard
    const std::vector<VerificationReport> reports =
        run_sweep({{"big", complete_graph(7), 0}}, opt);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].verdict == Verdict::ERROR);
    CHECK(reports[0].error.find("size") != std::string::npos);
}
