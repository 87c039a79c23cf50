#pragma once

#include "walkmat/graph.hpp"
#include "walkmat/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace walkmat {

// Wire vocabulary for verification reports.  The tokens are part of the
// report format; identity_from_string also accepts lowercase/dashed spellings
// and the short aliases "conj" and "lem28".
enum class Identity {
    THM_WA,       // |det W_A(GoP_m)| = |det A|^floor(m/2) |det W_A|^m
    THM_WQ,       // |det W_Q(GoP_m)| = |det Q|^(m-1) |det W_Q|^m
    CONJ_TAU,     // conjectural tau-interpolation of the two theorems
    CONRES,       // resultant-in-t closed form (conjectural off tau=0,1)
    PROP32,       // numeric: |det W_tau(GoP_m)| vs |det W_tau|^m prod |Z(mu)|
    COR34,        // exact: Res(Z_m+(tau-lam)Z_{m-1}, Z_{m-1}) = (-1)^(m(m-1)/2)
    COR35,        // exact: Res(p(lam2), p(lam1)) = (-1)^(m(m-1)/2) (lam2-lam1)^m
    LEM44,        // exact: Res(W_m+tW_{m-1}, sum W_k) = 2^(m(m-1)) (1-t)^(m-1)
    PROP45,       // exact: Res(charpoly(Q), R(1-x)) = (det Q)^(m-1)
    LEM29,        // float: eta vectors are eigenvectors of the product matrix
    LEM21,        // exact: Z_k = charpoly of the tridiagonal B_k
    LEM25,        // exact: charpoly(A_tau(P_k)) = Z_k + tau Z_{k-1}
    LEM28_FACTOR, // exact: Z_{m-1}^n phi(G; num/den) = charpoly(A_tau(GoP_m))
};

enum class Verdict { PASS, FAIL, SKIPPED_ZERO, COUNTEREXAMPLE, ERROR };

std::string to_string(Identity id);
std::string to_string(Verdict v);
Identity identity_from_string(const std::string& text);
Verdict verdict_from_string(const std::string& text);
const std::vector<Identity>& all_identities();

struct VerificationReport {
    Identity id = Identity::THM_WA;
    std::string graph_hash; // empty for graph-free identities
    int n = 0;              // 0 when no graph is involved
    int m = 0;              // path order, or polynomial order k for LEM21/LEM25
    std::string tau;        // exact rational text; empty when tau plays no role
    std::uint64_t seed = 0; // provenance seed of a random corpus graph, else 0
    std::string param;      // extra inputs, ';'-separated "key=value" pairs
    std::string lhs;        // exact rational / polynomial text, or float text
    std::string rhs;
    int sign = 0;           // +1 / -1 when RHS != 0 and |LHS| = |RHS|, else 0 = NA
    Verdict verdict = Verdict::ERROR;
    double elapsed_ms = -1; // negative = not recorded (default keeps runs byte-identical)
    std::string error;      // diagnostic for ERROR verdicts
};

// One JSON object per line, fixed key order. elapsed_ms appears only when
// with_timing is set and a timing was recorded.
std::string report_to_json(const VerificationReport& r, bool with_timing = false);
VerificationReport report_from_json(const std::string& line);
std::string report_csv_header();
std::string report_to_csv(const VerificationReport& r);

struct CorpusEntry {
    std::string name;
    Graph graph;
    std::uint64_t seed = 0; // 0 for named graphs
};

// Named corpus: p2, p3, c4, k3, paw, k13, asym6 (a 6-vertex asymmetric graph
// with nonzero walk determinants).  named_graph accepts "star" for k13.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();
std::vector<CorpusEntry> named_corpus();

// Erdos-Renyi G(n,p) from xoshiro256** seeded through splitmix64.  Pairs are
// visited in co-lexicographic order ((i,j) with j ascending, then i), one
// 64-bit draw per pair, edge iff r < p*2^64 decided exactly over integers, so
// corpora are bit-reproducible.
Graph random_graph(int n, const Rational& p, std::uint64_t seed);
std::vector<CorpusEntry> random_corpus(int count, std::uint64_t seed,
                                       const std::vector<int>& n_values,
                                       const std::vector<Rational>& p_values);

// Individual identity checks.  Exact theorem checks PASS iff |LHS| = |RHS|
// exactly (sign recorded as data); conjectural identities report mismatches
// as COUNTEREXAMPLE with full exact payloads, proven ones as FAIL.
VerificationReport verify_thm_wa(const Graph& g, int m);
VerificationReport verify_thm_wq(const Graph& g, int m);
VerificationReport verify_conjecture(const Graph& g, int m, const Rational& tau);
VerificationReport verify_conres(int m, const Rational& tau);
VerificationReport verify_prop32(const Graph& g, int m, const Rational& tau);
VerificationReport verify_cor34(int m, const Rational& tau, const Rational& lambda);
VerificationReport verify_cor35(int m, const Rational& tau, const Rational& lambda1,
                                const Rational& lambda2);
VerificationReport verify_lem44(int m, const Rational& t);
VerificationReport verify_prop45(const Graph& g, int m);
VerificationReport verify_lem29(const Graph& g, int m, const Rational& tau);
VerificationReport verify_lem21(int k, const Rational& tau);
VerificationReport verify_lem25(int k, const Rational& tau);
VerificationReport verify_lem28_factor(const Graph& g, int m, const Rational& tau);

struct SweepOptions {
    std::vector<Identity> identities; // empty = all
    std::vector<int> m_values{2, 3, 4, 5};
    std::vector<Rational> taus{Rational(0), Rational(1), Rational(1, 2),
                               Rational(2), Rational(-1), Rational(3, 7)};
    std::vector<Rational> t_values{Rational(0), Rational(1), Rational(-1),
                                   Rational(3), Rational(1, 2), Rational(7, 3)};
    std::vector<Rational> lambda_values{Rational(0), Rational(1), Rational(-3),
                                        Rational(5, 2)};
    int threads = 0;            // <= 0: WALKMAT_THREADS env, else hardware
    bool record_timing = false; // keep off for byte-identical reports
};

// Cartesian sweep over the corpus and options.  Cases run concurrently but
// reports come back in deterministic generation order: identity, then graph,
// then m, then tau, then extra parameters.  Per-case exceptions become
// ERROR-verdict reports; the sweep itself never throws on a case.
std::vector<VerificationReport> run_sweep(const std::vector<CorpusEntry>& corpus,
                                          const SweepOptions& opt);

} // namespace walkmat
