// msym: exact enumeration of the margin-constrained sets L(alpha,beta,n),
// the product rule for elementary multi-symmetric functions, transportation
// polytope checks, and the biword/RSK bijections. All arithmetic is exact;
// all output is deterministic given the flags.

#include <cstdint>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "msym/bijections.hpp"
#include "msym/lset.hpp"
#include "msym/multisym.hpp"
#include "msym/parse.hpp"
#include "msym/transport.hpp"

using namespace msym;

namespace {

// Flag-value conversion failures are usage errors (exit 2); anything a core
// operation throws afterwards is a domain/precondition error (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
auto usage_scope(const std::string& flag, F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Margin margin_flag(const std::string& flag, const std::string& csv) {
    return usage_scope(flag, [&] { return parse_int_vector(csv); });
}

std::vector<Rational> rational_flag(const std::string& flag, const std::string& csv) {
    return usage_scope(flag, [&] { return parse_rational_vector(csv); });
}

std::string format_margin(const Margin& m) {
    std::string out = "(";
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(m[k]);
    }
    return out + ")";
}

std::string format_vec(const std::vector<Int>& v) { return format_margin(v); }

BiWord make_biword(const std::vector<Int>& top, const std::vector<Int>& bottom) {
    if (top.size() != bottom.size())
        throw std::domain_error("top and bottom lines differ in length");
    std::vector<BiWord::Pair> pairs;
    pairs.reserve(top.size());
    for (std::size_t r = 0; r < top.size(); ++r)
        pairs.emplace_back(top[r], bottom[r]);
    return BiWord(std::move(pairs));
}

Tableau parse_tableau(const std::string& flag, const std::string& text) {
    std::vector<std::vector<Int>> rows;
    if (!text.empty()) {
        std::size_t start = 0;
        for (;;) {
            std::size_t sep = text.find(';', start);
            std::string piece = text.substr(
                start, sep == std::string::npos ? std::string::npos : sep - start);
            rows.push_back(usage_scope(flag, [&] { return parse_int_vector(piece); }));
            if (sep == std::string::npos) break;
            start = sep + 1;
        }
    }
    return Tableau(std::move(rows));
}

GammaMatrix parse_matrix(const std::string& flag, const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::size_t start = 0;
    for (;;) {
        std::size_t sep = text.find(';', start);
        std::string piece = text.substr(
            start, sep == std::string::npos ? std::string::npos : sep - start);
        rows.push_back(usage_scope(flag, [&] { return parse_int_vector(piece); }));
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return GammaMatrix::from_rows(rows);
}

std::string biword_text(const BiWord& w) {
    std::string top = "top:   ", bottom = "bottom:";
    for (const auto& [i, j] : w.pairs()) {
        top += " " + std::to_string(i);
        bottom += " " + std::to_string(j);
    }
    return top + "\n" + bottom + "\n";
}

// Component name inside a composite tuple (f_1..f_p, g_1..g_q, f_i*g_j).
std::string component_name(std::size_t index1, std::size_t p, std::size_t q) {
    if (index1 <= p) return "f" + std::to_string(index1);
    if (index1 <= p + q) return "g" + std::to_string(index1 - p);
    std::size_t r = index1 - p - q - 1;
    return "f" + std::to_string(r / q + 1) + "*g" + std::to_string(r % q + 1);
}

// --- verify-thm1 -----------------------------------------------------------

// Bounded draw with explicit arithmetic so identical seeds give identical
// streams on every platform (std::uniform_int_distribution is not
// implementation-stable).
Int bounded(std::mt19937_64& rng, Int lo, Int hi) {
    return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// A random monomial c * prod y_j^{e_j} of total degree <= 2 with a small
// rational coefficient.
Polynomial random_monomial(std::mt19937_64& rng, Int d) {
    static const Rational kCoeffs[] = {Rational(1), Rational(2),  Rational(-1),
                                       Rational(3), Rational(1, 2)};
    Polynomial m = Polynomial::constant(kCoeffs[bounded(rng, 0, 4)]);
    const Int degree = bounded(rng, 0, 2);
    for (Int k = 0; k < degree; ++k) m = m * y(bounded(rng, 1, d));
    return m;
}

Margin random_margin(std::mt19937_64& rng, Int len, Int total_cap) {
    for (;;) {
        Margin m;
        for (Int k = 0; k < len; ++k) m.push_back(bounded(rng, 0, 2));
        if (margin_total(m) <= total_cap) return m;
    }
}

int run_verify(Int max_n, Int max_d, Int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Int passed = 0;
    std::string first_failure;
    for (Int t = 0; t < trials; ++t) {
        const Int n = bounded(rng, 1, max_n);
        const Int d = bounded(rng, 1, max_d);
        const Int p = bounded(rng, 1, 2);
        const Int q = bounded(rng, 1, 2);
        const Margin alpha = random_margin(rng, p, n);
        const Margin beta = random_margin(rng, q, n);
        std::vector<Polynomial> fe, ge;
        for (Int k = 0; k < p; ++k) fe.push_back(random_monomial(rng, d));
        for (Int k = 0; k < q; ++k) ge.push_back(random_monomial(rng, d));
        const FunctionTuple f(fe, d), g(ge, d);
        const auto result = verify_product_identity(f, g, alpha, beta, n);
        if (result.ok) {
            ++passed;
        } else if (first_failure.empty()) {
            first_failure = "trial " + std::to_string(t) + ": n=" +
                            std::to_string(n) + " alpha=" + format_margin(alpha) +
                            " beta=" + format_margin(beta) + "\n" + result.report;
        }
    }
    std::cout << passed << "/" << trials << " identities hold\n";
    if (passed != trials) {
        std::cerr << "first failing instance:\n" << first_failure << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact product rule for elementary multi-symmetric functions:\n"
                 "margin-constrained matrix sets, transportation polytopes, and\n"
                 "biword/RSK bijections"};
    app.require_subcommand(1);
    int status = 0;

    // ---- lset-enum ----
    auto* enum_cmd = app.add_subcommand("lset-enum", "enumerate L(alpha,beta,n)");
    struct {
        std::string alpha, beta, format = "text";
        Int n = 0;
    } en;
    enum_cmd->add_option("--alpha", en.alpha, "row margins, comma-separated")->required();
    enum_cmd->add_option("--beta", en.beta, "column margins, comma-separated")->required();
    enum_cmd->add_option("--n", en.n, "number of points")->required();
    enum_cmd->add_option("--format", en.format)->check(CLI::IsMember({"text", "json"}));
    enum_cmd->callback([&] {
        const Margin alpha = margin_flag("--alpha", en.alpha);
        const Margin beta = margin_flag("--beta", en.beta);
        const auto members = enumerate_L(alpha, beta, en.n);
        if (en.format == "json") {
            nlohmann::json j;
            j["alpha"] = alpha;
            j["beta"] = beta;
            j["n"] = en.n;
            j["count"] = members.size();
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& g : members) {
                nlohmann::json jm;
                jm["N"] = g.total();
                jm["matrix"] = g.to_rows();
                jm["vec"] = gamma_to_vec(g);
                arr.push_back(jm);
            }
            j["matrices"] = arr;
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "|L(" << format_margin(alpha) << "," << format_margin(beta)
                  << "," << en.n << ")| = " << members.size() << "\n";
        std::size_t k = 0;
        for (const auto& g : members) {
            std::cout << "\ngamma " << ++k << " (N = " << g.total() << "):\n"
                      << render_gamma(g, alpha, beta)
                      << "vec = " << format_vec(gamma_to_vec(g)) << "\n";
        }
    });

    // ---- lset-witness ----
    auto* wit_cmd = app.add_subcommand("lset-witness",
                                       "deterministic member of the stratum L_N");
    struct {
        std::string alpha, beta, format = "text";
        Int N = 0;
    } wi;
    wit_cmd->add_option("--alpha", wi.alpha)->required();
    wit_cmd->add_option("--beta", wi.beta)->required();
    wit_cmd->add_option("--N", wi.N, "total mass of the witness")->required();
    wit_cmd->add_option("--format", wi.format)->check(CLI::IsMember({"text", "json"}));
    wit_cmd->callback([&] {
        const Margin alpha = margin_flag("--alpha", wi.alpha);
        const Margin beta = margin_flag("--beta", wi.beta);
        const GammaMatrix g = witness(alpha, beta, wi.N);
        if (wi.format == "json") {
            nlohmann::json j;
            j["alpha"] = alpha;
            j["beta"] = beta;
            j["N"] = wi.N;
            j["matrix"] = g.to_rows();
            j["vec"] = gamma_to_vec(g);
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << render_gamma(g, alpha, beta)
                  << "vec = " << format_vec(gamma_to_vec(g)) << "\n";
    });

    // ---- lset-decompose ----
    auto* dec_cmd = app.add_subcommand("lset-decompose",
                                       "stratify L(alpha,beta,n) by total mass");
    struct {
        std::string alpha, beta, format = "text";
        Int n = 0;
    } de;
    dec_cmd->add_option("--alpha", de.alpha)->required();
    dec_cmd->add_option("--beta", de.beta)->required();
    dec_cmd->add_option("--n", de.n)->required();
    dec_cmd->add_option("--format", de.format)->check(CLI::IsMember({"text", "json"}));
    dec_cmd->callback([&] {
        const Margin alpha = margin_flag("--alpha", de.alpha);
        const Margin beta = margin_flag("--beta", de.beta);
        const auto strata = decompose(alpha, beta, de.n);
        if (de.format == "json") {
            std::cout << strata_to_json(alpha, beta, de.n, strata) << "\n";
            return;
        }
        std::size_t total = 0;
        for (const auto& s : strata) total += s.members.size();
        std::cout << "L(" << format_margin(alpha) << "," << format_margin(beta)
                  << "," << de.n << "): " << total << " members\n";
        for (const auto& s : strata) {
            std::cout << "\nN = " << s.N << " (" << s.members.size()
                      << " members):\n";
            for (const auto& g : s.members)
                std::cout << render_gamma(g, alpha, beta)
                          << "vec = " << format_vec(gamma_to_vec(g)) << "\n";
        }
    });

    // ---- product ----
    auto* prod_cmd = app.add_subcommand(
        "product", "expand e_alpha(f) e_beta(g) as a sum over L(alpha,beta,n)");
    struct {
        std::string alpha, beta, f, g, format = "text";
        Int n = 0, d = 0;
    } pr;
    prod_cmd->add_option("--alpha", pr.alpha)->required();
    prod_cmd->add_option("--beta", pr.beta)->required();
    prod_cmd->add_option("--n", pr.n)->required();
    prod_cmd->add_option("--f", pr.f,
                         "tuple f as ';'-separated expressions (default y1;..;yp)");
    prod_cmd->add_option("--g", pr.g,
                         "tuple g as ';'-separated expressions (default y1;..;yq)");
    prod_cmd->add_option("--d", pr.d, "ambient dimension (default: largest index used)");
    prod_cmd->add_option("--format", pr.format)->check(CLI::IsMember({"text", "json"}));
    prod_cmd->callback([&] {
        const Margin alpha = margin_flag("--alpha", pr.alpha);
        const Margin beta = margin_flag("--beta", pr.beta);
        auto default_tuple = [](std::size_t len) {
            std::vector<Polynomial> entries;
            for (std::size_t k = 1; k <= len; ++k)
                entries.push_back(y(static_cast<Int>(k)));
            return entries;
        };
        const std::vector<Polynomial> fe =
            pr.f.empty() ? default_tuple(alpha.size())
                         : usage_scope("--f", [&] { return parse_polynomial_list(pr.f); });
        const std::vector<Polynomial> ge =
            pr.g.empty() ? default_tuple(beta.size())
                         : usage_scope("--g", [&] { return parse_polynomial_list(pr.g); });
        Int d = pr.d;
        if (d == 0) d = std::max<Int>({1, max_y_index(fe), max_y_index(ge)});
        const FunctionTuple f(fe, d), g(ge, d);
        if (pr.format == "json") {
            std::cout << product_rule_to_json(alpha, beta, pr.n, f, g) << "\n";
            return;
        }
        const auto gammas = product_rule(alpha, beta, pr.n);
        const std::size_t p = f.size(), q = g.size();
        std::cout << "e_" << format_margin(alpha) << "(f) * e_" << format_margin(beta)
                  << "(g) = sum of " << gammas.size() << " terms over L("
                  << format_margin(alpha) << "," << format_margin(beta) << ","
                  << pr.n << ")\n\ncomposite tuple:\n";
        const FunctionTuple fg = composite_tuple(f, g);
        for (std::size_t k = 0; k < fg.size(); ++k)
            std::cout << "  " << component_name(k + 1, p, q) << " = "
                      << fg[k].to_string() << "\n";
        std::cout << "\n";
        std::size_t idx = 0;
        for (const auto& gm : gammas) {
            const auto vec = gamma_to_vec(gm);
            MultiSymTerm term{vec, fg, Rational(1)};
            const MultiSymTerm reduced = reduce_term(term);
            std::cout << "term " << ++idx << ": e_" << format_vec(vec) << "  ->  e_"
                      << format_vec(reduced.gamma_vec) << "(";
            const auto indices = surviving_indices(vec);
            for (std::size_t r = 0; r < indices.size(); ++r) {
                if (r) std::cout << ", ";
                std::cout << component_name(indices[r] + 1, p, q);
            }
            std::cout << ")\n";
        }
    });

    // ---- verify-thm1 ----
    auto* ver_cmd = app.add_subcommand(
        "verify-thm1", "randomized exact check of the product-rule identity");
    struct {
        Int max_n = 3, max_d = 2, trials = 100;
        std::uint64_t seed = 7;
    } ve;
    ver_cmd->add_option("--max-n", ve.max_n, "largest number of points");
    ver_cmd->add_option("--max-d", ve.max_d, "largest ambient dimension");
    ver_cmd->add_option("--trials", ve.trials, "number of random instances");
    ver_cmd->add_option("--seed", ve.seed, "PRNG seed");
    ver_cmd->callback([&] {
        if (ve.max_n < 1 || ve.max_d < 1 || ve.trials < 1)
            throw UsageError("verify-thm1: --max-n, --max-d, --trials must be >= 1");
        status = run_verify(ve.max_n, ve.max_d, ve.trials, ve.seed);
    });

    // ---- polytope-nwc ----
    auto* nwc_cmd = app.add_subcommand(
        "polytope-nwc", "northwest-corner vertex of a transportation polytope");
    struct {
        std::string u, v, format = "text";
    } nw;
    nwc_cmd->add_option("--u", nw.u, "row margins (rationals allowed)")->required();
    nwc_cmd->add_option("--v", nw.v, "column margins (rationals allowed)")->required();
    nwc_cmd->add_option("--format", nw.format)->check(CLI::IsMember({"text", "json"}));
    nwc_cmd->callback([&] {
        const MarginPair m(rational_flag("--u", nw.u), rational_flag("--v", nw.v));
        const auto x = northwest_corner(m);
        if (nw.format == "json") {
            nlohmann::json j;
            auto strings = [](const std::vector<Rational>& v) {
                std::vector<std::string> out;
                for (const auto& e : v) out.push_back(rational_to_string(e));
                return out;
            };
            j["u"] = strings(m.u);
            j["v"] = strings(m.v);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : x) rows.push_back(strings(row));
            j["matrix"] = rows;
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << render_transport_matrix(x, m);
    });

    // ---- polytope-feasible ----
    auto* fea_cmd = app.add_subcommand(
        "polytope-feasible", "test whether the margins admit any transport plan");
    struct {
        std::string u, v;
    } fe;
    fea_cmd->add_option("--u", fe.u)->required();
    fea_cmd->add_option("--v", fe.v)->required();
    fea_cmd->callback([&] {
        const MarginPair m(rational_flag("--u", fe.u), rational_flag("--v", fe.v));
        if (!feasible(m)) {
            std::cerr << "margins differ: " << rational_to_string(m.u_total())
                      << " ≠ " << rational_to_string(m.v_total()) << "\n";
            status = 1;
            return;
        }
        std::cout << "feasible: both margins total "
                  << rational_to_string(m.u_total()) << "\n";
    });

    // ---- incidence ----
    auto* inc_cmd = app.add_subcommand(
        "incidence", "vertex-edge incidence matrix of K_{p,q} or K'_{p,q}");
    struct {
        Int p = 0, q = 0;
        bool remove_corner = false;
        std::string format = "text";
    } in;
    inc_cmd->add_option("--p", in.p, "left part size")->required();
    inc_cmd->add_option("--q", in.q, "right part size")->required();
    inc_cmd->add_flag("--remove-corner", in.remove_corner,
                      "drop the corner edge (0,0)");
    inc_cmd->add_option("--format", in.format)->check(CLI::IsMember({"text", "json"}));
    inc_cmd->callback([&] {
        const auto sys = incidence_matrix(in.p, in.q, in.remove_corner);
        if (in.format == "json") {
            std::cout << constraint_system_to_json(sys) << "\n";
            return;
        }
        std::cout << render_constraint_system(sys, "B");
    });

    // ---- constraint-system ----
    auto* cs_cmd = app.add_subcommand(
        "constraint-system",
        "A x = b system: rearranged for L_N (--alpha/--beta/--N) or plain "
        "transportation margins (--u/--v); optionally check an x");
    struct {
        std::string alpha, beta, u, v, check, format = "text";
        Int N = 0;
        bool integral = false;
    } cs;
    cs_cmd->add_option("--alpha", cs.alpha);
    cs_cmd->add_option("--beta", cs.beta);
    cs_cmd->add_option("--N", cs.N);
    cs_cmd->add_option("--u", cs.u);
    cs_cmd->add_option("--v", cs.v);
    cs_cmd->add_option("--check", cs.check,
                       "candidate x, comma-separated rationals in variable order");
    cs_cmd->add_flag("--integral", cs.integral, "require x integral in the check");
    cs_cmd->add_option("--format", cs.format)->check(CLI::IsMember({"text", "json"}));
    cs_cmd->callback([&] {
        const bool rearranged = !cs.alpha.empty() || !cs.beta.empty();
        const bool plain = !cs.u.empty() || !cs.v.empty();
        if (rearranged == plain)
            throw UsageError(
                "constraint-system: give either --alpha/--beta/--N or --u/--v");
        ConstraintSystem sys;
        std::string label;
        if (rearranged) {
            const Margin alpha = margin_flag("--alpha", cs.alpha);
            const Margin beta = margin_flag("--beta", cs.beta);
            sys = rearranged_constraint_system(alpha, beta, cs.N);
            label = "A";
        } else {
            const MarginPair m(rational_flag("--u", cs.u), rational_flag("--v", cs.v));
            sys = constraint_system(m);
            label = "B";
        }
        if (!cs.check.empty()) {
            const auto x = rational_flag("--check", cs.check);
            const bool real_ok = check_membership(x, sys, false);
            const bool int_ok = real_ok && check_membership(x, sys, true);
            if (cs.format == "json") {
                nlohmann::json j;
                j["member_real"] = real_ok;
                j["member_integral"] = int_ok;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "member (real):     " << (real_ok ? "yes" : "no") << "\n"
                          << "member (integral): " << (int_ok ? "yes" : "no") << "\n";
            }
            if (cs.integral && !int_ok) status = 1;
            return;
        }
        if (cs.format == "json")
            std::cout << constraint_system_to_json(sys) << "\n";
        else
            std::cout << render_constraint_system(sys, label);
    });

    // ---- rsk ----
    auto* rsk_cmd = app.add_subcommand("rsk", "RSK insertion of a biword");
    struct {
        std::string top, bottom, format = "text";
        bool french = false;
    } rk;
    rsk_cmd->add_option("--top", rk.top, "top line, comma-separated")->required();
    rsk_cmd->add_option("--bottom", rk.bottom, "bottom line, comma-separated")
        ->required();
    rsk_cmd->add_flag("--french", rk.french, "render rows bottom-up");
    rsk_cmd->add_option("--format", rk.format)->check(CLI::IsMember({"text", "json"}));
    rsk_cmd->callback([&] {
        const BiWord w = make_biword(margin_flag("--top", rk.top),
                                     margin_flag("--bottom", rk.bottom));
        const TableauPair pair = rsk(w);
        if (rk.format == "json") {
            std::cout << tableau_pair_to_json(pair) << "\n";
            return;
        }
        std::cout << "P:\n" << render_tableau(pair.P, rk.french) << "Q:\n"
                  << render_tableau(pair.Q, rk.french);
    });

    // ---- rsk-inverse ----
    auto* rin_cmd = app.add_subcommand("rsk-inverse",
                                       "recover the biword from a tableau pair");
    struct {
        std::string P, Q, format = "text";
    } ri;
    rin_cmd->add_option("--P", ri.P, "insertion tableau, rows ';'-separated")
        ->required();
    rin_cmd->add_option("--Q", ri.Q, "recording tableau, rows ';'-separated")
        ->required();
    rin_cmd->add_option("--format", ri.format)->check(CLI::IsMember({"text", "json"}));
    rin_cmd->callback([&] {
        const TableauPair pair{parse_tableau("--P", ri.P), parse_tableau("--Q", ri.Q)};
        const BiWord w = rsk_inverse(pair);
        if (ri.format == "json") {
            std::cout << biword_to_json(w) << "\n";
            return;
        }
        std::cout << biword_text(w);
    });

    // ---- biword ----
    auto* bw_cmd = app.add_subcommand(
        "biword", "matrix -> biword (--matrix) or biword -> matrix (--top/--bottom)");
    struct {
        std::string matrix, top, bottom, format = "text";
        Int p = -1, q = -1;
    } bw;
    bw_cmd->add_option("--matrix", bw.matrix, "rows ';'-separated, entries ','-separated");
    bw_cmd->add_option("--top", bw.top);
    bw_cmd->add_option("--bottom", bw.bottom);
    bw_cmd->add_option("--p", bw.p, "target row dimension p (matrix is (p+1)x(q+1))");
    bw_cmd->add_option("--q", bw.q, "target column dimension q");
    bw_cmd->add_option("--format", bw.format)->check(CLI::IsMember({"text", "json"}));
    bw_cmd->callback([&] {
        const bool forward = !bw.matrix.empty();
        const bool backward = !bw.top.empty() || !bw.bottom.empty();
        if (forward == backward)
            throw UsageError("biword: give either --matrix or --top/--bottom");
        if (forward) {
            const GammaMatrix a = parse_matrix("--matrix", bw.matrix);
            const BiWord w = matrix_to_biword(a);
            if (bw.format == "json") {
                std::cout << biword_to_json(w) << "\n";
                return;
            }
            auto [t1, t2] = type_vectors(w);
            std::cout << biword_text(w) << "type1 = " << format_vec(t1)
                      << "\ntype2 = " << format_vec(t2) << "\nin_omega = "
                      << (in_omega_N(w) ? "true" : "false") << "\n";
            return;
        }
        if (bw.p < 0 || bw.q < 0)
            throw UsageError("biword: --top/--bottom requires --p and --q");
        const BiWord w = make_biword(margin_flag("--top", bw.top),
                                     margin_flag("--bottom", bw.bottom));
        const GammaMatrix a = biword_to_matrix(w, bw.p, bw.q);
        if (bw.format == "json") {
            nlohmann::json j;
            j["matrix"] = a.to_rows();
            std::cout << j.dump(2) << "\n";
            return;
        }
        for (Int i = 0; i <= a.p(); ++i) {
            for (Int j = 0; j <= a.q(); ++j) {
                if (j) std::cout << " ";
                std::cout << a.at(i, j);
            }
            std::cout << "\n";
        }
    });

    // ---- types ----
    auto* ty_cmd = app.add_subcommand("types",
                                      "type vectors and omega membership of a biword");
    struct {
        std::string top, bottom, format = "text";
        Int len1 = 0, len2 = 0;
    } ty;
    ty_cmd->add_option("--top", ty.top)->required();
    ty_cmd->add_option("--bottom", ty.bottom)->required();
    ty_cmd->add_option("--len1", ty.len1, "pad type1 to this length");
    ty_cmd->add_option("--len2", ty.len2, "pad type2 to this length");
    ty_cmd->add_option("--format", ty.format)->check(CLI::IsMember({"text", "json"}));
    ty_cmd->callback([&] {
        const BiWord w = make_biword(margin_flag("--top", ty.top),
                                     margin_flag("--bottom", ty.bottom));
        const auto [t1, t2] = type_vectors(w, static_cast<std::size_t>(ty.len1),
                                           static_cast<std::size_t>(ty.len2));
        if (ty.format == "json") {
            nlohmann::json j;
            j["type1"] = t1;
            j["type2"] = t2;
            j["in_omega"] = in_omega_N(w);
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "type1 = " << format_vec(t1) << "\ntype2 = " << format_vec(t2)
                  << "\nin_omega = " << (in_omega_N(w) ? "true" : "false") << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
