// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Usage: zxf_acceptance <corpus file>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "oracles.hpp"
#include "syntax.hpp"
#include "zxf/factorize.hpp"
#include "zxf/json.hpp"

using namespace zxf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string describe(const Classification& c) {
    return std::string(to_string(c.verdict)) + " (" + std::string(to_string(c.rule)) + ")";
}

// ---------------------------------------------------------------- criterion 1

Outcome golden_examples() {
    struct Golden {
        IntPoly f;
        Verdict verdict;
        Rule rule;
    };
    const std::vector<Golden> cases{
        {IntPoly{6, 1, 1}, Verdict::Reducible, Rule::NotPrimePower},
        {IntPoly{2, 7, 3}, Verdict::Irreducible, Rule::PrimeConstant},
        {IntPoly{49, 98, 63, 14, 1}, Verdict::Reducible, Rule::MultipleRootGcd},
        {IntPoly{7, 21, 15, 1}, Verdict::Irreducible, Rule::DegreeAtMost3NoRoot},
    };
    Outcome out;
    int exact = 0;
    std::string misses;
    for (const auto& g : cases) {
        const Classification c = classify(g.f);
        if (c.verdict == g.verdict && c.rule == g.rule) {
            ++exact;
            continue;
        }
        out.pass = false;
        misses += "; " + cli::render(g.f) + " gave " + describe(c) + ", expected " + std::string(to_string(g.verdict)) +
                  " (" + std::string(to_string(g.rule)) + ")";
        if (c.rule == Rule::PrimeConstant && g.verdict == c.verdict)
            misses += " [same verdict; a prime constant term is decided before the degree <= 3 root test]";
    }
    const auto fac = factor(IntPoly{49, 98, 63, 14, 1}, 64);
    const auto square = TruncatedSeries::from_poly(IntPoly{7, 7, 1}, 64);
    const bool factors_exact = fac.certificate && fac.certificate->a == square && fac.certificate->b == square;
    if (!factors_exact) {
        out.pass = false;
        misses += "; (7+7x+x^2)^2 factors differ";
    }
    out.detail = std::to_string(exact) + "/4 verdict+rule exact, (7+7x+x^2)^2 factors " +
                 (factors_exact ? "exact" : "WRONG") + misses;
    return out;
}

// ---------------------------------------------------------------- criterion 2

struct Generated {
    IntPoly f;
    Rule rule;
};

IntPoly poly_of(std::vector<Integer> c) { return IntPoly(std::move(c)); }

// Reducible inputs for every Reducible rule, p in {2,3,5,7}, n <= 6, degree <= 5.
std::vector<Generated> reducible_corpus(std::size_t per_rule) {
    std::mt19937_64 rng(20240611);
    const std::vector<long> primes{2, 3, 5, 7};
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto prime = [&] { return primes[pick(0, 3)]; };
    auto pw = [](long p, long e) { return zxf::pow(Integer(p), static_cast<unsigned long>(e)); };
    auto tail = [&](std::vector<Integer>& c, std::size_t from, long bound) {
        for (std::size_t i = from; i < c.size(); ++i) c[i] = pick(-bound, bound);
        if (c.back() == 0) c.back() = 1;
    };

    const std::vector<std::pair<Rule, std::function<IntPoly()>>> makers{
        {Rule::PowerOfXContent,
         [&] {
             const long t = pick(1, 3);
             std::vector<Integer> c(pick(t, 5) + 1);
             tail(c, t, 9);
             c[t] = pw(prime(), pick(1, 3)) * (pick(0, 1) ? 1 : -1);
             return poly_of(c);
         }},
        {Rule::IntegerContent,
         [&] {
             const long p = prime();
             std::vector<Integer> c(pick(1, 5) + 1);
             tail(c, 1, 9);
             c[0] = pw(prime(), pick(1, 3));
             IntPoly h = primitive_part(poly_of(c));
             return h * pw(p, pick(1, 2));
         }},
        {Rule::NotPrimePower,
         [&] {
             long p = prime(), q = prime();
             while (q == p) q = prime();
             std::vector<Integer> c(pick(1, 5) + 1);
             tail(c, 1, 20);
             c[0] = pw(p, pick(1, 3)) * pw(q, pick(1, 3)) * (pick(0, 1) ? 1 : -1);
             return poly_of(c);
         }},
        {Rule::LinearRule,
         [&] {
             const long p = prime(), n = pick(2, 6);
             if (pick(0, 3) == 0) return poly_of({pw(p, n)});
             const long u = p * pick(-3, 3) + 1;
             return poly_of({pw(p, n), pw(p, n + pick(0, 2)) * u});
         }},
        {Rule::NGreaterThan2M,
         [&] {
             const long p = prime(), m = pick(1, 2), n = pick(2 * m + 1, 6);
             std::vector<Integer> c(pick(2, 5) + 1);
             tail(c, 2, 12);
             c[0] = pw(p, n);
             c[1] = pw(p, m) * (p * pick(-3, 3) + pick(1, p - 1));
             c[2] = p * pick(-3, 3) + 1;
             return poly_of(c);
         }},
        {Rule::MultipleRootGcd,
         [&] {
             const long p = prime(), a = pick(1, 2);
             // h^2 k with h(0) = p^a and k(0) a power of p.
             const IntPoly h = poly_of({pw(p, a), Integer(pick(-6, 6)), Integer(pick(0, 1) * pick(-3, 3))});
             std::vector<Integer> k(pick(0, 5 - 2 * h.degree()) + 1);
             tail(k, 1, 6);
             k[0] = pw(p, pick(0, 6 - 2 * a));
             return h * h * poly_of(k);
         }},
        {Rule::SimplePAdicRoot,
         [&] {
             const long p = prime(), ell = pick(1, 2);
             const IntPoly lin = poly_of({pw(p, ell), Integer(p * pick(-3, 3) + pick(1, p - 1))});
             std::vector<Integer> k(pick(1, 4) + 1);
             tail(k, 1, 8);
             k[0] = pw(p, pick(ell, 6 - ell));
             return lin * poly_of(k);
         }},
    };

    std::vector<Generated> out;
    for (const auto& [rule, make] : makers) {
        std::size_t have = 0;
        for (int attempt = 0; attempt < 200000 && have < per_rule; ++attempt) {
            const IntPoly f = make();
            if (f.degree() > 5) continue;
            const Classification c = classify(f);
            if (c.rule != rule || c.verdict != Verdict::Reducible) continue;
            if (c.n && *c.n > 6) continue;
            out.push_back({f, rule});
            ++have;
        }
    }
    return out;
}

Outcome certificate_sweep(const std::vector<Generated>& corpus) {
    Outcome out;
    std::map<Rule, int> per_rule;
    int passed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& g : corpus) {
        const auto result = factor(g.f, 64);
        const bool ok = result.certificate && result.certificate->order == 64 &&
                        oracle::proper_factorization(g.f, result.certificate->a, result.certificate->b, 64);
        if (ok) {
            ++passed;
            ++per_rule[g.rule];
        } else if (out.pass) {
            out.pass = false;
            out.detail += " first failure " + cli::render(g.f) + ";";
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream s;
    s << passed << '/' << corpus.size() << " certificates verified in " << seconds << " s, rules:";
    for (const auto& [rule, count] : per_rule) s << ' ' << to_string(rule) << '=' << count;
    const bool enough = corpus.size() >= 500 && per_rule.size() == 7;
    const bool fast = seconds < 10.0;
    out.pass = out.pass && enough && fast;
    if (!enough) s << " (needs >= 500 inputs over all 7 Reducible rules)";
    if (!fast) s << " (over the 10 s budget)";
    out.detail = s.str() + out.detail;
    return out;
}

// -------------------------------------------------------- criteria 3, 4, 6 grid

// p^n + p^m g1 x + g2 x^2 + g3 x^3 for p in {2,3}, n in {2,3,4}, m in {1,2},
// g in [-5,5], gcd(p, g1) = 1, gcd(p, g2, g3) = 1, top coefficient nonzero.
std::vector<IntPoly> low_degree_grid() {
    std::vector<IntPoly> out;
    for (long p : {2L, 3L})
        for (unsigned n = 2; n <= 4; ++n)
            for (unsigned m = 1; m <= 2; ++m)
                for (long g1 = -5; g1 <= 5; ++g1) {
                    if (g1 % p == 0) continue;
                    for (long g2 = -5; g2 <= 5; ++g2)
                        for (long g3 = -5; g3 <= 5; ++g3) {
                            if (g2 % p == 0 && g3 % p == 0) continue;
                            out.push_back(IntPoly({zxf::pow(Integer(p), n), zxf::pow(Integer(p), m) * g1,
                                                   Integer(g2), Integer(g3)}));
                        }
                }
    return out;
}

Outcome root_oracle_agreement(const std::vector<IntPoly>& grid) {
    Outcome out;
    int agree = 0, reducible = 0, above = 0;
    for (const auto& f : grid) {
        const auto form = std::get<NormalForm>(normal_form(f));
        const long p = form.p.value().get_si();
        const bool oracle_says = oracle::has_root_of_positive_valuation(f, p);
        const bool ours = classify(f).verdict == Verdict::Reducible;
        above += form.n_exceeds_2m();
        reducible += oracle_says;
        if (ours == oracle_says) {
            ++agree;
        } else if (out.pass) {
            out.pass = false;
            out.detail = "; first disagreement " + cli::render(f);
        }
    }
    out.detail = std::to_string(agree) + "/" + std::to_string(grid.size()) + " agree (" + std::to_string(reducible) +
                 " with a root of positive valuation, " + std::to_string(above) + " with n > 2m)" + out.detail;
    return out;
}

Outcome large_n_construction(const std::vector<IntPoly>& grid) {
    Outcome out;
    int total = 0, passed = 0;
    for (const auto& f : grid) {
        const auto form = std::get<NormalForm>(normal_form(f));
        if (!form.n_exceeds_2m()) continue;
        ++total;
        const auto [A, B] = factor_n_gt_2m(form, 64);
        const bool ok = A.order() == 64 && A[0] == form.p.power(*form.m) &&
                        B[0] == form.p.power(form.n - *form.m) && oracle::proper_factorization(f, A, B, 64);
        if (ok)
            ++passed;
        else if (out.pass) {
            out.pass = false;
            out.detail = "; first failure " + cli::render(f);
        }
    }
    out.pass = out.pass && total > 0;
    out.detail = std::to_string(passed) + "/" + std::to_string(total) + " n > 2m instances re-multiply with A0 = p^m, "
                 "B0 = p^(n-m)" + out.detail;
    return out;
}

// ---------------------------------------------------------------- criterion 5

Outcome simple_root_invariants(const std::vector<Generated>& corpus, std::vector<GkTower>& towers) {
    Outcome out;
    int cases = 0;
    std::size_t runtime_checks = 0, rechecked = 0;
    for (const auto& g : corpus) {
        if (g.rule != Rule::SimplePAdicRoot) continue;
        ++cases;
        const Classification c = classify(g.f);
        try {
            const auto res = construct_simple_root_factorization(*c.normal_form, *c.root, 64);
            const auto& st = res.state;
            const Prime& p = c.normal_form->p;
            const Integer q = p.power(c.normal_form->n - 2 * st.ell);
            bool ok = oracle::proper_factorization(c.normal_form->poly, res.certificate.a, res.certificate.b, 64);
            for (std::size_t j = 1; j < 64; ++j) ok = ok && st.s[j] == st.b[j] + q * st.a[j];
            for (std::size_t j = 0; j <= st.last_j; ++j) {
                const std::size_t k = st.degree + j;
                ok = ok && divides(p.power((st.degree - 2) * st.ell + st.theta), st.a[k]);
                ok = ok && divides(p.power((st.degree - 2) * st.ell + 2 * st.theta), st.t[k]);
                ok = ok && divides(p.power(st.theta), st.s[k + 1]);
                rechecked += 3;
            }
            runtime_checks += st.checks;
            towers.push_back(res.tower);
            if (!ok && out.pass) {
                out.pass = false;
                out.detail += "; invariant failed for " + cli::render(g.f);
            }
        } catch (const ContractViolation& e) {
            out.pass = false;
            out.detail += std::string("; runtime assertion: ") + e.what();
        }
    }

    // Hand trace: 4 + 4x + 3x^2 + x^3 with the root -2.
    const IntPoly f{4, 4, 3, 1};
    const auto nf = std::get<NormalForm>(normal_form(f));
    PAdicRoot minus_two = roots_in_Zp(f, nf.p, 6).front();
    for (const auto& r : roots_in_Zp(f, nf.p, 6))
        if (r.residue == mod(Integer(-2), r.modulus())) minus_two = r;
    const auto hand = factor_simple_root(nf, minus_two, 64);
    const bool exact = hand.a == TruncatedSeries::from_poly(IntPoly{2, 1}, 64) &&
                       hand.b == TruncatedSeries::from_poly(IntPoly{2, 1, 1}, 64);
    out.pass = out.pass && exact && cases > 0;
    out.detail = std::to_string(cases) + " SimplePAdicRoot cases, " + std::to_string(runtime_checks) +
                 " runtime divisibility checks, " + std::to_string(rechecked) + " re-checked; hand trace " +
                 (exact ? "(2+x, 2+x+x^2) exact" : "MISMATCH") + out.detail;
    return out;
}

// ---------------------------------------------------------------- criterion 6

Outcome tower_identity(std::vector<GkTower> towers, const std::vector<IntPoly>& grid) {
    for (const auto& f : grid) {
        const auto form = std::get<NormalForm>(normal_form(f));
        if (form.n_exceeds_2m()) continue;
        for (unsigned long ell = 1; 2 * ell <= form.n && ell <= *form.m; ++ell) towers.push_back(gk_tower(form, ell));
    }
    Outcome out;
    std::size_t identities = 0, passed = 0;
    const IntPoly x{0, 1};
    for (const auto& t : towers)
        for (unsigned long k = 2; k < t.degree; ++k) {
            ++identities;
            if (derivative(t.g(k + 1)) == -(t.g(k) + x * derivative(t.g(k))))
                ++passed;
            else
                out.pass = false;
        }
    out.pass = out.pass && identities > 0;
    out.detail = std::to_string(passed) + "/" + std::to_string(identities) + " identities over " +
                 std::to_string(towers.size()) + " towers";
    return out;
}

// ---------------------------------------------------------------- criterion 7

Outcome normalization_round_trip(const std::vector<Generated>& corpus) {
    Outcome out;
    int eligible = 0, passed = 0, skipped = 0;
    for (const auto& g : corpus) {
        if (g.f.degree() > 3) continue;
        if (g.rule != Rule::SimplePAdicRoot && g.rule != Rule::MultipleRootGcd) {
            ++skipped;
            continue;
        }
        const auto cert = factor(g.f, 64).certificate;
        const auto form = std::get<NormalForm>(normal_form(g.f));
        const Integer g3 = form.degree() >= 3 ? form.g(3) : Integer(0);
        if (form.n_exceeds_2m() || (divides(form.p.value(), form.g(2)) && divides(form.p.value(), g3))) {
            ++skipped;
            continue;
        }
        ++eligible;
        const long p = form.p.value().get_si();
        bool ok = true;
        std::string why;
        try {
            const auto [A, B] = normalize_factorization(cert->a, cert->b, 6);
            for (std::size_t j = 2; j <= 6; ++j) ok = ok && A[j] == 0;
            ok = ok && oracle::schoolbook(A.coefficients(), B.coefficients(), 64) ==
                           oracle::schoolbook(cert->a.coefficients(), cert->b.coefficients(), 64);
            const unsigned long ell = oracle::val(abs(cert->a[0]), p);
            const auto r = recover_root_from_factorization(*cert, 6);
            ok = ok && oracle::horner_mod(g.f.coefficients(), r.residue, zxf::pow(Integer(p), 6)) == 0;
            ok = ok && r.valuation == ell && oracle::val(r.residue, p) == ell;
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        if (ok)
            ++passed;
        else if (out.pass) {
            out.pass = false;
            out.detail = "; first failure " + cli::render(g.f) + (why.empty() ? "" : ": " + why);
        }
    }
    out.pass = out.pass && eligible > 0;
    out.detail = std::to_string(passed) + "/" + std::to_string(eligible) +
                 " degree <= 3 root-based certificates normalize to k = 6 and give back a root of valuation ell (" +
                 std::to_string(skipped) + " outside the n <= 2m, gcd(p, g2, g3) = 1 form skipped)" + out.detail;
    return out;
}

// ---------------------------------------------------------------- criterion 8

Outcome roots_oracle() {
    Outcome out;
    std::size_t compared = 0, agreed = 0;
    const unsigned long K = 6;
    for (int a = -9; a <= 9; ++a)
        for (int b = -9; b <= 9; ++b)
            for (int c = -9; c <= 9; ++c)
                for (int d = -9; d <= 9; ++d) {
                    const IntPoly f{a, b, c, d};
                    if (f.degree() < 1) continue;
                    const IntPoly g = primitive_part(squarefree_part(f));
                    for (long p : {2L, 3L, 5L}) {
                        const Prime prime(static_cast<unsigned long>(p));
                        const auto roots = roots_in_Zp(f, prime, K);
                        std::set<Integer> ref;
                        if (g.degree() >= 1) {
                            const unsigned long rho = oracle::val(abs(resultant(g, derivative(g))), p);
                            for (const auto& r : oracle::vanishing_residues(g, p, 2 * rho + 1 + K)) ref.insert(r);
                        }
                        for (unsigned long k = 1; k <= K; ++k) {
                            const Integer pk = zxf::pow(Integer(p), k);
                            std::set<Integer> got, want;
                            for (const auto& r : roots) got.insert(Integer(r.residue % pk));
                            for (const auto& r : ref) want.insert(Integer(r % pk));
                            ++compared;
                            if (got == want)
                                ++agreed;
                            else if (out.pass) {
                                out.pass = false;
                                out.detail = "; first disagreement " + cli::render(f) + " p=" + std::to_string(p) +
                                             " k=" + std::to_string(k);
                            }
                        }
                    }
                }
    out.detail = std::to_string(agreed) + "/" + std::to_string(compared) +
                 " (polynomial, p, k) residue sets agree over degree <= 3, coefficients in [-9,9], p in {2,3,5}, "
                 "k <= 6" + out.detail;
    return out;
}

// ---------------------------------------------------------------- criterion 9

Outcome cli_contract(const std::string& corpus_path) {
    Outcome out;
    std::ostringstream sink, err;
    const int code = cli::run({"corpus", corpus_path}, sink, err);
    std::size_t lines = 0, round_trips = 0;
    std::ifstream in(corpus_path);
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        const std::string text = line.substr(0, line.find(';'));
        ++lines;
        const IntPoly f = cli::parse_polynomial(text);
        const IntPoly again = cli::parse_polynomial(cli::render(f));
        const IntPoly via_json = poly_from_json(Json::parse(to_json(f).dump()));
        std::ostringstream json_out, json_err;
        cli::run({"factor", text, "--terms", "16", "--json"}, json_out, json_err);
        const Json j = Json::parse(json_out.str());
        bool ok = again == f && via_json == f;
        if (j.contains("input")) ok = ok && poly_from_json(j["input"]) == f;
        round_trips += ok;
    }
    out.pass = code == 0 && round_trips == lines && lines > 0;
    out.detail = "corpus exit " + std::to_string(code) + ", " + std::to_string(round_trips) + "/" +
                 std::to_string(lines) + " parse -> render/JSON -> parse round trips equal";
    if (code != 0) out.detail += "; corpus output:\n" + sink.str() + err.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: zxf_acceptance <corpus file>\n";
        return 2;
    }
    const auto corpus = reducible_corpus(80);
    const auto grid = low_degree_grid();
    std::vector<GkTower> towers;

    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {1, "golden examples", golden_examples},
        {2, "certificate soundness sweep", [&] { return certificate_sweep(corpus); }},
        {3, "degree <= 3 equivalence with the p-adic oracle", [&] { return root_oracle_agreement(grid); }},
        {4, "n > 2m construction", [&] { return large_n_construction(grid); }},
        {5, "simple-root construction invariants", [&] { return simple_root_invariants(corpus, towers); }},
        {6, "g_k tower derivative identity", [&] { return tower_identity(towers, grid); }},
        {7, "normalization and root recovery", [&] { return normalization_round_trip(corpus); }},
        {8, "roots_in_Zp against enumeration", roots_oracle},
        {9, "CLI contract", [&] { return cli_contract(argv[1]); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.detail
                  << std::endl;
    }
    return all ? 0 : 1;
}
