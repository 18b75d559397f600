#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "syntax.hpp"
#include "zxf/factorize.hpp"
#include "zxf/json.hpp"

namespace zxf::cli {

namespace {

std::string verdict_line(const Classification& c) {
    return std::string(to_string(c.verdict)) + " (" + std::string(to_string(c.rule)) + ")";
}

void print_classification(const Classification& c, bool json, std::ostream& out) {
    if (json)
        out << to_json(c).dump(2) << '\n';
    else
        out << verdict_line(c) << '\n';
}

int cmd_classify(const std::string& text, bool json, std::ostream& out) {
    print_classification(classify(parse_polynomial(text)), json, out);
    return kComputed;
}

int cmd_factor(const std::string& text, std::size_t terms, bool json, std::ostream& out) {
    if (terms == 0) throw DomainError("--terms must be >= 1");
    const FactorOutcome outcome = factor(parse_polynomial(text), terms);
    if (!outcome.certificate) {
        print_classification(outcome.classification, json, out);
        return kComputed;
    }
    const FactorizationCertificate& cert = *outcome.certificate;
    if (json) {
        out << to_json(cert).dump(2) << '\n';
        return kComputed;
    }
    out << verdict_line(outcome.classification) << '\n'
        << "A = " << render(cert.a) << '\n'
        << "B = " << render(cert.b) << '\n';
    for (const auto& [key, value] : cert.witnesses) out << key << " = " << value << '\n';
    out << "product check: " << (verify_certificate(cert) ? "true" : "false") << '\n';
    return kComputed;
}

int cmd_roots(const std::string& text, const std::string& prime, unsigned long precision, bool json,
              std::ostream& out) {
    const auto roots = roots_in_Zp(parse_polynomial(text), Prime(parse_integer(prime)), precision);
    if (json) {
        Json arr = Json::array();
        for (const auto& r : roots) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
        return kComputed;
    }
    if (roots.empty()) out << "no roots in Z_" << prime << '\n';
    for (const auto& r : roots) {
        out << r.residue << " mod " << prime << '^' << r.precision << ", valuation ";
        if (r.valuation)
            out << *r.valuation;
        else
            out << ">= " << r.precision;
        out << (r.simple ? ", simple, theta " + std::to_string(*r.theta) : std::string(", multiple")) << '\n';
    }
    return kComputed;
}

TruncatedSeries read_series(const std::string& path, std::size_t terms) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
    return TruncatedSeries(coefficients_from_json(j), terms);
}

int cmd_verify(const std::string& input, const std::string& a_path, const std::string& b_path, std::size_t terms,
               std::ostream& out) {
    if (terms == 0) throw DomainError("--terms must be >= 1");
    FactorizationCertificate cert;
    cert.input = parse_polynomial(input);
    cert.a = read_series(a_path, terms);
    cert.b = read_series(b_path, terms);
    cert.order = terms;
    const bool ok = verify_certificate(cert);
    out << (ok ? "true" : "false") << '\n';
    return ok ? kComputed : kCheckFailed;
}

struct CorpusCase {
    std::size_t line = 0;
    std::string poly;
    std::string expected_verdict;
    std::string expected_rule;
};

struct CorpusResult {
    bool pass = false;
    bool internal_error = false;
    std::string got;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<CorpusCase> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::vector<CorpusCase> cases;
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
        const std::string text = trim(raw);
        if (text.empty() || text[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(text);
        for (std::string field; std::getline(ss, field, ';');) fields.push_back(trim(field));
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty())
            throw DomainError(path + ":" + std::to_string(line) + ": expected '<poly> ; <verdict> [; <rule>]'");
        if (!parse_verdict(fields[1]))
            throw DomainError(path + ":" + std::to_string(line) + ": unknown verdict '" + fields[1] + "'");
        if (fields.size() == 3 && !parse_rule(fields[2]))
            throw DomainError(path + ":" + std::to_string(line) + ": unknown rule '" + fields[2] + "'");
        cases.push_back({line, fields[0], fields[1], fields.size() == 3 ? fields[2] : std::string()});
    }
    return cases;
}

CorpusResult evaluate(const CorpusCase& c) {
    CorpusResult r;
    try {
        // factor() also rebuilds and verifies the certificate of every Reducible verdict.
        const FactorOutcome outcome = factor(parse_polynomial(c.poly));
        const Classification& cls = outcome.classification;
        r.got = verdict_line(cls);
        r.pass = to_string(cls.verdict) == c.expected_verdict &&
                 (c.expected_rule.empty() || to_string(cls.rule) == c.expected_rule);
    } catch (const ContractViolation& e) {
        r.internal_error = true;
        r.got = std::string("internal error: ") + e.what();
    } catch (const std::exception& e) {
        r.got = std::string("error: ") + e.what();
    }
    return r;
}

int cmd_corpus(const std::string& path, unsigned jobs, std::ostream& out) {
    const auto cases = read_corpus(path);
    std::vector<CorpusResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();) results[i] = evaluate(cases[i]);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t passed = 0;
    bool internal = false;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const auto& r = results[i];
        passed += r.pass;
        internal = internal || r.internal_error;
        std::string expected = c.expected_verdict;
        if (!c.expected_rule.empty()) expected += " (" + c.expected_rule + ")";
        out << (r.pass ? "PASS" : "FAIL") << "  line " << c.line << "  " << c.poly << "  expected " << expected
            << "  got " << r.got << '\n';
    }
    out << passed << '/' << cases.size() << " passed\n";
    if (internal) return kInternalError;
    return passed == cases.size() ? kComputed : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reducibility of integer polynomials in Z[[x]]", "zxf"};
    app.require_subcommand(1);

    std::string poly, prime, input, a_path, b_path, corpus_path;
    bool json = false;
    std::size_t terms = kDefaultOrder;
    std::size_t verify_terms = 0;
    unsigned long precision = 12;
    unsigned jobs = 1;

    auto* classify_cmd = app.add_subcommand("classify", "Decide unit / irreducible / reducible");
    classify_cmd->add_option("poly", poly, "Polynomial, e.g. \"6 + x + x^2\" or \"[6, 1, 1]\"")->required();
    classify_cmd->add_flag("--json", json, "Print JSON");

    auto* factor_cmd = app.add_subcommand("factor", "Classify and print a factorization certificate");
    factor_cmd->add_option("poly", poly, "Polynomial")->required();
    factor_cmd->add_option("--terms,-N", terms, "Truncation order")->capture_default_str();
    factor_cmd->add_flag("--json", json, "Print JSON");

    auto* roots_cmd = app.add_subcommand("roots", "Roots in Z_p");
    roots_cmd->add_option("poly", poly, "Polynomial")->required();
    roots_cmd->add_option("--prime,-p", prime, "The prime p")->required();
    roots_cmd->add_option("--precision,-K", precision, "Digits of each root")->capture_default_str();
    roots_cmd->add_flag("--json", json, "Print JSON");

    auto* verify_cmd = app.add_subcommand("verify", "Check A B = input mod x^N with non-unit constants");
    verify_cmd->add_option("--input", input, "Polynomial")->required();
    verify_cmd->add_option("--a", a_path, "JSON coefficient array file for A")->required();
    verify_cmd->add_option("--b", b_path, "JSON coefficient array file for B")->required();
    verify_cmd->add_option("--terms,-N", verify_terms, "Truncation order")->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "Run a file of '<poly> ; <verdict> [; <rule>]' lines");
    corpus_cmd->add_option("file", corpus_path, "Corpus file")->required();
    corpus_cmd->add_option("--jobs,-j", jobs, "Worker threads")->capture_default_str();

    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kComputed : kUsageError;
    }

    try {
        if (*classify_cmd) return cmd_classify(poly, json, out);
        if (*factor_cmd) return cmd_factor(poly, terms, json, out);
        if (*roots_cmd) return cmd_roots(poly, prime, precision, json, out);
        if (*verify_cmd) return cmd_verify(input, a_path, b_path, verify_terms, out);
        if (*corpus_cmd) return cmd_corpus(corpus_path, jobs, out);
    } catch (const ContractViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const NotApplicable& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsageError;
}

}  // namespace zxf::cli
