// Command-line front end: single queries, verification sweeps, fusion tables.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modtensor/io.hpp"
#include "modtensor/modtensor.hpp"

namespace mt = modtensor;

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kPrecondition = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mt::Weight parse_weight(const std::string& text, bool require_dominant = true) {
    static const std::regex re(R"(\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("malformed weight '" + text + "' (expected a,b)");
    mt::Weight w{std::stoi(m[1]), std::stoi(m[2])};
    if (require_dominant && !w.dominant()) throw UsageError("weight " + w.str() + " is not dominant");
    return w;
}

struct Common {
    std::string system = "a2";
    int p = 5;
    std::string format = "json";

    const mt::RootDatum& datum() const {
        try {
            return mt::RootDatum::get(mt::parse_system(system));
        } catch (const mt::DomainError& e) {
            throw UsageError(e.what());
        }
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
    cmd->add_option("--system,-s", c.system, "root system: a2 or b2")->check(CLI::IsMember({"a2", "b2", "A2", "B2"}));
    cmd->add_option("-p,--prime", c.p, "characteristic");
    if (with_format) cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

void print_character_text(std::ostream& os, const mt::FormalCharacter& ch) {
    for (const auto& [w, m] : ch.sorted())
        os << std::setw(6) << w.a << std::setw(6) << w.b << std::setw(8) << m << '\n';
}

template <class Tag>
void print_expansion_text(std::ostream& os, const mt::WeightSum<Tag>& e) {
    for (const auto& [w, m] : e.sorted()) os << "  L" << w.str() << " x" << m << '\n';
}

int cmd_character(const Common& c, const std::string& weight_text, bool weyl) {
    const auto& datum = c.datum();
    mt::check_prime(c.p);
    const mt::Weight w = parse_weight(weight_text);
    const auto ch = weyl ? mt::weyl_character(datum, w) : mt::simple_character(datum, c.p, w);
    if (c.format == "text") {
        std::cout << (weyl ? "weyl " : "simple ") << datum.name() << " p=" << c.p << " weight " << w.str()
                  << " dim " << mt::dimension(ch) << '\n';
        print_character_text(std::cout, ch);
        return kOk;
    }
    mt::Json j;
    j["system"] = std::string(datum.name());
    j["p"] = c.p;
    j["weight"] = mt::to_json(w);
    j["kind"] = weyl ? "weyl" : "simple";
    j["dimension"] = mt::dimension(ch);
    j["character"] = mt::to_json(ch);
    std::cout << j.dump(2) << '\n';
    return kOk;
}

int cmd_decompose(const Common& c, const std::string& lt, const std::string& mt_text, const std::string& method) {
    const auto& datum = c.datum();
    mt::check_prime(c.p);
    const mt::Weight lambda = parse_weight(lt), mu = parse_weight(mt_text);
    mt::CharacterTable table(datum, c.p);
    const auto oracle = mt::tensor_simple_decomposition(table, lambda, mu);
    mt::SimpleExpansion result = oracle;
    if (method == "theorem-b") {
        result = mt::reflection_small_multiplicities(table, lambda, mu);
    } else if (method == "minuscule") {
        const auto& ms = datum.minuscule_weights();
        if (std::find(ms.begin(), ms.end(), mu) == ms.end())
            throw mt::PreconditionError(mu.str() + " is not minuscule for " + std::string(datum.name()));
        if (!mt::is_p_regular(datum, c.p, lambda))
            throw mt::PreconditionError(lambda.str() + " is p-singular; the minuscule rule needs a p-regular weight");
        result = mt::minuscule_decompose(datum, c.p, lambda, mu);
    }
    const bool agree = result == oracle;
    if (c.format == "text") {
        std::cout << datum.name() << " p=" << c.p << " L" << lambda.str() << " x L" << mu.str() << " (" << method
                  << ")\n";
        print_expansion_text(std::cout, result);
        std::cout << "multiplicity free: " << (mt::is_multiplicity_free(result) ? "yes" : "no") << '\n';
        if (!agree) std::cout << "DISAGREES with the direct decomposition\n";
    } else {
        mt::Json j;
        j["system"] = std::string(datum.name());
        j["p"] = c.p;
        j["lambda"] = mt::to_json(lambda);
        j["mu"] = mt::to_json(mu);
        j["method"] = method;
        j["decomposition"] = mt::to_json(result);
        j["mf"] = mt::is_multiplicity_free(result);
        j["agrees_with_oracle"] = agree;
        std::cout << j.dump(2) << '\n';
    }
    return agree ? kOk : kMismatch;
}

int cmd_classify(const Common& c, const std::string& lt, const std::string& mt_text) {
    const auto& datum = c.datum();
    mt::check_prime(c.p);
    const mt::Weight lambda = parse_weight(lt), mu = parse_weight(mt_text);
    const auto v = mt::verdict(datum, c.p, lambda, mu);
    if (c.format == "text") {
        std::cout << datum.name() << " p=" << c.p << " " << lambda.str() << " x " << mu.str() << ": cr=" << v.cr
                  << " mf=" << v.mf << " rows=" << mt::row_list(v.matched_rows) << '\n';
    } else {
        std::cout << mt::verdict_json(datum, c.p, lambda, mu, v).dump(2) << '\n';
    }
    return kOk;
}

mt::Json report_json(const mt::SweepReport& r) {
    mt::Json j;
    j["system"] = r.system;
    j["p"] = r.p;
    j["pairs_total"] = r.pairs_total;
    j["mf_oracle_true"] = r.mf_oracle_true;
    j["mf_table_true"] = r.mf_table_true;
    j["cr_table_true"] = r.cr_table_true;
    j["reflection_small_pairs"] = r.reflection_small_pairs;
    j["fusion_triples"] = r.fusion_triples;
    mt::Json mm = mt::Json::array();
    for (const auto& m : r.mismatches) {
        mt::Json e;
        e["lambda"] = mt::to_json(m.lambda);
        e["mu"] = mt::to_json(m.mu);
        e["oracle"] = m.oracle;
        e["table"] = m.table;
        mt::Json rows = mt::Json::array();
        for (const auto& row : m.rows) rows.push_back(mt::to_json(row));
        e["rows"] = rows;
        e["decomposition"] = mt::to_json(m.decomposition);
        mm.push_back(std::move(e));
    }
    j["mismatches"] = mm;
    mt::Json vv = mt::Json::array();
    for (const auto& v : r.violations) {
        mt::Json e;
        e["check"] = v.check;
        e["lambda"] = mt::to_json(v.lambda);
        e["mu"] = mt::to_json(v.mu);
        e["detail"] = v.detail;
        vv.push_back(std::move(e));
    }
    j["violations"] = vv;
    return j;
}

std::string report_csv(const std::vector<mt::SweepReport>& reports) {
    std::ostringstream os;
    os << "system,p,la,lb,ma,mb,cr,mf,rows\n";
    for (const auto& r : reports)
        for (const auto& rec : r.records)
            os << r.system << ',' << r.p << ',' << rec.lambda.a << ',' << rec.lambda.b << ',' << rec.mu.a << ','
               << rec.mu.b << ',' << (rec.cr ? 1 : 0) << ',' << (rec.mf ? 1 : 0) << ',' << mt::row_list(rec.rows)
               << '\n';
    return os.str();
}

int cmd_verify(const Common& c, const std::vector<int>& primes, unsigned workers, std::string cache_path,
               const std::string& emit, const std::string& report_path) {
    const auto& datum = c.datum();
    if (const char* env = std::getenv("MODTENSOR_CACHE"); env && *env) cache_path = env;
    std::vector<int> ps = primes.empty() ? std::vector<int>{c.p} : primes;
    for (int p : ps) mt::check_prime(p);

    mt::CharacterCache cache;
    if (!cache_path.empty()) {
        try {
            cache = mt::CharacterCache::load(cache_path);
        } catch (const mt::CacheError& e) {
            std::cerr << "warning: ignoring character cache " << cache_path << ": " << e.what() << "; rebuilding\n";
            cache = mt::CharacterCache{};
        }
    }

    std::vector<mt::SweepReport> reports;
    bool ok = true;
    for (int p : ps) {
        mt::CharacterTable table(datum, p);
        const std::size_t preloaded = cache.preload(table);
        mt::SweepOptions opt;
        opt.workers = std::max(1u, workers);
        auto r = mt::run_sweep(table, opt);
        std::cerr << datum.name() << " p=" << p << ": " << r.pairs_total << " pairs, " << r.mismatches.size()
                  << " mismatches, " << r.violations.size() << " violations, " << std::fixed << std::setprecision(2)
                  << r.elapsed_seconds << " s on " << r.workers << " worker(s), " << preloaded
                  << " cached characters\n";
        for (const auto& m : r.mismatches)
            std::cerr << "  MISMATCH " << m.lambda.str() << " x " << m.mu.str() << " oracle_mf=" << m.oracle
                      << " table_mf=" << m.table << " rows=" << mt::row_list(m.rows) << '\n';
        for (const auto& v : r.violations)
            std::cerr << "  VIOLATION " << v.check << " " << v.lambda.str() << " x " << v.mu.str() << " " << v.detail
                      << '\n';
        ok = ok && r.ok();
        cache.absorb(table);
        reports.push_back(std::move(r));
    }
    if (!cache_path.empty()) cache.save(cache_path);

    std::string out;
    if (emit == "csv") {
        out = report_csv(reports);
    } else {
        mt::Json arr = mt::Json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        out = arr.dump(2) + "\n";
    }
    if (!report_path.empty()) mt::atomic_write(report_path, out);
    std::cout << out;
    return ok ? kOk : kMismatch;
}

int cmd_fusion(const Common& c) {
    const auto& datum = c.datum();
    mt::check_prime(c.p);
    const auto weights = mt::fundamental_alcove_weights(datum, c.p);
    const auto table = mt::fusion_table(datum, c.p);
    bool flip_ok = true, omega_ok = true;
    for (const auto& [key, prod] : table) {
        for (mt::Weight n : weights) {
            const auto coeff = prod[n];
            if (coeff != table.at({n, datum.dual(key.second)})[key.first]) flip_ok = false;
            if (datum.id() == mt::RootSystemId::B2 &&
                coeff != table.at({mt::omega_dot_b2(datum, c.p, key.first), key.second})[mt::omega_dot_b2(datum, c.p, n)])
                omega_ok = false;
        }
    }
    if (c.format == "text") {
        std::cout << datum.name() << " p=" << c.p << ": " << weights.size() << " weights in the fundamental alcove\n";
        for (const auto& [key, prod] : table) {
            std::cout << key.first.str() << " * " << key.second.str() << " =";
            for (const auto& [w, m] : prod.sorted()) std::cout << ' ' << m << "T" << w.str();
            std::cout << '\n';
        }
    } else {
        mt::Json j;
        j["system"] = std::string(datum.name());
        j["p"] = c.p;
        mt::Json ws = mt::Json::array();
        for (auto w : weights) ws.push_back(mt::to_json(w));
        j["weights"] = ws;
        mt::Json entries = mt::Json::array();
        for (const auto& [key, prod] : table) {
            mt::Json e;
            e["lambda"] = mt::to_json(key.first);
            e["mu"] = mt::to_json(key.second);
            e["product"] = mt::to_json(prod);
            entries.push_back(std::move(e));
        }
        j["table"] = entries;
        j["flipping_identity"] = flip_ok;
        if (datum.id() == mt::RootSystemId::B2) j["omega_invariance"] = omega_ok;
        std::cout << j.dump(2) << '\n';
    }
    return flip_ok && omega_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor products of simple modules for SL3 and Sp4 in positive characteristic"};
    app.require_subcommand(1);

    Common common;
    std::string weight_text, lambda_text, mu_text, method = "oracle", cache_path, emit = "json", report_path;
    bool weyl = false;
    unsigned workers = 1;
    std::vector<int> primes;

    auto* character = app.add_subcommand("character", "print ch L(lambda), or the Weyl character with --weyl");
    add_common(character, common);
    character->add_option("--weight,-w", weight_text, "weight a,b")->required();
    character->add_flag("--weyl", weyl, "Weyl character instead of the simple character");

    auto* decompose = app.add_subcommand("decompose", "composition factors of L(lambda) x L(mu)");
    add_common(decompose, common);
    decompose->add_option("--lambda,-l", lambda_text, "weight a,b")->required();
    decompose->add_option("--mu,-m", mu_text, "weight a,b")->required();
    decompose->add_option("--method", method, "oracle, theorem-b or minuscule")
        ->check(CLI::IsMember({"oracle", "theorem-b", "minuscule"}));

    auto* classify = app.add_subcommand("classify", "complete reducibility / multiplicity freeness verdict");
    add_common(classify, common);
    classify->add_option("--lambda,-l", lambda_text, "weight a,b")->required();
    classify->add_option("--mu,-m", mu_text, "weight a,b")->required();

    auto* verify = app.add_subcommand("verify", "exhaustive sweep over restricted pairs");
    add_common(verify, common, false);
    verify->add_option("--primes", primes, "comma separated primes (default: -p)")->delimiter(',');
    verify->add_option("--workers,-j", workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--cache", cache_path, "character cache file (MODTENSOR_CACHE overrides)");
    verify->add_option("--emit", emit, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--report", report_path, "also write the report to this file");

    auto* fusion = app.add_subcommand("fusion", "Verlinde coefficients on the fundamental alcove");
    add_common(fusion, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*character) return cmd_character(common, weight_text, weyl);
        if (*decompose) return cmd_decompose(common, lambda_text, mu_text, method);
        if (*classify) return cmd_classify(common, lambda_text, mu_text);
        if (*verify) return cmd_verify(common, primes, workers, cache_path, emit, report_path);
        if (*fusion) return cmd_fusion(common);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const mt::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const mt::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kPrecondition;
    } catch (const mt::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
