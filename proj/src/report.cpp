#include "idealzeta/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "idealzeta/errors.hpp"
#include "idealzeta/lattice_ideals.hpp"
#include "idealzeta/padic_volume.hpp"
#include "idealzeta/polyring.hpp"
#include "idealzeta/zeta_series.hpp"

namespace idealzeta {

using ojson = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view s)
{
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "text")
        return OutputFormat::text;
    throw InputError("unknown format '" + std::string(s) + "' (expected json, csv or text)");
}

void RunConfig::validate() const
{
    if (max_index < 1)
        throw InputError("--max-index must be at least 1");
    if (jobs < 1)
        throw InputError("--jobs must be at least 1");
    for (auto p : primes)
        if (!is_prime(p))
            throw InputError(std::to_string(p) + " is not prime");
}

std::string format_ratio(double r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", r);
    return buf;
}

std::string CommandResult::render(OutputFormat format) const
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::json:
        os << doc.dump(2) << "\n";
        break;
    case OutputFormat::csv:
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << (i ? "," : "") << columns[i];
        os << "\n";
        for (auto const& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                os << (i ? "," : "") << r[i];
            os << "\n";
        }
        break;
    case OutputFormat::text: {
        std::vector<std::size_t> width(columns.size(), 0);
        for (std::size_t i = 0; i < columns.size(); ++i)
            width[i] = columns[i].size();
        for (auto const& r : rows)
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], r[i].size());
        auto line = [&](std::vector<std::string> const& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << (i ? "  " : "");
                os << std::string(width[i] - std::min(width[i], cells[i].size()), ' ') << cells[i];
            }
            os << "\n";
        };
        line(columns);
        for (auto const& r : rows)
            line(r);
        for (auto const& n : notes)
            os << n << "\n";
        break;
    }
    }
    return os.str();
}

namespace {

ojson header(std::string_view command, MonicPoly const& f)
{
    ojson doc;
    doc["schema"] = schema_version;
    doc["command"] = command;
    doc["poly"] = render(f);
    return doc;
}

EnumerationOptions enum_opts(RunConfig const& cfg)
{
    return EnumerationOptions{cfg.jobs, cfg.resource_cap};
}

VolumeOptions vol_opts(RunConfig const& cfg)
{
    VolumeOptions o;
    o.jobs = cfg.jobs;
    o.resource_cap = cfg.resource_cap;
    return o;
}

std::uint64_t checked_power(std::uint64_t p, unsigned e)
{
    Integer q = ipow(Integer(static_cast<unsigned long>(p)), e);
    return to_u64(q);
}

std::size_t require_power_of_t(MonicPoly const& f)
{
    auto n = f.as_power_of_t();
    if (!n)
        throw InputError("closed form unavailable for this polynomial (only t^n has one); "
                         "use `compare` to check it against the oracles");
    return *n;
}

CommandResult table_of_counts(std::string_view command, MonicPoly const& f, std::uint64_t bound,
                              std::vector<Integer> const& counts)
{
    CommandResult r;
    r.doc = header(command, f);
    r.doc["max_index"] = bound;
    r.columns = {"k", "a"};
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        arr.push_back(ojson{{"k", i + 1}, {"a", counts[i].get_str()}});
        r.rows.push_back({std::to_string(i + 1), counts[i].get_str()});
    }
    r.doc["counts"] = std::move(arr);
    return r;
}

std::string verdict(bool applicable, bool all_match)
{
    if (!applicable)
        return "not-applicable";
    return all_match ? "exact-match" : "mismatch";
}

} // namespace

CommandResult cmd_count(RunConfig const& cfg)
{
    cfg.validate();
    MonicPoly f = parse_poly(cfg.poly);
    PartialCounts pc = count_ideals_upto_partial(f, cfg.max_index, enum_opts(cfg));
    CommandResult r = table_of_counts("count", f, cfg.max_index, pc.counts);
    r.doc["complete"] = !pc.stopped_at.has_value();
    if (pc.stopped_at) {
        r.doc["stopped_at"] = *pc.stopped_at;
        r.notes.push_back("PARTIAL: resource cap " + std::to_string(cfg.resource_cap) + " exceeded at k = " +
                          std::to_string(*pc.stopped_at));
        r.exit_code = exit_code::resource_cap;
    }
    return r;
}

CommandResult cmd_series(RunConfig const& cfg)
{
    cfg.validate();
    MonicPoly f = parse_poly(cfg.poly);
    std::size_t n = require_power_of_t(f);
    DirichletCoeffs a = theorem1_series(static_cast<unsigned>(n), cfg.max_index);
    CommandResult r = table_of_counts("series", f, cfg.max_index, a.values());
    r.doc["n"] = n;
    return r;
}

CommandResult cmd_local(RunConfig const& cfg)
{
    cfg.validate();
    MonicPoly f = parse_poly(cfg.poly);
    auto n = f.as_power_of_t();
    CommandResult r;
    r.doc = header("local", f);
    r.doc["max_exponent"] = cfg.max_exponent;
    r.columns = {"p", "e", "index", "a"};
    XSeries<LaurentPoly> symbolic;
    if (n) {
        r.columns.push_back("closed_form");
        symbolic = local_tn(static_cast<unsigned>(*n), cfg.max_exponent);
    }
    ojson primes = ojson::array();
    for (auto p : cfg.primes) {
        ojson coeffs = ojson::array();
        std::vector<Integer> closed;
        if (n)
            closed = local_tn(static_cast<unsigned>(*n), p, cfg.max_exponent);
        for (unsigned e = 0; e <= cfg.max_exponent; ++e) {
            std::uint64_t q = checked_power(p, e);
            Integer a = count_ideals(f, q, enum_opts(cfg)).count;
            ojson row{{"e", e}, {"index", std::to_string(q)}, {"a", a.get_str()}};
            std::vector<std::string> cells{std::to_string(p), std::to_string(e), std::to_string(q), a.get_str()};
            if (n) {
                row["closed_form"] = symbolic[e].to_string();
                row["closed_form_value"] = closed[e].get_str();
                cells.push_back(symbolic[e].to_string());
            }
            coeffs.push_back(std::move(row));
            r.rows.push_back(std::move(cells));
        }
        primes.push_back(ojson{{"p", p}, {"coefficients", std::move(coeffs)}});
    }
    r.doc["primes"] = std::move(primes);
    return r;
}

CommandResult cmd_volume(RunConfig const& cfg)
{
    cfg.validate();
    MonicPoly f = parse_poly(cfg.poly);
    if (cfg.primes.size() != 1)
        throw InputError("volume needs exactly one prime (--primes P)");
    if (cfg.exponents.size() != f.degree())
        throw InputError("--exponents needs " + std::to_string(f.degree()) + " values");
    std::uint64_t p = cfg.primes.front();
    ExactVolume mu = mu_exact(VolumeQuery{p, f, cfg.exponents}, vol_opts(cfg));

    CommandResult r;
    r.doc = header("volume", f);
    r.doc["p"] = p;
    r.doc["b"] = cfg.exponents;
    r.doc["exact"] = ojson{{"value", to_fraction_string(mu.value)},
                           {"level", mu.level},
                           {"witness_count", mu.witness_count.get_str()},
                           {"method", std::string(to_string(mu.method))}};
    r.columns = {"source", "value", "delta"};
    r.rows.push_back({"exact", to_fraction_string(mu.value), ""});

    ojson closed = ojson::array();
    auto add = [&](std::string const& name, Rational const& value, bool paper_mode) {
        Rational delta = value - mu.value;
        closed.push_back(ojson{{"name", name},
                               {"value", to_fraction_string(value)},
                               {"delta", to_fraction_string(delta)},
                               {"paper_mode", paper_mode}});
        r.rows.push_back({name, to_fraction_string(value), to_fraction_string(delta)});
    };
    if (auto n = f.as_power_of_t())
        add("mu_closed_tn", mu_closed_tn(p, *n, cfg.exponents), false);
    if (auto lambda = f.as_double_root_cubic(); lambda && cfg.paper_mode) {
        if (mpz_divisible_ui_p(lambda->get_mpz_t(), p))
            r.notes.push_back("mu_closed_cubic not applicable: p divides lambda");
        else
            add("mu_closed_cubic",
                mu_closed_cubic(p, *lambda, {cfg.exponents[0], cfg.exponents[1], cfg.exponents[2]}), true);
    }
    r.doc["closed_forms"] = std::move(closed);
    r.notes.push_back("level " + std::to_string(mu.level) + ", witness count " + mu.witness_count.get_str() +
                      ", method " + std::string(to_string(mu.method)));
    return r;
}

CommandResult cmd_compare(RunConfig const& cfg)
{
    cfg.validate();
    MonicPoly f = parse_poly(cfg.poly);
    auto n = f.as_power_of_t();
    auto lambda = f.as_double_root_cubic();

    CommandResult r;
    r.doc = header("compare", f);
    r.doc["max_exponent"] = cfg.max_exponent;
    r.doc["paper_mode"] = cfg.paper_mode;
    r.columns = {"p", "e", "index", "oracle_count", "volume_coefficient"};
    if (n)
        r.columns.insert(r.columns.end(), {"local_tn", "local_tn_delta"});
    if (cfg.paper_mode && lambda)
        r.columns.insert(r.columns.end(), {"lemma_coprime", "lemma_coprime_delta"});

    bool volumes_match = true;
    bool tn_match = true;
    bool coprime_applicable = false, coprime_match = true;
    ojson rows = ojson::array();
    for (auto p : cfg.primes) {
        std::vector<Integer> from_volumes = local_factor_from_volumes(p, f, cfg.max_exponent, vol_opts(cfg));
        std::vector<Integer> tn;
        if (n)
            tn = local_tn(static_cast<unsigned>(*n), p, cfg.max_exponent);
        bool coprime_here = cfg.paper_mode && lambda && !mpz_divisible_ui_p(lambda->get_mpz_t(), p);
        std::vector<Rational> coprime;
        if (coprime_here) {
            coprime = local_cubic_coprime(p, cfg.max_exponent);
            coprime_applicable = true;
        }
        for (unsigned e = 0; e <= cfg.max_exponent; ++e) {
            std::uint64_t q = checked_power(p, e);
            Integer oracle = count_ideals(f, q, enum_opts(cfg)).count;
            volumes_match = volumes_match && from_volumes[e] == oracle;
            ojson row{{"p", p},
                      {"e", e},
                      {"index", std::to_string(q)},
                      {"oracle_count", oracle.get_str()},
                      {"volume_coefficient", from_volumes[e].get_str()}};
            std::vector<std::string> cells{std::to_string(p), std::to_string(e), std::to_string(q), oracle.get_str(),
                                           from_volumes[e].get_str()};
            ojson formulas = ojson::object();
            auto add = [&](std::string const& name, Rational const& value, bool paper_mode) {
                Rational delta = value - Rational(oracle);
                formulas[name] = ojson{{"value", to_fraction_string(value)},
                                       {"delta", to_fraction_string(delta)},
                                       {"paper_mode", paper_mode}};
                cells.push_back(to_fraction_string(value));
                cells.push_back(to_fraction_string(delta));
                return delta == 0;
            };
            if (n)
                tn_match = add("local_tn", Rational(tn[e]), false) && tn_match;
            if (cfg.paper_mode && lambda) {
                if (coprime_here)
                    coprime_match = add("lemma_coprime", coprime[e], true) && coprime_match;
                else {
                    cells.push_back("n/a");
                    cells.push_back("n/a");
                }
            }
            row["formulas"] = std::move(formulas);
            rows.push_back(std::move(row));
            r.rows.push_back(std::move(cells));
        }
    }
    r.doc["rows"] = std::move(rows);

    ojson verdicts;
    verdicts["volume_reconstruction"] = verdict(true, volumes_match);
    verdicts["local_tn"] = verdict(n.has_value(), tn_match);
    if (cfg.paper_mode)
        verdicts["lemma_coprime"] = verdict(coprime_applicable, coprime_match);
    r.doc["verdicts"] = verdicts;
    bool oracle_agreement = volumes_match && tn_match;
    r.doc["oracle_agreement"] = oracle_agreement;
    for (auto it = verdicts.begin(); it != verdicts.end(); ++it)
        r.notes.push_back(it.key() + ": " + it.value().get<std::string>());
    if (!oracle_agreement)
        r.exit_code = exit_code::oracle_disagreement;
    return r;
}

CommandResult cmd_asymptote(RunConfig const& cfg)
{
    cfg.validate();
    MonicPoly f = parse_poly(cfg.poly);
    std::size_t n = require_power_of_t(f);
    if (cfg.max_index < 100)
        throw InputError("--max-index must be at least 100 for an asymptotic report");
    DirichletCoeffs a = theorem1_series(static_cast<unsigned>(n), cfg.max_index);
    auto report = asymptotic_report(a, static_cast<unsigned>(n));

    CommandResult r;
    r.doc = header("asymptote", f);
    r.doc["n"] = n;
    r.doc["constant"] = to_fraction_string([&] {
        Integer d = 1;
        for (std::size_t i = 2; i <= n; ++i)
            d *= static_cast<unsigned long>(i);
        for (std::size_t i = 2; i + 1 <= n; ++i)
            d *= static_cast<unsigned long>(i);
        return Rational(1, d);
    }());
    r.columns = {"B", "S", "ratio"};
    ojson rows = ojson::array();
    for (auto const& row : report) {
        rows.push_back(ojson{{"B", row.bound}, {"S", row.partial_sum.get_str()}, {"ratio", format_ratio(row.ratio)}});
        r.rows.push_back({std::to_string(row.bound), row.partial_sum.get_str(), format_ratio(row.ratio)});
    }
    r.doc["rows"] = std::move(rows);
    return r;
}

CommandResult cmd_lemma_check(RunConfig const& cfg)
{
    if (cfg.lemma_n < 2)
        throw InputError("--n must be at least 2");
    if (cfg.lemma_order < 1)
        throw InputError("--order must be at least 1");
    CommandResult r;
    r.doc["schema"] = schema_version;
    r.doc["command"] = "lemma-check";
    r.doc["order"] = cfg.lemma_order;
    r.columns = {"n", "k", "order", "holds"};
    ojson rows = ojson::array();
    bool all = true;
    for (unsigned n = 2; n <= cfg.lemma_n; ++n)
        for (unsigned k = 2; k <= n; ++k) {
            bool ok = summation_lemma_check(n, k, cfg.lemma_order);
            all = all && ok;
            rows.push_back(ojson{{"n", n}, {"k", k}, {"holds", ok}});
            r.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(cfg.lemma_order), ok ? "yes" : "no"});
        }
    r.doc["rows"] = std::move(rows);
    r.doc["all_hold"] = all;
    if (!all)
        r.exit_code = exit_code::oracle_disagreement;
    return r;
}

CommandResult run_command(std::string_view name, RunConfig const& cfg)
{
    if (name == "count")
        return cmd_count(cfg);
    if (name == "series")
        return cmd_series(cfg);
    if (name == "local")
        return cmd_local(cfg);
    if (name == "volume")
        return cmd_volume(cfg);
    if (name == "compare")
        return cmd_compare(cfg);
    if (name == "asymptote")
        return cmd_asymptote(cfg);
    if (name == "lemma-check")
        return cmd_lemma_check(cfg);
    throw InputError("unknown command '" + std::string(name) + "'");
}

} // namespace idealzeta
