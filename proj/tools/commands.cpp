#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <json.hpp>

#include "qcf/errors.hpp"
#include "qcf/golden.hpp"
#include "qcf/text.hpp"

namespace qcf::cli {

using json = nlohmann::ordered_json;

namespace {

const char* sign_text(int branch) { return branch > 0 ? "+" : "-"; }

json element_list(const std::vector<KElement>& xs) {
    json out = json::array();
    for (const KElement& x : xs) out.push_back(x.to_string());
    return out;
}

std::string bracketed(const std::vector<KElement>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
    return s + "]";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/// Plain key/value report rendered in any of the three formats.
class Report {
public:
    void add(const std::string& key, json value) { fields_.emplace_back(key, std::move(value)); }

    void write(std::ostream& out, OutputFormat fmt) const {
        if (fmt == OutputFormat::json) {
            json obj = json::object();
            for (const auto& [k, v] : fields_) obj[k] = v;
            out << obj.dump(2) << "\n";
            return;
        }
        if (fmt == OutputFormat::csv) out << "key,value\n";
        for (const auto& [k, v] : fields_) {
            const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
            if (fmt == OutputFormat::csv) {
                out << csv_field(k) << "," << csv_field(text) << "\n";
            } else {
                out << k << std::string(k.size() < 24 ? 24 - k.size() : 1, ' ') << text << "\n";
            }
        }
    }

private:
    std::vector<std::pair<std::string, json>> fields_;
};

/// Midpoint of an enclosure refined until it carries `digits` decimal digits.
template <typename Eval>
std::string decimal(Eval&& eval, int digits) {
    const unsigned bits = static_cast<unsigned>(digits * 3.33) + 8;
    mpfr_prec_t prec = bits + 32;
    for (;;) {
        Interval iv = eval(prec);
        if (iv.meets_precision(bits) || prec > RefinementPolicy::kMaxBits) return iv.to_decimal(digits);
        prec *= 2;
    }
}

std::string decimal(const SurdElement& u, int digits) {
    return decimal([&](mpfr_prec_t p) { return u.evaluate(p); }, digits);
}

std::string decimal(const KElement& x, int digits) {
    return decimal([&](mpfr_prec_t p) { return x.evaluate(p); }, digits);
}

std::string endpoint(const Rational& q) { return Interval(q, 64).to_decimal(17); }

json matrix_json(const Mat2& m) {
    return json::array({json::array({m.e11.to_string(), m.e12.to_string()}),
                        json::array({m.e21.to_string(), m.e22.to_string()})});
}

json poly_json(const PolyTriple& f) { return {{"A", f.a.to_string()}, {"B", f.b.to_string()}, {"C", f.c.to_string()}}; }

QuadraticPolyK parse_seed(const std::string& a, const std::string& b, const std::string& c, const FieldSpec& spec) {
    return QuadraticPolyK(parse_element(a, spec, true), parse_element(b, spec, true), parse_element(c, spec, true));
}

void require_golden(const FieldSpec& spec, const char* what) {
    if (spec.d() != 5) {
        throw PreconditionError(std::string(what) + " needs D = 5: only Q(sqrt 5) has covering radius below 1 (got D = " +
                                std::to_string(spec.d()) + ")");
    }
}

ExpansionResult run_expansion(const QuadraticPolyK& seed, int branch, int conj_branch, const SessionConfig& cfg) {
    ExpansionConfig ec;
    ec.max_steps = cfg.max_steps;
    ExpansionResult r = expand_pair(seed, branch, conj_branch, ec);
    r.verified = verify_roundtrip(r, seed, branch).ok;
    return r;
}

/// max |x| over one real embedding, decided exactly.
KElement max_abs(const std::vector<KElement>& xs) {
    KElement best = xs.front() * Rational(0);
    for (const KElement& x : xs) {
        const KElement a = sign_of(x) == Sign::negative ? -x : x;
        if (sign_of(a - best) == Sign::positive) best = a;
    }
    return best;
}

}  // namespace

void cmd_eval(const std::string& expansion, const SessionConfig& cfg, std::ostream& out) {
    const FieldSpec spec(cfg.d);
    const CFExpansion cf = parse_expansion(expansion, spec);
    if (!cf.is_periodic()) throw PreconditionError("eval needs a nonempty period: " + format_expansion(cf));
    const PeriodicEvalResult r = eval_periodic(cf);

    Report rep;
    rep.add("expansion", format_expansion(cf));
    rep.add("preperiod", element_list(cf.preperiod));
    rep.add("period", element_list(cf.period));
    rep.add("e_matrix", matrix_json(r.e_matrix));
    rep.add("poly", poly_json(r.poly));
    rep.add("discriminant", r.discriminant.to_string());
    rep.add("linear_branch", r.linear_branch);
    switch (r.outcome) {
        case EvalOutcome::value:
            rep.add("outcome", "value");
            rep.add("value", r.value->to_string());
            rep.add("decimal", decimal(*r.value, cfg.digits));
            break;
        case EvalOutcome::value_in_k:
            rep.add("outcome", "value_in_k");
            rep.add("value", r.value_in_k->to_string());
            rep.add("decimal", decimal(*r.value_in_k, cfg.digits));
            break;
        case EvalOutcome::does_not_exist:
            rep.add("outcome", "does_not_exist");
            rep.add("reason", to_string(r.reason));
            if (r.reason == NonexistenceReason::ineq_window) {
                rep.add("window", r.window);
                rep.add("window_matrix", matrix_json(*r.window_matrix));
            }
            break;
    }
    rep.write(out, cfg.output);
}

void cmd_expand(const std::string& a, const std::string& b, const std::string& c, int branch, int conj_branch,
                const SessionConfig& cfg, std::ostream& out) {
    const FieldSpec spec(cfg.d);
    const QuadraticPolyK seed = parse_seed(a, b, c, spec);
    require_golden(spec, "expand");
    const ExpansionResult r = run_expansion(seed, branch, conj_branch, cfg);

    if (cfg.output == OutputFormat::json) {
        const json j = {
            {"seed", {{"A", seed.a().to_string()}, {"B", seed.b().to_string()}, {"C", seed.c().to_string()}}},
            {"branch", sign_text(branch)},
            {"conj_branch", sign_text(conj_branch)},
            {"preperiod", element_list(r.expansion.preperiod)},
            {"period", element_list(r.expansion.period)},
            {"steps", r.steps},
            {"verified", r.verified},
        };
        out << j.dump(2) << "\n";
        return;
    }
    Report rep;
    rep.add("seed", seed.to_string());
    rep.add("branch", sign_text(branch));
    rep.add("conj_branch", sign_text(conj_branch));
    rep.add("preperiod", bracketed(r.expansion.preperiod));
    rep.add("period", bracketed(r.expansion.period));
    rep.add("expansion", format_expansion(r.expansion));
    rep.add("steps", r.steps);
    rep.add("cycle_start", r.cycle_start);
    rep.add("verified", r.verified);
    rep.write(out, cfg.output);
}

void cmd_analyze(const std::string& a, const std::string& b, const std::string& c, int branch, int conj_branch,
                 const std::string& expansion, std::size_t steps, const SessionConfig& cfg, std::ostream& out) {
    const FieldSpec spec(cfg.d);
    const QuadraticPolyK seed = parse_seed(a, b, c, spec);
    CFExpansion source(spec);
    if (!expansion.empty()) {
        source = parse_expansion(expansion, spec);
        if (!source.is_periodic() && source.preperiod.size() < steps + 1) {
            throw PreconditionError("finite quotient list has " + std::to_string(source.preperiod.size()) +
                                    " entries; " + std::to_string(steps + 1) + " are needed");
        }
    } else {
        require_golden(spec, "analyze without --expansion");
        source = run_expansion(seed, branch, conj_branch, cfg).expansion;
    }
    const std::vector<KElement> qs = source.unrolled(steps + 1);
    const std::vector<TrajectoryRow> rows = diagnostics(seed, branch, qs, cfg.precision_bits, conj_branch);

    static const std::vector<std::string> columns = {"n",      "A_n",   "B_n",   "C_n",   "P_n",
                                                     "Q_n",    "s_n_lo", "s_n_hi", "f1_lo", "f1_hi",
                                                     "f2_lo",  "f2_hi", "weil_lo", "weil_hi", "naive"};
    auto row_values = [](const TrajectoryRow& r) {
        return std::vector<std::string>{std::to_string(r.n), r.triple.a.to_string(), r.triple.b.to_string(),
                                        r.triple.c.to_string(), r.p.to_string(), r.q.to_string(),
                                        endpoint(r.s_n.lower()), endpoint(r.s_n.upper()),
                                        endpoint(r.f1.lower()), endpoint(r.f1.upper()),
                                        endpoint(r.f2.lower()), endpoint(r.f2.upper()),
                                        endpoint(r.weil.lower()), endpoint(r.weil.upper()), r.naive.get_str()};
    };

    if (cfg.output == OutputFormat::csv) {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
        out << "\n";
        for (const TrajectoryRow& r : rows) {
            const auto vals = row_values(r);
            for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? "," : "") << csv_field(vals[i]);
            out << "\n";
        }
        return;
    }

    std::vector<KElement> as, sas;
    Rational m1 = 0, m2 = 0, h_lo = rows.front().weil.lower(), h_hi = rows.front().weil.upper();
    Integer naive_lo = rows.front().naive, naive_hi = rows.front().naive;
    bool conserved = true, has_sigma = true;
    for (const TrajectoryRow& r : rows) {
        as.push_back(r.triple.a);
        sas.push_back(r.triple.a.conj());
        m1 = std::max(m1, r.q_times_s.upper());
        if (r.sigma_q_times_s) {
            m2 = std::max(m2, r.sigma_q_times_s->upper());
        } else {
            has_sigma = false;
        }
        h_lo = std::min(h_lo, r.weil.lower());
        h_hi = std::max(h_hi, r.weil.upper());
        naive_lo = std::min(naive_lo, r.naive);
        naive_hi = std::max(naive_hi, r.naive);
        conserved = conserved && r.triple.discriminant() == seed.discriminant();
    }
    const KElement max_a = max_abs(as), max_sa = max_abs(sas);
    const json summary = {
        {"rows", rows.size()},
        {"quotients", format_expansion(source)},
        {"discriminant", seed.discriminant().to_string()},
        {"discriminant_conserved", conserved},
        {"max_abs_A", max_a.to_string()},
        {"max_abs_A_decimal", decimal(max_a, 12)},
        {"max_abs_sigma_A", max_sa.to_string()},
        {"max_abs_sigma_A_decimal", decimal(max_sa, 12)},
        {"sup_abs_Q_S", endpoint(m1)},
        {"sup_abs_sigma_Q_S", has_sigma ? json(endpoint(m2)) : json(nullptr)},
        {"weil_min", endpoint(h_lo)},
        {"weil_max", endpoint(h_hi)},
        {"naive_min", naive_lo.get_str()},
        {"naive_max", naive_hi.get_str()},
    };

    if (cfg.output == OutputFormat::json) {
        json table = json::array();
        for (const TrajectoryRow& r : rows) {
            const auto vals = row_values(r);
            json obj = json::object();
            obj["n"] = r.n;
            for (std::size_t i = 1; i < columns.size(); ++i) obj[columns[i]] = vals[i];
            table.push_back(obj);
        }
        out << json{{"rows", table}, {"summary", summary}}.dump(2) << "\n";
        return;
    }
    out << "n  A_n  B_n  C_n  |S_n|  weil  naive\n";
    for (const TrajectoryRow& r : rows) {
        out << r.n << "  " << r.triple.a.to_string() << "  " << r.triple.b.to_string() << "  "
            << r.triple.c.to_string() << "  " << r.s_n.to_decimal(8) << "  " << r.weil.to_decimal(8) << "  "
            << r.naive.get_str() << "\n";
    }
    out << "\n";
    Report rep;
    for (const auto& [k, v] : summary.items()) rep.add(k, v);
    rep.write(out, OutputFormat::text);
}

void cmd_radius(std::int64_t d, const SessionConfig& cfg, std::ostream& out) {
    const CoveringRadius r = covering_radius(d, cfg.precision_bits);
    Report rep;
    rep.add("D", d);
    rep.add("r_squared", r.r_squared.get_str());
    rep.add("r", r.r.to_decimal(cfg.digits));
    rep.add("usable", r.usable);
    rep.write(out, cfg.output);
}

namespace {

enum class RunStatus { cycle, max_steps, precondition, internal };

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::cycle: return "cycle";
        case RunStatus::max_steps: return "max_steps";
        case RunStatus::precondition: return "precondition";
        case RunStatus::internal: return "internal";
    }
    return "unknown";
}

struct CorpusRun {
    std::size_t index = 0;
    int conj_branch = 1;
    RunStatus status = RunStatus::cycle;
    std::size_t preperiod = 0, period = 0, steps = 0;
    bool verified = false;
    std::string expansion, error;
};

CorpusRun corpus_run(std::size_t index, const QuadraticPolyK& seed, int conj_branch, const SessionConfig& cfg) {
    CorpusRun run;
    run.index = index;
    run.conj_branch = conj_branch;
    try {
        const ExpansionResult r = run_expansion(seed, 1, conj_branch, cfg);
        run.preperiod = r.expansion.preperiod.size();
        run.period = r.expansion.period.size();
        run.steps = r.steps;
        run.verified = r.verified;
        run.expansion = format_expansion(r.expansion);
    } catch (const MaxStepsExceeded& e) {
        run.status = RunStatus::max_steps;
        run.error = e.what();
    } catch (const PreconditionError& e) {
        run.status = RunStatus::precondition;
        run.error = e.what();
    } catch (const std::exception& e) {
        run.status = RunStatus::internal;
        run.error = e.what();
    }
    return run;
}

json histogram(const std::map<std::size_t, std::size_t>& h) {
    json out = json::object();
    for (const auto& [k, v] : h) out[std::to_string(k)] = v;
    return out;
}

}  // namespace

void cmd_corpus(const CorpusSpec& cs, const SessionConfig& cfg, std::ostream& out) {
    const FieldSpec spec(cfg.d);
    require_golden(spec, "corpus");
    if (cs.count < 1) throw PreconditionError("corpus count must be at least 1");
    if (cs.bound < 1) throw PreconditionError("coefficient bound must be at least 1");

    // Rejection sampling: integer coordinates of A, B, C uniform in [-bound, bound].
    std::mt19937_64 rng(cs.seed);
    std::uniform_int_distribution<std::int64_t> coord(-cs.bound, cs.bound);
    auto draw = [&] { return KElement(spec, coord(rng), coord(rng)); };
    std::vector<QuadraticPolyK> seeds;
    std::size_t drawn = 0, bad_delta = 0, non_periodic = 0, other_sigma = 0;
    const std::size_t attempt_cap = 100000 * cs.count;
    while (seeds.size() < cs.count && drawn < attempt_cap) {
        ++drawn;
        const KElement a = draw(), b = draw(), c = draw();
        if (a.is_zero()) {
            ++bad_delta;
            continue;
        }
        QuadraticPolyK poly(a, b, c);
        const KElement delta = poly.discriminant();
        if (sign_of(delta) != Sign::positive || is_square_in_k(delta)) {
            ++bad_delta;
            continue;
        }
        const KElement sdelta = delta.conj();
        if (sign_of(sdelta - KElement(spec, -4)) == Sign::negative) {
            ++non_periodic;
            continue;
        }
        if (sign_of(sdelta) != Sign::positive || is_square_in_k(sdelta)) {
            ++other_sigma;
            continue;
        }
        seeds.push_back(std::move(poly));
    }

    const unsigned jobs = std::max(1u, cs.jobs);
    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        tasks.emplace_back(i, 1);
        tasks.emplace_back(i, -1);
    }
    std::vector<CorpusRun> runs;
    if (jobs == 1) {
        for (const auto& [i, cb] : tasks) runs.push_back(corpus_run(i, seeds[i], cb, cfg));
    } else {
        // Strided split across workers; the merged list is re-sorted below.
        std::vector<std::future<std::vector<CorpusRun>>> futures;
        for (unsigned w = 0; w < jobs; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                std::vector<CorpusRun> part;
                for (std::size_t t = w; t < tasks.size(); t += jobs) {
                    part.push_back(corpus_run(tasks[t].first, seeds[tasks[t].first], tasks[t].second, cfg));
                }
                return part;
            }));
        }
        for (auto& f : futures) {
            for (CorpusRun& r : f.get()) runs.push_back(std::move(r));
        }
    }
    std::sort(runs.begin(), runs.end(), [](const CorpusRun& x, const CorpusRun& y) {
        return std::pair(x.index, -x.conj_branch) < std::pair(y.index, -y.conj_branch);
    });

    std::size_t cycles = 0, verified = 0;
    std::map<std::size_t, std::size_t> pre_hist, per_hist;
    for (const CorpusRun& r : runs) {
        if (r.status != RunStatus::cycle) continue;
        ++cycles;
        verified += r.verified ? 1 : 0;
        ++pre_hist[r.preperiod];
        ++per_hist[r.period];
    }
    const double cycle_rate = runs.empty() ? 0.0 : static_cast<double>(cycles) / static_cast<double>(runs.size());
    const double verified_rate = cycles == 0 ? 0.0 : static_cast<double>(verified) / static_cast<double>(cycles);

    if (cfg.output == OutputFormat::csv) {
        out << "index,A,B,C,conj_branch,status,preperiod_len,period_len,steps,verified,expansion\n";
        for (const CorpusRun& r : runs) {
            const QuadraticPolyK& s = seeds[r.index];
            out << r.index << "," << csv_field(s.a().to_string()) << "," << csv_field(s.b().to_string()) << ","
                << csv_field(s.c().to_string()) << "," << sign_text(r.conj_branch) << "," << to_string(r.status)
                << "," << r.preperiod << "," << r.period << "," << r.steps << "," << (r.verified ? "true" : "false")
                << "," << csv_field(r.expansion) << "\n";
        }
        return;
    }

    json run_list = json::array();
    for (const CorpusRun& r : runs) {
        const QuadraticPolyK& s = seeds[r.index];
        json j = {{"index", r.index},
                  {"seed", {{"A", s.a().to_string()}, {"B", s.b().to_string()}, {"C", s.c().to_string()}}},
                  {"conj_branch", sign_text(r.conj_branch)},
                  {"status", to_string(r.status)},
                  {"steps", r.steps},
                  {"verified", r.verified}};
        if (r.status == RunStatus::cycle) {
            j["expansion"] = r.expansion;
            j["preperiod_len"] = r.preperiod;
            j["period_len"] = r.period;
        } else {
            j["error"] = r.error;
        }
        run_list.push_back(std::move(j));
    }
    const json summary = {
        {"randomness_seed", cs.seed},
        {"coefficient_bound", cs.bound},
        {"seeds", seeds.size()},
        {"runs", runs.size()},
        {"draws", drawn},
        {"rejected_discriminant", bad_delta},
        {"provably_non_periodic", non_periodic},
        {"rejected_sigma_other", other_sigma},
        {"cycles_detected", cycles},
        {"cycle_rate", cycle_rate},
        {"verified", verified},
        {"verified_rate", verified_rate},
        {"preperiod_lengths", histogram(pre_hist)},
        {"period_lengths", histogram(per_hist)},
    };
    if (cfg.output == OutputFormat::json) {
        out << json{{"summary", summary}, {"runs", run_list}}.dump(2) << "\n";
        return;
    }
    Report rep;
    for (const auto& [k, v] : summary.items()) rep.add(k, v);
    rep.write(out, OutputFormat::text);
    out << "\n";
    for (const CorpusRun& r : runs) {
        out << r.index << " " << seeds[r.index].to_string() << " conj " << sign_text(r.conj_branch) << ": "
            << to_string(r.status);
        if (r.status == RunStatus::cycle) {
            out << " " << r.expansion << " steps " << r.steps << (r.verified ? " verified" : " NOT VERIFIED");
        } else {
            out << " " << r.error;
        }
        out << "\n";
    }
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact continued fractions over real quadratic fields", "qcf"};
    app.require_subcommand(1);
    app.fallthrough();

    SessionConfig cfg;
    const std::map<std::string, OutputFormat> formats = {
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    app.add_option("--field-d", cfg.d, "Squarefree D > 1 selecting K = Q(sqrt D)")->capture_default_str();
    app.add_option("--precision", cfg.precision_bits, "Interval precision in bits")
        ->check(CLI::Range(16u, 1u << 16))
        ->capture_default_str();
    app.add_option("--output", cfg.output, "text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--max-steps", cfg.max_steps, "Step cap for the expansion loop")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--digits", cfg.digits, "Significant digits in decimal renderings")
        ->check(CLI::Range(1, 10000))
        ->capture_default_str();

    std::string expansion_text;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a periodic continued fraction");
    eval->add_option("expansion", expansion_text, "[a0, ...; p1, ..., pk]")->required();

    std::string sa, sb, sc, branch = "+", conj_branch = "+";
    auto seed_args = [&](CLI::App* sub) {
        sub->add_option("A", sa, "Leading coefficient")->required();
        sub->add_option("B", sb)->required();
        sub->add_option("C", sc)->required();
        sub->add_option("--branch", branch, "Root of the seed: + or -")->check(CLI::IsMember({"+", "-"}));
        sub->add_option("--conj-branch", conj_branch, "Root of the sigma-seed: + or -")
            ->check(CLI::IsMember({"+", "-"}));
    };
    CLI::App* expand = app.add_subcommand("expand", "Run the Q(sqrt 5) pair expansion on a seed A x^2 + B x + C");
    seed_args(expand);

    std::size_t steps = 100;
    std::string analyze_source;
    CLI::App* analyze = app.add_subcommand("analyze", "Trajectory diagnostics for a seed");
    seed_args(analyze);
    analyze->add_option("-n,--steps", steps, "Rows 0..n")->capture_default_str();
    analyze->add_option("--expansion", analyze_source, "Quotient source; defaults to the pair expansion of the seed");

    std::optional<std::int64_t> radius_d;
    CLI::App* radius = app.add_subcommand("radius", "Covering radius of the Minkowski lattice of O_K");
    radius->add_option("D", radius_d, "Defaults to --field-d");

    CorpusSpec cs;
    CLI::App* corpus = app.add_subcommand("corpus", "Expand a reproducible corpus of random seeds");
    corpus->add_option("--count", cs.count)->capture_default_str();
    corpus->add_option("--bound", cs.bound, "Bound on integer coordinates of A, B, C")->capture_default_str();
    corpus->add_option("--seed", cs.seed, "Randomness seed")->capture_default_str();
    corpus->add_option("-j,--jobs", cs.jobs, "Worker threads")->capture_default_str();

    std::vector<const char*> raw;
    for (const std::string& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kParse;
    }

    const int b = branch == "+" ? 1 : -1;
    const int cb = conj_branch == "+" ? 1 : -1;
    try {
        if (eval->parsed()) {
            cmd_eval(expansion_text, cfg, out);
        } else if (expand->parsed()) {
            cmd_expand(sa, sb, sc, b, cb, cfg, out);
        } else if (analyze->parsed()) {
            cmd_analyze(sa, sb, sc, b, cb, analyze_source, steps, cfg, out);
        } else if (radius->parsed()) {
            cmd_radius(radius_d.value_or(cfg.d), cfg, out);
        } else if (corpus->parsed()) {
            cmd_corpus(cs, cfg, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const MaxStepsExceeded& e) {
        err << "max steps exceeded: " << e.what() << "\n";
        return kMaxSteps;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}

}  // namespace qcf::cli
