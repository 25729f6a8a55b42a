#include "qmod/runner.hpp"

#include "qmod/cohomology.hpp"
#include "qmod/counterexample.hpp"
#include "qmod/duflo.hpp"
#include "qmod/enveloping.hpp"
#include "qmod/fixtures.hpp"
#include "qmod/obstruction.hpp"
#include "qmod/parallel.hpp"
#include "qmod/prng.hpp"
#include "qmod/star.hpp"
#include "qmod/version.hpp"

#include <chrono>
#include <sstream>

namespace qmod {

namespace {

void add_check(std::vector<CheckResult>& checks, std::string name, bool pass,
               std::string detail, Json extra = Json::object()) {
    checks.push_back({std::move(name), pass, std::move(detail), std::move(extra)});
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
}

// Runs independent probes (possibly in parallel), reporting the failure
// count; slot-per-trial results keep the outcome schedule-independent.
template <class Fn>
std::pair<int, int> run_probes(int trials, Fn&& probe) {
    std::vector<std::uint8_t> ok(trials, 0);
    par::for_index(static_cast<std::size_t>(trials),
                   [&](std::size_t t) { ok[t] = probe(static_cast<int>(t)) ? 1 : 0; });
    int failures = 0, first = -1;
    for (int t = 0; t < trials; ++t)
        if (!ok[t]) {
            ++failures;
            if (first < 0)
                first = t;
        }
    return {failures, first};
}

std::string probe_detail(int trials, int failures, std::uint64_t seed) {
    std::ostringstream os;
    os << (trials - failures) << "/" << trials << " probes passed (seed " << seed << ")";
    return os.str();
}

Json certificate_to_json(const ConstraintSystem& sys, const Certificate& cert,
                         const DecideOptions& opt) {
    Json j;
    switch (cert.kind) {
    case Certificate::Kind::Feasible: {
        j["kind"] = "feasible";
        Json w0 = Json::object(), w1 = Json::object();
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
            w0[sys.unknowns[i]] = rational_to_json(cert.witness0[i]);
            if (!cert.witness1[i].is_zero())
                w1[sys.unknowns[i]] = rational_to_json(cert.witness1[i]);
        }
        j["witness"] = std::move(w0);
        if (!w1.empty())
            j["witness_lambda_part"] = std::move(w1);
        Json d1 = Json::array();
        for (const auto& v : cert.d1_witness0)
            d1.push_back(rational_to_json(v));
        j["d1"] = std::move(d1);
        break;
    }
    case Certificate::Kind::Infeasible: {
        j["kind"] = "infeasible";
        Json rows = Json::array();
        for (std::size_t r = 0; r < cert.dual.size(); ++r) {
            if (cert.dual[r].is_zero())
                continue;
            Json e;
            e["row"] = sys.rows[r].tag + "(" + std::to_string(sys.rows[r].label.first) + "," +
                       std::to_string(sys.rows[r].label.second) + ")";
            e["coeff"] = rational_to_json(cert.dual[r]);
            rows.push_back(std::move(e));
        }
        j["dual"] = std::move(rows);
        std::ostringstream rel;
        rel << "0 = (" << cert.dual_c0.str() << ") + (" << cert.dual_c_lambda.str()
            << ") * lambda";
        j["relation"] = rel.str();
        break;
    }
    case Certificate::Kind::Undecided:
        j["kind"] = "undecided";
        j["surviving_quadratics"] = cert.surviving_quadratics;
        break;
    }
    j["lambda"] = opt.symbolic_lambda ? Json("symbolic") : Json(opt.lambda_value.str());
    return j;
}

struct Ctx {
    const RunConfig& cfg;
    std::string data_dir;
    std::vector<CheckResult>& checks;
};

void run_check_poisson(Ctx ctx, const std::string& fixture) {
    CounterexampleData data = load_counterexample(fixture, ctx.data_dir);
    ValidationReport val = validate_data(data);
    for (const auto& issue : val.issues)
        add_check(ctx.checks, "hypothesis-" + issue.hypothesis, false, issue.detail);
    if (!val.ok) {
        add_check(ctx.checks, "build", false, "fixture data rejected");
        return;
    }
    add_check(ctx.checks, "hypotheses", true,
              "g semisimple; C a non-trivial cocycle of (h, R)");
    BuiltCounterexample b = build(data);
    {
        std::ostringstream os;
        os << "n = " << b.n << " (dim g = " << b.dim_g << ", dim h = " << b.dim_h << ")";
        add_check(ctx.checks, "build", true, os.str());
    }
    FormalMultiVector pe(0, b.n, 2);
    pe.coefficient(0) = b.pi;
    JacobiReport jr = jacobi_check(pe, 0);
    add_check(ctx.checks, "jacobi-identity", jr.holds,
              jr.holds ? "[pi, pi] = 0 exactly" : "nonzero residual");
    GradedJacobiBreakdown br = jacobi_lemma_breakdown(b);
    add_check(ctx.checks, "graded-linear", br.linear_ok, "[pi1, pi1] = 0 (Lie Jacobi)");
    add_check(ctx.checks, "graded-quadratic", br.mixed_ok,
              "[pi1, pi2] = 0 (cocycle + Casimir centrality)");
    add_check(ctx.checks, "graded-cubic", br.cubic_ok, "[pi2, pi2] = 0 (y-independence)");
    add_check(ctx.checks, "coisotropy", coisotropy_check(pe), "pi(0) = 0");
}

const std::vector<std::pair<int, int>>* expected_dims(const std::string& fixture,
                                                      const std::string& module) {
    using Table = std::vector<std::pair<int, int>>;
    static const std::map<std::pair<std::string, std::string>, Table> tables = {
        {{"k", "trivial"}, {{0, 1}, {1, 1}, {2, 0}}},
        {{"k", "adjoint"}, {{0, 0}, {1, 0}, {2, 0}}},
        {{"k-plus-k", "trivial"}, {{2, 1}}},
        {{"k-plus-k", "adjoint"}, {{0, 0}, {1, 0}, {2, 0}}},
        {{"so3", "trivial"}, {{1, 0}, {2, 0}}},
    };
    auto it = tables.find({fixture, module});
    return it == tables.end() ? nullptr : &it->second;
}

void run_cohomology(Ctx ctx) {
    std::string fixture = ctx.cfg.fixture.empty() ? "k" : ctx.cfg.fixture;
    LieAlgebra g = load_lie_algebra(fixture, ctx.data_dir);
    LieModule module = [&]() {
        if (ctx.cfg.module == "trivial")
            return LieModule::trivial(g);
        if (ctx.cfg.module == "adjoint")
            return LieModule::adjoint(g);
        if (ctx.cfg.module == "coadjoint")
            return LieModule::coadjoint(g);
        return lie_module_from_json(read_json_file(ctx.cfg.module), g);
    }();
    CochainComplex cx(module);

    bool dd = true;
    for (int p = 0; p + 1 <= cx.top_degree(); ++p)
        dd = dd && (cx.differential(p + 1) * cx.differential(p)).is_zero();
    add_check(ctx.checks, "d-squared-zero", dd, "d_{p+1} d_p = 0 for all p");

    CohomologyReport rep = cohomology(cx);
    bool rn = true;
    for (int p = 0; p <= cx.top_degree(); ++p)
        rn = rn && (rep.cocycle_dims[p] + rank(cx.differential(p)) == cx.dim_cochains(p));
    add_check(ctx.checks, "rank-nullity", rn, "dim ker d_p + rank d_p = dim C^p");

    bool reps_ok = true;
    for (int p = 0; p <= cx.top_degree(); ++p) {
        if (static_cast<int>(rep.representatives[p].size()) != rep.dims[p])
            reps_ok = false;
        for (const auto& z : rep.representatives[p]) {
            if (!is_cocycle(cx, z, p))
                reps_ok = false;
            if (p > 0 && coboundary_witness(cx, z, p).is_coboundary)
                reps_ok = false;
        }
    }
    add_check(ctx.checks, "representatives", reps_ok,
              "representatives are cocycles, not coboundaries");

    {
        std::ostringstream os;
        os << "dims = [";
        for (std::size_t p = 0; p < rep.dims.size(); ++p)
            os << (p ? ", " : "") << rep.dims[p];
        os << "]";
        Json extra;
        extra["dims"] = rep.dims;
        add_check(ctx.checks, "betti-numbers", true, os.str(), std::move(extra));
    }

    if (const auto* table = expected_dims(fixture, ctx.cfg.module)) {
        bool ok = true;
        std::ostringstream os;
        for (const auto& [p, d] : *table) {
            bool hit = p < static_cast<int>(rep.dims.size()) && rep.dims[p] == d;
            ok = ok && hit;
            os << "H^" << p << "=" << d << (hit ? " " : "(mismatch) ");
        }
        add_check(ctx.checks, "expected-dims", ok, os.str());
    }

    if (fixture == "k-plus-k" && ctx.cfg.module == "trivial") {
        RationalVector omega =
            cx.cochain_from_components(2, {{IndexTuple{0, 2}, RationalVector{Rational(1)}}});
        bool ok = is_cocycle(cx, omega, 2) && !coboundary_witness(cx, omega, 2).is_coboundary;
        add_check(ctx.checks, "omega-class", ok,
                  "omega: e1^e3 -> 1 is a non-coboundary cocycle");
    }
}

void run_star_verify(Ctx ctx) {
    std::string fixture = ctx.cfg.fixture.empty() ? "so3" : ctx.cfg.fixture;
    LieAlgebra g = load_lie_algebra(fixture, ctx.data_dir);
    const int n = g.dim();
    const int trials = ctx.cfg.trials;
    WeightTable wt = WeightTable::standard(ctx.cfg.wheel_sign);
    KontsevichStar2 star(g.linear_poisson(), wt);
    MultiVector pi = star.pi();

    add_check(ctx.checks, "weight-table",
              wt.w_cycle == Rational(2) * wheel_weight(1, ctx.cfg.wheel_sign),
              "w_cycle = 2 * wheel_weight(1)", weight_table_to_json(wt));

    add_check(ctx.checks, "bernoulli-values",
              bernoulli(2) == Rational(1, 6) && bernoulli(4) == Rational(-1, 30),
              "B2 = 1/6, B4 = -1/30");
    {
        bool ok = true;
        for (int m = 1; m <= 5; ++m)
            ok = ok && wheel_weight(m) != Rational(0) &&
                 wheel_weight(m) == bernoulli(2 * m).abs() / (Rational(4 * m) * factorial(2 * m));
        add_check(ctx.checks, "wheel-weights", ok,
                  "|c_{2n}| = |B_{2n}|/(4n (2n)!) and nonzero for n = 1..5");
    }

    auto [unit_fail, uf] = run_probes(trials, [&](int t) {
        Prng rng(trial_seed(ctx.cfg.seed, t));
        Polynomial f = random_polynomial(rng, n, 3, 4);
        Polynomial one = Polynomial::constant(n, Rational(1));
        PolySeries l = star.product(one, f), r = star.product(f, one);
        PolySeries lc = cbh_star(g, one, f, 2), rc = cbh_star(g, f, one, 2);
        bool ok = l[0] == f && r[0] == f;
        for (int k = 1; k <= 2; ++k)
            ok = ok && l[k].is_zero() && r[k].is_zero() && lc[k].is_zero() && rc[k].is_zero();
        return ok && lc[0] == f && rc[0] == f;
    });
    add_check(ctx.checks, "unit-law", unit_fail == 0, probe_detail(trials, unit_fail, ctx.cfg.seed));

    auto [anti_fail, af] = run_probes(trials, [&](int t) {
        Prng rng(trial_seed(ctx.cfg.seed, t) + 1);
        Polynomial f = random_polynomial(rng, n, 3, 4);
        Polynomial gg = random_polynomial(rng, n, 3, 4);
        PolySeries fg = star.product(f, gg), gf = star.product(gg, f);
        return fg[0] == gf[0] && fg[1] - gf[1] == poisson_bracket(pi, f, gg);
    });
    add_check(ctx.checks, "eps1-antisymmetry", anti_fail == 0,
              probe_detail(trials, anti_fail, ctx.cfg.seed));

    StarFn fn = [&](const Polynomial& a, const Polynomial& b) { return star.product(a, b); };
    auto [assoc_fail, sf] = run_probes(trials, [&](int t) {
        Prng rng(trial_seed(ctx.cfg.seed, t) + 2);
        Polynomial f = random_polynomial(rng, n, 3, 3);
        Polynomial gg = random_polynomial(rng, n, 3, 3);
        Polynomial h = random_polynomial(rng, n, 3, 3);
        return series_equal(star_series(fn, star.product(f, gg), {h}, 2),
                            star_series(fn, {f}, star.product(gg, h), 2), 2);
    });
    add_check(ctx.checks, "associativity-linear", assoc_fail == 0,
              probe_detail(trials, assoc_fail, ctx.cfg.seed));

    {
        BuiltCounterexample bq = build(load_counterexample("so3-r2", ctx.data_dir));
        KontsevichStar2 star_q(bq.pi, wt);
        StarFn fq = [&](const Polynomial& a, const Polynomial& b) {
            return star_q.product(a, b);
        };
        auto [qfail, qf] = run_probes(trials, [&](int t) {
            Prng rng(trial_seed(ctx.cfg.seed, t) + 3);
            Polynomial f = random_polynomial(rng, bq.n, 3, 3);
            Polynomial gg = random_polynomial(rng, bq.n, 3, 3);
            Polynomial h = random_polynomial(rng, bq.n, 3, 3);
            return series_equal(star_series(fq, star_q.product(f, gg), {h}, 2),
                                star_series(fq, {f}, star_q.product(gg, h), 2), 2);
        });
        add_check(ctx.checks, "associativity-quadratic", qfail == 0,
                  probe_detail(trials, qfail, ctx.cfg.seed));
    }

    auto [char_fail, cf] = run_probes(trials, [&](int t) {
        Prng rng(trial_seed(ctx.cfg.seed, t) + 4);
        Polynomial f = random_polynomial(rng, n, 3, 3);
        Polynomial gg = random_polynomial(rng, n, 3, 3);
        auto rfg = rho_linear_series(g, star.product(f, gg), 2, ctx.cfg.wheel_sign);
        auto rf = rho_linear(g, f, 2, ctx.cfg.wheel_sign);
        auto rg = rho_linear(g, gg, 2, ctx.cfg.wheel_sign);
        for (int k = 0; k <= 2; ++k) {
            Rational conv(0);
            for (int a = 0; a <= k; ++a)
                conv += rf[a] * rg[k - a];
            if (conv != rfg[k])
                return false;
        }
        return true;
    });
    add_check(ctx.checks, "character", char_fail == 0,
              probe_detail(trials, char_fail, ctx.cfg.seed));

    auto [int_fail, itf] = run_probes(trials, [&](int t) {
        Prng rng(trial_seed(ctx.cfg.seed, t) + 5);
        Polynomial f = random_polynomial(rng, n, 3, 3);
        Polynomial gg = random_polynomial(rng, n, 3, 3);
        PolySeries lhs = apply_operator_series(duflo_series(g, 2, false, ctx.cfg.wheel_sign),
                                               cbh_star(g, f, gg, 2), 2);
        PolySeries rhs = star_series(fn, duflo_apply(g, f, 2, false, ctx.cfg.wheel_sign),
                                     duflo_apply(g, gg, 2, false, ctx.cfg.wheel_sign), 2);
        return series_equal(lhs, rhs, 2);
    });
    add_check(ctx.checks, "duflo-intertwining", int_fail == 0,
              probe_detail(trials, int_fail, ctx.cfg.seed));
}

void run_obstruction(Ctx ctx, const std::string& fixture, const std::string& pi1_mode) {
    CounterexampleData data = load_counterexample(fixture, ctx.data_dir);
    ValidationReport val = validate_data(data);
    if (!val.ok) {
        for (const auto& issue : val.issues)
            add_check(ctx.checks, "hypothesis-" + issue.hypothesis, false, issue.detail);
        return;
    }
    BuiltCounterexample b = build(data);
    auto expect = expected_verdict(fixture);

    if (pi1_mode == "all-admissible") {
        SpecializedReport rep = specialized_verdict(b, ctx.cfg.wheel_sign);
        for (const auto& s : rep.steps)
            add_check(ctx.checks, s.name, s.pass, s.detail);
        bool match = !expect || (*expect == ExpectedVerdict::Infeasible
                                     ? rep.infeasible_for_all_pi1
                                     : !rep.infeasible_for_all_pi1);
        Json extra;
        extra["d1_kernel_dim"] = rep.d1_kernel_dim;
        extra["pi1_kernel_dim"] = rep.pi1_kernel_dim;
        extra["dim_H2_h_h"] = rep.dim_h2_hh;
        extra["dim_H2_sum_h"] = rep.dim_h2_sum_h;
        add_check(ctx.checks, "verdict", rep.infeasible_for_all_pi1 && match,
                  rep.infeasible_for_all_pi1
                      ? "infeasible for every admissible pi_1 with pi_eps(0) = 0"
                      : "pipeline incomplete",
                  std::move(extra));
        return;
    }

    std::optional<MultiVector> pi1;
    if (pi1_mode != "zero") {
        MultiVector loaded = multivector_from_json(read_json_file(pi1_mode));
        add_check(ctx.checks, "pi1-vanishes-at-origin", loaded.vanishes_at_origin(),
                  "pi_eps(0) = 0 requires the eps^1 term to vanish at 0");
        MultiVector br = schouten(b.pi, loaded);
        add_check(ctx.checks, "pi1-eps1-jacobi", br.is_zero(),
                  "[pi, pi_1] = 0 (eps^1 part of the Jacobi identity)");
        pi1 = std::move(loaded);
    }

    FormalMultiVector pe(0, b.n, 2);
    pe.coefficient(0) = b.pi;
    add_check(ctx.checks, "coisotropy", coisotropy_check(pe), "pi(0) = 0");

    ConstraintSystem d1c = assemble_d1con(b.pi);
    auto kernel = d1_solution_space(d1c);
    {
        std::ostringstream os;
        os << kernel.size() << " free D1 directions from " << d1c.rows.size() << " rows";
        add_check(ctx.checks, "d1con", true, os.str());
    }

    AnomalyTerm a3 = anomaly_a3(b, ctx.cfg.wheel_sign);
    ConstraintSystem con3 = assemble_con3(b.pi, pi1, a3, kernel);
    bool quads = false;
    for (const auto& row : con3.rows)
        quads = quads || (row.quad.rows() > 0 && !row.quad.is_zero());
    add_check(ctx.checks, "quadratic-terms", true,
              quads ? "quadratic terms survive substitution" : "quadratic terms vanish");

    DecideOptions sym{true, Rational(0)};
    Certificate cert_sym = decide(con3, sym);
    DecideOptions conc{false, a3.lambda()};
    Certificate cert_conc = decide(con3, conc);

    auto verdict_matches = [&](const Certificate& c) {
        if (!expect)
            return c.kind != Certificate::Kind::Undecided;
        return *expect == ExpectedVerdict::Infeasible
                   ? c.kind == Certificate::Kind::Infeasible
                   : c.kind == Certificate::Kind::Feasible;
    };
    auto kind_name = [](Certificate::Kind k) {
        switch (k) {
        case Certificate::Kind::Feasible:
            return "feasible";
        case Certificate::Kind::Infeasible:
            return "infeasible";
        default:
            return "undecided";
        }
    };

    Json sym_extra = certificate_to_json(con3, cert_sym, sym);
    sym_extra["rows"] = con3.rows.size();
    Json provenance = Json::array();
    for (const auto& row : con3.rows)
        provenance.push_back(row.tag + "(" + std::to_string(row.label.first) + "," +
                             std::to_string(row.label.second) + ")");
    sym_extra["provenance"] = std::move(provenance);
    add_check(ctx.checks, "decide-symbolic",
              verdict_matches(cert_sym) && verify_certificate(con3, cert_sym, sym),
              std::string(kind_name(cert_sym.kind)) + " for every lambda != 0",
              std::move(sym_extra));
    std::ostringstream os;
    os << kind_name(cert_conc.kind) << " at lambda = " << a3.lambda().str();
    add_check(ctx.checks, "decide-concrete",
              verdict_matches(cert_conc) && verify_certificate(con3, cert_conc, conc), os.str(),
              certificate_to_json(con3, cert_conc, conc));
}

void run_negative_controls(Ctx ctx) {
    {
        MultiVector pi = load_lie_algebra("so3", ctx.data_dir).linear_poisson();
        auto kernel = d1_solution_space(assemble_d1con(pi));
        AnomalyTerm zero_a3{Matrix(3, 3), wheel_weight(1).abs(), ctx.cfg.wheel_sign};
        Certificate cert = decide(assemble_con3(pi, std::nullopt, zero_a3, kernel));
        add_check(ctx.checks, "negative-control-linear",
                  cert.kind == Certificate::Kind::Feasible && is_zero(cert.witness0) &&
                      is_zero(cert.witness1),
                  "pure so(3): feasible with D1 = D2 = 0 (anomaly vanishes)");
    }
    {
        MultiVector pi(2, 2);
        pi.add_component({0, 1}, Polynomial::monomial(2, {2, 0}, Rational(1)));
        auto kernel = d1_solution_space(assemble_d1con(pi));
        AnomalyTerm zero_a3{Matrix(2, 2), wheel_weight(1).abs(), ctx.cfg.wheel_sign};
        Certificate cert = decide(assemble_con3(pi, std::nullopt, zero_a3, kernel));
        add_check(ctx.checks, "negative-control-quadratic",
                  cert.kind == Certificate::Kind::Feasible && is_zero(cert.witness0),
                  "vanishing linear part with A3 = 0: the trivial character survives");
    }
    {
        AnsatzReport rep = order12_ansatz_report(3, ctx.cfg.seed);
        bool ok = rep.all_pass;
        std::ostringstream os;
        os << rep.probes.size() << " ansatz probes";
        add_check(ctx.checks, "ansatz-probes", ok, os.str());
    }
}

void run_command(Ctx ctx) {
    const RunConfig& cfg = ctx.cfg;
    if (cfg.command == "check-poisson") {
        run_check_poisson(ctx, cfg.fixture.empty() ? "so3-r2" : cfg.fixture);
    } else if (cfg.command == "cohomology") {
        run_cohomology(ctx);
    } else if (cfg.command == "star-verify") {
        run_star_verify(ctx);
    } else if (cfg.command == "obstruction") {
        run_obstruction(ctx, cfg.fixture.empty() ? "so3-r2" : cfg.fixture, cfg.pi1);
    } else if (cfg.command == "report-all") {
        auto sub = [&](const std::string& prefix, auto&& fn) {
            std::vector<CheckResult> local;
            Ctx c{ctx.cfg, ctx.data_dir, local};
            fn(c);
            for (auto& chk : local) {
                chk.name = prefix + "/" + chk.name;
                ctx.checks.push_back(std::move(chk));
            }
        };
        sub("check-poisson(so3-r2)", [&](Ctx c) { run_check_poisson(c, "so3-r2"); });
        sub("check-poisson(so3-kk)", [&](Ctx c) { run_check_poisson(c, "so3-kk"); });
        for (const auto& [fix, mod] :
             std::vector<std::pair<std::string, std::string>>{{"k", "trivial"},
                                                              {"k", "adjoint"},
                                                              {"k-plus-k", "trivial"},
                                                              {"k-plus-k", "adjoint"}}) {
            RunConfig sc = ctx.cfg;
            sc.fixture = fix;
            sc.module = mod;
            std::vector<CheckResult> local;
            Ctx c{sc, ctx.data_dir, local};
            run_cohomology(c);
            for (auto& chk : local) {
                chk.name = "cohomology(" + fix + "," + mod + ")/" + chk.name;
                ctx.checks.push_back(std::move(chk));
            }
        }
        {
            auto kun = kunneth_check(
                LieModule::trivial(load_lie_algebra("so3", ctx.data_dir)),
                LieModule::adjoint(load_lie_algebra("k-plus-k", ctx.data_dir)), 2);
            add_check(ctx.checks, "kunneth/h-valued-h2", kun.ok && kun.lhs_dim == 0,
                      "dim H^2(so3 + (k+k), h-valued) = 0, both routes");
        }
        sub("star-verify", [&](Ctx c) { run_star_verify(c); });
        sub("obstruction(so3-r2,zero)", [&](Ctx c) { run_obstruction(c, "so3-r2", "zero"); });
        sub("obstruction(so3-kk,all-admissible)",
            [&](Ctx c) { run_obstruction(c, "so3-kk", "all-admissible"); });
        run_negative_controls(ctx);
    } else {
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    }
}

} // namespace

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

Json Report::to_json() const {
    Json j;
    j["command"] = config.command;
    j["version"] = kVersion;
    j["fixture"] = config.fixture;
    j["config"] = Json{{"module", config.module},
                       {"pi1", config.pi1},
                       {"order", config.order},
                       {"seed", config.seed},
                       {"trials", config.trials},
                       {"wheel_sign", config.wheel_sign}};
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        if (!c.extra.empty())
            e["data"] = c.extra;
        checks_json.push_back(std::move(e));
    }
    j["checks"] = std::move(checks_json);
    j["pass"] = pass();
    j["timing_ms"] = timing_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "qmod " << kVersion << " — " << config.command;
    if (!config.fixture.empty())
        os << " (fixture " << config.fixture << ")";
    os << ", seed " << config.seed << "\n";
    for (const auto& c : checks)
        os << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name << " — " << c.detail << "\n";
    int failed = 0;
    for (const auto& c : checks)
        failed += c.pass ? 0 : 1;
    os << (pass() ? "PASS" : "FAIL") << " (" << (checks.size() - failed) << "/" << checks.size()
       << " checks, " << static_cast<long>(timing_ms) << " ms)\n";
    return os.str();
}

Report run(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Report report;
    report.config = cfg;
    Ctx ctx{cfg, resolve_data_dir(cfg.data_dir), report.checks};
    run_command(ctx);
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace qmod
