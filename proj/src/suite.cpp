#include "rrc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "rrc/cut_sampling.hpp"
#include "rrc/ideal_text.hpp"
#include "rrc/monomial_closure.hpp"
#include "rrc/valuation_closure.hpp"

namespace rrc {

namespace {

using CheckFn = std::function<void(const GeneratorConfig&, CheckResult&)>;

struct CheckSpec {
    const char* name;
    const char* law;
    const char* kind;
    CheckFn run;
};

void record_failure(CheckResult& r, const std::string& cex) {
    ++r.failures;
    if (r.counterexample.empty()) r.counterexample = cex;
}

std::vector<std::string> poly_vars() { return default_var_names(2); }

MonomialIdeal quartic_witness_ideal() {
    return MonomialIdeal::make(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
}

MonomialIdeal quartic_witness_closure() {
    return MonomialIdeal::make(2, {{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}});
}

// ---------------------------------------------------------------- poly ----

void check_quartic_witness(const GeneratorConfig&, CheckResult& r) {
    r.cases = 1;
    const auto vars = poly_vars();
    MonomialIdeal j = quartic_witness_ideal();
    ExpVec gain{2, 2};

    MonomialIdeal term1 = rr_chain_term(j, 1);
    bool ok = term1.contains(gain) && !j.contains(gain) && rr_oracle_membership(j, gain) &&
              !rr_oracle_membership(j, {1, 1});
    ClosureResult cl = rr_closure(j);
    ok = ok && cl.report.certified && cl.closure == quartic_witness_closure();
    if (!ok)
        record_failure(r, replay_poly(vars, j));
    else
        r.witness = "closure gains " + format_monomial(vars, gain);
}

void check_chain_ascending(const GeneratorConfig& cfg, CheckResult& r) {
    const auto vars = poly_vars();
    for (int c = 0; c < cfg.cases; ++c) {
        ++r.cases;
        MonomialIdeal i = gen_monomial_ideal(cfg, static_cast<std::uint64_t>(c));
        PowerCache pc(i);
        MonomialIdeal prev = i;
        bool ok = true;
        for (int n = 1; n <= 6 && ok; ++n) {
            MonomialIdeal term = colon(pc.get(n + 1), pc.get(n));
            ok = subset_of(prev, term);
            prev = term;
        }
        if (!ok) record_failure(r, replay_poly(vars, i));
    }
}

void check_sandwich(const GeneratorConfig& cfg, CheckResult& r) {
    const auto vars = poly_vars();
    long certified = 0;
    for (int c = 0; c < cfg.cases; ++c) {
        ++r.cases;
        MonomialIdeal i = gen_monomial_ideal(cfg, 10000 + static_cast<std::uint64_t>(c));
        ClosureResult cl = rr_closure(i);
        if (!cl.report.certified) continue;
        ++certified;
        bool ok = subset_of(i, cl.closure) && subset_of(cl.closure, integral_closure_2v(i));
        if (!ok) record_failure(r, replay_poly(vars, i));
    }
    r.witness = "certified " + std::to_string(certified) + "/" + std::to_string(r.cases);
    if (certified * 100 < 95 * r.cases)
        record_failure(r, "certified fraction below 95%: " + r.witness);
}

void check_principal_closed(const GeneratorConfig& cfg, CheckResult& r) {
    const auto vars = poly_vars();
    for (int c = 0; c < cfg.cases / 2; ++c) {
        ++r.cases;
        MonomialIdeal i = gen_principal_ideal(cfg, static_cast<std::uint64_t>(c));
        ClosureResult cl = rr_closure(i);
        if (!(cl.report.certified && cl.closure == i)) record_failure(r, replay_poly(vars, i));
    }
}

void check_stable_implies_closed(const GeneratorConfig& cfg, CheckResult& r) {
    const auto vars = poly_vars();
    const int target = cfg.cases / 2;
    long found = 0;
    for (int draw = 0; draw < 40 * target && found < target; ++draw) {
        MonomialIdeal i = gen_monomial_ideal(cfg, 20000 + static_cast<std::uint64_t>(draw));
        if (!is_stable(i)) continue;
        ++found;
        ++r.cases;
        ClosureResult cl = rr_closure(i);
        if (!(cl.report.certified && cl.closure == i)) record_failure(r, replay_poly(vars, i));
    }
    r.witness = "stable ideals found: " + std::to_string(found);
    if (found < target) record_failure(r, "stable sample budget exhausted: " + r.witness);
}

void check_closure_idempotent(const GeneratorConfig& cfg, CheckResult& r) {
    const auto vars = poly_vars();
    for (int c = 0; c < cfg.cases / 8; ++c) {
        ++r.cases;
        MonomialIdeal i = gen_monomial_ideal(cfg, 30000 + static_cast<std::uint64_t>(c));
        ClosureResult cl = rr_closure(i);
        if (!cl.report.certified) continue;
        ClosureResult again = rr_closure(cl.closure);
        if (!(again.report.certified && again.closure == cl.closure))
            record_failure(r, replay_poly(vars, i));
    }
}

void check_high_powers(const GeneratorConfig& cfg, CheckResult& r) {
    const auto vars = poly_vars();
    ClosureConfig ccfg;
    ccfg.n_max = 8;
    for (int c = 0; c < cfg.cases / 4; ++c) {
        ++r.cases;
        MonomialIdeal i = gen_m_primary_ideal(cfg, static_cast<std::uint64_t>(c));
        if (!first_power_run_closed(i, 8, 4)) {
            record_failure(r, replay_poly(vars, i) + " (no closed power run up to n=8)");
            continue;
        }
        ClosureResult cl = rr_closure_chain_only(i);
        if (!is_reduction_of(i, cl.closure, ccfg))
            record_failure(r, replay_poly(vars, i) + " (no reduction exponent up to n=8)");
    }
}

void check_reduction(const GeneratorConfig& cfg, CheckResult& r) {
    const auto vars = poly_vars();
    for (int c = 0; c < cfg.cases / 4; ++c) {
        ++r.cases;
        MonomialIdeal i = gen_monomial_ideal(cfg, 40000 + static_cast<std::uint64_t>(c));
        ClosureResult cl = rr_closure_chain_only(i);
        if (!cl.report.stabilized_at) continue;
        if (!is_reduction_of(i, cl.closure)) record_failure(r, replay_poly(vars, i));
    }
}

void check_oracle_agreement(const GeneratorConfig& cfg, CheckResult& r) {
    const auto vars = poly_vars();
    for (int c = 0; c < cfg.cases / 8; ++c) {
        ++r.cases;
        MonomialIdeal i = gen_monomial_ideal(cfg, 50000 + static_cast<std::uint64_t>(c));
        ClosureResult cl = rr_closure_chain_only(i);
        OracleClosure oc = rr_oracle_closure(i);
        if (!cl.report.stabilized_at || !oc.boundary_clean) continue;
        if (cl.closure != oc.ideal) record_failure(r, replay_poly(vars, i));
    }
}

// ----------------------------------------------------------------- val ----

void check_grid_closed_form_vs_chain(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        for (const auto& c : grid_cuts(cfg, g, true)) {
            ++r.cases;
            if (rr_closed_form(c) != rr_by_chain(c, 4)) record_failure(r, replay_val(c));
        }
    }
}

void check_grid_unit_closure(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        for (const auto& c : grid_cuts(cfg, g, true)) {
            ++r.cases;
            bool unit_closure = rr_closed_form(c) == unit_cut(g);
            bool idem_prime = is_prime(c).has_value() && is_idempotent(c);
            if (unit_closure != idem_prime) record_failure(r, replay_val(c));
        }
    }
}

void check_grid_tilde_idempotent(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        for (const auto& c : grid_cuts(cfg, g, true)) {
            ++r.cases;
            CutIdeal once = rr_closed_form(c);
            if (rr_closed_form(once) != once) record_failure(r, replay_val(c));
        }
    }
}

void check_grid_hat_meet_ring(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        for (const auto& c : grid_cuts(cfg, g, true)) {
            ++r.cases;
            if (rr_closed_form(c) != cut_meet(rr_hat(c), unit_cut(g)))
                record_failure(r, replay_val(c));
        }
    }
}

void check_grid_endo_inclusion(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        for (const auto& c : grid_cuts(cfg, g, true)) {
            auto verdict = check_endo_inclusion(c);
            if (!verdict) continue;  // closure is the ring; statement is void
            ++r.cases;
            if (!*verdict) record_failure(r, replay_val(c));
        }
    }
}

void check_strongly_discrete_closed(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        bool all_discrete = true;
        for (int j = 1; j <= g.rank(); ++j)
            if (g.component(j) == Component::dense) all_discrete = false;
        if (!all_discrete) continue;
        for (const auto& c : grid_cuts(cfg, g, true)) {
            ++r.cases;
            if (rr_closed_form(c) != c) record_failure(r, replay_val(c));
        }
    }
}

void check_monotone(const GeneratorConfig& cfg, CheckResult& r) {
    bool all_expected_witnesses_found = true;
    std::string missing;
    for (const auto& g : cfg.valuation.groups) {
        bool expect_monotone = !has_nonmax_idempotent_prime(g);
        bool violation_found = false;
        std::string violation;

        auto consider = [&](const CutIdeal& small, const CutIdeal& big) {
            ++r.cases;
            if (cut_subset(rr_closed_form(small), rr_closed_form(big))) return;
            violation_found = true;
            if (violation.empty())
                violation = replay_val(small) + " inside " + replay_val(big);
            if (expect_monotone)
                record_failure(r, replay_val(small) + " inside " + replay_val(big));
        };

        auto grid = grid_cuts(cfg, g, true);
        for (const auto& a : grid)
            for (const auto& b : grid)
                if (a != b && cut_subset(a, b)) consider(a, b);
        for (int c = 0; c < cfg.cases; ++c) {
            CutIdeal a = gen_cut_ideal(cfg, g, 60000 + static_cast<std::uint64_t>(c) * 2, true);
            CutIdeal b = gen_cut_ideal(cfg, g, 60001 + static_cast<std::uint64_t>(c) * 2, true);
            if (cut_cmp(a, b) == std::strong_ordering::equal) continue;
            consider(cut_meet(a, b), cut_join(a, b));
        }

        if (!expect_monotone) {
            if (violation_found) {
                if (!r.witness.empty()) r.witness += "; ";
                r.witness += format_group(g) + ": " + violation;
            } else {
                all_expected_witnesses_found = false;
                missing = format_group(g);
            }
        }
    }
    if (!all_expected_witnesses_found)
        record_failure(r, "no monotonicity violation found on " + missing);
}

void check_star_axioms_suite(const GeneratorConfig& cfg, CheckResult& r) {
    int samples = std::max(1, std::min(cfg.cases, 200));
    for (const auto& g : cfg.valuation.groups) {
        ++r.cases;
        bool expect_pass = !has_nonmax_idempotent_prime(g);
        StarAxiomReport rep = check_star_axioms(g, samples, cfg.seed);
        if (rep.all_pass() != expect_pass) {
            record_failure(r, format_group(g) + ": star axioms " +
                                  (rep.all_pass() ? "hold" : "fail") + " unexpectedly");
            continue;
        }
        if (!expect_pass) {
            if (!rep.e2_witness) {
                record_failure(r, format_group(g) + ": expected a monotonicity witness");
            } else {
                if (!r.witness.empty()) r.witness += "; ";
                r.witness += format_group(g) + ": " + replay_val(rep.e2_witness->first) +
                             " inside " + replay_val(rep.e2_witness->second);
            }
            continue;
        }
        // where the closure is a star operation it agrees with the v-operation
        for (const auto& c : grid_cuts(cfg, g, false)) {
            ++r.cases;
            if (rr_hat(c) != v_closure(c)) record_failure(r, replay_val(c));
        }
    }
}

void check_tp_trace(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        auto verify = [&](const CutIdeal& c) {
            ++r.cases;
            CutIdeal t = trace(c);
            if (!(t == unit_cut(g) || is_prime(t))) record_failure(r, replay_val(c));
        };
        for (const auto& c : grid_cuts(cfg, g, false)) verify(c);
        for (int i = 0; i < cfg.cases; ++i)
            verify(gen_cut_ideal(cfg, g, 70000 + static_cast<std::uint64_t>(i), false));
    }
}

void check_power_trace(const GeneratorConfig& cfg, CheckResult& r) {
    // I^-n denotes (I^n)^-1; it differs from (I^-1)^n as soon as I is not
    // invertible, e.g. a non-idempotent prime.
    for (const auto& g : cfg.valuation.groups) {
        for (int i = 0; i < cfg.cases; ++i) {
            CutIdeal c = gen_cut_ideal(cfg, g, 80000 + static_cast<std::uint64_t>(i), false);
            CutIdeal t = trace(c);
            for (int n = 1; n <= 4; ++n) {
                ++r.cases;
                CutIdeal pn = cut_power(c, n);
                if (cut_multiply(pn, cut_inverse(pn)) != t) {
                    record_failure(r, replay_val(c) + " (n=" + std::to_string(n) + ")");
                    break;
                }
            }
        }
    }
}

void check_maximal_dichotomy(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        ++r.cases;
        CutIdeal m = maximal_cut(g);
        bool principal = is_principal_cut(m);
        bool idem = is_idempotent(m);
        bool top_discrete = g.component(g.rank()) == Component::discrete;
        if (!(principal != idem && principal == top_discrete))
            record_failure(r, format_group(g));
    }
}

void check_idempotent_implies_prime(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        const CutIdeal v = unit_cut(g);
        auto verify = [&](const CutIdeal& c) {
            if (c == v) return;  // the ring itself is trivially idempotent
            ++r.cases;
            if (is_idempotent(c) && !is_prime(c)) record_failure(r, replay_val(c));
        };
        for (const auto& c : grid_cuts(cfg, g, true)) verify(c);
        for (int i = 0; i < cfg.cases; ++i)
            verify(gen_cut_ideal(cfg, g, 90000 + static_cast<std::uint64_t>(i), true));
    }
}

void check_invertible_closed(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        for (int i = 0; i < cfg.cases; ++i) {
            CutIdeal c = gen_cut_ideal(cfg, g, 100000 + static_cast<std::uint64_t>(i), true);
            if (trace(c) != unit_cut(g)) continue;
            ++r.cases;
            if (rr_closed_form(c) != c) record_failure(r, replay_val(c));
        }
    }
}

void check_dense_shift_example(const GeneratorConfig&, CheckResult& r) {
    // Gamma = Q, I the shifted maximal ideal at value 1: the closure steps up
    // to the principal cut while I itself is integrally closed, so the
    // closure is not bounded by the integral closure for such ideals.
    r.cases = 1;
    ValueGroup q({Component::dense});
    CutIdeal i = CutIdeal::make(q, CutKind::gt, 1, {Rational(1)});
    CutIdeal expected = CutIdeal::make(q, CutKind::ge, 1, {Rational(1)});
    bool ok = rr_closed_form(i) == expected && trace(i) == maximal_cut(q) &&
              cut_cmp(i, expected) == std::strong_ordering::less;
    if (!ok)
        record_failure(r, replay_val(i));
    else
        r.witness = replay_val(i) + " closes to " + format_cut(expected);
}

void check_idempotent_prime_escape(const GeneratorConfig& cfg, CheckResult& r) {
    // Below an idempotent prime at a dense level j, the shifted prime gains
    // its boundary: closure(a P_j) = a V_{P_j} meet V strictly exceeds a P_j.
    for (const auto& g : cfg.valuation.groups) {
        for (int j = 1; j <= g.rank(); ++j) {
            if (g.component(j) != Component::dense) continue;
            ++r.cases;
            std::vector<Rational> rho(static_cast<std::size_t>(j), Rational(0));
            rho.back() = Rational(1);
            CutIdeal shifted = CutIdeal::make(g, CutKind::gt, j, rho);
            CutIdeal expected = CutIdeal::make(g, CutKind::ge, j, rho);
            if (!(rr_closed_form(shifted) == expected &&
                  cut_cmp(shifted, expected) == std::strong_ordering::less))
                record_failure(r, replay_val(shifted));
        }
    }
    if (r.failures == 0 && r.cases > 0) r.witness = "checked at every dense level";
}

void check_cut_calculus(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        Rng rng = Rng::stream(cfg.seed, fnv1a("cut-calculus") ^ fnv1a(format_group(g).c_str()));
        const long per_group = 5L * cfg.cases;
        for (long i = 0; i < per_group; ++i) {
            ++r.cases;
            CutIdeal a = random_cut(g, rng, cfg.valuation.rho_grid, false);
            CutIdeal b = random_cut(g, rng, cfg.valuation.rho_grid, false);
            CutIdeal prod = cut_multiply(a, b);
            CutIdeal quot = cut_colon(a, b);
            std::string pair_cex = replay_val(a) + " with " + replay_val(b);

            bool ok = true;
            for (int p = 0; p < 50 && ok; ++p) {
                LexVector x = sample_element_in(a, rng);
                LexVector y = sample_element_in(b, rng);
                ok = prod.contains(vec_add(x, y));
            }
            for (int p = 0; p < 50 && ok; ++p)
                ok = decompose_product(a, b, sample_element_in(prod, rng)).has_value();
            for (int p = 0; p < 50 && ok; ++p) {
                LexVector out = sample_element_out(prod, rng);
                LexVector x = sample_element_in(a, rng);
                ok = !b.contains(vec_sub(out, x));
            }
            for (int p = 0; p < 25 && ok; ++p) {
                LexVector x = sample_element_in(quot, rng);
                LexVector y = sample_element_in(b, rng);
                ok = a.contains(vec_add(x, y));
            }
            for (int p = 0; p < 25 && ok; ++p)
                ok = colon_violation_witness(a, b, sample_element_out(quot, rng)).has_value();

            if (!ok) record_failure(r, pair_cex);
        }
    }
}

void check_canonicalize_sampling(const GeneratorConfig& cfg, CheckResult& r) {
    for (const auto& g : cfg.valuation.groups) {
        Rng rng = Rng::stream(cfg.seed, fnv1a("canonicalize") ^ fnv1a(format_group(g).c_str()));
        for (int i = 0; i < cfg.cases / 2; ++i) {
            ++r.cases;
            RawCutData raw = random_raw_cut(g, rng, cfg.valuation.rho_grid);
            CutIdeal canon = CutIdeal::make(g, raw.kind, raw.m, raw.rho);
            CutIdeal canon2 =
                CutIdeal::make(g, canon.kind(), canon.prefix_len(), canon.rho());
            bool ok = canon2 == canon;
            for (int p = 0; p < 500 && ok; ++p) {
                LexVector e = rng.chance(1, 2) ? random_element(g, rng)
                              : rng.chance(1, 2) ? sample_element_in(canon, rng)
                                                 : sample_element_out(canon, rng);
                ok = CutIdeal::raw_contains(g, raw.kind, raw.m, raw.rho, e) ==
                     canon.contains(e);
            }
            if (!ok) record_failure(r, replay_val(canon) + " (raw form differs)");
        }
    }
}

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> checks = {
        {"poly/quartic-witness",
         "the quartic four-generator ideal gains x^2*y^2 in (J^2 : J) and its certified "
         "closure adds exactly that monomial",
         "witness", check_quartic_witness},
        {"poly/chain-ascending", "(I^{n+1} : I^n) increases with n and contains I",
         "property", check_chain_ascending},
        {"poly/sandwich",
         "I <= rr(I) <= ic(I) for two-variable ideals, on certified closures",
         "property", check_sandwich},
        {"poly/principal-closed", "invertible (principal) ideals are Ratliff-Rush closed",
         "property", check_principal_closed},
        {"poly/stable-implies-closed", "stable ideals are Ratliff-Rush closed", "property",
         check_stable_implies_closed},
        {"poly/closure-idempotent", "rr(rr(I)) = rr(I) on certified closures", "property",
         check_closure_idempotent},
        {"poly/high-powers",
         "some run of four consecutive powers I^k is closed with n <= 8, and I reduces "
         "its closure with exponent <= 8 (m-primary samples)",
         "property", check_high_powers},
        {"poly/reduction", "I is a reduction of rr(I)", "property", check_reduction},
        {"poly/oracle-agreement",
         "the stabilized chain equals the enumeration oracle on its degree box",
         "property", check_oracle_agreement},
        {"val/grid-closed-form-vs-chain",
         "closed-form closure equals the chain join with n_max=4 on the cut grid",
         "property", check_grid_closed_form_vs_chain},
        {"val/grid-unit-closure-iff-idempotent-prime",
         "rr(I) = V exactly for idempotent primes", "property", check_grid_unit_closure},
        {"val/grid-tilde-idempotent", "rr(rr(I)) = rr(I) on the cut grid", "property",
         check_grid_tilde_idempotent},
        {"val/grid-hat-meet-ring", "rr(I) = hat(I) meet V for integral cuts", "property",
         check_grid_hat_meet_ring},
        {"val/grid-endo-inclusion",
         "(I:I) lies inside (rr(I):rr(I)) whenever rr(I) is proper", "property",
         check_grid_endo_inclusion},
        {"val/strongly-discrete-closed",
         "over all-discrete groups every cut ideal is Ratliff-Rush closed", "property",
         check_strongly_discrete_closed},
        {"val/monotone-iff-no-nonmax-idempotent-prime",
         "closure preserves inclusions exactly when no nonmaximal prime is idempotent; "
         "a violating pair must surface otherwise",
         "expected-failure", check_monotone},
        {"val/star-axioms",
         "the generalized closure is a star operation exactly when no nonmaximal prime "
         "is idempotent, and then agrees with the v-operation",
         "expected-failure", check_star_axioms_suite},
        {"val/tp-trace", "I * I^-1 is the ring or a prime", "property", check_tp_trace},
        {"val/power-trace", "I^n * I^-n equals I * I^-1 for n <= 4", "property",
         check_power_trace},
        {"val/maximal-principal-xor-idempotent",
         "the maximal ideal is principal or idempotent, never both", "property",
         check_maximal_dichotomy},
        {"val/idempotent-implies-prime", "idempotent proper cut ideals are prime",
         "property", check_idempotent_implies_prime},
        {"val/invertible-closed", "cuts with unit trace are Ratliff-Rush closed",
         "property", check_invertible_closed},
        {"val/dense-shift-example",
         "over Gamma = Q the shifted maximal ideal at value 1 closes to the principal "
         "cut and its trace is the maximal ideal",
         "witness", check_dense_shift_example},
        {"val/idempotent-prime-escape",
         "below each dense level the shifted prime strictly gains its boundary under "
         "closure",
         "witness", check_idempotent_prime_escape},
        {"val/cut-calculus-sampling",
         "symbolic products and colons agree with the denotational membership predicate "
         "on boundary-biased probes",
         "property", check_cut_calculus},
        {"val/canonicalize-sampling",
         "canonicalization is idempotent and preserves membership", "property",
         check_canonicalize_sampling},
    };
    return checks;
}

}  // namespace

SuiteReport run_paper_suite(const GeneratorConfig& cfg) {
    cfg.validate();
    SuiteReport rep;
    rep.seed = cfg.seed;
    rep.cases = cfg.cases;
    for (const auto& g : cfg.valuation.groups) rep.groups.push_back(format_group(g));

    for (const auto& spec : registry()) {
        CheckResult r;
        r.name = spec.name;
        r.law = spec.law;
        r.kind = spec.kind;
        auto t0 = std::chrono::steady_clock::now();
        spec.run(cfg, r);
        auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        r.pass = r.failures == 0;
        rep.checks.push_back(std::move(r));
    }
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    return rep;
}

std::string report_to_text(const SuiteReport& rep) {
    std::ostringstream os;
    os << "closure verification suite: seed=" << rep.seed << " cases=" << rep.cases
       << " groups=";
    for (std::size_t i = 0; i < rep.groups.size(); ++i)
        os << (i ? "," : "") << rep.groups[i];
    os << "\n";
    for (const auto& c : rep.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        for (std::size_t pad = c.name.size(); pad < 46; ++pad) os << ' ';
        os << " cases=" << c.cases << " failures=" << c.failures << " (" << c.elapsed_ms
           << " ms)\n";
        if (!c.pass && !c.counterexample.empty())
            os << "     counterexample: " << c.counterexample << "\n";
        if (c.kind == "expected-failure" && !c.witness.empty())
            os << "     witness: " << c.witness << "\n";
    }
    os << (rep.pass ? "overall: PASS" : "overall: FAIL") << " (" << rep.checks.size()
       << " checks)\n";
    return os.str();
}

nlohmann::json report_to_json(const SuiteReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"law", c.law},
                          {"kind", c.kind},
                          {"cases", c.cases},
                          {"failures", c.failures},
                          {"counterexample", c.counterexample},
                          {"witness", c.witness},
                          {"pass", c.pass},
                          {"elapsed_ms", c.elapsed_ms}});
    }
    return {{"schema", "closure-suite-report/1"},
            {"seed", rep.seed},
            {"cases", rep.cases},
            {"groups", rep.groups},
            {"checks", checks},
            {"pass", rep.pass}};
}

nlohmann::json normalized_report_json(const SuiteReport& rep) {
    nlohmann::json j = report_to_json(rep);
    for (auto& c : j["checks"]) c["elapsed_ms"] = 0;
    return j;
}

}  // namespace rrc
