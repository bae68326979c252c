#include "ginv/suite.hpp"

#include <algorithm>
#include <optional>

#include "ginv/commutant.hpp"
#include "ginv/drazin.hpp"
#include "ginv/elimination.hpp"
#include "ginv/spectral.hpp"

namespace ginv {

namespace {

using QMatrix = Matrix<GaussianRational>;
using Quad = ClineQuadruple<GaussianRational>;

class Property {
public:
    explicit Property(std::string name) : name_(std::move(name)) {}

    void pass() { ++pass_; }
    void skip() { ++skip_; }
    void fail(const Json& id, const std::string& what) {
        ++fail_;
        if (failures_.size() < 3) {
            Json f = id;
            f["what"] = what;
            failures_.push_back(std::move(f));
        }
    }
    void check(const Json& id, bool condition, const char* what) {
        if (condition) {
            pass();
        } else {
            fail(id, what);
        }
    }
    void set_info(Json info) { info_ = std::move(info); }

    int failures() const { return fail_; }
    const std::string& name() const { return name_; }
    Json to_json() const {
        Json j{{"name", name_},
               {"pass", pass_},
               {"fail", fail_},
               {"skipped", skip_},
               {"failures", failures_}};
        if (!info_.is_null()) j["info"] = info_;
        return j;
    }

private:
    std::string name_;
    int pass_ = 0;
    int fail_ = 0;
    int skip_ = 0;
    Json failures_ = Json::array();
    Json info_;
};

template <typename Fn>
void guarded(Property& p, const Json& id, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        p.fail(id, e.what());
    }
}

struct Props {
    Property generator_soundness{"generator-soundness"};
    Property generator_determinism{"generator-determinism"};
    Property family_hierarchy{"family-hierarchy"};
    Property exact_inverse_roundtrip{"exact-inverse-roundtrip"};
    Property rank_submultiplicative{"rank-submultiplicative"};
    Property commutant_basis_exact{"commutant-basis-exact"};
    Property float_exact_rank_agreement{"float-exact-rank-agreement"};
    Property drazin_axioms{"drazin-axioms"};
    Property drazin_double_commutant{"drazin-double-commutant"};
    Property index_zero_iff_invertible{"index-zero-iff-invertible"};
    Property similarity_block_oracle{"similarity-block-oracle"};
    Property transfer_axioms{"transfer-axioms"};
    Property transfer_double_commutant{"transfer-double-commutant"};
    Property transfer_reverse_composition{"transfer-reverse-composition"};
    Property index_bounds{"index-bounds"};
    Property group_transfer{"group-transfer"};
    Property lian_zeng_candidates{"lian-zeng-candidates"};
    Property qnil_transfer{"qnil-transfer"};
    Property jacobson_identity{"jacobson-identity"};
    Property jacobson_equivalence{"jacobson-invertibility-equivalence"};
    Property pdrazin_collapse{"pdrazin-collapse"};
    Property coverage_banach_weak{"coverage-banach-weak-nondegenerate"};
    Property coverage_lian_zeng{"coverage-lian-zeng-nonclassical"};
    Property spectrum_nonzero_match{"spectrum-nonzero-match"};
    Property invertibility_lambda{"invertibility-transfer-lambda"};
    Property both_singular_at_eigenvalue{"both-singular-at-eigenvalue"};
    Property json_roundtrip{"json-roundtrip"};

    std::vector<const Property*> all() const {
        return {&generator_soundness,
                &generator_determinism,
                &family_hierarchy,
                &exact_inverse_roundtrip,
                &rank_submultiplicative,
                &commutant_basis_exact,
                &float_exact_rank_agreement,
                &drazin_axioms,
                &drazin_double_commutant,
                &index_zero_iff_invertible,
                &similarity_block_oracle,
                &transfer_axioms,
                &transfer_double_commutant,
                &transfer_reverse_composition,
                &index_bounds,
                &group_transfer,
                &lian_zeng_candidates,
                &qnil_transfer,
                &jacobson_identity,
                &jacobson_equivalence,
                &pdrazin_collapse,
                &coverage_banach_weak,
                &coverage_lian_zeng,
                &spectrum_nonzero_match,
                &invertibility_lambda,
                &both_singular_at_eigenvalue,
                &json_roundtrip};
    }
};

Json descriptor(const GenSpec& spec) {
    return Json{{"family", family_name(spec.family)}, {"dim", spec.dim}, {"seed", spec.seed}};
}

bool quads_equal(const Quad& x, const Quad& y) {
    return x.family == y.family && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool entries_dyadic_and_small(const QMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const GaussianRational& e = m(i, j);
            if (e.abs_approx() > 16.0) return false;
            if (!(GaussianRational::from_complex(e.to_complex()) == e)) return false;
        }
    }
    return true;
}

bool commutant_members_independent(const std::vector<QMatrix>& basis, int n) {
    if (basis.empty()) return true;
    QMatrix stack(static_cast<int>(basis.size()), n * n);
    for (size_t k = 0; k < basis.size(); ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stack(static_cast<int>(k), i * n + j) = basis[k](i, j);
    }
    return rank(stack, Tolerance{}) == static_cast<int>(basis.size());
}

// Count of lian-zeng instances where the printed-variant candidate
// b((ab)^D)^2 a also passed. Tracked as shared info on the property.
struct LianZengTally {
    int ac_pass = 0;
    int ab_pass = 0;
    int agree = 0;
};

void evaluate_instance(const SuiteInstance& inst, Props& P, LianZengTally& lz_tally) {
    const Quad& q = inst.quad;
    const Json id = descriptor(inst.spec);
    const int n = q.dim();
    const Tolerance tol{};

    guarded(P.generator_soundness, id,
            [&] { P.generator_soundness.check(id, check_conditions(q).overall, "conditions"); });
    guarded(P.generator_determinism, id, [&] {
        P.generator_determinism.check(id, quads_equal(generate(inst.spec), q), "regeneration");
    });

    guarded(P.family_hierarchy, id, [&] {
        switch (q.family) {
            case ConditionFamily::Classical:
                P.family_hierarchy.check(id, satisfies_family(q, ConditionFamily::RingFour),
                                         "classical implies ring-four");
                break;
            case ConditionFamily::RingFour:
                P.family_hierarchy.check(id, satisfies_family(q, ConditionFamily::BanachWeak),
                                         "ring-four implies banach-weak");
                break;
            case ConditionFamily::LianZeng:
                P.family_hierarchy.check(id, satisfies_family(q, ConditionFamily::RingFour),
                                         "lian-zeng implies ring-four");
                break;
            case ConditionFamily::MillerZguitti:
                P.family_hierarchy.check(id, satisfies_family(q, ConditionFamily::RingFour),
                                         "miller-zguitti implies ring-four");
                break;
            case ConditionFamily::BanachWeak: P.family_hierarchy.skip(); break;
        }
    });

    guarded(P.exact_inverse_roundtrip, id, [&] {
        std::optional<QMatrix> inv;
        try {
            inv = inverse(q.a, tol);
        } catch (const SingularError&) {
            P.exact_inverse_roundtrip.skip();
            return;
        }
        const QMatrix eye = QMatrix::identity(n);
        P.exact_inverse_roundtrip.check(id, *inv * q.a == eye && q.a * *inv == eye,
                                        "inverse roundtrip");
    });

    guarded(P.rank_submultiplicative, id, [&] {
        const int rab = rank(q.a * q.b, tol);
        P.rank_submultiplicative.check(id, rab <= std::min(rank(q.a, tol), rank(q.b, tol)),
                                       "rank(ab) <= min(rank a, rank b)");
    });

    guarded(P.commutant_basis_exact, id, [&] {
        if (n > 6) {
            P.commutant_basis_exact.skip();
            return;
        }
        const auto basis = commutant_basis(q.a);
        bool commutes = true;
        for (const auto& k : basis) commutes = commutes && k * q.a == q.a * k;
        P.commutant_basis_exact.check(id, commutes && commutant_members_independent(basis, n),
                                      "commutant basis commutes and is independent");
    });

    guarded(P.float_exact_rank_agreement, id, [&] {
        if (!entries_dyadic_and_small(q.a)) {
            P.float_exact_rank_agreement.skip();
            return;
        }
        P.float_exact_rank_agreement.check(id, rank(to_float(q.a), tol) == rank(q.a, tol),
                                           "float rank equals exact rank");
    });

    // Shared pipeline on the quadruple's products.
    const QMatrix ac = q.a * q.c;
    const QMatrix bd = q.b * q.d;
    std::optional<DrazinResult<GaussianRational>> acd;
    guarded(P.drazin_axioms, id, [&] {
        acd = drazin(ac, tol);
        bool ok = verify_drazin_axioms(ac, acd->inverse, acd->index, tol).overall;
        const QMatrix& p = acd->projector;
        ok = ok && p * p == p;
        ok = ok && acd->core + acd->nilpotent == ac;
        if (acd->index >= 1) {
            ok = ok && pow(acd->nilpotent, acd->index).is_zero() &&
                 !pow(acd->nilpotent, acd->index - 1).is_zero();
        } else {
            ok = ok && acd->nilpotent.is_zero();
        }
        P.drazin_axioms.check(id, ok, "drazin result invariants");
    });
    if (!acd) return;

    guarded(P.drazin_double_commutant, id, [&] {
        if (n > 6) {
            P.drazin_double_commutant.skip();
            return;
        }
        P.drazin_double_commutant.check(id, in_double_commutant(ac, acd->inverse),
                                        "a^D commutes with the commutant of a");
    });

    guarded(P.index_zero_iff_invertible, id, [&] {
        const bool inv = invertible(ac, tol);
        bool ok = (acd->index == 0) == inv;
        if (ok && inv && acd->index == 0) ok = acd->inverse == inverse(ac, tol);
        P.index_zero_iff_invertible.check(id, ok, "index 0 iff invertible, then a^D = a^-1");
    });

    std::optional<DrazinResult<GaussianRational>> e;
    guarded(P.transfer_axioms, id, [&] {
        e = transfer_gdrazin(q, *acd, tol);
        P.transfer_axioms.check(id, verify_drazin_axioms(bd, e->inverse, e->index, tol).overall,
                                "b((ac)^D)^2 d passes the axioms for bd");
    });
    if (!e) return;

    guarded(P.transfer_double_commutant, id, [&] {
        if (n > 4) {
            P.transfer_double_commutant.skip();
            return;
        }
        P.transfer_double_commutant.check(id, in_double_commutant(bd, e->inverse),
                                          "transferred inverse lies in comm^2(bd)");
    });

    guarded(P.transfer_reverse_composition, id, [&] {
        const QMatrix db = q.d * q.b;
        DrazinResult<GaussianRational> f;
        f.inverse = q.d * ((e->inverse * e->inverse) * q.b);
        f.index = drazin_index(db, tol);
        f.projector = db * f.inverse;
        f.core = db * f.projector;
        f.nilpotent = db - f.core;
        const DrazinResult<GaussianRational> g = transfer_gdrazin(swap_quadruple(q), f, tol);
        const QMatrix recovered = q.a * ((g.inverse * g.inverse) * q.c);
        P.transfer_reverse_composition.check(id, recovered == acd->inverse,
                                             "round trip recovers (ac)^D");
    });

    guarded(P.index_bounds, id, [&] {
        P.index_bounds.check(id, transfer_drazin_with_bound(q, *acd, tol).bound_holds,
                             "index(bd) within the allowed excess over index(ac)");
    });

    guarded(P.group_transfer, id, [&] {
        if (q.family != ConditionFamily::LianZeng || acd->index > 1) {
            P.group_transfer.skip();
            return;
        }
        transfer_group(q, tol);  // asserts internally, throws on any mismatch
        P.group_transfer.pass();
    });

    guarded(P.lian_zeng_candidates, id, [&] {
        if (q.family != ConditionFamily::LianZeng) {
            P.lian_zeng_candidates.skip();
            return;
        }
        const QMatrix ba = q.b * q.a;
        const int kba = drazin_index(ba, tol);
        const bool ac_ok = verify_drazin_axioms(ba, e->inverse, kba, tol).overall;
        const DrazinResult<GaussianRational> abd = drazin(q.a * q.b, tol);
        const QMatrix cand_ab = q.b * ((abd.inverse * abd.inverse) * q.a);
        const bool ab_ok = verify_drazin_axioms(ba, cand_ab, kba, tol).overall;
        if (ac_ok) ++lz_tally.ac_pass;
        if (ab_ok) ++lz_tally.ab_pass;
        if (cand_ab == e->inverse) ++lz_tally.agree;
        P.lian_zeng_candidates.check(id, ac_ok, "b((ac)^D)^2 a inverts ba");
    });

    guarded(P.qnil_transfer, id, [&] {
        P.qnil_transfer.check(id, qnil_transfer_check(q), "ac nilpotent iff bd nilpotent");
    });

    const QMatrix eye = QMatrix::identity(n);
    guarded(P.jacobson_identity, id, [&] {
        if (!satisfies_family(q, ConditionFamily::RingFour, tol) || !invertible(eye - ac, tol)) {
            P.jacobson_identity.skip();
            return;
        }
        const QMatrix x = jacobson_inverse(q, tol);
        const QMatrix m = eye - bd;
        P.jacobson_identity.check(id, x * m == eye && m * x == eye, "X inverts I - bd");
    });

    guarded(P.jacobson_equivalence, id, [&] {
        P.jacobson_equivalence.check(
            id, invertible(eye - ac, tol) == invertible(eye - bd, tol),
            "I - ac invertible iff I - bd invertible");
    });

    guarded(P.pdrazin_collapse, id, [&] {
        if (q.family != ConditionFamily::BanachWeak) {
            P.pdrazin_collapse.skip();
            return;
        }
        P.pdrazin_collapse.check(id, pdrazin_collapse_check(q, tol), "collapse verdict");
    });

    // Float-backend spectral checks.
    const ClineQuadruple<Complex> fq = to_float(q);
    guarded(P.spectrum_nonzero_match, id, [&] {
        if (n > 6) {
            P.spectrum_nonzero_match.skip();
            return;
        }
        P.spectrum_nonzero_match.check(id, nonzero_spectrum_equal(fq, tol),
                                       "nonzero spectra of ac and bd agree");
    });

    std::vector<Complex> ac_spectrum;
    guarded(P.invertibility_lambda, id, [&] {
        if (n > kEigenMaxDim) {
            P.invertibility_lambda.skip();
            return;
        }
        ac_spectrum = eigenvalues(ac);
        bool all_hold = true;
        for (const Complex lambda : lambda_samples(ac_spectrum)) {
            all_hold = all_hold && invertibility_transfer(fq, lambda, tol);
        }
        P.invertibility_lambda.check(id, all_hold, "transfer verdict at every sampled lambda");
    });

    guarded(P.both_singular_at_eigenvalue, id, [&] {
        std::vector<Complex> nonzero;
        for (const Complex ev : ac_spectrum) {
            if (std::abs(ev) >= 1e-6) nonzero.push_back(ev);
        }
        if (nonzero.empty()) {
            P.both_singular_at_eigenvalue.skip();
            return;
        }
        const Matrix<Complex> feye = Matrix<Complex>::identity(n);
        const Matrix<Complex> fac = fq.a * fq.c;
        const Matrix<Complex> fbd = fq.b * fq.d;
        bool ok = true;
        for (const Complex ev : nonzero) {
            const Matrix<Complex> li = ev * feye;
            ok = ok && !invertible(li - fac, tol) && !invertible(li - fbd, tol);
        }
        P.both_singular_at_eigenvalue.check(id, ok, "both resolvents singular at eigenvalues");
    });

    guarded(P.json_roundtrip, id, [&] {
        const AnyQuadruple back = quadruple_from_json(parse_text(dump(to_json(q))));
        const auto* again = std::get_if<Quad>(&back);
        P.json_roundtrip.check(id, again != nullptr && quads_equal(*again, q),
                               "serialize/parse identity");
    });
}

// Builds a = T diag(S, N) T^{-1} with S invertible and N strictly upper
// triangular, and checks the recursion output against T diag(S^{-1}, 0)
// T^{-1}, which is the Drazin inverse by the core-nilpotent block form.
void similarity_oracle_case(int dim, std::uint64_t seed, Props& P) {
    const Json id{{"family", "similarity-oracle"}, {"dim", dim}, {"seed", seed}};
    guarded(P.similarity_block_oracle, id, [&] {
        SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(dim));
        const auto& pool = default_entry_pool();
        const int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(dim) + 1));

        auto draw_matrix = [&](int rows) {
            QMatrix m(rows, rows);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < rows; ++j) m(i, j) = pool[rng.below(pool.size())];
            return m;
        };
        auto draw_invertible = [&](int rows) {
            for (int attempt = 0; attempt < 500; ++attempt) {
                QMatrix m = draw_matrix(rows);
                if (invertible(m, Tolerance{})) return m;
            }
            throw GenerationFailed("similarity oracle: no invertible draw");
        };

        QMatrix mid = QMatrix::zero(dim);
        QMatrix mid_inv = QMatrix::zero(dim);
        if (r > 0) {
            const QMatrix s = draw_invertible(r);
            const QMatrix s_inv = inverse(s, Tolerance{});
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    mid(i, j) = s(i, j);
                    mid_inv(i, j) = s_inv(i, j);
                }
        }
        for (int i = r; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) mid(i, j) = pool[rng.below(pool.size())];

        const QMatrix t = draw_invertible(dim);
        const QMatrix t_inv = inverse(t, Tolerance{});
        const QMatrix a = t * (mid * t_inv);
        const QMatrix expected = t * (mid_inv * t_inv);
        P.similarity_block_oracle.check(id, drazin(a).inverse == expected,
                                        "recursion matches the block oracle");
    });
}

}  // namespace

SuiteCorpus build_corpus(const SuiteOptions& opt) {
    static const ConditionFamily families[] = {
        ConditionFamily::Classical, ConditionFamily::RingFour, ConditionFamily::BanachWeak,
        ConditionFamily::LianZeng, ConditionFamily::MillerZguitti};
    SuiteCorpus corpus;
    for (const ConditionFamily family : families) {
        for (const int dim : opt.dims) {
            for (int s = 1; s <= opt.seed_count; ++s) {
                GenSpec spec;
                spec.family = family;
                spec.dim = dim;
                spec.seed = static_cast<std::uint64_t>(s);
                try {
                    corpus.instances.push_back({spec, generate(spec)});
                } catch (const std::exception&) {
                    corpus.failed.push_back(spec);
                }
            }
        }
    }
    return corpus;
}

SuiteOutcome run_suite_on(const SuiteCorpus& corpus, const SuiteOptions& opt) {
    Props P;
    for (const GenSpec& spec : corpus.failed) {
        P.generator_soundness.fail(descriptor(spec), "generation threw");
    }

    LianZengTally lz_tally;
    for (const SuiteInstance& inst : corpus.instances) evaluate_instance(inst, P, lz_tally);
    P.lian_zeng_candidates.set_info(Json{{"ac_candidate_pass", lz_tally.ac_pass},
                                         {"ab_candidate_pass", lz_tally.ab_pass},
                                         {"candidates_agree", lz_tally.agree}});

    for (const int dim : opt.dims) {
        for (int s = 1; s <= opt.seed_count; ++s) {
            similarity_oracle_case(dim, static_cast<std::uint64_t>(s), P);
        }
    }

    // Corpus-wide coverage: only meaningful at the documented scale.
    const bool has_dim4 = std::find(opt.dims.begin(), opt.dims.end(), 4) != opt.dims.end();
    const bool has_dim3 = std::find(opt.dims.begin(), opt.dims.end(), 3) != opt.dims.end();
    const Json corpus_id{{"family", "corpus"}, {"dim", 0}, {"seed", 0}};
    if (has_dim4 && opt.seed_count >= 200) {
        bool found = false;
        for (const SuiteInstance& inst : corpus.instances) {
            if (inst.spec.family == ConditionFamily::BanachWeak && inst.spec.dim == 4 &&
                !(inst.quad.a * inst.quad.c == inst.quad.d * inst.quad.b)) {
                found = true;
                break;
            }
        }
        P.coverage_banach_weak.check(corpus_id, found, "no banach-weak instance with ac != db");
    } else {
        P.coverage_banach_weak.skip();
    }
    if (has_dim3 && opt.seed_count >= 200) {
        bool found = false;
        for (const SuiteInstance& inst : corpus.instances) {
            if (inst.spec.family == ConditionFamily::LianZeng && inst.spec.dim == 3 &&
                !(inst.quad.c == inst.quad.b)) {
                found = true;
                break;
            }
        }
        P.coverage_lian_zeng.check(corpus_id, found, "no lian-zeng instance with c != b");
    } else {
        P.coverage_lian_zeng.skip();
    }

    int failures_total = 0;
    Json properties = Json::array();
    std::vector<const Property*> ordered = P.all();
    std::sort(ordered.begin(), ordered.end(),
              [](const Property* x, const Property* y) { return x->name() < y->name(); });
    for (const Property* prop : ordered) {
        failures_total += prop->failures();
        properties.push_back(prop->to_json());
    }

    SuiteOutcome out;
    out.all_pass = failures_total == 0;
    out.report = Json{{"config", Json{{"seeds", opt.seed_count}, {"dims", opt.dims}}},
                      {"corpus", Json{{"instances", corpus.instances.size()},
                                      {"generation_failures", corpus.failed.size()}}},
                      {"properties", std::move(properties)},
                      {"failures_total", failures_total},
                      {"overall", out.all_pass}};
    return out;
}

SuiteOutcome run_suite(const SuiteOptions& opt) {
    return run_suite_on(build_corpus(opt), opt);
}

}  // namespace ginv
