#include "ginv/generate.hpp"

#include "ginv/commutant.hpp"
#include "ginv/elimination.hpp"

namespace ginv {

namespace {

using QMatrix = Matrix<GaussianRational>;
using Quad = ClineQuadruple<GaussianRational>;

const std::vector<GaussianRational>& pool_of(const GenSpec& spec) {
    return spec.entry_pool.empty() ? default_entry_pool() : spec.entry_pool;
}

GaussianRational draw(SplitMix64& rng, const std::vector<GaussianRational>& pool) {
    return pool[rng.below(pool.size())];
}

GaussianRational draw_nonzero(SplitMix64& rng, const std::vector<GaussianRational>& pool) {
    std::vector<GaussianRational> nz;
    for (const auto& v : pool) {
        if (!v.is_zero()) nz.push_back(v);
    }
    if (nz.empty()) throw GenerationFailed("entry pool has no nonzero value");
    return nz[rng.below(nz.size())];
}

QMatrix draw_matrix(SplitMix64& rng, int n, const std::vector<GaussianRational>& pool) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = draw(rng, pool);
    return m;
}

std::vector<GaussianRational> draw_weights(SplitMix64& rng, int count,
                                           const std::vector<GaussianRational>& pool) {
    std::vector<GaussianRational> w(static_cast<size_t>(count));
    for (auto& v : w) v = draw(rng, pool);
    return w;
}

// One random nonzero entry at a random position.
QMatrix draw_sparse(SplitMix64& rng, int n, const std::vector<GaussianRational>& pool) {
    QMatrix m = QMatrix::zero(n);
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    m(i, j) = draw_nonzero(rng, pool);
    return m;
}

void require_sound(const Quad& q, const char* who) {
    if (!check_conditions(q).overall)
        throw GenerationFailed(std::string(who) + ": constructed instance fails its conditions");
}

// Basis of {X : aXa = 0}, via the n^2 x n^2 system
// (aXa)(i,j) = sum_{p,q} a(i,p) X(p,q) a(q,j) = 0.
std::vector<QMatrix> axa_zero_basis(const QMatrix& a) {
    const int n = a.dim();
    QMatrix sys(n * n, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int row = i * n + j;
            for (int p = 0; p < n; ++p) {
                for (int q = 0; q < n; ++q) {
                    sys(row, p * n + q) = a(i, p) * a(q, j);
                }
            }
        }
    }
    std::vector<QMatrix> basis;
    for (const auto& vec : nullspace_basis(sys, Tolerance{})) {
        QMatrix m(n, n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) m(p, q) = vec(p * n + q, 0);
        basis.push_back(std::move(m));
    }
    return basis;
}

// Weighted superdiagonal shifts with matched products: forcing
// d_i * b_{i+1} = a_i * c_{i+1} for every i makes db equal ac entrywise, so
// every product identity among ac and db holds. Draw d nonzero so b solves
// exactly.
Quad matched_shift_quad(SplitMix64& rng, int n, const std::vector<GaussianRational>& pool,
                        ConditionFamily family) {
    auto wa = draw_weights(rng, n - 1, pool);
    auto wc = draw_weights(rng, n - 1, pool);
    std::vector<GaussianRational> wd(static_cast<size_t>(n - 1));
    for (auto& v : wd) v = draw_nonzero(rng, pool);
    std::vector<GaussianRational> wb(static_cast<size_t>(n - 1));
    if (n >= 2) wb[0] = draw(rng, pool);
    for (int i = 0; i + 2 <= n - 1; ++i) {
        wb[static_cast<size_t>(i + 1)] = wa[static_cast<size_t>(i)] * wc[static_cast<size_t>(i + 1)] / wd[static_cast<size_t>(i)];
    }
    return Quad{QMatrix::weighted_shift(n, wa), QMatrix::weighted_shift(n, wb),
                QMatrix::weighted_shift(n, wc), QMatrix::weighted_shift(n, wd), family};
}

}  // namespace

const std::vector<GaussianRational>& default_entry_pool() {
    static const std::vector<GaussianRational> pool = {
        GaussianRational(-2), GaussianRational(-1), GaussianRational(Rational(-1, 2)),
        GaussianRational(0),  GaussianRational(Rational(1, 2)), GaussianRational(1),
        GaussianRational(2)};
    return pool;
}

ClineQuadruple<GaussianRational> gen_classical(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    const auto& pool = pool_of(spec);
    QMatrix a = draw_matrix(rng, spec.dim, pool);
    QMatrix b = draw_matrix(rng, spec.dim, pool);
    Quad q{a, b, b, a, ConditionFamily::Classical};
    require_sound(q, "gen_classical");
    return q;
}

ClineQuadruple<GaussianRational> gen_lian_zeng(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    const auto& pool = pool_of(spec);
    QMatrix a = draw_matrix(rng, spec.dim, pool);
    QMatrix b = draw_matrix(rng, spec.dim, pool);
    // c = b + n with ana = 0 keeps aba = aca exactly; if a is invertible the
    // solution space is {0} and the instance degenerates to classical.
    QMatrix n = QMatrix::zero(spec.dim);
    for (const auto& basis : axa_zero_basis(a)) {
        GaussianRational coeff = draw(rng, pool);
        if (!coeff.is_zero()) n = n + coeff * basis;
    }
    Quad q{a, b, b + n, a, ConditionFamily::LianZeng};
    require_sound(q, "gen_lian_zeng");
    return q;
}

ClineQuadruple<GaussianRational> gen_miller_zguitti(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    const auto& pool = pool_of(spec);
    const int n = spec.dim;
    Quad q;
    q.family = ConditionFamily::MillerZguitti;
    switch (rng.below(3)) {
        case 0: {
            q.a = draw_matrix(rng, n, pool);
            q.b = draw_matrix(rng, n, pool);
            q.c = q.b;
            q.d = q.a;
            break;
        }
        case 1: {
            Quad shifts = matched_shift_quad(rng, n, pool, ConditionFamily::MillerZguitti);
            q = shifts;
            break;
        }
        default: {
            bool found = false;
            for (int attempt = 0; attempt < spec.max_attempts && !found; ++attempt) {
                q.a = draw_sparse(rng, n, pool);
                q.b = draw_sparse(rng, n, pool);
                q.c = draw_sparse(rng, n, pool);
                q.d = draw_sparse(rng, n, pool);
                found = check_conditions(q).overall;
            }
            if (!found) throw GenerationFailed("gen_miller_zguitti: rejection budget exhausted");
            break;
        }
    }
    require_sound(q, "gen_miller_zguitti");
    if (!satisfies_family(q, ConditionFamily::RingFour))
        throw GenerationFailed("gen_miller_zguitti: instance escapes the four ring equations");
    return q;
}

ClineQuadruple<GaussianRational> gen_banach_weak(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    const auto& pool = pool_of(spec);
    const int n = spec.dim;
    Quad q;
    q.family = ConditionFamily::BanachWeak;
    switch (rng.below(3)) {
        case 0: {
            // Free-weight shifts: below dimension 5 every product of four
            // shifts vanishes, so both conditions hold with no coupling and
            // ac != db is common. From dimension 5 on the weights must be
            // matched.
            if (n <= 4) {
                q.a = QMatrix::weighted_shift(n, draw_weights(rng, n - 1, pool));
                q.b = QMatrix::weighted_shift(n, draw_weights(rng, n - 1, pool));
                q.c = QMatrix::weighted_shift(n, draw_weights(rng, n - 1, pool));
                q.d = QMatrix::weighted_shift(n, draw_weights(rng, n - 1, pool));
            } else {
                q = matched_shift_quad(rng, n, pool, ConditionFamily::BanachWeak);
            }
            break;
        }
        case 1: {
            // Solve db = ac for b against an invertible d.
            QMatrix d(0, 0);
            bool found = false;
            for (int attempt = 0; attempt < spec.max_attempts && !found; ++attempt) {
                d = draw_matrix(rng, n, pool);
                found = invertible(d, Tolerance{});
            }
            if (!found) throw GenerationFailed("gen_banach_weak: no invertible d in budget");
            q.a = draw_matrix(rng, n, pool);
            q.c = draw_matrix(rng, n, pool);
            q.d = d;
            q.b = inverse(d, Tolerance{}) * (q.a * q.c);
            break;
        }
        default: {
            bool found = false;
            for (int attempt = 0; attempt < spec.max_attempts && !found; ++attempt) {
                q.a = draw_sparse(rng, n, pool);
                q.b = draw_sparse(rng, n, pool);
                q.c = draw_sparse(rng, n, pool);
                q.d = draw_sparse(rng, n, pool);
                found = check_conditions(q).overall;
            }
            if (!found) throw GenerationFailed("gen_banach_weak: rejection budget exhausted");
            break;
        }
    }
    require_sound(q, "gen_banach_weak");
    return q;
}

ClineQuadruple<GaussianRational> gen_ring_four(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    GenSpec sub = spec;
    sub.seed = rng.next();
    Quad q;
    switch (rng.below(3)) {
        case 0: sub.family = ConditionFamily::Classical; q = gen_classical(sub); break;
        case 1: sub.family = ConditionFamily::LianZeng; q = gen_lian_zeng(sub); break;
        default: sub.family = ConditionFamily::MillerZguitti; q = gen_miller_zguitti(sub); break;
    }
    q.family = ConditionFamily::RingFour;
    require_sound(q, "gen_ring_four");
    return q;
}

ClineQuadruple<GaussianRational> generate(const GenSpec& spec) {
    if (spec.dim < 1) throw InvalidArgument("generation needs a positive dimension");
    switch (spec.family) {
        case ConditionFamily::Classical: return gen_classical(spec);
        case ConditionFamily::RingFour: return gen_ring_four(spec);
        case ConditionFamily::BanachWeak: return gen_banach_weak(spec);
        case ConditionFamily::LianZeng: return gen_lian_zeng(spec);
        case ConditionFamily::MillerZguitti: return gen_miller_zguitti(spec);
    }
    throw InvalidArgument("unknown condition family");
}

ClineQuadruple<GaussianRational> example_3_7() {
    QMatrix j = QMatrix::shift(4);
    QMatrix d = QMatrix::weighted_shift(
        4, {GaussianRational(2), GaussianRational(1), GaussianRational(1)});
    return Quad{j, j, j, d, ConditionFamily::BanachWeak};
}

}  // namespace ginv
