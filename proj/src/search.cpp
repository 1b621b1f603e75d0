#include "dp2/search.hpp"

#include <algorithm>
#include <cmath>

namespace dp2 {

namespace {

// monomials of degree d in a canonical order (lex descending on exponents)
std::vector<TernaryForm::Exponents> degree_monomials(int d) {
    std::vector<TernaryForm::Exponents> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
    return out;
}

}  // namespace

LinearSystem linear_system(FieldPtr F, int d, const PlanePoint& Q) {
    if (d < 2 || d > 6) throw InvalidMarkedCurve("degree must lie in [2, 6]");
    LinearSystem out;
    out.field = F;
    out.d = d;
    out.conditions = (d - 1) * d / 2;

    MatFq Minv = centering_matrix(Q).inverse();
    std::vector<TernaryForm::Exponents> cols = degree_monomials(d);

    // rows: centered monomials x^a y^b z^c with a + b <= d - 2
    std::vector<TernaryForm::Exponents> rows;
    for (const auto& e : cols)
        if (e[0] + e[1] <= d - 2) rows.push_back(e);

    MatFq cond(F, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        TernaryForm centered =
            TernaryForm::monomial(F->one(), cols[j]).substitute_linear(Minv);
        for (size_t i = 0; i < rows.size(); ++i)
            cond.at(static_cast<int>(i), static_cast<int>(j)) = centered.coeff(rows[i]);
    }
    out.verified_rank = cond.rank();

    for (const auto& v : cond.kernel_basis()) {
        TernaryForm h(F, d);
        for (size_t j = 0; j < cols.size(); ++j)
            if (!v[j].is_zero()) h.set_coeff(cols[j], v[j]);
        out.basis.push_back(std::move(h));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

namespace {

// contact analysis on the centered data, cheap enough for the inner loop
struct FastVerdict {
    bool even = false;
    int odd_count = 0;
};

FastVerdict fast_contact(const BinaryForm& H, const BinaryForm& A) {
    FastVerdict out;
    BinarySquarefreeDecomposition sfd = squarefree_decomposition(H);
    bool off_even = true;
    int above_total = 0;
    for (const auto& [S, m] : sfd.factors) {
        if (m % 2 != 0) out.odd_count += S.degree();
        BinaryForm above = gcd(S, A);
        int above_deg = above.degree() == 0 ? 0 : above.degree();
        above_total += m * above_deg;
        if (m % 2 != 0 && above_deg < S.degree()) off_even = false;
    }
    out.even = off_even && above_total % 2 == 0;
    return out;
}

std::vector<int64_t> canonical_key(const TernaryForm& h) {
    std::vector<int64_t> key;
    for (const auto& [e, c] : h.terms()) {
        key.push_back(e[0]);
        key.push_back(e[1]);
        key.push_back(e[2]);
        key.push_back(c.lex_index());
    }
    return key;
}

}  // namespace

SearchResult search(const DelPezzo2& X, const PlanePoint& Q, int d,
                    const SearchOptions& opts) {
    FieldPtr F = X.field();
    if (!F->same_arithmetic(Q.field()))
        throw FieldMismatch("surface and point over different fields");

    SearchResult out;
    out.system = linear_system(F, d, Q);
    const int dim = out.system.dimension;
    const int64_t q = F->q();

    double total_log = dim * std::log2(static_cast<double>(q));
    if (total_log > 62 ||
        (static_cast<int64_t>(std::pow(static_cast<double>(q), dim)) - 1) / (q - 1) >
            opts.max_candidates)
        throw SearchSpaceTooLarge("projective candidate count exceeds the cap");

    MatFq M = centering_matrix(Q);
    TernaryForm branch_c = X.branch().substitute_linear(M.inverse());
    bool q_on_b = X.branch().evaluate(Q.x(), Q.y(), Q.z()).is_zero();

    // centered parts of each basis element
    std::vector<BinaryForm> As, Bs;
    for (const auto& b : out.system.basis) {
        TernaryForm bc = b.substitute_linear(M.inverse());
        std::vector<BinaryForm> by_z = bc.collect(2);
        As.push_back(by_z[1]);  // coefficient of z: the a_{d-1} part
        Bs.push_back(by_z[0]);  // z-free part: the a_d part
    }

    BinaryForm bu = BinaryForm::u(F), bv = BinaryForm::v(F);
    std::vector<FieldElement> lambda(static_cast<size_t>(dim), F->zero());

    // projective representatives: leading index with coefficient 1
    for (int lead = 0; lead < dim; ++lead) {
        int free = dim - 1 - lead;
        int64_t combos = 1;
        for (int i = 0; i < free; ++i) combos *= q;
        for (int64_t n = 0; n < combos; ++n) {
            out.stats.candidates += 1;
            for (int i = 0; i < lead; ++i) lambda[static_cast<size_t>(i)] = F->zero();
            lambda[static_cast<size_t>(lead)] = F->one();
            int64_t rest = n;
            for (int i = lead + 1; i < dim; ++i) {
                lambda[static_cast<size_t>(i)] = F->element_at(rest % q);
                rest /= q;
            }

            BinaryForm A = BinaryForm::zero(F), B = BinaryForm::zero(F);
            for (int i = lead; i < dim; ++i) {
                const FieldElement& l = lambda[static_cast<size_t>(i)];
                if (l.is_zero()) continue;
                BinaryForm ta = As[static_cast<size_t>(i)].scale(l);
                BinaryForm tb = Bs[static_cast<size_t>(i)].scale(l);
                if (!ta.is_zero()) A = A.is_zero() ? ta : A + ta;
                if (!tb.is_zero()) B = B.is_zero() ? tb : B + tb;
            }

            if (A.is_zero()) {
                out.stats.rejected_multiplicity += 1;
                continue;
            }
            if (!check_integral(A, B)) {
                out.stats.rejected_integral += 1;
                continue;
            }
            if (q_on_b) {
                bool ordinary = true;
                for (const auto& [s, m] : squarefree_decomposition(A).factors)
                    if (m > 1) ordinary = false;
                if (!ordinary) {
                    out.stats.rejected_ordinary += 1;
                    continue;
                }
            }

            // centered pullback: H = branch_c(u A, v A, -B)
            BinaryForm H = compose(branch_c, bu * A, bv * A, -B);
            if (H.is_zero()) {
                out.stats.rejected_contact += 1;  // curve inside the branch locus
                continue;
            }
            FastVerdict verdict = fast_contact(H, A);
            if (!verdict.even) {
                out.stats.rejected_contact += 1;
                continue;
            }
            if (q_on_b && !(d == 3 || d == 4)) {
                out.stats.rejected_classification += 1;
                continue;
            }
            if (q_on_b && verdict.odd_count != 2) {
                out.stats.rejected_classification += 1;
                continue;
            }

            // survivor: rebuild through the public path and re-verify
            TernaryForm h(F, d);
            for (int i = lead; i < dim; ++i) {
                const FieldElement& l = lambda[static_cast<size_t>(i)];
                if (l.is_zero()) continue;
                h = h + out.system.basis[static_cast<size_t>(i)].scale(l);
            }
            try {
                MarkedCurve curve(h, Q);
                Parametrization theta(curve);
                ContactProfile profile = pullback_branch(X, theta);
                CaseClassification cls = classify(X, curve, profile);
                if (cls.kind == CaseClassification::Kind::NotApplicable) {
                    out.stats.rejected_classification += 1;
                    continue;
                }
                SearchHit hit{h,       std::move(curve), std::move(theta),
                              profile, cls,              std::nullopt,
                              std::nullopt};
                if (opts.lift) {
                    if (cls.kind == CaseClassification::Kind::ConicCase) {
                        hit.map = lift_conic(X, hit.theta, profile);
                    } else {
                        SplitLift lifted = lift_split(X, hit.theta, profile);
                        hit.map = lifted.map;
                        hit.split_square_class = lifted.square_class_is_square;
                    }
                }
                out.hits.push_back(std::move(hit));
            } catch (const InvalidMarkedCurve&) {
                out.stats.rejected_validation += 1;
            }
        }
    }

    std::sort(out.hits.begin(), out.hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return canonical_key(a.h) < canonical_key(b.h);
    });
    return out;
}

}  // namespace dp2
