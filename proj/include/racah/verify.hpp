#pragma once

// Suite drivers: each returns a list of RelationReports for one family of
// identities at one parameter pack. These back both the CLI verify commands
// and the acceptance run.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "bivariate.hpp"
#include "gridop.hpp"
#include "rational.hpp"
#include "univariate.hpp"

namespace racah {

// ---- univariate -----------------------------------------------------------

inline std::vector<Q> racah1_table_row(long n, const RacahParams1& p) {
    std::vector<Q> v;
    for (long x = 0; x <= p.N; ++x) v.push_back(racah1_eval(n, Q(x), p));
    return v;
}

// Eigenvalue identity plus simplicity of the spectrum.
inline std::vector<RelationReport> verify_eigen1(const SU11Weights& w, long N) {
    RacahParams1 p = params1_from_nu(w, N);
    Grid g = Grid::segment(static_cast<int>(N));
    Matrix L = materialize(lambda1_stencil(p), g);
    std::vector<RelationReport> out;
    bool ok = true;
    std::string witness;
    for (long n = 0; n <= N; ++n) {
        std::vector<Q> v = racah1_table_row(n, p);
        std::vector<Q> lv = L.apply(v);
        Q ev = lambda1_eigenvalue(n, p);
        for (long x = 0; x <= N; ++x)
            if (lv[static_cast<size_t>(x)] != ev * v[static_cast<size_t>(x)]) {
                ok = false;
                if (witness.empty())
                    witness = "mismatch at n=" + std::to_string(n) +
                              " x=" + std::to_string(x);
            }
    }
    RelationReport r;
    r.relationId = "eigen1/Lambda-eigenvalue";
    r.printedFormHolds = ok ? Verdict::Holds : Verdict::Fails;
    r.residualWitness = witness;
    out.push_back(r);

    bool simple = true;
    for (long n = 0; n <= N; ++n)
        for (long m = n + 1; m <= N; ++m)
            if (lambda1_eigenvalue(n, p) == lambda1_eigenvalue(m, p)) simple = false;
    RelationReport rs;
    rs.relationId = "eigen1/spectrum-simple";
    rs.printedFormHolds = simple ? Verdict::Holds : Verdict::Fails;
    out.push_back(rs);
    return out;
}

// Orthogonality against the split of the squared gauge factor. The printed
// product reading (sigma = nblock * Nblock, raw polynomial values) fails; the
// working reading takes sigma as the reciprocal of the printed n- and N-blocks
// and normalizes each row at x = 0.
inline std::vector<RelationReport> verify_orthogonality1(const SU11Weights& w,
                                                         long N) {
    RacahParams1 p = params1_from_nu(w, N);
    std::vector<RelationReport> out;

    std::vector<std::vector<Q>> rows;  // normalized rows Rhat_n
    std::vector<std::vector<Q>> raw;
    for (long n = 0; n <= N; ++n) {
        raw.push_back(racah1_table_row(n, p));
        Q r0 = raw.back()[0];
        if (r0 == 0) throw PoleError("r_n(0) vanishes");
        std::vector<Q> nr;
        for (const Q& v : raw.back()) nr.push_back(v / r0);
        rows.push_back(nr);
    }
    GaugeSplit split = gauge_split(w, N);

    bool corrected = true, printed = true;
    std::string witness;
    for (long n = 0; n <= N; ++n)
        for (long m = n; m <= N; ++m) {
            Q sC = 0, sP = 0;
            for (long x = 0; x <= N; ++x) {
                sC += split.omega[static_cast<size_t>(x)] *
                      rows[static_cast<size_t>(n)][static_cast<size_t>(x)] *
                      rows[static_cast<size_t>(m)][static_cast<size_t>(x)];
                sP += split.omega[static_cast<size_t>(x)] *
                      raw[static_cast<size_t>(n)][static_cast<size_t>(x)] *
                      raw[static_cast<size_t>(m)][static_cast<size_t>(x)];
            }
            Q wantC = n == m ? 1 / split.sigma[static_cast<size_t>(n)] : Q(0);
            Q wantP = n == m ? 1 / (gauge_nblock(n, w, N) * gauge_Nblock(w, N))
                             : Q(0);
            if (sC != wantC) {
                corrected = false;
                if (witness.empty())
                    witness = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                              ": got " + to_string(sC) + ", want " + to_string(wantC);
            }
            if (sP != wantP) printed = false;
        }
    RelationReport r;
    r.relationId = "orth1/weighted-gram";
    r.printedFormHolds = printed ? Verdict::Holds : Verdict::Fails;
    r.correctedFormHolds = corrected ? Verdict::Holds : Verdict::Fails;
    r.correctionNote =
        "printed n- and N-blocks read as reciprocal diagonal norms "
        "(sigma_n = 1/(nblock*Nblock)) with rows normalized at x=0";
    r.residualWitness = witness;
    out.push_back(r);

    // The origin value of the printed product is the N-block, not 1.
    RelationReport g0;
    g0.relationId = "orth1/G(0,0)^2";
    Q v = gauge_squared(0, 0, w, N);
    g0.printedFormHolds = v == 1 ? Verdict::Holds : Verdict::Fails;
    g0.correctedFormHolds = v == gauge_Nblock(w, N) ? Verdict::Holds : Verdict::Fails;
    g0.correctionNote = "printed product at the origin equals the N-only block";
    if (v != 1) g0.residualWitness = "G(0,0)^2 = " + to_string(v);
    out.push_back(g0);

    // Cross-check against the generic weight solver.
    {
        Grid g = Grid::segment(static_cast<int>(N));
        Matrix V(g.size());
        for (int n = 0; n < g.size(); ++n)
            for (int x = 0; x < g.size(); ++x)
                V.at(n, x) = rows[static_cast<size_t>(n)][static_cast<size_t>(x)];
        WeightSolution sol = solve_weight(V);
        bool match = true;
        for (long x = 0; x <= N; ++x)
            if (sol.omega[static_cast<size_t>(x)] != split.omega[static_cast<size_t>(x)])
                match = false;
        for (long n = 0; n <= N; ++n)
            if (sol.sigma[static_cast<size_t>(n)] != split.sigma[static_cast<size_t>(n)])
                match = false;
        RelationReport rc;
        rc.relationId = "orth1/solver-agreement";
        rc.printedFormHolds = match ? Verdict::Holds : Verdict::Fails;
        out.push_back(rc);
    }
    return out;
}

// ---- bivariate tables -----------------------------------------------------

// Value table: rows indexed by the degree grid, columns by the point grid.
inline Matrix racah2_table(const RacahParams2& p, const Grid& degrees,
                           const Grid& points) {
    Matrix V(degrees.size());
    for (int d = 0; d < degrees.size(); ++d) {
        auto dd = degrees.pts[static_cast<size_t>(d)];
        for (int i = 0; i < points.size(); ++i) {
            auto pt = points.pts[static_cast<size_t>(i)];
            V.at(d, i) = racah2_eval(dd[0], dd[1], Q(pt[0]), Q(pt[1]), p);
        }
    }
    return V;
}

// Eigenvalue identities for the two commuting operators on the full table.
// The first operator's printed eigenvalue -n1(n1+b2-b0-1) holds; the second
// one's printed -(n1+n2)(n1+n2+b2-b0-1) needs b3 in place of b2.
inline std::vector<RelationReport> verify_eigen2(const SU11Weights& w, long N) {
    RacahParams2 p = params2_from_nu(w, N);
    Grid deg = Grid::degrees(static_cast<int>(N));
    Grid pts = Grid::triangle(static_cast<int>(N));
    Matrix V = racah2_table(p, deg, pts);
    Matrix A1 = materialize(lambda1x_stencil(p), pts);
    Matrix A2 = materialize(lambda2x_stencil(p), pts);

    std::vector<RelationReport> out;
    bool ok1 = true, ok2c = true, ok2p = true;
    std::string w1, w2;
    for (int d = 0; d < deg.size(); ++d) {
        auto dd = deg.pts[static_cast<size_t>(d)];
        std::vector<Q> v(static_cast<size_t>(pts.size()));
        for (int i = 0; i < pts.size(); ++i) v[static_cast<size_t>(i)] = V.at(d, i);
        std::vector<Q> a1 = A1.apply(v), a2 = A2.apply(v);
        Q ev1 = lambda1x_eigenvalue(dd[0], p);
        Q ev2 = lambda2x_eigenvalue(dd[0], dd[1], p);
        // script-L eigenvalues: Lambda = -scriptL + const, so
        // scriptL v = (const - Lambda) v.
        Q m = Q(dd[0] + dd[1]);
        Q ev2printed = -m * (m + p.b2 - p.b0 - 1);  // as printed
        Q ev2beta3 = -m * (m + p.b3 - p.b0 - 1);
        for (int i = 0; i < pts.size(); ++i) {
            if (a1[static_cast<size_t>(i)] != ev1 * v[static_cast<size_t>(i)]) {
                ok1 = false;
                if (w1.empty())
                    w1 = "degree (" + std::to_string(dd[0]) + "," +
                         std::to_string(dd[1]) + ")";
            }
            Q a2v = a2[static_cast<size_t>(i)];
            // Lambda2 = -scriptL2 + c with c = ((b3-b0)/2)((b3-b0)/2-1):
            Q c = ((p.b3 - p.b0) / 2) * ((p.b3 - p.b0) / 2 - 1);
            Q sl2 = (c * v[static_cast<size_t>(i)]) - a2v;  // scriptL2 v
            if (sl2 != ev2printed * v[static_cast<size_t>(i)]) ok2p = false;
            if (sl2 != ev2beta3 * v[static_cast<size_t>(i)]) ok2c = false;
            if (a2v != ev2 * v[static_cast<size_t>(i)]) {
                ok2c = false;
                if (w2.empty())
                    w2 = "degree (" + std::to_string(dd[0]) + "," +
                         std::to_string(dd[1]) + ")";
            }
        }
    }
    RelationReport r1;
    r1.relationId = "eigen2/operator1";
    r1.printedFormHolds = ok1 ? Verdict::Holds : Verdict::Fails;
    r1.residualWitness = w1;
    out.push_back(r1);

    RelationReport r2;
    r2.relationId = "eigen2/operator2";
    r2.printedFormHolds = ok2p ? Verdict::Holds : Verdict::Fails;
    r2.correctedFormHolds = ok2c ? Verdict::Holds : Verdict::Fails;
    r2.correctionNote =
        "printed eigenvalue -(n1+n2)(n1+n2+b2-b0-1) read with b3 in place of "
        "b2, matching kappa(n1+n2,(b3-b0)/2) for the shifted operator";
    r2.residualWitness = w2;
    out.push_back(r2);

    // joint spectrum separates the degree pairs
    bool sep = true;
    for (int a = 0; a < deg.size(); ++a)
        for (int b = a + 1; b < deg.size(); ++b) {
            auto da = deg.pts[static_cast<size_t>(a)], db = deg.pts[static_cast<size_t>(b)];
            if (lambda1x_eigenvalue(da[0], p) == lambda1x_eigenvalue(db[0], p) &&
                lambda2x_eigenvalue(da[0], da[1], p) ==
                    lambda2x_eigenvalue(db[0], db[1], p))
                sep = false;
        }
    RelationReport rs;
    rs.relationId = "eigen2/joint-spectrum-separates";
    rs.printedFormHolds = sep ? Verdict::Holds : Verdict::Fails;
    out.push_back(rs);
    return out;
}

// Commutation of the operator pair, and of Omega1 with the second operator.
// The literal Omega1 (printed backward coefficient and constant/4) is
// adjudicated: its backward coefficient does not vanish at x2 = x1, so the
// stencil is not even boundary-closed.
inline std::vector<RelationReport> verify_commutation(const SU11Weights& w,
                                                      long N) {
    RacahParams2 p = params2_from_nu(w, N);
    Grid pts = Grid::triangle(static_cast<int>(N));
    Matrix A1 = materialize(lambda1x_stencil(p), pts);
    Matrix A2 = materialize(lambda2x_stencil(p), pts);
    std::vector<RelationReport> out;
    out.push_back(
        report_plain("commute/[Lambda1,Lambda2]", is_zero(commutator(A1, A2))));

    RelationReport ro;
    ro.relationId = "commute/[Omega1,Lambda2]";
    ro.correctionNote =
        "backward coefficient factor (x2+x1+b2) read as (x2+x1+b1) and the "
        "additive constant (nu3+nu4)(nu3+nu4-1)/4 read without the /4";
    try {
        Matrix Op = materialize(omega1_stencil(p, w, /*literal=*/true), pts);
        ro.printedFormHolds =
            is_zero(commutator(Op, A2)).zero ? Verdict::Holds : Verdict::Fails;
        if (ro.printedFormHolds == Verdict::Fails)
            ro.residualWitness = is_zero(commutator(Op, A2)).describe();
    } catch (const ClosureError& e) {
        ro.printedFormHolds = Verdict::Fails;
        ro.residualWitness = std::string("literal stencil not boundary-closed: ") +
                             e.what();
    }
    Matrix Oc = materialize(omega1_stencil(p, w), pts);
    ro.correctedFormHolds =
        is_zero(commutator(Oc, A2)).zero ? Verdict::Holds : Verdict::Fails;
    out.push_back(ro);
    return out;
}

// ---- duality / bispectrality ----------------------------------------------

inline std::vector<RelationReport> verify_duality(const SU11Weights& w, long N) {
    RacahParams2 p = params2_from_nu(w, N);
    Grid deg = Grid::degrees(static_cast<int>(N));
    Grid pts = Grid::triangle(static_cast<int>(N));
    std::vector<RelationReport> out;

    // involution of the combined map
    {
        bool ok = true;
        for (int d = 0; d < deg.size() && ok; ++d)
            for (int i = 0; i < pts.size() && ok; ++i) {
                auto dd = deg.pts[static_cast<size_t>(d)];
                auto pt = pts.pts[static_cast<size_t>(i)];
                DualData t = dual_map(Q(pt[0]), Q(pt[1]), Q(dd[0]), Q(dd[1]), p);
                DualData u = dual_map(t.x1, t.x2, t.n1, t.n2, t.params);
                if (u.x1 != pt[0] || u.x2 != pt[1] || u.n1 != dd[0] ||
                    u.n2 != dd[1] || u.params.b0 != p.b0 || u.params.b1 != p.b1 ||
                    u.params.b2 != p.b2 || u.params.b3 != p.b3)
                    ok = false;
            }
        RelationReport r;
        r.relationId = "dual/involution";
        r.printedFormHolds = ok ? Verdict::Holds : Verdict::Fails;
        out.push_back(r);
    }

    // kappa-matching identities
    {
        bool ok = true;
        std::string witness;
        for (int d = 0; d < deg.size(); ++d)
            for (int i = 0; i < pts.size(); ++i) {
                auto dd = deg.pts[static_cast<size_t>(d)];
                auto pt = pts.pts[static_cast<size_t>(i)];
                DualData t = dual_map(Q(pt[0]), Q(pt[1]), Q(dd[0]), Q(dd[1]), p);
                const RacahParams2& tp = t.params;
                bool here =
                    kappa(Q(pt[0]), (p.b1 + 1) / 2) ==
                        kappa(t.n1 + t.n2, (tp.b3 - tp.b0) / 2) &&
                    kappa(Q(pt[1]), (p.b2 + 1) / 2) ==
                        kappa(t.n1, (tp.b2 - tp.b0) / 2) &&
                    kappa(Q(dd[0] + dd[1]), (p.b3 - p.b0) / 2) ==
                        kappa(t.x1, (tp.b1 + 1) / 2) &&
                    kappa(Q(dd[0]), (p.b2 - p.b0) / 2) ==
                        kappa(t.x2, (tp.b2 + 1) / 2);
                if (!here) {
                    ok = false;
                    if (witness.empty())
                        witness = "x=(" + std::to_string(pt[0]) + "," +
                                  std::to_string(pt[1]) + ") n=(" +
                                  std::to_string(dd[0]) + "," +
                                  std::to_string(dd[1]) + ")";
                }
            }
        RelationReport r;
        r.relationId = "dual/kappa-matching";
        r.printedFormHolds = ok ? Verdict::Holds : Verdict::Fails;
        r.residualWitness = witness;
        out.push_back(r);
    }

    // Degree-direction difference equations. For each degree point, the dual
    // stencil coefficients (evaluated at the dual variables and parameters)
    // must reproduce the diagonal action of the two multiplication operators,
    // up to one global diagonal gauge phi on the degree grid. The recurrence
    // coefficients a_s are solved exactly per degree point from the value
    // table, then matched against -Ctil_s phi(n)/phi(n+s) with phi(0,0) = 1.
    {
        Matrix V = racah2_table(p, deg, pts);
        // operator descriptor: degree offsets with their dual coefficients
        struct Edge {
            Q a;     // solved recurrence coefficient
            Q ctil;  // dual stencil coefficient
        };
        std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Edge> edges;
        bool consistent = true;
        std::string witness;

        for (int d = 0; d < deg.size(); ++d) {
            auto dd = deg.pts[static_cast<size_t>(d)];
            DualData t = dual_map(Q(0), Q(0), Q(dd[0]), Q(dd[1]), p);
            for (int level = 1; level <= 2 && consistent; ++level) {
                // diagonal constant and eigen-diagonal of the operator
                Q dcoef = level == 1 ? kappa(Q(N), (p.b2 + 1) / 2)
                                     : kappa(Q(N), (p.b1 + 1) / 2);
                std::vector<std::pair<std::array<int, 2>, Q>> shifts;
                if (level == 1) {
                    for (const auto& off : level1_offsets()) {
                        Q c = coeff_C(1, off[0], off[1], t.x1, t.x2, t.params);
                        dcoef += c;
                        shifts.push_back({{0, off[0]}, c});  // n2-direction
                    }
                } else {
                    for (const auto& off : level2_offsets()) {
                        Q c = coeff_C(2, off[0], off[1], t.x1, t.x2, t.params);
                        dcoef += c;
                        // skewed degree offsets (k, j-k)
                        shifts.push_back({{off[1], off[0] - off[1]}, c});
                    }
                }
                // active shifts: targets inside the degree set
                std::vector<size_t> act;
                for (size_t si = 0; si < shifts.size(); ++si) {
                    int m1 = dd[0] + shifts[si].first[0];
                    int m2 = dd[1] + shifts[si].first[1];
                    if (deg.contains(m1, m2)) act.push_back(si);
                }
                // rows: sum_s a_s V[dd+s, pt] = (lambda(pt) - dcoef) V[dd, pt]
                std::vector<std::vector<Q>> sys;
                for (int i = 0; i < pts.size(); ++i) {
                    auto pt = pts.pts[static_cast<size_t>(i)];
                    Q lam = level == 1 ? kappa(Q(pt[1]), (p.b2 + 1) / 2)
                                       : kappa(Q(pt[0]), (p.b1 + 1) / 2);
                    std::vector<Q> row;
                    for (size_t si : act) {
                        int m1 = dd[0] + shifts[si].first[0];
                        int m2 = dd[1] + shifts[si].first[1];
                        row.push_back(V.at(deg.at(m1, m2), i));
                    }
                    row.push_back((lam - dcoef) * V.at(d, i));
                    sys.push_back(std::move(row));
                }
                std::vector<int> piv = rref(sys, static_cast<int>(act.size()));
                // consistency: no pivot in the augmented column
                for (size_t r = piv.size(); r < sys.size(); ++r)
                    if (sys[r].back() != 0) {
                        consistent = false;
                        witness = "inconsistent recurrence at degree (" +
                                  std::to_string(dd[0]) + "," +
                                  std::to_string(dd[1]) + ") level " +
                                  std::to_string(level);
                    }
                if (!consistent) break;
                std::map<size_t, Q> sol;
                for (size_t r = 0; r < piv.size(); ++r)
                    sol[act[static_cast<size_t>(piv[r])]] = sys[r].back();
                for (size_t si : act) {
                    auto key = std::make_pair(
                        std::make_pair(dd[0], dd[1]),
                        std::make_pair(shifts[si].first[0], shifts[si].first[1]));
                    Q a = sol.count(si) ? sol[si] : Q(0);
                    edges[key] = Edge{a, shifts[si].second};
                }
            }
            if (!consistent) break;
        }

        bool gaugeOk = consistent;
        if (consistent) {
            // propagate one global gauge from the origin
            std::map<std::pair<int, int>, Q> phi;
            phi[{0, 0}] = 1;
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& [key, e] : edges) {
                    if (e.a == 0 || e.ctil == 0) continue;
                    auto nn = key.first;
                    std::pair<int, int> mm{nn.first + key.second.first,
                                           nn.second + key.second.second};
                    if (phi.count(nn) && !phi.count(mm)) {
                        phi[mm] = -e.ctil * phi[nn] / e.a;
                        changed = true;
                    }
                }
            }
            if (static_cast<int>(phi.size()) != deg.size()) {
                gaugeOk = false;
                witness = "gauge does not reach every degree point";
            }
            for (const auto& [key, e] : edges) {
                auto nn = key.first;
                std::pair<int, int> mm{nn.first + key.second.first,
                                       nn.second + key.second.second};
                if (e.ctil == 0) {
                    if (e.a != 0) gaugeOk = false;
                    continue;
                }
                if (e.a == 0 || !phi.count(nn) || !phi.count(mm) ||
                    e.a != -e.ctil * phi[nn] / phi[mm]) {
                    gaugeOk = false;
                    if (witness.empty())
                        witness = "gauge mismatch at degree (" +
                                  std::to_string(nn.first) + "," +
                                  std::to_string(nn.second) + ") shift (" +
                                  std::to_string(key.second.first) + "," +
                                  std::to_string(key.second.second) + ")";
                }
            }
        }
        RelationReport r;
        r.relationId = "dual/degree-recurrences";
        r.printedFormHolds = gaugeOk ? Verdict::Holds : Verdict::Fails;
        r.correctionNote =
            "degree-direction operators realized by the dual stencil "
            "coefficients under a single diagonal gauge";
        r.residualWitness = witness;
        out.push_back(r);
    }
    return out;
}

// ---- the (m, y, gamma) family ---------------------------------------------

inline std::vector<RelationReport> verify_family_my(const SU11Weights& w, long N) {
    RacahParams2 p = params2_from_nu(w, N);
    Grid deg = Grid::degrees(static_cast<int>(N));
    Grid pts = Grid::triangle(static_cast<int>(N));
    GammaPacks g = gamma_params(w, N);
    std::vector<RelationReport> out;

    {
        RelationReport r;
        r.relationId = "family-my/gamma0-agreement";
        r.printedFormHolds =
            g.gamma[0] == g.gamma_tilde[0] ? Verdict::Holds : Verdict::Fails;
        out.push_back(r);
    }

    Matrix Om = materialize(omega1_stencil(p, w), pts);
    Matrix A2 = materialize(lambda2x_stencil(p), pts);
    bool okO = true, okL = true;
    std::string witness;
    for (int d = 0; d < deg.size(); ++d) {
        auto mm = deg.pts[static_cast<size_t>(d)];
        std::vector<Q> v(static_cast<size_t>(pts.size()));
        for (int i = 0; i < pts.size(); ++i) {
            auto pt = pts.pts[static_cast<size_t>(i)];
            v[static_cast<size_t>(i)] = racah2_eval_my(mm[0], mm[1], pt[0], pt[1], w, N);
        }
        Q evO = kappa(Q(mm[0]), (g.gamma[2] - g.gamma[0]) / 2);
        Q evL = kappa(Q(mm[0] + mm[1]), (g.gamma[3] - g.gamma[0]) / 2);
        std::vector<Q> ov = Om.apply(v), lv = A2.apply(v);
        for (int i = 0; i < pts.size(); ++i) {
            if (ov[static_cast<size_t>(i)] != evO * v[static_cast<size_t>(i)]) {
                okO = false;
                if (witness.empty())
                    witness = "Omega1 at m=(" + std::to_string(mm[0]) + "," +
                              std::to_string(mm[1]) + ")";
            }
            if (lv[static_cast<size_t>(i)] != evL * v[static_cast<size_t>(i)]) okL = false;
        }
    }
    RelationReport r1;
    r1.relationId = "family-my/Omega1-eigenvalue";
    r1.printedFormHolds = okO ? Verdict::Holds : Verdict::Fails;
    r1.residualWitness = witness;
    out.push_back(r1);
    RelationReport r2;
    r2.relationId = "family-my/Lambda2-eigenvalue";
    r2.printedFormHolds = okL ? Verdict::Holds : Verdict::Fails;
    out.push_back(r2);

    // Adjudication of the degree map: the printed second-degree line ends in
    // the difference of a gamma-tilde parameter with itself (identically 0);
    // the eigenvalue-matching identities require gamma1til - gamma2til there.
    {
        bool printedOk = true, correctedOk = true;
        for (long m1 = 0; m1 <= N; ++m1)
            for (long m2 = 0; m1 + m2 <= N; ++m2) {
                Q yt2 = Q(m1) - g.gamma_tilde[2] - N;  // from m1 = yt2+gt2+N
                // kappa(yt2,(gt2+1)/2) = kappa(m1,(g2-g0)/2) must hold
                if (kappa(yt2, (g.gamma_tilde[2] + 1) / 2) !=
                    kappa(Q(m1), (g.gamma[2] - g.gamma[0]) / 2)) {
                    printedOk = false;
                    correctedOk = false;
                }
                auto check = [&](const Q& delta) {
                    Q yt1 = Q(m2) + yt2 - delta;  // m2 = yt1-yt2+delta
                    return kappa(yt1, (g.gamma_tilde[1] + 1) / 2) ==
                           kappa(Q(m1 + m2), (g.gamma[3] - g.gamma[0]) / 2);
                };
                if (!check(Q(0))) printedOk = false;
                if (!check(g.gamma_tilde[1] - g.gamma_tilde[2])) correctedOk = false;
            }
        RelationReport r;
        r.relationId = "family-my/degree-map";
        r.printedFormHolds = printedOk ? Verdict::Holds : Verdict::Fails;
        r.correctedFormHolds = correctedOk ? Verdict::Holds : Verdict::Fails;
        r.correctionNote =
            "printed m2 offset gamma2til-gamma2til (= 0) read as "
            "gamma1til-gamma2til";
        out.push_back(r);
    }
    return out;
}

// ---- bivariate orthogonality ----------------------------------------------

inline std::vector<RelationReport> verify_weights2(const SU11Weights& w, long N) {
    RacahParams2 p = params2_from_nu(w, N);
    Grid deg = Grid::degrees(static_cast<int>(N));
    Grid pts = Grid::triangle(static_cast<int>(N));
    Matrix V = racah2_table(p, deg, pts);
    std::vector<RelationReport> out;
    RelationReport r;
    r.relationId = "weights2/solve";
    try {
        WeightSolution sol = solve_weight(V);
        bool positive = true;
        for (const Q& x : sol.omega)
            if (x <= 0) positive = false;
        for (const Q& x : sol.sigma)
            if (x <= 0) positive = false;
        // congruence check: V diag(omega) V^T = diag(1/sigma)
        bool cong = true;
        for (int a = 0; a < V.n && cong; ++a)
            for (int b = 0; b < V.n && cong; ++b) {
                Q s = 0;
                for (int i = 0; i < V.n; ++i)
                    s += V.at(a, i) * sol.omega[static_cast<size_t>(i)] * V.at(b, i);
                Q want = a == b ? 1 / sol.sigma[static_cast<size_t>(a)] : Q(0);
                if (s != want) cong = false;
            }
        r.printedFormHolds =
            (positive && cong) ? Verdict::Holds : Verdict::Fails;
        if (!positive) r.residualWitness = "nonpositive weight entry";
        if (!cong) r.residualWitness = "congruence mismatch";
    } catch (const std::exception& e) {
        r.printedFormHolds = Verdict::Fails;
        r.residualWitness = e.what();
    }
    out.push_back(r);
    return out;
}

// ---- battery --------------------------------------------------------------

struct BatteryEntry {
    SU11Weights weights;
    long N;
};

// Five 4-element selections from {3/5, 3/4, 1, 7/6, 3/2} paired with
// N = 2..6. Each pack leads with a weight that is not a half-integer, since
// nu_1 in Z/2 makes beta_0 a positive integer and the bivariate normalizer
// (-N+beta_0)_{n1+n2} vanish on part of the degree range.
inline std::vector<BatteryEntry> default_battery() {
    std::vector<Q> base = {rat(3, 5), rat(3, 4), rat(1), rat(7, 6), rat(3, 2)};
    std::vector<BatteryEntry> battery;
    for (int drop = 0; drop < 5; ++drop) {
        SU11Weights w;
        for (int k = 0; k < 5; ++k)
            if (k != drop) w.nu.push_back(base[static_cast<size_t>(k)]);
        battery.push_back({w, 2 + drop});
    }
    return battery;
}

inline SU11Weights univariate_weights(const SU11Weights& w) {
    SU11Weights u;
    u.nu.assign(w.nu.begin(), w.nu.begin() + 3);
    return u;
}

}  // namespace racah
