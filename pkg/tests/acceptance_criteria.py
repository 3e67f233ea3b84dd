"""The ten acceptance criteria as standalone jobs.

Run as ``python3 acceptance_criteria.py K`` to execute criterion K in a fresh
interpreter (so no cache warmed by other tests helps) and print one JSON line
with the outcome.
"""
import json
import sys
import time

from awcenter import appendix, chebyshev, daha, qidentities, uaw, uqsl2
from awcenter.coeffring.cyclo import dbar

from oracles import listed_capital


def capital_reproduction():
    want = listed_capital()
    res = []
    for n in range(4):
        got = chebyshev.solve_capital(n)
        res.append((f"Phi_{n}, Psi_{n} equal the listed polynomials", got == want[n]))
    return res


def functional_equations():
    res = [(f"composition m={m}, n={n}", chebyshev.composition_check(m, n).passed)
           for m in range(5) for n in range(5)]
    res += [(f"capital composition m={m}, n={n}", chebyshev.capital_composition_check(m, n).passed)
            for m in range(1, 4) for n in range(1, 4)]
    return res


def uaw_centrality():
    res = []
    for d in (3, 4, 5, 6, 7):
        start = time.perf_counter()
        rs = uaw.commutator_checks(d)
        ok = len(rs) == 9 and all(r.passed for r in rs)
        # each d has its own 60 s budget
        res.append((f"nine commutators [T_{dbar(d)}(G), H] vanish within 60 s, d={d}",
                    ok and time.perf_counter() - start < 60))
    for d in (1, 2):
        rs = uaw.degenerate_branch_checks(d)
        res.append((f"degenerate branch, d={d}", bool(rs) and all(r.passed for r in rs)))
    return res


def uaw_center_relation():
    res = [(f"Z(Delta) relation, d={d}", uaw.central_relation_check(d).passed) for d in (1, 2, 3, 4, 6)]
    # dbar = 5, the deep case
    res += [(f"Z(Delta) relation, d={d}", uaw.central_relation_check(d).passed) for d in (5, 10)]
    return res


def sharp_homomorphism():
    return [(f"sharp images of the relations and Omega, d={d}", daha.sharp_checks(d).passed) for d in (3, 4, 5)]


def appendix_tables():
    res = []
    for d in (3, 5):
        rows = appendix.appendix_verify(d)
        res.append((f"all ten tables reproduced, d={d}", len(rows) == 10 and all(r.passed for r in rows)))
        notes = [n for r in rows for n in r.notes]
        res.append((f"discrepancies reported with both values, d={d}",
                    all(n.get("computed") and n.get("printed") for n in notes)))
    return res


def u_formulas():
    res = [(f"homogeneous components, d={d}", uqsl2.homogeneous_component_check(d).passed) for d in (3, 4, 5)]
    for d in (3, 4, 5, 6):
        res.append((f"T_dbar(Lambda) in e, f, k powers, d={d}", uqsl2.concini_kac_check(d).passed))
        res.append((f"power formulas, d={d}", uqsl2.power_formulas_check(d).passed))
    return res


def daha_suite():
    res = [(f"1000-triple associativity fuzz at degree <= 3, d={d}",
            daha.associativity_fuzz(d, seed=0, samples=1000, max_degree=3).passed) for d in (3, 4, 5)]
    for d in (3, 4, 5):
        res.append((f"Hecke relations of reconstructed generators, d={d}", daha.hecke_relations_check(d).passed))
        res.append((f"sharp relation images, d={d}", daha.sharp_checks(d).passed))
        rs = daha.daha_centrality_suite(d)
        res.append((f"T_dbar(A/B/C) central in H, d={d}", all(r.passed for r in rs)))
    # dbar <= 3 by default; dbar = 4 is the deep case
    for d in (3, 4, 6, 8):
        res.append((f"Z(H) relation, d={d}", daha.center_relation_H_check(d).passed))
    return res


def q_identities():
    res = [(f"q-binomial theorem, generic, n={n}", qidentities.qbinomial_theorem_check(n).passed) for n in range(11)]
    res += [(f"T_n(R+S+R^-1) expansion, generic, n={n}", qidentities.iorgov_identity_check(n).passed) for n in range(9)]
    for b in range(2, 8):
        for d in (b, 2 * b) if b % 2 else (2 * b,):
            res.append((f"collapses at dbar={b}, d={d}",
                        qidentities.qbinomial_theorem_check(b, d).passed and qidentities.iorgov_identity_check(b, d).passed))
    for d in (3, 6, 8, 5, 10):
        res.append((f"Theta evaluations, d={d}", qidentities.theta_identities_check(d).passed
                    and all(qidentities.pqrs_theta_check(n, d).passed for n in range(2 * dbar(d) + 1))))
        res.append((f"script P = T_dbar, script Q = R = S = 0, d={d}", qidentities.script_pqrs_check(d).passed))
    return res


def property_suites():
    res = []
    for d in (3, 4):
        res += [(r.name, r.passed) for r in uaw.property_checks(d, seed=0)]
        res += [(r.name, r.passed) for r in uqsl2.property_checks(d, seed=0)]
        res += [(r.name, r.passed) for r in daha.property_checks(d, seed=0)]
        res.append((f"rho~ commuting square, d={d}", uqsl2.rho_tilde_checks(d).passed))
        res += [(r.name, r.passed) for r in uaw.center_basis_bounded_check(d)]
        res += [(r.name, r.passed) for r in daha.centralizer_basis_bounded_check(d)]
    return res


CRITERIA = {
    1: ("capital polynomial reproduction", 1, capital_reproduction),
    2: ("functional equations", 30, functional_equations),
    3: ("Delta centrality", 5 * 60, uaw_centrality),
    4: ("Z(Delta) relation", 600, uaw_center_relation),
    5: ("sharp homomorphism", 60, sharp_homomorphism),
    6: ("appendix tables", 300, appendix_tables),
    7: ("U_q(sl2) graded and power formulas", None, u_formulas),
    8: ("DAHA", 600, daha_suite),
    9: ("q-identities", 60, q_identities),
    10: ("property suites", 120, property_suites),
}


if __name__ == "__main__":
    k = int(sys.argv[1])
    results = CRITERIA[k][2]()
    print(json.dumps({"passed": all(ok for _, ok in results), "failed": [n for n, ok in results if not ok],
                      "count": len(results)}))
