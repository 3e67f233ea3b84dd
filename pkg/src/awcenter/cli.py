"""Command line verification harness.

    awcenter verify --d 5 --suite uaw --suite daha --seed 1 --json report.json
    awcenter phi --n 3
    awcenter expand --alg daha --d 4 --expr element.txt
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import appendix, chebyshev, daha, qidentities, uaw, uqsl2
from .checks import CheckResult, combine
from .coeffring.cyclo import dbar
from .parallel import pmap

SUITES = ("chebyshev", "qidentities", "uaw", "uqsl2", "daha", "appendix")
# largest dbar for the Z(Delta) / Z(H) relation in the default and the --deep runs
DEFAULT_RELATION_DBAR = 3
DEEP_RELATION_DBAR = {"uaw": 5, "daha": 4}
# largest dbar for the capital-polynomial cross-check through the embedding
DEFAULT_CROSS_DBAR = 3


@dataclass
class SuiteConfig:
    d: int
    suites: list = field(default_factory=lambda: list(SUITES))
    seed: int = 0
    max_degree: int | None = None
    deep: bool = False
    output_path: str | None = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be a positive integer")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s) {unknown}; registered: {list(SUITES)}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass
class Record:
    suite: str
    check: str
    anchor: str
    status: str
    elapsed: float
    payload: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)


@dataclass
class Report:
    config: dict
    records: list

    @property
    def failed(self) -> bool:
        return any(r.status == "fail" for r in self.records)

    def to_json(self) -> dict:
        return {"config": self.config, "records": [asdict(r) for r in self.records]}

    @staticmethod
    def from_json(obj: dict) -> "Report":
        return Report(dict(obj["config"]), [Record(**r) for r in obj["records"]])

    def without_timing(self) -> dict:
        out = self.to_json()
        for r in out["records"]:
            r["elapsed"] = 0.0
        return out


@dataclass
class Check:
    suite: str
    name: str
    anchor: str
    run: object = None
    # reason for a "skipped" record; run is not called when set
    skip: str | None = None


def _jsonable(x):
    return json.loads(json.dumps(x, default=str, sort_keys=True))


def _folded(name: str, fn):
    """Wrap a list-returning check into one result."""
    return lambda: combine(name, fn())


def _chebyshev_checks(cfg: SuiteConfig) -> list:
    s = "chebyshev"
    comp = lambda: combine("composition", [chebyshev.composition_check(m, n) for m in range(5) for n in range(5)])
    cap = lambda: combine("capital composition", [chebyshev.capital_composition_check(m, n)
                                                  for m in range(1, 4) for n in range(1, 4)])
    so3 = lambda: combine("zero specialization", [chebyshev.so3_specialization_check(n) for n in range(7)])
    rank = lambda: combine("ansatz rank", [chebyshev.system_rank_check(n) for n in range(4)])
    return [
        Check(s, "listed_capital_polynomials", "Phi_n, Psi_n listed for n <= 3", chebyshev.known_values_check),
        Check(s, "composition_law", "Phi_n, Psi_n composed with phi_m, psi_m give phi_mn, psi_mn (m, n <= 4)", comp),
        Check(s, "capital_composition", "Phi_n composed with Phi_m, Psi_m gives Phi_mn (m, n <= 3)", cap),
        Check(s, "zero_specialization", "Phi_n, Psi_n at X0 = X1 = X2 = 0 closed forms", so3),
        Check(s, "ansatz_rank", "algebraic independence of the phi_1 shifts and psi_1", rank),
    ]


def _collapse_orders() -> list:
    # one d for each dbar in 2..7
    return [4, 3, 8, 5, 12, 7]


def _qidentity_checks(cfg: SuiteConfig) -> list:
    s, d = "qidentities", cfg.d
    b = dbar(d)
    generic = lambda: combine("generic identities", [qidentities.qbinomial_theorem_check(n) for n in range(11)]
                              + [qidentities.iorgov_identity_check(n) for n in range(9)])
    collapse = lambda: combine("root of unity collapses",
                               [qidentities.qbinomial_theorem_check(dbar(e), e) for e in _collapse_orders()]
                               + [qidentities.iorgov_identity_check(dbar(e), e) for e in _collapse_orders()])
    at_d = lambda: combine(f"collapse at d={d}", [qidentities.qbinomial_theorem_check(b, d),
                                                  qidentities.iorgov_identity_check(b, d)])
    out = [
        Check(s, "generic_q_identities", "q-binomial theorem (n <= 10) and T_n(R+S+R^-1) expansion (n <= 8)", generic),
        Check(s, "root_of_unity_collapse_range", "(R+S)^dbar and T_dbar(R+S+R^-1) collapse, dbar = 2..7", collapse),
        Check(s, "root_of_unity_collapse_at_d", "(R+S)^dbar and T_dbar(R+S+R^-1) collapse at the chosen d", at_d),
    ]
    theta_skip = None if b > 2 else f"Theta evaluations need dbar > 2 (dbar={b})"
    theta = lambda: combine("Theta", [qidentities.theta_identities_check(d)]
                            + [qidentities.pqrs_theta_check(n, d) for n in range(2 * b + 1)])
    out.append(Check(s, "theta_evaluations", "P_n, Q_n, R_n, S_n evaluated at Theta_i", theta, theta_skip))
    out.append(Check(s, "script_pqrs", "script P = T_dbar and script Q = R = S = 0",
                     lambda: qidentities.script_pqrs_check(d), theta_skip))
    return out


def _relation_skip(kind: str, b: int, deep: bool) -> str | None:
    if b <= DEFAULT_RELATION_DBAR:
        return None
    if not deep:
        return f"dbar={b} > {DEFAULT_RELATION_DBAR} runs only with --deep"
    if b > DEEP_RELATION_DBAR[kind]:
        return f"dbar={b} exceeds the --deep bound {DEEP_RELATION_DBAR[kind]}"
    return None


def _uaw_checks(cfg: SuiteConfig) -> list:
    s, d = "uaw", cfg.d
    b = dbar(d)
    return [
        Check(s, "chebyshev_centrality", "T_dbar(A), T_dbar(B), T_dbar(C) central in Delta",
              _folded("centrality", lambda: uaw.centrality_suite(d))),
        Check(s, "center_relation", "Z(Delta) relation between T_dbar(A/B/C), alpha, beta, gamma, Omega",
              lambda: uaw.central_relation_check(d), _relation_skip("uaw", b, cfg.deep)),
        Check(s, "center_basis_bounded", "Z(Delta) basis, bounded degree",
              _folded("center basis", lambda: uaw.center_basis_bounded_check(d, cfg.max_degree, cfg.seed))),
        Check(s, "properties", "associativity, filtration and rho on random inputs",
              _folded("properties", lambda: uaw.property_checks(d, cfg.seed))),
    ]


def _uqsl2_checks(cfg: SuiteConfig) -> list:
    s, d = "uqsl2", cfg.d
    b = dbar(d)
    skip = None if d >= 3 else f"needs d >= 3 (q^2 = 1 at d={d})"
    cross_skip = skip
    if cross_skip is None and b > DEFAULT_CROSS_DBAR and not cfg.deep:
        cross_skip = f"dbar={b} > {DEFAULT_CROSS_DBAR} runs only with --deep"
    table = [
        ("defining_relations", "Chevalley relations of U_q(sl2)", lambda: uqsl2.defining_relations_check(d), skip),
        ("equitable_generators", "equitable presentation of U_q(sl2)",
         _folded("equitable", lambda: uqsl2.equitable_checks(d)), skip),
        ("concini_kac", "T_dbar(Casimir) in terms of e^dbar, f^dbar, k^dbar", lambda: uqsl2.concini_kac_check(d), skip),
        ("power_formulas", "powers of e k^-1 and k f", lambda: uqsl2.power_formulas_check(d), skip),
        ("homogeneous_components", "graded components of the embedded T_dbar(A/B/C)",
         lambda: uqsl2.homogeneous_component_check(d), skip),
        ("embedding_relations", "embedding of Delta respects its relations and Omega",
         lambda: uqsl2.natural_relations_check(d), skip),
        ("rho_tilde", "rho~ and the commuting square with rho", lambda: uqsl2.rho_tilde_checks(d), skip),
        ("capital_cross_check", "Phi_dbar, Psi_dbar through the embedding",
         lambda: uqsl2.capital_phi_psi_cross_check(d), cross_skip),
        ("casimir_powers", "leading terms of Casimir powers", lambda: uqsl2.casimir_power_leading_check(d), skip),
        ("properties", "associativity, grading, embedding and rho~ on random inputs",
         _folded("properties", lambda: uqsl2.property_checks(d, cfg.seed)), skip),
        ("embedding_injective", "embedding injective at low degree", lambda: uqsl2.injectivity_smoke_check(d), skip),
    ]
    return [Check(s, n, a, fn, sk) for n, a, fn, sk in table]


def _daha_checks(cfg: SuiteConfig) -> list:
    s, d = "daha", cfg.d
    b = dbar(d)
    skip = None if d >= 3 else f"needs d >= 3 (dbar={b})"
    fuzz_degree = 3 if cfg.max_degree is None else cfg.max_degree
    rel_skip = skip or _relation_skip("daha", b, cfg.deep)
    table = [
        ("hecke_relations", "quadratic Hecke relations of t0, t1, t0v, t1v", lambda: daha.hecke_relations_check(d), skip),
        ("presentation", "t1, u, v presentation of H", lambda: daha.presentation_check(d), skip),
        ("abc_relations", "A, B, C in terms of the Hecke generators", _folded("abc", lambda: daha.abc_checks(d)), skip),
        ("sharp_homomorphism", "images of the Delta relations under sharp", lambda: daha.sharp_checks(d), skip),
        ("associativity_fuzz", "associativity of the normal form on random triples",
         lambda: daha.associativity_fuzz(d, cfg.seed, 1000, fuzz_degree), skip),
        ("chebyshev_centrality", "T_dbar(A), T_dbar(B), T_dbar(C) central in H",
         _folded("centrality", lambda: daha.daha_centrality_suite(d)), skip),
        ("center_relation", "Z(H) relation between T_dbar(A/B/C) and the parameters",
         lambda: daha.center_relation_H_check(d), rel_skip),
        ("centralizer_basis_bounded", "centralizer of t1 and Z(H) bases, bounded degree",
         _folded("centralizer basis", lambda: daha.centralizer_basis_bounded_check(d, cfg.max_degree)), skip),
        ("properties", "filtration and sharp on random inputs",
         _folded("properties", lambda: daha.property_checks(d, cfg.seed)), skip),
    ]
    return [Check(s, n, a, fn, sk) for n, a, fn, sk in table]


def _appendix_checks(cfg: SuiteConfig) -> list:
    s, d = "appendix", cfg.d
    skip = None if d >= 3 else f"needs d >= 3 (q^2 = 1 at d={d})"
    out = []
    for name in appendix.TABLES:
        out.append(Check(s, f"table_{name}", f"coefficient table for the product {name}",
                         (lambda name=name: appendix.verify_table(name, d)), skip))
    return out


REGISTRY = {
    "chebyshev": _chebyshev_checks,
    "qidentities": _qidentity_checks,
    "uaw": _uaw_checks,
    "uqsl2": _uqsl2_checks,
    "daha": _daha_checks,
    "appendix": _appendix_checks,
}


def registered_checks(cfg: SuiteConfig) -> list:
    out = []
    for suite in sorted(set(cfg.suites)):
        out += REGISTRY[suite](cfg)
    return out


def _execute(check: Check) -> Record:
    if check.skip is not None:
        return Record(check.suite, check.name, check.anchor, "skipped", 0.0, {"reason": check.skip})
    start = time.perf_counter()
    try:
        res = check.run()
    except Exception as exc:  # a crashing check is a failing check
        res = CheckResult(check.name, False, {"error": f"{type(exc).__name__}: {exc}"})
    elapsed = round(time.perf_counter() - start, 3)
    payload = {} if res.passed else _jsonable(res.detail)
    return Record(check.suite, check.name, check.anchor, "pass" if res.passed else "fail", elapsed,
                  payload, _jsonable(res.notes))


def run(cfg: SuiteConfig, progress=None) -> Report:
    checks = registered_checks(cfg)

    def one(c):
        rec = _execute(c)
        if progress is not None:
            progress(rec)
        return rec

    records = sorted(pmap(one, checks), key=lambda r: (r.suite, r.check))
    conf = {"d": cfg.d, "suites": sorted(set(cfg.suites)), "seed": cfg.seed,
            "max_degree": cfg.max_degree, "deep": cfg.deep}
    return Report(conf, records)


def _print_record(rec: Record, stream=None) -> None:
    stream = stream or sys.stdout
    line = f"{rec.status.upper():7} {rec.suite}/{rec.check}  [{rec.anchor}]  {rec.elapsed:.2f}s"
    if rec.status == "skipped":
        line += f"  ({rec.payload['reason']})"
    print(line, file=stream, flush=True)
    for n in rec.notes:
        print(f"        note: {json.dumps(n, sort_keys=True)}", file=stream)
    if rec.status == "fail":
        print(f"        payload: {json.dumps(rec.payload, sort_keys=True)[:2000]}", file=stream)


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(args.d, args.suite or list(SUITES), args.seed, args.max_degree, args.deep, args.json)
    report = run(cfg, progress=_print_record)
    counts = {k: sum(r.status == k for r in report.records) for k in ("pass", "fail", "skipped")}
    print(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            json.dump(report.to_json(), fh, indent=2, sort_keys=True)
    return 1 if report.failed else 0


def _cmd_phi(args) -> int:
    Phi, Psi = chebyshev.solve_capital(args.n)
    if args.json:
        print(json.dumps({"n": args.n, "Phi": Phi.to_json(), "Psi": Psi.to_json()}, sort_keys=True))
    else:
        print(f"Phi_{args.n} = {Phi}")
        print(f"Psi_{args.n} = {Psi}")
    return 0


def _cmd_expand(args) -> int:
    from .expr import ExpressionError, load

    try:
        with open(args.expr) as fh:
            x = load(fh.read(), args.alg, args.d)
    except (OSError, ExpressionError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(x.to_json(), sort_keys=True) if args.json else x.alg.format(x))
    return 0


def _u64(text: str) -> int:
    n = int(text, 0)
    if not 0 <= n < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("d must be a positive integer")
    return n


def _natural(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a natural number")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="awcenter", description="Exact checks of centers at roots of unity.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--d", type=_positive, required=True, help="order of the root of unity q")
    v.add_argument("--suite", action="append", choices=SUITES, help="suite to run (repeatable; default all)")
    v.add_argument("--seed", type=_u64, default=0, help="seed for randomized checks")
    v.add_argument("--max-degree", type=_natural, default=None, help="degree bound for bounded checks")
    v.add_argument("--deep", action="store_true", help="include the slow center relations")
    v.add_argument("--json", metavar="PATH", default=None, help="write the report as JSON")
    v.set_defaults(func=_cmd_verify)

    ph = sub.add_parser("phi", help="print Phi_n and Psi_n")
    ph.add_argument("--n", type=_natural, required=True)
    ph.add_argument("--json", action="store_true", help="print JSON instead of text")
    ph.set_defaults(func=_cmd_phi)

    ex = sub.add_parser("expand", help="normalize an element given as a text expression or JSON")
    ex.add_argument("--alg", choices=("uaw", "u", "daha"), required=True)
    ex.add_argument("--d", type=_positive, required=True)
    ex.add_argument("--expr", required=True, metavar="FILE")
    ex.add_argument("--json", action="store_true", help="print the normalized element as JSON")
    ex.set_defaults(func=_cmd_expand)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
