"""``qcox verify``: batch sweep of every identity over data and permutations."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import coxeter, qnum, qseries
from .cartan import CartanDatum, all_finite, make_cartan, parse_datum, validate
from .laurent import LaurentPoly, RatFunc
from .ncalg import check_theorem1
from .verdict import Verdict

CHECKS = (
    "cayley", "eqpi", "character", "nogo", "lemma1", "theorem1",
    "fseries", "serre-series", "jing", "kq", "affine-pack", "genchar",
)
MATRIX_CHECKS = {"cayley", "eqpi", "character", "nogo"}
DATUM_FREE = {"lemma1", "jing"}
SYMBOLIC_DEFAULT = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")
GENCHAR_FAMILIES = 20


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    checks: Tuple[str, ...] = CHECKS
    data: Optional[Tuple[str, ...]] = None   # None: per-check defaults
    perm: Optional[Tuple[int, ...]] = None
    all_perms: bool = False
    order: int = 16
    rmax: int = 12
    level: int = 0
    jobs: int = 1
    fmt: str = "text"

    def __post_init__(self):
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}")
        if not self.checks:
            raise UsageError("no checks selected")
        if self.data is not None and not self.data:
            raise UsageError("no Cartan data selected")
        if self.order < 1 or self.rmax < 1:
            raise UsageError("--order and --rmax must be >= 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        if self.fmt not in ("text", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")


@dataclass(frozen=True)
class CaseReport:
    id: str
    status: str
    witness: str = ""
    ms: float = 0.0


@dataclass
class Report:
    suite: str
    cases: List[CaseReport] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.status == "pass" for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed


# -- case enumeration -------------------------------------------------------


@dataclass(frozen=True)
class Case:
    check: str
    datum: Optional[str]
    perm: Optional[Tuple[int, ...]]
    pair: Optional[Tuple[int, int]] = None
    m: Optional[int] = None

    @property
    def id(self) -> str:
        if self.datum is None:
            return f"{self.check}/m={self.m}"
        parts = [self.check, self.datum, "*" if self.perm is None else coxeter.render_perm(self.perm)]
        if self.pair is not None:
            parts.append(f"{self.pair[0] + 1},{self.pair[1] + 1}")
        return "/".join(parts)


def _data_for(check: str, config: SuiteConfig) -> List[CartanDatum]:
    if config.data is not None:
        return [parse_datum(x) for x in config.data]
    if check in MATRIX_CHECKS:
        return all_finite(4)
    return [parse_datum(x) for x in SYMBOLIC_DEFAULT]


def _perms_for(datum: CartanDatum, config: SuiteConfig) -> List[Tuple[int, ...]]:
    if config.perm is not None:
        return [coxeter.check_perm(config.perm, datum.rank)]
    if datum.rank >= 5 and not config.all_perms:
        ident = tuple(range(datum.rank))
        return [ident, ident[::-1]]
    return list(permutations(range(datum.rank)))


def _pairs(datum: CartanDatum):
    l = datum.rank
    return [(i, j) for i in range(l) for j in range(l) if i != j and datum.a[i][j] != 0]


def enumerate_cases(config: SuiteConfig) -> List[Case]:
    cases: List[Case] = []
    for check in config.checks:
        if check == "lemma1":
            cases += [Case(check, None, None, m=m) for m in (1, 2, 3, 4)]
            continue
        if check == "jing":
            cases += [Case(check, None, None, m=m) for m in (0, -1, -2, -3)]
            continue
        for datum in _data_for(check, config):
            if check == "nogo":
                cases += [Case(check, datum.name, None, p) for p in _pairs(datum) if datum.a[p[0]][p[1]] == -1]
                continue
            for perm in _perms_for(datum, config):
                if check in ("character", "serre-series"):
                    cases += [Case(check, datum.name, perm, p) for p in _pairs(datum)]
                else:
                    cases.append(Case(check, datum.name, perm))
    ids = [c.id for c in cases]
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate case ids")
    return cases


# -- individual checks ------------------------------------------------------


def _check_cayley(datum, perm, case, config) -> Verdict:
    c = coxeter.cayley_pairing(datum, perm)
    eps = coxeter.epsilon_matrix(perm, datum.rank)
    l = datum.rank
    for i in range(l):
        for j in range(l):
            if c[i][j] != eps[i][j] * datum.b[i][j]:
                return Verdict.failed(f"c[{i + 1}][{j + 1}] = {c[i][j]} != eps*b = {eps[i][j] * datum.b[i][j]}")
    if coxeter.coxeter_matrix(datum, perm, "gauss") != coxeter.coxeter_matrix(datum, perm):
        return Verdict.failed("Gauss decomposition disagrees with the reflection product")
    h = coxeter.matrix_order(coxeter.coxeter_matrix(datum, perm))
    if h != datum.coxeter_number:
        return Verdict.failed(f"order {h} != Coxeter number {datum.coxeter_number}")
    return Verdict.passed()


def _check_eqpi(datum, perm, case, config) -> Verdict:
    n = coxeter.solve_n(datum, perm)
    res = coxeter.eqpi_residual(datum, n, coxeter.cayley_pairing(datum, perm))
    bad = [(i, j) for i, row in enumerate(res) for j, x in enumerate(row) if x]
    if bad:
        i, j = bad[0]
        return Verdict.failed(f"residual {res[i][j]} at ({i + 1},{j + 1})")
    return Verdict.passed()


def character_verdict(datum: CartanDatum, c, i: int, j: int) -> Verdict:
    """The twisted Serre scalar vanishes at the pairing ``c``."""
    val = qnum.serre_character_scalar(1 - datum.a[i][j], c[i][j], datum.d[i])
    if val:
        return Verdict.failed(val.render())
    return Verdict.passed()


def _check_character(datum, perm, case, config) -> Verdict:
    return character_verdict(datum, coxeter.cayley_pairing(datum, perm), *case.pair)


def _check_nogo(datum, perm, case, config) -> Verdict:
    i, _ = case.pair
    val = qnum.nogo_scalar(datum.d[i])
    expected = LaurentPoly({0: 2, 2 * datum.d[i]: -1, -2 * datum.d[i]: -1})
    if val != expected or not val:
        return Verdict.failed(f"untwisted scalar {val.render()}")
    return Verdict.passed()


def _check_lemma1(case, config) -> Verdict:
    m = case.m
    got = qnum.rational_solution_set(m, 4, m + 2)
    want = {m - 1 - 2 * p for p in range(m)}
    if got != want:
        return Verdict.failed(f"solutions {sorted(got)} != {sorted(want)}")
    return Verdict.passed()


def _check_jing(case, config) -> Verdict:
    return qseries.jing_identity(case.m)


def _check_theorem1(datum, perm, case, config) -> Verdict:
    return check_theorem1(datum, perm)


def fseries_verdict(datum: CartanDatum, n, order: int) -> Verdict:
    v = qseries.check_fg_constraints(datum, n)
    if not v.ok:
        return v
    for i in range(datum.rank):
        for j in range(datum.rank):
            if datum.a[i][j] == 0:
                continue
            expect = qseries.build_F(datum, n, i, j).series(order)
            if qseries.taylor_solve_F(datum, n, i, j, order) != expect:
                return Verdict.failed(f"({i + 1},{j + 1}): Taylor solution differs from the expansion")
    return Verdict.passed()


def _check_fseries(datum, perm, case, config) -> Verdict:
    return fseries_verdict(datum, coxeter.solve_n(datum, perm), config.order)


def _check_serre_series(datum, perm, case, config) -> Verdict:
    return qseries.serre_series_identity(datum, coxeter.solve_n(datum, perm), *case.pair)


def _check_kq(datum, perm, case, config) -> Verdict:
    try:
        twist = qseries.solve_Kq(datum, perm, coxeter.solve_n(datum, perm), config.level, config.rmax)
    except AssertionError as exc:
        return Verdict.failed(str(exc))
    return qseries.check_Kq(twist)


def affine_pack_verdict(datum: CartanDatum, n, level: int, order: int) -> Verdict:
    pack = qseries.affine_series_pack(datum, n, level, order)
    qk, qmk = RatFunc(qseries.qv(level)), RatFunc(qseries.qv(-level))
    for (i, j), g in pack["g"].items():
        tag = f"({i + 1},{j + 1})"
        if g[0] != RatFunc(qseries.qv(-datum.b[i][j])):
            return Verdict.failed(f"{tag}: g(0) = {g[0].render()}")
        f_ij = qseries.build_F(datum, n, i, j).series(order)
        if pack["F-"][(i, j)][0] != f_ij[0]:
            return Verdict.failed(f"{tag}: F-(0) = {pack['F-'][(i, j)][0].render()}")
        # M g(z q^-k) F_ji(z q^-k) = F_ji(z q^k)
        f_ji = qseries.build_F(datum, n, j, i).series(order)
        m = pack["M"][(i, j)]
        if m * g.scale(qmk) * f_ji.scale(qmk) != f_ji.scale(qk):
            return Verdict.failed(f"{tag}: M does not satisfy its defining product")
        if pack["G"][(i, j)] * m.scale(qk) != m.scale(qmk):
            return Verdict.failed(f"{tag}: G does not satisfy its defining product")
        if level == 0 and not pack["G"][(i, j)].is_constant():
            return Verdict.failed(f"{tag}: G is not 1 at level 0")
    return Verdict.passed()


def _check_affine_pack(datum, perm, case, config) -> Verdict:
    return affine_pack_verdict(datum, coxeter.solve_n(datum, perm), config.level, config.order)


def random_phi_families(rank: int, count: int, seed: str):
    """``count`` families of Laurent polynomials in ``u`` with at most 5 terms."""
    rng = random.Random(seed)
    families = []
    for _ in range(count):
        fam = []
        for _ in range(rank):
            phi = {}
            for _ in range(rng.randint(1, 5)):
                coeff = LaurentPoly({2 * rng.randint(-2, 2): rng.choice([-3, -2, -1, 1, 2, 3])})
                phi[rng.randint(-4, 4)] = coeff
            fam.append(phi)
        families.append(fam)
    return families


def _check_genchar(datum, perm, case, config) -> Verdict:
    n = coxeter.solve_n(datum, perm)
    families = [[{0: 1}] * datum.rank] + random_phi_families(datum.rank, GENCHAR_FAMILIES, case.id)
    for k, phis in enumerate(families):
        v = qseries.generalized_character_check(datum, n, phis, config.order)
        if not v.ok:
            return Verdict.failed(f"family {k}: {v.witness}")
    return Verdict.passed()


RUNNERS: Dict[str, Callable] = {
    "cayley": _check_cayley,
    "eqpi": _check_eqpi,
    "character": _check_character,
    "nogo": _check_nogo,
    "theorem1": _check_theorem1,
    "fseries": _check_fseries,
    "serre-series": _check_serre_series,
    "kq": _check_kq,
    "affine-pack": _check_affine_pack,
    "genchar": _check_genchar,
}


def run_case(case: Case, config: SuiteConfig) -> CaseReport:
    start = time.perf_counter()
    try:
        if case.check == "lemma1":
            verdict = _check_lemma1(case, config)
        elif case.check == "jing":
            verdict = _check_jing(case, config)
        else:
            datum = parse_datum(case.datum)
            verdict = validate(datum)
            if verdict.ok:
                verdict = RUNNERS[case.check](datum, case.perm, case, config)
    except Exception as exc:  # a case never aborts the suite
        verdict = Verdict.failed(f"{type(exc).__name__}: {exc}")
    ms = (time.perf_counter() - start) * 1000
    return CaseReport(case.id, "pass" if verdict.ok else "fail", verdict.witness, round(ms, 1))


def _run_one(args):
    return run_case(*args)


def run_suite(config: SuiteConfig) -> Report:
    cases = enumerate_cases(config)
    if config.jobs == 1:
        results = [run_case(c, config) for c in cases]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_one, [(c, config) for c in cases], chunksize=4))
    return Report("qcox verify", sorted(results, key=lambda r: r.id))


def emit_report(report: Report, fmt: str = "text", stream=None) -> int:
    stream = stream or sys.stdout
    if fmt == "json":
        body = {
            "suite": report.suite,
            "cases": [{"id": c.id, "status": c.status, "witness": c.witness, "ms": c.ms} for c in report.cases],
            "summary": {"pass": report.passed, "fail": report.failed},
        }
        json.dump(body, stream, indent=2)
        stream.write("\n")
    else:
        for c in report.cases:
            stream.write(f"{'PASS' if c.status == 'pass' else 'FAIL'} {c.id} ({c.ms:.0f}ms)\n")
            if c.witness:
                stream.write(f"    {c.witness}\n")
        stream.write(f"summary: {report.passed} passed, {report.failed} failed\n")
    return 0 if report.failed == 0 else 1


# -- command line -----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcox", description="Exact verification of twisted quantum Serre relations.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify", help="run the identity sweep")
    p.add_argument("--check", help=f"comma-separated subset of: {','.join(CHECKS)}")
    p.add_argument("--family", help="Cartan family letter A-G")
    p.add_argument("--rank", type=int)
    p.add_argument("--all-finite", action="store_true", help="every finite type up to --max-rank")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--perm", help="one-line permutation, e.g. 2,1,3")
    p.add_argument("--all-perms", action="store_true", help="all l! orders, also for rank >= 5")
    p.add_argument("--order", type=int, default=16, help="series truncation order N")
    p.add_argument("--rmax", type=int, default=12)
    p.add_argument("--level", type=int, default=0, help="integer level k")
    p.add_argument("--jobs", type=int, help="worker processes (fallback: QCOX_JOBS)")
    p.add_argument("--json", action="store_true")
    return parser


def config_from_args(argv: Sequence[str]) -> SuiteConfig:
    args = build_parser().parse_args(argv)
    checks = CHECKS if args.check is None else tuple(x.strip() for x in args.check.split(",") if x.strip())
    if (args.family is None) != (args.rank is None):
        raise UsageError("--family and --rank go together")
    if args.family is not None and args.all_finite:
        raise UsageError("--family/--rank and --all-finite are exclusive")
    if args.perm is not None and args.all_perms:
        raise UsageError("--perm and --all-perms are exclusive")
    data = None
    try:
        if args.family is not None:
            data = (make_cartan(args.family.upper(), args.rank).name,)
        elif args.all_finite:
            data = tuple(d.name for d in all_finite(args.max_rank))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    perm = None
    if args.perm is not None:
        if data is None or len(data) != 1:
            raise UsageError("--perm needs a single datum via --family/--rank")
        try:
            perm = coxeter.check_perm(coxeter.parse_perm(args.perm), parse_datum(data[0]).rank)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    jobs = args.jobs
    if jobs is None:
        env = os.environ.get("QCOX_JOBS", "1")
        try:
            jobs = int(env)
        except ValueError:
            raise UsageError(f"QCOX_JOBS={env!r} is not an integer") from None
    return SuiteConfig(
        checks=checks, data=data, perm=perm, all_perms=args.all_perms, order=args.order,
        rmax=args.rmax, level=args.level, jobs=jobs, fmt="json" if args.json else "text",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = config_from_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"qcox: usage error: {exc}\n")
        return 2
    return emit_report(run_suite(config), config.fmt)


if __name__ == "__main__":
    sys.exit(main())
