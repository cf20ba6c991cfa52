"""Command-line surface: evaluation, enumeration, verification suites.

Reports are deterministic (fixed ordering, seeded randomness, no
timestamps): identical invocations produce byte-identical output.
Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .exact import (
    RationalMatrix,
    as_rational,
    det,
    format_bigfloat,
    format_rational,
    pfaffian,
    pochhammer,
)
from .graphs import (
    KINGMAN,
    SCHUR,
    YOUNG,
    covers_up,
    dim,
    dim_closed_form,
    dims_csv,
    edge_multiplicity,
    jack_multiplicity_poly,
    level,
    parse_kind,
)
from .harmonic import (
    FamilyError,
    HarmonicFamily,
    YoungZZ,
    check_harmonicity,
    lattice_bound_approx,
    level_measure,
    parse_family,
)
from .interp import (
    factorial_monomial_eval,
    gauss_2f1_check,
    monomial_eval,
    pstar_eval,
    schur_eval,
    schur_t_functional,
    shifted_schur_at_diagram,
    shifted_schur_eval,
)
from .boundary import (
    ThomaPoint,
    convergence_experiment,
    density_spec,
    kingman_kernel,
    selberg_verify,
    young_kernel,
)
from .partitions import Partition, partitions_of, partitions_up_to
from .series import poly_eval

REPORT_SCHEMA = "harmgraphs-report/1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class Report:
    command: str
    rows: list[dict] = field(default_factory=list)

    def add(self, check: str, instance: str, lhs, rhs, ok: bool) -> None:
        self.rows.append(
            {
                "check": check,
                "instance": instance,
                "lhs": _encode(lhs),
                "rhs": _encode(rhs),
                "ok": bool(ok),
            }
        )

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r["ok"])

    @property
    def failed(self) -> int:
        return sum(1 for r in self.rows if not r["ok"])

    def to_json(self) -> str:
        doc = {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "rows": self.rows,
            "summary": {"passed": self.passed, "failed": self.failed},
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["check", "instance", "lhs", "rhs", "ok"])
        writer.writeheader()
        for row in self.rows:
            writer.writerow(row)
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for row in self.rows:
            mark = "PASS" if row["ok"] else "FAIL"
            detail = ""
            if row["lhs"] != "" or row["rhs"] != "":
                detail = f"  lhs={row['lhs']} rhs={row['rhs']}"
            lines.append(f"{mark}  {row['check']}  {row['instance']}{detail}")
        lines.append(f"summary: {self.passed} passed, {self.failed} failed")
        return "\n".join(lines) + "\n"


def _encode(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def _emit(report: Report, args) -> int:
    fmt = getattr(args, "out", None) or "text"
    if fmt == "json":
        payload = report.to_json()
    elif fmt == "csv":
        payload = report.to_csv()
    else:
        payload = report.to_text()
    output = getattr(args, "output", None)
    if output:
        with open(output, "w") as handle:
            handle.write(payload)
        print(f"wrote {output}")
        if fmt == "text":
            print(f"summary: {report.passed} passed, {report.failed} failed")
    else:
        sys.stdout.write(payload)
    return EXIT_OK if report.failed == 0 else EXIT_CHECK_FAILED


def _partition(text: str) -> Partition:
    return Partition.parse(text)


# ---------------------------------------------------------------------------
# plain evaluation commands
# ---------------------------------------------------------------------------

def cmd_phi(args) -> int:
    family = parse_family(args.family)
    value = family.phi(_partition(args.mu))
    print(format_rational(value))
    return EXIT_OK


def cmd_measure(args) -> int:
    family = parse_family(args.family)
    measure = level_measure(family, args.n)
    report = Report(command="measure")
    for lam, weight in measure.weights:
        report.add("measure", f"n={args.n} lambda={lam}", weight, None, True)
    total = measure.total()
    report.add("normalization", f"n={args.n} total", total, Fraction(1), total == 1)
    return _emit(report, args)


def cmd_check_harmonic(args) -> int:
    family = parse_family(args.family)
    report = _harmonicity_report(family, args.levels)
    return _emit(report, args)


def _harmonicity_report(family: HarmonicFamily, levels: int) -> Report:
    report = Report(command="check-harmonic")
    hc = check_harmonicity(family, levels)
    bad = {v.mu: v for v in hc.violations}
    for n in range(levels):
        for mu in level(n, family.kind):
            v = bad.get(mu)
            if v is None:
                report.add("harmonicity", f"{family.spec_string()} mu={mu}", None, None, True)
            else:
                report.add("harmonicity", f"{family.spec_string()} mu={mu}", v.lhs, v.rhs, False)
    for n in range(1, levels + 1):
        total = level_measure(family, n).total()
        report.add("normalization", f"{family.spec_string()} n={n}", total, Fraction(1), total == 1)
    for n in range(levels + 1):
        for mu in level(n, family.kind):
            val = family.phi(mu)
            report.add(
                "positivity", f"{family.spec_string()} phi({mu})", val, None, val >= 0
            )
    return report


def cmd_eval(args) -> int:
    if args.what != "phi":
        raise FamilyError(f"unknown eval target {args.what!r}")
    return cmd_phi(args)


def cmd_dims(args) -> int:
    kind = parse_kind(args.kind)
    sys.stdout.write(dims_csv(args.level, kind, max_length=args.max_length))
    return EXIT_OK


def cmd_density(args) -> int:
    spec = density_spec(args.graph, _partition(getattr(args, "lambda")))
    if args.graph == "gamma":
        alpha_text, _, beta_text = args.at.partition(";")
        point = (
            tuple(as_rational(s) for s in alpha_text.split(",")),
            tuple(as_rational(s) for s in beta_text.split(",")),
        )
    else:
        point = tuple(as_rational(s) for s in args.at.split(","))
    print(format_rational(spec.density(point)))
    return EXIT_OK


def cmd_integral_verify(args) -> int:
    result = selberg_verify(args.graph, _partition(getattr(args, "lambda")), _partition(args.mu))
    report = Report(command="integral-verify")
    report.add(
        f"selberg-{args.graph}",
        f"lambda={result.lam} mu={result.mu}",
        result.lhs,
        result.rhs,
        result.equal,
    )
    return _emit(report, args)


def cmd_converge(args) -> int:
    family = parse_family(args.family)
    n_values = [int(s) for s in args.n.split(",")]
    rep = convergence_experiment(
        family,
        n_values,
        resolution=args.resolution,
        interior_fraction=as_rational(args.interior),
        ratio_tolerance=args.ratio_tol,
    )
    report = Report(command="converge")
    for row in rep.rows:
        report.add(
            "convergence-mass", f"{family.spec_string()} n={row.n}", Fraction(1), None, row.mass_is_one
        )
        report.add(
            "convergence-ratio",
            f"{family.spec_string()} n={row.n} interior={row.interior_points}",
            format_bigfloat(row.max_ratio_error),
            f"tol={rep.ratio_tolerance}",
            row.max_ratio_error <= rep.ratio_tolerance or row.interior_points == 0,
        )
        report.add(
            "convergence-distance",
            f"{family.spec_string()} n={row.n} bins={args.resolution}",
            format_bigfloat(row.binned_distance),
            None,
            True,
        )
    report.add(
        "convergence-monotone",
        f"{family.spec_string()} n={','.join(str(r.n) for r in rep.rows)}",
        None,
        None,
        rep.distances_decreasing,
    )
    return _emit(report, args)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _suite_harmonicity(args, report: Report) -> None:
    family = parse_family(args.family)
    sub = _harmonicity_report(family, args.levels)
    report.rows.extend(sub.rows)


def _suite_interpolation(args, report: Report) -> None:
    cap = args.max_size
    for n in range(1, cap + 1):
        for mu in partitions_of(n):
            for m in range(n + 1):
                for lam in partitions_of(m):
                    if lam == mu:
                        continue
                    s_val = shifted_schur_at_diagram(mu, lam)
                    m_val = factorial_monomial_eval(
                        mu, tuple(Fraction(x) for x in lam.parts) or (Fraction(0),)
                    )
                    report.add(
                        "interpolation-vanishing",
                        f"s*/m* mu={mu} lambda={lam}",
                        s_val,
                        m_val,
                        s_val == 0 and m_val == 0,
                    )
        for mu in partitions_of(n, strict=True):
            for m in range(n + 1):
                for lam in partitions_of(m, strict=True):
                    if lam == mu:
                        continue
                    val = pstar_eval(mu, tuple(Fraction(x) for x in lam.parts))
                    report.add(
                        "interpolation-vanishing",
                        f"P* mu={mu} lambda={lam}",
                        val,
                        Fraction(0),
                        val == 0,
                    )


def _random_point(rng: random.Random, size: int) -> tuple[Fraction, ...]:
    return tuple(
        Fraction(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(size)
    )


def _suite_pieri(args, report: Report) -> None:
    rng = random.Random(args.seed)
    cap = args.max_size
    for trial in range(args.points):
        x = _random_point(rng, cap + 1)
        p1 = sum(x, Fraction(0))
        for n in range(cap + 1):
            for mu in partitions_of(n):
                lhs = schur_eval(mu, x) * p1
                rhs = sum(
                    (schur_eval(lam, x) for lam in covers_up(mu, YOUNG)), Fraction(0)
                )
                report.add(
                    "pieri-classical", f"schur mu={mu} point#{trial}", lhs, rhs, lhs == rhs
                )
                lhs = monomial_eval(mu, x) * p1
                rhs = sum(
                    (
                        edge_multiplicity(mu, lam, KINGMAN) * monomial_eval(lam, x)
                        for lam in covers_up(mu, KINGMAN)
                    ),
                    Fraction(0),
                )
                report.add(
                    "pieri-classical", f"monomial mu={mu} point#{trial}", lhs, rhs, lhs == rhs
                )
                lhs = shifted_schur_eval(mu, x) * p1
                rhs = n * shifted_schur_eval(mu, x) + sum(
                    (shifted_schur_eval(lam, x) for lam in covers_up(mu, YOUNG)),
                    Fraction(0),
                )
                report.add(
                    "pieri-interpolation", f"s* mu={mu} point#{trial}", lhs, rhs, lhs == rhs
                )
                lhs = factorial_monomial_eval(mu, x) * p1
                rhs = n * factorial_monomial_eval(mu, x) + sum(
                    (
                        edge_multiplicity(mu, lam, KINGMAN) * factorial_monomial_eval(lam, x)
                        for lam in covers_up(mu, KINGMAN)
                    ),
                    Fraction(0),
                )
                report.add(
                    "pieri-interpolation", f"m* mu={mu} point#{trial}", lhs, rhs, lhs == rhs
                )
            for mu in partitions_of(n, strict=True):
                lhs = pstar_eval(mu, x) * p1
                rhs = n * pstar_eval(mu, x) + sum(
                    (pstar_eval(lam, x) for lam in covers_up(mu, SCHUR)), Fraction(0)
                )
                report.add(
                    "pieri-interpolation", f"P* mu={mu} point#{trial}", lhs, rhs, lhs == rhs
                )


def _suite_dimensions(args, report: Report) -> None:
    for n in range(args.max_size + 1):
        for lam in partitions_of(n):
            rec = dim(Partition(), lam, YOUNG)
            closed = dim_closed_form(lam, YOUNG)
            report.add("dimension-oracle", f"young {lam}", rec, closed, rec == closed)
            rec = dim(Partition(), lam, KINGMAN)
            closed = dim_closed_form(lam, KINGMAN)
            report.add("dimension-oracle", f"kingman {lam}", rec, closed, rec == closed)
    for n in range(args.strict_max_size + 1):
        for lam in partitions_of(n, strict=True):
            rec = dim(Partition(), lam, SCHUR)
            closed = dim_closed_form(lam, SCHUR)
            report.add("dimension-oracle", f"schur {lam}", rec, closed, rec == closed)


def _suite_dimension_ratio(args, report: Report) -> None:
    for nn in range(args.mu_max + 1):
        for mu in partitions_of(nn):
            for n_lam in range(nn, args.lam_max + 1):
                for lam in partitions_of(n_lam):
                    d = dim(mu, lam, YOUNG)
                    d0 = dim(Partition(), lam, YOUNG)
                    lhs = d / d0
                    rhs = (
                        (-1) ** nn
                        * shifted_schur_at_diagram(mu, lam)
                        / pochhammer(Fraction(-n_lam), nn)
                    )
                    report.add(
                        "dimension-ratio", f"mu={mu} lambda={lam}", lhs, rhs, lhs == rhs
                    )


def _suite_selberg(args, report: Report) -> None:
    work = []
    if getattr(args, "lam", None):
        work.append((args.graph, _partition(args.lam), _partition(args.mu or "0")))
    else:
        work = _selberg_sweep(args.graph, args.max_size)
    def run(item):
        graph, lam, mu = item
        return selberg_verify(graph, lam, mu)
    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(run, work))
    else:
        results = [run(item) for item in work]
    for res in results:
        report.add(
            f"selberg-{res.graph}",
            f"lambda={res.lam} mu={res.mu}",
            res.lhs,
            res.rhs,
            res.equal,
        )


def _selberg_sweep(graph: str, max_size: int) -> list[tuple[str, Partition, Partition]]:
    work: list[tuple[str, Partition, Partition]] = []
    if graph in ("young", "all"):
        for l in (2, 3):
            for ln in range(l, max_size + 1):
                for lam in partitions_of(ln):
                    if lam.length != l:
                        continue
                    work.append(("young", lam, Partition()))
                    for mn in range(1, max_size + 1):
                        for mu in partitions_of(mn, max_length=l):
                            work.append(("young", lam, mu))
    if graph in ("kingman", "all"):
        for l in (1, 2, 3):
            for ln in range(l, max_size + 1):
                for lam in partitions_of(ln):
                    if lam.length != l:
                        continue
                    work.append(("kingman", lam, Partition()))
                    for mn in range(1, max_size + 1):
                        for mu in partitions_of(mn, max_length=l):
                            work.append(("kingman", lam, mu))
    if graph in ("schur", "all"):
        for l in (2, 3):
            for ln in range(l, max_size + 1):
                for lam in partitions_of(ln, strict=True):
                    if lam.length != l:
                        continue
                    work.append(("schur", lam, Partition()))
                    for mn in range(1, max_size + 1):
                        for mu in partitions_of(mn, strict=True):
                            if mu.length == l:
                                work.append(("schur", lam, mu))
    if graph in ("gamma", "all"):
        for d in (1, 2):
            for ln in range(1, max_size + 1):
                for lam in partitions_of(ln):
                    if lam.depth != d:
                        continue
                    work.append(("gamma", lam, Partition()))
                    for mn in range(1, max_size + 1):
                        for mu in partitions_of(mn):
                            if mu.depth == d:
                                work.append(("gamma", lam, mu))
    return work


def _suite_staircase(args, report: Report) -> None:
    for k in range(1, args.k_max + 1):
        stair = Partition(range(k, 0, -1))
        t = Fraction(-k * (k + 1), 2)
        spec = schur_t_functional(t, 2 * args.max_size + 4)
        point = tuple(Fraction(p) for p in stair.parts)
        for n in range(args.max_size + 1):
            for mu in partitions_of(n, strict=True):
                lhs = pstar_eval(mu, spec)
                rhs = pstar_eval(mu, point)
                report.add(
                    "staircase",
                    f"t={t} staircase={stair} mu={mu}",
                    lhs,
                    rhs,
                    lhs == rhs,
                )


def _suite_pfaffian(args, report: Report) -> None:
    rng = random.Random(args.seed)
    for trial in range(args.points):
        size = 2 * rng.randint(1, args.max_size // 2)
        entries = [[Fraction(0)] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                val = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                entries[i][j] = val
                entries[j][i] = -val
        m = RationalMatrix(entries)
        pf = pfaffian(m)
        dd = det(m)
        report.add(
            "pfaffian-square", f"size={size} trial#{trial}", pf * pf, dd, pf * pf == dd
        )


def _suite_kernels(args, report: Report) -> None:
    rng = random.Random(args.seed)
    points = []
    for _ in range(args.points):
        a1 = Fraction(rng.randint(1, 4), 12)
        a2 = Fraction(rng.randint(0, 3), 16)
        b1 = Fraction(rng.randint(0, 3), 16)
        alpha = tuple(sorted((a1, a2), reverse=True))
        points.append(ThomaPoint(alpha, (b1,) if b1 else ()))
    for idx, om in enumerate(points):
        for n in range(args.levels):
            for mu in partitions_of(n):
                lhs = young_kernel(mu, om)
                rhs = sum(
                    (young_kernel(lam, om) for lam in covers_up(mu, YOUNG)), Fraction(0)
                )
                report.add(
                    "kernel-harmonicity", f"young point#{idx} mu={mu}", lhs, rhs, lhs == rhs
                )
        om_alpha = ThomaPoint(om.alpha)
        for n in range(args.levels):
            for mu in partitions_of(n):
                lhs = kingman_kernel(mu, om_alpha)
                rhs = sum(
                    (
                        edge_multiplicity(mu, lam, KINGMAN) * kingman_kernel(lam, om_alpha)
                        for lam in covers_up(mu, KINGMAN)
                    ),
                    Fraction(0),
                )
                report.add(
                    "kernel-harmonicity", f"kingman point#{idx} mu={mu}", lhs, rhs, lhs == rhs
                )


def _suite_gauss(args, report: Report) -> None:
    triples = [
        (Fraction(1, 2), Fraction(1, 3), Fraction(25)),
        (Fraction(-3), Fraction(5, 7), Fraction(9, 2)),
        (Fraction(2), Fraction(3, 4), Fraction(31, 2)),
        (Fraction(-1, 5), Fraction(7, 3), Fraction(18)),
        (Fraction(5, 4), Fraction(1, 6), Fraction(22, 3)),
    ]
    for a, b, c in triples:
        ok = gauss_2f1_check(a, b, c, tol=args.tol, precision=args.precision)
        report.add(
            "gauss-summation", f"a={a} b={b} c={c} tol={args.tol}", None, None, ok
        )


def _suite_degeneration(args, report: Report) -> None:
    from .harmonic import JackZZ

    y = YoungZZ(Fraction(3), Fraction(2))
    j = JackZZ(Fraction(3), Fraction(2), Fraction(1))
    for mu in partitions_up_to(args.levels):
        a = j.phi(mu)
        b = y.phi(mu)
        report.add("jack-young-degeneration", f"mu={mu}", a, b, a == b)
    for n in range(args.levels + 1):
        for mu in partitions_of(n):
            for lam in covers_up(mu, YOUNG):
                num, den = jack_multiplicity_poly(mu, lam)
                at_zero = poly_eval(num, 0) / poly_eval(den, 0)
                kappa0 = edge_multiplicity(mu, lam, KINGMAN)
                report.add(
                    "jack-kingman-degeneration",
                    f"{mu} -> {lam}",
                    at_zero,
                    kappa0,
                    at_zero == kappa0,
                )


def _suite_lattice(args, report: Report) -> None:
    f1 = YoungZZ(Fraction(1), Fraction(5, 4))
    f2 = YoungZZ(Fraction(5, 6), Fraction(1, 6))
    for mu in (Partition(), Partition([1])):
        prev_join = None
        prev_meet = None
        for n in range(mu.size + 1, args.levels + 1):
            join = lattice_bound_approx(f1, f2, mu, n, "join")
            meet = lattice_bound_approx(f1, f2, mu, n, "meet")
            bound = f1.phi(mu) + f2.phi(mu)
            ok = join <= bound and meet >= 0
            if prev_join is not None:
                ok = ok and join >= prev_join and meet <= prev_meet
            report.add(
                "lattice-bounds", f"mu={mu} n={n}", join, meet, ok
            )
            prev_join, prev_meet = join, meet
        for n in range(mu.size + 1, args.levels + 1):
            same = lattice_bound_approx(f1, f1, mu, n, "join")
            report.add(
                "lattice-idempotent", f"mu={mu} n={n}", same, f1.phi(mu), same == f1.phi(mu)
            )


_SUITES = {
    "harmonicity": _suite_harmonicity,
    "interpolation": _suite_interpolation,
    "pieri": _suite_pieri,
    "dimensions": _suite_dimensions,
    "dimension-ratio": _suite_dimension_ratio,
    "selberg": _suite_selberg,
    "staircase": _suite_staircase,
    "pfaffian": _suite_pfaffian,
    "kernels": _suite_kernels,
    "gauss": _suite_gauss,
    "degeneration": _suite_degeneration,
    "lattice": _suite_lattice,
}


def cmd_verify(args) -> int:
    if args.suite not in _SUITES:
        print(f"unknown suite {args.suite!r}; available: {', '.join(sorted(_SUITES))}", file=sys.stderr)
        return EXIT_USAGE
    report = Report(command=f"verify {args.suite}")
    _SUITES[args.suite](args, report)
    return _emit(report, args)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", choices=["text", "json", "csv"], default=None, help="report format")
    p.add_argument("--output", default=None, help="write the report to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmgraphs",
        description="Exact harmonic functions on multiplicative graded graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="evaluate a family at one partition")
    p.add_argument("--family", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("eval", help="evaluate (alias surface: eval phi ...)")
    p.add_argument("what", choices=["phi"])
    p.add_argument("--family", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("measure", help="level measure of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    _add_output_options(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("check-harmonic", help="exact harmonicity/normalization/positivity")
    p.add_argument("--family", required=True)
    p.add_argument("--levels", type=int, default=8)
    _add_output_options(p)
    p.set_defaults(func=cmd_check_harmonic)

    p = sub.add_parser("dims", help="CSV dump of one level's dimensions")
    p.add_argument("--kind", required=True, help="young | jack(theta) | kingman | schur")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--max-length", type=int, default=None)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("density", help="evaluate a face density at a rational point")
    p.add_argument("--graph", required=True, choices=["young", "kingman", "schur", "gamma"])
    p.add_argument("--lambda", required=True)
    p.add_argument("--at", required=True, help="comma-separated coordinates; gamma: alpha;beta")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("integral-verify", help="one exact integral identity, both sides")
    p.add_argument("--graph", required=True, choices=["young", "kingman", "schur", "gamma"])
    p.add_argument("--lambda", required=True)
    p.add_argument("--mu", default="0")
    _add_output_options(p)
    p.set_defaults(func=cmd_integral_verify)

    p = sub.add_parser("converge", help="level measures against the limit density")
    p.add_argument("--family", required=True)
    p.add_argument("--n", required=True, help="comma-separated level list")
    p.add_argument("--resolution", type=int, default=20)
    p.add_argument("--interior", default="1/5", help="interior separation fraction")
    p.add_argument("--ratio-tol", type=float, default=0.05)
    _add_output_options(p)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=", ".join(sorted(_SUITES)))
    p.add_argument("--family", default="young-zz:e=3,t=2")
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--strict-max-size", type=int, default=8)
    p.add_argument("--mu-max", type=int, default=3)
    p.add_argument("--lam-max", type=int, default=6)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--graph", default="all")
    p.add_argument("--lam", "--lambda", dest="lam", default=None, help="single identity: lambda")
    p.add_argument("--mu", default=None, help="single identity: mu")
    p.add_argument("--points", type=int, default=5)
    p.add_argument("--seed", type=int, default=20240801)
    p.add_argument("--tol", type=float, default=1e-20)
    p.add_argument("--precision", type=int, default=128)
    p.add_argument("--workers", type=int, default=1)
    _add_output_options(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FamilyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
