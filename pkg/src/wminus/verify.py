"""Property suites and relation reports.

Each suite returns a list of :class:`~wminus.trace.RelationReport`, sorted
by instance id.  Sampling is driven by ``random.Random(seed)`` so two runs
with the same bounds and seed produce identical reports.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources
from typing import Callable, Iterable

from .coeff import SQRT2, ZERO
from .dims import (
    distinct_partition_count,
    multiset_generator_count,
    odd_partition_count,
    series_coefficients,
)
from .fock import (
    FockVector,
    act_env,
    act_lie,
    partitions_upto,
    render_fock,
    representation_defects,
)
from .heis import embed_heis, h, heis_bracket
from .trace import (
    EXPECTED_MISMATCH,
    MATCH,
    MISMATCH,
    NOT_EXPRESSIBLE,
    RelationReport,
    calibrate_phi,
    check_relation,
    default_ledger,
    leading_bidegree,
    parse_trace,
    phi_image,
)
from .wenv import C, W00, EnvElement, multiply, pbw_normal_form, quotient_reduce
from .wlie import (
    LieElement,
    bracket,
    central,
    is_in_wminus,
    render_lie,
    sigma_apply,
    w,
    wminus_basis_element,
)

__all__ = ["Bounds", "SUITES", "run_suite", "load_manifest", "ManifestEntry", "render_reports", "exit_code"]

SUITES = ("lie", "pbw", "fock", "heis", "gen", "dims", "phi")


@dataclass(frozen=True)
class Bounds:
    max_t: int = 6
    max_d: int = 5
    samples: int = 500
    pbw_triples: int = 240
    fock_size: int = 10
    phi_size: int = 8
    max_rank: int = 9
    max_dot: int = 9
    heis_max: int = 11
    gen_max: int = 3
    seed: int = 0

    def check(self):
        for name, value in self.__dict__.items():
            if name != "seed" and value <= 0:
                raise ValueError(f"bound {name} must be positive")
        return self


@dataclass(frozen=True)
class ManifestEntry:
    id: str
    lhs: str
    rhs: str
    mode: str
    expect: str
    note: str = ""


def load_manifest(path: str | None = None) -> list:
    """Read a relation manifest (``id | lhs | rhs | mode | expect | note`` lines)."""
    if path is None:
        text = resources.files("wminus").joinpath("data/phi_manifest.txt").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) < 5:
            raise ValueError(f"manifest line {lineno}: expected at least 5 '|'-separated fields")
        ident, lhs, rhs, mode, expect = cols[:5]
        note = cols[5] if len(cols) > 5 else ""
        if mode not in ("exact", "leading"):
            raise ValueError(f"manifest line {lineno}: mode must be exact or leading")
        if expect not in (MATCH, EXPECTED_MISMATCH, NOT_EXPRESSIBLE):
            raise ValueError(f"manifest line {lineno}: unknown expectation {expect!r}")
        out.append(ManifestEntry(ident, lhs, rhs, mode, expect, note))
    ids = [e.id for e in out]
    if len(set(ids)) != len(ids):
        raise ValueError("manifest ids must be unique")
    return out


# helpers -----------------------------------------------------------------


def _report(suite, instance, ok, difference="", detail="", expected=False, seconds=0.0):
    if ok:
        status = MATCH
    else:
        status = EXPECTED_MISMATCH if expected else MISMATCH
    return RelationReport(suite, instance, status, difference, detail, seconds, expected)


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def _monomials(max_t, max_d):
    return [(k, l) for k in range(-max_t, max_t + 1) for l in range(max_d + 1)]


def _wminus_generators(max_j, max_l):
    return [(j, l) for j in range(-max_j, max_j + 1) for l in range(max_l + 1) if (j + l) % 2 == 1]


def _reduce_lie(x: LieElement, c_value: int) -> LieElement:
    """Drop ``w[0,0]`` and set ``C`` to ``c_value`` (0 or 1)."""
    terms = {k: v for k, v in x.terms.items() if k != (0, 0)}
    return LieElement(terms, x.central if c_value else ZERO)


# lie ---------------------------------------------------------------------


def suite_lie(b: Bounds) -> list:
    rng = random.Random(b.seed)
    mons = _monomials(b.max_t, b.max_d)
    out = []

    def jacobi():
        bad = []
        for _ in range(b.samples):
            x, y, z = (w(*rng.choice(mons)) for _ in range(3))
            s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
            if not s.is_zero():
                bad.append((x, y, z, s))
        return bad

    bad, secs = _timed(jacobi)
    out.append(_report("lie", f"jacobi sampled={b.samples}", not bad,
                       render_lie(bad[0][3]) if bad else "", f"{len(bad)} failing triples", seconds=secs))

    def antisym():
        bad = []
        for _ in range(b.samples):
            x, y = (w(*rng.choice(mons)) for _ in range(2))
            s = bracket(x, y) + bracket(y, x)
            if not s.is_zero():
                bad.append(s)
        return bad

    bad, secs = _timed(antisym)
    out.append(_report("lie", f"antisymmetry sampled={b.samples}", not bad,
                       render_lie(bad[0]) if bad else "", f"{len(bad)} failing pairs", seconds=secs))

    gens = _wminus_generators(min(b.max_t, 4), min(b.max_d, 4))

    def closure():
        bad = []
        for g1, g2 in itertools.product(gens, gens):
            z = bracket(wminus_basis_element(*g1), wminus_basis_element(*g2))
            if not is_in_wminus(z):
                bad.append((g1, g2))
        return bad

    bad, secs = _timed(closure)
    out.append(_report("lie", "closure of W- basis", not bad, str(bad[:1]) if bad else "",
                       f"{len(gens) ** 2} pairs", seconds=secs))

    def sigma_sq():
        bad = [m for m in mons if sigma_apply(sigma_apply(w(*m))) != w(*m)]
        if sigma_apply(sigma_apply(central())) != central():
            bad.append("C")
        return bad

    bad, secs = _timed(sigma_sq)
    out.append(_report("lie", "sigma squared is the identity", not bad, str(bad[:1]) if bad else "",
                       f"{len(mons) + 1} elements", seconds=secs))

    def fixed():
        return [g for g in gens if -sigma_apply(wminus_basis_element(*g)) != wminus_basis_element(*g)]

    bad, secs = _timed(fixed)
    out.append(_report("lie", "minus sigma fixes the basis family", not bad, str(bad[:1]) if bad else "",
                       f"{len(gens)} elements", seconds=secs))

    small = _monomials(min(b.max_t, 4), min(b.max_d, 4))

    def reversal():
        bad = {True: 0, False: 0}
        total = {True: 0, False: 0}
        for a, c in itertools.product(small, small):
            x, y = w(*a), w(*c)
            zero = a[0] + c[0] == 0
            total[zero] += 1
            if sigma_apply(bracket(x, y)) != bracket(sigma_apply(y), sigma_apply(x)):
                bad[zero] += 1
        return bad, total

    (bad, total), secs = _timed(reversal)
    out.append(_report("lie", "sigma reverses brackets, nonzero total t-degree", not bad[False], "",
                       f"{bad[False]} of {total[False]} pairs fail", seconds=secs))
    # no choice of signs on w[0,0] and C makes sigma intertwine the cocycle here
    out.append(_report("lie", "sigma reverses brackets, total t-degree 0", not bad[True], "",
                       f"{bad[True]} of {total[True]} pairs fail in the w[0,0] and C terms", expected=True))

    membership = (is_in_wminus(w(2, 1)), is_in_wminus(w(2, 1) + w(2, 0)))
    out.append(_report("lie", "membership example", membership == (False, True), "",
                       f"w[2,1] in W-: {membership[0]}, w[2,1] + w[2,0] in W-: {membership[1]}"))
    psi = bracket(w(2, 1), w(-2, 1)).central
    out.append(_report("lie", "cocycle example t^2 D with t^-2 D", psi == -1, "", f"central term {psi}"))
    return out


# pbw ---------------------------------------------------------------------


def suite_pbw(b: Bounds) -> list:
    rng = random.Random(b.seed + 1)
    gens = _wminus_generators(4, 3) + [C, W00]
    out = []

    def confluence():
        bad = []
        for _ in range(b.pbw_triples):
            a, c, d = (EnvElement.generator(rng.choice(gens)) for _ in range(3))
            left = multiply(multiply(a, c), d)
            right = multiply(a, multiply(c, d))
            if left != right:
                bad.append(left - right)
        return bad

    bad, secs = _timed(confluence)
    out.append(_report("pbw", f"confluence triples={b.pbw_triples}", not bad,
                       str(bad[0]) if bad else "", f"{len(bad)} failing triples", seconds=secs))

    def words():
        bad = []
        for _ in range(max(20, b.pbw_triples // 4)):
            x = EnvElement({tuple(rng.choice(gens) for _ in range(rng.randint(1, 3))): rng.randint(-3, 3) or 1})
            y = EnvElement({tuple(rng.choice(gens) for _ in range(rng.randint(1, 3))): rng.randint(-3, 3) or 1})
            z = EnvElement.generator(rng.choice(gens))
            x, y = multiply(x, EnvElement.unit()), multiply(y, EnvElement.unit())
            if multiply(multiply(x, y), z) != multiply(x, multiply(y, z)):
                bad.append((x, y, z))
        return bad

    bad, secs = _timed(words)
    out.append(_report("pbw", "associativity on random words", not bad, "", f"{len(bad)} failures", seconds=secs))

    def commutators():
        bad = []
        lie_gens = _wminus_generators(3, 3)
        for g1, g2 in itertools.product(lie_gens, lie_gens):
            a, c = EnvElement.generator(g1), EnvElement.generator(g2)
            lhs = multiply(a, c) - multiply(c, a)
            rhs = EnvElement.from_lie(bracket(wminus_basis_element(*g1), wminus_basis_element(*g2)))
            if lhs != rhs:
                bad.append((g1, g2))
        return bad

    bad, secs = _timed(commutators)
    out.append(_report("pbw", "commutator of generators equals the Lie bracket", not bad,
                       str(bad[:1]) if bad else "", seconds=secs))

    nf = pbw_normal_form([(1, 0), (-1, 0)])
    out.append(_report("pbw", "normal form b[1,0]*b[-1,0]", str(nf) == "1*C + 1*b[-1,0]*b[1,0]", "", str(nf)))
    red = quotient_reduce(nf)
    out.append(_report("pbw", "quotient reduction is idempotent", quotient_reduce(red) == red, "", str(red)))
    return out


# fock --------------------------------------------------------------------


def suite_fock(b: Bounds) -> list:
    rng = random.Random(b.seed + 2)
    out = []
    bad, secs = _timed(lambda: representation_defects(b.max_t, b.max_d, b.fock_size))
    out.append(_report(
        "fock", f"representation t<={b.max_t} d<={b.max_d} size<={b.fock_size}", not bad,
        str(bad[:3]) if bad else "", f"{(len(_monomials(b.max_t, b.max_d))) ** 2} pairs, integer path",
        seconds=secs,
    ))

    mons = _monomials(min(b.max_t, 3), min(b.max_d, 3))
    parts = partitions_upto(min(b.fock_size, 5))

    def exact_sample():
        bad = []
        for _ in range(60):
            x, y = w(*rng.choice(mons)), w(*rng.choice(mons))
            v = FockVector.basis(rng.choice(parts), SQRT2 + 1)
            lhs = act_lie(x, act_lie(y, v)) - act_lie(y, act_lie(x, v))
            if lhs != act_lie(bracket(x, y), v):
                bad.append((x, y, v))
        return bad

    bad, secs = _timed(exact_sample)
    out.append(_report("fock", "representation exact-path sample=60", not bad, "", f"{len(bad)} failures", seconds=secs))

    gens = _wminus_generators(3, 3) + [C, W00]

    def homomorphism():
        bad = []
        for _ in range(40):
            a = EnvElement({tuple(rng.choice(gens) for _ in range(rng.randint(1, 2))): 1})
            c = EnvElement({tuple(rng.choice(gens) for _ in range(rng.randint(1, 2))): 1})
            a, c = multiply(a, EnvElement.unit()), multiply(c, EnvElement.unit())
            v = FockVector.basis(rng.choice(parts))
            if act_env(multiply(a, c), v) != act_env(a, act_env(c, v)):
                bad.append((a, c, v))
        return bad

    bad, secs = _timed(homomorphism)
    out.append(_report("fock", "enveloping action is multiplicative sample=40", not bad, "", seconds=secs))

    def charge():
        bad = []
        for (k, l), p in itertools.product(mons, parts):
            v = act_lie(w(k, l), FockVector.basis(p))
            if any(sum(q) != sum(p) - k for q in v.terms):
                bad.append(((k, l), p))
        return bad

    bad, secs = _timed(charge)
    out.append(_report("fock", "size shifts by minus the t-degree", not bad, str(bad[:1]) if bad else "", seconds=secs))

    vac = FockVector.basis(())
    out.append(_report("fock", "w[0,3] kills the vacuum", act_lie(w(0, 3), vac).is_zero(), "",
                       render_fock(act_lie(w(0, 3), vac))))
    one = act_env(EnvElement.generator((-1, 0)), vac)
    out.append(_report("fock", "b[-1,0] on the vacuum", str(one) == "1*[1]", "", str(one)))
    b_up, b_dn = EnvElement.generator((1, 0)), EnvElement.generator((-1, 0))
    comm = act_env(b_up, act_env(b_dn, vac)) - act_env(b_dn, act_env(b_up, vac))
    out.append(_report("fock", "[b[1,0], b[-1,0]] acts as 1 on the vacuum", comm == vac, "", str(comm)))
    return out


# heis --------------------------------------------------------------------


def suite_heis(b: Bounds) -> list:
    out = []
    odd = [n for n in range(-b.heis_max, b.heis_max + 1) if n % 2]

    def twisted():
        bad = []
        for p, q in itertools.product(odd, odd):
            lhs = bracket(w(p, 0), w(q, 0))
            rhs = central(p if p == -q else 0)
            if lhs != rhs:
                bad.append((p, q, lhs))
        return bad

    bad, secs = _timed(twisted)
    out.append(_report("heis", f"odd modes bracket |index|<={b.heis_max}", not bad,
                       str(bad[:1]) if bad else "", f"{len(odd) ** 2} pairs", seconds=secs))

    def homomorphism():
        bad = []
        for p, q in itertools.product(odd, odd):
            lhs = _reduce_lie(bracket(embed_heis(h(p)), embed_heis(h(q))), 1)
            rhs = central(heis_bracket(h(p), h(q)))
            if lhs != rhs:
                bad.append((p, q))
        return bad

    bad, secs = _timed(homomorphism)
    out.append(_report("heis", f"embedding is a homomorphism |index|<={b.heis_max}/2", not bad,
                       str(bad[:1]) if bad else "", seconds=secs))
    images = all(is_in_wminus(embed_heis(h(p))) for p in odd)
    out.append(_report("heis", "embedding lands in W-", images))
    half = heis_bracket(h(1), h(-1))
    out.append(_report("heis", "[h[1/2], h[-1/2]]", half == Fraction(1, 2), "", str(half)))
    return out


# gen ---------------------------------------------------------------------


def suite_gen(b: Bounds) -> list:
    out = []

    def cmp(instance, lhs, rhs, c_value=0, expected=False, leading=False):
        got = _reduce_lie(lhs, c_value)
        want = _reduce_lie(rhs, c_value)
        if leading:
            top = max((l for _, l in got.terms), default=-1)
            got = LieElement({k: v for k, v in got.terms.items() if k[1] == top})
            top = max((l for _, l in want.terms), default=-1)
            want = LieElement({k: v for k, v in want.terms.items() if k[1] == top})
        ok = got == want
        out.append(_report("gen", instance, ok, "" if ok else render_lie(got - want),
                           f"engine: {render_lie(got)}", expected=expected))

    cmp("vector [w[1,0], w[0,3]]", bracket(w(1, 0), w(0, 3)), w(1, 2, -3) + w(1, 1, -3) - w(1, 0))
    cmp("vector [w[-2,1] - w[-2,0], w[1,0]]", bracket(w(-2, 1) - w(-2, 0), w(1, 0)), w(-1, 0))
    for bb in range(b.gen_max + 1):
        cmp(f"top-odd-from-three b={bb}", bracket(w(1, 2 * bb), w(0, 3)), w(1, 2 * bb + 2, -3), leading=True)
    for a in range(1, b.gen_max + 1):
        for s in (1, -1):
            cmp(f"odd-from-even a={a} sign={s:+d}", bracket(w(2 * a * s, 1), w(1, 0)), w(2 * a * s + 1, 0))
    for a in range(b.gen_max + 1):
        for s in (1, -1):
            lhs = bracket(w(2 * a * s + 1, 0), w(1, 2) - w(1, 1))
            rhs = w(2 * a + 2, 1, -(4 * a + 2)) + w(2 * a + 2, 0, -(2 * a + 1) * (2 * a + 2))
            cmp(f"even-from-odd a={a} sign={s:+d}", lhs, rhs, expected=True)
    for bb in range(1, b.gen_max + 1):
        from math import comb

        rhs = LieElement({(0, i): comb(2 * bb, i) * (-1) ** (2 * bb - i + 1) for i in range(2 * bb)})
        cmp(f"zero-mode b={bb}", bracket(w(-1, 0), w(1, 2 * bb)), rhs)

    # action of the generators on the lowering modes, with C = 1
    for k in range(1, 5):
        cmp(f"action-row1 k={k}", bracket(w(1, 0), w(-k, 0)), central(1 if k == 1 else 0), c_value=1)
        cmp(f"action-row2 k={k}", bracket(w(-2, 1) - w(-2, 0), w(-k, 0)), w(-(k + 2), 0, k + 2),
            c_value=1, expected=True)
        cmp(f"action-row3 k={k}", bracket(w(2, 1) + w(2, 0), w(-k, 0)), w(2 - k, 0, -(k + 2)),
            c_value=1, expected=True)
        cmp(f"action-row4 k={k}", bracket(w(0, 3), w(-k, 0)),
            w(-k, 2, 3 * k) + w(-k, 1, -3 * k * k) + w(-k, 0, k ** 3), c_value=1, expected=True)
    return out


# dims --------------------------------------------------------------------


def suite_dims(b: Bounds) -> list:
    out = []
    table, secs = _timed(lambda: series_coefficients(b.max_rank, b.max_dot))
    grid = [(r, k) for r in range(b.max_rank + 1) for k in range(b.max_dot + 1)]
    bad = [(r, k) for r, k in grid if table[(r, k)] != multiset_generator_count(r, k)]
    out.append(_report("dims", f"series equals multiset count r<={b.max_rank} k<={b.max_dot}", not bad,
                       str(bad[:3]) if bad else "", f"{len(grid)} cells", seconds=secs))
    bad = [n for n in range(21) if odd_partition_count(n) != distinct_partition_count(n)]
    out.append(_report("dims", "odd parts equal distinct parts n<=20", not bad, str(bad) if bad else ""))
    mirror = series_coefficients(b.max_rank, b.max_dot, "<")
    bad = [(r, k) for r, k in grid if mirror[(-r, k)] != table[(r, k)]]
    out.append(_report("dims", "lowering table mirrors the raising table", not bad, str(bad[:3]) if bad else ""))
    ex = (table[(1, 1)], table[(0, 0)], table[(2, 2)], odd_partition_count(9))
    out.append(_report("dims", "examples (1,1) (0,0) (2,2) odd(9)", ex == (1, 1, 1, 8), "", str(ex)))
    return out


# phi ---------------------------------------------------------------------


def suite_phi(b: Bounds, manifest: Iterable[ManifestEntry] | None = None) -> list:
    out = []
    ledger = default_ledger()
    rep, secs = _timed(lambda: calibrate_phi(ledger))
    detail = "; ".join(f"{g} -> {v}" for g, v in rep.calibration.lines()) if rep.calibration else ""
    out.append(_report("phi", "calibration solve", rep.ok, "; ".join(rep.inconsistent), detail, seconds=secs))
    if rep.calibration is None:
        return out
    cal = rep.calibration
    for check in rep.checks:
        out.append(replace(check, suite="phi", instance=f"calibration core {check.instance}"))
    for gen, formula, member, direction, exact in rep.variants:
        ok = exact
        note = f"in W-: {member}; same direction: {direction}; equal: {exact}"
        out.append(_report("phi", f"printed image {gen} = {formula}", ok, "", note, expected=True))

    entries = list(manifest) if manifest is not None else load_manifest()
    for e in entries:
        for mode in ("pbw", "fock"):
            tag = "pbw" if mode == "pbw" else f"fock{b.phi_size}"
            r = check_relation(e.lhs, e.rhs, mode, b.phi_size, cal=cal, ledger=ledger,
                               leading=e.mode == "leading", suite="phi", instance=f"{e.id} [{tag}]")
            r.annotated = e.expect != MATCH
            if r.status == MISMATCH and e.expect == EXPECTED_MISMATCH:
                r.status = EXPECTED_MISMATCH
            if e.note:
                r.detail = f"{r.detail}; {e.note}" if r.detail else e.note
            out.append(r)

    by_id: dict = {}
    for r in out:
        if r.instance.endswith("]") and " [" in r.instance:
            base, tag = r.instance.rsplit(" [", 1)
            by_id.setdefault(base, {})[tag] = r.status
    disagree = sorted(k for k, v in by_id.items() if len(set(v.values())) > 1)
    out.append(_report("phi", "pbw and fock modes agree", not disagree, ", ".join(disagree),
                       f"{len(by_id)} instances"))

    for name, entry in ledger.entries.items():
        if entry.bidegree is None:
            continue
        got = leading_bidegree(phi_image(parse_trace(name, ledger), cal, ledger))
        out.append(_report("phi", f"bidegree {name}", got == tuple(entry.bidegree), "",
                           f"declared {entry.bidegree}, image {got}"))
    odd = [n for n in ledger.names() if n.startswith(("d", "dbar")) and n.lstrip("dbar").isdigit()
           and int(n.lstrip("dbar")) % 2]
    out.append(_report("phi", "no odd bubble names in the ledger", not odd, ", ".join(odd)))
    return out


# driver ------------------------------------------------------------------

_RUNNERS: dict[str, Callable] = {
    "lie": suite_lie,
    "pbw": suite_pbw,
    "fock": suite_fock,
    "heis": suite_heis,
    "gen": suite_gen,
    "dims": suite_dims,
    "phi": suite_phi,
}


def run_suite(name: str, bounds: Bounds | None = None, manifest_path: str | None = None) -> list:
    """Run one suite (or ``"all"``); reports are sorted by (suite, instance)."""
    bounds = (bounds or Bounds()).check()
    names = SUITES if name == "all" else (name,)
    reports = []
    for n in names:
        runner = _RUNNERS.get(n)
        if runner is None:
            raise ValueError(f"unknown suite {n!r}; choose from {', '.join(SUITES + ('all',))}")
        if n == "phi":
            reports.extend(runner(bounds, load_manifest(manifest_path) if manifest_path else None))
        else:
            reports.extend(runner(bounds))
    return sorted(reports, key=lambda r: (r.suite, r.instance))


def exit_code(reports) -> int:
    return 1 if any(r.unexpected for r in reports) else 0


def render_reports(reports, fmt: str = "text", timing: bool = False) -> str:
    counts = {s: sum(1 for r in reports if r.status == s) for s in (MATCH, MISMATCH, EXPECTED_MISMATCH, NOT_EXPRESSIBLE)}
    if fmt == "machine":
        lines = []
        for r in reports:
            key = f"{r.suite}/{r.instance}"
            lines.append(f"{key}\t{r.status}")
            if r.difference:
                lines.append(f"{key}#difference\t{r.difference}")
            if r.detail:
                lines.append(f"{key}#detail\t{r.detail}")
            if timing:
                lines.append(f"{key}#seconds\t{r.seconds:.3f}")
        for s, n in counts.items():
            lines.append(f"summary/{s}\t{n}")
        lines.append(f"summary/unexpected\t{sum(1 for r in reports if r.unexpected)}")
        return "\n".join(lines)
    rows = [("suite", "instance", "status", "detail")]
    for r in reports:
        info = r.detail
        if r.difference:
            info = f"{info} | diff: {r.difference}" if info else f"diff: {r.difference}"
        if timing:
            info = f"{info} ({r.seconds:.2f}s)"
        rows.append((r.suite, r.instance, r.status, info))
    w0 = max(len(x[0]) for x in rows)
    w1 = max(len(x[1]) for x in rows)
    w2 = max(len(x[2]) for x in rows)
    body = [f"{a.ljust(w0)}  {bb.ljust(w1)}  {c.ljust(w2)}  {d}".rstrip() for a, bb, c, d in rows]
    summary = ", ".join(f"{n} {s}" for s, n in counts.items())
    unexpected = sum(1 for r in reports if r.unexpected)
    body.append("")
    body.append(f"{len(reports)} reports: {summary}; unexpected: {unexpected}")
    return "\n".join(body)
