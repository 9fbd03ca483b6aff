"""End-to-end reproductions of the worked examples as scripted pipelines.

Every pipeline starts from a literal (extended) monodromy, runs the
toolkit's operations with conjugators, Hurwitz sequences and decompositions
stored as data below, and records checks against the printed lists.

Checks tagged *hard* are assertions; *soft* checks only report a diff.
Whenever a pipeline ends in a generic monodromy the full-twist check is
hard.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .braid import (
    BraidWord,
    braids_equal,
    conj,
    forget_strand,
    full_twist,
    partial_garside,
    pseudo_coxeter,
    shift_embed,
    star,
)
from .errors import OracleMismatchError, ValidationError
from .factorization import (
    Factorization,
    apply_moves,
    conjugate_all,
    drop_trivial_entries,
    entrywise_diff,
    forget_strand_all,
    is_generic,
    replace_entry,
)
from .generify import (
    ArrangementEntry,
    ArrangementInput,
    TangencyModel,
    arrangement_generify,
    replace_tangency,
    split_locally_generic,
)
from .kummer import LiftSpec, kummer_infinity_braid, lift_factorization
from .zvk import (
    abelianize,
    count_homs_to_small_symmetric,
    presentation_generic,
    presentation_projective,
    tietze_simplify,
)


def word(strands: int, *letters: int) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def _maker(strands: int) -> Callable[..., BraidWord]:
    return lambda *letters: BraidWord(strands, tuple(letters))


# ------------------------------------------------------------------ reports


@dataclass(frozen=True)
class Check:
    name: str
    hard: bool
    passed: bool
    detail: str = ""
    positions: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "hard": self.hard,
            "passed": self.passed,
            "detail": self.detail,
            "positions": list(self.positions),
        }


@dataclass
class PipelineReport:
    name: str
    result: Factorization | None = None
    checks: list[Check] = field(default_factory=list)
    stages: dict[str, Factorization] = field(default_factory=dict)

    @property
    def hard_failures(self) -> list[Check]:
        return [c for c in self.checks if c.hard and not c.passed]

    @property
    def soft_failures(self) -> list[Check]:
        return [c for c in self.checks if not c.hard and not c.passed]

    @property
    def passed(self) -> bool:
        return not self.hard_failures

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    # recording helpers

    def expect(self, name: str, ok: bool, detail: str = "", hard: bool = True) -> bool:
        self.checks.append(Check(name, hard, bool(ok), "" if ok else detail))
        return ok

    def expect_entries(
        self, name: str, got: Factorization, expected: Sequence[BraidWord], hard: bool = True
    ) -> bool:
        bad = entrywise_diff(got, expected)
        detail = ""
        if bad:
            i = bad[0]
            g = str(got.entries[i - 1]) if i <= len(got) else "<missing>"
            e = str(expected[i - 1]) if i <= len(expected) else "<missing>"
            detail = f"entries differ at {bad}; first at {i}: got {g}, expected {e}"
            if len(got) != len(expected):
                detail += f" (lengths {len(got)} vs {len(expected)})"
        self.checks.append(Check(name, hard, not bad, detail, tuple(bad)))
        return not bad

    def expect_equal(self, name: str, got: BraidWord, expected: BraidWord, hard: bool = True) -> bool:
        ok = braids_equal(got, expected)
        return self.expect(name, ok, f"got {got}, expected {expected}", hard)

    def expect_generic(self, name: str, f: Factorization) -> bool:
        d = f.strands
        total = f.exponent_sum()
        if total != d * (d - 1):
            return self.expect(name, False, f"exponent sum {total}, full twist needs {d * (d - 1)}")
        return self.expect(name, is_generic(f), "pseudo-Coxeter element is not the full twist")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "strands": self.result.strands if self.result else None,
            "entries": [str(e) for e in self.result] if self.result else [],
            "checks": [c.to_dict() for c in self.checks],
        }


# ------------------------------------------------------------ smooth curves


def smooth(n: int, report: PipelineReport) -> Factorization:
    """Fermat curve of degree n as the n-fold cover of a line."""
    if n < 2:
        raise ValidationError("smooth curves need degree n >= 2")
    line = Factorization(2, (word(2), word(2, 1, 1)), marked=True, labels=("line", "x=0"))
    lifted = drop_trivial_entries(lift_factorization(LiftSpec(n, 1), line, forget=True))
    report.stages["lifted"] = lifted
    c = word(n, *range(n - 1, 0, -1))
    report.expect_equal("lifted x=0 entry is the n-th power of s_{n-1}...s_1", lifted[0], c**n)
    # the order-n tangencies, one per fiber of the cover basis
    f = split_locally_generic(lifted, 1, [c] * n)
    for i in range(n, 0, -1):
        f = replace_tangency(f, i, TangencyModel("inflection", a=1, m=n))
    packages = [word(n, i) for _ in range(n) for i in range(1, n)]
    report.expect_entries("package list", f, packages)
    report.expect_generic("full twist", f)
    return f


# ---------------------------------------------------------- Zariski sextic

ZARISKI_CONJUGATOR = (5, 3)
ZARISKI_BLOCK_MOVES = (-2, -3, -4, 2, 3)
ZARISKI_BLOCK_SHIFT = (1, 3, 5)
ZARISKI_SECOND_MOVES = (2,)
ZARISKI_THIRD_MOVES = (1, -4)
# moves the appended cube s1^3 from position 16 to 13
ZARISKI_TAIL_MOVES = (15, 14, 13)


def zariski_sextic(report: PipelineReport) -> Factorization:
    q, s = _maker(3), _maker(6)
    conic = Factorization(
        3, (conj(q(1), q(2, 2)), q(2, 2, 2, 2), q(1)), marked=True, labels=("tangent", "axis", "x=0")
    )
    spec = LiftSpec(3, 2, "radial")
    lifted = lift_factorization(spec, conic, letters="native", forget=True)
    lifted = conjugate_all(lifted, s(*ZARISKI_CONJUGATOR))
    report.stages["lifted"] = lifted
    c = s(*ZARISKI_BLOCK_SHIFT)
    m = s(3, 2, 3, 2)
    printed = [
        conj(c, s(4, 3, 2)),
        star(s(4), m),
        conj(c, s(4, 3, 2, 1, 3, 5)),
        conj(m, s(-4, 1, 3, 5)),
        conj(c, s(4, 3, 2, 1, 1, 3, 3, 5, 5)),
        conj(m, s(-4, 1, 1, 3, 3, 5, 5)),
        s(1, 1, 1, 3, 3, 3, 5, 5, 5),
    ]
    report.expect_entries("lifted monodromy", lifted, printed)

    # cusp fibers 2, 4, 6 and locally generic fibers 1, 3, 5, 7, right to left
    f = lifted
    for j in (2, 1, 0):
        f = replace_tangency(f, 2 * j + 2, TangencyModel("cusp", a=2, eta=(c**j).inverse() * s(4)))
    report.stages["cusps"] = f
    f = split_locally_generic(f, 10, [s(1, 1, 1), s(3, 3, 3), s(5, 5, 5)])
    first = [conj(s(1), s(2)), s(4), conj(s(5), s(4, 3, 2))]
    for j in (2, 1, 0):
        f = split_locally_generic(f, 3 * j + 1, [conj(x, c**j) for x in first])
    g = f
    report.stages["generic"] = g
    report.expect_generic("generic after replacements", g)

    z1 = [conj(s(1), s(2)), conj(s(2), s(3)), s(3, 3, 3), conj(s(4), s(-5, -3)), s(4)]
    z2 = [conj(s(2), s(3)), s(3, 3, 3), conj(s(2), s(-3, 1)), s(4), conj(s(4), s(3, 5))]
    z3 = [s(3, 3, 3), conj(s(2), s(-3, 1)), conj(s(2), s(1, 1)), s(4), conj(s(4), s(3, 5))]
    block = Factorization(6, g.entries[:5])
    b1 = apply_moves(block, ZARISKI_BLOCK_MOVES)
    report.expect_entries("first block", b1, z1)
    b2 = apply_moves(conjugate_all(b1, c), ZARISKI_SECOND_MOVES)
    report.expect_entries("second block", b2, z2)
    b3 = apply_moves(conjugate_all(b2, c), ZARISKI_THIRD_MOVES)
    report.expect_entries("third block", b3, z3)
    for j in (1, 2):
        report.expect_entries(
            f"generic block {j + 1} is block 1 conjugated by (s1 s3 s5)^{j}",
            Factorization(6, g.entries[5 * j : 5 * j + 5]),
            [conj(x, c**j) for x in block],
        )
    # block j is block 1 conjugated by c^j, so the block moves act on g directly
    moves = (
        list(ZARISKI_BLOCK_MOVES)
        + [m + 5 * (1 if m > 0 else -1) for m in ZARISKI_BLOCK_MOVES + ZARISKI_SECOND_MOVES]
        + [
            m + 10 * (1 if m > 0 else -1)
            for m in ZARISKI_BLOCK_MOVES + ZARISKI_SECOND_MOVES + ZARISKI_THIRD_MOVES
        ]
        + list(ZARISKI_TAIL_MOVES)
    )
    final = apply_moves(g, moves)
    prop = z1 + z2 + [
        s(3, 3, 3),
        conj(s(2), s(-3, 1)),
        s(1, 1, 1),
        conj(s(1), s(2)),
        s(4),
        conj(s(4), s(3, 5)),
        s(3, 3, 3),
        s(5, 5, 5),
    ]
    report.expect_entries("generic 18-entry list", final, prop)
    report.expect("exponent sum 30", final.exponent_sum() == 30, f"got {final.exponent_sum()}")
    report.expect_generic("full twist", final)

    p = presentation_projective(final)
    ab = abelianize(p)
    report.expect("projective abelianization Z/6", ab == [6], f"got {ab}")
    homs = count_homs_to_small_symmetric(tietze_simplify(p), 3, surjective=True)
    report.expect("surjects onto S3", homs > 0, f"{homs} surjections")
    return final


# ------------------------------------------------------------ nine cusps

NINE_CUSP_MOVES = (-1, 7, 6, 5, 4, 8, 7, 6)


def nine_cusp(report: PipelineReport) -> Factorization:
    q, s = _maker(3), _maker(6)
    conic = Factorization(3, (q(2, 2, 2, 2), q(1)), marked=True, labels=("tangent", "x=0"))
    spec = LiftSpec(3, 2, "radial")
    g = s(5, 3)
    lifted = conjugate_all(lift_factorization(spec, conic, "native", forget=True), g)
    cusp = s(3, 2, 3, 2)
    hs = [s(-4), s(-4, 1, 3, 5), s(-4, 1, 1, 3, 3, 5, 5)]
    cubes = [s(1, 1, 1), s(3, 3, 3), s(5, 5, 5)]
    report.expect_entries(
        "lifted monodromy", lifted, [conj(cusp, h) for h in hs] + [s(1, 1, 1, 3, 3, 3, 5, 5, 5)]
    )
    inf = conj(forget_strand(kummer_infinity_braid(spec, conic, "native"), spec.strands), g)
    tail = s(4, 3, 2, -4)
    report.expect_equal("braid at infinity", inf, conj(s(1, 1, 1, 3, 3, 3, 5, 5, 5), tail))
    f = Factorization(6, lifted.entries + (inf,), labels=lifted.labels + ("infinity",))
    report.stages["generic at infinity"] = f
    report.expect_generic("generic at infinity", f)
    for i in (3, 2, 1):
        f = replace_tangency(f, i, TangencyModel("cusp", a=2, eta=hs[i - 1].inverse()))
    f = split_locally_generic(f, 7, cubes)
    f = split_locally_generic(f, 10, [conj(x, tail) for x in cubes])
    report.stages["generic"] = f
    final = apply_moves(f, NINE_CUSP_MOVES)
    printed = [
        s(2, 2, 2),
        conj(s(2), s(3, -4)),
        conj(s(2), s(3, -4, 1, 3, 5)),
        s(3, 3, 3),
        conj(s(3, 3, 3), s(4, 5)),
        s(5, 5, 5),
        conj(s(2), s(-3, 4, 1, 1, -5)),
        conj(s(5, 5, 5), s(4)),
        s(1, 1, 1),
        conj(s(1, 1, 1), s(2)),
        s(4, 4, 4),
        conj(s(5, 5, 5), s(4, 3, 2)),
    ]
    report.expect_entries("generic 12-entry list", final, printed)
    report.expect_generic("full twist", final)
    return final


# -------------------------------------------------- the useful nodal cubic


def nodal_cubic() -> Factorization:
    """Extended monodromy of the nodal cubic with the axis marked last."""
    q = _maker(4)
    return Factorization(
        4,
        (q(2, 2), star(q(2), q(3, 3, 3, 3, 3, 3)), conj(q(1, 2), q(3, 3))),
        marked=True,
        labels=("node", "inflection tangent", "x=0"),
    )


def dual_nodal_quartic(report: PipelineReport) -> Factorization:
    cubic = nodal_cubic()
    q, r = _maker(4), _maker(6)
    report.expect_equal(
        "nodal cubic braid at infinity",
        full_twist(4) * cubic.pseudo_coxeter().inverse(),
        conj(q(1, 2), q(3, 3, 2)),
    )
    spec = LiftSpec(2, 3, "straight2")
    lifted = lift_factorization(spec, cubic, letters="native", forget=True)
    report.stages["lifted"] = lifted
    cusp_pair = r(1, 2, 1, 2, 5, 4, 5, 4)
    printed = [
        r(2, 2, 4, 4),
        star(r(2, 4), r(3, 3, 3)),
        star(r(2, 4, 3, 5, 1), r(2, 2, 4, 4)),
        conj(r(3, 3, 3), r(-2, -4, 5, 1)),
        conj(cusp_pair, r(3)),
    ]
    report.expect_entries("lifted monodromy", lifted, printed)
    inf = forget_strand(kummer_infinity_braid(spec, cubic, "native"), spec.fixed_strand("native"))
    report.expect_equal("braid at infinity", inf, conj(cusp_pair, r(3, 2, 4)))
    f = Factorization(6, lifted.entries + (inf,), labels=lifted.labels + ("infinity",))
    report.expect_generic("generic at infinity", f)
    rows = table_one()
    for i, (left, right) in enumerate(rows, start=1):
        report.expect_equal(f"table row {i}", pseudo_coxeter(right, 6), left)
        report.expect_equal(f"table row {i} left column is entry {i}", f[i - 1], left)
    g = f
    for i in range(len(rows), 0, -1):
        g = replace_entry(g, i, rows[i - 1][1])
    report.stages["generic"] = g
    report.expect_generic("full twist", g)
    affine = presentation_generic(g, projective=False)
    simple = tietze_simplify(affine)
    report.expect("affine abelianization Z", abelianize(affine) == [0], str(abelianize(affine)))
    report.expect("three generators after Tietze moves", simple.rank == 3, f"rank {simple.rank}")
    report.expect(
        "four relators after Tietze moves",
        len(simple.relators) == 4,
        f"{len(simple.relators)} relators remain",
        hard=False,
    )
    return g


def table_one() -> list[tuple[BraidWord, list[BraidWord]]]:
    """(entry, decomposition) rows turning the lifted monodromy generic."""
    r = _maker(6)
    return [
        (r(2, 2, 4, 4), [r(2, 2), r(4, 4)]),
        (star(r(2, 4), r(3, 3, 3)), [star(r(2, 4), r(3, 3, 3))]),
        (
            star(r(2, 4, 3, 5, 1), r(2, 2, 4, 4)),
            [star(r(2, 4, 3, 1), r(2, 2)), star(r(2, 4, 3, 5), r(4, 4))],
        ),
        (conj(r(3, 3, 3), r(-2, -4, 5, 1)), [conj(r(3, 3, 3), r(-2, -4, 5, 1))]),
        (
            conj(r(1, 2, 1, 2, 5, 4, 5, 4), r(3)),
            [conj(r(2), r(1, 3)), r(1, 1, 1), conj(r(4), r(5, 3)), r(5, 5, 5)],
        ),
        (
            conj(r(1, 2, 1, 2, 5, 4, 5, 4), r(3, 2, 4)),
            [
                conj(r(2), r(1, 3, 2, 4)),
                conj(r(1, 1, 1), r(2)),
                conj(r(4), r(5, 3, 2, 4)),
                conj(r(5, 5, 5), r(4)),
            ],
        ),
    ]


# ------------------------------------------------------------------ Hesse

HESSE_CONJUGATOR = (-3, -3, -2)
HESSE_BASIS_MOVES = (6, 5)


def hesse(report: PipelineReport) -> Factorization:
    q, t, u = _maker(4), _maker(10), _maker(12)
    cubic = nodal_cubic()
    moved = conjugate_all(cubic, q(*HESSE_CONJUGATOR))
    report.expect_entries(
        "conjugated nodal cubic", moved, [conj(q(2, 2), q(3, 3)), q(3, 3, 3, 3, 3, 3), q(2, 1)]
    )
    moved = Factorization(4, moved.entries, marked=True, labels=moved.labels)
    spec = LiftSpec(3, 3, "radial")
    lifted = apply_moves(lift_factorization(spec, moved, letters="native"), HESSE_BASIS_MOVES)
    report.stages["lifted"] = lifted

    D = lambda i, j: partial_garside(i, j, 10)  # noqa: E731
    cnj = t(6, 5, 4, 3, 7, 6)
    g3 = conj(t(9, 9, 8, 7), cnj)
    h = t(2, 1, 5, 4, 8, 7)
    nodes = t(2, 2, 5, 5, 8, 8)
    triple = D(1, 3) ** 2 * D(4, 6) ** 2 * D(7, 9) ** 2
    report.expect_equal("image of s3^2", t(9, 9, 8, 7, 6, 5, 4, 3, -4, -5, -7, -8), g3)
    report.expect_equal("(s9^2 s8 s7)^3 is the twist on 7..10", t(9, 9, 8, 7) ** 3, D(7, 10) ** 2)
    printed = [
        conj(nodes, g3),
        conj(D(7, 10) ** 2, cnj),
        conj(nodes, g3 * h),
        conj(D(7, 10) ** 2, cnj * h),
        triple,
        star(h * g3.inverse(), nodes),
        star(t(2, 5, 8) * cnj.inverse(), D(7, 10) ** 2),
    ]
    report.expect_entries("lifted monodromy", lifted, printed)
    eta = t(2, 5, 8) * g3 * t(-8, -5, -2) * g3.inverse()
    inf = kummer_infinity_braid(spec, moved, "native")
    report.expect_equal("braid at infinity", inf, star(eta, triple))

    lines = (1, 2, 4, 5, 7, 8, 10, 11)
    four = (1, 2, 3, 4, 5, 6, 7, 11)
    blocks = (1, 4, 7, 10, 11)
    entries = list(lifted.entries) + [inf]
    betas = [
        g3.inverse(),
        cnj.inverse(),
        (g3 * h).inverse(),
        (cnj * h).inverse(),
        t(),
        h * g3.inverse(),
        t(2, 5, 8) * cnj.inverse(),
        eta,
    ]
    parts = [lines, four, lines, four, blocks, lines, four, blocks]
    inp = ArrangementInput(
        10,
        tuple(ArrangementEntry(e, b, p) for e, b, p in zip(entries, betas, parts)),
        vertical=(5, 8),
    )
    final = arrangement_generify(inp, nonvertical_order="ascending")

    E = lambda i, j: partial_garside(i, j, 12)  # noqa: E731
    G3, C, ET = (shift_embed(x, 0, 12) for x in (g3, cnj, eta))
    H = u(2, 1, 5, 4, 8, 7)
    back = H * G3.inverse()
    lead = u(-11) * ET
    expected = (
        [conj(u(i, i), G3) for i in (2, 5, 8)]
        + [conj(E(7, 10) ** 2, C)]
        + [conj(u(i, i), G3 * H) for i in (2, 5, 8)]
        + [conj(E(7, 10) ** 2, C * H)]
        + [
            u(10, 10),
            star(u(10), E(7, 10) ** 2),
            star(u(10) * E(7, 10), E(4, 7) ** 2),
            star(u(10) * E(7, 10) * E(4, 7), E(1, 4) ** 2),
        ]
        + [star(back, u(i, i)) for i in (2, 5, 8)]
        + [star(u(2, 5, 8) * C.inverse(), E(7, 10) ** 2)]
        + [
            star(lead, u(10, 10)),
            star(lead * u(10), E(7, 10) ** 2),
            star(lead * u(10) * E(7, 10), E(4, 7) ** 2),
            star(lead * u(10) * E(7, 10) * E(4, 7), E(1, 4) ** 2),
            u(11, 11),
        ]
    )
    report.expect_entries("generic 21-entry list", final, expected)
    report.expect_generic("full twist", final)
    return final


# ------------------------------------------------------------ Ceva, MacLane

CEVA_CONJUGATOR = (5, 3)


def _ceva_printed(d: int) -> list[BraidWord]:
    w = _maker(d)
    D = lambda i, j: partial_garside(i, j, d)  # noqa: E731

    def vertical(g: BraidWord) -> list[BraidWord]:
        return [
            conj(D(5, 7) ** 2, g),
            conj(D(3, 5) ** 2, D(5, 7).inverse() * g),
            conj(D(1, 3) ** 2, D(3, 5).inverse() * D(5, 7).inverse() * g),
        ]

    tail = [star(w(4), w(3, 2, 3, 2, 3, 2)), conj(w(3, 2, 3, 2, 3, 2), w(-4, 1, 3, 5))]
    if d == 9:
        return vertical(w()) + vertical(w(4, 3, 2, 7)) + vertical(w(4, 4, 3, 2, 2, 7, 8)) + tail
    g = w(4, 4, 3, 2, 2)
    third = [conj(w(5, 5), g), conj(w(3, 3), g), conj(w(1, 1), g)]
    return vertical(w()) + vertical(w(4, 3, 2, 7)) + third + tail


def ceva9(report: PipelineReport) -> Factorization:
    q, s = _maker(3), _maker(6)
    lines = Factorization(3, (q(1, 1), q(2, 2)), marked=True, labels=("lines", "x=0"))
    spec = LiftSpec(3, 2, "radial")
    g = s(*CEVA_CONJUGATOR)
    lifted = conjugate_all(lift_factorization(spec, lines, "native", forget=True), g)
    report.stages["lifted"] = lifted
    nodes = s(1, 1, 3, 3, 5, 5)
    z = star(s(4), s(3, 2))
    printed = [
        nodes,
        conj(nodes, s(4, 3, 2)),
        conj(nodes, s(4, 4, 3, 2, 2)),
        star(s(4), s(3, 2, 3, 2, 3, 2)),
    ]
    report.expect_entries("lifted monodromy", lifted, printed, hard=False)
    report.expect_entries("lifted blocks are conjugates by the lifted axis loop", lifted,
                          [conj(nodes, z**j) for j in range(3)] + [z**3])
    inf = conj(forget_strand(kummer_infinity_braid(spec, lines, "native"), spec.strands), g)
    report.expect_equal("braid at infinity", inf, conj(s(3, 2, 3, 2, 3, 2), s(-4, 1, 3, 5)))
    report.expect_generic("generic at infinity", Factorization(6, lifted.entries + (inf,)))
    triple = (1, 3, 5, 7)
    pair = (1, 2, 5, 6, 7)
    entries = list(lifted.entries) + [inf]
    betas = [s(), z.inverse(), (z**2).inverse(), s(4), s(-4, 1, 3, 5).inverse()]
    inp = ArrangementInput(
        6,
        tuple(
            ArrangementEntry(e, b, p)
            for e, b, p in zip(entries, betas, [triple] * 3 + [pair] * 2)
        ),
        vertical=(1, 2, 3),
    )
    final = arrangement_generify(inp)
    report.stages["generic"] = final
    report.expect_generic("full twist", final)
    report.expect_entries("printed list", final, _ceva_printed(9), hard=False)
    return final


def maclane(report: PipelineReport) -> Factorization:
    sub = PipelineReport("ceva9")
    ceva = ceva9(sub)
    report.checks += [Check(f"ceva9: {c.name}", c.hard, c.passed, c.detail, c.positions) for c in sub.checks]
    final = drop_trivial_entries(forget_strand_all(ceva, 9))
    report.expect_generic("full twist", final)
    report.expect_entries("printed list", final, _ceva_printed(8), hard=False)
    return final


# ------------------------------------------------- cubic with tangent lines

# the printed group for entry 2 lists (s1, s5, s3^s2, s3^s4); only this order multiplies correctly
CUBIC_TANGENTS_ENTRY2 = ((3, (4,)), (3, (2,)), (1, ()), (5, ()))


def cubic_tangents(report: PipelineReport) -> Factorization:
    q, r = _maker(4), _maker(6)
    arrangement = Factorization(
        4, (q(2, 2), star(q(2), q(1, 1, 3, 3)), star(q(2, 3, -2), q(1, 1)))
    )
    report.expect_entries(
        "x=0 moved last",
        apply_moves(arrangement, [-2]),
        [q(2, 2), star(q(2, -3, -1), q(2, 2)), star(q(2), q(1, 1, 3, 3))],
    )
    base = Factorization(
        4,
        (q(3, 3, 3, 3, 3, 3), star(q(3, 3), q(1, 2)), q(1, 2)),
        marked=True,
        labels=("tangent", "tangent", "x=0"),
    )
    report.expect_equal(
        "braid at infinity", full_twist(4) * base.pseudo_coxeter().inverse(), conj(q(1, 2), q(3, 3))
    )
    c = q(1, 2)
    t0 = base[2]
    doubled = [base[0], base[1], conj(base[0], t0), conj(base[1], t0), t0**2,
               full_twist(4) ** 2 * (base.pseudo_coxeter() ** 2).inverse()]
    printed_doubled = [
        q(3, 3, 3, 3, 3, 3),
        star(q(3, 3), c),
        conj(q(3, 3, 3, 3, 3, 3), q(2)),
        star(q(-2, 3, 3), c),
        c**2,
        conj(c**2, q(3, 3)),
    ]
    report.expect_entries("double cover of the base", Factorization(4, tuple(doubled)),
                          printed_doubled, hard=False)
    spec = LiftSpec(2, 3, "straight2")
    lifted = lift_factorization(spec, base, letters="native", forget=True)
    inf = forget_strand(kummer_infinity_braid(spec, base, "native"), spec.fixed_strand("native"))
    f = Factorization(6, lifted.entries + (inf,), labels=lifted.labels + ("infinity",))
    report.stages["lifted"] = f
    report.expect_generic("generic at infinity", f)
    entry2 = [conj(r(a), r(*g)) if g else r(a) for a, g in CUBIC_TANGENTS_ENTRY2]
    groups = [
        [r(3, 3, 3)],
        entry2,
        [conj(r(3, 3, 3), r(2, 4))],
        [conj(r(1), r(2)), conj(r(5), r(4)), conj(r(3), r(2, 2, 4)), conj(r(3), r(2, 4, 4))],
        [conj(r(2), r(1)), r(1, 1, 1), conj(r(4), r(5)), r(5, 5, 5)],
        [conj(r(2), r(1, 3)), r(1, 1, 1), conj(r(4), r(5, 3)), r(5, 5, 5)],
    ]
    final = f
    for i in range(len(groups), 0, -1):
        final = replace_entry(final, i, groups[i - 1])
    report.stages["generic"] = final
    report.expect_generic("full twist", final)
    printed = [
        r(3, 3, 3), r(1), r(5), conj(r(3), r(2)), conj(r(3), r(4)),
        conj(r(3, 3, 3), r(2, 4)), conj(r(1), r(2)), conj(r(5), r(4)),
        conj(r(3), r(2, 2, 4)), conj(r(3), r(2, 4, 4)),
        conj(r(2), r(1)), r(1, 1, 1), conj(r(4), r(5)), r(5, 5, 5),
        conj(r(2), r(1, 3)), r(1, 1, 1), conj(r(4), r(5, 3)), r(5, 5, 5),
    ]
    report.expect_entries("printed 18-entry list", final, printed)
    affine = presentation_generic(final, projective=False)
    ab = abelianize(affine)
    report.expect("affine abelianization Z", ab == [0], f"got {ab}")
    simple = tietze_simplify(affine)
    report.expect(
        "affine group is infinite cyclic",
        simple.rank == 1 and not simple.relators,
        str(simple),
    )
    return final


# ---------------------------------------------------------------- registry

PIPELINES: dict[str, Callable[[PipelineReport], Factorization]] = {
    "zariski-sextic": zariski_sextic,
    "nine-cusp": nine_cusp,
    "dual-nodal-quartic": dual_nodal_quartic,
    "ceva9": ceva9,
    "maclane": maclane,
    "hesse": hesse,
    "cubic-tangents": cubic_tangents,
}

_SMOOTH = re.compile(r"smooth(?:\(n=(\d+)\)|-(\d+))$")


def pipeline_names() -> list[str]:
    return [f"smooth(n={n})" for n in range(2, 6)] + list(PIPELINES)


def run_pipeline(name: str, strict: bool = True) -> PipelineReport:
    """Run a registered pipeline; with ``strict`` a failed hard check raises."""
    report = PipelineReport(name)
    m = _SMOOTH.match(name)
    if m:
        n = int(m.group(1) or m.group(2))
        report.result = smooth(n, report)
    elif name in PIPELINES:
        report.result = PIPELINES[name](report)
    else:
        raise ValidationError(f"unknown pipeline {name!r}; known: {', '.join(pipeline_names())}")
    if strict and report.hard_failures:
        first = report.hard_failures[0]
        raise OracleMismatchError(f"{name}: {first.name}: {first.detail}")
    return report
