"""Fundamental-group presentations read off a braid monodromy.

Relators are reduced words equal to 1 over named generators; letter ``i``
refers to ``generators[i-1]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import freegroup as fg
from .braid import BraidWord, artin_images, braids_equal, star
from .errors import OracleMismatchError, ValidationError
from .factorization import Factorization
from .freegroup import FreeWord, Letters


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Letters, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValidationError("generator names must be unique")
        rank = len(gens)
        rels = tuple(FreeWord(rank, r).letters for r in self.relators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def word_str(self, w: Sequence[int]) -> str:
        if not w:
            return "1"
        names = self.generators
        return " ".join(names[x - 1] if x > 0 else f"{names[-x - 1]}^-1" for x in w)

    def __str__(self) -> str:
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def _mu_names(d: int) -> list[str]:
    return [f"m{j}" for j in range(1, d + 1)]


def _fixed_relator(images: list[Letters], j: int) -> Letters:
    """mu_j (mu_j^b)^-1."""
    return fg.join((j,), fg.invert(images[j - 1]))


def presentation_affine(f: Factorization) -> GroupPresentation:
    """Generators mu_1..mu_d, g_1..g_r; g_i^-1 mu_j g_i = mu_j^{tau_i}."""
    d, r = f.strands, len(f)
    rels: list[Letters] = []
    for i, tau in enumerate(f.entries, start=1):
        g = d + i
        images = artin_images(tau)
        for j in range(1, d + 1):
            rels.append(fg.join((-g, j, g), fg.invert(images[j - 1])))
    return GroupPresentation(tuple(_mu_names(d) + [f"g{i}" for i in range(1, r + 1)]), tuple(rels))


def presentation_fully_horizontal(f: Factorization, kept: Sequence[int]) -> GroupPresentation:
    """Line generators only for the 1-based entries in ``kept``; the others fix mu_1..mu_{d-1}."""
    d = f.strands
    kept = sorted(set(kept))
    for i in kept:
        if not 1 <= i <= len(f):
            raise ValidationError(f"kept index {i} outside 1..{len(f)}")
    rels: list[Letters] = []
    slot = {i: d + n for n, i in enumerate(kept, start=1)}
    for i, tau in enumerate(f.entries, start=1):
        images = artin_images(tau)
        if i in slot:
            g = slot[i]
            rels += [fg.join((-g, j, g), fg.invert(images[j - 1])) for j in range(1, d + 1)]
        else:
            rels += [_fixed_relator(images, j) for j in range(1, d)]
    gens = _mu_names(d) + [f"g{i}" for i in kept]
    return GroupPresentation(tuple(gens), tuple(rels))


def presentation_projective(f: Factorization) -> GroupPresentation:
    """mu_j = mu_j^{tau_i} for j < d, plus mu_d ... mu_1 = 1."""
    d = f.strands
    rels: list[Letters] = []
    for tau in f.entries:
        images = artin_images(tau)
        rels += [_fixed_relator(images, j) for j in range(1, d)]
    rels.append(tuple(range(d, 0, -1)))
    return GroupPresentation(tuple(_mu_names(d)), tuple(rels))


@dataclass(frozen=True)
class FiberData:
    """entry = eta * tau with tau a positive word in the generators indexed by ``support``."""

    eta: BraidWord
    tau: BraidWord
    support: tuple[int, ...]


def infer_fiber_data(entry: BraidWord) -> FiberData:
    """Read an entry syntactically as u m u^-1 with m a nonempty positive word."""
    w = fg.free_reduce(entry.letters)
    d = entry.strands
    for t in range(len(w) // 2, -1, -1):
        mid = w[t : len(w) - t]
        if mid and all(x > 0 for x in mid) and w[:t] == fg.invert(w[len(w) - t :]):
            return FiberData(BraidWord(d, w[:t]), BraidWord(d, mid), tuple(sorted(set(mid))))
    raise ValidationError(f"entry {entry} is not a conjugate of a positive word")


def validate_fiber_data(entry: BraidWord, data: FiberData) -> None:
    if any(x <= 0 or x not in data.support for x in data.tau.letters):
        raise ValidationError("tau must be positive in the generators of its support")
    if not braids_equal(star(data.eta, data.tau), entry):
        raise OracleMismatchError("eta * tau differs from the entry")


def presentation_generic(
    f: Factorization,
    data: Sequence[FiberData] | None = None,
    projective: bool = True,
) -> GroupPresentation:
    """Relations mu_j(i) = mu_j(i)^{tau_i} for j in s_i, in the basis mu(i) = mu^{eta_i^-1}.

    Without ``data`` each entry is parsed with :func:`infer_fiber_data`.
    ``projective`` appends mu_d ... mu_1 = 1.
    """
    d = f.strands
    if data is None:
        data = [infer_fiber_data(e) for e in f.entries]
    elif len(data) != len(f):
        raise ValidationError(f"{len(data)} fiber records for {len(f)} entries")
    else:
        for e, fd in zip(f.entries, data):
            validate_fiber_data(e, fd)
    rels: list[Letters] = []
    for fd in data:
        tau_images = artin_images(fd.tau)
        back = artin_images(fd.eta.inverse())
        for j in fd.support:
            rels.append(fg.substitute(_fixed_relator(tau_images, j), back))
    if projective:
        rels.append(tuple(range(d, 0, -1)))
    return GroupPresentation(tuple(_mu_names(d)), tuple(rels))


# --------------------------------------------------------------- abelianization


def smith_invariants(rows: list[list[int]], ncols: int) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix, padded with zeros to ``ncols``."""
    a = [list(r) for r in rows]
    nrows = len(a)
    diag: list[int] = []

    def pivot_to(t: int, cells) -> bool:
        best = min(((abs(a[i][j]), i, j) for i, j in cells if a[i][j]), default=None)
        if best is None:
            return False
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        return True

    t = 0
    while t < min(nrows, ncols):
        if not pivot_to(t, [(i, j) for i in range(t, nrows) for j in range(t, ncols)]):
            break
        while True:
            p = a[t][t]
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
            line = [(i, t) for i in range(t, nrows)] + [(t, j) for j in range(t + 1, ncols)]
            if any(a[i][j] for i, j in line if (i, j) != (t, t)):
                pivot_to(t, line)
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag + [0] * (ncols - len(diag))


def exponent_matrix(p: GroupPresentation) -> list[list[int]]:
    rows = []
    for r in p.relators:
        row = [0] * p.rank
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianize(p: GroupPresentation) -> list[int]:
    """Invariant factors of the abelianization: torsion orders > 1, then 0 per free summand."""
    inv = smith_invariants(exponent_matrix(p), p.rank)
    torsion = sorted(x for x in inv if x > 1)
    return torsion + [0] * inv.count(0)


# ------------------------------------------------------------------ Tietze moves


def _canonical(w: Letters) -> Letters:
    """Least representative among cyclic rotations of w and of its inverse."""
    cands = []
    for v in (w, fg.invert(w)):
        cands += [v[i:] + v[:i] for i in range(len(v))] or [v]
    return min(cands)


def _clean(rels: Sequence[Letters]) -> list[Letters]:
    seen: set[Letters] = set()
    out = []
    for r in rels:
        r = fg.cyclic_reduce(fg.free_reduce(r))
        if not r:
            continue
        key = _canonical(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def _halves(r: Letters) -> list[tuple[Letters, Letters]]:
    """Pairs (u, v) with u = v implied by r and len(u) > len(v), longest u first."""
    n = len(r)
    out = []
    for w in (r, fg.invert(r)):
        for i in range(n):
            rot = w[i:] + w[:i]
            out += [(rot[:k], fg.invert(rot[k:])) for k in range(n // 2 + 1, n + 1)]
    return out


def _shorten_once(rels: list[Letters]) -> bool:
    """Rewrite one relator using a (weakly) shorter one; True if something changed."""
    for a, short in enumerate(rels):
        pieces = _halves(short)
        for b, s in enumerate(rels):
            if a == b or len(s) < len(short):
                continue
            for u, v in pieces:
                ss = s + s[: len(u) - 1]
                hit = next((i for i in range(len(s)) if ss[i : i + len(u)] == u), None)
                if hit is None:
                    continue
                rot = s[hit:] + s[:hit]
                new = fg.cyclic_reduce(fg.free_reduce(v + rot[len(u) :]))
                if len(new) < len(s):
                    rels[b] = new
                    return True
    return False


def _eliminate_once(gens: list[str], rels: list[Letters]) -> list[Letters] | None:
    for g in range(1, len(gens) + 1):
        cands = [r for r in rels if sum(1 for x in r if abs(x) == g) == 1]
        if cands:
            break
    else:
        return None
    r = min(cands, key=lambda r: (len(r), r))
    pos = next(i for i, x in enumerate(r) if abs(x) == g)
    before, after = r[:pos], r[pos + 1 :]
    value = fg.join(fg.invert(before), fg.invert(after)) if r[pos] > 0 else fg.join(after, before)
    images: list[Letters] = [(i,) for i in range(1, len(gens) + 1)]
    images[g - 1] = value
    renumber = [0] + [i if i < g else i - 1 for i in range(1, len(gens) + 1)]
    new_rels = []
    for s in rels:
        if s is r:
            continue
        t = fg.substitute(s, images)
        new_rels.append(tuple(renumber[x] if x > 0 else -renumber[-x] for x in t))
    del gens[g - 1]
    return _clean(new_rels)


def tietze_simplify(p: GroupPresentation, budget: int = 100) -> GroupPresentation:
    """Deterministic type I/II Tietze moves.

    Relators are reduced and deduplicated up to rotation and inversion. The
    lowest-index generator occurring exactly once in some relator is
    eliminated via the shortest such relator; when none is left, a relator
    containing more than half of a rotation of a shorter one is rewritten
    with the complement. ``budget`` caps the total number of moves.
    """
    if budget < 0:
        raise ValidationError("budget must be nonnegative")
    gens = list(p.generators)
    rels = _clean(p.relators)
    for _ in range(budget):
        reduced = _eliminate_once(gens, rels)
        if reduced is not None:
            rels = reduced
            continue
        rels.sort(key=lambda r: (len(r), r))
        if not _shorten_once(rels):
            break
        rels = _clean(rels)
    return GroupPresentation(tuple(gens), tuple(rels))


# ------------------------------------------------- homomorphisms to small groups

Perm = tuple[int, ...]


def _compose(a: Perm, b: Perm) -> Perm:
    """Left-to-right product: apply a, then b."""
    return tuple(b[a[i]] for i in range(len(a)))


def _inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _evaluate(word: Letters, images: list[Perm], invs: list[Perm], ident: Perm) -> Perm:
    acc = ident
    for x in word:
        acc = _compose(acc, images[x - 1] if x > 0 else invs[-x - 1])
    return acc


def _generated_size(gens: list[Perm], ident: Perm) -> int:
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = _compose(g, h)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return len(seen)


def count_homs_to_small_symmetric(
    p: GroupPresentation, m: int = 3, surjective: bool = False
) -> int:
    """Number of homomorphisms to the symmetric group on m <= 4 symbols (onto ones if asked)."""
    if not 1 <= m <= 4:
        raise ValidationError("symmetric group degree must be between 1 and 4")
    if p.rank > 6:
        raise ValidationError("hom counting is bounded to at most 6 generators")
    elements = list(itertools.permutations(range(m)))
    ident = tuple(range(m))
    full = len(elements)
    rank = p.rank
    # each relator is checked as soon as its highest generator is assigned
    by_level: list[list[Letters]] = [[] for _ in range(rank + 1)]
    for r in p.relators:
        by_level[max((abs(x) for x in r), default=0)].append(r)
    if any(_evaluate(r, [], [], ident) != ident for r in by_level[0]):
        return 0
    count = 0
    images: list[Perm] = []
    invs: list[Perm] = []

    def extend(level: int) -> None:
        nonlocal count
        if level == rank:
            if not surjective or _generated_size(images, ident) == full:
                count += 1
            return
        for g in elements:
            images.append(g)
            invs.append(_inverse(g))
            if all(_evaluate(r, images, invs, ident) == ident for r in by_level[level + 1]):
                extend(level + 1)
            images.pop()
            invs.pop()

    extend(0)
    return count
