"""Reference implementations that share no code with the package.

* Artin action computed in sympy's free group, plus a list-based twin
  for long words.
* Unreduced Burau matrices with exact Laurent-polynomial entries.
* Milnor numbers from a Groebner basis of the Jacobian ideal.
* Smith normal form from sympy.
"""

from __future__ import annotations

from functools import lru_cache

import sympy as sp
from sympy.combinatorics.free_groups import free_group
from sympy.matrices.normalforms import smith_normal_form

T = sp.Symbol("t")


@lru_cache(maxsize=None)
def _group(rank: int):
    F, *gens = free_group(" ".join(f"x{i}" for i in range(1, rank + 1)))
    return F, tuple(gens)


def _letter_table(x: int, gens) -> dict:
    """Images of the generators under a single letter (right action)."""
    j = abs(x) - 1
    a, b = gens[j], gens[j + 1]
    if x > 0:
        return {a: b, b: b * a * b**-1}
    return {a: a**-1 * b * a, b: a}


def _substitute(w, table: dict, gens):
    acc = w.group.identity
    for sym, e in w.array_form:
        g = gens[int(str(sym)[1:]) - 1]
        acc = acc * table.get(g, g) ** e
    return acc


def artin_images(letters, strands: int) -> list:
    """Images of x_1..x_d under the braid, as sympy free-group words."""
    _, gens = _group(strands)
    images = list(gens)
    # x^(ab) = (x^a)^b: substitute the next letter's images into the current words
    for x in letters:
        table = _letter_table(x, gens)
        images = [_substitute(w, table, gens) for w in images]
    return images


def oracle_equal(a, b) -> bool:
    """Exact braid equality via the action computed in sympy."""
    assert a.strands == b.strands
    return artin_images(a.letters, a.strands) == artin_images(b.letters, b.strands)


def image_strings(b) -> list[str]:
    return [str(w) for w in artin_images(b.letters, b.strands)]


def burau(letters, strands: int) -> sp.Matrix:
    """Unreduced Burau matrix of a braid word."""
    m = sp.eye(strands)
    for x in letters:
        i = abs(x) - 1
        g = sp.eye(strands)
        if x > 0:
            g[i, i], g[i, i + 1], g[i + 1, i], g[i + 1, i + 1] = 1 - T, T, 1, 0
        else:
            g[i, i], g[i, i + 1], g[i + 1, i], g[i + 1, i + 1] = 0, 1, 1 / T, 1 - 1 / T
        m = m * g
    return m.applyfunc(lambda e: sp.simplify(e))


def burau_equal(a, b) -> bool:
    diff = burau(a.letters, a.strands) - burau(b.letters, b.strands)
    return all(sp.simplify(e) == 0 for e in diff)


def milnor_number(poly, x, y) -> int:
    """dim C[x, y] / (f_x, f_y) counted by standard monomials of a Groebner basis.

    Valid for the isolated singularities used in the tests (the origin is the
    only critical point of a quasi-homogeneous polynomial).
    """
    G = sp.groebner([sp.diff(poly, x), sp.diff(poly, y)], x, y, order="grevlex")
    leads = [sp.Poly(g, x, y).monoms(order="grevlex")[0] for g in G.exprs]
    bound = 1 + max(max(m) for m in leads) * 2
    count = 0
    for i in range(bound + 1):
        for j in range(bound + 1):
            if not any(i >= a and j >= b for a, b in leads):
                count += 1
    return count


def snf_diagonal(rows: list[list[int]], ncols: int) -> list[int]:
    """Nonzero Smith diagonal entries in increasing order, then zeros up to ``ncols``."""
    if not rows:
        return [0] * ncols
    s = smith_normal_form(sp.Matrix(rows), domain=sp.ZZ)
    nonzero = sorted(abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0)
    return nonzero + [0] * (ncols - len(nonzero))


def snf_invariants(rows: list[list[int]], ncols: int) -> list[int]:
    """Abelian group invariants: torsion orders above 1, then one 0 per free summand."""
    diag = snf_diagonal(rows, ncols)
    return [x for x in diag if x > 1] + [0] * diag.count(0)


def _reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def fast_artin_images(letters, strands: int) -> list[list[int]]:
    """The same right action on signed-int lists, composed from the last letter.

    The image of mu_i under a w equals the image under w of the image under a,
    so each letter only rewrites the two images it touches.
    """
    images = [[i] for i in range(1, strands + 1)]
    for x in reversed(letters):
        j = abs(x) - 1
        a, b = images[j], images[j + 1]
        if x > 0:
            images[j], images[j + 1] = b, _reduce(b + a + [-y for y in reversed(b)])
        else:
            images[j], images[j + 1] = _reduce([-y for y in reversed(a)] + b + a), a
    return images


def fast_equal(a, b) -> bool:
    assert a.strands == b.strands
    return fast_artin_images(a.letters, a.strands) == fast_artin_images(b.letters, b.strands)


def twist_letters(d: int) -> list[int]:
    """(s_{d-1} ... s_1)^d written out directly."""
    return list(range(d - 1, 0, -1)) * d


def fast_is_generic(f) -> bool:
    d = f.strands
    letters = [x for e in reversed(f.entries) for x in e.letters]
    return fast_artin_images(letters, d) == fast_artin_images(twist_letters(d), d)
