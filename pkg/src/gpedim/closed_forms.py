"""Published closed forms for GP(n,1) and GP(n,2).

Each representation table is a list of `FormulaCell` rows copied verbatim
from the source (expressions in ``i`` and ``t``). Nothing here is corrected
against BFS; `gpedim.verify` does that comparison and reports mismatches.

Triples are stored in the order the source lists the landmarks, ``(u_0, x, y)``.
For every case that order already is ascending vertex id, so the stored
permutation is the identity; it is kept per case so the convention stays
explicit.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalCoverageError, InvalidSpec, OutOfScope
from .graph import Graph, build_generalized_petersen


@dataclass(frozen=True)
class FormulaCell:
    family: str
    lo: str
    hi: str
    triple: tuple[str, str, str]
    source: str

    def _eval(self, expr: str, i: int, t: int) -> int:
        return eval(_compiled(expr), {"__builtins__": {}}, {"i": i, "t": t})

    def bounds(self, t: int) -> tuple[int, int]:
        return self._eval(self.lo, 0, t), self._eval(self.hi, 0, t)

    def matches(self, i: int, t: int) -> bool:
        lo, hi = self.bounds(t)
        return lo <= i <= hi

    def evaluate(self, i: int, t: int) -> tuple[int, int, int]:
        return tuple(self._eval(x, i, t) for x in self.triple)

    @property
    def condition(self) -> str:
        if self.lo == self.hi:
            return f"i={self.lo}"
        return f"{self.lo} <= i <= {self.hi}"

    def to_json(self) -> dict:
        return {"family": self.family, "range": self.condition, "lo": self.lo,
                "hi": self.hi, "triple": list(self.triple), "source": self.source}


@lru_cache(maxsize=None)
def _compiled(expr: str):
    return compile(expr, "<cell>", "eval")


def _cells(source: str, rows: list[tuple]) -> tuple[FormulaCell, ...]:
    out = []
    family = None
    for row in rows:
        if len(row) == 4:
            family, *row = row
        lo, hi, triple = row
        out.append(FormulaCell(family, lo, hi, tuple(triple.split(";")), source))
    return tuple(out)


# ---------------------------------------------------------------- GP(n, 1)
# S = (u0, u1, v0)

K1_EVEN = _cells("Theorem 3, case n=2t", [
    ("u_iu_{i+1}", "0", "0", "0;0;1"),
    ("1", "t-1", "i;i-1;i+1"),
    ("t", "t", "t-1;t-1;t"),
    ("t+1", "2*t-1", "2*t-1-i;2*t-i;2*t-i"),
    ("u_iv_i", "0", "0", "0;1;0"),
    ("1", "t", "i;i-1;i"),
    ("t+1", "2*t-1", "2*t-i;2*t+1-i;2*t-i"),
    ("v_iv_{i+1}", "0", "0", "1;1;0"),
    ("1", "t-1", "i+1;i;i"),
    ("t", "t", "t;t;t-1"),
    ("t+1", "2*t-2", "2*t-i;2*t+1-i;2*t-1-i"),
    ("2*t-1", "2*t-1", "1;2;0"),
])

K1_ODD = _cells("Theorem 3, case n=2t+1", [
    ("u_iu_{i+1}", "0", "0", "0;0;1"),
    ("1", "t", "i;i-1;i+1"),
    ("t+1", "2*t", "2*t-i;2*t+1-i;2*t+1-i"),
    ("u_iv_i", "0", "0", "0;1;0"),
    ("1", "t", "i;i-1;i"),
    ("t+1", "t+1", "t;t;t"),
    ("t+2", "2*t", "2*t+1-i;2*t+2-i;2*t+1-i"),
    ("v_iv_{i+1}", "0", "0", "1;1;0"),
    ("1", "t", "i+1;i;i"),
    ("t+1", "2*t", "2*t+1-i;2*t+2-i;2*t-i"),
])

# ---------------------------------------------------------------- GP(n, 2)

OUT_E, OUT_O = "u_{2i}u_{2i+1}", "u_{2i+1}u_{2i+2}"
SPK_E, SPK_O = "u_{2i}v_{2i}", "u_{2i+1}v_{2i+1}"
INN_E, INN_O = "v_{2i}v_{2i+2}", "v_{2i+1}v_{2i+3}"

# S = (u0, v3, v_{2t+3})
TABLE1 = _cells("Table 1 (n=4t)", [
    (OUT_E, "0", "0", "0;2;t"),
    ("1", "1", "2;1;t+1"),
    ("2", "t", "i+2;i;t+2-i"),
    ("t+1", "2*t-3", "2*t+2-i;2*t+2-i;i-t"),
    ("2*t-2", "2*t-2", "3;4;t-2"),
    ("2*t-1", "2*t-1", "1;3;t-1"),
    (OUT_O, "0", "0", "1;2;t"),
    ("1", "1", "3;1;t+1"),
    ("2", "t-1", "i+3;i;t+2-i"),
    ("t", "t", "t+1;t;2"),
    ("t+1", "2*t-3", "2*t+1-i;2*t+2-i;i-t"),
    ("2*t-2", "2*t-2", "2;4;t-2"),
    ("2*t-1", "2*t-1", "0;3;t-1"),
    (SPK_E, "0", "0", "0;3;t"),
    ("1", "1", "2;2;t+1"),
    ("2", "t", "i+1;i;t+3-i"),
    ("t+1", "t+1", "t;t+1;2"),
    ("t+2", "2*t-1", "2*t+1-i;2*t+3-i;i-t"),
    (SPK_O, "0", "0", "1;1;t-1"),
    ("1", "t-1", "i+2;i-1;t+1-i"),
    ("t", "t", "t+1;t-1;1"),
    ("t+1", "2*t-2", "2*t+1-i;2*t+1-i;i-t-1"),
    ("2*t-1", "2*t-1", "1;2;t-2"),
    (INN_E, "0", "0", "1;3;t+1"),
    ("1", "1", "2;3;t+2"),
    ("2", "t-1", "i+1;i+1;t+3-i"),
    ("t", "t", "t;t+1;3"),
    ("t+1", "t+1", "t-1;t+2;3"),
    ("t+2", "2*t-2", "2*t-i;2*t+3-i;i+1-t"),
    ("2*t-1", "2*t-1", "1;4;t"),
    (INN_O, "0", "0", "2;0;t-1"),
    ("1", "t-1", "i+2;i-1;t-i"),
    ("t", "t", "t;t-1;0"),
    ("t+1", "2*t-2", "2*t-i;2*t-i;i-t-1"),
    ("2*t-1", "2*t-1", "2;1;t-2"),
])

# S = (u0, v_{2t-5}, v_{2t-4})
TABLE2 = _cells("Table 2 (n=4t+1)", [
    (OUT_E, "0", "0", "0;t-2;t-1"),
    ("1", "1", "2;t-3;t-2"),
    ("2", "t-3", "i+2;t-2-i;t-1-i"),
    ("t-2", "t", "i+2;i+4-t;i+3-t"),
    ("t+1", "2*t-3", "2*t+2-i;i+4-t;i+3-t"),
    ("2*t-2", "2*t", "4*t-2*i;3*t-1-i;3*t-1-i"),
    (OUT_O, "0", "0", "1;t-2;t-2"),
    ("1", "1", "3;t-3;t-3"),
    ("2", "t-3", "i+3;t-2-i;t-2-i"),
    ("t-2", "t-2", "t+1;2;2"),
    ("t-1", "t-1", "t+2;3;3"),
    ("t", "2*t-3", "2*t+2-i;i+4-t;i+4-t"),
    ("2*t-2", "2*t-2", "3;t;t+1"),
    ("2*t-1", "2*t-1", "1;t-1;t"),
    (SPK_E, "0", "0", "0;t-1;t-2"),
    ("1", "1", "2;t-2;t-3"),
    ("2", "t-3", "i+1;t-1-i;t-2-i"),
    ("t-2", "t", "i+1;i+4-t;i+2-t"),
    ("t+1", "2*t-3", "2*t+2-i;i+4-t;i+2-t"),
    ("2*t-2", "2*t-2", "4;t;t"),
    ("2*t-1", "2*t-1", "3;t-1;t+1"),
    ("2*t", "2*t", "1;t-2;t"),
    (SPK_O, "0", "0", "1;t-3;t-1"),
    ("1", "t-3", "i+2;t-3-i;t-1-i"),
    ("t-2", "t-2", "t;1;2"),
    ("t-1", "t-1", "t+1;2;3"),
    ("t", "2*t-3", "2*t+1-i;i+3-t;i+4-t"),
    ("2*t-2", "2*t-2", "3;t+1;t"),
    ("2*t-1", "2*t-1", "2;t;t-1"),
    (INN_E, "0", "t-4", "i+1;t-1-i;t-3-i"),
    ("t-3", "t-3", "t-2;3;0"),
    ("t-2", "t-2", "t-1;3;0"),
    ("t-1", "t-1", "t;4;1"),
    ("t", "2*t-4", "2*t+1-i;i+5-t;i+2-t"),
    ("2*t-3", "2*t-1", "2*t+1-i;3*t-3-i;i+2-t"),
    ("2*t", "2*t", "2;t-3;t"),
    (INN_O, "0", "0", "2;t-4;t-1"),
    ("1", "t-4", "i+2;t-4-i;t-1-i"),
    ("t-3", "t-3", "t-1;0;3"),
    ("t-2", "t-2", "t;1;3"),
    ("t-1", "2*t-4", "2*t-i;i+3-t;i+5-t"),
    ("2*t-3", "2*t-3", "3;t;t"),
    ("2*t-2", "2*t-2", "2;t+1;t-1"),
    ("2*t-1", "2*t-1", "1;t;t-2"),
])

# S = (u0, v_{2t-2}, v_{2t-1})
TABLE3 = _cells("Table 3 (n=4t+2)", [
    (OUT_E, "0", "0", "0;t;t+1"),
    ("1", "1", "2;t-1;t"),
    ("2", "t-1", "i+2;t-i;t+1-i"),
    ("t", "t", "t+2;2;1"),
    ("t+1", "2*t-2", "2*t+3-i;i+2-t;i+1-t"),
    ("2*t-1", "2*t-1", "3;t+1;t"),
    ("2*t", "2*t", "1;t+1;t+1"),
    (OUT_O, "0", "0", "1;t;t"),
    ("1", "1", "3;t-1;t-1"),
    ("2", "t-1", "i+3;t-i;t-i"),
    ("t", "2*t-2", "2*t+2-i;i+2-t;i+2-t"),
    ("2*t-1", "2*t-1", "2;t+1;t+1"),
    ("2*t", "2*t", "0;t+1;t+1"),
    (SPK_E, "0", "0", "0;t+1;t"),
    ("1", "1", "2;t;t-1"),
    ("2", "t-1", "i+1;t+1-i;t-i"),
    ("t", "t", "t+1;2;0"),
    ("t+1", "2*t", "2*t+2-i;i+2-t;i-t"),
    (SPK_O, "0", "0", "1;t-1;t+1"),
    ("1", "t-1", "i+2;t-1-i;t+1-i"),
    ("t", "2*t-1", "2*t+2-i;i+1-t;i+2-t"),
    ("2*t", "2*t", "1;t;t+2"),
    (INN_E, "0", "t-2", "i+1;t+1-i;t-1-i"),
    ("t-1", "t-1", "t;3;0"),
    ("t", "2*t-1", "2*t+1-i;i+3-t;i-t"),
    ("2*t", "2*t", "1;t+2;t"),
    (INN_O, "0", "t-2", "i+2;t-2-i;t+1-i"),
    ("t-1", "t-1", "t+1;0;3"),
    ("t", "2*t-1", "2*t+1-i;i+1-t;i+3-t"),
    ("2*t", "2*t", "2;t-1;t+2"),
])

# S = (u0, v_{2t-2}, v_{2t-1})
TABLE4 = _cells("Table 4 (n=4t+3)", [
    (OUT_E, "0", "0", "0;t;t+1"),
    ("1", "1", "2;t-1;t"),
    ("2", "t-1", "i+2;t-i;t+1-i"),
    ("t", "t", "t+2;2;1"),
    ("t+1", "2*t-1", "2*t+3-i;i+2-t;i+1-t"),
    ("2*t", "2*t", "2;t+2;t+1"),
    ("2*t+1", "2*t+1", "0;t+1;t+1"),
    (OUT_O, "0", "0", "1;t;t"),
    ("1", "1", "3;t-1;t-1"),
    ("2", "t-1", "i+3;t-i;t-i"),
    ("t", "2*t-2", "2*t+3-i;i+2-t;i+2-t"),
    ("2*t-1", "2*t-1", "3;t+1;t+1"),
    ("2*t", "2*t", "1;t+1;t+2"),
    (SPK_E, "0", "0", "0;t+1;t"),
    ("1", "1", "2;t;t-1"),
    ("2", "t-1", "i+1;t+1-i;t-i"),
    ("t", "t", "t+1;2;0"),
    ("t+1", "2*t-1", "2*t+3-i;i+2-t;i-t"),
    ("2*t", "2*t", "3;t+1;t"),
    ("2*t+1", "2*t+1", "1;t;t+1"),
    (SPK_O, "0", "0", "1;t-1;t+1"),
    ("1", "t-1", "i+2;t-1-i;t+1-i"),
    ("t", "2*t-1", "2*t+2-i;i+1-t;i+2-t"),
    ("2*t", "2*t", "2;t+1;t+1"),
    (INN_E, "0", "t-2", "i+1;t+1-i;t-1-i"),
    ("t-1", "t-1", "t;3;0"),
    ("t", "t", "t+1;3;0"),
    ("t+1", "2*t-2", "2*t+2-i;i+3-t;i-t"),
    ("2*t-1", "2*t-1", "3;t+1;t-1"),
    ("2*t", "2*t", "2;t;t"),
    ("2*t+1", "2*t+1", "2;t-1;t+1"),
    (INN_O, "0", "t-2", "i+2;t-2-i;t+1-i"),
    ("t-1", "t-1", "t+1;0;3"),
    ("t", "2*t-2", "2*t+1-i;i+1-t;i+3-t"),
    ("2*t-1", "2*t-1", "2;t;t+1"),
    ("2*t", "2*t", "1;t+1;t"),
])

# verbatim Table 5 rows, n -> basis labels
TABLE5 = {
    5: ("u0", "u1", "u3", "v3"),
    6: ("u0", "u1", "u2", "u3"),
    7: ("u0", "u1", "u4", "v2"),
    8: ("u0", "u2", "v4"),
    9: ("u0", "u1", "u2", "v5"),
    10: ("u0", "u3", "v6"),
    11: ("u0", "u3", "v4"),
    12: ("u0", "u3", "v4"),
    13: ("u0", "v3", "v4"),
    14: ("u0", "u4", "v1"),
    15: ("u0", "u5", "v1"),
}
TABLE5_DIMENSION = {n: len(b) for n, b in TABLE5.items()}

# published values quoted from earlier work, used only for comparisons
CITED_METRIC_DIMENSION = {1: lambda n: 2 if n % 2 else 3, 2: lambda n: 3}


@dataclass(frozen=True)
class FormulaCase:
    n: int
    k: int
    t: int
    cells: tuple[FormulaCell, ...]
    landmarks: tuple[int, ...]  # source order
    permutation: tuple[int, ...]  # canonical coordinate j = source coordinate permutation[j]


def _gp_id(label: str, n: int) -> int:
    side, idx = label[0], int(label[1:])
    return idx % n if side == "u" else n + idx % n


def _case(n: int, k: int) -> FormulaCase:
    if k == 1 and n >= 3:
        t, r = divmod(n, 2)
        cells = K1_ODD if r else K1_EVEN
        listed = ("u0", "u1", "v0")
    elif k == 2 and n >= 16:
        t, r = divmod(n, 4)
        cells = (TABLE1, TABLE2, TABLE3, TABLE4)[r]
        if r == 0:
            listed = ("u0", "v3", f"v{2 * t + 3}")
        elif r == 1:
            listed = ("u0", f"v{2 * t - 5}", f"v{2 * t - 4}")
        else:
            listed = ("u0", f"v{2 * t - 2}", f"v{2 * t - 1}")
    else:
        raise OutOfScope(f"no representation formula for GP({n},{k})")
    ids = tuple(_gp_id(x, n) for x in listed)
    perm = tuple(sorted(range(3), key=ids.__getitem__))
    return FormulaCase(n, k, t, cells, ids, perm)


def landmark_set_gp(n: int, k: int) -> tuple[int, ...]:
    """Landmark set used by the published proof (or Table 5), ascending ids."""
    if k == 2 and 5 <= n <= 15:
        return tuple(sorted(_gp_id(x, n) for x in TABLE5[n]))
    return tuple(sorted(_case(n, k).landmarks))


def family_edges(n: int, k: int) -> dict[str, list[tuple[int, int]]]:
    """Edge endpoints per family, listed by index ``i``."""
    if k == 1:
        return {
            "u_iu_{i+1}": [(i, (i + 1) % n) for i in range(n)],
            "u_iv_i": [(i, n + i) for i in range(n)],
            "v_iv_{i+1}": [(n + i, n + (i + 1) % n) for i in range(n)],
        }
    if k == 2:
        ev, od = range(0, n, 2), range(1, n, 2)
        return {
            OUT_E: [(j, (j + 1) % n) for j in ev],
            OUT_O: [(j, (j + 1) % n) for j in od],
            SPK_E: [(j, n + j) for j in ev],
            SPK_O: [(j, n + j) for j in od],
            INN_E: [(n + j, n + (j + 2) % n) for j in ev],
            INN_O: [(n + j, n + (j + 2) % n) for j in od],
        }
    raise OutOfScope(f"no formula families for k={k}")


@lru_cache(maxsize=256)
def _edge_families(n: int, k: int) -> dict[tuple[int, int], tuple[str, int]]:
    out = {}
    for fam, pairs in family_edges(n, k).items():
        for i, (a, b) in enumerate(pairs):
            out[(min(a, b), max(a, b))] = (fam, i)
    return out


def edge_family(n: int, k: int, a: int, b: int) -> tuple[str, int]:
    return _edge_families(n, k)[(min(a, b), max(a, b))]


def matching_cells(case: FormulaCase, family: str, i: int) -> list[FormulaCell]:
    return [c for c in case.cells if c.family == family and c.matches(i, case.t)]


def formula_cell(n: int, k: int, a: int, b: int) -> tuple[FormulaCell, int]:
    """The unique cell covering edge ``ab`` and the edge's index ``i``."""
    case = _case(n, k)
    fam, i = edge_family(n, k, a, b)
    hits = matching_cells(case, fam, i)
    if len(hits) != 1:
        raise InternalCoverageError(
            f"GP({n},{k}) {fam} i={i}: {len(hits)} matching cells in {case.cells[0].source}")
    return hits[0], i


def formula_representation(n: int, k: int, e: "int | tuple[int, int]",
                           g: Graph | None = None, source_order: bool = False) -> tuple[int, ...]:
    """Evaluate the published triple for edge ``e`` of GP(n,k).

    ``e`` is an edge id of the canonical GP graph or an endpoint pair.
    Coordinates follow ascending landmark id unless ``source_order``.
    """
    if isinstance(e, int):
        g = g or build_generalized_petersen(n, k)
        e = g.edges[e]
    case = _case(n, k)
    cell, i = formula_cell(n, k, *e)
    triple = cell.evaluate(i, case.t)
    if source_order:
        return triple
    return tuple(triple[j] for j in case.permutation)


def formula_cells(n: int, k: int) -> tuple[FormulaCell, ...]:
    return _case(n, k).cells


def dump_cells() -> list[dict]:
    """All transcribed cells, for audit."""
    return [c.to_json() for table in (K1_EVEN, K1_ODD, TABLE1, TABLE2, TABLE3, TABLE4)
            for c in table]


def known_dimension_gp(n: int, k: int) -> tuple[int, tuple[int, ...]] | None:
    """Published edge metric dimension and basis of GP(n,k), or None."""
    if n < 3 or k < 1 or 2 * k >= n:
        raise InvalidSpec(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    if k == 1:
        return 3, landmark_set_gp(n, 1)
    if k == 2:
        return (TABLE5_DIMENSION.get(n, 3), landmark_set_gp(n, 2))
    return None


def closed_form_baseline(family: str, n: int) -> tuple[int, int]:
    """``(beta, beta_E)`` for paths, cycles and complete graphs."""
    if family == "path" and n >= 2:
        return 1, 1
    if family == "cycle" and n >= 3:
        return 2, 2
    if family == "complete" and n >= 2:
        return n - 1, n - 1
    raise InvalidSpec(f"no baseline for {family} with n={n}")
