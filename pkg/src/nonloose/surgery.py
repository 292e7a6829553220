"""Contact (+1)/(-1)-surgery diagrams and rational invariants of a passive knot.

A diagram holds Legendrian components with integer (tb, rot), contact
coefficients +1 or -1 on the surgered components, pairwise linking numbers,
and one distinguished passive component whose rational invariants in the
surgered manifold are computed from the linking data:

    M    = topological linking matrix of the surgered components
           (diagonal tb_i + coeff_i, off-diagonal lk_ij)
    M0   = M bordered by a zero corner and the linking numbers of the
           distinguished component
    tb_Q  = tb_0 + det M0 / det M
    rot_Q = rot_0 - <rotvec, M^{-1} lkvec>

and the homological order of the distinguished class comes from the Smith
normal form of M.  Only contact coefficients +-1 are supported; the surgered
contact manifold is unique for those slopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .calculus import RationalData
from .errors import DiagramError, InfiniteOrder, MeridionalSlope, SingularMatrix
from .linalg import (
    INFINITE,
    Matrix,
    SmithDecomposition,
    det_exact,
    homological_order,
    invert_exact,
    mat_vec,
    smith_normal_form,
)

__all__ = [
    "SurgeryComponent",
    "SurgeryDiagram",
    "SmithDecomposition",
    "linking_matrix",
    "extended_matrix",
    "det_exact",
    "invert_exact",
    "smith_normal_form",
    "homological_order",
    "rational_invariants",
    "dual_invariants",
    "diagram_from_json",
    "diagram_to_json",
    "INFINITE",
]

COEFF_PLUS = "+1"
COEFF_MINUS = "-1"
COEFF_PASSIVE = "passive"
_COEFFS = (COEFF_PLUS, COEFF_MINUS, COEFF_PASSIVE)


@dataclass(frozen=True)
class SurgeryComponent:
    id: str
    tb: int
    rot: int
    coeff: str

    def __post_init__(self):
        if self.coeff not in _COEFFS:
            raise DiagramError(
                f"component {self.id!r}: coeff must be one of {_COEFFS}, got {self.coeff!r}"
            )


@dataclass(frozen=True)
class SurgeryDiagram:
    """Ordered components, symmetric linking matrix, one passive component."""

    components: tuple[SurgeryComponent, ...]
    lk: Matrix
    distinguished: str

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "lk", tuple(tuple(row) for row in self.lk))
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise DiagramError("component ids must be unique")
        if self.distinguished not in ids:
            raise DiagramError(f"distinguished id {self.distinguished!r} not present")
        passive = [c.id for c in self.components if c.coeff == COEFF_PASSIVE]
        if passive != [self.distinguished]:
            raise DiagramError(
                "exactly the distinguished component must carry the passive coefficient"
            )
        n = len(self.components)
        if len(self.lk) != n or any(len(row) != n for row in self.lk):
            raise DiagramError("linking matrix shape must match the component count")
        for i in range(n):
            for j in range(n):
                if self.lk[i][j] != self.lk[j][i]:
                    raise DiagramError("linking matrix must be symmetric")

    @classmethod
    def build(
        cls,
        components: Sequence[SurgeryComponent],
        lk_pairs: Iterable[tuple[str, str, int]],
        distinguished: str,
    ) -> "SurgeryDiagram":
        """Assemble the symmetric linking matrix from sparse pairs (missing = 0)."""
        index = {c.id: i for i, c in enumerate(components)}
        n = len(components)
        lk = [[0] * n for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for ida, idb, value in lk_pairs:
            if ida not in index or idb not in index:
                raise DiagramError(f"linking pair names unknown component: {ida!r}, {idb!r}")
            i, j = index[ida], index[idb]
            if i == j:
                raise DiagramError(f"self-linking entry for {ida!r} is not allowed")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DiagramError(f"duplicate linking entry for ({ida!r}, {idb!r})")
            seen.add(key)
            lk[i][j] = lk[j][i] = value
        return cls(tuple(components), tuple(tuple(row) for row in lk), distinguished)

    def surgered(self) -> tuple[SurgeryComponent, ...]:
        return tuple(c for c in self.components if c.coeff != COEFF_PASSIVE)

    def passive(self) -> SurgeryComponent:
        return next(c for c in self.components if c.coeff == COEFF_PASSIVE)

    def _index(self, cid: str) -> int:
        return next(i for i, c in enumerate(self.components) if c.id == cid)


def linking_matrix(diag: SurgeryDiagram) -> Matrix:
    """Topological linking matrix over the surgered components only."""
    surgered = diag.surgered()
    idx = [diag._index(c.id) for c in surgered]
    rows = []
    for a, comp in enumerate(surgered):
        coeff = 1 if comp.coeff == COEFF_PLUS else -1
        rows.append(
            tuple(
                comp.tb + coeff if a == b else diag.lk[idx[a]][idx[b]]
                for b in range(len(surgered))
            )
        )
    return tuple(rows)


def _distinguished_lk(diag: SurgeryDiagram) -> tuple[int, ...]:
    d = diag._index(diag.distinguished)
    return tuple(diag.lk[d][diag._index(c.id)] for c in diag.surgered())


def extended_matrix(diag: SurgeryDiagram) -> Matrix:
    """M bordered by a zero corner and the distinguished linking numbers."""
    m = linking_matrix(diag)
    border = _distinguished_lk(diag)
    top = (0,) + border
    rows = [top]
    for i, row in enumerate(m):
        rows.append((border[i],) + row)
    return tuple(rows)


def rational_invariants(
    diag: SurgeryDiagram, chi: int, reverse_distinguished: bool = False
) -> RationalData:
    """Exact (tb_Q, rot_Q, r) of the distinguished component after surgery.

    ``reverse_distinguished`` evaluates the other orientation of the passive
    component (rot_Q negates, tb_Q and r are unchanged).
    """
    m = linking_matrix(diag)
    det_m = det_exact(m)
    if det_m == 0:
        raise SingularMatrix("surgery linking matrix is singular")
    lkvec = _distinguished_lk(diag)
    rotvec = tuple(c.rot for c in diag.surgered())
    dist = diag.passive()
    tb0, rot0 = dist.tb, dist.rot
    if reverse_distinguished:
        rot0 = -rot0
        lkvec = tuple(-x for x in lkvec)

    order = homological_order(m, lkvec)
    if order is INFINITE:
        raise InfiniteOrder("distinguished class has infinite homological order")

    # the bordered determinant is even in the border sign, so no adjustment
    # is needed for the reversed orientation
    tb_q = tb0 + Fraction(det_exact(extended_matrix(diag)), det_m)
    solved = mat_vec(invert_exact(m), lkvec)
    rot_q = rot0 - sum(r * s for r, s in zip(rotvec, solved))
    return RationalData(Fraction(tb_q), Fraction(rot_q), order, chi)


def dual_invariants(tb: int, rot: int, a: int, b: int, chi: int) -> RationalData:
    """Invariants of an (a, b)-stabilized push-off of the dual to (+1)-surgery.

    Builds the two-component diagram: the surgered knot with coefficient +1
    and its push-off, stabilized a times positively and b times negatively,
    as the passive component; their linking number is tb.
    """
    if tb == -1:
        raise MeridionalSlope("tb = -1 makes (+1)-surgery meridional (det M = 0)")
    comps = (
        SurgeryComponent("L", tb, rot, COEFF_PLUS),
        SurgeryComponent("L*", tb - a - b, rot + a - b, COEFF_PASSIVE),
    )
    diag = SurgeryDiagram.build(comps, [("L", "L*", tb)], "L*")
    return rational_invariants(diag, chi)


def diagram_from_json(doc: dict) -> SurgeryDiagram:
    """Load the documented JSON shape; missing lk pairs default to 0."""
    try:
        raw_components = doc["components"]
        distinguished = doc["distinguished"]
    except (TypeError, KeyError) as exc:
        raise DiagramError(f"missing required key: {exc}") from exc
    if not isinstance(raw_components, list) or not raw_components:
        raise DiagramError("'components' must be a non-empty list")
    comps = []
    for entry in raw_components:
        try:
            comps.append(
                SurgeryComponent(
                    str(entry["id"]), int(entry["tb"]), int(entry["rot"]), str(entry["coeff"])
                )
            )
        except (TypeError, KeyError, ValueError) as exc:
            raise DiagramError(f"bad component entry {entry!r}") from exc
    pairs = []
    for entry in doc.get("lk", []):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise DiagramError(f"bad lk entry {entry!r}; expected [idA, idB, int]")
        pairs.append((str(entry[0]), str(entry[1]), int(entry[2])))
    return SurgeryDiagram.build(tuple(comps), pairs, str(distinguished))


def diagram_to_json(diag: SurgeryDiagram) -> dict:
    pairs = []
    for i in range(len(diag.components)):
        for j in range(i + 1, len(diag.components)):
            if diag.lk[i][j]:
                pairs.append([diag.components[i].id, diag.components[j].id, diag.lk[i][j]])
    return {
        "components": [
            {"id": c.id, "tb": c.tb, "rot": c.rot, "coeff": c.coeff}
            for c in diag.components
        ],
        "lk": pairs,
        "distinguished": diag.distinguished,
    }
