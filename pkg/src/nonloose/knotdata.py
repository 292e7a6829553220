"""Curated knot records: torus-knot families, unknots, and named examples.

Records are generated by formula rather than kept in a static table.  For
records in the tight S^3 the constructor enforces the Bennequin bound
max_tb + |rot| <= -chi; records living in an overtwisted structure may
violate it, which is the whole point of the subject.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import gcd
from pathlib import Path

from .errors import InvalidParams, UnknownTag

AMBIENT_TIGHT_S3 = "tight-S3"


def ambient_overtwisted_s3(hopf: int) -> str:
    return f"overtwisted-S3(hopf={hopf})"


@dataclass(frozen=True)
class KnotRecord:
    family: str
    max_tb: int | None
    rot_at_max_tb: frozenset[int]
    chi: int
    g_s: int | None = None
    plus_one_surgery_overtwisted: bool | None = None
    ambient: str = AMBIENT_TIGHT_S3
    order_positive: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rot_at_max_tb", frozenset(self.rot_at_max_tb))
        if self.chi > 1:
            raise InvalidParams(f"chi must be <= 1, got {self.chi}")
        if self.g_s is not None and self.g_s < 0:
            raise InvalidParams("smooth 4-ball genus must be nonnegative")
        if self.ambient == AMBIENT_TIGHT_S3 and self.max_tb is not None:
            for r in self.rot_at_max_tb:
                if self.max_tb + abs(r) > -self.chi:
                    raise InvalidParams(
                        f"record violates the Bennequin bound: "
                        f"{self.max_tb} + |{r}| > {-self.chi}"
                    )


def unknot_record() -> KnotRecord:
    return KnotRecord("unknot", max_tb=-1, rot_at_max_tb=frozenset({0}), chi=1)


def negative_torus_record(p: int, q: int) -> KnotRecord:
    """Record of the negative torus knot T(p, q) with -p > q >= 2 coprime.

    Maximal tb is pq, realized with rotation number p + q, and
    chi = q - p + pq.  (+1)-surgery on the maximal representative is
    overtwisted.  q = 1 is rejected: that curve is an unknot and the
    formulas do not apply to it.
    """
    if not (q >= 2 and -p > q and gcd(p, q) == 1):
        raise InvalidParams(
            f"need coprime (p, q) with -p > q >= 2, got ({p}, {q})"
        )
    return KnotRecord(
        family=f"torus({p},{q})",
        max_tb=p * q,
        rot_at_max_tb=frozenset({p + q}),
        chi=q - p + p * q,
        plus_one_surgery_overtwisted=True,
    )


def positive_torus_record(p: int, q: int) -> KnotRecord:
    """Record of the positive torus knot T(p, q), p, q >= 2 coprime.

    Maximal tb is pq - p - q = 2 g_s - 1 with rotation number 0.
    """
    if not (p >= 2 and q >= 2 and gcd(p, q) == 1):
        raise InvalidParams(
            f"need coprime (p, q) with p, q >= 2, got ({p}, {q})"
        )
    return KnotRecord(
        family=f"torus({p},{q})",
        max_tb=p * q - p - q,
        rot_at_max_tb=frozenset({0}),
        chi=p + q - p * q,
        g_s=(p - 1) * (q - 1) // 2,
    )


def nonloose_unknot_table(n_max: int) -> list[tuple[int, int]]:
    """The (tb, rot) pairs realizable by non-loose unknots, for tb up to n_max."""
    if n_max < 1:
        raise InvalidParams(f"n_max must be >= 1, got {n_max}")
    pairs: list[tuple[int, int]] = []
    for n in range(1, n_max + 1):
        pairs.append((n, n - 1))
        if n > 1:
            pairs.append((n, -(n - 1)))
    return pairs


_L2Q_RE = re.compile(r"L2q\((\d+)\)")
_LOSS_RE = re.compile(r"LOSSfamily\((\d+)\)")


def named_example(tag: str) -> KnotRecord:
    """Named records used by the certificate examples.

    ``L2q(q)``: the non-loose (2, q) torus knot in the overtwisted S^3 of
    Hopf invariant -1, with tb = q and rot = 0 (q odd, >= 3).

    ``LOSSfamily(n)``: the (2, 2n-1) torus knot family in the overtwisted
    S^3 of Hopf invariant 1-2n, carrying a nonvanishing positive-order
    torsion invariant (n >= 2; n = 1 would be an unknot).
    """
    m = _L2Q_RE.fullmatch(tag)
    if m:
        q = int(m.group(1))
        if q < 3 or q % 2 == 0:
            raise UnknownTag(f"L2q needs odd q >= 3, got {q}")
        return KnotRecord(
            family=f"torus(2,{q})",
            max_tb=q,
            rot_at_max_tb=frozenset({0}),
            chi=2 - q,
            ambient=ambient_overtwisted_s3(-1),
        )
    m = _LOSS_RE.fullmatch(tag)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UnknownTag(f"LOSSfamily needs n >= 2, got {n}")
        return KnotRecord(
            family=f"torus(2,{2 * n - 1})",
            max_tb=None,
            rot_at_max_tb=frozenset(),
            chi=3 - 2 * n,
            ambient=ambient_overtwisted_s3(1 - 2 * n),
            order_positive=True,
        )
    raise UnknownTag(f"unrecognized tag {tag!r}")


_RECORD_KEYS = {
    "family",
    "max_tb",
    "rot_at_max_tb",
    "chi",
    "g_s",
    "plus_one_surgery_overtwisted",
    "ambient",
    "order_positive",
}


def record_to_dict(rec: KnotRecord) -> dict:
    return {
        "family": rec.family,
        "max_tb": rec.max_tb,
        "rot_at_max_tb": sorted(rec.rot_at_max_tb),
        "chi": rec.chi,
        "g_s": rec.g_s,
        "plus_one_surgery_overtwisted": rec.plus_one_surgery_overtwisted,
        "ambient": rec.ambient,
        "order_positive": rec.order_positive,
    }


def record_from_dict(doc: dict) -> KnotRecord:
    if not isinstance(doc, dict):
        raise InvalidParams(f"record entry must be an object, got {type(doc).__name__}")
    unknown = set(doc) - _RECORD_KEYS
    if unknown:
        raise InvalidParams(f"unknown record keys: {sorted(unknown)}")
    try:
        return KnotRecord(
            family=str(doc["family"]),
            max_tb=None if doc.get("max_tb") is None else int(doc["max_tb"]),
            rot_at_max_tb=frozenset(int(r) for r in doc.get("rot_at_max_tb", [])),
            chi=int(doc["chi"]),
            g_s=None if doc.get("g_s") is None else int(doc["g_s"]),
            plus_one_surgery_overtwisted=doc.get("plus_one_surgery_overtwisted"),
            ambient=str(doc.get("ambient", AMBIENT_TIGHT_S3)),
            order_positive=bool(doc.get("order_positive", False)),
        )
    except KeyError as exc:
        raise InvalidParams(f"record entry missing key {exc}") from exc


def load_records(path: str | Path) -> tuple[KnotRecord, ...]:
    """Read a user-supplied JSON list of KnotRecord fields."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidParams(f"cannot read records file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidParams(f"records file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise InvalidParams("records file must hold a JSON list")
    return tuple(record_from_dict(entry) for entry in data)
