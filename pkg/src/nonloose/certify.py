"""Decision procedures emitting tagged certificates about non-looseness.

The sole looseness oracle implemented here is a violated Bennequin-type
inequality; every depth/tension/order statement derived from it is a bound
with an explicit witness.  Hypotheses the library cannot decide (tightness of
a complement, overtwistedness of a surgery, nonvanishing of a Floer class)
enter as boolean evidence flags supplied by the caller, and every certificate
echoes exactly the flags it consumed.

Bound bookkeeping inside certificate details uses the flat keys
``depth_min/depth_max``, ``tension_min/tension_max`` and
``order_bar_min/order_bar_max``; the consistency checker reads these to
verify order <= tension <= depth across a bundle of certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import inf
from types import MappingProxyType
from typing import Any, Iterable, Mapping

from .calculus import ClassicalPair, RationalData
from .errors import (
    AmbientMismatch,
    ContradictoryEvidence,
    IncompatibleRelation,
    InvalidParams,
    MissingChi,
    NotLoosened,
)
from .knotdata import AMBIENT_TIGHT_S3, KnotRecord, negative_torus_record
from .surgery import dual_invariants


class CheckResult(str, Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"


class Verdict(str, Enum):
    LOOSE_CERTIFIED = "LooseCertified"
    NO_OBSTRUCTION = "NoObstruction"
    DEPTH_ONE = "DepthOne"
    DEPTH_AT_LEAST_TWO = "DepthAtLeastTwo"
    DEPTH_EXACTLY_TWO = "DepthExactlyTwo"
    DEPTH_AT_MOST = "DepthAtMost"
    TENSION_UPPER_BOUND = "TensionUpperBound"
    SIGNED_TENSION_BOUND = "SignedTensionBound"
    TENSION_EXACTLY_ONE = "TensionExactlyOne"
    ORDER_BOUNDS = "OrderBounds"
    ORDER_ZERO = "OrderZero"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Reason:
    rule: str
    note: str
    inputs: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "inputs", MappingProxyType(dict(self.inputs)))


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    details: Mapping[str, Any] = field(default_factory=dict)
    reasons: tuple[Reason, ...] = ()
    assumptions: Mapping[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        if not self.reasons:
            raise InvalidParams("a certificate must carry at least one reason")
        object.__setattr__(self, "details", MappingProxyType(dict(self.details)))
        object.__setattr__(self, "reasons", tuple(self.reasons))
        object.__setattr__(self, "assumptions", MappingProxyType(dict(self.assumptions)))

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "details": _jsonable(dict(self.details)),
            "reasons": [
                {"rule": r.rule, "note": r.note, "inputs": _jsonable(dict(r.inputs))}
                for r in self.reasons
            ],
            "assumptions": dict(self.assumptions),
        }


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(value)
    return value


@dataclass(frozen=True)
class Depth2Witness:
    """Caller-verified geometric witness for the depth-two characterization."""

    surface_kind: str  # "punctured-torus" or "punctured-klein-bottle"
    tw_boundary: int
    tw_curve: int
    essential: bool
    non_separating: bool
    orientation_preserving: bool

    def __post_init__(self):
        if self.surface_kind not in ("punctured-torus", "punctured-klein-bottle"):
            raise InvalidParams(
                f"surface_kind must name a once-punctured torus or Klein bottle, "
                f"got {self.surface_kind!r}"
            )


# ---------------------------------------------------------------------------
# Bennequin-type checks: the looseness oracle.


def bennequin_null(p: ClassicalPair) -> CheckResult:
    """-|tb| + |rot| <= -chi, required of every non-loose null-homologous knot."""
    if p.chi is None:
        raise MissingChi("the classical Bennequin check needs chi")
    lhs = -abs(p.tb) + abs(p.rot)
    return CheckResult.VIOLATED if lhs > -p.chi else CheckResult.HOLDS


def bennequin_rational(d: RationalData) -> CheckResult:
    """-|tb_Q| + |rot_Q| <= -chi/r, the rational analogue; exact comparison."""
    lhs = -abs(d.tb_q) + abs(d.rot_q)
    rhs = Fraction(-d.chi, d.order_r)
    return CheckResult.VIOLATED if lhs > rhs else CheckResult.HOLDS


def transverse_bennequin(sl_q: Fraction | int, chi: int, order_r: int) -> CheckResult:
    """sl_Q <= -chi/r for non-loose transverse knots."""
    if order_r < 1:
        raise InvalidParams("homological order must be >= 1")
    return (
        CheckResult.VIOLATED
        if Fraction(sl_q) > Fraction(-chi, order_r)
        else CheckResult.HOLDS
    )


# ---------------------------------------------------------------------------
# Unknots.


def unknot_verdict(p: ClassicalPair) -> Certificate:
    """Classify a Legendrian unknot in an overtwisted structure.

    tb <= 0 is loose; so is any tb = n > 0 with rot other than +-(n-1).  The
    surviving pairs are exactly the classified non-loose candidates, which,
    when non-loose, have depth = tension = 1 and vanishing order.
    """
    details = {"knot_type": "unknot", "tb": p.tb, "rot": p.rot}
    if p.tb <= 0:
        return Certificate(
            Verdict.LOOSE_CERTIFIED,
            details={
                **details,
                "depth_min": 0,
                "depth_max": 0,
                "tension_min": 0,
                "tension_max": 0,
                "order_bar_max": 0,
            },
            reasons=(
                Reason(
                    "unknot-tb-nonpositive",
                    "a Legendrian unknot with tb <= 0 in an overtwisted structure is loose",
                    {"tb": p.tb},
                ),
            ),
        )
    if abs(p.rot) == p.tb - 1:
        return Certificate(
            Verdict.INCONCLUSIVE,
            details={
                **details,
                "possibly_nonloose": True,
                "if_nonloose": {"depth": 1, "tension": 1, "order_bar": 0},
                "order_bar_max": 0,
            },
            reasons=(
                Reason(
                    "unknot-classification",
                    "(tb, rot) = (n, +-(n-1)) matches a classified non-loose unknot",
                    {"tb": p.tb, "rot": p.rot},
                ),
                Reason(
                    "unknot-depth-tension",
                    "every non-loose unknot has depth = tension = 1",
                ),
                Reason(
                    "tb-bound-order-zero",
                    "non-loose unknots have tb >= 1, so the torsion order vanishes",
                ),
            ),
        )
    return Certificate(
        Verdict.LOOSE_CERTIFIED,
        details={
            **details,
            "depth_min": 0,
            "depth_max": 0,
            "tension_min": 0,
            "tension_max": 0,
            "order_bar_max": 0,
        },
        reasons=(
            Reason(
                "unknot-classification",
                "no non-loose unknot has these invariants, so the knot is loose",
                {"tb": p.tb, "rot": p.rot},
            ),
        ),
    )


# ---------------------------------------------------------------------------
# Tension bounds by stabilization search.

_SIDES = ("both", "positive_only", "negative_only")


def _violates(data: ClassicalPair | RationalData, a: int, b: int) -> bool:
    if isinstance(data, RationalData):
        moved = RationalData(data.tb_q - a - b, data.rot_q + a - b, data.order_r, data.chi)
        return bennequin_rational(moved) is CheckResult.VIOLATED
    moved = ClassicalPair(data.tb - a - b, data.rot + a - b, data.chi, data.oriented)
    return bennequin_null(moved) is CheckResult.VIOLATED


def tension_upper_bound(
    data: ClassicalPair | RationalData,
    max_n: int = 64,
    side: str = "both",
) -> tuple[int, tuple[int, int]] | None:
    """Least total number of stabilizations whose result violates Bennequin.

    Searches 0 <= a+b <= max_n, restricted by ``side``; the violation
    certifies that the stabilized knot is loose, so the returned total bounds
    the (signed) tension from above.  Among minimal witnesses the
    lexicographically least (a, b) is returned.  ``None`` means no violation
    within the budget, never that the tension is infinite.
    """
    if side not in _SIDES:
        raise InvalidParams(f"side must be one of {_SIDES}, got {side!r}")
    if isinstance(data, ClassicalPair) and data.chi is None:
        raise MissingChi("the stabilization search needs chi")
    if max_n < 0:
        raise InvalidParams("max_n must be nonnegative")
    for total in range(max_n + 1):
        for a in range(total + 1):
            b = total - a
            if side == "positive_only" and b != 0:
                continue
            if side == "negative_only" and a != 0:
                continue
            if _violates(data, a, b):
                return total, (a, b)
    return None


def tension_certificate(
    data: ClassicalPair | RationalData,
    max_n: int = 64,
    side: str = "both",
) -> Certificate:
    """Certificate form of :func:`tension_upper_bound`.

    A found violation yields a TensionUpperBound certificate with the witness
    echoed; an exhausted search yields NoObstruction, reporting only that no
    violation exists within the budget (the method cannot certify an infinite
    tension).
    """
    found = tension_upper_bound(data, max_n=max_n, side=side)
    if found is None:
        return Certificate(
            Verdict.NO_OBSTRUCTION,
            details={"max_n": max_n, "side": side},
            reasons=(
                Reason(
                    "stabilization-violation-search",
                    "no stabilization within the budget violates the applicable "
                    "Bennequin bound",
                    {"max_n": max_n, "side": side},
                ),
            ),
        )
    bound, witness = found
    return Certificate(
        Verdict.TENSION_UPPER_BOUND,
        details={
            "tension_max": bound,
            "witness": witness,
            "side": side,
        },
        reasons=(
            Reason(
                "stabilization-violation-search",
                "the witness stabilization violates the applicable Bennequin "
                "bound, so the stabilized knot is loose",
                {"witness": witness, "side": side},
            ),
        ),
    )


# ---------------------------------------------------------------------------
# Surgery-dual classifications.


def depth_one_dual(is_stabilization: bool, complement_tight: bool) -> Certificate:
    """Depth of the dual to an overtwisted (+1)-surgery.

    With tight complement the depth is 1 exactly when the surgered knot is a
    stabilization; an overtwisted complement means the dual is loose.
    """
    assumptions = {
        "is_stabilization": is_stabilization,
        "complement_tight": complement_tight,
    }
    if not complement_tight:
        return Certificate(
            Verdict.LOOSE_CERTIFIED,
            details={"depth_min": 0, "depth_max": 0, "tension_min": 0, "tension_max": 0},
            reasons=(
                Reason(
                    "loose-complement",
                    "an overtwisted complement is the definition of loose",
                ),
            ),
            assumptions=assumptions,
        )
    if is_stabilization:
        return Certificate(
            Verdict.DEPTH_ONE,
            details={"depth_min": 1, "depth_max": 1},
            reasons=(
                Reason(
                    "dual-depth-characterization",
                    "(+1)-surgery on a stabilization caps off an overtwisted disk "
                    "meeting the dual once",
                ),
            ),
            assumptions=assumptions,
        )
    return Certificate(
        Verdict.DEPTH_AT_LEAST_TWO,
        details={"depth_min": 2},
        reasons=(
            Reason(
                "dual-depth-characterization",
                "depth one of the dual forces the surgered knot to destabilize",
            ),
        ),
        assumptions=assumptions,
    )


def not_a_stabilization_by_max_tb(tb: int, record: KnotRecord) -> bool:
    """True when tb equals the classified maximum, so no destabilization exists.

    False only means unknown.  Sound because stabilizations strictly drop tb.
    """
    if record.ambient != AMBIENT_TIGHT_S3:
        raise AmbientMismatch(
            f"record ambient {record.ambient!r} is not the tight S3 classification"
        )
    if record.max_tb is None:
        raise InvalidParams(f"record {record.family!r} carries no maximal tb")
    if tb > record.max_tb:
        raise InvalidParams(
            f"tb = {tb} exceeds the maximal value {record.max_tb} for {record.family}"
        )
    return tb == record.max_tb


def tension_one_dual(
    tb: int, rot: int, chi: int, surgery_overtwisted: bool
) -> Certificate:
    """Tension of the dual to (+1)-surgery on a knot in the tight S^3.

    tb < -1, rot < 0 and tb + rot + 2 < chi force a positive stabilization of
    the dual to violate the rational Bennequin bound, so its tension is
    exactly 1 once the surgery is overtwisted.
    """
    failed = [
        name
        for name, ok in (
            ("tb < -1", tb < -1),
            ("rot < 0", rot < 0),
            ("tb + rot + 2 < chi", tb + rot + 2 < chi),
            ("surgery_overtwisted", surgery_overtwisted),
        )
        if not ok
    ]
    assumptions = {"surgery_overtwisted": surgery_overtwisted}
    inputs = {"tb": tb, "rot": rot, "chi": chi}
    if failed:
        return Certificate(
            Verdict.INCONCLUSIVE,
            details={**inputs, "failed_conditions": tuple(failed)},
            reasons=(
                Reason(
                    "dual-tension-criterion",
                    "hypotheses of the dual tension-one criterion are not all met",
                    inputs,
                ),
            ),
            assumptions=assumptions,
        )
    return Certificate(
        Verdict.TENSION_EXACTLY_ONE,
        details={**inputs, "tension_min": 1, "tension_max": 1},
        reasons=(
            Reason(
                "dual-tension-criterion",
                "a positive stabilization of the dual violates the rational "
                "Bennequin bound, and the dual itself is non-loose",
                inputs,
            ),
        ),
        assumptions=assumptions,
    )


def tension_less_than_depth_search(p_max: int) -> list[Certificate]:
    """Certificates with tension 1 but depth at least 2 from negative torus knots.

    Enumerates coprime (p, q) with -p > q >= 2 and |p| <= p_max.  Each
    maximal-tb representative satisfies the dual tension-one criterion, is
    certifiably not a stabilization, and has overtwisted (+1)-surgery, so the
    surgery dual separates tension from depth.
    """
    out: list[Certificate] = []
    for p in range(-3, -p_max - 1, -1):
        for q in range(2, -p):
            try:
                rec = negative_torus_record(p, q)
            except InvalidParams:
                continue
            tb, chi = rec.max_tb, rec.chi
            rot = p + q
            tension = tension_one_dual(tb, rot, chi, rec.plus_one_surgery_overtwisted)
            if tension.verdict is not Verdict.TENSION_EXACTLY_ONE:
                continue
            if not not_a_stabilization_by_max_tb(tb, rec):
                continue
            depth = depth_one_dual(is_stabilization=False, complement_tight=True)
            stabilized_dual = dual_invariants(tb, rot, 1, 0, chi)
            violation = bennequin_rational(stabilized_dual)
            if violation is not CheckResult.VIOLATED:
                continue
            out.append(
                Certificate(
                    Verdict.TENSION_EXACTLY_ONE,
                    details={
                        "knot": rec.family,
                        "tb": tb,
                        "rot": rot,
                        "chi": chi,
                        "tension_min": 1,
                        "tension_max": 1,
                        "depth_min": 2,
                        "dual_tb_q": stabilized_dual.tb_q,
                        "dual_rot_q": stabilized_dual.rot_q,
                        "dual_order_r": stabilized_dual.order_r,
                    },
                    reasons=tuple(tension.reasons)
                    + tuple(depth.reasons)
                    + (
                        Reason(
                            "max-tb-witness",
                            "tb equals the classified maximum, ruling out a "
                            "destabilization",
                            {"tb": tb, "max_tb": rec.max_tb},
                        ),
                        Reason(
                            "bennequin-rational",
                            "the stabilized dual violates the rational Bennequin bound",
                            {
                                "tb_q": stabilized_dual.tb_q,
                                "rot_q": stabilized_dual.rot_q,
                                "r": stabilized_dual.order_r,
                                "chi": chi,
                            },
                        ),
                    ),
                    assumptions={
                        "surgery_overtwisted": True,
                        "complement_tight": True,
                    },
                )
            )
    return out


def depth2_check(
    w: Depth2Witness, is_stabilization: bool, complement_tight: bool
) -> Certificate:
    """Depth-two characterization, conditioned on a caller-verified surface.

    All clauses together give depth exactly 2; any failure is reported as
    Inconclusive naming the clause (witness absence never refutes depth 2).
    """
    assumptions = {
        "is_stabilization": is_stabilization,
        "complement_tight": complement_tight,
    }
    clauses = (
        ("complement_tight", complement_tight),
        ("not_a_stabilization", not is_stabilization),
        ("tw_boundary == 0", w.tw_boundary == 0),
        ("tw_curve == +1", w.tw_curve == 1),
        ("essential", w.essential),
        ("non_separating", w.non_separating),
        ("orientation_preserving", w.orientation_preserving),
    )
    failed = [name for name, ok in clauses if not ok]
    inputs = {"surface_kind": w.surface_kind}
    if failed:
        return Certificate(
            Verdict.INCONCLUSIVE,
            details={**inputs, "failed_conditions": tuple(failed)},
            reasons=(
                Reason(
                    "depth-two-witness",
                    "a clause of the depth-two characterization fails",
                    inputs,
                ),
            ),
            assumptions=assumptions,
        )
    return Certificate(
        Verdict.DEPTH_EXACTLY_TWO,
        details={**inputs, "depth_min": 2, "depth_max": 2},
        reasons=(
            Reason(
                "depth-two-witness",
                "the punctured surface compresses to an overtwisted disk met twice, "
                "and no destabilization lowers the depth to 1",
                inputs,
            ),
        ),
        assumptions=assumptions,
    )


def possurg_depth_one(tb: int, g_s: int) -> Certificate:
    """Depth one for the image of K under the two meridional (+1)-surgeries.

    Requires tb = 2 g_s - 1 > 1, which makes (+1)-surgery on K tight.
    """
    if g_s < 0:
        raise InvalidParams("smooth 4-ball genus must be nonnegative")
    inputs = {"tb": tb, "g_s": g_s}
    failed = [
        name
        for name, ok in (("tb == 2*g_s - 1", tb == 2 * g_s - 1), ("tb > 1", tb > 1))
        if not ok
    ]
    if failed:
        return Certificate(
            Verdict.INCONCLUSIVE,
            details={**inputs, "failed_conditions": tuple(failed)},
            reasons=(
                Reason(
                    "positive-surgery-tight",
                    "the sharp slice-Bennequin hypothesis does not hold",
                    inputs,
                ),
            ),
        )
    return Certificate(
        Verdict.DEPTH_ONE,
        details={**inputs, "depth_min": 1, "depth_max": 1, "applies_to": "meridian-surgered image"},
        reasons=(
            Reason(
                "positive-surgery-tight",
                "tb = 2 g_s - 1 > 1 makes (+1)-surgery tight, so the image knot "
                "meets an overtwisted disk exactly once",
                inputs,
            ),
        ),
    )


# ---------------------------------------------------------------------------
# Order bounds from the torsion invariant.


def order_bounds(a: int, b: int, loosened: bool) -> Certificate:
    """From a loosening by a positive and b negative stabilizations:
    o(L) <= a, o(-L) <= b, and their sum bounds the unoriented order."""
    if a < 0 or b < 0:
        raise InvalidParams("stabilization counts must be nonnegative")
    if not loosened:
        raise NotLoosened("order bounds need a certified loosening")
    details = {
        "order_max": a,
        "order_reversed_max": b,
        "order_bar_max": a + b,
    }
    note = "positive stabilizations multiply the invariant by U, negative ones fix it"
    if a + b == 0:
        note = "the knot itself is loose, so the invariant and both orders vanish"
    return Certificate(
        Verdict.ORDER_BOUNDS,
        details=details,
        reasons=(
            Reason("stabilization-order-bound", note, {"a": a, "b": b}),
        ),
        assumptions={"loosened": loosened},
    )


def order_zero_by_tb_bound(
    has_tb_lower_bound: bool, order_positive: bool = False
) -> Certificate:
    """A tb lower bound on non-loose representatives kills the torsion order."""
    if has_tb_lower_bound and order_positive:
        raise ContradictoryEvidence(
            "a positive order forces negative stabilizations to stay non-loose, "
            "so tb cannot be bounded below"
        )
    if not has_tb_lower_bound:
        return Certificate(
            Verdict.INCONCLUSIVE,
            details={},
            reasons=(
                Reason(
                    "tb-bound-order-zero",
                    "no tb lower bound supplied; nothing follows",
                ),
            ),
            assumptions={"has_tb_lower_bound": has_tb_lower_bound},
        )
    return Certificate(
        Verdict.ORDER_ZERO,
        details={
            "order_bar_min": 0,
            "order_bar_max": 0,
            "t_plus_finite": True,
            "t_minus_finite": True,
        },
        reasons=(
            Reason(
                "tb-bound-order-zero",
                "stabilizing past the tb bound loosens the knot with either sign, "
                "so the invariant vanishes and both signed tensions are finite",
            ),
        ),
        assumptions={"has_tb_lower_bound": has_tb_lower_bound},
    )


# ---------------------------------------------------------------------------
# Signed refinements and transverse transfer.


def tension_refinement(
    is_positive_stab_of_pushoff: bool,
    contact_invariant_nonzero: bool,
    complement_tight: bool,
) -> Certificate:
    """Signed tensions of the dual to (+1)-surgery on a positive stabilization.

    The negative tension is exactly 1; when the contact class of (+1)-surgery
    on the destabilized knot is nonzero the positive tension exceeds 1.
    """
    assumptions = {
        "is_positive_stab_of_pushoff": is_positive_stab_of_pushoff,
        "contact_invariant_nonzero": contact_invariant_nonzero,
        "complement_tight": complement_tight,
    }
    if not complement_tight:
        return Certificate(
            Verdict.LOOSE_CERTIFIED,
            details={"depth_min": 0, "depth_max": 0, "tension_min": 0, "tension_max": 0},
            reasons=(
                Reason(
                    "loose-complement",
                    "an overtwisted complement is the definition of loose",
                ),
            ),
            assumptions=assumptions,
        )
    if not is_positive_stab_of_pushoff:
        return Certificate(
            Verdict.INCONCLUSIVE,
            details={"failed_conditions": ("is_positive_stab_of_pushoff",)},
            reasons=(
                Reason(
                    "signed-tension-refinement",
                    "the construction needs the surgered knot to be a positive "
                    "stabilization of a push-off",
                ),
            ),
            assumptions=assumptions,
        )
    details: dict[str, Any] = {
        "t_minus_min": 1,
        "t_minus_max": 1,
        "tension_min": 1,
        "tension_max": 1,
    }
    reasons = [
        Reason(
            "signed-tension-refinement",
            "one negative stabilization of the dual removes the single "
            "intersection with the capped-off overtwisted disk",
        )
    ]
    if contact_invariant_nonzero:
        details["t_plus_min"] = 2
        reasons.append(
            Reason(
                "signed-tension-refinement",
                "(-1)-surgery on a positive stabilization of the dual keeps a "
                "nonzero contact class, so one positive stabilization stays non-loose",
            )
        )
    return Certificate(
        Verdict.SIGNED_TENSION_BOUND,
        details=details,
        reasons=tuple(reasons),
        assumptions=assumptions,
    )


_RELATIONS = ("pushoff", "approximation")


def transverse_transfer(
    legendrian_cert: Certificate,
    relation: str,
    p_stabs_used: int = 0,
    is_negative_hopf_stabilization: bool = False,
) -> Certificate:
    """Transfer a Legendrian certificate to the related transverse knot.

    ``relation`` states how the transverse knot arises: as the positive
    push-off of the Legendrian knot, or with the Legendrian knot as one of
    its approximations.  Rules:

      * a loosening witness using p positive stabilizations bounds the
        transverse tension by p;
      * finite negative tension makes the push-off loose;
      * a transverse unknot is loose outright;
      * the binding of a negatively Hopf-stabilized open book (evidence
        flag) has depth = tension = 1.
    """
    if relation not in _RELATIONS:
        raise IncompatibleRelation(f"relation must be one of {_RELATIONS}, got {relation!r}")
    assumptions = {
        "is_negative_hopf_stabilization": is_negative_hopf_stabilization,
    }
    if is_negative_hopf_stabilization:
        return Certificate(
            Verdict.DEPTH_ONE,
            details={
                "depth_min": 1,
                "depth_max": 1,
                "tension_min": 1,
                "tension_max": 1,
            },
            reasons=(
                Reason(
                    "hopf-binding-depth",
                    "plumbing a positive Hopf band exposes an overtwisted disk met "
                    "once by the binding",
                ),
            ),
            assumptions=assumptions,
        )
    details = dict(legendrian_cert.details)
    if details.get("knot_type") == "unknot":
        return Certificate(
            Verdict.LOOSE_CERTIFIED,
            details={"knot_type": "unknot", "depth_min": 0, "depth_max": 0,
                     "tension_min": 0, "tension_max": 0},
            reasons=(
                Reason(
                    "transverse-unknot-loose",
                    "every transverse unknot in an overtwisted structure is loose",
                ),
            ),
            assumptions=assumptions,
        )
    if legendrian_cert.verdict is Verdict.SIGNED_TENSION_BOUND:
        if relation != "pushoff":
            raise IncompatibleRelation(
                "finite negative tension speaks about the positive push-off"
            )
        if details.get("t_minus_max") is not None:
            return Certificate(
                Verdict.LOOSE_CERTIFIED,
                details={"depth_min": 0, "depth_max": 0, "tension_min": 0,
                         "tension_max": 0},
                reasons=(
                    Reason(
                        "pushoff-loose",
                        "negative stabilizations do not move the push-off, so a "
                        "finite negative tension looses it",
                        {"t_minus_max": details["t_minus_max"]},
                    ),
                ),
                assumptions=assumptions,
            )
    if legendrian_cert.verdict is Verdict.LOOSE_CERTIFIED and relation == "pushoff":
        return Certificate(
            Verdict.LOOSE_CERTIFIED,
            details={"depth_min": 0, "depth_max": 0, "tension_min": 0, "tension_max": 0},
            reasons=(
                Reason(
                    "pushoff-loose",
                    "the push-off of a loose knot is loose (zero negative tension)",
                ),
            ),
            assumptions=assumptions,
        )
    witness = details.get("witness")
    positive_used = witness[0] if witness is not None else p_stabs_used
    if legendrian_cert.verdict is Verdict.TENSION_UPPER_BOUND:
        if positive_used == 0:
            # loosened by negative stabilizations alone, which do not move
            # the transverse knot at all
            return Certificate(
                Verdict.LOOSE_CERTIFIED,
                details={"depth_min": 0, "depth_max": 0, "tension_min": 0,
                         "tension_max": 0},
                reasons=(
                    Reason(
                        "pushoff-loose",
                        "a purely negative loosening leaves the transverse knot "
                        "unchanged, so it is loose",
                    ),
                ),
                assumptions=assumptions,
            )
        return Certificate(
            Verdict.TENSION_UPPER_BOUND,
            details={"tension_max": positive_used, "positive_stabs_used": positive_used},
            reasons=(
                Reason(
                    "approximation-tension",
                    "only the positive stabilizations of an approximation survive "
                    "as stabilizations of the transverse knot",
                    {"positive_stabs_used": positive_used},
                ),
            ),
            assumptions=assumptions,
        )
    return Certificate(
        Verdict.INCONCLUSIVE,
        details={"source_verdict": legendrian_cert.verdict.value},
        reasons=(
            Reason(
                "transverse-transfer",
                "no transfer rule applies to the supplied certificate",
            ),
        ),
        assumptions=assumptions,
    )


# ---------------------------------------------------------------------------
# Consistency of certificate bundles.


def certificate_bounds(cert: Certificate) -> dict[str, tuple[float, float]]:
    """Extract [min, max] windows for order, tension and depth.

    Unstated minimum is 0, unstated maximum is unbounded.  For conditional
    unknot certificates the ``if_nonloose`` values are used, since the bundle
    statement is conditioned on non-looseness.
    """
    d = dict(cert.details)
    conditional = d.get("if_nonloose")
    if conditional:
        d.setdefault("depth_min", conditional["depth"])
        d.setdefault("depth_max", conditional["depth"])
        d.setdefault("tension_min", conditional["tension"])
        d.setdefault("tension_max", conditional["tension"])
        d.setdefault("order_bar_max", conditional["order_bar"])
    out = {}
    for name, key in (
        ("order_bar", "order_bar"),
        ("tension", "tension"),
        ("depth", "depth"),
    ):
        lo = d.get(f"{key}_min", 0)
        hi = d.get(f"{key}_max", inf)
        out[name] = (lo, hi)
    return out


def bundle_is_consistent(cert: Certificate) -> bool:
    """Feasibility of order <= tension <= depth within the stated windows."""
    b = certificate_bounds(cert)
    o_lo, _ = b["order_bar"]
    t_lo, t_hi = b["tension"]
    d_lo, d_hi = b["depth"]
    if t_hi < o_lo:
        return False
    return d_hi >= max(t_lo, o_lo)


def check_consistency(certs: Iterable[Certificate]) -> list[Certificate]:
    """Return the certificates whose bound windows are mutually infeasible."""
    return [c for c in certs if not bundle_is_consistent(c)]
