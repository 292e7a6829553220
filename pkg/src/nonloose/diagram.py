"""Combinatorial front diagrams of Legendrian knots.

A front word lists events left to right, each acting on a stack of strands
numbered upward from 1:

  * ``l i`` left cusp: inserts two strands, joined at the cusp, at heights
    i and i+1 (strands previously at height >= i move up by two);
  * ``r i`` right cusp: joins and removes the strands at heights i and i+1;
  * ``x i`` crossing: the strands at heights i and i+1 exchange heights.

A word is valid when every position is in range, the strand count starts and
ends at zero without dipping negative, and tracing the cusp identifications
closes up into a single component.  Knots only; words tracing out links are
rejected.

Sign conventions, fixed once here and inherited by everything downstream:

  * At a crossing the descending strand has the lesser slope and passes in
    front of the ascending one.
  * A crossing is positive exactly when its two strands point in the same
    horizontal direction.  With the resolution rule above this is the usual
    planar convention (positively oriented over/under tangent frame), and it
    gives the standard maximal-tb trefoil front
    ``l 1 ; l 2 ; x 1 ; x 1 ; x 1 ; r 2 ; r 1`` writhe +3.
  * A cusp counts as "up" when the traversal enters it on the lower strand
    and "down" when it enters on the upper strand, so a positive
    stabilization creates two down cusps.

With writhe w and cusp counts (u, d):  tb = w - (u + d)/2,  rot = (d - u)/2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    EmptyWord,
    FrontParseError,
    MultipleComponents,
    NonzeroFinalStrands,
    PositionOutOfRange,
    UnknownToken,
)


class EventKind(Enum):
    LEFT_CUSP = "l"
    RIGHT_CUSP = "r"
    CROSSING = "x"


class Direction(Enum):
    RIGHTWARD = "rightward"
    LEFTWARD = "leftward"

    @property
    def reversed(self) -> "Direction":
        return Direction.LEFTWARD if self is Direction.RIGHTWARD else Direction.RIGHTWARD


@dataclass(frozen=True)
class FrontEvent:
    kind: EventKind
    position: int


@dataclass(frozen=True)
class _Trace:
    """Arc bookkeeping of a valid word.

    Arcs are maximal strand segments between cusps, numbered in creation
    order.  Cusp pairs are (event_index, lower_arc, upper_arc); crossings are
    (event_index, ascending_arc, descending_arc).
    """

    arc_count: int
    left_pairs: tuple[tuple[int, int, int], ...]
    right_pairs: tuple[tuple[int, int, int], ...]
    crossings: tuple[tuple[int, int, int], ...]


def _trace(events: tuple[FrontEvent, ...]) -> _Trace:
    if not events:
        raise EmptyWord("a front word needs at least one event")
    stack: list[int] = []
    next_arc = 0
    left_pairs: list[tuple[int, int, int]] = []
    right_pairs: list[tuple[int, int, int]] = []
    crossings: list[tuple[int, int, int]] = []

    for k, ev in enumerate(events):
        n = len(stack)
        i = ev.position
        if ev.kind is EventKind.LEFT_CUSP:
            if not 1 <= i <= n + 1:
                raise PositionOutOfRange(
                    f"event {k}: left cusp at {i} with {n} strands", event_index=k
                )
            lo, hi = next_arc, next_arc + 1
            next_arc += 2
            stack[i - 1 : i - 1] = [lo, hi]
            left_pairs.append((k, lo, hi))
        elif ev.kind is EventKind.RIGHT_CUSP:
            if not 1 <= i <= n - 1:
                raise PositionOutOfRange(
                    f"event {k}: right cusp at {i} with {n} strands", event_index=k
                )
            lo, hi = stack[i - 1], stack[i]
            del stack[i - 1 : i + 1]
            right_pairs.append((k, lo, hi))
        else:
            if not 1 <= i <= n - 1:
                raise PositionOutOfRange(
                    f"event {k}: crossing at {i} with {n} strands", event_index=k
                )
            asc, desc = stack[i - 1], stack[i]
            stack[i - 1], stack[i] = desc, asc
            crossings.append((k, asc, desc))

    if stack:
        raise NonzeroFinalStrands(f"{len(stack)} strands left open at the end")

    tr = _Trace(next_arc, tuple(left_pairs), tuple(right_pairs), tuple(crossings))
    if len(_walk(tr)) != tr.arc_count:
        raise MultipleComponents("front word traces out more than one component")
    return tr


def _partners(tr: _Trace) -> tuple[dict[int, tuple[int, int, bool]], dict[int, tuple[int, int, bool]]]:
    # arc -> (partner arc, event index, entered_on_lower)
    left: dict[int, tuple[int, int, bool]] = {}
    right: dict[int, tuple[int, int, bool]] = {}
    for k, lo, hi in tr.left_pairs:
        left[lo] = (hi, k, True)
        left[hi] = (lo, k, False)
    for k, lo, hi in tr.right_pairs:
        right[lo] = (hi, k, True)
        right[hi] = (lo, k, False)
    return left, right


def _walk(tr: _Trace) -> list[tuple[int, bool, bool]]:
    """Traverse the component from the first cusp's lower arc, rightward.

    Returns one entry per visited arc: (arc, moving_right, entered_lower)
    where entered_lower describes the cusp the arc runs into.
    """
    left, right = _partners(tr)
    start = tr.left_pairs[0][1]
    arc, moving_right = start, True
    out: list[tuple[int, bool, bool]] = []
    while True:
        partner, _, entered_lower = (right if moving_right else left)[arc]
        out.append((arc, moving_right, entered_lower))
        arc, moving_right = partner, not moving_right
        if arc == start and moving_right:
            return out


@dataclass(frozen=True)
class FrontWord:
    """A validated front word.  Construction rejects invalid words."""

    events: tuple[FrontEvent, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        _trace(self.events)

    def __len__(self) -> int:
        return len(self.events)


@dataclass(frozen=True)
class OrientedFront:
    """A front word with a traversal direction on every arc.

    ``arc_directions[a]`` is the horizontal direction in which the component
    runs along arc ``a``.  Reversing the base direction flips every flag.
    """

    word: FrontWord
    base_direction: Direction
    arc_directions: tuple[Direction, ...]
    writhe: int
    up_cusps: int
    down_cusps: int


_NUMBER_RE = re.compile(r"\d+")


def parse_front(text: str) -> FrontWord:
    """Parse the ``l/r/x <position>`` token stream into a validated word."""
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    tokens = stripped.replace(";", " ").split()
    if not tokens:
        raise EmptyWord("no events in input")
    kinds = {k.value: k for k in EventKind}
    events: list[FrontEvent] = []
    pos = 0
    while pos < len(tokens):
        tok = tokens[pos]
        if tok not in kinds:
            raise UnknownToken(f"unknown token {tok!r}")
        if pos + 1 >= len(tokens):
            raise UnknownToken(f"missing position after {tok!r}")
        num = tokens[pos + 1]
        if not _NUMBER_RE.fullmatch(num):
            raise UnknownToken(f"expected a positive integer after {tok!r}, got {num!r}")
        value = int(num)
        if value < 1:
            raise PositionOutOfRange(
                f"event {len(events)}: position must be >= 1", event_index=len(events)
            )
        events.append(FrontEvent(kinds[tok], value))
        pos += 2
    return FrontWord(tuple(events))


def serialize_front(word: FrontWord) -> str:
    """One event per line; inverse of :func:`parse_front`."""
    return "".join(f"{e.kind.value} {e.position}\n" for e in word.events)


def resolve_orientation(
    word: FrontWord, base_direction: Direction = Direction.RIGHTWARD
) -> OrientedFront:
    """Orient the component and derive writhe and cusp counts.

    The traversal starts on the lower strand of the first left cusp, moving
    in ``base_direction``.
    """
    tr = _trace(word.events)
    walk = _walk(tr)
    flip = base_direction is Direction.LEFTWARD
    dirs: list[Direction | None] = [None] * tr.arc_count
    up = down = 0
    for arc, moving_right, entered_lower in walk:
        if flip:
            moving_right = not moving_right
            entered_lower = not entered_lower
        dirs[arc] = Direction.RIGHTWARD if moving_right else Direction.LEFTWARD
        if entered_lower:
            up += 1
        else:
            down += 1
    writhe = sum(
        1 if dirs[asc] is dirs[desc] else -1 for _, asc, desc in tr.crossings
    )
    return OrientedFront(word, base_direction, tuple(dirs), writhe, up, down)


def tb(front: OrientedFront) -> int:
    """Thurston-Bennequin number: writhe minus half the cusp count."""
    return front.writhe - (front.up_cusps + front.down_cusps) // 2


def rot(front: OrientedFront) -> int:
    """Rotation number: half the down-minus-up cusp count."""
    return (front.down_cusps - front.up_cusps) // 2


def reverse_orientation(front: OrientedFront) -> OrientedFront:
    """Flip every direction flag; tb is unchanged and rot negates."""
    return resolve_orientation(front.word, front.base_direction.reversed)


def stabilize_front(front: OrientedFront, sign: str) -> OrientedFront:
    """Insert a stabilization zigzag right after the first left cusp.

    The zigzag rides the lower strand of the first cusp, whose traversal
    direction equals the base direction; which of the two zigzag shapes gives
    the requested sign depends on that direction.  tb drops by 1 and rot
    moves by +1 or -1 according to ``sign``.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    positive = sign == "+"
    onto_rightward = front.base_direction is Direction.RIGHTWARD
    if positive == onto_rightward:
        zigzag = (
            FrontEvent(EventKind.LEFT_CUSP, 1),
            FrontEvent(EventKind.RIGHT_CUSP, 2),
        )
    else:
        zigzag = (
            FrontEvent(EventKind.LEFT_CUSP, 2),
            FrontEvent(EventKind.RIGHT_CUSP, 1),
        )
    events = front.word.events[:1] + zigzag + front.word.events[1:]
    return resolve_orientation(FrontWord(events), front.base_direction)


def detect_syntactic_destabilization(word: FrontWord) -> tuple[int, int] | None:
    """Find a removable zigzag: adjacent left/right cusps at offset one.

    Returns the event-index pair of the first such zigzag, or None.  Absence
    does not certify that the knot admits no destabilization at all.
    """
    ev = word.events
    for k in range(len(ev) - 1):
        a, b = ev[k], ev[k + 1]
        if (
            a.kind is EventKind.LEFT_CUSP
            and b.kind is EventKind.RIGHT_CUSP
            and abs(a.position - b.position) == 1
        ):
            candidate = ev[:k] + ev[k + 2 :]
            try:
                FrontWord(candidate)
            except FrontParseError:
                continue
            return (k, k + 1)
    return None


def destabilize_front(word: FrontWord, pair: tuple[int, int]) -> FrontWord:
    """Remove the zigzag found by :func:`detect_syntactic_destabilization`."""
    i, j = pair
    ev = word.events
    if not (
        0 <= i < len(ev)
        and j == i + 1
        and j < len(ev)
        and ev[i].kind is EventKind.LEFT_CUSP
        and ev[j].kind is EventKind.RIGHT_CUSP
        and abs(ev[i].position - ev[j].position) == 1
    ):
        raise ValueError(f"events {pair} do not form a removable zigzag")
    return FrontWord(ev[:i] + ev[j + 1 :])
