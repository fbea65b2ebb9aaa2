"""Sliced Morse diagrams of oriented tangles with singular and alternating vertices.

A diagram is a top-to-bottom stack of slices; a slice is a left-to-right row
of tiles.  Strands crossing a horizontal level carry an orientation, DOWN
(with the sweep) or UP (against it).  Tile conventions:

  id          1 in / 1 out, either orientation, passed through unchanged.
  cup_right   0 in / 2 out, creates a strand pair oriented (DOWN, UP).
  cup_left    0 in / 2 out, creates (UP, DOWN).
  cap_left    2 in / 0 out, consumes (DOWN, UP).
  cap_right   2 in / 0 out, consumes (UP, DOWN).
  cross_pos/cross_neg/cross_sing
              2 in / 2 out, both strands DOWN on both sides.  Crossings of
              strands in any other position are expressed by composing with
              cups and caps.
  vert_alt    2 in / 2 out alternating-oriented rigid vertex: (DOWN, UP) on
              top and (DOWN, UP) below.

Cups and caps come in two flavours because the two traversal directions
carry different weights q^(+-a/2); a counterclockwise circle is the stack
[cup_right], [cap_left] and a clockwise one [cup_left], [cap_right].
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum

from .spintensor import CrossingKind


class Orient(Enum):
    DOWN = "down"
    UP = "up"


class Tile(Enum):
    ID = "id"
    CUP_RIGHT = "cup_right"
    CUP_LEFT = "cup_left"
    CAP_RIGHT = "cap_right"
    CAP_LEFT = "cap_left"
    CROSS_POS = "cross_pos"
    CROSS_NEG = "cross_neg"
    CROSS_SING = "cross_sing"
    VERT_ALT = "vert_alt"

    @property
    def width_in(self) -> int:
        return _WIDTHS[self][0]

    @property
    def width_out(self) -> int:
        return _WIDTHS[self][1]


_WIDTHS = {
    Tile.ID: (1, 1),
    Tile.CUP_RIGHT: (0, 2),
    Tile.CUP_LEFT: (0, 2),
    Tile.CAP_RIGHT: (2, 0),
    Tile.CAP_LEFT: (2, 0),
    Tile.CROSS_POS: (2, 2),
    Tile.CROSS_NEG: (2, 2),
    Tile.CROSS_SING: (2, 2),
    Tile.VERT_ALT: (2, 2),
}

CUPS = (Tile.CUP_RIGHT, Tile.CUP_LEFT)
CAPS = (Tile.CAP_RIGHT, Tile.CAP_LEFT)
CROSSINGS = (Tile.CROSS_POS, Tile.CROSS_NEG, Tile.CROSS_SING)

CROSS_TILE = {
    CrossingKind.POS: Tile.CROSS_POS,
    CrossingKind.NEG: Tile.CROSS_NEG,
    CrossingKind.SING: Tile.CROSS_SING,
}

D, U = Orient.DOWN, Orient.UP

# Fixed orientation signatures: in-orients required, out-orients produced.
_CUP_OUT = {Tile.CUP_RIGHT: (D, U), Tile.CUP_LEFT: (U, D)}
_CAP_IN = {Tile.CAP_LEFT: (D, U), Tile.CAP_RIGHT: (U, D)}


class DiagramError(ValueError):
    """Raised when a diagram fails validation or an operation's preconditions."""


def tile_out_orients(tile: Tile, ins: tuple[Orient, ...]) -> tuple[Orient, ...]:
    """Out-orientations of a tile given its in-orientations; raises on mismatch."""
    if len(ins) != tile.width_in:
        raise DiagramError(f"{tile.value} expects {tile.width_in} strands, got {len(ins)}")
    if tile is Tile.ID:
        return ins
    if tile in CUPS:
        return _CUP_OUT[tile]
    if tile in CAPS:
        if ins != _CAP_IN[tile]:
            raise DiagramError(f"{tile.value} requires orientations "
                               f"{tuple(o.value for o in _CAP_IN[tile])}, got "
                               f"{tuple(o.value for o in ins)}")
        return ()
    if tile in CROSSINGS:
        if ins != (D, D):
            raise DiagramError(f"{tile.value} requires both strands oriented down, got "
                               f"{tuple(o.value for o in ins)}")
        return (D, D)
    # alternating vertex
    if ins != (D, U):
        raise DiagramError(f"vert_alt requires orientations (down, up), got "
                           f"{tuple(o.value for o in ins)}")
    return (D, U)


@dataclass(frozen=True)
class Diagram:
    """An oriented sliced diagram; immutable after construction."""

    slices: tuple[tuple[Tile, ...], ...]
    top: tuple[Orient, ...] = ()

    def __init__(self, slices, top=()):
        object.__setattr__(self, "slices", tuple(tuple(s) for s in slices))
        object.__setattr__(self, "top", tuple(top))

    @property
    def top_width(self) -> int:
        return len(self.top)

    @property
    def bottom_width(self) -> int:
        if not self.slices:
            return self.top_width
        return sum(t.width_out for t in self.slices[-1])

    def bottom_orients(self) -> tuple[Orient, ...]:
        """Orientations on the bottom boundary (validates along the way)."""
        level = self.top
        for s in self.slices:
            level = _slice_out_orients(s, level)
        return level

    def is_closed(self) -> bool:
        return not self.top and self.bottom_width == 0

    def tiles(self):
        for i, s in enumerate(self.slices):
            for j, t in enumerate(s):
                yield i, j, t


def _slice_out_orients(tiles: tuple[Tile, ...], ins: tuple[Orient, ...]) -> tuple[Orient, ...]:
    need = sum(t.width_in for t in tiles)
    if need != len(ins):
        raise DiagramError(f"slice consumes {need} strands but {len(ins)} arrive")
    out: list[Orient] = []
    pos = 0
    for t in tiles:
        out.extend(tile_out_orients(t, ins[pos:pos + t.width_in]))
        pos += t.width_in
    return tuple(out)


def validate(d: Diagram) -> list[str]:
    """Check widths and orientation consistency; returns a list of problems.

    An empty list means the diagram is valid.  Each entry pinpoints the
    first offending slice/tile by index.
    """
    errors: list[str] = []
    level = d.top
    for i, s in enumerate(d.slices):
        need = sum(t.width_in for t in s)
        if need != len(level):
            errors.append(f"slice {i}: consumes {need} strands but {len(level)} arrive")
            return errors
        out: list[Orient] = []
        pos = 0
        for j, t in enumerate(s):
            try:
                out.extend(tile_out_orients(t, level[pos:pos + t.width_in]))
            except DiagramError as exc:
                errors.append(f"slice {i}, tile {j}: {exc}")
                return errors
            pos += t.width_in
        level = tuple(out)
    return errors


def require_valid(d: Diagram) -> None:
    problems = validate(d)
    if problems:
        raise DiagramError("; ".join(problems))


# -- braid words -------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    """A word in the singular braid monoid generators on `strands` strands."""

    strands: int
    letters: tuple[tuple[CrossingKind, int], ...] = field(default_factory=tuple)

    def __init__(self, strands: int, letters=()):
        if strands < 1:
            raise ValueError(f"braids need at least one strand, got {strands}")
        letters = tuple(letters)
        for kind, i in letters:
            if not 1 <= i < strands:
                raise ValueError(f"generator index {i} out of range for {strands} strands")
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)


_TOKEN_RE = re.compile(r"^([sSt])(\d+)$")

_LETTER_KIND = {"s": CrossingKind.POS, "S": CrossingKind.NEG, "t": CrossingKind.SING}


def parse_braid_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated tokens s<i>, S<i>, t<i> into a braid word."""
    letters = []
    for pos, token in enumerate(text.split()):
        m = _TOKEN_RE.match(token)
        if not m:
            raise ValueError(f"bad braid token {token!r} at position {pos}")
        kind, i = _LETTER_KIND[m.group(1)], int(m.group(2))
        if not 1 <= i < strands:
            raise ValueError(f"token {token!r} at position {pos}: index {i} "
                             f"out of range for {strands} strands")
        letters.append((kind, i))
    return BraidWord(strands, letters)


def braid_to_diagram(w: BraidWord) -> Diagram:
    """The open all-strands-down tangle of a braid word."""
    k = w.strands
    slices = []
    for kind, i in w.letters:
        slices.append([Tile.ID] * (i - 1) + [CROSS_TILE[kind]] + [Tile.ID] * (k - i - 1))
    return Diagram(slices, (D,) * k)


def close_braid(w: BraidWord) -> Diagram:
    """Trace closure of a braid: nested cups, the body, nested caps.

    The k return strands run upward to the right of the body; the closure of
    the empty 1-strand word is the counterclockwise circle.
    """
    k = w.strands
    slices: list[list[Tile]] = []
    for j in range(k):
        slices.append([Tile.ID] * j + [Tile.CUP_RIGHT] + [Tile.ID] * j)
    for kind, i in w.letters:
        slices.append([Tile.ID] * (i - 1) + [CROSS_TILE[kind]] + [Tile.ID] * (2 * k - i - 1))
    for j in range(k - 1, -1, -1):
        slices.append([Tile.ID] * j + [Tile.CAP_LEFT] + [Tile.ID] * j)
    return Diagram(slices)


def writhe(d: Diagram) -> int:
    """Signed classical crossing count; singular and alternating vertices count 0."""
    w = 0
    for _, _, t in d.tiles():
        if t is Tile.CROSS_POS:
            w += 1
        elif t is Tile.CROSS_NEG:
            w -= 1
    return w


def mirror(d: Diagram) -> Diagram:
    """Swap positive and negative classical crossings; an involution."""
    swap = {Tile.CROSS_POS: Tile.CROSS_NEG, Tile.CROSS_NEG: Tile.CROSS_POS}
    return Diagram(tuple(tuple(swap.get(t, t) for t in s) for s in d.slices), d.top)


def disjoint_union(a: Diagram, b: Diagram) -> Diagram:
    """Place two closed diagrams side by side."""
    if not a.is_closed() or not b.is_closed():
        raise DiagramError("disjoint union is defined for closed diagrams only")
    depth = max(len(a.slices), len(b.slices))
    slices = []
    for i in range(depth):
        left = a.slices[i] if i < len(a.slices) else ()
        right = b.slices[i] if i < len(b.slices) else ()
        slices.append(tuple(left) + tuple(right))
    return Diagram(slices)


def connected_sum(a: Diagram, b: Diagram) -> Diagram:
    """Splice two closed diagrams along two parallel arcs.

    The leftmost cap of a's final slice and the leftmost cup of b's first
    slice are removed and the freed strand pairs joined straight through,
    which realizes the connected sum along the corresponding edges.  Raises
    if the freed orientations disagree.
    """
    if not a.is_closed() or not b.is_closed():
        raise DiagramError("connected sum is defined for closed diagrams only")
    if not a.slices or not b.slices:
        raise DiagramError("connected sum needs nonempty diagrams")
    last = a.slices[-1]
    first = b.slices[0]
    if not last or last[0] not in CAPS:
        raise DiagramError("first diagram must end in a cap slice to splice")
    if not first or first[0] not in CUPS:
        raise DiagramError("second diagram must start with a cup slice to splice")
    cap, cup = last[0], first[0]
    if _CAP_IN[cap] != _CUP_OUT[cup]:
        raise DiagramError(f"orientations at splice disagree: {cap.value} vs {cup.value}")
    opened_a = a.slices[:-1] + ((Tile.ID, Tile.ID) + last[1:],)
    opened_b = ((Tile.ID, Tile.ID) + first[1:],) + b.slices[1:]
    return Diagram(opened_a + opened_b)


# -- the line-oriented JSON file format --------------------------------------


def to_json(d: Diagram) -> str:
    obj = {
        "top": [o.value for o in d.top],
        "slices": [[t.value for t in s] for s in d.slices],
    }
    return json.dumps(obj)


def from_json(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"invalid diagram JSON: {exc}") from exc
    if not isinstance(obj, dict) or "slices" not in obj:
        raise DiagramError("diagram JSON must be an object with a 'slices' key")
    try:
        top = tuple(Orient(o) for o in obj.get("top", []))
        slices = tuple(tuple(Tile(name) for name in s) for s in obj["slices"])
    except ValueError as exc:
        raise DiagramError(f"invalid diagram JSON: {exc}") from exc
    d = Diagram(slices, top)
    require_valid(d)
    return d
