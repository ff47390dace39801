"""Closed-form counts in terms of h (hexagon count) and y (dual-squares).

All evaluation is exact rational arithmetic; every result is asserted to be
a nonnegative integer before it is returned.  Class-dependent quantities
(the 6-matching count and the Q, U, S, R patterns) take the structure class
and, outside the cube and the tubes, the dual-square count y.

The one formula this corpus deliberately keeps wrong is available under
legacy_pattern_formula: the superseded path(5) count, used only to
demonstrate its disagreement with brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .plane_graph import GraphError


class NonIntegralResult(GraphError):
    """A closed form did not evaluate to a nonnegative integer."""


class NoClosedForm(GraphError):
    """The requested pattern has no known closed form (only W)."""


class MissingClassInput(GraphError):
    """A class-dependent formula was requested without class or y."""


class MissingCount(GraphError):
    """A recurrence identity references a count absent from the ledger."""


CLASS_NAMES = ("cube", "hexagonal-prism", "tubular", "lantern", "dispersive")


def _class_name(cls) -> str:
    """Accept a plain string or anything with a .name (enum or dataclass)."""
    if isinstance(cls, str):
        name = cls
    else:
        name = getattr(cls, "name", cls)
        name = getattr(name, "value", name)  # unwrap enum members
        if not isinstance(name, str):
            raise MissingClassInput(f"cannot interpret structure class {cls!r}")
    name = name.lower().replace("_", "-")
    if name not in CLASS_NAMES:
        raise MissingClassInput(f"unknown structure class {name!r}")
    return name


@dataclass(frozen=True)
class FormulaInput:
    """Arguments for the closed forms: h plus optional class data."""

    h: int
    cls: str | None = None
    y: int | None = None

    def __post_init__(self):
        if self.h < 0:
            raise ValueError("h must be nonnegative")
        if self.h == 1:
            raise ValueError("h = 1 cannot occur in a (4,6)-fullerene")
        if self.cls is not None:
            object.__setattr__(self, "cls", _class_name(self.cls))
        if self.cls == "cube" and self.h != 0:
            raise ValueError(f"the cube has h = 0, got h = {self.h}")
        if self.cls == "tubular" and (self.h < 3 or self.h % 3):
            raise ValueError(f"a tube with layers has h = 3t >= 3, got h = {self.h}")
        if self.cls == "hexagonal-prism" and self.h != 2:
            raise ValueError(f"the hexagonal prism has h = 2, got h = {self.h}")

    @property
    def m(self) -> int:
        return 3 * self.h + 12


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise NonIntegralResult(f"{what} evaluated to {value}, not a nonnegative integer")
    return int(value)


def _poly(h: int, coeffs: tuple) -> Fraction:
    """Evaluate sum(coeffs[i] * h**i) exactly."""
    x = Fraction(h)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + Fraction(c)
    return acc


_MATCHING_COEFFS = {
    1: (12, 3),
    2: (42, Fraction(57, 2), Fraction(9, 2)),
    3: (44, 65, Fraction(63, 2), Fraction(9, 2)),
    4: (9, Fraction(117, 4), Fraction(273, 8), Fraction(81, 4), Fraction(27, 8)),
    5: (
        0,
        Fraction(-27, 5),
        Fraction(39, 4),
        Fraction(-9, 8),
        Fraction(27, 4),
        Fraction(81, 40),
    ),
}

# 6-matching count: one polynomial for the tubes, one (plus y) for every
# other non-cube class.
_M6_TUBULAR = (
    -9,
    Fraction(1231, 30),
    Fraction(-1873, 40),
    Fraction(405, 16),
    Fraction(-99, 16),
    Fraction(-81, 80),
    Fraction(81, 80),
)
_M6_GENERAL = (
    -16,
    Fraction(407, 10),
    Fraction(-1873, 40),
    Fraction(405, 16),
    Fraction(-99, 16),
    Fraction(-81, 80),
    Fraction(81, 80),
)


def matching_formula(k: int, h: int) -> int:
    """Closed form for the k-matching count, k in 1..5."""
    inp = FormulaInput(h)
    if k not in _MATCHING_COEFFS:
        raise ValueError(f"no class-independent matching formula for k={k}")
    return _as_count(_poly(inp.h, _MATCHING_COEFFS[k]), f"M(G,{k}) at h={h}")


def matching6_formula(cls, h: int, y: int | None = None) -> int:
    """Closed form for the 6-matching count; branch chosen by class."""
    name = _class_name(cls)
    inp = FormulaInput(h, name, y)
    if name == "cube":
        if h != 0:
            raise ValueError(f"the cube has h=0, got h={h}")
        return 0
    if name == "tubular":
        if h % 3 or h < 3:
            raise ValueError(f"a tube with layers has h divisible by 3, got h={h}")
        return _as_count(_poly(h, _M6_TUBULAR), f"M(G,6) tubular at h={h}")
    if y is None:
        raise MissingClassInput(f"M(G,6) for class {name} needs the dual-square count y")
    return _as_count(_poly(h, _M6_GENERAL) + y, f"M(G,6) {name} at h={h}, y={y}")


_PATTERN_COEFFS = {
    # class-independent forms, as polynomials in h (m = 3h + 12 substituted)
    "C": (48, 12),
    "I": (72, 24),
    "H": (6,),
    "L": (24, 18),
    "O": (120, 240, 72),
    "P": (120, 48),
    "T": (12, 27, 27),
    "V": (24, 36),
    "K": (72, 180, 234, 54),
    "E": (168, 180, 36),
    "D": (96, 210, 153, 27),
    "J": (0, 54, 39, 108, 27),
}

_Q_TUBULAR = (42, 320, 144)
# non-tube, non-cube: 144 h^2 + 318 h + 6 y
_Q_GENERAL = (0, 318, 144)
_Q_CUBE = 96

# class-resolved forms for U, S, R
_USR_TUBULAR = {
    "U": (54, -68, 216, 108),
    "S": (-54, 176, -138, 108, 54),
    "R": (54, -230, Fraction(471, 2), Fraction(-477, 4), Fraction(27, 2), Fraction(81, 4)),
}
# non-tube, non-cube forms carry a -6y term; constants below exclude it
_USR_GENERAL = {
    "U": (96, -66, 216, 108),
    "S": (-96, 174, -138, 108, 54),
    "R": (96, -228, Fraction(471, 2), Fraction(-477, 4), Fraction(27, 2), Fraction(81, 4)),
}
_USR_Y_SIGN = {"U": -6, "S": 6, "R": -6}

# forms that leave the Q count symbolic: value = poly(h) + sign * (Q count)
_USR_FROM_Q = {
    "U": ((96, 252, 360, 108), -1),
    "S": ((-96, -144, -282, 108, 54), 1),
    "R": ((96, 90, Fraction(759, 2), Fraction(-477, 4), Fraction(27, 2), Fraction(81, 4)), -1),
}


def pattern_formula(name: str, inp: FormulaInput) -> int:
    """Closed form for one of the seventeen catalog pattern counts.

    Q, U, S and R depend on the structure class (and on y outside the cube
    and the tubes); W has no closed form.
    """
    if name == "W":
        raise NoClosedForm("no correct closed form is known for W; count it by brute force")
    if name in _PATTERN_COEFFS:
        return _as_count(_poly(inp.h, _PATTERN_COEFFS[name]), f"N({name}) at h={inp.h}")
    if name not in ("Q", "U", "S", "R"):
        raise ValueError(f"unknown pattern {name!r}")
    if inp.cls is None:
        raise MissingClassInput(f"N({name}) needs the structure class")
    if inp.cls == "cube":
        return _Q_CUBE if name == "Q" else 0
    if inp.cls == "tubular":
        coeffs = _Q_TUBULAR if name == "Q" else _USR_TUBULAR[name]
        return _as_count(_poly(inp.h, coeffs), f"N({name}) tubular at h={inp.h}")
    if inp.y is None:
        raise MissingClassInput(f"N({name}) for class {inp.cls} needs y")
    if name == "Q":
        value = _poly(inp.h, _Q_GENERAL) + 6 * inp.y
    else:
        value = _poly(inp.h, _USR_GENERAL[name]) + _USR_Y_SIGN[name] * inp.y
    return _as_count(value, f"N({name}) {inp.cls} at h={inp.h}, y={inp.y}")


def pattern_formula_from_q(name: str, h: int, n_q: int) -> int:
    """U, S or R expressed through the Q count instead of the class."""
    if name not in _USR_FROM_Q:
        raise ValueError(f"only U, S and R have Q-dependent forms, not {name!r}")
    FormulaInput(h)
    coeffs, sign = _USR_FROM_Q[name]
    return _as_count(_poly(h, coeffs) + sign * n_q, f"N({name}) via N(Q) at h={h}")


def matching6_formula_from_q(h: int, n_q: int) -> int:
    """The 6-matching count through the Q count (recurrence elimination)."""
    FormulaInput(h)
    coeffs = (
        -16,
        Fraction(-123, 10),
        Fraction(-2833, 40),
        Fraction(405, 16),
        Fraction(-99, 16),
        Fraction(-81, 80),
        Fraction(81, 80),
    )
    return _as_count(_poly(h, coeffs) + Fraction(n_q, 6), f"M(G,6) via N(Q) at h={h}")


def legacy_pattern_formula(name: str, inp: FormulaInput) -> int:
    """Superseded closed forms from earlier work, kept to show they fail.

    Only the path(5) count has a stated legacy form: 16m - 48.  It ignores
    that a path extension out of a square is restricted, and overcounts on
    every graph.
    """
    if name != "P":
        raise NoClosedForm(f"no legacy closed form recorded for {name!r}")
    return 16 * inp.m - 48


RECURRENCE_LABELS = (
    "1a", "1b", "1c", "1d",
    "2a", "2b", "2c",
    "3a", "3b", "3c",
)


def recurrence_residuals(ledger, m: int) -> dict[str, int]:
    """Left minus right for the ten counting identities.

    The ledger must expose .matchings (k -> count, k = 2..6) and .patterns
    (name -> count) for every referenced item.  All residuals are zero when
    the counts are those of a genuine (4,6)-fullerene.
    """

    def mk(k: int) -> int:
        try:
            return ledger.matchings[k]
        except KeyError:
            raise MissingCount(f"ledger lacks M(G,{k})") from None

    def np_(name: str) -> int:
        try:
            return ledger.patterns[name]
        except KeyError:
            raise MissingCount(f"ledger lacks N({name})") from None

    return {
        "1a": mk(5) * (m - 5) - (6 * mk(6) + 2 * np_("R") + np_("S")),
        "1b": mk(5) * 10 * 2 - (2 * np_("R") + 2 * np_("S")),
        "1c": mk(4) * 4 * 4 - (np_("S") + 4 * np_("T") + 2 * np_("U") + np_("Q")),
        "1d": np_("K") * 2 * 2 - (2 * np_("U") + 2 * np_("Q") + 8 * np_("T")),
        "2a": mk(4) * (m - 4) - (5 * mk(5) + 2 * np_("J") + np_("K")),
        "2b": mk(4) * 8 * 2 - (2 * np_("J") + 2 * np_("K")),
        "2c": mk(3) * 3 * 4 - (np_("K") + 4 * np_("L") + 2 * np_("O") + np_("P")),
        "3a": mk(3) * (m - 3) - (4 * mk(4) + 2 * np_("D") + np_("E")),
        "3b": mk(3) * 6 * 2 - (2 * np_("D") + 2 * np_("E")),
        "3c": mk(2) * 2 * 4 - (np_("E") + 4 * np_("H") + 2 * np_("I")),
    }
