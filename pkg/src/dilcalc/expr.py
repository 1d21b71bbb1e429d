"""The closed dilator grammar and its normal forms.

Surface syntax::

    Dil ::= Term ("+" Term)*
    Term ::= Atom ("*" Nat | "*w")*
    Atom ::= "0" | "1" | "Id" | "Const(" Ord ")" | "omega[" Dil "]"
           | "shift(" Dil "," Ord ")" | "sep(" Dil "," Ord ")" | "(" Dil ")"

Construction goes through the ``mk_*`` functions, which keep sums
right-associated and zero-free, merge adjacent constants, expand finite
multiples, rewrite ``omega[D+1]`` to ``omega[D]*w``, and eliminate shift
nodes entirely.  Two node kinds exist only internally: ``CnfHead`` (the
connected head of an ``omega[...]`` expression) and ``Band`` (a slab of a
connected expression cut by its most important argument position).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .ordinal import (
    LESS,
    ONE,
    ZERO,
    Ord,
    _Scanner,
    _parse_ord_sum,
    ord_add,
    ord_cmp,
    ord_str,
)


class Dil:
    """Base class for dilator expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Const(Dil):
    value: Ord


@dataclass(frozen=True)
class IdNode(Dil):
    pass


@dataclass(frozen=True)
class Sum(Dil):
    left: Dil
    right: Dil


@dataclass(frozen=True)
class MulOmega(Dil):
    base: Dil


@dataclass(frozen=True)
class OmegaComp(Dil):
    base: Dil


@dataclass(frozen=True)
class CnfHead(Dil):
    """Formal base-omega sums over low+high whose lead lies in the high part."""

    low: Dil
    high: Dil


@dataclass(frozen=True)
class Sep(Dil):
    """Elements of base(amb+X) whose most important position is the largest
    position below ``cut``; base is a connected non-max-dominated atom."""

    base: Dil
    cut: Ord
    amb: Ord


@dataclass(frozen=True)
class Band(Dil):
    """Elements of base(amb+X) whose most important position lies in [lo, hi)."""

    base: Dil
    lo: Ord
    hi: Ord
    amb: Ord


D_ZERO = Const(ZERO)
D_ONE = Const(ONE)
D_ID = IdNode()


def is_constant(d: Dil) -> bool:
    return isinstance(d, Const)


def is_connected_atom(d: Dil) -> bool:
    """Connected non-unit building blocks of the normalized grammar."""
    if isinstance(d, IdNode):
        return True
    if isinstance(d, CnfHead):
        return is_connected_atom(d.high)
    return False


def is_supp_monotone(d: Dil) -> bool:
    """Smaller elements never carry larger maximal positions."""
    if isinstance(d, (Const, IdNode)):
        return True
    if isinstance(d, Sum):
        return is_constant(d.left) and is_supp_monotone(d.right)
    if isinstance(d, OmegaComp):
        return is_supp_monotone(d.base)
    if isinstance(d, CnfHead):
        return is_constant(d.low) and is_supp_monotone(d.high)
    return False


def is_max_dominated(d: Dil) -> bool:
    """The most important position of every element is its maximal position."""
    if isinstance(d, IdNode):
        return True
    if isinstance(d, CnfHead):
        return (
            is_constant(d.low)
            and is_max_dominated(d.high)
            and is_supp_monotone(d.high)
        )
    return False


# ---------------------------------------------------------------------------
# smart constructors


def mk_const(a: Ord) -> Dil:
    return Const(a)


def mk_sum(a: Dil, b: Dil) -> Dil:
    if isinstance(a, Const) and a.value.is_zero():
        return b
    if isinstance(b, Const) and b.value.is_zero():
        return a
    if isinstance(a, Sum):
        return mk_sum(a.left, mk_sum(a.right, b))
    if isinstance(a, Const):
        if isinstance(b, Const):
            return Const(ord_add(a.value, b.value))
        if isinstance(b, Sum) and isinstance(b.left, Const):
            return Sum(Const(ord_add(a.value, b.left.value)), b.right)
    return Sum(a, b)


def mk_sum_all(parts) -> Dil:
    total = D_ZERO
    for p in reversed(list(parts)):
        total = mk_sum(p, total)
    return total


def mk_mul_nat(d: Dil, n: int) -> Dil:
    if n < 0:
        raise ValueError("natural multiplier required")
    return mk_sum_all([d] * n)


def mk_mul_omega(d: Dil) -> Dil:
    from .ordinal import ord_mul_omega

    if isinstance(d, Const):
        return Const(ord_mul_omega(d.value))
    return MulOmega(d)


def _split_trailing(d: Dil):
    """Split a normalized expression as (rest, last summand)."""
    if isinstance(d, Sum):
        rest, last = _split_trailing(d.right)
        return mk_sum(d.left, rest) if rest is not None else d.left, last
    return None, d


def mk_omega_comp(d: Dil) -> Dil:
    from .ordinal import ord_omega_pow, ord_pred

    if isinstance(d, Const):
        return Const(ord_omega_pow(d.value))
    rest, last = _split_trailing(d)
    if isinstance(last, Const) and last.value.is_successor():
        peeled = ord_pred(last.value)
        inner = rest if rest is not None else D_ZERO
        if not peeled.is_zero():
            inner = mk_sum(inner, Const(peeled))
        return mk_mul_omega(mk_omega_comp(inner))
    return OmegaComp(d)


def mk_cnf_head(low: Dil, high: Dil) -> Dil:
    if isinstance(high, Const):
        if high.value.is_zero():
            return D_ZERO
        if high.value == ONE:
            return mk_mul_omega(mk_omega_comp(low))
    return CnfHead(low, high)


def mk_band(base: Dil, lo: Ord, hi: Ord, amb: Ord) -> Dil:
    """The slab of a connected atom with most important position in [lo, hi)."""
    from .ordinal import ord_left_sub

    if ord_cmp(lo, hi) != LESS:
        return D_ZERO
    if isinstance(base, IdNode):
        return Const(ord_left_sub(lo, hi))
    if is_max_dominated(base):
        from .analysis import otp_symbolic

        return Const(ord_left_sub(otp_symbolic(base, lo), otp_symbolic(base, hi)))
    return Band(base, lo, hi, amb)


def mk_sep_atom(base: Dil, cut: Ord, amb: Ord) -> Dil:
    """Separation of a connected atom at ``cut`` (ambient ``amb`` >= cut)."""
    if cut.is_zero():
        return D_ZERO
    if isinstance(base, IdNode):
        return Const(cut)
    if is_max_dominated(base):
        from .analysis import otp_symbolic

        return Const(otp_symbolic(base, cut))
    return Sep(base, cut, amb)


def mk_sep_plus(base: Dil, g: Ord) -> Dil:
    """The upper part of the split of a connected atom at ``g``."""
    if g.is_zero():
        return base
    if isinstance(base, IdNode):
        return D_ID
    if isinstance(base, CnfHead):
        return mk_cnf_head(
            mk_sum(mk_shift(base.low, g), mk_band(base.high, ZERO, g, g)),
            mk_sep_plus(base.high, g),
        )
    raise ValueError(f"not a connected atom: {to_str(base)}")


def mk_slice(base: Dil, beta: Ord, amb: Ord) -> Dil:
    """Elements of a connected atom whose most important position equals beta."""
    if isinstance(base, IdNode):
        return D_ONE
    if isinstance(base, CnfHead):
        return mk_cnf_head(
            mk_sum(mk_shift(base.low, amb), mk_band(base.high, ZERO, beta, amb)),
            mk_band(base.high, beta, ord_add(beta, ONE), amb),
        )
    raise ValueError(f"not a connected atom: {to_str(base)}")


def mk_shift(d: Dil, g: Ord) -> Dil:
    """The expression for alpha |-> d(g + alpha); shift nodes never survive."""
    if g.is_zero():
        return d
    if isinstance(d, Const):
        return d
    if isinstance(d, IdNode):
        return mk_sum(Const(g), D_ID)
    if isinstance(d, Sum):
        return mk_sum(mk_shift(d.left, g), mk_shift(d.right, g))
    if isinstance(d, MulOmega):
        return mk_mul_omega(mk_shift(d.base, g))
    if isinstance(d, OmegaComp):
        return mk_omega_comp(mk_shift(d.base, g))
    if isinstance(d, CnfHead):
        return mk_cnf_head(mk_shift(d.low, g), mk_shift(d.high, g))
    if isinstance(d, Sep):
        return Sep(d.base, d.cut, ord_add(d.amb, g))
    if isinstance(d, Band):
        return Band(d.base, d.lo, d.hi, ord_add(d.amb, g))
    raise ValueError(f"unhandled node {d!r}")


# ---------------------------------------------------------------------------
# printing


def _term_str(d: Dil) -> str:
    s = to_str(d)
    return f"({s})" if isinstance(d, Sum) else s


def to_str(d: Dil) -> str:
    if isinstance(d, Const):
        if d.value.is_zero():
            return "0"
        if d.value == ONE:
            return "1"
        return f"Const({ord_str(d.value)})"
    if isinstance(d, IdNode):
        return "Id"
    if isinstance(d, Sum):
        return f"{to_str(d.left)}+{to_str(d.right)}"
    if isinstance(d, MulOmega):
        return f"{_term_str(d.base)}*w"
    if isinstance(d, OmegaComp):
        return f"omega[{to_str(d.base)}]"
    if isinstance(d, CnfHead):
        return f"omega_head({to_str(d.low)};{to_str(d.high)})"
    if isinstance(d, Sep):
        if d.amb == d.cut:
            return f"sep({to_str(d.base)},{ord_str(d.cut)})"
        return f"sep@({to_str(d.base)};{ord_str(d.cut)};{ord_str(d.amb)})"
    if isinstance(d, Band):
        return (
            f"band({to_str(d.base)};{ord_str(d.lo)};"
            f"{ord_str(d.hi)};{ord_str(d.amb)})"
        )
    raise ValueError(f"unhandled node {d!r}")


# ---------------------------------------------------------------------------
# parsing


def _parse_atom(sc: _Scanner) -> Dil:
    ch = sc.peek()
    if ch == "(":
        sc.take("(")
        inner = _parse_dil(sc)
        sc.take(")")
        return inner
    if ch.isdigit():
        n = sc.nat()
        from .ordinal import from_int

        return Const(from_int(n))
    for word, parser in _KEYWORDS:
        if sc.text.startswith(word, sc.pos):
            sc.pos += len(word)
            return parser(sc)
    raise ParseError(
        f"expected a dilator atom at position {sc.pos}",
        sc.pos,
        ["0", "1", "Id", "Const(", "omega[", "shift(", "sep("],
    )


def _parse_const(sc):
    sc.take("(")
    value = _parse_ord_sum(sc)
    sc.take(")")
    return mk_const(value)


def _parse_omega_comp(sc):
    inner = _parse_dil(sc)
    sc.take("]")
    return mk_omega_comp(inner)


def _parse_shift(sc):
    sc.take("(")
    inner = _parse_dil(sc)
    sc.take(",")
    g = _parse_ord_sum(sc)
    sc.take(")")
    return mk_shift(inner, g)


def _parse_sep(sc):
    from .analysis import sep

    sc.take("(")
    inner = _parse_dil(sc)
    sc.take(",")
    g = _parse_ord_sum(sc)
    sc.take(")")
    return sep(inner, g)


def _parse_sep_at(sc):
    sc.take("(")
    inner = _parse_dil(sc)
    sc.take(";")
    cut = _parse_ord_sum(sc)
    sc.take(";")
    amb = _parse_ord_sum(sc)
    sc.take(")")
    return Sep(inner, cut, amb)


def _parse_head(sc):
    sc.take("(")
    low = _parse_dil(sc)
    sc.take(";")
    high = _parse_dil(sc)
    sc.take(")")
    return mk_cnf_head(low, high)


def _parse_band(sc):
    sc.take("(")
    inner = _parse_dil(sc)
    parts = []
    for _ in range(3):
        sc.take(";")
        parts.append(_parse_ord_sum(sc))
    sc.take(")")
    return mk_band(inner, *parts)


_KEYWORDS = (
    ("Id", lambda sc: D_ID),
    ("Const", _parse_const),
    ("omega_head", _parse_head),
    ("omega[", _parse_omega_comp),
    ("shift", _parse_shift),
    ("sep@", _parse_sep_at),
    ("sep", _parse_sep),
    ("band", _parse_band),
)


def _parse_term(sc: _Scanner) -> Dil:
    value = _parse_atom(sc)
    while sc.peek() == "*":
        sc.take("*")
        if sc.peek() == "w":
            sc.take("w")
            value = mk_mul_omega(value)
        else:
            value = mk_mul_nat(value, sc.nat())
    return value


def _parse_dil(sc: _Scanner) -> Dil:
    total = _parse_term(sc)
    while sc.peek() == "+":
        sc.take("+")
        total = mk_sum(total, _parse_term(sc))
    return total


def parse_dil(text: str) -> Dil:
    sc = _Scanner(text)
    value = _parse_dil(sc)
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError(f"trailing input at position {sc.pos}", sc.pos)
    return value


def parse_expr(text: str):
    """Parse as a dilator expression, falling back to an ordinal notation."""
    try:
        return parse_dil(text)
    except ParseError:
        from .ordinal import parse_ord

        return parse_ord(text)
