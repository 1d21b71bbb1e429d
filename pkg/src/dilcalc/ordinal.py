"""Exact arithmetic on ordinal notations below epsilon_0.

A notation is a Cantor normal form: a finite descending list of
(exponent, coefficient) pairs with exponents themselves notations.  The
module also houses the limit solver used by the evaluators: it detects a
step pattern in a strictly increasing sequence of notations and returns
the exact supremum, or refuses honestly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import OutOfNotation, ParseError, UnsupportedLimit

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Ord:
    """Ordinal below epsilon_0 in Cantor normal form.

    ``terms`` is a tuple of (exponent, coefficient) pairs, exponents
    strictly descending, coefficients >= 1.  The empty tuple is 0.
    """

    terms: tuple = ()

    def __post_init__(self):
        for exp, coeff in self.terms:
            if not isinstance(exp, Ord) or coeff < 1:
                raise ValueError("malformed CNF term")

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def as_int(self) -> int:
        if self.is_zero():
            return 0
        if not self.is_finite():
            raise ValueError("not a finite ordinal")
        return self.terms[0][1]

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero()

    # comparisons delegate to ord_cmp so the order is defined in one place
    def __lt__(self, other):
        return ord_cmp(self, other) == LESS

    def __le__(self, other):
        return ord_cmp(self, other) != GREATER

    def __gt__(self, other):
        return ord_cmp(self, other) == GREATER

    def __ge__(self, other):
        return ord_cmp(self, other) != LESS

    def __repr__(self):
        return f"Ord({ord_str(self)!r})"

    def __str__(self):
        return ord_str(self)


ZERO = Ord()
ONE = Ord(((ZERO, 1),))
OMEGA = Ord(((ONE, 1),))


def from_int(n: int) -> Ord:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    return Ord(((ZERO, n),)) if n else ZERO


def ord_cmp(a: Ord, b: Ord) -> int:
    """Total order: lexicographic on the descending (exponent, coeff) lists."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_cmp(ea, eb)
        if c != EQUAL:
            return c
        if ca != cb:
            return LESS if ca < cb else GREATER
    if len(a.terms) == len(b.terms):
        return EQUAL
    return LESS if len(a.terms) < len(b.terms) else GREATER


def ord_max(a: Ord, b: Ord) -> Ord:
    return b if a < b else a


def ord_add(a: Ord, b: Ord) -> Ord:
    """Ordinal sum; terms of ``a`` below b's leading exponent are absorbed."""
    if b.is_zero():
        return a
    if a.is_zero():
        return b
    lead = b.terms[0][0]
    kept = []
    for exp, coeff in a.terms:
        c = ord_cmp(exp, lead)
        if c == GREATER:
            kept.append((exp, coeff))
        elif c == EQUAL:
            kept.append((exp, coeff + b.terms[0][1]))
            return Ord(tuple(kept) + b.terms[1:])
        else:
            break
    return Ord(tuple(kept) + b.terms)


def ord_add_all(values: Iterable[Ord]) -> Ord:
    total = ZERO
    for v in values:
        total = ord_add(total, v)
    return total


def ord_omega_pow(e: Ord) -> Ord:
    return Ord(((e, 1),))


def ord_mul_nat(a: Ord, n: int) -> Ord:
    """a * n as an iterated sum (n >= 0)."""
    if n < 0:
        raise ValueError("natural multiplier required")
    if n == 0 or a.is_zero():
        return ZERO
    exp, coeff = a.terms[0]
    return Ord(((exp, coeff * n),) + a.terms[1:])


def ord_mul_omega(a: Ord) -> Ord:
    """a * omega; zero stays zero, otherwise omega^(lead exponent + 1)."""
    if a.is_zero():
        return ZERO
    return ord_omega_pow(ord_add(a.terms[0][0], ONE))


def ord_is_principal(a: Ord) -> bool:
    """True iff a = omega^e; the convention includes 1 = omega^0."""
    return len(a.terms) == 1 and a.terms[0][1] == 1


def ord_pred(a: Ord) -> Ord:
    if not a.is_successor():
        raise ValueError("predecessor of a non-successor")
    exp, coeff = a.terms[-1]
    if coeff > 1:
        return Ord(a.terms[:-1] + ((exp, coeff - 1),))
    return Ord(a.terms[:-1])


def ord_left_sub(a: Ord, b: Ord) -> Ord:
    """The unique c with a + c = b; requires a <= b."""
    if ord_cmp(a, b) == GREATER:
        raise ValueError("left subtraction needs a <= b")
    for i, ((ea, ca), (eb, cb)) in enumerate(zip(a.terms, b.terms)):
        c = ord_cmp(ea, eb)
        if c == LESS:
            return Ord(b.terms[i:])
        if c == GREATER:  # unreachable given a <= b
            raise ValueError("left subtraction needs a <= b")
        if ca < cb:
            return Ord(((eb, cb - ca),) + b.terms[i + 1:])
        if ca > cb:
            if i + 1 == len(a.terms) and ea.is_zero():
                raise ValueError("left subtraction needs a <= b")
            # a's term bigger but a <= b: remaining a-terms absorbed is impossible
            raise ValueError("left subtraction needs a <= b")
    return Ord(b.terms[len(a.terms):])


def fund_seq(a: Ord, k: int) -> Ord:
    """k-th member of the canonical fundamental sequence of a limit notation."""
    if not a.is_limit():
        raise ValueError("fundamental sequences exist for limits only")
    head, (exp, coeff) = a.terms[:-1], a.terms[-1]
    if coeff > 1:
        head = head + ((exp, coeff - 1),)
    if exp.is_successor():
        if k == 0:
            return Ord(head)
        return Ord(head + ((ord_pred(exp), k),))
    return Ord(head + ((fund_seq(exp, k), 1),))


def ord_nesting_depth(a: Ord) -> int:
    if a.is_zero():
        return 0
    return 1 + max(ord_nesting_depth(exp) for exp, _ in a.terms)


def ordinal_prefix(bound: Ord, k: int):
    """The first min(k, bound) ordinals below ``bound``, ascending."""
    out = []
    current = ZERO
    while len(out) < k and current < bound:
        out.append(current)
        current = ord_add(current, ONE)
    return out


# ---------------------------------------------------------------------------
# limit solver


@dataclass(frozen=True)
class ConstantIncrement:
    increment: Ord


@dataclass(frozen=True)
class AffineStep:
    multiplier: int
    addend: Ord


@dataclass(frozen=True)
class TermEscalation:
    """Values share a stable CNF prefix while the next term escalates."""

    prefix: Ord
    exponent_limit: Ord


@dataclass(frozen=True)
class Unsupported:
    reason: str = ""


@dataclass(frozen=True)
class LimitPattern:
    kind: object
    start: Ord

    def __post_init__(self):
        if isinstance(self.kind, ConstantIncrement) and self.kind.increment.is_zero():
            raise ValueError("ConstantIncrement needs a positive increment")
        if isinstance(self.kind, AffineStep) and self.kind.multiplier < 1:
            raise ValueError("AffineStep needs multiplier >= 1")


def ord_sup_solve(pattern: LimitPattern) -> Ord:
    """Exact supremum of the omega-sequence generated by the pattern.

    The result is the least ordinal above ``start`` closed under the step
    map, which equals the supremum of the iterates.
    """
    kind, start = pattern.kind, pattern.start
    if isinstance(kind, Unsupported):
        raise UnsupportedLimit(kind.reason or "step pattern outside supported family")
    if isinstance(kind, ConstantIncrement):
        return ord_add(start, ord_mul_omega(kind.increment))
    if isinstance(kind, AffineStep):
        if kind.multiplier == 1:
            if kind.addend.is_zero():
                raise UnsupportedLimit("stationary affine step is not a limit")
            return ord_add(start, ord_mul_omega(kind.addend))
        first = ord_add(ord_mul_nat(start, kind.multiplier), kind.addend)
        if ord_cmp(first, start) != GREATER:
            raise UnsupportedLimit("affine step fails to increase")
        return ord_omega_pow(ord_add(first.terms[0][0], ONE))
    if isinstance(kind, TermEscalation):
        return ord_add(kind.prefix, ord_omega_pow(kind.exponent_limit))
    raise UnsupportedLimit(f"unknown pattern kind {kind!r}")


def _common_prefix(values: Sequence[Ord]) -> tuple:
    prefix = values[0].terms
    for v in values[1:]:
        i = 0
        while i < min(len(prefix), len(v.terms)) and prefix[i] == v.terms[i]:
            i += 1
        prefix = prefix[:i]
    return prefix


def detect_limit_pattern(values: Sequence[Ord], _depth: int = 0) -> LimitPattern:
    """Detect the step family of a strictly increasing notation sequence.

    Tries constant increments, then affine steps delta -> delta*m + a,
    then escalation of the first unstable CNF term.  Sequences whose
    iterates satisfy omega^delta_k <= delta_{k+1} throughout escape the
    notation fragment and raise OutOfNotation.
    """
    values = list(values)
    if len(values) < 3:
        raise UnsupportedLimit("need at least three sample values")
    for a, b in zip(values, values[1:]):
        if ord_cmp(a, b) != LESS:
            raise UnsupportedLimit("sequence is not strictly increasing")
    start = values[0]

    if _depth > 8:
        raise UnsupportedLimit("pattern recursion too deep")

    # escape detection: each step dominates omega^previous
    if all(ord_omega_pow(a) <= b for a, b in zip(values[1:], values[2:])):
        depths = [ord_nesting_depth(v) for v in values]
        if all(d2 > d1 for d1, d2 in zip(depths[1:], depths[2:])):
            raise OutOfNotation("iterates escalate beyond the epsilon_0 fragment")

    diffs = [ord_left_sub(a, b) for a, b in zip(values, values[1:])]
    if all(d == diffs[0] for d in diffs):
        return LimitPattern(ConstantIncrement(diffs[0]), start)

    for m in range(2, 10):
        scaled = ord_mul_nat(values[0], m)
        if scaled > values[1]:
            continue
        addend = ord_left_sub(scaled, values[1])
        if all(
            ord_add(ord_mul_nat(a, m), addend) == b
            for a, b in zip(values, values[1:])
        ):
            return LimitPattern(AffineStep(m, addend), start)

    tail = values[-4:] if len(values) >= 4 else values
    prefix = _common_prefix(tail)
    residues = [Ord(v.terms[len(prefix):]) for v in tail]
    if any(r.is_zero() for r in residues):
        return LimitPattern(Unsupported("no growing residue behind the prefix"), start)
    exps = [r.terms[0][0] for r in residues]
    if all(e == exps[0] for e in exps):
        coeffs = [r.terms[0][1] for r in residues]
        if all(c1 < c2 for c1, c2 in zip(coeffs, coeffs[1:])):
            return LimitPattern(
                TermEscalation(Ord(prefix), ord_add(exps[0], ONE)), start
            )
        return LimitPattern(Unsupported("stable residue exponent, stagnant coefficient"), start)
    if all(e1 < e2 for e1, e2 in zip(exps, exps[1:])):
        inner = detect_limit_pattern(exps, _depth + 1)
        exp_limit = ord_sup_solve(inner)
        return LimitPattern(TermEscalation(Ord(prefix), exp_limit), start)
    return LimitPattern(Unsupported("residue exponents not monotone"), start)


def ord_sup_of_sequence(values: Sequence[Ord]) -> Ord:
    """Supremum of a non-decreasing sequence sampled from a limit process.

    Stabilised sequences return their final value; otherwise the detected
    pattern is solved and the result re-checked against every sample.
    """
    values = list(values)
    if not values:
        raise UnsupportedLimit("empty sequence has no supremum here")
    if all(v == values[-1] for v in values):
        return values[-1]
    strict = [values[0]]
    for v in values[1:]:
        if v > strict[-1]:
            strict.append(v)
        elif v < strict[-1]:
            raise UnsupportedLimit("sequence is not monotone")
    result = ord_sup_solve(detect_limit_pattern(strict))
    for v in strict:
        if v >= result:
            raise UnsupportedLimit("solved supremum does not bound the samples")
    return result


# ---------------------------------------------------------------------------
# parsing and printing


def _atom_printable(a: Ord) -> bool:
    # exponents that parse unambiguously without parentheses
    if a.is_finite():
        return True
    return (
        len(a.terms) == 1
        and a.terms[0][1] == 1
        and _atom_printable(a.terms[0][0])
    )


def _exp_str(e: Ord) -> str:
    if _atom_printable(e):
        if e.is_finite():
            return str(e.as_int())
        return "w" if e == OMEGA else "w^" + _exp_str(e.terms[0][0])
    return "(" + ord_str(e) + ")"


def ord_str(a: Ord) -> str:
    """Canonical string; round-trips through parse_ord."""
    if a.is_zero():
        return "0"
    parts = []
    for exp, coeff in a.terms:
        if exp.is_zero():
            parts.append(str(coeff))
            continue
        base = "w" if exp == ONE else "w^" + _exp_str(exp)
        parts.append(base + (f"*{coeff}" if coeff > 1 else ""))
    return "+".join(parts)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            raise ParseError(
                f"expected {ch!r} at position {self.pos}", self.pos, [ch]
            )
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected a natural at position {start}", start, ["digit"])
        return int(self.text[start:self.pos])


def _parse_ord_sum(sc: _Scanner) -> Ord:
    total = _parse_ord_term(sc)
    while sc.peek() == "+":
        sc.take("+")
        total = ord_add(total, _parse_ord_term(sc))
    return total


def _parse_ord_exponent(sc: _Scanner) -> Ord:
    ch = sc.peek()
    if ch == "(":
        sc.take("(")
        inner = _parse_ord_sum(sc)
        sc.take(")")
        return inner
    if ch == "w":
        sc.take("w")
        if sc.peek() == "^":
            sc.take("^")
            return ord_omega_pow(_parse_ord_exponent(sc))
        return OMEGA
    return from_int(sc.nat())


def _parse_ord_term(sc: _Scanner) -> Ord:
    ch = sc.peek()
    if ch == "w":
        sc.take("w")
        exp = ONE
        if sc.peek() == "^":
            sc.take("^")
            exp = _parse_ord_exponent(sc)
        value = ord_omega_pow(exp)
        if sc.peek() == "*":
            sc.take("*")
            value = ord_mul_nat(value, sc.nat())
        return value
    if ch.isdigit():
        return from_int(sc.nat())
    raise ParseError(
        f"expected an ordinal term at position {sc.pos}", sc.pos, ["w", "digit"]
    )


def parse_ord(text: str) -> Ord:
    """Parse the notation grammar; compound exponents take parentheses."""
    sc = _Scanner(text)
    value = _parse_ord_sum(sc)
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError(f"trailing input at position {sc.pos}", sc.pos)
    return value
