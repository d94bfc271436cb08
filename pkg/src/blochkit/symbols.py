"""Holomorphic symbol expressions: sparse polynomials and log-fraction
test functions, with exact gradients and a small expression grammar.

Grammar (case-sensitive, whitespace ignored):

    expr   := term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := base ("^" uint)?
    base   := complex | "z" uint | "(" expr ")"
            | "fw(" uint "," complex ")" | "h(" uint "," complex ")"

Complex literals: a, bi, (a+bi), (a-bi) with decimal floats. "z1" is
the first coordinate. "fw(k, w)" and "h(k, w)" are the two log-fraction
forms in coordinate k with parameter w (principal branch Log only):

    fw: z -> (1/2) Log((1 + conj(w) z_k) / (1 - conj(w) z_k)),  |w| < 1
    h:  z -> (1/2) Log((|w| + z_k conj(w)) / (|w| - z_k conj(w))),  w != 0

Polynomial-only subexpressions fold to a single sparse polynomial at
parse time. Total degree is capped at 64.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import hypot, inf, log, pi

import numpy as np

from . import _kernels
from .errors import BranchCutError, DimensionMismatch, ParseError, UsageError

DEGREE_CAP = 64
BRANCH_GUARD = 1e-12


class SymbolExpr:
    """Base marker; concrete nodes are frozen dataclasses."""

    arity: int


@dataclass(frozen=True)
class Polynomial(SymbolExpr):
    arity: int
    terms: tuple[tuple[tuple[int, ...], complex], ...]  # sorted multi-index -> coeff

    def __post_init__(self):
        for exps, _ in self.terms:
            if len(exps) != self.arity:
                raise DimensionMismatch("multi-index length != arity")
            if sum(exps) > DEGREE_CAP:
                raise UsageError(f"polynomial degree exceeds cap {DEGREE_CAP}")

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)


@dataclass(frozen=True)
class LogFrac(SymbolExpr):
    arity: int
    k: int  # 1-based coordinate index
    w: complex
    form: str  # "f" or "h"

    def __post_init__(self):
        if not (1 <= self.k <= self.arity):
            raise DimensionMismatch(f"coordinate {self.k} outside arity {self.arity}")
        if self.form == "f":
            if not abs(self.w) < 1.0:
                raise UsageError("fw parameter needs |w| < 1")
        elif self.form == "h":
            if self.w == 0:
                raise UsageError("h parameter must be nonzero")
        else:
            raise UsageError(f"unknown log form {self.form!r}")


@dataclass(frozen=True)
class Sum(SymbolExpr):
    arity: int
    parts: tuple[SymbolExpr, ...]


@dataclass(frozen=True)
class Product(SymbolExpr):
    arity: int
    parts: tuple[SymbolExpr, ...]


@dataclass(frozen=True)
class Power(SymbolExpr):
    arity: int
    base: SymbolExpr
    exponent: int

    def __post_init__(self):
        if not (0 <= self.exponent <= DEGREE_CAP):
            raise UsageError(f"exponent outside [0, {DEGREE_CAP}]")


def constant(value: complex, arity: int) -> Polynomial:
    if value == 0:
        return Polynomial(arity, ())
    return Polynomial(arity, (((0,) * arity, complex(value)),))


def coordinate(k: int, arity: int) -> Polynomial:
    if not (1 <= k <= arity):
        raise DimensionMismatch(f"coordinate {k} outside arity {arity}")
    exps = tuple(1 if j == k - 1 else 0 for j in range(arity))
    return Polynomial(arity, ((exps, 1.0 + 0.0j),))


def _poly_from_dict(arity: int, d: dict) -> Polynomial:
    items = tuple(sorted((e, c) for e, c in d.items() if c != 0))
    return Polynomial(arity, items)


def _poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    d = dict(a.terms)
    for e, c in b.terms:
        d[e] = d.get(e, 0) + c
    return _poly_from_dict(a.arity, d)


def _poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    d: dict = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(e) > DEGREE_CAP:
                raise UsageError(f"polynomial degree exceeds cap {DEGREE_CAP}")
            d[e] = d.get(e, 0) + ca * cb
    return _poly_from_dict(a.arity, d)


def _scale(f: SymbolExpr, c: complex) -> SymbolExpr:
    if isinstance(f, Polynomial):
        return _poly_from_dict(f.arity, {e: c * v for e, v in f.terms})
    return combine("product", constant(c, f.arity), f)


def is_constant(f: SymbolExpr) -> complex | None:
    """Symbolic constancy: the folded polynomial has no live coordinate."""
    if isinstance(f, Polynomial):
        if not f.terms:
            return 0j
        if len(f.terms) == 1 and sum(f.terms[0][0]) == 0:
            return f.terms[0][1]
    return None


def combine(op: str, *args) -> SymbolExpr:
    """sum/product of expressions, or power(expr, uint); folds polynomials."""
    if op == "power":
        base, k = args
        if not isinstance(k, int) or isinstance(k, bool):
            raise UsageError("power exponent must be an integer")
        if not (0 <= k <= DEGREE_CAP):
            raise UsageError(f"exponent outside [0, {DEGREE_CAP}]")
        if k == 0:
            return constant(1.0, base.arity)
        if k == 1:
            return base
        if isinstance(base, Polynomial):
            out = base
            for _ in range(k - 1):
                out = _poly_mul(out, base)
            return out
        return Power(base.arity, base, k)
    if op not in ("sum", "product"):
        raise UsageError(f"unknown combine op {op!r}")
    if not args:
        raise UsageError("combine needs at least one expression")
    arity = args[0].arity
    if any(a.arity != arity for a in args):
        raise DimensionMismatch("mixed arities in combine")
    flat: list[SymbolExpr] = []
    node = Sum if op == "sum" else Product
    for a in args:
        if isinstance(a, node):
            flat.extend(a.parts)
        else:
            flat.append(a)
    polys = [a for a in flat if isinstance(a, Polynomial)]
    rest = [a for a in flat if not isinstance(a, Polynomial)]
    folded = None
    if polys:
        folded = polys[0]
        for p in polys[1:]:
            folded = _poly_add(folded, p) if op == "sum" else _poly_mul(folded, p)
    if not rest:
        return folded if folded is not None else constant(0.0, arity)
    if op == "sum":
        parts = list(rest)
        if folded is not None and folded.terms:
            parts.append(folded)
        return parts[0] if len(parts) == 1 else Sum(arity, tuple(parts))
    # product
    if folded is not None:
        if not folded.terms:
            return constant(0.0, arity)
        rest = [folded] + rest
    return rest[0] if len(rest) == 1 else Product(arity, tuple(rest))


# ---------------------------------------------------------------------------
# evaluation

@lru_cache(maxsize=512)
def _poly_arrays(poly: Polynomial) -> tuple[np.ndarray, np.ndarray]:
    t = len(poly.terms)
    pows = np.zeros((t, poly.arity), dtype=np.int64)
    coeffs = np.zeros(t, dtype=np.complex128)
    for i, (e, c) in enumerate(poly.terms):
        pows[i] = e
        coeffs[i] = c
    return pows, coeffs


def _check_points(f: SymbolExpr, Z: np.ndarray) -> np.ndarray:
    Z = np.asarray(Z, dtype=np.complex128)
    if Z.ndim != 2 or Z.shape[1] != f.arity:
        raise DimensionMismatch(
            f"points have shape {Z.shape}, expected (m, {f.arity})")
    return Z


def _log_ratio(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    if np.any(den == 0):
        raise BranchCutError("log-fraction pole")
    ratio = num / den
    bad = (ratio.real < 0) & (np.abs(ratio.imag) <= BRANCH_GUARD * np.abs(ratio))
    if np.any(bad) or not np.all(np.isfinite(ratio)):
        raise BranchCutError("Log argument within 1e-12 of the negative real axis")
    return np.log(ratio)


def _logfrac_values(f: LogFrac, Zk: np.ndarray) -> np.ndarray:
    w = f.w
    if f.form == "f":
        num, den = 1.0 + np.conj(w) * Zk, 1.0 - np.conj(w) * Zk
    else:
        aw = abs(w)
        num, den = aw + Zk * np.conj(w), aw - Zk * np.conj(w)
    return 0.5 * _log_ratio(num, den)


def _logfrac_deriv(f: LogFrac, Zk: np.ndarray) -> np.ndarray:
    w = f.w
    if f.form == "f":
        den = 1.0 - np.conj(w) ** 2 * Zk ** 2
        if np.any(den == 0):
            raise BranchCutError("log-fraction pole")
        return np.conj(w) / den
    aw = abs(w)
    den = aw * aw - Zk ** 2 * np.conj(w) ** 2
    if np.any(den == 0):
        raise BranchCutError("log-fraction pole")
    return aw * np.conj(w) / den


def evaluate_many(f: SymbolExpr, Z: np.ndarray) -> np.ndarray:
    """Values of f at each row of Z, shape (m,)."""
    Z = _check_points(f, Z)
    if isinstance(f, Polynomial):
        pows, coeffs = _poly_arrays(f)
        if len(coeffs) == 0:
            return np.zeros(Z.shape[0], dtype=np.complex128)
        return _kernels.poly_eval(pows, coeffs, np.ascontiguousarray(Z))
    if isinstance(f, LogFrac):
        return _logfrac_values(f, Z[:, f.k - 1])
    if isinstance(f, Sum):
        out = np.zeros(Z.shape[0], dtype=np.complex128)
        for p in f.parts:
            out += evaluate_many(p, Z)
        return out
    if isinstance(f, Product):
        out = np.ones(Z.shape[0], dtype=np.complex128)
        for p in f.parts:
            out *= evaluate_many(p, Z)
        return out
    if isinstance(f, Power):
        return evaluate_many(f.base, Z) ** f.exponent
    raise UsageError(f"cannot evaluate {type(f).__name__}")


def gradient_many(f: SymbolExpr, Z: np.ndarray) -> np.ndarray:
    """Holomorphic gradients at each row of Z, shape (m, arity)."""
    Z = _check_points(f, Z)
    m, n = Z.shape
    if isinstance(f, Polynomial):
        pows, coeffs = _poly_arrays(f)
        if len(coeffs) == 0:
            return np.zeros((m, n), dtype=np.complex128)
        return _kernels.poly_grad(pows, coeffs, np.ascontiguousarray(Z))
    if isinstance(f, LogFrac):
        out = np.zeros((m, n), dtype=np.complex128)
        out[:, f.k - 1] = _logfrac_deriv(f, Z[:, f.k - 1])
        return out
    if isinstance(f, Sum):
        out = np.zeros((m, n), dtype=np.complex128)
        for p in f.parts:
            out += gradient_many(p, Z)
        return out
    if isinstance(f, Product):
        vals = [evaluate_many(p, Z) for p in f.parts]
        # prefix/suffix products avoid dividing by zero values
        k = len(f.parts)
        pre = np.ones((k, m), dtype=np.complex128)
        suf = np.ones((k, m), dtype=np.complex128)
        for i in range(1, k):
            pre[i] = pre[i - 1] * vals[i - 1]
            suf[k - 1 - i] = suf[k - i] * vals[k - i]
        out = np.zeros((m, n), dtype=np.complex128)
        for i, p in enumerate(f.parts):
            out += gradient_many(p, Z) * (pre[i] * suf[i])[:, None]
        return out
    if isinstance(f, Power):
        vals = evaluate_many(f.base, Z)
        return gradient_many(f.base, Z) * (f.exponent * vals ** (f.exponent - 1))[:, None]
    raise UsageError(f"cannot differentiate {type(f).__name__}")


def evaluate(f: SymbolExpr, z) -> complex:
    return complex(evaluate_many(f, np.asarray(z, dtype=np.complex128).reshape(1, -1))[0])


def gradient(f: SymbolExpr, z) -> np.ndarray:
    return gradient_many(f, np.asarray(z, dtype=np.complex128).reshape(1, -1))[0]


def supnorm_upper(f: SymbolExpr) -> float:
    """Certified sup-modulus bound on the closed unit polydisk (hence on
    every supported domain). inf when no closed-form bound exists."""
    if isinstance(f, Polynomial):
        return float(sum(abs(c) for _, c in f.terms))
    if isinstance(f, LogFrac):
        if f.form == "h":
            return inf  # log blow-up at the coordinate pole
        aw = abs(f.w)
        return 0.5 * hypot(log((1.0 + aw) / (1.0 - aw)), pi / 2.0)
    if isinstance(f, Sum):
        return float(sum(supnorm_upper(p) for p in f.parts))
    if isinstance(f, Product):
        out = 1.0
        for p in f.parts:
            out *= supnorm_upper(p)
        return out
    if isinstance(f, Power):
        return supnorm_upper(f.base) ** f.exponent
    raise UsageError(f"no bound for {type(f).__name__}")


# ---------------------------------------------------------------------------
# parser

class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def number(self) -> float:
        self._skip()
        start = self.pos
        t = self.text
        while self.pos < len(t) and (t[self.pos].isdigit() or t[self.pos] == "."):
            self.pos += 1
        if self.pos < len(t) and t[self.pos] in "eE":
            probe = self.pos + 1
            if probe < len(t) and t[probe] in "+-":
                probe += 1
            if probe < len(t) and t[probe].isdigit():
                self.pos = probe
                while self.pos < len(t) and t[self.pos].isdigit():
                    self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        try:
            return float(t[start:self.pos])
        except ValueError:
            raise ParseError(f"bad number {t[start:self.pos]!r}", start) from None

    def uint(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an unsigned integer", start)
        return int(self.text[start:self.pos])


class _Parser:
    def __init__(self, text: str, arity: int):
        self.lx = _Lexer(text)
        self.arity = arity

    def parse(self) -> SymbolExpr:
        e = self.expr()
        if self.lx.peek() != "":
            raise ParseError("trailing input", self.lx.pos)
        return e

    def expr(self) -> SymbolExpr:
        # leading sign accepted as a convenience
        neg = False
        if self.lx.peek() == "-":
            self.lx.pos += 1
            neg = True
        elif self.lx.peek() == "+":
            self.lx.pos += 1
        e = self.term()
        if neg:
            e = _scale(e, -1.0)
        while True:
            ch = self.lx.peek()
            if ch == "+":
                self.lx.pos += 1
                e = combine("sum", e, self.term())
            elif ch == "-":
                self.lx.pos += 1
                e = combine("sum", e, _scale(self.term(), -1.0))
            else:
                return e

    def term(self) -> SymbolExpr:
        e = self.factor()
        while self.lx.peek() == "*":
            self.lx.pos += 1
            e = combine("product", e, self.factor())
        return e

    def factor(self) -> SymbolExpr:
        e = self.base()
        if self.lx.peek() == "^":
            self.lx.pos += 1
            e = combine("power", e, self.lx.uint())
        return e

    def complex_arg(self) -> complex:
        e = self.expr()
        c = is_constant(e)
        if c is None:
            raise ParseError("expected a complex literal", self.lx.pos)
        return c

    def base(self) -> SymbolExpr:
        ch = self.lx.peek()
        pos = self.lx.pos
        text = self.lx.text
        if ch == "(":
            self.lx.pos += 1
            e = self.expr()
            self.lx.expect(")")
            return e
        if ch == "z":
            self.lx.pos += 1
            return coordinate(self.lx.uint(), self.arity)
        if text.startswith("fw", pos):
            self.lx.pos += 2
            self.lx.expect("(")
            k = self.lx.uint()
            self.lx.expect(",")
            w = self.complex_arg()
            self.lx.expect(")")
            return LogFrac(self.arity, k, w, "f")
        if ch == "h":
            self.lx.pos += 1
            self.lx.expect("(")
            k = self.lx.uint()
            self.lx.expect(",")
            w = self.complex_arg()
            self.lx.expect(")")
            return LogFrac(self.arity, k, w, "h")
        if ch == "i":
            self.lx.pos += 1
            return constant(1j, self.arity)
        if ch.isdigit() or ch == ".":
            v = self.lx.number()
            if self.lx.peek() == "i":
                self.lx.pos += 1
                return constant(v * 1j, self.arity)
            return constant(v, self.arity)
        if ch == "-":
            self.lx.pos += 1
            v = self.lx.number()
            if self.lx.peek() == "i":
                self.lx.pos += 1
                return constant(-v * 1j, self.arity)
            return constant(-v, self.arity)
        raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input",
                         self.lx.pos)


def parse_symbol(text: str, arity: int) -> SymbolExpr:
    """Parse symbol text against the grammar for a given arity."""
    if arity < 1:
        raise UsageError("arity must be >= 1")
    if not text or not text.strip():
        raise ParseError("empty symbol text")
    return _Parser(text, arity).parse()


def format_complex(c: complex) -> str:
    """Grammar-compatible rendering of a complex value."""
    re, im = float(c.real), float(c.imag)
    sign = "+" if im >= 0 else "-"
    return f"({re!r}{sign}{abs(im)!r}i)"
