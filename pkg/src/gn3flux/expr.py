"""Tiny expression language for coefficient functions.

Grammar: numeric literals, identifiers, ``+ - * / ^`` with standard
precedence (``^`` right-associative, binding tighter than unary minus),
parentheses, and the functions ``exp``, ``ln``, ``sin``, ``cos``,
``sqrt``. Which identifiers are legal is a property of the calling
context (isotropic coefficients may not mention the axial invariants),
so the parser takes the allowed set as an argument.

Evaluation is generic over the scalar type: plain floats, numpy arrays
(batched evaluation over many states at once) and :class:`~gn3flux.autodiff.Jet`
values all go through the same code path, which is what makes the value
slot of a zero-perturbation Jet evaluation bit-identical to a plain
evaluation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .autodiff import DomainError, Jet

#: identifiers available to constitutive coefficient functions
MODEL_IDENTIFIERS = frozenset({"a", "da", "s1", "s2", "s3", "s4", "s5"})
#: subset legal in isotropic models (no axial invariants)
ISOTROPIC_IDENTIFIERS = frozenset({"a", "da", "s1", "s2", "s3"})
FUNCTIONS = ("exp", "ln", "sin", "cos", "sqrt")


class ExprError(ValueError):
    """Base class for expression problems; carries a byte offset."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class ExprSyntaxError(ExprError):
    pass


class UnknownIdentifierError(ExprError):
    pass


class EvalDomainError(DomainError):
    """Expression evaluation left the function's domain."""


# -- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Bin:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    fn: str
    arg: object


# -- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))"
)


def _byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None or m.end() == pos:
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            bad = len(src) - len(stripped)
            raise ExprSyntaxError(
                f"unexpected character {src[bad]!r}", _byte_offset(src, bad)
            )
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


# -- parser ------------------------------------------------------------------

class _Parser:
    def __init__(self, src: str, allowed: frozenset):
        self.src = src
        self.allowed = allowed
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok):
        raise ExprSyntaxError(message, _byte_offset(self.src, tok[2]))

    def parse(self):
        node = self.sum()
        tok = self.peek()
        if tok[0] != "end":
            self.fail(f"unexpected token {tok[1]!r}", tok)
        return node

    def sum(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.advance()[1]
            node = Bin(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.advance()[1]
            node = Bin(op, node, self.unary())
        return node

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.advance()
            # right-associative; the exponent may carry a unary minus
            return Bin("^", base, self.unary())
        return base

    def atom(self):
        tok = self.advance()
        kind, text, pos = tok
        if kind == "num":
            return Num(float(text))
        if kind == "ident":
            if text in FUNCTIONS:
                open_tok = self.peek()
                if open_tok[1] != "(":
                    self.fail(f"function {text!r} needs parentheses", open_tok)
                self.advance()
                arg = self.sum()
                close = self.advance()
                if close[1] != ")":
                    self.fail("expected ')'", close)
                return Call(text, arg)
            if self.peek()[1] == "(":
                self.fail(f"unknown function {text!r}", tok)
            if text not in self.allowed:
                raise UnknownIdentifierError(
                    f"unknown identifier {text!r}; allowed here: "
                    f"{', '.join(sorted(self.allowed))}",
                    _byte_offset(self.src, pos),
                )
            return Var(text)
        if kind == "op" and text == "(":
            node = self.sum()
            close = self.advance()
            if close[1] != ")":
                self.fail("expected ')'", close)
            return node
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected token {text!r}", tok)


# -- evaluation ----------------------------------------------------------------

def _apply_fn(fn: str, x):
    if isinstance(x, Jet):
        try:
            return getattr(x, fn)()
        except DomainError as err:
            raise EvalDomainError(str(err)) from None
    if fn == "exp":
        return np.exp(x)
    if fn == "ln":
        if np.any(np.asarray(x) <= 0.0):
            raise EvalDomainError("ln of a non-positive argument")
        return np.log(x)
    if fn == "sin":
        return np.sin(x)
    if fn == "cos":
        return np.cos(x)
    if fn == "sqrt":
        if np.any(np.asarray(x) < 0.0):
            raise EvalDomainError("sqrt of a negative argument")
        return np.sqrt(x)
    raise ValueError(f"unknown function {fn!r}")


def _eval(node, env):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        try:
            return env[node.name]
        except KeyError:
            raise EvalDomainError(
                f"identifier {node.name!r} missing from the environment"
            ) from None
    if isinstance(node, Neg):
        return -_eval(node.operand, env)
    if isinstance(node, Call):
        return _apply_fn(node.fn, _eval(node.arg, env))
    left = _eval(node.left, env)
    right = _eval(node.right, env)
    op = node.op
    try:
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        if op == "/":
            if not isinstance(right, Jet) and np.any(np.asarray(right) == 0.0):
                raise EvalDomainError("division by zero")
            return left / right
        if op == "^":
            return _pow(left, right)
    except DomainError as err:
        if isinstance(err, EvalDomainError):
            raise
        raise EvalDomainError(str(err)) from None
    raise ValueError(f"unknown operator {op!r}")


def _pow(base, expo):
    if isinstance(base, Jet) or isinstance(expo, Jet):
        return base ** expo
    expo_arr = np.asarray(expo)
    base_arr = np.asarray(base)
    if np.all(expo_arr == np.floor(expo_arr)):
        if np.any((base_arr == 0.0) & (expo_arr < 0.0)):
            raise EvalDomainError("x^n at x = 0 with a negative exponent")
        return base ** expo
    if np.any(base_arr < 0.0):
        raise EvalDomainError("x^y with non-integer exponent needs x >= 0")
    return base ** expo


# -- canonical printing ----------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}


def _print(node, parent_prec: int = 0, right_side: bool = False) -> str:
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        return f"{node.fn}({_print(node.arg)})"
    if isinstance(node, Neg):
        inner = _print(node.operand, _PREC["neg"])
        text = f"-{inner}"
        if parent_prec > _PREC["neg"] or (parent_prec == _PREC["neg"] and right_side):
            return f"({text})"
        return text
    prec = _PREC[node.op]
    if node.op == "^":
        # right-associative: parenthesize a left child of equal precedence
        left = _print(node.left, prec + 1)
        right = _print(node.right, prec)
        text = f"{left}{node.op}{right}"
    else:
        left = _print(node.left, prec)
        right = _print(node.right, prec + 1, right_side=True)
        text = f"{left} {node.op} {right}"
    if prec < parent_prec or (prec == parent_prec and right_side):
        return f"({text})"
    return text


def _collect_names(node, out: set):
    if isinstance(node, Var):
        out.add(node.name)
    elif isinstance(node, Neg):
        _collect_names(node.operand, out)
    elif isinstance(node, Call):
        _collect_names(node.arg, out)
    elif isinstance(node, Bin):
        _collect_names(node.left, out)
        _collect_names(node.right, out)


@dataclass(frozen=True)
class CoeffFn:
    """A parsed coefficient function in canonical printed form."""

    src: str
    tree: object
    names: frozenset

    def eval(self, env: dict):
        """Evaluate over floats, arrays or Jets; checks finiteness."""
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            out = _eval(self.tree, env)
        val = out.val if isinstance(out, Jet) else out
        if not np.all(np.isfinite(val)):
            raise EvalDomainError(f"non-finite value from {self.src!r}")
        if isinstance(out, Jet) and not np.all(np.isfinite(np.asarray(out.dot))):
            raise EvalDomainError(f"non-finite derivative from {self.src!r}")
        return out

    def __str__(self):
        return self.src


def parse_coeff(src: str, allowed: frozenset = MODEL_IDENTIFIERS) -> CoeffFn:
    """Parse an expression into a :class:`CoeffFn`.

    Raises :class:`ExprSyntaxError` (with a byte offset) on malformed
    input and :class:`UnknownIdentifierError` when an identifier is not
    in the allowed set for this context.
    """
    if not isinstance(src, str) or not src.strip():
        raise ExprSyntaxError("empty expression", 0)
    tree = _Parser(src, allowed).parse()
    names: set = set()
    _collect_names(tree, names)
    return CoeffFn(_print(tree), tree, frozenset(names))


def pretty(tree) -> str:
    """Canonical rendering; pretty o parse o pretty is a fixed point."""
    return _print(tree)


__all__ = [
    "MODEL_IDENTIFIERS",
    "ISOTROPIC_IDENTIFIERS",
    "FUNCTIONS",
    "ExprError",
    "ExprSyntaxError",
    "UnknownIdentifierError",
    "EvalDomainError",
    "Num",
    "Var",
    "Neg",
    "Bin",
    "Call",
    "CoeffFn",
    "parse_coeff",
    "pretty",
]
