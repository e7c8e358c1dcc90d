"""Expression language for ordinals: lexer, Pratt parser, evaluator and printers.

Grammar, loosest to tightest::

    expr   := sum
    sum    := prod (('+' | '#+' | '#-') prod)*      left-assoc, '#-' does not chain
    prod   := power (('*' | 'j*' | '#*') power)*    left-assoc
    power  := atom (('^' | 'j^' | '#^') power)?     right-assoc
    atom   := NUMBER | 'w' | 'ω' | '(' expr ')' | FUNC '(' expr ')'

``⊕``, ``⊗`` and ``×`` are accepted for ``#+``, ``#*`` and ``j*``.  Spans are
UTF-8 byte offsets into the source text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .classic import ord_add, ord_mul, ord_pow
from .cnf import OMEGA, Ordinal, OrdinalError, deg, nat, omega_div, succ
from .jacobsthal import jac_mul, jac_pow
from .natural import nat_add, nat_mul, nat_ominus
from .superjac import sj_pow


class ExprError(Exception):
    def __init__(self, message: str, span: tuple, expected: frozenset = frozenset()):
        super().__init__(message)
        self.message = message
        self.span = span
        self.expected = expected

    @property
    def offset(self) -> int:
        return self.span[0]

    def render(self, text: str) -> str:
        """Message plus a caret line under the offending span."""
        raw = text.encode("utf-8")
        start, end = self.span
        col = len(raw[:start].decode("utf-8", errors="replace"))
        width = max(1, len(raw[start:end].decode("utf-8", errors="replace")))
        lines = [f"error at offset {start}: {self.message}"]
        if self.expected:
            lines[0] += f" (expected one of: {', '.join(sorted(self.expected))})"
        lines.append("  " + text)
        lines.append("  " + " " * col + "^" * width)
        return "\n".join(lines)


class ParseError(ExprError):
    pass


class EvalError(ExprError):
    pass


ADD_OPS = ("+", "#+", "#-")
MUL_OPS = ("*", "j*", "#*")
POW_OPS = ("^", "j^", "#^")
FUNCTIONS = ("deg", "wdiv", "succ")

_PRECEDENCE = {op: 10 for op in ADD_OPS} | {op: 20 for op in MUL_OPS} | {op: 30 for op in POW_OPS}
_ALIASES = {"⊕": "#+", "⊗": "#*", "×": "j*"}


@dataclass(frozen=True)
class Token:
    kind: str  # num, omega, name, op, lparen, rparen, eof
    text: str
    span: tuple


@dataclass(frozen=True)
class ExprAst:
    kind: str  # nat, omega, binop, call
    value: object = None  # int for nat, operator for binop, name for call
    children: tuple = ()
    span: tuple = field(default=(0, 0), compare=False)
    grouped: bool = field(default=False, compare=False)  # written inside parentheses


def tokenize(text: str) -> list:
    tokens = []
    i = 0
    pos = 0  # byte offset of text[i]
    n = len(text)
    while i < n:
        ch = text[i]
        width = len(ch.encode("utf-8"))
        if ch.isspace():
            i += 1
            pos += width
            continue
        start = pos
        if ch.isascii() and ch.isdigit():
            j = i
            while j < n and text[j].isascii() and text[j].isdigit():
                j += 1
            tokens.append(Token("num", text[i:j], (start, start + j - i)))
            pos += j - i
            i = j
            continue
        if ch == "ω":
            tokens.append(Token("omega", "w", (start, start + width)))
        elif ch in _ALIASES:
            tokens.append(Token("op", _ALIASES[ch], (start, start + width)))
        elif ch in "jJ#" and i + 1 < n and text[i + 1] in "+-*^":
            op = ch.lower() + text[i + 1]
            if op == "j+" or op == "j-":
                raise ParseError(f"unknown operator {op!r}", (start, start + 2))
            tokens.append(Token("op", op, (start, start + 2)))
            i += 2
            pos += 2
            continue
        elif ch.isascii() and (ch.isalpha() or ch == "_"):
            j = i
            while j < n and text[j].isascii() and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            span = (start, start + j - i)
            if word == "w":
                tokens.append(Token("omega", "w", span))
            elif word in FUNCTIONS:
                tokens.append(Token("name", word, span))
            else:
                raise ParseError(f"unknown identifier {word!r}", span,
                                 frozenset(("w",) + FUNCTIONS))
            pos += j - i
            i = j
            continue
        elif ch in "+*^":
            tokens.append(Token("op", ch, (start, start + 1)))
        elif ch == "(":
            tokens.append(Token("lparen", ch, (start, start + 1)))
        elif ch == ")":
            tokens.append(Token("rparen", ch, (start, start + 1)))
        else:
            raise ParseError(f"unexpected character {ch!r}", (start, start + width))
        i += 1
        pos += width
    tokens.append(Token("eof", "", (pos, pos)))
    return tokens


_ATOM_START = frozenset({"number", "w", "(", "deg", "wdiv", "succ"})
_AFTER_EXPR = frozenset(ADD_OPS + MUL_OPS + POW_OPS)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, label: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {label!r}, found {_describe(tok)}", tok.span,
                             frozenset({label}))
        return self.advance()

    def parse(self) -> ExprAst:
        node = self.expr(0)
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected {_describe(tok)}", tok.span, _AFTER_EXPR)
        return node

    def expr(self, min_bp: int) -> ExprAst:
        left = self.atom()
        while True:
            tok = self.peek()
            if tok.kind != "op":
                return left
            bp = _PRECEDENCE[tok.text]
            if bp < min_bp:
                return left
            if tok.text == "#-" and left.value == "#-" and left.kind == "binop" \
                    and not left.grouped:
                raise ParseError("'#-' does not chain; add parentheses", tok.span)
            self.advance()
            # exponent family is right-associative
            right = self.expr(bp if tok.text in POW_OPS else bp + 1)
            left = ExprAst("binop", tok.text, (left, right), (left.span[0], right.span[1]))

    def atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return ExprAst("nat", int(tok.text), (), tok.span)
        if tok.kind == "omega":
            self.advance()
            return ExprAst("omega", None, (), tok.span)
        if tok.kind == "lparen":
            self.advance()
            inner = self.expr(0)
            close = self.expect("rparen", ")")
            return replace(inner, span=(tok.span[0], close.span[1]), grouped=True)
        if tok.kind == "name":
            self.advance()
            self.expect("lparen", "(")
            arg = self.expr(0)
            close = self.expect("rparen", ")")
            return ExprAst("call", tok.text, (arg,), (tok.span[0], close.span[1]))
        raise ParseError(f"expected an operand, found {_describe(tok)}", tok.span,
                         _ATOM_START)


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


def parse(text: str) -> ExprAst:
    return _Parser(text).parse()


_BINOPS = {
    "+": ord_add,
    "*": ord_mul,
    "^": ord_pow,
    "#+": nat_add,
    "#*": nat_mul,
    "#-": nat_ominus,
    "j*": jac_mul,
    "j^": jac_pow,
    "#^": sj_pow,
}
_CALLS = {"deg": deg, "wdiv": omega_div, "succ": succ}


def evaluate(ast: ExprAst) -> Ordinal:
    if ast.kind == "nat":
        return nat(ast.value)
    if ast.kind == "omega":
        return OMEGA
    args = [evaluate(c) for c in ast.children]
    fn = _BINOPS[ast.value] if ast.kind == "binop" else _CALLS[ast.value]
    try:
        return fn(*args)
    except OrdinalError as exc:
        raise EvalError(str(exc), ast.span) from exc


eval = evaluate  # noqa: A001 - public name of the operation


def evaluate_text(text: str) -> Ordinal:
    return evaluate(parse(text))


def _atomic_text(e: Ordinal) -> str:
    s = print_text(e)
    if e == OMEGA or e.is_finite:
        return s
    return f"({s})"


def print_text(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        base = "w" if e == 1 else f"w^{_atomic_text(e)}"
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)


def print_latex(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        base = r"\omega" if e == 1 else rf"\omega^{{{print_latex(e)}}}"
        parts.append(base if c == 1 else rf"{base} \cdot {c}")
    return " + ".join(parts)


def to_json_obj(a: Ordinal) -> dict:
    return {"terms": [{"exp": to_json_obj(e), "coeff": str(c)} for e, c in a.terms]}


def from_json_obj(obj: dict) -> Ordinal:
    from .cnf import make_ordinal
    return make_ordinal((from_json_obj(t["exp"]), int(t["coeff"])) for t in obj["terms"])


def print_json(a: Ordinal) -> str:
    return json.dumps(to_json_obj(a), separators=(",", ":"))
