"""
Text form of biquaternions

Grammar (whitespace-insensitive):

    expr    := [sign] term (sign term)*
    term    := coef ['*'] [units] | units
    coef    := NUMBER | '(' complex ')'
    complex := [sign] cterm (sign cterm)*
    cterm   := NUMBER ['*'] ['I'] | 'I'
    units   := unit (['*'] unit)*, with at most one 'I' and at most one of 'i' 'j' 'k'
    unit    := 'I' | 'i' | 'j' | 'k'

NUMBER is a rational literal `p/q` | `p`, or a decimal literal (`1.5`, `2e-3`).
A term without a quaternion unit is the scalar W term.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from bqalg.algebra.backends import Backend, ComplexScalar, Scalar, coerce_scalar
from bqalg.algebra.biquaternion import Biquaternion
from bqalg.errors import ParseError

_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<rational>\d+/\d+)
  | (?P<decimal>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
  | (?P<integer>\d+)
  | (?P<sign>[+\-−])
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<star>\*)
  | (?P<unit>[Iijk])
    """,
    re.VERBOSE,
)

_BASIS = {"": 0, "i": 1, "j": 2, "k": 3}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise ParseError("unexpected character", position, "number, sign, '(', ')', I, i, j or k", text)
        kind = match.lastgroup
        if kind != "space":
            token_text = match.group()
            if kind == "sign":
                token_text = "-" if token_text == "−" else token_text
            tokens.append(_Token(kind, token_text, position))
        position = match.end()
    return tokens


def detect_backend(text: str) -> Backend:
    """approx when any decimal literal appears, exact otherwise"""
    for token in _tokenize(text):
        if token.kind == "decimal":
            return Backend.APPROX
    return Backend.EXACT


class _Parser:
    """Recursive-descent parser accumulating complex coefficients per basis element"""

    def __init__(self, text: str, backend: Backend):
        self.text = text
        self.backend = backend
        self.tokens = _tokenize(text)
        self.index = 0
        zero = coerce_scalar(0, backend)
        self.components: List[List[Scalar]] = [[zero, zero] for _ in range(4)]

    # Token helpers

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _position(self) -> int:
        token = self._peek()
        return token.position if token else len(self.text)

    def _advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str, expected: str) -> ParseError:
        return ParseError(message, self._position(), expected, self.text)

    def _number(self, token: _Token) -> Scalar:
        if token.kind == "rational":
            numerator, denominator = token.text.split("/")
            if int(denominator) == 0:
                raise ParseError("zero denominator", token.position, "nonzero denominator", self.text)
            if self.backend is Backend.EXACT:
                return Fraction(int(numerator), int(denominator))
            return int(numerator) / int(denominator)
        return coerce_scalar(token.text, self.backend)

    # Grammar

    def parse(self) -> Biquaternion:
        if not self.tokens:
            raise self._error("empty expression", "a term")
        sign = self._optional_sign()
        self._term(sign)
        while self._peek() is not None:
            token = self._peek()
            if token.kind != "sign":
                raise self._error("unexpected token", "'+' or '-'")
            sign = self._optional_sign()
            self._term(sign)
        return Biquaternion(*(ComplexScalar(re, im) for re, im in self.components))

    def _optional_sign(self) -> int:
        token = self._peek()
        if token is not None and token.kind == "sign":
            self._advance()
            return -1 if token.text == "-" else 1
        return 1

    def _term(self, sign: int) -> None:
        token = self._peek()
        coefficient: Optional[Tuple[Scalar, Scalar]] = None
        if token is None:
            raise self._error("missing term", "number, '(' or unit")
        if token.kind in ("rational", "decimal", "integer"):
            coefficient = (self._number(self._advance()), coerce_scalar(0, self.backend))
        elif token.kind == "lparen":
            self._advance()
            coefficient = self._complex()
            closing = self._peek()
            if closing is None or closing.kind != "rparen":
                raise self._error("unbalanced parenthesis", "')'")
            self._advance()
        star = self._peek()
        if coefficient is not None and star is not None and star.kind == "star":
            self._advance()
            if self._peek() is None or self._peek().kind != "unit":
                raise self._error("dangling '*'", "I, i, j or k")
        has_imaginary, basis = self._units()
        if coefficient is None and not has_imaginary and basis == "":
            raise self._error("missing term", "number, '(' or unit")
        one = coerce_scalar(1, self.backend)
        re, im = coefficient if coefficient is not None else (one, coerce_scalar(0, self.backend))
        if has_imaginary:
            re, im = -im, re
        slot = self.components[_BASIS[basis]]
        slot[0] = slot[0] + sign * re
        slot[1] = slot[1] + sign * im

    def _units(self) -> Tuple[bool, str]:
        has_imaginary = False
        basis = ""
        while self._peek() is not None and self._peek().kind == "unit":
            token = self._advance()
            if token.text == "I":
                if has_imaginary:
                    raise ParseError("repeated I", token.position, "at most one I per term", self.text)
                has_imaginary = True
            else:
                if basis:
                    raise ParseError(
                        "repeated quaternion unit", token.position, "at most one of i, j, k per term", self.text
                    )
                basis = token.text
            star = self._peek()
            if star is not None and star.kind == "star":
                self._advance()
                if self._peek() is None or self._peek().kind != "unit":
                    raise self._error("dangling '*'", "I, i, j or k")
        return has_imaginary, basis

    def _complex(self) -> Tuple[Scalar, Scalar]:
        zero = coerce_scalar(0, self.backend)
        re, im = zero, zero
        sign = self._optional_sign()
        while True:
            token = self._peek()
            if token is None:
                raise self._error("unterminated complex coefficient", "number or I")
            if token.kind in ("rational", "decimal", "integer"):
                value = self._number(self._advance())
                nxt = self._peek()
                if nxt is not None and nxt.kind == "star":
                    self._advance()
                    nxt = self._peek()
                    if nxt is None or nxt.text != "I":
                        raise self._error("dangling '*'", "I")
                if nxt is not None and nxt.kind == "unit":
                    if nxt.text != "I":
                        raise self._error("quaternion unit inside a complex coefficient", "I, '+', '-' or ')'")
                    self._advance()
                    im = im + sign * value
                else:
                    re = re + sign * value
            elif token.kind == "unit" and token.text == "I":
                self._advance()
                im = im + sign * coerce_scalar(1, self.backend)
            else:
                raise self._error("unexpected token in complex coefficient", "number or I")
            token = self._peek()
            if token is not None and token.kind == "sign":
                sign = self._optional_sign()
                continue
            return re, im


def parse_biquaternion(text: str, backend: Optional[Backend] = None) -> Biquaternion:
    """Parse the text form; the backend is detected from the literals unless given"""
    if backend is None:
        backend = detect_backend(text)
    return _Parser(text, backend).parse()


def format_biquaternion(q: Biquaternion) -> str:
    """Canonical form (a+bI) + (c+dI)i + (e+fI)j + (g+hI)k"""
    W, X, Y, Z = (str(c) for c in q.components())
    return f"{W} + {X}i + {Y}j + {Z}k"


def format_compact(q: Biquaternion) -> str:
    """Human-oriented form that drops zero components"""
    terms: Dict[str, ComplexScalar] = dict(zip(("", "i", "j", "k"), q.components()))
    parts = [f"{value}{unit}" for unit, value in terms.items() if not value.is_exact_zero()]
    return " + ".join(parts) if parts else "0"
