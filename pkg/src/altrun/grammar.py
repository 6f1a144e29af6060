"""Context-free (Chen) grammars and their formal derivative operator.

A grammar maps letters to polynomial images over one alphabet; letters with
no rule are constants (zero image).  The induced derivative acts on
monomials by the Leibniz rule and extends linearly, e.g. for
``a->q*a*b; b->b*c; c->b^2`` the first two images of ``a`` are

>>> g = Grammar.parse("a->q*a*b; b->b*c; c->b^2")
>>> str(g.derive(g.letter("a")))
'a*q*b'
>>> str(g.derive(g.derive(g.letter("a"))))
'a*q*b*c + a*q^2*b^2'
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import NotOfExpectedShape, UnknownSymbol
from .multipoly import MultiPoly
from .polys import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^();]))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser for +, -, *, ^, parentheses and letters."""

    def __init__(self, tokens: Sequence[str], alphabet: tuple[str, ...]):
        self.tokens = list(tokens)
        self.pos = 0
        self.alphabet = alphabet

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        value = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at {self.tokens[self.pos:]}")
        return value

    def expr(self) -> MultiPoly:
        negate = False
        if self.peek() in ("+", "-"):
            negate = self.take() == "-"
        value = self.term()
        if negate:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MultiPoly:
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> MultiPoly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp_tok = self.take()
            if not exp_tok.isdigit():
                raise ValueError(f"exponent must be an integer, got {exp_tok!r}")
            base = base ** int(exp_tok)
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if tok.isdigit():
            return MultiPoly.constant(self.alphabet, int(tok))
        if tok.isidentifier():
            return MultiPoly.variable(self.alphabet, tok)
        raise ValueError(f"unexpected token {tok!r}")


def parse_polynomial(text: str, alphabet: Iterable[str]) -> MultiPoly:
    """Parse an integer-coefficient expression like "b^2 - 2*a"."""
    return _Parser(_tokenize(text), tuple(alphabet)).parse()


@dataclass(frozen=True)
class Grammar:
    """Substitution rules letter -> polynomial over a fixed alphabet."""

    alphabet: tuple[str, ...]
    rules: dict[str, MultiPoly] = field(default_factory=dict)

    def __post_init__(self):
        for letter, image in self.rules.items():
            if letter not in self.alphabet:
                raise UnknownSymbol(letter)
            if image.alphabet != self.alphabet:
                raise ValueError("rule image over a different alphabet")

    @classmethod
    def parse(cls, text: str, constants: Iterable[str] = ()) -> Grammar:
        """Build from a one-line rule list "a->q*a*b; b->b*c; c->b^2".

        Letters appearing only on right-hand sides (or listed in
        `constants`) get the zero image.
        """
        rule_texts: list[tuple[str, str]] = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "->" not in chunk:
                raise ValueError(f"rule {chunk!r} lacks '->'")
            lhs, rhs = chunk.split("->", 1)
            rule_texts.append((lhs.strip(), rhs.strip()))
        letters: list[str] = []

        def note(name: str) -> None:
            if name not in letters:
                letters.append(name)

        for lhs, rhs in rule_texts:
            if not lhs.isidentifier():
                raise ValueError(f"bad letter {lhs!r}")
            note(lhs)
            for tok in _tokenize(rhs):
                if tok.isidentifier():
                    note(tok)
        for name in constants:
            note(name)
        alphabet = tuple(letters)
        rules = {
            lhs: parse_polynomial(rhs, alphabet) for lhs, rhs in rule_texts
        }
        return cls(alphabet, rules)

    @property
    def constants(self) -> tuple[str, ...]:
        return tuple(
            a for a in self.alphabet
            if a not in self.rules or self.rules[a].is_zero()
        )

    def letter(self, name: str) -> MultiPoly:
        return MultiPoly.variable(self.alphabet, name)

    def rule(self, name: str) -> MultiPoly:
        if name not in self.alphabet:
            raise UnknownSymbol(name)
        return self.rules.get(name, MultiPoly.zero(self.alphabet))

    # -- the formal derivative ---------------------------------------------

    def derive(self, p: MultiPoly) -> MultiPoly:
        """Leibniz-linear extension of the substitution rules."""
        if p.alphabet != self.alphabet:
            extra = set(p.alphabet) - set(self.alphabet)
            if extra:
                raise UnknownSymbol(f"letters {sorted(extra)} not in grammar")
            p = p.extended(self.alphabet)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in p.terms.items():
            for slot, e in enumerate(exps):
                if e == 0:
                    continue
                image = self.rules.get(self.alphabet[slot])
                if image is None or image.is_zero():
                    continue
                lowered = exps[:slot] + (e - 1,) + exps[slot + 1 :]
                for img_exps, img_coeff in image.terms.items():
                    key = tuple(a + b for a, b in zip(lowered, img_exps))
                    out[key] = out.get(key, Fraction(0)) + coeff * e * img_coeff
        return MultiPoly(self.alphabet, out)

    def iterate(self, seed: MultiPoly, n: int) -> MultiPoly:
        """Apply the derivative n times; n = 0 returns the seed."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        value = seed if seed.alphabet == self.alphabet else seed.extended(self.alphabet)
        for _ in range(n):
            value = self.derive(value)
        return value


def extract_row(
    image: MultiPoly,
    seed: str | MultiPoly,
    count_letter: str,
    co_letter: str,
    n: int,
    co_exponent: Callable[[int], int] | None = None,
) -> list[MultiPoly]:
    """Read one triangle row off a derivative image.

    The image must equal seed * sum_k entry_k * count^k * co^{m(k)} where
    m(k) defaults to n-k and entry_k involves only the remaining (constant)
    letters.  Entries are returned for k = 0..n as polynomials over the
    residual alphabet.
    """
    alphabet = image.alphabet
    if isinstance(seed, str):
        seed = MultiPoly.variable(alphabet, seed)
    if len(seed.terms) != 1:
        raise NotOfExpectedShape("seed must be a single monomial")
    ((seed_exps, seed_coeff),) = seed.terms.items()
    if co_exponent is None:
        co_exponent = lambda k: n - k  # noqa: E731
    count_slot = image._slot(count_letter)
    co_slot = image._slot(co_letter)
    seed_letters = {
        alphabet[i] for i, e in enumerate(seed_exps) if e > 0
    }
    residual_alphabet = tuple(
        a
        for a in alphabet
        if a not in seed_letters and a not in (count_letter, co_letter)
    )
    residual_slots = [alphabet.index(a) for a in residual_alphabet]
    entries = [MultiPoly.zero(residual_alphabet) for _ in range(n + 1)]
    for exps, coeff in image.terms.items():
        reduced = []
        for i, (e, s) in enumerate(zip(exps, seed_exps)):
            if e < s:
                raise NotOfExpectedShape(
                    f"term {exps} not divisible by the seed monomial"
                )
            reduced.append(e - s)
        k = reduced[count_slot]
        m = reduced[co_slot]
        if k > n or m != co_exponent(k):
            raise NotOfExpectedShape(
                f"term with {count_letter}^{k} {co_letter}^{m} violates the "
                f"expected exponent pattern at n={n}"
            )
        for i, e in enumerate(reduced):
            if e and i not in (count_slot, co_slot) and alphabet[i] in seed_letters:
                raise NotOfExpectedShape(
                    f"residual power of seed letter {alphabet[i]!r}"
                )
        key = tuple(reduced[i] for i in residual_slots)
        entries[k] = entries[k] + MultiPoly(
            residual_alphabet, {key: coeff / seed_coeff}
        )
    return entries


def entries_as_fractions(entries: Sequence[MultiPoly]) -> list[Fraction]:
    """Collapse constant entries to plain rationals."""
    out = []
    for e in entries:
        if e.letters_used():
            raise NotOfExpectedShape(f"entry {e} is not constant")
        out.append(e.constant_term())
    return out


def entries_as_polys(entries: Sequence[MultiPoly], var: str) -> list[Poly]:
    """Collapse single-letter entries to dense polynomials in that letter."""
    return [e.as_poly(var) for e in entries]


# built-in grammars, keyed by what their images count
GRAMMAR_TEXTS = {
    "updown": "a->a*b; b->b*c; c->b^2",
    "doubled": "a->2*a*b; b->b*c; c->b^2",
    "qrun": "a->q*a*b; b->b*c; c->b^2",
    "plateau": "x->x*y*z; y->y*z^2; z->y^2*z",
    "gammavec": "x->x*a; a->a*(b^2-2*a); b->a*b",
    "halfgamma": "x->x*u; u->u*v; v->4*u^2",
}


def named_grammar(name: str) -> Grammar:
    """One of updown, doubled, qrun, plateau, gammavec, halfgamma."""
    try:
        text = GRAMMAR_TEXTS[name]
    except KeyError:
        raise UnknownSymbol(f"no grammar named {name!r}") from None
    return Grammar.parse(text)
