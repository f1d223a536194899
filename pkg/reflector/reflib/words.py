"""Words a1 x1 a2 ... xn a(n+1) over the letters x, y < z with natural coefficients.

Multiplication concatenates and adds the two coefficients that meet. The
carrier is infinite, so joins are searched for among words within a bound.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from . import config
from .errors import ValidationError
from .reports import Report

log = logging.getLogger(__name__)

LETTERS = 'xyz'
_PAIR_RE = re.compile(r"([xyz])(\d+)")


def letter_leq(u: str, v: str) -> bool:
    return u == v or v == 'z'


@dataclass(frozen=True)
class Word:
    coeffs: tuple[int, ...]
    letters: str = ''

    def __post_init__(self):
        if len(self.coeffs) != len(self.letters) + 1:
            raise ValidationError(f"word needs {len(self.letters) + 1} coefficients", self.coeffs)
        if any(c < 0 for c in self.coeffs) or any(x not in LETTERS for x in self.letters):
            raise ValidationError('malformed word', (self.coeffs, self.letters))

    @classmethod
    def parse(cls, text: str) -> 'Word':
        m = config.WORD_RE.match(text.strip())
        if not m:
            raise ValidationError(f"not a word: {text!r}", text)
        pairs = _PAIR_RE.findall(m.group(2))
        return cls((int(m.group(1)),) + tuple(int(c) for _, c in pairs), ''.join(x for x, _ in pairs))

    def __str__(self) -> str:
        out = [str(self.coeffs[0])]
        for x, c in zip(self.letters, self.coeffs[1:]):
            out.append(f"{x}{c}")
        return ''.join(out)

    def __len__(self) -> int:
        return len(self.letters)


def word_mult(a: Word, b: Word) -> Word:
    fused = a.coeffs[-1] + b.coeffs[0]
    return Word(a.coeffs[:-1] + (fused,) + b.coeffs[1:], a.letters + b.letters)


def word_leq(a: Word, b: Word) -> bool:
    n = len(a)
    if n != len(b):
        return False
    if n == 0:
        return a.coeffs == b.coeffs
    if not all(letter_leq(u, v) for u, v in zip(a.letters, b.letters)):
        return False
    carry = 0
    for j in range(n):
        carry = b.coeffs[j] - a.coeffs[j] - carry
        if carry < 0 and a.letters[j] == b.letters[j]:
            return False
    return b.coeffs[n] - a.coeffs[n] - carry == 0


def _upper_bounds_of(w: Word, letters: str, top: int) -> Iterator[Word]:
    """Every word above `w` with the given letters and coefficients <= top."""
    n = len(w)

    def extend(j: int, prev: int, coeffs: list[int]):
        if j == n:
            last = w.coeffs[n] + prev
            if 0 <= last <= top:
                yield Word(tuple(coeffs) + (last,), letters)
            return
        strict = w.letters[j] == letters[j]
        for value in range(top + 1):
            c = value - w.coeffs[j] - prev
            if strict and c < 0:
                continue
            coeffs.append(value)
            yield from extend(j + 1, c, coeffs)
            coeffs.pop()

    yield from extend(0, 0, [])


def bounded_join(words: Sequence[Word], max_letters: Optional[int] = None,
                 max_coeff: Optional[int] = None) -> Optional[Word]:
    """Least upper bound among candidates with coefficients up to the bound, or None.

    A None answer only says no least bound was found inside the bound.
    """
    if not words:
        return None
    max_letters = config.WORD_LETTERS + 1 if max_letters is None else max_letters
    max_coeff = config.WORD_COEFF if max_coeff is None else max_coeff
    n = len(words[0])
    if any(len(w) != n for w in words) or n > max_letters:
        return None
    top = max([max_coeff] + [c for w in words for c in w.coeffs])
    if n == 0:
        return words[0] if all(w == words[0] for w in words) else None
    options = [[v for v in LETTERS if all(letter_leq(w.letters[i], v) for w in words)] for i in range(n)]
    bounds = []
    for letters in itertools.product(*options):
        for cand in _upper_bounds_of(words[0], ''.join(letters), top):
            if all(word_leq(w, cand) for w in words[1:]):
                bounds.append(cand)
    if not bounds:
        return None
    least = bounds[0]
    for u in bounds[1:]:
        if word_leq(u, least):
            least = u
    return least if all(word_leq(least, v) for v in bounds) else None


def sample_words(max_letters: int, max_coeff: int) -> Iterator[Word]:
    for n in range(max_letters + 1):
        for letters in itertools.product(LETTERS, repeat=n):
            for coeffs in itertools.product(range(max_coeff + 1), repeat=n + 1):
                yield Word(coeffs, ''.join(letters))


def _distributes(alphas: Iterable[Word], M: list[Word], top: Word, left: bool,
                 bound: int) -> Optional[str]:
    for alpha in alphas:
        if left:
            image, expected = [word_mult(alpha, w) for w in M], word_mult(alpha, top)
        else:
            image, expected = [word_mult(w, alpha) for w in M], word_mult(top, alpha)
        got = bounded_join(image, max_letters=len(expected), max_coeff=bound)
        if got != expected:
            return str(alpha)
    return None


def distributivity_counterexample_checks(max_letters: Optional[int] = None,
                                         max_coeff: Optional[int] = None) -> Report:
    """One-sided translations preserve the join of {0x0, 0y0}; the two-sided 1 . _ . 1 does not."""
    max_letters = config.WORD_LETTERS if max_letters is None else max_letters
    max_coeff = config.WORD_COEFF if max_coeff is None else max_coeff
    M = [Word.parse('0x0'), Word.parse('0y0')]
    expected = Word.parse('0z0')
    rep = Report('word-distributivity', message=f"letters<={max_letters}, coefficients<={max_coeff}")

    top = bounded_join(M, max_coeff=max_coeff)
    if top == expected:
        rep.add(Report.passed('join', f"join{{0x0,0y0}} = {top}"))
    else:
        rep.add(Report.failed('join', str(top)))
        return rep

    alphas = list(sample_words(max_letters, max_coeff))
    bound = max_coeff
    for name, left in (('left-distributive', True), ('right-distributive', False)):
        bad = _distributes(alphas, M, top, left, bound)
        rep.add(Report.failed(name, bad) if bad else Report.passed(name, f"{len(alphas)} words"))
    log.debug("checked %d multipliers on both sides", len(alphas))

    one = Word((1,))
    lhs = word_mult(word_mult(one, top), one)
    rhs = bounded_join([word_mult(word_mult(one, w), one) for w in M], max_coeff=max_coeff)
    if rhs is not None and lhs != rhs and word_leq(rhs, lhs):
        rep.add(Report.passed('two-sided-failure', f"1.{top}.1 = {lhs} > {rhs} = join(1.M.1)"))
    else:
        rep.add(Report.failed('two-sided-failure', {'1.join.1': str(lhs), 'join(1.M.1)': str(rhs)}))
    return rep
