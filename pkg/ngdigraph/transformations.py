"""Pure operations on transformations of a finite set.

Composition follows ``compose(f, g)(x) == f(g(x))``: ``g`` is applied first.
Every composition table the toolkit prints uses this convention.
"""

from __future__ import annotations

import itertools
import re
import string
from typing import Iterable, Iterator, List, Sequence

from .errors import DomainError, ParseError, ResourceLimitError
from .models import KernelPartition, PointSet, Transformation

DEFAULT_ARITY_CAP = 8
LETTERS = string.ascii_lowercase

STYLE_LETTERS = "letters"
STYLE_NUMERIC = "numeric"

_TUPLE_PATTERN = re.compile(r"\(([^()]*)\)")
_SEPARATORS = frozenset("{},; \t\r\n")


def compose(f: Transformation, g: Transformation) -> Transformation:
    if f.arity != g.arity:
        raise DomainError(f"Cannot compose maps on {f.arity} and {g.arity} points")
    fi = f.images
    return Transformation(tuple(fi[y] for y in g.images))


def identity(n: int) -> Transformation:
    if n < 1:
        raise DomainError("identity needs a positive arity")
    return Transformation(tuple(range(n)))


def is_idempotent(f: Transformation) -> bool:
    im = f.images
    return all(im[y] == y for y in im)


def fixed_points(f: Transformation) -> PointSet:
    return PointSet(f.arity, frozenset(x for x, y in enumerate(f.images) if x == y))


def moved_points(f: Transformation) -> PointSet:
    return fixed_points(f).complement()


def image(f: Transformation) -> PointSet:
    return PointSet(f.arity, frozenset(f.images))


def kernel(f: Transformation) -> KernelPartition:
    classes: dict = {}
    for x, y in enumerate(f.images):
        classes.setdefault(y, set()).add(x)
    return KernelPartition(f.arity, frozenset(frozenset(block) for block in classes.values()))


def rank(f: Transformation) -> int:
    return len(set(f.images))


def is_permutation(f: Transformation) -> bool:
    return rank(f) == f.arity


def check_arity(n: int, cap: int = DEFAULT_ARITY_CAP) -> None:
    if n < 1:
        raise DomainError(f"Arity must be positive, got {n}")
    if n > cap:
        raise ResourceLimitError(f"Arity {n} exceeds the configured cap of {cap}")


def enumerate_all(n: int, cap: int = DEFAULT_ARITY_CAP) -> Iterator[Transformation]:
    """Yield all n**n maps in lexicographic image-table order."""
    check_arity(n, cap)
    for images in itertools.product(range(n), repeat=n):
        yield Transformation(images)


def format_point(point: int, style: str = STYLE_NUMERIC) -> str:
    if style == STYLE_LETTERS:
        if point >= len(LETTERS):
            raise DomainError("Letter style supports at most 26 points")
        return LETTERS[point]
    return str(point + 1)


def resolve_style(style: str, arity: int) -> str:
    """Map ``auto`` to letters for small sets and 1-based numbers otherwise."""
    if style == "auto":
        return STYLE_LETTERS if arity <= len(LETTERS) else STYLE_NUMERIC
    return style


def format_transformation(f: Transformation, style: str = STYLE_NUMERIC) -> str:
    return "(" + ",".join(format_point(y, style) for y in f.images) + ")"


def format_points(points: Iterable[int], style: str = STYLE_NUMERIC) -> str:
    return "{" + ",".join(format_point(p, style) for p in sorted(points)) + "}"


def format_set(elements: Iterable[Transformation], style: str = STYLE_NUMERIC) -> str:
    return "{" + ",".join(format_transformation(f, style) for f in sorted(elements)) + "}"


def parse_transformation(text: str) -> Transformation:
    """Parse ``"(a,a,c)"`` or ``"(1,1,4,4)"`` into a 0-based transformation."""
    stripped = text.strip()
    if not stripped.startswith("("):
        raise ParseError("Expected '(' to open a tuple", 0)
    if not stripped.endswith(")"):
        raise ParseError("Expected ')' to close the tuple", len(stripped) - 1)
    body = stripped[1:-1]
    tokens: List[tuple] = []
    offset = 1
    for raw in body.split(","):
        token = raw.strip()
        position = offset + (len(raw) - len(raw.lstrip()))
        if not token:
            raise ParseError("Empty tuple entry", position)
        tokens.append((token, position))
        offset += len(raw) + 1

    for token, position in tokens:
        if not _is_number(token) and not (len(token) == 1 and token in LETTERS):
            raise ParseError(f"Unrecognised symbol {token!r}", position)
    first_style = _style_of(tokens[0][0])
    for token, position in tokens:
        if _style_of(token) != first_style:
            raise ParseError("Mixed letter and numeric symbols", position)

    arity = len(tokens)
    images = []
    for token, position in tokens:
        value = int(token) - 1 if _is_number(token) else LETTERS.index(token)
        if not 0 <= value < arity:
            raise ParseError(f"Symbol {token!r} is outside a {arity}-point set", position)
        images.append(value)
    return Transformation(tuple(images))


def _is_number(token: str) -> bool:
    return token.isascii() and token.isdigit()


def _style_of(token: str) -> str:
    return STYLE_NUMERIC if _is_number(token) else STYLE_LETTERS


def parse_transformation_set(text: str) -> List[Transformation]:
    """Parse the tuples in ``text``; only braces, commas, semicolons and
    whitespace may appear between them."""
    matches = list(_TUPLE_PATTERN.finditer(text))
    starts = [0] + [match.end() for match in matches]
    ends = [match.start() for match in matches] + [len(text)]
    for start, end in zip(starts, ends):
        for position in range(start, end):
            if text[position] not in _SEPARATORS:
                raise ParseError(f"Unexpected {text[position]!r} between tuples", position)
    if not matches:
        raise ParseError("No transformation tuples found", 0)
    elements = []
    for match in matches:
        try:
            elements.append(parse_transformation(match.group(0)))
        except ParseError as exc:
            position = match.start() + (exc.position or 0)
            raise ParseError(exc.reason, position) from exc
    arities = {f.arity for f in elements}
    if len(arities) > 1:
        raise ParseError(f"Tuples have mixed lengths {sorted(arities)}", matches[0].start())
    return elements


def uniform_arity(elements: Sequence[Transformation]) -> int:
    if not elements:
        raise DomainError("Expected at least one transformation")
    arities = {f.arity for f in elements}
    if len(arities) != 1:
        raise DomainError(f"Transformations have mixed arities {sorted(arities)}")
    return arities.pop()
